#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gcn/errors.hpp>
#include <gcn/rational.hpp>

namespace gcn {
namespace linalg {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

/// Clears denominators row by row (each row times the lcm of its
/// denominators). Preserves determinant nonzero-ness, solution sets of
/// augmented systems, and nullspaces.
inline IntMatrix scale_rows_to_integers(const RatMatrix& m) {
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int l = 1;
        for (const Rat& v : m[i]) l = boost::multiprecision::lcm(l, denominator(v));
        out[i].reserve(m[i].size());
        for (const Rat& v : m[i])
            out[i].push_back(numerator(v) * exact_div(l, denominator(v)));
    }
    return out;
}

/// Fraction-free (Bareiss) forward elimination of a square system with
/// attached right-hand-side columns. Pivot search is the first nonzero
/// entry in column order. Back-substitution per column is lazy.
class BareissSolver {
public:
    /// a: n x n coefficient rows; rhs: n x m right-hand-side rows.
    BareissSolver(const RatMatrix& a, const RatMatrix& rhs) {
        n_ = a.size();
        require(rhs.size() == n_, Errc::precondition, "BareissSolver: rhs row count mismatch");
        m_ = n_ == 0 ? 0 : rhs[0].size();
        RatMatrix aug(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            require(a[i].size() == n_ && rhs[i].size() == m_, Errc::precondition,
                    "BareissSolver: ragged input");
            aug[i] = a[i];
            aug[i].insert(aug[i].end(), rhs[i].begin(), rhs[i].end());
        }
        u_ = scale_rows_to_integers(aug);
        eliminate();
    }

    bool singular() const noexcept { return singular_; }
    std::size_t size() const noexcept { return n_; }

    /// Solution of A x = rhs[:, j]. The system must be nonsingular.
    std::vector<Rat> solve_column(std::size_t j) const {
        require(!singular_, Errc::singular_matrix, "BareissSolver: singular system");
        require(j < m_, Errc::index_out_of_range, "BareissSolver: no such column");
        std::vector<Rat> x(n_);
        for (std::size_t i = n_; i-- > 0;) {
            Rat v(u_[i][n_ + j]);
            for (std::size_t k = i + 1; k < n_; ++k)
                if (u_[i][k] != 0 && x[k] != 0) v -= Rat(u_[i][k]) * x[k];
            x[i] = v / Rat(u_[i][i]);
        }
        return x;
    }

private:
    void eliminate() {
        Int prev = 1;
        const std::size_t cols = n_ + m_;
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t pivot = k;
            while (pivot < n_ && u_[pivot][k] == 0) ++pivot;
            if (pivot == n_) {
                singular_ = true;
                return;
            }
            if (pivot != k) std::swap(u_[pivot], u_[k]);
            for (std::size_t i = k + 1; i < n_; ++i) {
                for (std::size_t j = k + 1; j < cols; ++j)
                    u_[i][j] = exact_div(u_[k][k] * u_[i][j] - u_[i][k] * u_[k][j], prev);
                u_[i][k] = 0;
            }
            prev = u_[k][k];
        }
    }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    IntMatrix u_;
    bool singular_ = false;
};

/// Exact test: square rational matrix has nonzero determinant.
inline bool nonzero_determinant(const RatMatrix& a) {
    BareissSolver s(a, RatMatrix(a.size()));
    return !s.singular();
}

/// Basis of the right nullspace of an r x c rational matrix, via
/// fraction-free echelon reduction with first-nonzero column pivoting.
/// Basis vectors are in free-column order, each with a 1 in its free slot.
inline std::vector<std::vector<Rat>> nullspace(const RatMatrix& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    IntMatrix m = scale_rows_to_integers(a);

    std::vector<std::size_t> pivot_col;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) std::swap(m[pivot], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = exact_div(m[row][col] * m[i][j] - m[i][col] * m[row][j], prev);
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivot_col.push_back(col);
        ++row;
    }
    const std::size_t rank = row;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[free] = 1;
        for (std::size_t k = rank; k-- > 0;) {
            const std::size_t pc = pivot_col[k];
            Rat v(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (m[k][j] != 0 && x[j] != 0) v += Rat(m[k][j]) * x[j];
            x[pc] = -v / Rat(m[k][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace linalg
} // namespace gcn
