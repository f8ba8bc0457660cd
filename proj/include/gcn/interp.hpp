#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gcn/errors.hpp>
#include <gcn/geometry.hpp>
#include <gcn/linalg.hpp>
#include <gcn/poly.hpp>

namespace gcn {

/// dim of the space of bivariate polynomials of total degree <= n.
inline int dimension(int n) {
    require(n >= 0, Errc::precondition, "dimension: degree must be nonnegative");
    return monomial_count(n);
}

namespace detail {

/// Row of the evaluation (Vandermonde) matrix: all graded-lex monomials of
/// degree <= n at one node.
inline std::vector<Rat> monomial_row(const Point& p, int n) {
    std::vector<Rat> xp(static_cast<std::size_t>(n + 1)), yp(xp.size());
    xp[0] = 1;
    yp[0] = 1;
    for (int k = 1; k <= n; ++k) {
        xp[static_cast<std::size_t>(k)] = xp[static_cast<std::size_t>(k - 1)] * p.x;
        yp[static_cast<std::size_t>(k)] = yp[static_cast<std::size_t>(k - 1)] * p.y;
    }
    std::vector<Rat> row;
    row.reserve(static_cast<std::size_t>(monomial_count(n)));
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j)
            row.push_back(xp[static_cast<std::size_t>(d - j)] * yp[static_cast<std::size_t>(j)]);
    return row;
}

inline linalg::RatMatrix vandermonde(const NodeSet& nodes) {
    linalg::RatMatrix m;
    m.reserve(nodes.size());
    for (const Point& p : nodes.nodes()) m.push_back(monomial_row(p, nodes.degree()));
    return m;
}

inline void check_cardinality(const NodeSet& nodes) {
    require(nodes.size() == nodes.expected_size(), Errc::wrong_cardinality,
            "expected " + std::to_string(nodes.expected_size()) + " nodes for degree " +
                std::to_string(nodes.degree()) + ", got " + std::to_string(nodes.size()));
}

} // namespace detail

/// Exact poisedness test: the N x N evaluation matrix at the nodes is
/// nonsingular (fraction-free elimination, no tolerances).
inline bool is_poised(const NodeSet& nodes) {
    detail::check_cardinality(nodes);
    return linalg::nonzero_determinant(detail::vandermonde(nodes));
}

struct InterpolationProblem {
    NodeSet nodes;
    std::vector<Rat> data;

    InterpolationProblem(NodeSet n, std::vector<Rat> d) : nodes(std::move(n)), data(std::move(d)) {
        detail::check_cardinality(nodes);
        require(data.size() == nodes.size(), Errc::precondition,
                "InterpolationProblem: data size must match node count");
    }
};

/// Shared elimination state for interpolation problems on one node set:
/// one fraction-free forward pass over [V | I], then per-column
/// back-substitution on demand. Fundamental polynomial k is the solution
/// for the k-th unit data vector.
class FundamentalSolver {
public:
    explicit FundamentalSolver(const NodeSet& nodes) : nodes_(&nodes) {
        detail::check_cardinality(nodes);
        const std::size_t n = nodes.size();
        linalg::RatMatrix rhs(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) rhs[i][i] = 1;
        solver_ = std::make_unique<linalg::BareissSolver>(detail::vandermonde(nodes), rhs);
        cache_.resize(n);
    }

    bool poised() const { return !solver_->singular(); }

    const Poly2& fundamental(std::size_t k) {
        require(k < cache_.size(), Errc::index_out_of_range,
                "fundamental: node index out of range");
        require(poised(), Errc::not_poised, "fundamental: node set is not poised");
        if (!cache_[k]) {
            Poly2 p(nodes_->degree());
            std::vector<Rat> coeffs = solver_->solve_column(k);
            std::size_t idx = 0;
            for (int d = 0; d <= nodes_->degree(); ++d)
                for (int j = 0; j <= d; ++j, ++idx) p.at(d - j, j) = std::move(coeffs[idx]);
            cache_[k] = std::move(p);
        }
        return *cache_[k];
    }

    std::vector<Poly2> all() {
        std::vector<Poly2> out;
        out.reserve(cache_.size());
        for (std::size_t k = 0; k < cache_.size(); ++k) out.push_back(fundamental(k));
        return out;
    }

private:
    const NodeSet* nodes_;
    std::unique_ptr<linalg::BareissSolver> solver_;
    std::vector<std::optional<Poly2>> cache_;
};

/// The unique p in Pi_n matching the data at the nodes exactly.
inline Poly2 interpolate(const InterpolationProblem& problem) {
    const NodeSet& nodes = problem.nodes;
    linalg::RatMatrix rhs(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) rhs[i] = {problem.data[i]};
    linalg::BareissSolver solver(detail::vandermonde(nodes), rhs);
    require(!solver.singular(), Errc::not_poised, "interpolate: node set is not poised");

    Poly2 p(nodes.degree());
    std::vector<Rat> coeffs = solver.solve_column(0);
    std::size_t idx = 0;
    for (int d = 0; d <= nodes.degree(); ++d)
        for (int j = 0; j <= d; ++j, ++idx) p.at(d - j, j) = std::move(coeffs[idx]);
    return p;
}

inline Poly2 interpolate(const NodeSet& nodes, const std::vector<Rat>& data) {
    return interpolate(InterpolationProblem(nodes, data));
}

struct FundamentalPoly {
    std::size_t owner;
    Poly2 poly;
};

/// Lagrange fundamental polynomial of node k: 1 at node k, 0 elsewhere.
inline FundamentalPoly fundamental_polynomial(const NodeSet& nodes, std::size_t k) {
    require(k < nodes.size(), Errc::index_out_of_range,
            "fundamental_polynomial: node index out of range");
    FundamentalSolver solver(nodes);
    return FundamentalPoly{k, solver.fundamental(k)};
}

} // namespace gcn
