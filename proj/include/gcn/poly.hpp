#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <gcn/errors.hpp>
#include <gcn/geometry.hpp>
#include <gcn/rational.hpp>

namespace gcn {

/// Number of bivariate monomials of total degree <= n.
inline int monomial_count(int n) { return (n + 1) * (n + 2) / 2; }

/// Graded-lexicographic position of x^i y^j: blocks by total degree,
/// x-power first within a block (1, x, y, x^2, xy, y^2, ...).
inline int monomial_index(int i, int j) {
    const int d = i + j;
    return d * (d + 1) / 2 + j;
}

/// Univariate polynomial in a line parameter t, dense coefficients
/// c[0] + c[1] t + ... + c[bound] t^bound.
class Poly1 {
public:
    explicit Poly1(int bound) : c_(static_cast<std::size_t>(bound + 1)) {
        require(bound >= 0, Errc::precondition, "Poly1: negative degree bound");
    }

    int bound() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rat& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
    }

    Rat evaluate(const Rat& t) const {
        Rat acc = 0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
        return acc;
    }

    friend bool operator==(const Poly1& p, const Poly1& q) {
        const std::size_t n = std::max(p.c_.size(), q.c_.size());
        for (std::size_t k = 0; k < n; ++k) {
            const Rat a = k < p.c_.size() ? p.c_[k] : Rat(0);
            const Rat b = k < q.c_.size() ? q.c_[k] : Rat(0);
            if (a != b) return false;
        }
        return true;
    }

private:
    std::vector<Rat> c_;
};

/// Bivariate polynomial of total degree <= bound, dense coefficients in
/// graded-lex order. The zero polynomial is all-zero coefficients; the
/// effective degree may be below the bound.
class Poly2 {
public:
    explicit Poly2(int bound)
        : bound_(bound), c_(static_cast<std::size_t>(monomial_count(bound))) {
        require(bound >= 0, Errc::precondition, "Poly2: negative degree bound");
    }

    static Poly2 constant(int bound, const Rat& value) {
        Poly2 p(bound);
        p.c_[0] = value;
        return p;
    }

    /// The degree-1 polynomial a*x + b*y + c of a line.
    static Poly2 from_line(const Line& l) {
        Poly2 p(1);
        p.c_[0] = Rat(l.c);
        p.c_[1] = Rat(l.a);
        p.c_[2] = Rat(l.b);
        return p;
    }

    int bound() const noexcept { return bound_; }
    const std::vector<Rat>& coefficients() const noexcept { return c_; }

    /// Coefficient of x^i y^j; monomials above the bound read as zero.
    const Rat& coeff(int i, int j) const {
        static const Rat zero(0);
        if (i < 0 || j < 0 || i + j > bound_) return zero;
        return c_[static_cast<std::size_t>(monomial_index(i, j))];
    }

    Rat& at(int i, int j) {
        require(i >= 0 && j >= 0 && i + j <= bound_, Errc::index_out_of_range,
                "Poly2: monomial exceeds degree bound");
        return c_[static_cast<std::size_t>(monomial_index(i, j))];
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
    }

    /// Largest total degree with a nonzero coefficient; -1 for the zero
    /// polynomial.
    int effective_degree() const {
        for (int d = bound_; d >= 0; --d)
            for (int j = 0; j <= d; ++j)
                if (c_[static_cast<std::size_t>(monomial_index(d - j, j))] != 0) return d;
        return -1;
    }

    Rat evaluate(const Point& p) const {
        std::vector<Rat> xp(static_cast<std::size_t>(bound_ + 1)), yp(xp.size());
        xp[0] = 1;
        yp[0] = 1;
        for (int k = 1; k <= bound_; ++k) {
            xp[static_cast<std::size_t>(k)] = xp[static_cast<std::size_t>(k - 1)] * p.x;
            yp[static_cast<std::size_t>(k)] = yp[static_cast<std::size_t>(k - 1)] * p.y;
        }
        Rat acc = 0;
        std::size_t idx = 0;
        for (int d = 0; d <= bound_; ++d)
            for (int j = 0; j <= d; ++j, ++idx)
                if (c_[idx] != 0)
                    acc += c_[idx] * xp[static_cast<std::size_t>(d - j)] * yp[static_cast<std::size_t>(j)];
        return acc;
    }

    Poly2& operator+=(const Poly2& q) {
        require(q.bound_ <= bound_, Errc::degree_overflow, "Poly2: bound mismatch in +=");
        for (std::size_t k = 0; k < q.c_.size(); ++k) c_[k] += q.c_[k];
        return *this;
    }

    Poly2& operator-=(const Poly2& q) {
        require(q.bound_ <= bound_, Errc::degree_overflow, "Poly2: bound mismatch in -=");
        for (std::size_t k = 0; k < q.c_.size(); ++k) c_[k] -= q.c_[k];
        return *this;
    }

    Poly2& operator*=(const Rat& s) {
        for (Rat& v : c_) v *= s;
        return *this;
    }

    friend Poly2 operator*(const Rat& s, Poly2 p) {
        p *= s;
        return p;
    }

    /// Mathematical equality: coefficients compared across bounds, missing
    /// high-degree entries read as zero.
    friend bool operator==(const Poly2& p, const Poly2& q) {
        const std::size_t n = std::max(p.c_.size(), q.c_.size());
        for (std::size_t k = 0; k < n; ++k) {
            const Rat a = k < p.c_.size() ? p.c_[k] : Rat(0);
            const Rat b = k < q.c_.size() ? q.c_[k] : Rat(0);
            if (a != b) return false;
        }
        return true;
    }

private:
    int bound_;
    std::vector<Rat> c_;
};

/// Product of p with the linear form of l, into the given degree bound.
/// The effective degree of p must stay below out_bound.
inline Poly2 multiply_linear(const Poly2& p, const Line& l, int out_bound) {
    require(p.effective_degree() < out_bound, Errc::degree_overflow,
            "multiply_linear: effective degree of factor exceeds bound-1");
    Poly2 r(out_bound);
    const Rat a(l.a), b(l.b), c(l.c);
    const int top = std::min(p.bound(), out_bound - 1);
    for (int d = 0; d <= top; ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            const Rat& v = p.coeff(i, j);
            if (v == 0) continue;
            if (a != 0) r.at(i + 1, j) += a * v;
            if (b != 0) r.at(i, j + 1) += b * v;
            if (c != 0) r.at(i, j) += c * v;
        }
    }
    return r;
}

inline Poly2 multiply_linear(const Poly2& p, const Line& l) {
    return multiply_linear(p, l, p.bound() + 1);
}

/// Deterministic rational parametrization P0 + t*D of a line, chosen so
/// that vertical lines are covered: b != 0 gives P0 = (0, -c/b),
/// D = (b, -a); otherwise P0 = (-c/a, 0), D = (0, 1).
struct LineParam {
    Point p0;
    Rat dx;
    Rat dy;

    Point at(const Rat& t) const { return Point{p0.x + t * dx, p0.y + t * dy}; }
};

inline LineParam parametrize(const Line& l) {
    if (l.b != 0) return LineParam{Point{Rat(0), Rat(-l.c) / Rat(l.b)}, Rat(l.b), Rat(-l.a)};
    return LineParam{Point{Rat(-l.c) / Rat(l.a), Rat(0)}, Rat(0), Rat(1)};
}

/// Restriction of p to the canonical parametrization of l: the univariate
/// polynomial t -> p(P0 + t*D). Identically zero iff l divides p.
inline Poly1 restrict_to_line(const Poly2& p, const Line& l) {
    const int n = p.bound();
    const LineParam par = parametrize(l);

    // Powers of the two parameter-linear coordinate polynomials.
    auto powers = [n](const Rat& c0, const Rat& c1) {
        std::vector<Poly1> pw;
        pw.reserve(static_cast<std::size_t>(n + 1));
        pw.emplace_back(0);
        pw[0].coeff(0) = 1;
        for (int k = 1; k <= n; ++k) {
            Poly1 next(k);
            const Poly1& prev = pw.back();
            for (int t = 0; t < k; ++t) {
                next.coeff(t) += prev.coeff(t) * c0;
                next.coeff(t + 1) += prev.coeff(t) * c1;
            }
            pw.push_back(std::move(next));
        }
        return pw;
    };
    const std::vector<Poly1> xp = powers(par.p0.x, par.dx);
    const std::vector<Poly1> yp = powers(par.p0.y, par.dy);

    Poly1 out(n);
    for (int d = 0; d <= n; ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            const Rat& v = p.coeff(i, j);
            if (v == 0) continue;
            const Poly1& px = xp[static_cast<std::size_t>(i)];
            const Poly1& py = yp[static_cast<std::size_t>(j)];
            // accumulate v * px * py
            for (int s = 0; s <= i; ++s) {
                if (px.coeff(s) == 0) continue;
                const Rat vs = v * px.coeff(s);
                for (int t = 0; t <= j; ++t)
                    if (py.coeff(t) != 0) out.coeff(s + t) += vs * py.coeff(t);
            }
        }
    }
    return out;
}

/// True iff the linear form of l divides p exactly, decided by the
/// restriction of p to l vanishing identically.
inline bool line_divides(const Poly2& p, const Line& l) {
    return restrict_to_line(p, l).is_zero();
}

/// Exact quotient p / l when l divides p; absent otherwise. The quotient is
/// recovered by back-substitution through the graded coefficient recurrence
/// of multiply_linear, highest degree block first.
inline std::optional<Poly2> divide_by_line(const Poly2& p, const Line& l) {
    if (!line_divides(p, l)) return std::nullopt;
    const int n = p.bound();
    if (n == 0) return Poly2(0); // only the zero polynomial reaches here

    Poly2 q(n - 1);
    const Rat a(l.a), b(l.b), c(l.c);
    if (b != 0) {
        // p(i, j+1) = a q(i-1, j+1) + b q(i, j) + c q(i, j+1)
        for (int d = n - 1; d >= 0; --d) {
            for (int j = d; j >= 0; --j) {
                const int i = d - j;
                Rat v = p.coeff(i, j + 1);
                if (i >= 1) v -= a * q.coeff(i - 1, j + 1);
                v -= c * q.coeff(i, j + 1);
                q.at(i, j) = v / b;
            }
        }
    } else {
        // p(i+1, j) = a q(i, j) + c q(i+1, j)
        for (int d = n - 1; d >= 0; --d) {
            for (int j = 0; j <= d; ++j) {
                const int i = d - j;
                q.at(i, j) = (p.coeff(i + 1, j) - c * q.coeff(i + 1, j)) / a;
            }
        }
    }
    return q;
}

/// Monomial-basis debug rendering, e.g. "1 - 2*x*y + x^2".
inline std::string to_string(const Poly2& p) {
    std::string s;
    for (int d = 0; d <= p.bound(); ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            const Rat& v = p.coeff(i, j);
            if (v == 0) continue;
            const Rat av = v < 0 ? Rat(-v) : v;
            std::string term;
            if (av != 1 || d == 0) term = to_string(av);
            auto power = [&term](const char* var, int e) {
                if (e == 0) return;
                if (!term.empty()) term += "*";
                term += var;
                if (e > 1) term += "^" + std::to_string(e);
            };
            power("x", i);
            power("y", j);
            if (s.empty()) s = (v < 0 ? "-" : "") + term;
            else s += (v < 0 ? " - " : " + ") + term;
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace gcn
