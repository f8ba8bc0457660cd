#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gcn/errors.hpp>
#include <gcn/rational.hpp>

namespace gcn {

struct Point {
    Rat x;
    Rat y;

    friend bool operator==(const Point&, const Point&) = default;
};

inline std::string to_string(const Point& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

/// Affine line a*x + b*y + c = 0 with canonical integer coefficients:
/// (a, b) != (0, 0), gcd(|a|, |b|, |c|) = 1, and the first nonzero of
/// (a, b, c) is positive. Structural equality therefore coincides with
/// geometric equality, and the (a, b, c) lexicographic order is a total
/// canonical order on lines.
struct Line {
    Int a;
    Int b;
    Int c;

    /// Canonicalizes rational coefficients; (A, B) must not both be zero.
    static Line from_coefficients(const Rat& A, const Rat& B, const Rat& C) {
        require(!(A == 0 && B == 0), Errc::precondition,
                "Line: linear part must be nonzero");
        Int lcm = denominator(A);
        lcm = boost::multiprecision::lcm(lcm, denominator(B));
        lcm = boost::multiprecision::lcm(lcm, denominator(C));
        Int a = numerator(A) * exact_div(lcm, denominator(A));
        Int b = numerator(B) * exact_div(lcm, denominator(B));
        Int c = numerator(C) * exact_div(lcm, denominator(C));
        Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a), abs(b)), abs(c));
        a = exact_div(a, g);
        b = exact_div(b, g);
        c = exact_div(c, g);
        if (a < 0 || (a == 0 && b < 0)) {
            a = -a;
            b = -b;
            c = -c;
        }
        return Line{std::move(a), std::move(b), std::move(c)};
    }

    /// Exact value of a*x + b*y + c at a point.
    Rat value_at(const Point& p) const { return Rat(a) * p.x + Rat(b) * p.y + Rat(c); }

    friend bool operator==(const Line&, const Line&) = default;

    friend bool operator<(const Line& l, const Line& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

/// Human-readable canonical equation, e.g. "2x+3y-1=0".
inline std::string to_string(const Line& l) {
    std::string s;
    auto term = [&](const Int& coeff, const char* var) {
        if (coeff == 0) return;
        if (coeff > 0 && !s.empty()) s += "+";
        if (coeff == -1 && *var) s += "-";
        else if (coeff != 1 || !*var) s += coeff.str();
        s += var;
    };
    term(l.a, "x");
    term(l.b, "y");
    term(l.c, "");
    return s + "=0";
}

inline bool incident(const Line& l, const Point& p) { return l.value_at(p) == 0; }

/// True iff the three points lie on a common line (duplicates included).
inline bool collinear(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

inline Line line_through(const Point& p, const Point& q) {
    require(!(p == q), Errc::identical_points,
            "line_through: points coincide at " + to_string(p));
    const Rat a = q.y - p.y;
    const Rat b = p.x - q.x;
    const Rat c = -(a * p.x + b * p.y);
    return Line::from_coefficients(a, b, c);
}

/// Intersection point of two lines; empty for parallel (or equal) lines.
inline std::optional<Point> intersect(const Line& l, const Line& m) {
    const Int det = l.a * m.b - l.b * m.a;
    if (det == 0) return std::nullopt;
    // Cramer on [a b; a' b'] [x y]^T = [-c -c']^T
    return Point{make_rat(l.b * m.c - l.c * m.b, det), make_rat(l.c * m.a - l.a * m.c, det)};
}

/// An ordered, duplicate-free collection of interpolation nodes together
/// with the intended total degree n. Cardinality is only constrained by the
/// operations that need |nodes| = (n+1)(n+2)/2; construction checks
/// distinctness alone.
class NodeSet {
public:
    NodeSet(int degree, std::vector<Point> nodes) : degree_(degree), nodes_(std::move(nodes)) {
        require(degree >= 0, Errc::precondition, "NodeSet: degree must be nonnegative");
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            for (std::size_t j = i + 1; j < nodes_.size(); ++j)
                require(!(nodes_[i] == nodes_[j]), Errc::duplicate_nodes,
                        "NodeSet: duplicate node " + to_string(nodes_[i]));
    }

    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const Point& operator[](std::size_t i) const { return nodes_[i]; }
    const std::vector<Point>& nodes() const noexcept { return nodes_; }

    /// The cardinality poisedness-related operations require.
    std::size_t expected_size() const noexcept {
        return static_cast<std::size_t>((degree_ + 1) * (degree_ + 2) / 2);
    }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    int degree_;
    std::vector<Point> nodes_;
};

} // namespace gcn
