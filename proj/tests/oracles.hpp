#pragma once

// Reference computations the tests check the library against. These
// deliberately take different routes than the implementation: cofactor
// determinants instead of elimination, explicit sample points instead of
// restriction polynomials, raw pair enumeration instead of the census.

#include <map>
#include <vector>

#include <gcn/gcn.hpp>

namespace oracle {

/// Cofactor-expansion determinant; exponential, small matrices only.
inline gcn::Rat naive_determinant(const std::vector<std::vector<gcn::Rat>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return gcn::Rat(1);
    if (n == 1) return m[0][0];
    gcn::Rat det = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[0][k] == 0) continue;
        std::vector<std::vector<gcn::Rat>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<gcn::Rat> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        const gcn::Rat term = m[0][k] * naive_determinant(minor);
        det += (k % 2 == 0) ? term : -term;
    }
    return det;
}

/// Divisibility decided by point evaluation alone: p of degree bound n
/// vanishes at n+1 distinct points of the line. Points are built directly
/// from the line equation, not from the library parametrization.
inline bool vanishes_at_line_samples(const gcn::Poly2& p, const gcn::Line& l) {
    const int n = p.bound();
    for (int k = 0; k <= n; ++k) {
        gcn::Point sample;
        if (l.b != 0)
            sample = gcn::Point{gcn::Rat(k), gcn::make_rat(-l.c - l.a * k, l.b)};
        else
            sample = gcn::Point{gcn::make_rat(-l.c, l.a), gcn::Rat(k)};
        if (p.evaluate(sample) != 0) return false;
    }
    return true;
}

/// Census by raw pair enumeration: every pair contributes its line, each
/// line collects incident nodes by brute force.
inline std::map<gcn::Line, std::vector<std::size_t>> enumerate_pair_lines(
    const gcn::NodeSet& nodes) {
    std::map<gcn::Line, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const gcn::Line l = gcn::line_through(nodes[i], nodes[j]);
            if (out.count(l)) continue;
            std::vector<std::size_t> incident_nodes;
            for (std::size_t k = 0; k < nodes.size(); ++k)
                if (incident(l, nodes[k])) incident_nodes.push_back(k);
            out.emplace(l, std::move(incident_nodes));
        }
    }
    return out;
}

/// Product of linear forms, scaled to equal 1 at the given node: the
/// closed-form fundamental polynomial of lattice families.
inline gcn::Poly2 scaled_line_product(const std::vector<gcn::Line>& lines,
                                      const gcn::Point& unit_at) {
    gcn::Poly2 p = gcn::Poly2::constant(0, gcn::Rat(1));
    for (const gcn::Line& l : lines) p = gcn::multiply_linear(p, l);
    const gcn::Rat v = p.evaluate(unit_at);
    p *= gcn::Rat(1) / v;
    return p;
}

} // namespace oracle
