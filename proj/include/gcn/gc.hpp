#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <gcn/errors.hpp>
#include <gcn/geometry.hpp>
#include <gcn/interp.hpp>
#include <gcn/poly.hpp>

namespace gcn {

struct CensusEntry {
    Line line;
    std::vector<std::size_t> nodes; // indices of incident nodes, ascending
};

/// All distinct lines through at least two nodes, each with its full
/// incident-node set. Entries are in canonical (a, b, c) order, so every
/// consumer iterates lines deterministically. Every node pair lies on
/// exactly one entry.
struct LineCensus {
    std::vector<CensusEntry> entries;

    const CensusEntry* find(const Line& l) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), l,
                                   [](const CensusEntry& e, const Line& v) { return e.line < v; });
        if (it == entries.end() || !(it->line == l)) return nullptr;
        return &*it;
    }
};

inline LineCensus candidate_lines(const NodeSet& nodes) {
    require(nodes.size() >= 2, Errc::precondition, "candidate_lines: need at least two nodes");
    std::map<Line, std::vector<std::size_t>> by_line;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const Line l = line_through(nodes[i], nodes[j]);
            if (by_line.find(l) == by_line.end()) {
                std::vector<std::size_t> incident_nodes;
                for (std::size_t k = 0; k < nodes.size(); ++k)
                    if (incident(l, nodes[k])) incident_nodes.push_back(k);
                by_line.emplace(l, std::move(incident_nodes));
            }
        }
    }
    LineCensus census;
    census.entries.reserve(by_line.size());
    for (auto& [line, incident_nodes] : by_line)
        census.entries.push_back(CensusEntry{line, std::move(incident_nodes)});
    return census;
}

/// Lines through at least n+1 nodes (for a poised set this is exactly n+1,
/// the most a line can carry).
inline std::vector<Line> maximal_lines(const NodeSet& nodes, const LineCensus& census) {
    std::vector<Line> out;
    const std::size_t needed = static_cast<std::size_t>(nodes.degree()) + 1;
    for (const CensusEntry& e : census.entries)
        if (e.nodes.size() >= needed) out.push_back(e.line);
    return out;
}

inline std::vector<Line> maximal_lines(const NodeSet& nodes) {
    if (nodes.size() < 2) return {};
    return maximal_lines(nodes, candidate_lines(nodes));
}

/// Node A uses a line iff the line divides A's fundamental polynomial.
inline bool uses(const NodeSet& nodes, std::size_t a, const Line& l) {
    FundamentalSolver solver(nodes);
    return line_divides(solver.fundamental(a), l);
}

/// The n linear factors of one fundamental polynomial, when it splits:
/// scale * product(factors) equals the fundamental polynomial exactly.
struct FactorizationWitness {
    std::size_t owner;
    std::vector<Line> factors; // multiset, canonical order, repeats adjacent
    Rat scale;
};

namespace detail {

/// Integer view of a polynomial for fast vanishing tests: common
/// denominator cleared, zero sets unchanged.
inline std::vector<Int> cleared_coefficients(const Poly2& p) {
    Int l = 1;
    for (const Rat& v : p.coefficients()) l = boost::multiprecision::lcm(l, denominator(v));
    std::vector<Int> out;
    out.reserve(p.coefficients().size());
    for (const Rat& v : p.coefficients()) out.push_back(numerator(v) * exact_div(l, denominator(v)));
    return out;
}

/// Whether p (given by cleared integer coefficients, bound n) vanishes at
/// the n+1 parameter samples t = 0..n of l. Since deg(p restricted to l)
/// is at most n, this decides divisibility; evaluations are scaled to stay
/// in integer arithmetic and exit at the first nonzero value.
inline bool vanishes_on_line(const std::vector<Int>& coeffs, int n, const Line& l) {
    const bool vertical = l.b == 0;
    for (int t = 0; t <= n; ++t) {
        // sample point: b != 0 -> (t*b, -(c + t*a*b)/b) scaled by b^n;
        //               b == 0 -> (-c/a, t)             scaled by a^n.
        const Int sx = vertical ? -l.c : Int(t) * l.b;
        const Int sy = vertical ? Int(t) : -(l.c + Int(t) * l.a * l.b);
        const Int scale = vertical ? l.a : l.b;

        std::vector<Int> xp(static_cast<std::size_t>(n + 1)), yp(xp.size()), sp(xp.size());
        xp[0] = 1;
        yp[0] = 1;
        sp[0] = 1;
        for (int k = 1; k <= n; ++k) {
            xp[static_cast<std::size_t>(k)] = xp[static_cast<std::size_t>(k - 1)] * sx;
            yp[static_cast<std::size_t>(k)] = yp[static_cast<std::size_t>(k - 1)] * sy;
            sp[static_cast<std::size_t>(k)] = sp[static_cast<std::size_t>(k - 1)] * scale;
        }
        Int acc = 0;
        std::size_t idx = 0;
        for (int d = 0; d <= n; ++d) {
            for (int j = 0; j <= d; ++j, ++idx) {
                if (coeffs[idx] == 0) continue;
                Int term = coeffs[idx] * xp[static_cast<std::size_t>(d - j)] *
                           yp[static_cast<std::size_t>(j)];
                if (vertical) {
                    // x-coordinate carries denominator a: weight a^(n-i)
                    term *= sp[static_cast<std::size_t>(n - (d - j))];
                } else {
                    // y-coordinate carries denominator b: weight b^(n-j)
                    term *= sp[static_cast<std::size_t>(n - j)];
                }
                acc += term;
            }
        }
        if (acc != 0) return false;
    }
    return true;
}

/// Trial division over the census: factors the polynomial into linear
/// forms drawn from lines through >= 2 nodes, skipping lines through the
/// owner node. Lines are tried in canonical order; a dividing line is
/// re-tested, so repeated factors would be found.
inline std::optional<FactorizationWitness> split_over_census(const NodeSet& nodes,
                                                             const LineCensus& census,
                                                             std::size_t owner,
                                                             const Poly2& fundamental) {
    const int n = nodes.degree();
    FactorizationWitness witness{owner, {}, Rat(0)};
    Poly2 rest = fundamental;
    while (rest.effective_degree() > 0) {
        bool found = false;
        const std::vector<Int> coeffs = cleared_coefficients(rest);
        for (const CensusEntry& e : census.entries) {
            if (incident(e.line, nodes[owner])) continue;
            if (!vanishes_on_line(coeffs, rest.bound(), e.line)) continue;
            std::optional<Poly2> quotient = divide_by_line(rest, e.line);
            require(quotient.has_value(), Errc::precondition,
                    "split_over_census: sample test and division disagree");
            rest = std::move(*quotient);
            witness.factors.push_back(e.line);
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    // A product of n linear forms has degree exactly n.
    if (witness.factors.size() != static_cast<std::size_t>(n)) return std::nullopt;
    witness.scale = rest.coeff(0, 0);
    std::sort(witness.factors.begin(), witness.factors.end());
    return witness;
}

} // namespace detail

/// Factorization of node A's fundamental polynomial into n census lines,
/// if it splits; absent otherwise.
inline std::optional<FactorizationWitness> gc_witness(const NodeSet& nodes, std::size_t a) {
    FundamentalSolver solver(nodes);
    const Poly2& p = solver.fundamental(a);
    return detail::split_over_census(nodes, candidate_lines(nodes), a, p);
}

struct GcResult {
    bool gc = false;
    std::vector<FactorizationWitness> witnesses; // complete iff gc
    std::optional<std::size_t> failing_node;     // first node without a witness
};

namespace detail {

inline GcResult gc_scan(const NodeSet& nodes, const LineCensus& census,
                        FundamentalSolver& solver) {
    GcResult result;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        auto witness = split_over_census(nodes, census, a, solver.fundamental(a));
        if (!witness) {
            result.failing_node = a;
            return result;
        }
        result.witnesses.push_back(std::move(*witness));
    }
    result.gc = true;
    return result;
}

} // namespace detail

/// GC test: every node's fundamental polynomial splits into n linear
/// factors. Returns all witnesses on success, the first failing node
/// otherwise.
inline GcResult is_gc_set(const NodeSet& nodes) {
    FundamentalSolver solver(nodes);
    require(solver.poised(), Errc::not_poised, "is_gc_set: node set is not poised");
    if (nodes.size() < 2) { // degree 0: the constant 1 is an empty product
        GcResult r;
        r.gc = true;
        r.witnesses.push_back(FactorizationWitness{0, {}, Rat(1)});
        return r;
    }
    return detail::gc_scan(nodes, candidate_lines(nodes), solver);
}

struct UsageRecord {
    Line line;
    std::vector<std::size_t> users; // nodes whose witness contains the line
};

namespace detail {

inline std::vector<UsageRecord> usage_from_witnesses(
    const std::vector<FactorizationWitness>& witnesses) {
    std::map<Line, std::vector<std::size_t>> users;
    for (const FactorizationWitness& w : witnesses)
        for (std::size_t i = 0; i < w.factors.size(); ++i) {
            if (i > 0 && w.factors[i] == w.factors[i - 1]) continue; // repeated factor
            users[w.factors[i]].push_back(w.owner);
        }
    std::vector<UsageRecord> out;
    out.reserve(users.size());
    for (auto& [line, line_users] : users) {
        std::sort(line_users.begin(), line_users.end());
        out.push_back(UsageRecord{line, std::move(line_users)});
    }
    return out;
}

} // namespace detail

/// For each used line, the exact set of nodes using it. Lines without
/// users are not reported.
inline std::vector<UsageRecord> usage_census(const NodeSet& nodes) {
    GcResult result = is_gc_set(nodes);
    require(result.gc, Errc::not_gc, "usage_census: node set is not a GC set");
    return detail::usage_from_witnesses(result.witnesses);
}

/// Incidence counts of X \ {A} along A's witness lines, sorted descending
/// (e.g. [5,5,5,5] when every factor is a maximal line). Counts overlap on
/// shared nodes.
inline std::vector<int> used_line_profile(const NodeSet& nodes, std::size_t a) {
    std::optional<FactorizationWitness> witness = gc_witness(nodes, a);
    require(witness.has_value(), Errc::not_gc,
            "used_line_profile: node has no split fundamental polynomial");
    std::vector<int> counts;
    counts.reserve(witness->factors.size());
    for (const Line& l : witness->factors) {
        int c = 0;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (k != a && incident(l, nodes[k])) ++c;
        counts.push_back(c);
    }
    std::sort(counts.rbegin(), counts.rend());
    return counts;
}

enum class GascaMaeztuStatus {
    not_poised,
    not_gc,
    confirmed_maximal_line,
    counterexample, // GC set without a maximal line: must never occur
};

inline std::string to_string(GascaMaeztuStatus s) {
    switch (s) {
        case GascaMaeztuStatus::not_poised: return "not-poised";
        case GascaMaeztuStatus::not_gc: return "not-gc";
        case GascaMaeztuStatus::confirmed_maximal_line: return "confirmed-maximal-line";
        case GascaMaeztuStatus::counterexample: return "counterexample";
    }
    return "unknown";
}

struct GascaMaeztuVerdict {
    GascaMaeztuStatus status;
    std::vector<Line> maximal;               // nonempty iff confirmed
    std::optional<std::size_t> failing_node; // set iff not_gc
};

/// One-shot verdict: poised? GC? then a maximal line must exist. A GC set
/// with no maximal line is reported as a counterexample, never silently
/// accepted. Every outcome is a verdict; a set of the wrong cardinality
/// cannot be poised and lands in not_poised.
inline GascaMaeztuVerdict gasca_maeztu_check(const NodeSet& nodes) {
    if (nodes.size() != nodes.expected_size())
        return GascaMaeztuVerdict{GascaMaeztuStatus::not_poised, {}, std::nullopt};
    if (nodes.size() < 2) // degree 0 is vacuous
        return GascaMaeztuVerdict{GascaMaeztuStatus::confirmed_maximal_line, {}, std::nullopt};

    FundamentalSolver solver(nodes);
    if (!solver.poised())
        return GascaMaeztuVerdict{GascaMaeztuStatus::not_poised, {}, std::nullopt};

    const LineCensus census = candidate_lines(nodes);
    const GcResult result = detail::gc_scan(nodes, census, solver);
    if (!result.gc)
        return GascaMaeztuVerdict{GascaMaeztuStatus::not_gc, {}, result.failing_node};

    std::vector<Line> maximal = maximal_lines(nodes, census);
    if (maximal.empty())
        return GascaMaeztuVerdict{GascaMaeztuStatus::counterexample, {}, std::nullopt};
    return GascaMaeztuVerdict{GascaMaeztuStatus::confirmed_maximal_line, std::move(maximal),
                              std::nullopt};
}

/// Raw-point overload: wrong cardinality or coincident points land in the
/// not_poised verdict instead of failing construction.
inline GascaMaeztuVerdict gasca_maeztu_check(int degree, const std::vector<Point>& points) {
    if (points.size() != static_cast<std::size_t>(dimension(degree)))
        return GascaMaeztuVerdict{GascaMaeztuStatus::not_poised, {}, std::nullopt};
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                return GascaMaeztuVerdict{GascaMaeztuStatus::not_poised, {}, std::nullopt};
    return gasca_maeztu_check(NodeSet(degree, points));
}

/// Everything cmd_analyze reports, computed in one pass over shared state.
struct SetAnalysis {
    bool poised = false;
    bool gc = false;
    std::optional<std::size_t> failing_node;
    LineCensus census;
    std::vector<Line> maximal;
    std::vector<FactorizationWitness> witnesses;
    std::vector<UsageRecord> usage;
    std::vector<std::vector<int>> profiles; // per node, empty when not GC
    GascaMaeztuVerdict verdict;
};

inline SetAnalysis analyze_set(const NodeSet& nodes) {
    detail::check_cardinality(nodes);
    SetAnalysis a;
    if (nodes.size() >= 2) {
        a.census = candidate_lines(nodes);
        a.maximal = maximal_lines(nodes, a.census);
    }
    if (nodes.size() < 2) {
        a.poised = true;
        a.gc = true;
        a.witnesses.push_back(FactorizationWitness{0, {}, Rat(1)});
        a.profiles.push_back({});
        a.verdict = GascaMaeztuVerdict{GascaMaeztuStatus::confirmed_maximal_line, {}, std::nullopt};
        return a;
    }

    FundamentalSolver solver(nodes);
    a.poised = solver.poised();
    if (!a.poised) {
        a.verdict = GascaMaeztuVerdict{GascaMaeztuStatus::not_poised, {}, std::nullopt};
        return a;
    }

    GcResult result = detail::gc_scan(nodes, a.census, solver);
    a.gc = result.gc;
    a.failing_node = result.failing_node;
    if (!a.gc) {
        a.verdict = GascaMaeztuVerdict{GascaMaeztuStatus::not_gc, {}, result.failing_node};
        return a;
    }

    a.usage = detail::usage_from_witnesses(result.witnesses);
    for (const FactorizationWitness& w : result.witnesses) {
        std::vector<int> counts;
        for (const Line& l : w.factors) {
            int c = 0;
            for (std::size_t k = 0; k < nodes.size(); ++k)
                if (k != w.owner && incident(l, nodes[k])) ++c;
            counts.push_back(c);
        }
        std::sort(counts.rbegin(), counts.rend());
        a.profiles.push_back(std::move(counts));
    }
    a.witnesses = std::move(result.witnesses);

    if (a.maximal.empty())
        a.verdict = GascaMaeztuVerdict{GascaMaeztuStatus::counterexample, {}, std::nullopt};
    else
        a.verdict =
            GascaMaeztuVerdict{GascaMaeztuStatus::confirmed_maximal_line, a.maximal, std::nullopt};
    return a;
}

} // namespace gcn
