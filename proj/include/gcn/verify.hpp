#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gcn/errors.hpp>
#include <gcn/gc.hpp>
#include <gcn/generate.hpp>
#include <gcn/geometry.hpp>
#include <gcn/interp.hpp>
#include <gcn/linalg.hpp>
#include <gcn/poly.hpp>

namespace gcn {

/// Executable check of the division property: a degree-n polynomial known
/// to vanish at n+1 distinct points of a line must be exactly divisible by
/// that line, and the quotient must re-multiply to the input. Returning
/// false means the implementation is broken, not the input.
inline bool verify_bezout(const Poly2& p, const Line& l, const std::vector<Point>& pts) {
    const int n = p.bound();
    require(pts.size() == static_cast<std::size_t>(n + 1), Errc::precondition,
            "verify_bezout: need exactly degree+1 points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        require(incident(l, pts[i]), Errc::precondition,
                "verify_bezout: point " + to_string(pts[i]) + " is not on the line");
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            require(!(pts[i] == pts[j]), Errc::precondition,
                    "verify_bezout: points must be pairwise distinct");
        require(p.evaluate(pts[i]) == 0, Errc::precondition,
                "verify_bezout: polynomial does not vanish at " + to_string(pts[i]));
    }
    std::optional<Poly2> quotient = divide_by_line(p, l);
    if (!quotient) return false;
    return multiply_linear(*quotient, l, n) == p;
}

/// Two triples of lines meeting in nine pairwise distinct points.
/// intersections[3*i + j] is first[i] cut with second[j].
struct CBConfiguration {
    std::array<Line, 3> first;
    std::array<Line, 3> second;
    std::array<Point, 9> intersections;

    static CBConfiguration make(const std::array<Line, 3>& first,
                                const std::array<Line, 3>& second) {
        CBConfiguration config{first, second, {}};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                std::optional<Point> p = intersect(first[static_cast<std::size_t>(i)],
                                                   second[static_cast<std::size_t>(j)]);
                require(p.has_value(), Errc::degenerate_configuration,
                        "CBConfiguration: parallel cross pair");
                config.intersections[static_cast<std::size_t>(3 * i + j)] = *p;
            }
        }
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = i + 1; j < 9; ++j)
                require(!(config.intersections[i] == config.intersections[j]),
                        Errc::degenerate_configuration,
                        "CBConfiguration: intersection points are not distinct");
        return config;
    }
};

/// For each of the nine omitted-point choices: every cubic vanishing at
/// the other eight intersection points also vanishes at the omitted one.
/// The nullspace of the 8 x 10 evaluation matrix is computed exactly.
inline bool verify_cayley_bacharach(const CBConfiguration& config) {
    for (std::size_t omit = 0; omit < 9; ++omit) {
        linalg::RatMatrix m;
        m.reserve(8);
        for (std::size_t k = 0; k < 9; ++k)
            if (k != omit) m.push_back(detail::monomial_row(config.intersections[k], 3));
        const std::vector<std::vector<Rat>> basis = linalg::nullspace(m);
        if (basis.empty()) return false; // 8 conditions on 10 coefficients
        for (const std::vector<Rat>& coeffs : basis) {
            Poly2 cubic(3);
            std::size_t idx = 0;
            for (int d = 0; d <= 3; ++d)
                for (int j = 0; j <= d; ++j, ++idx) cubic.at(d - j, j) = coeffs[idx];
            if (cubic.evaluate(config.intersections[omit]) != 0) return false;
        }
    }
    return true;
}

struct LineUsageInfo {
    Line line;
    int node_count = 0;
    std::vector<std::size_t> users;
    std::vector<Line> shared_lines; // extra witness lines common to exactly-3-user triples
};

/// Census-style report on usage-count bounds. The bounds are only claimed
/// under the hypothesis that the set has no maximal line; on sets that do
/// have one the report is informational and violations stay advisory.
struct UsageBoundReport {
    std::string id;
    bool no_maximal_line = false;
    std::vector<LineUsageInfo> examined;
    std::vector<Line> violations;
};

namespace detail {

struct UsageContext {
    LineCensus census;
    std::vector<UsageRecord> usage;
    bool no_maximal_line = false;
    std::vector<FactorizationWitness> witnesses;
};

inline UsageContext usage_context(const NodeSet& nodes) {
    UsageContext ctx;
    GcResult result = is_gc_set(nodes);
    require(result.gc, Errc::not_gc, "usage report: node set is not a GC set");
    ctx.census = candidate_lines(nodes);
    ctx.usage = usage_from_witnesses(result.witnesses);
    ctx.no_maximal_line = maximal_lines(nodes, ctx.census).empty();
    ctx.witnesses = std::move(result.witnesses);
    return ctx;
}

inline std::vector<std::size_t> users_of(const UsageContext& ctx, const Line& l) {
    for (const UsageRecord& r : ctx.usage)
        if (r.line == l) return r.users;
    return {};
}

} // namespace detail

/// 2- and 3-node lines with their user sets. When no maximal line exists,
/// such a line can be used by at most one node; multi-user non-maximal
/// lines are flagged. (A 2- or 3-node line that is itself maximal, as in
/// degrees 1 and 2, is exempt.)
inline UsageBoundReport small_line_usage_report(const NodeSet& nodes) {
    const detail::UsageContext ctx = detail::usage_context(nodes);
    UsageBoundReport report{"small-line-usage", ctx.no_maximal_line, {}, {}};
    const int max_per_line = nodes.degree() + 1;
    for (const CensusEntry& e : ctx.census.entries) {
        const int count = static_cast<int>(e.nodes.size());
        if (count != 2 && count != 3) continue;
        LineUsageInfo info{e.line, count, detail::users_of(ctx, e.line), {}};
        if (count < max_per_line && info.users.size() >= 2) report.violations.push_back(e.line);
        report.examined.push_back(std::move(info));
    }
    return report;
}

/// 4-node lines with their user sets. When no maximal line exists, a
/// 4-node line has at most three users, and an exactly-three-user line is
/// shared: the three users' witnesses have two further lines in common,
/// recorded in shared_lines.
inline UsageBoundReport four_node_line_usage_report(const NodeSet& nodes) {
    const detail::UsageContext ctx = detail::usage_context(nodes);
    UsageBoundReport report{"four-node-line-usage", ctx.no_maximal_line, {}, {}};
    for (const CensusEntry& e : ctx.census.entries) {
        if (e.nodes.size() != 4) continue;
        LineUsageInfo info{e.line, 4, detail::users_of(ctx, e.line), {}};
        if (info.users.size() == 3) {
            // lines present in all three users' witnesses, other than e.line
            for (const Line& candidate : ctx.witnesses[info.users[0]].factors) {
                if (candidate == e.line) continue;
                bool in_all = true;
                for (std::size_t u = 1; u < 3 && in_all; ++u) {
                    const auto& factors = ctx.witnesses[info.users[u]].factors;
                    in_all = std::find(factors.begin(), factors.end(), candidate) != factors.end();
                }
                if (in_all) info.shared_lines.push_back(candidate);
            }
        }
        if (report.no_maximal_line && info.users.size() >= 4) report.violations.push_back(e.line);
        report.examined.push_back(std::move(info));
    }
    return report;
}

/// Poised random set: redraws until the evaluation matrix is nonsingular
/// (random sets are almost surely poised, so this rarely loops).
inline NodeSet random_poised_set(int degree, SplitMix64& rng, std::uint32_t bound) {
    for (;;) {
        NodeSet candidate = random_node_set(degree, rng, bound);
        if (is_poised(candidate)) return candidate;
    }
}

/// A degree-n polynomial forced by interpolation to vanish at n+1 points
/// of a line (random data elsewhere), plus the line and the points: the
/// raw material of a division check.
struct BezoutInstance {
    Poly2 p;
    Line l;
    std::vector<Point> line_points;
};

inline BezoutInstance random_bezout_instance(int degree, SplitMix64& rng, std::uint32_t bound) {
    const std::size_t total = static_cast<std::size_t>(dimension(degree));
    const std::size_t on_line = static_cast<std::size_t>(degree) + 1;
    for (;;) {
        const Line l = random_line(rng, bound);
        const LineParam par = parametrize(l);
        std::vector<Point> pts;
        while (pts.size() < on_line) {
            Point p = par.at(random_rational(rng, bound));
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
        }
        const std::vector<Point> line_points = pts;
        while (pts.size() < total) {
            Point p = random_point(rng, bound);
            if (incident(l, p)) continue;
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
        }
        NodeSet nodes(degree, std::move(pts));
        if (!is_poised(nodes)) continue;
        std::vector<Rat> data(total, Rat(0));
        for (std::size_t i = on_line; i < total; ++i) data[i] = random_rational(rng, bound);
        return BezoutInstance{interpolate(nodes, data), l, line_points};
    }
}

/// Two random line triples with nine distinct intersection points;
/// degenerate draws are replaced.
inline CBConfiguration random_cb_configuration(SplitMix64& rng, std::uint32_t bound) {
    for (;;) {
        std::array<Line, 3> first{random_line(rng, bound), random_line(rng, bound),
                                  random_line(rng, bound)};
        std::array<Line, 3> second{random_line(rng, bound), random_line(rng, bound),
                                   random_line(rng, bound)};
        try {
            return CBConfiguration::make(first, second);
        } catch (const Error&) {
            continue;
        }
    }
}

/// Degree-4 only: every used 4-node line should have exactly three users
/// when the set has no maximal line.
inline UsageBoundReport used_four_node_line_report(const NodeSet& nodes) {
    require(nodes.degree() == 4, Errc::precondition,
            "used_four_node_line_report: defined for degree 4");
    const detail::UsageContext ctx = detail::usage_context(nodes);
    UsageBoundReport report{"used-four-node-lines", ctx.no_maximal_line, {}, {}};
    for (const CensusEntry& e : ctx.census.entries) {
        if (e.nodes.size() != 4) continue;
        LineUsageInfo info{e.line, 4, detail::users_of(ctx, e.line), {}};
        if (info.users.empty()) continue;
        if (report.no_maximal_line && info.users.size() != 3) report.violations.push_back(e.line);
        report.examined.push_back(std::move(info));
    }
    return report;
}

} // namespace gcn
