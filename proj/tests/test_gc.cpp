#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include <gcn/gc.hpp>
#include <gcn/generate.hpp>
#include <gcn/verify.hpp>

#include "oracles.hpp"

using namespace gcn;

namespace {

Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }

NodeSet triangle() { return NodeSet(1, {pt(0, 0), pt(1, 0), pt(0, 1)}); }

/// Five rational points of the unit circle plus one point off it: poised,
/// but the off-conic node's fundamental polynomial is an irreducible conic.
NodeSet five_on_a_conic() {
    return NodeSet(2, {pt(1, 0), pt(0, 1), pt(-1, 0),
                       Point{Rat(Int(3), Int(5)), Rat(Int(4), Int(5))},
                       Point{Rat(Int(-3), Int(5)), Rat(Int(-4), Int(5))}, pt(2, 0)});
}

} // namespace

TEST_CASE("candidate_lines") {
    SECTION("triangle: three 2-node lines") {
        const LineCensus census = candidate_lines(triangle());
        CHECK(census.entries.size() == 3);
        for (const CensusEntry& e : census.entries) CHECK(e.nodes.size() == 2);
    }
    SECTION("collinear triple: one 3-node line") {
        const LineCensus census = candidate_lines(NodeSet(1, {pt(0, 0), pt(1, 1), pt(2, 2)}));
        REQUIRE(census.entries.size() == 1);
        CHECK(census.entries[0].line == Line{1, -1, 0});
        CHECK(census.entries[0].nodes.size() == 3);
    }
    SECTION("principal lattice n=2: exactly three 3-node lines") {
        const LineCensus census = candidate_lines(principal_lattice(2));
        std::vector<Line> three_node;
        for (const CensusEntry& e : census.entries) {
            CHECK((e.nodes.size() == 2 || e.nodes.size() == 3));
            if (e.nodes.size() == 3) three_node.push_back(e.line);
        }
        CHECK(three_node == std::vector<Line>{{0, 1, 0}, {1, 0, 0}, {1, 1, -2}});
    }
    SECTION("matches pair enumeration on random sets") {
        SplitMix64 rng{307};
        for (int i = 0; i < 6; ++i) {
            const NodeSet nodes = random_node_set(2 + static_cast<int>(i % 2), rng, 5);
            const LineCensus census = candidate_lines(nodes);
            const auto reference = oracle::enumerate_pair_lines(nodes);
            REQUIRE(census.entries.size() == reference.size());
            for (const CensusEntry& e : census.entries) {
                auto it = reference.find(e.line);
                REQUIRE(it != reference.end());
                CHECK(e.nodes == it->second);
            }
            // every pair covered exactly once
            std::size_t pairs = 0;
            for (const CensusEntry& e : census.entries)
                pairs += e.nodes.size() * (e.nodes.size() - 1) / 2;
            CHECK(pairs == nodes.size() * (nodes.size() - 1) / 2);
        }
    }
    SECTION("needs two nodes") {
        CHECK_THROWS_AS(candidate_lines(NodeSet(0, {pt(0, 0)})), Error);
    }
}

TEST_CASE("maximal_lines") {
    SECTION("natural lattice: the construction lines, five nodes each") {
        SplitMix64 rng{311};
        const std::vector<Line> lines = random_arrangement(4, rng, 8);
        const NodeSet nodes = chung_yao_lattice(4, lines);
        std::vector<Line> expected = lines;
        std::sort(expected.begin(), expected.end());
        CHECK(maximal_lines(nodes) == expected);
    }
    SECTION("triangle: every edge carries n+1 = 2 nodes") {
        CHECK(maximal_lines(triangle()).size() == 3);
    }
    SECTION("random poised degree-4 set: none") {
        SplitMix64 rng{313};
        const NodeSet nodes = random_poised_set(4, rng, 8);
        CHECK(maximal_lines(nodes).empty());
    }
}

TEST_CASE("uses") {
    const NodeSet tri = triangle();
    const Line hyp = line_through(pt(1, 0), pt(0, 1));
    CHECK(uses(tri, 0, hyp));
    CHECK_FALSE(uses(tri, 0, Line{0, 1, 0})); // p(x,0) = 1 - x, not identically 0

    SECTION("construction lines off a node are used by it") {
        SplitMix64 rng{401};
        const std::vector<Line> lines = random_arrangement(4, rng, 8);
        const NodeSet nodes = chung_yao_lattice(4, lines);
        // node 0 sits on lines[0] and lines[1]; it uses the other four
        for (std::size_t k = 2; k < lines.size(); ++k) CHECK(uses(nodes, 0, lines[k]));
        CHECK_FALSE(uses(nodes, 0, lines[0]));
    }
    SECTION("agrees with the sample-point oracle on a natural lattice") {
        SplitMix64 rng{317};
        const NodeSet nodes = chung_yao_lattice(4, random_arrangement(4, rng, 8));
        FundamentalSolver solver(nodes);
        const LineCensus census = candidate_lines(nodes);
        for (std::size_t a = 0; a < nodes.size(); ++a) {
            const Poly2& p = solver.fundamental(a);
            for (const CensusEntry& e : census.entries)
                CHECK(line_divides(p, e.line) ==
                      oracle::vanishes_at_line_samples(p, e.line));
        }
    }
    SECTION("not poised") {
        CHECK_THROWS_AS(uses(NodeSet(1, {pt(0, 0), pt(1, 1), pt(2, 2)}), 0, Line{0, 1, 0}),
                        Error);
    }
}

TEST_CASE("gc_witness") {
    SECTION("triangle: single factor with scale -1") {
        const auto w = gc_witness(triangle(), 0);
        REQUIRE(w.has_value());
        CHECK(w->factors == std::vector<Line>{{1, 1, -1}});
        CHECK(w->scale == -1);
    }
    SECTION("natural lattice: the four construction lines not through the node") {
        SplitMix64 rng{331};
        const std::vector<Line> lines = random_arrangement(4, rng, 8);
        const NodeSet nodes = chung_yao_lattice(4, lines);
        FundamentalSolver solver(nodes);
        std::size_t node = 0;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            for (std::size_t j = i + 1; j < lines.size(); ++j, ++node) {
                const auto w = gc_witness(nodes, node);
                REQUIRE(w.has_value());
                std::vector<Line> expected;
                for (std::size_t k = 0; k < lines.size(); ++k)
                    if (k != i && k != j) expected.push_back(lines[k]);
                std::sort(expected.begin(), expected.end());
                CHECK(w->factors == expected);
                // scale * product equals the solver's fundamental polynomial
                Poly2 product = Poly2::constant(0, w->scale);
                for (const Line& l : w->factors) product = multiply_linear(product, l);
                CHECK(product == solver.fundamental(node));
            }
        }
    }
    SECTION("an irreducible conic fundamental polynomial has no witness") {
        const NodeSet nodes = five_on_a_conic();
        REQUIRE(is_poised(nodes));
        CHECK_FALSE(gc_witness(nodes, 5).has_value());
    }
}

TEST_CASE("is_gc_set") {
    for (int n = 1; n <= 4; ++n) {
        const GcResult r = is_gc_set(principal_lattice(n));
        CHECK(r.gc);
        CHECK(r.witnesses.size() == static_cast<std::size_t>(dimension(n)));
    }
    SECTION("natural lattice") {
        SplitMix64 rng{337};
        CHECK(is_gc_set(chung_yao_lattice(4, random_arrangement(4, rng, 8))).gc);
    }
    SECTION("conic counterexample") {
        const GcResult r = is_gc_set(five_on_a_conic());
        CHECK_FALSE(r.gc);
        CHECK(r.failing_node.has_value());
    }
    SECTION("not poised") {
        CHECK_THROWS_AS(is_gc_set(NodeSet(1, {pt(0, 0), pt(1, 1), pt(2, 2)})), Error);
    }
}

TEST_CASE("witness invariants on corpus sets") {
    SplitMix64 rng{347};
    std::vector<NodeSet> corpus;
    corpus.push_back(principal_lattice(2));
    corpus.push_back(principal_lattice(3));
    corpus.push_back(chung_yao_lattice(3, random_arrangement(3, rng, 8)));
    for (const NodeSet& nodes : corpus) {
        const GcResult r = is_gc_set(nodes);
        REQUIRE(r.gc);
        FundamentalSolver solver(nodes);
        for (const FactorizationWitness& w : r.witnesses) {
            // scale times factor product reproduces the fundamental polynomial
            Poly2 product = Poly2::constant(0, w.scale);
            for (const Line& l : w.factors) product = multiply_linear(product, l);
            CHECK(product == solver.fundamental(w.owner));
            // no factor through the owner; factors cover all other nodes
            std::vector<bool> covered(nodes.size(), false);
            for (const Line& l : w.factors) {
                CHECK_FALSE(incident(l, nodes[w.owner]));
                for (std::size_t k = 0; k < nodes.size(); ++k)
                    if (incident(l, nodes[k])) covered[k] = true;
            }
            for (std::size_t k = 0; k < nodes.size(); ++k)
                CHECK(covered[k] == (k != w.owner));
            // each factor carries >= 2 nodes off the other factors
            for (std::size_t fi = 0; fi < w.factors.size(); ++fi) {
                int exclusive = 0;
                for (std::size_t k = 0; k < nodes.size(); ++k) {
                    if (!incident(w.factors[fi], nodes[k])) continue;
                    bool on_other = false;
                    for (std::size_t fj = 0; fj < w.factors.size(); ++fj)
                        if (fj != fi && incident(w.factors[fj], nodes[k])) on_other = true;
                    if (!on_other) ++exclusive;
                }
                CHECK(exclusive >= 2);
            }
        }
    }
}

TEST_CASE("usage_census") {
    SECTION("triangle: each edge used by the opposite vertex") {
        const auto usage = usage_census(triangle());
        REQUIRE(usage.size() == 3);
        for (const UsageRecord& r : usage) {
            REQUIRE(r.users.size() == 1);
            CHECK_FALSE(incident(r.line, triangle()[r.users[0]]));
        }
    }
    SECTION("natural lattice: six lines, ten users each") {
        SplitMix64 rng{349};
        const NodeSet nodes = chung_yao_lattice(4, random_arrangement(4, rng, 8));
        const auto usage = usage_census(nodes);
        REQUIRE(usage.size() == 6);
        for (const UsageRecord& r : usage) CHECK(r.users.size() == 10);
    }
    SECTION("principal lattice n=2: the far edge is used by the inner triangle") {
        const auto usage = usage_census(principal_lattice(2));
        const auto it = std::find_if(usage.begin(), usage.end(), [](const UsageRecord& r) {
            return r.line == Line{1, 1, -2};
        });
        REQUIRE(it != usage.end());
        CHECK(it->users == std::vector<std::size_t>{0, 1, 2});
    }
    SECTION("not a GC set") {
        CHECK_THROWS_MATCHES(usage_census(five_on_a_conic()), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.code() == Errc::not_gc;
                             }));
    }
}

TEST_CASE("used_line_profile") {
    CHECK(used_line_profile(triangle(), 0) == std::vector<int>{2});
    CHECK(used_line_profile(triangle(), 2) == std::vector<int>{2});

    SECTION("natural lattice: every factor is a maximal line") {
        SplitMix64 rng{353};
        const NodeSet nodes = chung_yao_lattice(4, random_arrangement(4, rng, 8));
        CHECK(used_line_profile(nodes, 0) == std::vector<int>{5, 5, 5, 5});
        CHECK(used_line_profile(nodes, 14) == std::vector<int>{5, 5, 5, 5});
    }
    SECTION("principal lattice n=4, corner node: staircase counts") {
        CHECK(used_line_profile(principal_lattice(4), 0) == std::vector<int>{5, 4, 3, 2});
    }
    SECTION("not GC") {
        CHECK_THROWS_AS(used_line_profile(five_on_a_conic(), 5), Error);
    }
}

TEST_CASE("gasca_maeztu_check") {
    SECTION("natural lattice: confirmed with six maximal lines") {
        SplitMix64 rng{359};
        const NodeSet nodes = chung_yao_lattice(4, random_arrangement(4, rng, 8));
        const GascaMaeztuVerdict v = gasca_maeztu_check(nodes);
        CHECK(v.status == GascaMaeztuStatus::confirmed_maximal_line);
        CHECK(v.maximal.size() == 6);
    }
    SECTION("principal lattice n=4: confirmed, edges included") {
        const GascaMaeztuVerdict v = gasca_maeztu_check(principal_lattice(4));
        CHECK(v.status == GascaMaeztuStatus::confirmed_maximal_line);
        const std::vector<Line> edges = {{0, 1, 0}, {1, 0, 0}, {1, 1, -4}};
        for (const Line& e : edges)
            CHECK(std::find(v.maximal.begin(), v.maximal.end(), e) != v.maximal.end());
    }
    SECTION("poised non-GC: not-gc verdict") {
        const GascaMaeztuVerdict v = gasca_maeztu_check(five_on_a_conic());
        CHECK(v.status == GascaMaeztuStatus::not_gc);
        CHECK(v.failing_node.has_value());
    }
    SECTION("degenerate raw-point input: not poised") {
        std::vector<Point> pts;
        for (int i = 0; i < 15; ++i) pts.push_back(pt(i % 7, i / 7));
        pts[14] = pts[0]; // coincident pair
        CHECK(gasca_maeztu_check(4, pts).status == GascaMaeztuStatus::not_poised);
        CHECK(gasca_maeztu_check(4, std::vector<Point>(pts.begin(), pts.begin() + 14)).status ==
              GascaMaeztuStatus::not_poised);
        // wrong cardinality is a verdict, not an error
        CHECK(gasca_maeztu_check(NodeSet(4, {pt(0, 0), pt(1, 0)})).status ==
              GascaMaeztuStatus::not_poised);
    }
}

TEST_CASE("witnesses are affine equivariant") {
    SplitMix64 rng{367};
    const AffineMap map{Rat(2), Rat(1), Rat(-1), Rat(1), Rat(Int(1), Int(3)), Rat(5)};
    for (const NodeSet& nodes :
         {principal_lattice(2), chung_yao_lattice(3, random_arrangement(3, rng, 8))}) {
        const NodeSet image = affine_transform(nodes, map);
        const GcResult before = is_gc_set(nodes);
        const GcResult after = is_gc_set(image);
        REQUIRE(before.gc);
        REQUIRE(after.gc);
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            std::vector<Line> mapped;
            for (const Line& l : before.witnesses[k].factors)
                mapped.push_back(transform_line(map, l));
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped == after.witnesses[k].factors);
        }
    }
}
