#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include <gcn/gc.hpp>
#include <gcn/generate.hpp>
#include <gcn/search.hpp>

using namespace gcn;

namespace {
Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }
} // namespace

TEST_CASE("chung_yao_lattice") {
    SECTION("three lines, degree 1") {
        const NodeSet nodes =
            chung_yao_lattice(1, {Line{1, 0, 0}, Line{0, 1, 0}, Line{1, 1, -2}});
        REQUIRE(nodes.size() == 3);
        std::vector<Point> got = nodes.nodes();
        std::vector<Point> expected = {pt(0, 0), pt(0, 2), pt(2, 0)};
        for (const Point& p : expected)
            CHECK(std::find(got.begin(), got.end(), p) != got.end());
    }
    SECTION("six generic lines give a GC_4 set") {
        SplitMix64 rng{501};
        const NodeSet nodes = chung_yao_lattice(4, random_arrangement(4, rng, 8));
        REQUIRE(nodes.size() == 15);
        CHECK(is_poised(nodes));
        CHECK(is_gc_set(nodes).gc);
    }
    SECTION("parallel lines are rejected") {
        CHECK_THROWS_MATCHES(
            chung_yao_lattice(1, {Line{1, 0, 0}, Line{1, 0, -1}, Line{0, 1, 0}}), Error,
            Catch::Matchers::Predicate<Error>(
                [](const Error& e) { return e.code() == Errc::degenerate_arrangement; }));
    }
    SECTION("concurrent triples are rejected") {
        CHECK_THROWS_AS(chung_yao_lattice(1, {Line{1, 0, 0}, Line{0, 1, 0}, Line{1, 1, 0}}),
                        Error);
    }
}

TEST_CASE("principal_lattice") {
    CHECK(principal_lattice(1).nodes() == std::vector<Point>{pt(0, 0), pt(1, 0), pt(0, 1)});
    CHECK(is_gc_set(principal_lattice(2)).gc);
    CHECK(gasca_maeztu_check(principal_lattice(4)).status == GascaMaeztuStatus::confirmed_maximal_line);
}

TEST_CASE("berzolari_radon") {
    SECTION("two points on the axis plus one off it") {
        const NodeSet nodes = berzolari_radon(
            1, {Line{0, 1, 0}, Line{0, 1, -1}}, {{pt(0, 0), pt(1, 0)}, {pt(2, 1)}});
        CHECK(nodes.size() == 3);
        CHECK(is_poised(nodes));
    }
    SECTION("random layered sets are always poised") {
        SplitMix64 rng{503};
        for (int i = 0; i < 8; ++i) {
            const int n = 1 + static_cast<int>(rng.below(3));
            CHECK(is_poised(random_berzolari_radon(n, rng, 8)));
        }
    }
    SECTION("batch violations") {
        // second-batch point sits on the first line too
        CHECK_THROWS_MATCHES(
            berzolari_radon(1, {Line{0, 1, 0}, Line{1, 0, 0}}, {{pt(2, 0), pt(1, 0)}, {pt(0, 0)}}),
            Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                return e.code() == Errc::batch_violation;
            }));
        // wrong batch size
        CHECK_THROWS_AS(
            berzolari_radon(1, {Line{0, 1, 0}, Line{0, 1, -1}}, {{pt(0, 0)}, {pt(2, 1)}}),
            Error);
        // point off its own line
        CHECK_THROWS_AS(berzolari_radon(1, {Line{0, 1, 0}, Line{0, 1, -1}},
                                        {{pt(0, 0), pt(1, 1)}, {pt(2, 1)}}),
                        Error);
    }
}

TEST_CASE("affine_transform") {
    const AffineMap identity{Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)};
    const NodeSet tri = principal_lattice(1);
    CHECK(affine_transform(tri, identity) == tri);

    const AffineMap doubling{Rat(2), Rat(0), Rat(0), Rat(2), Rat(0), Rat(0)};
    CHECK(affine_transform(tri, doubling).nodes() ==
          std::vector<Point>{pt(0, 0), pt(2, 0), pt(0, 2)});

    SECTION("shear preserves the GC property") {
        SplitMix64 rng{509};
        const NodeSet nodes = chung_yao_lattice(3, random_arrangement(3, rng, 8));
        const AffineMap shear{Rat(1), Rat(1), Rat(0), Rat(1), Rat(0), Rat(0)};
        CHECK(is_gc_set(affine_transform(nodes, shear)).gc);
    }
    SECTION("singular matrix is rejected") {
        const AffineMap flat{Rat(1), Rat(2), Rat(2), Rat(4), Rat(0), Rat(0)};
        CHECK_THROWS_MATCHES(affine_transform(tri, flat), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.code() == Errc::singular_matrix;
                             }));
    }
    SECTION("line transform tracks point transform") {
        SplitMix64 rng{521};
        const AffineMap map{Rat(3), Rat(1), Rat(-2), Rat(1), Rat(7), Rat(Int(1), Int(4))};
        for (int i = 0; i < 40; ++i) {
            const Point p = random_point(rng, 8), q = random_point(rng, 8);
            if (p == q) continue;
            CHECK(transform_line(map, line_through(p, q)) ==
                  line_through(map.apply(p), map.apply(q)));
        }
    }
}

TEST_CASE("random generation is seed-deterministic") {
    SplitMix64 a{99}, b{99}, c{100};
    CHECK(random_node_set(4, a, 8) == random_node_set(4, b, 8));
    CHECK_FALSE(random_node_set(4, a, 8) == random_node_set(4, c, 8));

    SECTION("rational draws respect the bound") {
        SplitMix64 rng{77};
        for (int i = 0; i < 300; ++i) {
            const Rat r = random_rational(rng, 8);
            CHECK(abs(numerator(r)) <= 8 * denominator(r));
            CHECK(denominator(r) <= 8);
        }
    }
}

TEST_CASE("perturbed lattices stay valid input sets") {
    SplitMix64 rng{523};
    for (int i = 0; i < 6; ++i) {
        const NodeSet nodes = perturbed_lattice(4, rng, 8);
        CHECK(nodes.size() == 15);
        CHECK(nodes.degree() == 4);
    }
}

TEST_CASE("counterexample_search") {
    SearchConfig config;
    config.seed = 42;
    config.trials = 40;
    config.degree = 3;
    config.coordinate_bound = 6;

    const SearchReport report = counterexample_search(config);
    CHECK(report.generated == 40);
    CHECK(report.non_poised + report.poised_non_gc + report.gc_with_maximal_line +
              report.counterexamples ==
          report.generated);
    CHECK(report.counterexamples == 0);

    SECTION("bit-identical across repeat runs and job counts") {
        SearchConfig parallel = config;
        parallel.jobs = 2;
        const SearchReport again = counterexample_search(config);
        const SearchReport threaded = counterexample_search(parallel);
        for (const SearchReport* other : {&again, &threaded}) {
            CHECK(report.generated == other->generated);
            CHECK(report.non_poised == other->non_poised);
            CHECK(report.poised_non_gc == other->poised_non_gc);
            CHECK(report.gc_with_maximal_line == other->gc_with_maximal_line);
            CHECK(report.counterexamples == other->counterexamples);
        }
    }
    SECTION("arrangement-only mix confirms every trial") {
        SearchConfig arrangements = config;
        arrangements.trials = 10;
        arrangements.mix = FamilyMix{0, 0, 1};
        const SearchReport r = counterexample_search(arrangements);
        CHECK(r.gc_with_maximal_line == 10);
    }
    SECTION("random-only candidates are almost never GC") {
        SearchConfig randoms = config;
        randoms.trials = 30;
        randoms.mix = FamilyMix{1, 0, 0};
        const SearchReport r = counterexample_search(randoms);
        CHECK(r.counterexamples == 0);
        CHECK(r.poised_non_gc + r.non_poised == r.generated);
    }
    SECTION("config validation") {
        SearchConfig bad = config;
        bad.trials = 0;
        CHECK_THROWS_MATCHES(counterexample_search(bad), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.code() == Errc::bad_config;
                             }));
        SearchConfig zeros = config;
        zeros.mix = FamilyMix{0, 0, 0};
        CHECK_THROWS_AS(counterexample_search(zeros), Error);
    }
}
