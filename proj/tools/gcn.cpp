// Command-line front end: analyze / generate / verify / search / render.
//
// Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
// 3 counterexample (or verifier failure) found.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gcn/gcn.hpp>
#include <gcn/io.hpp>
#include <gcn/svg.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitCounterexample = 3;

gcn::NodeSet load_nodes(const std::string& input) {
    if (input.empty() || input == "-") return gcn::parse_node_set(std::cin, "<stdin>");
    return gcn::parse_node_set_file(input);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    gcn::require(out.good(), gcn::Errc::parse_error, out_path + ": cannot open for writing");
    out << content;
}

int run_analyze(const std::string& input, const std::string& out_path) {
    const gcn::NodeSet nodes = load_nodes(input);
    const gcn::SetAnalysis analysis = gcn::analyze_set(nodes);
    emit(out_path, gcn::analysis_to_json(nodes, analysis).dump(2) + "\n");
    return analysis.verdict.status == gcn::GascaMaeztuStatus::counterexample ? kExitCounterexample
                                                                          : kExitOk;
}

int run_generate(const std::string& family, int degree, std::uint64_t seed, std::uint32_t bound,
                 const std::string& out_path) {
    gcn::SplitMix64 rng{gcn::derive_seed(seed, 0)};
    gcn::NodeSet nodes = [&]() -> gcn::NodeSet {
        if (family == "principal") return gcn::principal_lattice(degree);
        if (family == "chung-yao")
            return gcn::chung_yao_lattice(degree, gcn::random_arrangement(degree, rng, bound));
        if (family == "berzolari-radon") return gcn::random_berzolari_radon(degree, rng, bound);
        if (family == "random") return gcn::random_node_set(degree, rng, bound);
        gcn::fail(gcn::Errc::unknown_family,
                  "unknown family '" + family +
                      "' (expected principal, chung-yao, berzolari-radon or random)");
    }();
    emit(out_path, gcn::format_node_set(nodes));
    return kExitOk;
}

int run_search(const gcn::SearchConfig& config, const std::string& out_path) {
    const gcn::SearchReport report = gcn::counterexample_search(config);
    emit(out_path, gcn::search_report_to_json(report).dump(2) + "\n");
    std::cerr << "search: " << report.generated << " trials in " << report.elapsed_seconds
              << " s\n";
    return report.counterexamples == 0 ? kExitOk : kExitCounterexample;
}

int run_render(const std::string& input, const std::string& out_path) {
    const gcn::NodeSet nodes = load_nodes(input);
    gcn::LineCensus census;
    std::vector<gcn::Line> maximal;
    if (nodes.size() >= 2) {
        census = gcn::candidate_lines(nodes);
        maximal = gcn::maximal_lines(nodes, census);
    }
    emit(out_path, gcn::render_svg(nodes, census, maximal));
    return kExitOk;
}

// ---- verification suites -------------------------------------------------

struct SuiteResult {
    std::size_t passed = 0;
    std::size_t total = 0;

    void tally(bool ok) {
        ++total;
        if (ok) ++passed;
    }
    bool all_passed() const { return passed == total; }
};

SuiteResult suite_bezout(std::uint64_t seed, std::size_t count) {
    SuiteResult r;
    for (std::size_t i = 0; i < count; ++i) {
        gcn::SplitMix64 rng{gcn::derive_seed(seed, i)};
        const int degree = 2 + static_cast<int>(i % 3);
        const gcn::BezoutInstance inst = gcn::random_bezout_instance(degree, rng, 8);
        r.tally(gcn::verify_bezout(inst.p, inst.l, inst.line_points));
    }
    return r;
}

SuiteResult suite_cayley_bacharach(std::uint64_t seed, std::size_t count) {
    SuiteResult r;
    for (std::size_t i = 0; i < count; ++i) {
        gcn::SplitMix64 rng{gcn::derive_seed(seed, i)};
        r.tally(gcn::verify_cayley_bacharach(gcn::random_cb_configuration(rng, 8)));
    }
    return r;
}

bool report_clean(const gcn::UsageBoundReport& report) {
    // bound violations are only claimed when no maximal line exists
    return !report.no_maximal_line || report.violations.empty();
}

SuiteResult suite_lemmas(std::uint64_t seed, std::size_t count) {
    SuiteResult r;
    for (int n = 1; n <= 4; ++n) {
        const gcn::NodeSet nodes = gcn::principal_lattice(n);
        r.tally(report_clean(gcn::small_line_usage_report(nodes)));
        r.tally(report_clean(gcn::four_node_line_usage_report(nodes)));
        if (n == 4) r.tally(report_clean(gcn::used_four_node_line_report(nodes)));
    }
    for (std::size_t i = 0; i < count; ++i) {
        gcn::SplitMix64 rng{gcn::derive_seed(seed, 1000 + i)};
        const gcn::NodeSet nodes =
            gcn::chung_yao_lattice(4, gcn::random_arrangement(4, rng, 8));
        r.tally(report_clean(gcn::small_line_usage_report(nodes)));
        r.tally(report_clean(gcn::four_node_line_usage_report(nodes)));
        r.tally(report_clean(gcn::used_four_node_line_report(nodes)));
        // structural fact: exactly 6 used lines, 10 users each
        const std::vector<gcn::UsageRecord> usage = gcn::usage_census(nodes);
        bool structural = usage.size() == 6;
        for (const gcn::UsageRecord& u : usage) structural = structural && u.users.size() == 10;
        r.tally(structural);
    }
    return r;
}

SuiteResult suite_invariants(std::uint64_t seed, std::size_t count) {
    SuiteResult r;
    for (std::size_t i = 0; i < count; ++i) {
        gcn::SplitMix64 rng{gcn::derive_seed(seed, 5000 + i)};
        const int degree = 1 + static_cast<int>(i % 3);

        // canonical form is idempotent; line_through is symmetric
        const gcn::Line l = gcn::random_line(rng, 8);
        r.tally(gcn::Line::from_coefficients(gcn::Rat(l.a), gcn::Rat(l.b), gcn::Rat(l.c)) == l);
        const gcn::Point p = gcn::random_point(rng, 8), q = gcn::random_point(rng, 8);
        if (!(p == q)) r.tally(gcn::line_through(p, q) == gcn::line_through(q, p));

        // multiply then divide round-trips
        gcn::Poly2 poly(degree - 1);
        for (int d = 0; d <= degree - 1; ++d)
            for (int j = 0; j <= d; ++j) poly.at(d - j, j) = gcn::random_rational(rng, 8);
        const auto quotient = gcn::divide_by_line(gcn::multiply_linear(poly, l), l);
        r.tally(quotient.has_value() && *quotient == poly);

        // interpolation reproduces polynomial data; fundamentals sum to 1
        const gcn::NodeSet nodes = gcn::random_poised_set(degree, rng, 6);
        std::vector<gcn::Rat> data;
        gcn::Poly2 target(degree);
        for (int d = 0; d <= degree; ++d)
            for (int j = 0; j <= d; ++j) target.at(d - j, j) = gcn::random_rational(rng, 8);
        for (const gcn::Point& node : nodes.nodes()) data.push_back(target.evaluate(node));
        r.tally(gcn::interpolate(nodes, data) == target);

        gcn::FundamentalSolver solver(nodes);
        gcn::Poly2 sum(degree);
        for (std::size_t k = 0; k < nodes.size(); ++k) sum += solver.fundamental(k);
        r.tally(sum == gcn::Poly2::constant(degree, 1));

        // census covers every node pair exactly once
        const gcn::LineCensus census = gcn::candidate_lines(nodes);
        std::size_t pairs = 0;
        for (const gcn::CensusEntry& e : census.entries)
            pairs += e.nodes.size() * (e.nodes.size() - 1) / 2;
        r.tally(pairs == nodes.size() * (nodes.size() - 1) / 2);
    }
    return r;
}

int run_verify(const std::string& suite, std::uint64_t seed, std::size_t count) {
    SuiteResult r;
    if (suite == "bezout") r = suite_bezout(seed, count);
    else if (suite == "cayley-bacharach") r = suite_cayley_bacharach(seed, count);
    else if (suite == "lemmas") r = suite_lemmas(seed, count);
    else if (suite == "invariants") r = suite_invariants(seed, count);
    else
        gcn::fail(gcn::Errc::unknown_suite,
                  "unknown suite '" + suite +
                      "' (expected bezout, cayley-bacharach, lemmas or invariants)");
    std::cout << suite << ": " << r.passed << "/" << r.total << " pass\n";
    return r.all_passed() ? kExitOk : kExitCounterexample;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bivariate interpolation and node-line structure analysis"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string out_path;
    std::string family = "principal";
    std::string suite;
    int degree = 4;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    std::uint32_t bound = 8;
    unsigned jobs = 1;
    std::size_t count = 100;
    gcn::FamilyMix mix;

    CLI::App* analyze = app.add_subcommand("analyze", "full structure report for a node-set file");
    analyze->add_option("input", input, "node-set file, or - for stdin")->capture_default_str();
    analyze->add_option("--out", out_path, "write output here instead of stdout");

    CLI::App* generate = app.add_subcommand("generate", "emit a node-set file for a known family");
    generate->add_option("--family", family, "principal, chung-yao, berzolari-radon or random")
        ->capture_default_str();
    generate->add_option("--degree", degree, "interpolation degree n")->capture_default_str();
    generate->add_option("--seed", seed, "generator seed")->capture_default_str();
    generate->add_option("--bound", bound, "coordinate magnitude cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--out", out_path, "write output here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "bezout, cayley-bacharach, lemmas or invariants")
        ->required();
    verify->add_option("--seed", seed, "suite seed")->capture_default_str();
    verify->add_option("--count", count, "instance count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* search = app.add_subcommand("search", "randomized counterexample search");
    search->add_option("--trials", trials, "number of candidate sets")
        ->check(CLI::Range(std::uint64_t(1), std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    search->add_option("--seed", seed, "search seed")->capture_default_str();
    search->add_option("--degree", degree, "interpolation degree n")->capture_default_str();
    search->add_option("--bound", bound, "coordinate magnitude cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    search->add_option("--jobs", jobs, "worker threads (output is identical for any value)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    search->add_option("--mix-random", mix.random_sets, "weight of random 15-point candidates")
        ->capture_default_str();
    search->add_option("--mix-perturbed", mix.perturbed_lattices,
                       "weight of perturbed-lattice candidates")
        ->capture_default_str();
    search
        ->add_option("--mix-arrangement", mix.line_arrangements,
                     "weight of line-arrangement candidates")
        ->capture_default_str();
    search->add_option("--out", out_path, "write output here instead of stdout");

    CLI::App* render = app.add_subcommand("render", "SVG picture of a node-set file");
    render->add_option("input", input, "node-set file, or - for stdin")->capture_default_str();
    render->add_option("--out", out_path, "write output here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze(input, out_path);
        if (generate->parsed()) return run_generate(family, degree, seed, bound, out_path);
        if (verify->parsed()) return run_verify(suite, seed, count);
        if (search->parsed()) {
            gcn::SearchConfig config;
            config.seed = seed;
            config.trials = trials;
            config.degree = degree;
            config.coordinate_bound = bound;
            config.mix = mix;
            config.jobs = jobs;
            return run_search(config, out_path);
        }
        if (render->parsed()) return run_render(input, out_path);
    } catch (const gcn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_usage_error() ? kExitUsage : kExitPrecondition;
    }
    return kExitUsage;
}
