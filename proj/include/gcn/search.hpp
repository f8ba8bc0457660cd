#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include <gcn/errors.hpp>
#include <gcn/gc.hpp>
#include <gcn/generate.hpp>

namespace gcn {

/// Relative weights of the candidate families fed into the search.
struct FamilyMix {
    std::uint32_t random_sets = 6;
    std::uint32_t perturbed_lattices = 3;
    std::uint32_t line_arrangements = 1;

    std::uint64_t total() const {
        return std::uint64_t(random_sets) + perturbed_lattices + line_arrangements;
    }
};

struct SearchConfig {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    int degree = 4;
    std::uint32_t coordinate_bound = 8;
    FamilyMix mix;
    unsigned jobs = 1; // parallelism only; never changes the report

    void validate() const {
        require(trials >= 1, Errc::bad_config, "search: trials must be >= 1");
        require(coordinate_bound >= 1, Errc::bad_config, "search: bound must be >= 1");
        require(degree >= 1, Errc::bad_config, "search: degree must be >= 1");
        require(mix.total() > 0, Errc::bad_config, "search: family weights are all zero");
        require(jobs >= 1, Errc::bad_config, "search: jobs must be >= 1");
    }
};

/// Tally of verdicts over all trials. counterexamples must stay zero; any
/// offending set is carried along for serialization. elapsed_seconds is
/// diagnostic only and is never part of the serialized report.
struct SearchReport {
    SearchConfig config;
    std::uint64_t generated = 0;
    std::uint64_t non_poised = 0;
    std::uint64_t poised_non_gc = 0;
    std::uint64_t gc_with_maximal_line = 0;
    std::uint64_t counterexamples = 0;
    std::vector<std::pair<std::uint64_t, NodeSet>> counterexample_sets; // (trial, set)
    double elapsed_seconds = 0.0;
};

namespace detail {

inline NodeSet search_candidate(const SearchConfig& config, SplitMix64& rng) {
    const std::uint64_t pick = rng.below(config.mix.total());
    if (pick < config.mix.random_sets)
        return random_node_set(config.degree, rng, config.coordinate_bound);
    if (pick < std::uint64_t(config.mix.random_sets) + config.mix.perturbed_lattices)
        return perturbed_lattice(config.degree, rng, config.coordinate_bound);
    return chung_yao_lattice(config.degree,
                             random_arrangement(config.degree, rng, config.coordinate_bound));
}

inline void run_trials(const SearchConfig& config, std::uint64_t begin, std::uint64_t end,
                       SearchReport& report) {
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        SplitMix64 rng{derive_seed(config.seed, trial)};
        const NodeSet candidate = search_candidate(config, rng);
        const GascaMaeztuVerdict verdict = gasca_maeztu_check(candidate);
        ++report.generated;
        switch (verdict.status) {
            case GascaMaeztuStatus::not_poised: ++report.non_poised; break;
            case GascaMaeztuStatus::not_gc: ++report.poised_non_gc; break;
            case GascaMaeztuStatus::confirmed_maximal_line: ++report.gc_with_maximal_line; break;
            case GascaMaeztuStatus::counterexample:
                ++report.counterexamples;
                report.counterexample_sets.emplace_back(trial, candidate);
                break;
        }
    }
}

} // namespace detail

/// Seed-deterministic randomized probe of the conjecture: generates
/// candidate sets across the family mix and tallies gasca_maeztu_check
/// verdicts. Identical configs give identical reports regardless of the
/// job count, since every trial derives its own generator stream.
inline SearchReport counterexample_search(const SearchConfig& config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    SearchReport report;
    report.config = config;

    const unsigned jobs =
        static_cast<unsigned>(std::min<std::uint64_t>(config.jobs, config.trials));
    if (jobs <= 1) {
        detail::run_trials(config, 0, config.trials, report);
    } else {
        std::vector<SearchReport> parts(jobs);
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        const std::uint64_t chunk = (config.trials + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            const std::uint64_t begin = std::uint64_t(w) * chunk;
            const std::uint64_t end = std::min(config.trials, begin + chunk);
            threads.emplace_back([&config, begin, end, &part = parts[w]] {
                detail::run_trials(config, begin, end, part);
            });
        }
        for (std::thread& t : threads) t.join();
        for (SearchReport& part : parts) {
            report.generated += part.generated;
            report.non_poised += part.non_poised;
            report.poised_non_gc += part.poised_non_gc;
            report.gc_with_maximal_line += part.gc_with_maximal_line;
            report.counterexamples += part.counterexamples;
            for (auto& hit : part.counterexample_sets)
                report.counterexample_sets.push_back(std::move(hit));
        }
        std::sort(report.counterexample_sets.begin(), report.counterexample_sets.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace gcn
