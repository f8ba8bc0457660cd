#pragma once

#include <stdexcept>
#include <string>

namespace gcn {

/// Classified failure reasons. Usage errors map to CLI exit code 1,
/// everything else below is a precondition violation (exit code 2).
enum class Errc {
    // usage / input
    parse_error,
    unknown_family,
    unknown_suite,
    // preconditions
    identical_points,
    duplicate_nodes,
    wrong_cardinality,
    not_poised,
    not_gc,
    degree_overflow,
    degenerate_arrangement,
    degenerate_configuration,
    batch_violation,
    singular_matrix,
    index_out_of_range,
    bad_config,
    precondition,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

    bool is_usage_error() const noexcept {
        return code_ == Errc::parse_error || code_ == Errc::unknown_family ||
               code_ == Errc::unknown_suite;
    }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace gcn
