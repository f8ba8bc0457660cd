#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include <gcn/errors.hpp>

namespace gcn {

/// Arbitrary-precision integer and rational scalars. All arithmetic in this
/// library is exact; there is no floating-point computation path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Exact quotient of integers known to divide evenly.
inline Int exact_div(const Int& a, const Int& b) {
#ifndef NDEBUG
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) fail(Errc::precondition, "exact_div: inexact integer division");
    return q;
#else
    return a / b;
#endif
}

/// num/den as an exact rational; the denominator may be negative but not
/// zero (the underlying representation insists on positive denominators).
inline Rat make_rat(Int num, Int den) {
    require(den != 0, Errc::precondition, "make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

/// Renders "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Strict rational literal parser: `-?[0-9]+` or `-?[0-9]+/[0-9]+` with a
/// positive denominator. Anything else (including "1/0") is rejected.
inline Rat parse_rational(std::string_view text) {
    const auto bad = [&](const std::string& why) -> Rat {
        fail(Errc::parse_error, "malformed rational '" + std::string(text) + "': " + why);
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) return bad("expected digits");
    Int num(std::string(text.substr(num_begin, pos - num_begin)));
    if (negative) num = -num;
    if (pos == text.size()) return Rat(num);

    if (text[pos] != '/') return bad("unexpected character");
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_begin || pos != text.size()) return bad("expected denominator digits");
    Int den(std::string(text.substr(den_begin)));
    if (den == 0) return bad("zero denominator");
    return Rat(num, den);
}

} // namespace gcn
