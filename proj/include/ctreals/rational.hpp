#ifndef CTREALS_RATIONAL_HPP
#define CTREALS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace ctreals {

// Exact arithmetic throughout; no floating point anywhere in the kernel.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

/// Largest integer <= r.
Int rat_floor(const Rational& r);

/// Smallest integer >= r.
Int rat_ceil(const Rational& r);

/// Nearest integer to r; exact halves round up (towards +inf).
Int rat_round(const Rational& r);

Rational rat_abs(const Rational& r);

/// Least s >= 0 such that |r| <= 2^s.
long ceil_log2_abs(const Rational& r);

/// Lowest terms, "p/q" with "/1" omitted.
std::string rat_to_string(const Rational& r);

/// Accepts "p" and "p/q" with optional sign; empty result on malformed input.
std::optional<Rational> rat_from_string(const std::string& text);

}  // namespace ctreals

#endif
