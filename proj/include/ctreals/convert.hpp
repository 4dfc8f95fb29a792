#ifndef CTREALS_CONVERT_HPP
#define CTREALS_CONVERT_HPP

#include <utility>
#include <vector>

#include "ctreals/digits.hpp"
#include "ctreals/interval_stream.hpp"

namespace ctreals {

/// Re-represents an extensional real intensionally: the result decodes to
/// the same real at every precision.
DigitStream from_intervals(const IntervalStream& x);

/// Prefix hulls of a digit stream form a shrinking interval chain;
/// the answer at precision p is the hull of the length-(p+1) prefix.
IntervalStream to_intervals(const DigitStream& x);

/// c + sum of coeff_i * value_i, exact: the result decodes to the affine
/// combination within 2^-p at every p.
DigitStream affine(const Rational& c,
                   const std::vector<std::pair<Rational, DigitStream>>& terms);

}  // namespace ctreals

#endif
