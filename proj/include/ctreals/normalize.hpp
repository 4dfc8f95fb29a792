#ifndef CTREALS_NORMALIZE_HPP
#define CTREALS_NORMALIZE_HPP

#include "ctreals/digits.hpp"

namespace ctreals {

/// The stream normalizer: represents the identity on the reals, and maps
/// every representation of an integer n to the canonical one, head n
/// followed by zeros. (The integer clause is extended to negative n.)
///
/// The input is classified from prefix hulls of increasing length into two
/// overlapping cases, taking the first that becomes certain at the current
/// depth and preferring the middle-third case on ties:
///   middle third:  value in (n + 1/3, n + 2/3) for some n  ->  output = input
///   near integer:  value in (n - 1/2, n + 1/2) for some n  ->  emit head n,
///     then per stage k decide from prefix hulls, in this order, whether the
///     value is within 2^-(k+1) of n (emit another zero), left of
///     n - 2^-(k+2), or right of n + 2^-(k+2) (switch to plain digit
///     emission of the residual).
/// Every decision uses a finite prefix, so output digits are produced
/// incrementally and the call terminates on every total input.
DigitStream normalize(const DigitStream& x);

}  // namespace ctreals

#endif
