#ifndef CTREALS_INTERVAL_STREAM_HPP
#define CTREALS_INTERVAL_STREAM_HPP

#include <functional>
#include <memory>
#include <string>

#include "ctreals/interval.hpp"

namespace ctreals {

/// A total real in the extensional presentation: a precision-indexed query
/// function. The answer at precision p is a rational interval of width at
/// most 2^-p containing the represented real, and answers are nested
/// (answer at p+1 is contained in the answer at p). The chain of answers
/// generates the ideal; the represented real is the intersection.
///
/// Streams are immutable values. Producers must be pure; the caching
/// constructor below synchronizes internally so a stream may be queried from
/// several threads at once.
class IntervalStream {
 public:
  /// Wraps a producer that already satisfies the contract.
  static IntervalStream from_producer(std::function<RatInterval(int)> producer);

  /// Wraps a producer whose raw answers are sound enclosures of the same
  /// real with width <= 2^-p but possibly not nested; answers are memoized
  /// and chained by intersection so the contract holds.
  static IntervalStream cached_monotone(std::function<RatInterval(int)> producer);

  /// The real r, padded: answer at p is [r - 2^-(p+1), r + 2^-(p+1)].
  static IntervalStream of_rational(const Rational& r);

  RatInterval query(int precision) const;

 private:
  explicit IntervalStream(std::function<RatInterval(int)> fn)
      : producer_(std::make_shared<std::function<RatInterval(int)>>(std::move(fn))) {}

  std::shared_ptr<std::function<RatInterval(int)>> producer_;
};

/// The canonical representative of a natural number.
IntervalStream embed_nat(unsigned long long n);

/// Answer at precision p; requires p >= 0.
RatInterval stream_query(const IntervalStream& x, int precision);

/// "p=0:[..] p=1:[..] ..." up to and including max_precision.
std::string prefix_table(const IntervalStream& x, int max_precision);

}  // namespace ctreals

#endif
