#ifndef CTREALS_INTERVAL_HPP
#define CTREALS_INTERVAL_HPP

#include <optional>
#include <string>

#include "ctreals/rational.hpp"

namespace ctreals {

/// Closed rational interval [lo, hi], the compact elements of the
/// extensional real domain (minus the bottom element, which is never a value
/// here: partiality is a failure to answer, not a datum).
class RatInterval {
 public:
  RatInterval(Rational lo, Rational hi);
  static RatInterval point(const Rational& x) { return {x, x}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RatInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool intersects(const RatInterval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  bool operator==(const RatInterval& other) const = default;

 private:
  Rational lo_;
  Rational hi_;
};

/// Intersection if nonempty; the join in the reverse-inclusion order.
std::optional<RatInterval> iv_meet(const RatInterval& a, const RatInterval& b);

/// Smallest interval containing both.
RatInterval iv_hull(const RatInterval& a, const RatInterval& b);

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator+(const RatInterval& a, const Rational& c);
RatInterval operator-(const RatInterval& a, const Rational& c);
/// Exact image {c*x : x in a}.
RatInterval scale(const Rational& c, const RatInterval& a);

std::string to_string(const RatInterval& iv);
/// Parses "[p/q, r/s]"; whitespace around the endpoints is tolerated.
std::optional<RatInterval> interval_from_string(const std::string& text);

}  // namespace ctreals

#endif
