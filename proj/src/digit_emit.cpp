#include "ctreals/digit_emit.hpp"

#include <stdexcept>

namespace ctreals {

SignedDigitEmitter::SignedDigitEmitter(std::function<RatInterval(int)> enclosure,
                                       int start_position, Rational already_emitted)
    : enclosure_(std::move(enclosure)),
      position_(start_position),
      emitted_(std::move(already_emitted)) {
  if (start_position < 1) throw std::invalid_argument("emitter positions start at 1");
}

Digit SignedDigitEmitter::next() {
  RatInterval residual = enclosure_(position_) - emitted_;
  Rational mid = residual.midpoint();
  Rational threshold = pow2(-(static_cast<long>(position_) + 1));
  Digit d = Digit::zero;
  if (mid >= threshold) {
    d = Digit::plus;
  } else if (mid <= -threshold) {
    d = Digit::minus;
  }
  emitted_ += pow2(-static_cast<long>(position_)) * digit_value(d);
  ++position_;
  return d;
}

long long choose_head(const std::function<RatInterval(int)>& enclosure) {
  // Width <= 1/4, so |y - round(mid)| <= 1/8 + 1/2 < 1 and the position-1
  // invariant holds.
  RatInterval e = enclosure(2);
  return static_cast<long long>(rat_round(e.midpoint()));
}

}  // namespace ctreals
