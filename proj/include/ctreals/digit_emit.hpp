#ifndef CTREALS_DIGIT_EMIT_HPP
#define CTREALS_DIGIT_EMIT_HPP

#include <functional>

#include "ctreals/digits.hpp"
#include "ctreals/interval.hpp"

namespace ctreals {

/// Emits the signed binary digits of a real y from an enclosure oracle.
/// The oracle must return an interval containing y of width <= 2^-p for
/// every queried p. Digits are emitted for positions start, start+1, ...;
/// the caller guarantees |y - already_emitted| <= 2^-(start-1), which is the
/// representability invariant the emitter maintains.
///
/// Digit choice is the midpoint rule: with E an enclosure of the residual of
/// width <= 2^-j, pick +1 if mid(E) >= 2^-(j+1), -1 if mid(E) <= -2^-(j+1),
/// else 0. Each branch keeps the residual within 2^-j of zero, so the choice
/// is always sound.
class SignedDigitEmitter {
 public:
  SignedDigitEmitter(std::function<RatInterval(int)> enclosure, int start_position,
                     Rational already_emitted);

  Digit next();
  int position() const { return position_; }

 private:
  std::function<RatInterval(int)> enclosure_;
  int position_;
  Rational emitted_;
};

/// Chooses an integer head for a value enclosed by the oracle and returns it;
/// the residual then satisfies the emitter invariant for position 1.
long long choose_head(const std::function<RatInterval(int)>& enclosure);

}  // namespace ctreals

#endif
