#include "ctreals/normalize.hpp"

#include <memory>
#include <optional>

#include "ctreals/digit_emit.hpp"

namespace ctreals {

namespace {

// Integers m with lo < m < hi.
std::optional<long long> strict_integer_in(const Rational& lo, const Rational& hi) {
  Int first = rat_floor(lo) ;
  for (Int m = first; m <= rat_ceil(hi); ++m) {
    if (Rational(m) > lo && Rational(m) < hi) return static_cast<long long>(m);
  }
  return std::nullopt;
}

std::optional<long long> middle_third_witness(const RatInterval& h) {
  // h inside (m + 1/3, m + 2/3)  <=>  m in (hi - 2/3, lo - 1/3)
  return strict_integer_in(h.hi() - Rational(2, 3), h.lo() - Rational(1, 3));
}

std::optional<long long> near_integer_witness(const RatInterval& h) {
  // h inside (n - 1/2, n + 1/2)  <=>  n in (hi - 1/2, lo + 1/2)
  return strict_integer_in(h.hi() - Rational(1, 2), h.lo() + Rational(1, 2));
}

struct NearIntegerState {
  DigitStream input;
  long long n;
  std::size_t depth;  // digits of input already pulled
  int stage = 1;      // value known to lie in (n - 2^-stage, n + 2^-stage)
  std::optional<SignedDigitEmitter> emitter;

  RatInterval hull_at_depth() { return hull(input.prefix(depth)); }

  Digit next() {
    if (emitter) return emitter->next();
    for (;;) {
      RatInterval h = hull_at_depth();
      Rational half = pow2(-(stage + 1));
      Rational quarter = pow2(-(stage + 2));
      Rational full = pow2(-stage);
      Rational n_r(n);
      if (h.lo() > n_r - half && h.hi() < n_r + half) {
        ++stage;
        return Digit::zero;
      }
      bool left = h.lo() > n_r - full && h.hi() < n_r - quarter;
      bool right = h.lo() > n_r + quarter && h.hi() < n_r + full;
      if (left || right) {
        DigitStream in = input;
        auto enclosure = [in](int p) {
          return hull(in.prefix(static_cast<std::size_t>(p) + 1));
        };
        // Emitted so far: head n and stage-1 zeros; residual within 2^-stage.
        emitter.emplace(enclosure, stage, Rational(n));
        return emitter->next();
      }
      ++depth;
    }
  }
};

}  // namespace

DigitStream normalize(const DigitStream& x) {
  for (std::size_t depth = 1;; ++depth) {
    RatInterval h = hull(x.prefix(depth));
    if (middle_third_witness(h)) {
      // Far from every integer; pass the input through unchanged.
      auto pos = std::make_shared<std::size_t>(0);
      DigitStream in = x;
      return DigitStream::make(x.head(), [in, pos] { return in.digit(++*pos); });
    }
    if (auto n = near_integer_witness(h)) {
      auto st = std::make_shared<NearIntegerState>(NearIntegerState{x, *n, depth});
      return DigitStream::make(*n, [st] { return st->next(); });
    }
  }
}

}  // namespace ctreals
