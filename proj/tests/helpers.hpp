#ifndef CTREALS_TESTS_HELPERS_HPP
#define CTREALS_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "ctreals/digits.hpp"
#include "ctreals/kk.hpp"
#include "ctreals/rational.hpp"

namespace ctreals::testing {

inline Rational random_rational(std::mt19937_64& rng, long long num_mag,
                                long long den_mag) {
  std::uniform_int_distribution<long long> num(-num_mag, num_mag);
  std::uniform_int_distribution<long long> den(1, den_mag);
  return Rational(num(rng), den(rng));
}

/// A digit stream for `value` whose first `random_digits` positions pick
/// uniformly among every sound digit (the residual windows overlap, so most
/// positions have a genuine choice); after that the canonical midpoint rule
/// finishes the encoding. Exact: the stream decodes to `value` at every
/// precision.
inline DigitStream random_encoding(const Rational& value, std::mt19937_64& rng,
                                   int random_digits = 160) {
  std::vector<long long> heads;
  for (Int h = rat_floor(value) - 1; h <= rat_ceil(value) + 1; ++h) {
    if (rat_abs(value - Rational(h)) <= 1) heads.push_back(static_cast<long long>(h));
  }
  std::uniform_int_distribution<std::size_t> pick_head(0, heads.size() - 1);
  long long head = heads[pick_head(rng)];

  struct State {
    Rational residual;  // value minus everything emitted so far
    int position = 1;
    int random_left;
    std::mt19937_64 rng;
  };
  auto st = std::make_shared<State>();
  st->residual = value - Rational(head);
  st->random_left = random_digits;
  st->rng.seed(rng());
  return DigitStream::make(head, [st]() {
    Rational w = pow2(-st->position);
    std::vector<Digit> valid;
    for (Digit d : {Digit::minus, Digit::zero, Digit::plus}) {
      Rational next = st->residual - w * digit_value(d);
      if (rat_abs(next) <= w) valid.push_back(d);
    }
    Digit chosen;
    if (st->random_left > 0 && valid.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
      chosen = valid[pick(st->rng)];
    } else {
      chosen = valid.front();
      Rational threshold = w / 2;
      if (st->residual >= threshold) {
        chosen = Digit::plus;
      } else if (st->residual <= -threshold) {
        chosen = Digit::minus;
      } else {
        chosen = Digit::zero;
      }
    }
    if (st->random_left > 0) --st->random_left;
    st->residual -= w * digit_value(chosen);
    ++st->position;
    return chosen;
  });
}

inline NatCompact1 random_compact(std::mt19937_64& rng, nat max_key = 20, nat max_value = 20,
                                  std::size_t max_entries = 5) {
  std::uniform_int_distribution<std::size_t> count(0, max_entries);
  std::uniform_int_distribution<nat> key(0, max_key);
  std::uniform_int_distribution<nat> value(0, max_value);
  NatCompact1 c;
  std::size_t n = count(rng);
  while (c.table.size() < n) c.table[key(rng)] = value(rng);
  return c;
}

inline TotalFn1 random_total_fn(std::mt19937_64& rng, nat max_key = 20, nat max_value = 20) {
  return pad_total(random_compact(rng, max_key, max_value, 6));
}

}  // namespace ctreals::testing

#endif
