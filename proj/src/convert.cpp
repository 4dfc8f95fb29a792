#include "ctreals/convert.hpp"

#include <memory>

#include "ctreals/digit_emit.hpp"

namespace ctreals {

DigitStream from_intervals(const IntervalStream& x) {
  auto enclosure = [x](int p) { return stream_query(x, p); };
  long long head = choose_head(enclosure);
  auto emitter = std::make_shared<SignedDigitEmitter>(enclosure, 1, Rational(head));
  return DigitStream::make(head, [emitter] { return emitter->next(); });
}

IntervalStream to_intervals(const DigitStream& x) {
  return IntervalStream::from_producer(
      [x](int p) { return hull(x.prefix(static_cast<std::size_t>(p) + 1)); });
}

DigitStream affine(const Rational& c,
                   const std::vector<std::pair<Rational, DigitStream>>& terms) {
  Rational total_mag = 0;
  for (const auto& [coeff, stream] : terms) total_mag += rat_abs(coeff);
  if (total_mag == 0) {
    // All coefficients vanish (or no terms): the value is exactly c.
    return from_intervals(IntervalStream::of_rational(c));
  }
  long pad = ceil_log2_abs(total_mag);
  auto producer = [c, terms, pad](int p) {
    int q = p + static_cast<int>(pad);
    RatInterval acc = RatInterval::point(c);
    for (const auto& [coeff, stream] : terms) acc = acc + scale(coeff, decode(stream, q));
    return acc;
  };
  return from_intervals(IntervalStream::from_producer(producer));
}

}  // namespace ctreals
