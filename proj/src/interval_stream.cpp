#include "ctreals/interval_stream.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace ctreals {

IntervalStream IntervalStream::from_producer(std::function<RatInterval(int)> producer) {
  return IntervalStream(std::move(producer));
}

IntervalStream IntervalStream::cached_monotone(std::function<RatInterval(int)> producer) {
  struct Cache {
    std::mutex mu;
    std::vector<RatInterval> answers;
    std::function<RatInterval(int)> raw;
  };
  auto cache = std::make_shared<Cache>();
  cache->raw = std::move(producer);
  return IntervalStream([cache](int p) {
    std::lock_guard<std::mutex> lock(cache->mu);
    while (static_cast<int>(cache->answers.size()) <= p) {
      int q = static_cast<int>(cache->answers.size());
      RatInterval next = cache->raw(q);
      if (!cache->answers.empty()) {
        auto met = iv_meet(cache->answers.back(), next);
        if (!met) throw std::logic_error("cached_monotone: inconsistent answers");
        next = *met;
      }
      cache->answers.push_back(next);
    }
    return cache->answers[static_cast<std::size_t>(p)];
  });
}

IntervalStream IntervalStream::of_rational(const Rational& r) {
  return IntervalStream([r](int p) {
    Rational h = pow2(-(static_cast<long>(p) + 1));
    return RatInterval(r - h, r + h);
  });
}

RatInterval IntervalStream::query(int precision) const { return (*producer_)(precision); }

IntervalStream embed_nat(unsigned long long n) {
  return IntervalStream::of_rational(Rational(n));
}

RatInterval stream_query(const IntervalStream& x, int precision) {
  if (precision < 0) throw std::invalid_argument("stream_query: negative precision");
  return x.query(precision);
}

std::string prefix_table(const IntervalStream& x, int max_precision) {
  std::string out;
  for (int p = 0; p <= max_precision; ++p) {
    if (p > 0) out += " ";
    out += "p=" + std::to_string(p) + ":" + to_string(stream_query(x, p));
  }
  return out;
}

}  // namespace ctreals
