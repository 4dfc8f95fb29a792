#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "ctreals/convert.hpp"
#include "ctreals/digits.hpp"
#include "ctreals/interval_stream.hpp"
#include "ctreals/normalize.hpp"
#include "helpers.hpp"

using namespace ctreals;
using ctreals::testing::random_encoding;
using ctreals::testing::random_rational;

namespace {

// Independent oracle for hull: enumerate every extension by `extra` digits;
// the value set is covered by the partial values with their own residual
// slack, and the bounds are attained by the all-minus / all-plus extensions.
RatInterval hull_oracle(const DigitSeq& s, int extra) {
  Rational slack = pow2(-static_cast<long>(s.length()) - extra);
  std::vector<DigitSeq> frontier = {s};
  for (int i = 0; i < extra; ++i) {
    std::vector<DigitSeq> next;
    for (const DigitSeq& e : frontier) {
      for (Digit d : {Digit::minus, Digit::zero, Digit::plus}) {
        DigitSeq longer = e;
        longer.digits.push_back(d);
        next.push_back(longer);
      }
    }
    frontier = std::move(next);
  }
  Rational lo = frontier.front().partial_value();
  Rational hi = lo;
  for (const DigitSeq& e : frontier) {
    Rational v = e.partial_value();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return RatInterval(lo - slack, hi + slack);
}

DigitSeq seq(long long head, std::initializer_list<int> digits) {
  DigitSeq s;
  s.head = head;
  for (int d : digits) s.digits.push_back(static_cast<Digit>(d));
  return s;
}

}  // namespace

TEST_CASE("hull matches the extension-enumeration oracle") {
  CHECK(hull(seq(0, {+1})) == RatInterval(0, 1));
  CHECK(hull(seq(2, {})) == RatInterval(1, 3));
  CHECK(hull(seq(0, {+1, +1})) == RatInterval(Rational(1, 2), 1));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> head(-5, 5);
  std::uniform_int_distribution<int> digit(-1, 1);
  for (int i = 0; i < 60; ++i) {
    DigitSeq s;
    s.head = head(rng);
    int n = len(rng);
    for (int j = 0; j < n; ++j) s.digits.push_back(static_cast<Digit>(digit(rng)));
    CHECK(hull(s) == hull_oracle(s, 4));
  }

  CHECK_THROWS_WITH(hull(DigitSeq::empty()), "empty compact has no hull");
}

TEST_CASE("decode on the worked streams") {
  DigitStream ones = DigitStream::make(0, [] { return Digit::plus; });
  RatInterval e = decode(ones, 10);
  CHECK(e.contains(Rational(1)));
  CHECK(e.width() <= pow2(-10));

  DigitStream unit = DigitStream::constant(1);
  for (int p = 0; p <= 20; p += 5) CHECK(decode(unit, p).contains(Rational(1)));

  // Alternating +,-,+,-,... sums to 1/3; the partial sums are the
  // geometric-series truncations, computed exactly.
  auto flip = std::make_shared<bool>(true);
  DigitStream third = DigitStream::make(0, [flip] {
    Digit d = *flip ? Digit::plus : Digit::minus;
    *flip = !*flip;
    return d;
  });
  Rational partial = 0;
  Rational w(1, 2);
  for (int i = 1; i <= 21; ++i) {
    partial += (i % 2 == 1 ? w : Rational(-w));
    w /= 2;
  }
  CHECK(rat_abs(partial - Rational(1, 3)) <= pow2(-21));
  CHECK(decode(third, 20).contains(Rational(1, 3)));
}

TEST_CASE("decoding is monotone along prefixes") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    DigitStream x = random_encoding(random_rational(rng, 64, 16), rng);
    RatInterval prev = hull(x.prefix(1));
    for (std::size_t k = 2; k <= 30; ++k) {
      RatInterval cur = hull(x.prefix(k));
      CHECK(prev.contains(cur));
      prev = cur;
    }
  }
}

TEST_CASE("sim0 agrees with the hull oracle") {
  DigitSeq a = seq(0, {+1});
  DigitSeq b = seq(1, {-1});
  CHECK(sim0(a, b));
  // Explicit common extension of value 1/2 certifies the overlap.
  DigitStream wa = extend_total(a);
  DigitStream wb = extend_total(b);
  CHECK(decode(wa, 20).contains(Rational(1, 2)));
  CHECK(decode(wb, 20).contains(Rational(1, 2)));

  CHECK_FALSE(sim0(seq(0, {-1}), seq(2, {})));

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> head(-4, 4);
  std::uniform_int_distribution<int> digit(-1, 1);
  for (int i = 0; i < 50; ++i) {
    DigitSeq s;
    s.head = head(rng);
    for (int j = 0; j < 3; ++j) s.digits.push_back(static_cast<Digit>(digit(rng)));
    CHECK(sim0(s, s));  // reflexive
    DigitSeq t;
    t.head = head(rng);
    CHECK(sim0(s, t) == sim0(t, s));  // symmetric
  }
}

TEST_CASE("sim0 is not transitive") {
  // Hulls [0,1], [1,2], [2,3]: adjacent pairs touch, the outer pair does not.
  DigitSeq s1 = seq(0, {+1});
  DigitSeq s2 = seq(1, {+1});
  DigitSeq s3 = seq(2, {+1});
  CHECK(hull(s1) == RatInterval(0, 1));
  CHECK(hull(s2) == RatInterval(1, 2));
  CHECK(hull(s3) == RatInterval(2, 3));
  CHECK(sim0(s1, s2));
  CHECK(sim0(s2, s3));
  CHECK_FALSE(sim0(s1, s3));
}

TEST_CASE("extend_total zero-pads") {
  DigitStream half = extend_total(seq(0, {+1}));
  CHECK(decode(half, 20).contains(Rational(1, 2)));
  CHECK(half.digit(1) == Digit::plus);
  for (std::size_t i = 2; i <= 10; ++i) CHECK(half.digit(i) == Digit::zero);

  DigitStream zero = extend_total(DigitSeq::empty());
  CHECK(zero.head() == 0);
  CHECK(decode(zero, 20).contains(Rational(0)));

  DigitStream neg = extend_total(seq(-1, {-1, +1}));
  CHECK(decode(neg, 20).contains(Rational(-5, 4)));
}

TEST_CASE("normalizer sends integer representations to the canonical form") {
  // Head 3 with an all-minus tail has value 2.
  DigitStream x = DigitStream::make(3, [] { return Digit::minus; });
  DigitStream y = normalize(x);
  CHECK(y.head() == 2);
  for (std::size_t i = 1; i <= 64; ++i) CHECK(y.digit(i) == Digit::zero);

  DigitStream canonical = DigitStream::constant(2);
  DigitStream z = normalize(canonical);
  CHECK(z.head() == 2);
  for (std::size_t i = 1; i <= 64; ++i) CHECK(z.digit(i) == Digit::zero);
}

TEST_CASE("normalizer canonicalizes negative integers too") {
  DigitStream x = DigitStream::make(-2, [] { return Digit::minus; });  // value -3
  DigitStream y = normalize(x);
  CHECK(y.head() == -3);
  for (std::size_t i = 1; i <= 64; ++i) CHECK(y.digit(i) == Digit::zero);
}

TEST_CASE("normalizer preserves values") {
  DigitStream x = extend_total(seq(1, {+1}));  // 3/2
  DigitStream y = normalize(x);
  for (int p = 0; p <= 40; p += 8) {
    RatInterval a = decode(y, p);
    CHECK(a.contains(Rational(3, 2)));
    CHECK(a.intersects(decode(x, p)));
  }

  std::mt19937_64 rng(14);
  for (int i = 0; i < 25; ++i) {
    Rational v = random_rational(rng, 40, 32);
    DigitStream in = random_encoding(v, rng);
    DigitStream out = normalize(in);
    for (int p = 0; p <= 40; p += 10) {
      CHECK(decode(out, p).contains(v));
      CHECK(decode(out, p).intersects(decode(in, p)));
    }
  }
}

TEST_CASE("normalizer canonicalizes randomized redundant integer encodings") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long long> pick(-10, 10);
  for (int i = 0; i < 30; ++i) {
    long long n = pick(rng);
    DigitStream x = random_encoding(Rational(n), rng, 48);
    DigitStream y = normalize(x);
    CHECK(y.head() == n);
    for (std::size_t k = 1; k <= 64; ++k) CHECK(y.digit(k) == Digit::zero);
  }
}

TEST_CASE("interval conversions round trip") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 30; ++i) {
    Rational v = random_rational(rng, 100, 64);
    DigitStream d = from_intervals(IntervalStream::of_rational(v));
    for (int p = 0; p <= 40; p += 10) CHECK(decode(d, p).contains(v));

    IntervalStream back = to_intervals(d);
    for (int p = 0; p <= 20; p += 5) {
      RatInterval e = stream_query(back, p);
      CHECK(e.contains(v));
      CHECK(e.width() == pow2(-p));  // prefix hulls have exactly this width
    }

    DigitStream again = from_intervals(back);
    for (int p = 0; p <= 40; p += 10) CHECK(decode(again, p).contains(v));
  }
}

TEST_CASE("from_intervals tracks the represented real") {
  IntervalStream third = IntervalStream::of_rational(Rational(1, 3));
  DigitStream d = from_intervals(third);
  for (int p = 0; p <= 40; p += 4) {
    RatInterval e = decode(d, p);
    CHECK(e.contains(Rational(1, 3)));
    CHECK(e.intersects(stream_query(third, p + 2)));
  }
}

TEST_CASE("affine combinations decode exactly") {
  DigitStream four = DigitStream::constant(4);
  DigitStream nine = DigitStream::constant(9);

  DigitStream id = affine(0, {{1, four}});
  CHECK(decode(id, 30).contains(Rational(4)));

  DigitStream one = affine(1, {});
  CHECK(decode(one, 30).contains(Rational(1)));

  DigitStream mix = affine(0, {{Rational(1, 2), four}, {Rational(1, 2), nine}});
  CHECK(decode(mix, 30).contains(Rational(13, 2)));
}

TEST_CASE("affine is additive") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    Rational v1 = random_rational(rng, 8, 8);
    Rational v2 = random_rational(rng, 8, 8);
    Rational c1 = random_rational(rng, 4, 4);
    Rational c2 = random_rational(rng, 4, 4);
    Rational k1 = random_rational(rng, 3, 3);
    Rational k2 = random_rational(rng, 3, 3);
    DigitStream s1 = random_encoding(v1, rng);
    DigitStream s2 = random_encoding(v2, rng);

    DigitStream split = affine(Rational(c1 + c2), {{k1, s1}, {k2, s2}});
    Rational expected = c1 + c2 + k1 * v1 + k2 * v2;
    for (int p = 0; p <= 30; p += 10) CHECK(decode(split, p).contains(expected));

    DigitStream a = affine(c1, {{k1, s1}});
    DigitStream b = affine(c2, {{k2, s2}});
    DigitStream joined = affine(0, {{1, a}, {1, b}});
    for (int p = 0; p <= 30; p += 10) {
      CHECK(decode(joined, p).contains(expected));
      CHECK(decode(joined, p).intersects(decode(split, p)));
    }
  }
}

TEST_CASE("digit streams memoize safely under concurrent queries") {
  auto counter = std::make_shared<std::atomic<int>>(0);
  auto flip = std::make_shared<int>(0);
  DigitStream x = DigitStream::make(0, [flip, counter] {
    counter->fetch_add(1);
    *flip = (*flip + 1) % 3;
    return static_cast<Digit>(*flip - 1);
  });
  std::vector<std::thread> workers;
  std::vector<DigitSeq> results(4);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&x, &results, t] { results[t] = x.prefix(2000); });
  }
  for (auto& w : workers) w.join();
  for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
  CHECK(counter->load() == 2000);  // each position produced exactly once
}

TEST_CASE("stream text format") {
  DigitSeq s = seq(3, {-1, -1, -1});
  CHECK(to_string(s) == "3:- - -");
  auto parsed = digit_seq_from_string("3:- - -");
  REQUIRE(parsed.has_value());
  CHECK(*parsed == s);
  CHECK(to_string(DigitSeq::empty()) == "e");
  CHECK_FALSE(digit_seq_from_string("3:x").has_value());
  CHECK_FALSE(digit_seq_from_string("").has_value());
  CHECK(stream_prefix_string(DigitStream::constant(-4), 3) == "-4:0 0 0");
}
