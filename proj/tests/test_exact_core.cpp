#include <doctest.h>

#include <random>

#include "ctreals/convert.hpp"
#include "ctreals/digits.hpp"
#include "ctreals/interval.hpp"
#include "ctreals/interval_stream.hpp"

using namespace ctreals;

namespace {

Rational random_rational(std::mt19937_64& rng, long long num_mag = 1'000'000) {
  std::uniform_int_distribution<long long> num(-num_mag, num_mag);
  std::uniform_int_distribution<long long> den(1, 100'000);
  return Rational(num(rng), den(rng));
}

RatInterval random_interval(std::mt19937_64& rng) {
  Rational a = random_rational(rng, 1000);
  Rational b = random_rational(rng, 1000);
  return a <= b ? RatInterval(a, b) : RatInterval(b, a);
}

}  // namespace

TEST_CASE("iv_meet on the worked examples") {
  RatInterval a(0, 2), b(1, 3);
  auto m = iv_meet(a, b);
  REQUIRE(m.has_value());
  CHECK(*m == RatInterval(1, 2));

  CHECK_FALSE(iv_meet(RatInterval(0, 1), RatInterval(2, 3)).has_value());

  RatInterval c(0, 1);
  CHECK(*iv_meet(c, c) == c);
}

TEST_CASE("iv_meet algebra on random intervals") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    RatInterval a = random_interval(rng);
    RatInterval b = random_interval(rng);
    RatInterval c = random_interval(rng);
    auto ab = iv_meet(a, b);
    auto ba = iv_meet(b, a);
    CHECK(ab == ba);
    // Absent exactly when the intervals are disjoint.
    bool disjoint = a.hi() < b.lo() || b.hi() < a.lo();
    CHECK(ab.has_value() == !disjoint);
    if (ab) {
      CHECK(a.contains(*ab));
      CHECK(b.contains(*ab));
    }
    // Associativity where all meets are defined.
    auto bc = iv_meet(b, c);
    if (ab && bc) {
      auto left = iv_meet(*ab, c);
      auto right = iv_meet(a, *bc);
      CHECK(left == right);
    }
  }
}

TEST_CASE("rational arithmetic stays exact") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    CHECK((a + b) - b == a);
    CHECK(denominator(a) > 0);
  }
}

TEST_CASE("embed_nat respects the precision contract") {
  IntervalStream three = embed_nat(3);
  RatInterval coarse = stream_query(three, 0);
  CHECK(RatInterval(2, 4).contains(coarse));
  CHECK(coarse.contains(Rational(3)));

  RatInterval fine = stream_query(embed_nat(0), 10);
  CHECK(fine.width() <= pow2(-10));
  CHECK(fine.contains(Rational(0)));

  IntervalStream five = embed_nat(5);
  std::optional<RatInterval> acc;
  for (int p = 0; p <= 20; ++p) {
    RatInterval e = stream_query(five, p);
    acc = acc ? iv_meet(*acc, e) : e;
    REQUIRE(acc.has_value());
  }
  CHECK(acc->contains(Rational(5)));
  CHECK(acc->width() <= pow2(-20));
}

TEST_CASE("stream queries are nested with bounded width") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    IntervalStream x = IntervalStream::of_rational(random_rational(rng, 1000));
    RatInterval prev = stream_query(x, 0);
    for (int p = 1; p <= 24; ++p) {
      RatInterval cur = stream_query(x, p);
      CHECK(prev.contains(cur));
      CHECK(cur.width() <= pow2(-p));
      prev = cur;
    }
  }
}

TEST_CASE("stream for 1/3 answers within tolerance") {
  IntervalStream third = IntervalStream::of_rational(Rational(1, 3));
  RatInterval e = stream_query(third, 2);
  CHECK(e.width() <= Rational(1, 4));
  CHECK(e.contains(Rational(1, 3)));
}

TEST_CASE("interval stream built from a digit stream of value one") {
  // All-plus digits decode to 1; the prefix hulls feed the interval side.
  DigitStream one = DigitStream::make(0, [] { return Digit::plus; });
  IntervalStream iv = to_intervals(one);
  RatInterval e = stream_query(iv, 5);
  CHECK(e.width() <= Rational(1, 32));
  CHECK(e.contains(Rational(1)));
}

TEST_CASE("interval text format round trips") {
  RatInterval iv(Rational(-7, 3), Rational(22, 5));
  CHECK(to_string(iv) == "[-7/3, 22/5]");
  auto parsed = interval_from_string("[-7/3, 22/5]");
  REQUIRE(parsed.has_value());
  CHECK(*parsed == iv);
  CHECK(to_string(RatInterval(1, 2)) == "[1, 2]");
  CHECK_FALSE(interval_from_string("[2, 1]").has_value());
  CHECK_FALSE(interval_from_string("nonsense").has_value());
}

TEST_CASE("prefix table serialization") {
  std::string table = prefix_table(embed_nat(1), 2);
  CHECK(table == "p=0:[1/2, 3/2] p=1:[3/4, 5/4] p=2:[7/8, 9/8]");
}

TEST_CASE("cached_monotone repairs jittering producers") {
  // Sound but non-nested answers around 1/3.
  auto raw = [](int p) {
    Rational h = pow2(-(p + 1));
    Rational center = (p % 2 == 0) ? Rational(1, 3) + h / 3 : Rational(1, 3) - h / 3;
    return RatInterval(center - h, center + h);
  };
  IntervalStream fixed = IntervalStream::cached_monotone(raw);
  RatInterval prev = stream_query(fixed, 0);
  for (int p = 1; p <= 16; ++p) {
    RatInterval cur = stream_query(fixed, p);
    CHECK(prev.contains(cur));
    CHECK(cur.contains(Rational(1, 3)));
    prev = cur;
  }
}
