#include "ctreals/rational.hpp"

#include <stdexcept>

namespace ctreals {

Rational pow2(long e) {
  Int one = 1;
  if (e >= 0) return Rational(one << e, 1);
  return Rational(one, one << (-e));
}

Int rat_floor(const Rational& r) {
  Int n = numerator(r);
  Int d = denominator(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int rat_ceil(const Rational& r) {
  Int n = numerator(r);
  Int d = denominator(r);
  Int q = n / d;
  if (n > 0 && q * d != n) ++q;
  return q;
}

Int rat_round(const Rational& r) {
  return rat_floor(r + Rational(1, 2));
}

Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

long ceil_log2_abs(const Rational& r) {
  if (r == 0) return 0;
  Rational a = rat_abs(r);
  long s = 0;
  Rational bound = 1;
  while (bound < a) {
    bound *= 2;
    ++s;
  }
  return s;
}

std::string rat_to_string(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += "/";
    out += denominator(r).str();
  }
  return out;
}

std::optional<Rational> rat_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text), 1);
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    return Rational(Int(num), d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ctreals
