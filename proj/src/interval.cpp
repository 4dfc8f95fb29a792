#include "ctreals/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctreals {

RatInterval::RatInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("RatInterval: lo > hi");
}

std::optional<RatInterval> iv_meet(const RatInterval& a, const RatInterval& b) {
  Rational lo = std::max(a.lo(), b.lo());
  Rational hi = std::min(a.hi(), b.hi());
  if (lo > hi) return std::nullopt;
  return RatInterval(lo, hi);
}

RatInterval iv_hull(const RatInterval& a, const RatInterval& b) {
  return RatInterval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo() + b.lo(), a.hi() + b.hi());
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo() - b.hi(), a.hi() - b.lo());
}

RatInterval operator+(const RatInterval& a, const Rational& c) {
  return RatInterval(a.lo() + c, a.hi() + c);
}

RatInterval operator-(const RatInterval& a, const Rational& c) {
  return RatInterval(a.lo() - c, a.hi() - c);
}

RatInterval scale(const Rational& c, const RatInterval& a) {
  if (c >= 0) return RatInterval(c * a.lo(), c * a.hi());
  return RatInterval(c * a.hi(), c * a.lo());
}

std::string to_string(const RatInterval& iv) {
  return "[" + rat_to_string(iv.lo()) + ", " + rat_to_string(iv.hi()) + "]";
}

namespace {
std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}
}  // namespace

std::optional<RatInterval> interval_from_string(const std::string& text) {
  std::string s = trimmed(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
  s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  auto lo = rat_from_string(trimmed(s.substr(0, comma)));
  auto hi = rat_from_string(trimmed(s.substr(comma + 1)));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return RatInterval(*lo, *hi);
}

}  // namespace ctreals
