#include "ctreals/digits.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ctreals {

char digit_char(Digit d) {
  switch (d) {
    case Digit::minus: return '-';
    case Digit::zero: return '0';
    case Digit::plus: return '+';
  }
  throw std::logic_error("digit_char: bad digit");
}

std::optional<Digit> digit_from_char(char c) {
  switch (c) {
    case '-': return Digit::minus;
    case '0': return Digit::zero;
    case '+': return Digit::plus;
    default: return std::nullopt;
  }
}

DigitSeq DigitSeq::of(long long head, std::vector<Digit> digits) {
  DigitSeq s;
  s.head = head;
  s.digits = std::move(digits);
  return s;
}

Rational DigitSeq::partial_value() const {
  if (!head) {
    if (!digits.empty()) throw std::logic_error("DigitSeq: digits without head");
    return 0;
  }
  Rational v(*head);
  Rational w(1, 2);
  for (Digit d : digits) {
    v += w * digit_value(d);
    w /= 2;
  }
  return v;
}

RatInterval hull(const DigitSeq& s) {
  if (s.is_empty()) throw std::invalid_argument("empty compact has no hull");
  Rational v = s.partial_value();
  Rational r = pow2(-static_cast<long>(s.length()));
  return RatInterval(v - r, v + r);
}

bool sim0(const DigitSeq& s, const DigitSeq& t) {
  if (s.is_empty() || t.is_empty())
    throw std::invalid_argument("sim0: compacts must have heads");
  return hull(s).intersects(hull(t));
}

struct DigitStream::Tail {
  std::mutex mu;
  std::vector<Digit> cache;
  std::function<Digit()> next;
};

DigitStream::DigitStream(long long head, std::function<Digit()> next)
    : head_(head), tail_(std::make_shared<Tail>()) {
  tail_->next = std::move(next);
}

DigitStream DigitStream::make(long long head, std::function<Digit()> next) {
  return DigitStream(head, std::move(next));
}

DigitStream DigitStream::constant(long long head) {
  return DigitStream(head, [] { return Digit::zero; });
}

Digit DigitStream::digit(std::size_t position) const {
  if (position == 0) throw std::invalid_argument("digit positions start at 1");
  std::lock_guard<std::mutex> lock(tail_->mu);
  while (tail_->cache.size() < position) tail_->cache.push_back(tail_->next());
  return tail_->cache[position - 1];
}

DigitSeq DigitStream::prefix(std::size_t digit_count) const {
  DigitSeq s;
  s.head = head_;
  s.digits.reserve(digit_count);
  for (std::size_t i = 1; i <= digit_count; ++i) s.digits.push_back(digit(i));
  return s;
}

RatInterval decode(const DigitStream& x, int precision) {
  if (precision < 0) throw std::invalid_argument("decode: negative precision");
  return hull(x.prefix(static_cast<std::size_t>(precision) + 1));
}

DigitStream extend_total(const DigitSeq& s) {
  long long head = s.head.value_or(0);
  auto digits = std::make_shared<std::vector<Digit>>(s.digits);
  auto pos = std::make_shared<std::size_t>(0);
  return DigitStream::make(head, [digits, pos]() {
    if (*pos < digits->size()) return (*digits)[(*pos)++];
    return Digit::zero;
  });
}

std::string to_string(const DigitSeq& s) {
  if (s.is_empty()) return "e";
  std::string out = std::to_string(*s.head) + ":";
  for (std::size_t i = 0; i < s.digits.size(); ++i) {
    if (i > 0) out += ' ';
    out += digit_char(s.digits[i]);
  }
  return out;
}

std::string stream_prefix_string(const DigitStream& x, std::size_t digit_count) {
  return to_string(x.prefix(digit_count));
}

std::optional<DigitSeq> digit_seq_from_string(const std::string& text) {
  auto colon = text.find(':');
  std::string head_part = colon == std::string::npos ? text : text.substr(0, colon);
  if (head_part.empty()) return std::nullopt;
  long long head = 0;
  try {
    std::size_t used = 0;
    head = std::stoll(head_part, &used);
    if (used != head_part.size()) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  DigitSeq s;
  s.head = head;
  if (colon == std::string::npos) return s;
  std::istringstream in(text.substr(colon + 1));
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 1) return std::nullopt;
    auto d = digit_from_char(tok[0]);
    if (!d) return std::nullopt;
    s.digits.push_back(*d);
  }
  return s;
}

}  // namespace ctreals
