#ifndef CTREALS_DIGITS_HPP
#define CTREALS_DIGITS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctreals/interval.hpp"

namespace ctreals {

enum class Digit : std::int8_t { minus = -1, zero = 0, plus = 1 };

inline int digit_value(Digit d) { return static_cast<int>(d); }
char digit_char(Digit d);                       // '+', '0', '-'
std::optional<Digit> digit_from_char(char c);

/// A compact element of the intensional domain: an optional integer head
/// followed by finitely many signed binary digits. The empty sequence (no
/// head) is the bottom element; digits require a head.
struct DigitSeq {
  std::optional<long long> head;
  std::vector<Digit> digits;

  static DigitSeq empty() { return {}; }
  static DigitSeq of(long long head, std::vector<Digit> digits = {});

  std::size_t length() const { return digits.size(); }
  bool is_empty() const { return !head.has_value(); }

  /// head + sum of digit_i * 2^-i over the stored digits.
  Rational partial_value() const;

  bool operator==(const DigitSeq& other) const = default;
};

/// The set of values of the maximal extensions of s: with n digits and
/// partial value v this is [v - 2^-n, v + 2^-n]. Throws on the empty compact.
RatInterval hull(const DigitSeq& s);

/// The consistency relation on compacts with heads: true iff some real is a
/// value of maximal extensions of both, i.e. the hulls intersect. Reflexive
/// and symmetric but not transitive.
bool sim0(const DigitSeq& s, const DigitSeq& t);

/// A total element of the intensional domain: integer head plus a total
/// digit producer. Represents head + sum digit_i * 2^-i. Digits are memoized
/// under a lock, so one stream may feed several consumers concurrently; the
/// producer is pulled in order and must be pure.
class DigitStream {
 public:
  /// next() is called once per position, positions 1, 2, 3, ...
  static DigitStream make(long long head, std::function<Digit()> next);
  static DigitStream constant(long long head);  // all-zero tail

  long long head() const { return head_; }
  Digit digit(std::size_t position_1_based) const;
  DigitSeq prefix(std::size_t digit_count) const;

 private:
  DigitStream(long long head, std::function<Digit()> next);

  struct Tail;
  long long head_;
  std::shared_ptr<Tail> tail_;
};

/// Hull of the length-(p+1) digit prefix; width exactly 2^-p, contains the
/// represented real.
RatInterval decode(const DigitStream& x, int precision);

/// Zero-pads a compact to a total element; the empty compact extends to the
/// canonical representation of 0.
DigitStream extend_total(const DigitSeq& s);

/// Text form "a:d1 d2 d3 ..." with digits '+', '0', '-'.
std::string to_string(const DigitSeq& s);
std::string stream_prefix_string(const DigitStream& x, std::size_t digit_count);
std::optional<DigitSeq> digit_seq_from_string(const std::string& text);

}  // namespace ctreals

#endif
