#ifndef CTREALS_EMBED_HPP
#define CTREALS_EMBED_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ctreals/budget.hpp"
#include "ctreals/digits.hpp"
#include "ctreals/interval.hpp"
#include "ctreals/kk.hpp"
#include "ctreals/weights.hpp"

namespace ctreals {

/// A total element of the extensional function space, presented at finite
/// precision: apply(iv, p) is an enclosure of the image of iv. Implementations
/// must be monotone (smaller input interval gives a nested or equal output)
/// and total: on point inputs the output width drops below any 2^-p as p
/// grows. The built-in constructors compute exact images and ignore p.
class RealFn1 {
 public:
  using Apply = std::function<RatInterval(const RatInterval&, int)>;
  explicit RealFn1(Apply apply) : apply_(std::move(apply)) {}

  RatInterval apply(const RatInterval& iv, int precision) const {
    return apply_(iv, precision);
  }

  /// x -> slope * x + offset, exact image.
  static RealFn1 affine_map(const Rational& slope, const Rational& offset);
  /// Pointwise shift by t.
  RealFn1 shifted(const Rational& t) const;

 private:
  Apply apply_;
};

/// The piecewise-linear interpolation of f: constant f(0) left of 0 and
/// (1-y)f(n) + y f(n+1) on x = n + y. Sends the representative of n to
/// enclosures of f(n).
RealFn1 pi1(const TotalFn1& f);

/// Closed-form value of the interpolation at an exact rational point.
Rational pi1_exact(const TotalFn1& f, const Rational& x);

/// Enclosure of g at an exact rational point of width <= 2^-p.
RatInterval eval_at_point(const RealFn1& g, const Rational& x, int precision,
                          Budget& budget);
RatInterval eval_at_point(const RealFn1& g, const Rational& x, int precision);

/// Enclosure of the distance from g at the natural point n to the naturals;
/// width <= 2^-p and always inside [0, 1/2].
RatInterval dist_to_nat(const RealFn1& g, nat n, int precision);

/// Weight enclosures over X^1_n, indexed canonically. The enclosure of the
/// total mass contains 1 and the entry widths sum to at most the requested
/// tolerance.
struct WeightTable {
  nat bound = 0;
  std::vector<RatInterval> weights;

  RatInterval mass() const;
};

WeightTable mu_table(nat n, const RealFn1& g, int precision, nat cap = kDefaultEnumCap);

struct Pi2Options {
  WeightMode mode = WeightMode::partition;
  std::uint64_t budget_ticks = kDefaultBudget;
  nat enum_cap = kDefaultEnumCap;
  /// Bound on the number of weighted tables a single series term may carry
  /// before the enclosures are refined instead.
  std::size_t support_cap = 1u << 15;
  int max_rounds = 28;
  /// Precision at which the intensional wrapper commits to the near-integer
  /// branch.
  int intensional_probe = 24;
};

enum class Pi2Route { case1, case2 };

struct Pi2Outcome {
  RatInterval enclosure;
  Pi2Route route;
  /// F(f_g) when route == case1.
  nat case1_value = 0;
  /// Series terms consumed when route == case2.
  nat terms = 0;
};

/// The type-2 embedding applied to (F, g) at precision p, by dovetailing the
/// two halves of the construction: a near-integer certificate (every queried
/// point provably within 1/3 of a natural and the cumulative distance mass
/// below the tolerance-derived trigger while F's queries stabilize) yields an
/// enclosure of F(f_g); otherwise the weighted series is summed once the
/// cumulative distance provably reaches 1. Throws BudgetExhausted with a
/// diagnostic naming the progress of both halves if neither certifies.
RatInterval pi2(const TotalFn2& F, const RealFn1& g, int precision,
                const Pi2Options& opts = {});
Pi2Outcome pi2_outcome(const TotalFn2& F, const RealFn1& g, int precision,
                       const Pi2Options& opts = {});

/// n if v lies strictly inside (n - 1/3, n + 1/3) for a (necessarily unique)
/// natural n; absent otherwise.
std::optional<nat> pi_inv0(const RatInterval& v);

enum class InvOutcome {
  value,             ///< enclosure certified inside a window
  provably_outside,  ///< enclosure certified inside a gap [n+1/3, n+2/3]
  unknown,           ///< budget ran out with the enclosure straddling
};

struct InvResult {
  InvOutcome outcome;
  nat value = 0;

  bool operator==(const InvResult&) const = default;
};

/// The partial inverse of the type-1 embedding: queries g at the embedded
/// argument with shrinking enclosures until a window or a gap certifies.
class PartialInv1 {
 public:
  PartialInv1(RealFn1 g, int max_precision) : g_(std::move(g)), max_precision_(max_precision) {}

  InvResult at(nat a) const;

 private:
  RealFn1 g_;
  int max_precision_;
};

inline PartialInv1 pi_inv1(RealFn1 g, int max_precision = 64) {
  return PartialInv1(std::move(g), max_precision);
}

/// A total element of the intensional function space presented on compacts:
/// apply(prefix, depth) returns the digits of the output that the given
/// input prefix already determines (at most depth of them), monotonically
/// under end-extension.
class DigitRealFn1 {
 public:
  using Apply = std::function<DigitSeq(const DigitSeq&, int)>;
  explicit DigitRealFn1(Apply apply) : apply_(std::move(apply)) {}

  DigitSeq apply(const DigitSeq& prefix, int depth) const { return apply_(prefix, depth); }

  /// Wraps an exact interval image as a digit map with a deterministic
  /// emission schedule (first prefix whose image hull permits the decision).
  static DigitRealFn1 from_exact_image(std::function<RatInterval(const RatInterval&)> image);

 private:
  Apply apply_;
};

/// The interpolation of f, realized intensionally.
DigitRealFn1 pi1_S(const TotalFn1& f);

/// Feeds a total stream through a digit map; total on total inputs.
DigitStream apply_stream(const DigitRealFn1& h, const DigitStream& x);

/// The intensional type-2 embedding: on a near-integer certificate the
/// output is literally head F(f_g) with an all-zero tail; otherwise the
/// weighted-series enclosures are re-represented as digits and passed
/// through the normalizer.
DigitStream pi2_S(const TotalFn2& F, const DigitRealFn1& g, const Pi2Options& opts = {});

}  // namespace ctreals

#endif
