#ifndef CTREALS_WEIGHTS_HPP
#define CTREALS_WEIGHTS_HPP

#include <map>
#include <vector>

#include "ctreals/interval.hpp"
#include "ctreals/kk.hpp"

namespace ctreals {

/// The probability distribution on the naturals induced by a real:
///   x <= 0:                    all mass on 0
///   |x - n| <= 1/3:            all mass on n
///   x = n + (1+y)/3, y in (0,1): mass 1-y on n and y on n+1
/// Weights are exact rationals, nonnegative, summing to 1; the support has
/// at most two points. On the clause overlaps (x exactly n +- 1/3) the two
/// clauses agree and the degenerate row is returned once.
using WeightRow = std::map<nat, Rational>;

WeightRow mu_point(const Rational& x);

/// mu_x(v) for a single value.
Rational mu_value(const Rational& x, nat v);

/// The same distribution evaluated over a whole enclosure of x: for each
/// value in the possible support, the exact range of mu_x(v) as x runs over
/// the interval. Values whose weight is identically zero are omitted.
std::map<nat, RatInterval> mu_point_iv(const RatInterval& x);

/// Distance to the naturals, capped at 1/2 so enclosures stay in [0, 1/2]
/// (the uncapped distance is unbounded below zero, where the induced
/// distribution is constant anyway).
Rational nat_distance(const Rational& x);

/// Exact image of nat_distance over an interval.
RatInterval nat_distance_image(const RatInterval& x);

enum class WeightMode {
  /// w_n = min(d_n, max(0, 1 - sum of earlier d)): an exact partition of
  /// unity once the cumulative distance reaches 1. The default.
  partition,
  /// w_n = d_n * z_n with z_n = 1 while the cumulative sum stays within 1,
  /// the leftover fraction at the crossing term, 0 afterwards. Total mass
  /// may fall short of 1; kept behind this flag.
  literal,
};

std::vector<Rational> effective_weights(const std::vector<Rational>& ds,
                                        WeightMode mode = WeightMode::partition);

/// Enclosure version: sound hulls of the weights under every choice of true
/// distances within the given enclosures.
std::vector<RatInterval> effective_weights(const std::vector<RatInterval>& ds,
                                           WeightMode mode = WeightMode::partition);

}  // namespace ctreals

#endif
