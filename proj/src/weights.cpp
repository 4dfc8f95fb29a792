#include "ctreals/weights.hpp"

#include <algorithm>

namespace ctreals {

WeightRow mu_point(const Rational& x) {
  if (x <= 0) return {{0, 1}};
  Int n0 = rat_floor(x);
  Rational t = x - Rational(n0);
  nat n = n0.convert_to<nat>();
  if (t <= Rational(1, 3)) return {{n, 1}};
  if (t >= Rational(2, 3)) return {{n + 1, 1}};
  Rational y = 3 * t - 1;
  return {{n, 1 - y}, {n + 1, y}};
}

Rational mu_value(const Rational& x, nat v) {
  WeightRow row = mu_point(x);
  auto it = row.find(v);
  return it == row.end() ? Rational(0) : it->second;
}

std::map<nat, RatInterval> mu_point_iv(const RatInterval& x) {
  std::map<nat, RatInterval> out;
  Int lo_floor = rat_floor(x.lo());
  Int hi_floor = rat_floor(x.hi());
  Int first = lo_floor - 1 < 0 ? Int(0) : lo_floor - 1;
  Int last = hi_floor + 1 < 0 ? Int(0) : hi_floor + 1;  // mass sits on 0 below zero
  for (Int vi = first; vi <= last; ++vi) {
    nat v = vi.convert_to<nat>();
    // mu_.(v) is piecewise linear in x with breakpoints at v +- 1/3 and
    // v +- 2/3; its extrema over [lo, hi] sit at the endpoints or at
    // breakpoints inside.
    std::vector<Rational> candidates = {x.lo(), x.hi()};
    const Rational offsets[] = {Rational(-2, 3), Rational(-1, 3), Rational(1, 3),
                                Rational(2, 3)};
    for (const Rational& off : offsets) {
      Rational b = Rational(vi) + off;
      if (x.lo() < b && b < x.hi()) candidates.push_back(b);
    }
    Rational wmin = mu_value(candidates[0], v);
    Rational wmax = wmin;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      Rational w = mu_value(candidates[i], v);
      wmin = std::min(wmin, w);
      wmax = std::max(wmax, w);
    }
    if (wmax > 0) out.emplace(v, RatInterval(wmin, wmax));
  }
  return out;
}

Rational nat_distance(const Rational& x) {
  if (x <= 0) return std::min(Rational(-x), Rational(1, 2));
  Rational t = x - Rational(rat_floor(x));
  return std::min(t, Rational(1 - t));
}

RatInterval nat_distance_image(const RatInterval& x) {
  // Breakpoints: integers, half-integers, and the cap corner at -1/2.
  std::vector<Rational> candidates = {x.lo(), x.hi()};
  Int from = 2 * rat_floor(x.lo());
  Int to = 2 * rat_ceil(x.hi());
  for (Int h = from; h <= to; ++h) {
    Rational b = Rational(h, 2);
    if (x.lo() < b && b < x.hi()) candidates.push_back(b);
  }
  Rational dmin = nat_distance(candidates[0]);
  Rational dmax = dmin;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Rational d = nat_distance(candidates[i]);
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  return RatInterval(dmin, dmax);
}

std::vector<Rational> effective_weights(const std::vector<Rational>& ds, WeightMode mode) {
  std::vector<Rational> out;
  out.reserve(ds.size());
  Rational cum = 0;
  for (const Rational& d : ds) {
    if (mode == WeightMode::partition) {
      Rational remaining = std::max(Rational(0), Rational(1 - cum));
      out.push_back(std::min(d, remaining));
    } else {
      Rational z;
      if (cum + d <= 1) {
        z = 1;
      } else if (cum > 1) {
        z = 0;
      } else {
        z = 1 - cum;
      }
      out.push_back(d * z);
    }
    cum += d;
  }
  return out;
}

std::vector<RatInterval> effective_weights(const std::vector<RatInterval>& ds,
                                           WeightMode mode) {
  std::vector<RatInterval> out;
  out.reserve(ds.size());
  RatInterval cum = RatInterval::point(0);
  for (const RatInterval& d : ds) {
    if (mode == WeightMode::partition) {
      Rational rem_lo = std::max(Rational(0), Rational(1 - cum.hi()));
      Rational rem_hi = std::max(Rational(0), Rational(1 - cum.lo()));
      out.push_back(RatInterval(std::min(d.lo(), rem_lo), std::min(d.hi(), rem_hi)));
    } else {
      Rational zlo, zhi;
      if (cum.hi() + d.hi() <= 1) {
        zlo = zhi = 1;
      } else if (cum.lo() > 1) {
        zlo = zhi = 0;
      } else {
        // The clauses are not separated by the enclosures; hull every
        // attainable z.
        std::vector<Rational> zs;
        if (cum.lo() + d.lo() <= 1) zs.push_back(1);
        if (cum.hi() > 1) zs.push_back(0);
        Rational mid_hi = std::min(Rational(1), Rational(1 - cum.lo()));
        Rational mid_lo = std::max(Rational(0), Rational(1 - std::min(Rational(1), cum.hi())));
        zs.push_back(std::max(Rational(0), mid_lo));
        zs.push_back(std::max(Rational(0), mid_hi));
        zlo = *std::min_element(zs.begin(), zs.end());
        zhi = *std::max_element(zs.begin(), zs.end());
      }
      out.push_back(RatInterval(d.lo() * zlo, d.hi() * zhi));
    }
    cum = cum + d;
  }
  return out;
}

}  // namespace ctreals
