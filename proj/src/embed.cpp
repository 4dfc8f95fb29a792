#include "ctreals/embed.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ctreals/convert.hpp"
#include "ctreals/interval_stream.hpp"
#include "ctreals/normalize.hpp"

namespace ctreals {

RealFn1 RealFn1::affine_map(const Rational& slope, const Rational& offset) {
  Rational a = slope;
  Rational b = offset;
  return RealFn1([a, b](const RatInterval& iv, int) { return scale(a, iv) + b; });
}

RealFn1 RealFn1::shifted(const Rational& t) const {
  Apply inner = apply_;
  Rational shift = t;
  return RealFn1(
      [inner, shift](const RatInterval& iv, int p) { return inner(iv, p) + shift; });
}

Rational pi1_exact(const TotalFn1& f, const Rational& x) {
  if (x <= 0) return Rational(f(0));
  Int n0 = rat_floor(x);
  nat n = n0.convert_to<nat>();
  Rational y = x - Rational(n0);
  if (y == 0) return Rational(f(n));
  return (1 - y) * Rational(f(n)) + y * Rational(f(n + 1));
}

RealFn1 pi1(const TotalFn1& f) {
  TotalFn1 fn = f;
  return RealFn1([fn](const RatInterval& iv, int) {
    // Piecewise linear, so the image extremes sit at the endpoints and at
    // integer breakpoints inside the interval.
    std::vector<Rational> candidates = {pi1_exact(fn, iv.lo()), pi1_exact(fn, iv.hi())};
    Int from = rat_ceil(iv.lo());
    Int to = rat_floor(iv.hi());
    if (to - from > 1'000'000)
      throw std::invalid_argument("pi1: input interval is too wide to evaluate");
    for (Int k = from; k <= to; ++k) {
      if (k < 0) continue;
      Rational kr(k);
      if (kr > iv.lo() && kr < iv.hi())
        candidates.push_back(Rational(fn(k.convert_to<nat>())));
    }
    auto [mn, mx] = std::minmax_element(candidates.begin(), candidates.end());
    return RatInterval(*mn, *mx);
  });
}

RatInterval eval_at_point(const RealFn1& g, const Rational& x, int precision,
                          Budget& budget) {
  RatInterval point = RatInterval::point(x);
  std::optional<RatInterval> best;
  for (int q = precision;; ++q) {
    budget.spend(1, "eval_at_point");
    RatInterval e = g.apply(point, q);
    if (best) {
      auto met = iv_meet(*best, e);
      if (!met) throw std::logic_error("RealFn1 produced disjoint point enclosures");
      best = *met;
    } else {
      best = e;
    }
    if (best->width() <= pow2(-precision)) return *best;
  }
}

RatInterval eval_at_point(const RealFn1& g, const Rational& x, int precision) {
  Budget budget(kDefaultBudget);
  return eval_at_point(g, x, precision, budget);
}

RatInterval dist_to_nat(const RealFn1& g, nat n, int precision) {
  return nat_distance_image(eval_at_point(g, Rational(n), precision));
}

RatInterval WeightTable::mass() const {
  RatInterval s = RatInterval::point(0);
  for (const RatInterval& w : weights) s = s + w;
  return s;
}

WeightTable mu_table(nat n, const RealFn1& g, int precision, nat cap) {
  Int count = card_X(1, n);
  if (count > cap)
    throw std::length_error("mu_table over X^1_" + std::to_string(n) + " needs " +
                            count.str() + " entries, above the cap of " +
                            std::to_string(cap));
  // Each weight is 3-Lipschitz in every factor, so per-point enclosures of
  // width 2^-q keep the summed entry widths below 2^-p.
  Rational slack = Rational(3) * Rational(n + 1) * Rational(count);
  int q = precision + static_cast<int>(ceil_log2_abs(slack)) + 1;
  std::vector<std::map<nat, RatInterval>> rows;
  rows.reserve(static_cast<std::size_t>(n) + 1);
  for (nat b = 0; b <= n; ++b) {
    RatInterval e = eval_at_point(g, Rational(b), q);
    RatInterval clipped(std::min(Rational(n), e.lo()), std::min(Rational(n), e.hi()));
    rows.push_back(mu_point_iv(clipped));
  }
  WeightTable out;
  out.bound = n;
  out.weights.reserve(count.convert_to<std::size_t>());
  for (const ApproxElem& a : enum_X(1, n, cap)) {
    RatInterval w = RatInterval::point(1);
    for (nat b = 0; b <= n; ++b) {
      auto it = rows[b].find(a.table[b]);
      if (it == rows[b].end()) {
        w = RatInterval::point(0);
        break;
      }
      w = RatInterval(w.lo() * it->second.lo(), w.hi() * it->second.hi());
    }
    out.weights.push_back(w);
  }
  return out;
}

std::optional<nat> pi_inv0(const RatInterval& v) {
  Int n = rat_round(v.midpoint());
  if (n < 0) return std::nullopt;
  Rational nr(n);
  if (v.lo() > nr - Rational(1, 3) && v.hi() < nr + Rational(1, 3))
    return n.convert_to<nat>();
  return std::nullopt;
}

namespace {

// Enclosure certified inside the complement of every window (n - 1/3, n + 1/3):
// entirely left of -1/3, or inside a gap [m + 1/3, m + 2/3].
bool provably_outside_windows(const RatInterval& v) {
  if (v.hi() <= Rational(-1, 3)) return true;
  for (Int m = rat_floor(v.lo()) - 1; m <= rat_floor(v.hi()); ++m) {
    if (m < 0) continue;
    Rational mr(m);
    if (v.lo() >= mr + Rational(1, 3) && v.hi() <= mr + Rational(2, 3)) return true;
  }
  return false;
}

}  // namespace

InvResult PartialInv1::at(nat a) const {
  Budget budget(kDefaultBudget);
  std::optional<RatInterval> best;
  for (int q = 2; q <= max_precision_; ++q) {
    RatInterval e = eval_at_point(g_, Rational(a), q, budget);
    if (best) {
      auto met = iv_meet(*best, e);
      if (!met) throw std::logic_error("RealFn1 produced disjoint point enclosures");
      best = *met;
    } else {
      best = e;
    }
    if (auto n = pi_inv0(*best)) return {InvOutcome::value, *n};
    if (provably_outside_windows(*best)) return {InvOutcome::provably_outside, 0};
  }
  return {InvOutcome::unknown, 0};
}

namespace {

struct CaseAbort {
  std::string reason;
};
struct NeedMorePrecision {};
struct SupportTooWide {};

// Dovetailed evaluation of the type-2 embedding against a point oracle.
// Point enclosures are cached and only ever tightened, so one evaluator can
// serve a whole chain of precisions (the intensional wrapper does exactly
// that).
class Pi2Evaluator {
 public:
  Pi2Evaluator(TotalFn2 F, std::function<RatInterval(nat, int)> at, Pi2Options opts)
      : F_(std::move(F)), at_(std::move(at)), opts_(opts), budget_(opts.budget_ticks) {}

  Pi2Outcome outcome(int precision) {
    for (int round = 0; round <= opts_.max_rounds; ++round) {
      int depth = 8 + 8 * round;
      nat horizon = nat(8) << (2 * round);
      int q = precision + 6 + 4 * round;
      if (!window_dead_) {
        if (auto e = attempt_case1(precision, depth))
          return {*e, Pi2Route::case1, case1_value_, 0};
      }
      if (auto e = attempt_case2(precision, horizon, q))
        return {*e, Pi2Route::case2, 0, case2_terms_};
    }
    throw BudgetExhausted(diagnostic(precision));
  }

  RatInterval enclosure(int precision) { return outcome(precision).enclosure; }

 private:
  struct PointSlot {
    int prec = -1;
    std::optional<RatInterval> enc;
  };
  struct RowSlot {
    int prec = -1;
    std::map<nat, RatInterval> row;
  };

  RatInterval refine(nat m, int q) {
    PointSlot& slot = points_[m];
    if (slot.prec >= q) return *slot.enc;
    budget_.spend(1, "pi2 point refinement");
    RatInterval e = at_(m, q);
    if (slot.enc) {
      auto met = iv_meet(*slot.enc, e);
      if (!met) throw std::logic_error("pi2: inconsistent point enclosures");
      e = *met;
    }
    slot.enc = e;
    slot.prec = q;
    return e;
  }

  Rational value_bound(nat n0) {
    auto it = value_bound_cache_.find(n0);
    if (it != value_bound_cache_.end()) return it->second;
    nat best = 1;
    for (nat n = 0; n <= n0; ++n) {
      for (const ApproxElem& a : enum_X(1, n, opts_.enum_cap)) {
        budget_.spend(1, "pi2 value bound");
        best = std::max(best, F_(as_total(a)));
      }
    }
    Rational bound(best);
    value_bound_cache_.emplace(n0, bound);
    return bound;
  }

  // The near-integer certificate. Every point F queries must certify inside
  // a closed window [n - 1/3, n + 1/3]; with sigma the recorded table, the
  // cumulative distance mass over 0..n0 (n0 past sigma's keys and values)
  // must provably stay below eps / (3 M), M bounding F on all tables of
  // bound at most n0. That reproduces the continuity estimate, so the
  // returned enclosure [F(sigma-extension) +- eps] is sound whichever half
  // the oracle's real falls under.
  std::optional<RatInterval> attempt_case1(int precision, int depth) {
    Rational eps = pow2(-(precision + 1));
    std::map<nat, nat> sigma;
    nat value = 0;
    try {
      TotalFn1 oracle([this, depth, &sigma](nat m) -> nat {
        for (int q = 2; q <= depth; ++q) {
          RatInterval e = refine(m, q);
          if (nat_distance_image(e).lo() > Rational(1, 3))
            throw CaseAbort{"the value at " + std::to_string(m) +
                            " is provably farther than 1/3 from every natural"};
          Int n = rat_round(e.midpoint());
          if (n >= 0) {
            Rational nr(n);
            if (e.lo() >= nr - Rational(1, 3) && e.hi() <= nr + Rational(1, 3)) {
              nat v = n.convert_to<nat>();
              sigma.emplace(m, v);
              return v;
            }
          }
        }
        throw NeedMorePrecision{};
      });
      value = F_(oracle);
    } catch (const CaseAbort& abort) {
      window_dead_ = true;
      window_dead_reason_ = abort.reason;
      return std::nullopt;
    } catch (const NeedMorePrecision&) {
      window_depth_tried_ = depth;
      return std::nullopt;
    }
    nat n0 = 1;
    for (const auto& [k, v] : sigma) n0 = std::max({n0, k + 1, v + 1});
    if (card_X(1, n0) > opts_.enum_cap) {
      window_dead_ = true;
      window_dead_reason_ = "the certificate needs X^1_" + std::to_string(n0) +
                            ", above the enumeration cap";
      return std::nullopt;
    }
    Rational threshold = eps / (3 * value_bound(n0));
    Rational sum_lb = 0;
    Rational sum_ub = 0;
    for (nat m = 0; m <= n0; ++m) {
      RatInterval d = nat_distance_image(refine(m, depth));
      sum_lb += d.lo();
      sum_ub += d.hi();
    }
    if (sum_lb >= threshold) return std::nullopt;  // trigger reached; series half decides
    if (sum_ub >= threshold) {
      window_depth_tried_ = depth;
      return std::nullopt;  // undecided at this depth
    }
    case1_value_ = value;
    return RatInterval(Rational(value) - eps, Rational(value) + eps);
  }

  std::map<nat, RatInterval> clipped_row(nat b, nat n, int q) {
    RatInterval e = refine(b, q);
    if (e.hi() <= Rational(n)) {
      RowSlot& slot = rows_[b];
      if (slot.prec != points_[b].prec) {
        slot.row = mu_point_iv(e);
        slot.prec = points_[b].prec;
      }
      return slot.row;
    }
    RatInterval clipped(std::min(Rational(n), e.lo()), std::min(Rational(n), e.hi()));
    return mu_point_iv(clipped);
  }

  // Sum of F(a) mu_{n,g}(a) restricted to the product support the current
  // enclosures allow.
  RatInterval series_term(nat n, int q) {
    std::vector<std::vector<std::pair<nat, RatInterval>>> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    std::size_t combos = 1;
    for (nat b = 0; b <= n; ++b) {
      std::map<nat, RatInterval> row = clipped_row(b, n, q);
      rows.emplace_back(row.begin(), row.end());
      combos *= rows.back().size();
      if (combos > opts_.support_cap) throw SupportTooWide{};
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(n) + 1, 0);
    std::vector<nat> table(static_cast<std::size_t>(n) + 1, 0);
    RatInterval sum = RatInterval::point(0);
    for (;;) {
      budget_.spend(1, "pi2 series term");
      Rational wlo = 1;
      Rational whi = 1;
      for (nat b = 0; b <= n; ++b) {
        const auto& [v, w] = rows[b][pick[b]];
        table[b] = v;
        wlo *= w.lo();
        whi *= w.hi();
      }
      Rational fv(F_(as_total(ApproxElem{1, n, table})));
      sum = sum + RatInterval(wlo * fv, whi * fv);
      std::size_t i = pick.size();
      for (;;) {
        if (i == 0) return sum;
        --i;
        if (++pick[i] < rows[i].size()) break;
        pick[i] = 0;
      }
    }
  }

  // The weighted series, summed once the cumulative distance mass provably
  // reaches 1 (beyond that index every weight is exactly zero in both
  // modes).
  std::optional<RatInterval> attempt_case2(int precision, nat horizon, int q) {
    std::vector<RatInterval> ds;
    Rational cum_lb = 0;
    bool reached = false;
    for (nat m = 0; m < horizon; ++m) {
      RatInterval d = nat_distance_image(refine(m, q));
      ds.push_back(d);
      cum_lb += d.lo();
      if (cum_lb >= 1) {
        reached = true;
        break;
      }
    }
    case2_mass_ = cum_lb;
    case2_horizon_ = ds.size();
    if (!reached) return std::nullopt;
    std::vector<RatInterval> ws = effective_weights(ds, opts_.mode);
    RatInterval total = RatInterval::point(0);
    try {
      for (nat m = 0; m < ws.size(); ++m) {
        if (ws[m].hi() == 0) continue;
        RatInterval term = series_term(m, q);
        total = total + RatInterval(ws[m].lo() * term.lo(), ws[m].hi() * term.hi());
      }
    } catch (const SupportTooWide&) {
      return std::nullopt;  // enclosures too loose; retry refined
    }
    if (total.width() > pow2(-precision)) return std::nullopt;
    case2_terms_ = ws.size();
    return total;
  }

  std::string diagnostic(int precision) const {
    std::ostringstream out;
    out << "pi2: no certificate at precision " << precision << " within "
        << opts_.max_rounds + 1 << " rounds; near-integer half ";
    if (window_dead_) {
      out << "ruled out (" << window_dead_reason_ << ")";
    } else {
      out << "undecided at window depth " << window_depth_tried_;
    }
    out << "; series half reached cumulative distance >= " << rat_to_string(case2_mass_)
        << " after " << case2_horizon_ << " terms";
    return out.str();
  }

  TotalFn2 F_;
  std::function<RatInterval(nat, int)> at_;
  Pi2Options opts_;
  Budget budget_;
  std::map<nat, PointSlot> points_;
  std::map<nat, RowSlot> rows_;
  std::map<nat, Rational> value_bound_cache_;
  bool window_dead_ = false;
  std::string window_dead_reason_;
  int window_depth_tried_ = 0;
  nat case1_value_ = 0;
  nat case2_terms_ = 0;
  Rational case2_mass_ = 0;
  std::size_t case2_horizon_ = 0;
};

std::function<RatInterval(nat, int)> point_oracle(const RealFn1& g) {
  RealFn1 fn = g;
  return [fn](nat m, int p) {
    Budget budget(kDefaultBudget);
    return eval_at_point(fn, Rational(m), p, budget);
  };
}

}  // namespace

Pi2Outcome pi2_outcome(const TotalFn2& F, const RealFn1& g, int precision,
                       const Pi2Options& opts) {
  Pi2Evaluator evaluator(F, point_oracle(g), opts);
  return evaluator.outcome(precision);
}

RatInterval pi2(const TotalFn2& F, const RealFn1& g, int precision,
                const Pi2Options& opts) {
  return pi2_outcome(F, g, precision, opts).enclosure;
}

DigitRealFn1 DigitRealFn1::from_exact_image(
    std::function<RatInterval(const RatInterval&)> image) {
  return DigitRealFn1([image](const DigitSeq& in, int depth) -> DigitSeq {
    DigitSeq out;
    if (in.is_empty() || depth < 0) return out;
    auto image_at = [&](std::size_t len) {
      DigitSeq p;
      p.head = in.head;
      p.digits.assign(in.digits.begin(),
                      in.digits.begin() + static_cast<std::ptrdiff_t>(len));
      return image(hull(p));
    };
    // Head from the first prefix whose image is narrower than 1/4; the
    // residual then satisfies the position-1 emitter invariant. Decisions
    // depend only on prefixes, in a fixed scan order, which makes the map
    // monotone under end-extension.
    std::size_t len = 0;
    RatInterval img = image_at(len);
    while (img.width() > Rational(1, 4)) {
      if (len == in.length()) return out;
      img = image_at(++len);
    }
    long long head = static_cast<long long>(rat_round(img.midpoint()));
    out.head = head;
    Rational emitted(head);
    for (int j = 1; j <= depth; ++j) {
      Rational need = pow2(-j);
      while (img.width() > need) {
        if (len == in.length()) return out;
        img = image_at(++len);
      }
      Rational mid = img.midpoint() - emitted;
      Rational threshold = pow2(-(j + 1));
      Digit d = Digit::zero;
      if (mid >= threshold) {
        d = Digit::plus;
      } else if (mid <= -threshold) {
        d = Digit::minus;
      }
      emitted += pow2(-j) * digit_value(d);
      out.digits.push_back(d);
    }
    return out;
  });
}

DigitRealFn1 pi1_S(const TotalFn1& f) {
  RealFn1 g = pi1(f);
  return DigitRealFn1::from_exact_image(
      [g](const RatInterval& iv) { return g.apply(iv, 0); });
}

DigitStream apply_stream(const DigitRealFn1& h, const DigitStream& x) {
  // Pull input prefixes until the head is determined, then keep a cursor.
  std::size_t len = 1;
  std::optional<long long> head;
  for (;; ++len) {
    DigitSeq c = h.apply(x.prefix(len), 0);
    if (!c.is_empty()) {
      head = *c.head;
      break;
    }
    if (len > 1'000'000)
      throw BudgetExhausted("apply_stream: head undetermined after 10^6 input digits");
  }
  struct Cursor {
    DigitRealFn1 h;
    DigitStream x;
    std::size_t len;
    std::size_t emitted = 0;
  };
  auto cur = std::make_shared<Cursor>(Cursor{h, x, len});
  return DigitStream::make(*head, [cur]() -> Digit {
    for (;;) {
      DigitSeq c = cur->h.apply(cur->x.prefix(cur->len), static_cast<int>(cur->emitted) + 1);
      if (c.length() > cur->emitted) return c.digits[cur->emitted++];
      ++cur->len;
      if (cur->len > 10'000'000)
        throw BudgetExhausted("apply_stream: output digit undetermined after 10^7 input digits");
    }
  });
}

DigitStream pi2_S(const TotalFn2& F, const DigitRealFn1& g, const Pi2Options& opts) {
  DigitRealFn1 fn = g;
  auto at = [fn](nat m, int p) -> RatInterval {
    DigitStream point = extend_total(DigitSeq::of(static_cast<long long>(m)));
    std::size_t want = static_cast<std::size_t>(p) + 1;
    for (std::size_t len = want;; ++len) {
      DigitSeq out = fn.apply(point.prefix(len), p + 1);
      if (!out.is_empty() && out.length() >= want) return hull(out);
      if (len > want + 1'000'000)
        throw BudgetExhausted("pi2_S: intensional point evaluation stalled");
    }
  };
  auto evaluator = std::make_shared<Pi2Evaluator>(F, at, opts);
  Pi2Outcome probe = evaluator->outcome(opts.intensional_probe);
  if (probe.route == Pi2Route::case1)
    return DigitStream::constant(static_cast<long long>(probe.case1_value));
  IntervalStream values =
      IntervalStream::cached_monotone([evaluator](int p) { return evaluator->enclosure(p); });
  return normalize(from_intervals(values));
}

}  // namespace ctreals
