#ifndef CTREALS_KK_HPP
#define CTREALS_KK_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctreals/budget.hpp"
#include "ctreals/rational.hpp"

namespace ctreals {

using nat = std::uint64_t;

/// A compact element of the type-1 domain: a finite deterministic table.
struct NatCompact1 {
  std::map<nat, nat> table;

  bool operator==(const NatCompact1&) const = default;
};

/// A compact element one level up: finitely many (compact, value) pins.
struct NatCompact2 {
  std::vector<std::pair<NatCompact1, nat>> entries;
};

/// A total type-1 functional, presented extensionally. Pure: same input,
/// same output.
class TotalFn1 {
 public:
  explicit TotalFn1(std::function<nat(nat)> eval) : eval_(std::move(eval)) {}
  nat operator()(nat x) const { return eval_(x); }

 private:
  std::function<nat(nat)> eval_;
};

/// A total continuous type-2 functional. The answer on f depends on finitely
/// many values of f; apply_traced records which ones were actually queried.
class TotalFn2 {
 public:
  explicit TotalFn2(std::function<nat(const TotalFn1&)> eval) : eval_(std::move(eval)) {}
  nat operator()(const TotalFn1& f) const { return eval_(f); }

 private:
  std::function<nat(const TotalFn1&)> eval_;
};

/// Evaluates F(f), recording the arguments F queried. The recording is local
/// to this call; concurrent calls do not share state.
nat apply_traced(const TotalFn2& F, const TotalFn1& f, std::map<nat, nat>& queries);

/// Clipping at level 0: a if a <= n, else 0.
inline nat clip0(nat a, nat n) { return a <= n ? a : 0; }

/// The canonical table of an n-th approximation.
///   level 0: a single value <= n
///   level 1: values of f_n on 0..n; f_n(x) = table[clip0(x, n)]
///   level 2: values of F_n on the canonical enumeration of the level-1
///            tables; F_n(f) = table[index of the level-1 approximation of f]
struct ApproxElem {
  int level = 0;
  nat bound = 0;
  std::vector<nat> table;

  bool operator==(const ApproxElem&) const = default;
};

inline constexpr nat kDefaultEnumCap = 1'000'000;

ApproxElem approx(nat a, nat n);
ApproxElem approx(const TotalFn1& f, nat n);
/// Materializes the full level-2 table; the table has (n+1)^(n+1) entries
/// and is guarded by the enumeration cap.
ApproxElem approx(const TotalFn2& F, nat n, nat cap = kDefaultEnumCap);

nat eval_approx(const ApproxElem& a);                    // level 0
nat eval_approx(const ApproxElem& a, nat x);             // level 1
nat eval_approx(const ApproxElem& a, const TotalFn1& f); // level 2
nat eval_approx(const ApproxElem& a, const ApproxElem& x);

/// The total extension a level-k table denotes; level must be 1.
TotalFn1 as_total(const ApproxElem& a);

/// (F(f_n))_n without materializing the level-2 table.
nat approx_apply2(const TotalFn2& F, nat n, const TotalFn1& f);

/// The level-1 approximation of f as a total functional.
TotalFn1 grilliot_seq(const TotalFn1& f, nat n);

/// Position of a level-1 table in the canonical (lexicographic) enumeration
/// of X^1_n.
nat canonical_index1(const ApproxElem& a);

/// Exhaustive, duplicate-free enumeration of X^k_n in lexicographic order.
/// Fails with the cardinality named when the result would exceed the cap.
std::vector<ApproxElem> enum_X(int k, nat n, nat cap = kDefaultEnumCap);

/// Number of elements of X^k_n.
Int card_X(int k, nat n);

/// Least m with f_n(i) = f(i) for all n >= m: max(i, f(i)).
nat modulus1(nat i, const TotalFn1& f);

/// Least bound m with F(f_n) = F(f) for all n >= m, via the search that
/// scans the stages below the pointwise modulus. Budget-guarded: a
/// non-continuous or non-total F surfaces as a diagnostic, not a hang.
nat modulus2(const TotalFn1& f, const TotalFn2& F, Budget& budget);
nat modulus2(const TotalFn1& f, const TotalFn2& F);

/// The largest number occurring in the compact, hereditarily; for every
/// n >= n_a(c) the compact survives its own n-th approximation.
nat n_a(const NatCompact1& c);
nat n_a(const NatCompact2& c);

/// Zero-padding total extension of a compact (density witness).
TotalFn1 pad_total(const NatCompact1& c);

/// Tables agree on shared keys, i.e. the compacts are bounded.
bool consistent(const NatCompact1& c, const NatCompact1& d);

/// "{0:1, 3:2}"
std::string to_string(const NatCompact1& c);
std::string to_string(const ApproxElem& a);
std::optional<NatCompact1> compact_from_string(const std::string& text);

}  // namespace ctreals

#endif
