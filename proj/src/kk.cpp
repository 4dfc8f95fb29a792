#include "ctreals/kk.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace ctreals {

nat apply_traced(const TotalFn2& F, const TotalFn1& f, std::map<nat, nat>& queries) {
  auto* record = &queries;
  TotalFn1 wrapped([&f, record](nat x) {
    nat v = f(x);
    record->emplace(x, v);
    return v;
  });
  return F(wrapped);
}

ApproxElem approx(nat a, nat n) { return {0, n, {clip0(a, n)}}; }

ApproxElem approx(const TotalFn1& f, nat n) {
  ApproxElem e{1, n, {}};
  e.table.reserve(static_cast<std::size_t>(n) + 1);
  for (nat x = 0; x <= n; ++x) e.table.push_back(clip0(f(x), n));
  return e;
}

TotalFn1 as_total(const ApproxElem& a) {
  if (a.level != 1) throw std::invalid_argument("as_total: level-1 table expected");
  auto table = a.table;
  nat n = a.bound;
  return TotalFn1([table, n](nat x) { return table[clip0(x, n)]; });
}

nat canonical_index1(const ApproxElem& a) {
  if (a.level != 1) throw std::invalid_argument("canonical_index1: level-1 table expected");
  nat idx = 0;
  for (nat v : a.table) idx = idx * (a.bound + 1) + v;
  return idx;
}

ApproxElem approx(const TotalFn2& F, nat n, nat cap) {
  Int count = card_X(1, n);
  if (count > cap)
    throw std::length_error("level-2 approximation table would have " + count.str() +
                            " entries, above the cap of " + std::to_string(cap));
  ApproxElem e{2, n, {}};
  e.table.reserve(count.convert_to<std::size_t>());
  for (const ApproxElem& g : enum_X(1, n, cap)) e.table.push_back(clip0(F(as_total(g)), n));
  return e;
}

nat eval_approx(const ApproxElem& a) {
  if (a.level != 0) throw std::invalid_argument("eval_approx: level-0 expected");
  return a.table.at(0);
}

nat eval_approx(const ApproxElem& a, nat x) {
  if (a.level != 1) throw std::invalid_argument("eval_approx: level-1 expected");
  return a.table[clip0(x, a.bound)];
}

nat eval_approx(const ApproxElem& a, const TotalFn1& f) {
  if (a.level != 2) throw std::invalid_argument("eval_approx: level-2 expected");
  return a.table[canonical_index1(approx(f, a.bound))];
}

nat eval_approx(const ApproxElem& a, const ApproxElem& x) {
  if (a.level == 1 && x.level == 0) return eval_approx(a, eval_approx(x));
  if (a.level == 2 && x.level == 1) return eval_approx(a, as_total(x));
  throw std::invalid_argument("eval_approx: level mismatch");
}

nat approx_apply2(const TotalFn2& F, nat n, const TotalFn1& f) {
  return clip0(F(grilliot_seq(f, n)), n);
}

TotalFn1 grilliot_seq(const TotalFn1& f, nat n) { return as_total(approx(f, n)); }

Int card_X(int k, nat n) {
  switch (k) {
    case 0:
      return Int(n) + 1;
    case 1:
      return pow(Int(n) + 1, static_cast<unsigned>(n + 1));
    case 2: {
      Int level1 = card_X(1, n);
      if (level1 > 1'000'000)
        throw std::overflow_error("cardinality of X^2_" + std::to_string(n) + " is " +
                                  std::to_string(n + 1) + "^" + level1.str() +
                                  ", too large to represent");
      return pow(Int(n) + 1, level1.convert_to<unsigned>());
    }
    default:
      throw std::invalid_argument("card_X: level must be 0, 1 or 2");
  }
}

namespace {

std::vector<ApproxElem> enum_tables(int level, nat n, nat domain_size, nat cap,
                                    const Int& count) {
  if (count > cap)
    throw std::length_error("X^" + std::to_string(level) + "_" + std::to_string(n) +
                            " has " + count.str() + " elements, above the cap of " +
                            std::to_string(cap));
  std::vector<ApproxElem> out;
  out.reserve(count.convert_to<std::size_t>());
  std::vector<nat> current(domain_size, 0);
  for (;;) {
    out.push_back(ApproxElem{level, n, current});
    // Lexicographic successor, most significant position first.
    std::size_t i = domain_size;
    while (i > 0) {
      --i;
      if (current[i] < n) {
        ++current[i];
        std::fill(current.begin() + static_cast<std::ptrdiff_t>(i) + 1, current.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
    if (domain_size == 0) return out;
  }
}

}  // namespace

std::vector<ApproxElem> enum_X(int k, nat n, nat cap) {
  switch (k) {
    case 0: {
      std::vector<ApproxElem> out;
      out.reserve(static_cast<std::size_t>(n) + 1);
      for (nat a = 0; a <= n; ++a) out.push_back(ApproxElem{0, n, {a}});
      return out;
    }
    case 1:
      return enum_tables(1, n, n + 1, cap, card_X(1, n));
    case 2: {
      Int level1 = card_X(1, n);
      if (level1 > cap)
        throw std::length_error("X^2_" + std::to_string(n) + " index domain X^1_" +
                                std::to_string(n) + " has " + level1.str() +
                                " elements, above the cap of " + std::to_string(cap));
      return enum_tables(2, n, level1.convert_to<nat>(), cap, card_X(2, n));
    }
    default:
      throw std::invalid_argument("enum_X: level must be 0, 1 or 2");
  }
}

nat modulus1(nat i, const TotalFn1& f) { return std::max(i, f(i)); }

namespace {

// h_n from the stage scan: h_n(xi) = f_m(xi) for the least m in [n, g(xi))
// with F(f_m) != F(f), else f_{g(xi)}(xi), where g(xi) = max(xi, f(xi)).
TotalFn1 make_h(const TotalFn1& f, const TotalFn2& F, nat value, nat n,
                const std::shared_ptr<std::map<nat, nat>>& stage_cache, Budget* budget) {
  return TotalFn1([&f, &F, value, n, stage_cache, budget](nat xi) {
    nat g_xi = std::max(xi, f(xi));
    for (nat m = n; m < g_xi; ++m) {
      budget->spend(1, "modulus2 stage scan");
      auto it = stage_cache->find(m);
      nat fm_value;
      if (it != stage_cache->end()) {
        fm_value = it->second;
      } else {
        fm_value = F(grilliot_seq(f, m));
        stage_cache->emplace(m, fm_value);
      }
      if (fm_value != value) return grilliot_seq(f, m)(xi);
    }
    return grilliot_seq(f, g_xi)(xi);
  });
}

}  // namespace

nat modulus2(const TotalFn1& f, const TotalFn2& F, Budget& budget) {
  nat value = F(f);
  auto stage_cache = std::make_shared<std::map<nat, nat>>();
  for (nat n = 0;; ++n) {
    budget.spend(1, "modulus2 search");
    TotalFn1 h = make_h(f, F, value, n, stage_cache, &budget);
    if (F(h) == value) return std::max(value, n);
  }
}

nat modulus2(const TotalFn1& f, const TotalFn2& F) {
  Budget budget(kDefaultBudget);
  return modulus2(f, F, budget);
}

nat n_a(const NatCompact1& c) {
  nat m = 0;
  for (const auto& [k, v] : c.table) m = std::max({m, k, v});
  return m;
}

nat n_a(const NatCompact2& c) {
  nat m = 0;
  for (const auto& [p, v] : c.entries) m = std::max({m, n_a(p), v});
  return m;
}

TotalFn1 pad_total(const NatCompact1& c) {
  auto table = c.table;
  return TotalFn1([table](nat x) {
    auto it = table.find(x);
    return it == table.end() ? nat{0} : it->second;
  });
}

bool consistent(const NatCompact1& c, const NatCompact1& d) {
  for (const auto& [k, v] : c.table) {
    auto it = d.table.find(k);
    if (it != d.table.end() && it->second != v) return false;
  }
  return true;
}

std::string to_string(const NatCompact1& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : c.table) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(k) + ":" + std::to_string(v);
  }
  return out + "}";
}

std::string to_string(const ApproxElem& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(i) + ":" + std::to_string(a.table[i]);
  }
  return out + "}";
}

std::optional<NatCompact1> compact_from_string(const std::string& text) {
  std::string s = text;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') return std::nullopt;
  s = s.substr(1, s.size() - 2);
  NatCompact1 c;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) return std::nullopt;
    try {
      nat k = std::stoull(item.substr(0, colon));
      nat v = std::stoull(item.substr(colon + 1));
      if (c.table.count(k)) return std::nullopt;
      c.table[k] = v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return c;
}

}  // namespace ctreals
