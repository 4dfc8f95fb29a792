#include "ctreals/approx_lemma.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctreals {

namespace {

nat compact_weight(const NatCompact1& c) {
  nat w = c.table.size();
  for (const auto& [k, v] : c.table) w += k + v;
  return w;
}

// All compacts of the given weight, lexicographic on the sorted entry list.
void gen_compacts(nat weight_left, nat min_key, NatCompact1& current,
                  std::vector<NatCompact1>& out) {
  if (weight_left == 0) {
    out.push_back(current);
    return;
  }
  // Adding an entry (k, v) costs 1 + k + v.
  if (weight_left < 1) return;
  for (nat k = min_key; k + 1 <= weight_left; ++k) {
    for (nat v = 0; 1 + k + v <= weight_left; ++v) {
      current.table[k] = v;
      gen_compacts(weight_left - 1 - k - v, k + 1, current, out);
      current.table.erase(k);
    }
  }
}

std::vector<NatCompact1> compacts_of_weight(nat w) {
  std::vector<NatCompact1> out;
  if (w == 0) {
    out.emplace_back();
    return out;
  }
  NatCompact1 current;
  gen_compacts(w, 0, current, out);
  return out;
}

}  // namespace

std::vector<Observation> enumerate_observations(std::size_t count) {
  std::vector<Observation> out;
  out.reserve(count);
  for (nat block = 0; out.size() < count; ++block) {
    for (nat w = 0; w <= block && out.size() < count; ++w) {
      for (const NatCompact1& c : compacts_of_weight(w)) {
        out.push_back(Observation{c, block - w});
        if (out.size() == count) break;
      }
    }
  }
  return out;
}

std::optional<TotalFn1> joint_witness(const NatCompact1& p, const NatCompact1& q) {
  if (!consistent(p, q)) return std::nullopt;
  NatCompact1 joined = p;
  joined.table.insert(q.table.begin(), q.table.end());
  return pad_total(joined);
}

Stage build_stage(const Oracle1& f, const std::vector<Observation>& observations, nat n) {
  if (observations.size() <= n)
    throw std::invalid_argument("build_stage: stage index beyond the observation list");
  Stage stage;
  stage.n = n;
  std::vector<bool> in_x(n + 1, false);
  for (std::size_t i = 0; i <= n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j <= n && ok; ++j) {
      auto z = joint_witness(observations[i].compact, observations[j].compact);
      if (z && f(*z) != observations[i].value) ok = false;
    }
    in_x[i] = ok;
    if (ok) stage.x_members.push_back(i);
  }
  for (std::size_t j = 0; j <= n; ++j) {
    bool selected = false;
    for (std::size_t r = 0; r <= n && !selected; ++r) {
      if (!in_x[r]) continue;
      if (observations[r].value != observations[j].value) continue;
      const NatCompact1& pr = observations[r].compact;
      const NatCompact1& pj = observations[j].compact;
      bool below = std::all_of(pr.table.begin(), pr.table.end(), [&](const auto& kv) {
        auto it = pj.table.find(kv.first);
        return it != pj.table.end() && it->second == kv.second;
      });
      if (!below) continue;
      bool blocked = false;
      for (std::size_t i = 0; i < r && !blocked; ++i) {
        if (!in_x[i]) continue;
        if (observations[i].value == observations[r].value) continue;
        if (consistent(observations[i].compact, pj)) blocked = true;
      }
      if (!blocked) selected = true;
    }
    if (selected) stage.y_members.push_back(j);
  }
  return stage;
}

Oracle1 realize_stage(const Stage& stage, const std::vector<Observation>& observations) {
  std::vector<Observation> picked;
  picked.reserve(stage.y_members.size());
  for (std::size_t j : stage.y_members) picked.push_back(observations[j]);
  return [picked](const TotalFn1& x) -> nat {
    for (const Observation& o : picked) {
      bool below = std::all_of(o.compact.table.begin(), o.compact.table.end(),
                               [&](const auto& kv) { return x(kv.first) == kv.second; });
      if (below) return o.value;
    }
    return 0;
  };
}

ApproxScheme approximants(const Oracle1& f, const std::vector<Observation>& observations,
                          nat last_stage) {
  ApproxScheme scheme;
  scheme.observations = observations;
  scheme.stages.reserve(last_stage + 1);
  for (nat n = 0; n <= last_stage; ++n)
    scheme.stages.push_back(build_stage(f, observations, n));
  return scheme;
}

ConvergenceReport follow_point(const ApproxScheme& scheme, const Oracle1& f,
                               const TotalFn1& x) {
  nat target = f(x);
  ConvergenceReport report;
  std::optional<nat> since;
  for (const Stage& stage : scheme.stages) {
    Oracle1 fn = realize_stage(stage, scheme.observations);
    nat value = fn(grilliot_seq(x, stage.n));
    if (value == target) {
      if (!since) since = stage.n;
    } else {
      since.reset();
    }
  }
  if (since) {
    report.stabilized = true;
    report.stage = *since;
    report.value = target;
  }
  return report;
}

nat extend_from_closed(const Oracle1& f,
                       const std::vector<std::function<bool(const TotalFn1&)>>& memberships,
                       const ApproxScheme& scheme, const TotalFn1& z) {
  for (std::size_t m = 0; m < memberships.size(); ++m) {
    if (!memberships[m](z)) {
      if (scheme.stages.size() <= m)
        throw std::invalid_argument(
            "extend_from_closed: no stage approximant for the first failing set");
      return realize_stage(scheme.stages[m], scheme.observations)(z);
    }
  }
  return f(z);
}

}  // namespace ctreals
