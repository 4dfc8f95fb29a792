#ifndef CTREALS_APPROX_LEMMA_HPP
#define CTREALS_APPROX_LEMMA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctreals/kk.hpp"

namespace ctreals {

/// One pinned behavior of the functional under approximation: on extensions
/// of the compact, the value is claimed to be `value`.
struct Observation {
  NatCompact1 compact;
  nat value = 0;

  bool operator==(const Observation&) const = default;
};

/// The canonical enumeration of all (compact, value) pairs: blocks of equal
/// combined weight (entry count + keys + values + value), compacts by weight
/// then lexicographically inside a block. Every pair appears exactly once.
std::vector<Observation> enumerate_observations(std::size_t count);

/// A total extension of two consistent compacts (their union, zero-padded);
/// absent when the compacts conflict.
std::optional<TotalFn1> joint_witness(const NatCompact1& p, const NatCompact1& q);

/// One stage of the construction: membership sets over the first n+1
/// observations.
struct Stage {
  nat n = 0;
  std::vector<std::size_t> x_members;  ///< indices whose pins survive every joint test
  std::vector<std::size_t> y_members;  ///< indices selected to realize the stage
};

using Oracle1 = std::function<nat(const TotalFn1&)>;

/// Builds stage n for f over the observation list:
///   i in X_n  iff  for all j <= n with a joint witness, f agrees with the
///                  pinned value of i on it;
///   j in Y_n  iff  some r <= n in X_n has the same value, sits below p_j,
///                  and every earlier X_n member either shares the value or
///                  conflicts with p_j.
Stage build_stage(const Oracle1& f, const std::vector<Observation>& observations, nat n);

/// The stage's total realization: the value of the first Y_n member whose
/// compact sits below the argument, 0 when there is none. Consistent Y_n
/// members carry equal values, so the first match is canonical.
Oracle1 realize_stage(const Stage& stage, const std::vector<Observation>& observations);

struct ApproxScheme {
  std::vector<Observation> observations;
  std::vector<Stage> stages;
};

/// Stages 0..N for f.
ApproxScheme approximants(const Oracle1& f, const std::vector<Observation>& observations,
                          nat last_stage);

struct ConvergenceReport {
  bool stabilized = false;
  nat stage = 0;   ///< least n0 with f_n(x_n) = f(x) for all n in [n0, N]
  nat value = 0;   ///< the stabilized value
};

/// Follows f_n(x_n) along the Grilliot sequence of x and reports the least
/// index from which it agrees with f(x) through the end of the scheme.
ConvergenceReport follow_point(const ApproxScheme& scheme, const Oracle1& f,
                               const TotalFn1& x);

/// Extension from a countable intersection of decidable clopen sets: on
/// members of every set the value is f itself; otherwise the stage
/// approximant indexed by the first failing membership test. Membership and
/// (for restricted ambient sets) observation witnesses are the caller's
/// burden: whether a compact extends into the set is not decidable here.
nat extend_from_closed(const Oracle1& f,
                       const std::vector<std::function<bool(const TotalFn1&)>>& memberships,
                       const ApproxScheme& scheme, const TotalFn1& z);

}  // namespace ctreals

#endif
