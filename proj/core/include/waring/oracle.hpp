#pragma once

#include "waring/veronese.hpp"

namespace waring {

/// Caps for the exhaustive searches. max_subsets counts visited subsets
/// (DFS leaves) across one call.
struct OracleBudget {
  std::size_t max_points = 50;
  int max_rank = 6;
  std::uint64_t max_subsets = 10000000;
  unsigned threads = 0;  // 0: pick from hardware
};

/// All points of P^r(F_p) in canonical order; size (p^(r+1)-1)/(p-1).
std::vector<ProjPoint> projective_space_points(int r, const FieldSpec& field);

/// Ground-truth rank by literal exhaustion: the smallest s <= max_rank such
/// that some s-subset of the F_p-rational Veronese points spans P. This is
/// the F_p-rational rank. Throws BudgetExceeded when caps are hit.
int brute_rank(const AmbientVector& p, const VeroneseSpace& space,
               const FieldSpec& field, const OracleBudget& budget);

/// All s-subsets A of P^r(F_p) with P in <nu_d(A)> that pass the
/// decomposition certificate, in canonical order.
std::vector<PointSet> enumerate_S(const AmbientVector& p, int s,
                                  const VeroneseSpace& space,
                                  const FieldSpec& field,
                                  const OracleBudget& budget);

/// Core shared with the builders: searches s-subsets of an explicit
/// candidate list. With certified_only, hits must also pass the weight and
/// independence checks; with stop_at_first, returns at most one subset.
std::vector<PointSet> enumerate_spanning_subsets(
    const AmbientVector& p, const std::vector<ProjPoint>& candidates, int s,
    const VeroneseSpace& space, const OracleBudget& budget,
    bool stop_at_first = false, bool certified_only = true,
    bool prune_dependent = true);

}  // namespace waring
