#pragma once

#include "waring/classify.hpp"
#include "waring/oracle.hpp"

namespace waring {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// A list of named checks; valid iff every check passed. Semantic failures
/// are reported, never thrown.
struct Certificate {
  bool valid = false;
  std::vector<CheckResult> checks;

  static Certificate of(std::vector<CheckResult> checks);
  const CheckResult* find(const std::string& name) const;
};

/// Checks (1) exact reconstruction, (2) independence of the Veronese images,
/// (3) all weights nonzero. (2)+(3) jointly rule out any proper spanning
/// subset, so the decomposition is minimal within its own support.
Certificate verify_decomposition(const Decomposition& dec);

/// For two distinct certified decompositions of the same point: the union
/// must fail to impose independent conditions in degree d.
/// Throws PreconditionFailed on mismatched targets, equal point sets, or
/// uncertified inputs.
Certificate lemma_v1_check(const Decomposition& a, const Decomposition& b);

/// Residual split along a hypersurface D: under the vanishing-defect
/// hypothesis for the off-D residue, both decompositions must agree off D
/// and the common off-D part must be independent.
/// Throws HypothesisFailed when the hypothesis defect is nonzero.
Certificate lemma_v2_split(const Decomposition& a, const Decomposition& b,
                           const Hypersurface& d);

/// Exhaustive uniqueness probe in the small-rank regime
/// (#points <= (d+1)/2): the oracle enumeration at this cardinality must
/// find exactly the given decomposition. Throws PreconditionFailed /
/// TooLarge outside the regime or budget.
Certificate bgl_uniqueness_probe(const Decomposition& dec,
                                 const OracleBudget& budget);

}  // namespace waring
