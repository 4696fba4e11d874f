#include "fuzztop/boundary.hpp"

#include <algorithm>
#include <vector>

namespace fuzztop {

namespace {

// inf of all closed sets D with D(x) >= bound(x) for x in the support mask.
// 1_X always qualifies, so the scan never folds an empty family; with an
// empty support every closed set qualifies and the fold reaches 0_X.
FuzzySet dominating_closed_inf(const FuzzyTopology& t, const FuzzySet& bound,
                               const std::vector<bool>& support) {
  std::vector<int> acc(bound.size(), t.denom());
  for (const auto& c : t.closeds()) {
    bool dominates = true;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (support[i] && c.nums()[i] < bound.nums()[i]) {
        dominates = false;
        break;
      }
    }
    if (!dominates) continue;
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] = std::min(acc[i], c.nums()[i]);
  }
  return FuzzySet(t.carrier(), t.denom(), std::move(acc));
}

}  // namespace

FuzzySet boundary(TopologyOps& ops, const FuzzySet& a) {
  require_on_grid(ops.topology(), a);
  return meet(ops.interior(ops.closure(a)), ops.closure(ops.interior(a)));
}

FuzzySet boundary_i(TopologyOps& ops, const FuzzySet& a) {
  require_on_grid(ops.topology(), a);
  FuzzySet cl_a = ops.closure(a);
  FuzzySet cl_ac = ops.closure(complement(a));
  std::vector<bool> support(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    support[i] = std::min(cl_a.nums()[i], cl_ac.nums()[i]) > 0;
  return dominating_closed_inf(ops.topology(), cl_a, support);
}

FuzzySet boundary_ii(TopologyOps& ops, const FuzzySet& a) {
  require_on_grid(ops.topology(), a);
  return meet(ops.closure(a), ops.closure(complement(a)));
}

FuzzySet boundary_iii(TopologyOps& ops, const FuzzySet& a) {
  require_on_grid(ops.topology(), a);
  FuzzySet cl_a = ops.closure(a);
  FuzzySet int_a = ops.interior(a);
  std::vector<bool> support(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    support[i] = cl_a.nums()[i] > int_a.nums()[i];
  return dominating_closed_inf(ops.topology(), cl_a, support);
}

FuzzySet boundary(const FuzzyTopology& t, const FuzzySet& a) {
  TopologyOps ops(t, /*enable_cache=*/false);
  return boundary(ops, a);
}

FuzzySet boundary_i(const FuzzyTopology& t, const FuzzySet& a) {
  TopologyOps ops(t, /*enable_cache=*/false);
  return boundary_i(ops, a);
}

FuzzySet boundary_ii(const FuzzyTopology& t, const FuzzySet& a) {
  TopologyOps ops(t, /*enable_cache=*/false);
  return boundary_ii(ops, a);
}

FuzzySet boundary_iii(const FuzzyTopology& t, const FuzzySet& a) {
  TopologyOps ops(t, /*enable_cache=*/false);
  return boundary_iii(ops, a);
}

}  // namespace fuzztop
