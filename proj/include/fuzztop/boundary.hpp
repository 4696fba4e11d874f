#pragma once

#include "fuzztop/fuzzy_set.hpp"
#include "fuzztop/topology.hpp"

namespace fuzztop {

// The four boundary operators. All are total on sets that live on the
// topology's grid; none special-cases 0_X or 1_X — edge behaviour there is
// exactly what the audit probes.

// bd A = int cl A  ∧  cl int A.
FuzzySet boundary(TopologyOps& ops, const FuzzySet& a);

// bdI A: infimum of the closed sets D with D(x) >= cl A(x) wherever
// (cl A ∧ cl A^c)(x) > 0. A vacuous condition admits every closed set, so
// an empty support yields 0_X.
FuzzySet boundary_i(TopologyOps& ops, const FuzzySet& a);

// bdII A = cl A  ∧  cl A^c.
FuzzySet boundary_ii(TopologyOps& ops, const FuzzySet& a);

// bdIII A: as bdI, but the support is where cl A(x) - int A(x) > 0
// (arithmetic difference of membership values).
FuzzySet boundary_iii(TopologyOps& ops, const FuzzySet& a);

// Uncached conveniences.
FuzzySet boundary(const FuzzyTopology& t, const FuzzySet& a);
FuzzySet boundary_i(const FuzzyTopology& t, const FuzzySet& a);
FuzzySet boundary_ii(const FuzzyTopology& t, const FuzzySet& a);
FuzzySet boundary_iii(const FuzzyTopology& t, const FuzzySet& a);

}  // namespace fuzztop
