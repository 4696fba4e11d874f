#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzztop/fuzzy_set.hpp"
#include "fuzztop/topology.hpp"

namespace fuzztop {

enum class ClaimKind { universal, existential };

enum class Outcome { holds, fails, hypothesis_not_met };

std::string_view to_string(ClaimKind k);
std::string_view to_string(Outcome o);

using ClaimPredicate =
    std::function<bool(TopologyOps&, std::span<const FuzzySet>)>;

// One machine-checkable identity over (topology, one or two fuzzy sets).
// A universal claim is refuted by a single instance with the hypothesis true
// and the conclusion false; an existential claim is established by a single
// instance where the conclusion holds.
struct Claim {
  std::string id;         // stable public identifier, e.g. "T2.1.iv"
  std::string statement;  // human-readable formula, e.g. "bd(A) <= cl(A)"
  int arity = 1;          // number of fuzzy-set arguments (1 or 2)
  ClaimKind kind = ClaimKind::universal;
  ClaimPredicate hypothesis;  // null means "always applicable"
  ClaimPredicate conclusion;
};

// The fixed catalogue of audited identities, in display order. 29 entries;
// ids are the public contract of the check command.
const std::vector<Claim>& registry();

const Claim* find_claim(std::string_view id);

// Pure per-instance evaluation. A false hypothesis never counts as a
// failure. Throws on arity or grid mismatch.
Outcome evaluate_claim(const Claim& claim, TopologyOps& ops,
                       std::span<const FuzzySet> args);

struct TranscriptLine {
  std::string label;
  FuzzySet value;
};

// The interior/closure/boundary values at an instance, for witness reports.
std::vector<TranscriptLine> evaluation_transcript(
    TopologyOps& ops, std::span<const FuzzySet> args);

}  // namespace fuzztop
