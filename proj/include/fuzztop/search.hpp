#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzztop/claims.hpp"
#include "fuzztop/fuzzy_set.hpp"
#include "fuzztop/prng.hpp"
#include "fuzztop/topology.hpp"

namespace fuzztop {

// Exhaustive topology enumeration filters subsets of the whole membership
// grid, which is exponential in the grid size; past this many grid sets the
// enumerator refuses and random sampling applies.
inline constexpr std::size_t kDefaultMaxGridSets = 12;

class EnumerationBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchConfig {
  enum class Mode { exhaustive, random };

  Mode mode = Mode::exhaustive;
  int n_min = 1, n_max = 1;  // carrier sizes
  int d_min = 1, d_max = 1;  // denominators
  int random_spaces = 100;   // random mode: number of sampled topologies
  int args_per_space = 8;    // random mode: sampled argument sets per space
  int max_generators = 4;    // random mode: generators drawn per space in [0, max]
  std::uint64_t seed = 0;
  std::size_t size_cap = kDefaultSizeCap;
  std::size_t max_grid_sets = kDefaultMaxGridSets;
  std::uint64_t budget = 0;  // per-claim instance cap; 0 = no cap
  int workers = 1;
  bool include_fixtures = true;
  std::vector<std::string> claim_ids;  // empty = every registry claim
};

// All (d+1)^n numerator vectors over the carrier, in lexicographic order.
std::vector<FuzzySet> enumerate_fuzzy_sets(const CarrierPtr& carrier,
                                           int denom);

std::uint64_t grid_size(int n, int d);  // (d+1)^n, overflow-checked

bool exhaustive_feasible(int n, int d,
                         std::size_t max_grid_sets = kDefaultMaxGridSets);

// Every topology over the (n, d) grid, in canonical order (increasing
// characteristic bitmask over the lex-ordered grid sets). Throws
// EnumerationBoundError when (d+1)^n exceeds max_grid_sets.
std::vector<FuzzyTopology> enumerate_topologies(
    int n, int d, std::size_t max_grid_sets = kDefaultMaxGridSets);

// Completion of generator_count uniformly drawn grid sets. Deterministic
// given the generator state; bounded retries on completion overflow.
FuzzyTopology random_topology(const CarrierPtr& carrier, int denom,
                              int generator_count, SplitMix64& rng,
                              std::size_t size_cap = kDefaultSizeCap);

// One topology plus the argument sets checked against it. Claims of arity 2
// take all ordered pairs of the unary argument list.
struct PoolSpace {
  FuzzyTopology topology;
  std::vector<FuzzySet> unary_args;
};

struct InstancePool {
  std::vector<PoolSpace> spaces;

  std::uint64_t instance_count(int arity) const;
};

// Always-checked edge instances: the six-open two-point space with its
// golden argument, the three-level indiscrete point, and a four-open chain;
// each with its designated argument plus 0_X and 1_X.
InstancePool fixture_pool();

void append_exhaustive(InstancePool& pool, int n, int d,
                       std::size_t max_grid_sets = kDefaultMaxGridSets);

void append_random(InstancePool& pool, const SearchConfig& cfg);

// fixtures (unless disabled) + exhaustive legs over the n/d ranges, or the
// random sample, per cfg.mode.
InstancePool build_pool(const SearchConfig& cfg);

// A concrete instance refuting a universal claim or establishing an
// existential one. Re-evaluating the claim on it reproduces the outcome.
struct Witness {
  FuzzyTopology topology;
  std::vector<FuzzySet> args;
  std::string claim_id;
  std::vector<TranscriptLine> transcript;
  std::uint64_t instance_index = 0;  // position in the scan order
};

struct ScanResult {
  std::optional<Witness> witness;  // unshrunk
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t hypothesis_not_met = 0;
  std::uint64_t instances = 0;  // evaluated prefix length
};

// Scans the pool in instance order (spaces outer, argument tuples inner) and
// stops at the first target outcome: a failure for universal claims, a hold
// for existential ones. Counts cover exactly the prefix up to and including
// the stopping instance, whatever the worker count — workers stripe the
// index space and the minimum hit index wins.
ScanResult scan_claim(const Claim& claim, const InstancePool& pool,
                      std::uint64_t budget, int workers);

// scan_claim over build_pool(cfg): the one-shot counterexample search.
ScanResult find_counterexample(const Claim& claim, const SearchConfig& cfg);

// Greedy minimization to a fixpoint: drop carrier points (project the
// topology, re-complete), snap argument numerators to 0 or d, drop open sets
// (re-complete; only kept if strictly smaller). The claim outcome is
// preserved at every step and the size triple (carrier, family, distinct
// numerators) never increases.
Witness shrink_witness(const Claim& claim, const Witness& witness,
                       std::size_t size_cap = kDefaultSizeCap);

enum class ClaimStatus {
  verified_in_budget,
  refuted,
  witnessed,
  unwitnessed_in_budget,
  skipped,
};

std::string_view to_string(ClaimStatus s);

struct ClaimRecord {
  std::string id;
  std::string statement;
  ClaimKind kind = ClaimKind::universal;
  int arity = 1;
  ClaimStatus status = ClaimStatus::skipped;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t hypothesis_not_met = 0;
  std::uint64_t instances = 0;
  std::optional<Witness> witness;  // shrunk
  double elapsed_ms = 0.0;
};

struct AuditReport {
  SearchConfig config;
  std::string version;
  std::vector<ClaimRecord> claims;  // registry order, selection included
  double elapsed_ms = 0.0;
};

// Runs every selected registry claim over the pool. Unselected claims get a
// SKIPPED record so the report always lists the whole catalogue.
AuditReport audit_pool(const SearchConfig& cfg, const InstancePool& pool);

AuditReport audit(const SearchConfig& cfg);

}  // namespace fuzztop
