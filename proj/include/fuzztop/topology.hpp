#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzztop/fuzzy_set.hpp"

namespace fuzztop {

inline constexpr std::size_t kDefaultSizeCap = 4096;

// A family axiom the input fails to satisfy. Violations are data, not
// exceptions: validate_family reports all of them at once.
struct Violation {
  enum class Kind { missing_bottom, missing_top, missing_meet, missing_join };

  Kind kind;
  std::optional<FuzzySet> lhs;      // offending pair, for meet/join kinds
  std::optional<FuzzySet> rhs;
  std::optional<FuzzySet> missing;  // the absent set

  std::string message() const;
};

class InvalidTopologyError : public std::runtime_error {
 public:
  explicit InvalidTopologyError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class CompletionOverflowError : public std::runtime_error {
 public:
  explicit CompletionOverflowError(std::size_t cap)
      : std::runtime_error("family completion exceeded the size cap of " +
                           std::to_string(cap) + " sets"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Finite fuzzy topology: a deduplicated family of open sets containing 0_X
// and 1_X and closed under pairwise meet and join. Families are kept in
// lexicographic numerator order so every downstream output is deterministic.
// Immutable after construction; all queries are pure.
class FuzzyTopology {
 public:
  // Validates the family; throws InvalidTopologyError listing every failed
  // axiom. Members must share the carrier and denominator (GridMismatchError).
  static FuzzyTopology from_family(CarrierPtr carrier, int denom,
                                   std::vector<FuzzySet> family);

  const CarrierPtr& carrier() const { return carrier_; }
  int denom() const { return denom_; }
  std::size_t points() const { return carrier_->size(); }

  const std::vector<FuzzySet>& opens() const { return opens_; }
  const std::vector<FuzzySet>& closeds() const { return closeds_; }

  bool is_open(const FuzzySet& a) const;
  bool is_closed(const FuzzySet& a) const;
  bool is_clopen(const FuzzySet& a) const;
  bool is_crisp() const;  // every open set is crisp

  // True when a lives on this topology's carrier and grid.
  bool on_grid(const FuzzySet& a) const;

  friend bool operator==(const FuzzyTopology& a, const FuzzyTopology& b);

 private:
  FuzzyTopology(CarrierPtr carrier, int denom, std::vector<FuzzySet> opens);

  CarrierPtr carrier_;
  int denom_;
  std::vector<FuzzySet> opens_;    // lex sorted, unique
  std::vector<FuzzySet> closeds_;  // complements of opens_, lex sorted
};

// Every axiom the family fails: missing 0_X/1_X, and each pair whose meet or
// join is absent. Empty result means the family is a topology.
std::vector<Violation> validate_family(const CarrierPtr& carrier, int denom,
                                       std::span<const FuzzySet> family);

// Smallest topology containing the generators: adds 0_X and 1_X and closes
// under pairwise meet/join to a fixpoint. Throws CompletionOverflowError if
// the family grows past size_cap.
FuzzyTopology complete_family(const CarrierPtr& carrier, int denom,
                              std::span<const FuzzySet> generators,
                              std::size_t size_cap = kDefaultSizeCap);

void require_on_grid(const FuzzyTopology& t, const FuzzySet& a);

// sup of the open sets below a. The result is itself open.
FuzzySet interior(const FuzzyTopology& t, const FuzzySet& a);

// inf of the closed sets above a. The result is itself closed.
FuzzySet closure(const FuzzyTopology& t, const FuzzySet& a);

// Closure/interior evaluation handle with an optional per-topology memo,
// keyed by the numerator vector. The plain scans above stay the trusted
// path; the memo only short-circuits repeat queries and is validated against
// the scans in the test suite. Not synchronized: confine one instance to one
// worker.
class TopologyOps {
 public:
  explicit TopologyOps(const FuzzyTopology& t, bool enable_cache = true)
      : topo_(&t), cache_enabled_(enable_cache) {}

  const FuzzyTopology& topology() const { return *topo_; }

  FuzzySet closure(const FuzzySet& a);
  FuzzySet interior(const FuzzySet& a);

 private:
  struct NumsHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
      std::size_t h = 14695981039346656037ULL;
      for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9E3779B9u;
        h *= 1099511628211ULL;
      }
      return h;
    }
  };

  const FuzzyTopology* topo_;
  bool cache_enabled_;
  std::unordered_map<std::vector<int>, FuzzySet, NumsHash> closure_memo_;
  std::unordered_map<std::vector<int>, FuzzySet, NumsHash> interior_memo_;
};

}  // namespace fuzztop
