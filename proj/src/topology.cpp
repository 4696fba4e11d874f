#include "fuzztop/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

namespace fuzztop {

namespace {

std::string paren(const FuzzySet& a) { return "(" + nums_to_string(a) + ")"; }

std::vector<int> nums_meet(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

std::vector<int> nums_join(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

void require_members_on_grid(const CarrierPtr& carrier, int denom,
                             std::span<const FuzzySet> family) {
  for (const auto& f : family) {
    if (f.denom() != denom ||
        (f.carrier() != carrier && !(*f.carrier() == *carrier)))
      throw GridMismatchError(
          "family member lives on a different carrier or grid");
  }
}

}  // namespace

std::string Violation::message() const {
  switch (kind) {
    case Kind::missing_bottom:
      return "open family does not contain 0_X (the all-zero set)";
    case Kind::missing_top:
      return "open family does not contain 1_X (the all-d set)";
    case Kind::missing_meet:
      return "meet of open sets " + paren(*lhs) + " and " + paren(*rhs) +
             " = " + paren(*missing) + " is not open";
    case Kind::missing_join:
      return "join of open sets " + paren(*lhs) + " and " + paren(*rhs) +
             " = " + paren(*missing) + " is not open";
  }
  return "unknown violation";
}

InvalidTopologyError::InvalidTopologyError(std::vector<Violation> violations)
    : std::runtime_error("family is not a fuzzy topology (" +
                         std::to_string(violations.size()) + " violation(s))"),
      violations_(std::move(violations)) {}

FuzzyTopology::FuzzyTopology(CarrierPtr carrier, int denom,
                             std::vector<FuzzySet> opens)
    : carrier_(std::move(carrier)), denom_(denom), opens_(std::move(opens)) {
  std::sort(opens_.begin(), opens_.end(), lex_less);
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  closeds_.reserve(opens_.size());
  for (const auto& u : opens_) closeds_.push_back(complement(u));
  std::sort(closeds_.begin(), closeds_.end(), lex_less);
}

FuzzyTopology FuzzyTopology::from_family(CarrierPtr carrier, int denom,
                                         std::vector<FuzzySet> family) {
  auto violations = validate_family(carrier, denom, family);
  if (!violations.empty()) throw InvalidTopologyError(std::move(violations));
  return FuzzyTopology(std::move(carrier), denom, std::move(family));
}

namespace {
bool family_contains(const std::vector<FuzzySet>& sorted,
                     const FuzzySet& a) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), a, lex_less);
  return it != sorted.end() && it->nums() == a.nums();
}
}  // namespace

bool FuzzyTopology::is_open(const FuzzySet& a) const {
  require_on_grid(*this, a);
  return family_contains(opens_, a);
}

bool FuzzyTopology::is_closed(const FuzzySet& a) const {
  require_on_grid(*this, a);
  return family_contains(closeds_, a);
}

bool FuzzyTopology::is_clopen(const FuzzySet& a) const {
  return is_open(a) && is_closed(a);
}

bool FuzzyTopology::is_crisp() const {
  return std::all_of(opens_.begin(), opens_.end(),
                     [](const FuzzySet& u) { return u.is_crisp(); });
}

bool FuzzyTopology::on_grid(const FuzzySet& a) const {
  return a.denom() == denom_ &&
         (a.carrier() == carrier_ || *a.carrier() == *carrier_);
}

bool operator==(const FuzzyTopology& a, const FuzzyTopology& b) {
  return a.denom_ == b.denom_ && *a.carrier_ == *b.carrier_ &&
         a.opens_ == b.opens_;
}

std::vector<Violation> validate_family(const CarrierPtr& carrier, int denom,
                                       std::span<const FuzzySet> family) {
  if (!carrier || carrier->size() == 0)
    throw InvalidSetError("carrier must be non-empty");
  if (denom < 1) throw InvalidSetError("denominator must be positive");
  require_members_on_grid(carrier, denom, family);

  std::set<std::vector<int>> members;
  for (const auto& f : family) members.insert(f.nums());

  std::vector<Violation> out;
  const std::vector<int> bottom(carrier->size(), 0);
  const std::vector<int> top(carrier->size(), denom);
  if (!members.count(bottom))
    out.push_back({Violation::Kind::missing_bottom, {}, {}, {}});
  if (!members.count(top))
    out.push_back({Violation::Kind::missing_top, {}, {}, {}});

  std::vector<std::vector<int>> list(members.begin(), members.end());
  auto as_set = [&](const std::vector<int>& nums) {
    return FuzzySet(carrier, denom, nums);
  };
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      auto m = nums_meet(list[i], list[j]);
      if (!members.count(m))
        out.push_back({Violation::Kind::missing_meet, as_set(list[i]),
                       as_set(list[j]), as_set(m)});
      auto l = nums_join(list[i], list[j]);
      if (!members.count(l))
        out.push_back({Violation::Kind::missing_join, as_set(list[i]),
                       as_set(list[j]), as_set(l)});
    }
  }
  return out;
}

FuzzyTopology complete_family(const CarrierPtr& carrier, int denom,
                              std::span<const FuzzySet> generators,
                              std::size_t size_cap) {
  if (!carrier || carrier->size() == 0)
    throw InvalidSetError("carrier must be non-empty");
  if (denom < 1) throw InvalidSetError("denominator must be positive");
  require_members_on_grid(carrier, denom, generators);

  std::set<std::vector<int>> members;
  std::vector<std::vector<int>> list;
  std::deque<std::size_t> pending;
  auto add = [&](std::vector<int> nums) {
    if (members.insert(nums).second) {
      list.push_back(std::move(nums));
      pending.push_back(list.size() - 1);
      if (list.size() > size_cap) throw CompletionOverflowError(size_cap);
    }
  };

  add(std::vector<int>(carrier->size(), 0));
  add(std::vector<int>(carrier->size(), denom));
  for (const auto& g : generators) add(g.nums());

  // Combine each newcomer with everything already present; every pair is
  // eventually visited, so the result is meet/join closed.
  while (!pending.empty()) {
    std::size_t i = pending.front();
    pending.pop_front();
    for (std::size_t j = 0; j < list.size(); ++j) {
      add(nums_meet(list[i], list[j]));
      add(nums_join(list[i], list[j]));
    }
  }

  std::vector<FuzzySet> opens;
  opens.reserve(members.size());
  for (const auto& nums : members) opens.emplace_back(carrier, denom, nums);
  return FuzzyTopology::from_family(carrier, denom, std::move(opens));
}

void require_on_grid(const FuzzyTopology& t, const FuzzySet& a) {
  if (!t.on_grid(a))
    throw GridMismatchError("set does not live on this topology's grid");
}

FuzzySet interior(const FuzzyTopology& t, const FuzzySet& a) {
  require_on_grid(t, a);
  std::vector<int> acc(a.size(), 0);  // 0_X is open and below everything
  for (const auto& u : t.opens()) {
    if (!leq(u, a)) continue;
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] = std::max(acc[i], u.nums()[i]);
  }
  return FuzzySet(t.carrier(), t.denom(), std::move(acc));
}

FuzzySet closure(const FuzzyTopology& t, const FuzzySet& a) {
  require_on_grid(t, a);
  std::vector<int> acc(a.size(), t.denom());  // 1_X is closed, above all
  for (const auto& c : t.closeds()) {
    if (!leq(a, c)) continue;
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] = std::min(acc[i], c.nums()[i]);
  }
  return FuzzySet(t.carrier(), t.denom(), std::move(acc));
}

FuzzySet TopologyOps::closure(const FuzzySet& a) {
  if (!cache_enabled_) return fuzztop::closure(*topo_, a);
  auto it = closure_memo_.find(a.nums());
  if (it != closure_memo_.end()) return it->second;
  FuzzySet result = fuzztop::closure(*topo_, a);
  closure_memo_.emplace(a.nums(), result);
  return result;
}

FuzzySet TopologyOps::interior(const FuzzySet& a) {
  if (!cache_enabled_) return fuzztop::interior(*topo_, a);
  auto it = interior_memo_.find(a.nums());
  if (it != interior_memo_.end()) return it->second;
  FuzzySet result = fuzztop::interior(*topo_, a);
  interior_memo_.emplace(a.nums(), result);
  return result;
}

}  // namespace fuzztop
