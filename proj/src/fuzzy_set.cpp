#include "fuzztop/fuzzy_set.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace fuzztop {

Degree::Degree(int num, int den) : num(num), den(den) {
  if (den < 1) throw InvalidSetError("degree denominator must be positive");
  if (num < 0 || num > den)
    throw InvalidSetError("degree numerator must lie in [0, d]");
}

std::string to_string(const Degree& d) {
  return std::to_string(d.num) + "/" + std::to_string(d.den);
}

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidSetError("carrier must be non-empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidSetError("carrier labels must be non-empty");
    if (!seen.insert(l).second)
      throw InvalidSetError("duplicate carrier label: " + l);
  }
}

std::optional<std::size_t> Carrier::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

CarrierPtr make_carrier(std::vector<std::string> labels) {
  return std::make_shared<const Carrier>(std::move(labels));
}

CarrierPtr default_carrier(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < 26)
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      labels.push_back("p" + std::to_string(i));
  }
  return make_carrier(std::move(labels));
}

FuzzySet::FuzzySet(CarrierPtr carrier, int denom, std::vector<int> nums)
    : carrier_(std::move(carrier)), denom_(denom), nums_(std::move(nums)) {
  if (!carrier_) throw InvalidSetError("fuzzy set needs a carrier");
  if (denom_ < 1) throw InvalidSetError("denominator must be positive");
  if (nums_.size() != carrier_->size())
    throw InvalidSetError("numerator vector length does not match carrier");
  for (int v : nums_)
    if (v < 0 || v > denom_)
      throw InvalidSetError("numerator " + std::to_string(v) +
                            " outside [0, " + std::to_string(denom_) + "]");
}

FuzzySet FuzzySet::bottom(CarrierPtr carrier, int denom) {
  std::size_t n = carrier ? carrier->size() : 0;
  return FuzzySet(std::move(carrier), denom, std::vector<int>(n, 0));
}

FuzzySet FuzzySet::top(CarrierPtr carrier, int denom) {
  std::size_t n = carrier ? carrier->size() : 0;
  return FuzzySet(std::move(carrier), denom, std::vector<int>(n, denom));
}

bool FuzzySet::is_bottom() const {
  return std::all_of(nums_.begin(), nums_.end(), [](int v) { return v == 0; });
}

bool FuzzySet::is_top() const {
  return std::all_of(nums_.begin(), nums_.end(),
                     [this](int v) { return v == denom_; });
}

bool FuzzySet::is_crisp() const {
  return std::all_of(nums_.begin(), nums_.end(),
                     [this](int v) { return v == 0 || v == denom_; });
}

bool operator==(const FuzzySet& a, const FuzzySet& b) {
  return a.denom_ == b.denom_ && a.nums_ == b.nums_ &&
         (a.carrier_ == b.carrier_ || *a.carrier_ == *b.carrier_);
}

bool same_grid(const FuzzySet& a, const FuzzySet& b) {
  return a.denom() == b.denom() &&
         (a.carrier() == b.carrier() || *a.carrier() == *b.carrier());
}

void require_same_grid(const FuzzySet& a, const FuzzySet& b) {
  if (!same_grid(a, b))
    throw GridMismatchError("operands live on different carriers or grids");
}

FuzzySet meet(const FuzzySet& a, const FuzzySet& b) {
  require_same_grid(a, b);
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::min(a.nums()[i], b.nums()[i]);
  return FuzzySet(a.carrier(), a.denom(), std::move(out));
}

FuzzySet join(const FuzzySet& a, const FuzzySet& b) {
  require_same_grid(a, b);
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::max(a.nums()[i], b.nums()[i]);
  return FuzzySet(a.carrier(), a.denom(), std::move(out));
}

FuzzySet complement(const FuzzySet& a) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.denom() - a.nums()[i];
  return FuzzySet(a.carrier(), a.denom(), std::move(out));
}

bool leq(const FuzzySet& a, const FuzzySet& b) {
  require_same_grid(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.nums()[i] > b.nums()[i]) return false;
  return true;
}

bool strict_lt(const FuzzySet& a, const FuzzySet& b) {
  return leq(a, b) && a != b;
}

FuzzySet family_inf(std::span<const FuzzySet> family) {
  if (family.empty())
    throw InvalidSetError("family_inf of an empty family is undefined");
  FuzzySet acc = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) acc = meet(acc, family[i]);
  return acc;
}

FuzzySet family_sup(std::span<const FuzzySet> family) {
  if (family.empty())
    throw InvalidSetError("family_sup of an empty family is undefined");
  FuzzySet acc = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) acc = join(acc, family[i]);
  return acc;
}

std::vector<std::size_t> positive_difference_support(const FuzzySet& a,
                                                     const FuzzySet& b) {
  require_same_grid(a, b);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.nums()[i] - b.nums()[i] > 0) out.push_back(i);
  return out;
}

FuzzySet regrid(const FuzzySet& a, int factor) {
  if (factor < 1) throw InvalidSetError("regrid factor must be >= 1");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.nums()[i] * factor;
  return FuzzySet(a.carrier(), a.denom() * factor, std::move(out));
}

bool lex_less(const FuzzySet& a, const FuzzySet& b) {
  return a.nums() < b.nums();
}

std::string nums_to_string(const FuzzySet& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ' ';
    os << a.nums()[i];
  }
  return os.str();
}

}  // namespace fuzztop
