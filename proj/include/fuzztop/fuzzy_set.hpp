#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fuzztop {

// Thrown when values from different grids (carrier or denominator) are mixed.
class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown on malformed values: empty carrier, duplicate labels, numerators
// outside [0, d], wrong vector length.
class InvalidSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One membership value k/d on the grid {0, 1/d, ..., 1}. Compared as a
// rational, exactly.
struct Degree {
  int num = 0;
  int den = 1;

  Degree(int num, int den);

  friend bool operator==(const Degree& a, const Degree& b) {
    return static_cast<long long>(a.num) * b.den ==
           static_cast<long long>(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    return static_cast<long long>(a.num) * b.den <=>
           static_cast<long long>(b.num) * a.den;
  }
};

std::string to_string(const Degree& d);

// Ordered list of distinct point labels. Immutable; shared between all sets
// of a space through CarrierPtr.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<std::string> labels);

// Canonical n-point carrier: a, b, ..., z, p26, p27, ...
CarrierPtr default_carrier(std::size_t n);

// A fuzzy set over a finite carrier: one numerator per point, all on the
// shared grid {0, 1/d, ..., 1}. Immutable value type.
class FuzzySet {
 public:
  FuzzySet(CarrierPtr carrier, int denom, std::vector<int> nums);

  static FuzzySet bottom(CarrierPtr carrier, int denom);  // 0_X
  static FuzzySet top(CarrierPtr carrier, int denom);     // 1_X

  const CarrierPtr& carrier() const { return carrier_; }
  int denom() const { return denom_; }
  const std::vector<int>& nums() const { return nums_; }
  std::size_t size() const { return nums_.size(); }
  int at(std::size_t i) const { return nums_.at(i); }
  Degree degree(std::size_t i) const { return Degree(nums_.at(i), denom_); }

  bool is_bottom() const;
  bool is_top() const;
  bool is_crisp() const;  // every numerator is 0 or d

  friend bool operator==(const FuzzySet& a, const FuzzySet& b);
  friend bool operator!=(const FuzzySet& a, const FuzzySet& b) {
    return !(a == b);
  }

 private:
  CarrierPtr carrier_;
  int denom_;
  std::vector<int> nums_;
};

bool same_grid(const FuzzySet& a, const FuzzySet& b);
void require_same_grid(const FuzzySet& a, const FuzzySet& b);

FuzzySet meet(const FuzzySet& a, const FuzzySet& b);  // pointwise min
FuzzySet join(const FuzzySet& a, const FuzzySet& b);  // pointwise max
FuzzySet complement(const FuzzySet& a);               // x -> d - a(x)

// Partial order: a(x) <= b(x) everywhere.
bool leq(const FuzzySet& a, const FuzzySet& b);
bool strict_lt(const FuzzySet& a, const FuzzySet& b);

// Pointwise min/max over a non-empty family on one grid.
FuzzySet family_inf(std::span<const FuzzySet> family);
FuzzySet family_sup(std::span<const FuzzySet> family);

// Indices x with a(x) - b(x) > 0 (arithmetic difference of numerators).
std::vector<std::size_t> positive_difference_support(const FuzzySet& a,
                                                     const FuzzySet& b);

// Exact embedding onto a finer grid: k/d becomes (k*factor)/(d*factor).
// The only sanctioned way to mix denominators; nothing rescales silently.
FuzzySet regrid(const FuzzySet& a, int factor);

// Canonical ordering of families: lexicographic on numerator vectors.
bool lex_less(const FuzzySet& a, const FuzzySet& b);

// "4 3" — numerators in carrier order.
std::string nums_to_string(const FuzzySet& a);

}  // namespace fuzztop
