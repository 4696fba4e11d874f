#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fuzztop/fuzzy_set.hpp"
#include "fuzztop/topology.hpp"

namespace fuzztop {

// Space files are plain text:
//
//   # comment
//   carrier a b
//   denom 10
//   open 8 4        <- numerators in carrier order, one line per open set
//
// `carrier` and `denom` must appear once, before any `open` line. Blank
// lines and `#` comments are ignored. The family is a set: duplicate open
// lines collapse.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A parsed file; the family is deduplicated and lex-sorted but NOT yet
// checked against the topology axioms (validate_family does that).
struct ParsedSpace {
  CarrierPtr carrier;
  int denom = 1;
  std::vector<FuzzySet> family;
};

ParsedSpace parse_space(std::istream& in);
ParsedSpace parse_space_text(std::string_view text);
ParsedSpace load_space_file(const std::filesystem::path& path);

// Canonical rendering: carrier, denom, opens in lexicographic order.
// parse(render(T)) reproduces T exactly.
std::string render_space(const FuzzyTopology& t);
std::string render_family(const CarrierPtr& carrier, int denom,
                          std::span<const FuzzySet> family);

}  // namespace fuzztop
