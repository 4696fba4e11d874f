#include "fuzztop/space_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fuzztop {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

int parse_int(const std::string& tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

ParsedSpace parse_space(std::istream& in) {
  std::vector<std::string> carrier_labels;
  bool have_carrier = false;
  int denom = 0;
  bool have_denom = false;
  std::vector<std::vector<int>> opens;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    const std::string& directive = toks[0];
    if (directive == "carrier") {
      if (have_carrier) throw ParseError(line_no, "duplicate carrier line");
      if (toks.size() < 2)
        throw ParseError(line_no, "carrier needs at least one label");
      carrier_labels.assign(toks.begin() + 1, toks.end());
      have_carrier = true;
    } else if (directive == "denom") {
      if (have_denom) throw ParseError(line_no, "duplicate denom line");
      if (toks.size() != 2)
        throw ParseError(line_no, "denom takes exactly one integer");
      denom = parse_int(toks[1], line_no);
      if (denom < 1) throw ParseError(line_no, "denom must be positive");
      have_denom = true;
    } else if (directive == "open") {
      if (!have_carrier || !have_denom)
        throw ParseError(line_no, "open lines must follow carrier and denom");
      if (toks.size() != carrier_labels.size() + 1)
        throw ParseError(line_no,
                         "open set needs " +
                             std::to_string(carrier_labels.size()) +
                             " numerators, got " +
                             std::to_string(toks.size() - 1));
      std::vector<int> nums;
      nums.reserve(carrier_labels.size());
      for (std::size_t i = 1; i < toks.size(); ++i) {
        int v = parse_int(toks[i], line_no);
        if (v < 0 || v > denom)
          throw ParseError(line_no, "numerator " + std::to_string(v) +
                                        " outside [0, " +
                                        std::to_string(denom) + "]");
        nums.push_back(v);
      }
      opens.push_back(std::move(nums));
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
  }

  if (!have_carrier) throw ParseError(line_no, "missing carrier line");
  if (!have_denom) throw ParseError(line_no, "missing denom line");

  ParsedSpace out;
  try {
    out.carrier = make_carrier(std::move(carrier_labels));
  } catch (const InvalidSetError& e) {
    throw ParseError(line_no, e.what());
  }
  out.denom = denom;

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  out.family.reserve(opens.size());
  for (auto& nums : opens)
    out.family.emplace_back(out.carrier, denom, std::move(nums));
  return out;
}

ParsedSpace parse_space_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_space(in);
}

ParsedSpace load_space_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open space file: " + path.string());
  return parse_space(in);
}

std::string render_family(const CarrierPtr& carrier, int denom,
                          std::span<const FuzzySet> family) {
  std::ostringstream os;
  os << "carrier";
  for (const auto& l : carrier->labels()) os << ' ' << l;
  os << "\ndenom " << denom << '\n';
  std::vector<const FuzzySet*> sorted;
  sorted.reserve(family.size());
  for (const auto& f : family) sorted.push_back(&f);
  std::sort(sorted.begin(), sorted.end(),
            [](const FuzzySet* a, const FuzzySet* b) { return lex_less(*a, *b); });
  for (const auto* f : sorted) os << "open " << nums_to_string(*f) << '\n';
  return os.str();
}

std::string render_space(const FuzzyTopology& t) {
  return render_family(t.carrier(), t.denom(), t.opens());
}

}  // namespace fuzztop
