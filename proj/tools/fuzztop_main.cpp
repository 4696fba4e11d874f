#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzztop/boundary.hpp"
#include "fuzztop/report.hpp"
#include "fuzztop/search.hpp"
#include "fuzztop/space_io.hpp"
#include "fuzztop/version.hpp"

namespace {

using namespace fuzztop;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;       // also parse errors
constexpr int kExitInvalid = 2;     // topology axiom violations
constexpr int kExitRefuted = 3;     // with --fail-on-refuted

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text +
                                "', expected N or LO..HI");
  }
}

FuzzySet parse_set_arg(const std::string& csv, const CarrierPtr& carrier,
                       int denom) {
  std::vector<int> nums;
  for (const auto& tok : split_csv(csv)) nums.push_back(std::stoi(tok));
  return FuzzySet(carrier, denom, std::move(nums));  // validates size/range
}

int report_violations(const std::vector<Violation>& violations) {
  for (const auto& v : violations) std::cout << v.message() << '\n';
  return kExitInvalid;
}

int run_validate(const std::string& path) {
  ParsedSpace space = load_space_file(path);
  auto violations = validate_family(space.carrier, space.denom, space.family);
  if (!violations.empty()) return report_violations(violations);
  std::cout << "valid: " << space.family.size() << " open sets on "
            << space.carrier->size() << " points, denom " << space.denom
            << '\n';
  return kExitOk;
}

int run_eval(const std::string& path, const std::string& set_csv,
             const std::string& ops_csv) {
  ParsedSpace space = load_space_file(path);
  auto violations = validate_family(space.carrier, space.denom, space.family);
  if (!violations.empty()) return report_violations(violations);
  FuzzyTopology t = FuzzyTopology::from_family(space.carrier, space.denom,
                                               std::move(space.family));
  FuzzySet a = parse_set_arg(set_csv, t.carrier(), t.denom());
  TopologyOps ops(t);
  for (const auto& op : split_csv(ops_csv)) {
    std::optional<FuzzySet> value;
    if (op == "cl") value = ops.closure(a);
    else if (op == "int") value = ops.interior(a);
    else if (op == "bd") value = boundary(ops, a);
    else if (op == "bdI") value = boundary_i(ops, a);
    else if (op == "bdII") value = boundary_ii(ops, a);
    else if (op == "bdIII") value = boundary_iii(ops, a);
    else {
      std::cerr << "unknown operator '" << op
                << "' (known: cl int bd bdI bdII bdIII)\n";
      return kExitUsage;
    }
    std::cout << op << " = " << nums_to_string(*value) << '\n';
    if (op == "bd")
      std::cout << "closed=" << (t.is_closed(*value) ? "true" : "false")
                << " open=" << (t.is_open(*value) ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int run_complete(const std::string& path, const std::string& out_path,
                 std::size_t size_cap) {
  ParsedSpace space = load_space_file(path);
  FuzzyTopology t =
      complete_family(space.carrier, space.denom, space.family, size_cap);
  std::string rendered = render_space(t);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return kExitUsage;
    }
    out << rendered;
  }
  return kExitOk;
}

int run_check(const SearchConfig& cfg, const std::string& format,
              bool fail_on_refuted) {
  AuditReport report = audit(cfg);
  std::cout << (format == "machine" ? render_machine(report)
                                    : render_human(report));
  if (fail_on_refuted)
    for (const auto& rec : report.claims)
      if (rec.status == ClaimStatus::refuted) return kExitRefuted;
  return kExitOk;
}

int run_enumerate(int n, int d, bool count_only, std::size_t max_grid_sets) {
  std::vector<FuzzyTopology> topos = enumerate_topologies(n, d, max_grid_sets);
  if (count_only) {
    std::cout << topos.size() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < topos.size(); ++i) {
    std::cout << "# topology " << (i + 1) << " of " << topos.size() << '\n'
              << render_space(topos[i]) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite fuzzy topologies, boundary operators, identity audit"};
  app.set_version_flag("--version", std::string("fuzztop ") + kVersion);
  app.require_subcommand(1);

  std::string space_path, out_path, set_csv, ops_csv = "bd";

  auto* validate = app.add_subcommand(
      "validate", "check a space file against the topology axioms");
  validate->add_option("file", space_path, "space file")->required();

  auto* eval = app.add_subcommand(
      "eval", "evaluate operators on a fuzzy set in a space");
  eval->add_option("file", space_path, "space file")->required();
  eval->add_option("--set", set_csv,
                   "argument numerators in carrier order, comma-separated")
      ->required();
  eval->add_option("--ops", ops_csv, "operators: cl,int,bd,bdI,bdII,bdIII");

  SearchConfig cfg;
  std::size_t complete_cap = kDefaultSizeCap;

  auto* complete = app.add_subcommand(
      "complete", "close a generator family into a topology");
  complete->add_option("file", space_path, "generator space file")->required();
  complete->add_option("-o,--output", out_path,
                       "output file (default: stdout)");
  complete->add_option("--size-cap", complete_cap, "completion size cap");

  std::string claims = "all", mode = "exhaustive", n_range = "1",
              d_range = "1", format = "human";
  bool fail_on_refuted = false, no_fixtures = false;

  auto* check =
      app.add_subcommand("check", "audit identity claims over a search pool");
  check->add_option("--claims", claims, "comma-separated claim ids, or 'all'");
  check->add_option("--mode", mode, "exhaustive | random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  check->add_option("--n", n_range, "carrier sizes, N or LO..HI");
  check->add_option("--d", d_range, "denominators, N or LO..HI");
  check->add_option("--spaces", cfg.random_spaces,
                    "random mode: sampled spaces");
  check->add_option("--args-per-space", cfg.args_per_space,
                    "random mode: sampled argument sets per space");
  check->add_option("--max-generators", cfg.max_generators,
                    "random mode: generators per space drawn from [0, max]");
  check->add_option("--seed", cfg.seed, "PRNG seed");
  check->add_option("--size-cap", cfg.size_cap, "completion size cap");
  check->add_option("--max-grid-sets", cfg.max_grid_sets,
                    "exhaustive feasibility bound on (d+1)^n");
  check->add_option("--budget", cfg.budget,
                    "per-claim instance cap (0 = none)");
  check->add_option("--workers", cfg.workers, "parallel evaluation workers");
  check->add_option("--format", format, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));
  check->add_flag("--fail-on-refuted", fail_on_refuted,
                  "exit 3 if any selected claim is refuted");
  check->add_flag("--no-fixtures", no_fixtures,
                  "skip the always-checked fixture instances");

  int enum_n = 1, enum_d = 1;
  bool count_only = false;
  std::size_t enum_max_grid = kDefaultMaxGridSets;

  auto* enumerate =
      app.add_subcommand("enumerate", "list every topology on a small grid");
  enumerate->add_option("--n", enum_n, "carrier size")->required();
  enumerate->add_option("--d", enum_d, "denominator")->required();
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("--max-grid-sets", enum_max_grid,
                        "feasibility bound on (d+1)^n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(space_path);
    if (eval->parsed()) return run_eval(space_path, set_csv, ops_csv);
    if (complete->parsed())
      return run_complete(space_path, out_path, complete_cap);
    if (check->parsed()) {
      cfg.mode = mode == "random" ? SearchConfig::Mode::random
                                  : SearchConfig::Mode::exhaustive;
      std::tie(cfg.n_min, cfg.n_max) = parse_range(n_range);
      std::tie(cfg.d_min, cfg.d_max) = parse_range(d_range);
      cfg.include_fixtures = !no_fixtures;
      if (claims != "all") cfg.claim_ids = split_csv(claims);
      return run_check(cfg, format, fail_on_refuted);
    }
    if (enumerate->parsed())
      return run_enumerate(enum_n, enum_d, count_only, enum_max_grid);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidTopologyError& e) {
    std::cerr << e.what() << '\n';
    for (const auto& v : e.violations()) std::cerr << v.message() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
