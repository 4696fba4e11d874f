#include "fuzztop/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "fuzztop/space_io.hpp"

namespace fuzztop {

namespace {

const char* mode_name(SearchConfig::Mode m) {
  return m == SearchConfig::Mode::exhaustive ? "exhaustive" : "random";
}

std::string claims_echo(const SearchConfig& cfg) {
  if (cfg.claim_ids.empty()) return "all";
  std::string out;
  for (const auto& id : cfg.claim_ids) {
    if (!out.empty()) out += ',';
    out += id;
  }
  return out;
}

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["space"] = render_space(w.topology);
  auto args = nlohmann::ordered_json::array();
  for (const auto& a : w.args) args.push_back(a.nums());
  j["args"] = std::move(args);
  auto transcript = nlohmann::ordered_json::array();
  for (const auto& line : w.transcript)
    transcript.push_back({line.label, line.value.nums()});
  j["transcript"] = std::move(transcript);
  return j;
}

}  // namespace

std::string render_machine(const AuditReport& report) {
  std::ostringstream os;
  const SearchConfig& cfg = report.config;

  nlohmann::ordered_json run;
  run["record"] = "run";
  run["version"] = report.version;
  run["mode"] = mode_name(cfg.mode);
  run["n_min"] = cfg.n_min;
  run["n_max"] = cfg.n_max;
  run["d_min"] = cfg.d_min;
  run["d_max"] = cfg.d_max;
  run["spaces"] = cfg.random_spaces;
  run["args_per_space"] = cfg.args_per_space;
  run["max_generators"] = cfg.max_generators;
  run["seed"] = cfg.seed;
  run["size_cap"] = cfg.size_cap;
  run["max_grid_sets"] = cfg.max_grid_sets;
  run["budget"] = cfg.budget;
  run["fixtures"] = cfg.include_fixtures;
  run["claims"] = claims_echo(cfg);
  os << run.dump() << '\n';

  for (const auto& rec : report.claims) {
    nlohmann::ordered_json j;
    j["record"] = "claim";
    j["id"] = rec.id;
    j["statement"] = rec.statement;
    j["kind"] = to_string(rec.kind);
    j["arity"] = rec.arity;
    j["status"] = to_string(rec.status);
    j["holds"] = rec.holds;
    j["fails"] = rec.fails;
    j["hypothesis_not_met"] = rec.hypothesis_not_met;
    j["instances"] = rec.instances;
    if (rec.witness) {
      j["found_at"] = rec.witness->instance_index;
      j["witness"] = witness_json(*rec.witness);
    }
    os << j.dump() << '\n';
  }
  return os.str();
}

std::string render_human(const AuditReport& report) {
  std::ostringstream os;
  const SearchConfig& cfg = report.config;

  os << "boundary identity audit  v" << report.version << '\n';
  os << "mode " << mode_name(cfg.mode) << "  n " << cfg.n_min << ".."
     << cfg.n_max << "  d " << cfg.d_min << ".." << cfg.d_max << "  seed "
     << cfg.seed << "  workers " << cfg.workers << '\n';
  os << "fixtures " << (cfg.include_fixtures ? "on" : "off");
  if (cfg.mode == SearchConfig::Mode::random)
    os << "  spaces " << cfg.random_spaces << "  args/space "
       << cfg.args_per_space;
  os << "  size-cap " << cfg.size_cap << "  budget ";
  if (cfg.budget == 0)
    os << "none";
  else
    os << cfg.budget;
  os << "  claims " << claims_echo(cfg) << "\n\n";

  const std::string rule(96, '-');
  os << std::left << std::setw(22) << "id" << std::setw(24) << "status"
     << std::right << std::setw(10) << "holds" << std::setw(10) << "fails"
     << std::setw(10) << "not-met" << std::setw(12) << "instances"
     << std::setw(10) << "time" << '\n'
     << rule << '\n';

  std::size_t verified = 0, refuted = 0, witnessed = 0, unwitnessed = 0,
              skipped = 0;
  for (const auto& rec : report.claims) {
    switch (rec.status) {
      case ClaimStatus::verified_in_budget: ++verified; break;
      case ClaimStatus::refuted: ++refuted; break;
      case ClaimStatus::witnessed: ++witnessed; break;
      case ClaimStatus::unwitnessed_in_budget: ++unwitnessed; break;
      case ClaimStatus::skipped: ++skipped; break;
    }
    os << std::left << std::setw(22) << rec.id << std::setw(24)
       << to_string(rec.status) << std::right << std::setw(10) << rec.holds
       << std::setw(10) << rec.fails << std::setw(10)
       << rec.hypothesis_not_met << std::setw(12) << rec.instances;
    std::ostringstream t;
    t << std::fixed << std::setprecision(1) << rec.elapsed_ms << "ms";
    os << std::setw(10) << t.str() << '\n';
  }
  os << rule << '\n';
  os << report.claims.size() << " claims: " << verified << " verified, "
     << refuted << " refuted, " << witnessed << " witnessed, " << unwitnessed
     << " unwitnessed, " << skipped << " skipped";
  {
    std::ostringstream t;
    t << std::fixed << std::setprecision(0) << report.elapsed_ms;
    os << "   total " << t.str() << "ms\n";
  }

  for (const auto& rec : report.claims) {
    if (!rec.witness) continue;
    const Witness& w = *rec.witness;
    os << '\n'
       << (rec.status == ClaimStatus::witnessed ? "witness" : "counterexample")
       << " for " << rec.id << "  [" << rec.statement << "]  (found at instance "
       << w.instance_index << "):\n";
    std::istringstream space(render_space(w.topology));
    std::string line;
    while (std::getline(space, line)) os << "  " << line << '\n';
    const char* names[] = {"A", "B"};
    for (std::size_t i = 0; i < w.args.size() && i < 2; ++i)
      os << "  " << names[i] << " = " << nums_to_string(w.args[i]) << '\n';
    std::size_t width = 0;
    for (const auto& tl : w.transcript) width = std::max(width, tl.label.size());
    for (const auto& tl : w.transcript)
      os << "  " << std::left << std::setw(static_cast<int>(width))
         << tl.label << " = " << nums_to_string(tl.value) << '\n';
  }
  return os.str();
}

}  // namespace fuzztop
