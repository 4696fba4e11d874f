#include "fuzztop/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "fuzztop/version.hpp"

namespace fuzztop {

std::uint64_t grid_size(int n, int d) {
  if (n < 1 || d < 1)
    throw std::invalid_argument("grid_size needs n >= 1 and d >= 1");
  std::uint64_t out = 1;
  const std::uint64_t base = static_cast<std::uint64_t>(d) + 1;
  for (int i = 0; i < n; ++i) {
    if (out > UINT64_MAX / base)
      throw std::overflow_error("grid size overflows 64 bits");
    out *= base;
  }
  return out;
}

std::vector<FuzzySet> enumerate_fuzzy_sets(const CarrierPtr& carrier,
                                           int denom) {
  const std::size_t n = carrier->size();
  std::uint64_t count = grid_size(static_cast<int>(n), denom);
  std::vector<FuzzySet> out;
  out.reserve(count);
  std::vector<int> nums(n, 0);
  while (true) {
    out.emplace_back(carrier, denom, nums);
    // lexicographic odometer: bump the last coordinate first
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (nums[i] < denom) {
        ++nums[i];
        std::fill(nums.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  nums.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
  }
}

bool exhaustive_feasible(int n, int d, std::size_t max_grid_sets) {
  if (n < 1 || d < 1) return false;
  long double sets = 1;
  for (int i = 0; i < n; ++i) sets *= d + 1;
  return sets <= static_cast<long double>(max_grid_sets);
}

std::vector<FuzzyTopology> enumerate_topologies(int n, int d,
                                                std::size_t max_grid_sets) {
  if (!exhaustive_feasible(n, d, max_grid_sets))
    throw EnumerationBoundError(
        "exhaustive enumeration at n=" + std::to_string(n) +
        ", d=" + std::to_string(d) + " needs (d+1)^n <= " +
        std::to_string(max_grid_sets) + " grid sets; use random mode");

  CarrierPtr carrier = default_carrier(static_cast<std::size_t>(n));
  std::vector<FuzzySet> grid = enumerate_fuzzy_sets(carrier, d);
  const std::size_t g = grid.size();
  if (g - 2 >= 63)
    throw EnumerationBoundError("grid too large for mask enumeration");

  auto member = [&](const std::vector<int>& nums,
                    const std::vector<const FuzzySet*>& family) {
    for (const auto* f : family)
      if (f->nums() == nums) return true;
    return false;
  };

  std::vector<FuzzyTopology> out;
  const std::size_t middle = g - 2;  // grid[0] = 0_X, grid[g-1] = 1_X forced
  for (std::uint64_t mask = 0; mask < (1ULL << middle); ++mask) {
    std::vector<const FuzzySet*> family;
    family.push_back(&grid.front());
    for (std::size_t j = 0; j < middle; ++j)
      if (mask & (1ULL << j)) family.push_back(&grid[j + 1]);
    family.push_back(&grid.back());

    bool closed = true;
    for (std::size_t i = 0; i < family.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < family.size() && closed; ++j) {
        std::vector<int> m(family[i]->nums()), l(family[i]->nums());
        for (std::size_t x = 0; x < m.size(); ++x) {
          m[x] = std::min(m[x], family[j]->nums()[x]);
          l[x] = std::max(l[x], family[j]->nums()[x]);
        }
        if (!member(m, family) || !member(l, family)) closed = false;
      }
    }
    if (!closed) continue;

    std::vector<FuzzySet> opens;
    opens.reserve(family.size());
    for (const auto* f : family) opens.push_back(*f);
    out.push_back(FuzzyTopology::from_family(carrier, d, std::move(opens)));
  }
  return out;
}

FuzzyTopology random_topology(const CarrierPtr& carrier, int denom,
                              int generator_count, SplitMix64& rng,
                              std::size_t size_cap) {
  constexpr int kMaxAttempts = 32;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<FuzzySet> gens;
    gens.reserve(static_cast<std::size_t>(generator_count));
    for (int i = 0; i < generator_count; ++i) {
      std::vector<int> nums(carrier->size());
      for (auto& v : nums)
        v = static_cast<int>(rng.below(static_cast<std::uint64_t>(denom) + 1));
      gens.emplace_back(carrier, denom, std::move(nums));
    }
    try {
      return complete_family(carrier, denom, gens, size_cap);
    } catch (const CompletionOverflowError&) {
      // draw a fresh generator batch
    }
  }
  throw CompletionOverflowError(size_cap);
}

std::uint64_t InstancePool::instance_count(int arity) const {
  std::uint64_t total = 0;
  for (const auto& s : spaces) {
    std::uint64_t k = s.unary_args.size();
    total += arity == 1 ? k : k * k;
  }
  return total;
}

namespace {

PoolSpace make_fixture(std::vector<std::string> labels, int denom,
                       std::vector<std::vector<int>> opens,
                       std::vector<int> designated) {
  CarrierPtr carrier = make_carrier(std::move(labels));
  std::vector<FuzzySet> family;
  family.reserve(opens.size());
  for (auto& nums : opens) family.emplace_back(carrier, denom, std::move(nums));
  FuzzyTopology t =
      FuzzyTopology::from_family(carrier, denom, std::move(family));
  std::vector<FuzzySet> args;
  args.emplace_back(carrier, denom, std::move(designated));
  args.push_back(FuzzySet::bottom(carrier, denom));
  args.push_back(FuzzySet::top(carrier, denom));
  return {std::move(t), std::move(args)};
}

}  // namespace

InstancePool fixture_pool() {
  InstancePool pool;
  pool.spaces.push_back(make_fixture(
      {"a", "b"}, 10,
      {{0, 0}, {2, 2}, {3, 2}, {3, 4}, {8, 4}, {10, 10}}, {4, 3}));
  pool.spaces.push_back(make_fixture({"a"}, 2, {{0}, {2}}, {1}));
  pool.spaces.push_back(make_fixture({"a"}, 10, {{0}, {2}, {9}, {10}}, {9}));
  return pool;
}

void append_exhaustive(InstancePool& pool, int n, int d,
                       std::size_t max_grid_sets) {
  std::vector<FuzzyTopology> topos = enumerate_topologies(n, d, max_grid_sets);
  if (topos.empty()) return;
  std::vector<FuzzySet> args = enumerate_fuzzy_sets(topos.front().carrier(), d);
  for (auto& t : topos) pool.spaces.push_back({std::move(t), args});
}

void append_random(InstancePool& pool, const SearchConfig& cfg) {
  if (cfg.args_per_space < 0 || cfg.max_generators < 0)
    throw std::invalid_argument(
        "argument and generator counts must be non-negative");
  SplitMix64 rng(cfg.seed);
  for (int i = 0; i < cfg.random_spaces; ++i) {
    int n = cfg.n_min +
            static_cast<int>(rng.below(
                static_cast<std::uint64_t>(cfg.n_max - cfg.n_min) + 1));
    int d = cfg.d_min +
            static_cast<int>(rng.below(
                static_cast<std::uint64_t>(cfg.d_max - cfg.d_min) + 1));
    int g = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(cfg.max_generators) + 1));
    CarrierPtr carrier = default_carrier(static_cast<std::size_t>(n));
    FuzzyTopology t = random_topology(carrier, d, g, rng, cfg.size_cap);
    std::vector<FuzzySet> args;
    args.push_back(FuzzySet::bottom(carrier, d));
    args.push_back(FuzzySet::top(carrier, d));
    for (int j = 0; j < cfg.args_per_space; ++j) {
      std::vector<int> nums(carrier->size());
      for (auto& v : nums)
        v = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
      args.emplace_back(carrier, d, std::move(nums));
    }
    pool.spaces.push_back({std::move(t), std::move(args)});
  }
}

InstancePool build_pool(const SearchConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min || cfg.d_min < 1 ||
      cfg.d_max < cfg.d_min)
    throw std::invalid_argument("carrier/denominator ranges must be non-empty");
  InstancePool pool;
  if (cfg.include_fixtures) pool = fixture_pool();
  if (cfg.mode == SearchConfig::Mode::exhaustive) {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
      for (int d = cfg.d_min; d <= cfg.d_max; ++d)
        append_exhaustive(pool, n, d, cfg.max_grid_sets);
  } else {
    if (cfg.random_spaces < 1)
      throw std::invalid_argument("random mode needs at least one space");
    append_random(pool, cfg);
  }
  return pool;
}

namespace {

struct IndexedOutcome {
  std::uint64_t index;
  Outcome outcome;
};

std::vector<FuzzySet> instance_args(const PoolSpace& space, int arity,
                                    std::uint64_t tuple) {
  if (arity == 1) return {space.unary_args[tuple]};
  std::uint64_t k = space.unary_args.size();
  return {space.unary_args[tuple / k], space.unary_args[tuple % k]};
}

}  // namespace

ScanResult scan_claim(const Claim& claim, const InstancePool& pool,
                      std::uint64_t budget, int workers) {
  if (workers < 1) workers = 1;

  // prefix[i] = number of instances before space i
  std::vector<std::uint64_t> prefix;
  prefix.reserve(pool.spaces.size());
  std::uint64_t total = 0;
  for (const auto& s : pool.spaces) {
    prefix.push_back(total);
    std::uint64_t k = s.unary_args.size();
    total += claim.arity == 1 ? k : k * k;
  }
  const std::uint64_t limit =
      budget > 0 ? std::min<std::uint64_t>(total, budget) : total;

  const Outcome target =
      claim.kind == ClaimKind::universal ? Outcome::fails : Outcome::holds;

  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::vector<std::vector<IndexedOutcome>> locals(
      static_cast<std::size_t>(workers));

  auto worker_body = [&](int w) {
    std::unordered_map<std::size_t, TopologyOps> ops_by_space;
    auto& local = locals[static_cast<std::size_t>(w)];
    for (std::uint64_t idx = static_cast<std::uint64_t>(w); idx < limit;
         idx += static_cast<std::uint64_t>(workers)) {
      if (idx > best.load(std::memory_order_relaxed)) break;
      auto it = std::upper_bound(prefix.begin(), prefix.end(), idx);
      std::size_t s = static_cast<std::size_t>(it - prefix.begin()) - 1;
      const PoolSpace& space = pool.spaces[s];
      auto ops_it = ops_by_space.find(s);
      if (ops_it == ops_by_space.end())
        ops_it = ops_by_space.emplace(s, TopologyOps(space.topology)).first;
      std::vector<FuzzySet> args =
          instance_args(space, claim.arity, idx - prefix[s]);
      Outcome out = evaluate_claim(claim, ops_it->second, args);
      local.push_back({idx, out});
      if (out == target) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (idx < cur &&
               !best.compare_exchange_weak(cur, idx,
                                           std::memory_order_relaxed)) {
        }
        break;  // nothing past idx matters for this worker
      }
    }
  };

  if (workers == 1) {
    worker_body(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker_body, w);
    for (auto& t : threads) t.join();
  }

  ScanResult result;
  const std::uint64_t found = best.load();
  const std::uint64_t stop = found != UINT64_MAX ? found
                             : limit > 0        ? limit - 1
                                                : 0;
  if (limit > 0) {
    result.instances = stop + 1;
    for (const auto& local : locals) {
      for (const auto& rec : local) {
        if (rec.index > stop) continue;
        switch (rec.outcome) {
          case Outcome::holds:
            ++result.holds;
            break;
          case Outcome::fails:
            ++result.fails;
            break;
          case Outcome::hypothesis_not_met:
            ++result.hypothesis_not_met;
            break;
        }
      }
    }
  }

  if (found != UINT64_MAX) {
    auto it = std::upper_bound(prefix.begin(), prefix.end(), found);
    std::size_t s = static_cast<std::size_t>(it - prefix.begin()) - 1;
    const PoolSpace& space = pool.spaces[s];
    std::vector<FuzzySet> args =
        instance_args(space, claim.arity, found - prefix[s]);
    TopologyOps ops(space.topology);
    result.witness = Witness{space.topology, args, claim.id,
                             evaluation_transcript(ops, args), found};
  }
  return result;
}

ScanResult find_counterexample(const Claim& claim, const SearchConfig& cfg) {
  return scan_claim(claim, build_pool(cfg), cfg.budget, cfg.workers);
}

namespace {

struct Candidate {
  FuzzyTopology topology;
  std::vector<FuzzySet> args;
};

Candidate project_point(const FuzzyTopology& t,
                        const std::vector<FuzzySet>& args, std::size_t drop,
                        std::size_t size_cap) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t.carrier()->size(); ++i)
    if (i != drop) labels.push_back(t.carrier()->label(i));
  CarrierPtr carrier = make_carrier(std::move(labels));

  auto project = [&](const FuzzySet& s) {
    std::vector<int> nums;
    nums.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != drop) nums.push_back(s.nums()[i]);
    return FuzzySet(carrier, t.denom(), std::move(nums));
  };

  std::vector<FuzzySet> opens;
  opens.reserve(t.opens().size());
  for (const auto& u : t.opens()) opens.push_back(project(u));
  // Pointwise min/max commute with coordinate deletion, so the projected
  // family is already a topology; completion only canonicalizes it.
  FuzzyTopology projected =
      complete_family(carrier, t.denom(), opens, size_cap);

  std::vector<FuzzySet> new_args;
  new_args.reserve(args.size());
  for (const auto& a : args) new_args.push_back(project(a));
  return {std::move(projected), std::move(new_args)};
}

}  // namespace

Witness shrink_witness(const Claim& claim, const Witness& witness,
                       std::size_t size_cap) {
  const Outcome target =
      claim.kind == ClaimKind::universal ? Outcome::fails : Outcome::holds;
  auto reproduces = [&](const FuzzyTopology& t,
                        const std::vector<FuzzySet>& args) {
    TopologyOps ops(t);
    return evaluate_claim(claim, ops, args) == target;
  };

  FuzzyTopology topo = witness.topology;
  std::vector<FuzzySet> args = witness.args;

  bool changed = true;
  while (changed) {
    changed = false;

    // 1) drop carrier points
    bool progress = true;
    while (progress && topo.carrier()->size() > 1) {
      progress = false;
      for (std::size_t p = 0; p < topo.carrier()->size(); ++p) {
        Candidate c = project_point(topo, args, p, size_cap);
        if (reproduces(c.topology, c.args)) {
          topo = std::move(c.topology);
          args = std::move(c.args);
          changed = progress = true;
          break;
        }
      }
    }

    // 2) snap argument numerators toward the ends of the grid
    for (auto& a : args) {
      for (std::size_t x = 0; x < a.size(); ++x) {
        int v = a.nums()[x];
        if (v == 0) continue;
        std::vector<int> nums = a.nums();
        nums[x] = 0;
        FuzzySet snapped(a.carrier(), a.denom(), nums);
        std::vector<FuzzySet> trial = args;
        trial[&a - args.data()] = snapped;
        if (reproduces(topo, trial)) {
          a = std::move(snapped);
          changed = true;
          continue;
        }
        if (v == a.denom()) continue;
        nums[x] = a.denom();
        FuzzySet snapped_up(a.carrier(), a.denom(), std::move(nums));
        trial[&a - args.data()] = snapped_up;
        if (reproduces(topo, trial)) {
          a = std::move(snapped_up);
          changed = true;
        }
      }
    }

    // 3) remove open sets (completion may re-add; require strict progress)
    bool removed = true;
    while (removed) {
      removed = false;
      for (const auto& u : topo.opens()) {
        if (u.is_bottom() || u.is_top()) continue;
        std::vector<FuzzySet> gens;
        gens.reserve(topo.opens().size() - 1);
        for (const auto& v : topo.opens())
          if (v != u) gens.push_back(v);
        FuzzyTopology candidate =
            complete_family(topo.carrier(), topo.denom(), gens, size_cap);
        if (candidate.opens().size() >= topo.opens().size()) continue;
        if (reproduces(candidate, args)) {
          topo = std::move(candidate);
          changed = removed = true;
          break;
        }
      }
    }
  }

  TopologyOps ops(topo);
  std::vector<TranscriptLine> transcript = evaluation_transcript(ops, args);
  return {std::move(topo), std::move(args), witness.claim_id,
          std::move(transcript), witness.instance_index};
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified_in_budget:
      return "VERIFIED_IN_BUDGET";
    case ClaimStatus::refuted:
      return "REFUTED";
    case ClaimStatus::witnessed:
      return "WITNESSED";
    case ClaimStatus::unwitnessed_in_budget:
      return "UNWITNESSED_IN_BUDGET";
    case ClaimStatus::skipped:
      return "SKIPPED";
  }
  return "?";
}

AuditReport audit_pool(const SearchConfig& cfg, const InstancePool& pool) {
  std::unordered_set<std::string> selected(cfg.claim_ids.begin(),
                                           cfg.claim_ids.end());
  for (const auto& id : selected)
    if (!find_claim(id)) throw std::invalid_argument("unknown claim id: " + id);

  AuditReport report;
  report.config = cfg;
  report.version = kVersion;

  const auto run_start = std::chrono::steady_clock::now();
  for (const Claim& claim : registry()) {
    ClaimRecord rec;
    rec.id = claim.id;
    rec.statement = claim.statement;
    rec.kind = claim.kind;
    rec.arity = claim.arity;
    if (!selected.empty() && !selected.count(claim.id)) {
      rec.status = ClaimStatus::skipped;
      report.claims.push_back(std::move(rec));
      continue;
    }

    const auto t0 = std::chrono::steady_clock::now();
    ScanResult scan = scan_claim(claim, pool, cfg.budget, cfg.workers);
    rec.holds = scan.holds;
    rec.fails = scan.fails;
    rec.hypothesis_not_met = scan.hypothesis_not_met;
    rec.instances = scan.instances;
    if (claim.kind == ClaimKind::universal)
      rec.status = scan.witness ? ClaimStatus::refuted
                                : ClaimStatus::verified_in_budget;
    else
      rec.status = scan.witness ? ClaimStatus::witnessed
                                : ClaimStatus::unwitnessed_in_budget;
    if (scan.witness) {
      Witness shrunk = shrink_witness(claim, *scan.witness, cfg.size_cap);
      TopologyOps ops(shrunk.topology);
      Outcome check = evaluate_claim(claim, ops, shrunk.args);
      Outcome target = claim.kind == ClaimKind::universal ? Outcome::fails
                                                          : Outcome::holds;
      if (check != target)
        throw std::logic_error("shrunk witness for " + claim.id +
                               " no longer reproduces the outcome");
      rec.witness = std::move(shrunk);
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    report.claims.push_back(std::move(rec));
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - run_start)
                          .count();
  return report;
}

AuditReport audit(const SearchConfig& cfg) {
  return audit_pool(cfg, build_pool(cfg));
}

}  // namespace fuzztop
