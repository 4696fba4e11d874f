#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fuzztop/report.hpp"
#include "test_support.hpp"

using namespace fuzztop;
using testsupport::fs;
using testsupport::random_set;

namespace {

std::size_t distinct_numerators(const Witness& w) {
  std::set<int> values;
  for (const auto& u : w.topology.opens())
    values.insert(u.nums().begin(), u.nums().end());
  for (const auto& a : w.args) values.insert(a.nums().begin(), a.nums().end());
  return values.size();
}

SearchConfig tabulated_config() {
  // exhaustive n=1..2, d=1..2: covers (1,1), (1,2), (2,1), (2,2)
  SearchConfig cfg;
  cfg.mode = SearchConfig::Mode::exhaustive;
  cfg.n_min = 1;
  cfg.n_max = 2;
  cfg.d_min = 1;
  cfg.d_max = 2;
  return cfg;
}

}  // namespace

TEST_CASE("splitmix64 reference stream for seed 0") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  SplitMix64 again(0);
  CHECK(again.below(10) == 0xE220A8397B1DCDAFULL % 10);
}

TEST_CASE("grid sizes") {
  CHECK(grid_size(1, 2) == 3);
  CHECK(grid_size(2, 1) == 4);
  CHECK(grid_size(2, 10) == 121);
  CHECK_THROWS_AS(grid_size(0, 1), std::invalid_argument);
}

TEST_CASE("fuzzy set enumeration is lexicographic and complete") {
  auto c = default_carrier(2);
  auto sets = enumerate_fuzzy_sets(c, 1);
  REQUIRE(sets.size() == 4);
  CHECK(sets.front().is_bottom());
  CHECK(sets.back().is_top());
  CHECK(sets[1].nums() == std::vector<int>{0, 1});
  CHECK(sets[2].nums() == std::vector<int>{1, 0});

  auto one = enumerate_fuzzy_sets(default_carrier(1), 2);
  REQUIRE(one.size() == 3);
  CHECK(one[1].nums() == std::vector<int>{1});

  auto big = enumerate_fuzzy_sets(c, 10);
  CHECK(big.size() == 121);
  std::set<std::vector<int>> distinct;
  for (const auto& s : big) distinct.insert(s.nums());
  CHECK(distinct.size() == 121);
}

TEST_CASE("topology enumeration counts on the tabulated grids") {
  CHECK(enumerate_topologies(1, 1).size() == 1);
  CHECK(enumerate_topologies(1, 2).size() == 2);
  CHECK(enumerate_topologies(2, 1).size() == 4);
}

TEST_CASE("every chain family over one point is a topology") {
  // independent closed form: subsets of a chain containing both ends are
  // automatically meet/join closed, so the count is 2^(d-1)
  for (int d = 1; d <= 5; ++d) {
    auto topos = enumerate_topologies(1, d);
    CHECK(topos.size() == (1u << (d - 1)));
    for (const auto& t : topos)
      CHECK(validate_family(t.carrier(), t.denom(), t.opens()).empty());
  }
}

TEST_CASE("every enumerated topology is valid and the order is stable") {
  auto a = enumerate_topologies(2, 2);
  auto b = enumerate_topologies(2, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(validate_family(a[i].carrier(), a[i].denom(), a[i].opens()).empty());
  }
}

TEST_CASE("enumeration refuses oversized grids") {
  CHECK(exhaustive_feasible(1, 11));
  CHECK(!exhaustive_feasible(2, 3));  // 16 grid sets > 12
  CHECK_THROWS_AS(enumerate_topologies(2, 3), EnumerationBoundError);
  CHECK_THROWS_WITH_AS(enumerate_topologies(3, 2),
                       doctest::Contains("random mode"),
                       EnumerationBoundError);
}

TEST_CASE("random topologies are deterministic and valid") {
  auto c = default_carrier(2);
  SplitMix64 r1(99), r2(99);
  for (int i = 0; i < 20; ++i) {
    FuzzyTopology t1 = random_topology(c, 10, 3, r1);
    FuzzyTopology t2 = random_topology(c, 10, 3, r2);
    CHECK(t1 == t2);
    CHECK(validate_family(t1.carrier(), t1.denom(), t1.opens()).empty());
  }
  SplitMix64 r3(1);
  FuzzyTopology ind = random_topology(c, 10, 0, r3);
  CHECK(ind.opens().size() == 2);  // no generators: indiscrete
}

TEST_CASE("fixture pool contents") {
  InstancePool pool = fixture_pool();
  REQUIRE(pool.spaces.size() == 3);
  const PoolSpace& golden = pool.spaces[0];
  CHECK(golden.topology == testsupport::golden_space());
  REQUIRE(golden.unary_args.size() == 3);
  CHECK(golden.unary_args[0].nums() == std::vector<int>{4, 3});
  CHECK(golden.unary_args[1].is_bottom());
  CHECK(golden.unary_args[2].is_top());
  CHECK(pool.spaces[1].topology == testsupport::indiscrete_point_d2());
  CHECK(pool.spaces[2].topology == testsupport::chain_point_d10());
  CHECK(pool.instance_count(1) == 9);
  CHECK(pool.instance_count(2) == 27);
}

TEST_CASE("exhaustive scan visits the closed-form instance count") {
  // T2.1.iv never fails, so the scan runs to exhaustion
  const Claim* iv = find_claim("T2.1.iv");
  const Claim* i2 = find_claim("T2.1.i");
  REQUIRE(iv);
  REQUIRE(i2);

  InstancePool pool;
  append_exhaustive(pool, 2, 1);  // 4 topologies x 4 sets
  ScanResult r = scan_claim(*iv, pool, 0, 1);
  CHECK(!r.witness);
  CHECK(r.instances == 16);
  CHECK(r.holds == 16);
  CHECK(scan_claim(*i2, pool, 0, 1).instances == 64);  // 4 x 4^2

  InstancePool pool2;
  append_exhaustive(pool2, 1, 2);  // 2 topologies x 3 sets
  CHECK(scan_claim(*iv, pool2, 0, 1).instances == 6);
}

TEST_CASE("budget caps the scan") {
  const Claim* iv = find_claim("T2.1.iv");
  InstancePool pool;
  append_exhaustive(pool, 2, 1);
  ScanResult r = scan_claim(*iv, pool, 5, 1);
  CHECK(r.instances == 5);
}

TEST_CASE("forced witness: T3.1 at n=1 d=1 is 1_X on the indiscrete point") {
  const Claim* c = find_claim("T3.1");
  REQUIRE(c);
  InstancePool pool;
  append_exhaustive(pool, 1, 1);
  ScanResult r = scan_claim(*c, pool, 0, 1);
  REQUIRE(r.witness);
  CHECK(r.witness->instance_index == 1);  // (0) holds, (1) fails
  CHECK(r.witness->topology.opens().size() == 2);
  CHECK(r.witness->args[0].is_top());
  CHECK(r.holds == 1);
  CHECK(r.fails == 1);
}

TEST_CASE("forced witness: T2.1.xii-conv at n=1 d=2") {
  const Claim* c = find_claim("T2.1.xii-conv");
  REQUIRE(c);
  InstancePool pool;
  append_exhaustive(pool, 1, 2);
  ScanResult r = scan_claim(*c, pool, 0, 1);
  REQUIRE(r.witness);
  // first topology is the indiscrete {0, 2}; (1) is the first failure
  CHECK(r.witness->topology.opens().size() == 2);
  CHECK(r.witness->args[0].nums() == std::vector<int>{1});
}

TEST_CASE("find_counterexample drives a whole config") {
  const Claim* c = find_claim("T3.1");
  REQUIRE(c);
  SearchConfig cfg;  // exhaustive n=1 d=1
  cfg.include_fixtures = false;
  ScanResult r = find_counterexample(*c, cfg);
  REQUIRE(r.witness);
  CHECK(r.witness->args[0].is_top());
  CHECK(r.witness->topology.opens().size() == 2);

  const Claim* iv = find_claim("T2.1.iv");
  ScanResult verified = find_counterexample(*iv, cfg);
  CHECK(!verified.witness);
  CHECK(verified.instances == 2);  // one topology, two grid sets
}

TEST_CASE("witness re-fails the claim through evaluate_claim") {
  const Claim* c = find_claim("B.2");
  REQUIRE(c);
  ScanResult r = scan_claim(*c, fixture_pool(), 0, 1);
  REQUIRE(r.witness);
  TopologyOps ops(r.witness->topology);
  CHECK(evaluate_claim(*c, ops, r.witness->args) == Outcome::fails);
  CHECK(!r.witness->transcript.empty());
}

TEST_CASE("worker count does not change scan results") {
  for (const char* id : {"T3.1", "T2.1.iv", "B.1", "T2.1.viii-strict"}) {
    const Claim* c = find_claim(id);
    REQUIRE(c);
    SearchConfig cfg = tabulated_config();
    InstancePool pool = build_pool(cfg);
    ScanResult one = scan_claim(*c, pool, 0, 1);
    ScanResult four = scan_claim(*c, pool, 0, 4);
    CHECK(one.instances == four.instances);
    CHECK(one.holds == four.holds);
    CHECK(one.fails == four.fails);
    CHECK(one.hypothesis_not_met == four.hypothesis_not_met);
    CHECK(one.witness.has_value() == four.witness.has_value());
    if (one.witness) {
      CHECK(one.witness->instance_index == four.witness->instance_index);
      CHECK(one.witness->topology == four.witness->topology);
      CHECK(one.witness->args == four.witness->args);
    }
  }
}

TEST_CASE("shrinking a strict-monotonicity witness reaches the reflexive core") {
  const Claim* c = find_claim("T2.1.viii-strict");
  REQUIRE(c);
  ScanResult r = scan_claim(*c, fixture_pool(), 0, 1);
  REQUIRE(r.witness);
  Witness shrunk = shrink_witness(*c, *r.witness);
  CHECK(shrunk.topology.carrier()->size() == 1);
  CHECK(shrunk.topology.opens().size() == 2);  // indiscrete
  CHECK(shrunk.args[0] == shrunk.args[1]);
  CHECK(shrunk.args[0].is_bottom());
  TopologyOps ops(shrunk.topology);
  CHECK(evaluate_claim(*c, ops, shrunk.args) == Outcome::fails);
}

TEST_CASE("shrinking never grows the witness") {
  SearchConfig cfg = tabulated_config();
  InstancePool pool = build_pool(cfg);
  for (const char* id : {"T3.1", "T3.2", "T3.3", "W.1", "W.2", "B.2",
                         "T2.1.xii-conv", "T2.1.viii-strict"}) {
    const Claim* c = find_claim(id);
    REQUIRE(c);
    ScanResult r = scan_claim(*c, pool, 0, 1);
    REQUIRE(r.witness);
    Witness shrunk = shrink_witness(*c, *r.witness);
    CHECK(shrunk.topology.carrier()->size() <=
          r.witness->topology.carrier()->size());
    CHECK(shrunk.topology.opens().size() <= r.witness->topology.opens().size());
    CHECK(distinct_numerators(shrunk) <= distinct_numerators(*r.witness));
    TopologyOps ops(shrunk.topology);
    CHECK(evaluate_claim(*c, ops, shrunk.args) == Outcome::fails);
  }
}

TEST_CASE("shrinking an existential witness keeps it satisfying") {
  const Claim* c = find_claim("B.4");
  REQUIRE(c);
  ScanResult r = scan_claim(*c, fixture_pool(), 0, 1);
  REQUIRE(r.witness);
  CHECK(r.witness->instance_index == 0);  // the golden instance itself
  Witness shrunk = shrink_witness(*c, *r.witness);
  TopologyOps ops(shrunk.topology);
  CHECK(evaluate_claim(*c, ops, shrunk.args) == Outcome::holds);
  CHECK(shrunk.topology.carrier()->size() == 1);
}

TEST_CASE("audit statuses over the tabulated exhaustive budget") {
  SearchConfig cfg = tabulated_config();
  AuditReport report = audit(cfg);
  REQUIRE(report.claims.size() == registry().size());

  auto record = [&](const std::string& id) -> const ClaimRecord& {
    for (const auto& rec : report.claims)
      if (rec.id == id) return rec;
    REQUIRE(false);
    return report.claims.front();
  };

  CHECK(record("B.1").status == ClaimStatus::verified_in_budget);
  CHECK(record("B.1").fails == 0);
  CHECK(record("T3.2").status == ClaimStatus::refuted);
  REQUIRE(record("T3.2").witness);
  CHECK(record("T3.2").witness->args[0].is_top());
  CHECK(record("B.4").status == ClaimStatus::witnessed);
  CHECK(record("W.7").status == ClaimStatus::refuted);

  // registry order is preserved
  for (std::size_t i = 0; i < report.claims.size(); ++i)
    CHECK(report.claims[i].id == registry()[i].id);
}

TEST_CASE("audit honours claim selection with SKIPPED records") {
  SearchConfig cfg = tabulated_config();
  cfg.claim_ids = {"T3.1"};
  AuditReport report = audit(cfg);
  std::size_t skipped = 0;
  for (const auto& rec : report.claims) {
    if (rec.id == "T3.1") {
      CHECK(rec.status == ClaimStatus::refuted);
    } else {
      CHECK(rec.status == ClaimStatus::skipped);
      CHECK(rec.instances == 0);
      ++skipped;
    }
  }
  CHECK(skipped == registry().size() - 1);
}

TEST_CASE("audit rejects unknown claim ids") {
  SearchConfig cfg = tabulated_config();
  cfg.claim_ids = {"T9.9"};
  CHECK_THROWS_AS(audit(cfg), std::invalid_argument);
}

TEST_CASE("machine reports are byte-identical across runs and workers") {
  SearchConfig cfg;
  cfg.mode = SearchConfig::Mode::random;
  cfg.n_min = cfg.n_max = 2;
  cfg.d_min = cfg.d_max = 10;
  cfg.random_spaces = 60;
  cfg.seed = 12345;

  std::string first = render_machine(audit(cfg));
  std::string second = render_machine(audit(cfg));
  CHECK(first == second);

  cfg.workers = 4;
  std::string parallel = render_machine(audit(cfg));
  CHECK(first == parallel);
}

TEST_CASE("random pools with different seeds differ") {
  SearchConfig cfg;
  cfg.mode = SearchConfig::Mode::random;
  cfg.n_min = cfg.n_max = 2;
  cfg.d_min = cfg.d_max = 10;
  cfg.random_spaces = 20;
  cfg.include_fixtures = false;

  cfg.seed = 0;
  InstancePool p0 = build_pool(cfg);
  cfg.seed = 1;
  InstancePool p1 = build_pool(cfg);
  REQUIRE(p0.spaces.size() == p1.spaces.size());
  bool any_difference = false;
  for (std::size_t i = 0; i < p0.spaces.size(); ++i)
    if (!(p0.spaces[i].topology == p1.spaces[i].topology))
      any_difference = true;
  CHECK(any_difference);
}
