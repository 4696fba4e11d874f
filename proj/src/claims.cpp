#include "fuzztop/claims.hpp"

#include <stdexcept>

#include "fuzztop/boundary.hpp"

namespace fuzztop {

std::string_view to_string(ClaimKind k) {
  return k == ClaimKind::universal ? "universal" : "existential";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::holds:
      return "holds";
    case Outcome::fails:
      return "fails";
    case Outcome::hypothesis_not_met:
      return "hypothesis-not-met";
  }
  return "?";
}

namespace {

using Args = std::span<const FuzzySet>;

std::vector<Claim> build_registry() {
  std::vector<Claim> r;

  // Boundary-operator checklist, audited against bd.
  r.push_back({.id = "W.1",
               .statement = "bd(A) is closed",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return ops.topology().is_closed(boundary(ops, a[0]));
               }});
  r.push_back({.id = "W.2",
               .statement = "cl(A) = int(A) | bd(A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return ops.closure(a[0]) ==
                        join(ops.interior(a[0]), boundary(ops, a[0]));
               }});
  r.push_back({.id = "W.3",
               .statement =
                   "T crisp and A crisp => bd(A) = cl(A) & cl(~A) "
                   "(the classical boundary of the induced crisp space)",
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return ops.topology().is_crisp() && a[0].is_crisp();
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, a[0]) == boundary_ii(ops, a[0]);
               }});
  r.push_back({.id = "W.5",
               .statement = "bd(A) = bd(~A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, a[0]) == boundary(ops, complement(a[0]));
               }});
  r.push_back({.id = "W.6",
               .statement = "A open or A closed => int(bd(A)) = 0_X",
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return ops.topology().is_open(a[0]) ||
                            ops.topology().is_closed(a[0]);
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return ops.interior(boundary(ops, a[0])).is_bottom();
               }});
  r.push_back({.id = "W.7",
               .statement = "A clopen => bd(A) = 0_X",
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return ops.topology().is_clopen(a[0]);
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, a[0]).is_bottom();
               }});

  // Immediate consequences of the definition.
  r.push_back({.id = "B.1",
               .statement = "bd(0_X) = 0_X and bd(1_X) = 1_X",
               .hypothesis =
                   [](TopologyOps&, Args a) {
                     return a[0].is_bottom() || a[0].is_top();
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, a[0]) == a[0];
               }});
  r.push_back({.id = "B.2",
               .statement = "bd(A) = bd(~A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, a[0]) == boundary(ops, complement(a[0]));
               }});
  r.push_back({.id = "B.3",
               .statement = "A clopen => bd(A) = A",
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return ops.topology().is_clopen(a[0]);
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, a[0]) == a[0];
               }});
  r.push_back({.id = "B.4",
               .statement = "exists (T, A) with bd(A) not closed",
               .kind = ClaimKind::existential,
               .conclusion = [](TopologyOps& ops, Args a) {
                 return !ops.topology().is_closed(boundary(ops, a[0]));
               }});
  r.push_back({.id = "B.5",
               .statement =
                   "cl(A) = cl(B) and int(A) = int(B) => bd(A) = bd(B)",
               .arity = 2,
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return ops.closure(a[0]) == ops.closure(a[1]) &&
                            ops.interior(a[0]) == ops.interior(a[1]);
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, a[0]) == boundary(ops, a[1]);
               }});

  // The twelve-point identity list, split where direction matters.
  r.push_back({.id = "T2.1.i",
               .statement = "bd(A | B) >= bd(A) | bd(B)",
               .arity = 2,
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(join(boundary(ops, a[0]), boundary(ops, a[1])),
                            boundary(ops, join(a[0], a[1])));
               }});
  r.push_back({.id = "T2.1.ii-geq",
               .statement = "bd(A & B) >= bd(A) & bd(B)",
               .arity = 2,
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(meet(boundary(ops, a[0]), boundary(ops, a[1])),
                            boundary(ops, meet(a[0], a[1])));
               }});
  r.push_back({.id = "T2.1.ii-leq",
               .statement = "bd(A & B) <= bd(A) & bd(B)",
               .arity = 2,
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(boundary(ops, meet(a[0], a[1])),
                            meet(boundary(ops, a[0]), boundary(ops, a[1])));
               }});
  r.push_back({.id = "T2.1.iii",
               .statement = "int(A) | bd(A) = bd(A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 FuzzySet bd = boundary(ops, a[0]);
                 return join(ops.interior(a[0]), bd) == bd;
               }});
  r.push_back({.id = "T2.1.iv",
               .statement = "bd(A) <= cl(A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(boundary(ops, a[0]), ops.closure(a[0]));
               }});
  r.push_back({.id = "T2.1.v",
               .statement = "A clopen => bd(bd(A)) = A",
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return ops.topology().is_clopen(a[0]);
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, boundary(ops, a[0])) == a[0];
               }});
  r.push_back({.id = "T2.1.vi",
               .statement = "bd(cl(A)) >= bd(A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(boundary(ops, a[0]),
                            boundary(ops, ops.closure(a[0])));
               }});
  r.push_back({.id = "T2.1.vii",
               .statement = "bd(int(A)) <= bd(A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(boundary(ops, ops.interior(a[0])),
                            boundary(ops, a[0]));
               }});
  r.push_back({.id = "T2.1.viii-strict",
               .statement = "A <= B => bd(A) < bd(B)",
               .arity = 2,
               .hypothesis =
                   [](TopologyOps&, Args a) { return leq(a[0], a[1]); },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return strict_lt(boundary(ops, a[0]), boundary(ops, a[1]));
               }});
  r.push_back({.id = "T2.1.viii-nonstrict",
               .statement = "A <= B => bd(A) <= bd(B)",
               .arity = 2,
               .hypothesis =
                   [](TopologyOps&, Args a) { return leq(a[0], a[1]); },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(boundary(ops, a[0]), boundary(ops, a[1]));
               }});
  r.push_back({.id = "T2.1.ix",
               .statement = "A | bd(A) <= cl(A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(join(a[0], boundary(ops, a[0])),
                            ops.closure(a[0]));
               }});
  r.push_back({.id = "T2.1.x",
               .statement = "int(A) = int(cl(A)) => bd(cl(A)) = bd(A)",
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return ops.interior(a[0]) ==
                            ops.interior(ops.closure(a[0]));
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, ops.closure(a[0])) ==
                        boundary(ops, a[0]);
               }});
  r.push_back({.id = "T2.1.xi",
               .statement = "cl(A) = cl(int(A)) => bd(int(A)) = bd(A)",
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return ops.closure(a[0]) ==
                            ops.closure(ops.interior(a[0]));
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return boundary(ops, ops.interior(a[0])) ==
                        boundary(ops, a[0]);
               }});
  r.push_back({.id = "T2.1.xii-fwd",
               .statement = "A closed => bd(A) <= A",
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return ops.topology().is_closed(a[0]);
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(boundary(ops, a[0]), a[0]);
               }});
  r.push_back({.id = "T2.1.xii-conv",
               .statement = "bd(A) <= A => A closed",
               .hypothesis =
                   [](TopologyOps& ops, Args a) {
                     return leq(boundary(ops, a[0]), a[0]);
                   },
               .conclusion = [](TopologyOps& ops, Args a) {
                 return ops.topology().is_closed(a[0]);
               }});

  // Comparisons with the other three operators.
  r.push_back({.id = "T3.1",
               .statement = "bd(A) <= bdII(A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(boundary(ops, a[0]), boundary_ii(ops, a[0]));
               }});
  r.push_back({.id = "T3.2",
               .statement = "bd(A) <= bdI(A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(boundary(ops, a[0]), boundary_i(ops, a[0]));
               }});
  r.push_back({.id = "T3.3",
               .statement = "bd(A) <= bdIII(A)",
               .conclusion = [](TopologyOps& ops, Args a) {
                 return leq(boundary(ops, a[0]), boundary_iii(ops, a[0]));
               }});

  return r;
}

}  // namespace

const std::vector<Claim>& registry() {
  static const std::vector<Claim> reg = build_registry();
  return reg;
}

const Claim* find_claim(std::string_view id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

Outcome evaluate_claim(const Claim& claim, TopologyOps& ops,
                       std::span<const FuzzySet> args) {
  if (static_cast<int>(args.size()) != claim.arity)
    throw std::invalid_argument("claim " + claim.id + " expects " +
                                std::to_string(claim.arity) + " argument(s)");
  for (const auto& a : args) require_on_grid(ops.topology(), a);
  if (claim.hypothesis && !claim.hypothesis(ops, args))
    return Outcome::hypothesis_not_met;
  return claim.conclusion(ops, args) ? Outcome::holds : Outcome::fails;
}

std::vector<TranscriptLine> evaluation_transcript(
    TopologyOps& ops, std::span<const FuzzySet> args) {
  std::vector<TranscriptLine> out;
  const char* names[] = {"A", "B"};
  for (std::size_t i = 0; i < args.size() && i < 2; ++i) {
    const FuzzySet& a = args[i];
    std::string n = names[i];
    FuzzySet cl = ops.closure(a);
    FuzzySet in = ops.interior(a);
    out.push_back({"int " + n, in});
    out.push_back({"cl " + n, cl});
    out.push_back({"int cl " + n, ops.interior(cl)});
    out.push_back({"cl int " + n, ops.closure(in)});
    out.push_back({"bd " + n, boundary(ops, a)});
    out.push_back({"bdI " + n, boundary_i(ops, a)});
    out.push_back({"bdII " + n, boundary_ii(ops, a)});
    out.push_back({"bdIII " + n, boundary_iii(ops, a)});
  }
  return out;
}

}  // namespace fuzztop
