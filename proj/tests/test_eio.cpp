#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bbt/eio.hpp"

using namespace bbt;

TEST_CASE("universe construction and element naming") {
  EioUniverse u = build_universe(2);
  CHECK(u.model.size() == 16);
  CHECK(u.model.id(u.model.bot()) == "{}");
  CHECK(u.model.id(u.model.top()) == "{(0,0),(0,1),(1,0),(1,1)}");
  CHECK_THROWS_AS(build_universe(0), BoundTooLarge);
  CHECK_THROWS_AS(build_universe(5), BoundTooLarge);

  EioSystem s{{{0, 1}, {1, 0}}};
  const std::size_t e = u.element_of(s);
  CHECK(u.model.id(e) == "{(0,1),(1,0)}");
  CHECK(u.system_of(e).pairs == s.pairs);
  CHECK_THROWS_AS(u.element_of(EioSystem{{{2, 0}}}), UnknownElement);
}

TEST_CASE("subset order matches system inclusion") {
  EioUniverse u = build_universe(2);
  const auto sub = u.element_of(EioSystem{{{0, 0}}});
  const auto sup = u.element_of(EioSystem{{{0, 0}, {1, 1}}});
  CHECK(u.model.leq(sub, sup));
  CHECK_FALSE(u.model.leq(sup, sub));
}

TEST_CASE("builtin requirement extensions at bound 2") {
  EioUniverse u = build_universe(2);
  Requirement det = builtin_requirement(u, "determinism");
  Requirement tot = builtin_requirement(u, "totality");
  Requirement fun = builtin_requirement(u, "total_function");
  Requirement zig = builtin_requirement(u, "anonymity_zigzag");

  CHECK(det.members.count() == 9);
  CHECK(tot.members.count() == 9);
  CHECK(fun.members.count() == 4);
  CHECK(zig.members.count() == 4);

  Classification cd = classify(u.model, det);
  CHECK(cd.is_prohibition);
  CHECK_FALSE(cd.is_obligation);
  Classification ct = classify(u.model, tot);
  CHECK(ct.is_obligation);
  CHECK_FALSE(ct.is_prohibition);
  Classification cf = classify(u.model, fun);
  CHECK_FALSE(cf.is_obligation);
  CHECK_FALSE(cf.is_prohibition);
  CHECK(cf.is_semi_monotone);

  CHECK_THROWS_AS(builtin_requirement(u, "nonsense"), UnknownRequirementName);
}

TEST_CASE("T_1 observations are the system's own pairs") {
  EioUniverse u = build_universe(2);
  TestSetup t1 = tk_setup(u, 1);
  CHECK(t1.obs_ids.size() == 4);
  const auto e = u.element_of(EioSystem{{{0, 1}, {1, 0}}});
  std::set<std::string> seen;
  for (std::size_t o = t1.alpha[e].find_first(); o != Bits::npos;
       o = t1.alpha[e].find_next(o))
    seen.insert(t1.obs_ids[o]);
  CHECK(seen == std::set<std::string>{"{(0,1)}", "{(1,0)}"});
}

TEST_CASE("T_2 observations are pairs of exhibited pairs") {
  EioUniverse u = build_universe(2);
  TestSetup t2 = tk_setup(u, 2);
  CHECK(t2.obs_ids.size() == 16);
  const auto e = u.element_of(EioSystem{{{0, 0}}});
  // The singleton system can only repeat its one pair.
  CHECK(t2.alpha[e].count() == 1);
  CHECK(t2.obs_ids[t2.alpha[e].find_first()] == "((0,0),(0,0))");
  CHECK_THROWS_AS(tk_setup(u, 20), ObservationSpaceTooLarge);
}

TEST_CASE("determinism is T_1-irrefutable but reflexively refutable") {
  EioUniverse u = build_universe(2);
  Requirement det = builtin_requirement(u, "determinism");
  CHECK_FALSE(is_refutable(u.model, tk_setup(u, 1), det).holds);
  CHECK(is_refutable(u.model, reflexive_setup(u.model), det).holds);
}

TEST_CASE("never_zero_odd is T_1-refutable with witness (1,0)") {
  EioUniverse u = build_universe(2);
  Requirement r = builtin_requirement(u, "never_zero_odd");
  auto rep = is_refutable(u.model, tk_setup(u, 1), r);
  CHECK(rep.holds);
  for (const auto& [violator, obs] : rep.witnesses) CHECK(obs == "{(1,0)}");
}

TEST_CASE("chain systems alternate on the anonymity predicate") {
  std::vector<bool> chi;
  for (int j = 0; j <= 5; ++j) chi.push_back(anonymity_zigzag_holds(chain_system(j)));
  CHECK(chi == std::vector<bool>{false, true, false, true, false, true});

  EioUniverse u = build_universe(4);
  auto chain = chain_example(u);
  CHECK(chain.size() == 4);
  // Successive chain elements refine each other.
  for (std::size_t j = 0; j + 1 < chain.size(); ++j)
    CHECK(u.model.leq(u.element_of(chain[j]), u.element_of(chain[j + 1])));
}
