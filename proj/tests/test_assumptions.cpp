#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bbt/assumptions.hpp"
#include "bbt/eio.hpp"
#include "support/generators.hpp"

using namespace bbt;
using bbt::testing::Rng;

namespace {

// "Exhibits (i,o)": the up-closure of the singleton system {(i,o)}.
Requirement exhibits(const EioUniverse& u, int i, int o) {
  Bits seed(u.model.size());
  seed.set(u.element_of(EioSystem{{{i, o}}}));
  return up_closure(u.model,
                    make_requirement(u.model, "exhibits", std::move(seed)));
}

}  // namespace

TEST_CASE("refutable_under with the trivial assumption is plain refutability") {
  Rng rng(9001);
  for (int it = 0; it < 200; ++it) {
    auto [model, edges] = bbt::testing::random_poset(rng);
    TestSetup t = bbt::testing::random_setup(rng, model);
    Requirement r = bbt::testing::random_requirement(rng, model);
    Bits all(model.size());
    all.set();
    Requirement everything = make_requirement(model, "all", all);
    CHECK(refutable_under(model, t, r, everything).holds ==
          is_refutable(model, t, r).holds);
  }
}

TEST_CASE("an obligation can become refutable under an assumption") {
  // EIO bound 2: under A = total function, "exhibits (1,0)" is
  // T_1-refutable although it is an irrefutable obligation outright.
  EioUniverse u = build_universe(2);
  TestSetup t1 = tk_setup(u, 1);
  Requirement obligation = exhibits(u, 1, 0);
  Requirement a = builtin_requirement(u, "total_function");

  CHECK(classify(u.model, obligation).is_obligation);
  CHECK_FALSE(is_refutable(u.model, t1, obligation).holds);
  auto rep = refutable_under(u.model, t1, obligation, a);
  CHECK(rep.holds);
  // The violating total functions are refuted by their (1,1) answer.
  for (const auto& [violator, obs] : rep.witnesses) CHECK(obs == "{(1,1)}");
}

TEST_CASE("empty assumption holds vacuously") {
  EioUniverse u = build_universe(2);
  Requirement none = make_requirement(u.model, "none", Bits(u.model.size()));
  CHECK(refutable_under(u.model, tk_setup(u, 1),
                        builtin_requirement(u, "totality"), none)
            .holds);
}

TEST_CASE("residual prohibition is the down-closure of A and R") {
  EioUniverse u = build_universe(2);
  Requirement obligation = exhibits(u, 1, 0);
  Requirement a = builtin_requirement(u, "total_function");
  Requirement residual = residual_prohibition(u.model, obligation, a);

  CHECK(classify(u.model, residual).is_prohibition);
  std::set<std::string> members;
  for (std::size_t i = residual.members.find_first(); i != Bits::npos;
       i = residual.members.find_next(i))
    members.insert(u.model.id(i));
  CHECK(members == std::set<std::string>{"{}", "{(0,0)}", "{(0,1)}", "{(1,0)}",
                                         "{(0,0),(1,0)}", "{(0,1),(1,0)}"});

  // With the trivial assumption the residual is just the down-closure.
  Bits all(u.model.size());
  all.set();
  Requirement everything = make_requirement(u.model, "all", all);
  CHECK(residual_prohibition(u.model, obligation, everything).members ==
        down_closure(u.model, obligation).members);
}

TEST_CASE("Theorem 3 equivalence on random instances") {
  Rng rng(9002);
  int checked = 0;
  for (int it = 0; it < 500; ++it) {
    auto [model, edges] = bbt::testing::random_poset(rng);
    TestSetup t = bbt::testing::random_setup(rng, model);
    Requirement r = bbt::testing::random_requirement(rng, model);
    Requirement a = bbt::testing::random_requirement(rng, model);
    if (!refutable_under(model, t, r, a).holds) continue;
    ++checked;
    Requirement residual = residual_prohibition(model, r, a);
    for (std::size_t s = a.members.find_first(); s != Bits::npos;
         s = a.members.find_next(s))
      CHECK(residual.members.test(s) == r.members.test(s));
  }
  CHECK(checked > 50);  // the suite must actually exercise the theorem
}

TEST_CASE("reduction campaign reaches an unconditional conclusion") {
  EioUniverse u = build_universe(4);
  TestSetup t1 = tk_setup(u, 1);
  Requirement a = exhibits(u, 1, 0);
  // R forbids the pair (3,0).
  Bits ok(u.model.size());
  for (std::size_t m = 0; m < u.model.size(); ++m)
    if (!(m >> u.pair_bit(3, 0) & 1)) ok.set(m);
  Requirement r = make_requirement(u.model, "never_3_0", std::move(ok));

  const std::string s =
      u.model.id(u.element_of(EioSystem{{{1, 0}, {3, 0}}}));
  auto report = reduction_campaign(u.model, t1, r, a, s);
  CHECK(report.conclusion ==
        CampaignReport::Conclusion::UnconditionalViolation);
  CHECK(report.refutation_witness == "{(3,0)}");
  CHECK(report.verification_witness == "{(1,0)}");
  CHECK(report.assumption_verifiable);
}

TEST_CASE("non-verifiable assumptions are reported, not fatal") {
  EioUniverse u = build_universe(2);
  TestSetup t1 = tk_setup(u, 1);
  Requirement a = builtin_requirement(u, "determinism");
  Requirement r = builtin_requirement(u, "never_zero_odd");
  const std::string s = u.model.id(u.element_of(EioSystem{{{1, 0}}}));
  auto report = reduction_campaign(u.model, t1, r, a, s);
  CHECK_FALSE(report.assumption_verifiable);
  CHECK_FALSE(report.verification_witness.has_value());
  CHECK(report.conclusion == CampaignReport::Conclusion::ConditionalViolation);
}

TEST_CASE("nothing to refute yields an inconclusive campaign") {
  EioUniverse u = build_universe(2);
  TestSetup t1 = tk_setup(u, 1);
  Requirement a = exhibits(u, 0, 0);
  Requirement r = builtin_requirement(u, "never_zero_odd");
  const std::string s = u.model.id(u.element_of(EioSystem{{{0, 0}}}));
  auto report = reduction_campaign(u.model, t1, r, a, s);
  CHECK(report.conclusion == CampaignReport::Conclusion::Inconclusive);
  CHECK_FALSE(report.refutation_witness.has_value());
}
