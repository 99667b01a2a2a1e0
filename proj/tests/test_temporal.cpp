#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bbt/temporal.hpp"

using namespace bbt;

TEST_CASE("lasso canonicalization") {
  CHECK(LassoWord::make("", "aa").id() == "(a)^w");
  CHECK(LassoWord::make("a", "a").id() == "(a)^w");
  CHECK(LassoWord::make("ab", "ab").id() == "(ab)^w");
  CHECK(LassoWord::make("a", "ba").id() == "(ab)^w");
  CHECK(LassoWord::make("a", "b").id() == "a(b)^w");
  CHECK(LassoWord::make("", "abab").id() == "(ab)^w");
  CHECK_THROWS_AS(LassoWord::make("a", ""), ValidationError);

  LassoWord w = LassoWord::make("a", "ba");
  CHECK(w.unroll(6) == "ababab");
  CHECK(prefixes(w, 3) == std::set<std::string>{"", "a", "ab", "aba"});
}

TEST_CASE("word enumeration is shortest-first") {
  auto words = words_up_to("ab", 2);
  CHECK(words == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
}

TEST_CASE("universe construction dedups canonical forms") {
  TemporalUniverse u = build_temporal_universe("ab", 1, 1, 2);
  REQUIRE(u.behaviors.size() == 4);
  CHECK(u.behaviors[0].id() == "(a)^w");
  CHECK(u.behaviors[1].id() == "(b)^w");
  CHECK(u.behaviors[2].id() == "a(b)^w");
  CHECK(u.behaviors[3].id() == "b(a)^w");
  CHECK(u.model.size() == 16);
  CHECK_THROWS_AS(build_temporal_universe("abc", 2, 2, 2), UniverseTooLarge);
}

TEST_CASE("extenders collect behaviors by prefix") {
  TemporalUniverse u = build_temporal_universe("ab", 1, 1, 2);
  Bits ext = u.extenders("a");
  CHECK(ext.count() == 2);  // (a)^w and a(b)^w
  CHECK(ext.test(u.behavior_index("(a)^w")));
  CHECK(ext.test(u.behavior_index("a(b)^w")));
  CHECK(u.extenders("").count() == 4);
}

TEST_CASE("safety and liveness verdicts on hand examples") {
  TemporalUniverse u = build_temporal_universe("ab", 1, 1, 2);

  // "Starts with a": violators (b)^w and b(a)^w have the bad prefix "b".
  TemporalProperty starts_a =
      make_property(u, "starts_a", std::vector<std::string>{"(a)^w", "a(b)^w"});
  auto safety = is_safety(u, starts_a);
  CHECK(safety.holds);
  CHECK(safety.bad_prefixes.at("(b)^w") == "b");
  CHECK(safety.bad_prefixes.at("b(a)^w") == "b");
  CHECK_FALSE(is_liveness(u, starts_a).holds);

  // "Settles on b eventually", at depth 1 so that every prefix of the
  // violator (a)^w still extends into the property: not safety, but live.
  // (At depth 2 the carrier makes "aa" irremediable and the verdict flips;
  // safety here is relative to the universe parameters.)
  TemporalUniverse shallow = build_temporal_universe("ab", 1, 1, 1);
  TemporalProperty ends_b = make_property(
      shallow, "ends_b", std::vector<std::string>{"(b)^w", "a(b)^w", "b(a)^w"});
  auto not_safety = is_safety(shallow, ends_b);
  CHECK_FALSE(not_safety.holds);
  CHECK(not_safety.undetectable == std::vector<std::string>{"(a)^w"});
  CHECK(is_liveness(shallow, ends_b).holds);

  // The whole universe is both safety and liveness.
  Bits all(u.behaviors.size());
  all.set();
  TemporalProperty trivial = make_property(u, "all", all);
  CHECK(is_safety(u, trivial).holds);
  CHECK(is_liveness(u, trivial).holds);
}

TEST_CASE("decompose returns a safety/liveness factorization") {
  TemporalUniverse u = build_temporal_universe("ab", 1, 1, 2);
  for (std::size_t mask = 0; mask < 16; ++mask) {
    Bits members(4, mask);
    TemporalProperty phi = make_property(u, "phi", members);
    auto [safe, live] = decompose(u, phi);
    CHECK(is_safety(u, safe).holds);
    CHECK(is_liveness(u, live).holds);
    CHECK((safe.members & live.members) == phi.members);
    CHECK(phi.members.is_subset_of(safe.members));
  }
}

TEST_CASE("property requirements are prohibitions") {
  TemporalUniverse u = build_temporal_universe("ab", 1, 1, 2);
  TemporalProperty just_a =
      make_property(u, "just_a", std::vector<std::string>{"(a)^w"});
  Requirement r = property_requirement(u, just_a);
  CHECK(r.members.count() == 2);  // {} and {(a)^w}
  CHECK(classify(u.model, r).is_prohibition);
  CHECK(is_refutable(u.model, reflexive_setup(u.model), r).holds);
}

TEST_CASE("T_*-refutability coincides with safety for properties") {
  TemporalUniverse u = build_temporal_universe("ab", 1, 1, 2);
  TestSetup tstar = tstar_setup(u);
  for (std::size_t mask = 0; mask < 16; ++mask) {
    TemporalProperty phi = make_property(u, "phi", Bits(4, mask));
    const bool refutable =
        is_refutable(u.model, tstar, property_requirement(u, phi)).holds;
    CHECK(refutable == is_safety(u, phi).holds);
  }
}

TEST_CASE("nabla lists exactly the irremediable sequences") {
  TemporalUniverse u = build_temporal_universe("ab", 1, 1, 2);
  TemporalProperty starts_a =
      make_property(u, "starts_a", std::vector<std::string>{"(a)^w", "a(b)^w"});
  auto irre = nabla(u, starts_a);
  CHECK(irre == std::set<std::string>{"b", "ba", "bb"});
  // Every irremediable sequence has only outside extensions.
  for (const auto& sigma : irre)
    CHECK_FALSE(u.extenders(sigma).intersects(starts_a.members));

  Bits none(4);
  auto all_words = nabla(u, make_property(u, "empty", none));
  CHECK(all_words.count("\xce\xb5") == 1);
}
