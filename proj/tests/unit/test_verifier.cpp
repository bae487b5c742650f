#include "doctest.h"
#include "helpers.hpp"
#include "obr/context.hpp"
#include "obr/error.hpp"
#include "obr/verifier.hpp"

using namespace obr;

TEST_CASE("sweeps are deterministic") {
  for (const auto& property : property_names()) {
    const auto a = sweep(property, 5, 99);
    const auto b = sweep(property, 5, 99);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].instance == b[i].instance);
      REQUIRE(a[i].passed == b[i].passed);
      REQUIRE(a[i].counterexample.has_value() == !a[i].passed);
    }
  }
  CHECK(sweep("theorem2", 3, 1)[0].instance != sweep("theorem2", 3, 2)[0].instance);
}

TEST_CASE("unknown property") {
  try {
    sweep("theorem9", 1, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownProperty);
  }
}

TEST_CASE("instances round-trip through JSON") {
  for (const auto& property : property_names()) {
    for (std::size_t i = 0; i < 10; ++i) {
      const Instance inst = generate_instance(property, 4, i);
      const std::string text = serialize_instance(inst);
      REQUIRE(serialize_instance(parse_instance(text)) == text);
      REQUIRE(check_case(property, parse_instance(text)).instance == text);
    }
  }
}

TEST_CASE("generated bases respect the configured shape") {
  SweepConfig cfg;
  std::mt19937_64 rng(8);
  std::size_t biased = 0;
  for (int i = 0; i < 300; ++i) {
    const auto entries = random_ranked_base(rng, cfg);
    const RankedBase rb(entries);
    REQUIRE(rb.size() >= 1);
    REQUIRE(rb.size() <= cfg.max_base);
    REQUIRE(rb.max_rank() <= cfg.max_rank + 1);
    REQUIRE(rb.base().atoms().size() <= cfg.max_atoms);
    for (const auto& e : rb.entries()) {
      if (e.sentence.kind() != Connective::kAnd) continue;
      for (const auto& part : {e.sentence.left(), e.sentence.right()}) {
        if (auto r = rb.af(part); r && *r < e.rank) {
          ++biased;
          goto next;
        }
      }
    }
  next:;
  }
  CHECK(biased > 60);
}

TEST_CASE("a failing case carries its counterexample") {
  Instance inst;
  inst.base = {{testing::F("p"), 1}};
  inst.evidence = testing::F("q & !q");
  const auto r = check_case("agm", inst);
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample);
}

TEST_CASE("theorem1 instances are not vacuous") {
  SweepConfig cfg;
  std::size_t antecedent = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const Instance inst = generate_instance("theorem1", 42, i, cfg);
    const RankedBase rb(inst.base);
    const Context ctx = context_from_slice(rb, *inst.evidence, make_goal(*inst.evidence),
                                           BeliefBase(inst.slice));
    if (verify_theorem1(rb, *inst.evidence, ctx, cfg.policy, 3).condition1) ++antecedent;
  }
  CHECK(antecedent > 30);
}
