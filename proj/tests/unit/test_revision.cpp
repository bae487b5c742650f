#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "obr/entailment.hpp"
#include "obr/error.hpp"
#include "obr/logic.hpp"
#include "obr/revision.hpp"
#include "obr/verifier.hpp"

using namespace obr;
using testing::B;
using testing::F;
using testing::RB;
using testing::V;

namespace {

std::vector<BeliefBase> subsets(const std::vector<Remainder>& rs) {
  std::vector<BeliefBase> out;
  for (const auto& r : rs) out.push_back(r.subset);
  return out;
}

}  // namespace

TEST_CASE("expand") {
  CHECK(expand(B({"p"}), F("q")) == B({"p", "q"}));
  CHECK(expand(B({"p"}), F("p")) == B({"p"}));
  CHECK(expand(B({"p"}), F("!p")) == B({"p", "!p"}));
}

TEST_CASE("remainders") {
  CHECK(subsets(remainders(B({"p", "p -> q"}), F("q"))) ==
        std::vector<BeliefBase>{B({"p"}), B({"p -> q"})});
  CHECK(subsets(remainders(B({"p", "q"}), F("p & q"))) ==
        std::vector<BeliefBase>{B({"p"}), B({"q"})});
  CHECK(subsets(remainders(B({"p"}), F("q"))) == std::vector<BeliefBase>{B({"p"})});
  CHECK(remainders(B({"p"}), F("p | !p")).empty());
}

TEST_CASE("contraction") {
  CHECK(contract(RB({{"p", 1}, {"p -> q", 2}}), F("q")) == B({"p -> q"}));
  CHECK(contract(RB({{"p", 1}, {"p -> q", 1}}), F("q")).empty());
  CHECK(contract(RB({{"p", 1}, {"p -> q", 2}}), F("p | !p")) == B({"p", "p -> q"}));
  // Sentences outside every entailment set do not pin the score.
  CHECK(contract(RB({{"p", 1}, {"p -> q", 2}, {"s", 1}}), F("q")) == B({"p -> q", "s"}));
  CHECK(contract(RB({{"p", 1}, {"p -> q", 2}}), F("q"), SelectionPolicy::kFullMeet).empty());
  CHECK(contract(RB({{"p", 1}, {"p -> q", 2}}), F("q"), SelectionPolicy::kMaxichoiceFirst) ==
        B({"p"}));
}

TEST_CASE("revision examples") {
  const RevisionOutcome r = revise(RB({{"p", 1}, {"p -> q", 2}}), F("!q"));
  CHECK(r.new_base == B({"p -> q", "!q"}));
  CHECK(r.retracted == V({"p"}));
  CHECK(r.added == F("!q"));
  CHECK(r.new_ranking == RB({{"p -> q", 1}, {"!q", 2}}));

  const RevisionOutcome plain = revise(RB({{"p", 1}}), F("q"));
  CHECK(plain.new_base == B({"p", "q"}));
  CHECK(plain.retracted.empty());
  CHECK(plain.new_ranking == RB({{"p", 1}, {"q", 2}}));

  try {
    revise(RB({{"p", 1}}), F("q & !q"));
    FAIL("expected inconsistent evidence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInconsistentEvidence);
  }
}

TEST_CASE("adjusted ranking of the worked example") {
  const RankedBase rb = RB({{"p", 1}, {"p -> q", 2}});
  const RankedBase next = adjust_ranking(rb, F("!q"), B({"p -> q", "!q"}));
  CHECK(next == RB({{"p -> q", 1}, {"!q", 2}}));
  CHECK(degree(next, F("p")).value == 1);
  CHECK(degree(next, F("!p")).value == 1);
  CHECK(oracle::degree(next, F("p")).value == 1);
}

TEST_CASE("repeated revision by the same sentence") {
  const RankedBase rb = RB({{"p", 1}, {"q", 2}, {"r", 3}});
  const RankedBase once = revise(rb, F("s")).new_ranking;
  const RankedBase twice = revise(once, F("s")).new_ranking;
  CHECK(twice == once);
  CHECK(*twice.af(F("s")) == twice.max_rank());
}

TEST_CASE("revise_sequence") {
  const RankedBase rb = RB({{"p", 1}});
  const auto steps = revise_sequence(rb, V({"q", "!p"}));
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].new_base == B({"p", "q"}));
  CHECK(steps[1].new_base == B({"q", "!p"}));
  CHECK(revise_sequence(rb, {}).empty());
  const auto back = revise_sequence(rb, V({"!p", "p"}));
  CHECK(back.back().new_base.contains(F("p")));
  CHECK_FALSE(back.back().new_base.contains(F("!p")));

  try {
    revise_sequence(rb, V({"q", "r & !r"}));
    FAIL("expected a step error");
  } catch (const StepError& e) {
    CHECK(e.step() == 1);
    CHECK(e.code() == ErrorCode::kInconsistentEvidence);
  }
}

TEST_CASE("revision invariants on random inputs") {
  std::mt19937_64 rng(31);
  SweepConfig cfg;
  const std::vector<std::string> atoms{"p", "q", "r"};
  for (int i = 0; i < 200; ++i) {
    const RankedBase rb(random_ranked_base(rng, cfg));
    const Formula a = canonicalize(random_formula(rng, atoms, 2));
    if (!is_consistent(a)) continue;
    const RevisionOutcome r = revise(rb, a);
    REQUIRE(entails(r.new_base, a));
    REQUIRE(is_consistent(r.new_base));

    BeliefBase relevant;
    for (const auto& x : entailment_sets(rb.base(), Formula::negation(a))) {
      for (const auto& f : x.members) relevant.insert(f);
    }
    for (const auto& f : r.retracted) REQUIRE(relevant.contains(f));

    for (const auto& x : r.new_ranking.entries()) {
      for (const auto& y : r.new_ranking.entries()) {
        if (x.sentence == a || y.sentence == a) continue;
        REQUIRE((*rb.af(x.sentence) < *rb.af(y.sentence)) == (x.rank < y.rank));
      }
    }

    const auto single = revise_sequence(rb, {a});
    REQUIRE(single.size() == 1);
    REQUIRE(single[0].new_base == r.new_base);
    REQUIRE(single[0].new_ranking == r.new_ranking);
  }
}

TEST_CASE("basic postulates") {
  const auto report = check_agm(RB({{"p", 1}, {"p -> q", 2}}), F("!q"), 3);
  CHECK(report.passed());
  CHECK(check_agm(RB({{"p", 1}}), F("q"), 3).vacuity);
  CHECK(equivalent(revise(RB({{"p", 1}}), F("q")).new_base, B({"p", "q"})));

  const RankedBase rb = RB({{"p", 1}, {"p -> q", 2}});
  CHECK(equivalent(revise(rb, F("!q")).new_base, revise(rb, F("!q | q & !q")).new_base));
}

TEST_CASE("policy names") {
  CHECK(parse_policy("accessibility") == SelectionPolicy::kAccessibilityPartialMeet);
  CHECK(parse_policy("full-meet") == SelectionPolicy::kFullMeet);
  CHECK(parse_policy("maxichoice") == SelectionPolicy::kMaxichoiceFirst);
  CHECK_FALSE(parse_policy("other"));
}
