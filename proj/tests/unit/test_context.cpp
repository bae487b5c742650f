#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "obr/context.hpp"
#include "obr/error.hpp"
#include "obr/logic.hpp"
#include "obr/verifier.hpp"

using namespace obr;
using testing::B;
using testing::F;
using testing::RB;
using testing::V;

namespace {

const RankedBase& worked() {
  static const RankedBase rb = RB({{"p", 1}, {"p -> q", 2}, {"s", 1}});
  return rb;
}

Context make_context(const RankedBase& rb, const BeliefBase& slice, const char* a,
                     const char* g) {
  return context_from_slice(rb, F(a), make_goal(F(g)), slice);
}

}  // namespace

TEST_CASE("desideratum and goals") {
  const RankedBase rb = RB({{"p", 1}, {"p -> q", 2}});
  const Desideratum d = make_desideratum(rb, V({"!p", "p"}));
  CHECK(is_tautology(d.presupposition) == true);
  auto goals = achievable_goals(rb, F("!q"), d);
  REQUIRE(goals.size() == 1);
  CHECK(goals[0].formula == F("!p"));
  CHECK(achievable_goals(rb, F("p"), d).empty());
  CHECK(achievable_goals(rb, F("!q"), make_desideratum(rb, V({"p", "p -> q"}))).empty());
  CHECK_THROWS_AS(make_desideratum(rb, {}), Error);
  CHECK_THROWS_AS(make_desideratum(rb, V({"r"})), Error);

  const auto all = all_goals(make_desideratum(rb, V({"p", "q", "p | q"})));
  REQUIRE(all.size() == 6);
  CHECK(all[0].basic());
  CHECK(all[3].formula == F("p | q"));
  CHECK_FALSE(all[3].basic());
}

TEST_CASE("context of the worked example") {
  const Context ctx = construct_context(worked(), F("!q"), make_goal(F("!p")));
  CHECK(ctx.neg_a_part == B({"p", "p -> q"}));
  CHECK(ctx.goal_part == B({"p -> q"}));
  CHECK(ctx.neg_goal_part.empty());
  CHECK(ctx.base_slice == B({"p", "p -> q"}));
  const EffortMeasure e = effort(worked(), ctx);
  CHECK(e.accessibility.value == 1);
  CHECK(e.size == 2);

  const auto report = verify_theorem1(worked(), F("!q"), ctx, SelectionPolicy::kAccessibilityPartialMeet, 3);
  CHECK(report.passed());
  const auto corollary = verify_corollary1(worked(), F("!q"), ctx, SelectionPolicy::kAccessibilityPartialMeet, 3);
  CHECK(corollary.passed());
}

TEST_CASE("context without anything to retract") {
  const RankedBase rb = RB({{"s", 1}, {"s -> t", 2}});
  const Context ctx = construct_context(rb, F("u"), make_goal(F("t & u")));
  CHECK(ctx.neg_a_part.empty());
  CHECK(ctx.goal_part == B({"s", "s -> t"}));
  CHECK(verify_theorem1(rb, F("u"), ctx, SelectionPolicy::kAccessibilityPartialMeet, 3).passed());

  const Context small = construct_context(rb, F("u"), make_goal(F("u & s")));
  CHECK(small.neg_a_part.empty());
  CHECK(small.base_slice == B({"s"}));
  CHECK(verify_theorem1(rb, F("u"), small, SelectionPolicy::kAccessibilityPartialMeet, 3).passed());
}

TEST_CASE("construct_context errors") {
  const RankedBase rb = RB({{"p", 1}, {"p -> q", 2}});
  auto code = [&](const char* a, const char* g) {
    try {
      construct_context(rb, F(a), make_goal(F(g)));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParse;
  };
  CHECK(code("q", "p") == ErrorCode::kAlreadyBelieved);
  CHECK(code("!q", "p") == ErrorCode::kInvalidInput);
  CHECK(code("!q", "r") == ErrorCode::kNoGoalDerivation);
}

TEST_CASE("the whole base is always a context") {
  const Context ctx = make_context(worked(), worked().base(), "!q", "!p");
  const auto t1 = verify_theorem1(worked(), F("!q"), ctx, SelectionPolicy::kAccessibilityPartialMeet, 3);
  CHECK(t1.condition1);
  CHECK(t1.condition2);
  const auto c1 = verify_corollary1(worked(), F("!q"), ctx, SelectionPolicy::kAccessibilityPartialMeet, 3);
  CHECK(c1.monotony);
  CHECK(c1.revised_subset);
}

TEST_CASE("dropping a sentence that must be retracted breaks condition 1") {
  const Context ctx = make_context(worked(), B({"p -> q"}), "!q", "!p");
  const auto report = verify_theorem1(worked(), F("!q"), ctx, SelectionPolicy::kAccessibilityPartialMeet, 3);
  CHECK_FALSE(report.condition1);
  CHECK_FALSE(report.counterexamples.empty());
}

TEST_CASE("select_optimal") {
  const RankedBase rb = RB({{"p", 1}, {"q", 2}, {"r", 2}, {"s", 2}});
  const Context low = make_context(rb, B({"p", "q"}), "t", "t");
  const Context high = make_context(rb, B({"q", "r"}), "t", "t");
  const Context big = make_context(rb, B({"q", "r", "s"}), "t", "t");
  CHECK(select_optimal(rb, {high, low}).base_slice == high.base_slice);
  CHECK(select_optimal(rb, {low, high}).base_slice == high.base_slice);
  CHECK(select_optimal(rb, {big, high}).base_slice == high.base_slice);
  CHECK(select_optimal(rb, {low}).base_slice == low.base_slice);
  CHECK_THROWS_AS(select_optimal(rb, {}), Error);

  std::vector<Context> all{low, high, big, make_context(rb, B({"r", "s"}), "t", "t")};
  const BeliefBase expected = select_optimal(rb, all).base_slice;
  std::sort(all.begin(), all.end(), [](const Context& a, const Context& b) {
    return a.base_slice.sentences() < b.base_slice.sentences();
  });
  do {
    REQUIRE(select_optimal(rb, all).base_slice == expected);
  } while (std::next_permutation(all.begin(), all.end(), [](const Context& a, const Context& b) {
    return a.base_slice.sentences() < b.base_slice.sentences();
  }));
}

TEST_CASE("contexts from cuts") {
  // Level 2 leaves p out and fails; level 1 is the base.
  const Context scan = context_from_cut(worked(), F("!q"), make_goal(F("!p")),
                                        SelectionPolicy::kAccessibilityPartialMeet, 3);
  CHECK(scan.base_slice == worked().base());
  const Context built = construct_context(worked(), F("!q"), make_goal(F("!p")));
  CHECK(select_optimal(worked(), {scan, built}).base_slice == built.base_slice);

  const RankedBase top = RB({{"s", 1}, {"p", 2}, {"!p -> q", 2}});
  const Context top_cut = context_from_cut(top, F("!p"), make_goal(F("q")),
                                           SelectionPolicy::kAccessibilityPartialMeet, 3);
  CHECK(top_cut.base_slice == B({"p", "!p -> q"}));

  const RankedBase bad = RB({{"s", 1}, {"p", 2}, {"p & q", 3}});
  const Context extended = context_from_cut(bad, F("!q"), make_goal(F("p & !q")),
                                            SelectionPolicy::kAccessibilityPartialMeet, 3);
  CHECK(extended.base_slice == B({"p", "p & q"}));
}

TEST_CASE("constructed contexts on random instances") {
  SweepConfig cfg;
  std::size_t strict = 0, eligible = 0;
  for (std::size_t i = 0; i < 120; ++i) {
    const Instance inst = generate_instance("theorem2", 5, i, cfg);
    const RankedBase rb(inst.base);
    const Context ctx = construct_context(rb, *inst.evidence, make_goal(*inst.goal));
    REQUIRE(ctx.base_slice.size() <= rb.size());
    const auto report = verify_theorem1(rb, *inst.evidence, ctx, cfg.policy, 3);
    REQUIRE(report.passed());
    const BeliefBase used = set_union(set_union(ctx.neg_a_part, ctx.goal_part), ctx.neg_goal_part);
    if (used.size() < rb.size()) {
      ++eligible;
      if (ctx.base_slice.size() < rb.size()) ++strict;
    }
  }
  CHECK(eligible > 0);
  CHECK(strict == eligible);
}
