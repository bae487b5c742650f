#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "obr/error.hpp"
#include "obr/logic.hpp"
#include "obr/semantics.hpp"
#include "obr/verifier.hpp"

using namespace obr;
using testing::B;
using testing::F;
using testing::RB;
using testing::V;

TEST_CASE("ranked bases are validated") {
  CHECK_NOTHROW(RB({{"p", 1}, {"q", 2}}));
  CHECK_THROWS_AS(RB({{"p", 1}, {"q", 3}}), Error);
  CHECK_THROWS_AS(RB({{"p", 0}}), Error);
  CHECK_THROWS_AS(RB({{"p", 1}, {"p", 2}}), Error);
  try {
    RB({{"p", 1}, {"!p", 2}});
    FAIL("expected inconsistency");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInconsistentInput);
  }
  const RankedBase gaps = RankedBase::normalized({{F("p"), 2}, {F("q"), 7}, {F("r"), 2}});
  CHECK(gaps.max_rank() == 2);
  CHECK(*gaps.af(F("q")) == 2);
  CHECK(*gaps.af(F("r")) == 1);
  CHECK(RankedBase{}.max_rank() == 0);
}

TEST_CASE("degree examples") {
  const RankedBase rb = RB({{"p", 1}, {"p -> q", 2}});
  CHECK(degree(rb, F("q")).value == 1);
  CHECK(degree(rb, F("r")).value == 0);
  CHECK(degree(rb, F("p | !p")).value == 2);
  CHECK(degree(rb, F("p -> q")).value == 2);
  CHECK(degree(rb, F("!q")).value == 1);

  const RankedBase two = RB({{"p", 1}, {"p -> r", 1}, {"q", 2}, {"q -> r", 2}});
  CHECK(degree(two, F("r")).value == 2);
  CHECK(degree_by_entailment_sets(two, F("r")).value == 2);
  CHECK(oracle::degree(two, F("r")).value == 2);
}

TEST_CASE("leq_af and set accessibility") {
  const RankedBase rb = RB({{"p", 1}, {"p -> q", 2}});
  CHECK(leq_af(rb, F("q"), F("p -> q")));
  CHECK_FALSE(leq_af(rb, F("p -> q"), F("q")));
  for (const char* x : {"p", "q", "p -> q", "p | !p", "r"}) CHECK(leq_af(rb, F("r"), F(x)));
  CHECK(set_accessibility(rb, V({"p", "p -> q"})).value == 1);
  CHECK(set_accessibility(rb, V({"p -> q"})).value == 2);
  CHECK(set_accessibility(rb, V({"q", "p -> q"})).value == 1);
  CHECK_THROWS_AS(set_accessibility(rb, std::vector<Formula>{}), Error);
}

TEST_CASE("three degree routes agree on random bases") {
  std::mt19937_64 rng(17);
  SweepConfig cfg;
  const std::vector<std::string> atoms{"p", "q", "r"};
  for (int i = 0; i < 150; ++i) {
    const RankedBase rb(random_ranked_base(rng, cfg));
    for (int j = 0; j < 10; ++j) {
      const Formula f = canonicalize(random_formula(rng, atoms, 2));
      const int d = degree(rb, f).value;
      REQUIRE(d == degree_by_entailment_sets(rb, f).value);
      REQUIRE(d == oracle::degree(rb, f).value);
    }
  }
}

TEST_CASE("degree is semantic on derived sentences and shared with the negation") {
  std::mt19937_64 rng(23);
  SweepConfig cfg;
  const auto classes = semantic_classes(3);
  for (int i = 0; i < 60; ++i) {
    const RankedBase rb(random_ranked_base(rng, cfg));
    auto outside = [&](const Formula& f) {
      const Formula n = Formula::negation(f);
      return !rb.base().contains(f) && !rb.base().contains(n) &&
             !rb.base().contains(Formula::negation(n));
    };
    for (const auto& c : classes) {
      const Formula f = c.representative;
      const Formula same = Formula::disjunction(f, Formula::bottom());
      if (!outside(f) || !outside(same)) continue;
      REQUIRE(degree(rb, f) == degree(rb, same));
      REQUIRE(degree(rb, f) == degree(rb, Formula::negation(f)));
    }
    for (const auto& e : rb.entries()) {
      if (!is_tautology(e.sentence)) REQUIRE(degree(rb, e.sentence).value == e.rank);
    }
  }
}

TEST_CASE("cuts") {
  const RankedBase rb = RB({{"p", 2}, {"q", 1}});
  Cut c = cut_at(rb, F("p"));
  CHECK(c.level == 2);
  CHECK(c.slice == B({"p"}));
  CHECK_FALSE(is_bad_cut(rb, c));
  CHECK(cut_at_level(rb, 1).slice == rb.base());
  CHECK(cut_at_level(rb, 3).slice.empty());
  CHECK_THROWS_AS(cut_at_level(rb, 0), Error);
  CHECK_THROWS_AS(cut_at_level(rb, 4), Error);
  CHECK_THROWS_AS(cut_at(rb, F("r")), Error);

  const RankedBase bad = RB({{"p & q", 2}, {"p", 1}});
  Cut top = cut_at(bad, F("p & q"));
  CHECK(top.level == 2);
  CHECK(top.slice == B({"p & q"}));
  auto witness = is_bad_cut(bad, top);
  REQUIRE(witness);
  CHECK(witness->culprit == F("p"));
  CHECK_FALSE(is_bad_cut(bad, cut_at_level(bad, 1)));
  CHECK(in_cut(bad, top, F("q")));
  CHECK_FALSE(in_cut(bad, cut_at(bad, F("p")), F("r")));
}

TEST_CASE("postulates hold on every two-atom base we try") {
  std::mt19937_64 rng(29);
  SweepConfig cfg;
  cfg.max_atoms = 2;
  for (int i = 0; i < 40; ++i) {
    const RankedBase rb(random_ranked_base(rng, cfg));
    const auto report = check_postulates(rb, 2);
    INFO(rb.to_string());
    REQUIRE(report.passed());
  }
}

TEST_CASE("undetermined atoms are least accessible") {
  const RankedBase rb = RB({{"p", 1}, {"p -> q", 2}});
  const auto report = check_postulates(rb, 3);
  CHECK(report.a4);
  CHECK(report.passed());
}

TEST_CASE("a corrupted degree table breaks transitivity") {
  const RankedBase rb = RB({{"p", 1}, {"p -> q", 2}});
  DegreeTable table = build_degree_table(rb, default_universe(2));
  const std::size_t n = table.domain.size();
  bool injected = false;
  for (std::size_t i = 0; i < n && !injected; ++i) {
    for (std::size_t j = 0; j < n && !injected; ++j) {
      for (std::size_t k = 0; k < n && !injected; ++k) {
        if (table.degree[i] < table.degree[j] && table.degree[j] < table.degree[k]) {
          table.leq.set(i, k, false);
          injected = true;
        }
      }
    }
  }
  REQUIRE(injected);
  const auto report = check_postulates(table);
  CHECK_FALSE(report.a1);
  CHECK_FALSE(report.counterexamples.empty());
}

TEST_CASE("relation rows") {
  Relation r(70);
  r.set(3, 65, true);
  CHECK(r.get(3, 65));
  CHECK_FALSE(r.get(65, 3));
  CHECK(r.row_subset(4, 3));
  CHECK_FALSE(r.row_subset(3, 4));
  CHECK(*r.row_excess(3, 4) == 65);
  CHECK_FALSE(r.row_full(3));
}
