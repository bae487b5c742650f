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

TEST_CASE("parse builds the expected trees") {
  const Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  CHECK(parse("p -> (q | !r)") ==
        Formula::implication(p, Formula::disjunction(q, Formula::negation(r))));
  CHECK(parse("p & q & r") == Formula::conjunction(Formula::conjunction(p, q), r));
  CHECK(parse("p -> q -> r") == Formula::implication(p, Formula::implication(q, r)));
  CHECK(parse("p <-> q <-> r") == Formula::equivalence(Formula::equivalence(p, q), r));
  CHECK(parse("!p & q | r -> p <-> q") ==
        Formula::equivalence(
            Formula::implication(
                Formula::disjunction(Formula::conjunction(Formula::negation(p), q), r), p),
            q));
  CHECK(parse("true | false") == Formula::disjunction(Formula::top(), Formula::bottom()));
}

TEST_CASE("parse reports the offset of the first bad token") {
  try {
    parse("p ->");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK(e.code() == ErrorCode::kParse);
  }
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p $ q"), ParseError);
  CHECK_THROWS_AS(Formula::atom("true"), Error);
}

TEST_CASE("printing uses minimal parentheses and round-trips") {
  CHECK(F("p -> (q | !r)").to_string() == "p -> q | !r");
  CHECK(F("(p -> q) -> r").to_string() == "(p -> q) -> r");
  CHECK(F("p -> (q -> r)").to_string() == "p -> q -> r");
  CHECK(F("p & (q & r)").to_string() == "p & (q & r)");
  CHECK(F("!(p & q)").to_string() == "!(p & q)");
  CHECK(F("p <-> (q <-> r)").to_string() == "p <-> (q <-> r)");

  std::mt19937_64 rng(11);
  const std::vector<std::string> atoms{"p", "q", "r", "s"};
  for (int i = 0; i < 2000; ++i) {
    const Formula f = canonicalize(random_formula(rng, atoms, 4));
    REQUIRE(parse(f.to_string()) == f);
  }
}

TEST_CASE("canonicalize only folds double negations of constants") {
  CHECK(canonicalize(Formula::negation(Formula::negation(Formula::top()))) == Formula::top());
  CHECK(canonicalize(Formula::negation(Formula::negation(Formula::bottom()))) ==
        Formula::bottom());
  CHECK(F("!!p") == Formula::negation(Formula::negation(Formula::atom("p"))));
}

TEST_CASE("canonicalize is idempotent and preserves meaning") {
  std::mt19937_64 rng(3);
  const std::vector<std::string> atoms{"p", "q", "r"};
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, atoms, 4);
    const Formula c = canonicalize(f);
    REQUIRE(canonicalize(c) == c);
    REQUIRE(equivalent(BeliefBase{f}, BeliefBase{c}));
  }
}

TEST_CASE("entailment examples") {
  CHECK(entails(B({"p", "p -> q"}), F("q")));
  CHECK_FALSE(entails(B({"p"}), F("q")));
  CHECK(entails(BeliefBase{}, F("p | !p")));
  CHECK(entails(B({"p", "!p"}), F("q")));
  CHECK(is_tautology(F("p | !p")));
  CHECK_FALSE(is_tautology(F("p")));
  CHECK_FALSE(is_consistent(B({"p", "!p"})));
  CHECK(is_consistent(B({"p", "p -> q"})));
  CHECK(is_consistent(BeliefBase{}));
  CHECK_FALSE(is_consistent(F("q & !q")));
}

TEST_CASE("equivalence of bases") {
  CHECK(equivalent(B({"p & q"}), B({"p", "q"})));
  CHECK_FALSE(equivalent(B({"p"}), B({"p | q"})));
  CHECK(equivalent(B({"p -> q", "!q"}), B({"!p", "!q", "p -> q"})));
  CHECK(equivalent(F("p -> q"), F("!q -> !p")));
}

TEST_CASE("semantic classes") {
  const auto one = semantic_classes(1);
  REQUIRE(one.size() == 4);
  CHECK(one[0].representative == Formula::bottom());
  CHECK(equivalent(one[1].representative, F("!p")));
  CHECK(equivalent(one[2].representative, F("p")));
  CHECK(is_tautology(one[3].representative));
  CHECK(semantic_classes(2).size() == 16);
  const auto three = semantic_classes(3);
  REQUIRE(three.size() == 256);
  for (std::size_t t = 0; t < three.size(); ++t) {
    REQUIRE(three[t].truth_table == t);
    REQUIRE(truth_table(three[t].representative, default_universe(3)) == t);
  }
  CHECK_THROWS_AS(semantic_classes(5), Error);
}

TEST_CASE("solver agrees with the truth-table oracle") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> atoms{"p", "q", "r", "s", "t", "u"};
  for (int i = 0; i < 3000; ++i) {
    BeliefBase base;
    const std::size_t n = rng() % 4;
    for (std::size_t j = 0; j < n; ++j) base.insert(canonicalize(random_formula(rng, atoms, 3)));
    const Formula g = canonicalize(random_formula(rng, atoms, 3));
    REQUIRE(entails(base, g) == oracle::tt_entails(base, g));
  }
}

TEST_CASE("deduction property and monotony of consequence") {
  std::mt19937_64 rng(9);
  const std::vector<std::string> atoms{"p", "q", "r"};
  for (int i = 0; i < 1500; ++i) {
    BeliefBase base;
    for (std::size_t j = 0; j < rng() % 3; ++j) base.insert(canonicalize(random_formula(rng, atoms, 2)));
    const Formula f = canonicalize(random_formula(rng, atoms, 2));
    const Formula g = canonicalize(random_formula(rng, atoms, 2));
    BeliefBase bigger = base;
    bigger.insert(f);
    REQUIRE(entails(bigger, g) == entails(base, Formula::implication(f, g)));
    if (entails(base, g)) REQUIRE(entails(bigger, g));
  }
}

TEST_CASE("oracle examples") {
  CHECK(oracle::tt_entails(B({"p", "p -> q"}), F("q")));
  CHECK_FALSE(oracle::tt_entails(BeliefBase{}, F("p")));
  CHECK_THROWS_AS(oracle::tt_entails(B({"a & b & c & d & e & f"}), F("g")), Error);
}

TEST_CASE("solver atom cap") {
  Limits small;
  small.solver_atoms = 2;
  CHECK_THROWS_AS(entails(B({"p", "q"}), F("r"), small), Error);
}
