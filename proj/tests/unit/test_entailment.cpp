#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "obr/entailment.hpp"
#include "obr/error.hpp"
#include "obr/verifier.hpp"

using namespace obr;
using testing::B;
using testing::F;

namespace {

std::vector<BeliefBase> members(const std::vector<EntailmentSet>& sets) {
  std::vector<BeliefBase> out;
  for (const auto& s : sets) out.push_back(s.members);
  return out;
}

}  // namespace

TEST_CASE("is_entailment_set examples") {
  const BeliefBase base = B({"p", "p -> q", "s"});
  CHECK(is_entailment_set(B({"p", "p -> q"}), F("q"), base));
  CHECK_FALSE(is_entailment_set(B({"p", "p -> q", "s"}), F("q"), base));
  CHECK(is_entailment_set(BeliefBase{}, F("p | !p"), B({"p"})));
  CHECK_FALSE(is_entailment_set(B({"t"}), F("t"), base));
  CHECK_FALSE(is_entailment_set(B({"p"}), F("q"), base));
}

TEST_CASE("entailment_sets examples") {
  CHECK(members(entailment_sets(B({"p", "p -> q"}), F("q"))) ==
        std::vector<BeliefBase>{B({"p", "p -> q"})});
  CHECK(members(entailment_sets(B({"p", "q", "p -> r", "q -> r"}), F("r"))) ==
        std::vector<BeliefBase>{B({"p", "p -> r"}), B({"q", "q -> r"})});
  CHECK(entailment_sets(B({"p"}), F("q")).empty());
  CHECK(members(entailment_sets(B({"p", "q"}), F("p | !p"))) ==
        std::vector<BeliefBase>{BeliefBase{}});
}

TEST_CASE("brute-force oracle examples") {
  CHECK(oracle::brute_entailment_sets(B({"p", "q", "p -> r", "q -> r"}), F("r")) ==
        std::vector<BeliefBase>{B({"p", "p -> r"}), B({"q", "q -> r"})});
  CHECK(oracle::brute_entailment_sets(B({"p"}), F("p")) == std::vector<BeliefBase>{B({"p"})});
  CHECK(oracle::brute_entailment_sets(B({"p"}), F("q")).empty());
}

TEST_CASE("entailment_sets against the oracle, with the set invariants") {
  std::mt19937_64 rng(21);
  const std::vector<std::string> atoms{"p", "q", "r", "s"};
  for (int i = 0; i < 300; ++i) {
    BeliefBase base;
    const std::size_t n = 1 + rng() % 8;
    while (base.size() < n) base.insert(canonicalize(random_formula(rng, atoms, 2)));
    const Formula target = canonicalize(random_formula(rng, atoms, 2));
    const auto sets = entailment_sets(base, target);
    REQUIRE(members(sets) == oracle::brute_entailment_sets(base, target));
    for (const auto& x : sets) {
      REQUIRE(is_entailment_set(x.members, target, base));
      REQUIRE(base.mask_of(x.members) == x.mask);
      for (const auto& y : sets) {
        if (x.mask != y.mask) REQUIRE((x.mask & y.mask) != x.mask);
      }
    }
    // An equivalent target gives the same list.
    const Formula same = Formula::disjunction(target, Formula::bottom());
    REQUIRE(members(entailment_sets(base, same)) == members(sets));
  }
}

TEST_CASE("entailment_sets enforces the enumeration cap") {
  Limits small;
  small.enumeration_size = 2;
  CHECK_THROWS_AS(entailment_sets(B({"p", "q", "r"}), F("p"), small), Error);
}

TEST_CASE("for_each_combination is lexicographic") {
  std::vector<SubsetMask> masks;
  for_each_combination(4, 2, [&](SubsetMask m) {
    masks.push_back(m);
    return true;
  });
  CHECK(masks == std::vector<SubsetMask>{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
}
