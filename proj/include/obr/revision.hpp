#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "obr/accessibility.hpp"
#include "obr/belief_base.hpp"
#include "obr/formula.hpp"
#include "obr/limits.hpp"

namespace obr {

enum class SelectionPolicy {
  kAccessibilityPartialMeet,  // every remainder of maximal accessibility
  kFullMeet,                  // every remainder
  kMaxichoiceFirst,           // the first remainder in enumeration order
};

const char* to_string(SelectionPolicy policy);
// Accepts "accessibility", "full-meet" and "maxichoice".
std::optional<SelectionPolicy> parse_policy(std::string_view name);

/// Maximal subset of a base that does not entail the contraction target.
struct Remainder {
  BeliefBase subset;
  SubsetMask mask = 0;
};

// base + a, without consistency maintenance.
BeliefBase expand(const BeliefBase& base, const Formula& a);

// All maximal non-entailing subsets, largest first and then in
// lexicographic order of base positions. A tautological target has none; a
// target the base does not entail has the base itself as only remainder.
std::vector<Remainder> remainders(const BeliefBase& base, const Formula& target,
                                  const Limits& limits = {});

// Under the accessibility policy a remainder is scored by the accessibility
// of the part that is not shared by all remainders; the sentences every
// remainder keeps are exactly those outside every entailment set of the
// target, and they would otherwise pin the score to their own rank.
std::vector<Remainder> select_remainders(const RankedBase& rb, const std::vector<Remainder>& all,
                                         SelectionPolicy policy, const Limits& limits = {});

struct Contraction {
  BeliefBase base;
  std::vector<Remainder> selected;
};

Contraction contract_detailed(const RankedBase& rb, const Formula& target,
                              SelectionPolicy policy, const Limits& limits = {});

// Partial meet contraction; a tautological target leaves the base unchanged.
BeliefBase contract(const RankedBase& rb, const Formula& target,
                    SelectionPolicy policy = SelectionPolicy::kAccessibilityPartialMeet,
                    const Limits& limits = {});

struct RevisionOutcome {
  BeliefBase new_base;
  std::vector<Formula> retracted;  // old base minus new base, in old order
  Formula added = Formula::top();
  std::vector<Remainder> selected;
  RankedBase new_ranking;
};

// Levi identity: contract by !a, then expand by a. Throws
// kInconsistentEvidence when a is unsatisfiable.
RevisionOutcome revise(const RankedBase& rb, const Formula& a,
                       SelectionPolicy policy = SelectionPolicy::kAccessibilityPartialMeet,
                       const Limits& limits = {});

// The evidence goes to rank n + 1, surviving sentences keep their rank and
// retracted ones leave the ranking. Ranks are then compacted to [1, n'].
RankedBase adjust_ranking(const RankedBase& rb, const Formula& a, const BeliefBase& new_base,
                          const Limits& limits = {});

// Folds revise over the evidence, threading the adjusted ranking. Errors are
// rethrown as StepError with the zero-based step index.
std::vector<RevisionOutcome> revise_sequence(
    const RankedBase& rb, const std::vector<Formula>& evidence,
    SelectionPolicy policy = SelectionPolicy::kAccessibilityPartialMeet,
    const Limits& limits = {});

struct AgmReport {
  bool closure = true;
  bool success = true;
  bool inclusion = true;
  bool vacuity = true;
  bool consistency = true;
  bool extensionality = true;
  // Supplementary postulates, probed with literal conjuncts. Informational.
  std::optional<bool> superexpansion;  // K*7
  std::optional<bool> subexpansion;    // K*8
  std::vector<std::string> counterexamples;

  bool passed() const {
    return closure && success && inclusion && vacuity && consistency && extensionality;
  }
};

// Basic AGM revision postulates checked over every semantic class of a
// k-atom universe containing the inputs' atoms.
AgmReport check_agm(const RankedBase& rb, const Formula& a, std::size_t k,
                    SelectionPolicy policy = SelectionPolicy::kAccessibilityPartialMeet,
                    const Limits& limits = {});

}  // namespace obr
