#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "obr/accessibility.hpp"
#include "obr/belief_base.hpp"
#include "obr/formula.hpp"
#include "obr/limits.hpp"
#include "obr/revision.hpp"
#include "obr/semantics.hpp"

namespace obr {

/// The inquirer's objective: a presupposition G1 | ... | Gn that is already
/// believed, whose disjuncts are the basic goals.
struct Desideratum {
  std::vector<Formula> basic_goals;
  Formula presupposition = Formula::bottom();
};

// Throws kInvalidInput when the list is empty or the base does not entail
// the disjunction.
Desideratum make_desideratum(const RankedBase& rb, std::vector<Formula> basic_goals,
                             const Limits& limits = {});

/// A basic goal, or a disjunction of at most n - 1 basic goals.
struct Goal {
  std::vector<std::size_t> disjuncts;  // indices into the basic goals
  Formula formula = Formula::top();

  bool basic() const { return disjuncts.size() <= 1; }
};

// A goal given directly rather than drawn from a desideratum.
Goal make_goal(const Formula& g);

// Basic goals first, then by number of disjuncts, then by basic-goal order.
std::vector<Goal> all_goals(const Desideratum& d);

// Goals not yet believed that revision by `a` makes believed. Empty when
// `a` is already believed.
std::vector<Goal> achievable_goals(const RankedBase& rb, const Formula& a, const Desideratum& d,
                                   SelectionPolicy policy = SelectionPolicy::kAccessibilityPartialMeet,
                                   const Limits& limits = {});

/// Sub-base sufficient to integrate the evidence and derive the goal. Every
/// part is a subset of the base and base_slice is their union in base order.
struct Context {
  BeliefBase neg_a_part;     // union of the entailment sets of !a
  BeliefBase goal_part;      // X_G: with a, a minimal derivation of the goal
  BeliefBase neg_goal_part;  // keeps !G derivable when the base believes it
  BeliefBase base_slice;
  Formula evidence = Formula::top();
  Goal goal;
};

/// Processing effort of a context: higher accessibility is better, then
/// fewer sentences.
struct EffortMeasure {
  Degree accessibility;
  std::size_t size = 0;
};

// The empty slice is maximally accessible (n).
EffortMeasure effort(const RankedBase& rb, const Context& ctx, const Limits& limits = {});

// Builds the context from entailment sets of !a and the most accessible
// goal derivation. Throws kAlreadyBelieved when the base entails `a`,
// kInvalidInput when it already entails the goal, and kNoGoalDerivation when
// revision by `a` does not derive the goal.
Context construct_context(const RankedBase& rb, const Formula& a, const Goal& g,
                          SelectionPolicy policy = SelectionPolicy::kAccessibilityPartialMeet,
                          const Limits& limits = {});

// Wraps an arbitrary slice of the base; sentences in some entailment set of
// !a form the negA part and the rest the goal part.
Context context_from_slice(const RankedBase& rb, const Formula& a, const Goal& g,
                           const BeliefBase& slice, const Limits& limits = {});

struct Theorem1Report {
  bool condition1 = true;  // context and base retract the same sentences
  bool condition2 = true;  // revising the context and re-attaching the rest matches
  bool non_empty_contracted_context = true;
  bool goal_derived = true;
  bool neg_goal_contained = true;
  std::vector<SemanticClass> counterexamples;

  bool passed() const {
    return condition1 && condition2 && non_empty_contracted_context && goal_derived &&
           neg_goal_contained;
  }
};

// Checks a context against the base it was cut from, exhaustively over the
// semantic classes of a k-atom universe holding every input atom.
Theorem1Report verify_theorem1(const RankedBase& rb, const Formula& a, const Context& ctx,
                               SelectionPolicy policy, std::size_t k, const Limits& limits = {});

struct Corollary1Report {
  bool monotony = true;          // contracted context within contracted base
  bool revised_subset = true;    // revised context within revised base
  bool non_derivability = true;  // contracted context plus the rest does not derive !a
  // Same inclusion for revision by !a; reported, not part of passed().
  bool neg_revision_subset = true;
  std::vector<SemanticClass> counterexamples;

  bool passed() const { return monotony && revised_subset && non_derivability; }
};

Corollary1Report verify_corollary1(const RankedBase& rb, const Formula& a, const Context& ctx,
                                   SelectionPolicy policy, std::size_t k,
                                   const Limits& limits = {});

// Most accessible, then smallest, then earliest in base order. Throws
// kEmptyCandidates.
Context select_optimal(const RankedBase& rb, const std::vector<Context>& candidates,
                       const Limits& limits = {});

// Scans cuts from the top level down, closing bad cuts under their
// witnesses, and returns the first slice that passes verify_theorem1; falls
// back to construct_context.
Context context_from_cut(const RankedBase& rb, const Formula& a, const Goal& g,
                         SelectionPolicy policy, std::size_t k, const Limits& limits = {});

}  // namespace obr
