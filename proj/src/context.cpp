#include "obr/context.hpp"

#include <algorithm>
#include <tuple>

#include "obr/entailment.hpp"
#include "obr/error.hpp"
#include "obr/logic.hpp"

namespace obr {

namespace {

Formula neg(const Formula& f) { return canonicalize(Formula::negation(f)); }

std::vector<std::size_t> positions(SubsetMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

Universe universe_for(const RankedBase& rb, const Formula& a, const Formula& g, std::size_t k) {
  auto atoms = rb.base().atoms();
  collect_atoms(a, atoms);
  collect_atoms(g, atoms);
  return declare_universe(atoms, k);
}

// Candidate with the highest accessibility, first in enumeration order on ties.
const EntailmentSet* most_accessible(const RankedBase& rb, const std::vector<EntailmentSet>& sets,
                                     const Limits& limits) {
  const EntailmentSet* best = nullptr;
  int best_score = -1;
  for (const auto& x : sets) {
    int score = x.members.empty() ? rb.max_rank()
                                  : set_accessibility(rb, x.members, limits).value;
    if (score > best_score) {
      best = &x;
      best_score = score;
    }
  }
  return best;
}

BeliefBase union_of(const BeliefBase& base, const std::vector<EntailmentSet>& sets) {
  SubsetMask mask = 0;
  for (const auto& x : sets) mask |= x.mask;
  return base.subset(mask);
}

}  // namespace

// ---------------------------------------------------------------------- goals

Desideratum make_desideratum(const RankedBase& rb, std::vector<Formula> basic_goals,
                             const Limits& limits) {
  if (basic_goals.empty()) {
    throw Error(ErrorCode::kInvalidInput, "a desideratum needs at least one basic goal");
  }
  for (auto& g : basic_goals) g = canonicalize(g);
  Desideratum d;
  d.presupposition = disjoin(basic_goals.begin(), basic_goals.end());
  d.basic_goals = std::move(basic_goals);
  if (!entails(rb.base(), d.presupposition, limits)) {
    throw Error(ErrorCode::kInvalidInput,
                "presupposition '" + d.presupposition.to_string() + "' is not believed");
  }
  return d;
}

Goal make_goal(const Formula& g) { return Goal{{}, canonicalize(g)}; }

std::vector<Goal> all_goals(const Desideratum& d) {
  const std::size_t n = d.basic_goals.size();
  const std::size_t largest = n > 1 ? n - 1 : 1;
  std::vector<Goal> out;
  for (std::size_t size = 1; size <= largest; ++size) {
    for_each_combination(n, size, [&](SubsetMask mask) {
      Goal g;
      g.disjuncts = positions(mask);
      std::vector<Formula> parts;
      for (std::size_t i : g.disjuncts) parts.push_back(d.basic_goals[i]);
      g.formula = disjoin(parts.begin(), parts.end());
      out.push_back(std::move(g));
      return true;
    });
  }
  return out;
}

std::vector<Goal> achievable_goals(const RankedBase& rb, const Formula& a, const Desideratum& d,
                                   SelectionPolicy policy, const Limits& limits) {
  const Formula evidence = canonicalize(a);
  if (!is_consistent(evidence, limits)) {
    throw Error(ErrorCode::kInconsistentEvidence,
                "evidence '" + evidence.to_string() + "' is contradictory");
  }
  std::vector<Goal> out;
  if (entails(rb.base(), evidence, limits)) return out;
  const BeliefBase revised = revise(rb, evidence, policy, limits).new_base;
  for (auto& g : all_goals(d)) {
    if (!entails(rb.base(), g.formula, limits) && entails(revised, g.formula, limits)) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

// ------------------------------------------------------------------- contexts

EffortMeasure effort(const RankedBase& rb, const Context& ctx, const Limits& limits) {
  if (ctx.base_slice.empty()) return {Degree{rb.max_rank()}, 0};
  return {set_accessibility(rb, ctx.base_slice, limits), ctx.base_slice.size()};
}

Context construct_context(const RankedBase& rb, const Formula& a, const Goal& g,
                          SelectionPolicy policy, const Limits& limits) {
  const BeliefBase& base = rb.base();
  const Formula evidence = canonicalize(a);
  if (entails(base, evidence, limits)) {
    throw Error(ErrorCode::kAlreadyBelieved,
                "'" + evidence.to_string() + "' is already believed");
  }
  if (entails(base, g.formula, limits)) {
    throw Error(ErrorCode::kInvalidInput,
                "goal '" + g.formula.to_string() + "' is already believed");
  }

  Context ctx;
  ctx.evidence = evidence;
  ctx.goal = g;
  ctx.neg_a_part = union_of(base, entailment_sets(base, neg(evidence), limits));

  const BeliefBase revised = revise(rb, evidence, policy, limits).new_base;
  // The evidence is not in the base, so it sits last in the revised base and
  // every other member of a derivation is an old base sentence.
  std::vector<EntailmentSet> derivations;
  for (auto& x : entailment_sets(revised, g.formula, limits)) {
    if (!x.members.contains(evidence)) continue;
    EntailmentSet rest;
    for (const auto& f : x.members) {
      if (f != evidence) rest.members.insert(f);
    }
    rest.mask = base.mask_of(rest.members);
    rest.target = g.formula;
    derivations.push_back(std::move(rest));
  }
  const EntailmentSet* chosen = most_accessible(rb, derivations, limits);
  if (chosen == nullptr) {
    throw Error(ErrorCode::kNoGoalDerivation,
                "revision by '" + evidence.to_string() + "' does not derive '" +
                    g.formula.to_string() + "'");
  }
  ctx.goal_part = chosen->members;

  BeliefBase slice = set_union(ctx.neg_a_part, ctx.goal_part);
  const Formula neg_goal = neg(g.formula);
  if (entails(base, neg_goal, limits) && !entails(slice, neg_goal, limits)) {
    auto sets = entailment_sets(base, neg_goal, limits);
    if (const EntailmentSet* x = most_accessible(rb, sets, limits)) {
      ctx.neg_goal_part = difference(x->members, slice);
      slice = set_union(slice, ctx.neg_goal_part);
    }
  }
  ctx.base_slice = base.subset(base.mask_of(slice));
  return ctx;
}

Context context_from_slice(const RankedBase& rb, const Formula& a, const Goal& g,
                           const BeliefBase& slice, const Limits& limits) {
  const BeliefBase& base = rb.base();
  Context ctx;
  ctx.evidence = canonicalize(a);
  ctx.goal = g;
  ctx.base_slice = base.subset(base.mask_of(slice));
  const SubsetMask relevant = [&] {
    SubsetMask m = 0;
    for (const auto& x : entailment_sets(base, neg(ctx.evidence), limits)) m |= x.mask;
    return m;
  }();
  const SubsetMask in_slice = base.mask_of(slice);
  ctx.neg_a_part = base.subset(in_slice & relevant);
  ctx.goal_part = base.subset(in_slice & ~relevant);
  return ctx;
}

// ----------------------------------------------------------------- verifiers

Theorem1Report verify_theorem1(const RankedBase& rb, const Formula& a, const Context& ctx,
                               SelectionPolicy policy, std::size_t k, const Limits& limits) {
  Theorem1Report report;
  const Formula evidence = canonicalize(a);
  const Formula& goal = ctx.goal.formula;
  const auto classes = semantic_classes(universe_for(rb, evidence, goal, k), limits);
  auto record = [&](const SemanticClass& c) {
    auto same = [&](const SemanticClass& o) { return o.truth_table == c.truth_table; };
    if (std::none_of(report.counterexamples.begin(), report.counterexamples.end(), same)) {
      report.counterexamples.push_back(c);
    }
  };

  const BeliefBase& base = rb.base();
  const BeliefBase& slice = ctx.base_slice;
  if (!std::all_of(slice.begin(), slice.end(),
                   [&](const Formula& f) { return base.contains(f); })) {
    report.condition1 = false;
    report.condition2 = false;
    return report;
  }
  const Formula neg_a = neg(evidence);
  const RankedBase sub = rb.restrict_to(slice, limits);
  const BeliefBase contracted = contract(rb, neg_a, policy, limits);
  const BeliefBase contracted_ctx = contract(sub, neg_a, policy, limits);

  // (1) Both revisions give up the same sentences.
  const BeliefBase lost = difference(base, contracted);
  const BeliefBase lost_ctx = difference(slice, contracted_ctx);
  report.condition1 = same_sentences(lost, lost_ctx);
  for (const auto& c : classes) {
    if (entails(lost, c.representative, limits) != entails(lost_ctx, c.representative, limits)) {
      report.condition1 = false;
      record(c);
    }
  }

  // (2) Revising the context and re-attaching the rest of the base.
  const BeliefBase revised = expand(contracted, evidence);
  const BeliefBase revised_ctx = expand(contracted_ctx, evidence);
  const BeliefBase reattached = set_union(revised_ctx, difference(base, slice));
  for (const auto& c : classes) {
    if (entails(revised, c.representative, limits) !=
        entails(reattached, c.representative, limits)) {
      report.condition2 = false;
      record(c);
    }
  }

  if (!entails(BeliefBase{evidence}, goal, limits)) {
    report.non_empty_contracted_context = !contracted_ctx.empty();
  }
  report.goal_derived = entails(revised_ctx, goal, limits);
  const Formula neg_goal = neg(goal);
  if (entails(base, neg_goal, limits)) {
    report.neg_goal_contained = entails(slice, neg_goal, limits);
  }
  return report;
}

Corollary1Report verify_corollary1(const RankedBase& rb, const Formula& a, const Context& ctx,
                                   SelectionPolicy policy, std::size_t k,
                                   const Limits& limits) {
  Corollary1Report report;
  const Formula evidence = canonicalize(a);
  const auto classes =
      semantic_classes(universe_for(rb, evidence, ctx.goal.formula, k), limits);
  const BeliefBase& base = rb.base();
  const RankedBase sub = rb.restrict_to(ctx.base_slice, limits);
  const Formula neg_a = neg(evidence);

  const BeliefBase contracted = contract(rb, neg_a, policy, limits);
  const BeliefBase contracted_ctx = contract(sub, neg_a, policy, limits);
  const BeliefBase revised = expand(contracted, evidence);
  const BeliefBase revised_ctx = expand(contracted_ctx, evidence);

  auto subset_check = [&](const BeliefBase& small, const BeliefBase& large, bool& flag) {
    for (const auto& c : classes) {
      if (entails(small, c.representative, limits) && !entails(large, c.representative, limits)) {
        flag = false;
        report.counterexamples.push_back(c);
        return;
      }
    }
  };
  subset_check(contracted_ctx, contracted, report.monotony);
  subset_check(revised_ctx, revised, report.revised_subset);

  if (is_consistent(neg_a, limits)) {
    const BeliefBase by_neg = revise(rb, neg_a, policy, limits).new_base;
    const BeliefBase by_neg_ctx = revise(sub, neg_a, policy, limits).new_base;
    subset_check(by_neg_ctx, by_neg, report.neg_revision_subset);
  }

  if (!is_tautology(neg_a, limits)) {
    const BeliefBase rest = set_union(contracted_ctx, difference(base, ctx.base_slice));
    report.non_derivability = !entails(rest, neg_a, limits);
  }
  return report;
}

// ------------------------------------------------------------------ selection

Context select_optimal(const RankedBase& rb, const std::vector<Context>& candidates,
                       const Limits& limits) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kEmptyCandidates, "no candidate contexts to choose from");
  }
  const BeliefBase& base = rb.base();
  auto key = [&](const Context& c) {
    EffortMeasure e = effort(rb, c, limits);
    return std::make_tuple(-e.accessibility.value, e.size,
                           positions(base.mask_of(c.base_slice)),
                           positions(base.mask_of(c.neg_a_part)),
                           positions(base.mask_of(c.goal_part)));
  };
  std::size_t best = 0;
  auto best_key = key(candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    auto k = key(candidates[i]);
    if (k < best_key) {
      best = i;
      best_key = std::move(k);
    }
  }
  return candidates[best];
}

Context context_from_cut(const RankedBase& rb, const Formula& a, const Goal& g,
                         SelectionPolicy policy, std::size_t k, const Limits& limits) {
  const Formula evidence = canonicalize(a);
  if (entails(rb.base(), evidence, limits)) {
    throw Error(ErrorCode::kAlreadyBelieved,
                "'" + evidence.to_string() + "' is already believed");
  }
  for (int level = rb.max_rank(); level >= 1; --level) {
    BeliefBase slice = slice_at(rb, level);
    // Close a bad cut under the base sentences it entails.
    while (true) {
      auto witnesses = bad_cut_witnesses(rb, Cut{level, slice}, limits);
      std::size_t before = slice.size();
      for (const auto& w : witnesses) slice.insert(w);
      if (slice.size() == before) break;
    }
    Context ctx = context_from_slice(rb, evidence, g, slice, limits);
    if (verify_theorem1(rb, evidence, ctx, policy, k, limits).passed()) return ctx;
  }
  return construct_context(rb, evidence, g, policy, limits);
}

}  // namespace obr
