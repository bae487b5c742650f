#include "obr/revision.hpp"

#include <algorithm>

#include "obr/entailment.hpp"
#include "obr/error.hpp"
#include "obr/logic.hpp"
#include "obr/semantics.hpp"

namespace obr {

const char* to_string(SelectionPolicy policy) {
  switch (policy) {
    case SelectionPolicy::kAccessibilityPartialMeet: return "accessibility";
    case SelectionPolicy::kFullMeet: return "full-meet";
    case SelectionPolicy::kMaxichoiceFirst: return "maxichoice";
  }
  return "accessibility";
}

std::optional<SelectionPolicy> parse_policy(std::string_view name) {
  if (name == "accessibility") return SelectionPolicy::kAccessibilityPartialMeet;
  if (name == "full-meet") return SelectionPolicy::kFullMeet;
  if (name == "maxichoice") return SelectionPolicy::kMaxichoiceFirst;
  return std::nullopt;
}

BeliefBase expand(const BeliefBase& base, const Formula& a) {
  BeliefBase out = base;
  out.insert(a);
  return out;
}

std::vector<Remainder> remainders(const BeliefBase& base, const Formula& target,
                                  const Limits& limits) {
  if (base.size() > limits.enumeration_size) {
    throw Error(ErrorCode::kLimitExceeded,
                "base of " + std::to_string(base.size()) +
                    " sentences exceeds the enumeration cap of " +
                    std::to_string(limits.enumeration_size));
  }
  std::vector<Remainder> out;
  if (is_tautology(target, limits)) return out;
  const SubsetMask all = (SubsetMask{1} << base.size()) - 1;
  if (!entails(base, target, limits)) {
    out.push_back({base, all});
    return out;
  }
  for (std::size_t size = base.size(); size-- > 0;) {
    for_each_combination(base.size(), size, [&](SubsetMask mask) {
      for (const auto& r : out) {
        if ((r.mask & mask) == mask) return true;
      }
      BeliefBase candidate = base.subset(mask);
      if (!entails(candidate, target, limits)) out.push_back({std::move(candidate), mask});
      return true;
    });
  }
  return out;
}

std::vector<Remainder> select_remainders(const RankedBase& rb, const std::vector<Remainder>& all,
                                         SelectionPolicy policy, const Limits& limits) {
  if (all.size() <= 1 || policy == SelectionPolicy::kFullMeet) return all;
  if (policy == SelectionPolicy::kMaxichoiceFirst) return {all.front()};

  SubsetMask core = ~SubsetMask{0};
  for (const auto& r : all) core &= r.mask;
  std::vector<int> score;
  for (const auto& r : all) {
    // Two or more distinct maximal sets: each has something outside the core.
    score.push_back(set_accessibility(rb, rb.base().subset(r.mask & ~core), limits).value);
  }
  const int best = *std::max_element(score.begin(), score.end());
  std::vector<Remainder> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (score[i] == best) out.push_back(all[i]);
  }
  return out;
}

Contraction contract_detailed(const RankedBase& rb, const Formula& target,
                              SelectionPolicy policy, const Limits& limits) {
  auto all = remainders(rb.base(), target, limits);
  if (all.empty()) return {rb.base(), {}};
  auto selected = select_remainders(rb, all, policy, limits);
  SubsetMask meet = ~SubsetMask{0};
  for (const auto& r : selected) meet &= r.mask;
  return {rb.base().subset(meet), std::move(selected)};
}

BeliefBase contract(const RankedBase& rb, const Formula& target, SelectionPolicy policy,
                    const Limits& limits) {
  return contract_detailed(rb, target, policy, limits).base;
}

RankedBase adjust_ranking(const RankedBase& rb, const Formula& a, const BeliefBase& new_base,
                          const Limits& limits) {
  const Formula evidence = canonicalize(a);
  std::vector<RankedBase::Entry> entries;
  for (const auto& q : new_base) {
    if (q == evidence) {
      entries.push_back({q, rb.max_rank() + 1});
    } else if (auto r = rb.af(q)) {
      entries.push_back({q, *r});
    } else {
      throw Error(ErrorCode::kInvalidInput,
                  "'" + q.to_string() + "' is neither the evidence nor an old base sentence");
    }
  }
  return RankedBase::normalized(std::move(entries), limits);
}

RevisionOutcome revise(const RankedBase& rb, const Formula& a, SelectionPolicy policy,
                       const Limits& limits) {
  const Formula evidence = canonicalize(a);
  if (!is_consistent(evidence, limits)) {
    throw Error(ErrorCode::kInconsistentEvidence,
                "evidence '" + evidence.to_string() + "' is contradictory");
  }
  auto contraction =
      contract_detailed(rb, canonicalize(Formula::negation(evidence)), policy, limits);
  RevisionOutcome out;
  out.new_base = expand(contraction.base, evidence);
  out.retracted = difference(rb.base(), out.new_base).sentences();
  out.added = evidence;
  out.selected = std::move(contraction.selected);
  out.new_ranking = adjust_ranking(rb, evidence, out.new_base, limits);
  return out;
}

std::vector<RevisionOutcome> revise_sequence(const RankedBase& rb,
                                             const std::vector<Formula>& evidence,
                                             SelectionPolicy policy, const Limits& limits) {
  std::vector<RevisionOutcome> out;
  RankedBase current = rb;
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    try {
      out.push_back(revise(current, evidence[i], policy, limits));
    } catch (const Error& e) {
      throw StepError(i, e);
    }
    current = out.back().new_ranking;
  }
  return out;
}

AgmReport check_agm(const RankedBase& rb, const Formula& a, std::size_t k,
                    SelectionPolicy policy, const Limits& limits) {
  AgmReport report;
  const Formula evidence = canonicalize(a);
  auto atoms = rb.base().atoms();
  collect_atoms(evidence, atoms);
  const Universe universe = declare_universe(atoms, k);
  const auto classes = semantic_classes(universe, limits);
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    report.counterexamples.push_back(msg);
  };

  const RevisionOutcome outcome = revise(rb, evidence, policy, limits);
  const BeliefBase& revised = outcome.new_base;
  const BeliefBase expanded = expand(rb.base(), evidence);

  // Closure: the members among the classes form a filter.
  std::vector<bool> member(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    member[c] = entails(revised, classes[c].representative, limits);
  }
  for (std::size_t c = 0; c < classes.size() && report.closure; ++c) {
    if (!member[c]) continue;
    for (std::size_t d = 0; d < classes.size(); ++d) {
      const auto tc = classes[c].truth_table;
      const auto td = classes[d].truth_table;
      if ((tc & td) == tc && !member[d]) {
        fail(report.closure, "closure: " + classes[c].representative.to_string() +
                                 " is believed but its consequence " +
                                 classes[d].representative.to_string() + " is not");
        break;
      }
      if (member[d] && !member[tc & td]) {
        fail(report.closure, "closure: conjunction of " + classes[c].representative.to_string() +
                                 " and " + classes[d].representative.to_string() +
                                 " is not believed");
        break;
      }
    }
  }

  if (!entails(revised, evidence, limits)) {
    fail(report.success, "success: revised base does not entail " + evidence.to_string());
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (member[c] && !entails(expanded, classes[c].representative, limits)) {
      fail(report.inclusion, "inclusion: " + classes[c].representative.to_string() +
                                 " is in K*a but not in K+a");
      break;
    }
  }
  if (!entails(rb.base(), canonicalize(Formula::negation(evidence)), limits) &&
      !equivalent(revised, expanded, limits)) {
    fail(report.vacuity, "vacuity: !a is not believed but K*a differs from K+a");
  }
  if (!is_consistent(revised, limits)) {
    fail(report.consistency, "consistency: revised base is inconsistent");
  }
  for (const Formula& variant :
       {full_dnf(truth_table(evidence, universe), universe),
        Formula::disjunction(evidence, Formula::bottom())}) {
    if (!equivalent(revise(rb, variant, policy, limits).new_base, revised, limits)) {
      fail(report.extensionality,
           "extensionality: revising by " + variant.to_string() + " differs");
    }
  }

  bool k7 = true;
  bool k8 = true;
  for (const auto& name : universe) {
    for (const Formula& b : {Formula::atom(name), Formula::negation(Formula::atom(name))}) {
      const Formula both = Formula::conjunction(evidence, b);
      if (!is_consistent(both, limits)) continue;
      const BeliefBase joint = revise(rb, both, policy, limits).new_base;
      const BeliefBase revised_plus_b = expand(revised, b);
      if (!std::all_of(joint.begin(), joint.end(),
                       [&](const Formula& f) { return entails(revised_plus_b, f, limits); })) {
        k7 = false;
      }
      if (!entails(revised, canonicalize(Formula::negation(b)), limits) &&
          !std::all_of(revised_plus_b.begin(), revised_plus_b.end(),
                       [&](const Formula& f) { return entails(joint, f, limits); })) {
        k8 = false;
      }
    }
  }
  report.superexpansion = k7;
  report.subexpansion = k8;
  return report;
}

}  // namespace obr
