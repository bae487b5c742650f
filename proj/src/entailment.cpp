#include "obr/entailment.hpp"

#include <algorithm>

#include "obr/error.hpp"
#include "obr/logic.hpp"

namespace obr {

bool is_entailment_set(const BeliefBase& x, const Formula& target, const BeliefBase& base,
                       const Limits& limits) {
  if (!std::all_of(x.begin(), x.end(), [&](const Formula& f) { return base.contains(f); })) {
    return false;
  }
  if (!entails(x, target, limits)) return false;
  // Cn is monotone, so checking the subsets one element short suffices.
  for (std::size_t i = 0; i < x.size(); ++i) {
    SubsetMask all_but_i = ((SubsetMask{1} << x.size()) - 1) & ~(SubsetMask{1} << i);
    if (entails(x.subset(all_but_i), target, limits)) return false;
  }
  return true;
}

std::vector<EntailmentSet> entailment_sets(const BeliefBase& base, const Formula& target,
                                           const Limits& limits) {
  if (base.size() > limits.enumeration_size) {
    throw Error(ErrorCode::kLimitExceeded,
                "base of " + std::to_string(base.size()) +
                    " sentences exceeds the enumeration cap of " +
                    std::to_string(limits.enumeration_size));
  }
  std::vector<EntailmentSet> out;
  if (!entails(base, target, limits)) return out;

  std::vector<SubsetMask> hits;
  for (std::size_t size = 0; size <= base.size(); ++size) {
    for_each_combination(base.size(), size, [&](SubsetMask mask) {
      for (SubsetMask h : hits) {
        if ((h & mask) == h) return true;
      }
      BeliefBase candidate = base.subset(mask);
      if (entails(candidate, target, limits)) {
        hits.push_back(mask);
        out.push_back({std::move(candidate), mask, target});
      }
      return true;
    });
  }
  return out;
}

}  // namespace obr
