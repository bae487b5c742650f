#pragma once

#include <vector>

#include "obr/belief_base.hpp"
#include "obr/formula.hpp"
#include "obr/limits.hpp"

namespace obr {

/// A minimal sub-base deriving `target`: it entails the target and no proper
/// subset does.
struct EntailmentSet {
  BeliefBase members;
  SubsetMask mask = 0;  // positions in the base it was drawn from
  Formula target = Formula::top();
};

// X is drawn from the base (structural membership), entails the target, and
// no proper subset of X entails it.
bool is_entailment_set(const BeliefBase& x, const Formula& target, const BeliefBase& base,
                       const Limits& limits = {});

// Every entailment set of `target` in `base`, ordered by cardinality and then
// lexicographically by base positions. Empty iff the base does not entail
// the target; a tautology yields exactly the empty set.
// Throws kLimitExceeded when the base exceeds limits.enumeration_size.
std::vector<EntailmentSet> entailment_sets(const BeliefBase& base, const Formula& target,
                                           const Limits& limits = {});

// Calls fn(mask) for every subset of {0..n-1} with `size` elements, in
// lexicographic order of the sorted index lists. fn returns false to stop.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t size, Fn&& fn) {
  if (size > n) return true;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    SubsetMask mask = 0;
    for (std::size_t i : idx) mask |= SubsetMask{1} << i;
    if (!fn(mask)) return false;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace obr
