#pragma once

#include "obr/belief_base.hpp"
#include "obr/formula.hpp"
#include "obr/limits.hpp"

namespace obr {

// Cn membership: goal is true in every model of the base. Decided by the
// DPLL solver on base & !goal. Throws kLimitExceeded past limits.solver_atoms.
bool entails(const BeliefBase& base, const Formula& goal, const Limits& limits = {});

bool is_tautology(const Formula& f, const Limits& limits = {});
bool is_consistent(const BeliefBase& base, const Limits& limits = {});
bool is_consistent(const Formula& f, const Limits& limits = {});

// Same model set over the union of both atom sets.
bool equivalent(const BeliefBase& a, const BeliefBase& b, const Limits& limits = {});
bool equivalent(const Formula& a, const Formula& b, const Limits& limits = {});

}  // namespace obr
