#include "obr/logic.hpp"

#include <algorithm>

#include "obr/error.hpp"
#include "obr/sat.hpp"

namespace obr {

bool entails(const BeliefBase& base, const Formula& goal, const Limits& limits) {
  sat::Cnf cnf;
  sat::Encoder encoder(cnf);
  for (const auto& f : base) encoder.assert_true(f);
  encoder.assert_false(goal);
  if (encoder.atom_count() > limits.solver_atoms) {
    throw Error(ErrorCode::kLimitExceeded,
                "atom universe of " + std::to_string(encoder.atom_count()) +
                    " exceeds solver cap " + std::to_string(limits.solver_atoms));
  }
  return !sat::solve(cnf);
}

bool is_tautology(const Formula& f, const Limits& limits) {
  return entails(BeliefBase{}, f, limits);
}

bool is_consistent(const BeliefBase& base, const Limits& limits) {
  return !entails(base, Formula::bottom(), limits);
}

bool is_consistent(const Formula& f, const Limits& limits) {
  return is_consistent(BeliefBase{f}, limits);
}

bool equivalent(const BeliefBase& a, const BeliefBase& b, const Limits& limits) {
  auto covers = [&](const BeliefBase& from, const BeliefBase& to) {
    return std::all_of(to.begin(), to.end(),
                       [&](const Formula& f) { return entails(from, f, limits); });
  };
  return covers(a, b) && covers(b, a);
}

bool equivalent(const Formula& a, const Formula& b, const Limits& limits) {
  return is_tautology(Formula::equivalence(a, b), limits);
}

}  // namespace obr
