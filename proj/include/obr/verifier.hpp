#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "obr/accessibility.hpp"
#include "obr/belief_base.hpp"
#include "obr/formula.hpp"
#include "obr/limits.hpp"
#include "obr/revision.hpp"

namespace obr {

// Brute-force oracles. They evaluate formulas with their own interpreter
// and never call the SAT solver or the entailment-set enumerator.
namespace oracle {

// Full truth table over the atoms of base and goal. Throws kLimitExceeded
// past limits.oracle_atoms.
bool tt_entails(const BeliefBase& base, const Formula& goal, const Limits& limits = {});

// All 2^|base| subsets, keeping the entailing ones that contain no other
// entailing subset. Ordered by cardinality, then base positions. Throws
// kLimitExceeded past limits.oracle_base_size.
std::vector<BeliefBase> brute_entailment_sets(const BeliefBase& base, const Formula& target,
                                              const Limits& limits = {});

// Degree of accessibility as max over entailment sets of the least rank,
// with the negation rule and 0 for undetermined sentences.
Degree degree(const RankedBase& rb, const Formula& p, const Limits& limits = {});

}  // namespace oracle

struct SweepConfig {
  Limits limits;
  std::size_t max_atoms = 3;  // atoms per generated base
  std::size_t min_base = 2;
  std::size_t max_base = 8;
  int max_rank = 4;
  std::size_t oracle_atoms = 6;  // atoms for oracle-agreement instances
  SelectionPolicy policy = SelectionPolicy::kAccessibilityPartialMeet;
};

/// One generated input. Which fields are set depends on the property.
struct Instance {
  std::vector<RankedBase::Entry> base;
  std::optional<Formula> evidence;
  std::optional<Formula> goal;
  std::optional<Formula> query;
  std::vector<Formula> slice;
};

struct PropertyCaseResult {
  std::string property;
  std::string instance;  // JSON, replayable with `obr verify --replay`
  bool passed = false;
  std::optional<std::string> counterexample;
};

const std::vector<std::string>& property_names();

// Throws kUnknownProperty.
void require_property(const std::string& property);

std::string serialize_instance(const Instance& instance);
Instance parse_instance(const std::string& json, const Limits& limits = {});

// Instance number `index` of a sweep; depends only on (property, seed, index).
Instance generate_instance(const std::string& property, std::uint64_t seed, std::size_t index,
                           const SweepConfig& config = {});

PropertyCaseResult check_case(const std::string& property, const Instance& instance,
                              const SweepConfig& config = {});

// Results are in case order and identical for identical arguments.
std::vector<PropertyCaseResult> sweep(const std::string& property, std::size_t trials,
                                      std::uint64_t seed, const SweepConfig& config = {});

// Random formula over the given atoms with at most `depth` connectives deep.
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms, int depth);

// Consistent ranked base; 40% of them rank a conjunction above one of its
// own conjuncts so bad cuts show up.
std::vector<RankedBase::Entry> random_ranked_base(std::mt19937_64& rng, const SweepConfig& config);

}  // namespace obr
