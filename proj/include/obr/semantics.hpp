#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "obr/formula.hpp"
#include "obr/limits.hpp"

namespace obr {

using Universe = std::vector<std::string>;

/// Total assignment over a declared universe. Bit i of `bits` is the value
/// of universe[i].
class Valuation {
 public:
  Valuation(const Universe& universe, std::uint64_t bits);

  // Throws kInvalidInput for atoms outside the universe.
  bool value(const std::string& atom) const;

  const Universe& universe() const { return *universe_; }
  std::uint64_t bits() const { return bits_; }

 private:
  const Universe* universe_;
  std::uint64_t bits_;
};

bool evaluate(const Formula& f, const Valuation& v);

// p, q, r, s, t, u, v, w, then x1, x2, ...
Universe default_universe(std::size_t k);

// The given atoms (sorted) padded with unused default names up to k.
// Throws kLimitExceeded when there are more than k atoms.
Universe declare_universe(const std::set<std::string>& atoms, std::size_t k);

/// Logical-equivalence class over a k-atom universe. Bit v of the truth
/// table is the class's value under Valuation(universe, v).
struct SemanticClass {
  std::uint64_t truth_table = 0;
  Formula representative = Formula::bottom();
};

// Requires |universe| <= 6.
std::uint64_t truth_table(const Formula& f, const Universe& universe);

// Disjunction of minterms in increasing valuation order; Bottom when empty.
Formula full_dnf(std::uint64_t table, const Universe& universe);

// All 2^(2^k) classes, ordered by truth table. Throws kLimitExceeded when k
// exceeds limits.exhaustive_atoms or kMaxClassAtoms.
std::vector<SemanticClass> semantic_classes(const Universe& universe, const Limits& limits = {});
std::vector<SemanticClass> semantic_classes(std::size_t k, const Limits& limits = {});

}  // namespace obr
