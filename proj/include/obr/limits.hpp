#pragma once

#include <cstddef>

namespace obr {

// Size caps shared by every module. Exceeding one raises kLimitExceeded.
struct Limits {
  std::size_t solver_atoms = 128;    // distinct atoms handed to the SAT solver
  std::size_t exhaustive_atoms = 3;  // universe size for semantic-class sweeps
  std::size_t enumeration_size = 16; // base size for subset enumeration
  std::size_t oracle_atoms = 6;      // truth-table oracle
  std::size_t oracle_base_size = 12; // brute-force entailment sets
};

// 2^(2^4) classes is the most that can be listed in memory.
inline constexpr std::size_t kMaxClassAtoms = 4;

}  // namespace obr
