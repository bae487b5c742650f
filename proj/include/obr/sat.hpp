#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "obr/formula.hpp"

namespace obr::sat {

// DIMACS-style literal: +v / -v for variable v >= 1.
using Lit = int;
using Clause = std::vector<Lit>;

struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

/// Tseitin encoder. Atoms get one variable each; subformulas are shared
/// structurally so a repeated subtree is encoded once.
class Encoder {
 public:
  explicit Encoder(Cnf& cnf) : cnf_(cnf) {}

  void assert_true(const Formula& f);
  void assert_false(const Formula& f);

  std::size_t atom_count() const { return atom_vars_.size(); }

 private:
  Lit encode(const Formula& f);
  Lit fresh() { return ++cnf_.num_vars; }
  Lit constant_true();
  void collect_disjuncts(const Formula& f, bool positive, Clause& out);

  Cnf& cnf_;
  std::unordered_map<std::string, Lit> atom_vars_;
  std::unordered_map<Formula, Lit> gates_;
  Lit true_var_ = 0;
};

// Complete DPLL search with unit propagation. True iff satisfiable.
bool solve(const Cnf& cnf);

}  // namespace obr::sat
