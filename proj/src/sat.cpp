#include "obr/sat.hpp"

#include <cstdlib>

namespace obr::sat {

Lit Encoder::constant_true() {
  if (true_var_ == 0) {
    true_var_ = fresh();
    cnf_.clauses.push_back({true_var_});
  }
  return true_var_;
}

Lit Encoder::encode(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom: {
      auto [it, inserted] = atom_vars_.try_emplace(f.name(), 0);
      if (inserted) it->second = fresh();
      return it->second;
    }
    case Connective::kTop: return constant_true();
    case Connective::kBottom: return -constant_true();
    case Connective::kNot: return -encode(f.child());
    default: break;
  }
  if (auto it = gates_.find(f); it != gates_.end()) return it->second;
  const Lit a = encode(f.left());
  const Lit b = encode(f.right());
  const Lit g = fresh();
  auto& cs = cnf_.clauses;
  switch (f.kind()) {
    case Connective::kAnd:
      cs.push_back({-g, a});
      cs.push_back({-g, b});
      cs.push_back({g, -a, -b});
      break;
    case Connective::kOr:
      cs.push_back({-g, a, b});
      cs.push_back({g, -a});
      cs.push_back({g, -b});
      break;
    case Connective::kImplies:
      cs.push_back({-g, -a, b});
      cs.push_back({g, a});
      cs.push_back({g, -b});
      break;
    default:  // iff
      cs.push_back({-g, -a, b});
      cs.push_back({-g, a, -b});
      cs.push_back({g, a, b});
      cs.push_back({g, -a, -b});
      break;
  }
  gates_.emplace(f, g);
  return g;
}

void Encoder::collect_disjuncts(const Formula& f, bool positive, Clause& out) {
  // Positive: f is a disjunct. Negative: !f is a disjunct.
  if (positive && f.kind() == Connective::kOr) {
    collect_disjuncts(f.left(), true, out);
    collect_disjuncts(f.right(), true, out);
  } else if (positive && f.kind() == Connective::kImplies) {
    collect_disjuncts(f.left(), false, out);
    collect_disjuncts(f.right(), true, out);
  } else if (!positive && f.kind() == Connective::kAnd) {
    collect_disjuncts(f.left(), false, out);
    collect_disjuncts(f.right(), false, out);
  } else if (f.kind() == Connective::kNot) {
    collect_disjuncts(f.child(), !positive, out);
  } else {
    Lit l = encode(f);
    out.push_back(positive ? l : -l);
  }
}

void Encoder::assert_true(const Formula& f) {
  switch (f.kind()) {
    case Connective::kTop: return;
    case Connective::kBottom: cnf_.clauses.push_back({}); return;
    case Connective::kAnd:
      assert_true(f.left());
      assert_true(f.right());
      return;
    case Connective::kNot: assert_false(f.child()); return;
    default: {
      Clause c;
      collect_disjuncts(f, true, c);
      cnf_.clauses.push_back(std::move(c));
    }
  }
}

void Encoder::assert_false(const Formula& f) {
  switch (f.kind()) {
    case Connective::kTop: cnf_.clauses.push_back({}); return;
    case Connective::kBottom: return;
    case Connective::kOr:
      assert_false(f.left());
      assert_false(f.right());
      return;
    case Connective::kImplies:
      assert_true(f.left());
      assert_false(f.right());
      return;
    case Connective::kNot: assert_true(f.child()); return;
    default: {
      Clause c;
      collect_disjuncts(f, false, c);
      cnf_.clauses.push_back(std::move(c));
    }
  }
}

namespace {

class Dpll {
 public:
  explicit Dpll(const Cnf& cnf) : cnf_(cnf), value_(cnf.num_vars + 1, 0) {}

  bool run() { return search(); }

 private:
  int value(Lit l) const {
    int v = value_[std::abs(l)];
    return l > 0 ? v : -v;
  }

  void assign(Lit l) {
    value_[std::abs(l)] = l > 0 ? 1 : -1;
    trail_.push_back(l);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[std::abs(trail_.back())] = 0;
      trail_.pop_back();
    }
  }

  // False on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : cnf_.clauses) {
        Lit unassigned = 0;
        int open = 0;
        bool satisfied = false;
        for (Lit l : clause) {
          int v = value(l);
          if (v > 0) { satisfied = true; break; }
          if (v == 0) { ++open; unassigned = l; }
        }
        if (satisfied) continue;
        if (open == 0) return false;
        if (open == 1) {
          assign(unassigned);
          changed = true;
        }
      }
    }
    return true;
  }

  Lit pick() const {
    for (const auto& clause : cnf_.clauses) {
      Lit candidate = 0;
      bool satisfied = false;
      for (Lit l : clause) {
        int v = value(l);
        if (v > 0) { satisfied = true; break; }
        if (v == 0 && candidate == 0) candidate = l;
      }
      if (!satisfied && candidate != 0) return candidate;
    }
    return 0;
  }

  bool search() {
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return false;
    }
    const Lit l = pick();
    if (l == 0) return true;  // every clause satisfied
    const std::size_t decision = trail_.size();
    assign(l);
    if (search()) return true;
    undo(decision);
    assign(-l);
    if (search()) return true;
    undo(mark);
    return false;
  }

  const Cnf& cnf_;
  std::vector<int> value_;
  std::vector<Lit> trail_;
};

}  // namespace

bool solve(const Cnf& cnf) {
  for (const auto& c : cnf.clauses) {
    if (c.empty()) return false;
  }
  return Dpll(cnf).run();
}

}  // namespace obr::sat
