#include "obr/semantics.hpp"

#include <algorithm>

#include "obr/error.hpp"

namespace obr {

Valuation::Valuation(const Universe& universe, std::uint64_t bits)
    : universe_(&universe), bits_(bits) {}

bool Valuation::value(const std::string& atom) const {
  auto it = std::find(universe_->begin(), universe_->end(), atom);
  if (it == universe_->end()) {
    throw Error(ErrorCode::kInvalidInput, "atom '" + atom + "' is outside the universe");
  }
  return (bits_ >> (it - universe_->begin())) & 1U;
}

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Connective::kAtom: return v.value(f.name());
    case Connective::kTop: return true;
    case Connective::kBottom: return false;
    case Connective::kNot: return !evaluate(f.child(), v);
    case Connective::kAnd: return evaluate(f.left(), v) && evaluate(f.right(), v);
    case Connective::kOr: return evaluate(f.left(), v) || evaluate(f.right(), v);
    case Connective::kImplies: return !evaluate(f.left(), v) || evaluate(f.right(), v);
    case Connective::kIff: return evaluate(f.left(), v) == evaluate(f.right(), v);
  }
  return false;
}

Universe default_universe(std::size_t k) {
  static const char* kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  Universe out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(i < 8 ? std::string(kNames[i]) : "x" + std::to_string(i - 7));
  }
  return out;
}

Universe declare_universe(const std::set<std::string>& atoms, std::size_t k) {
  if (atoms.size() > k) {
    throw Error(ErrorCode::kLimitExceeded,
                std::to_string(atoms.size()) + " atoms exceed the exhaustive cap of " +
                    std::to_string(k));
  }
  Universe out(atoms.begin(), atoms.end());
  for (const auto& name : default_universe(k + atoms.size())) {
    if (out.size() == k) break;
    if (!atoms.contains(name)) out.push_back(name);
  }
  return out;
}

std::uint64_t truth_table(const Formula& f, const Universe& universe) {
  if (universe.size() > 6) {
    throw Error(ErrorCode::kLimitExceeded, "truth tables are limited to 6 atoms");
  }
  std::uint64_t table = 0;
  const std::uint64_t rows = std::uint64_t{1} << universe.size();
  for (std::uint64_t v = 0; v < rows; ++v) {
    if (evaluate(f, Valuation(universe, v))) table |= std::uint64_t{1} << v;
  }
  return table;
}

Formula full_dnf(std::uint64_t table, const Universe& universe) {
  std::vector<Formula> minterms;
  const std::uint64_t rows = std::uint64_t{1} << universe.size();
  for (std::uint64_t v = 0; v < rows; ++v) {
    if (!((table >> v) & 1U)) continue;
    std::vector<Formula> literals;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      Formula a = Formula::atom(universe[i]);
      literals.push_back((v >> i) & 1U ? a : Formula::negation(a));
    }
    minterms.push_back(conjoin(literals.begin(), literals.end()));
  }
  if (minterms.empty()) return Formula::bottom();
  return disjoin(minterms.begin(), minterms.end());
}

std::vector<SemanticClass> semantic_classes(const Universe& universe, const Limits& limits) {
  const std::size_t k = universe.size();
  if (k > limits.exhaustive_atoms || k > kMaxClassAtoms) {
    throw Error(ErrorCode::kLimitExceeded,
                "semantic class enumeration over " + std::to_string(k) +
                    " atoms exceeds the cap of " +
                    std::to_string(std::min(limits.exhaustive_atoms, kMaxClassAtoms)));
  }
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << k);
  std::vector<SemanticClass> out;
  out.reserve(count);
  for (std::uint64_t table = 0; table < count; ++table) {
    out.push_back({table, full_dnf(table, universe)});
  }
  return out;
}

std::vector<SemanticClass> semantic_classes(std::size_t k, const Limits& limits) {
  return semantic_classes(default_universe(k), limits);
}

}  // namespace obr
