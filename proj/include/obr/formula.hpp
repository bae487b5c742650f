#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

namespace obr {

enum class Connective { kAtom, kTop, kBottom, kNot, kAnd, kOr, kImplies, kIff };

/// Immutable propositional sentence. Copies share structure; equality and
/// ordering are structural.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula equivalence(Formula left, Formula right);

  Connective kind() const;
  bool is_atom() const { return kind() == Connective::kAtom; }
  bool is_binary() const;

  // Only valid for atoms.
  const std::string& name() const;
  // Child of a negation, or left operand of a binary connective.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& child() const { return left(); }

  std::size_t hash() const;
  // Number of nodes.
  std::size_t size() const;

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::string name, const Formula* left,
                      const Formula* right);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  std::string name;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t hash;
  std::size_t size;
};

inline Connective Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::left() const { return *node_->left; }
inline const Formula& Formula::right() const { return *node_->right; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::size_t Formula::size() const { return node_->size; }

std::ostream& operator<<(std::ostream& os, const Formula& f);

bool is_valid_atom_name(std::string_view name);

// Collapses !!true and !!false; everything else is kept verbatim.
Formula canonicalize(const Formula& f);

void collect_atoms(const Formula& f, std::set<std::string>& out);
std::set<std::string> atoms_of(const Formula& f);

// Left-associated fold; a single element is returned as is.
template <typename It>
Formula disjoin(It first, It last) {
  Formula acc = *first;
  for (++first; first != last; ++first) acc = Formula::disjunction(acc, *first);
  return acc;
}

template <typename It>
Formula conjoin(It first, It last) {
  if (first == last) return Formula::top();
  Formula acc = *first;
  for (++first; first != last; ++first) acc = Formula::conjunction(acc, *first);
  return acc;
}

}  // namespace obr

template <>
struct std::hash<obr::Formula> {
  std::size_t operator()(const obr::Formula& f) const noexcept { return f.hash(); }
};
