#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obr/belief_base.hpp"
#include "obr/formula.hpp"
#include "obr/limits.hpp"
#include "obr/semantics.hpp"

namespace obr {

/// A consistent belief base with an integer accessibility rank per sentence.
/// Ranks cover every integer in [1, n]; larger means more accessible (more
/// recently acquired). The empty base has n = 0.
class RankedBase {
 public:
  struct Entry {
    Formula sentence;
    int rank;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  RankedBase() = default;

  // Sentences are canonicalized. Throws kInvalidInput on duplicates, ranks
  // outside [1, n] or gaps in the range, and kInconsistentInput when the
  // sentences are jointly unsatisfiable.
  explicit RankedBase(std::vector<Entry> entries, const Limits& limits = {});

  // Compacts arbitrary positive ranks to a contiguous [1, n'] preserving
  // their order, then validates as above.
  static RankedBase normalized(std::vector<Entry> entries, const Limits& limits = {});

  const BeliefBase& base() const { return base_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int max_rank() const { return max_rank_; }

  std::optional<int> af(const Formula& f) const;
  int rank_at(std::size_t i) const { return entries_[i].rank; }

  // The sub-base with ranks restricted and renormalized.
  RankedBase restrict_to(const BeliefBase& slice, const Limits& limits = {}) const;

  std::string to_string() const;

  friend bool operator==(const RankedBase& a, const RankedBase& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  BeliefBase base_;
  int max_rank_ = 0;
};

/// Degree of accessibility, in [0, n]. Zero marks undetermined sentences.
struct Degree {
  int value = 0;
  friend auto operator<=>(const Degree&, const Degree&) = default;
};

// Degree of accessibility of an arbitrary sentence:
//   tautology -> n; base sentence -> its rank; entailed -> the highest level
//   whose upper slice still entails it; negation entailed -> degree of the
//   negation; otherwise 0.
Degree degree(const RankedBase& rb, const Formula& p, const Limits& limits = {});

// Same value computed as max over entailment sets of the minimum rank in the
// set. Exponential in |base|; kept for cross-checking.
Degree degree_by_entailment_sets(const RankedBase& rb, const Formula& p,
                                 const Limits& limits = {});

// p is at most as accessible as q.
bool leq_af(const RankedBase& rb, const Formula& p, const Formula& q, const Limits& limits = {});

// A set is as accessible as its least accessible member. Throws kEmptySet.
Degree set_accessibility(const RankedBase& rb, const std::vector<Formula>& s,
                         const Limits& limits = {});
Degree set_accessibility(const RankedBase& rb, const BeliefBase& s, const Limits& limits = {});

/// Upper slice of the base at an accessibility level.
struct Cut {
  int level = 1;
  BeliefBase slice;
};

struct BadCutWitness {
  Formula culprit;
};

// Base sentences with rank >= level. Level n + 1 gives the empty slice.
BeliefBase slice_at(const RankedBase& rb, int level);
Cut cut_at_level(const RankedBase& rb, int level);

// Cut at the degree of `a`. Throws kUndeterminedSentence when that degree is 0.
Cut cut_at(const RankedBase& rb, const Formula& a, const Limits& limits = {});

// Membership of an arbitrary sentence in the full (closed) cut.
bool in_cut(const RankedBase& rb, const Cut& cut, const Formula& phi, const Limits& limits = {});

// First base sentence (base order) ranked below the cut but entailed by it.
std::optional<BadCutWitness> is_bad_cut(const RankedBase& rb, const Cut& cut,
                                        const Limits& limits = {});
std::vector<Formula> bad_cut_witnesses(const RankedBase& rb, const Cut& cut,
                                       const Limits& limits = {});

/// Square boolean relation stored as bit rows.
class Relation {
 public:
  explicit Relation(std::size_t n = 0);

  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);
  // Row j is contained in row i.
  bool row_subset(std::size_t j, std::size_t i) const;
  // Smallest column in row j but not in row i.
  std::optional<std::size_t> row_excess(std::size_t j, std::size_t i) const;
  bool row_full(std::size_t i) const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Everything the postulate checker looks at. Built from a RankedBase over a
/// finite domain: one representative per semantic class, their negations,
/// the base sentences, and a fresh atom standing in for the rest of the
/// language.
struct DegreeTable {
  Universe universe;
  std::vector<Formula> domain;
  std::vector<int> degree;
  std::vector<bool> entailed;
  std::vector<bool> neg_entailed;
  std::vector<bool> in_base;
  std::vector<bool> neg_in_base;
  std::vector<bool> tautology;
  // Index of the element's negation within the domain, when present.
  std::vector<std::optional<std::size_t>> negation;
  // Accessibility of the most accessible entailment set, for derived
  // (entailed, non-tautological, non-base) representatives.
  std::vector<std::optional<int>> most_accessible_set;
  Relation leq;
};

DegreeTable build_degree_table(const RankedBase& rb, const Universe& universe,
                               const Limits& limits = {});

struct PostulateReport {
  bool a1 = true;  // transitivity
  bool a2 = true;  // totality
  bool a3 = true;  // A =_a !A
  bool a4 = true;  // undetermined iff least accessible
  bool a5 = true;  // derived sentence ranks with its most accessible entailment set
  std::vector<std::string> counterexamples;

  bool passed() const { return a1 && a2 && a3 && a4 && a5; }
};

PostulateReport check_postulates(const DegreeTable& table);

// Builds the table over a k-atom universe containing the base's atoms.
PostulateReport check_postulates(const RankedBase& rb, std::size_t k, const Limits& limits = {});

}  // namespace obr
