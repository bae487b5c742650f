#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "obr/formula.hpp"

namespace obr {

// Bit i selects the i-th sentence of a base.
using SubsetMask = std::uint64_t;

/// Ordered, duplicate-free collection of canonical sentences. Order is the
/// insertion order and is what "base position" refers to in tie-breaks.
class BeliefBase {
 public:
  BeliefBase() = default;
  BeliefBase(std::initializer_list<Formula> sentences);
  explicit BeliefBase(const std::vector<Formula>& sentences);

  // Canonicalizes first. Returns false when the sentence was already present.
  bool insert(const Formula& f);

  bool contains(const Formula& f) const { return index_of(f).has_value(); }
  std::optional<std::size_t> index_of(const Formula& f) const;

  std::size_t size() const { return sentences_.size(); }
  bool empty() const { return sentences_.empty(); }
  const Formula& operator[](std::size_t i) const { return sentences_[i]; }
  auto begin() const { return sentences_.begin(); }
  auto end() const { return sentences_.end(); }
  const std::vector<Formula>& sentences() const { return sentences_; }

  BeliefBase subset(SubsetMask mask) const;
  // Mask of this base's sentences that also occur in `other`.
  SubsetMask mask_of(const BeliefBase& other) const;
  std::set<std::string> atoms() const;

  std::string to_string() const;

  // Order-sensitive; use same_sentences for set comparison.
  friend bool operator==(const BeliefBase&, const BeliefBase&) = default;

 private:
  std::vector<Formula> sentences_;
};

bool same_sentences(const BeliefBase& a, const BeliefBase& b);

// Sentences of `a` not in `b`, in `a`'s order.
BeliefBase difference(const BeliefBase& a, const BeliefBase& b);
// `a` followed by the sentences of `b` not already in `a`.
BeliefBase set_union(const BeliefBase& a, const BeliefBase& b);

std::string to_string(const std::vector<Formula>& sentences);

}  // namespace obr
