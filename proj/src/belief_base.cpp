#include "obr/belief_base.hpp"

#include <algorithm>
#include <sstream>

namespace obr {

BeliefBase::BeliefBase(std::initializer_list<Formula> sentences) {
  for (const auto& f : sentences) insert(f);
}

BeliefBase::BeliefBase(const std::vector<Formula>& sentences) {
  for (const auto& f : sentences) insert(f);
}

bool BeliefBase::insert(const Formula& f) {
  Formula c = canonicalize(f);
  if (contains(c)) return false;
  sentences_.push_back(std::move(c));
  return true;
}

std::optional<std::size_t> BeliefBase::index_of(const Formula& f) const {
  auto it = std::find(sentences_.begin(), sentences_.end(), f);
  if (it == sentences_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sentences_.begin());
}

BeliefBase BeliefBase::subset(SubsetMask mask) const {
  BeliefBase out;
  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    if (mask & (SubsetMask{1} << i)) out.sentences_.push_back(sentences_[i]);
  }
  return out;
}

SubsetMask BeliefBase::mask_of(const BeliefBase& other) const {
  SubsetMask mask = 0;
  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    if (other.contains(sentences_[i])) mask |= SubsetMask{1} << i;
  }
  return mask;
}

std::set<std::string> BeliefBase::atoms() const {
  std::set<std::string> out;
  for (const auto& f : sentences_) collect_atoms(f, out);
  return out;
}

std::string BeliefBase::to_string() const { return obr::to_string(sentences_); }

bool same_sentences(const BeliefBase& a, const BeliefBase& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Formula& f) { return b.contains(f); });
}

BeliefBase difference(const BeliefBase& a, const BeliefBase& b) {
  BeliefBase out;
  for (const auto& f : a) {
    if (!b.contains(f)) out.insert(f);
  }
  return out;
}

BeliefBase set_union(const BeliefBase& a, const BeliefBase& b) {
  BeliefBase out = a;
  for (const auto& f : b) out.insert(f);
  return out;
}

std::string to_string(const std::vector<Formula>& sentences) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i > 0) os << ", ";
    os << sentences[i];
  }
  os << '}';
  return os.str();
}

}  // namespace obr
