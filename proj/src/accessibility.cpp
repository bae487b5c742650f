#include "obr/accessibility.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "obr/entailment.hpp"
#include "obr/error.hpp"
#include "obr/logic.hpp"

namespace obr {

// ---------------------------------------------------------------- RankedBase

RankedBase::RankedBase(std::vector<Entry> entries, const Limits& limits) {
  int n = 0;
  for (auto& e : entries) {
    e.sentence = canonicalize(e.sentence);
    if (e.rank < 1) {
      throw Error(ErrorCode::kInvalidInput,
                  "rank " + std::to_string(e.rank) + " of '" + e.sentence.to_string() +
                      "' is below 1");
    }
    if (!base_.insert(e.sentence)) {
      throw Error(ErrorCode::kInvalidInput,
                  "duplicate sentence '" + e.sentence.to_string() + "'");
    }
    n = std::max(n, e.rank);
  }
  std::vector<bool> used(n + 1, false);
  for (const auto& e : entries) used[e.rank] = true;
  for (int r = 1; r <= n; ++r) {
    if (!used[r]) {
      throw Error(ErrorCode::kInvalidInput,
                  "ranks must cover [1, " + std::to_string(n) + "]; " + std::to_string(r) +
                      " is unused");
    }
  }
  if (!is_consistent(base_, limits)) {
    throw Error(ErrorCode::kInconsistentInput, "base " + base_.to_string() + " is inconsistent");
  }
  entries_ = std::move(entries);
  max_rank_ = n;
}

RankedBase RankedBase::normalized(std::vector<Entry> entries, const Limits& limits) {
  std::vector<int> ranks;
  for (const auto& e : entries) ranks.push_back(e.rank);
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  for (auto& e : entries) {
    e.rank = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), e.rank) -
                              ranks.begin()) + 1;
  }
  return RankedBase(std::move(entries), limits);
}

std::optional<int> RankedBase::af(const Formula& f) const {
  if (auto i = base_.index_of(f)) return entries_[*i].rank;
  return std::nullopt;
}

RankedBase RankedBase::restrict_to(const BeliefBase& slice, const Limits& limits) const {
  std::vector<Entry> kept;
  for (const auto& e : entries_) {
    if (slice.contains(e.sentence)) kept.push_back(e);
  }
  return normalized(std::move(kept), limits);
}

std::string RankedBase::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) os << ", ";
    os << entries_[i].sentence << '@' << entries_[i].rank;
  }
  os << '}';
  return os.str();
}

// -------------------------------------------------------------------- degree

namespace {

// Highest level whose upper slice entails p; p must be entailed by the base.
int derived_degree(const RankedBase& rb, const Formula& p, const Limits& limits) {
  for (int level = rb.max_rank(); level > 1; --level) {
    if (entails(slice_at(rb, level), p, limits)) return level;
  }
  return 1;
}

// Cases (i)-(iii): sentences that are the case given the base.
std::optional<int> determined_degree(const RankedBase& rb, const Formula& p,
                                     const Limits& limits) {
  if (is_tautology(p, limits)) return rb.max_rank();
  if (auto r = rb.af(p)) return *r;
  if (entails(rb.base(), p, limits)) return derived_degree(rb, p, limits);
  return std::nullopt;
}

}  // namespace

Degree degree(const RankedBase& rb, const Formula& p, const Limits& limits) {
  const Formula c = canonicalize(p);
  if (auto d = determined_degree(rb, c, limits)) return {*d};
  if (auto d = determined_degree(rb, canonicalize(Formula::negation(c)), limits)) return {*d};
  return {0};
}

Degree degree_by_entailment_sets(const RankedBase& rb, const Formula& p, const Limits& limits) {
  auto max_min = [&](const Formula& f) -> std::optional<int> {
    if (is_tautology(f, limits)) return rb.max_rank();
    if (auto r = rb.af(f)) return *r;
    auto sets = entailment_sets(rb.base(), f, limits);
    if (sets.empty()) return std::nullopt;
    int best = 0;
    for (const auto& x : sets) {
      int lowest = rb.max_rank();
      for (const auto& q : x.members) lowest = std::min(lowest, *rb.af(q));
      best = std::max(best, lowest);
    }
    return best;
  };
  const Formula c = canonicalize(p);
  if (auto d = max_min(c)) return {*d};
  if (auto d = max_min(canonicalize(Formula::negation(c)))) return {*d};
  return {0};
}

bool leq_af(const RankedBase& rb, const Formula& p, const Formula& q, const Limits& limits) {
  return degree(rb, p, limits) <= degree(rb, q, limits);
}

Degree set_accessibility(const RankedBase& rb, const std::vector<Formula>& s,
                         const Limits& limits) {
  if (s.empty()) {
    throw Error(ErrorCode::kEmptySet, "accessibility of an empty set is undefined");
  }
  Degree lowest{rb.max_rank()};
  for (const auto& f : s) lowest = std::min(lowest, degree(rb, f, limits));
  return lowest;
}

Degree set_accessibility(const RankedBase& rb, const BeliefBase& s, const Limits& limits) {
  return set_accessibility(rb, s.sentences(), limits);
}

// ---------------------------------------------------------------------- cuts

BeliefBase slice_at(const RankedBase& rb, int level) {
  BeliefBase out;
  for (const auto& e : rb.entries()) {
    if (e.rank >= level) out.insert(e.sentence);
  }
  return out;
}

Cut cut_at_level(const RankedBase& rb, int level) {
  if (level < 1 || level > rb.max_rank() + 1) {
    throw Error(ErrorCode::kInvalidInput, "cut level " + std::to_string(level) +
                                              " outside [1, " +
                                              std::to_string(rb.max_rank() + 1) + "]");
  }
  return {level, slice_at(rb, level)};
}

Cut cut_at(const RankedBase& rb, const Formula& a, const Limits& limits) {
  Degree d = degree(rb, a, limits);
  if (d.value == 0) {
    throw Error(ErrorCode::kUndeterminedSentence,
                "'" + a.to_string() + "' is undetermined; it has no cut");
  }
  return cut_at_level(rb, d.value);
}

bool in_cut(const RankedBase& rb, const Cut& cut, const Formula& phi, const Limits& limits) {
  return entails(rb.base(), phi, limits) && degree(rb, phi, limits).value >= cut.level;
}

std::vector<Formula> bad_cut_witnesses(const RankedBase& rb, const Cut& cut,
                                       const Limits& limits) {
  std::vector<Formula> out;
  for (const auto& e : rb.entries()) {
    if (e.rank < cut.level && entails(cut.slice, e.sentence, limits)) {
      out.push_back(e.sentence);
    }
  }
  return out;
}

std::optional<BadCutWitness> is_bad_cut(const RankedBase& rb, const Cut& cut,
                                        const Limits& limits) {
  for (const auto& e : rb.entries()) {
    if (e.rank < cut.level && entails(cut.slice, e.sentence, limits)) {
      return BadCutWitness{e.sentence};
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ Relation

Relation::Relation(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

bool Relation::get(std::size_t i, std::size_t j) const {
  return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
}

void Relation::set(std::size_t i, std::size_t j, bool value) {
  auto& w = bits_[i * words_ + j / 64];
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  w = value ? (w | bit) : (w & ~bit);
}

bool Relation::row_subset(std::size_t j, std::size_t i) const {
  return !row_excess(j, i).has_value();
}

std::optional<std::size_t> Relation::row_excess(std::size_t j, std::size_t i) const {
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t excess = bits_[j * words_ + w] & ~bits_[i * words_ + w];
    if (excess != 0) return w * 64 + std::countr_zero(excess);
  }
  return std::nullopt;
}

bool Relation::row_full(std::size_t i) const {
  for (std::size_t j = 0; j < n_; ++j) {
    if (!get(i, j)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- postulates

namespace {

std::string fresh_atom(const Universe& universe, const BeliefBase& base) {
  auto used = base.atoms();
  used.insert(universe.begin(), universe.end());
  for (int i = 0;; ++i) {
    std::string name = i == 0 ? "z" : "z" + std::to_string(i);
    if (!used.contains(name)) return name;
  }
}

}  // namespace

DegreeTable build_degree_table(const RankedBase& rb, const Universe& universe,
                               const Limits& limits) {
  DegreeTable t;
  t.universe = universe;
  const auto classes = semantic_classes(universe, limits);
  const std::size_t reps = classes.size();
  for (const auto& c : classes) t.domain.push_back(c.representative);
  for (const auto& c : classes) t.domain.push_back(Formula::negation(c.representative));
  for (const auto& f : rb.base()) t.domain.push_back(f);
  t.domain.push_back(Formula::atom(fresh_atom(universe, rb.base())));

  const std::size_t n = t.domain.size();
  t.negation.assign(n, std::nullopt);
  for (std::size_t i = 0; i < reps; ++i) {
    t.negation[i] = reps + i;
    t.negation[reps + i] = i;
  }
  t.most_accessible_set.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    const Formula& f = t.domain[i];
    const Formula neg = canonicalize(Formula::negation(f));
    t.degree.push_back(degree(rb, f, limits).value);
    t.entailed.push_back(entails(rb.base(), f, limits));
    t.neg_entailed.push_back(entails(rb.base(), neg, limits));
    t.in_base.push_back(rb.base().contains(f));
    t.neg_in_base.push_back(rb.base().contains(neg));
    t.tautology.push_back(is_tautology(f, limits));
  }

  // Most accessible entailment set for each derived representative; ties
  // need no breaking since only the accessibility value is compared.
  for (std::size_t i = 0; i < reps; ++i) {
    if (!t.entailed[i] || t.tautology[i] || t.in_base[i]) continue;
    int best = 0;
    for (const auto& x : entailment_sets(rb.base(), t.domain[i], limits)) {
      best = std::max(best, set_accessibility(rb, x.members, limits).value);
    }
    t.most_accessible_set[i] = best;
  }

  t.leq = Relation(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.leq.set(i, j, t.degree[i] <= t.degree[j]);
  }
  return t;
}

PostulateReport check_postulates(const DegreeTable& t) {
  PostulateReport report;
  const std::size_t n = t.domain.size();
  constexpr std::size_t kMaxExamples = 3;
  std::size_t a1_examples = 0, a2_examples = 0, a3_examples = 0, a4_examples = 0,
              a5_examples = 0;
  auto note = [&](bool& flag, std::size_t& count, const std::string& msg) {
    flag = false;
    if (count++ < kMaxExamples) report.counterexamples.push_back(msg);
  };
  auto str = [&](std::size_t i) { return t.domain[i].to_string(); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!t.leq.get(i, j)) continue;
      // i <= j and j <= k must give i <= k for every k.
      if (auto k = t.leq.row_excess(j, i)) {
        note(report.a1, a1_examples,
             "A1: " + str(i) + " <= " + str(j) + " and " + str(j) + " <= " + str(*k) +
                 " but not " + str(i) + " <= " + str(*k));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!t.leq.get(i, j) && !t.leq.get(j, i)) {
        note(report.a2, a2_examples, "A2: " + str(i) + " and " + str(j) + " are incomparable");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!t.negation[i] || t.in_base[i] || t.neg_in_base[i]) continue;
    const std::size_t j = *t.negation[i];
    if (!t.leq.get(i, j) || !t.leq.get(j, i)) {
      note(report.a3, a3_examples, "A3: " + str(i) + " and " + str(j) + " differ in accessibility");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const bool undetermined = !t.entailed[i] && !t.neg_entailed[i];
    if (undetermined != t.leq.row_full(i)) {
      note(report.a4, a4_examples,
           "A4: " + str(i) + (undetermined ? " is undetermined but not least accessible"
                                           : " is determined yet least accessible"));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!t.most_accessible_set[i]) continue;
    if (t.degree[i] != *t.most_accessible_set[i]) {
      note(report.a5, a5_examples,
           "A5: " + str(i) + " has degree " + std::to_string(t.degree[i]) +
               " but its most accessible entailment set has " +
               std::to_string(*t.most_accessible_set[i]));
    }
  }
  return report;
}

PostulateReport check_postulates(const RankedBase& rb, std::size_t k, const Limits& limits) {
  return check_postulates(build_degree_table(rb, declare_universe(rb.base().atoms(), k), limits));
}

}  // namespace obr
