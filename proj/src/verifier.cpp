#include "obr/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "obr/base_io.hpp"
#include "obr/context.hpp"
#include "obr/entailment.hpp"
#include "obr/error.hpp"
#include "obr/logic.hpp"
#include "obr/parser.hpp"
#include "obr/semantics.hpp"

namespace obr {

// ===================================================================== oracle

namespace oracle {

namespace {

using Assignment = std::map<std::string, bool>;

void gather(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Connective::kAtom) {
    out.insert(f.name());
  } else if (f.kind() == Connective::kNot) {
    gather(f.child(), out);
  } else if (f.is_binary()) {
    gather(f.left(), out);
    gather(f.right(), out);
  }
}

bool holds(const Formula& f, const Assignment& v) {
  switch (f.kind()) {
    case Connective::kAtom: return v.at(f.name());
    case Connective::kTop: return true;
    case Connective::kBottom: return false;
    case Connective::kNot: return !holds(f.child(), v);
    case Connective::kAnd: return holds(f.left(), v) && holds(f.right(), v);
    case Connective::kOr: return holds(f.left(), v) || holds(f.right(), v);
    case Connective::kImplies: return !holds(f.left(), v) || holds(f.right(), v);
    case Connective::kIff: return holds(f.left(), v) == holds(f.right(), v);
  }
  return false;
}

}  // namespace

bool tt_entails(const BeliefBase& base, const Formula& goal, const Limits& limits) {
  std::set<std::string> atoms;
  for (const auto& f : base) gather(f, atoms);
  gather(goal, atoms);
  if (atoms.size() > limits.oracle_atoms) {
    throw Error(ErrorCode::kLimitExceeded,
                "truth-table oracle limited to " + std::to_string(limits.oracle_atoms) + " atoms");
  }
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  Assignment v;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << names.size()); ++row) {
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (row >> i) & 1U;
    bool model = std::all_of(base.begin(), base.end(),
                             [&](const Formula& f) { return holds(f, v); });
    if (model && !holds(goal, v)) return false;
  }
  return true;
}

std::vector<BeliefBase> brute_entailment_sets(const BeliefBase& base, const Formula& target,
                                              const Limits& limits) {
  if (base.size() > limits.oracle_base_size) {
    throw Error(ErrorCode::kLimitExceeded,
                "brute-force enumeration limited to " +
                    std::to_string(limits.oracle_base_size) + " sentences");
  }
  const SubsetMask count = SubsetMask{1} << base.size();
  std::vector<SubsetMask> entailing;
  for (SubsetMask m = 0; m < count; ++m) {
    if (tt_entails(base.subset(m), target, limits)) entailing.push_back(m);
  }
  std::vector<SubsetMask> minimal;
  for (SubsetMask m : entailing) {
    bool has_smaller = std::any_of(entailing.begin(), entailing.end(), [&](SubsetMask o) {
      return o != m && (o & m) == o;
    });
    if (!has_smaller) minimal.push_back(m);
  }
  auto indices = [](SubsetMask m) {
    std::vector<int> v;
    for (int i = 0; m != 0; ++i, m >>= 1) {
      if (m & 1U) v.push_back(i);
    }
    return v;
  };
  std::sort(minimal.begin(), minimal.end(), [&](SubsetMask a, SubsetMask b) {
    auto ia = indices(a), ib = indices(b);
    if (ia.size() != ib.size()) return ia.size() < ib.size();
    return ia < ib;
  });
  std::vector<BeliefBase> out;
  for (SubsetMask m : minimal) out.push_back(base.subset(m));
  return out;
}

Degree degree(const RankedBase& rb, const Formula& p, const Limits& limits) {
  auto max_min = [&](const Formula& f) -> std::optional<int> {
    if (tt_entails(BeliefBase{}, f, limits)) return rb.max_rank();
    if (auto r = rb.af(f)) return *r;
    auto sets = brute_entailment_sets(rb.base(), f, limits);
    if (sets.empty()) return std::nullopt;
    int best = 0;
    for (const auto& x : sets) {
      int lowest = rb.max_rank();
      for (const auto& q : x) lowest = std::min(lowest, *rb.af(q));
      best = std::max(best, lowest);
    }
    return best;
  };
  const Formula c = canonicalize(p);
  if (auto d = max_min(c)) return {*d};
  if (auto d = max_min(canonicalize(Formula::negation(c)))) return {*d};
  return {0};
}

}  // namespace oracle

// ================================================================ generation

namespace {

const std::vector<std::string> kProperties = {
    "theorem1", "theorem2", "theorem3", "theorem4", "corollary1", "agm", "def9",
    "oracle-agreement"};

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

bool chance(std::mt19937_64& rng, int percent) {
  return static_cast<int>(rng() % 100) < percent;
}

std::vector<std::string> atom_names(std::size_t k) { return default_universe(k); }

Formula neg(const Formula& f) { return canonicalize(Formula::negation(f)); }

std::mt19937_64 case_rng(const std::string& property, std::uint64_t seed, std::size_t index) {
  auto it = std::find(kProperties.begin(), kProperties.end(), property);
  const auto salt = static_cast<std::uint32_t>(it - kProperties.begin());
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    salt};
  return std::mt19937_64(seq);
}

// Consistent formula over the atoms that the base does not entail.
Formula fresh_evidence(std::mt19937_64& rng, const RankedBase& rb,
                       const std::vector<std::string>& atoms, const Limits& limits) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Formula a = canonicalize(random_formula(rng, atoms, 2));
    if (is_consistent(a, limits) && !entails(rb.base(), a, limits)) return a;
  }
  // Fall back to a literal the base leaves open or contradicts.
  for (const auto& name : atoms) {
    for (const Formula& a : {Formula::atom(name), neg(Formula::atom(name))}) {
      if (!entails(rb.base(), a, limits)) return a;
    }
  }
  return Formula::atom(atoms.front());
}

Formula consistent_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                           const Limits& limits) {
  while (true) {
    Formula a = canonicalize(random_formula(rng, atoms, 2));
    if (is_consistent(a, limits)) return a;
  }
}

}  // namespace

const std::vector<std::string>& property_names() { return kProperties; }

void require_property(const std::string& property) {
  if (std::find(kProperties.begin(), kProperties.end(), property) == kProperties.end()) {
    throw Error(ErrorCode::kUnknownProperty, "unknown property '" + property + "'");
  }
}

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms, int depth) {
  if (depth <= 0 || chance(rng, 30)) {
    if (chance(rng, 3)) return chance(rng, 50) ? Formula::top() : Formula::bottom();
    return Formula::atom(atoms[pick(rng, atoms.size())]);
  }
  switch (pick(rng, 8)) {
    case 0:
    case 1: return Formula::negation(random_formula(rng, atoms, depth - 1));
    case 2:
    case 3:
      return Formula::conjunction(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
    case 4:
    case 5:
      return Formula::disjunction(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
    case 6:
      return Formula::implication(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
    default:
      return Formula::equivalence(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
  }
}

std::vector<RankedBase::Entry> random_ranked_base(std::mt19937_64& rng, const SweepConfig& config) {
  while (true) {
    const auto atoms = atom_names(1 + pick(rng, config.max_atoms));
    const std::size_t size =
        config.min_base + pick(rng, config.max_base - config.min_base + 1);
    const bool bad_cut_bias = chance(rng, 40);
    const std::size_t plain = bad_cut_bias ? size - 1 : size;

    BeliefBase seen;
    std::vector<RankedBase::Entry> entries;
    for (int attempt = 0; entries.size() < plain && attempt < 100; ++attempt) {
      Formula f = canonicalize(random_formula(rng, atoms, 2));
      if (seen.insert(f)) {
        entries.push_back({f, 1 + static_cast<int>(pick(rng, config.max_rank))});
      }
    }
    if (bad_cut_bias && !entries.empty()) {
      const auto& conjunct = entries[pick(rng, entries.size())];
      Formula other = chance(rng, 50) ? Formula::atom(atoms[pick(rng, atoms.size())])
                                      : canonicalize(random_formula(rng, atoms, 1));
      Formula conj = chance(rng, 50) ? Formula::conjunction(conjunct.sentence, other)
                                     : Formula::conjunction(other, conjunct.sentence);
      if (seen.insert(conj)) entries.push_back({conj, conjunct.rank + 1});
    }
    if (entries.empty()) continue;
    try {
      return RankedBase::normalized(entries, config.limits).entries();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInconsistentInput) throw;
    }
  }
}

Instance generate_instance(const std::string& property, std::uint64_t seed, std::size_t index,
                           const SweepConfig& config) {
  require_property(property);
  auto rng = case_rng(property, seed, index);
  const Limits& limits = config.limits;
  Instance inst;

  if (property == "oracle-agreement") {
    const auto atoms = atom_names(1 + pick(rng, config.oracle_atoms));
    const std::size_t size = pick(rng, 5);
    for (std::size_t i = 0; i < size; ++i) {
      inst.base.push_back({canonicalize(random_formula(rng, atoms, 3)), 1});
    }
    inst.query = canonicalize(random_formula(rng, atoms, 3));
    return inst;
  }

  inst.base = random_ranked_base(rng, config);
  const RankedBase rb(inst.base, limits);
  const auto atoms = atom_names(config.max_atoms);

  if (property == "theorem3" || property == "theorem4") return inst;

  if (property == "agm" || property == "def9") {
    inst.evidence = consistent_formula(rng, atoms, limits);
    return inst;
  }

  if (property == "theorem1") {
    inst.evidence = consistent_formula(rng, atoms, limits);
    SubsetMask mask = 0;
    if (chance(rng, 50)) {
      for (const auto& x : entailment_sets(rb.base(), neg(*inst.evidence), limits)) mask |= x.mask;
    }
    for (std::size_t i = 0; i < rb.size(); ++i) {
      if (chance(rng, 50)) mask |= SubsetMask{1} << i;
    }
    inst.slice = rb.base().subset(mask).sentences();
    return inst;
  }

  // theorem2 / corollary1: (base, evidence, goal) with the goal achievable.
  inst.evidence = fresh_evidence(rng, rb, atoms, limits);
  const BeliefBase revised = revise(rb, *inst.evidence, config.policy, limits).new_base;
  auto achievable = [&](const Formula& g) {
    return !entails(rb.base(), g, limits) && entails(revised, g, limits);
  };
  for (int attempt = 0; attempt < 40; ++attempt) {
    Formula g = canonicalize(random_formula(rng, atoms, 2));
    if (achievable(g)) {
      inst.goal = g;
      return inst;
    }
  }
  std::vector<Formula> candidates;
  for (const auto& c : semantic_classes(declare_universe({atoms.begin(), atoms.end()},
                                                         config.max_atoms),
                                        limits)) {
    if (achievable(c.representative)) candidates.push_back(c.representative);
  }
  inst.goal = candidates.empty() ? *inst.evidence : candidates[pick(rng, candidates.size())];
  return inst;
}

// ============================================================ serialization

std::string serialize_instance(const Instance& inst) {
  nlohmann::json j;
  j["base"] = entries_to_json(inst.base);
  if (inst.evidence) j["evidence"] = inst.evidence->to_string();
  if (inst.goal) j["goal"] = inst.goal->to_string();
  if (inst.query) j["query"] = inst.query->to_string();
  if (!inst.slice.empty()) j["slice"] = to_json(inst.slice);
  return j.dump();
}

Instance parse_instance(const std::string& text, const Limits&) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid instance JSON: ") + e.what());
  }
  Instance inst;
  inst.base = entries_from_json(j.value("base", nlohmann::json::array()));
  auto formula = [&](const char* key) -> std::optional<Formula> {
    if (!j.contains(key)) return std::nullopt;
    return parse(j[key].get<std::string>());
  };
  inst.evidence = formula("evidence");
  inst.goal = formula("goal");
  inst.query = formula("query");
  if (j.contains("slice")) {
    for (const auto& s : j["slice"]) inst.slice.push_back(parse(s.get<std::string>()));
  }
  return inst;
}

// ================================================================== checking

namespace {

const Formula& need(const std::optional<Formula>& f, const char* what) {
  if (!f) throw Error(ErrorCode::kInvalidInput, std::string("instance lacks ") + what);
  return *f;
}

std::string classes_to_string(const std::vector<SemanticClass>& classes) {
  std::ostringstream os;
  for (std::size_t i = 0; i < classes.size() && i < 3; ++i) {
    if (i > 0) os << "; ";
    os << classes[i].representative;
  }
  return os.str();
}

std::optional<std::string> check_theorem1(const RankedBase& rb, const Instance& inst,
                                          const SweepConfig& cfg) {
  const Formula& a = need(inst.evidence, "evidence");
  Context ctx = context_from_slice(rb, a, make_goal(a), BeliefBase(inst.slice), cfg.limits);
  auto r = verify_theorem1(rb, a, ctx, cfg.policy, cfg.limits.exhaustive_atoms, cfg.limits);
  if (r.condition1 && !r.condition2) {
    return "condition (1) holds but (2) fails on " + classes_to_string(r.counterexamples);
  }
  return std::nullopt;
}

std::optional<std::string> check_theorem2(const RankedBase& rb, const Instance& inst,
                                          const SweepConfig& cfg) {
  const Formula& a = need(inst.evidence, "evidence");
  const Goal g = make_goal(need(inst.goal, "goal"));
  Context ctx = construct_context(rb, a, g, cfg.policy, cfg.limits);
  auto r = verify_theorem1(rb, a, ctx, cfg.policy, cfg.limits.exhaustive_atoms, cfg.limits);
  if (r.passed()) return std::nullopt;
  std::ostringstream os;
  os << "context " << ctx.base_slice.to_string() << " fails:";
  if (!r.condition1) os << " condition1";
  if (!r.condition2) os << " condition2";
  if (!r.non_empty_contracted_context) os << " non-empty";
  if (!r.goal_derived) os << " goal-derived";
  if (!r.neg_goal_contained) os << " neg-goal";
  if (!r.counterexamples.empty()) os << " on " << classes_to_string(r.counterexamples);
  return os.str();
}

std::optional<std::string> check_theorem3(const RankedBase& rb, const SweepConfig& cfg) {
  const Limits& limits = cfg.limits;
  const Universe universe = declare_universe(rb.base().atoms(), limits.exhaustive_atoms);
  std::vector<Formula> domain;
  for (const auto& c : semantic_classes(universe, limits)) domain.push_back(c.representative);
  for (const auto& f : rb.base()) domain.push_back(f);
  std::vector<int> degrees;
  for (const auto& f : domain) degrees.push_back(degree(rb, f, limits).value);
  for (int level = 1; level <= rb.max_rank(); ++level) {
    Cut cut = cut_at_level(rb, level);
    if (is_bad_cut(rb, cut, limits)) continue;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (degrees[i] < level && entails(cut.slice, domain[i], limits)) {
        return "cut at level " + std::to_string(level) + " entails " + domain[i].to_string() +
               " of degree " + std::to_string(degrees[i]);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_def9(const RankedBase& rb, const Instance& inst,
                                      const SweepConfig& cfg) {
  const Limits& limits = cfg.limits;
  const Formula& a = need(inst.evidence, "evidence");
  const RevisionOutcome out = revise(rb, a, cfg.policy, limits);
  const RankedBase& next = out.new_ranking;
  const int top = *next.af(out.added);
  for (const auto& e : next.entries()) {
    if (e.sentence != out.added && e.rank >= top) {
      return "evidence rank " + std::to_string(top) + " is not strictly above " +
             e.sentence.to_string();
    }
  }
  for (const auto& x : next.entries()) {
    for (const auto& y : next.entries()) {
      if (x.sentence == out.added || y.sentence == out.added) continue;
      const int before = *rb.af(x.sentence) - *rb.af(y.sentence);
      const int after = x.rank - y.rank;
      if ((before < 0) != (after < 0) || (before == 0) != (after == 0)) {
        return "relative order of " + x.sentence.to_string() + " and " + y.sentence.to_string() +
               " changed";
      }
    }
  }
  for (const auto& r : out.retracted) {
    const int got = degree(next, r, limits).value;
    const int expected = oracle::degree(next, r, limits).value;
    if (got != expected) {
      return "retracted " + r.to_string() + " has degree " + std::to_string(got) +
             ", oracle says " + std::to_string(expected);
    }
  }
  if (degree(next, out.added, limits).value != top) {
    return "evidence is queried below its own rank";
  }
  return std::nullopt;
}

}  // namespace

PropertyCaseResult check_case(const std::string& property, const Instance& inst,
                              const SweepConfig& cfg) {
  require_property(property);
  PropertyCaseResult result;
  result.property = property;
  result.instance = serialize_instance(inst);
  const Limits& limits = cfg.limits;
  std::optional<std::string> failure;
  try {
    if (property == "oracle-agreement") {
      BeliefBase base;
      for (const auto& e : inst.base) base.insert(e.sentence);
      const Formula& q = need(inst.query, "query");
      const bool fast = entails(base, q, limits);
      const bool slow = oracle::tt_entails(base, q, limits);
      if (fast != slow) {
        failure = std::string("solver says ") + (fast ? "entailed" : "not entailed") +
                  ", truth table disagrees";
      }
    } else {
      const RankedBase rb(inst.base, limits);
      if (property == "theorem1") {
        failure = check_theorem1(rb, inst, cfg);
      } else if (property == "theorem2") {
        failure = check_theorem2(rb, inst, cfg);
      } else if (property == "theorem3") {
        failure = check_theorem3(rb, cfg);
      } else if (property == "theorem4") {
        auto r = check_postulates(rb, limits.exhaustive_atoms, limits);
        if (!r.passed()) failure = r.counterexamples.front();
      } else if (property == "corollary1") {
        const Formula& a = need(inst.evidence, "evidence");
        Context ctx = construct_context(rb, a, make_goal(need(inst.goal, "goal")), cfg.policy,
                                        limits);
        auto r = verify_corollary1(rb, a, ctx, cfg.policy, limits.exhaustive_atoms, limits);
        if (!r.passed()) {
          failure = std::string("corollary fails:") + (r.monotony ? "" : " monotony") +
                    (r.revised_subset ? "" : " revised-subset") +
                    (r.non_derivability ? "" : " non-derivability");
        }
      } else if (property == "agm") {
        auto r = check_agm(rb, need(inst.evidence, "evidence"), limits.exhaustive_atoms,
                           cfg.policy, limits);
        if (!r.passed()) failure = r.counterexamples.front();
      } else if (property == "def9") {
        failure = check_def9(rb, inst, cfg);
      }
    }
  } catch (const Error& e) {
    failure = std::string(to_string(e.code())) + ": " + e.what();
  }
  result.passed = !failure.has_value();
  result.counterexample = std::move(failure);
  return result;
}

std::vector<PropertyCaseResult> sweep(const std::string& property, std::size_t trials,
                                      std::uint64_t seed, const SweepConfig& config) {
  require_property(property);
  std::vector<PropertyCaseResult> out;
  out.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    out.push_back(check_case(property, generate_instance(property, seed, i, config), config));
  }
  return out;
}

}  // namespace obr
