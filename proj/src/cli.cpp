#include "obr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "obr/base_io.hpp"
#include "obr/error.hpp"
#include "obr/logic.hpp"
#include "obr/parser.hpp"
#include "obr/verifier.hpp"

namespace obr::cli {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return kParseFailure;
    case ErrorCode::kLimitExceeded: return kCapExceeded;
    case ErrorCode::kUnknownProperty: return kUsage;
    default: return kInconsistent;
  }
}

namespace {

// "{p -> q: 1, !q: 2}"
std::string ranking_text(const RankedBase& rb) {
  std::string s = "{";
  for (std::size_t i = 0; i < rb.size(); ++i) {
    if (i > 0) s += ", ";
    s += rb.entries()[i].sentence.to_string() + ": " + std::to_string(rb.entries()[i].rank);
  }
  return s + "}";
}

json context_json(const RankedBase& rb, const Context& ctx,
                  const std::optional<Theorem1Report>& checked, const Limits& limits) {
  const EffortMeasure e = effort(rb, ctx, limits);
  json flags = nullptr;
  if (checked) {
    const Theorem1Report& report = *checked;
    flags = {{"condition1", report.condition1},
             {"condition2", report.condition2},
             {"nonEmptyContractedContext", report.non_empty_contracted_context},
             {"goalDerived", report.goal_derived},
             {"negGoalContained", report.neg_goal_contained},
             {"passed", report.passed()}};
  }
  return {{"evidence", ctx.evidence.to_string()},
          {"target", ctx.goal.formula.to_string()},
          {"negA", to_json(ctx.neg_a_part)},
          {"goal", to_json(ctx.goal_part)},
          {"negGoal", to_json(ctx.neg_goal_part)},
          {"slice", to_json(ctx.base_slice)},
          {"effort", {{"accessibility", e.accessibility.value}, {"size", e.size}}},
          {"theorem1", flags}};
}

void print_context(std::ostream& out, const RankedBase& rb, const Context& ctx,
                   const std::optional<Theorem1Report>& report, const Limits& limits) {
  const EffortMeasure e = effort(rb, ctx, limits);
  out << "goal: " << ctx.goal.formula << '\n'
      << "negA: " << ctx.neg_a_part.to_string() << '\n'
      << "goal part: " << ctx.goal_part.to_string() << '\n';
  if (!ctx.neg_goal_part.empty()) out << "neg-goal part: " << ctx.neg_goal_part.to_string() << '\n';
  out << "slice: " << ctx.base_slice.to_string() << '\n'
      << "effort: accessibility " << e.accessibility.value << ", size " << e.size << '\n'
      << "theorem 1: "
      << (!report ? "not checked, too many atoms for --max-atoms"
                  : report->passed() ? "pass" : "FAIL")
      << '\n';
}

json revision_json(const RevisionOutcome& r) {
  return {{"retained", to_json(difference(r.new_base, BeliefBase{r.added}))},
          {"retracted", to_json(r.retracted)},
          {"added", r.added.to_string()},
          {"ranking", to_json(r.new_ranking)}};
}

void print_revision(std::ostream& out, const RevisionOutcome& r) {
  out << "retained: " << difference(r.new_base, BeliefBase{r.added}).to_string() << '\n'
      << "retracted: " << to_string(r.retracted) << '\n'
      << "added: " << r.added << '\n'
      << "ranking: " << ranking_text(r.new_ranking) << '\n';
}

Context best_context(const RankedBase& rb, const Formula& a, const Desideratum& d,
                     const Config& cfg) {
  std::vector<Context> candidates;
  for (const Goal& g : achievable_goals(rb, a, d, cfg.policy, cfg.limits)) {
    candidates.push_back(construct_context(rb, a, g, cfg.policy, cfg.limits));
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoGoalDerivation, "revision derives none of the desideratum's goals");
  }
  return select_optimal(rb, candidates, cfg.limits);
}

// Exhaustive check over the exhaustive-cap universe; skipped when the inputs
// do not fit in it.
std::optional<Theorem1Report> check_context(const RankedBase& rb, const Context& ctx,
                                            const Config& cfg) {
  const std::size_t atoms = set_union(rb.base(), BeliefBase{ctx.evidence, ctx.goal.formula})
                                .atoms()
                                .size();
  if (atoms > cfg.limits.exhaustive_atoms) return std::nullopt;
  return verify_theorem1(rb, ctx.evidence, ctx, cfg.policy, cfg.limits.exhaustive_atoms,
                         cfg.limits);
}

void report_error(const Config& cfg, std::ostream& out, std::ostream& err, const Error& e) {
  if (cfg.json) {
    out << json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}.dump() << '\n';
  } else {
    err << "error: " << e.what() << '\n';
  }
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return parts;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const char* kReplHelp =
    "commands:\n"
    "  show                       print the current ranking\n"
    "  degree <f>                 degree of accessibility\n"
    "  order <f> <= <g>           is f at most as accessible as g\n"
    "  revise <f>                 revise and adjust the ranking\n"
    "  undo                       drop the last revision\n"
    "  desideratum <g1> ; <g2>..  set the basic goals\n"
    "  context <a> [; <goal>]     optimal context for evidence a\n"
    "  history                    evidence revised so far\n"
    "  quit\n";

}  // namespace

bool replays(const SessionState& state) {
  RankedBase rb = state.initial;
  for (const auto& a : state.evidence) rb = revise(rb, a, state.config.policy, state.config.limits).new_ranking;
  return rb == state.current;
}

bool repl_step(SessionState& state, const std::string& raw, std::ostream& out, std::ostream& err) {
  const std::string line = trim(raw);
  if (line.empty() || line[0] == '#') return true;
  const auto space = line.find(' ');
  const std::string cmd = line.substr(0, space);
  const std::string arg = space == std::string::npos ? "" : trim(line.substr(space + 1));
  const Config& cfg = state.config;
  const Limits& limits = cfg.limits;

  try {
    if (cmd == "quit" || cmd == "exit") return false;
    if (cmd == "help") {
      out << kReplHelp;
    } else if (cmd == "show") {
      if (cfg.json) {
        out << json{{"base", to_json(state.current)}}.dump() << '\n';
      } else {
        out << format_ranked_base(state.current);
      }
    } else if (cmd == "degree") {
      const int d = degree(state.current, parse(arg), limits).value;
      if (cfg.json) {
        out << json{{"degree", d}}.dump() << '\n';
      } else {
        out << d << '\n';
      }
    } else if (cmd == "order") {
      auto parts = split(arg, "<=");
      if (parts.size() != 2) throw Error(ErrorCode::kInvalidInput, "usage: order <f> <= <g>");
      const bool leq = leq_af(state.current, parse(parts[0]), parse(parts[1]), limits);
      if (cfg.json) {
        out << json{{"leq", leq}}.dump() << '\n';
      } else {
        out << (leq ? "true" : "false") << '\n';
      }
    } else if (cmd == "revise") {
      const Formula a = parse(arg);
      RevisionOutcome r = revise(state.current, a, cfg.policy, limits);
      state.current = r.new_ranking;
      state.evidence.push_back(a);
      state.history.push_back(r);
      if (cfg.json) {
        out << json{{"revision", revision_json(r)}, {"base", to_json(r.new_ranking)}}.dump()
            << '\n';
      } else {
        print_revision(out, r);
      }
    } else if (cmd == "undo") {
      if (state.history.empty()) throw Error(ErrorCode::kInvalidInput, "nothing to undo");
      state.history.pop_back();
      state.evidence.pop_back();
      state.current = state.history.empty() ? state.initial : state.history.back().new_ranking;
      if (cfg.json) {
        out << json{{"base", to_json(state.current)}}.dump() << '\n';
      } else {
        out << format_ranked_base(state.current);
      }
    } else if (cmd == "desideratum") {
      std::vector<Formula> goals;
      for (const auto& g : split(arg, ";")) goals.push_back(parse(g));
      state.desideratum = make_desideratum(state.current, goals, limits);
      if (!cfg.json) out << "presupposition: " << state.desideratum->presupposition << '\n';
    } else if (cmd == "context") {
      auto parts = split(arg, ";");
      const Formula a = parse(parts[0]);
      Context ctx;
      if (parts.size() >= 2) {
        ctx = construct_context(state.current, a, make_goal(parse(parts[1])), cfg.policy, limits);
      } else if (state.desideratum) {
        ctx = best_context(state.current, a, *state.desideratum, cfg);
      } else {
        throw Error(ErrorCode::kInvalidInput, "give a goal after ';' or set a desideratum");
      }
      auto report = check_context(state.current, ctx, cfg);
      if (cfg.json) {
        out << json{{"context", context_json(state.current, ctx, report, limits)}}.dump() << '\n';
      } else {
        print_context(out, state.current, ctx, report, limits);
      }
    } else if (cmd == "history") {
      if (cfg.json) {
        out << json{{"history", to_json(state.evidence)}}.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < state.evidence.size(); ++i) {
          out << i + 1 << ": " << state.evidence[i] << '\n';
        }
      }
    } else {
      err << "unknown command '" << cmd << "' (try help)\n";
    }
  } catch (const Error& e) {
    report_error(cfg, out, err, e);
  }
  return true;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Optimal belief revision over ranked propositional bases", "obr"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Config cfg;
  std::string policy_name = "accessibility";
  std::optional<std::size_t> max_atoms;
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--policy", policy_name, "Remainder selection: accessibility, full-meet, maxichoice")
      ->check(CLI::IsMember({"accessibility", "full-meet", "maxichoice"}));
  app.add_option("--max-atoms", max_atoms, "Exhaustive-check universe size (default 3, env OBR_MAX_ATOMS)")
      ->check(CLI::Range(1, static_cast<int>(kMaxClassAtoms)));

  std::string base_path;
  std::string formula_text, second_text;

  auto* parse_cmd = app.add_subcommand("parse", "Print a formula, or a base file, in canonical form");
  parse_cmd->add_option("formula", formula_text, "Formula");
  parse_cmd->add_option("-b,--base", base_path, "Ranked-base file");

  auto* degree_cmd = app.add_subcommand("degree", "Degree of accessibility of a sentence");
  degree_cmd->add_option("-b,--base", base_path, "Ranked-base file")->required();
  degree_cmd->add_option("formula", formula_text, "Sentence")->required();

  auto* order_cmd = app.add_subcommand("order", "Whether p is at most as accessible as q");
  order_cmd->add_option("-b,--base", base_path, "Ranked-base file")->required();
  order_cmd->add_option("p", formula_text, "Sentence p")->required();
  order_cmd->add_option("q", second_text, "Sentence q")->required();

  int level = 0;
  auto* cut_cmd = app.add_subcommand("cut", "Cut at a level, or at the degree of a sentence");
  cut_cmd->add_option("-b,--base", base_path, "Ranked-base file")->required();
  auto* cut_level = cut_cmd->add_option("-l,--level", level, "Level in [1, n + 1]");
  cut_cmd->add_option("formula", formula_text, "Sentence")->excludes(cut_level);

  std::string goal_text, desideratum_path;
  bool from_cut = false;
  auto* context_cmd = app.add_subcommand("context", "Optimal context for integrating evidence");
  context_cmd->add_option("-b,--base", base_path, "Ranked-base file")->required();
  context_cmd->add_option("evidence", formula_text, "Evidence")->required();
  auto* goal_opt = context_cmd->add_option("-g,--goal", goal_text, "Goal formula");
  context_cmd->add_option("-d,--desideratum", desideratum_path, "Basic goals, one per line")
      ->excludes(goal_opt);
  context_cmd->add_flag("--from-cut", from_cut, "Search accessibility cuts for the context");

  std::string write_path;
  auto* revise_cmd = app.add_subcommand("revise", "Revise and adjust the ranking");
  revise_cmd->add_option("-b,--base", base_path, "Ranked-base file")->required();
  revise_cmd->add_option("evidence", formula_text, "Evidence")->required();
  revise_cmd->add_option("-w,--write", write_path, "Write the adjusted ranking here");

  std::string evidence_path;
  auto* iterate_cmd = app.add_subcommand("iterate", "Revise by a sequence of evidence");
  iterate_cmd->add_option("-b,--base", base_path, "Ranked-base file")->required();
  iterate_cmd->add_option("-e,--evidence", evidence_path, "Evidence file, one formula per line")
      ->required();
  iterate_cmd->add_option("-w,--write", write_path, "Write the final ranking here");

  std::string property, replay;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property sweep");
  verify_cmd->add_option("property", property, "One of: " + [] {
    std::string names;
    for (const auto& p : property_names()) names += (names.empty() ? "" : ", ") + p;
    return names;
  }())->required();
  verify_cmd->add_option("--trials", trials, "Number of generated cases");
  verify_cmd->add_option("--seed", seed, "Generator seed");
  verify_cmd->add_option("--replay", replay, "Instance JSON, or a file holding it");

  auto* repl_cmd = app.add_subcommand("repl", "Interactive session");
  repl_cmd->add_option("-b,--base", base_path, "Ranked-base file");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv{"obr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (const char* env = std::getenv("OBR_MAX_ATOMS"); env != nullptr && !max_atoms) {
    try {
      max_atoms = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: OBR_MAX_ATOMS must be a positive integer\n";
      return kUsage;
    }
    if (*max_atoms < 1 || *max_atoms > kMaxClassAtoms) {
      err << "error: OBR_MAX_ATOMS must be in [1, " << kMaxClassAtoms << "]\n";
      return kUsage;
    }
  }
  if (max_atoms) cfg.limits.exhaustive_atoms = *max_atoms;
  cfg.policy = *parse_policy(policy_name);
  const Limits& limits = cfg.limits;

  auto emit = [&](const json& j) { out << j.dump(2) << '\n'; };

  try {
    if (app.got_subcommand(parse_cmd)) {
      if (!base_path.empty()) {
        const RankedBase rb = load_ranked_base(base_path, limits);
        if (cfg.json) {
          emit({{"base", to_json(rb)}});
        } else {
          out << format_ranked_base(rb);
        }
      } else if (!formula_text.empty()) {
        const Formula f = parse(formula_text);
        if (cfg.json) {
          emit({{"formula", f.to_string()}, {"atoms", atoms_of(f)}});
        } else {
          out << f << '\n';
        }
      } else {
        err << "error: parse needs a formula or --base\n";
        return kUsage;
      }
      return kOk;
    }

    if (app.got_subcommand(repl_cmd)) {
      SessionState state;
      state.config = cfg;
      if (!base_path.empty()) state.initial = load_ranked_base(base_path, limits);
      state.current = state.initial;
      std::string line;
      while (true) {
        if (!cfg.json) out << "obr> " << std::flush;
        if (!std::getline(in, line)) break;
        if (!repl_step(state, line, out, err)) break;
      }
      if (!cfg.json) out << '\n';
      return kOk;
    }

    if (app.got_subcommand(verify_cmd)) {
      require_property(property);
      SweepConfig sc;
      sc.limits = limits;
      sc.max_atoms = limits.exhaustive_atoms;
      sc.policy = cfg.policy;
      std::vector<PropertyCaseResult> results;
      if (!replay.empty()) {
        std::string text = replay;
        if (trim(text).rfind('{', 0) != 0) text = read_file(replay);
        results.push_back(check_case(property, parse_instance(text, limits), sc));
      } else {
        results = sweep(property, trials, seed, sc);
      }
      std::size_t passes = 0;
      json failures = json::array();
      for (const auto& r : results) {
        if (r.passed) {
          ++passes;
        } else {
          failures.push_back({{"counterexample", *r.counterexample},
                              {"instance", json::parse(r.instance)}});
        }
      }
      if (cfg.json) {
        emit({{"verify",
               {{"property", property},
                {"trials", results.size()},
                {"passes", passes},
                {"failures", failures}}}});
      } else {
        for (const auto& r : results) {
          if (r.passed) continue;
          out << "FAIL: " << *r.counterexample << '\n'
              << "  replay: obr verify " << property << " --replay '" << r.instance << "'\n";
        }
        out << passes << '/' << results.size() << " pass\n";
      }
      return passes == results.size() ? kOk : kCheckFailed;
    }

    const RankedBase rb = load_ranked_base(base_path, limits);

    if (app.got_subcommand(degree_cmd)) {
      const int d = degree(rb, parse(formula_text), limits).value;
      if (cfg.json) {
        emit({{"degree", d}});
      } else {
        out << d << '\n';
      }
    } else if (app.got_subcommand(order_cmd)) {
      const Formula p = parse(formula_text), q = parse(second_text);
      const bool leq = leq_af(rb, p, q, limits);
      if (cfg.json) {
        emit({{"leq", leq},
              {"degree", {degree(rb, p, limits).value, degree(rb, q, limits).value}}});
      } else {
        out << (leq ? "true" : "false") << '\n';
      }
    } else if (app.got_subcommand(cut_cmd)) {
      Cut cut = formula_text.empty() ? cut_at_level(rb, level == 0 ? 1 : level)
                                     : cut_at(rb, parse(formula_text), limits);
      const auto witnesses = bad_cut_witnesses(rb, cut, limits);
      if (cfg.json) {
        emit({{"cut",
               {{"level", cut.level},
                {"slice", to_json(cut.slice)},
                {"bad", !witnesses.empty()},
                {"witnesses", to_json(witnesses)}}}});
      } else {
        out << "level: " << cut.level << '\n' << "slice: " << cut.slice.to_string() << '\n';
        if (witnesses.empty()) {
          out << "bad: no\n";
        } else {
          out << "bad: yes, witnesses " << to_string(witnesses) << '\n';
        }
      }
    } else if (app.got_subcommand(context_cmd)) {
      const Formula a = parse(formula_text);
      Context ctx;
      if (!desideratum_path.empty()) {
        auto d = make_desideratum(rb, load_formula_lines(desideratum_path), limits);
        ctx = best_context(rb, a, d, cfg);
      } else if (!goal_text.empty()) {
        const Goal g = make_goal(parse(goal_text));
        ctx = from_cut ? context_from_cut(rb, a, g, cfg.policy, limits.exhaustive_atoms, limits)
                       : construct_context(rb, a, g, cfg.policy, limits);
      } else {
        err << "error: context needs --goal or --desideratum\n";
        return kUsage;
      }
      auto report = check_context(rb, ctx, cfg);
      if (cfg.json) {
        emit({{"context", context_json(rb, ctx, report, limits)}});
      } else {
        print_context(out, rb, ctx, report, limits);
      }
    } else if (app.got_subcommand(revise_cmd)) {
      const RevisionOutcome r = revise(rb, parse(formula_text), cfg.policy, limits);
      if (!write_path.empty()) {
        std::ofstream(write_path) << format_ranked_base(r.new_ranking);
      }
      if (cfg.json) {
        emit({{"revision", revision_json(r)}, {"base", to_json(r.new_ranking)}});
      } else {
        print_revision(out, r);
      }
    } else if (app.got_subcommand(iterate_cmd)) {
      const auto steps = revise_sequence(rb, load_formula_lines(evidence_path), cfg.policy, limits);
      const RankedBase& last = steps.empty() ? rb : steps.back().new_ranking;
      if (!write_path.empty()) std::ofstream(write_path) << format_ranked_base(last);
      if (cfg.json) {
        json list = json::array();
        for (const auto& s : steps) list.push_back(revision_json(s));
        emit({{"steps", list}, {"base", to_json(last)}});
      } else {
        for (std::size_t i = 0; i < steps.size(); ++i) {
          out << "step " << i + 1 << '\n';
          print_revision(out, steps[i]);
        }
      }
    }
  } catch (const Error& e) {
    report_error(cfg, out, err, e);
    return exit_code_for(e.code());
  }
  return kOk;
}

}  // namespace obr::cli
