#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "obr/accessibility.hpp"
#include "obr/context.hpp"
#include "obr/error.hpp"
#include "obr/limits.hpp"
#include "obr/revision.hpp"

namespace obr::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseFailure = 2,
  kInconsistent = 3,
  kCapExceeded = 4,
  kCheckFailed = 5,
};

int exit_code_for(ErrorCode code);

struct Config {
  Limits limits;
  SelectionPolicy policy = SelectionPolicy::kAccessibilityPartialMeet;
  bool json = false;
};

/// REPL state. `history[i]` is the outcome of revising by `evidence[i]`.
struct SessionState {
  RankedBase initial;
  RankedBase current;
  std::vector<Formula> evidence;
  std::vector<RevisionOutcome> history;
  std::optional<Desideratum> desideratum;
  Config config;
};

// Re-runs the evidence from the initial base and compares with `current`.
bool replays(const SessionState& state);

// One REPL line. Returns false on quit.
bool repl_step(SessionState& state, const std::string& line, std::ostream& out,
               std::ostream& err);

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace obr::cli
