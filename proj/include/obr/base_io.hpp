#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "obr/accessibility.hpp"
#include "obr/formula.hpp"
#include "obr/limits.hpp"

namespace obr {

// Ranked-base text format: '#' starts a comment, blank lines are skipped,
// every other line is "<rank> : <formula>". Errors carry the line number.
std::vector<RankedBase::Entry> parse_ranked_entries(std::string_view text);
RankedBase parse_ranked_base(std::string_view text, const Limits& limits = {});
std::string format_ranked_base(const RankedBase& rb);

// [{"rank": 1, "formula": "p"}, ...]
nlohmann::json entries_to_json(const std::vector<RankedBase::Entry>& entries);
std::vector<RankedBase::Entry> entries_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RankedBase& rb);
RankedBase ranked_base_from_json(const nlohmann::json& j, const Limits& limits = {});

// Accepts the text format, or a JSON document whose "base" key (or the
// document itself) is the entry list.
RankedBase load_ranked_base(const std::filesystem::path& path, const Limits& limits = {});
RankedBase read_ranked_base(std::string_view content, const Limits& limits = {});

// One formula per line; '#' comments and blank lines are skipped.
std::vector<Formula> parse_formula_lines(std::string_view text);
std::vector<Formula> load_formula_lines(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

nlohmann::json to_json(const std::vector<Formula>& sentences);
nlohmann::json to_json(const BeliefBase& base);

}  // namespace obr
