#include "obr/base_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "obr/error.hpp"
#include "obr/parser.hpp"

namespace obr {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(strip_comment(line));
    if (!line.empty()) fn(number, line);
  }
}

Formula parse_on_line(std::size_t number, std::string_view text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(number) + ": " + e.what());
  }
}

}  // namespace

std::vector<RankedBase::Entry> parse_ranked_entries(std::string_view text) {
  std::vector<RankedBase::Entry> entries;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(number) + ": expected '<rank> : <formula>'");
    }
    std::string_view rank_text = trim(line.substr(0, colon));
    int rank = 0;
    auto [ptr, ec] = std::from_chars(rank_text.data(), rank_text.data() + rank_text.size(), rank);
    if (ec != std::errc{} || ptr != rank_text.data() + rank_text.size()) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(number) + ": rank '" +
                                         std::string(rank_text) + "' is not an integer");
    }
    entries.push_back({parse_on_line(number, line.substr(colon + 1)), rank});
  });
  return entries;
}

RankedBase parse_ranked_base(std::string_view text, const Limits& limits) {
  return RankedBase(parse_ranked_entries(text), limits);
}

std::string format_ranked_base(const RankedBase& rb) {
  std::ostringstream os;
  for (const auto& e : rb.entries()) os << e.rank << " : " << e.sentence << '\n';
  return os.str();
}

nlohmann::json entries_to_json(const std::vector<RankedBase::Entry>& entries) {
  auto out = nlohmann::json::array();
  for (const auto& e : entries) {
    out.push_back({{"rank", e.rank}, {"formula", e.sentence.to_string()}});
  }
  return out;
}

std::vector<RankedBase::Entry> entries_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected a JSON list of {rank, formula}");
  std::vector<RankedBase::Entry> entries;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("rank") || !item.contains("formula") ||
        !item["rank"].is_number_integer() || !item["formula"].is_string()) {
      throw Error(ErrorCode::kParse, "base entries need an integer 'rank' and a 'formula'");
    }
    entries.push_back({parse(item["formula"].get<std::string>()), item["rank"].get<int>()});
  }
  return entries;
}

nlohmann::json to_json(const RankedBase& rb) { return entries_to_json(rb.entries()); }

RankedBase ranked_base_from_json(const nlohmann::json& j, const Limits& limits) {
  const nlohmann::json& list = j.is_object() && j.contains("base") ? j["base"] : j;
  return RankedBase(entries_from_json(list), limits);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot read '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RankedBase read_ranked_base(std::string_view content, const Limits& limits) {
  std::string_view body = trim(content);
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
    }
    return ranked_base_from_json(j, limits);
  }
  return parse_ranked_base(content, limits);
}

RankedBase load_ranked_base(const std::filesystem::path& path, const Limits& limits) {
  return read_ranked_base(read_file(path), limits);
}

std::vector<Formula> parse_formula_lines(std::string_view text) {
  std::vector<Formula> out;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    out.push_back(parse_on_line(number, line));
  });
  return out;
}

std::vector<Formula> load_formula_lines(const std::filesystem::path& path) {
  return parse_formula_lines(read_file(path));
}

nlohmann::json to_json(const std::vector<Formula>& sentences) {
  auto out = nlohmann::json::array();
  for (const auto& f : sentences) out.push_back(f.to_string());
  return out;
}

nlohmann::json to_json(const BeliefBase& base) { return to_json(base.sentences()); }

}  // namespace obr
