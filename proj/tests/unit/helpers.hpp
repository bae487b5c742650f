#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "obr/accessibility.hpp"
#include "obr/belief_base.hpp"
#include "obr/parser.hpp"

namespace testing {

inline obr::Formula F(const std::string& text) { return obr::parse(text); }

inline obr::BeliefBase B(std::initializer_list<const char*> sentences) {
  obr::BeliefBase out;
  for (const char* s : sentences) out.insert(F(s));
  return out;
}

inline obr::RankedBase RB(std::initializer_list<std::pair<const char*, int>> entries) {
  std::vector<obr::RankedBase::Entry> list;
  for (const auto& [s, r] : entries) list.push_back({F(s), r});
  return obr::RankedBase(list);
}

inline std::vector<obr::Formula> V(std::initializer_list<const char*> sentences) {
  std::vector<obr::Formula> out;
  for (const char* s : sentences) out.push_back(F(s));
  return out;
}

}  // namespace testing
