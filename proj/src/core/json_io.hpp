#pragma once

#include <string>

#include "core/instance.hpp"

namespace robsel {

// Canonical instance format:
//   {"n":int, "p":int, "k":int|null, "first_stage":[int...],
//    "uncertainty": {"type":"discrete","scenarios":[[int...]...]}
//                 | {"type":"interval","lower":[int...],"upper":[int...]},
//    "meta":{...}}
// k null (or absent) means the two-stage model.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
std::string dump_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

// Solution format:
//   {"objective":int, "first_stage":[int...],
//    "per_scenario":{"<id>":[int...]...}, "method":string, "stats":{...}}
nlohmann::json solution_to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::json& j);
std::string dump_solution(const Solution& sol);
Solution parse_solution(const std::string& text);

}  // namespace robsel
