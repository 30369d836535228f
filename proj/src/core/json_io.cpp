#include "core/json_io.hpp"

#include "core/errors.hpp"

namespace robsel {
namespace {

using nlohmann::json;

Cost as_cost(const json& j, const char* where) {
  if (!j.is_number_integer())
    throw ParseError(std::string(where) + ": expected an integer cost");
  return j.get<Cost>();
}

std::vector<Cost> cost_vector(const json& j, int expected, const char* where) {
  if (!j.is_array())
    throw ParseError(std::string(where) + ": expected an array");
  if (expected >= 0 && static_cast<int>(j.size()) != expected)
    throw ParseError(std::string(where) + ": expected " +
                     std::to_string(expected) + " entries, found " +
                     std::to_string(j.size()));
  std::vector<Cost> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_cost(v, where));
  return out;
}

ItemSet item_set(const json& j, const char* where) {
  if (!j.is_array())
    throw ParseError(std::string(where) + ": expected an array of indices");
  ItemSet out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw ParseError(std::string(where) + ": expected integer indices");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json j;
  j["n"] = inst.n();
  j["p"] = inst.p;
  if (inst.k)
    j["k"] = *inst.k;
  else
    j["k"] = nullptr;
  j["first_stage"] = inst.first_stage;
  if (inst.is_interval()) {
    j["uncertainty"] = {{"type", "interval"},
                        {"lower", inst.interval().lower},
                        {"upper", inst.interval().upper}};
  } else {
    j["uncertainty"] = {{"type", "discrete"},
                        {"scenarios", inst.discrete().scenarios}};
  }
  j["meta"] = inst.meta;
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  for (const char* key : {"n", "p", "first_stage", "uncertainty"})
    if (!j.contains(key))
      throw ParseError(std::string("instance: missing field \"") + key + "\"");
  Instance inst;
  if (!j["n"].is_number_integer() || !j["p"].is_number_integer())
    throw ParseError("instance: n and p must be integers");
  const int n = j["n"].get<int>();
  inst.p = j["p"].get<int>();
  if (j.contains("k") && !j["k"].is_null()) {
    if (!j["k"].is_number_integer())
      throw ParseError("instance: k must be an integer or null");
    inst.k = j["k"].get<int>();
  }
  inst.first_stage = cost_vector(j["first_stage"], n, "first_stage");
  const auto& unc = j["uncertainty"];
  if (!unc.is_object() || !unc.contains("type"))
    throw ParseError("uncertainty: expected an object with a \"type\"");
  const std::string type = unc["type"].get<std::string>();
  if (type == "interval") {
    if (!unc.contains("lower") || !unc.contains("upper"))
      throw ParseError("uncertainty: interval needs \"lower\" and \"upper\"");
    IntervalCosts iv;
    iv.lower = cost_vector(unc["lower"], n, "uncertainty.lower");
    iv.upper = cost_vector(unc["upper"], n, "uncertainty.upper");
    inst.uncertainty = std::move(iv);
  } else if (type == "discrete") {
    if (!unc.contains("scenarios") || !unc["scenarios"].is_array())
      throw ParseError("uncertainty: discrete needs a \"scenarios\" array");
    DiscreteScenarios ds;
    for (size_t s = 0; s < unc["scenarios"].size(); ++s)
      ds.scenarios.push_back(
          cost_vector(unc["scenarios"][s], n,
                      ("uncertainty.scenarios[" + std::to_string(s) + "]")
                          .c_str()));
    inst.uncertainty = std::move(ds);
  } else {
    throw ParseError("uncertainty: unknown type \"" + type + "\"");
  }
  if (j.contains("meta") && j["meta"].is_object()) inst.meta = j["meta"];
  return inst;
}

std::string dump_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2);
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return instance_from_json(j);
}

json solution_to_json(const Solution& sol) {
  json j;
  j["objective"] = sol.objective;
  j["first_stage"] = sol.first_stage;
  json per = json::object();
  for (const auto& [id, items] : sol.per_scenario) per[id] = items;
  j["per_scenario"] = per;
  j["method"] = sol.method;
  j["stats"] = sol.stats;
  return j;
}

Solution solution_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("solution: expected a JSON object");
  for (const char* key : {"objective", "first_stage", "per_scenario", "method"})
    if (!j.contains(key))
      throw ParseError(std::string("solution: missing field \"") + key + "\"");
  Solution sol;
  if (!j["objective"].is_number_integer())
    throw ParseError("solution: objective must be an integer");
  sol.objective = j["objective"].get<Cost>();
  sol.first_stage = item_set(j["first_stage"], "first_stage");
  if (!j["per_scenario"].is_object())
    throw ParseError("solution: per_scenario must be an object");
  for (const auto& [id, items] : j["per_scenario"].items())
    sol.per_scenario[id] = item_set(items, "per_scenario");
  sol.method = j["method"].get<std::string>();
  if (j.contains("stats") && j["stats"].is_object()) sol.stats = j["stats"];
  return sol;
}

std::string dump_solution(const Solution& sol) {
  return solution_to_json(sol).dump(2);
}

Solution parse_solution(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("solution: ") + e.what());
  }
  return solution_from_json(j);
}

}  // namespace robsel
