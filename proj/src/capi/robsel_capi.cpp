#include "robsel/robsel.h"

#include <cstring>
#include <new>
#include <string>

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/instance.hpp"
#include "core/json_io.hpp"
#include "core/oracle.hpp"
#include "core/recoverable_interval.hpp"
#include "core/two_stage_discrete.hpp"
#include "core/two_stage_interval.hpp"
#include "core/verify.hpp"

using nlohmann::json;

struct robsel_instance {
  robsel::Instance value;
};

struct robsel_solution {
  robsel::Solution value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps any exception thrown by the wrapped body to a status code.
template <typename Fn>
robsel_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const robsel::ParseError& e) {
    set_error(e.what());
    return ROBSEL_ERROR_PARSE;
  } catch (const robsel::InvalidInstanceError& e) {
    set_error(e.what());
    return ROBSEL_ERROR_INVALID_INSTANCE;
  } catch (const robsel::MethodMismatchError& e) {
    set_error(e.what());
    return ROBSEL_ERROR_METHOD_MISMATCH;
  } catch (const robsel::RoundingFailedError& e) {
    set_error(e.what());
    return ROBSEL_ERROR_ROUNDING_FAILED;
  } catch (const robsel::CapExceededError& e) {
    set_error(e.what());
    return ROBSEL_ERROR_CAP_EXCEEDED;
  } catch (const nlohmann::json::exception& e) {
    set_error(e.what());
    return ROBSEL_ERROR_PARSE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return ROBSEL_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ROBSEL_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return ROBSEL_ERROR_INTERNAL;
  }
}

robsel_status require(bool ok, const char* what) {
  if (ok) return ROBSEL_OK;
  set_error(what);
  return ROBSEL_ERROR_INVALID_ARGUMENT;
}

robsel::Instance generate_from_spec(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw robsel::ParseError("generator spec: expected an object with \"kind\"");
  const std::string kind = spec["kind"].get<std::string>();
  if (kind == "random") {
    std::optional<int> k;
    if (spec.contains("k") && !spec["k"].is_null()) k = spec["k"].get<int>();
    const std::string unc = spec.value("uncertainty", "interval");
    if (unc != "interval" && unc != "discrete")
      throw robsel::ParseError("generator spec: unknown uncertainty kind");
    return robsel::gen_random(
        spec.value("n", 0), spec.value("p", 0), k,
        unc == "interval" ? robsel::UncertaintyKind::interval
                          : robsel::UncertaintyKind::discrete,
        spec.value("scenarios", 2),
        spec.value("cost_bound", static_cast<robsel::Cost>(100)),
        spec.value("seed", static_cast<std::uint64_t>(1)));
  }
  if (kind == "rec_partition")
    return robsel::gen_rec_partition(
        spec.at("a").get<std::vector<std::int64_t>>(), spec.value("k", 1));
  if (kind == "ts_partition")
    return robsel::gen_ts_partition(
        spec.at("a").get<std::vector<std::int64_t>>());
  if (kind == "three_sat")
    return robsel::gen_three_sat(
        spec.at("clauses").get<std::vector<std::array<int, 3>>>(),
        spec.at("num_vars").get<int>());
  if (kind == "set_cover")
    return robsel::gen_set_cover(
        spec.at("universe_size").get<int>(),
        spec.at("sets").get<std::vector<std::vector<int>>>());
  throw robsel::ParseError("generator spec: unknown kind \"" + kind + "\"");
}

robsel::Solution solve_dispatch(const robsel::Instance& inst, const json& opts) {
  std::string method = opts.value("method", "auto");
  const auto seed = opts.value("seed", static_cast<std::uint64_t>(1));
  const int retries = opts.value("retries", 10);
  const bool trace = opts.value("trace", false);

  robsel::OracleLimits limits;
  limits.max_items = opts.value("oracle_max_items", limits.max_items);
  limits.max_subsets = opts.value("oracle_max_subsets", limits.max_subsets);

  if (method == "auto") {
    if (inst.is_interval())
      method = inst.k ? "rec-interval" : "ts-interval";
    else if (!inst.k)
      method = "ts-discrete";
    else
      method = "oracle";  // NP-hard combination; only enumeration applies
  }
  if (method == "rec-interval")
    return robsel::solve_recoverable_interval(inst, {.trace = trace});
  if (method == "ts-interval") return robsel::solve_two_stage_interval(inst);
  if (method == "ts-discrete") {
    robsel::RoundingParams params;
    params.seed = seed;
    params.retries = retries;
    params.t_hat = opts.value("t_hat", 0);
    params.per_round_stats = opts.value("per_round_stats", false);
    if (opts.value("lstar_mode", "exact") == "binsearch")
      params.lstar_mode = robsel::LStarMode::binary_search;
    return robsel::solve_two_stage_discrete(inst, params);
  }
  if (method == "oracle") {
    return inst.k ? robsel::exact_recoverable(inst, limits)
                  : robsel::exact_two_stage(inst, limits);
  }
  throw robsel::MethodMismatchError("unknown method \"" + method + "\"");
}

}  // namespace

extern "C" {

const char* robsel_version(void) { return "0.1.0"; }

const char* robsel_status_name(robsel_status status) {
  switch (status) {
    case ROBSEL_OK: return "ok";
    case ROBSEL_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case ROBSEL_ERROR_PARSE: return "parse error";
    case ROBSEL_ERROR_INVALID_INSTANCE: return "invalid instance";
    case ROBSEL_ERROR_METHOD_MISMATCH: return "method mismatch";
    case ROBSEL_ERROR_ROUNDING_FAILED: return "rounding failed";
    case ROBSEL_ERROR_CAP_EXCEEDED: return "enumeration cap exceeded";
    case ROBSEL_ERROR_VERIFY_FAILED: return "verification failed";
    case ROBSEL_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* robsel_last_error(void) { return g_last_error.c_str(); }

void robsel_string_free(char* s) { delete[] s; }

robsel_status robsel_instance_parse(const char* json_text,
                                    robsel_instance** out) {
  if (auto st = require(json_text && out, "null argument")) return st;
  return guarded([&] {
    auto inst = robsel::parse_instance(json_text);
    *out = new robsel_instance{std::move(inst)};
    return ROBSEL_OK;
  });
}

robsel_status robsel_instance_dump(const robsel_instance* inst,
                                   char** json_out) {
  if (auto st = require(inst && json_out, "null argument")) return st;
  return guarded([&] {
    *json_out = dup_string(robsel::dump_instance(inst->value));
    return *json_out ? ROBSEL_OK : ROBSEL_ERROR_INTERNAL;
  });
}

robsel_status robsel_instance_validate(const robsel_instance* inst,
                                       char** report_out) {
  if (auto st = require(inst && report_out, "null argument")) return st;
  return guarded([&] {
    const json report = robsel::validate_instance(inst->value);
    *report_out = dup_string(report.dump());
    return *report_out ? ROBSEL_OK : ROBSEL_ERROR_INTERNAL;
  });
}

int robsel_instance_items(const robsel_instance* inst) {
  return inst ? inst->value.n() : -1;
}

int robsel_instance_scenarios(const robsel_instance* inst) {
  return inst ? inst->value.scenario_count() : -1;
}

void robsel_instance_free(robsel_instance* inst) { delete inst; }

robsel_status robsel_generate(const char* spec_json, robsel_instance** out) {
  if (auto st = require(spec_json && out, "null argument")) return st;
  return guarded([&] {
    json spec;
    try {
      spec = json::parse(spec_json);
    } catch (const json::exception& e) {
      throw robsel::ParseError(std::string("generator spec: ") + e.what());
    }
    *out = new robsel_instance{generate_from_spec(spec)};
    return ROBSEL_OK;
  });
}

robsel_status robsel_solve(const robsel_instance* inst,
                           const char* options_json, robsel_solution** out) {
  if (auto st = require(inst && out, "null argument")) return st;
  return guarded([&] {
    json opts = json::object();
    if (options_json && *options_json) {
      try {
        opts = json::parse(options_json);
      } catch (const json::exception& e) {
        throw robsel::ParseError(std::string("options: ") + e.what());
      }
    }
    *out = new robsel_solution{solve_dispatch(inst->value, opts)};
    return ROBSEL_OK;
  });
}

robsel_status robsel_solution_parse(const char* json_text,
                                    robsel_solution** out) {
  if (auto st = require(json_text && out, "null argument")) return st;
  return guarded([&] {
    *out = new robsel_solution{robsel::parse_solution(json_text)};
    return ROBSEL_OK;
  });
}

robsel_status robsel_solution_dump(const robsel_solution* sol,
                                   char** json_out) {
  if (auto st = require(sol && json_out, "null argument")) return st;
  return guarded([&] {
    *json_out = dup_string(robsel::dump_solution(sol->value));
    return *json_out ? ROBSEL_OK : ROBSEL_ERROR_INTERNAL;
  });
}

void robsel_solution_free(robsel_solution* sol) { delete sol; }

robsel_status robsel_verify(const robsel_instance* inst,
                            const robsel_solution* sol, char** report_out) {
  if (auto st = require(inst && sol, "null argument")) return st;
  return guarded([&] {
    const auto violations = robsel::verify_solution(inst->value, sol->value);
    if (report_out) {
      *report_out = dup_string(json(violations).dump());
      if (!*report_out) return ROBSEL_ERROR_INTERNAL;
    }
    if (violations.empty()) return ROBSEL_OK;
    set_error("verification failed: " + violations.front());
    return ROBSEL_ERROR_VERIFY_FAILED;
  });
}

}  // extern "C"
