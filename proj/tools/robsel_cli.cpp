// Command-line front end for the robsel shared library: generate instances,
// solve them, verify solution records, and run benchmark sweeps. Talks to the
// solver exclusively through the C API.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "robsel/robsel.h"

using nlohmann::json;

namespace {

class Fatal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& msg) { throw Fatal(msg); }

void check(robsel_status st, const std::string& what) {
  if (st != ROBSEL_OK)
    fail(what + ": " + robsel_status_name(st) + " (" + robsel_last_error() + ")");
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  robsel_string_free(s);
  return out;
}

struct InstanceHandle {
  robsel_instance* ptr = nullptr;
  InstanceHandle() = default;
  InstanceHandle(const InstanceHandle&) = delete;
  InstanceHandle& operator=(const InstanceHandle&) = delete;
  InstanceHandle(InstanceHandle&& other) noexcept : ptr(other.ptr) {
    other.ptr = nullptr;
  }
  InstanceHandle& operator=(InstanceHandle&& other) noexcept {
    if (this != &other) {
      robsel_instance_free(ptr);
      ptr = other.ptr;
      other.ptr = nullptr;
    }
    return *this;
  }
  ~InstanceHandle() { robsel_instance_free(ptr); }
};

struct SolutionHandle {
  robsel_solution* ptr = nullptr;
  SolutionHandle() = default;
  SolutionHandle(const SolutionHandle&) = delete;
  SolutionHandle& operator=(const SolutionHandle&) = delete;
  SolutionHandle(SolutionHandle&& other) noexcept : ptr(other.ptr) {
    other.ptr = nullptr;
  }
  SolutionHandle& operator=(SolutionHandle&& other) noexcept {
    if (this != &other) {
      robsel_solution_free(ptr);
      ptr = other.ptr;
      other.ptr = nullptr;
    }
    return *this;
  }
  ~SolutionHandle() { robsel_solution_free(ptr); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  if (out.empty()) fail("expected a comma-separated integer list, got \"" + text + "\"");
  return out;
}

// Clause lines in the usual DIMACS shape: 'c' comments, an optional
// 'p cnf <vars> <clauses>' header, clauses as 0-terminated literal runs.
json parse_cnf(const std::string& path, int* num_vars_out) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path);
  int num_vars = 0;
  json clauses = json::array();
  std::vector<int> current;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::stringstream ss(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      int nc = 0;
      ss >> p >> cnf >> num_vars >> nc;
      continue;
    }
    int lit;
    while (ss >> lit) {
      if (lit == 0) {
        if (current.size() != 3)
          fail("three-sat expects exactly 3 literals per clause");
        clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
        num_vars = std::max({num_vars, lit, -lit});
      }
    }
  }
  if (!current.empty()) {
    if (current.size() != 3)
      fail("three-sat expects exactly 3 literals per clause");
    clauses.push_back(current);
  }
  if (clauses.empty()) fail("no clauses found in " + path);
  *num_vars_out = num_vars;
  return clauses;
}

InstanceHandle generate(const json& spec) {
  InstanceHandle h;
  check(robsel_generate(spec.dump().c_str(), &h.ptr), "generate");
  return h;
}

InstanceHandle load_instance(const std::string& path) {
  InstanceHandle h;
  check(robsel_instance_parse(read_file(path).c_str(), &h.ptr),
        "parse instance " + path);
  return h;
}

json solve_to_json(const robsel_instance* inst, const json& options,
                   double* wall_ms = nullptr) {
  SolutionHandle sol;
  const auto start = std::chrono::steady_clock::now();
  check(robsel_solve(inst, options.dump().c_str(), &sol.ptr), "solve");
  const auto stop = std::chrono::steady_clock::now();
  if (wall_ms)
    *wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  char* text = nullptr;
  check(robsel_solution_dump(sol.ptr, &text), "dump solution");
  return json::parse(take_string(text));
}

void emit(const std::string& out_path, const json& payload) {
  if (out_path.empty())
    std::cout << payload.dump(2) << std::endl;
  else
    write_file(out_path, payload.dump(2));
}

// ---- gen ----

void setup_gen(CLI::App& app) {
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);

  struct RandomArgs {
    int n = 8, p = 3, scenarios = 2;
    std::int64_t k = -1, cost_bound = 100;
    std::uint64_t seed = 1;
    bool interval = false, discrete = false;
    std::string out;
  };
  auto rnd = std::make_shared<RandomArgs>();
  auto* random = gen->add_subcommand("random", "uniform random costs");
  random->add_option("--n", rnd->n, "item count");
  random->add_option("--p", rnd->p, "selection size");
  random->add_option("--k", rnd->k, "recovery parameter (omit for two-stage)");
  random->add_flag("--interval", rnd->interval, "interval uncertainty");
  random->add_flag("--discrete", rnd->discrete, "discrete scenario list");
  random->add_option("--scenarios", rnd->scenarios, "scenario count (discrete)");
  random->add_option("--cost-bound", rnd->cost_bound, "costs drawn from [0, bound]");
  random->add_option("--seed", rnd->seed, "rng seed");
  random->add_option("-o,--out", rnd->out, "output file (default stdout)");
  random->callback([rnd] {
    if (rnd->interval && rnd->discrete) fail("pick one of --interval/--discrete");
    json spec = {{"kind", "random"},
                 {"n", rnd->n},
                 {"p", rnd->p},
                 {"uncertainty", rnd->discrete ? "discrete" : "interval"},
                 {"scenarios", rnd->scenarios},
                 {"cost_bound", rnd->cost_bound},
                 {"seed", rnd->seed}};
    if (rnd->k >= 0) spec["k"] = rnd->k;
    auto inst = generate(spec);
    char* text = nullptr;
    check(robsel_instance_dump(inst.ptr, &text), "dump");
    emit(rnd->out, json::parse(take_string(text)));
  });

  struct ListArgs {
    std::string a, out;
    int k = 1;
  };
  auto rp = std::make_shared<ListArgs>();
  auto* recp = gen->add_subcommand("rec-partition",
                                   "balanced-partition reduction, recoverable");
  recp->add_option("--a", rp->a, "comma-separated positive integers")->required();
  recp->add_option("--k", rp->k, "recovery parameter (>= 1)");
  recp->add_option("-o,--out", rp->out, "output file (default stdout)");
  recp->callback([rp] {
    json spec = {{"kind", "rec_partition"}, {"a", parse_int_list(rp->a)}, {"k", rp->k}};
    auto inst = generate(spec);
    char* text = nullptr;
    check(robsel_instance_dump(inst.ptr, &text), "dump");
    emit(rp->out, json::parse(take_string(text)));
  });

  auto tp = std::make_shared<ListArgs>();
  auto* tsp = gen->add_subcommand("ts-partition",
                                  "balanced-partition reduction, two-stage");
  tsp->add_option("--a", tp->a, "comma-separated positive integers")->required();
  tsp->add_option("-o,--out", tp->out, "output file (default stdout)");
  tsp->callback([tp] {
    json spec = {{"kind", "ts_partition"}, {"a", parse_int_list(tp->a)}};
    auto inst = generate(spec);
    char* text = nullptr;
    check(robsel_instance_dump(inst.ptr, &text), "dump");
    emit(tp->out, json::parse(take_string(text)));
  });

  struct CnfArgs {
    std::string cnf, out;
  };
  auto sat = std::make_shared<CnfArgs>();
  auto* threesat = gen->add_subcommand("three-sat", "3-SAT reduction, recoverable");
  threesat->add_option("--cnf", sat->cnf, "CNF file (3 literals per clause)")->required();
  threesat->add_option("-o,--out", sat->out, "output file (default stdout)");
  threesat->callback([sat] {
    int num_vars = 0;
    json clauses = parse_cnf(sat->cnf, &num_vars);
    json spec = {{"kind", "three_sat"}, {"num_vars", num_vars}, {"clauses", clauses}};
    auto inst = generate(spec);
    char* text = nullptr;
    check(robsel_instance_dump(inst.ptr, &text), "dump");
    emit(sat->out, json::parse(take_string(text)));
  });

  struct CoverArgs {
    int universe = 0;
    std::string sets, out;
  };
  auto cov = std::make_shared<CoverArgs>();
  auto* cover = gen->add_subcommand("set-cover", "set-cover reduction, two-stage");
  cover->add_option("--universe", cov->universe, "universe size (elements 1..U)")->required();
  cover->add_option("--sets", cov->sets,
                    "semicolon-separated sets of comma-separated elements")->required();
  cover->add_option("-o,--out", cov->out, "output file (default stdout)");
  cover->callback([cov] {
    json sets = json::array();
    std::stringstream ss(cov->sets);
    std::string group;
    while (std::getline(ss, group, ';'))
      if (!group.empty()) sets.push_back(parse_int_list(group));
    json spec = {{"kind", "set_cover"},
                 {"universe_size", cov->universe},
                 {"sets", sets}};
    auto inst = generate(spec);
    char* text = nullptr;
    check(robsel_instance_dump(inst.ptr, &text), "dump");
    emit(cov->out, json::parse(take_string(text)));
  });
}

// ---- solve ----

void setup_solve(CLI::App& app) {
  struct SolveArgs {
    std::string instance, method = "auto", out, lstar_mode = "exact";
    std::uint64_t seed = 1;
    int retries = 10;
    bool trace = false;
  };
  auto args = std::make_shared<SolveArgs>();
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("instance", args->instance, "instance JSON file")->required();
  solve->add_option("--method", args->method,
                    "auto|rec-interval|ts-interval|ts-discrete|oracle");
  solve->add_option("--seed", args->seed, "seed for randomized solving");
  solve->add_option("--retries", args->retries, "rounding attempts before giving up");
  solve->add_flag("--trace", args->trace, "print solver trace to stderr");
  solve->add_option("--lstar-mode", args->lstar_mode,
                    "exact|binsearch budget search (ts-discrete)");
  solve->add_option("-o,--out", args->out, "solution file (default stdout)");
  solve->callback([args] {
    auto inst = load_instance(args->instance);
    json options = {{"method", args->method},
                    {"seed", args->seed},
                    {"retries", args->retries},
                    {"trace", args->trace},
                    {"lstar_mode", args->lstar_mode}};
    json sol = solve_to_json(inst.ptr, options);
    if (args->trace && sol["stats"].contains("trace"))
      for (const auto& line : sol["stats"]["trace"])
        std::cerr << line.get<std::string>() << "\n";
    emit(args->out, sol);
  });
}

// ---- verify ----

void setup_verify(CLI::App& app) {
  struct VerifyArgs {
    std::string instance, solution;
  };
  auto args = std::make_shared<VerifyArgs>();
  auto* verify = app.add_subcommand("verify", "check a solution record");
  verify->add_option("instance", args->instance, "instance JSON file")->required();
  verify->add_option("solution", args->solution, "solution JSON file")->required();
  verify->callback([args] {
    auto inst = load_instance(args->instance);
    SolutionHandle sol;
    check(robsel_solution_parse(read_file(args->solution).c_str(), &sol.ptr),
          "parse solution " + args->solution);
    char* report = nullptr;
    const robsel_status st = robsel_verify(inst.ptr, sol.ptr, &report);
    const json violations = json::parse(take_string(report));
    if (st == ROBSEL_OK) {
      std::cout << "ok\n";
      return;
    }
    if (st != ROBSEL_ERROR_VERIFY_FAILED)
      fail(std::string("verify: ") + robsel_status_name(st) + " (" +
           robsel_last_error() + ")");
    for (const auto& v : violations) std::cerr << v.get<std::string>() << "\n";
    fail("solution record is inconsistent with the instance");
  });
}

// ---- bench ----

struct CsvWriter {
  std::ostringstream rows;

  void header() {
    rows << "n,p,k,K,method,objective,oracle_or_bound,ratio,wall_time_ms,failures\n";
  }
  void row(int n, int p, std::optional<int> k, int K, const std::string& method,
           std::optional<double> objective, std::optional<double> reference,
           std::optional<double> ratio, double wall_ms, int failures) {
    rows << n << ',' << p << ',';
    if (k) rows << *k;
    rows << ',' << K << ',' << method << ',';
    if (objective) rows << *objective;
    rows << ',';
    if (reference) rows << *reference;
    rows << ',';
    if (ratio) rows << *ratio;
    rows << ',' << wall_ms << ',' << failures << "\n";
  }
};

json instance_json(const robsel_instance* inst) {
  char* text = nullptr;
  check(robsel_instance_dump(inst, &text), "dump instance");
  return json::parse(take_string(text));
}

void bench_small(CsvWriter& csv, std::uint64_t seed) {
  // Exact interval solvers against the enumeration oracle; every ratio
  // should print as 1.
  int variant = 0;
  for (int n : {6, 8, 10}) {
    for (int rep = 0; rep < 3; ++rep) {
      const int p = 1 + static_cast<int>((seed + rep + n) % (n - 1));
      for (bool recoverable : {true, false}) {
        json spec = {{"kind", "random"},
                     {"n", n},
                     {"p", p},
                     {"uncertainty", "interval"},
                     {"cost_bound", 50},
                     {"seed", seed + 100 * variant + rep}};
        std::optional<int> k;
        if (recoverable) {
          k = static_cast<int>((seed + rep) % (p + 1));
          spec["k"] = *k;
        }
        auto inst = generate(spec);
        double wall = 0.0;
        json sol = solve_to_json(
            inst.ptr, {{"method", recoverable ? "rec-interval" : "ts-interval"}},
            &wall);
        json oracle = solve_to_json(inst.ptr, {{"method", "oracle"}});
        const double obj = sol["objective"].get<double>();
        const double ref = oracle["objective"].get<double>();
        csv.row(n, p, k, 1, sol["method"].get<std::string>(), obj, ref,
                ref > 0 ? obj / ref : 1.0, wall, 0);
      }
      ++variant;
    }
  }
  // Randomized rounding on small discrete two-stage instances.
  for (int rep = 0; rep < 3; ++rep) {
    const int n = 6, p = 2, K = 3;
    json spec = {{"kind", "random"}, {"n", n},           {"p", p},
                 {"uncertainty", "discrete"}, {"scenarios", K}, {"cost_bound", 9},
                 {"seed", seed + rep}};
    auto inst = generate(spec);
    double wall = 0.0;
    json sol = solve_to_json(inst.ptr,
                             {{"method", "ts-discrete"}, {"seed", seed + rep}},
                             &wall);
    json oracle = solve_to_json(inst.ptr, {{"method", "oracle"}});
    const double obj = sol["objective"].get<double>();
    const double ref = oracle["objective"].get<double>();
    csv.row(n, p, std::nullopt, K, "ts-discrete", obj, ref,
            ref > 0 ? obj / ref : 1.0, wall,
            sol["stats"].value("failures", 0));
  }
  // Tiny discrete recoverable instances, oracle only.
  for (int rep = 0; rep < 2; ++rep) {
    const int n = 6, p = 2, K = 2;
    json spec = {{"kind", "random"},   {"n", n},           {"p", p},
                 {"k", 1},             {"uncertainty", "discrete"},
                 {"scenarios", K},     {"cost_bound", 9},  {"seed", seed + rep}};
    auto inst = generate(spec);
    double wall = 0.0;
    json sol = solve_to_json(inst.ptr, {{"method", "oracle"}}, &wall);
    const double obj = sol["objective"].get<double>();
    csv.row(n, p, 1, K, "oracle", obj, obj, 1.0, wall, 0);
  }
}

void bench_ts_sweep(CsvWriter& csv, const std::string& instance_path, int runs,
                    std::uint64_t seed) {
  InstanceHandle inst;
  if (instance_path.empty()) {
    // Three items, two scenarios; the pure first-stage pick of item 0 is the
    // known optimum of value 1.
    const json i2 = {
        {"n", 3},
        {"p", 1},
        {"k", nullptr},
        {"first_stage", {1, 5, 5}},
        {"uncertainty", {{"type", "discrete"}, {"scenarios", {{9, 2, 9}, {9, 9, 3}}}}},
        {"meta", json::object()}};
    check(robsel_instance_parse(i2.dump().c_str(), &inst.ptr), "parse i2");
  } else {
    inst = load_instance(instance_path);
  }
  const json meta = instance_json(inst.ptr);
  const int n = meta["n"].get<int>();
  const int p = meta["p"].get<int>();
  const int K = robsel_instance_scenarios(inst.ptr);
  for (int run = 0; run < runs; ++run) {
    SolutionHandle sol;
    const json options = {{"method", "ts-discrete"},
                          {"seed", seed + run},
                          {"retries", 1}};
    const auto start = std::chrono::steady_clock::now();
    const robsel_status st = robsel_solve(inst.ptr, options.dump().c_str(), &sol.ptr);
    const auto stop = std::chrono::steady_clock::now();
    const double wall =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (st == ROBSEL_OK) {
      char* text = nullptr;
      check(robsel_solution_dump(sol.ptr, &text), "dump");
      const json s = json::parse(take_string(text));
      const double lstar = s["stats"].value("l_star", 0.0);
      const double obj = s["objective"].get<double>();
      csv.row(n, p, std::nullopt, K, "ts-discrete", obj, lstar,
              lstar > 0 ? obj / lstar : 1.0, wall, 0);
    } else if (st == ROBSEL_ERROR_ROUNDING_FAILED) {
      csv.row(n, p, std::nullopt, K, "ts-discrete", std::nullopt, std::nullopt,
              std::nullopt, wall, 1);
    } else {
      fail(std::string("bench solve: ") + robsel_status_name(st));
    }
  }
}

void bench_ladder(CsvWriter& csv, int reps) {
  // Anti-correlated costs keep the first-stage and worst-case selections
  // disjoint, so the multiplier loop performs its full p-k exchanges.
  for (int n : {250, 500, 1000, 2000}) {
    const int p = n / 2;
    const int k = p - 10;
    json inst_json = {{"n", n}, {"p", p}, {"k", k}};
    std::vector<std::int64_t> first(static_cast<size_t>(n));
    std::vector<std::int64_t> upper(static_cast<size_t>(n));
    std::vector<std::int64_t> lower(static_cast<size_t>(n), 0);
    for (int e = 0; e < n; ++e) {
      first[static_cast<size_t>(e)] = e + 1;
      upper[static_cast<size_t>(e)] = n - e;
    }
    inst_json["first_stage"] = first;
    inst_json["uncertainty"] = {{"type", "interval"}, {"lower", lower}, {"upper", upper}};
    InstanceHandle inst;
    check(robsel_instance_parse(inst_json.dump().c_str(), &inst.ptr), "ladder parse");
    double best_wall = 0.0;
    double objective = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
      double wall = 0.0;
      json sol = solve_to_json(inst.ptr, {{"method", "rec-interval"}}, &wall);
      objective = sol["objective"].get<double>();
      best_wall = (rep == 0) ? wall : std::min(best_wall, wall);
    }
    csv.row(n, p, k, 1, "rec-interval", objective, std::nullopt, std::nullopt,
            best_wall, 0);
  }
}

void setup_bench(CLI::App& app) {
  struct BenchArgs {
    std::string suite = "small", out, instance;
    std::uint64_t seed = 1;
    int runs = 100;
    int reps = 3;
  };
  auto args = std::make_shared<BenchArgs>();
  auto* bench = app.add_subcommand("bench", "benchmark sweeps, CSV output");
  bench->add_option("--suite", args->suite, "small|ts-sweep|ladder|all");
  bench->add_option("--seed", args->seed, "base seed");
  bench->add_option("--runs", args->runs, "runs for the ts-discrete sweep");
  bench->add_option("--reps", args->reps, "timing repetitions for the ladder");
  bench->add_option("--instance", args->instance, "instance for the ts sweep");
  bench->add_option("-o,--out", args->out, "CSV file (default stdout)");
  bench->callback([args] {
    CsvWriter csv;
    csv.header();
    if (args->suite == "small" || args->suite == "all")
      bench_small(csv, args->seed);
    if (args->suite == "ts-sweep" || args->suite == "all")
      bench_ts_sweep(csv, args->instance, args->runs, args->seed);
    if (args->suite == "ladder" || args->suite == "all")
      bench_ladder(csv, args->reps);
    if (args->suite != "small" && args->suite != "ts-sweep" &&
        args->suite != "ladder" && args->suite != "all")
      fail("unknown suite \"" + args->suite + "\"");
    if (args->out.empty())
      std::cout << csv.rows.str();
    else
      write_file(args->out, csv.rows.str());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust selection solvers"};
  app.require_subcommand(1);
  setup_gen(app);
  setup_solve(app);
  setup_verify(app);
  setup_bench(app);
  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const Fatal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
