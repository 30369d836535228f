#ifndef ROBSEL_H
#define ROBSEL_H

/*
 * C interface to the robsel solvers (robust selection under cost
 * uncertainty: recoverable and two-stage models, interval and discrete
 * scenario sets).
 *
 * Rich data crosses the boundary as JSON strings; handles are opaque.
 * Functions return ROBSEL_OK on success. On failure, robsel_last_error()
 * returns a message for the calling thread (valid until the next library
 * call on that thread). Strings returned through char** are heap allocated
 * and must be released with robsel_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum robsel_status {
  ROBSEL_OK = 0,
  ROBSEL_ERROR_INVALID_ARGUMENT = 1,
  ROBSEL_ERROR_PARSE = 2,
  ROBSEL_ERROR_INVALID_INSTANCE = 3,
  ROBSEL_ERROR_METHOD_MISMATCH = 4,
  ROBSEL_ERROR_ROUNDING_FAILED = 5,
  ROBSEL_ERROR_CAP_EXCEEDED = 6,
  ROBSEL_ERROR_VERIFY_FAILED = 7,
  ROBSEL_ERROR_INTERNAL = 8
} robsel_status;

typedef struct robsel_instance robsel_instance;
typedef struct robsel_solution robsel_solution;

const char *robsel_version(void);
const char *robsel_status_name(robsel_status status);
const char *robsel_last_error(void);
void robsel_string_free(char *s);

/*
 * Instance format:
 *   {"n":int, "p":int, "k":int|null, "first_stage":[int...],
 *    "uncertainty": {"type":"discrete","scenarios":[[int...]...]}
 *                 | {"type":"interval","lower":[int...],"upper":[int...]},
 *    "meta":{...}}
 * k null means the two-stage model, an integer selects the recoverable one.
 */
robsel_status robsel_instance_parse(const char *json, robsel_instance **out);
robsel_status robsel_instance_dump(const robsel_instance *inst, char **json_out);
/* report_out receives a JSON array of violated invariants (empty = valid). */
robsel_status robsel_instance_validate(const robsel_instance *inst,
                                       char **report_out);
int robsel_instance_items(const robsel_instance *inst);     /* n, or -1 */
int robsel_instance_scenarios(const robsel_instance *inst); /* K, or -1 */
void robsel_instance_free(robsel_instance *inst);

/*
 * Generator spec, one of:
 *   {"kind":"random","n":8,"p":3,"k":1,"uncertainty":"interval"|"discrete",
 *    "scenarios":2,"cost_bound":9,"seed":1}     (k optional)
 *   {"kind":"rec_partition","a":[1,2,3,2],"k":1}
 *   {"kind":"ts_partition","a":[1,2,3,2]}
 *   {"kind":"three_sat","num_vars":3,"clauses":[[1,-2,-3],[-1,2,3],[1,2,3]]}
 *   {"kind":"set_cover","universe_size":7,"sets":[[2,4,3],[1],[3,5,7],...]}
 */
robsel_status robsel_generate(const char *spec_json, robsel_instance **out);

/*
 * options_json may be NULL for defaults:
 *   {"method":"auto"|"rec-interval"|"ts-interval"|"ts-discrete"|"oracle",
 *    "seed":1, "retries":10, "trace":false, "t_hat":0,
 *    "per_round_stats":false, "lstar_mode":"exact"|"binsearch",
 *    "oracle_max_items":20, "oracle_max_subsets":50000000}
 * "auto" picks the exact polynomial solver for interval instances, the
 * randomized rounding solver for discrete two-stage instances, and the
 * enumeration oracle for small discrete recoverable instances.
 */
robsel_status robsel_solve(const robsel_instance *inst,
                           const char *options_json, robsel_solution **out);

/*
 * Solution format:
 *   {"objective":int, "first_stage":[int...],
 *    "per_scenario":{"<id>":[int...]...}, "method":string, "stats":{...}}
 * Scenario ids are "0".."K-1" for discrete instances and "upper" for the
 * single interval worst case.
 */
robsel_status robsel_solution_parse(const char *json, robsel_solution **out);
robsel_status robsel_solution_dump(const robsel_solution *sol, char **json_out);
void robsel_solution_free(robsel_solution *sol);

/*
 * Recomputes feasibility and objective of a recorded solution. Returns
 * ROBSEL_OK when consistent; ROBSEL_ERROR_VERIFY_FAILED otherwise, with
 * report_out (optional) naming each violated constraint as a JSON array.
 */
robsel_status robsel_verify(const robsel_instance *inst,
                            const robsel_solution *sol, char **report_out);

#ifdef __cplusplus
}
#endif

#endif /* ROBSEL_H */
