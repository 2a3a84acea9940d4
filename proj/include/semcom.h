/* C interface to the semantic resource-allocation library.
 *
 * Conventions:
 *   - Functions returning semcom_status put their result in an out
 *     parameter, which is written only on SEMCOM_OK.
 *   - On failure, semcom_last_error() returns a message for the calling
 *     thread, valid until the next failing call on that thread.
 *   - Strings returned through char** out parameters are heap copies the
 *     caller releases with semcom_string_free().
 *   - Handles are opaque; release them with the matching *_free function.
 */

#ifndef SEMCOM_H
#define SEMCOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SEMCOM_API __declspec(dllexport)
#else
#define SEMCOM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semcom_status {
  SEMCOM_OK = 0,
  SEMCOM_ERROR_INVALID_ARGUMENT = 1,
  SEMCOM_ERROR_PARSE = 2,
  SEMCOM_ERROR_IO = 3,
  SEMCOM_ERROR_TOO_LARGE = 4,
  SEMCOM_ERROR_INFEASIBLE = 5,
  SEMCOM_ERROR_INTERNAL = 6
} semcom_status;

typedef struct semcom_scenario semcom_scenario;
typedef struct semcom_report semcom_report;

typedef struct semcom_solve_options {
  double eps1;              /* outer-loop convergence tolerance */
  double eps2;              /* halving-search stop width */
  int max_outer_iterations; /* safety cap */
} semcom_solve_options;

/* Optional overrides applied onto a generator spec before materializing a
 * scenario; each value is consulted only when its has_ flag is nonzero. */
typedef struct semcom_spec_overrides {
  int has_seed;
  uint64_t seed;
  int has_device_count;
  int64_t device_count;
  int has_area_side_m;
  double area_side_m;
  int has_total_bandwidth_hz;
  double total_bandwidth_hz;
  int has_noise_psd_w_per_hz;
  double noise_psd_w_per_hz;
  int has_ber_threshold;
  double ber_threshold;
  int has_time_threshold_s;
  double time_threshold_s;
  int has_max_power_w;
  double max_power_w;
} semcom_spec_overrides;

SEMCOM_API const char* semcom_version(void);
SEMCOM_API const char* semcom_status_name(semcom_status status);
SEMCOM_API const char* semcom_last_error(void);
SEMCOM_API void semcom_string_free(char* s);

SEMCOM_API void semcom_solve_options_init(semcom_solve_options* opts);
SEMCOM_API void semcom_spec_overrides_init(semcom_spec_overrides* ov);

/* Generator specs are JSON documents; an empty or NULL string means the
 * built-in defaults. */
SEMCOM_API semcom_status semcom_default_spec_json(char** out_json);
SEMCOM_API semcom_status semcom_spec_apply_overrides(
    const char* spec_json, const semcom_spec_overrides* ov, char** out_json);

SEMCOM_API semcom_status semcom_scenario_generate(const char* spec_json,
                                                  semcom_scenario** out);
SEMCOM_API semcom_status semcom_scenario_from_json(const char* scenario_json,
                                                   semcom_scenario** out);
SEMCOM_API semcom_status semcom_scenario_to_json(const semcom_scenario* s,
                                                 char** out_json);
SEMCOM_API int64_t semcom_scenario_device_count(const semcom_scenario* s);
SEMCOM_API semcom_status semcom_scenario_importance_csv(const semcom_scenario* s,
                                                        char** out_csv);
SEMCOM_API semcom_status semcom_scenario_oracle_csv(const semcom_scenario* s,
                                                    char** out_csv);
SEMCOM_API void semcom_scenario_free(semcom_scenario* s);

/* opts may be NULL for defaults. */
SEMCOM_API semcom_status semcom_solve(const semcom_scenario* s,
                                      const semcom_solve_options* opts,
                                      semcom_report** out);
SEMCOM_API double semcom_report_objective(const semcom_report* r);
SEMCOM_API double semcom_report_se_percent(const semcom_report* r);
SEMCOM_API double semcom_report_exact_lhs(const semcom_report* r);
SEMCOM_API int semcom_report_iterations(const semcom_report* r);
SEMCOM_API int semcom_report_certified(const semcom_report* r);
SEMCOM_API semcom_status semcom_report_trace_csv(const semcom_report* r,
                                                 char** out_csv);
SEMCOM_API void semcom_report_free(semcom_report* r);

/* Result table for one scenario under the given schemes (comma separated,
 * or "all"). with_timing populates runtime_ms, trading away byte-stable
 * output. */
SEMCOM_API semcom_status semcom_results_csv(const semcom_scenario* s,
                                            const semcom_solve_options* opts,
                                            const char* schemes, int with_timing,
                                            char** out_csv);

/* Sweeps regenerate the scenario per seed from the spec; see the docs for
 * the row layout. */
SEMCOM_API semcom_status semcom_sweep_time_csv(
    const char* spec_json, const double* t_th_s, size_t t_count,
    const char* schemes, uint64_t seed_base, uint32_t seed_count,
    const semcom_solve_options* opts, int with_timing, char** out_csv);
SEMCOM_API semcom_status semcom_sweep_power_csv(
    const char* spec_json, const double* p_max_w, size_t p_count,
    const double* t_th_s, size_t t_count, uint64_t seed_base,
    uint32_t seed_count, const semcom_solve_options* opts, int with_timing,
    char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* SEMCOM_H */
