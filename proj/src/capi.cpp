#include "semcom.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semcom/error.hpp"
#include "semcom/experiment.hpp"
#include "semcom/generate.hpp"
#include "semcom/optimizer.hpp"
#include "semcom/scenario_io.hpp"
#include "semcom/types.hpp"

struct semcom_scenario {
  semcom::Scenario data;
};

struct semcom_report {
  semcom::optimizer::SolveReport data;
};

namespace {

thread_local std::string g_last_error;

semcom_status to_status(semcom::errc code) {
  switch (code) {
    case semcom::errc::invalid_argument: return SEMCOM_ERROR_INVALID_ARGUMENT;
    case semcom::errc::parse_error: return SEMCOM_ERROR_PARSE;
    case semcom::errc::io_error: return SEMCOM_ERROR_IO;
    case semcom::errc::instance_too_large: return SEMCOM_ERROR_TOO_LARGE;
    case semcom::errc::infeasible: return SEMCOM_ERROR_INFEASIBLE;
    case semcom::errc::internal: return SEMCOM_ERROR_INTERNAL;
  }
  return SEMCOM_ERROR_INTERNAL;
}

// Runs the body, translating exceptions into status codes + last-error.
template <typename Fn>
semcom_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SEMCOM_OK;
  } catch (const semcom::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SEMCOM_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SEMCOM_ERROR_INTERNAL;
  }
}

semcom_status require(bool ok, const char* what) {
  if (ok) return SEMCOM_OK;
  g_last_error = what;
  return SEMCOM_ERROR_INVALID_ARGUMENT;
}

char* copy_out(const std::string& text) {
  char* mem = static_cast<char*>(std::malloc(text.size() + 1));
  if (!mem) throw std::bad_alloc();
  std::memcpy(mem, text.c_str(), text.size() + 1);
  return mem;
}

semcom::ScenarioSpec spec_from_optional_json(const char* spec_json) {
  if (!spec_json || !*spec_json) return semcom::default_spec();
  return semcom::spec_from_json(spec_json);
}

semcom::optimizer::Config config_from(const semcom_solve_options* opts) {
  semcom::optimizer::Config cfg;
  if (opts) {
    cfg.eps1 = opts->eps1;
    cfg.eps2 = opts->eps2;
    cfg.max_outer_iterations = opts->max_outer_iterations;
  }
  return cfg;
}

}  // namespace

extern "C" {

const char* semcom_version(void) { return "0.1.0"; }

const char* semcom_status_name(semcom_status status) {
  switch (status) {
    case SEMCOM_OK: return "ok";
    case SEMCOM_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case SEMCOM_ERROR_PARSE: return "parse_error";
    case SEMCOM_ERROR_IO: return "io_error";
    case SEMCOM_ERROR_TOO_LARGE: return "instance_too_large";
    case SEMCOM_ERROR_INFEASIBLE: return "infeasible";
    case SEMCOM_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* semcom_last_error(void) { return g_last_error.c_str(); }

void semcom_string_free(char* s) { std::free(s); }

void semcom_solve_options_init(semcom_solve_options* opts) {
  if (!opts) return;
  const semcom::optimizer::Config cfg;
  opts->eps1 = cfg.eps1;
  opts->eps2 = cfg.eps2;
  opts->max_outer_iterations = cfg.max_outer_iterations;
}

void semcom_spec_overrides_init(semcom_spec_overrides* ov) {
  if (!ov) return;
  std::memset(ov, 0, sizeof *ov);
}

semcom_status semcom_default_spec_json(char** out_json) {
  if (const auto st = require(out_json, "out_json is null")) return st;
  return guarded([&] { *out_json = copy_out(semcom::spec_to_json(semcom::default_spec())); });
}

semcom_status semcom_spec_apply_overrides(const char* spec_json,
                                          const semcom_spec_overrides* ov,
                                          char** out_json) {
  if (const auto st = require(out_json, "out_json is null")) return st;
  return guarded([&] {
    semcom::ScenarioSpec spec = spec_from_optional_json(spec_json);
    if (ov) {
      if (ov->has_seed) spec.seed = ov->seed;
      if (ov->has_device_count) {
        if (!spec.devices.empty())
          semcom::fail(semcom::errc::invalid_argument,
                       "device_count cannot override an explicit device list");
        spec.device_count = ov->device_count;
      }
      if (ov->has_area_side_m) spec.area_side_m = ov->area_side_m;
      if (ov->has_total_bandwidth_hz)
        spec.channel.total_bandwidth_hz = ov->total_bandwidth_hz;
      if (ov->has_noise_psd_w_per_hz)
        spec.channel.noise_psd_w_per_hz = ov->noise_psd_w_per_hz;
      if (ov->has_ber_threshold) spec.channel.ber_threshold = ov->ber_threshold;
      if (ov->has_time_threshold_s)
        spec.channel.time_threshold_s = ov->time_threshold_s;
      if (ov->has_max_power_w) spec.channel.max_power_w = ov->max_power_w;
    }
    *out_json = copy_out(semcom::spec_to_json(spec));
  });
}

semcom_status semcom_scenario_generate(const char* spec_json,
                                       semcom_scenario** out) {
  if (const auto st = require(out, "out is null")) return st;
  return guarded([&] {
    auto spec = spec_from_optional_json(spec_json);
    auto handle = std::make_unique<semcom_scenario>();
    handle->data = semcom::generate_scenario(spec);
    *out = handle.release();
  });
}

semcom_status semcom_scenario_from_json(const char* scenario_json,
                                        semcom_scenario** out) {
  if (const auto st = require(out, "out is null")) return st;
  if (const auto st = require(scenario_json, "scenario_json is null")) return st;
  return guarded([&] {
    auto handle = std::make_unique<semcom_scenario>();
    handle->data = semcom::scenario_from_json(scenario_json);
    *out = handle.release();
  });
}

semcom_status semcom_scenario_to_json(const semcom_scenario* s, char** out_json) {
  if (const auto st = require(s, "scenario is null")) return st;
  if (const auto st = require(out_json, "out_json is null")) return st;
  return guarded([&] { *out_json = copy_out(semcom::scenario_to_json(s->data)); });
}

int64_t semcom_scenario_device_count(const semcom_scenario* s) {
  return s ? static_cast<int64_t>(s->data.device_count()) : -1;
}

semcom_status semcom_scenario_importance_csv(const semcom_scenario* s,
                                             char** out_csv) {
  if (const auto st = require(s, "scenario is null")) return st;
  if (const auto st = require(out_csv, "out_csv is null")) return st;
  return guarded(
      [&] { *out_csv = copy_out(semcom::experiment::importance_csv(s->data)); });
}

semcom_status semcom_scenario_oracle_csv(const semcom_scenario* s, char** out_csv) {
  if (const auto st = require(s, "scenario is null")) return st;
  if (const auto st = require(out_csv, "out_csv is null")) return st;
  return guarded(
      [&] { *out_csv = copy_out(semcom::experiment::oracle_csv(s->data)); });
}

void semcom_scenario_free(semcom_scenario* s) { delete s; }

semcom_status semcom_solve(const semcom_scenario* s,
                           const semcom_solve_options* opts,
                           semcom_report** out) {
  if (const auto st = require(s, "scenario is null")) return st;
  if (const auto st = require(out, "out is null")) return st;
  return guarded([&] {
    auto handle = std::make_unique<semcom_report>();
    handle->data = semcom::optimizer::run(s->data, config_from(opts));
    *out = handle.release();
  });
}

double semcom_report_objective(const semcom_report* r) {
  return r ? r->data.objective : -1;
}

double semcom_report_se_percent(const semcom_report* r) {
  return r ? r->data.se_percent : -1;
}

double semcom_report_exact_lhs(const semcom_report* r) {
  return r ? r->data.exact_lhs : -1;
}

int semcom_report_iterations(const semcom_report* r) {
  return r ? r->data.iterations : -1;
}

int semcom_report_certified(const semcom_report* r) {
  return r ? (r->data.certified ? 1 : 0) : 0;
}

semcom_status semcom_report_trace_csv(const semcom_report* r, char** out_csv) {
  if (const auto st = require(r, "report is null")) return st;
  if (const auto st = require(out_csv, "out_csv is null")) return st;
  return guarded(
      [&] { *out_csv = copy_out(semcom::experiment::trace_csv(r->data)); });
}

void semcom_report_free(semcom_report* r) { delete r; }

semcom_status semcom_results_csv(const semcom_scenario* s,
                                 const semcom_solve_options* opts,
                                 const char* schemes, int with_timing,
                                 char** out_csv) {
  if (const auto st = require(s, "scenario is null")) return st;
  if (const auto st = require(out_csv, "out_csv is null")) return st;
  return guarded([&] {
    const auto names =
        semcom::experiment::parse_schemes(schemes && *schemes ? schemes : "all");
    semcom::experiment::RunOptions opt{config_from(opts), with_timing != 0};
    std::vector<semcom::experiment::ResultRow> rows;
    rows.reserve(names.size());
    for (const auto& name : names)
      rows.push_back(semcom::experiment::run_scheme(s->data, name, opt));
    *out_csv = copy_out(semcom::experiment::results_csv(std::move(rows)));
  });
}

semcom_status semcom_sweep_time_csv(const char* spec_json, const double* t_th_s,
                                    size_t t_count, const char* schemes,
                                    uint64_t seed_base, uint32_t seed_count,
                                    const semcom_solve_options* opts,
                                    int with_timing, char** out_csv) {
  if (const auto st = require(out_csv, "out_csv is null")) return st;
  if (const auto st = require(t_th_s || t_count == 0, "t_th_s is null")) return st;
  return guarded([&] {
    semcom::experiment::SweepOptions opt;
    opt.solver = config_from(opts);
    opt.schemes =
        semcom::experiment::parse_schemes(schemes && *schemes ? schemes : "all");
    opt.seed_base = seed_base;
    opt.seed_count = seed_count;
    opt.timing = with_timing != 0;
    const auto rows = semcom::experiment::sweep_time_threshold(
        spec_from_optional_json(spec_json), std::span(t_th_s, t_count), opt);
    *out_csv = copy_out(semcom::experiment::results_csv(rows));
  });
}

semcom_status semcom_sweep_power_csv(const char* spec_json, const double* p_max_w,
                                     size_t p_count, const double* t_th_s,
                                     size_t t_count, uint64_t seed_base,
                                     uint32_t seed_count,
                                     const semcom_solve_options* opts,
                                     int with_timing, char** out_csv) {
  if (const auto st = require(out_csv, "out_csv is null")) return st;
  if (const auto st = require(p_max_w || p_count == 0, "p_max_w is null")) return st;
  if (const auto st = require(t_th_s || t_count == 0, "t_th_s is null")) return st;
  return guarded([&] {
    semcom::experiment::SweepOptions opt;
    opt.solver = config_from(opts);
    opt.seed_base = seed_base;
    opt.seed_count = seed_count;
    opt.timing = with_timing != 0;
    const auto rows = semcom::experiment::sweep_power(
        spec_from_optional_json(spec_json), std::span(p_max_w, p_count),
        std::span(t_th_s, t_count), opt);
    *out_csv = copy_out(semcom::experiment::results_csv(rows));
  });
}

}  // extern "C"
