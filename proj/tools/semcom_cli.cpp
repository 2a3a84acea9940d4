// Command-line front end over the C API (semcom.h). Subcommands mirror the
// library surface: gen, solve, sweep-time, sweep-power, oracle, importance.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semcom.h"

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void die(const std::string& message) { throw CliError(message); }

void check(semcom_status status) {
  if (status == SEMCOM_OK) return;
  die(std::string(semcom_status_name(status)) + ": " + semcom_last_error());
}

// Owns a C-API string and exposes it as std::string.
std::string take(char* text) {
  std::string out(text ? text : "");
  semcom_string_free(text);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) die("read failed: " + path);
  return std::move(ss).str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) die("write to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) die("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) die("write failed: " + path);
}

// "1,2,5" / "1:10" / "1:10:0.5"; ranges are inclusive of the end point up
// to a half-step of float slack.
std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      out.push_back(std::stod(item));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    const double from = std::stod(item.substr(0, c1));
    const double to = std::stod(
        c2 == std::string::npos ? item.substr(c1 + 1)
                                : item.substr(c1 + 1, c2 - c1 - 1));
    const double step = c2 == std::string::npos ? 1.0 : std::stod(item.substr(c2 + 1));
    if (!(step > 0)) die("list range needs a positive step: " + item);
    for (double v = from; v <= to + step / 2; v += step) out.push_back(v);
  }
  if (out.empty()) die("empty list: " + text);
  return out;
}

// Generator-spec source plus channel/geometry overrides shared by most
// subcommands. SI-unit flags have counterparts in the units the simulator's
// headline numbers are usually quoted in (ms, mW, MHz).
struct SpecFlags {
  std::string spec_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> devices;
  std::optional<double> area_m;
  std::optional<double> tth_s, tth_ms;
  std::optional<double> pmax_w, pmax_mw;
  std::optional<double> bw_hz, bw_mhz;
  std::optional<double> noise_w_hz, noise_mw_hz;
  std::optional<double> ber_th;

  void add_to(CLI::App* cmd, bool with_tth = true) {
    cmd->add_option("--spec", spec_path, "generator spec JSON (default: built-in)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", seed, "generator seed");
    cmd->add_option("--devices", devices, "device count");
    cmd->add_option("--area", area_m, "deployment square side [m]");
    if (with_tth) {
      auto* a = cmd->add_option("--tth", tth_s, "time threshold [s]");
      auto* b = cmd->add_option("--tth-ms", tth_ms, "time threshold [ms]");
      a->excludes(b);
    }
    auto* pw = cmd->add_option("--pmax", pmax_w, "power cap [W]");
    auto* pm = cmd->add_option("--pmax-mw", pmax_mw, "power cap [mW]");
    pw->excludes(pm);
    auto* bh = cmd->add_option("--bw", bw_hz, "total bandwidth [Hz]");
    auto* bm = cmd->add_option("--bw-mhz", bw_mhz, "total bandwidth [MHz]");
    bh->excludes(bm);
    auto* nw = cmd->add_option("--noise", noise_w_hz, "noise PSD [W/Hz]");
    auto* nm = cmd->add_option("--noise-mw-per-hz", noise_mw_hz, "noise PSD [mW/Hz]");
    nw->excludes(nm);
    cmd->add_option("--ber-th", ber_th, "bit-error-rate threshold");
  }

  std::string resolve_json() const {
    std::string base;
    if (!spec_path.empty()) base = read_file(spec_path);

    semcom_spec_overrides ov;
    semcom_spec_overrides_init(&ov);
    if (seed) {
      ov.has_seed = 1;
      ov.seed = *seed;
    }
    if (devices) {
      ov.has_device_count = 1;
      ov.device_count = *devices;
    }
    if (area_m) {
      ov.has_area_side_m = 1;
      ov.area_side_m = *area_m;
    }
    const auto t = tth_ms ? std::optional<double>(*tth_ms * 1e-3) : tth_s;
    if (t) {
      ov.has_time_threshold_s = 1;
      ov.time_threshold_s = *t;
    }
    const auto p = pmax_mw ? std::optional<double>(*pmax_mw * 1e-3) : pmax_w;
    if (p) {
      ov.has_max_power_w = 1;
      ov.max_power_w = *p;
    }
    const auto bw = bw_mhz ? std::optional<double>(*bw_mhz * 1e6) : bw_hz;
    if (bw) {
      ov.has_total_bandwidth_hz = 1;
      ov.total_bandwidth_hz = *bw;
    }
    const auto noise =
        noise_mw_hz ? std::optional<double>(*noise_mw_hz * 1e-3) : noise_w_hz;
    if (noise) {
      ov.has_noise_psd_w_per_hz = 1;
      ov.noise_psd_w_per_hz = *noise;
    }
    if (ber_th) {
      ov.has_ber_threshold = 1;
      ov.ber_threshold = *ber_th;
    }

    char* merged = nullptr;
    check(semcom_spec_apply_overrides(base.empty() ? nullptr : base.c_str(), &ov,
                                      &merged));
    return take(merged);
  }
};

struct SolverFlags {
  semcom_solve_options opts;

  SolverFlags() { semcom_solve_options_init(&opts); }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--eps1", opts.eps1, "outer-loop convergence tolerance");
    cmd->add_option("--eps2", opts.eps2, "bound-search stop width");
    cmd->add_option("--max-iter", opts.max_outer_iterations,
                    "outer iteration cap");
  }
};

using ScenarioHandle = std::unique_ptr<semcom_scenario, void (*)(semcom_scenario*)>;

ScenarioHandle make_scenario(const std::string& scenario_path,
                             const SpecFlags& spec) {
  semcom_scenario* raw = nullptr;
  if (!scenario_path.empty()) {
    const auto text = read_file(scenario_path);
    check(semcom_scenario_from_json(text.c_str(), &raw));
  } else {
    const auto json = spec.resolve_json();
    check(semcom_scenario_generate(json.c_str(), &raw));
  }
  return ScenarioHandle(raw, semcom_scenario_free);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"semantic-aware uplink resource allocation simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", semcom_version());

  // gen
  auto* gen = app.add_subcommand("gen", "materialize a scenario JSON from a spec");
  SpecFlags gen_spec;
  gen_spec.add_to(gen);
  std::string gen_out = "-";
  gen->add_option("--out", gen_out, "output path ('-' for stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "run the optimizer on one scenario");
  SpecFlags solve_spec;
  solve_spec.add_to(solve);
  SolverFlags solve_solver;
  solve_solver.add_to(solve);
  std::string solve_scenario, solve_out = "-", solve_trace, solve_schemes = "proposed";
  solve->add_option("--scenario", solve_scenario, "scenario JSON path")
      ->check(CLI::ExistingFile)
      ->excludes("--spec")
      ->excludes("--seed");
  solve->add_option("--out", solve_out, "results CSV path ('-' for stdout)");
  solve->add_option("--trace", solve_trace, "also write the optimizer trace CSV here");
  solve->add_option("--schemes", solve_schemes,
                    "comma list of proposed,eb,rb,trad or 'all'");
  bool solve_timing = false;
  solve->add_flag("--timing", solve_timing,
                  "fill runtime_ms (output no longer byte-stable)");

  // sweep-time
  auto* st = app.add_subcommand("sweep-time", "sweep the deadline over seeds");
  SpecFlags st_spec;
  st_spec.add_to(st, /*with_tth=*/false);
  SolverFlags st_solver;
  st_solver.add_to(st);
  std::string st_t_s, st_t_ms = "1:10", st_schemes = "all", st_out = "-";
  std::uint32_t st_seeds = 1;
  st->add_option("--tth-list", st_t_s, "deadlines [s], e.g. 0.001,0.004 or a:b:step");
  st->add_option("--tth-list-ms", st_t_ms, "deadlines [ms] (default 1:10)");
  st->add_option("--seeds", st_seeds, "number of consecutive seeds");
  st->add_option("--schemes", st_schemes, "schemes to run");
  st->add_option("--out", st_out, "results CSV path ('-' for stdout)");
  bool st_timing = false;
  st->add_flag("--timing", st_timing, "fill runtime_ms");

  // sweep-power
  auto* sp = app.add_subcommand("sweep-power",
                                "sweep the power cap x deadline grid (proposed)");
  SpecFlags sp_spec;
  sp_spec.add_to(sp, /*with_tth=*/false);
  SolverFlags sp_solver;
  sp_solver.add_to(sp);
  std::string sp_p_w = "0.001,0.01,0.1", sp_p_mw, sp_t_s, sp_t_ms = "1:10", sp_out = "-";
  std::uint32_t sp_seeds = 1;
  sp->add_option("--pmax-list", sp_p_w, "power caps [W] (default 0.001,0.01,0.1)");
  sp->add_option("--pmax-list-mw", sp_p_mw, "power caps [mW]");
  sp->add_option("--tth-list", sp_t_s, "deadlines [s]");
  sp->add_option("--tth-list-ms", sp_t_ms, "deadlines [ms] (default 1:10)");
  sp->add_option("--seeds", sp_seeds, "number of consecutive seeds");
  sp->add_option("--out", sp_out, "results CSV path ('-' for stdout)");
  bool sp_timing = false;
  sp->add_flag("--timing", sp_timing, "fill runtime_ms");

  // oracle
  auto* orc = app.add_subcommand("oracle", "exhaustive optimum of a small instance");
  SpecFlags orc_spec;
  orc_spec.add_to(orc);
  std::string orc_scenario, orc_out = "-";
  orc->add_option("--scenario", orc_scenario, "scenario JSON path")
      ->check(CLI::ExistingFile)
      ->excludes("--spec")
      ->excludes("--seed");
  orc->add_option("--out", orc_out, "output CSV path ('-' for stdout)");

  // importance
  auto* imp = app.add_subcommand("importance", "per-triplet score table");
  SpecFlags imp_spec;
  imp_spec.add_to(imp);
  std::string imp_scenario, imp_out = "-";
  imp->add_option("--scenario", imp_scenario, "scenario JSON path")
      ->check(CLI::ExistingFile)
      ->excludes("--spec")
      ->excludes("--seed");
  imp->add_option("--out", imp_out, "output CSV path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) {
      const auto json = gen_spec.resolve_json();
      semcom_scenario* raw = nullptr;
      check(semcom_scenario_generate(json.c_str(), &raw));
      ScenarioHandle scenario(raw, semcom_scenario_free);
      char* text = nullptr;
      check(semcom_scenario_to_json(scenario.get(), &text));
      write_output(gen_out, take(text));
    } else if (solve->parsed()) {
      const auto scenario = make_scenario(solve_scenario, solve_spec);
      if (!solve_trace.empty()) {
        semcom_report* rep = nullptr;
        check(semcom_solve(scenario.get(), &solve_solver.opts, &rep));
        std::unique_ptr<semcom_report, void (*)(semcom_report*)> report(
            rep, semcom_report_free);
        char* trace = nullptr;
        check(semcom_report_trace_csv(report.get(), &trace));
        write_output(solve_trace, take(trace));
      }
      char* csv = nullptr;
      check(semcom_results_csv(scenario.get(), &solve_solver.opts,
                               solve_schemes.c_str(), solve_timing ? 1 : 0, &csv));
      write_output(solve_out, take(csv));
    } else if (st->parsed()) {
      if (!st_t_s.empty() && st->count("--tth-list-ms") > 0)
        die("give --tth-list or --tth-list-ms, not both");
      std::vector<double> ts;
      if (!st_t_s.empty()) {
        ts = parse_list(st_t_s);
      } else {
        for (const double ms : parse_list(st_t_ms)) ts.push_back(ms * 1e-3);
      }
      const auto json = st_spec.resolve_json();
      char* csv = nullptr;
      check(semcom_sweep_time_csv(json.c_str(), ts.data(), ts.size(),
                                  st_schemes.c_str(),
                                  st_spec.seed.value_or(1), st_seeds,
                                  &st_solver.opts, st_timing ? 1 : 0, &csv));
      write_output(st_out, take(csv));
    } else if (sp->parsed()) {
      if (!sp_t_s.empty() && sp->count("--tth-list-ms") > 0)
        die("give --tth-list or --tth-list-ms, not both");
      if (sp->count("--pmax-list") > 0 && sp->count("--pmax-list-mw") > 0)
        die("give --pmax-list or --pmax-list-mw, not both");
      std::vector<double> ts;
      if (!sp_t_s.empty()) {
        ts = parse_list(sp_t_s);
      } else {
        for (const double ms : parse_list(sp_t_ms)) ts.push_back(ms * 1e-3);
      }
      std::vector<double> ps;
      if (!sp_p_mw.empty()) {
        for (const double mw : parse_list(sp_p_mw)) ps.push_back(mw * 1e-3);
      } else {
        ps = parse_list(sp_p_w);
      }
      const auto json = sp_spec.resolve_json();
      char* csv = nullptr;
      check(semcom_sweep_power_csv(json.c_str(), ps.data(), ps.size(), ts.data(),
                                   ts.size(), sp_spec.seed.value_or(1), sp_seeds,
                                   &sp_solver.opts, sp_timing ? 1 : 0, &csv));
      write_output(sp_out, take(csv));
    } else if (orc->parsed()) {
      const auto scenario = make_scenario(orc_scenario, orc_spec);
      char* csv = nullptr;
      check(semcom_scenario_oracle_csv(scenario.get(), &csv));
      write_output(orc_out, take(csv));
    } else if (imp->parsed()) {
      const auto scenario = make_scenario(imp_scenario, imp_spec);
      char* csv = nullptr;
      check(semcom_scenario_importance_csv(scenario.get(), &csv));
      write_output(imp_out, take(csv));
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
