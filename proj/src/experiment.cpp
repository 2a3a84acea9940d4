#include "semcom/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "semcom/baselines.hpp"
#include "semcom/error.hpp"
#include "semcom/io.hpp"
#include "semcom/model.hpp"
#include "semcom/numfmt.hpp"
#include "semcom/oracle.hpp"
#include "semcom/rng.hpp"
#include "semcom/semantics.hpp"

namespace semcom::experiment {

namespace {

void append_csv_text(std::string& out, const std::string& field) {
  const bool quote = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!quote) {
    out += field;
    return;
  }
  out.push_back('"');
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(d).count();
}

ResultRow zero_row(const std::string& scheme, std::uint64_t seed,
                   std::size_t device_count, double t, double p) {
  ResultRow row;
  row.scheme = scheme;
  row.seed = seed;
  row.device_count = device_count;
  row.t_th_s = t;
  row.p_max_w = p;
  return row;
}

std::size_t spec_device_count(const ScenarioSpec& spec) {
  return spec.devices.empty() ? static_cast<std::size_t>(spec.device_count)
                              : spec.devices.size();
}

// Salt so the random-band draw is not the same raw stream the scenario was
// generated from (band shares must not mirror device placement draws).
constexpr std::uint64_t kRbSeedSalt = 0x72625f73656d63ull;

}  // namespace

const std::vector<std::string>& all_schemes() {
  static const std::vector<std::string> names = {"proposed", "eb", "rb", "trad"};
  return names;
}

std::vector<std::string> parse_schemes(const std::string& comma_separated) {
  if (comma_separated == "all") return all_schemes();
  std::vector<std::string> out;
  std::string cur;
  const auto flush = [&] {
    if (cur.empty()) return;
    if (std::find(all_schemes().begin(), all_schemes().end(), cur) ==
        all_schemes().end())
      fail(errc::invalid_argument,
           "unknown scheme '" + cur + "' (known: proposed, eb, rb, trad, all)");
    if (std::find(out.begin(), out.end(), cur) == out.end()) out.push_back(cur);
    cur.clear();
  };
  for (const char c : comma_separated) {
    if (c == ',')
      flush();
    else if (c != ' ')
      cur.push_back(c);
  }
  flush();
  if (out.empty()) fail(errc::invalid_argument, "no schemes given");
  return out;
}

ResultRow run_scheme(const Scenario& s, const std::string& scheme,
                     const RunOptions& opt) {
  ResultRow row;
  row.scheme = scheme;
  row.seed = s.seed;
  row.device_count = s.device_count();
  row.t_th_s = s.channel.time_threshold_s;
  row.p_max_w = s.channel.max_power_w;

  const auto start = std::chrono::steady_clock::now();
  if (scheme == "proposed") {
    const auto report = optimizer::run(s, opt.solver);
    row.objective = report.objective;
    row.se_percent = report.se_percent;
    row.exact_lhs = report.exact_lhs;
    row.iterations = report.iterations;
  } else {
    baselines::Result res;
    if (scheme == "eb")
      res = baselines::eb_semc(s);
    else if (scheme == "rb")
      res = baselines::rb_semc(s, s.seed ^ kRbSeedSalt);
    else if (scheme == "trad")
      res = baselines::trad_semc(s);
    else
      fail(errc::invalid_argument, "unknown scheme '" + scheme + "'");
    row.objective = res.objective;
    row.se_percent = res.se_percent;
    row.exact_lhs = model::exact_constraint_lhs(res.selection, s);
    row.iterations = 0;
  }
  if (opt.timing) row.runtime_ms = elapsed_ms(start);
  return row;
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     return std::tie(a.scheme, a.t_th_s, a.p_max_w, a.seed) <
                            std::tie(b.scheme, b.t_th_s, b.p_max_w, b.seed);
                   });
}

std::string results_csv(std::vector<ResultRow> rows) {
  sort_rows(rows);
  std::string out;
  out += "# rng=";
  out += Rng::kAlgorithm;
  out += "\n";
  out += "scheme,seed,K,T_th_s,P_max_w,objective,se_percent,exact_lhs,iterations,runtime_ms\n";
  for (const auto& r : rows) {
    append_csv_text(out, r.scheme);
    out.push_back(',');
    out += std::to_string(r.seed);
    out.push_back(',');
    out += std::to_string(r.device_count);
    out.push_back(',');
    append_double(out, r.t_th_s);
    out.push_back(',');
    append_double(out, r.p_max_w);
    out.push_back(',');
    append_double(out, r.objective);
    out.push_back(',');
    append_double(out, r.se_percent);
    out.push_back(',');
    append_double(out, r.exact_lhs);
    out.push_back(',');
    out += std::to_string(r.iterations);
    out.push_back(',');
    append_double(out, r.runtime_ms);
    out.push_back('\n');
  }
  return out;
}

std::vector<ResultRow> sweep_time_threshold(const ScenarioSpec& spec,
                                            std::span<const double> t_th_s,
                                            const SweepOptions& opt) {
  if (t_th_s.empty()) fail(errc::invalid_argument, "sweep: empty deadline list");
  if (opt.seed_count == 0) fail(errc::invalid_argument, "sweep: zero seeds");
  RunOptions run_opt{opt.solver, opt.timing};
  std::vector<ResultRow> rows;
  for (std::uint32_t i = 0; i < opt.seed_count; ++i) {
    ScenarioSpec cur = spec;
    cur.seed = opt.seed_base + i;
    for (const double t : t_th_s) {
      if (!(t > 0)) {
        for (const auto& scheme : opt.schemes)
          rows.push_back(zero_row(scheme, cur.seed, spec_device_count(cur), t,
                                  cur.channel.max_power_w));
        continue;
      }
      cur.channel.time_threshold_s = t;
      const Scenario s = generate_scenario(cur);
      for (const auto& scheme : opt.schemes)
        rows.push_back(run_scheme(s, scheme, run_opt));
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> sweep_power(const ScenarioSpec& spec,
                                   std::span<const double> p_max_w,
                                   std::span<const double> t_th_s,
                                   const SweepOptions& opt) {
  if (p_max_w.empty()) fail(errc::invalid_argument, "sweep: empty power list");
  if (t_th_s.empty()) fail(errc::invalid_argument, "sweep: empty deadline list");
  if (opt.seed_count == 0) fail(errc::invalid_argument, "sweep: zero seeds");
  RunOptions run_opt{opt.solver, opt.timing};
  std::vector<ResultRow> rows;
  for (std::uint32_t i = 0; i < opt.seed_count; ++i) {
    ScenarioSpec cur = spec;
    cur.seed = opt.seed_base + i;
    for (const double p : p_max_w) {
      cur.channel.max_power_w = p;
      for (const double t : t_th_s) {
        if (!(t > 0)) {
          rows.push_back(zero_row("proposed", cur.seed, spec_device_count(cur), t, p));
          continue;
        }
        cur.channel.time_threshold_s = t;
        const Scenario s = generate_scenario(cur);
        rows.push_back(run_scheme(s, "proposed", run_opt));
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::string trace_csv(const optimizer::SolveReport& report) {
  std::string out = "outer_iter,bound,delta_b,relaxed_lhs,exact_lhs,accepted,objective\n";
  for (const auto& step : report.trace) {
    out += std::to_string(step.outer_iter);
    out.push_back(',');
    append_double(out, step.bound);
    out.push_back(',');
    append_double(out, step.delta_b);
    out.push_back(',');
    append_double(out, step.relaxed_lhs);
    out.push_back(',');
    append_double(out, step.exact_lhs);
    out.push_back(',');
    out += step.accepted ? "1" : "0";
    out.push_back(',');
    append_double(out, step.objective);
    out.push_back('\n');
  }
  return out;
}

void emit_trace(const optimizer::SolveReport& report, const std::string& path) {
  write_text_file(path, trace_csv(report));
}

std::string importance_csv(const Scenario& s) {
  std::string out = "device_id,triplet_id,text,importance,recovery\n";
  for (std::size_t k = 0; k < s.devices.size(); ++k) {
    const auto& triplets = s.devices[k].triplets;
    for (std::size_t n = 0; n < triplets.size(); ++n) {
      out += std::to_string(k);
      out.push_back(',');
      out += std::to_string(n);
      out.push_back(',');
      append_csv_text(out, triplets[n].text);
      out.push_back(',');
      append_double(out, triplets[n].importance);
      out.push_back(',');
      append_double(out, triplets[n].recovery);
      out.push_back('\n');
    }
  }
  return out;
}

std::string oracle_csv(const Scenario& s) {
  const auto res = oracle::brute_force(s);
  std::string out = "objective,feasible_count,alpha,eta\n";
  append_double(out, res.objective);
  out.push_back(',');
  out += std::to_string(res.feasible_count);
  out.push_back(',');
  for (const auto a : res.selection.alpha) out.push_back(a ? '1' : '0');
  out.push_back(',');
  for (std::size_t k = 0; k < res.selection.eta.size(); ++k) {
    if (k) out.push_back(';');
    for (const auto e : res.selection.eta[k]) out.push_back(e ? '1' : '0');
  }
  out.push_back('\n');
  return out;
}

}  // namespace semcom::experiment
