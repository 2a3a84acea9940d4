#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semcom/generate.hpp"
#include "semcom/optimizer.hpp"
#include "semcom/types.hpp"

namespace semcom::experiment {

// One CSV row of the results table. runtime_ms stays 0 unless timing was
// requested, keeping default outputs byte-stable run to run.
struct ResultRow {
  std::string scheme;
  std::uint64_t seed = 0;
  std::size_t device_count = 0;
  double t_th_s = 0;
  double p_max_w = 0;
  double objective = 0;
  double se_percent = 0;
  double exact_lhs = 0;
  int iterations = 0;
  double runtime_ms = 0;
};

struct RunOptions {
  optimizer::Config solver;
  bool timing = false;
};

// Known scheme labels: proposed, eb, rb, trad.
const std::vector<std::string>& all_schemes();
std::vector<std::string> parse_schemes(const std::string& comma_separated);

// Solves one scenario under one scheme. The random-band baseline draws its
// split from the scenario seed.
ResultRow run_scheme(const Scenario& s, const std::string& scheme,
                     const RunOptions& opt);

// Deterministic row order regardless of how rows were produced.
void sort_rows(std::vector<ResultRow>& rows);

// Sorts and renders; the header names the generator algorithm so outputs
// are attributable to an exact random sequence.
std::string results_csv(std::vector<ResultRow> rows);

struct SweepOptions {
  optimizer::Config solver;
  std::vector<std::string> schemes = all_schemes();
  std::uint64_t seed_base = 1;
  std::uint32_t seed_count = 1;
  bool timing = false;
};

// For each seed and deadline, regenerates the scenario (same seed keeps
// placement, fading and triplets fixed while the deadline moves) and runs
// every requested scheme. A non-positive deadline short-circuits to zero
// rows since nothing can be transmitted in no time.
std::vector<ResultRow> sweep_time_threshold(const ScenarioSpec& spec,
                                            std::span<const double> t_th_s,
                                            const SweepOptions& opt);

// Proposed scheme only, over the power-cap x deadline grid.
std::vector<ResultRow> sweep_power(const ScenarioSpec& spec,
                                   std::span<const double> p_max_w,
                                   std::span<const double> t_th_s,
                                   const SweepOptions& opt);

std::string trace_csv(const optimizer::SolveReport& report);
void emit_trace(const optimizer::SolveReport& report, const std::string& path);

// Per-triplet score dump: device_id, triplet_id, text, importance, recovery.
std::string importance_csv(const Scenario& s);

// Ground-truth dump for small instances: objective, feasible_count, and the
// optimal selection as bit-strings.
std::string oracle_csv(const Scenario& s);

}  // namespace semcom::experiment
