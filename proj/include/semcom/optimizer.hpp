#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semcom/types.hpp"

namespace semcom::optimizer {

struct Config {
  double eps1 = 1e-6;  // outer loop stalls when the objective moves less
  double eps2 = 1e-5;  // halving search stops below this half-width
  int max_outer_iterations = 200;
  std::optional<Selection> initial;  // default: eta all-ones, alpha all-zero
};

void validate(const Config& cfg);

// One solved subproblem inside the halving search. `delta_b` is the
// half-width at solve time (it halves right after, and the bound moves by
// the halved amount).
struct BoundStep {
  int outer_iter = 0;
  double bound = 0;
  double delta_b = 0;
  double relaxed_lhs = 0;
  double exact_lhs = 0;
  bool accepted = false;  // iterate met the exact budget
  double objective = 0;   // of (alpha, eta) at this step's fixed eta
};

struct BoundSearchResult {
  std::vector<std::uint8_t> alpha;
  double bound = 1;            // bound of the returned iterate
  bool found_feasible = false; // false means alpha is the all-zero fallback
  bool scenario_infeasible = false;  // even all-zero breaks the exact budget
  std::vector<BoundStep> steps;
};

struct SolveReport {
  Selection selection;
  Allocation allocation;
  std::vector<double> objective_per_iteration;  // after each eta step
  std::vector<BoundStep> trace;
  int iterations = 0;
  double objective = 0;
  double se_percent = 0;  // 0 when the scenario carries no semantic mass
  double exact_lhs = 0;
  bool certified = false;  // exact budget and power caps verified
  bool scenario_infeasible = false;
  bool hit_iteration_cap = false;
};

// Worst-case gap between the relaxed and exact budget forms:
// sum over all triplets of ln2 * S / (T * B). The halving search brackets
// its bound inside [1, 1 + delta_max].
double delta_max(const Scenario& s);

// Devices that cannot reach the SNR target within the power cap; their
// alpha is pinned to zero everywhere downstream.
std::vector<std::size_t> power_prefilter(const Scenario& s);

// Device-selection step: maximize sum over selected devices of their fixed
// semantic efficiency subject to the relaxed budget at `bound`. Reduces to a
// knapsack with value E(eta_k), weight ln2 * W_k / (T * B) and capacity
// bound minus the selection-independent 1/C terms. When those constant
// terms alone overshoot the bound the result is all-zero and
// *relaxed_infeasible (if given) is set.
std::vector<std::uint8_t> solve_user_selection(
    const std::vector<std::vector<std::uint8_t>>& eta, double bound,
    const Scenario& s, bool* relaxed_infeasible = nullptr);

// Halving search over the relaxed bound in [1, 1 + delta_max]: start at the
// midpoint, solve the device-selection knapsack, then move up when the
// iterate already satisfies the exact budget (room to admit more) and down
// otherwise, halving the step until it drops below eps2. Returns the last
// iterate that satisfied the exact budget; among accepted iterates that is
// also the best, since accepted steps only ever raise the bound.
BoundSearchResult bound_search(const std::vector<std::vector<std::uint8_t>>& eta,
                               const Scenario& s, const Config& cfg,
                               int outer_iter = 0);

// Triplet-selection step at fixed alpha: one knapsack over every (device,
// triplet) pair with value alpha_k * I * R and the pair's exact-budget
// weight, capacity 1. Unselected devices' pairs carry zero value, so the
// tie-break drops them and frees their budget share.
std::vector<std::vector<std::uint8_t>> solve_subgraph_selection(
    const std::vector<std::uint8_t>& alpha, const Scenario& s);

// Closed-form power and band fraction for a final selection. Verifies the
// power caps and the band budget; a violation means the caller handed in an
// uncertified selection and raises errc::internal.
Allocation recover_allocation(const Selection& sel, const Scenario& s);

// Alternates bound_search and solve_subgraph_selection from the default
// start until the objective moves at most eps1 or the iteration cap hits.
// A device-selection candidate only replaces the incumbent alpha when it
// does not lower the objective at the current eta, which together with the
// exact triplet step makes the reported objective sequence non-decreasing.
SolveReport run(const Scenario& s, const Config& cfg = {});

}  // namespace semcom::optimizer
