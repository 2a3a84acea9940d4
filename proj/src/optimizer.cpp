#include "semcom/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "semcom/error.hpp"
#include "semcom/knapsack.hpp"
#include "semcom/model.hpp"
#include "semcom/semantics.hpp"

namespace semcom::optimizer {

namespace {

double c_thresh(const Scenario& s) {
  return model::c_threshold(s.ber_model(), s.channel.ber_threshold);
}

double time_bandwidth(const Scenario& s) {
  return s.channel.time_threshold_s * s.channel.total_bandwidth_hz;
}

double eta_payload_bits(const std::vector<std::vector<std::uint8_t>>& eta,
                        const Scenario& s, std::size_t k) {
  const auto& triplets = s.devices[k].triplets;
  if (eta[k].size() != triplets.size())
    fail(errc::invalid_argument, "eta shape does not match the scenario");
  double bits = 0;
  for (std::size_t n = 0; n < triplets.size(); ++n)
    if (eta[k][n]) bits += triplets[n].size_bits;
  return bits;
}

}  // namespace

void validate(const Config& cfg) {
  if (!(std::isfinite(cfg.eps1) && cfg.eps1 > 0))
    fail(errc::invalid_argument, "config: eps1 must be finite and > 0");
  if (!(std::isfinite(cfg.eps2) && cfg.eps2 > 0))
    fail(errc::invalid_argument, "config: eps2 must be finite and > 0");
  if (cfg.max_outer_iterations <= 0)
    fail(errc::invalid_argument, "config: max_outer_iterations must be > 0");
}

double delta_max(const Scenario& s) {
  const double tb = time_bandwidth(s);
  double bits = 0;
  for (const auto& d : s.devices)
    for (const auto& t : d.triplets) bits += t.size_bits;
  return std::numbers::ln2 * bits / tb;
}

std::vector<std::size_t> power_prefilter(const Scenario& s) {
  const double c = c_thresh(s);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < s.devices.size(); ++k)
    if (!model::power_feasible(s.devices[k].link, c, s.channel.max_power_w))
      out.push_back(k);
  return out;
}

std::vector<std::uint8_t> solve_user_selection(
    const std::vector<std::vector<std::uint8_t>>& eta, double bound,
    const Scenario& s, bool* relaxed_infeasible) {
  const std::size_t k_count = s.devices.size();
  if (eta.size() != k_count)
    fail(errc::invalid_argument, "eta shape does not match the scenario");
  const double c = c_thresh(s);
  const double tb = time_bandwidth(s);
  if (relaxed_infeasible) *relaxed_infeasible = false;

  knapsack::Instance inst;
  inst.values.reserve(k_count);
  inst.weights.reserve(k_count);
  double constant = 0;  // the alpha-independent 1/C share of the budget
  for (std::size_t k = 0; k < k_count; ++k) {
    const double bits = eta_payload_bits(eta, s, k);
    inst.values.push_back(
        semantics::device_semantic_efficiency(eta[k], s.devices[k].triplets));
    inst.weights.push_back(std::numbers::ln2 * bits / tb);
    constant += std::numbers::ln2 * bits / (tb * c);
  }
  inst.capacity = bound - constant;
  if (inst.capacity < 0) {
    // even the all-zero selection overshoots the relaxed budget; report it
    // rather than erroring so the halving search can keep probing
    if (relaxed_infeasible) *relaxed_infeasible = true;
    return std::vector<std::uint8_t>(k_count, 0);
  }
  inst.forced_zero = power_prefilter(s);
  return knapsack::solve_exact(inst).take;
}

BoundSearchResult bound_search(const std::vector<std::vector<std::uint8_t>>& eta,
                               const Scenario& s, const Config& cfg,
                               int outer_iter) {
  validate(cfg);
  validate(s);

  BoundSearchResult res;
  double delta_b = delta_max(s) / 2;
  double bound = 1 + delta_b;
  double best_objective = -1;

  while (delta_b >= cfg.eps2) {
    const auto alpha = solve_user_selection(eta, bound, s);
    Selection sel;
    sel.alpha = alpha;
    sel.eta = eta;
    BoundStep step;
    step.outer_iter = outer_iter;
    step.bound = bound;
    step.delta_b = delta_b;
    step.relaxed_lhs = model::relaxed_constraint_lhs(sel, s);
    step.exact_lhs = model::exact_constraint_lhs(sel, s);
    step.objective = semantics::total_objective(sel, s);
    step.accepted = knapsack::fits(step.exact_lhs, 1.0);
    if (step.accepted && step.objective >= best_objective) {
      best_objective = step.objective;
      res.alpha = alpha;
      res.bound = bound;
      res.found_feasible = true;
    }
    res.steps.push_back(step);
    delta_b /= 2;
    bound += step.accepted ? delta_b : -delta_b;
  }

  if (!res.found_feasible) {
    res.alpha.assign(s.devices.size(), 0);
    res.bound = 1;
    Selection sel;
    sel.alpha = res.alpha;
    sel.eta = eta;
    if (!knapsack::fits(model::exact_constraint_lhs(sel, s), 1.0))
      res.scenario_infeasible = true;
  }
  return res;
}

std::vector<std::vector<std::uint8_t>> solve_subgraph_selection(
    const std::vector<std::uint8_t>& alpha, const Scenario& s) {
  const std::size_t k_count = s.devices.size();
  if (alpha.size() != k_count)
    fail(errc::invalid_argument, "alpha shape does not match the scenario");
  const double c = c_thresh(s);
  const double tb = time_bandwidth(s);
  const double selected_denom = tb * (std::log1p(c) / std::numbers::ln2);

  knapsack::Instance inst;
  std::vector<std::pair<std::size_t, std::size_t>> flat;  // variable -> (k, n)
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto& triplets = s.devices[k].triplets;
    for (std::size_t n = 0; n < triplets.size(); ++n) {
      const auto& t = triplets[n];
      inst.values.push_back(alpha[k] ? t.importance * t.recovery : 0.0);
      inst.weights.push_back(alpha[k]
                                 ? t.size_bits / selected_denom
                                 : std::numbers::ln2 * t.size_bits / (tb * c));
      flat.emplace_back(k, n);
    }
  }
  inst.capacity = 1;
  const auto sol = knapsack::solve_exact(inst);

  std::vector<std::vector<std::uint8_t>> eta(k_count);
  for (std::size_t k = 0; k < k_count; ++k)
    eta[k].assign(s.devices[k].triplets.size(), 0);
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (sol.take[i]) eta[flat[i].first][flat[i].second] = 1;
  return eta;
}

Allocation recover_allocation(const Selection& sel, const Scenario& s) {
  validate_shape(sel, s);
  const double c = c_thresh(s);
  Allocation alloc;
  alloc.power_w.reserve(s.devices.size());
  alloc.band_fraction.reserve(s.devices.size());
  double band_total = 0;
  for (std::size_t k = 0; k < s.devices.size(); ++k) {
    const bool on = sel.alpha[k] != 0;
    const double power = model::required_power(on, c, s.devices[k].link);
    if (on && !model::power_feasible(s.devices[k].link, c, s.channel.max_power_w))
      fail(errc::internal,
           "allocation: selected device " + std::to_string(k) +
               " exceeds the power cap (uncertified selection)");
    // idle devices hold no band; the closed form's idle limit term is only
    // budget accounting, not a real grant
    const double band =
        on ? model::closed_form_bandwidth(true, model::selected_bits(s, sel, k),
                                          s.channel, c)
           : 0.0;
    band_total += band;
    alloc.power_w.push_back(power);
    alloc.band_fraction.push_back(band);
  }
  if (band_total > 1 + 1e-9)
    fail(errc::internal,
         "allocation: band fractions sum beyond the budget (uncertified selection)");
  return alloc;
}

SolveReport run(const Scenario& s, const Config& cfg) {
  validate(cfg);
  validate(s);

  SolveReport report;
  Selection cur;
  if (cfg.initial) {
    validate_shape(*cfg.initial, s);
    cur = *cfg.initial;
  } else {
    cur = Selection::zeros(s);
    for (auto& row : cur.eta)
      for (auto& e : row) e = 1;
    // The all-idle start only charges the vanishing-limit terms, but an
    // absurdly large total payload can overflow the band even so. Shed the
    // cheapest bits (lowest I*R per bit) until the start is feasible.
    if (!knapsack::fits(model::exact_constraint_lhs(cur, s), 1.0)) {
      struct Item {
        double density;
        std::size_t k, n;
      };
      std::vector<Item> items;
      for (std::size_t k = 0; k < s.devices.size(); ++k)
        for (std::size_t n = 0; n < s.devices[k].triplets.size(); ++n) {
          const auto& t = s.devices[k].triplets[n];
          const double density =
              t.size_bits > 0
                  ? t.importance * t.recovery / t.size_bits
                  : std::numeric_limits<double>::infinity();
          items.push_back({density, k, n});
        }
      std::stable_sort(items.begin(), items.end(),
                       [](const Item& a, const Item& b) {
                         return a.density < b.density;
                       });
      for (const auto& item : items) {
        if (knapsack::fits(model::exact_constraint_lhs(cur, s), 1.0)) break;
        cur.eta[item.k][item.n] = 0;
      }
    }
  }

  double prev_objective = 0;
  bool have_prev = false;
  for (int iter = 0; iter < cfg.max_outer_iterations; ++iter) {
    auto search = bound_search(cur.eta, s, cfg, iter);
    for (const auto& step : search.steps) report.trace.push_back(step);
    if (search.scenario_infeasible) report.scenario_infeasible = true;

    // keep the incumbent alpha when the fresh candidate scores worse at the
    // current eta; both satisfy the exact budget, and the eta step below
    // only improves on whichever is kept
    Selection cand;
    cand.alpha = search.alpha;
    cand.eta = cur.eta;
    if (semantics::total_objective(cand, s) >=
        semantics::total_objective(cur, s))
      cur.alpha = std::move(cand.alpha);

    cur.eta = solve_subgraph_selection(cur.alpha, s);
    const double objective = semantics::total_objective(cur, s);
    report.objective_per_iteration.push_back(objective);
    report.iterations = iter + 1;
    if (have_prev && std::abs(objective - prev_objective) <= cfg.eps1) break;
    prev_objective = objective;
    have_prev = true;
    if (iter + 1 == cfg.max_outer_iterations) report.hit_iteration_cap = true;
  }

  report.selection = cur;
  report.objective = semantics::total_objective(cur, s);
  report.exact_lhs = model::exact_constraint_lhs(cur, s);
  const double mass = semantics::max_semantic_mass(s);
  report.se_percent = mass > 0 ? 100.0 * report.objective / mass : 0.0;
  report.allocation = recover_allocation(cur, s);
  report.certified = knapsack::fits(report.exact_lhs, 1.0);
  return report;
}

}  // namespace semcom::optimizer
