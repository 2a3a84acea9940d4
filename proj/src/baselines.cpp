#include "semcom/baselines.hpp"

#include <cstddef>
#include <vector>

#include "semcom/error.hpp"
#include "semcom/knapsack.hpp"
#include "semcom/model.hpp"
#include "semcom/rng.hpp"
#include "semcom/semantics.hpp"

namespace semcom::baselines {

namespace {

// Bits device k can push through its slice before the deadline.
double capacity_bits(double band_fraction, const Scenario& s, double c) {
  return model::rate_bps(band_fraction, s.channel, c) * s.channel.time_threshold_s;
}

// Largest-value triplet set within the bit budget.
std::vector<std::uint8_t> knapsack_triplets(const Device& dev, double budget_bits) {
  knapsack::Instance inst;
  inst.capacity = budget_bits;
  for (const auto& t : dev.triplets) {
    inst.values.push_back(t.importance * t.recovery);
    inst.weights.push_back(t.size_bits);
  }
  return knapsack::solve_exact(inst).take;
}

// Source-order prefix, stopping at the first triplet that does not fit.
std::vector<std::uint8_t> prefix_triplets(const Device& dev, double budget_bits) {
  std::vector<std::uint8_t> take(dev.triplets.size(), 0);
  double used = 0;
  for (std::size_t n = 0; n < dev.triplets.size(); ++n) {
    if (!knapsack::fits(used + dev.triplets[n].size_bits, budget_bits)) break;
    used += dev.triplets[n].size_bits;
    take[n] = 1;
  }
  return take;
}

Result fixed_band_scheme(const Scenario& s, std::string name,
                         const std::vector<double>& band, bool ranked) {
  validate(s);
  if (s.devices.empty()) fail(errc::invalid_argument, name + ": needs K >= 1");
  const double c = model::c_threshold(s.ber_model(), s.channel.ber_threshold);

  Result res;
  res.scheme = std::move(name);
  res.selection = Selection::zeros(s);
  res.allocation.band_fraction = band;
  res.allocation.power_w.assign(s.devices.size(), 0.0);

  for (std::size_t k = 0; k < s.devices.size(); ++k) {
    const auto& dev = s.devices[k];
    if (!model::power_feasible(dev.link, c, s.channel.max_power_w)) continue;
    res.selection.alpha[k] = 1;
    res.allocation.power_w[k] = model::required_power(true, c, dev.link);
    const double budget = capacity_bits(band[k], s, c);
    res.selection.eta[k] =
        ranked ? knapsack_triplets(dev, budget) : prefix_triplets(dev, budget);
  }

  res.objective = semantics::total_objective(res.selection, s);
  const double mass = semantics::max_semantic_mass(s);
  res.se_percent = mass > 0 ? 100.0 * res.objective / mass : 0.0;
  return res;
}

}  // namespace

Result eb_semc(const Scenario& s) {
  if (s.devices.empty()) fail(errc::invalid_argument, "eb_semc: needs K >= 1");
  const std::vector<double> band(s.devices.size(), 1.0 / s.devices.size());
  return fixed_band_scheme(s, "eb", band, true);
}

Result rb_semc(const Scenario& s, std::uint64_t seed) {
  if (s.devices.empty()) fail(errc::invalid_argument, "rb_semc: needs K >= 1");
  Rng rng(seed);
  std::vector<double> band(s.devices.size());
  double total = 0;
  for (auto& b : band) {
    b = rng.exponential();
    total += b;
  }
  if (total > 0) {
    for (auto& b : band) b /= total;
  } else {
    // all draws hit zero (astronomically unlikely); fall back to equal split
    for (auto& b : band) b = 1.0 / band.size();
  }
  return fixed_band_scheme(s, "rb", band, true);
}

Result trad_semc(const Scenario& s) {
  if (s.devices.empty()) fail(errc::invalid_argument, "trad_semc: needs K >= 1");
  const std::vector<double> band(s.devices.size(), 1.0 / s.devices.size());
  return fixed_band_scheme(s, "trad", band, false);
}

}  // namespace semcom::baselines
