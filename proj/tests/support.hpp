// Shared helpers for the unit and acceptance suites. Doctest-free on purpose
// so the acceptance binary can include it too.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "semcom/generate.hpp"
#include "semcom/knapsack.hpp"
#include "semcom/model.hpp"
#include "semcom/rng.hpp"
#include "semcom/types.hpp"

namespace testsup {

// Independent exhaustive 0-1 knapsack solver: bitmask enumeration with the
// same feasibility rule and tie-break contract as the production solver but
// none of its search machinery. Ground truth for exactness checks.
struct EnumSolution {
  std::vector<std::uint8_t> take;
  double value = 0;
};

inline bool tie_break_better(double v, std::size_t count,
                             const std::vector<std::uint8_t>& take, double best_v,
                             std::size_t best_count,
                             const std::vector<std::uint8_t>& best_take) {
  if (v != best_v) return v > best_v;
  if (count != best_count) return count < best_count;
  for (std::size_t i = 0; i < take.size(); ++i)
    if (take[i] != best_take[i]) return take[i] > best_take[i];
  return false;
}

inline EnumSolution enum_knapsack(const semcom::knapsack::Instance& inst) {
  const std::size_t n = inst.values.size();
  if (n > 20) throw std::logic_error("enum_knapsack: instance too large");
  std::vector<std::uint8_t> banned(n, 0);
  for (const auto i : inst.forced_zero) banned[i] = 1;

  EnumSolution best;
  best.take.assign(n, 0);
  best.value = -1;
  std::size_t best_count = 0;
  std::vector<std::uint8_t> take(n, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double weight = 0, value = 0;
    std::size_t count = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      take[i] = (mask >> i) & 1;
      if (!take[i]) continue;
      if (banned[i]) {
        ok = false;
        break;
      }
      weight += inst.weights[i];
      value += inst.values[i];
      ++count;
    }
    if (!ok || !semcom::knapsack::fits(weight, inst.capacity)) continue;
    if (best.value < 0 ||
        tie_break_better(value, count, take, best.value, best_count, best.take)) {
      best.value = value;
      best_count = count;
      best.take = take;
    }
  }
  return best;
}

// Channel at the library defaults (1 MHz band, 1e-17 W/Hz noise, 1e-5 BER
// target, 8 ms deadline, 10 mW cap).
inline semcom::ChannelConfig default_channel() { return {}; }

inline double default_noise_w() {
  return semcom::model::noise_power(default_channel());
}

// Device whose per-watt SNR coefficient is exactly `coefficient`, encoded
// through a unit-distance link.
inline semcom::Device device_with_coefficient(double coefficient) {
  semcom::Device dev;
  dev.link = semcom::make_device_link(1.0, coefficient * default_noise_w(),
                                      default_noise_w());
  return dev;
}

inline semcom::Triplet triplet(double size_bits, double importance,
                               double recovery) {
  semcom::Triplet t;
  t.size_bits = size_bits;
  t.importance = importance;
  t.recovery = recovery;
  return t;
}

// Small random scenario for property tests: K devices at random positions
// in a square, exponential fading, random triplets. A smaller area pulls
// more devices inside the power-feasible radius.
inline semcom::Scenario random_scenario(std::uint64_t seed, std::int64_t devices,
                                        std::int64_t max_triplets,
                                        double area_side_m = 1000) {
  semcom::ScenarioSpec spec;
  spec.seed = seed;
  spec.device_count = devices;
  spec.area_side_m = area_side_m;
  spec.triplets.count_min = 1;
  spec.triplets.count_max = max_triplets;
  return semcom::generate_scenario(spec);
}

}  // namespace testsup
