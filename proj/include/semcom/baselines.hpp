#pragma once

#include <cstdint>
#include <string>

#include "semcom/types.hpp"

namespace semcom::baselines {

struct Result {
  std::string scheme;
  Selection selection;
  Allocation allocation;
  double objective = 0;
  double se_percent = 0;  // 0 when the scenario carries no semantic mass
};

// Equal band split: b_k = 1/K. Every device that can afford the SNR target
// transmits, picking its triplets by an exact per-device knapsack under the
// bit budget its slice supports within the deadline.
Result eb_semc(const Scenario& s);

// Random band split: fractions are normalized standard-exponential draws
// (uniform on the simplex) from the seeded generator; triplet choice as in
// eb_semc.
Result rb_semc(const Scenario& s, std::uint64_t seed);

// Equal band split without semantic ranking: each device sends its triplets
// in source order and stops at the first one that no longer fits its bit
// budget; only fully sent triplets score.
Result trad_semc(const Scenario& s);

}  // namespace semcom::baselines
