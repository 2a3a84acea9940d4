#pragma once

#include <cstdint>

#include "semcom/types.hpp"

namespace semcom::oracle {

struct Result {
  double objective = 0;
  Selection selection;
  std::uint64_t feasible_count = 0;  // points passing budget and power checks
};

// Ground truth by exhaustive enumeration of every (alpha, eta) bit vector,
// limited to instances with at most 24 decision bits. Feasibility means the
// exact band budget fits (same fits() rule as the optimizer) and no selected
// device breaks the power cap. Ties on the objective go to the
// lexicographically smallest bit-string, reading all alpha bits first and
// then each device's eta bits in device order.
Result brute_force(const Scenario& s);

}  // namespace semcom::oracle
