#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace semcom::knapsack {

// 0-1 knapsack over non-negative real values and weights. `forced_zero`
// pins variables to zero without renumbering, which keeps the caller's
// index space intact.
struct Instance {
  std::vector<double> values;
  std::vector<double> weights;
  double capacity = 0;
  std::vector<std::size_t> forced_zero;
};

struct Solution {
  std::vector<std::uint8_t> take;  // one flag per variable
  double value = 0;                // sum of taken values in index order
};

// Shared feasibility rule: a weight total fits when it is at most the
// capacity plus a relative-and-absolute float slack. Used by every module
// that compares an accumulated weight against a budget, so a sum that is
// mathematically on the boundary never flips infeasible through round-off.
bool fits(double total_weight, double capacity);

// Exact optimum by depth-first branch and bound in value/weight density
// order, pruned with the fractional relaxation. Pruning only discards
// sub-trees that are strictly worse, so ties survive to the tie-break:
// maximum value, then fewer items, then the lexicographically smallest
// index set. Intended regime is small n (tens of variables); worst cases
// are exponential like any exact method.
Solution solve_exact(const Instance& inst);

// Value of the continuous relaxation (fractional items allowed); an upper
// bound on solve_exact's value.
double fractional_bound(const Instance& inst);

}  // namespace semcom::knapsack
