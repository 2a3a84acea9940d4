#include "semcom/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semcom/error.hpp"

namespace semcom::knapsack {

namespace {

constexpr double slack_budget(double capacity) {
  return capacity + 1e-12 * (capacity < 0 ? -capacity : capacity) + 1e-15;
}

struct Item {
  std::size_t index;
  double value;
  double weight;
};

void check(const Instance& inst) {
  const std::size_t n = inst.values.size();
  if (inst.weights.size() != n)
    fail(errc::invalid_argument, "knapsack: values/weights length mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::isfinite(inst.values[i]) && inst.values[i] >= 0))
      fail(errc::invalid_argument,
           "knapsack: value " + std::to_string(i) + " must be finite and >= 0");
    if (!(std::isfinite(inst.weights[i]) && inst.weights[i] >= 0))
      fail(errc::invalid_argument,
           "knapsack: weight " + std::to_string(i) + " must be finite and >= 0");
  }
  if (!std::isfinite(inst.capacity))
    fail(errc::invalid_argument, "knapsack: capacity must be finite");
  if (inst.capacity < 0)
    fail(errc::infeasible, "knapsack: negative capacity");
  for (const auto i : inst.forced_zero)
    if (i >= n)
      fail(errc::invalid_argument, "knapsack: forced_zero index out of range");
}

// Splits the variables: zero-weight items with positive value cost nothing
// and always belong in an optimal set, zero-value items never do, and the
// rest are returned density-sorted (index ascending on density ties) for
// the branch and bound.
std::vector<Item> order_items(const Instance& inst,
                              std::vector<std::uint8_t>& pre_take) {
  std::vector<std::uint8_t> banned(inst.values.size(), 0);
  for (const auto i : inst.forced_zero) banned[i] = 1;
  std::vector<Item> items;
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    if (banned[i] || inst.values[i] <= 0) continue;
    if (inst.weights[i] == 0) {
      pre_take[i] = 1;
      continue;
    }
    items.push_back({i, inst.values[i], inst.weights[i]});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.value * b.weight > b.value * a.weight;
  });
  return items;
}

// Value recomputed by ascending index so the reported number does not depend
// on the search order that found the set.
double value_in_index_order(const Instance& inst,
                            const std::vector<std::uint8_t>& take) {
  double v = 0;
  for (std::size_t i = 0; i < take.size(); ++i)
    if (take[i]) v += inst.values[i];
  return v;
}

struct Search {
  const Instance& inst;
  double budget;  // capacity plus the fits() slack, shared with the bound
  std::vector<Item> items;
  std::vector<std::uint8_t> current;
  std::vector<std::uint8_t> best_take;
  double best_value = -1;  // over branch items only; pre-takes are constant
  std::size_t best_count = 0;

  explicit Search(const Instance& in)
      : inst(in), budget(slack_budget(in.capacity)) {
    current.assign(inst.values.size(), 0);
    items = order_items(inst, current);
  }

  static std::size_t count_taken(const std::vector<std::uint8_t>& take) {
    std::size_t c = 0;
    for (const auto t : take) c += t;
    return c;
  }

  // Lexicographic order on sorted index sets: reading the 0/1 flags from
  // index 0, a present low index beats an absent one.
  static bool lex_smaller(const std::vector<std::uint8_t>& a,
                          const std::vector<std::uint8_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }

  void offer(double value) {
    const std::size_t count = count_taken(current);
    if (best_value < 0 || value > best_value ||
        (value == best_value &&
         (count < best_count ||
          (count == best_count && lex_smaller(current, best_take))))) {
      best_value = value;
      best_count = count;
      best_take = current;
    }
  }

  // Fractional fill of the density-sorted tail into the remaining slack
  // budget. Every leaf the DFS can still accept spends at most that budget,
  // so this really is an upper bound even on boundary-riding paths.
  double upper_bound(std::size_t from, double room, double value) const {
    for (std::size_t j = from; j < items.size(); ++j) {
      const auto& it = items[j];
      if (it.weight <= room) {
        value += it.value;
        room -= it.weight;
      } else {
        if (room > 0) value += it.value * (room / it.weight);
        break;
      }
    }
    return value;
  }

  void dfs(std::size_t depth, double used, double value) {
    if (depth == items.size()) {
      offer(value);
      return;
    }
    // Strictly-worse check only; an equal bound may still hide an
    // equal-value set with a better tie-break.
    if (best_value >= 0 && upper_bound(depth, budget - used, value) < best_value)
      return;
    const auto& it = items[depth];
    if (used + it.weight <= budget) {
      current[it.index] = 1;
      dfs(depth + 1, used + it.weight, value + it.value);
      current[it.index] = 0;
    }
    dfs(depth + 1, used, value);
  }
};

}  // namespace

bool fits(double total_weight, double capacity) {
  return total_weight <= slack_budget(capacity);
}

Solution solve_exact(const Instance& inst) {
  check(inst);
  Search search(inst);
  search.dfs(0, 0, 0);
  Solution sol;
  sol.take = std::move(search.best_take);
  sol.value = value_in_index_order(inst, sol.take);
  return sol;
}

double fractional_bound(const Instance& inst) {
  check(inst);
  std::vector<std::uint8_t> pre(inst.values.size(), 0);
  const auto items = order_items(inst, pre);
  double value = 0;
  for (std::size_t i = 0; i < pre.size(); ++i)
    if (pre[i]) value += inst.values[i];
  double room = inst.capacity;
  for (const auto& it : items) {
    if (it.weight <= room) {
      value += it.value;
      room -= it.weight;
    } else {
      if (room > 0) value += it.value * (room / it.weight);
      break;
    }
  }
  return value;
}

}  // namespace semcom::knapsack
