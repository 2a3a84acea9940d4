#include <doctest.h>

#include <cstdint>
#include <vector>

#include "semcom/error.hpp"
#include "semcom/knapsack.hpp"
#include "semcom/rng.hpp"
#include "support.hpp"

using semcom::Error;
using semcom::Rng;
using semcom::knapsack::fits;
using semcom::knapsack::fractional_bound;
using semcom::knapsack::Instance;
using semcom::knapsack::solve_exact;

namespace {

Instance make(std::vector<double> values, std::vector<double> weights,
              double capacity) {
  Instance inst;
  inst.values = std::move(values);
  inst.weights = std::move(weights);
  inst.capacity = capacity;
  return inst;
}

// Random instance with occasional zero weights/values to hit the edge
// handling, not just the generic path.
Instance random_instance(Rng& rng, std::size_t max_n) {
  Instance inst;
  const auto n = rng.uniform_int(0, static_cast<std::int64_t>(max_n));
  double total_weight = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    double v = rng.uniform01();
    double w = rng.uniform01();
    if (rng.uniform01() < 0.08) v = 0;
    if (rng.uniform01() < 0.08) w = 0;
    inst.values.push_back(v);
    inst.weights.push_back(w);
    total_weight += w;
  }
  inst.capacity = rng.uniform01() * (total_weight > 0 ? total_weight : 1.0);
  for (std::int64_t i = 0; i < n; ++i)
    if (rng.uniform01() < 0.1)
      inst.forced_zero.push_back(static_cast<std::size_t>(i));
  return inst;
}

}  // namespace

TEST_CASE("solve_exact on a worked instance") {
  const auto inst = make({0.9, 0.6, 0.5}, {5, 4, 3}, 7);
  const auto sol = solve_exact(inst);
  CHECK(sol.take == std::vector<std::uint8_t>{0, 1, 1});
  CHECK(sol.value == 0.6 + 0.5);
}

TEST_CASE("fractional bound fills the best density prefix") {
  const auto inst = make({0.9, 0.6, 0.5}, {5, 4, 3}, 7);
  // density order is item 0, item 2, item 1; item 2 fits 2/3 of its weight
  CHECK(fractional_bound(inst) == 0.9 + 0.5 * (2.0 / 3.0));
  CHECK(fractional_bound(inst) >= solve_exact(inst).value);
}

TEST_CASE("empty instance and zero capacity") {
  CHECK(solve_exact(make({}, {}, 0)).value == 0);
  const auto sol = solve_exact(make({1.0, 2.0}, {1.0, 1.0}, 0));
  CHECK(sol.value == 0);
  CHECK(sol.take == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("zero-weight items with value always ride along") {
  const auto sol = solve_exact(make({0.5, 3.0}, {1.0, 0.0}, 0.25));
  CHECK(sol.take == std::vector<std::uint8_t>{0, 1});
  CHECK(sol.value == 3.0);
}

TEST_CASE("zero-value items never enter the selection") {
  const auto sol = solve_exact(make({0.0, 1.0}, {0.0, 1.0}, 5));
  CHECK(sol.take == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("forced_zero pins variables regardless of value") {
  auto inst = make({10.0, 1.0}, {1.0, 1.0}, 2);
  inst.forced_zero = {0};
  const auto sol = solve_exact(inst);
  CHECK(sol.take == std::vector<std::uint8_t>{0, 1});
  CHECK(sol.value == 1.0);
}

TEST_CASE("ties prefer fewer items, then the smallest index set") {
  SUBCASE("fewer items") {
    // value 2 via item 2 alone or via items 0+1
    const auto sol = solve_exact(make({1.0, 1.0, 2.0}, {1.0, 1.0, 2.0}, 2));
    CHECK(sol.take == std::vector<std::uint8_t>{0, 0, 1});
  }
  SUBCASE("lexicographic set order") {
    const auto sol = solve_exact(make({1.0, 1.0}, {1.0, 1.0}, 1));
    CHECK(sol.take == std::vector<std::uint8_t>{1, 0});
  }
  SUBCASE("lower index wins at equal value and count") {
    // {0,2}, {0,3}, {1,2}, {1,3} all reach value 3 with two items
    // ({0,1} is too heavy); the smallest index set {0,2} wins.
    const auto sol = solve_exact(make({2.0, 2.0, 1.0, 1.0}, {2, 2, 1, 1}, 3));
    CHECK(sol.take == std::vector<std::uint8_t>{1, 0, 1, 0});
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(solve_exact(make({1.0}, {1.0, 2.0}, 1)), Error);
  CHECK_THROWS_AS(solve_exact(make({-1.0}, {1.0}, 1)), Error);
  CHECK_THROWS_AS(solve_exact(make({1.0}, {-1.0}, 1)), Error);
  CHECK_THROWS_AS(solve_exact(make({1.0}, {1.0}, -0.5)), Error);
  auto inst = make({1.0}, {1.0}, 1);
  inst.forced_zero = {3};
  CHECK_THROWS_AS(solve_exact(inst), Error);
  CHECK_THROWS_AS(fractional_bound(make({1.0}, {1.0}, -2)), Error);
}

TEST_CASE("matches exhaustive enumeration on random instances") {
  Rng rng(20250815);
  for (int trial = 0; trial < 400; ++trial) {
    const auto inst = random_instance(rng, 12);
    const auto got = solve_exact(inst);
    const auto want = testsup::enum_knapsack(inst);
    CAPTURE(trial);
    CHECK(got.value == want.value);
    CHECK(got.take == want.take);
  }
}

TEST_CASE("solution properties hold on random instances") {
  Rng rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_instance(rng, 14);
    const auto sol = solve_exact(inst);
    CAPTURE(trial);

    double weight = 0;
    for (std::size_t i = 0; i < inst.values.size(); ++i)
      if (sol.take[i]) weight += inst.weights[i];
    CHECK(fits(weight, inst.capacity));

    for (const auto i : inst.forced_zero) CHECK(sol.take[i] == 0);

    CHECK(fractional_bound(inst) >= sol.value - 1e-12);

    // more room never hurts
    auto wider = inst;
    wider.capacity = inst.capacity * 1.5 + 0.1;
    CHECK(solve_exact(wider).value >= sol.value);
  }
}
