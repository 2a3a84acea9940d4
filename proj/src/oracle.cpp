#include "semcom/oracle.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "semcom/error.hpp"
#include "semcom/knapsack.hpp"
#include "semcom/model.hpp"
#include "semcom/semantics.hpp"

namespace semcom::oracle {

namespace {

// Depth-first walk over bit-strings in lexicographic order (0 before 1), so
// the first maximum found is automatically the smallest tie-break winner.
// The band-budget sum only grows as devices complete, which lets infeasible
// prefixes be cut without ever missing a feasible point.
struct Enumerator {
  const Scenario& s;
  double c;
  std::vector<std::uint8_t> power_ok;
  Selection cur;
  Selection best;
  double best_objective = -1;
  std::uint64_t feasible = 0;

  explicit Enumerator(const Scenario& sc)
      : s(sc),
        c(model::c_threshold(sc.ber_model(), sc.channel.ber_threshold)),
        cur(Selection::zeros(sc)) {
    power_ok.reserve(s.devices.size());
    for (const auto& d : s.devices)
      power_ok.push_back(
          model::power_feasible(d.link, c, s.channel.max_power_w) ? 1 : 0);
  }

  void alphas(std::size_t k) {
    if (k == s.devices.size()) {
      device_block(0, 0.0, 0.0);
      return;
    }
    cur.alpha[k] = 0;
    alphas(k + 1);
    if (power_ok[k]) {
      cur.alpha[k] = 1;
      alphas(k + 1);
      cur.alpha[k] = 0;
    }
  }

  void device_block(std::size_t k, double lhs, double objective) {
    if (k == s.devices.size()) {
      ++feasible;
      if (objective > best_objective) {
        best_objective = objective;
        best = cur;
      }
      return;
    }
    eta_bits(k, 0, 0.0, lhs, objective);
  }

  void eta_bits(std::size_t k, std::size_t n, double bits, double lhs,
                double objective) {
    const auto& triplets = s.devices[k].triplets;
    if (n == triplets.size()) {
      const double total =
          lhs + model::closed_form_bandwidth(cur.alpha[k] != 0, bits, s.channel, c);
      if (!knapsack::fits(total, 1.0)) return;
      device_block(k + 1, total, objective);
      return;
    }
    cur.eta[k][n] = 0;
    eta_bits(k, n + 1, bits, lhs, objective);
    cur.eta[k][n] = 1;
    const auto& t = triplets[n];
    eta_bits(k, n + 1, bits + t.size_bits, lhs,
             objective + (cur.alpha[k] ? t.importance * t.recovery : 0.0));
    cur.eta[k][n] = 0;
  }
};

}  // namespace

Result brute_force(const Scenario& s) {
  validate(s);
  std::size_t bits = 0;
  for (const auto& d : s.devices) bits += 1 + d.triplets.size();
  if (bits > 24)
    fail(errc::instance_too_large,
         "oracle: " + std::to_string(bits) + " selection bits exceeds the cap of 24");

  Enumerator e(s);
  e.alphas(0);

  Result res;
  res.selection = std::move(e.best);
  // canonical re-sum so the reported number matches the objective helpers
  res.objective = semantics::total_objective(res.selection, s);
  res.feasible_count = e.feasible;
  return res;
}

}  // namespace semcom::oracle
