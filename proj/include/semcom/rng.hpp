#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "semcom/error.hpp"

namespace semcom {

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard, and every variate transform below is
// spelled out explicitly because the std::*_distribution adapters are
// implementation-defined and would break cross-toolchain reproducibility.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0,1): top 53 bits of one engine draw.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    if (!(lo <= hi)) fail(errc::invalid_argument, "uniform: lo > hi");
    return lo + (hi - lo) * uniform01();
  }

  // Inclusive range. Takes one engine draw; modulo bias is immaterial for the
  // small spans used here.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) fail(errc::invalid_argument, "uniform_int: lo > hi");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

  // Standard exponential via inverse CDF; log1p keeps it finite and accurate
  // since uniform01() never returns 1.
  double exponential() { return -std::log1p(-uniform01()); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace semcom
