#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semcom/rng.hpp"
#include "semcom/types.hpp"

namespace semcom {

struct Distribution {
  enum class Kind { constant, uniform };
  Kind kind = Kind::constant;
  double a = 0;  // the constant, or the lower edge
  double b = 0;  // the upper edge (uniform draws land in [a, b))

  static Distribution constant(double v) { return {Kind::constant, v, v}; }
  static Distribution uniform(double lo, double hi) {
    return {Kind::uniform, lo, hi};
  }
};

double sample(const Distribution& dist, Rng& rng);

// Synthetic triplet source: per device, a count is drawn, then each triplet
// gets a letter count (wire size = bits_per_letter * letters) and scores
// from the two distributions.
struct TripletGen {
  std::int64_t count_min = 5;
  std::int64_t count_max = 15;
  std::int64_t letters_min = 10;
  std::int64_t letters_max = 250;
  double bits_per_letter = 8;
  Distribution importance = Distribution::uniform(0.0, 1.0);
  Distribution recovery = Distribution::uniform(0.5, 1.0);
};

// Hand-authored triplet: any field not given is resolved from `text`
// (size from its letter count, importance against the knowledge base,
// recovery through the receiver corruption model).
struct ExplicitTriplet {
  std::string text;
  std::optional<double> size_bits;
  std::optional<double> importance;
  std::optional<double> recovery;
};

struct ExplicitDevice {
  std::optional<double> distance_m;   // drawn from the area when absent
  std::optional<double> fading_gain;  // drawn when absent
  std::string kb_text;                // falls back to the spec-level text
  std::vector<ExplicitTriplet> triplets;
};

// Everything needed to materialize a Scenario reproducibly. Devices are
// either synthesized (`device_count` of them, triplets from `triplets`) or
// listed explicitly in `devices`; the two sources are mutually exclusive.
struct ScenarioSpec {
  std::uint64_t seed = 1;
  std::int64_t device_count = 10;
  double area_side_m = 1000;  // uplink receiver sits at the square's center
  ChannelConfig channel;
  std::string ber_model = "reciprocal";
  std::size_t embedder_dimension = 256;
  double corruption_prob = 0.1;  // per-token substitution rate for recovery
  std::string kb_text;
  TripletGen triplets;
  std::vector<ExplicitDevice> devices;
};

ScenarioSpec default_spec();

// Deterministic materialization: one Rng seeded from spec.seed, consumed in
// a fixed documented order (per device: position if distance absent, fading
// if absent, then triplet draws in triplet order). The same spec always
// yields the same scenario; changing which optional fields are present
// changes the draw stream by design.
Scenario generate_scenario(const ScenarioSpec& spec);

}  // namespace semcom
