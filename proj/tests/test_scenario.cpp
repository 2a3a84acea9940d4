#include <cmath>
#include <string>

#include "doctest.h"
#include "semcom/error.hpp"
#include "semcom/generate.hpp"
#include "semcom/scenario_io.hpp"
#include "semcom/semantics.hpp"
#include "support.hpp"

using namespace semcom;
using doctest::Approx;

TEST_CASE("generation is deterministic in the seed") {
  ScenarioSpec spec = default_spec();
  spec.seed = 99;
  const auto a = generate_scenario(spec);
  const auto b = generate_scenario(spec);
  CHECK(scenario_to_json(a) == scenario_to_json(b));

  spec.seed = 100;
  CHECK(scenario_to_json(generate_scenario(spec)) != scenario_to_json(a));
}

TEST_CASE("synthetic draws land inside their documented ranges") {
  ScenarioSpec spec = default_spec();
  spec.seed = 3;
  spec.device_count = 40;
  const auto s = generate_scenario(spec);
  REQUIRE(s.devices.size() == 40);

  const double max_d = std::sqrt(2.0) * spec.area_side_m / 2;
  for (const auto& dev : s.devices) {
    CHECK(dev.link.distance_m >= spec.area_side_m * 1e-3);
    CHECK(dev.link.distance_m <= max_d + 1e-9);
    CHECK(dev.link.fading_gain > 0);
    CHECK(dev.triplets.size() >= 5);
    CHECK(dev.triplets.size() <= 15);
    for (const auto& t : dev.triplets) {
      CHECK(t.size_bits >= 8 * 10);
      CHECK(t.size_bits <= 8 * 250);
      CHECK(std::fmod(t.size_bits, 8.0) == 0.0);
      CHECK(t.importance >= 0.0);
      CHECK(t.importance < 1.0);
      CHECK(t.recovery >= 0.5);
      CHECK(t.recovery < 1.0);
    }
  }
}

TEST_CASE("explicit triplets resolve missing fields from their text") {
  ScenarioSpec spec = default_spec();
  spec.seed = 11;
  spec.kb_text = "girl has bag. boy rides bike. dog chases ball.";

  ExplicitDevice dev;
  dev.distance_m = 120.0;
  dev.fading_gain = 1.0;
  ExplicitTriplet t;
  t.text = "girl-has-bag";
  dev.triplets.push_back(t);
  spec.devices.push_back(dev);

  const auto s = generate_scenario(spec);
  REQUIRE(s.devices.size() == 1);
  REQUIRE(s.devices[0].triplets.size() == 1);
  const auto& out = s.devices[0].triplets[0];
  // ten letters at eight bits per letter
  CHECK(out.size_bits == 80.0);
  CHECK(out.importance > 0.0);
  CHECK(out.importance <= 1.0);
  CHECK(out.recovery > 0.0);
  CHECK(out.recovery <= 1.0);
  // scored against the knowledge base with the library embedder
  const semantics::HashEmbedder emb(spec.embedder_dimension);
  CHECK(out.importance ==
        Approx(semantics::importance_score(t.text, spec.kb_text, emb))
            .epsilon(1e-14));

  SUBCASE("explicit numbers win over text resolution") {
    spec.devices[0].triplets[0].size_bits = 12345.0;
    spec.devices[0].triplets[0].importance = 0.25;
    spec.devices[0].triplets[0].recovery = 0.75;
    const auto s2 = generate_scenario(spec);
    const auto& t2 = s2.devices[0].triplets[0];
    CHECK(t2.size_bits == 12345.0);
    CHECK(t2.importance == 0.25);
    CHECK(t2.recovery == 0.75);
  }

  SUBCASE("resolution is deterministic") {
    const auto s2 = generate_scenario(spec);
    CHECK(scenario_to_json(s2) == scenario_to_json(s));
  }
}

TEST_CASE("explicit triplets without text need every number spelled out") {
  ScenarioSpec spec = default_spec();
  ExplicitDevice dev;
  dev.distance_m = 100.0;
  dev.fading_gain = 1.0;
  ExplicitTriplet bare;
  bare.size_bits = 100.0;
  bare.importance = 0.5;
  dev.triplets.push_back(bare);  // recovery missing, no text
  spec.devices.push_back(dev);
  CHECK_THROWS_WITH_AS(generate_scenario(spec),
                       doctest::Contains("devices[0].triplets[0]"), Error);

  spec.devices[0].triplets[0].recovery = 0.5;
  CHECK_NOTHROW(generate_scenario(spec));
}

TEST_CASE("importance needs a knowledge base when left to resolution") {
  ScenarioSpec spec = default_spec();
  spec.kb_text.clear();
  ExplicitDevice dev;
  dev.distance_m = 100.0;
  dev.fading_gain = 1.0;
  ExplicitTriplet t;
  t.text = "girl has bag";
  dev.triplets.push_back(t);
  spec.devices.push_back(dev);
  CHECK_THROWS_AS(generate_scenario(spec), Error);

  spec.devices[0].kb_text = "girl has bag and more";
  CHECK_NOTHROW(generate_scenario(spec));
}

TEST_CASE("spec validation rejects bad shapes") {
  auto bad = [](auto mutate) {
    ScenarioSpec spec = default_spec();
    mutate(spec);
    CHECK_THROWS_AS(generate_scenario(spec), Error);
  };
  bad([](ScenarioSpec& s) { s.device_count = 0; });
  bad([](ScenarioSpec& s) { s.area_side_m = -5; });
  bad([](ScenarioSpec& s) { s.corruption_prob = 1.5; });
  bad([](ScenarioSpec& s) { s.triplets.count_min = 9; s.triplets.count_max = 3; });
  bad([](ScenarioSpec& s) { s.ber_model = "gaussian"; });
  bad([](ScenarioSpec& s) { s.channel.max_power_w = 0; });
}

TEST_CASE("scenario JSON round-trips byte for byte") {
  const auto s = testsup::random_scenario(17, 4, 5);
  const auto text = scenario_to_json(s);
  const auto back = scenario_from_json(text);
  CHECK(scenario_to_json(back) == text);
  CHECK(back.seed == s.seed);
  CHECK(back.devices.size() == s.devices.size());
  CHECK_NOTHROW(validate(back));
}

TEST_CASE("scenario JSON parsing rejects malformed input with its path") {
  const auto s = testsup::random_scenario(17, 2, 3);
  const auto text = scenario_to_json(s);

  SUBCASE("not JSON at all") {
    CHECK_THROWS_AS(scenario_from_json("{nope"), Error);
  }
  SUBCASE("wrong format tag") {
    auto t = text;
    t.replace(t.find("semcom-scenario"), 15, "something-weird");
    CHECK_THROWS_AS(scenario_from_json(t), Error);
  }
  SUBCASE("unknown keys are rejected, not ignored") {
    auto t = text;
    t.insert(t.find("\"seed\""), "\"surprise\": 1,\n  ");
    CHECK_THROWS_WITH_AS(scenario_from_json(t), doctest::Contains("surprise"),
                         Error);
  }
  SUBCASE("missing importance names the triplet") {
    auto t = text;
    const auto pos = t.find("\"importance\"");
    t.replace(pos, 12, "\"recovery2\"");
    CHECK_THROWS_AS(scenario_from_json(t), Error);
  }
  SUBCASE("out-of-range score names the offending path") {
    auto s2 = s;
    s2.devices[1].triplets[0].importance = 2.0;
    CHECK_THROWS_WITH_AS(scenario_from_json(scenario_to_json(s2)),
                         doctest::Contains("devices[1]"), Error);
  }
}

TEST_CASE("spec JSON round-trips and applies defaults") {
  SUBCASE("defaults round-trip") {
    const auto text = spec_to_json(default_spec());
    const auto back = spec_from_json(text);
    CHECK(spec_to_json(back) == text);
    CHECK(back.seed == 1);
    CHECK(back.device_count == 10);
    CHECK(back.area_side_m == 1000.0);
  }
  SUBCASE("minimal spec gets all defaults") {
    const auto spec = spec_from_json(
        R"({"format": "semcom-spec", "version": 1, "seed": 5})");
    CHECK(spec.seed == 5);
    CHECK(spec.device_count == 10);
    CHECK(spec.triplets.count_min == 5);
    CHECK(spec.triplets.count_max == 15);
    CHECK(spec.embedder_dimension == 256);
  }
  SUBCASE("explicit devices round-trip with optional fields") {
    ScenarioSpec spec = default_spec();
    spec.kb_text = "girl has bag";
    ExplicitDevice dev;
    dev.fading_gain = 0.5;  // distance left for the generator to draw
    ExplicitTriplet t;
    t.text = "girl has bag";
    dev.triplets.push_back(t);
    spec.devices.push_back(dev);
    const auto text = spec_to_json(spec);
    const auto back = spec_from_json(text);
    CHECK(spec_to_json(back) == text);
    REQUIRE(back.devices.size() == 1);
    CHECK_FALSE(back.devices[0].distance_m.has_value());
    CHECK(back.devices[0].fading_gain == 0.5);
    CHECK_FALSE(back.devices[0].triplets[0].size_bits.has_value());
    // the round-tripped spec materializes identically
    CHECK(scenario_to_json(generate_scenario(back)) ==
          scenario_to_json(generate_scenario(spec)));
  }
  SUBCASE("device_count conflicts with an explicit device list") {
    CHECK_THROWS_AS(spec_from_json(R"({
      "format": "semcom-spec", "version": 1, "device_count": 3,
      "devices": [{"distance_m": 10, "fading_gain": 1,
                   "triplets": [{"size_bits": 8, "importance": 1, "recovery": 1}]}]
    })"),
                    Error);
  }
  SUBCASE("distributions accept plain numbers and kind objects") {
    const auto spec = spec_from_json(R"({
      "format": "semcom-spec", "version": 1,
      "triplets": {"importance": 0.7,
                   "recovery": {"dist": "uniform", "low": 0.2, "high": 0.9}}
    })");
    CHECK(spec.triplets.importance.kind == Distribution::Kind::constant);
    CHECK(spec.triplets.importance.a == 0.7);
    CHECK(spec.triplets.recovery.kind == Distribution::Kind::uniform);
    CHECK(spec.triplets.recovery.a == 0.2);
    CHECK(spec.triplets.recovery.b == 0.9);
  }
}

TEST_CASE("file IO reports the path on failure") {
  CHECK_THROWS_WITH_AS(load_scenario_file("/nonexistent/x.json"),
                       doctest::Contains("/nonexistent/x.json"), Error);
  CHECK_THROWS_AS(load_spec_file("/nonexistent/x.json"), Error);
}
