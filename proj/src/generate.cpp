#include "semcom/generate.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "semcom/error.hpp"
#include "semcom/model.hpp"
#include "semcom/semantics.hpp"

namespace semcom {

namespace {

std::shared_ptr<const BerModel> resolve_ber_model(const std::string& name) {
  if (name.empty() || name == "reciprocal") return nullptr;  // library default
  fail(errc::invalid_argument,
       "ber_model: unsupported '" + name + "' (supported: reciprocal)");
}

void check_spec(const ScenarioSpec& spec) {
  validate(spec.channel);
  if (!(std::isfinite(spec.area_side_m) && spec.area_side_m > 0))
    fail(errc::invalid_argument, "area_side_m must be finite and > 0");
  if (!(spec.corruption_prob >= 0 && spec.corruption_prob <= 1))
    fail(errc::invalid_argument, "corruption_prob must be in [0, 1]");
  if (spec.embedder_dimension == 0)
    fail(errc::invalid_argument, "embedder_dimension must be > 0");
  if (spec.devices.empty()) {
    if (spec.device_count <= 0)
      fail(errc::invalid_argument, "device_count must be > 0");
    const auto& g = spec.triplets;
    if (g.count_min < 0 || g.count_min > g.count_max)
      fail(errc::invalid_argument, "triplets: need 0 <= count_min <= count_max");
    if (g.letters_min < 0 || g.letters_min > g.letters_max)
      fail(errc::invalid_argument, "triplets: need 0 <= letters_min <= letters_max");
    if (!(std::isfinite(g.bits_per_letter) && g.bits_per_letter >= 0))
      fail(errc::invalid_argument, "triplets: bits_per_letter must be >= 0");
  }
}

double draw_distance(Rng& rng, double side) {
  const double x = rng.uniform(0, side);
  const double y = rng.uniform(0, side);
  const double d = std::hypot(x - side / 2, y - side / 2);
  // a device essentially on top of the receiver would blow up the path-loss
  // model, so hold it one mil of the area side away
  return std::max(d, side * 1e-3);
}

double draw_fading(Rng& rng) {
  double g = rng.exponential();
  while (!(g > 0)) g = rng.exponential();
  return g;
}

std::string corrupt_tokens(const std::string& text, double prob, Rng& rng) {
  auto toks = semantics::tokenize(text);
  for (auto& tok : toks) {
    if (rng.uniform01() >= prob) continue;
    std::string junk(6, 'a');
    for (auto& c : junk)
      c = static_cast<char>('a' + rng.uniform_int(0, 25));
    tok = junk;
  }
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out.push_back(' ');
    out += toks[i];
  }
  return out;
}

Triplet resolve_triplet(const ExplicitTriplet& in, const std::string& kb,
                        const ScenarioSpec& spec,
                        const semantics::HashEmbedder& emb, Rng& rng,
                        const std::string& at) {
  Triplet t;
  t.text = in.text;
  if (in.size_bits) {
    t.size_bits = *in.size_bits;
  } else if (!in.text.empty()) {
    t.size_bits = spec.triplets.bits_per_letter *
                  static_cast<double>(semantics::letter_count(in.text));
  } else {
    fail(errc::invalid_argument, at + ": needs size_bits or text");
  }
  if (in.importance) {
    t.importance = *in.importance;
  } else if (!in.text.empty() && !kb.empty()) {
    t.importance = semantics::importance_score(in.text, kb, emb);
  } else {
    fail(errc::invalid_argument,
         at + ": needs importance, or text plus a knowledge base to score against");
  }
  if (in.recovery) {
    t.recovery = *in.recovery;
  } else if (!in.text.empty()) {
    const auto toks = semantics::tokenize(in.text);
    if (toks.empty()) {
      t.recovery = 1.0;  // nothing corruptible, decoder gets it verbatim
    } else {
      const std::string received = corrupt_tokens(in.text, spec.corruption_prob, rng);
      t.recovery = semantics::recovery_score(in.text, received, emb);
    }
  } else {
    fail(errc::invalid_argument, at + ": needs recovery or text");
  }
  return t;
}

}  // namespace

double sample(const Distribution& dist, Rng& rng) {
  switch (dist.kind) {
    case Distribution::Kind::constant:
      return dist.a;
    case Distribution::Kind::uniform:
      return rng.uniform(dist.a, dist.b);
  }
  fail(errc::internal, "sample: unknown distribution kind");
}

ScenarioSpec default_spec() { return {}; }

Scenario generate_scenario(const ScenarioSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  const semantics::HashEmbedder emb(spec.embedder_dimension);
  const double noise = model::noise_power(spec.channel);

  Scenario s;
  s.channel = spec.channel;
  s.seed = spec.seed;
  s.ber = resolve_ber_model(spec.ber_model);

  const bool synthetic = spec.devices.empty();
  const std::size_t count =
      synthetic ? static_cast<std::size_t>(spec.device_count) : spec.devices.size();
  s.devices.reserve(count);

  for (std::size_t k = 0; k < count; ++k) {
    Device dev;
    const ExplicitDevice* ex = synthetic ? nullptr : &spec.devices[k];

    const double dist = (ex && ex->distance_m) ? *ex->distance_m
                                               : draw_distance(rng, spec.area_side_m);
    const double fading = (ex && ex->fading_gain) ? *ex->fading_gain : draw_fading(rng);
    dev.link = make_device_link(dist, fading, noise);

    if (synthetic) {
      dev.kb_text = spec.kb_text;
      const auto n = rng.uniform_int(spec.triplets.count_min, spec.triplets.count_max);
      dev.triplets.reserve(static_cast<std::size_t>(n));
      for (std::int64_t i = 0; i < n; ++i) {
        Triplet t;
        const auto letters =
            rng.uniform_int(spec.triplets.letters_min, spec.triplets.letters_max);
        t.size_bits = spec.triplets.bits_per_letter * static_cast<double>(letters);
        t.importance = sample(spec.triplets.importance, rng);
        t.recovery = sample(spec.triplets.recovery, rng);
        dev.triplets.push_back(std::move(t));
      }
    } else {
      dev.kb_text = ex->kb_text.empty() ? spec.kb_text : ex->kb_text;
      dev.triplets.reserve(ex->triplets.size());
      for (std::size_t n = 0; n < ex->triplets.size(); ++n) {
        const std::string at = "devices[" + std::to_string(k) + "].triplets[" +
                               std::to_string(n) + "]";
        dev.triplets.push_back(
            resolve_triplet(ex->triplets[n], dev.kb_text, spec, emb, rng, at));
      }
    }
    s.devices.push_back(std::move(dev));
  }

  validate(s);
  return s;
}

}  // namespace semcom
