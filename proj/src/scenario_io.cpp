#include "semcom/scenario_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "semcom/error.hpp"
#include "semcom/io.hpp"
#include "semcom/model.hpp"
#include "semcom/rng.hpp"

namespace semcom {

namespace {

using njson = nlohmann::json;
using ojson = nlohmann::ordered_json;

njson parse_json(const std::string& text) {
  try {
    return njson::parse(text);
  } catch (const njson::parse_error& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  fail(errc::parse_error, path + ": " + why);
}

void require_object(const njson& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
}

// Typo guard: every object parser lists what it understands.
void check_keys(const njson& j, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const auto& k : allowed)
      if (item.key() == k) {
        ok = true;
        break;
      }
    if (!ok) bad(path + "." + item.key(), "unknown key");
  }
}

const njson* find(const njson& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

double as_number(const njson& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

double get_number(const njson& obj, const std::string& path, const char* key,
                  double fallback) {
  const auto* j = find(obj, key);
  return j ? as_number(*j, path + "." + key) : fallback;
}

std::int64_t as_integer(const njson& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::int64_t get_integer(const njson& obj, const std::string& path,
                         const char* key, std::int64_t fallback) {
  const auto* j = find(obj, key);
  return j ? as_integer(*j, path + "." + key) : fallback;
}

std::uint64_t get_u64(const njson& obj, const std::string& path, const char* key,
                      std::uint64_t fallback) {
  const auto* j = find(obj, key);
  if (!j) return fallback;
  if (!j->is_number_unsigned() && !j->is_number_integer())
    bad(path + "." + key, "expected a non-negative integer");
  if (j->is_number_integer() && j->get<std::int64_t>() < 0)
    bad(path + "." + key, "expected a non-negative integer");
  return j->get<std::uint64_t>();
}

std::string get_string(const njson& obj, const std::string& path, const char* key,
                       const std::string& fallback) {
  const auto* j = find(obj, key);
  if (!j) return fallback;
  if (!j->is_string()) bad(path + "." + key, "expected a string");
  return j->get<std::string>();
}

void check_format(const njson& j, const std::string& expect) {
  const std::string format = get_string(j, "$", "format", expect);
  if (format != expect) bad("$.format", "expected \"" + expect + "\"");
  const auto version = get_integer(j, "$", "version", 1);
  if (version != 1) bad("$.version", "unsupported version");
  const std::string rng = get_string(j, "$", "rng", Rng::kAlgorithm);
  if (rng != Rng::kAlgorithm)
    bad("$.rng", std::string("unsupported generator (expected ") +
                     Rng::kAlgorithm + ")");
}

ChannelConfig channel_from_json(const njson* j, const std::string& path) {
  ChannelConfig cfg;
  if (!j) return cfg;
  require_object(*j, path);
  check_keys(*j, path,
             {"total_bandwidth_hz", "noise_psd_w_per_hz", "ber_threshold",
              "time_threshold_s", "max_power_w"});
  cfg.total_bandwidth_hz = get_number(*j, path, "total_bandwidth_hz", cfg.total_bandwidth_hz);
  cfg.noise_psd_w_per_hz = get_number(*j, path, "noise_psd_w_per_hz", cfg.noise_psd_w_per_hz);
  cfg.ber_threshold = get_number(*j, path, "ber_threshold", cfg.ber_threshold);
  cfg.time_threshold_s = get_number(*j, path, "time_threshold_s", cfg.time_threshold_s);
  cfg.max_power_w = get_number(*j, path, "max_power_w", cfg.max_power_w);
  return cfg;
}

ojson channel_to_json(const ChannelConfig& cfg) {
  ojson j;
  j["total_bandwidth_hz"] = cfg.total_bandwidth_hz;
  j["noise_psd_w_per_hz"] = cfg.noise_psd_w_per_hz;
  j["ber_threshold"] = cfg.ber_threshold;
  j["time_threshold_s"] = cfg.time_threshold_s;
  j["max_power_w"] = cfg.max_power_w;
  return j;
}

Distribution distribution_from_json(const njson& j, const std::string& path) {
  if (j.is_number()) return Distribution::constant(j.get<double>());
  require_object(j, path);
  check_keys(j, path, {"dist", "value", "low", "high"});
  const std::string kind = get_string(j, path, "dist", "");
  if (kind == "constant") {
    const auto* v = find(j, "value");
    if (!v) bad(path, "constant distribution needs \"value\"");
    return Distribution::constant(as_number(*v, path + ".value"));
  }
  if (kind == "uniform") {
    const auto* lo = find(j, "low");
    const auto* hi = find(j, "high");
    if (!lo || !hi) bad(path, "uniform distribution needs \"low\" and \"high\"");
    const double a = as_number(*lo, path + ".low");
    const double b = as_number(*hi, path + ".high");
    if (!(a <= b)) bad(path, "uniform distribution needs low <= high");
    return Distribution::uniform(a, b);
  }
  bad(path + ".dist", "expected \"constant\" or \"uniform\"");
}

ojson distribution_to_json(const Distribution& d) {
  ojson j;
  switch (d.kind) {
    case Distribution::Kind::constant:
      j["dist"] = "constant";
      j["value"] = d.a;
      break;
    case Distribution::Kind::uniform:
      j["dist"] = "uniform";
      j["low"] = d.a;
      j["high"] = d.b;
      break;
  }
  return j;
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
  const njson j = parse_json(text);
  require_object(j, "$");
  check_format(j, "semcom-scenario");
  check_keys(j, "$", {"format", "version", "rng", "seed", "ber_model", "channel",
                      "devices"});

  Scenario s;
  s.seed = get_u64(j, "$", "seed", 0);
  s.channel = channel_from_json(find(j, "channel"), "$.channel");
  const std::string ber = get_string(j, "$", "ber_model", "reciprocal");
  if (ber != "reciprocal")
    bad("$.ber_model", "unsupported model (supported: reciprocal)");
  const double noise = model::noise_power(s.channel);

  const auto* devices = find(j, "devices");
  if (!devices || !devices->is_array()) bad("$.devices", "expected an array");
  s.devices.reserve(devices->size());
  for (std::size_t k = 0; k < devices->size(); ++k) {
    const njson& dj = (*devices)[k];
    const std::string dp = "$.devices[" + std::to_string(k) + "]";
    require_object(dj, dp);
    check_keys(dj, dp, {"distance_m", "fading_gain", "kb_text", "triplets"});
    const auto* dist = find(dj, "distance_m");
    const auto* fade = find(dj, "fading_gain");
    if (!dist) bad(dp, "missing distance_m");
    if (!fade) bad(dp, "missing fading_gain");

    Device dev;
    dev.link = make_device_link(as_number(*dist, dp + ".distance_m"),
                                as_number(*fade, dp + ".fading_gain"), noise);
    dev.kb_text = get_string(dj, dp, "kb_text", "");

    const auto* triplets = find(dj, "triplets");
    if (!triplets || !triplets->is_array()) bad(dp + ".triplets", "expected an array");
    dev.triplets.reserve(triplets->size());
    for (std::size_t n = 0; n < triplets->size(); ++n) {
      const njson& tj = (*triplets)[n];
      const std::string tp = dp + ".triplets[" + std::to_string(n) + "]";
      require_object(tj, tp);
      check_keys(tj, tp, {"text", "size_bits", "importance", "recovery"});
      Triplet t;
      t.text = get_string(tj, tp, "text", "");
      const auto* size = find(tj, "size_bits");
      const auto* imp = find(tj, "importance");
      const auto* rec = find(tj, "recovery");
      if (!size) bad(tp, "missing size_bits");
      if (!imp) bad(tp, "missing importance");
      if (!rec) bad(tp, "missing recovery");
      t.size_bits = as_number(*size, tp + ".size_bits");
      t.importance = as_number(*imp, tp + ".importance");
      t.recovery = as_number(*rec, tp + ".recovery");
      dev.triplets.push_back(std::move(t));
    }
    s.devices.push_back(std::move(dev));
  }

  validate(s);
  return s;
}

std::string scenario_to_json(const Scenario& s) {
  validate(s);
  ojson j;
  j["format"] = "semcom-scenario";
  j["version"] = 1;
  j["rng"] = Rng::kAlgorithm;
  j["seed"] = s.seed;
  j["ber_model"] = s.ber_model().name();
  j["channel"] = channel_to_json(s.channel);
  ojson devices = ojson::array();
  for (const auto& d : s.devices) {
    ojson dj;
    dj["distance_m"] = d.link.distance_m;
    dj["fading_gain"] = d.link.fading_gain;
    if (!d.kb_text.empty()) dj["kb_text"] = d.kb_text;
    ojson triplets = ojson::array();
    for (const auto& t : d.triplets) {
      ojson tj;
      if (!t.text.empty()) tj["text"] = t.text;
      tj["size_bits"] = t.size_bits;
      tj["importance"] = t.importance;
      tj["recovery"] = t.recovery;
      triplets.push_back(std::move(tj));
    }
    dj["triplets"] = std::move(triplets);
    devices.push_back(std::move(dj));
  }
  j["devices"] = std::move(devices);
  return j.dump(2) + "\n";
}

ScenarioSpec spec_from_json(const std::string& text) {
  const njson j = parse_json(text);
  require_object(j, "$");
  check_format(j, "semcom-spec");
  check_keys(j, "$",
             {"format", "version", "rng", "seed", "device_count", "area_side_m",
              "channel", "ber_model", "embedder_dimension", "corruption_prob",
              "kb_text", "triplets", "devices"});

  ScenarioSpec spec;
  spec.seed = get_u64(j, "$", "seed", spec.seed);
  spec.area_side_m = get_number(j, "$", "area_side_m", spec.area_side_m);
  spec.channel = channel_from_json(find(j, "channel"), "$.channel");
  spec.ber_model = get_string(j, "$", "ber_model", spec.ber_model);
  const auto dim = get_integer(j, "$", "embedder_dimension",
                               static_cast<std::int64_t>(spec.embedder_dimension));
  if (dim <= 0) bad("$.embedder_dimension", "expected a positive integer");
  spec.embedder_dimension = static_cast<std::size_t>(dim);
  spec.corruption_prob = get_number(j, "$", "corruption_prob", spec.corruption_prob);
  spec.kb_text = get_string(j, "$", "kb_text", "");

  const auto* devices = find(j, "devices");
  const auto* gen = find(j, "triplets");
  if (devices && gen)
    bad("$", "give either \"devices\" or \"triplets\", not both");
  if (devices && find(j, "device_count"))
    bad("$", "\"device_count\" only applies without explicit \"devices\"");

  spec.device_count = get_integer(j, "$", "device_count", spec.device_count);

  if (gen) {
    const std::string gp = "$.triplets";
    require_object(*gen, gp);
    check_keys(*gen, gp,
               {"count_min", "count_max", "letters_min", "letters_max",
                "bits_per_letter", "importance", "recovery"});
    auto& t = spec.triplets;
    t.count_min = get_integer(*gen, gp, "count_min", t.count_min);
    t.count_max = get_integer(*gen, gp, "count_max", t.count_max);
    t.letters_min = get_integer(*gen, gp, "letters_min", t.letters_min);
    t.letters_max = get_integer(*gen, gp, "letters_max", t.letters_max);
    t.bits_per_letter = get_number(*gen, gp, "bits_per_letter", t.bits_per_letter);
    if (const auto* d = find(*gen, "importance"))
      t.importance = distribution_from_json(*d, gp + ".importance");
    if (const auto* d = find(*gen, "recovery"))
      t.recovery = distribution_from_json(*d, gp + ".recovery");
  }

  if (devices) {
    if (!devices->is_array() || devices->empty())
      bad("$.devices", "expected a non-empty array");
    spec.devices.reserve(devices->size());
    for (std::size_t k = 0; k < devices->size(); ++k) {
      const njson& dj = (*devices)[k];
      const std::string dp = "$.devices[" + std::to_string(k) + "]";
      require_object(dj, dp);
      check_keys(dj, dp, {"distance_m", "fading_gain", "kb_text", "triplets"});
      ExplicitDevice dev;
      if (const auto* v = find(dj, "distance_m"))
        dev.distance_m = as_number(*v, dp + ".distance_m");
      if (const auto* v = find(dj, "fading_gain"))
        dev.fading_gain = as_number(*v, dp + ".fading_gain");
      dev.kb_text = get_string(dj, dp, "kb_text", "");
      const auto* triplets = find(dj, "triplets");
      if (!triplets || !triplets->is_array() || triplets->empty())
        bad(dp + ".triplets", "expected a non-empty array");
      dev.triplets.reserve(triplets->size());
      for (std::size_t n = 0; n < triplets->size(); ++n) {
        const njson& tj = (*triplets)[n];
        const std::string tp = dp + ".triplets[" + std::to_string(n) + "]";
        require_object(tj, tp);
        check_keys(tj, tp, {"text", "size_bits", "importance", "recovery"});
        ExplicitTriplet t;
        t.text = get_string(tj, tp, "text", "");
        if (const auto* v = find(tj, "size_bits"))
          t.size_bits = as_number(*v, tp + ".size_bits");
        if (const auto* v = find(tj, "importance"))
          t.importance = as_number(*v, tp + ".importance");
        if (const auto* v = find(tj, "recovery"))
          t.recovery = as_number(*v, tp + ".recovery");
        dev.triplets.push_back(std::move(t));
      }
      spec.devices.push_back(std::move(dev));
    }
  }

  return spec;
}

std::string spec_to_json(const ScenarioSpec& spec) {
  ojson j;
  j["format"] = "semcom-spec";
  j["version"] = 1;
  j["seed"] = spec.seed;
  if (spec.devices.empty()) j["device_count"] = spec.device_count;
  j["area_side_m"] = spec.area_side_m;
  j["channel"] = channel_to_json(spec.channel);
  j["ber_model"] = spec.ber_model;
  j["embedder_dimension"] = spec.embedder_dimension;
  j["corruption_prob"] = spec.corruption_prob;
  if (!spec.kb_text.empty()) j["kb_text"] = spec.kb_text;
  if (spec.devices.empty()) {
    ojson g;
    g["count_min"] = spec.triplets.count_min;
    g["count_max"] = spec.triplets.count_max;
    g["letters_min"] = spec.triplets.letters_min;
    g["letters_max"] = spec.triplets.letters_max;
    g["bits_per_letter"] = spec.triplets.bits_per_letter;
    g["importance"] = distribution_to_json(spec.triplets.importance);
    g["recovery"] = distribution_to_json(spec.triplets.recovery);
    j["triplets"] = std::move(g);
  } else {
    ojson devices = ojson::array();
    for (const auto& d : spec.devices) {
      ojson dj;
      if (d.distance_m) dj["distance_m"] = *d.distance_m;
      if (d.fading_gain) dj["fading_gain"] = *d.fading_gain;
      if (!d.kb_text.empty()) dj["kb_text"] = d.kb_text;
      ojson triplets = ojson::array();
      for (const auto& t : d.triplets) {
        ojson tj;
        if (!t.text.empty()) tj["text"] = t.text;
        if (t.size_bits) tj["size_bits"] = *t.size_bits;
        if (t.importance) tj["importance"] = *t.importance;
        if (t.recovery) tj["recovery"] = *t.recovery;
        triplets.push_back(std::move(tj));
      }
      dj["triplets"] = std::move(triplets);
      devices.push_back(std::move(dj));
    }
    j["devices"] = std::move(devices);
  }
  return j.dump(2) + "\n";
}

Scenario load_scenario_file(const std::string& path) {
  return scenario_from_json(read_text_file(path));
}

ScenarioSpec load_spec_file(const std::string& path) {
  return spec_from_json(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(errc::io_error, "read failed: " + path);
  return std::move(ss).str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) fail(errc::io_error, "write failed: " + path);
}

}  // namespace semcom
