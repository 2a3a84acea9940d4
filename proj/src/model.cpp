#include "semcom/model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "semcom/error.hpp"

namespace semcom {

namespace {

bool finite_pos(double v) { return std::isfinite(v) && v > 0; }

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

}  // namespace

void validate(const ChannelConfig& cfg) {
  if (!finite_pos(cfg.total_bandwidth_hz))
    fail(errc::invalid_argument, "channel: total_bandwidth_hz must be finite and > 0");
  if (!finite_pos(cfg.noise_psd_w_per_hz))
    fail(errc::invalid_argument, "channel: noise_psd_w_per_hz must be finite and > 0");
  if (!finite_pos(cfg.ber_threshold) || cfg.ber_threshold >= 1)
    fail(errc::invalid_argument, "channel: ber_threshold must be in (0, 1)");
  if (!finite_pos(cfg.time_threshold_s))
    fail(errc::invalid_argument, "channel: time_threshold_s must be finite and > 0");
  if (!finite_pos(cfg.max_power_w))
    fail(errc::invalid_argument, "channel: max_power_w must be finite and > 0");
}

DeviceLink make_device_link(double distance_m, double fading_gain,
                            double noise_power_w) {
  if (!finite_pos(distance_m))
    fail(errc::invalid_argument, "device: distance_m must be finite and > 0");
  if (!finite_pos(fading_gain))
    fail(errc::invalid_argument, "device: fading_gain must be finite and > 0");
  if (!finite_pos(noise_power_w))
    fail(errc::invalid_argument, "device: noise power must be finite and > 0");
  DeviceLink link;
  link.distance_m = distance_m;
  link.fading_gain = fading_gain;
  link.coefficient = fading_gain / (distance_m * distance_m * noise_power_w);
  return link;
}

std::size_t Scenario::triplet_count() const {
  std::size_t n = 0;
  for (const auto& d : devices) n += d.triplets.size();
  return n;
}

void validate(const Scenario& s) {
  validate(s.channel);
  const double noise = model::noise_power(s.channel);
  for (std::size_t k = 0; k < s.devices.size(); ++k) {
    const auto& d = s.devices[k];
    const std::string at = "devices[" + std::to_string(k) + "]";
    if (!finite_pos(d.link.distance_m))
      fail(errc::invalid_argument, at + ": distance_m must be finite and > 0");
    if (!finite_pos(d.link.fading_gain))
      fail(errc::invalid_argument, at + ": fading_gain must be finite and > 0");
    const double expect =
        d.link.fading_gain / (d.link.distance_m * d.link.distance_m * noise);
    if (!finite_pos(d.link.coefficient) ||
        std::abs(d.link.coefficient - expect) > 1e-9 * expect)
      fail(errc::invalid_argument,
           at + ": link coefficient inconsistent with distance/fading/noise");
    for (std::size_t n = 0; n < d.triplets.size(); ++n) {
      const auto& t = d.triplets[n];
      const std::string tn = at + ".triplets[" + std::to_string(n) + "]";
      if (!(std::isfinite(t.size_bits) && t.size_bits >= 0))
        fail(errc::invalid_argument, tn + ": size_bits must be finite and >= 0");
      if (!(std::isfinite(t.importance) && t.importance >= 0 && t.importance <= 1))
        fail(errc::invalid_argument, tn + ": importance must be in [0, 1]");
      if (!(std::isfinite(t.recovery) && t.recovery >= 0 && t.recovery <= 1))
        fail(errc::invalid_argument, tn + ": recovery must be in [0, 1]");
    }
  }
}

Selection Selection::zeros(const Scenario& s) {
  Selection sel;
  sel.alpha.assign(s.devices.size(), 0);
  sel.eta.resize(s.devices.size());
  for (std::size_t k = 0; k < s.devices.size(); ++k)
    sel.eta[k].assign(s.devices[k].triplets.size(), 0);
  return sel;
}

Selection Selection::all_ones(const Scenario& s) {
  Selection sel = zeros(s);
  for (auto& a : sel.alpha) a = 1;
  for (auto& row : sel.eta)
    for (auto& e : row) e = 1;
  return sel;
}

void validate_shape(const Selection& sel, const Scenario& s) {
  if (sel.alpha.size() != s.devices.size() || sel.eta.size() != s.devices.size())
    fail(errc::invalid_argument, "selection: device count mismatch");
  for (std::size_t k = 0; k < s.devices.size(); ++k) {
    if (sel.eta[k].size() != s.devices[k].triplets.size())
      fail(errc::invalid_argument,
           "selection: triplet count mismatch at device " + std::to_string(k));
    if (sel.alpha[k] > 1)
      fail(errc::invalid_argument, "selection: alpha entries must be 0 or 1");
    for (const auto e : sel.eta[k])
      if (e > 1)
        fail(errc::invalid_argument, "selection: eta entries must be 0 or 1");
  }
}

namespace model {

double noise_power(const ChannelConfig& cfg) {
  validate(cfg);
  return cfg.noise_psd_w_per_hz * cfg.total_bandwidth_hz;
}

double snr(double power_w, const DeviceLink& link) {
  if (!(std::isfinite(power_w) && power_w >= 0))
    fail(errc::invalid_argument, "snr: power must be finite and >= 0");
  if (!finite_pos(link.coefficient))
    fail(errc::invalid_argument, "snr: link coefficient must be finite and > 0");
  return power_w * link.coefficient;
}

double rate_bps(double band_fraction, const ChannelConfig& cfg, double gamma) {
  if (!(std::isfinite(band_fraction) && band_fraction >= 0 && band_fraction <= 1))
    fail(errc::invalid_argument, "rate: band fraction must be in [0, 1]");
  if (!(std::isfinite(gamma) && gamma >= 0))
    fail(errc::invalid_argument, "rate: snr must be finite and >= 0");
  validate(cfg);
  return band_fraction * cfg.total_bandwidth_hz * log2_1p(gamma);
}

double tx_time_s(double payload_bits, double rate) {
  if (!(std::isfinite(payload_bits) && payload_bits >= 0))
    fail(errc::invalid_argument, "tx_time: payload must be finite and >= 0");
  if (!(std::isfinite(rate) && rate >= 0))
    fail(errc::invalid_argument, "tx_time: rate must be finite and >= 0");
  if (payload_bits == 0) return 0;
  if (rate == 0) return std::numeric_limits<double>::infinity();
  return payload_bits / rate;
}

double c_threshold(const BerModel& ber, double ber_threshold) {
  const double c = ber.inverse(ber_threshold);
  if (!finite_pos(c))
    fail(errc::invalid_argument, "ber model produced a non-positive snr target");
  return c;
}

double required_power(bool selected, double c_thresh, const DeviceLink& link) {
  if (!selected) return 0;
  if (!finite_pos(c_thresh))
    fail(errc::invalid_argument, "required_power: snr target must be > 0");
  if (!finite_pos(link.coefficient))
    fail(errc::invalid_argument, "required_power: link coefficient must be > 0");
  return c_thresh / link.coefficient;
}

bool power_feasible(const DeviceLink& link, double c_thresh, double max_power_w) {
  const double need = required_power(true, c_thresh, link);
  return need <= max_power_w * (1 + 1e-12);
}

double closed_form_bandwidth(bool selected, double payload_bits,
                             const ChannelConfig& cfg, double c_thresh) {
  if (!(std::isfinite(payload_bits) && payload_bits >= 0))
    fail(errc::invalid_argument, "bandwidth: payload must be finite and >= 0");
  if (!finite_pos(c_thresh))
    fail(errc::invalid_argument, "bandwidth: snr target must be > 0");
  validate(cfg);
  if (payload_bits == 0) return 0;
  const double tb = cfg.time_threshold_s * cfg.total_bandwidth_hz;
  if (selected) return payload_bits / (tb * log2_1p(c_thresh));
  return std::numbers::ln2 * payload_bits / (tb * c_thresh);
}

double selected_bits(const Scenario& s, const Selection& sel, std::size_t k) {
  double bits = 0;
  const auto& triplets = s.devices[k].triplets;
  for (std::size_t n = 0; n < triplets.size(); ++n)
    if (sel.eta[k][n]) bits += triplets[n].size_bits;
  return bits;
}

double exact_constraint_lhs(const Selection& sel, const Scenario& s) {
  validate_shape(sel, s);
  const double c = c_threshold(s.ber_model(), s.channel.ber_threshold);
  double lhs = 0;
  for (std::size_t k = 0; k < s.devices.size(); ++k)
    lhs += closed_form_bandwidth(sel.alpha[k] != 0, selected_bits(s, sel, k),
                                 s.channel, c);
  return lhs;
}

double relaxed_constraint_lhs(const Selection& sel, const Scenario& s) {
  validate_shape(sel, s);
  const double c = c_threshold(s.ber_model(), s.channel.ber_threshold);
  const double tb = s.channel.time_threshold_s * s.channel.total_bandwidth_hz;
  double acc = 0;
  for (std::size_t k = 0; k < s.devices.size(); ++k)
    acc += (sel.alpha[k] + 1.0 / c) * selected_bits(s, sel, k);
  return std::numbers::ln2 * acc / tb;
}

}  // namespace model
}  // namespace semcom
