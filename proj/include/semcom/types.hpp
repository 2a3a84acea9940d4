#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "semcom/ber.hpp"

namespace semcom {

// Shared radio parameters. SI units throughout: watts, hertz, seconds.
struct ChannelConfig {
  double total_bandwidth_hz = 1e6;
  double noise_psd_w_per_hz = 1e-17;
  double ber_threshold = 1e-5;
  double time_threshold_s = 8e-3;
  double max_power_w = 0.01;
};

// Throws on non-finite or non-positive fields, or ber_threshold >= 1.
void validate(const ChannelConfig& cfg);

// One knowledge unit a device wants to upload, with its wire cost and the
// two scores the objective weighs it by.
struct Triplet {
  std::string text;       // empty when scores were supplied directly
  double size_bits = 0;   // >= 0
  double importance = 0;  // in [0,1]
  double recovery = 0;    // in [0,1]
};

// Large-scale path loss folded together with the fading draw and the noise
// power: coefficient = |h|^2 / (d^2 * noise_w), so SNR = P * coefficient.
struct DeviceLink {
  double distance_m = 0;
  double fading_gain = 0;  // |h|^2
  double coefficient = 0;  // per watt of transmit power
};

DeviceLink make_device_link(double distance_m, double fading_gain,
                            double noise_power_w);

struct Device {
  DeviceLink link;
  std::string kb_text;  // knowledge-base text the scores were derived from
  std::vector<Triplet> triplets;
};

struct Scenario {
  ChannelConfig channel;
  std::vector<Device> devices;
  std::uint64_t seed = 0;  // generator seed; 0 for hand-written inputs
  std::shared_ptr<const BerModel> ber;  // null means the reciprocal default

  std::size_t device_count() const { return devices.size(); }
  std::size_t triplet_count() const;
  const BerModel& ber_model() const {
    return ber ? *ber : static_cast<const BerModel&>(ReciprocalBer::instance());
  }
};

// Checks channel plus every device: positive distance and fading, coefficient
// consistent with them, scores inside [0,1], sizes >= 0.
void validate(const Scenario& s);

// Binary decisions: alpha[k] selects device k, eta[k][n] its n-th triplet.
struct Selection {
  std::vector<std::uint8_t> alpha;
  std::vector<std::vector<std::uint8_t>> eta;

  static Selection zeros(const Scenario& s);
  static Selection all_ones(const Scenario& s);
};

// Throws unless the alpha/eta shape mirrors the scenario's device/triplet
// layout and every entry is 0 or 1.
void validate_shape(const Selection& sel, const Scenario& s);

struct Allocation {
  std::vector<double> power_w;
  std::vector<double> band_fraction;
};

}  // namespace semcom
