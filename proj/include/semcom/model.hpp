#pragma once

#include <cstddef>

#include "semcom/types.hpp"

namespace semcom::model {

// PSD integrated over the full band; the per-watt link coefficients divide by
// this, so splitting the band among devices never changes a device's SNR.
double noise_power(const ChannelConfig& cfg);

double snr(double power_w, const DeviceLink& link);

// Shannon rate of a fractional slice of the band, in bits per second.
double rate_bps(double band_fraction, const ChannelConfig& cfg, double gamma);

// Upload duration; +inf when there are bits to move but no rate.
double tx_time_s(double payload_bits, double rate_bps);

// SNR the BER target pins every transmitting device to.
double c_threshold(const BerModel& ber, double ber_threshold);

// Cheapest power meeting the SNR target, zero for an idle device.
double required_power(bool selected, double c_thresh, const DeviceLink& link);

// Whether the device can reach the SNR target within the power cap. Small
// relative slack so a cap sitting exactly on the requirement stays feasible.
bool power_feasible(const DeviceLink& link, double c_thresh, double max_power_w);

// Band fraction that finishes `payload_bits` exactly at the deadline when
// transmitting at the target SNR. For an idle device this is the limit of
// alpha * W / (T * B * log2(1 + alpha * C)) as alpha -> 0+, which is
// ln2 * W / (T * B * C); keeping that term makes the budget function
// continuous in alpha, which the relaxation below depends on.
double closed_form_bandwidth(bool selected, double payload_bits,
                             const ChannelConfig& cfg, double c_thresh);

// Bits this selection actually uploads for device k.
double selected_bits(const Scenario& s, const Selection& sel, std::size_t k);

// Sum over devices of closed_form_bandwidth; the band budget requires <= 1.
double exact_constraint_lhs(const Selection& sel, const Scenario& s);

// Linear upper bound on the same sum: (ln2 / (T * B)) * sum_k (alpha_k +
// 1/C) * W_k. Majorizes the exact form term by term; for a selected device
// that reduces to (1 + C) * ln(1 + C) >= C, which holds for every C > 0.
double relaxed_constraint_lhs(const Selection& sel, const Scenario& s);

}  // namespace semcom::model
