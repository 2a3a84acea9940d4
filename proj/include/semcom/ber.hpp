#pragma once

#include "semcom/error.hpp"

namespace semcom {

// Bit-error-rate curve of the modulation in use. Implementations must be
// strictly decreasing in the SNR so the inverse is well defined; the solver
// only ever evaluates the inverse at the configured BER target.
class BerModel {
 public:
  virtual ~BerModel() = default;

  // SNR -> bit error rate.
  virtual double forward(double gamma) const = 0;

  // Bit error rate -> SNR achieving it exactly.
  virtual double inverse(double beta) const = 0;

  virtual const char* name() const = 0;
};

// f(gamma) = 1/gamma. Crude but monotone, and cheap to invert.
class ReciprocalBer final : public BerModel {
 public:
  double forward(double gamma) const override {
    if (!(gamma > 0)) fail(errc::invalid_argument, "ber: snr must be > 0");
    return 1.0 / gamma;
  }

  double inverse(double beta) const override {
    if (!(beta > 0)) fail(errc::invalid_argument, "ber: target must be > 0");
    return 1.0 / beta;
  }

  const char* name() const override { return "reciprocal"; }

  static const ReciprocalBer& instance() {
    static const ReciprocalBer model;
    return model;
  }
};

}  // namespace semcom
