// vsr/audio/lpc.hpp

// Copyright 2026  VSR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VSR_AUDIO_LPC_HPP_
#define VSR_AUDIO_LPC_HPP_

#include <cmath>
#include <vector>

#include "vsr/common.hpp"

namespace vsr::audio {

/// Per-frame all-pole model.  Prediction polynomial convention:
///   A(z) = 1 + sum_k coeffs[k-1] * z^-k,    e[n] = x[n] + sum_k a_k x[n-k].
/// gain is sqrt of the final prediction error energy.
struct LpcFrame {
  double gain = 0.0;
  std::vector<double> coeffs;
  bool is_silent = false;
  // Set when the Levinson recursion hit a near-singular autocorrelation and
  // bailed out with coefficients from the last stable order (zero-padded back
  // to full order).
  bool degraded = false;

  int order() const { return int(coeffs.size()); }
};

/// r[k] = sum_n frame[n] * frame[n+k], k = 0..order.
inline std::vector<double> autocorrelate(const std::vector<double> &frame,
                                         int order) {
  if (int(frame.size()) <= order)
    throw_error(ErrorCode::SignalTooShort,
                string_printf("frame of %zu samples cannot support order %d",
                              frame.size(), order));
  std::vector<double> r(size_t(order) + 1, 0.0);
  const size_t n = frame.size();
  for (int k = 0; k <= order; ++k) {
    double acc = 0.0;
    for (size_t i = 0; i + size_t(k) < n; ++i)
      acc += frame[i] * frame[i + size_t(k)];
    r[size_t(k)] = acc;
  }
  return r;
}

// Reflection coefficients this close to 1 mark a numerically singular
// autocorrelation; the recursion stops at the previous order.
constexpr double kReflectionLimit = 1.0 - 1e-9;

/// Solves the Toeplitz normal equations for r[0..P] by the Levinson-Durbin
/// recursion.  On a near-singular r the recursion bails to the last stable
/// order, zero-pads the coefficients and sets `degraded`.
inline LpcFrame levinson_durbin(const std::vector<double> &r,
                                double silence_threshold = 1e-12,
                                std::vector<double> *reflection_out = nullptr) {
  if (r.empty()) throw_error(ErrorCode::ConfigError, "empty autocorrelation");
  const int order = int(r.size()) - 1;
  LpcFrame out;
  out.coeffs.assign(size_t(order), 0.0);
  if (reflection_out) reflection_out->clear();

  if (r[0] <= silence_threshold) {
    out.is_silent = true;
    out.gain = 0.0;
    return out;
  }

  std::vector<double> a(size_t(order) + 1, 0.0);  // a[0] unused
  double err = r[0];
  for (int i = 1; i <= order; ++i) {
    double acc = r[size_t(i)];
    for (int j = 1; j < i; ++j) acc += a[size_t(j)] * r[size_t(i - j)];
    if (err <= 0.0) {
      out.degraded = true;
      break;
    }
    const double k = -acc / err;
    if (std::abs(k) >= kReflectionLimit || !std::isfinite(k)) {
      out.degraded = true;
      break;
    }
    if (reflection_out) reflection_out->push_back(k);
    a[size_t(i)] = k;
    for (int j = 1; j <= i / 2; ++j) {
      const double tmp = a[size_t(j)] + k * a[size_t(i - j)];
      a[size_t(i - j)] += k * a[size_t(j)];
      a[size_t(j)] = tmp;
    }
    err *= (1.0 - k * k);
  }
  for (int j = 1; j <= order; ++j) out.coeffs[size_t(j - 1)] = a[size_t(j)];
  out.gain = std::sqrt(err > 0.0 ? err : 0.0);
  return out;
}

/// Rebuilds direct-form coefficients from reflection coefficients (step-up
/// recursion).  All |k| < 1 yields a stable A(z); used by tests to draw
/// random stable filters.
inline std::vector<double> reflection_to_lpc(const std::vector<double> &k) {
  std::vector<double> a(k.size() + 1, 0.0);
  for (size_t i = 1; i <= k.size(); ++i) {
    const double ki = k[i - 1];
    a[i] = ki;
    for (size_t j = 1; j <= (i) / 2; ++j) {
      const double tmp = a[j] + ki * a[i - j];
      a[i - j] += ki * a[j];
      a[j] = tmp;
    }
  }
  return std::vector<double>(a.begin() + 1, a.end());
}

}  // namespace vsr::audio

#endif  // VSR_AUDIO_LPC_HPP_
