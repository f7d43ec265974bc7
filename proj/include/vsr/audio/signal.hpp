// vsr/audio/signal.hpp

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

#ifndef VSR_AUDIO_SIGNAL_HPP_
#define VSR_AUDIO_SIGNAL_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "vsr/common.hpp"

namespace vsr::audio {

/// Mono sample sequence in [-1, 1] with its sample rate.
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate = 16000;

  size_t size() const { return samples.size(); }
  double duration_seconds() const {
    return double(samples.size()) / double(sample_rate);
  }
};

enum class Window { kHamming, kHann, kRectangular };

inline double window_value(Window w, int n, int len) {
  if (len <= 1) return 1.0;
  const double t = double(n) / double(len - 1);
  switch (w) {
    case Window::kHamming:
      return 0.54 - 0.46 * std::cos(2.0 * M_PI * t);
    case Window::kHann:
      return 0.5 * (1.0 - std::cos(2.0 * M_PI * t));
    case Window::kRectangular:
      return 1.0;
  }
  return 1.0;
}

inline std::vector<double> make_window(Window w, int len) {
  std::vector<double> out(size_t(len));
  for (int n = 0; n < len; ++n) out[size_t(n)] = window_value(w, n, len);
  return out;
}

/// Short-time analysis parameters.  The frame grid is normally tied to the
/// video frame rate: hop = round(sample_rate / fps) so one feature frame
/// lands on each video frame, frame_len = 2 * hop.
struct AnalysisConfig {
  int frame_len = 0;
  int hop = 0;
  int lpc_order = 16;
  double pre_emphasis = 0.97;
  Window window = Window::kHamming;

  void validate() const {
    if (hop <= 0 || hop > frame_len)
      throw_error(ErrorCode::ConfigError, "require 0 < hop <= frame_len");
    if (lpc_order < 2 || lpc_order >= frame_len)
      throw_error(ErrorCode::ConfigError, "require 2 <= lpc_order < frame_len");
    if (pre_emphasis < 0.0 || pre_emphasis >= 1.0)
      throw_error(ErrorCode::ConfigError, "pre_emphasis must be in [0, 1)");
  }

  int frame_count(size_t signal_len) const {
    if (signal_len < size_t(frame_len)) return 0;
    return int((signal_len - size_t(frame_len)) / size_t(hop)) + 1;
  }

  // Number of samples spanned by `frames` analysis frames.
  size_t grid_span(int frames) const {
    if (frames <= 0) return 0;
    return size_t(frames - 1) * size_t(hop) + size_t(frame_len);
  }

  static AnalysisConfig for_video(int sample_rate, double fps, int lpc_order,
                                  double pre_emphasis = 0.97,
                                  Window window = Window::kHamming) {
    AnalysisConfig cfg;
    cfg.hop = int(std::lround(double(sample_rate) / fps));
    cfg.frame_len = 2 * cfg.hop;
    cfg.lpc_order = lpc_order;
    cfg.pre_emphasis = pre_emphasis;
    cfg.window = window;
    cfg.validate();
    return cfg;
  }
};

/// y[n] = x[n] - c * x[n-1], with x[-1] = 0.
inline std::vector<double> pre_emphasize(const std::vector<double> &x,
                                         double c) {
  std::vector<double> y(x.size());
  double prev = 0.0;
  for (size_t n = 0; n < x.size(); ++n) {
    y[n] = x[n] - c * prev;
    prev = x[n];
  }
  return y;
}

/// Inverse of pre_emphasize: x[n] = y[n] + c * x[n-1].
inline std::vector<double> de_emphasize(const std::vector<double> &y,
                                        double c) {
  std::vector<double> x(y.size());
  double prev = 0.0;
  for (size_t n = 0; n < y.size(); ++n) {
    x[n] = y[n] + c * prev;
    prev = x[n];
  }
  return x;
}

/// Slices the pre-emphasized signal into hop-spaced windowed frames.
inline std::vector<std::vector<double>> frame_signal(
    const AudioSignal &signal, const AnalysisConfig &config) {
  config.validate();
  if (signal.samples.size() < size_t(config.frame_len))
    throw_error(ErrorCode::SignalTooShort,
                string_printf("signal has %zu samples, frame_len is %d",
                              signal.samples.size(), config.frame_len));
  const std::vector<double> emph =
      pre_emphasize(signal.samples, config.pre_emphasis);
  const std::vector<double> win = make_window(config.window, config.frame_len);
  const int n_frames = config.frame_count(signal.samples.size());
  std::vector<std::vector<double>> frames(size_t(n_frames));
  for (int f = 0; f < n_frames; ++f) {
    const size_t start = size_t(f) * size_t(config.hop);
    std::vector<double> frame(size_t(config.frame_len));
    for (int n = 0; n < config.frame_len; ++n)
      frame[size_t(n)] = emph[start + size_t(n)] * win[size_t(n)];
    frames[size_t(f)] = std::move(frame);
  }
  return frames;
}

}  // namespace vsr::audio

#endif  // VSR_AUDIO_SIGNAL_HPP_
