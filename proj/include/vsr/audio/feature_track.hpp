// vsr/audio/feature_track.hpp

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

#ifndef VSR_AUDIO_FEATURE_TRACK_HPP_
#define VSR_AUDIO_FEATURE_TRACK_HPP_

#include <cmath>
#include <utility>
#include <vector>

#include "vsr/audio/lpc.hpp"
#include "vsr/audio/lsp.hpp"
#include "vsr/audio/signal.hpp"
#include "vsr/common.hpp"
#include "vsr/rng.hpp"

namespace vsr::audio {

/// One LspFrame per analysis frame plus the grid that produced them.
struct FeatureTrack {
  std::vector<LspFrame> frames;
  AnalysisConfig config;
  int sample_rate = 16000;

  int frame_count() const { return int(frames.size()); }
};

// A frame whose windowed energy falls below 1e-9 of full scale is silent.
// Full scale here means r[0] of an all-ones frame, i.e. frame_len.
inline double silence_threshold(const AnalysisConfig &config) {
  return 1e-9 * double(config.frame_len);
}

/// Speech waveform -> per-frame LSP features.  Deterministic.
inline FeatureTrack analyze(const AudioSignal &signal,
                            const AnalysisConfig &config) {
  FeatureTrack track;
  track.config = config;
  track.sample_rate = signal.sample_rate;
  const auto frames = frame_signal(signal, config);
  track.frames.reserve(frames.size());
  const double threshold = silence_threshold(config);
  for (const auto &frame : frames) {
    const auto r = autocorrelate(frame, config.lpc_order);
    track.frames.push_back(lpc_to_lsp(levinson_durbin(r, threshold)));
  }
  return track;
}

namespace detail {

// Sample n belongs to the hop segment of frame min(n / hop, frames - 1);
// the ragged tail past the last full segment stays with the last frame.
inline int frame_of_sample(size_t n, int hop, int n_frames) {
  const int f = int(n / size_t(hop));
  return f < n_frames ? f : n_frames - 1;
}

// gain is the prediction error energy of the *windowed* frame; dividing by
// sqrt(sum w^2) turns it into a per-sample excitation sigma.
inline double window_rms_norm(const AnalysisConfig &config) {
  double wpow = 0.0;
  for (int n = 0; n < config.frame_len; ++n) {
    const double w = window_value(config.window, n, config.frame_len);
    wpow += w * w;
  }
  return std::sqrt(wpow);
}

inline void check_grid(const FeatureTrack &track, size_t signal_len,
                       const char *who) {
  const int expect = track.config.frame_count(signal_len);
  if (expect != track.frame_count())
    throw_error(ErrorCode::GridMismatch,
                string_printf("%s: track has %d frames, signal grid implies %d",
                              who, track.frame_count(), expect));
}

}  // namespace detail

/// Per-frame inverse filtering of the signal against the track's filters:
///   e[n] = (y[n] + sum_k a_k y[n-k]) / sigma_f
/// on the pre-emphasized signal y, with the filter history running straight
/// across frame boundaries.  Output is in the unit-scale excitation domain
/// that synthesize() consumes; silent frames emit zeros.
inline AudioSignal residual(const AudioSignal &signal,
                            const FeatureTrack &track) {
  detail::check_grid(track, signal.samples.size(), "residual");
  const AnalysisConfig &cfg = track.config;
  const int n_frames = track.frame_count();
  const std::vector<double> y =
      pre_emphasize(signal.samples, cfg.pre_emphasis);
  const double win_norm = detail::window_rms_norm(cfg);

  std::vector<LpcFrame> lpc(track.frames.size());
  for (size_t f = 0; f < track.frames.size(); ++f)
    lpc[f] = lsp_to_lpc(track.frames[f]);

  AudioSignal out;
  out.sample_rate = signal.sample_rate;
  out.samples.assign(y.size(), 0.0);
  for (size_t n = 0; n < y.size(); ++n) {
    const int f = detail::frame_of_sample(n, cfg.hop, n_frames);
    const LpcFrame &a = lpc[size_t(f)];
    if (a.is_silent) continue;
    double pred = y[n];
    for (int k = 1; k <= a.order(); ++k)
      if (n >= size_t(k)) pred += a.coeffs[size_t(k - 1)] * y[n - size_t(k)];
    const double sigma = a.gain / win_norm;
    out.samples[n] = sigma > 0.0 ? pred / sigma : 0.0;
  }
  return out;
}

struct Excitation {
  enum class Kind { kWhiteNoise, kProvided };
  Kind kind = Kind::kWhiteNoise;
  uint64_t seed = 0;
  AudioSignal provided;

  static Excitation white_noise(uint64_t seed) {
    Excitation e;
    e.kind = Kind::kWhiteNoise;
    e.seed = seed;
    return e;
  }
  static Excitation from_signal(AudioSignal sig) {
    Excitation e;
    e.kind = Kind::kProvided;
    e.provided = std::move(sig);
    return e;
  }
};

/// Drives the track's all-pole filters 1/A(z) with a gain-scaled excitation,
/// filter state carried across frame boundaries, then de-emphasizes and
/// clips to [-1, 1].  Exact inverse of residual() over non-silent spans.
inline AudioSignal synthesize(const FeatureTrack &track,
                              const Excitation &excitation) {
  const AnalysisConfig &cfg = track.config;
  const int n_frames = track.frame_count();
  if (n_frames == 0)
    return AudioSignal{{}, track.sample_rate};

  std::vector<double> exc;
  if (excitation.kind == Excitation::Kind::kProvided) {
    exc = excitation.provided.samples;
    if (cfg.frame_count(exc.size()) != n_frames)
      throw_error(
          ErrorCode::GridMismatch,
          string_printf("synthesize: excitation of %zu samples implies %d "
                        "frames, track has %d",
                        exc.size(), cfg.frame_count(exc.size()), n_frames));
  } else {
    Rng rng(excitation.seed);
    exc.resize(cfg.grid_span(n_frames));
    for (double &v : exc) v = rng.normal();
  }

  std::vector<LpcFrame> lpc(track.frames.size());
  for (size_t f = 0; f < track.frames.size(); ++f)
    lpc[f] = lsp_to_lpc(track.frames[f]);
  const double win_norm = detail::window_rms_norm(cfg);

  std::vector<double> y(exc.size(), 0.0);
  for (size_t n = 0; n < exc.size(); ++n) {
    const int f = detail::frame_of_sample(n, cfg.hop, n_frames);
    const LpcFrame &a = lpc[size_t(f)];
    if (a.is_silent) {
      y[n] = 0.0;
      continue;
    }
    const double sigma = a.gain / win_norm;
    double v = sigma * exc[n];
    for (int k = 1; k <= a.order(); ++k)
      if (n >= size_t(k)) v -= a.coeffs[size_t(k - 1)] * y[n - size_t(k)];
    y[n] = v;
  }

  AudioSignal out;
  out.sample_rate = track.sample_rate;
  out.samples = de_emphasize(y, cfg.pre_emphasis);
  for (double &v : out.samples) v = std::min(1.0, std::max(-1.0, v));
  return out;
}

}  // namespace vsr::audio

#endif  // VSR_AUDIO_FEATURE_TRACK_HPP_
