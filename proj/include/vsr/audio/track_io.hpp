// vsr/audio/track_io.hpp

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

#ifndef VSR_AUDIO_TRACK_IO_HPP_
#define VSR_AUDIO_TRACK_IO_HPP_

#include <string>

#include "vsr/audio/feature_track.hpp"
#include "vsr/common.hpp"

namespace vsr::audio {

// Feature track file ("LSPT"):
//   magic "LSPT" | version u32 | lpc_order u32 | sample_rate u32 |
//   frame_len u32 | hop u32 | frame_count u32
// then per frame: gain f64 | lpc_order * freq f64 | silent u8.
// All integers and floats little-endian.  Window shape and pre-emphasis are
// analysis-side parameters and are not stored; reconstruction takes them as
// flags (the pipeline defaults match on both sides).

constexpr uint32_t kTrackFormatVersion = 1;

inline std::string encode_track(const FeatureTrack &track) {
  std::string out;
  out += "LSPT";
  put_u32_le(&out, kTrackFormatVersion);
  put_u32_le(&out, uint32_t(track.config.lpc_order));
  put_u32_le(&out, uint32_t(track.sample_rate));
  put_u32_le(&out, uint32_t(track.config.frame_len));
  put_u32_le(&out, uint32_t(track.config.hop));
  put_u32_le(&out, uint32_t(track.frames.size()));
  for (const auto &frame : track.frames) {
    if (frame.order() != track.config.lpc_order)
      throw_error(ErrorCode::TrackMismatch, "frame order != track order");
    put_f64_le(&out, frame.gain);
    for (double w : frame.freqs) put_f64_le(&out, w);
    out.push_back(frame.is_silent ? char(1) : char(0));
  }
  return out;
}

inline FeatureTrack decode_track(const std::string &bytes,
                                 double pre_emphasis = 0.97,
                                 Window window = Window::kHamming) {
  ByteReader r(bytes);
  char magic[5] = {0};
  r.read_bytes(magic, 4);
  if (std::string(magic) != "LSPT")
    throw_error(ErrorCode::ParseError, "bad track magic");
  const uint32_t version = r.u32_le();
  if (version != kTrackFormatVersion)
    throw_error(ErrorCode::ParseError,
                string_printf("unsupported track version %u", version));
  FeatureTrack track;
  track.config.lpc_order = int(r.u32_le());
  track.sample_rate = int(r.u32_le());
  track.config.frame_len = int(r.u32_le());
  track.config.hop = int(r.u32_le());
  track.config.pre_emphasis = pre_emphasis;
  track.config.window = window;
  track.config.validate();
  const uint32_t count = r.u32_le();
  track.frames.resize(count);
  for (uint32_t f = 0; f < count; ++f) {
    LspFrame &frame = track.frames[f];
    frame.gain = r.f64_le();
    frame.freqs.resize(size_t(track.config.lpc_order));
    for (double &w : frame.freqs) w = r.f64_le();
    frame.is_silent = r.u8() != 0;
  }
  return track;
}

inline void write_track(const std::string &path, const FeatureTrack &track) {
  write_file_bytes(path, encode_track(track));
}

inline FeatureTrack read_track(const std::string &path,
                               double pre_emphasis = 0.97,
                               Window window = Window::kHamming) {
  return decode_track(read_file_bytes(path), pre_emphasis, window);
}

}  // namespace vsr::audio

#endif  // VSR_AUDIO_TRACK_IO_HPP_
