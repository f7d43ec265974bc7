// vsr/audio/wav.hpp

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

#ifndef VSR_AUDIO_WAV_HPP_
#define VSR_AUDIO_WAV_HPP_

#include <cmath>
#include <cstdint>
#include <string>

#include "vsr/audio/signal.hpp"
#include "vsr/common.hpp"

namespace vsr::audio {

// PCM 16-bit signed little-endian, mono.  Samples map to [-1, 1] by
// division by 32768.

inline std::string encode_wav(const AudioSignal &signal) {
  std::string data;
  data.reserve(signal.samples.size() * 2);
  for (double x : signal.samples) {
    long v = std::lround(x * 32768.0);
    if (v > 32767) v = 32767;
    if (v < -32768) v = -32768;
    put_u16_le(&data, uint16_t(int16_t(v)));
  }
  std::string out;
  out += "RIFF";
  put_u32_le(&out, uint32_t(36 + data.size()));
  out += "WAVEfmt ";
  put_u32_le(&out, 16);                                   // fmt chunk size
  put_u16_le(&out, 1);                                    // PCM
  put_u16_le(&out, 1);                                    // mono
  put_u32_le(&out, uint32_t(signal.sample_rate));
  put_u32_le(&out, uint32_t(signal.sample_rate) * 2);     // byte rate
  put_u16_le(&out, 2);                                    // block align
  put_u16_le(&out, 16);                                   // bits per sample
  out += "data";
  put_u32_le(&out, uint32_t(data.size()));
  out += data;
  return out;
}

inline AudioSignal decode_wav(const std::string &bytes) {
  ByteReader r(bytes);
  char tag[5] = {0};
  r.read_bytes(tag, 4);
  if (std::string(tag) != "RIFF")
    throw_error(ErrorCode::ParseError, "not a RIFF file");
  r.u32_le();
  r.read_bytes(tag, 4);
  if (std::string(tag) != "WAVE")
    throw_error(ErrorCode::ParseError, "not a WAVE file");

  AudioSignal out;
  bool have_fmt = false;
  while (r.remaining() >= 8) {
    r.read_bytes(tag, 4);
    const uint32_t size = r.u32_le();
    const std::string chunk(tag);
    if (chunk == "fmt ") {
      if (size < 16) throw_error(ErrorCode::ParseError, "short fmt chunk");
      const uint16_t format = r.u16_le();
      const uint16_t channels = r.u16_le();
      const uint32_t rate = r.u32_le();
      r.u32_le();  // byte rate
      r.u16_le();  // block align
      const uint16_t bits = r.u16_le();
      r.skip(size - 16);
      if (format != 1 || bits != 16)
        throw_error(ErrorCode::ParseError,
                    string_printf("only PCM16 supported (format %u, %u bits)",
                                  format, bits));
      if (channels != 1)
        throw_error(ErrorCode::ParseError,
                    string_printf("only mono supported, file has %u channels",
                                  channels));
      out.sample_rate = int(rate);
      have_fmt = true;
    } else if (chunk == "data") {
      if (!have_fmt)
        throw_error(ErrorCode::ParseError, "data chunk before fmt chunk");
      const size_t n = size / 2;
      out.samples.resize(n);
      for (size_t i = 0; i < n; ++i)
        out.samples[i] = double(int16_t(r.u16_le())) / 32768.0;
      return out;
    } else {
      r.skip(size + (size & 1));  // chunks are word-aligned
    }
  }
  throw_error(ErrorCode::ParseError, "no data chunk");
}

inline void write_wav(const std::string &path, const AudioSignal &signal) {
  write_file_bytes(path, encode_wav(signal));
}

inline AudioSignal read_wav(const std::string &path) {
  return decode_wav(read_file_bytes(path));
}

}  // namespace vsr::audio

#endif  // VSR_AUDIO_WAV_HPP_
