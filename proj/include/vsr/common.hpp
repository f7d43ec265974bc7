// vsr/common.hpp

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

#ifndef VSR_COMMON_HPP_
#define VSR_COMMON_HPP_

#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsr {

enum class ErrorCode {
  SignalTooShort,
  NumericalBreakdown,
  RootIsolationFailure,
  InvalidOrdering,
  GridMismatch,
  LengthMismatch,
  DimensionMismatch,
  ImageTooSmall,
  ShapeMismatch,
  ViewCountMismatch,
  EmptyViewSet,
  EmptyResults,
  ParseError,
  ViewFrameCountMismatch,
  MissingFile,
  NonFiniteLoss,
  TrackMismatch,
  ToolFailure,
  IoError,
  ConfigError,
};

inline const char *error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SignalTooShort: return "SignalTooShort";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::RootIsolationFailure: return "RootIsolationFailure";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ImageTooSmall: return "ImageTooSmall";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ViewCountMismatch: return "ViewCountMismatch";
    case ErrorCode::EmptyViewSet: return "EmptyViewSet";
    case ErrorCode::EmptyResults: return "EmptyResults";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ViewFrameCountMismatch: return "ViewFrameCountMismatch";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::TrackMismatch: return "TrackMismatch";
    case ErrorCode::ToolFailure: return "ToolFailure";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

inline std::string string_printf(const char *fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  char buf[1024];
  std::vsnprintf(buf, sizeof(buf), fmt, ap);
  va_end(ap);
  return std::string(buf);
}

// Little-endian scalar IO.  All on-disk formats in this project are
// little-endian regardless of host order.

inline void put_u32_le(std::string *out, uint32_t v) {
  char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff),
               char((v >> 24) & 0xff)};
  out->append(b, 4);
}

inline void put_u16_le(std::string *out, uint16_t v) {
  char b[2] = {char(v & 0xff), char((v >> 8) & 0xff)};
  out->append(b, 2);
}

inline void put_f64_le(std::string *out, double v) {
  uint64_t u;
  std::memcpy(&u, &v, 8);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = char((u >> (8 * i)) & 0xff);
  out->append(b, 8);
}

class ByteReader {
 public:
  ByteReader(const uint8_t *data, size_t size) : data_(data), size_(size) {}
  explicit ByteReader(const std::string &s)
      : data_(reinterpret_cast<const uint8_t *>(s.data())), size_(s.size()) {}

  size_t remaining() const { return size_ - pos_; }
  size_t pos() const { return pos_; }

  void read_bytes(void *dst, size_t n) {
    if (remaining() < n) throw_error(ErrorCode::ParseError, "truncated input");
    std::memcpy(dst, data_ + pos_, n);
    pos_ += n;
  }
  void skip(size_t n) {
    if (remaining() < n) throw_error(ErrorCode::ParseError, "truncated input");
    pos_ += n;
  }
  uint8_t u8() {
    uint8_t v;
    read_bytes(&v, 1);
    return v;
  }
  uint16_t u16_le() {
    uint8_t b[2];
    read_bytes(b, 2);
    return uint16_t(b[0]) | uint16_t(b[1]) << 8;
  }
  uint32_t u32_le() {
    uint8_t b[4];
    read_bytes(b, 4);
    return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 |
           uint32_t(b[3]) << 24;
  }
  uint32_t u32_be() {
    uint8_t b[4];
    read_bytes(b, 4);
    return uint32_t(b[3]) | uint32_t(b[2]) << 8 | uint32_t(b[1]) << 16 |
           uint32_t(b[0]) << 24;
  }
  double f64_le() {
    uint8_t b[8];
    read_bytes(b, 8);
    uint64_t u = 0;
    for (int i = 7; i >= 0; --i) u = (u << 8) | b[i];
    double v;
    std::memcpy(&v, &u, 8);
    return v;
  }

 private:
  const uint8_t *data_;
  size_t size_;
  size_t pos_ = 0;
};

inline std::string read_file_bytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_error(ErrorCode::MissingFile, path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (!in.good() && !in.eof()) throw_error(ErrorCode::IoError, "read " + path);
  return bytes;
}

inline void write_file_bytes(const std::string &path,
                             const std::string &bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw_error(ErrorCode::IoError, "open " + path);
  out.write(bytes.data(), std::streamsize(bytes.size()));
  if (!out.good()) throw_error(ErrorCode::IoError, "write " + path);
}

inline bool all_finite(const std::vector<double> &v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace vsr

#endif  // VSR_COMMON_HPP_
