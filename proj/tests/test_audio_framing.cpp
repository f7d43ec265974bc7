// tests/test_audio_framing.cpp

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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "vsr/audio/signal.hpp"

using namespace vsr;
using namespace vsr::audio;

namespace {

AnalysisConfig basic_config(int frame_len, int hop, double pre = 0.0,
                            Window w = Window::kRectangular) {
  AnalysisConfig cfg;
  cfg.frame_len = frame_len;
  cfg.hop = hop;
  cfg.lpc_order = 2;
  cfg.pre_emphasis = pre;
  cfg.window = w;
  return cfg;
}

}  // namespace

TEST_CASE("frame count follows floor((len - frame_len)/hop) + 1") {
  AudioSignal sig{std::vector<double>(480, 0.25), 16000};
  auto frames = frame_signal(sig, basic_config(240, 80));
  CHECK(frames.size() == 4);
  CHECK(frames[0].size() == 240);
}

TEST_CASE("constant signal with rectangular window gives identical frames") {
  AudioSignal sig{std::vector<double>(400, 0.5), 16000};
  auto frames = frame_signal(sig, basic_config(100, 40));
  REQUIRE(frames.size() >= 2);
  for (size_t f = 1; f < frames.size(); ++f) CHECK(frames[f] == frames[0]);
}

TEST_CASE("Hamming window on all-ones frame reproduces window coefficients") {
  const int len = 241;  // odd length puts the peak exactly at the center
  AudioSignal sig{std::vector<double>(size_t(len), 1.0), 16000};
  auto frames =
      frame_signal(sig, basic_config(len, len, 0.0, Window::kHamming));
  REQUIRE(frames.size() == 1);
  const auto &frame = frames[0];
  for (int n = 0; n < len; ++n) {
    const double expected =
        0.54 - 0.46 * std::cos(2.0 * M_PI * double(n) / double(len - 1));
    CHECK(frame[size_t(n)] == Catch::Approx(expected).margin(1e-12));
  }
  CHECK(frame[size_t((len - 1) / 2)] == Catch::Approx(1.0).margin(1e-12));
  CHECK(frame[0] == Catch::Approx(0.08).margin(1e-12));
  CHECK(frame[size_t(len - 1)] == Catch::Approx(0.08).margin(1e-12));
}

TEST_CASE("signal shorter than one frame is rejected") {
  AudioSignal sig{std::vector<double>(100, 0.0), 16000};
  try {
    frame_signal(sig, basic_config(240, 80));
    FAIL("expected SignalTooShort");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::SignalTooShort);
  }
}

TEST_CASE("pre-emphasis runs before windowing") {
  AudioSignal sig{{1.0, 1.0, 1.0, 1.0}, 8000};
  auto frames = frame_signal(sig, basic_config(4, 4, 0.5));
  REQUIRE(frames.size() == 1);
  CHECK(frames[0][0] == Catch::Approx(1.0));   // x[-1] = 0
  CHECK(frames[0][1] == Catch::Approx(0.5));
  CHECK(frames[0][2] == Catch::Approx(0.5));
  CHECK(frames[0][3] == Catch::Approx(0.5));
}

TEST_CASE("de-emphasis inverts pre-emphasis") {
  std::vector<double> x{0.1, -0.4, 0.9, 0.2, -0.7};
  auto y = pre_emphasize(x, 0.97);
  auto back = de_emphasize(y, 0.97);
  for (size_t i = 0; i < x.size(); ++i)
    CHECK(back[i] == Catch::Approx(x[i]).margin(1e-15));
}

TEST_CASE("video-locked config derives hop from fps") {
  auto cfg = AnalysisConfig::for_video(16000, 30.0, 16);
  CHECK(cfg.hop == 533);
  CHECK(cfg.frame_len == 1066);
  auto cfg25 = AnalysisConfig::for_video(16000, 25.0, 16);
  CHECK(cfg25.hop == 640);
}
