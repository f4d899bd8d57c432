// Copyright 2026 The wl1 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WL1_AUDIO_IO_HPP_
#define WL1_AUDIO_IO_HPP_

#include <string>

#include "wl1/types.hpp"

namespace wl1 {

enum class AudioFormat {
  kWav16Mono,  // RIFF/WAVE, PCM 16-bit little-endian, single channel
  kRawF64,     // raw little-endian doubles, no header
};

struct AudioData {
  Vector samples;
  double sample_rate_hz;
};

// Loads an audio file. WAV samples are normalized to [-1, 1) by dividing by
// 32768; the sample rate comes from the header. Raw doubles are read as-is
// and tagged with raw_sample_rate_hz.
AudioData load_audio(const std::string& path, AudioFormat format,
                     double raw_sample_rate_hz = 0.0);

// Writes samples as raw little-endian doubles (the kRawF64 format).
void save_raw_f64(const std::string& path, const Vector& samples);

}  // namespace wl1

#endif  // WL1_AUDIO_IO_HPP_
