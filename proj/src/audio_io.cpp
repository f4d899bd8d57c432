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

#include "wl1/audio_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace wl1 {
namespace {

// This codebase only targets little-endian hosts; WAV and kRawF64 payloads
// are little-endian on disk, so plain memcpy round-trips the bytes.

std::vector<char> read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  return bytes;
}

std::uint32_t read_u32(const std::vector<char>& b, std::size_t off) {
  std::uint32_t v;
  std::memcpy(&v, b.data() + off, 4);
  return v;
}

std::uint16_t read_u16(const std::vector<char>& b, std::size_t off) {
  std::uint16_t v;
  std::memcpy(&v, b.data() + off, 2);
  return v;
}

bool tag_is(const std::vector<char>& b, std::size_t off, const char* tag) {
  return std::memcmp(b.data() + off, tag, 4) == 0;
}

AudioData load_wav16_mono(const std::string& path) {
  const auto bytes = read_all(path);
  if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") ||
      !tag_is(bytes, 8, "WAVE")) {
    throw std::runtime_error("not a RIFF/WAVE file: " + path);
  }
  double rate = 0.0;
  bool have_fmt = false;
  std::size_t off = 12;
  while (off + 8 <= bytes.size()) {
    const std::uint32_t chunk_size = read_u32(bytes, off + 4);
    const std::size_t body = off + 8;
    if (body + chunk_size > bytes.size()) {
      throw std::runtime_error("truncated WAV chunk in " + path);
    }
    if (tag_is(bytes, off, "fmt ")) {
      if (chunk_size < 16) throw std::runtime_error("short fmt chunk: " + path);
      const std::uint16_t audio_format = read_u16(bytes, body);
      const std::uint16_t channels = read_u16(bytes, body + 2);
      rate = static_cast<double>(read_u32(bytes, body + 4));
      const std::uint16_t bits = read_u16(bytes, body + 14);
      if (audio_format != 1) {
        throw std::runtime_error("WAV is not PCM: " + path);
      }
      if (channels != 1) {
        throw std::runtime_error("WAV is not mono: " + path);
      }
      if (bits != 16) {
        throw std::runtime_error("WAV is not 16-bit: " + path);
      }
      have_fmt = true;
    } else if (tag_is(bytes, off, "data")) {
      if (!have_fmt) throw std::runtime_error("data before fmt: " + path);
      const std::size_t count = chunk_size / 2;
      Vector samples(static_cast<Index>(count));
      for (std::size_t i = 0; i < count; ++i) {
        std::int16_t s;
        std::memcpy(&s, bytes.data() + body + 2 * i, 2);
        samples[static_cast<Index>(i)] = static_cast<double>(s) / 32768.0;
      }
      return AudioData{std::move(samples), rate};
    }
    off = body + chunk_size + (chunk_size % 2);  // chunks are word-aligned
  }
  throw std::runtime_error("WAV has no data chunk: " + path);
}

AudioData load_raw_f64(const std::string& path, double rate) {
  const auto bytes = read_all(path);
  if (bytes.size() % 8 != 0) {
    throw std::runtime_error("raw-f64 length not a multiple of 8: " + path);
  }
  const std::size_t count = bytes.size() / 8;
  Vector samples(static_cast<Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    double v;
    std::memcpy(&v, bytes.data() + 8 * i, 8);
    samples[static_cast<Index>(i)] = v;
  }
  return AudioData{std::move(samples), rate};
}

}  // namespace

AudioData load_audio(const std::string& path, AudioFormat format,
                     double raw_sample_rate_hz) {
  switch (format) {
    case AudioFormat::kWav16Mono:
      return load_wav16_mono(path);
    case AudioFormat::kRawF64:
      return load_raw_f64(path, raw_sample_rate_hz);
  }
  throw std::invalid_argument("load_audio: unknown format");
}

void save_raw_f64(const std::string& path, const Vector& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (Index i = 0; i < samples.size(); ++i) {
    const double v = samples[i];
    char buf[8];
    std::memcpy(buf, &v, 8);
    out.write(buf, 8);
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace wl1
