// src/io.cpp

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "sigfeat/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sigfeat {

namespace {

std::uint32_t read_u32le(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint16_t read_u16le(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

void write_u32le(std::ostream& out, std::uint32_t v) {
  const unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                              static_cast<unsigned char>((v >> 8) & 0xff),
                              static_cast<unsigned char>((v >> 16) & 0xff),
                              static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

void write_u16le(std::ostream& out, std::uint16_t v) {
  const unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                              static_cast<unsigned char>((v >> 8) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 2);
}

void write_f32le(std::ostream& out, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  write_u32le(out, bits);
}

float read_f32le(std::istream& in) {
  const std::uint32_t bits = read_u32le(in);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

}  // namespace

Waveform read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");
  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0)
    throw std::runtime_error(path + ": not a RIFF/WAV file");
  read_u32le(in);  // riff size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0)
    throw std::runtime_error(path + ": not a RIFF/WAV file");

  Waveform w;
  bool have_fmt = false;
  while (in.read(tag, 4)) {
    std::uint32_t chunk_size = read_u32le(in);
    if (!in) break;
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      const std::uint16_t format = read_u16le(in);
      const std::uint16_t channels = read_u16le(in);
      const std::uint32_t rate = read_u32le(in);
      read_u32le(in);  // byte rate
      read_u16le(in);  // block align
      const std::uint16_t bits = read_u16le(in);
      if (chunk_size > 16) in.ignore(chunk_size - 16);
      if (format != 1) throw std::runtime_error(path + ": only PCM WAV is supported");
      if (bits != 16) throw std::runtime_error(path + ": only 16-bit samples are supported");
      if (channels != 1) throw std::runtime_error(path + ": only mono input is supported");
      w.sample_rate_hz = static_cast<int>(rate);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw std::runtime_error(path + ": data chunk before fmt chunk");
      const std::size_t n = chunk_size / 2;
      w.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint16_t raw = read_u16le(in);
        w.samples[i] = static_cast<std::int16_t>(raw) / 32768.0;
      }
      if (!in) throw std::runtime_error(path + ": truncated data chunk");
      return w;
    } else {
      in.ignore(chunk_size + (chunk_size & 1));  // chunks are word-aligned
    }
  }
  throw std::runtime_error(path + ": no data chunk found");
}

void write_wav(const Waveform& w, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write");
  const std::uint32_t n = static_cast<std::uint32_t>(w.samples.size());
  const std::uint32_t data_bytes = n * 2;
  out.write("RIFF", 4);
  write_u32le(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32le(out, 16);
  write_u16le(out, 1);  // PCM
  write_u16le(out, 1);  // mono
  write_u32le(out, static_cast<std::uint32_t>(w.sample_rate_hz));
  write_u32le(out, static_cast<std::uint32_t>(w.sample_rate_hz) * 2);
  write_u16le(out, 2);
  write_u16le(out, 16);
  out.write("data", 4);
  write_u32le(out, data_bytes);
  for (double s : w.samples) {
    const double clipped = std::clamp(s, -1.0, 1.0);
    const int v = static_cast<int>(std::lround(clipped * 32767.0));
    write_u16le(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

void write_fmx(const FeatureMatrix& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write");
  out.write("FMX1", 4);
  write_u32le(out, static_cast<std::uint32_t>(f.values.rows()));
  write_u32le(out, static_cast<std::uint32_t>(f.values.cols()));
  write_u32le(out, static_cast<std::uint32_t>(f.kind));
  write_f32le(out, static_cast<float>(f.frame_shift_ms));
  for (double v : f.values.data()) write_f32le(out, static_cast<float>(v));
  if (!out) throw std::runtime_error(path + ": write failed");
}

FeatureMatrix read_fmx(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "FMX1", 4) != 0)
    throw std::runtime_error(path + ": not an fmx file");
  const std::uint32_t rows = read_u32le(in);
  const std::uint32_t cols = read_u32le(in);
  const std::uint32_t kind = read_u32le(in);
  const float shift = read_f32le(in);
  if (!in) throw std::runtime_error(path + ": truncated header");
  if (kind < 1 || kind > 14) throw std::runtime_error(path + ": unknown feature kind code");

  FeatureMatrix f;
  f.kind = static_cast<FeatureKind>(kind);
  f.frame_shift_ms = shift;
  f.values = Matrix(rows, cols);
  for (double& v : f.values.data()) v = read_f32le(in);
  if (!in) throw std::runtime_error(path + ": truncated data");
  return f;
}

void write_csv(const FeatureMatrix& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot write");
  char buf[64];
  for (std::size_t i = 0; i < f.values.rows(); ++i) {
    const auto row = f.values.row(i);
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.9g", row[c]);
      out << buf << (c + 1 < row.size() ? "," : "");
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

FeatureMatrix read_csv(const std::string& path, FeatureKind hint, double frame_shift_ms) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": bad value '" +
                                 cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": ragged row");
    rows.push_back(std::move(row));
  }
  FeatureMatrix f;
  f.kind = hint;
  f.frame_shift_ms = frame_shift_ms;
  f.values = Matrix(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy(rows[i].begin(), rows[i].end(), f.values.row(i).data());
  return f;
}

}  // namespace sigfeat
