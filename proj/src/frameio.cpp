// SPDX-License-Identifier: BSD-3-Clause

#include "subpel/frameio.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace subpel {

namespace {

constexpr double kPi = std::numbers::pi;

struct PlaneLayout {
  int width;
  int height;
};

PlaneLayout chroma_layout(const RawVideoSpec& spec) {
  if (spec.chroma == ChromaFormat::kYuv420) {
    return {spec.width / 2, spec.height / 2};
  }
  return {spec.width, spec.height};
}

int bytes_per_sample(const RawVideoSpec& spec) { return spec.bit_depth == 8 ? 1 : 2; }

double sample_scale(int bit_depth) { return bit_depth == 8 ? 255.0 : 1023.0; }

// splitmix64; the fixed constants make synthetic frames reproducible across
// platforms and language ports.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

void validate(const RawVideoSpec& spec) {
  if (spec.width < 1 || spec.height < 1) {
    throw std::invalid_argument("video spec needs positive dimensions");
  }
  if (spec.bit_depth != 8 && spec.bit_depth != 10) {
    throw std::invalid_argument("bit depth must be 8 or 10, got " +
                                std::to_string(spec.bit_depth));
  }
  if (spec.chroma == ChromaFormat::kYuv420 && (spec.width % 2 != 0 || spec.height % 2 != 0)) {
    throw std::invalid_argument("4:2:0 video needs even dimensions, got " +
                                std::to_string(spec.width) + "x" + std::to_string(spec.height));
  }
}

std::size_t frame_size_bytes(const RawVideoSpec& spec) {
  validate(spec);
  const PlaneLayout chroma = chroma_layout(spec);
  const std::size_t luma = static_cast<std::size_t>(spec.width) * spec.height;
  const std::size_t chroma_samples = static_cast<std::size_t>(chroma.width) * chroma.height;
  return (luma + 2 * chroma_samples) * static_cast<std::size_t>(bytes_per_sample(spec));
}

Frame read_yuv(const std::string& path, const RawVideoSpec& spec, int frame_index) {
  validate(spec);
  if (frame_index < 0) {
    throw std::invalid_argument("frame index must be >= 0");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  const std::size_t frame_bytes = frame_size_bytes(spec);
  const std::size_t offset = frame_bytes * static_cast<std::size_t>(frame_index);
  in.seekg(0, std::ios::end);
  const auto file_size = static_cast<std::size_t>(in.tellg());
  if (file_size < offset + frame_bytes) {
    throw std::runtime_error(path + ": " + std::to_string(file_size) + " bytes, but frame " +
                             std::to_string(frame_index) + " spans bytes " +
                             std::to_string(offset) + ".." + std::to_string(offset + frame_bytes));
  }
  in.seekg(static_cast<std::streamoff>(offset));

  std::vector<unsigned char> raw(frame_bytes);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(frame_bytes));
  if (!in) {
    throw std::runtime_error(path + ": short read at byte offset " + std::to_string(offset));
  }

  Frame frame = make_frame(spec.width, spec.height, 3, 0.0, spec.bit_depth);
  const double scale = sample_scale(spec.bit_depth);
  const int bps = bytes_per_sample(spec);
  const PlaneLayout chroma = chroma_layout(spec);
  std::size_t pos = 0;

  auto next_sample = [&]() {
    double v = raw[pos];
    if (bps == 2) {
      v += 256.0 * raw[pos + 1];  // little-endian container
    }
    pos += static_cast<std::size_t>(bps);
    return v / scale;
  };

  for (std::size_t i = 0; i < frame.planes[0].size(); ++i) {
    frame.planes[0][i] = next_sample();
  }
  for (int ch = 1; ch <= 2; ++ch) {
    if (spec.chroma == ChromaFormat::kYuv444) {
      for (std::size_t i = 0; i < frame.planes[static_cast<std::size_t>(ch)].size(); ++i) {
        frame.planes[static_cast<std::size_t>(ch)][i] = next_sample();
      }
    } else {
      std::vector<double> sub(static_cast<std::size_t>(chroma.width) * chroma.height);
      for (double& s : sub) {
        s = next_sample();
      }
      for (int r = 0; r < spec.height; ++r) {
        for (int c = 0; c < spec.width; ++c) {
          frame.at(ch, c, r) = sub[static_cast<std::size_t>(r / 2) * chroma.width + c / 2];
        }
      }
    }
  }
  return frame;
}

void write_yuv(const Frame& frame, const RawVideoSpec& spec, const std::string& path) {
  validate(frame);
  validate(spec);
  if (spec.chroma != ChromaFormat::kYuv444) {
    throw std::invalid_argument("write_yuv emits 4:4:4 only");
  }
  if (frame.width != spec.width || frame.height != spec.height) {
    throw std::invalid_argument("frame is " + std::to_string(frame.width) + "x" +
                                std::to_string(frame.height) + " but spec says " +
                                std::to_string(spec.width) + "x" + std::to_string(spec.height));
  }
  if (frame.channels() != 3) {
    throw std::invalid_argument("raw YUV output needs a 3-channel frame, got " +
                                std::to_string(frame.channels()));
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  const double scale = sample_scale(spec.bit_depth);
  const double max_code = scale;
  for (const std::vector<double>& plane : frame.planes) {
    for (double s : plane) {
      double code = std::floor(s * scale + 0.5);  // round-half-up
      code = std::clamp(code, 0.0, max_code);
      const auto v = static_cast<std::uint32_t>(code);
      if (spec.bit_depth == 8) {
        out.put(static_cast<char>(v));
      } else {
        out.put(static_cast<char>(v & 0xff));
        out.put(static_cast<char>((v >> 8) & 0xff));
      }
    }
  }
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

QualityResult psnr(const Frame& a, const Frame& b) {
  if (a.width != b.width || a.height != b.height || a.channels() != b.channels()) {
    throw std::invalid_argument("psnr needs frames of identical geometry");
  }
  QualityResult result;
  const std::size_t samples = static_cast<std::size_t>(a.width) * a.height;
  double sum_psnr = 0.0;
  for (int ch = 0; ch < a.channels(); ++ch) {
    const std::vector<double>& pa = a.planes[static_cast<std::size_t>(ch)];
    const std::vector<double>& pb = b.planes[static_cast<std::size_t>(ch)];
    double acc = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
      const double d = pa[i] - pb[i];
      acc += d * d;
    }
    const double mse = acc / static_cast<double>(samples);
    const double p =
        mse == 0.0 ? std::numeric_limits<double>::infinity() : 10.0 * std::log10(1.0 / mse);
    result.mse_per_channel.push_back(mse);
    result.psnr_per_channel.push_back(p);
    sum_psnr += p;
  }
  result.psnr_avg = sum_psnr / static_cast<double>(a.channels());
  return result;
}

Frame synth_bandlimited(int width, int height, double cutoff, std::uint64_t seed, double shift_c,
                        double shift_r) {
  if (!(cutoff > 0.0 && cutoff < 1.0)) {
    throw std::invalid_argument("cutoff must lie strictly inside (0, 1)");
  }
  constexpr int kWaves = 24;
  constexpr double kAmplitude = 0.4;  // keeps samples inside [0.1, 0.9]

  std::uint64_t state = seed;
  double freq_c[kWaves];
  double freq_r[kWaves];
  double amp[kWaves];
  double phase[kWaves];
  double amp_sum = 0.0;
  for (int m = 0; m < kWaves; ++m) {
    // frequencies in cycles/sample, strictly below cutoff * Nyquist (0.5)
    freq_c[m] = (2.0 * unit_double(splitmix64(state)) - 1.0) * cutoff * 0.5;
    freq_r[m] = (2.0 * unit_double(splitmix64(state)) - 1.0) * cutoff * 0.5;
    amp[m] = 0.5 + 0.5 * unit_double(splitmix64(state));
    phase[m] = 2.0 * kPi * unit_double(splitmix64(state));
    amp_sum += amp[m];
  }
  for (int m = 0; m < kWaves; ++m) {
    amp[m] *= kAmplitude / amp_sum;
  }

  Frame frame = make_frame(width, height, 1);
  for (int r = 0; r < height; ++r) {
    const double y = static_cast<double>(r) - shift_r;
    const double env_r = std::sin(kPi * (y + 0.5) / height);
    for (int c = 0; c < width; ++c) {
      const double x = static_cast<double>(c) - shift_c;
      const double env_c = std::sin(kPi * (x + 0.5) / width);
      double acc = 0.0;
      for (int m = 0; m < kWaves; ++m) {
        acc += amp[m] * std::cos(2.0 * kPi * (freq_c[m] * x + freq_r[m] * y) + phase[m]);
      }
      frame.at(0, c, r) = 0.5 + env_c * env_c * env_r * env_r * acc;
    }
  }
  return frame;
}

}  // namespace subpel
