// SPDX-License-Identifier: BSD-3-Clause

#ifndef SUBPEL_FRAMEIO_HPP_
#define SUBPEL_FRAMEIO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "subpel/frame.hpp"

namespace subpel {

enum class ChromaFormat {
  kYuv444,
  kYuv420,
};

// Raw planar YUV: Y then U then V per frame, frames concatenated. 8-bit
// unsigned bytes or 10-bit values in little-endian 16-bit containers.
struct RawVideoSpec {
  int width = 0;
  int height = 0;
  int bit_depth = 8;  // 8 or 10
  ChromaFormat chroma = ChromaFormat::kYuv444;
  int frame_count = 1;  // declared length; reads are bounded by the file size
};

void validate(const RawVideoSpec& spec);
std::size_t frame_size_bytes(const RawVideoSpec& spec);

// Decodes one frame to a 3-channel 4:4:4 Frame on the [0, 1] scale (v/255 or
// v/1023). 4:2:0 chroma is upsampled by nearest-neighbor replication.
Frame read_yuv(const std::string& path, const RawVideoSpec& spec, int frame_index = 0);

// Inverse of read_yuv at matching bit depth; samples are quantized to the
// integer grid with round-half-up. 4:4:4 output only.
void write_yuv(const Frame& frame, const RawVideoSpec& spec, const std::string& path);

struct QualityResult {
  std::vector<double> mse_per_channel;
  std::vector<double> psnr_per_channel;  // dB, +inf when the channel matches exactly
  double psnr_avg = 0.0;
};

// PSNR on the normalized [0, 1] scale, peak 1.0, averaged over channels.
QualityResult psnr(const Frame& a, const Frame& b);

// Deterministic band-limited single-channel frame: a seeded sum of 2D
// sinusoids with frequencies below cutoff * Nyquist, tapered to the 0.5
// mid-level at the borders so clamped warps see no boundary discontinuity.
// `shift_c`/`shift_r` evaluate the same continuous function displaced by a
// known sub-pixel amount, giving exact ground truth for warping tests.
Frame synth_bandlimited(int width, int height, double cutoff, std::uint64_t seed,
                        double shift_c = 0.0, double shift_r = 0.0);

}  // namespace subpel

#endif  // SUBPEL_FRAMEIO_HPP_
