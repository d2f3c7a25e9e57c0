// SPDX-License-Identifier: BSD-3-Clause

#include "subpel/warp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace subpel {

namespace {

void check_config(const WarpConfig& config) {
  validate(config.spec);
  if (!config.quant.infinite && config.quant.delta < 1) {
    throw std::invalid_argument("quantization delta must be >= 1");
  }
  if (config.table) {
    const FilterSpec& ts = config.table->spec;
    if (ts.kind != config.spec.kind || ts.taps != config.spec.taps ||
        ts.normalize != config.spec.normalize) {
      throw std::invalid_argument("filter table was built for a different filter spec");
    }
    if (!config.quant.infinite && config.table->delta != config.quant.delta) {
      throw std::invalid_argument("filter table delta " + std::to_string(config.table->delta) +
                                  " does not match quantization delta " +
                                  std::to_string(config.quant.delta));
    }
  }
}

void check_field(const Frame& frame, const MotionField& field, bool dense_only,
                 const char* op) {
  validate(frame);
  validate(field);
  if (field.width != frame.width || field.height != frame.height) {
    throw std::invalid_argument(std::string(op) + ": motion field is " +
                                std::to_string(field.width) + "x" + std::to_string(field.height) +
                                " but frame is " + std::to_string(frame.width) + "x" +
                                std::to_string(frame.height));
  }
  if (dense_only && field.block_size != 1) {
    throw std::invalid_argument(std::string(op) + " needs a dense (block size 1) field");
  }
}

// Quantizes the fraction and either indexes the precomputed table or derives
// the taps into `scratch`. Carries fold into the integer part so lookups and
// on-the-fly derivation see the same (k, s) pair.
inline const double* fetch_taps(const WarpConfig& config, std::int64_t& integer, double fraction,
                                double* scratch) {
  const QuantizedFraction q = quantize_fraction(fraction, config.quant);
  integer += q.carry;
  if (config.table && !config.quant.infinite) {
    return config.table->at(static_cast<int>(q.index)).coefficients.data();
  }
  derive_taps(config.spec, q.value, scratch);
  return scratch;
}

inline std::int64_t clamp_index(std::int64_t idx, std::int64_t last) {
  return std::clamp<std::int64_t>(idx, 0, last);
}

// Integer part of the quantized sampling position, including the carry a
// fraction rounding up to 1 folds into it. Must mirror fetch_taps exactly:
// the block window bounds below are derived from this.
inline std::int64_t quantized_integer(const WarpConfig& config, std::int64_t coord,
                                      double displacement) {
  const SplitPosition split = split_displacement(coord, displacement);
  return split.integer + quantize_fraction(split.fraction, config.quant).carry;
}

}  // namespace

Rational MacCounter::per_pixel() const {
  if (pixels == 0) {
    throw std::logic_error("per_pixel() on a counter with no pixels");
  }
  return Rational(static_cast<std::int64_t>(total_macs), static_cast<std::int64_t>(pixels));
}

WarpConfig make_warp_config(const FilterSpec& spec, const QuantSpec& quant, bool precompute) {
  WarpConfig config;
  config.spec = spec;
  config.quant = quant;
  if (precompute && !quant.infinite) {
    config.table = std::make_shared<FilterTable>(build_filter_table(spec, quant.delta));
  }
  check_config(config);
  return config;
}

double interp_1d(std::span<const double> samples, double position, const WarpConfig& config,
                 MacCounter& counter) {
  if (samples.empty()) {
    throw std::invalid_argument("interp_1d needs a nonempty sample vector");
  }
  check_config(config);
  const int n = config.spec.taps;
  const int half = n / 2;
  std::vector<double> scratch(static_cast<std::size_t>(n));
  SplitPosition split = split_displacement(0, position);
  std::int64_t k = split.integer;
  const double* taps = fetch_taps(config, k, split.fraction, scratch.data());
  const auto last = static_cast<std::int64_t>(samples.size()) - 1;
  double acc = 0.0;
  for (int i = 1; i <= n; ++i) {
    acc += taps[i - 1] * samples[static_cast<std::size_t>(clamp_index(k - half + i, last))];
  }
  if (config.count_macs) {
    counter.add(static_cast<std::uint64_t>(n));
  }
  return acc;
}

WarpResult warp_dense(const Frame& frame, const MotionField& field, const WarpConfig& config) {
  check_config(config);
  check_field(frame, field, /*dense_only=*/true, "warp_dense");
  const int n = config.spec.taps;
  const int half = n / 2;
  const int width = frame.width;
  const int height = frame.height;

  WarpResult result;
  result.frame = frame;
  result.macs.pixels = static_cast<std::uint64_t>(width) * height;

  std::vector<double> taps_c(static_cast<std::size_t>(n));
  std::vector<double> taps_r(static_cast<std::size_t>(n));
  std::uint64_t macs = 0;

  for (int ch = 0; ch < frame.channels(); ++ch) {
    const std::vector<double>& src = frame.planes[static_cast<std::size_t>(ch)];
    std::vector<double>& dst = result.frame.planes[static_cast<std::size_t>(ch)];
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        const MotionVector& v = field.vectors[static_cast<std::size_t>(r) * width + c];
        SplitPosition col = split_displacement(c, v.dc);
        SplitPosition row = split_displacement(r, v.dr);
        std::int64_t kc = col.integer;
        std::int64_t kr = row.integer;
        const double* hc = fetch_taps(config, kc, col.fraction, taps_c.data());
        const double* hr = fetch_taps(config, kr, row.fraction, taps_r.data());
        double acc = 0.0;
        for (int j = 1; j <= n; ++j) {
          const std::int64_t src_row = clamp_index(kr - half + j, height - 1);
          const double* line = &src[static_cast<std::size_t>(src_row) * width];
          double inter = 0.0;
          for (int i = 1; i <= n; ++i) {
            inter += hc[i - 1] * line[clamp_index(kc - half + i, width - 1)];
          }
          acc += hr[j - 1] * inter;
        }
        dst[static_cast<std::size_t>(r) * width + c] = std::clamp(acc, 0.0, 1.0);
        macs += static_cast<std::uint64_t>(n) * n + n;
      }
    }
  }
  if (config.count_macs) {
    result.macs.total_macs = macs;
  }
  return result;
}

WarpResult warp_block(const Frame& frame, const MotionField& field, const WarpConfig& config) {
  check_config(config);
  check_field(frame, field, /*dense_only=*/false, "warp_block");
  const int n = config.spec.taps;
  const int half = n / 2;
  const int width = frame.width;
  const int height = frame.height;
  const int block = field.block_size;

  WarpResult result;
  result.frame = frame;
  result.macs.pixels = static_cast<std::uint64_t>(width) * height;

  std::vector<double> taps_c(static_cast<std::size_t>(n));
  std::vector<double> taps_r(static_cast<std::size_t>(n));
  std::vector<double> window;  // horizontally displaced rows, reused per block
  std::uint64_t macs = 0;

  for (int ch = 0; ch < frame.channels(); ++ch) {
    const std::vector<double>& src = frame.planes[static_cast<std::size_t>(ch)];
    std::vector<double>& dst = result.frame.planes[static_cast<std::size_t>(ch)];
    for (int br = 0; br < field.grid_height(); ++br) {
      const int r0 = br * block;
      const int r1 = std::min(r0 + block, height) - 1;
      for (int bc = 0; bc < field.grid_width(); ++bc) {
        const int c0 = bc * block;
        const int c1 = std::min(c0 + block, width) - 1;
        const int block_w = c1 - c0 + 1;
        const MotionVector& v = field.at_block(bc, br);

        // Source-row window covering the vertical neighborhoods of every
        // output row in the block: B + N - 1 rows for a full block. The
        // quantized integer parts are monotone in the row index, so the
        // first and last output rows bound the window.
        const std::int64_t win_lo = quantized_integer(config, r0, v.dr) - half + 1;
        const std::int64_t win_hi = quantized_integer(config, r1, v.dr) + half;
        const int win_rows = static_cast<int>(win_hi - win_lo + 1);
        window.assign(static_cast<std::size_t>(win_rows) * block_w, 0.0);

        // Horizontal pass once per block column, shared by all output rows.
        for (int c = c0; c <= c1; ++c) {
          SplitPosition col = split_displacement(c, v.dc);
          std::int64_t kc = col.integer;
          const double* hc = fetch_taps(config, kc, col.fraction, taps_c.data());
          for (int w = 0; w < win_rows; ++w) {
            const std::int64_t src_row = clamp_index(win_lo + w, height - 1);
            const double* line = &src[static_cast<std::size_t>(src_row) * width];
            double inter = 0.0;
            for (int i = 1; i <= n; ++i) {
              inter += hc[i - 1] * line[clamp_index(kc - half + i, width - 1)];
            }
            window[static_cast<std::size_t>(w) * block_w + (c - c0)] = inter;
            macs += static_cast<std::uint64_t>(n);
          }
        }

        // Vertical pass per output pixel over the shared window.
        for (int r = r0; r <= r1; ++r) {
          SplitPosition row = split_displacement(r, v.dr);
          std::int64_t kr = row.integer;
          const double* hr = fetch_taps(config, kr, row.fraction, taps_r.data());
          const std::int64_t base = kr - half + 1 - win_lo;
          for (int c = c0; c <= c1; ++c) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
              acc += hr[j] * window[static_cast<std::size_t>(base + j) * block_w + (c - c0)];
            }
            dst[static_cast<std::size_t>(r) * width + c] = std::clamp(acc, 0.0, 1.0);
            macs += static_cast<std::uint64_t>(n);
          }
        }
      }
    }
  }
  if (config.count_macs) {
    result.macs.total_macs = macs;
  }
  return result;
}

Frame warp_brute_force(const Frame& frame, const MotionField& field, const WarpConfig& config) {
  check_config(config);
  check_field(frame, field, /*dense_only=*/true, "warp_brute_force");
  const int n = config.spec.taps;
  const int half = n / 2;
  const int width = frame.width;
  const int height = frame.height;

  Frame out = frame;
  std::vector<double> taps_c(static_cast<std::size_t>(n));
  std::vector<double> taps_r(static_cast<std::size_t>(n));

  for (int ch = 0; ch < frame.channels(); ++ch) {
    const std::vector<double>& src = frame.planes[static_cast<std::size_t>(ch)];
    std::vector<double>& dst = out.planes[static_cast<std::size_t>(ch)];
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        const MotionVector& v = field.vectors[static_cast<std::size_t>(r) * width + c];
        SplitPosition col = split_displacement(c, v.dc);
        SplitPosition row = split_displacement(r, v.dr);
        std::int64_t kc = col.integer;
        std::int64_t kr = row.integer;
        const double* hc = fetch_taps(config, kc, col.fraction, taps_c.data());
        const double* hr = fetch_taps(config, kr, row.fraction, taps_r.data());
        double acc = 0.0;
        for (int j = 1; j <= n; ++j) {
          const std::int64_t src_row = clamp_index(kr - half + j, height - 1);
          const double* line = &src[static_cast<std::size_t>(src_row) * width];
          for (int i = 1; i <= n; ++i) {
            acc += hr[j - 1] * hc[i - 1] * line[clamp_index(kc - half + i, width - 1)];
          }
        }
        dst[static_cast<std::size_t>(r) * width + c] = std::clamp(acc, 0.0, 1.0);
      }
    }
  }
  return out;
}

PredictResult predict_bidir(const Frame& ref0, const MotionField& field0, const Frame& ref1,
                            const MotionField& field1, const BlendWeights& alpha,
                            const WarpConfig& config) {
  if (ref0.width != ref1.width || ref0.height != ref1.height ||
      ref0.channels() != ref1.channels()) {
    throw std::invalid_argument("predict_bidir: reference frames disagree in geometry");
  }
  const std::size_t samples = static_cast<std::size_t>(ref0.width) * ref0.height;
  if (!alpha.plane.empty() && alpha.plane.size() != samples) {
    throw std::invalid_argument("predict_bidir: weight plane must hold width*height values");
  }
  const bool per_pixel = !alpha.plane.empty();
  if (!per_pixel && (alpha.uniform < 0.0 || alpha.uniform > 1.0)) {
    throw std::invalid_argument("predict_bidir: weights must be in [0, 1]");
  }
  for (double w : alpha.plane) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw std::invalid_argument("predict_bidir: weights must be in [0, 1]");
    }
  }

  WarpResult warp0 = warp_block(ref0, field0, config);
  WarpResult warp1 = warp_block(ref1, field1, config);

  PredictResult result;
  result.frame = std::move(warp0.frame);
  result.macs.pixels = static_cast<std::uint64_t>(ref0.width) * ref0.height;
  result.macs.total_macs = warp0.macs.total_macs + warp1.macs.total_macs;

  for (int ch = 0; ch < result.frame.channels(); ++ch) {
    std::vector<double>& p0 = result.frame.planes[static_cast<std::size_t>(ch)];
    const std::vector<double>& p1 = warp1.frame.planes[static_cast<std::size_t>(ch)];
    for (std::size_t i = 0; i < samples; ++i) {
      const double a = per_pixel ? alpha.plane[i] : alpha.uniform;
      p0[i] = a * p0[i] + (1.0 - a) * p1[i];
      result.blend_mults += 2;
    }
  }
  return result;
}

}  // namespace subpel
