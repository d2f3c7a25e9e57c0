// SPDX-License-Identifier: BSD-3-Clause

#ifndef SUBPEL_WARP_HPP_
#define SUBPEL_WARP_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "subpel/filter_bank.hpp"
#include "subpel/frame.hpp"
#include "subpel/motion.hpp"
#include "subpel/rational.hpp"

namespace subpel {

// Deterministic multiply-accumulate tally. Counts one unit per filter-tap
// multiply in the interpolation sums and nothing else; filter derivation and
// prediction blending are excluded so the analytic per-pixel formulas are
// reproducible exactly.
struct MacCounter {
  std::uint64_t total_macs = 0;
  std::uint64_t pixels = 0;

  void add(std::uint64_t macs) { total_macs += macs; }

  // Exact MAC / pixel. Throws std::logic_error when no pixels were counted.
  Rational per_pixel() const;
};

struct WarpConfig {
  FilterSpec spec;
  std::shared_ptr<const FilterTable> table;  // optional precomputed filters
  QuantSpec quant = QuantSpec::unquantized();
  bool count_macs = true;
};

// Builds a config whose table matches the quantization step (one filter per
// representable fraction).
WarpConfig make_warp_config(const FilterSpec& spec, const QuantSpec& quant, bool precompute);

// One-dimensional interpolation of `samples` at a fractional position.
// Out-of-range neighbor indices are clamped to the ends. Adds N to `counter`.
double interp_1d(std::span<const double> samples, double position, const WarpConfig& config,
                 MacCounter& counter);

struct WarpResult {
  Frame frame;
  MacCounter macs;
};

// Separable two-pass warp with one vector per pixel (B = 1): the horizontal
// filter runs on each of the N neighboring rows, then the vertical filter on
// the N intermediates. N^2 + N MAC per pixel per channel. Output samples are
// clamped to [0, 1]; intermediates are not.
WarpResult warp_dense(const Frame& frame, const MotionField& field, const WarpConfig& config);

// Block-based warp sharing the horizontal pass across the block: the
// (B + N - 1)-row intermediate window is computed once per block column, then
// the vertical filter runs per output pixel. Bit-identical samples to
// warp_dense on the expanded field, at 2N + (N^2 - N)/B MAC per pixel.
WarpResult warp_block(const Frame& frame, const MotionField& field, const WarpConfig& config);

// Direct N x N tensor-product interpolation, no separable passes. Test oracle
// for the two-pass kernels; not meant for production use.
Frame warp_brute_force(const Frame& frame, const MotionField& field, const WarpConfig& config);

// Per-pixel blend weight for bi-directional prediction: uniform scalar, or a
// width*height plane when `plane` is nonempty. Values in [0, 1].
struct BlendWeights {
  double uniform = 0.5;
  std::vector<double> plane;

  static BlendWeights scalar(double alpha) { return {alpha, {}}; }
};

struct PredictResult {
  Frame frame;
  MacCounter macs;               // sum of both warps
  std::uint64_t blend_mults = 0;  // blend multiplies, tallied apart from MACs
};

// alpha * warp_block(ref0, field0) + (1 - alpha) * warp_block(ref1, field1).
PredictResult predict_bidir(const Frame& ref0, const MotionField& field0, const Frame& ref1,
                            const MotionField& field1, const BlendWeights& alpha,
                            const WarpConfig& config);

}  // namespace subpel

#endif  // SUBPEL_WARP_HPP_
