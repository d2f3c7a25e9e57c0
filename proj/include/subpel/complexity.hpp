// SPDX-License-Identifier: BSD-3-Clause

#ifndef SUBPEL_COMPLEXITY_HPP_
#define SUBPEL_COMPLEXITY_HPP_

#include <optional>
#include <vector>

#include "subpel/rational.hpp"
#include "subpel/warp.hpp"

namespace subpel {

// Closed-form warping cost for one (N, B) operating point, in MAC per pixel
// per plane-warp. mc_total_bframe is the bi-directional YUV444 figure: two
// references times three channels, so 6x the block-based cost.
struct ComplexityReport {
  int n_taps = 0;
  int block_size = 0;
  Rational c1d;
  Rational c2d;
  Rational c2d_block;
  Rational mc_total_bframe;
  std::optional<Rational> measured;
};

// N MAC / pixel for a 1D warp.
Rational c_1d(int taps);

// N^2 + N MAC / pixel: N + 1 one-dimensional warps per pixel.
Rational c_2d(int taps);

// (N^2 - N)/B + 2N MAC / pixel once the horizontal pass is shared across a
// B x B block. Reduces to c_2d at B = 1.
Rational c_2d_block(int taps, int block_size);

ComplexityReport make_report(int taps, int block_size);

inline constexpr int kGridBlockSizes[] = {1, 4, 8};
inline constexpr int kGridTaps[] = {2, 4, 8, 12};

// Cool-chic reference decoder cost of decoding the motion field itself, per
// grid block size. Architecture-specific measurements, reported as external
// context only; nothing here computes them.
inline constexpr int kMotionDecodingReference[] = {355, 34, 13};

// The 3 x 4 motion-compensation grid over kGridBlockSizes x kGridTaps,
// row-major with block size outer.
std::vector<ComplexityReport> table2_grid();

// True iff the measured per-pixel MAC rate equals the analytic block-based
// cost exactly. Meaningful for single-channel warps with uniform-fraction
// fields and B dividing both frame dimensions.
bool reconcile(const ComplexityReport& report, const MacCounter& counter);

}  // namespace subpel

#endif  // SUBPEL_COMPLEXITY_HPP_
