// SPDX-License-Identifier: BSD-3-Clause

#ifndef SUBPEL_FRAME_HPP_
#define SUBPEL_FRAME_HPP_

#include <vector>

namespace subpel {

// Planar raster of real-valued samples in [0, 1], one row-major plane per
// channel. bit_depth records the integer source the samples came from.
struct Frame {
  int width = 0;
  int height = 0;
  int bit_depth = 8;
  std::vector<std::vector<double>> planes;

  int channels() const { return static_cast<int>(planes.size()); }

  double& at(int ch, int c, int r) {
    return planes[static_cast<std::size_t>(ch)][static_cast<std::size_t>(r) * width + c];
  }
  double at(int ch, int c, int r) const {
    return planes[static_cast<std::size_t>(ch)][static_cast<std::size_t>(r) * width + c];
  }
};

Frame make_frame(int width, int height, int channels, double fill = 0.0, int bit_depth = 8);

// Throws std::invalid_argument on bad dimensions, plane sizes or non-finite
// samples.
void validate(const Frame& frame);

}  // namespace subpel

#endif  // SUBPEL_FRAME_HPP_
