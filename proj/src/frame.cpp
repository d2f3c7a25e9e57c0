// SPDX-License-Identifier: BSD-3-Clause

#include "subpel/frame.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace subpel {

Frame make_frame(int width, int height, int channels, double fill, int bit_depth) {
  if (width < 1 || height < 1 || channels < 1) {
    throw std::invalid_argument("frame needs positive dimensions and at least one channel");
  }
  Frame frame;
  frame.width = width;
  frame.height = height;
  frame.bit_depth = bit_depth;
  frame.planes.assign(static_cast<std::size_t>(channels),
                      std::vector<double>(static_cast<std::size_t>(width) * height, fill));
  return frame;
}

void validate(const Frame& frame) {
  if (frame.width < 1 || frame.height < 1 || frame.planes.empty()) {
    throw std::invalid_argument("frame needs positive dimensions and at least one channel");
  }
  const std::size_t samples = static_cast<std::size_t>(frame.width) * frame.height;
  for (const std::vector<double>& plane : frame.planes) {
    if (plane.size() != samples) {
      throw std::invalid_argument("frame plane holds " + std::to_string(plane.size()) +
                                  " samples, expected " + std::to_string(samples));
    }
    for (double s : plane) {
      if (!std::isfinite(s)) {
        throw std::invalid_argument("frame samples must be finite");
      }
    }
  }
}

}  // namespace subpel
