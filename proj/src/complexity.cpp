// SPDX-License-Identifier: BSD-3-Clause

#include "subpel/complexity.hpp"

#include <stdexcept>
#include <string>

namespace subpel {

namespace {

void check_taps(int taps) {
  if (taps < 1) {
    throw std::invalid_argument("filter length must be >= 1, got " + std::to_string(taps));
  }
}

}  // namespace

Rational c_1d(int taps) {
  check_taps(taps);
  return Rational(taps);
}

Rational c_2d(int taps) {
  check_taps(taps);
  return Rational(static_cast<std::int64_t>(taps) * taps + taps);
}

Rational c_2d_block(int taps, int block_size) {
  check_taps(taps);
  if (block_size < 1) {
    throw std::invalid_argument("block size must be >= 1, got " + std::to_string(block_size));
  }
  const std::int64_t n = taps;
  return Rational(n * n - n, block_size) + Rational(2 * n);
}

ComplexityReport make_report(int taps, int block_size) {
  ComplexityReport report;
  report.n_taps = taps;
  report.block_size = block_size;
  report.c1d = c_1d(taps);
  report.c2d = c_2d(taps);
  report.c2d_block = c_2d_block(taps, block_size);
  report.mc_total_bframe = Rational(6) * report.c2d_block;
  return report;
}

std::vector<ComplexityReport> table2_grid() {
  std::vector<ComplexityReport> grid;
  grid.reserve(std::size(kGridBlockSizes) * std::size(kGridTaps));
  for (int block : kGridBlockSizes) {
    for (int taps : kGridTaps) {
      grid.push_back(make_report(taps, block));
    }
  }
  return grid;
}

bool reconcile(const ComplexityReport& report, const MacCounter& counter) {
  return counter.per_pixel() == report.c2d_block;
}

}  // namespace subpel
