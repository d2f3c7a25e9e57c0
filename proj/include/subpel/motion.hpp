// SPDX-License-Identifier: BSD-3-Clause

#ifndef SUBPEL_MOTION_HPP_
#define SUBPEL_MOTION_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subpel {

// Backward-warping displacement in pixels: the prediction at (c, r) samples
// the reference at (c + dc, r + dr). Positive dc points right, positive dr
// points down.
struct MotionVector {
  double dc = 0.0;
  double dr = 0.0;
};

// One vector per B x B block, row-major over a ceil-sized grid. B = 1 is the
// dense per-pixel case. Trailing blocks cover fewer pixels when B does not
// divide the frame dimensions; the grid is never padded.
struct MotionField {
  int width = 0;
  int height = 0;
  int block_size = 1;
  std::vector<MotionVector> vectors;

  int grid_width() const { return (width + block_size - 1) / block_size; }
  int grid_height() const { return (height + block_size - 1) / block_size; }

  MotionVector& at_block(int bc, int br) {
    return vectors[static_cast<std::size_t>(br) * grid_width() + bc];
  }
  const MotionVector& at_block(int bc, int br) const {
    return vectors[static_cast<std::size_t>(br) * grid_width() + bc];
  }
  const MotionVector& at_pixel(int c, int r) const {
    return at_block(c / block_size, r / block_size);
  }
};

// Throws std::invalid_argument when dimensions, grid size or vector values
// (NaN/Inf) are invalid.
void validate(const MotionField& field);

MotionField make_motion_field(int width, int height, int block_size, MotionVector fill = {});

// Number of representable fractional positions per integer step. `infinite`
// bypasses quantization entirely.
struct QuantSpec {
  int delta = 1;
  bool infinite = true;

  static QuantSpec finite(int delta) {
    if (delta < 1) {
      throw std::invalid_argument("quantization delta must be >= 1, got " +
                                  std::to_string(delta));
    }
    return {delta, false};
  }
  static QuantSpec unquantized() { return {1, true}; }
};

struct SplitPosition {
  std::int64_t integer;
  double fraction;  // in [0, 1)
};

// coord + displacement = integer + fraction, fraction in [0, 1).
SplitPosition split_displacement(std::int64_t coord, double displacement);

struct QuantizedFraction {
  int carry;           // 1 when the fraction rounded up to the next integer
  std::int64_t index;  // table index q, s_hat = q/delta; -1 when unquantized
  double value;        // quantized fraction in [0, 1)
};

// round(delta * s) / delta with round-half-away-from-zero; a result of 1
// carries into the integer part so the fraction stays in [0, 1).
QuantizedFraction quantize_fraction(double fraction, const QuantSpec& quant);

// Quantizes the fractional part of every vector component, folding carries
// into the integer part. Block structure is unchanged.
MotionField quantize_field(const MotionField& field, const QuantSpec& quant);

// B=1 field where each pixel carries the vector of its enclosing block.
MotionField expand_to_dense(const MotionField& field);

// Binary motion field container: magic "MVF1", u32le width/height/block_size,
// then grid rows of f32le (dc, dr) pairs.
void write_mvf(const MotionField& field, const std::string& path);
MotionField read_mvf(const std::string& path);

// CSV variant, header "block_col,block_row,dc,dr". Dimensions are not stored
// in the CSV and must be supplied on import.
void write_motion_csv(const MotionField& field, const std::string& path);
MotionField read_motion_csv(const std::string& path, int width, int height, int block_size);

}  // namespace subpel

#endif  // SUBPEL_MOTION_HPP_
