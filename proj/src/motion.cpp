// SPDX-License-Identifier: BSD-3-Clause

#include "subpel/motion.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace subpel {

namespace {

void put_u32le(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> b = {
      static_cast<char>(v & 0xff),
      static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff),
      static_cast<char>((v >> 24) & 0xff),
  };
  out.write(b.data(), b.size());
}

std::uint32_t get_u32le(std::istream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), b.size());
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f32le(std::ostream& out, float v) {
  put_u32le(out, std::bit_cast<std::uint32_t>(v));
}

float get_f32le(std::istream& in) {
  return std::bit_cast<float>(get_u32le(in));
}

constexpr char kMvfMagic[4] = {'M', 'V', 'F', '1'};

}  // namespace

void validate(const MotionField& field) {
  if (field.width < 1 || field.height < 1) {
    throw std::invalid_argument("motion field needs positive dimensions");
  }
  if (field.block_size < 1) {
    throw std::invalid_argument("motion field block size must be >= 1");
  }
  const std::size_t expected =
      static_cast<std::size_t>(field.grid_width()) * field.grid_height();
  if (field.vectors.size() != expected) {
    throw std::invalid_argument("motion field grid holds " + std::to_string(field.vectors.size()) +
                                " vectors, expected " + std::to_string(expected));
  }
  for (const MotionVector& v : field.vectors) {
    if (!std::isfinite(v.dc) || !std::isfinite(v.dr)) {
      throw std::invalid_argument("motion vectors must be finite");
    }
  }
}

MotionField make_motion_field(int width, int height, int block_size, MotionVector fill) {
  MotionField field;
  field.width = width;
  field.height = height;
  field.block_size = block_size;
  if (width < 1 || height < 1 || block_size < 1) {
    throw std::invalid_argument("motion field needs positive dimensions and block size");
  }
  field.vectors.assign(static_cast<std::size_t>(field.grid_width()) * field.grid_height(), fill);
  return field;
}

SplitPosition split_displacement(std::int64_t coord, double displacement) {
  assert(std::isfinite(displacement));
  const double position = static_cast<double>(coord) + displacement;
  double integer = std::floor(position);
  double fraction = position - integer;
  if (fraction >= 1.0) {
    // position was a hair below an integer and the subtraction rounded up
    integer += 1.0;
    fraction = 0.0;
  }
  return {static_cast<std::int64_t>(integer), fraction};
}

QuantizedFraction quantize_fraction(double fraction, const QuantSpec& quant) {
  assert(fraction >= 0.0 && fraction < 1.0);
  if (quant.infinite) {
    return {0, -1, fraction};
  }
  assert(quant.delta >= 1);
  const auto index =
      static_cast<std::int64_t>(std::round(fraction * static_cast<double>(quant.delta)));
  if (index >= quant.delta) {
    return {1, 0, 0.0};
  }
  return {0, index, static_cast<double>(index) / static_cast<double>(quant.delta)};
}

MotionField quantize_field(const MotionField& field, const QuantSpec& quant) {
  validate(field);
  MotionField out = field;
  if (quant.infinite) {
    return out;
  }
  for (MotionVector& v : out.vectors) {
    for (double* component : {&v.dc, &v.dr}) {
      const SplitPosition split = split_displacement(0, *component);
      const QuantizedFraction q = quantize_fraction(split.fraction, quant);
      *component = static_cast<double>(split.integer + q.carry) + q.value;
    }
  }
  return out;
}

MotionField expand_to_dense(const MotionField& field) {
  validate(field);
  if (field.block_size == 1) {
    return field;
  }
  MotionField dense = make_motion_field(field.width, field.height, 1);
  for (int r = 0; r < field.height; ++r) {
    for (int c = 0; c < field.width; ++c) {
      dense.vectors[static_cast<std::size_t>(r) * field.width + c] = field.at_pixel(c, r);
    }
  }
  return dense;
}

void write_mvf(const MotionField& field, const std::string& path) {
  validate(field);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out.write(kMvfMagic, sizeof(kMvfMagic));
  put_u32le(out, static_cast<std::uint32_t>(field.width));
  put_u32le(out, static_cast<std::uint32_t>(field.height));
  put_u32le(out, static_cast<std::uint32_t>(field.block_size));
  for (const MotionVector& v : field.vectors) {
    put_f32le(out, static_cast<float>(v.dc));
    put_f32le(out, static_cast<float>(v.dr));
  }
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

MotionField read_mvf(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  char magic[4] = {};
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMvfMagic, sizeof(kMvfMagic)) != 0) {
    throw std::runtime_error(path + ": not a MVF1 motion field file");
  }
  MotionField field;
  field.width = static_cast<int>(get_u32le(in));
  field.height = static_cast<int>(get_u32le(in));
  field.block_size = static_cast<int>(get_u32le(in));
  if (!in) {
    throw std::runtime_error(path + ": truncated header (16 bytes expected)");
  }
  if (field.width < 1 || field.height < 1 || field.block_size < 1) {
    throw std::runtime_error(path + ": invalid dimensions in header");
  }
  const std::size_t count =
      static_cast<std::size_t>(field.grid_width()) * field.grid_height();
  field.vectors.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    field.vectors[i].dc = get_f32le(in);
    field.vectors[i].dr = get_f32le(in);
    if (!in) {
      throw std::runtime_error(path + ": truncated at byte offset " +
                               std::to_string(16 + i * 8) + ", expected " +
                               std::to_string(16 + count * 8) + " bytes");
    }
  }
  validate(field);
  return field;
}

void write_motion_csv(const MotionField& field, const std::string& path) {
  validate(field);
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "block_col,block_row,dc,dr\n";
  char line[128];
  for (int br = 0; br < field.grid_height(); ++br) {
    for (int bc = 0; bc < field.grid_width(); ++bc) {
      const MotionVector& v = field.at_block(bc, br);
      std::snprintf(line, sizeof(line), "%d,%d,%.17g,%.17g\n", bc, br, v.dc, v.dr);
      out << line;
    }
  }
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

MotionField read_motion_csv(const std::string& path, int width, int height, int block_size) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  MotionField field = make_motion_field(width, height, block_size);
  std::vector<bool> seen(field.vectors.size(), false);
  std::string line;
  if (!std::getline(in, line) || line.rfind("block_col,block_row,dc,dr", 0) != 0) {
    throw std::runtime_error(path + ": missing block_col,block_row,dc,dr header");
  }
  std::size_t filled = 0;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    int bc = 0;
    int br = 0;
    double dc = 0.0;
    double dr = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &bc, &br, &dc, &dr) != 4) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed row");
    }
    if (bc < 0 || bc >= field.grid_width() || br < 0 || br >= field.grid_height()) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": block (" +
                               std::to_string(bc) + "," + std::to_string(br) +
                               ") outside the grid");
    }
    const std::size_t idx = static_cast<std::size_t>(br) * field.grid_width() + bc;
    if (!seen[idx]) {
      seen[idx] = true;
      ++filled;
    }
    field.vectors[idx] = {dc, dr};
  }
  if (filled != field.vectors.size()) {
    throw std::runtime_error(path + ": " + std::to_string(filled) + " of " +
                             std::to_string(field.vectors.size()) + " grid entries present");
  }
  validate(field);
  return field;
}

}  // namespace subpel
