// SPDX-License-Identifier: BSD-3-Clause

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "subpel/motion.hpp"

using namespace subpel;

namespace {

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "subpel_motion_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MotionField random_field(int width, int height, int block, std::uint64_t seed,
                         double span = 6.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-span, span);
  MotionField field = make_motion_field(width, height, block);
  for (MotionVector& v : field.vectors) {
    v = {dist(rng), dist(rng)};
  }
  return field;
}

bool fields_identical(const MotionField& a, const MotionField& b) {
  if (a.width != b.width || a.height != b.height || a.block_size != b.block_size ||
      a.vectors.size() != b.vectors.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.vectors.size(); ++i) {
    if (a.vectors[i].dc != b.vectors[i].dc || a.vectors[i].dr != b.vectors[i].dr) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("split_displacement separates integer and fractional parts") {
  SplitPosition p = split_displacement(0, 1.75);
  CHECK(p.integer == 1);
  CHECK(p.fraction == 0.75);

  p = split_displacement(5, -0.25);
  CHECK(p.integer == 4);
  CHECK(p.fraction == 0.75);

  p = split_displacement(3, 2.0);
  CHECK(p.integer == 5);
  CHECK(p.fraction == 0.0);
}

TEST_CASE("split_displacement keeps the fraction inside [0, 1) near integers") {
  // position a hair below zero: the subtraction rounds the fraction up to 1
  const SplitPosition p = split_displacement(0, -1e-18);
  CHECK(p.fraction >= 0.0);
  CHECK(p.fraction < 1.0);
  CHECK(p.integer == 0);

  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> dist(-100.0, 100.0);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t coord = static_cast<std::int64_t>(dist(rng));
    const double d = dist(rng);
    const SplitPosition s = split_displacement(coord, d);
    CHECK(s.fraction >= 0.0);
    CHECK(s.fraction < 1.0);
    CHECK(static_cast<double>(s.integer) + s.fraction ==
          doctest::Approx(static_cast<double>(coord) + d).epsilon(1e-12));
  }
}

TEST_CASE("quantize_fraction rounds onto the delta grid and carries at one") {
  const QuantSpec quarter = QuantSpec::finite(4);
  QuantizedFraction q = quantize_fraction(0.3, quarter);
  CHECK(q.carry == 0);
  CHECK(q.value == 0.25);
  CHECK(q.index == 1);

  q = quantize_fraction(0.9, quarter);
  CHECK(q.carry == 1);
  CHECK(q.value == 0.0);

  q = quantize_fraction(0.75, QuantSpec::finite(64));
  CHECK(q.carry == 0);
  CHECK(q.value == 0.75);
  CHECK(q.index == 48);

  q = quantize_fraction(0.123456, QuantSpec::unquantized());
  CHECK(q.carry == 0);
  CHECK(q.value == 0.123456);
}

TEST_CASE("quantize_field leaves fixed points untouched and rounds components") {
  const QuantSpec quarter = QuantSpec::finite(4);

  MotionField zeros = make_motion_field(8, 8, 2);
  CHECK(fields_identical(quantize_field(zeros, quarter), zeros));

  MotionField single = make_motion_field(1, 1, 1, {1.3, -0.9});
  const MotionField rounded = quantize_field(single, quarter);
  CHECK(rounded.vectors[0].dc == 1.25);
  CHECK(rounded.vectors[0].dr == -1.0);

  // components already on the grid are bit-exact fixed points
  MotionField on_grid = make_motion_field(4, 4, 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> numerator(-64, 64);
  for (MotionVector& v : on_grid.vectors) {
    v = {numerator(rng) / 4.0, numerator(rng) / 4.0};
  }
  CHECK(fields_identical(quantize_field(on_grid, quarter), on_grid));
}

TEST_CASE("quantizing the displacement equals quantizing the sampling position") {
  // for integer destination coordinates the two views must agree
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  const QuantSpec quant = QuantSpec::finite(8);
  for (int i = 0; i < 2000; ++i) {
    const double d = dist(rng);
    MotionField f = make_motion_field(1, 1, 1, {d, 0.0});
    const double via_field = quantize_field(f, quant).vectors[0].dc;

    const SplitPosition split = split_displacement(0, d);
    const QuantizedFraction q = quantize_fraction(split.fraction, quant);
    const double via_position = static_cast<double>(split.integer + q.carry) + q.value;
    CHECK(via_field == via_position);
  }
}

TEST_CASE("field quantization is idempotent bit for bit") {
  for (int delta : {4, 10, 64}) {
    const QuantSpec quant = QuantSpec::finite(delta);
    const MotionField field = random_field(16, 12, 4, 1000 + delta);
    const MotionField once = quantize_field(field, quant);
    const MotionField twice = quantize_field(once, quant);
    CHECK(fields_identical(once, twice));
  }
}

TEST_CASE("quantization error stays within half a grid step") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> dist(-9.0, 9.0);
  for (int delta : {8, 128}) {
    const QuantSpec quant = QuantSpec::finite(delta);
    const double bound = 1.0 / (2.0 * delta) + 1e-12;
    for (int i = 0; i < 3000; ++i) {
      MotionField f = make_motion_field(1, 1, 1, {dist(rng), dist(rng)});
      const MotionField q = quantize_field(f, quant);
      CHECK(std::abs(q.vectors[0].dc - f.vectors[0].dc) <= bound);
      CHECK(std::abs(q.vectors[0].dr - f.vectors[0].dr) <= bound);
    }
  }
}

TEST_CASE("finer deltas never quantize worse on nested grids") {
  const MotionField field = random_field(12, 12, 1, 77);
  double worst_coarse = 0.0;
  double worst_fine = 0.0;
  const MotionField coarse = quantize_field(field, QuantSpec::finite(8));
  const MotionField fine = quantize_field(field, QuantSpec::finite(128));
  for (std::size_t i = 0; i < field.vectors.size(); ++i) {
    worst_coarse = std::max({worst_coarse, std::abs(coarse.vectors[i].dc - field.vectors[i].dc),
                             std::abs(coarse.vectors[i].dr - field.vectors[i].dr)});
    worst_fine = std::max({worst_fine, std::abs(fine.vectors[i].dc - field.vectors[i].dc),
                           std::abs(fine.vectors[i].dr - field.vectors[i].dr)});
  }
  CHECK(worst_fine <= worst_coarse + 1e-15);
  CHECK(worst_fine <= 1.0 / 256.0 + 1e-12);
}

TEST_CASE("expand_to_dense broadcasts block vectors to pixels") {
  const MotionField dense_in = random_field(5, 4, 1, 3);
  CHECK(fields_identical(expand_to_dense(dense_in), dense_in));

  MotionField broadcast = make_motion_field(4, 4, 4, {1.0, 0.0});
  const MotionField expanded = expand_to_dense(broadcast);
  CHECK(expanded.block_size == 1);
  CHECK(expanded.vectors.size() == 16);
  for (const MotionVector& v : expanded.vectors) {
    CHECK(v.dc == 1.0);
    CHECK(v.dr == 0.0);
  }

  // ceil-sized grid: 6x6 frame with B=4 has 2x2 blocks
  MotionField edge = make_motion_field(6, 6, 4);
  CHECK(edge.grid_width() == 2);
  CHECK(edge.grid_height() == 2);
  edge.at_block(1, 1) = {-2.0, 3.0};
  const MotionField edge_dense = expand_to_dense(edge);
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      const MotionVector& v = edge_dense.vectors[static_cast<std::size_t>(r) * 6 + c];
      const bool in_last_block = c >= 4 && r >= 4;
      CHECK(v.dc == (in_last_block ? -2.0 : 0.0));
      CHECK(v.dr == (in_last_block ? 3.0 : 0.0));
    }
  }
}

TEST_CASE("motion field validation rejects bad grids and non-finite vectors") {
  MotionField field = make_motion_field(8, 8, 4);
  field.vectors.pop_back();
  CHECK_THROWS_AS(validate(field), std::invalid_argument);

  MotionField nan_field = make_motion_field(2, 2, 1);
  nan_field.vectors[0].dc = std::nan("");
  CHECK_THROWS_AS(validate(nan_field), std::invalid_argument);

  CHECK_THROWS_AS(make_motion_field(0, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_motion_field(4, 4, 0), std::invalid_argument);
}

TEST_CASE("mvf files round-trip bit-exactly") {
  const std::string path = temp_path("field.mvf");
  const MotionField field = random_field(18, 22, 4, 42);
  write_mvf(field, path);

  const MotionField loaded = read_mvf(path);
  CHECK(loaded.width == field.width);
  CHECK(loaded.height == field.height);
  CHECK(loaded.block_size == field.block_size);
  for (std::size_t i = 0; i < field.vectors.size(); ++i) {
    // storage is f32; the readback must equal the rounded value exactly
    CHECK(loaded.vectors[i].dc == static_cast<double>(static_cast<float>(field.vectors[i].dc)));
    CHECK(loaded.vectors[i].dr == static_cast<double>(static_cast<float>(field.vectors[i].dr)));
  }

  const std::string copy = temp_path("field_copy.mvf");
  write_mvf(loaded, copy);
  CHECK(slurp(path) == slurp(copy));
}

TEST_CASE("mvf reader reports bad magic and truncation") {
  const std::string bad_magic = temp_path("bad_magic.mvf");
  {
    std::ofstream out(bad_magic, std::ios::binary);
    out << "JUNKJUNKJUNKJUNK";
  }
  CHECK_THROWS_WITH_AS(read_mvf(bad_magic), doctest::Contains("MVF1"), std::runtime_error);

  const std::string truncated = temp_path("truncated.mvf");
  const MotionField field = random_field(16, 16, 4, 5);
  write_mvf(field, truncated);
  const std::string bytes = slurp(truncated);
  {
    std::ofstream out(truncated, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size() - 7));
  }
  CHECK_THROWS_WITH_AS(read_mvf(truncated), doctest::Contains("truncated"), std::runtime_error);

  CHECK_THROWS_AS(read_mvf(temp_path("missing.mvf")), std::runtime_error);
}

TEST_CASE("motion CSV round-trips through export and import") {
  const std::string path = temp_path("field.csv");
  const MotionField field = random_field(10, 6, 4, 9);
  write_motion_csv(field, path);

  const MotionField loaded = read_motion_csv(path, 10, 6, 4);
  CHECK(fields_identical(loaded, field));

  // a missing grid entry is an error
  MotionField small = make_motion_field(8, 8, 4);
  write_motion_csv(small, path);
  CHECK_THROWS_WITH_AS(read_motion_csv(path, 12, 12, 4), doctest::Contains("grid"),
                       std::runtime_error);
}
