// SPDX-License-Identifier: BSD-3-Clause

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "subpel/filter_bank.hpp"

using namespace subpel;

namespace {

const std::vector<FilterSpec> kAllSpecs = {
    {FilterKind::kPolynomial, 2, true},  {FilterKind::kPolynomial, 4, true},
    {FilterKind::kWindowedSinc, 2, true}, {FilterKind::kWindowedSinc, 4, true},
    {FilterKind::kWindowedSinc, 8, true}, {FilterKind::kWindowedSinc, 12, true},
};

double tap_sum(const Filter& f) {
  double sum = 0.0;
  for (double h : f.coefficients) {
    sum += h;
  }
  return sum;
}

}  // namespace

TEST_CASE("linear filter reproduces the identity and midpoint cases") {
  const Filter at_zero = derive_polynomial_filter(2, 0.0);
  CHECK(at_zero.coefficients == std::vector<double>{1.0, 0.0});

  const Filter at_half = derive_polynomial_filter(2, 0.5);
  CHECK(at_half.coefficients == std::vector<double>{0.5, 0.5});
}

TEST_CASE("cubic filter matches hand-computed values") {
  const Filter at_zero = derive_polynomial_filter(4, 0.0);
  CHECK(at_zero.coefficients == std::vector<double>{0.0, 1.0, 0.0, 0.0});

  // powers of 1/2 are dyadic, so the matrix product is exact
  const Filter at_half = derive_polynomial_filter(4, 0.5);
  CHECK(at_half.coefficients == std::vector<double>{-0.09375, 0.59375, 0.59375, -0.09375});
}

TEST_CASE("polynomial filters reject unsupported lengths") {
  CHECK_THROWS_WITH_AS(derive_polynomial_filter(8, 0.25),
                       doctest::Contains("{2, 4}"), std::invalid_argument);
  CHECK_THROWS_AS(derive_polynomial_filter(3, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(validate(FilterSpec{FilterKind::kPolynomial, 6, true}),
                  std::invalid_argument);
}

TEST_CASE("windowed sinc rejects odd lengths") {
  CHECK_THROWS_AS(derive_sinc_filter(7, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(derive_sinc_filter(0, 0.25), std::invalid_argument);
}

TEST_CASE("windowed sinc at zero displacement is a unit impulse") {
  for (int taps : {2, 4, 8, 12}) {
    for (bool normalize : {false, true}) {
      const Filter f = derive_sinc_filter(taps, 0.0, normalize);
      for (int i = 1; i <= taps; ++i) {
        CHECK(f.coefficients[i - 1] == (i == taps / 2 ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("two-tap sinc at the midpoint normalizes to equal weights") {
  const Filter f = derive_sinc_filter(2, 0.5, true);
  CHECK(f.coefficients[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f.coefficients[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("eight-tap sinc at the midpoint is palindromic with unit sum") {
  const Filter f = derive_sinc_filter(8, 0.5, true);
  for (int i = 0; i < 4; ++i) {
    CHECK(f.coefficients[i] == doctest::Approx(f.coefficients[7 - i]).epsilon(1e-14));
  }
  CHECK(tap_sum(f) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("every filter family is the identity at zero displacement") {
  for (const FilterSpec& spec : kAllSpecs) {
    const Filter f = derive_filter(spec, 0.0);
    for (int i = 1; i <= spec.taps; ++i) {
      const double expected = i == spec.taps / 2 ? 1.0 : 0.0;
      CHECK(std::abs(f.coefficients[i - 1] - expected) <= 1e-12);
    }
  }
}

TEST_CASE("polynomial filter at fraction one is the shifted identity") {
  const Filter linear = derive_polynomial_filter(2, 1.0);
  CHECK(linear.coefficients == std::vector<double>{0.0, 1.0});

  const Filter cubic = derive_polynomial_filter(4, 1.0);
  CHECK(cubic.coefficients == std::vector<double>{0.0, 0.0, 1.0, 0.0});
}

TEST_CASE("filters preserve constants: taps sum to one over the fraction range") {
  for (const FilterSpec& spec : kAllSpecs) {
    for (int i = 0; i < 1000; ++i) {
      const double s = static_cast<double>(i) / 1000.0;
      const Filter f = derive_filter(spec, s);
      CHECK(std::abs(tap_sum(f) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("filters at the midpoint are palindromic") {
  for (const FilterSpec& spec : kAllSpecs) {
    const Filter f = derive_filter(spec, 0.5);
    for (int i = 0; i < spec.taps / 2; ++i) {
      CHECK(std::abs(f.coefficients[i] - f.coefficients[spec.taps - 1 - i]) <= 1e-12);
    }
  }
}

TEST_CASE("raw sinc taps differ from normalized ones away from integers") {
  const Filter raw = derive_sinc_filter(8, 0.3, false);
  const Filter normalized = derive_sinc_filter(8, 0.3, true);
  CHECK(tap_sum(normalized) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tap_sum(raw) != 1.0);
  const double ratio = raw.coefficients[3] / normalized.coefficients[3];
  CHECK(ratio == doctest::Approx(tap_sum(raw)).epsilon(1e-12));
}

TEST_CASE("filter table holds N x delta coefficients with the identity first") {
  const FilterTable table = build_filter_table({FilterKind::kWindowedSinc, 8, true}, 64);
  CHECK(table.total_coefficients() == 512);
  CHECK(table.filters.size() == 64);
  for (int i = 1; i <= 8; ++i) {
    CHECK(table.at(0).coefficients[i - 1] == (i == 4 ? 1.0 : 0.0));
  }

  const FilterTable trivial = build_filter_table({FilterKind::kPolynomial, 2, true}, 1);
  CHECK(trivial.filters.size() == 1);
  CHECK(trivial.at(0).coefficients == std::vector<double>{1.0, 0.0});
}

TEST_CASE("table entries equal on-the-fly derivation bit for bit") {
  const std::vector<std::pair<FilterSpec, int>> cases = {
      {{FilterKind::kPolynomial, 4, true}, 4},
      {{FilterKind::kPolynomial, 2, true}, 16},
      {{FilterKind::kWindowedSinc, 8, true}, 64},
  };
  for (const auto& [spec, delta] : cases) {
    const FilterTable table = build_filter_table(spec, delta);
    for (int q = 0; q < delta; ++q) {
      const Filter direct = derive_filter(spec, static_cast<double>(q) / delta);
      CHECK(table.at(q).coefficients == direct.coefficients);
      CHECK(table.at(q).fraction == direct.fraction);
    }
  }
  const FilterTable quarter = build_filter_table({FilterKind::kPolynomial, 4, true}, 4);
  CHECK(quarter.at(2).coefficients == derive_polynomial_filter(4, 0.5).coefficients);
}

TEST_CASE("filter table rejects non-positive delta") {
  CHECK_THROWS_AS(build_filter_table({FilterKind::kWindowedSinc, 8, true}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_filter_table({FilterKind::kWindowedSinc, 8, true}, -3),
                  std::invalid_argument);
}

TEST_CASE("codec presets carry the expected parameters") {
  const std::vector<McPreset>& presets = codec_presets();
  REQUIRE(presets.size() == 5);
  CHECK(presets[0].name == std::string("hevc"));
  CHECK(presets[0].kind == FilterKind::kWindowedSinc);
  CHECK(presets[0].taps == 8);
  CHECK(presets[0].delta == 4);
  CHECK(presets[2].taps == 12);
  CHECK(presets[2].delta == 64);
  CHECK(presets[2].block_max == 256);
  // the learned-codec baselines: bilinear, pixel-wise, unquantized
  for (std::size_t i = 3; i < 5; ++i) {
    CHECK(presets[i].kind == FilterKind::kPolynomial);
    CHECK(presets[i].taps == 2);
    CHECK(presets[i].block_min == 1);
    CHECK(presets[i].delta == 0);
  }
}
