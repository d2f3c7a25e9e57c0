// SPDX-License-Identifier: BSD-3-Clause

#include "subpel/filter_bank.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subpel {

namespace {

constexpr double kPi = std::numbers::pi;

// Linear and cubic filters come from h = M * [1, s, s^2, ...]^T. The cubic
// matrix carries a global 1/4 factor, kept out of the integer entries so
// dyadic fractions stay exact.
constexpr int kLinearMatrix[2][2] = {
    {1, -1},
    {0, 1},
};

constexpr int kCubicMatrix[4][4] = {
    {0, -3, 6, -3},
    {4, 0, -9, 5},
    {0, 3, 6, -5},
    {0, 0, -3, 3},
};

// sin(pi*u)/(pi*u), with exact zeros at nonzero integers and value 1 at 0.
// The exact-integer branch keeps the zero-displacement filter a true unit
// impulse instead of one polluted by sin(k*pi) rounding noise.
double normalized_sinc(double u) {
  if (u == std::nearbyint(u)) {
    return u == 0.0 ? 1.0 : 0.0;
  }
  const double pu = kPi * u;
  return std::sin(pu) / pu;
}

}  // namespace

const char* to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::kPolynomial:
      return "poly";
    case FilterKind::kWindowedSinc:
      return "sinc";
  }
  return "?";
}

void validate(const FilterSpec& spec) {
  if (spec.kind == FilterKind::kPolynomial) {
    if (spec.taps != 2 && spec.taps != 4) {
      throw std::invalid_argument("polynomial filters support N in {2, 4}, got N=" +
                                  std::to_string(spec.taps));
    }
  } else {
    if (spec.taps < 2 || spec.taps % 2 != 0) {
      throw std::invalid_argument("windowed-sinc filters need an even N >= 2, got N=" +
                                  std::to_string(spec.taps));
    }
  }
}

void derive_polynomial_taps(int taps, double fraction, double* out) {
  assert(fraction >= 0.0 && fraction <= 1.0);
  if (taps == 2) {
    for (int i = 0; i < 2; ++i) {
      out[i] = kLinearMatrix[i][0] + kLinearMatrix[i][1] * fraction;
    }
  } else if (taps == 4) {
    const double s2 = fraction * fraction;
    const double powers[4] = {1.0, fraction, s2, s2 * fraction};
    for (int i = 0; i < 4; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 4; ++j) {
        acc += kCubicMatrix[i][j] * powers[j];
      }
      out[i] = acc * 0.25;
    }
  } else {
    throw std::invalid_argument("polynomial filters support N in {2, 4}, got N=" +
                                std::to_string(taps));
  }
}

void derive_sinc_taps(int taps, double fraction, bool normalize, double* out) {
  if (taps < 2 || taps % 2 != 0) {
    throw std::invalid_argument("windowed-sinc filters need an even N >= 2, got N=" +
                                std::to_string(taps));
  }
  assert(fraction >= 0.0 && fraction <= 1.0);
  const int half = taps / 2;
  double sum = 0.0;
  for (int i = 1; i <= taps; ++i) {
    const int tap_offset = i - half;  // integer sample positions around the fraction
    const double offset = fraction - tap_offset;
    out[i - 1] = std::cos(offset * kPi / taps) * normalized_sinc(offset);
    sum += out[i - 1];
  }
  if (normalize) {
    // The cosine window is nonnegative over the tap range and the central
    // taps dominate, so the sum cannot vanish for fraction in [0, 1).
    assert(sum != 0.0);
    for (int i = 0; i < taps; ++i) {
      out[i] /= sum;
    }
  }
}

void derive_taps(const FilterSpec& spec, double fraction, double* out) {
  if (spec.kind == FilterKind::kPolynomial) {
    derive_polynomial_taps(spec.taps, fraction, out);
  } else {
    derive_sinc_taps(spec.taps, fraction, spec.normalize, out);
  }
}

Filter derive_polynomial_filter(int taps, double fraction) {
  Filter filter;
  filter.fraction = fraction;
  filter.coefficients.resize(static_cast<std::size_t>(taps > 0 ? taps : 0));
  derive_polynomial_taps(taps, fraction, filter.coefficients.data());
  return filter;
}

Filter derive_sinc_filter(int taps, double fraction, bool normalize) {
  Filter filter;
  filter.fraction = fraction;
  filter.coefficients.resize(static_cast<std::size_t>(taps > 0 ? taps : 0));
  derive_sinc_taps(taps, fraction, normalize, filter.coefficients.data());
  return filter;
}

Filter derive_filter(const FilterSpec& spec, double fraction) {
  validate(spec);
  if (spec.kind == FilterKind::kPolynomial) {
    return derive_polynomial_filter(spec.taps, fraction);
  }
  return derive_sinc_filter(spec.taps, fraction, spec.normalize);
}

FilterTable build_filter_table(const FilterSpec& spec, int delta) {
  validate(spec);
  if (delta < 1) {
    throw std::invalid_argument("filter table needs delta >= 1, got " + std::to_string(delta));
  }
  FilterTable table;
  table.spec = spec;
  table.delta = delta;
  table.filters.reserve(static_cast<std::size_t>(delta));
  for (int q = 0; q < delta; ++q) {
    table.filters.push_back(derive_filter(spec, static_cast<double>(q) / delta));
  }
  return table;
}

const std::vector<McPreset>& codec_presets() {
  static const std::vector<McPreset> presets = {
      {"hevc", FilterKind::kWindowedSinc, 8, 4, 64, 4},
      {"vvc", FilterKind::kWindowedSinc, 8, 4, 128, 16},
      {"ecm", FilterKind::kWindowedSinc, 12, 4, 256, 64},
      {"dcvc-fm", FilterKind::kPolynomial, 2, 1, 1, 0},
      {"coolchic-4.0", FilterKind::kPolynomial, 2, 1, 1, 0},
  };
  return presets;
}

}  // namespace subpel
