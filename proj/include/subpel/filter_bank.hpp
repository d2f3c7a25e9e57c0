// SPDX-License-Identifier: BSD-3-Clause

#ifndef SUBPEL_FILTER_BANK_HPP_
#define SUBPEL_FILTER_BANK_HPP_

#include <string>
#include <vector>

namespace subpel {

// Two filter families for fractional-pel interpolation:
//  - Polynomial: linear (N=2) and cubic (N=4) filters obtained from a fixed
//    coefficient matrix applied to the powers of the fractional displacement.
//  - WindowedSinc: cosine-windowed sinc of any even length, the family used
//    by conventional codec luma interpolation.
enum class FilterKind {
  kPolynomial,
  kWindowedSinc,
};

const char* to_string(FilterKind kind);

struct FilterSpec {
  FilterKind kind = FilterKind::kWindowedSinc;
  int taps = 8;           // even, >= 2; Polynomial only supports 2 or 4
  bool normalize = true;  // WindowedSinc: rescale taps to unit DC gain
};

// Throws std::invalid_argument on unsupported (kind, taps) combinations.
void validate(const FilterSpec& spec);

// An N-tap filter for one fractional displacement in [0, 1).
struct Filter {
  std::vector<double> coefficients;
  double fraction = 0.0;
};

// Writes `taps` coefficients into `out`. Hot-path variants used by the
// warping kernels to avoid per-pixel allocation. `fraction` in [0, 1].
void derive_polynomial_taps(int taps, double fraction, double* out);
void derive_sinc_taps(int taps, double fraction, bool normalize, double* out);
void derive_taps(const FilterSpec& spec, double fraction, double* out);

Filter derive_polynomial_filter(int taps, double fraction);
Filter derive_sinc_filter(int taps, double fraction, bool normalize = true);
Filter derive_filter(const FilterSpec& spec, double fraction);

// All filters for the `delta` representable fractions q/delta, q = 0..delta-1.
// Entry 0 is the identity filter. Immutable once built; safe to share across
// threads.
struct FilterTable {
  FilterSpec spec;
  int delta = 1;
  std::vector<Filter> filters;

  const Filter& at(int q) const { return filters[static_cast<std::size_t>(q)]; }
  std::size_t total_coefficients() const {
    return filters.size() * static_cast<std::size_t>(spec.taps);
  }
};

FilterTable build_filter_table(const FilterSpec& spec, int delta);

// Typical motion-compensation parameter sets of existing codecs. Block sizes
// are the supported range; delta == 0 means unquantized motion.
struct McPreset {
  const char* name;
  FilterKind kind;
  int taps;
  int block_min;
  int block_max;
  int delta;
};

const std::vector<McPreset>& codec_presets();

}  // namespace subpel

#endif  // SUBPEL_FILTER_BANK_HPP_
