// SPDX-License-Identifier: BSD-3-Clause
//
// subpel: sub-pixel motion compensation bench. Warping runs, filter table
// dumps, complexity grids, displacement-quantization sweeps and synthetic
// test data, all driven from raw planar YUV plus .mvf motion fields.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subpel/complexity.hpp"
#include "subpel/frameio.hpp"
#include "subpel/motion.hpp"
#include "subpel/version.hpp"
#include "subpel/warp.hpp"

namespace {

using nlohmann::json;
using namespace subpel;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_rational(const Rational& r) {
  if (r.is_integer()) {
    return std::to_string(r.num());
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", r.to_double());
  return buf;
}

struct SizeArg {
  int width = 0;
  int height = 0;
};

SizeArg parse_size(const std::string& text) {
  SizeArg size;
  char sep = 0;
  std::istringstream in(text);
  if (!(in >> size.width >> sep >> size.height) || (sep != 'x' && sep != 'X') ||
      size.width < 1 || size.height < 1) {
    throw CLI::ValidationError("--size", "expected WxH with positive integers, got '" + text + "'");
  }
  return size;
}

QuantSpec parse_delta(const std::string& text) {
  if (text == "inf" || text == "infinite") {
    return QuantSpec::unquantized();
  }
  int delta = 0;
  try {
    delta = std::stoi(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--delta", "expected a positive integer or 'inf', got '" + text + "'");
  }
  if (delta < 1) {
    throw CLI::ValidationError("--delta", "delta must be >= 1, got '" + text + "'");
  }
  return QuantSpec::finite(delta);
}

FilterKind parse_kind(const std::string& text) {
  if (text == "poly") {
    return FilterKind::kPolynomial;
  }
  if (text == "sinc") {
    return FilterKind::kWindowedSinc;
  }
  throw CLI::ValidationError("--filter", "expected 'poly' or 'sinc', got '" + text + "'");
}

std::pair<double, double> parse_pair(const std::string& text, const char* flag) {
  double a = 0.0;
  double b = 0.0;
  char sep = 0;
  std::istringstream in(text);
  if (!(in >> a >> sep >> b) || sep != ',') {
    throw CLI::ValidationError(flag, "expected two comma-separated numbers, got '" + text + "'");
  }
  return {a, b};
}

// All file outputs go through a temp + rename so readers never observe a
// partially written file.
class AtomicPath {
 public:
  explicit AtomicPath(const std::string& path)
      : final_(path), temp_(path + ".tmp") {}

  const std::string& temp() const { return temp_; }

  void commit() {
    std::filesystem::rename(temp_, final_);
    committed_ = true;
  }

  ~AtomicPath() {
    if (!committed_) {
      std::error_code ignored;
      std::filesystem::remove(temp_, ignored);
    }
  }

 private:
  std::string final_;
  std::string temp_;
  bool committed_ = false;
};

void write_text_atomic(const std::string& path, const std::string& content) {
  AtomicPath atomic(path);
  {
    std::ofstream out(atomic.temp(), std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + atomic.temp() + " for writing");
    }
    out << content;
    if (!out) {
      throw std::runtime_error("write failed for " + atomic.temp());
    }
  }
  atomic.commit();
}

void write_yuv_atomic(const Frame& frame, const RawVideoSpec& spec, const std::string& path) {
  AtomicPath atomic(path);
  write_yuv(frame, spec, atomic.temp());
  atomic.commit();
}

void write_mvf_atomic(const MotionField& field, const std::string& path) {
  AtomicPath atomic(path);
  write_mvf(field, atomic.temp());
  atomic.commit();
}

// Every output file is accompanied by a manifest with everything needed to
// reproduce the run.
class Manifest {
 public:
  Manifest(std::string command) : start_(std::chrono::steady_clock::now()) {
    doc_["tool"] = "subpel";
    doc_["version"] = kVersion;
    doc_["command"] = std::move(command);
    doc_["parameters"] = json::object();
  }

  template <typename T>
  void param(const std::string& key, const T& value) {
    doc_["parameters"][key] = value;
  }

  void output(const std::string& path) { outputs_.push_back(path); }

  void write(const std::string& primary_output) {
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start_);
    doc_["elapsed_ms"] = elapsed.count();
    doc_["outputs"] = outputs_;
    write_text_atomic(primary_output + ".manifest.json", doc_.dump(2) + "\n");
  }

 private:
  json doc_;
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_;
};

struct VideoArgs {
  std::string size_text;
  int bit_depth = 8;
  std::string chroma_text = "444";

  RawVideoSpec spec() const {
    const SizeArg size = parse_size(size_text);
    RawVideoSpec spec;
    spec.width = size.width;
    spec.height = size.height;
    spec.bit_depth = bit_depth;
    if (chroma_text == "444") {
      spec.chroma = ChromaFormat::kYuv444;
    } else if (chroma_text == "420") {
      spec.chroma = ChromaFormat::kYuv420;
    } else {
      throw CLI::ValidationError("--chroma", "expected 444 or 420, got '" + chroma_text + "'");
    }
    return spec;
  }
};

void add_video_flags(CLI::App* cmd, VideoArgs& args) {
  cmd->add_option("--size", args.size_text, "frame dimensions as WxH")->required();
  cmd->add_option("--bitdepth", args.bit_depth, "sample bit depth (8 or 10)")
      ->check(CLI::IsMember({8, 10}));
  cmd->add_option("--chroma", args.chroma_text, "chroma format of the input (444 or 420)");
}

struct FilterArgs {
  std::string kind_text = "sinc";
  int taps = 8;
  std::string delta_text = "64";

  FilterSpec filter_spec() const {
    FilterSpec spec;
    spec.kind = parse_kind(kind_text);
    spec.taps = taps;
    validate(spec);
    return spec;
  }
  QuantSpec quant_spec() const { return parse_delta(delta_text); }
};

void add_filter_flags(CLI::App* cmd, FilterArgs& args) {
  cmd->add_option("--filter", args.kind_text, "filter family: poly or sinc");
  cmd->add_option("--taps", args.taps, "filter length N (even)");
  cmd->add_option("--delta", args.delta_text,
                  "fractional displacement positions per pixel, or 'inf'");
}

std::string filter_table_csv(const FilterTable& table) {
  std::string csv = "kind,N,delta,q,s,i,h_i\n";
  for (int q = 0; q < table.delta; ++q) {
    const Filter& filter = table.at(q);
    for (int i = 1; i <= table.spec.taps; ++i) {
      csv += to_string(table.spec.kind);
      csv += ',' + std::to_string(table.spec.taps);
      csv += ',' + std::to_string(table.delta);
      csv += ',' + std::to_string(q);
      csv += ',' + format_double(filter.fraction);
      csv += ',' + std::to_string(i);
      csv += ',' + format_double(filter.coefficients[static_cast<std::size_t>(i - 1)]);
      csv += '\n';
    }
  }
  return csv;
}

int run_filters(const FilterArgs& filter_args, const std::string& out_path) {
  Manifest manifest("filters");
  manifest.param("filter", filter_args.kind_text);
  manifest.param("taps", filter_args.taps);
  manifest.param("delta", filter_args.delta_text);
  manifest.param("csv", out_path);

  const QuantSpec quant = filter_args.quant_spec();
  if (quant.infinite) {
    throw std::runtime_error("a filter table needs a finite --delta");
  }
  const FilterTable table = build_filter_table(filter_args.filter_spec(), quant.delta);
  write_text_atomic(out_path, filter_table_csv(table));
  manifest.output(out_path);
  manifest.write(out_path);
  std::cout << "wrote " << out_path << ": " << table.total_coefficients() << " coefficients ("
            << to_string(table.spec.kind) << " N=" << table.spec.taps
            << " delta=" << table.delta << ")\n";
  return 0;
}

void report_macs(const MacCounter& macs, int channels) {
  const Rational per_pixel = macs.per_pixel();
  const Rational per_plane = per_pixel * Rational(1, channels);
  std::cout << "mac_total=" << macs.total_macs << "\n";
  std::cout << "mac_per_pixel=" << format_rational(per_pixel) << "\n";
  std::cout << "mac_per_plane_warp=" << format_rational(per_plane) << "\n";
}

void report_psnr(const Frame& frame, const std::string& target_path, const RawVideoSpec& spec,
                 int frame_index) {
  const Frame target = read_yuv(target_path, spec, frame_index);
  const QualityResult quality = psnr(frame, target);
  std::cout << "psnr_avg=" << format_double(quality.psnr_avg) << "\n";
  for (std::size_t ch = 0; ch < quality.psnr_per_channel.size(); ++ch) {
    std::cout << "psnr_ch" << ch << "=" << format_double(quality.psnr_per_channel[ch]) << "\n";
  }
}

int run_warp(const VideoArgs& video, const FilterArgs& filter_args, const std::string& ref_path,
             const std::string& mvf_path, int block_check, const std::string& out_path,
             const std::string& target_path, int frame_index) {
  Manifest manifest("warp");
  manifest.param("ref", ref_path);
  manifest.param("mvf", mvf_path);
  manifest.param("size", video.size_text);
  manifest.param("bitdepth", video.bit_depth);
  manifest.param("chroma", video.chroma_text);
  manifest.param("filter", filter_args.kind_text);
  manifest.param("taps", filter_args.taps);
  manifest.param("delta", filter_args.delta_text);
  manifest.param("out", out_path);
  manifest.param("frame_index", frame_index);
  if (!target_path.empty()) {
    manifest.param("target", target_path);
  }

  const RawVideoSpec spec = video.spec();
  const Frame ref = read_yuv(ref_path, spec, frame_index);
  const MotionField field = read_mvf(mvf_path);
  if (block_check > 0 && field.block_size != block_check) {
    throw std::runtime_error("motion field uses block size " + std::to_string(field.block_size) +
                             " but --block says " + std::to_string(block_check));
  }
  manifest.param("block", field.block_size);

  const WarpConfig config =
      make_warp_config(filter_args.filter_spec(), filter_args.quant_spec(), /*precompute=*/true);
  const WarpResult result = warp_block(ref, field, config);

  RawVideoSpec out_spec = spec;
  out_spec.chroma = ChromaFormat::kYuv444;
  write_yuv_atomic(result.frame, out_spec, out_path);
  manifest.output(out_path);
  manifest.write(out_path);

  std::cout << "wrote " << out_path << " (" << ref.width << "x" << ref.height << ", "
            << ref.channels() << " channels, " << spec.bit_depth << "-bit)\n";
  report_macs(result.macs, ref.channels());
  if (!target_path.empty()) {
    report_psnr(result.frame, target_path, out_spec, 0);
  }
  return 0;
}

int run_predict(const VideoArgs& video, const FilterArgs& filter_args, const std::string& ref0,
                const std::string& mvf0, const std::string& ref1, const std::string& mvf1,
                double alpha, const std::string& out_path, const std::string& target_path) {
  Manifest manifest("predict");
  manifest.param("ref0", ref0);
  manifest.param("mvf0", mvf0);
  manifest.param("ref1", ref1);
  manifest.param("mvf1", mvf1);
  manifest.param("alpha", alpha);
  manifest.param("size", video.size_text);
  manifest.param("bitdepth", video.bit_depth);
  manifest.param("chroma", video.chroma_text);
  manifest.param("filter", filter_args.kind_text);
  manifest.param("taps", filter_args.taps);
  manifest.param("delta", filter_args.delta_text);
  manifest.param("out", out_path);
  if (!target_path.empty()) {
    manifest.param("target", target_path);
  }

  const RawVideoSpec spec = video.spec();
  const Frame frame0 = read_yuv(ref0, spec, 0);
  const Frame frame1 = read_yuv(ref1, spec, 0);
  const MotionField field0 = read_mvf(mvf0);
  const MotionField field1 = read_mvf(mvf1);
  manifest.param("block0", field0.block_size);
  manifest.param("block1", field1.block_size);

  const WarpConfig config =
      make_warp_config(filter_args.filter_spec(), filter_args.quant_spec(), /*precompute=*/true);
  const PredictResult result =
      predict_bidir(frame0, field0, frame1, field1, BlendWeights::scalar(alpha), config);

  RawVideoSpec out_spec = spec;
  out_spec.chroma = ChromaFormat::kYuv444;
  write_yuv_atomic(result.frame, out_spec, out_path);
  manifest.output(out_path);
  manifest.write(out_path);

  std::cout << "wrote " << out_path << "\n";
  std::cout << "mc_mac_per_pixel=" << format_rational(result.macs.per_pixel()) << "\n";
  std::cout << "blend_mults=" << result.blend_mults << "\n";
  if (!target_path.empty()) {
    report_psnr(result.frame, target_path, out_spec, 0);
  }
  return 0;
}

// Uniform-fraction instrumented warp for one grid cell; 64x64 single channel
// so every block is full and the measured rate matches the closed form.
Rational measure_cell(int taps, int block) {
  const Frame frame = synth_bandlimited(64, 64, 0.5, 1);
  const MotionField field = make_motion_field(64, 64, block, {2.25, -1.75});
  FilterSpec spec;
  spec.kind = taps <= 4 ? FilterKind::kPolynomial : FilterKind::kWindowedSinc;
  spec.taps = taps;
  const WarpConfig config = make_warp_config(spec, QuantSpec::unquantized(), false);
  return warp_block(frame, field, config).macs.per_pixel();
}

int run_complexity(const std::string& csv_path, bool measure) {
  std::vector<ComplexityReport> grid = table2_grid();
  if (measure) {
    for (ComplexityReport& cell : grid) {
      cell.measured = measure_cell(cell.n_taps, cell.block_size);
    }
  }

  std::cout << "Motion compensation complexity (MAC per decoded pixel):\n";
  std::cout << "6 x block-based warp cost, for bi-directional YUV444 prediction\n\n";
  std::printf("  %-8s", "B \\ N");
  for (int taps : kGridTaps) {
    std::printf("%8d", taps);
  }
  std::printf("   %s\n", "motion decoding*");
  std::size_t row = 0;
  for (int block : kGridBlockSizes) {
    std::printf("  %-8d", block);
    for (std::size_t col = 0; col < std::size(kGridTaps); ++col) {
      const ComplexityReport& cell = grid[row * std::size(kGridTaps) + col];
      std::printf("%8" PRId64, cell.mc_total_bframe.rounded_half_up());
    }
    std::printf("   %d\n", kMotionDecodingReference[row]);
    ++row;
  }
  std::cout << "\n  * Cool-chic reference decoder measurements, reported as external"
               " context; not computed here.\n";
  for (const ComplexityReport& cell : grid) {
    if (!cell.mc_total_bframe.is_integer()) {
      std::cout << "  note: N=" << cell.n_taps << ", B=" << cell.block_size << " is exactly "
                << format_rational(cell.mc_total_bframe) << ", shown rounded half-up as "
                << cell.mc_total_bframe.rounded_half_up() << "\n";
    }
  }
  if (measure) {
    bool all_match = true;
    for (const ComplexityReport& cell : grid) {
      const bool match = *cell.measured == cell.c2d_block;
      all_match = all_match && match;
      if (!match) {
        std::cout << "  measured mismatch at N=" << cell.n_taps << ", B=" << cell.block_size
                  << ": " << format_rational(*cell.measured) << " vs "
                  << format_rational(cell.c2d_block) << "\n";
      }
    }
    std::cout << (all_match ? "  measured: all 12 cells match the closed form exactly\n"
                            : "  measured: MISMATCH, see above\n");
  }

  if (!csv_path.empty()) {
    std::string csv = "B,N,c2d_block,mc_bframe,measured\n";
    for (const ComplexityReport& cell : grid) {
      csv += std::to_string(cell.block_size);
      csv += ',' + std::to_string(cell.n_taps);
      csv += ',' + format_double(cell.c2d_block.to_double());
      csv += ',' + format_double(cell.mc_total_bframe.to_double());
      csv += ',';
      csv += cell.measured ? format_double(cell.measured->to_double()) : std::string();
      csv += '\n';
    }
    if (csv_path == "-") {
      std::cout << csv;
    } else {
      Manifest manifest("complexity");
      manifest.param("csv", csv_path);
      manifest.param("measure", measure);
      write_text_atomic(csv_path, csv);
      manifest.output(csv_path);
      manifest.write(csv_path);
      std::cout << "wrote " << csv_path << "\n";
    }
  }
  return 0;
}

int run_quantsweep(const VideoArgs& video, const FilterArgs& filter_args,
                   const std::string& ref_path, const std::string& mvf_path,
                   const std::string& target_path, const std::string& deltas_text,
                   const std::string& csv_path) {
  Manifest manifest("quantsweep");
  manifest.param("ref", ref_path);
  manifest.param("mvf", mvf_path);
  manifest.param("target", target_path);
  manifest.param("size", video.size_text);
  manifest.param("bitdepth", video.bit_depth);
  manifest.param("chroma", video.chroma_text);
  manifest.param("filter", filter_args.kind_text);
  manifest.param("taps", filter_args.taps);
  manifest.param("deltas", deltas_text);
  manifest.param("csv", csv_path);

  std::vector<int> deltas;
  std::stringstream stream(deltas_text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) {
      continue;
    }
    deltas.push_back(std::stoi(token));
    if (deltas.back() < 1) {
      throw std::runtime_error("deltas must be >= 1, got " + token);
    }
  }
  if (deltas.empty()) {
    throw std::runtime_error("--deltas needs at least one value");
  }

  const RawVideoSpec spec = video.spec();
  const Frame ref = read_yuv(ref_path, spec, 0);
  const Frame target = read_yuv(target_path, spec, 0);
  const MotionField field = read_mvf(mvf_path);
  manifest.param("block", field.block_size);
  const FilterSpec filter_spec = filter_args.filter_spec();

  const WarpConfig exact_config =
      make_warp_config(filter_spec, QuantSpec::unquantized(), false);
  const Frame exact = warp_block(ref, field, exact_config).frame;

  std::string csv = "delta,psnr_vs_target,psnr_vs_unquantized\n";
  auto emit = [&](const std::string& label, const Frame& warped) {
    const double vs_target = psnr(warped, target).psnr_avg;
    const double vs_exact = psnr(warped, exact).psnr_avg;
    csv += label + ',' + format_double(vs_target) + ',' + format_double(vs_exact) + '\n';
    std::cout << "delta=" << label << " psnr_vs_target=" << format_double(vs_target)
              << " psnr_vs_unquantized=" << format_double(vs_exact) << "\n";
  };
  for (int delta : deltas) {
    const WarpConfig config =
        make_warp_config(filter_spec, QuantSpec::finite(delta), /*precompute=*/true);
    emit(std::to_string(delta), warp_block(ref, field, config).frame);
  }
  emit("inf", exact);

  write_text_atomic(csv_path, csv);
  manifest.output(csv_path);
  manifest.write(csv_path);
  std::cout << "wrote " << csv_path << "\n";
  return 0;
}

int run_synth(const std::string& size_text, double cutoff, std::uint64_t seed,
              const std::string& shift_text, int block, int bit_depth,
              const std::string& out_dir) {
  Manifest manifest("synth");
  manifest.param("size", size_text);
  manifest.param("cutoff", cutoff);
  manifest.param("seed", seed);
  manifest.param("shift", shift_text);
  manifest.param("block", block);
  manifest.param("bitdepth", bit_depth);
  manifest.param("out", out_dir);

  const SizeArg size = parse_size(size_text);
  const auto [shift_c, shift_r] = parse_pair(shift_text, "--shift");
  std::filesystem::create_directories(out_dir);

  // Three independent channels so channel-averaged PSNR stays informative.
  Frame base = make_frame(size.width, size.height, 3, 0.0, bit_depth);
  Frame shifted = base;
  for (int ch = 0; ch < 3; ++ch) {
    const std::uint64_t ch_seed = seed + static_cast<std::uint64_t>(ch);
    base.planes[static_cast<std::size_t>(ch)] =
        synth_bandlimited(size.width, size.height, cutoff, ch_seed).planes[0];
    shifted.planes[static_cast<std::size_t>(ch)] =
        synth_bandlimited(size.width, size.height, cutoff, ch_seed, shift_c, shift_r).planes[0];
  }

  // Backward warping: reconstructing `shifted` from `base` samples the
  // reference at the opposite displacement.
  const MotionField field =
      make_motion_field(size.width, size.height, block, {-shift_c, -shift_r});

  RawVideoSpec spec;
  spec.width = size.width;
  spec.height = size.height;
  spec.bit_depth = bit_depth;
  spec.chroma = ChromaFormat::kYuv444;

  const std::string base_path = out_dir + "/base.yuv";
  const std::string shifted_path = out_dir + "/shifted.yuv";
  const std::string mvf_path = out_dir + "/motion.mvf";
  write_yuv_atomic(base, spec, base_path);
  write_yuv_atomic(shifted, spec, shifted_path);
  write_mvf_atomic(field, mvf_path);
  manifest.output(base_path);
  manifest.output(shifted_path);
  manifest.output(mvf_path);
  manifest.write(base_path);

  std::cout << "wrote " << base_path << " " << shifted_path << " " << mvf_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sub-pixel motion compensation bench"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // filters
  auto* filters_cmd = app.add_subcommand("filters", "dump a precomputed filter table as CSV");
  FilterArgs filters_filter;
  std::string filters_csv = "filters.csv";
  add_filter_flags(filters_cmd, filters_filter);
  filters_cmd->add_option("--csv", filters_csv, "output CSV path");

  // warp
  auto* warp_cmd = app.add_subcommand("warp", "warp a frame by a motion field");
  VideoArgs warp_video;
  FilterArgs warp_filter;
  std::string warp_ref;
  std::string warp_mvf;
  std::string warp_out = "warped.yuv";
  std::string warp_target;
  int warp_block_check = 0;
  int warp_frame_index = 0;
  warp_cmd->add_option("--ref", warp_ref, "reference frame (raw YUV)")->required();
  warp_cmd->add_option("--mvf", warp_mvf, "motion field (.mvf)")->required();
  add_video_flags(warp_cmd, warp_video);
  add_filter_flags(warp_cmd, warp_filter);
  warp_cmd->add_option("--block", warp_block_check,
                       "expected motion block size; fails when the .mvf disagrees");
  warp_cmd->add_option("--out", warp_out, "output YUV path");
  warp_cmd->add_option("--target", warp_target, "frame to report PSNR against");
  warp_cmd->add_option("--frame-index", warp_frame_index, "frame index in the reference file");

  // predict
  auto* predict_cmd =
      app.add_subcommand("predict", "bi-directional prediction from two references");
  VideoArgs predict_video;
  FilterArgs predict_filter;
  std::string predict_ref0;
  std::string predict_mvf0;
  std::string predict_ref1;
  std::string predict_mvf1;
  std::string predict_out = "prediction.yuv";
  std::string predict_target;
  double predict_alpha = 0.5;
  predict_cmd->add_option("--ref0", predict_ref0, "first reference frame")->required();
  predict_cmd->add_option("--mvf0", predict_mvf0, "motion field for ref0")->required();
  predict_cmd->add_option("--ref1", predict_ref1, "second reference frame")->required();
  predict_cmd->add_option("--mvf1", predict_mvf1, "motion field for ref1")->required();
  add_video_flags(predict_cmd, predict_video);
  add_filter_flags(predict_cmd, predict_filter);
  predict_cmd->add_option("--alpha", predict_alpha, "blend weight for ref0 in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  predict_cmd->add_option("--out", predict_out, "output YUV path");
  predict_cmd->add_option("--target", predict_target, "frame to report PSNR against");

  // complexity
  auto* complexity_cmd =
      app.add_subcommand("complexity", "print the motion-compensation complexity grid");
  std::string complexity_csv;
  bool complexity_measure = false;
  complexity_cmd->add_option("--csv", complexity_csv, "CSV output path, or '-' for stdout");
  complexity_cmd->add_flag("--measure", complexity_measure,
                           "run instrumented warps and check them against the closed form");

  // quantsweep
  auto* sweep_cmd =
      app.add_subcommand("quantsweep", "sweep displacement quantization over delta values");
  VideoArgs sweep_video;
  FilterArgs sweep_filter;
  std::string sweep_ref;
  std::string sweep_mvf;
  std::string sweep_target;
  std::string sweep_deltas = "8,16,32,64,128";
  std::string sweep_csv = "quantsweep.csv";
  sweep_cmd->add_option("--ref", sweep_ref, "reference frame (raw YUV)")->required();
  sweep_cmd->add_option("--mvf", sweep_mvf, "motion field (.mvf)")->required();
  sweep_cmd->add_option("--target", sweep_target, "ground-truth frame")->required();
  add_video_flags(sweep_cmd, sweep_video);
  add_filter_flags(sweep_cmd, sweep_filter);
  sweep_cmd->add_option("--deltas", sweep_deltas, "comma-separated delta values");
  sweep_cmd->add_option("--csv", sweep_csv, "output CSV path");

  // synth
  auto* synth_cmd =
      app.add_subcommand("synth", "generate a band-limited frame pair plus motion field");
  std::string synth_size = "64x64";
  std::string synth_shift = "0.5,0.25";
  std::string synth_out = ".";
  double synth_cutoff = 0.7;
  std::uint64_t synth_seed = 11;
  int synth_block = 4;
  int synth_bitdepth = 8;
  synth_cmd->add_option("--size", synth_size, "frame dimensions as WxH");
  synth_cmd->add_option("--cutoff", synth_cutoff, "spectral cutoff as a fraction of Nyquist")
      ->check(CLI::Range(0.0, 1.0));
  synth_cmd->add_option("--seed", synth_seed, "generator seed");
  synth_cmd->add_option("--shift", synth_shift, "sub-pixel content shift as SC,SR");
  synth_cmd->add_option("--block", synth_block, "block size of the emitted motion field");
  synth_cmd->add_option("--bitdepth", synth_bitdepth, "sample bit depth (8 or 10)")
      ->check(CLI::IsMember({8, 10}));
  synth_cmd->add_option("--out", synth_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (filters_cmd->parsed()) {
      return run_filters(filters_filter, filters_csv);
    }
    if (warp_cmd->parsed()) {
      return run_warp(warp_video, warp_filter, warp_ref, warp_mvf, warp_block_check, warp_out,
                      warp_target, warp_frame_index);
    }
    if (predict_cmd->parsed()) {
      return run_predict(predict_video, predict_filter, predict_ref0, predict_mvf0, predict_ref1,
                         predict_mvf1, predict_alpha, predict_out, predict_target);
    }
    if (complexity_cmd->parsed()) {
      return run_complexity(complexity_csv, complexity_measure);
    }
    if (sweep_cmd->parsed()) {
      return run_quantsweep(sweep_video, sweep_filter, sweep_ref, sweep_mvf, sweep_target,
                            sweep_deltas, sweep_csv);
    }
    if (synth_cmd->parsed()) {
      return run_synth(synth_size, synth_cutoff, synth_seed, synth_shift, synth_block,
                       synth_bitdepth, synth_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
