// rmt - random matrix spectra of signal-capture data
// Copyright (C) 2026 The rmt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rmt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "rmt/error.hpp"
#include "rmt/estimation.hpp"
#include "rmt/io.hpp"
#include "rmt/linalg.hpp"
#include "rmt/rng.hpp"
#include "rmt/signal.hpp"
#include "rmt/theory.hpp"

namespace rmt {
namespace {

namespace fs = std::filesystem;

constexpr std::size_t kAnalysisGridPoints = 1024;
constexpr std::size_t kProjectionGridPoints = 512;

// Eigenvalues repel, so their empirical density fluctuates far less than an
// i.i.d. sample of the same size and Silverman's rule oversmooths the hard
// edges of the MP support. Half the rule tracks the edges without getting
// noisy at p in the hundreds.
constexpr double kSpectrumBandwidthScale = 0.5;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

// Step-function view of a histogram on an arbitrary grid, with the continuous
// part scaled down to leave room for an atom at the origin.
DensityCurve histogram_on_grid(const Histogram& h, std::span<const double> grid, double atom) {
  DensityCurve out;
  out.xs.assign(grid.begin(), grid.end());
  out.ys.resize(grid.size(), 0.0);
  const double lo = h.edges.front();
  const double hi = h.edges.back();
  const double width = (hi - lo) / static_cast<double>(h.heights.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    if (x < lo || x > hi) continue;
    const auto bin = std::min(static_cast<std::size_t>((x - lo) / width), h.heights.size() - 1);
    out.ys[i] = h.heights[bin] * (1.0 - atom);
  }
  out.point_mass_at_zero = atom;
  return out;
}

fs::path default_projection_path(const fs::path& cloud) {
  fs::path p = cloud;
  p.replace_filename(cloud.stem().string() + "_proj.csv");
  return p;
}

// ---------------------------------------------------------------------------
// subcommands

void run_generate(const RunConfig& cfg, std::ostream& out) {
  const std::size_t wanted = cfg.rows * cfg.cols;
  constexpr std::size_t n_fft = 1024;
  const std::size_t frames = (wanted + n_fft - 1) / n_fft;
  // Real signals that go through the DFT need whole frames too.
  const std::size_t length = cfg.freq_domain ? frames * n_fft : wanted;

  SampleStream stream;
  switch (cfg.signal) {
    case SignalKind::Wgn:
      stream = gen_wgn({cfg.seed, length, WgnParams{cfg.variance}});
      break;
    case SignalKind::Narrowband: {
      NarrowbandParams p;
      if (cfg.carrier) p.carrier_norm = *cfg.carrier;
      if (cfg.band) p.band_norm = *cfg.band;
      if (cfg.symbol_rate) p.symbol_rate_norm = *cfg.symbol_rate;
      stream = gen_narrowband({cfg.seed, length, p});
      break;
    }
    case SignalKind::NcOfdm:
      stream = gen_ncofdm_frames({cfg.seed, 0, NcOfdmParams{n_fft, reference_occupied_tones()}}, frames);
      break;
  }
  if (cfg.snr_db) stream = add_awgn(stream, *cfg.snr_db, derive_seed(cfg.seed, kNoiseStream));
  if (cfg.freq_domain) stream = to_frequency_domain(stream, n_fft);

  if (stream.is_complex()) {
    write_capture(cfg.output, std::span(stream.complex()).first(wanted), cfg.rows, cfg.cols);
  } else {
    write_capture(cfg.output, stream_to_matrix(stream, cfg.rows, cfg.cols));
  }
  out << "wrote " << cfg.output << " (" << cfg.rows << "x" << cfg.cols
      << (stream.is_complex() ? " complex" : " real") << ")\n";
}

DataMatrix load_for_analysis(const RunConfig& cfg) {
  DataMatrix x = read_capture(cfg.input);
  return cfg.standardize ? standardize_rows(x) : x;
}

void run_analyze_cov(const RunConfig& cfg, std::ostream& out) {
  const DataMatrix x = load_for_analysis(cfg);
  const RealSpectrum spec = eigvals_symmetric(sample_covariance(x));
  const double c = cfg.c_override.value_or(static_cast<double>(x.rows()) / static_cast<double>(x.cols()));
  const MpParams mp = mp_params(c);

  const auto [nonzero, atom] = split_zero_atom(spec.values);
  if (nonzero.empty()) throw Error(ErrorCode::EmptySpectrum, "every eigenvalue is numerically zero");
  const double h = cfg.bandwidth.value_or(
      nonzero.size() > 1 ? kSpectrumBandwidthScale * silverman_bandwidth(nonzero) : 0.1);
  if (!(h > 0.0)) invalid("--bandwidth must be positive");

  const auto [lo_it, hi_it] = std::minmax_element(nonzero.begin(), nonzero.end());
  const double lo = std::min(*lo_it, mp.a) - 4.0 * h;
  const double hi = std::max(*hi_it, mp.b) + 4.0 * h;
  const auto grid = linspace(lo, hi, kAnalysisGridPoints);

  const Histogram hist = histogram_density(nonzero, cfg.bins.value_or(sturges_bins(nonzero.size())));
  const DensityCurve hist_curve = histogram_on_grid(hist, grid, atom);
  const DensityCurve kde = kde_estimate(spec, KernelConfig{KernelType::Gaussian, h}, grid);

  DensityCurve theory;
  theory.xs = grid;
  theory.ys.reserve(grid.size());
  for (double g : grid) theory.ys.push_back(mp_density(g, c));
  theory.point_mass_at_zero = mp.point_mass_at_zero;

  const std::vector<DensityCurve> curves{hist_curve, kde, theory};
  const std::vector<std::string> labels{"hist", "kde", "mp"};
  write_density_csv(cfg.output, curves, labels);

  const double ks = ks_distance(EsdFunction(spec), [c](double v) { return mp_cdf(v, c); });
  out << "eigenvalues=" << spec.values.size() << " c=" << format_g9(c) << " zero_fraction=" << format_g9(atom)
      << " bandwidth=" << format_g9(h) << " ks_vs_mp=" << format_g9(ks) << "\n";
}

void run_analyze_lagged(const RunConfig& cfg, std::ostream& out) {
  const DataMatrix x = load_for_analysis(cfg);
  const ComplexSpectrum spec = eigvals_general(lagged_correlation(x, static_cast<std::ptrdiff_t>(cfg.tau)));
  write_cloud_csv(cfg.output, spec.values);

  const auto [nonzero, atom] = split_zero_atom(spec.values);
  if (nonzero.empty()) throw Error(ErrorCode::EmptySpectrum, "every eigenvalue is numerically zero");
  const ComplexSpectrum rest{nonzero};
  const auto sx = complex_projection_samples(rest, Axis::X);
  const auto sy = complex_projection_samples(rest, Axis::Y);

  const auto [xlo, xhi] = std::minmax_element(sx.begin(), sx.end());
  const auto [ylo, yhi] = std::minmax_element(sy.begin(), sy.end());
  double lo = std::min(*xlo, *ylo);
  double hi = std::max(*xhi, *yhi);
  if (hi - lo <= 0.0) {
    lo -= 0.5;
    hi += 0.5;
  }
  const std::size_t bins = cfg.bins.value_or(sturges_bins(nonzero.size()));
  const auto grid = linspace(lo, hi, kProjectionGridPoints);
  const DensityCurve rx = histogram_on_grid(histogram_density(sx, bins), grid, atom);
  const DensityCurve ry = histogram_on_grid(histogram_density(sy, bins), grid, atom);

  const std::vector<DensityCurve> curves{rx, ry};
  const std::vector<std::string> labels{"sqrt2_re", "sqrt2_im"};
  const fs::path proj = cfg.projections.empty() ? default_projection_path(cfg.output) : fs::path(cfg.projections);
  write_density_csv(proj, curves, labels);

  std::size_t real_count = 0;
  for (const auto& v : nonzero) real_count += v.imag() == 0.0 ? 1 : 0;
  out << "eigenvalues=" << spec.values.size() << " tau=" << cfg.tau << " zero_fraction=" << format_g9(atom)
      << " real_fraction=" << format_g9(static_cast<double>(real_count) / static_cast<double>(spec.values.size()))
      << " projections=" << proj.string() << "\n";
}

void run_theory_mp(const RunConfig& cfg, std::ostream& out) {
  const DensityCurve curve = mp_density_curve(cfg.c);
  const std::vector<DensityCurve> curves{curve};
  const std::vector<std::string> labels{"mp"};
  write_density_csv(cfg.output, curves, labels);
  const MpParams mp = mp_params(cfg.c);
  out << "c=" << format_g9(cfg.c) << " a=" << format_g9(mp.a) << " b=" << format_g9(mp.b)
      << " point_mass=" << format_g9(mp.point_mass_at_zero) << "\n";
}

void run_theory_lagged(const RunConfig& cfg, std::ostream& out) {
  GreenSolveConfig g;
  g.q = cfg.q;
  g.epsilon = cfg.epsilon;
  const LaggedDensity rho = lagged_density_symmetric(g);
  const DensityCurve rx = resample(project_density(rho.curve, Axis::X), rho.curve.xs);
  const std::vector<DensityCurve> curves{rho.curve, rx};
  const std::vector<std::string> labels{"rho_s", "rho_x"};
  write_density_csv(cfg.output, curves, labels);
  out << "q=" << format_g9(cfg.q) << " epsilon=" << format_g9(cfg.epsilon)
      << " mass=" << format_g9(rho.curve.total_mass()) << " max_backward_error=" << format_g9(rho.max_backward_error)
      << " max_clamped=" << format_g9(rho.max_clamped) << "\n";
}

void run_compare(const RunConfig& cfg, std::ostream& out) {
  const DensityTable emp = read_density_csv(cfg.empirical);
  const DensityTable th = read_density_csv(cfg.theory);
  if (emp.labels.empty() || th.labels.empty()) throw Error(ErrorCode::BadCsv, "density table without columns");

  std::string emp_col = cfg.empirical_column;
  if (emp_col.empty())
    emp_col = std::find(emp.labels.begin(), emp.labels.end(), "kde") != emp.labels.end() ? "kde" : emp.labels.front();
  const std::string th_col = cfg.theory_column.empty() ? th.labels.front() : cfg.theory_column;

  const DensityCurve& a = emp.get(emp_col);
  const DensityCurve& b = th.get(th_col);
  const double ks = cdf_ks_distance(a, b);
  const L1Result l1 = l1_distance(a, b);

  std::ostringstream report;
  report << "empirical=" << cfg.empirical << ":" << emp_col << "\n"
         << "theory=" << cfg.theory << ":" << th_col << "\n"
         << "ks=" << format_g9(ks) << "\n"
         << "l1=" << format_g9(l1.distance) << "\n"
         << "disjoint_supports=" << (l1.disjoint_supports ? 1 : 0) << "\n";
  write_file_atomic(cfg.output, report.str());
  out << report.str();
}

// ---------------------------------------------------------------------------
// parsing

struct Parser {
  CLI::App app{"Random-matrix spectra of signal captures", "rmt"};
  CLI::App* generate = nullptr;
  CLI::App* analyze = nullptr;
  CLI::App* analyze_cov = nullptr;
  CLI::App* analyze_lagged = nullptr;
  CLI::App* theory = nullptr;
  CLI::App* theory_mp = nullptr;
  CLI::App* theory_lagged = nullptr;
  CLI::App* compare = nullptr;

  explicit Parser(RunConfig& cfg) {
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    generate = app.add_subcommand("generate", "Synthesize a capture file");
    static const std::map<std::string, SignalKind> kinds{
        {"wgn", SignalKind::Wgn}, {"narrowband", SignalKind::Narrowband}, {"ncofdm", SignalKind::NcOfdm}};
    generate->add_option("--signal", cfg.signal, "wgn | narrowband | ncofdm")
        ->required()
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    generate->add_option("--seed", cfg.seed, "PRNG seed")->required();
    generate->add_option("--rows", cfg.rows, "Rows of the capture (complex rows for ncofdm)")->required();
    generate->add_option("--cols", cfg.cols, "Samples per row")->required();
    generate->add_option("--snr-db", cfg.snr_db, "Add receiver noise at this SNR");
    generate->add_flag("--freq-domain", cfg.freq_domain, "Per-1024-sample DFT before framing");
    generate->add_option("--variance", cfg.variance, "wgn variance")->capture_default_str();
    generate->add_option("--carrier", cfg.carrier, "narrowband carrier, cycles/sample");
    generate->add_option("--band", cfg.band, "narrowband occupied band, cycles/sample");
    generate->add_option("--symbol-rate", cfg.symbol_rate, "narrowband symbol rate, symbols/sample");
    generate->add_option("-o,--output", cfg.output, "Capture path")->required();

    analyze = app.add_subcommand("analyze", "Eigen-analysis of a capture");
    analyze->require_subcommand(1);
    analyze_cov = analyze->add_subcommand("cov", "Sample covariance spectrum vs Marcenko-Pastur");
    analyze_cov->add_option("-i,--input", cfg.input, "Capture path")->required();
    analyze_cov->add_flag("--no-standardize{false}", cfg.standardize, "Use rows as stored");
    analyze_cov->add_option("--bins", cfg.bins, "Histogram bins (default: Sturges)");
    analyze_cov->add_option("--bandwidth", cfg.bandwidth, "KDE bandwidth (default: half the Silverman rule)");
    analyze_cov->add_option("--c", cfg.c_override, "Override the ratio rows/cols");
    analyze_cov->add_option("-o,--output", cfg.output, "Density CSV path")->required();

    analyze_lagged = analyze->add_subcommand("lagged", "Complex spectrum of the lagged correlation matrix");
    analyze_lagged->add_option("-i,--input", cfg.input, "Capture path")->required();
    analyze_lagged->add_option("--tau", cfg.tau, "Lag in samples")->required();
    analyze_lagged->add_option("--bins", cfg.bins, "Histogram bins (default: Sturges)");
    analyze_lagged->add_option("--projections", cfg.projections, "Projection CSV (default: <output>_proj.csv)");
    analyze_lagged->add_option("-o,--output", cfg.output, "Eigenvalue cloud CSV path")->required();

    theory = app.add_subcommand("theory", "Theoretical densities");
    theory->require_subcommand(1);
    theory_mp = theory->add_subcommand("mp", "Marcenko-Pastur density");
    theory_mp->add_option("--c", cfg.c, "Ratio p/n")->required();
    theory_mp->add_option("-o,--output", cfg.output, "Density CSV path")->required();

    theory_lagged = theory->add_subcommand("lagged", "Lagged-correlation density from the quartic Green's function");
    theory_lagged->add_option("--q", cfg.q, "Q = T/N")->required();
    theory_lagged->add_option("--epsilon", cfg.epsilon, "Stieltjes offset")->capture_default_str();
    theory_lagged->add_option("-o,--output", cfg.output, "Density CSV path")->required();

    compare = app.add_subcommand("compare", "KS and L1 distances between two density tables");
    compare->add_option("--empirical", cfg.empirical, "Density CSV")->required();
    compare->add_option("--theory", cfg.theory, "Density CSV")->required();
    compare->add_option("--empirical-column", cfg.empirical_column, "Column (default: kde, else first)");
    compare->add_option("--theory-column", cfg.theory_column, "Column (default: first)");
    compare->add_option("-o,--output", cfg.output, "Report path")->required();
  }

  Command selected() const {
    if (generate->parsed()) return Command::Generate;
    if (analyze_cov->parsed()) return Command::AnalyzeCov;
    if (analyze_lagged->parsed()) return Command::AnalyzeLagged;
    if (theory_mp->parsed()) return Command::TheoryMp;
    if (theory_lagged->parsed()) return Command::TheoryLagged;
    if (compare->parsed()) return Command::Compare;
    return Command::None;
  }
};

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate_config(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::None:
      invalid("no subcommand");
    case Command::Generate:
      if (cfg.rows == 0 || cfg.cols == 0) invalid("--rows and --cols must be positive");
      if (cfg.rows > 0xffffffffULL || cfg.cols > 0xffffffffULL) invalid("--rows/--cols exceed the capture format");
      if (cfg.snr_db && !std::isfinite(*cfg.snr_db)) invalid("--snr-db must be finite");
      if (cfg.signal == SignalKind::Wgn && cfg.snr_db) invalid("--snr-db has no meaning for a pure noise capture");
      if (cfg.signal != SignalKind::Wgn && cfg.variance != 1.0) invalid("--variance applies to wgn only");
      if (cfg.signal != SignalKind::Narrowband && (cfg.carrier || cfg.band || cfg.symbol_rate))
        invalid("--carrier/--band/--symbol-rate apply to narrowband only");
      if (!finite_positive(cfg.variance)) invalid("--variance must be positive");
      break;
    case Command::AnalyzeCov:
      if (cfg.bins && *cfg.bins == 0) invalid("--bins must be positive");
      if (cfg.bandwidth && !finite_positive(*cfg.bandwidth)) invalid("--bandwidth must be positive");
      if (cfg.c_override && !finite_positive(*cfg.c_override)) invalid("--c must be positive");
      break;
    case Command::AnalyzeLagged:
      if (cfg.bins && *cfg.bins == 0) invalid("--bins must be positive");
      if (cfg.tau < 0) invalid("--tau must be non-negative");
      if (!cfg.projections.empty() && fs::path(cfg.projections) == fs::path(cfg.output))
        invalid("--projections must differ from the cloud output");
      break;
    case Command::TheoryMp:
      if (!finite_positive(cfg.c)) invalid("--c must be positive");
      break;
    case Command::TheoryLagged:
      if (!finite_positive(cfg.q)) invalid("--q must be positive");
      if (!finite_positive(cfg.epsilon)) invalid("--epsilon must be positive");
      break;
    case Command::Compare:
      break;
  }
  if (cfg.output.empty()) invalid("an output path is required");
}

void execute(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::Generate: return run_generate(cfg, out);
    case Command::AnalyzeCov: return run_analyze_cov(cfg, out);
    case Command::AnalyzeLagged: return run_analyze_lagged(cfg, out);
    case Command::TheoryMp: return run_theory_mp(cfg, out);
    case Command::TheoryLagged: return run_theory_lagged(cfg, out);
    case Command::Compare: return run_compare(cfg, out);
    case Command::None: break;
  }
  invalid("no subcommand");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Parser parser(cfg);
  try {
    // CLI11 wants the arguments in reverse order when handed a vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    parser.app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << parser.app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << parser.app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "rmt: " << e.what() << "\n" << parser.app.help();
    return 1;
  }
  cfg.command = parser.selected();

  try {
    validate_config(cfg);
    execute(cfg, out);
  } catch (const Error& e) {
    err << "rmt: " << e.what() << "\n";
    return is_numerical(e.code()) ? 2 : 1;
  } catch (const std::bad_alloc&) {
    err << "rmt: out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    err << "rmt: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace rmt
