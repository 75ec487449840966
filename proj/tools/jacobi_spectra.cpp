// jacobi-spectra: command-line front end.
//
// Exit codes: 0 success, 1 property failure or spectrum mismatch,
// 2 invalid input (spec file, flags, grid), 3 file-system error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "jacobi/io.hpp"
#include "jacobi/jost.hpp"
#include "jacobi/regions.hpp"
#include "jacobi/spectrum.hpp"
#include "jacobi/verify.hpp"

namespace fs = std::filesystem;
using namespace jacobi;
using io::format_number;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw io::IoError("cannot create output directory '" + dir + "'");
  return fs::path(dir);
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string complex_row(Complex z) { return format_number(z.real()) + "," + format_number(z.imag()); }

GridSpec grid_or_input_error(const std::string& text) {
  try {
    return io::parse_grid_spec(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void print_header(const JacobiOperator& op) {
  std::cout << "operator: " << (op.name().empty() ? "(unnamed)" : op.name()) << "\n"
            << "support bound: " << op.support_bound() << "\n";
}

int run_jost(const std::string& spec, const std::string& grid_text, const std::string& out_dir) {
  const JacobiOperator op = io::load_operator_spec(spec);
  std::optional<GridSpec> grid;
  if (!grid_text.empty()) grid = grid_or_input_error(grid_text);

  const ComplexPolynomial v0 = jost_function(op);
  print_header(op);
  std::cout << "jost function degree: " << v0.degree() << "\n"
            << "coefficients (lowest degree first):\n"
            << "k,re,im\n";
  for (int k = 0; k <= v0.degree(); ++k)
    std::cout << k << "," << complex_row(v0.coefficient(k)) << "\n";

  if (grid) {
    const fs::path path = prepare_out_dir(out_dir) / "jost_grid.csv";
    std::ostringstream csv;
    io::write_jost_grid_csv(csv, v0, *grid);
    io::write_text_file(path, csv.str());
    std::cout << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

int run_spectrum(const std::string& spec, const ReconcileOptions& options,
                 const std::optional<std::string>& out_dir) {
  const JacobiOperator op = io::load_operator_spec(spec);
  if (options.N < 50) throw InputError("--n must be at least 50");
  if (!(options.band_margin > 0.0)) throw InputError("--band-margin must be positive");
  if (!(options.match_tol > 0.0)) throw InputError("--match-tol must be positive");

  const SpectrumResult r = reconcile(op, options);
  print_header(op);

  std::ostringstream table;
  table << "lambda_re,lambda_im,z_re,z_im,multiplicity\n";
  for (const Eigenvalue& e : r.eigenvalues)
    table << complex_row(e.lambda) << "," << complex_row(e.z) << "," << e.multiplicity << "\n";
  if (r.eigenvalues.empty()) {
    std::cout << "no discrete spectrum\n";
  } else {
    std::cout << "discrete spectrum: " << r.eigenvalues.size() << " eigenvalue(s)\n" << table.str();
  }
  for (const PolynomialRoot& root : r.boundary_roots)
    std::cout << "boundary root (not counted): z = " << complex_row(root.value) << "\n";

  std::cout << "\ntruncation N = " << options.N << ", match tolerance "
            << short_number(options.match_tol) << ", band margin "
            << short_number(options.band_margin) << "\n";
  if (!r.matches.empty()) {
    std::cout << "jost_re,jost_im,oracle_re,oracle_im,distance\n";
    for (const SpectrumMatch& m : r.matches)
      std::cout << complex_row(m.jost_lambda) << "," << complex_row(m.oracle_lambda) << ","
                << format_number(m.distance) << "\n";
  }
  for (const Complex& l : r.unmatched_jost)
    std::cout << "UNMATCHED jost eigenvalue " << complex_row(l) << "\n";
  for (const Complex& l : r.near_boundary_jost)
    std::cout << "near-boundary jost eigenvalue (reported, not failed) " << complex_row(l) << "\n";
  for (const Complex& l : r.unmatched_oracle)
    std::cout << "UNMATCHED oracle eigenvalue " << complex_row(l) << "\n";
  for (const Complex& l : r.unstable_oracle)
    std::cout << "unstable oracle eigenvalue (ignored) " << complex_row(l) << "\n";
  std::cout << "matched " << r.matches.size() << ", unmatched jost " << r.unmatched_jost.size()
            << ", near-boundary " << r.near_boundary_jost.size() << ", unmatched oracle "
            << r.unmatched_oracle.size() << ", unstable oracle " << r.unstable_oracle.size()
            << ", band artifacts " << r.band_artifacts << "\n"
            << "result: " << (r.ok() ? "ok" : "MISMATCH") << "\n";

  if (out_dir) {
    const fs::path path = prepare_out_dir(*out_dir) / "spectrum.csv";
    io::write_text_file(path, table.str());
    std::cout << "wrote " << path.string() << "\n";
  }
  return r.ok() ? kExitOk : kExitFailure;
}

int run_region(const std::string& spec, const std::string& grid_text, const std::string& svg_path,
               const std::string& out_dir) {
  const JacobiOperator op = io::load_operator_spec(spec);
  std::optional<GridSpec> grid;
  if (!grid_text.empty()) grid = grid_or_input_error(grid_text);

  const RegionReport rep = region_report(op);
  print_header(op);
  std::cout << "t = " << format_number(rep.t) << "\n"
            << "sigma0(0) = " << format_number(rep.D0) << "\n"
            << "sigma1(0) = " << format_number(rep.D1) << "\n"
            << "omega threshold 2 sigma0(0) / t = " << format_number(rep.omega_threshold) << "\n"
            << "no-spectrum criterion sigma1(0) < t: " << (rep.no_spectrum ? "true" : "false")
            << "\n";
  if (rep.rectangles) {
    const RectangleEnclosure& r = *rep.rectangles;
    std::cout << "rectangles: c = " << format_number(r.c) << ", " << format_number(r.re_lo)
              << " < |re| < " << format_number(r.re_hi) << ", |im| < " << format_number(r.im_bound)
              << "\n";
  } else {
    std::cout << "rectangles: not applicable (c = " << format_number(rep.c) << " >= 2)\n";
  }

  if (grid) {
    const fs::path path = prepare_out_dir(out_dir) / "region_grid.csv";
    std::ostringstream csv;
    io::write_region_grid_csv(csv, region_grid(op, *grid));
    io::write_text_file(path, csv.str());
    std::cout << "wrote " << path.string() << "\n";
  }
  if (!svg_path.empty()) {
    io::write_text_file(svg_path, io::region_svg(rep, discrete_spectrum(op)));
    std::cout << "wrote " << svg_path << "\n";
  }
  return kExitOk;
}

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-')
    throw InputError(source + ": expected a non-negative integer seed, got '" + text + "'");
  return value;
}

int run_verify(const std::optional<std::string>& seed_text, int corpus_size,
               const std::optional<std::string>& out_dir) {
  VerifyOptions options;
  if (seed_text) {
    options.seed = parse_seed(*seed_text, "--seed");
  } else if (const char* env = std::getenv("JACOBI_SPECTRA_SEED"); env && *env) {
    options.seed = parse_seed(env, "JACOBI_SPECTRA_SEED");
  }
  if (corpus_size < 1) throw InputError("--corpus-size must be at least 1");
  options.corpus_size = corpus_size;

  const VerifyReport report = jacobi::run_verify(options);
  const std::string text = format_report(report);
  std::cout << text;
  if (out_dir) io::write_text_file(prepare_out_dir(*out_dir) / "verify_report.txt", text);
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral analysis of complex Jacobi matrices with finitely supported perturbations"};
  app.name("jacobi-spectra");
  app.require_subcommand(1);

  std::string spec, grid, svg, out_dir = ".";
  ReconcileOptions reconcile_options;
  std::optional<std::string> seed, spectrum_out, verify_out;
  int corpus_size = 200;

  CLI::App* jost = app.add_subcommand("jost", "Jost function coefficients and |v0| on a z-grid");
  jost->add_option("spec", spec, "Operator spec (JSON)")->required();
  jost->add_option("--grid", grid, "z-grid RE0:RE1:IM0:IM1:RES, written to DIR/jost_grid.csv");
  jost->add_option("--out", out_dir, "Artifact directory")->capture_default_str();

  CLI::App* spectrum = app.add_subcommand("spectrum", "Discrete spectrum, checked against truncations");
  spectrum->add_option("spec", spec, "Operator spec (JSON)")->required();
  spectrum->add_option("--n", reconcile_options.N, "Truncation size")->capture_default_str();
  spectrum->add_option("--match-tol", reconcile_options.match_tol, "Pairing tolerance")
      ->capture_default_str();
  spectrum->add_option("--band-margin", reconcile_options.band_margin,
                       "Oracle values this close to [-2, 2] are band artifacts")
      ->capture_default_str();
  spectrum->add_option("--out", spectrum_out, "Write the eigenvalue table to DIR/spectrum.csv");

  CLI::App* region = app.add_subcommand("region", "Spectrum-free region and enclosures");
  region->add_option("spec", spec, "Operator spec (JSON)")->required();
  region->add_option("--grid", grid, "lambda-grid RE0:RE1:IM0:IM1:RES, written to DIR/region_grid.csv");
  region->add_option("--svg", svg, "Write a schematic SVG to this path");
  region->add_option("--out", out_dir, "Artifact directory")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Seeded property suites over a random corpus");
  verify->add_option("--seed", seed, "Corpus seed (fallback: JACOBI_SPECTRA_SEED, then 1)");
  verify->add_option("--corpus-size", corpus_size, "Number of random operators")
      ->capture_default_str();
  verify->add_option("--out", verify_out, "Also write the report to DIR/verify_report.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*jost) return run_jost(spec, grid, out_dir);
    if (*spectrum) return run_spectrum(spec, reconcile_options, spectrum_out);
    if (*region) return run_region(spec, grid, svg, out_dir);
    return run_verify(seed, corpus_size, verify_out);
  } catch (const io::SchemaError& e) {
    std::cerr << "error: " << spec << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const io::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
