// nczeta: evaluate zeta_Q(2) of the non-commutative harmonic oscillator by
// the closed hypergeometric form, the Heun series, the elliptic integral,
// the Euler integral, and a Hermite-basis eigenvalue sum.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nczeta/cli/report.hpp"
#include "nczeta/errors.hpp"

using nczeta::cli::Format;
using nczeta::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Special value zeta_Q(2) of the non-commutative harmonic oscillator"};

  RunConfig cfg;
  std::vector<std::string> methods{"closed"};
  std::string grid_file;
  std::string format = "text";

  auto* alpha = app.add_option("--alpha", cfg.alpha, "Scaling constant alpha > 0");
  auto* beta = app.add_option("--beta", cfg.beta, "Scaling constant beta > 0 (alpha*beta > 1)");
  app.add_option("--method", methods,
                 "closed|series|elliptic|euler|spectral|all (comma-separated list allowed)")
      ->delimiter(',')
      ->check(CLI::IsMember({"closed", "series", "elliptic", "euler", "spectral", "all"}));
  app.add_option("--terms", cfg.series_terms, "Maximum Heun-series terms")
      ->capture_default_str();
  app.add_option("--quad-tol", cfg.quad_tol, "Absolute tolerance of the periodic quadratures")
      ->capture_default_str();
  app.add_option("--basis-size", cfg.basis_size, "Hermite modes per component (spectral)")
      ->capture_default_str();
  app.add_option("--keep", cfg.keep_per_parity,
                 "Eigenvalues kept per parity block before the tail fit (spectral)")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  auto* grid = app.add_option("--grid", grid_file, "CSV file with header 'alpha,beta'");
  grid->excludes(alpha)->excludes(beta);

  CLI11_PARSE(app, argc, argv);

  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  cfg.methods.clear();
  for (const auto& m : methods) {
    if (m == "all") {
      cfg.all_methods = true;
    } else {
      cfg.methods.push_back(*nczeta::ncho::parse_method(m));
    }
  }

  if (!grid_file.empty()) {
    std::ifstream in(grid_file);
    if (!in) {
      std::cerr << "cannot open grid file " << grid_file << '\n';
      return nczeta::cli::kInvalidParams;
    }
    std::vector<nczeta::cli::GridRow> rows;
    try {
      rows = nczeta::cli::read_grid(in);
    } catch (const nczeta::Error& e) {
      std::cerr << e.what() << '\n';
      return nczeta::cli::kInvalidParams;
    }
    const auto report = nczeta::cli::run_grid(rows, cfg);
    nczeta::cli::write_grid(std::cout, report, cfg.format);
    for (const auto& p : report.points) nczeta::cli::write_diagnostics(std::cerr, p);
    return report.exit_code;
  }

  if (alpha->count() == 0 || beta->count() == 0) {
    std::cerr << "--alpha and --beta are required unless --grid is given\n";
    return nczeta::cli::kInvalidParams;
  }
  const auto report = nczeta::cli::run_point(cfg);
  nczeta::cli::write_point(std::cout, report, cfg.format);
  nczeta::cli::write_diagnostics(std::cerr, report);
  return report.exit_code;
}
