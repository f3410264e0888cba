#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nczeta/ncho.hpp"

namespace nczeta::cli {

enum class Format { text, json, csv };

enum ExitCode : int {
  kOk = 0,
  kInvalidParams = 2,
  kNoConvergence = 3,
  kGridPartialFailure = 4,
};

struct RunConfig {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<ncho::Method> methods{ncho::Method::closed};
  /// Expand to every applicable method; series is skipped when alpha*beta <= 2.
  bool all_methods = false;
  std::size_t series_terms = 2000;
  double quad_tol = 1e-13;
  std::size_t basis_size = 512;
  std::size_t keep_per_parity = 200;
  Format format = Format::text;
};

struct MethodRecord {
  ncho::Method method = ncho::Method::closed;
  std::optional<ncho::ZetaResult> result;
  std::string error;
  int code = kOk;
  double elapsed_seconds = 0.0;
};

struct Discrepancy {
  double max_rel = 0.0;
  std::string pair;
  /// Same, restricted to the analytic routes (everything except spectral).
  std::optional<double> analytic_max_rel;
  std::string analytic_pair;
};

struct PointReport {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<MethodRecord> records;
  std::optional<Discrepancy> discrepancy;
  /// Set when the parameters themselves were rejected.
  std::string error;
  int exit_code = kOk;
};

struct GridRow {
  double alpha = 0.0;
  double beta = 0.0;
  /// Non-empty when the row could not be parsed.
  std::string parse_error;
};

struct GridReport {
  std::vector<PointReport> points;
  int exit_code = kOk;
};

/// Methods that will run for cfg, in the fixed order closed, series, elliptic, euler, spectral.
std::vector<ncho::Method> resolve_methods(const RunConfig& cfg);

PointReport run_point(const RunConfig& cfg);

/// Reads a grid file: header line `alpha,beta`, then one pair per line.
/// Throws DomainError when the header is missing or wrong.
std::vector<GridRow> read_grid(std::istream& in);

/// Rows are evaluated concurrently; the report preserves file order.
GridReport run_grid(const std::vector<GridRow>& rows, const RunConfig& defaults);

/// Data records only: deterministic for a fixed configuration.
void write_point(std::ostream& out, const PointReport& report, Format format);
void write_grid(std::ostream& out, const GridReport& report, Format format);

/// Timings and failure messages, kept apart from the data records.
void write_diagnostics(std::ostream& out, const PointReport& report);

/// printf("%.17g"), which round-trips every double.
std::string format_number(double v);

}  // namespace nczeta::cli
