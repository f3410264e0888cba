#include "nczeta/cli/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nczeta/errors.hpp"
#include "nczeta/spectral_oracle.hpp"

namespace nczeta::cli {
namespace {

using ncho::Method;
using Json = nlohmann::ordered_json;

constexpr Method kMethodOrder[] = {Method::closed, Method::series, Method::elliptic,
                                   Method::euler, Method::spectral};

ncho::ZetaResult evaluate(const RunConfig& cfg, const ncho::NchoParams& p, Method m) {
  const quad::QuadOptions qopts{std::size_t{1} << 20, cfg.quad_tol};
  switch (m) {
    case Method::closed:
      return ncho::zeta2_closed(p);
    case Method::series:
      return ncho::zeta2_series(p, cfg.series_terms);
    case Method::elliptic:
      return ncho::zeta2_elliptic(p, qopts);
    case Method::euler:
      return ncho::zeta2_euler(p, qopts);
    case Method::spectral:
      return spectral::zeta2_spectral(p, cfg.basis_size, cfg.keep_per_parity);
  }
  throw DomainError("unknown method");
}

double rel_diff(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

std::optional<Discrepancy> discrepancy_of(const std::vector<MethodRecord>& records) {
  std::vector<const MethodRecord*> ok;
  for (const auto& r : records) {
    if (r.result) ok.push_back(&r);
  }
  if (ok.size() < 2) return std::nullopt;
  Discrepancy d;
  d.max_rel = -1.0;
  double analytic = -1.0;
  for (std::size_t i = 0; i < ok.size(); ++i) {
    for (std::size_t j = i + 1; j < ok.size(); ++j) {
      const double rel = rel_diff(ok[i]->result->value, ok[j]->result->value);
      const std::string pair = std::string(ncho::to_string(ok[i]->method)) + "/" +
                               std::string(ncho::to_string(ok[j]->method));
      if (rel > d.max_rel) {
        d.max_rel = rel;
        d.pair = pair;
      }
      const bool both_analytic =
          ok[i]->method != Method::spectral && ok[j]->method != Method::spectral;
      if (both_analytic && rel > analytic) {
        analytic = rel;
        d.analytic_pair = pair;
      }
    }
  }
  if (analytic >= 0.0) d.analytic_max_rel = analytic;
  return d;
}

Json point_json(const PointReport& r) {
  Json j;
  j["params"] = {{"alpha", r.alpha}, {"beta", r.beta}};
  Json results = Json::array();
  Json errors = Json::array();
  for (const auto& rec : r.records) {
    if (rec.result) {
      results.push_back({{"method", ncho::to_string(rec.method)},
                         {"value", rec.result->value},
                         {"err", rec.result->err_estimate},
                         {"terms", rec.result->terms_or_nodes}});
    } else {
      errors.push_back({{"method", ncho::to_string(rec.method)}, {"message", rec.error}});
    }
  }
  j["results"] = std::move(results);
  if (r.discrepancy) {
    Json d{{"max_rel", r.discrepancy->max_rel}, {"pair", r.discrepancy->pair}};
    if (r.discrepancy->analytic_max_rel) {
      d["analytic_max_rel"] = *r.discrepancy->analytic_max_rel;
      d["analytic_pair"] = r.discrepancy->analytic_pair;
    }
    j["discrepancy"] = std::move(d);
  }
  if (!r.error.empty()) j["error"] = r.error;
  if (!errors.empty()) j["errors"] = std::move(errors);
  return j;
}

void csv_rows(std::ostream& out, const PointReport& r) {
  const std::string prefix = format_number(r.alpha) + "," + format_number(r.beta) + ",";
  for (const auto& rec : r.records) {
    out << prefix << ncho::to_string(rec.method) << ',';
    if (rec.result) {
      out << format_number(rec.result->value) << ',' << format_number(rec.result->err_estimate)
          << ',' << rec.result->terms_or_nodes;
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void text_point(std::ostream& out, const PointReport& r) {
  out << "alpha = " << format_number(r.alpha) << ", beta = " << format_number(r.beta) << '\n';
  if (!r.error.empty()) {
    out << "  error: " << r.error << '\n';
    return;
  }
  char line[160];
  std::snprintf(line, sizeof line, "  %-9s %-24s %-24s %s\n", "method", "zeta_Q(2)", "err",
                "terms");
  out << line;
  for (const auto& rec : r.records) {
    const std::string name(ncho::to_string(rec.method));
    if (rec.result) {
      std::snprintf(line, sizeof line, "  %-9s %-24s %-24s %zu\n", name.c_str(),
                    format_number(rec.result->value).c_str(),
                    format_number(rec.result->err_estimate).c_str(),
                    rec.result->terms_or_nodes);
    } else {
      std::snprintf(line, sizeof line, "  %-9s failed\n", name.c_str());
    }
    out << line;
  }
  if (r.discrepancy) {
    out << "  max relative discrepancy " << format_number(r.discrepancy->max_rel) << " ("
        << r.discrepancy->pair << ")\n";
    if (r.discrepancy->analytic_max_rel) {
      out << "  analytic routes          " << format_number(*r.discrepancy->analytic_max_rel)
          << " (" << r.discrepancy->analytic_pair << ")\n";
    }
  }
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<Method> resolve_methods(const RunConfig& cfg) {
  std::vector<Method> out;
  if (cfg.all_methods) {
    const bool series_ok = cfg.alpha * cfg.beta > 2.0;
    for (Method m : kMethodOrder) {
      if (m != Method::series || series_ok) out.push_back(m);
    }
    return out;
  }
  for (Method m : kMethodOrder) {
    if (std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end()) {
      out.push_back(m);
    }
  }
  return out;
}

PointReport run_point(const RunConfig& cfg) {
  PointReport report;
  report.alpha = cfg.alpha;
  report.beta = cfg.beta;
  const ncho::NchoParams p{cfg.alpha, cfg.beta};
  try {
    ncho::validate(p);
  } catch (const InvalidParams& e) {
    report.error = e.what();
    report.exit_code = kInvalidParams;
    return report;
  }

  for (Method m : resolve_methods(cfg)) {
    MethodRecord rec;
    rec.method = m;
    const auto start = std::chrono::steady_clock::now();
    try {
      rec.result = evaluate(cfg, p, m);
    } catch (const InvalidParams& e) {
      rec.error = e.what();
      rec.code = kInvalidParams;
    } catch (const DomainError& e) {
      rec.error = e.what();
      rec.code = kInvalidParams;
    } catch (const Error& e) {
      rec.error = e.what();
      rec.code = kNoConvergence;
    }
    rec.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.exit_code = std::max(report.exit_code, rec.code);
    report.records.push_back(std::move(rec));
  }
  report.discrepancy = discrepancy_of(report.records);
  return report;
}

std::vector<GridRow> read_grid(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && trim(line).empty()) {
  }
  std::string header = trim(line);
  header.erase(std::remove_if(header.begin(), header.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               header.end());
  if (header != "alpha,beta") {
    throw DomainError("grid file must start with the header line 'alpha,beta'");
  }
  std::vector<GridRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    GridRow row;
    const auto comma = line.find(',');
    if (comma == std::string::npos || !parse_double(line.substr(0, comma), row.alpha) ||
        !parse_double(line.substr(comma + 1), row.beta)) {
      row.alpha = std::nan("");
      row.beta = std::nan("");
      row.parse_error = "line " + std::to_string(line_no) + ": expected 'alpha,beta', got '" +
                        trim(line) + "'";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

GridReport run_grid(const std::vector<GridRow>& rows, const RunConfig& defaults) {
  GridReport report;
  report.points.resize(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      if (!rows[i].parse_error.empty()) {
        PointReport bad;
        bad.alpha = rows[i].alpha;
        bad.beta = rows[i].beta;
        bad.error = rows[i].parse_error;
        bad.exit_code = kInvalidParams;
        report.points[i] = std::move(bad);
        continue;
      }
      RunConfig cfg = defaults;
      cfg.alpha = rows[i].alpha;
      cfg.beta = rows[i].beta;
      report.points[i] = run_point(cfg);
    }
  };
  const std::size_t n_threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(rows.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& p : report.points) {
    if (p.exit_code != kOk) report.exit_code = kGridPartialFailure;
  }
  return report;
}

void write_point(std::ostream& out, const PointReport& report, Format format) {
  switch (format) {
    case Format::json:
      out << point_json(report).dump(2) << '\n';
      break;
    case Format::csv:
      out << "alpha,beta,method,value,err,terms\n";
      csv_rows(out, report);
      break;
    case Format::text:
      text_point(out, report);
      break;
  }
}

void write_grid(std::ostream& out, const GridReport& report, Format format) {
  switch (format) {
    case Format::json: {
      Json points = Json::array();
      for (const auto& p : report.points) points.push_back(point_json(p));
      out << Json{{"points", std::move(points)}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "alpha,beta,method,value,err,terms\n";
      for (const auto& p : report.points) csv_rows(out, p);
      break;
    case Format::text:
      for (const auto& p : report.points) text_point(out, p);
      break;
  }
}

void write_diagnostics(std::ostream& out, const PointReport& report) {
  out << "# alpha = " << format_number(report.alpha) << ", beta = " << format_number(report.beta)
      << '\n';
  if (!report.error.empty()) out << "#   error: " << report.error << '\n';
  for (const auto& rec : report.records) {
    char line[96];
    std::snprintf(line, sizeof line, "#   %-9s %.3f s", std::string(ncho::to_string(rec.method)).c_str(),
                  rec.elapsed_seconds);
    out << line;
    if (!rec.error.empty()) out << "  FAILED (exit " << rec.code << "): " << rec.error;
    out << '\n';
  }
}

}  // namespace nczeta::cli
