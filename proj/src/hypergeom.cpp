#include "nczeta/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nczeta/detail/series.hpp"
#include "nczeta/errors.hpp"

namespace nczeta::hypergeom {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Beyond this mapped argument the Pfaff-transformed series is slow.
constexpr double kDeepArgument = 0.999;

bool is_nonpositive_integer(double v) { return v <= 0.0 && std::floor(v) == v; }

void check_lower(double b, const char* what) {
  if (!std::isfinite(b) || is_nonpositive_integer(b)) {
    throw DomainError(std::string(what) + " must not be zero or a negative integer (got " +
                      num(b) + ")");
  }
}

void check_unit_disc(double x, const char* fn) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError(std::string(fn) + ": argument must satisfy |x| < 1 (got " +
                      num(x) + ")");
  }
}

template <std::size_t P, std::size_t Q>
SeriesValue run_series(const std::array<double, P>& upper, const std::array<double, Q>& lower,
                       double x, const SeriesOptions& opts, const char* fn) {
  const auto out = detail::pfq_series<double, P, Q>(upper, lower, x, opts.rel_tol, opts.max_terms);
  if (!out.converged) {
    throw NoConvergence(std::string(fn) + ": no convergence after " +
                        std::to_string(opts.max_terms) + " terms at x = " + num(x));
  }
  const double err = out.remainder + static_cast<double>(out.terms) * kEps * std::abs(out.value);
  return {out.value, out.terms, err};
}

bool is_quarter_three_quarter(const HyperParams2F1& p) {
  return p.c == 1.0 && ((p.a == 0.25 && p.b == 0.75) || (p.a == 0.75 && p.b == 0.25));
}

}  // namespace

SeriesValue gauss_2f1_series(const HyperParams2F1& p, double x, const SeriesOptions& opts) {
  check_lower(p.c, "gauss_2f1: c");
  check_unit_disc(x, "gauss_2f1");
  return run_series<2, 1>({p.a, p.b}, {p.c}, x, opts, "gauss_2f1");
}

double gauss_2f1(const HyperParams2F1& p, double x, const SeriesOptions& opts) {
  return gauss_2f1_series(p, x, opts).value;
}

SeriesValue gauss_2f1_neg_series(const HyperParams2F1& p, double x, const SeriesOptions& opts) {
  check_lower(p.c, "gauss_2f1_neg: c");
  if (!(x <= 0.0) || std::isinf(x)) {
    throw DomainError("gauss_2f1_neg: argument must be finite and <= 0 (got " +
                      num(x) + ")");
  }
  if (x == 0.0) return {1.0, 1, 0.0};

  const double t = x / (x - 1.0);
  if (t > kDeepArgument && is_quarter_three_quarter(p)) {
    const double v = gauss_2f1_quarter_agm(x);
    return {v, 0, 8.0 * kEps * v};
  }
  // 2F1 is symmetric in (a, b); transforming with the smaller one as the
  // exponent leaves the larger c - a - b for the mapped series, which then
  // decays faster as t -> 1.
  const double lo = std::min(p.a, p.b);
  const double hi = std::max(p.a, p.b);
  const double scale = std::pow(1.0 - x, -lo);
  const auto inner = run_series<2, 1>({lo, p.c - hi}, {p.c}, t, opts, "gauss_2f1_neg");
  return {scale * inner.value, inner.terms,
          std::abs(scale) * inner.err_estimate + 4.0 * kEps * std::abs(scale * inner.value)};
}

double gauss_2f1_neg(const HyperParams2F1& p, double x, const SeriesOptions& opts) {
  return gauss_2f1_neg_series(p, x, opts).value;
}

double gauss_2f1_quarter_agm(double x) {
  if (!(x <= 0.0) || std::isinf(x)) {
    throw DomainError("gauss_2f1_quarter_agm: argument must be finite and <= 0");
  }
  // sqrt(1 + i a) with a = sqrt(-x); its real part is sqrt((r + 1) / 2), r = |1 + i a|.
  const double r = std::sqrt(1.0 - x);
  double arith = std::sqrt(0.5 * (r + 1.0));
  double geom = std::sqrt(r);
  for (int i = 0; i < 64 && std::abs(arith - geom) > 2.0 * kEps * arith; ++i) {
    const double next = 0.5 * (arith + geom);
    geom = std::sqrt(arith * geom);
    arith = next;
  }
  return 1.0 / (0.5 * (arith + geom));
}

double hyper_3f2(double a1, double a2, double a3, double b1, double b2, double x,
                 const SeriesOptions& opts) {
  check_lower(b1, "hyper_3f2: b1");
  check_lower(b2, "hyper_3f2: b2");
  check_unit_disc(x, "hyper_3f2");
  return run_series<3, 2>({a1, a2, a3}, {b1, b2}, x, opts, "hyper_3f2").value;
}

double elliptic_k(double k2) {
  if (!(k2 < 1.0)) {
    throw DomainError("elliptic_k: squared modulus must be < 1 (got " + num(k2) + ")");
  }
  double arith = 1.0;
  double geom = std::sqrt(1.0 - k2);
  for (int i = 0; i < 64 && std::abs(arith - geom) > 2.0 * kEps * arith; ++i) {
    const double next = 0.5 * (arith + geom);
    geom = std::sqrt(arith * geom);
    arith = next;
  }
  return std::numbers::pi / (arith + geom);
}

ComplexValue csqrt(ComplexValue z) { return std::sqrt(z); }

}  // namespace nczeta::hypergeom
