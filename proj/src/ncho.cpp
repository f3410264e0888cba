#include "nczeta/ncho.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nczeta/compensated.hpp"
#include "nczeta/errors.hpp"
#include "nczeta/heun.hpp"
#include "nczeta/hypergeom.hpp"

namespace nczeta::ncho {
namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesCutoff = 1e-15;

constexpr std::array<std::string_view, 5> kMethodNames = {"closed", "series", "elliptic",
                                                           "euler", "spectral"};

void check_a(double a, const char* fn) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw DomainError(std::string(fn) + ": a must be finite and >= 0 (got " + num(a) +
                      ")");
  }
}

struct GValue {
  double value;
  std::size_t count;
  double err;
};

ZetaResult assemble(const NchoParams& p, Method m, const GValue& g) {
  const double pre = prefactor(p);
  const double r = asymmetry(p);
  const double value = pre * (1.0 + r * r * g.value);
  const double err = pre * r * r * g.err + 4.0 * kEps * value;
  return {value, m, g.count, err};
}

}  // namespace

std::string_view to_string(Method m) { return kMethodNames.at(static_cast<std::size_t>(m)); }

std::optional<Method> parse_method(std::string_view name) {
  for (std::size_t i = 0; i < kMethodNames.size(); ++i) {
    if (kMethodNames[i] == name) return static_cast<Method>(i);
  }
  return std::nullopt;
}

void validate(const NchoParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !(p.alpha > 0.0) ||
      !(p.beta > 0.0) || !(p.alpha * p.beta > 1.0)) {
    throw InvalidParams("alpha = " + num(p.alpha) + ", beta = " +
                        num(p.beta) +
                        ": require alpha > 0, beta > 0 and alpha*beta > 1");
  }
}

DerivedParams derive(const NchoParams& p) {
  validate(p);
  const double ab = p.alpha * p.beta;
  return {1.0 / std::sqrt(ab), 1.0 / std::sqrt(ab - 1.0)};
}

double series_coeff(std::size_t n) {
  double c = 0.5;
  for (std::size_t k = 0; k < n; ++k) {
    c *= (2.0 * static_cast<double>(k) + 1.0) / (2.0 * static_cast<double>(k) + 2.0);
  }
  return c;
}

namespace {

GValue g_series_impl(double a, std::size_t max_terms) {
  check_a(a, "g_series");
  if (!(a < 1.0)) {
    throw DomainError("g_series: the series only converges for a < 1 (got a = " +
                      num(a) + "); use g_closed or g_elliptic");
  }
  const auto heun = heun::heun_coefficients(max_terms);
  const double a2 = a * a;
  CompensatedSum<double> sum;
  double c = 0.5;
  double power = 1.0;
  double last = 0.0;
  std::size_t n = 0;
  for (; n <= max_terms; ++n) {
    const double term = c * power * heun.ratio(n);
    last = term;
    if (n % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (std::abs(term) < kSeriesCutoff) break;
    c *= (2.0 * static_cast<double>(n) + 1.0) / (2.0 * static_cast<double>(n) + 2.0);
    power *= a2;
  }
  const std::size_t used = std::min(n, max_terms) + 1;
  return {2.0 * sum.value(), used, 2.0 * std::abs(last)};
}

GValue g_closed_impl(double a) {
  check_a(a, "g_closed");
  const auto f = hypergeom::gauss_2f1_neg_series({0.25, 0.75, 1.0}, -a * a);
  return {f.value * f.value, f.terms, 2.0 * std::abs(f.value) * f.err_estimate};
}

GValue g_euler_impl(double a, const quad::QuadOptions& opts) {
  check_a(a, "g_euler");
  const double a2 = a * a;
  const auto q =
      quad::beta_weighted([a2](double u) { return heun::w_closed(-a2 * u) / heun::kJ0; }, opts);
  const double inv_pi = 1.0 / std::numbers::pi;
  return {q.value.real() * inv_pi, q.nodes, q.err_estimate * inv_pi};
}

GValue g_elliptic_impl(double a, const quad::QuadOptions& opts) {
  check_a(a, "g_elliptic");
  using hypergeom::ComplexValue;
  auto integrand = [a](double sign) {
    return [a, sign](double theta) {
      return 1.0 / hypergeom::csqrt(ComplexValue(1.0, -sign * a * std::cos(theta)));
    };
  };
  const auto plus = quad::periodic_trapezoid(integrand(1.0), opts);
  const auto minus = quad::periodic_trapezoid(integrand(-1.0), opts);
  const double limit = 10.0 * opts.tol;
  if (std::abs(plus.value.imag()) >= limit || std::abs(minus.value.imag()) >= limit ||
      std::abs(plus.value.real() - minus.value.real()) >= limit) {
    throw BranchInconsistency(
        "g_elliptic: branch choices disagree for a = " + num(a) + " (re+ = " +
        num(plus.value.real()) + ", re- = " + num(minus.value.real()) +
        ", im+ = " + num(plus.value.imag()) + ")");
  }
  const double f = plus.value.real();
  return {f * f, plus.nodes, 2.0 * std::abs(f) * plus.err_estimate};
}

}  // namespace

double g_series(double a, std::size_t max_terms) { return g_series_impl(a, max_terms).value; }
double g_closed(double a) { return g_closed_impl(a).value; }
double g_euler(double a, const quad::QuadOptions& opts) { return g_euler_impl(a, opts).value; }
double g_elliptic(double a, const quad::QuadOptions& opts) {
  return g_elliptic_impl(a, opts).value;
}

double z1(const NchoParams& p) {
  const auto d = derive(p);
  const double s = 1.0 / p.alpha + 1.0 / p.beta;
  return s * s / (2.0 * (1.0 - d.gamma * d.gamma)) * (kPi2 / 2.0);
}

double zprime(const NchoParams& p, std::size_t n) {
  const auto d = derive(p);
  const double diff = 1.0 / p.alpha - 1.0 / p.beta;
  const auto heun = heun::heun_coefficients(n);
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign * diff * diff / (1.0 - d.gamma * d.gamma) * series_coeff(n) *
         std::pow(d.a, 2.0 * static_cast<double>(n)) * heun.coeff(n);
}

double prefactor(const NchoParams& p) {
  validate(p);
  const double ia = 1.0 / p.alpha;
  const double ib = 1.0 / p.beta;
  const double s = ia + ib;
  return kPi2 / 4.0 * s * s / (1.0 - ia * ib);
}

double asymmetry(const NchoParams& p) {
  validate(p);
  const double ia = 1.0 / p.alpha;
  const double ib = 1.0 / p.beta;
  return (ia - ib) / (ia + ib);
}

ZetaResult zeta2_closed(const NchoParams& p) {
  const auto d = derive(p);
  return assemble(p, Method::closed, g_closed_impl(d.a));
}

ZetaResult zeta2_series(const NchoParams& p, std::size_t max_terms) {
  const auto d = derive(p);
  if (!(d.a < 1.0)) {
    throw DomainError("zeta2_series: requires alpha*beta > 2 (a = " + num(d.a) +
                      " >= 1)");
  }
  // Z_1 + sum Z'_n, where sum Z'_n = (1/alpha - 1/beta)^2 / (2 (1 - gamma^2)) * J_0 * g(a).
  const auto g = g_series_impl(d.a, max_terms);
  const double s = 1.0 / p.alpha + 1.0 / p.beta;
  const double diff = 1.0 / p.alpha - 1.0 / p.beta;
  const double denom = 2.0 * (1.0 - d.gamma * d.gamma);
  const double first = s * s / denom * heun::kJ0;
  const double scale = diff * diff / denom * heun::kJ0;
  const double value = first + scale * g.value;
  return {value, Method::series, g.count, scale * g.err + 4.0 * kEps * value};
}

ZetaResult zeta2_elliptic(const NchoParams& p, const quad::QuadOptions& opts) {
  const auto d = derive(p);
  return assemble(p, Method::elliptic, g_elliptic_impl(d.a, opts));
}

ZetaResult zeta2_euler(const NchoParams& p, const quad::QuadOptions& opts) {
  const auto d = derive(p);
  return assemble(p, Method::euler, g_euler_impl(d.a, opts));
}

}  // namespace nczeta::ncho
