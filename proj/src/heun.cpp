#include "nczeta/heun.hpp"

#include <cmath>
#include <string>

#include "nczeta/compensated.hpp"
#include "nczeta/hypergeom.hpp"

namespace nczeta::heun {
namespace {

// Above this mapped argument 2F1(1/2, 1/2; 1; t) is taken from the AGM instead of the series.
constexpr double kSeriesLimit = 0.9;

double polynomial(std::span<const double> c, double z) {
  CompensatedSum<double> sum;
  double power = 1.0;
  for (double v : c) {
    sum += v * power;
    power *= z;
  }
  return sum.value();
}

}  // namespace

HeunSeries::HeunSeries(std::vector<double> ratios) : ratios_(std::move(ratios)) {
  if (ratios_.empty()) throw DomainError("HeunSeries: at least J_0 is required");
}

std::vector<double> HeunSeries::coeffs() const {
  std::vector<double> out(ratios_.size());
  for (std::size_t n = 0; n < ratios_.size(); ++n) out[n] = kJ0 * ratios_[n];
  return out;
}

double HeunSeries::value(double z) const { return kJ0 * polynomial(ratios_, z); }

double HeunSeries::derivative(double z) const {
  CompensatedSum<double> sum;
  double power = 1.0;
  for (std::size_t n = 1; n < ratios_.size(); ++n) {
    sum += static_cast<double>(n) * ratios_[n] * power;
    power *= z;
  }
  return kJ0 * sum.value();
}

double HeunSeries::second_derivative(double z) const {
  CompensatedSum<double> sum;
  double power = 1.0;
  for (std::size_t n = 2; n < ratios_.size(); ++n) {
    sum += static_cast<double>(n * (n - 1)) * ratios_[n] * power;
    power *= z;
  }
  return kJ0 * sum.value();
}

HeunSeries heun_coefficients(std::size_t n) {
  // The wanted solution is only mildly dominant over the second solution of
  // the recurrence, so rounding drifts roughly linearly in n; carry the
  // recurrence in extended precision.
  std::vector<double> r(n + 1);
  long double prev = 0.0L;
  long double cur = 1.0L;
  r[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto kk = static_cast<long double>(k);
    const long double next =
        ((2.0L * kk * kk + 2.0L * kk + 0.75L) * cur - kk * kk * prev) / ((kk + 1.0L) * (kk + 1.0L));
    prev = cur;
    cur = next;
    r[k + 1] = static_cast<double>(cur);
  }
  return HeunSeries(std::move(r));
}

HeunSeries w_coeff_oracle(std::size_t n) {
  // binomial[m] = binom(2m, m) / 4^m = (1/2)_m / m!;  gauss[k] = binomial[k]^2.
  std::vector<double> binomial(n + 1);
  binomial[0] = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    binomial[m] = binomial[m - 1] * (static_cast<double>(m) - 0.5) / static_cast<double>(m);
  }
  std::vector<double> r(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    CompensatedSum<double> sum;
    for (std::size_t m = 0; m <= k; ++m) {
      const double g = binomial[k - m];
      sum += binomial[m] * g * g;
    }
    r[k] = sum.value();
  }
  return HeunSeries(std::move(r));
}

double w_closed(double z) {
  if (!(z < 0.5)) {
    throw DomainError("w_closed: z must be < 1/2 (got " + num(z) + ")");
  }
  const double t = z / (z - 1.0);
  const double f = std::abs(t) <= kSeriesLimit
                       ? hypergeom::gauss_2f1({0.5, 0.5, 1.0}, t)
                       : 2.0 / std::numbers::pi * hypergeom::elliptic_k(t);
  return kJ0 / (1.0 - z) * f;
}

double heun_residual(const HeunSeries& s, double z) {
  const double one_minus = 1.0 - z;
  CompensatedSum<double> sum;
  sum += z * one_minus * one_minus * s.second_derivative(z);
  sum += (1.0 - 3.0 * z) * one_minus * s.derivative(z);
  sum += (z - 0.75) * s.value(z);
  return sum.value();
}

double factored_residual(const HeunSeries& s, double z) {
  const auto r = s.ratios();
  const std::size_t deg = r.size();  // degree of (1 - z) w
  // u = (1 - z) w
  std::vector<double> u(deg + 1, 0.0);
  for (std::size_t n = 0; n <= deg; ++n) {
    u[n] = (n < r.size() ? r[n] : 0.0) - (n > 0 ? r[n - 1] : 0.0);
  }
  // d/dz z d/dz u has coefficients n^2 u_n at power n - 1.
  std::vector<double> inner(deg, 0.0);
  for (std::size_t n = 1; n <= deg; ++n) {
    inner[n - 1] = static_cast<double>(n) * static_cast<double>(n) * u[n];
  }
  // 4 (1 - z) inner + w
  std::vector<double> out(deg + 1, 0.0);
  for (std::size_t n = 0; n <= deg; ++n) {
    const double here = n < inner.size() ? inner[n] : 0.0;
    const double below = n > 0 ? inner[n - 1] : 0.0;
    out[n] = 4.0 * (here - below) + (n < r.size() ? r[n] : 0.0);
  }
  return kJ0 * polynomial(out, z);
}

}  // namespace nczeta::heun
