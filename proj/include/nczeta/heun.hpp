#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "nczeta/detail/series.hpp"
#include "nczeta/errors.hpp"

namespace nczeta::heun {

/// w(0) = 3 zeta(2) = pi^2 / 2.
inline constexpr double kJ0 = std::numbers::pi * std::numbers::pi / 2.0;

/*!
  Truncated power series w(z) = sum_{n<=N} J_n z^n of the generating function.

  Coefficients are stored as ratios J_n / J_0 so that the exact rational values
  produced by the recurrence (J_1 / J_0 = 3/4, J_2 / J_0 = 41/64, ...) are not
  smeared by the irrational J_0.
*/
class HeunSeries {
 public:
  explicit HeunSeries(std::vector<double> ratios);

  [[nodiscard]] std::size_t n_terms() const { return ratios_.size(); }
  /// Highest retained power N.
  [[nodiscard]] std::size_t degree() const { return ratios_.size() - 1; }
  [[nodiscard]] double ratio(std::size_t n) const { return ratios_.at(n); }
  [[nodiscard]] double coeff(std::size_t n) const { return kJ0 * ratios_.at(n); }
  [[nodiscard]] std::span<const double> ratios() const { return ratios_; }
  [[nodiscard]] std::vector<double> coeffs() const;

  /// Truncated sum and its first two termwise derivatives.
  [[nodiscard]] double value(double z) const;
  [[nodiscard]] double derivative(double z) const;
  [[nodiscard]] double second_derivative(double z) const;

 private:
  std::vector<double> ratios_;
};

/*!
  J_0..J_N from the three-term recurrence obtained by substituting the power
  series into z(1-z)^2 w'' + (1-3z)(1-z) w' + (z - 3/4) w = 0:

    (n+1)^2 J_{n+1} = (2n^2 + 2n + 3/4) J_n - n^2 J_{n-1},

  with J_{-1} = 0, so the n = 0 step forces J_1 = (3/4) J_0.
*/
HeunSeries heun_coefficients(std::size_t n);

/// J_n / J_0 as the Cauchy product of sum binom(2m,m)(z/4)^m and sum ((1/2)_k / k!)^2 z^k.
HeunSeries w_coeff_oracle(std::size_t n);

/// J_0 (1 - z)^(-1) 2F1(1/2, 1/2; 1; z / (z - 1)) for z < 1/2.
double w_closed(double z);

/// z(1-z)^2 w'' + (1-3z)(1-z) w' + (z - 3/4) w on the truncated series (signed).
double heun_residual(const HeunSeries& s, double z);

/// 4 (1-z) d/dz z d/dz (1-z) w + w, with each factor applied to the polynomial coefficients.
double factored_residual(const HeunSeries& s, double z);

/*!
  Closed form of w in an arbitrary real type, for checks that need more than
  double precision (e.g. finite-difference derivatives). Real must support
  sqrt, abs and the usual arithmetic; only the direct series is used, so the
  mapped argument z / (z - 1) must lie well inside the unit disc.
*/
template <typename Real>
Real w_closed_generic(const Real& z, const Real& j0, const Real& rel_tol) {
  using std::abs;
  if (!(z < Real(0.5))) throw DomainError("w_closed_generic: z must be < 1/2");
  const Real t = z / (z - Real(1));
  const auto out = detail::pfq_series<Real, 2, 1>({Real(0.5), Real(0.5)}, {Real(1)}, t, rel_tol,
                                                  std::size_t{1} << 20);
  if (!out.converged) throw NoConvergence("w_closed_generic: series did not converge");
  return j0 / (Real(1) - z) * out.value;
}

}  // namespace nczeta::heun
