#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "nczeta/compensated.hpp"

namespace nczeta::detail {

template <typename Real>
struct SeriesOutcome {
  Real value{0};
  Real last_term{0};
  /// Geometric bound on the omitted tail at the stopping point.
  Real remainder{0};
  std::size_t terms = 0;
  bool converged = false;
};

/*!
  Sums the generalized hypergeometric series pFq(upper; lower; x).

  Pochhammer products are advanced term to term through the ratio
  t_{k+1}/t_k = prod(upper_i + k) / prod(lower_j + k) * x / (k + 1).
  Summation stops once three consecutive remainder bounds fall below
  rel_tol * |sum|, or as soon as a term is exactly zero (terminating series).
  The remainder bound is |t_k| / (1 - |ratio|) while the ratio is below one
  (geometric majorant of the tail), which matters near |x| = 1 where the bare
  term understates the tail by a factor 1 / (1 - |x|).
*/
template <typename Real, std::size_t P, std::size_t Q>
SeriesOutcome<Real> pfq_series(const std::array<Real, P>& upper,
                               const std::array<Real, Q>& lower, const Real& x,
                               const Real& rel_tol, std::size_t max_terms) {
  using std::abs;
  SeriesOutcome<Real> out;
  CompensatedSum<Real> sum(Real(1));
  Real term(1);
  int quiet = 0;
  std::size_t k = 0;
  for (; k < max_terms; ++k) {
    Real ratio = x / Real(k + 1);
    for (const auto& a : upper) ratio *= a + Real(k);
    for (const auto& b : lower) ratio /= b + Real(k);
    term *= ratio;
    sum += term;
    if (term == Real(0)) {
      out.converged = true;
      break;
    }
    const Real partial = sum.value();
    const Real q = abs(ratio);
    out.remainder = q < Real(1) ? abs(term) / (Real(1) - q) : abs(term);
    quiet = out.remainder <= rel_tol * abs(partial) ? quiet + 1 : 0;
    if (quiet == 3) {
      out.converged = true;
      break;
    }
  }
  out.value = sum.value();
  out.last_term = term;
  out.terms = k + 2;
  return out;
}

}  // namespace nczeta::detail
