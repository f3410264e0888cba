#pragma once

#include <cstddef>
#include <functional>

#include "nczeta/hypergeom.hpp"

namespace nczeta::quad {

using hypergeom::ComplexValue;

struct QuadResult {
  ComplexValue value;
  std::size_t nodes = 0;
  /// |value(n) - value(n/2)| from the last doubling step.
  double err_estimate = 0.0;
};

struct QuadOptions {
  std::size_t n_max = std::size_t{1} << 20;
  double tol = 1e-13;
};

/*!
  Mean value (1/2pi) * integral over [0, 2pi) of a smooth 2pi-periodic integrand.

  The equally spaced rule is nested under doubling, so each refinement only
  evaluates the new midpoints. For integrands analytic in a strip around the
  real axis the error falls geometrically with n; iteration stops when two
  successive estimates differ by less than opts.tol. n_max must be a power of
  two. Throws NoConvergence if the tolerance is still unmet at n_max nodes.
*/
QuadResult periodic_trapezoid(const std::function<ComplexValue(double)>& f,
                              const QuadOptions& opts = {});

/// Integral of f(u) / sqrt(u (1 - u)) over [0, 1], via u = sin^2(theta).
QuadResult beta_weighted(const std::function<double(double)>& f, const QuadOptions& opts = {});

}  // namespace nczeta::quad
