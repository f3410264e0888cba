#include "nczeta/quad.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "nczeta/compensated.hpp"
#include "nczeta/errors.hpp"

namespace nczeta::quad {
namespace {

constexpr std::size_t kMinNodes = 16;

ComplexValue node_sum(const std::function<ComplexValue(double)>& f, std::size_t first,
                      std::size_t stride, std::size_t total) {
  CompensatedSum<double> re;
  CompensatedSum<double> im;
  const double h = 2.0 * std::numbers::pi / static_cast<double>(total);
  for (std::size_t j = first; j < total; j += stride) {
    const ComplexValue v = f(h * static_cast<double>(j));
    re += v.real();
    im += v.imag();
  }
  return {re.value(), im.value()};
}

}  // namespace

QuadResult periodic_trapezoid(const std::function<ComplexValue(double)>& f,
                              const QuadOptions& opts) {
  if (!std::has_single_bit(opts.n_max) || opts.n_max < kMinNodes) {
    throw DomainError("periodic_trapezoid: n_max must be a power of two >= " +
                      std::to_string(kMinNodes));
  }
  std::size_t n = kMinNodes;
  ComplexValue total = node_sum(f, 0, 1, n);
  ComplexValue mean = total / static_cast<double>(n);
  double diff = 0.0;
  while (n < opts.n_max) {
    const std::size_t next = 2 * n;
    total += node_sum(f, 1, 2, next);
    const ComplexValue refined = total / static_cast<double>(next);
    diff = std::abs(refined - mean);
    mean = refined;
    n = next;
    if (diff < opts.tol) return {mean, n, diff};
  }
  throw NoConvergence("periodic_trapezoid: tolerance " + num(opts.tol) +
                      " not reached with " + std::to_string(opts.n_max) +
                      " nodes (last difference " + num(diff) + ")");
}

QuadResult beta_weighted(const std::function<double(double)>& f, const QuadOptions& opts) {
  // du / sqrt(u (1 - u)) = 2 dtheta on [0, pi/2]; the symmetric extension of
  // f(sin^2 theta) to the full period carries four copies of that interval.
  auto mean = periodic_trapezoid(
      [&f](double theta) {
        const double s = std::sin(theta);
        return ComplexValue(f(s * s), 0.0);
      },
      opts);
  mean.value *= std::numbers::pi;
  mean.err_estimate *= std::numbers::pi;
  return mean;
}

}  // namespace nczeta::quad
