#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "nczeta/quad.hpp"

namespace nczeta::ncho {

/// Scaling constants of the two coupled oscillators. Valid when alpha, beta > 0 and alpha*beta > 1.
struct NchoParams {
  double alpha = 0.0;
  double beta = 0.0;
};

/// gamma = 1 / sqrt(alpha beta) and a = gamma / sqrt(1 - gamma^2) = 1 / sqrt(alpha beta - 1).
struct DerivedParams {
  double gamma = 0.0;
  double a = 0.0;
};

enum class Method { closed, series, elliptic, euler, spectral };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

struct ZetaResult {
  double value = 0.0;
  Method method = Method::closed;
  std::size_t terms_or_nodes = 0;
  double err_estimate = 0.0;
};

/// Throws InvalidParams unless alpha > 0, beta > 0 and alpha*beta > 1 (all finite).
void validate(const NchoParams& p);
DerivedParams derive(const NchoParams& p);

/// c_n = (1/2) (2n-1)!! / (2n)!!, with c_0 = 1/2.
double series_coeff(std::size_t n);

/// Auxiliary series 2 sum (-1)^n c_n a^{2n} J_n / J_0 for 0 <= a < 1.
double g_series(double a, std::size_t max_terms = 2000);
/// 2F1(1/4, 3/4; 1; -a^2)^2.
double g_closed(double a);
/// (1/pi) * integral_0^1 w(-a^2 u) / J_0 du / sqrt(u (1 - u)).
double g_euler(double a, const quad::QuadOptions& opts = {});
/// Square of the real part of the period mean of (1 - i a cos theta)^(-1/2).
double g_elliptic(double a, const quad::QuadOptions& opts = {});

double z1(const NchoParams& p);
double zprime(const NchoParams& p, std::size_t n);

/// pi^2/4 (1/alpha + 1/beta)^2 / (1 - 1/(alpha beta)), the factor in front of (1 + r^2 g).
double prefactor(const NchoParams& p);
/// r = (1/alpha - 1/beta) / (1/alpha + 1/beta).
double asymmetry(const NchoParams& p);

ZetaResult zeta2_closed(const NchoParams& p);
ZetaResult zeta2_series(const NchoParams& p, std::size_t max_terms = 2000);
ZetaResult zeta2_elliptic(const NchoParams& p, const quad::QuadOptions& opts = {});
ZetaResult zeta2_euler(const NchoParams& p, const quad::QuadOptions& opts = {});

}  // namespace nczeta::ncho
