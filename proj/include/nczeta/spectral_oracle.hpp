#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "nczeta/ncho.hpp"

namespace nczeta::spectral {

using Matrix = Eigen::MatrixXd;

enum class Parity { even = 0, odd = 1 };

/*!
  Galerkin matrix of Q in the orthonormal Hermite-function basis.

  Index i < n_modes is mode i of the first component, n_modes + i mode i of
  the second. The oscillator part is diagonal, alpha (n + 1/2) and
  beta (n + 1/2). With x = (A + A^+)/sqrt2 and d/dx = (A - A^+)/sqrt2 one has
  x d/dx + 1/2 = (A^2 - A^+^2) / 2, a real skew-symmetric matrix S with
  S(n-2, n) = sqrt(n (n-1)) / 2 = -S(n, n-2). The off-diagonal blocks are -S
  (upper right) and S (lower left), so the full matrix is symmetric.
*/
Matrix build_matrix(const ncho::NchoParams& p, std::size_t n_modes);

/// Rows/columns of build_matrix whose Hermite index has the given parity, component 1 first.
Matrix parity_block(const Matrix& full, std::size_t n_modes, Parity parity);

/// Ascending eigenvalues of each parity block.
std::array<std::vector<double>, 2> parity_eigenvalues(const ncho::NchoParams& p,
                                                      std::size_t n_modes);

struct EigenvalueList {
  std::vector<double> values;
  /// values[i] moved by less than 1e-8 relative when the basis was halved.
  std::vector<bool> stable;
};

/// Lowest k eigenvalues (both parities merged), flagged against an n_modes/2 truncation.
EigenvalueList lowest_eigenvalues(const ncho::NchoParams& p, std::size_t n_modes, std::size_t k);

/// Least-squares line lambda_n ~ slope * n + intercept over the end of the kept window.
struct ParityTail {
  double slope = 0.0;
  double intercept = 0.0;
  double fit_rms = 0.0;
};

struct SpectralTruncation {
  std::size_t basis_size = 0;
  std::size_t keep_per_parity = 0;
  /// Kept eigenvalues of both parities, merged and sorted.
  std::vector<double> eigenvalues;
  std::array<ParityTail, 2> tails{};
  double partial_sum = 0.0;
  double tail_sum = 0.0;
  double err_estimate = 0.0;
};

/// Keeps the lowest k_keep eigenvalues per parity (k_keep <= n_modes / 2) and fits the tails.
SpectralTruncation truncate(const ncho::NchoParams& p, std::size_t n_modes, std::size_t k_keep);

/// Sum of lambda^-2 over the kept eigenvalues, plus the fitted tail when with_tail is set.
ncho::ZetaResult zeta2_spectral(const ncho::NchoParams& p, std::size_t n_modes = 512,
                                std::size_t k_keep = 200, bool with_tail = true);

}  // namespace nczeta::spectral
