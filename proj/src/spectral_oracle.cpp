#include "nczeta/spectral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "nczeta/compensated.hpp"
#include "nczeta/errors.hpp"

namespace nczeta::spectral {
namespace {

constexpr double kStableTol = 1e-8;

void check_modes(std::size_t n_modes) {
  if (n_modes < 4) {
    throw DomainError("spectral: n_modes must be >= 4 (got " + std::to_string(n_modes) + ")");
  }
}

std::vector<double> block_eigenvalues(const Matrix& block) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(block, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw EigensolveFailure("symmetric eigensolve did not converge (block size " +
                            std::to_string(block.rows()) + ")");
  }
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> merged(const std::array<std::vector<double>, 2>& blocks) {
  std::vector<double> out;
  out.reserve(blocks[0].size() + blocks[1].size());
  std::merge(blocks[0].begin(), blocks[0].end(), blocks[1].begin(), blocks[1].end(),
             std::back_inserter(out));
  return out;
}

ParityTail fit_tail(const std::vector<double>& kept) {
  const std::size_t k = kept.size();
  const std::size_t q = std::max<std::size_t>(k / 4, 2);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = k - q; i < k; ++i) {
    const double x = static_cast<double>(i + 1);
    sx += x;
    sy += kept[i];
    sxx += x * x;
    sxy += x * kept[i];
  }
  const double nq = static_cast<double>(q);
  ParityTail t;
  t.slope = (nq * sxy - sx * sy) / (nq * sxx - sx * sx);
  t.intercept = (sy - t.slope * sx) / nq;
  double ss = 0.0;
  for (std::size_t i = k - q; i < k; ++i) {
    const double r = kept[i] - (t.slope * static_cast<double>(i + 1) + t.intercept);
    ss += r * r;
  }
  t.fit_rms = std::sqrt(ss / nq);
  return t;
}

}  // namespace

Matrix build_matrix(const ncho::NchoParams& p, std::size_t n_modes) {
  ncho::validate(p);
  check_modes(n_modes);
  const auto n = static_cast<Eigen::Index>(n_modes);
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double level = static_cast<double>(k) + 0.5;
    m(k, k) = p.alpha * level;
    m(n + k, n + k) = p.beta * level;
  }
  for (Eigen::Index k = 2; k < n; ++k) {
    const double s = 0.5 * std::sqrt(static_cast<double>(k) * static_cast<double>(k - 1));
    // S(k-2, k) = s, S(k, k-2) = -s; upper-right block is -S, lower-left is S.
    m(k - 2, n + k) = -s;
    m(k, n + k - 2) = s;
    m(n + k - 2, k) = s;
    m(n + k, k - 2) = -s;
  }
  return m;
}

Matrix parity_block(const Matrix& full, std::size_t n_modes, Parity parity) {
  std::vector<Eigen::Index> idx;
  const auto n = static_cast<Eigen::Index>(n_modes);
  for (Eigen::Index comp = 0; comp < 2; ++comp) {
    for (Eigen::Index k = static_cast<Eigen::Index>(parity); k < n; k += 2) {
      idx.push_back(comp * n + k);
    }
  }
  const auto size = static_cast<Eigen::Index>(idx.size());
  Matrix block(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) block(i, j) = full(idx[i], idx[j]);
  }
  return block;
}

std::array<std::vector<double>, 2> parity_eigenvalues(const ncho::NchoParams& p,
                                                      std::size_t n_modes) {
  const Matrix full = build_matrix(p, n_modes);
  auto odd = std::async(std::launch::async, [&] {
    return block_eigenvalues(parity_block(full, n_modes, Parity::odd));
  });
  auto even = block_eigenvalues(parity_block(full, n_modes, Parity::even));
  return {std::move(even), odd.get()};
}

EigenvalueList lowest_eigenvalues(const ncho::NchoParams& p, std::size_t n_modes, std::size_t k) {
  check_modes(n_modes);
  if (k > n_modes) {
    throw DomainError("lowest_eigenvalues: k must not exceed n_modes");
  }
  const auto fine = merged(parity_eigenvalues(p, n_modes));
  EigenvalueList out;
  out.values.assign(fine.begin(), fine.begin() + static_cast<std::ptrdiff_t>(k));
  out.stable.assign(k, false);
  if (n_modes / 2 >= 4) {
    const auto coarse = merged(parity_eigenvalues(p, n_modes / 2));
    for (std::size_t i = 0; i < k && i < coarse.size(); ++i) {
      out.stable[i] = std::abs(coarse[i] - fine[i]) <= kStableTol * std::abs(fine[i]);
    }
  }
  return out;
}

SpectralTruncation truncate(const ncho::NchoParams& p, std::size_t n_modes, std::size_t k_keep) {
  check_modes(n_modes);
  if (k_keep < 8 || k_keep > n_modes / 2) {
    throw DomainError("zeta2_spectral: k_keep must lie in [8, n_modes/2] (got " +
                      std::to_string(k_keep) + " with n_modes = " + std::to_string(n_modes) +
                      ")");
  }
  const auto blocks = parity_eigenvalues(p, n_modes);

  SpectralTruncation out;
  out.basis_size = n_modes;
  out.keep_per_parity = k_keep;
  CompensatedSum<double> partial;
  double tail = 0.0;
  double err = 0.0;
  std::array<std::vector<double>, 2> kept;
  for (std::size_t b = 0; b < 2; ++b) {
    kept[b].assign(blocks[b].begin(), blocks[b].begin() + static_cast<std::ptrdiff_t>(k_keep));
    if (!(kept[b].front() > 0.0)) {
      throw EigensolveFailure("non-positive eigenvalue " + num(kept[b].front()) +
                              " in truncated spectrum");
    }
    for (double lam : kept[b]) partial += 1.0 / (lam * lam);

    const ParityTail t = fit_tail(kept[b]);
    if (!(t.slope > 0.0)) {
      throw EigensolveFailure("spectral tail fit has non-positive slope " +
                              num(t.slope));
    }
    out.tails[b] = t;
    // sum_{n > K} f(n) with f(x) = (c x + d)^-2: midpoint integral from K + 1/2 plus
    // the first Euler-Maclaurin correction f'(K + 1/2) / 24.
    const double edge = t.slope * (static_cast<double>(k_keep) + 0.5) + t.intercept;
    const double integral = 1.0 / (t.slope * edge);
    const double correction = -t.slope / (12.0 * edge * edge * edge);
    tail += integral + correction;
    err += std::abs(correction) + 2.0 * integral * t.fit_rms / edge;
  }
  out.eigenvalues = merged(kept);
  out.partial_sum = partial.value();
  out.tail_sum = tail;
  out.err_estimate = err;
  return out;
}

ncho::ZetaResult zeta2_spectral(const ncho::NchoParams& p, std::size_t n_modes,
                                std::size_t k_keep, bool with_tail) {
  const auto t = truncate(p, n_modes, k_keep);
  const double value = with_tail ? t.partial_sum + t.tail_sum : t.partial_sum;
  const double err = with_tail ? t.err_estimate : t.tail_sum;
  return {value, ncho::Method::spectral, 2 * k_keep, err};
}

}  // namespace nczeta::spectral
