#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frozen_values.hpp"
#include "nczeta/compensated.hpp"
#include "nczeta/errors.hpp"
#include "nczeta/heun.hpp"
#include "nczeta/hypergeom.hpp"
#include "nczeta/ncho.hpp"

namespace ncho = nczeta::ncho;
using ncho::NchoParams;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

}  // namespace

TEST(Derive, SimpleParameters) {
  const auto d = ncho::derive({2.0, 3.0});
  EXPECT_DOUBLE_EQ(d.gamma, 1.0 / std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(d.a, 1.0 / std::sqrt(5.0));
  const auto e = ncho::derive({std::sqrt(2.0), std::sqrt(2.0)});
  EXPECT_NEAR(e.gamma, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(e.a, 1.0, 1e-15);
  EXPECT_NEAR(ncho::derive({1.01, 1.0}).a, 10.0, 1e-12);
}

TEST(Derive, InvariantsOnRandomParameters) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> logab(std::log(1.001), std::log(1000.0));
  std::uniform_real_distribution<double> logratio(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double ab = std::exp(logab(rng));
    const double ratio = std::exp(logratio(rng));
    const NchoParams p{std::sqrt(ab * ratio), std::sqrt(ab / ratio)};
    const auto d = ncho::derive(p);
    EXPECT_GT(d.gamma, 0.0);
    EXPECT_LT(d.gamma, 1.0);
    EXPECT_GT(d.a, 0.0);
    EXPECT_LT(std::abs(d.a * d.a * (p.alpha * p.beta - 1.0) - 1.0),
              4.0 * std::numeric_limits<double>::epsilon());
    EXPECT_LT(rel(d.a, d.gamma / std::sqrt(1.0 - d.gamma * d.gamma)), 1e-12);
  }
}

TEST(Derive, RejectsInvalidParameters) {
  EXPECT_THROW(ncho::derive({1.0, 1.0}), nczeta::InvalidParams);
  EXPECT_THROW(ncho::derive({0.5, 1.5}), nczeta::InvalidParams);
  EXPECT_THROW(ncho::derive({-2.0, -3.0}), nczeta::InvalidParams);
  EXPECT_THROW(ncho::derive({std::nan(""), 3.0}), nczeta::InvalidParams);
}

TEST(Method, NamesRoundTrip) {
  for (auto m : {ncho::Method::closed, ncho::Method::series, ncho::Method::elliptic,
                 ncho::Method::euler, ncho::Method::spectral}) {
    EXPECT_EQ(ncho::parse_method(ncho::to_string(m)), m);
  }
  EXPECT_FALSE(ncho::parse_method("bogus"));
}

TEST(SeriesCoeff, KnownValues) {
  EXPECT_EQ(ncho::series_coeff(0), 0.5);
  EXPECT_EQ(ncho::series_coeff(1), 0.25);
  EXPECT_EQ(ncho::series_coeff(5), 63.0 / 512.0);
}

TEST(SeriesCoeff, MatchesDoubleFactorialProduct) {
  for (std::size_t n = 1; n <= 30; ++n) {
    double odd = 1.0, even = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
      odd *= static_cast<double>(2 * k - 1);
      even *= static_cast<double>(2 * k);
    }
    EXPECT_LT(rel(ncho::series_coeff(n), 0.5 * odd / even), 1e-14) << n;
  }
}

TEST(GSeries, AtZero) { EXPECT_EQ(ncho::g_series(0.0), 1.0); }

TEST(GSeries, MatchesClosedForm) {
  const double a = 1.0 / std::sqrt(5.0);
  EXPECT_LT(rel(ncho::g_series(a, 200), ncho::g_closed(a)), 1e-12);
  EXPECT_LT(std::abs(ncho::g_series(0.99, 5000) - ncho::g_closed(0.99)), 1e-8);
}

TEST(GSeries, RejectsAOutsideDisc) {
  EXPECT_THROW(ncho::g_series(1.0), nczeta::DomainError);
  EXPECT_THROW(ncho::g_series(-0.1), nczeta::DomainError);
}

TEST(GClosed, Values) {
  EXPECT_EQ(ncho::g_closed(0.0), 1.0);
  const double a = 1.0 / std::sqrt(5.0);
  EXPECT_LT(rel(ncho::g_closed(a), frozen::F_quarter_m02 * frozen::F_quarter_m02), 1e-14);
  EXPECT_LT(ncho::g_closed(100.0), ncho::g_closed(10.0));
  EXPECT_LT(ncho::g_closed(10.0), ncho::g_closed(1.0));
}

TEST(GClosed, ThreeFTwoReduction) {
  // g(a) = (1 + a^2)^(-1/2) 3F2(1/2, 1/2, 1/2; 1, 1; a^2 / (1 + a^2))
  for (double a : {0.1, 0.5, 1.0, 2.0}) {
    const double x = a * a / (1.0 + a * a);
    const double via3f2 =
        nczeta::hypergeom::hyper_3f2(0.5, 0.5, 0.5, 1, 1, x) / std::sqrt(1.0 + a * a);
    EXPECT_LT(rel(ncho::g_closed(a), via3f2), 1e-12) << a;
  }
}

TEST(GEuler, Values) {
  EXPECT_NEAR(ncho::g_euler(0.0), 1.0, 1e-15);
  const double a = 1.0 / std::sqrt(5.0);
  EXPECT_LT(std::abs(ncho::g_euler(a) - ncho::g_closed(a)), 1e-11);
  EXPECT_LT(std::abs(ncho::g_euler(3.0) - ncho::g_closed(3.0)), 1e-11);
}

TEST(GElliptic, Values) {
  EXPECT_NEAR(ncho::g_elliptic(0.0), 1.0, 1e-15);
  const double a = 1.0 / std::sqrt(5.0);
  EXPECT_LT(std::abs(ncho::g_elliptic(a) - ncho::g_closed(a)), 1e-12);
  EXPECT_LT(std::abs(ncho::g_elliptic(10.0) - ncho::g_closed(10.0)), 1e-11);
}

TEST(GFunction, BoundsAndMonotonicity) {
  double prev_f = 2.0;
  for (int i = 0; i <= 100; ++i) {
    const double a = 0.1 * i;
    const double g = ncho::g_closed(a);
    EXPECT_GT(g, 0.0);
    EXPECT_LE(g, 1.0);
    const double f = nczeta::hypergeom::gauss_2f1_neg({0.25, 0.75, 1.0}, -a * a);
    EXPECT_LT(f, prev_f) << a;
    prev_f = f;
  }
}

TEST(GFunction, SeriesEqualsClosedFormOnRandomArguments) {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> as(0.0, 0.95);
  for (int i = 0; i < 20; ++i) {
    const double a = as(rng);
    EXPECT_LT(std::abs(ncho::g_series(a) - ncho::g_closed(a)), 1e-12) << a;
  }
}

TEST(Z1, Values) {
  const double s2 = std::sqrt(2.0);
  EXPECT_LT(rel(ncho::z1({s2, s2}), kPi2), 1e-14);
  EXPECT_LT(rel(ncho::z1({2.0, 3.0}), 5.0 / 12.0 * kPi2 / 2.0), 1e-14);
  for (double alpha : {1.5, 2.0, 7.0}) {
    EXPECT_LT(rel(ncho::z1({alpha, alpha}), kPi2 / (alpha * alpha - 1.0)), 1e-14) << alpha;
  }
}

TEST(ZPrime, Values) {
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(ncho::zprime({3.0, 3.0}, n), 0.0);
  // (1/6)^2 / (5/6) * (1/2) * pi^2/2 = pi^2 / 120
  EXPECT_LT(rel(ncho::zprime({2.0, 3.0}, 0), kPi2 / 120.0), 1e-14);
  const double z1 = ncho::zprime({2.0, 3.0}, 1);
  EXPECT_LT(z1, 0.0);
  // (1/36)/(5/6) * c_1 * a^2 * J_1 with c_1 = 1/4, a^2 = 1/5, J_1 = 3/4 * pi^2/2
  EXPECT_LT(rel(-z1, (1.0 / 30.0) * 0.25 * 0.2 * 0.75 * kPi2 / 2.0), 1e-14);
}

TEST(ZetaSeries, SumOfZPrimeTerms) {
  const NchoParams p{2.0, 3.0};
  nczeta::CompensatedSum<double> sum(ncho::z1(p));
  for (std::size_t n = 0; n < 60; ++n) sum += ncho::zprime(p, n);
  EXPECT_LT(rel(ncho::zeta2_series(p).value, sum.value()), 1e-13);
}

TEST(ZetaSeries, Values) {
  const auto r = ncho::zeta2_series({2.0, 2.0});
  EXPECT_LT(rel(r.value, kPi2 / 3.0), 1e-14);
  EXPECT_EQ(r.method, ncho::Method::series);
  EXPECT_LT(rel(ncho::zeta2_series({2.0, 3.0}).value, ncho::zeta2_closed({2.0, 3.0}).value),
            1e-12);
  EXPECT_THROW(ncho::zeta2_series({1.2, 1.2}), nczeta::DomainError);
}

TEST(ZetaClosed, DecoupledCase) {
  for (double alpha : {std::sqrt(2.0), 2.0, 5.0, 1.01}) {
    EXPECT_LT(rel(ncho::zeta2_closed({alpha, alpha}).value, kPi2 / (alpha * alpha - 1.0)), 1e-12)
        << alpha;
  }
  EXPECT_LT(ncho::zeta2_closed({10.0, 10.0}).value, ncho::zeta2_closed({2.0, 2.0}).value);
}

TEST(ZetaClosed, SymmetricInAlphaBeta) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 20.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng), y = u(rng);
    if (x * y <= 1.0) continue;
    EXPECT_EQ(ncho::zeta2_closed({x, y}).value, ncho::zeta2_closed({y, x}).value);
  }
}

TEST(ZetaClosed, BetweenPrefactorBounds) {
  for (auto p : {NchoParams{2.0, 3.0}, NchoParams{10.0, 0.2}, NchoParams{1.5, 1.2},
                 NchoParams{50.0, 0.03}}) {
    const double pre = ncho::prefactor(p);
    const double r = ncho::asymmetry(p);
    const double z = ncho::zeta2_closed(p).value;
    EXPECT_GE(z, pre);
    EXPECT_LE(z, pre * (1.0 + r * r));
  }
}

TEST(ZetaClosed, RejectsInvalidParams) {
  EXPECT_THROW(ncho::zeta2_closed({1.0, 1.0}), nczeta::InvalidParams);
}

TEST(ZetaElliptic, Values) {
  EXPECT_LT(rel(ncho::zeta2_elliptic({3.0, 3.0}).value, kPi2 / 8.0), 1e-13);
  EXPECT_LT(rel(ncho::zeta2_elliptic({2.0, 3.0}).value, ncho::zeta2_closed({2.0, 3.0}).value),
            1e-11);
  EXPECT_LT(rel(ncho::zeta2_elliptic({1.1, 1.0}).value, ncho::zeta2_closed({1.1, 1.0}).value),
            1e-10);
}

TEST(ZetaEuler, Values) {
  EXPECT_LT(rel(ncho::zeta2_euler({2.0, 3.0}).value, ncho::zeta2_closed({2.0, 3.0}).value), 1e-11);
  EXPECT_LT(rel(ncho::zeta2_euler({1.1, 1.0}).value, ncho::zeta2_closed({1.1, 1.0}).value), 1e-10);
}

TEST(ZetaResult, PositiveWithErrorEstimates) {
  const NchoParams p{2.0, 3.0};
  for (const auto& r : {ncho::zeta2_closed(p), ncho::zeta2_series(p), ncho::zeta2_elliptic(p),
                        ncho::zeta2_euler(p)}) {
    EXPECT_GT(r.value, 0.0);
    EXPECT_GT(r.err_estimate, 0.0);
    EXPECT_LT(r.err_estimate, 1e-10 * r.value);
    EXPECT_GT(r.terms_or_nodes, 0u);
  }
}
