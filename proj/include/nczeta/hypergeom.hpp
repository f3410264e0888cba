#pragma once

#include <complex>
#include <cstddef>

namespace nczeta::hypergeom {

using ComplexValue = std::complex<double>;

/// Parameters (a, b; c) of a Gauss series. c must not be zero or a negative integer.
struct HyperParams2F1 {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
};

struct SeriesOptions {
  double rel_tol = 1e-15;
  std::size_t max_terms = 100000;
};

/// A series value together with the number of terms summed and an absolute error bound.
struct SeriesValue {
  double value = 0.0;
  std::size_t terms = 0;
  double err_estimate = 0.0;
};

/// Direct Gauss series for |x| < 1.
/// Throws DomainError for |x| >= 1 or an invalid c, NoConvergence when the term cap is reached.
SeriesValue gauss_2f1_series(const HyperParams2F1& p, double x, const SeriesOptions& opts = {});
double gauss_2f1(const HyperParams2F1& p, double x, const SeriesOptions& opts = {});

/*!
  2F1(a, b; c; x) for any x <= 0.

  Uses the Pfaff transformation
    2F1(a, b; c; x) = (1 - x)^(-a) 2F1(a, c - b; c; x / (x - 1)),
  which maps x <= 0 into [0, 1). When the mapped argument exceeds 0.999 the
  series needs on the order of 10^4 or more terms; for the parameter set
  (1/4, 3/4; 1) this regime is instead routed through gauss_2f1_quarter_agm.
  Other parameter sets fall back to the series and may throw NoConvergence.
*/
SeriesValue gauss_2f1_neg_series(const HyperParams2F1& p, double x, const SeriesOptions& opts = {});
double gauss_2f1_neg(const HyperParams2F1& p, double x, const SeriesOptions& opts = {});

/*!
  2F1(1/4, 3/4; 1; x) for x <= 0 through the arithmetic-geometric mean.

  With x = -a^2 the quadratic transformation to modulus k^2 = 2ia / (1 + ia)
  gives 2F1(1/4, 3/4; 1; -a^2) = (1 + ia)^(-1/2) (2/pi) K(k). Writing K as
  pi / (2 AGM(1, k')) and using homogeneity of the AGM, this becomes
  1 / AGM(sqrt(1 + ia), sqrt(1 - ia)). The two starting values are complex
  conjugates, so one step lands on the real pair
  (Re sqrt(1 + ia), (1 + a^2)^(1/4)) and the rest is the ordinary real AGM.
*/
double gauss_2f1_quarter_agm(double x);

/// Direct 3F2(a1, a2, a3; b1, b2; x) series for |x| < 1.
double hyper_3f2(double a1, double a2, double a3, double b1, double b2, double x,
                 const SeriesOptions& opts = {});

/// Complete elliptic integral of the first kind in terms of the squared modulus, k2 < 1.
double elliptic_k(double k2);

/// Principal square root; the result always has non-negative real part.
ComplexValue csqrt(ComplexValue z);

}  // namespace nczeta::hypergeom
