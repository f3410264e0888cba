#pragma once

#include <cmath>

namespace nczeta {

/*!
  Running sum with an error-free transformation on every addition.

  Each addition is split with Knuth's TwoSum into the rounded sum and its exact
  rounding error; the errors are collected in a second accumulator and folded
  back in on read. Unlike plain Kahan compensation this stays correct when an
  incoming term is larger in magnitude than the running sum, which happens
  routinely for alternating series.

  Works for any binary floating-point type with round-to-nearest arithmetic,
  including Boost.Multiprecision binary floats.
*/
template <typename Real>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(Real initial) : sum_(initial) {}

  CompensatedSum& operator+=(const Real& value) {
    const Real s = sum_ + value;
    const Real bp = s - sum_;
    const Real err = (sum_ - (s - bp)) + (value - bp);
    sum_ = s;
    correction_ += err;
    return *this;
  }

  CompensatedSum& operator-=(const Real& value) { return *this += -value; }

  [[nodiscard]] Real value() const { return sum_ + correction_; }

 private:
  Real sum_{0};
  Real correction_{0};
};

}  // namespace nczeta
