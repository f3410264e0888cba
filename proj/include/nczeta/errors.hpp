#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace nczeta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the region where the requested method is valid.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or quadrature exhausted its term/node budget before meeting its tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Operator parameters violate alpha > 0, beta > 0, alpha*beta > 1.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// The two sign choices for the imaginary unit in the elliptic integrand disagree.
class BranchInconsistency : public Error {
 public:
  using Error::Error;
};

class EigensolveFailure : public Error {
 public:
  using Error::Error;
};

/// Short form of a double for error messages (std::to_string prints 1e-13 as 0.000000).
inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace nczeta
