#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nczeta/errors.hpp"
#include "nczeta/heun.hpp"
#include "nczeta/hypergeom.hpp"
#include "nczeta/ncho.hpp"
#include "nczeta/spectral_oracle.hpp"

namespace py = pybind11;
using namespace nczeta;

namespace {

hypergeom::SeriesOptions series_opts(double rel_tol, std::size_t max_terms) {
  return {rel_tol, max_terms};
}

quad::QuadOptions quad_opts(double tol) { return {std::size_t{1} << 20, tol}; }

ncho::ZetaResult zeta2(double alpha, double beta, const std::string& method, std::size_t terms,
                       double quad_tol, std::size_t basis_size, std::size_t keep) {
  const auto m = ncho::parse_method(method);
  if (!m) throw py::value_error("unknown method '" + method + "'");
  const ncho::NchoParams p{alpha, beta};
  switch (*m) {
    case ncho::Method::closed:
      return ncho::zeta2_closed(p);
    case ncho::Method::series:
      return ncho::zeta2_series(p, terms);
    case ncho::Method::elliptic:
      return ncho::zeta2_elliptic(p, quad_opts(quad_tol));
    case ncho::Method::euler:
      return ncho::zeta2_euler(p, quad_opts(quad_tol));
    case ncho::Method::spectral:
      return spectral::zeta2_spectral(p, basis_size, keep);
  }
  throw py::value_error("unknown method");
}

}  // namespace

PYBIND11_MODULE(_nczeta, m) {
  m.doc() = "Special value zeta_Q(2) of the non-commutative harmonic oscillator";

  // Base first: pybind11 tries the most recently registered translator first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<InvalidParams>(m, "InvalidParams", base.ptr());
  py::register_exception<BranchInconsistency>(m, "BranchInconsistency", base.ptr());
  py::register_exception<EigensolveFailure>(m, "EigensolveFailure", base.ptr());

  py::class_<ncho::ZetaResult>(m, "ZetaResult")
      .def_readonly("value", &ncho::ZetaResult::value)
      .def_property_readonly("method",
                             [](const ncho::ZetaResult& r) { return std::string(ncho::to_string(r.method)); })
      .def_readonly("terms_or_nodes", &ncho::ZetaResult::terms_or_nodes)
      .def_readonly("err_estimate", &ncho::ZetaResult::err_estimate)
      .def("__repr__", [](const ncho::ZetaResult& r) {
        return "ZetaResult(value=" + py::repr(py::float_(r.value)).cast<std::string>() +
               ", method='" + std::string(ncho::to_string(r.method)) + "')";
      });

  m.def("gauss_2f1",
        [](double a, double b, double c, double x, double rel_tol, std::size_t max_terms) {
          return hypergeom::gauss_2f1({a, b, c}, x, series_opts(rel_tol, max_terms));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("rel_tol") = 1e-15,
        py::arg("max_terms") = 100000, "Gauss series 2F1(a, b; c; x) for |x| < 1.");
  m.def("gauss_2f1_neg",
        [](double a, double b, double c, double x, double rel_tol, std::size_t max_terms) {
          return hypergeom::gauss_2f1_neg({a, b, c}, x, series_opts(rel_tol, max_terms));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("rel_tol") = 1e-15,
        py::arg("max_terms") = 100000, "2F1(a, b; c; x) for x <= 0.");
  m.def("hyper_3f2",
        [](double a1, double a2, double a3, double b1, double b2, double x) {
          return hypergeom::hyper_3f2(a1, a2, a3, b1, b2, x);
        },
        py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("b1"), py::arg("b2"), py::arg("x"));
  m.def("elliptic_k", &hypergeom::elliptic_k, py::arg("k2"),
        "Complete elliptic integral K of squared modulus k2 < 1.");

  m.def("heun_coefficients", [](std::size_t n) { return heun::heun_coefficients(n).coeffs(); },
        py::arg("n"), "J_0..J_n from the three-term recurrence.");
  m.def("w_coeff_oracle", [](std::size_t n) { return heun::w_coeff_oracle(n).coeffs(); },
        py::arg("n"), "J_0..J_n as a Cauchy product of two closed-form series.");
  m.def("w_closed", &heun::w_closed, py::arg("z"));

  m.def("derive",
        [](double alpha, double beta) {
          const auto d = ncho::derive({alpha, beta});
          py::dict out;
          out["gamma"] = d.gamma;
          out["a"] = d.a;
          return out;
        },
        py::arg("alpha"), py::arg("beta"));
  m.def("g_series", &ncho::g_series, py::arg("a"), py::arg("max_terms") = 2000);
  m.def("g_closed", &ncho::g_closed, py::arg("a"));
  m.def("g_elliptic", [](double a, double tol) { return ncho::g_elliptic(a, quad_opts(tol)); },
        py::arg("a"), py::arg("quad_tol") = 1e-13);
  m.def("g_euler", [](double a, double tol) { return ncho::g_euler(a, quad_opts(tol)); },
        py::arg("a"), py::arg("quad_tol") = 1e-13);

  m.def("zeta2_closed", [](double al, double be) { return ncho::zeta2_closed({al, be}); },
        py::arg("alpha"), py::arg("beta"));
  m.def("zeta2_series",
        [](double al, double be, std::size_t terms) { return ncho::zeta2_series({al, be}, terms); },
        py::arg("alpha"), py::arg("beta"), py::arg("terms") = 2000);
  m.def("zeta2_elliptic",
        [](double al, double be, double tol) { return ncho::zeta2_elliptic({al, be}, quad_opts(tol)); },
        py::arg("alpha"), py::arg("beta"), py::arg("quad_tol") = 1e-13);
  m.def("zeta2_euler",
        [](double al, double be, double tol) { return ncho::zeta2_euler({al, be}, quad_opts(tol)); },
        py::arg("alpha"), py::arg("beta"), py::arg("quad_tol") = 1e-13);
  m.def("zeta2_spectral",
        [](double al, double be, std::size_t n_modes, std::size_t keep, bool with_tail) {
          py::gil_scoped_release release;
          return spectral::zeta2_spectral({al, be}, n_modes, keep, with_tail);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("n_modes") = 512, py::arg("keep") = 200,
        py::arg("with_tail") = true);
  m.def("lowest_eigenvalues",
        [](double al, double be, std::size_t n_modes, std::size_t k) {
          py::gil_scoped_release release;
          return spectral::lowest_eigenvalues({al, be}, n_modes, k).values;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("n_modes") = 512, py::arg("k") = 20);

  m.def("zeta2", &zeta2, py::arg("alpha"), py::arg("beta"), py::arg("method") = "closed",
        py::arg("terms") = 2000, py::arg("quad_tol") = 1e-13, py::arg("basis_size") = 512,
        py::arg("keep") = 200, "Dispatch on method: closed, series, elliptic, euler, spectral.");
}
