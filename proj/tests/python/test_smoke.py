import math

import pytest

import nczeta


def rel(x, ref):
    return abs(x - ref) / abs(ref)


def test_decoupled_closed_is_pi_squared():
    r = nczeta.zeta2_closed(math.sqrt(2), math.sqrt(2))
    assert r.method == "closed"
    assert rel(r.value, math.pi**2) < 1e-12


@pytest.mark.parametrize("method", ["series", "elliptic", "euler"])
def test_analytic_routes_agree(method):
    closed = nczeta.zeta2(2.0, 3.0).value
    assert rel(nczeta.zeta2(2.0, 3.0, method=method).value, closed) < 1e-10


def test_spectral_route():
    closed = nczeta.zeta2_closed(2.0, 3.0).value
    r = nczeta.zeta2_spectral(2.0, 3.0)
    assert r.terms_or_nodes == 400
    assert rel(r.value, closed) < 1e-4
    assert nczeta.zeta2_spectral(2.0, 3.0, keep=10, with_tail=False).value < closed


def test_g_and_hypergeometric_pieces():
    assert nczeta.g_closed(0.0) == 1.0
    a = 0.6
    assert rel(nczeta.g_series(a), nczeta.g_closed(a)) < 1e-12
    assert rel(nczeta.g_elliptic(10.0), nczeta.g_closed(10.0)) < 1e-11
    assert rel(nczeta.g_closed(a), nczeta.gauss_2f1_neg(0.25, 0.75, 1.0, -a * a) ** 2) < 1e-15
    assert rel(nczeta.elliptic_k(0.25), math.pi / 2 * nczeta.gauss_2f1(0.5, 0.5, 1.0, 0.25)) < 1e-13
    f = nczeta.gauss_2f1(0.25, 0.25, 1.0, 0.3)
    assert rel(nczeta.hyper_3f2(0.5, 0.5, 0.5, 1.0, 1.0, 0.3), f * f) < 1e-12


def test_heun_coefficients():
    j = nczeta.heun_coefficients(8)
    assert len(j) == 9
    assert rel(j[0], math.pi**2 / 2) < 1e-15
    assert rel(j[1] / j[0], 0.75) < 1e-15
    assert rel(j[2] / j[0], 41 / 64) < 1e-15
    oracle = nczeta.w_coeff_oracle(8)
    assert all(rel(x, y) < 1e-14 for x, y in zip(j, oracle))


def test_derive_and_eigenvalues():
    d = nczeta.derive(2.0, 3.0)
    assert rel(d["gamma"], 1 / math.sqrt(6)) < 1e-15
    assert rel(d["a"], 1 / math.sqrt(5)) < 1e-15
    ev = nczeta.lowest_eigenvalues(math.sqrt(2), math.sqrt(2), 64, 6)
    assert ev == pytest.approx([0.5, 0.5, 1.5, 1.5, 2.5, 2.5], rel=1e-10)


def test_errors_map_to_python_exceptions():
    with pytest.raises(nczeta.InvalidParams):
        nczeta.zeta2_closed(1.0, 1.0)
    with pytest.raises(nczeta.DomainError):
        nczeta.g_series(1.5)
    with pytest.raises(nczeta.Error):
        nczeta.elliptic_k(1.0)
    with pytest.raises(ValueError):
        nczeta.zeta2(2.0, 3.0, method="bogus")
