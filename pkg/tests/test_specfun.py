"""Special-function layer: recurrences against scipy, explicit sums, and the
oscillatory brute-force route for the matrix-entry kernels."""

from __future__ import annotations

import numpy as np
import pytest
from scipy.special import eval_genlaguerre

from hharm.specfun import (
    eigenvalue,
    frequency_distance,
    hermite_function,
    laguerre,
    laguerre_table,
    multiplicity,
    normalized_kernel,
    wigner_bruteforce,
    wigner_radial,
    wigner_radial_table,
)

X = np.linspace(0.0, 30.0, 121)


@pytest.mark.parametrize("ell", [0, 1, 2, 3, 7, 16, 40])
@pytest.mark.parametrize("alpha", [0.0, 1.0, 2.0])
def test_laguerre_matches_scipy(ell, alpha):
    ours = laguerre(ell, alpha, X)
    ref = eval_genlaguerre(ell, alpha, X)
    scale = np.maximum(np.abs(ref), 1.0)
    assert np.max(np.abs(ours - ref) / scale) < 1e-12


def test_laguerre_explicit_small_degrees():
    # independent route: the explicit polynomials, no recurrence involved
    x = np.linspace(0.0, 9.0, 37)
    assert np.allclose(laguerre(1, 0.0, x), 1.0 - x, atol=1e-14)
    assert np.allclose(laguerre(2, 0.0, x), 1.0 - 2.0 * x + 0.5 * x**2, atol=1e-13)
    assert np.allclose(
        laguerre(2, 1.0, x), 3.0 - 3.0 * x + 0.5 * x**2, atol=1e-13
    )


def test_laguerre_table_consistency():
    tab = laguerre_table(12, 1.0, X)
    for ell in (0, 3, 12):
        assert np.array_equal(tab[ell], laguerre(ell, 1.0, X))


def test_laguerre_rejects_negative_degree():
    with pytest.raises(ValueError):
        laguerre(-1, 0.0, X)


@pytest.mark.parametrize(
    "d,expected",
    [
        (1, [1, 1, 1, 1, 1]),
        (2, [1, 2, 3, 4, 5]),
        (3, [1, 3, 6, 10, 15]),
    ],
)
def test_multiplicity_values(d, expected):
    assert [multiplicity(ell, d) for ell in range(5)] == expected


def test_multiplicity_rejects_bad_arguments():
    with pytest.raises(ValueError):
        multiplicity(-1, 1)
    with pytest.raises(ValueError):
        multiplicity(0, 0)


def test_wigner_radial_origin_and_bound():
    rho = np.linspace(0.0, 8.0, 200)
    for d in (1, 2):
        for ell in (0, 1, 5):
            k = wigner_radial(ell, 0.9, rho, d)
            assert k[0] == multiplicity(ell, d)
            assert np.max(np.abs(k)) <= multiplicity(ell, d) + 1e-12


def test_wigner_radial_even_in_lam():
    rho = np.linspace(0.0, 5.0, 50)
    assert np.array_equal(
        wigner_radial(3, 1.7, rho), wigner_radial(3, -1.7, rho)
    )


def test_wigner_radial_table_consistency():
    rho = np.linspace(0.0, 5.0, 50)
    tab = wigner_radial_table(6, 1.3, rho, d=2)
    for ell in (0, 2, 6):
        assert np.array_equal(tab[ell], wigner_radial(ell, 1.3, rho, d=2))


@pytest.mark.parametrize("ell", [0, 1, 2, 3])
@pytest.mark.parametrize("lam", [0.7, -1.3])
def test_wigner_diagonal_matches_bruteforce(ell, lam):
    """Diagonal matrix entries computed by direct oscillatory quadrature over
    scaled Hermite products must reproduce the radial Laguerre kernel."""
    Y = (0.8, 0.4)
    val = wigner_bruteforce(ell, ell, lam, Y)
    ref = wigner_radial(ell, lam, np.hypot(*Y))
    assert abs(val.imag) < 1e-9
    assert abs(val.real - ref) < 1e-8


def test_wigner_bruteforce_flags_bad_quadrature():
    with pytest.raises(RuntimeError):
        wigner_bruteforce(3, 3, 0.5, (0.5, 2.0), n_quad=6)
    with pytest.raises(ValueError):
        wigner_bruteforce(0, 0, 0.0, (0.5, 0.5))


def test_eigenvalue_values():
    assert eigenvalue(0, 1.0, 1) == 4.0
    assert eigenvalue(1, 0.5, 1) == 6.0
    assert eigenvalue(2, 1.0, 3) == 28.0
    assert eigenvalue(0, -1.0, 1) == 4.0  # even in lam


def test_hermite_functions_orthonormal():
    # Gauss-Legendre on [-12, 12] resolves h_m for m <= 6 to near roundoff
    x, w = np.polynomial.legendre.leggauss(400)
    x, w = 12.0 * x, 12.0 * w
    H = np.array([hermite_function(m, x) for m in range(7)])
    G = (H * w) @ H.T
    assert np.max(np.abs(G - np.eye(7))) < 1e-12


def test_normalized_kernel_origin():
    # at rho = 0 the weight collapses to sqrt(mult) / (2 ell + d)^{(d+1)/2}
    for ell in (0, 1, 3, 10):
        v = normalized_kernel(ell, np.array([0.0]), d=1)[0]
        assert abs(v - 1.0 / (2 * ell + 1)) < 1e-14


def test_frequency_distance_axioms():
    a = ((0, 1), (1, 0), 0.8)
    b = ((1, 1), (0, 0), 1.1)
    c = ((2, 0), (1, 1), 0.5)
    assert frequency_distance(a, a) == 0.0
    assert frequency_distance(a, b) == frequency_distance(b, a)
    assert frequency_distance(a, b) > 0.0
    assert (
        frequency_distance(a, c)
        <= frequency_distance(a, b) + frequency_distance(b, c) + 1e-15
    )


def test_frequency_distance_rejects_mismatched_tuples():
    with pytest.raises(ValueError):
        frequency_distance(((0,), (0, 1), 1.0), ((0,), (0,), 1.0))
