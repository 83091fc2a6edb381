"""Planar twisted convolution: lattice machinery, band kernels, and the
sequence-space averaging bound."""

from __future__ import annotations

import numpy as np
import pytest

from hharm.twisted import (
    PlanarField,
    PlanarGrid,
    algebra_scaling,
    est2_scan,
    hardy_check,
    kernel_field,
    operator_norm,
    orth_check,
    planar_norm,
    symplectic,
    tn_apply,
    tn_norm_proxy,
    twisted_convolve,
    young_check,
)

GRID = PlanarGrid()  # 97 x 97 on [-8, 8]^2


def test_planar_grid_basics():
    assert GRID.n == 97
    assert GRID.h == pytest.approx(1.0 / 6.0)
    assert GRID.axis[(GRID.n - 1) // 2] == 0.0  # origin is a sample
    assert GRID.compatible(PlanarGrid())
    assert not GRID.compatible(PlanarGrid(n=49))
    with pytest.raises(ValueError, match="odd"):
        PlanarGrid(n=96)


def test_planar_field_shape_guard():
    with pytest.raises(ValueError):
        PlanarField(GRID, np.zeros((96, 97)))


def test_symplectic_form():
    Y = np.array([1.0, 2.0])
    W = np.array([3.0, -1.0])
    assert symplectic(Y, W) == pytest.approx(2.0 * 3.0 - (-1.0) * 1.0)
    assert symplectic(Y, W) == -symplectic(W, Y)
    assert symplectic(Y, Y) == 0.0


def test_planar_norm_gaussian():
    y, eta = GRID.mesh()
    f = PlanarField(GRID, np.exp(-(y**2 + eta**2)))
    # int e^{-2 r^2} = pi / 2 over the plane
    assert planar_norm(f, 2.0) ** 2 == pytest.approx(np.pi / 2.0, rel=1e-12)
    assert planar_norm(f, np.inf) == 1.0
    with pytest.raises(ValueError):
        planar_norm(f, 0.0)


def test_kernel_self_reproducing():
    # K_ell *_lam K_ell = (pi / (2 lam))^d K_ell, exactly
    lam = 1.0
    for ell in (0, 1):
        k = kernel_field(GRID, ell, lam)
        out = twisted_convolve(k, k, lam)
        err = np.max(np.abs(out.values - (np.pi / (2.0 * lam)) * k.values))
        assert err < 1e-10


def test_kernel_cross_band_orthogonality():
    lam = 1.0
    k0 = kernel_field(GRID, 0, lam)
    k2 = kernel_field(GRID, 2, lam)
    out = twisted_convolve(k0, k2, lam)
    assert np.max(np.abs(out.values)) < 1e-10


def test_kernel_l2_norm():
    # ||K_ell(lam, .)||_2^2 = (pi / (2 lam))^d mult(ell, d); mult = 1 at d = 1
    for ell, lam in ((0, 1.0), (3, 0.5)):
        k = kernel_field(GRID, ell, lam)
        assert planar_norm(k, 2.0) ** 2 == pytest.approx(
            np.pi / (2.0 * lam), rel=1e-12
        )


def test_operator_norm_value_and_guard():
    assert operator_norm(5, 0.5) == pytest.approx(np.pi)
    assert operator_norm(0, -2.0) == pytest.approx(np.pi / 4.0)
    with pytest.raises(ValueError):
        operator_norm(0, 0.0)


def test_tn_apply_is_projection_up_to_scale():
    g = PlanarGrid(n=49)
    y, eta = g.mesh()
    f = PlanarField(g, np.exp(-0.8 * (y**2 + eta**2)) * (1.0 + 0.3j * y))
    once = tn_apply(f, 0, 1.0)
    twice = tn_apply(once, 0, 1.0)
    err = np.max(np.abs(twice.values - (np.pi / 2.0) * once.values))
    assert err < 1e-8 * np.max(np.abs(once.values))


def test_convolve_grid_mismatch():
    y, eta = GRID.mesh()
    f = PlanarField(GRID, np.exp(-(y**2 + eta**2)))
    g2 = PlanarGrid(n=49)
    y2, eta2 = g2.mesh()
    g = PlanarField(g2, np.exp(-(y2**2 + eta2**2)))
    with pytest.raises(ValueError, match="grids differ"):
        twisted_convolve(f, g, 1.0)


def test_convolve_warns_on_edge_mass():
    y, eta = GRID.mesh()
    wide = PlanarField(GRID, np.exp(-0.01 * (y**2 + eta**2)))
    tight = PlanarField(GRID, np.exp(-(y**2 + eta**2)))
    with pytest.warns(UserWarning, match="outer 10% frame"):
        twisted_convolve(wide, tight, 1.0)


def test_young_inequality():
    out = young_check()
    assert out["worst_ratio"] <= out["bound"] + 1e-12
    assert out["worst_ratio"] > 0.0


def test_algebra_scaling_saturates():
    out = algebra_scaling(ell=0, lams=(0.5, 1.0, 2.0))
    assert np.max(np.abs(out["ratios"] - out["exact_ratios"])) < 1e-10
    assert abs(out["slope"] - out["target_slope"]) < 1e-8


def test_est2_scan_slope():
    out = est2_scan(p=2.0, lams=(0.5, 1.0, 2.0, 4.0))
    assert abs(out["slope"] - out["target_slope"]) < 0.05
    flat = out["flattened"]
    assert np.max(flat) / np.min(flat) < 1.02
    with pytest.raises(ValueError, match="p must lie"):
        est2_scan(p=2.5)


def test_orth_check_quick():
    out = orth_check(ells=(1, 2, 4, 8, 16), n_quad=2048)
    assert out["diag_rel_err"] < 1e-10
    assert -1.35 < out["offdiag_slope"] < -0.65
    # max(ell, m) I(ell, m) stays bounded: no growth with the band index
    assert out["scaled_growth_slope"] < 0.1
    assert out["max_scaled_offdiag"] < 1.0


def test_tn_norm_proxy_bounded_by_exact():
    out = tn_norm_proxy(0, 1.0, n=33, n_inputs=12)
    assert out["measured_norm_proxy"] <= out["exact_norm"] * (1.0 + 1e-9)
    assert out["measured_norm_proxy"] > 0.5 * out["exact_norm"]


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_hardy_bound(p):
    out = hardy_check(p=p, n_seeds=200, n=512)
    assert out["worst_ratio"] <= out["bound"] + 1e-9


def test_hardy_spike_value():
    out = hardy_check(p=2.0, n_seeds=1, n=512)
    assert out["e1_limit"] == pytest.approx(np.pi / np.sqrt(6.0))
    defect = out["e1_limit"] - out["e1_ratio"]
    assert 0.0 < defect <= out["e1_defect_allowance"]


def test_hardy_rejects_p_at_most_one():
    with pytest.raises(ValueError, match="exceed 1"):
        hardy_check(p=1.0, n_seeds=1)
