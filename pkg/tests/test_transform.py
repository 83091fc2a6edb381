"""Radial transform: closed-form Gaussian oracles, Plancherel, inversion,
multipliers, and the spacetime product transform."""

from __future__ import annotations

import numpy as np
import pytest

from hharm.fields import (
    GaussianClosure,
    Grid,
    RadialField,
    dilate,
    l2_norm,
    random_packet,
    sample_packets,
)
from hharm.propagators import CauchyDataS, schrodinger_evolve
from hharm.transform import (
    LocalizerSpec,
    SpectralField,
    bernstein_check,
    convolve_spectral,
    forward,
    inverse,
    localize,
    plancherel_constant,
    plancherel_pair,
    sobolev_multiplier,
    sobolev_norm,
    spectral_inner,
    spectral_inner_D,
    transform_D,
)
from hharm.windows import bump

G = Grid(d=1, n_rho=128, r_max=12.0, n_s=256, s_half=40.0)
# lam extends to pi / h_s; carriers near 4-5 need the wider band
G512 = Grid(d=1, n_rho=128, r_max=12.0, n_s=512, s_half=40.0)


def test_plancherel_constant_values():
    assert abs(plancherel_constant(1) - np.pi**2) < 1e-15
    assert abs(plancherel_constant(2) - np.pi**3 / 2) < 1e-14


@pytest.mark.parametrize("d", [1, 2])
def test_closure_mode_matches_closed_form(d):
    """Forward transform of exp(-a rho^2) phi(s) against the Laplace-transform
    closed form, adaptive quadrature only (no grid)."""
    grid = Grid(d=d, n_rho=64, r_max=12.0, n_s=256, s_half=40.0)
    parts = [
        GaussianClosure(d=d, a=1.0, b=0.5, omega=4.0, amp=1.0),
        GaussianClosure(d=d, a=1.3, b=0.6, omega=-5.0, amp=0.4 + 0.2j),
    ]
    sf = forward(parts, L_max=16, mode="closure", grid=grid)
    ref = sum(p.coefficients(np.arange(17), grid.lam) for p in parts)
    ref[:, grid.izero] = 0.0
    scale = np.max(np.abs(ref))
    assert np.max(np.abs(sf.values - ref)) / scale < 1e-8


def test_grid_mode_matches_closed_form():
    c = GaussianClosure(d=1, a=0.9, b=0.5, omega=4.5)
    sf = forward(c.sample(G512), L_max=8)
    ref = c.coefficients(np.arange(9), G512.lam)
    ref[:, G512.izero] = 0.0
    assert np.max(np.abs(sf.values - ref)) / np.max(np.abs(ref)) < 1e-9


def test_plancherel_ratio_gaussian():
    f = GaussianClosure(d=1, a=1.0, b=0.5, omega=5.0).sample(G)
    pair = plancherel_pair(f, f, L_max=64)
    assert abs(pair["ratio"] - np.pi**2) / np.pi**2 < 1e-6
    assert pair["target"] == plancherel_constant(1)


def test_roundtrip_band_projected():
    g = Grid(d=1, n_rho=256, r_max=12.0, n_s=512, s_half=40.0)
    rng = np.random.default_rng(2)
    f = sample_packets(random_packet(rng, n_terms=2), g)
    proj = inverse(forward(f, L_max=48))
    back = inverse(forward(proj, L_max=48))
    err = l2_norm(RadialField(g, back.values - proj.values)) / l2_norm(proj)
    assert err < 1e-6


def test_spectral_field_zeroes_lam0_column():
    theta = np.ones((3, G.n_s), dtype=complex)
    sf = SpectralField(G, theta)
    assert np.all(sf.values[:, G.izero] == 0.0)


def test_spectral_inner_guards():
    sf = SpectralField(G, np.ones((3, G.n_s)))
    other = Grid(d=1, n_rho=64, r_max=10.0, n_s=256, s_half=40.0)
    with pytest.raises(ValueError):
        spectral_inner(sf, SpectralField(other, np.ones((3, other.n_s))))
    with pytest.raises(ValueError):
        spectral_inner(sf, SpectralField(G, np.ones((4, G.n_s))))


def sobolev_spot_field():
    # s_half = 16 pi puts lam = 1 exactly on the frequency lattice
    g = Grid(d=1, n_rho=64, r_max=12.0, n_s=256, s_half=16 * np.pi)
    theta = np.zeros((1, g.n_s), dtype=complex)
    theta[0, g.izero + 16] = 1.0
    return g, SpectralField(g, theta)


def test_sobolev_multiplier_spot_value():
    """On the (ell=0, lam=1) mode the derivative multiplier at sigma=2 is the
    eigenvalue 4 |lam| (2 ell + d) = 4, and the norm scales by the same factor."""
    g, sf = sobolev_spot_field()
    out = sobolev_multiplier(sf, 2.0)
    assert abs(out.values[0, g.izero + 16] - 4.0) < 1e-3
    assert abs(out.values[0, g.izero + 16] - 4.0) < 1e-12  # exact on the lattice
    n0 = sobolev_norm(sf, 0.0)
    n2 = sobolev_norm(sf, 2.0)
    assert abs(n2 / n0 - 4.0) < 1e-12


def test_sobolev_negative_order_refused_near_lam0():
    theta = np.zeros((1, G.n_s), dtype=complex)
    theta[0, G.izero + 1] = 1.0
    sf = SpectralField(G, theta)
    with pytest.raises(ValueError, match="refused"):
        sobolev_norm(sf, -1.0)


def test_localizer_ball_ring_disjoint():
    rng = np.random.default_rng(3)
    theta = rng.standard_normal((5, G.n_s)) + 1j * rng.standard_normal((5, G.n_s))
    sf = SpectralField(G, theta)
    ring = localize(sf, LocalizerSpec("ring", 2.0))
    both = localize(ring, LocalizerSpec("ball", 1.0))
    assert np.max(np.abs(both.values)) == 0.0


def test_multiplier_commutes_with_localizer():
    rng = np.random.default_rng(4)
    theta = rng.standard_normal((5, G.n_s)) + 1j * rng.standard_normal((5, G.n_s))
    sf = SpectralField(G, theta)
    loc = LocalizerSpec("ring", 3.0)
    a = sobolev_multiplier(localize(sf, loc), 1.5)
    b = localize(sobolev_multiplier(sf, 1.5), loc)
    assert np.max(np.abs(a.values - b.values)) < 1e-12


def test_localizer_unknown_kind():
    with pytest.raises(ValueError):
        LocalizerSpec("disc", 1.0).profile(np.ones(3))


def test_bernstein_exponent_exact_covariance():
    rng = np.random.default_rng(6)
    f = sample_packets(random_packet(rng, n_terms=2), G)
    out = bernstein_check(f, LocalizerSpec("ball", 3.0), p=2.0, q=np.inf,
                          scales=(1.0, 2.0, 4.0), L_max=24)
    assert out["target_exponent"] == 2.0  # Q/2 at d=1
    assert abs(out["fitted_exponent"] - out["target_exponent"]) < 1e-10


def test_bernstein_rejects_descending_exponents():
    f = GaussianClosure().sample(G)
    with pytest.raises(ValueError):
        bernstein_check(f, LocalizerSpec(), p=4.0, q=2.0)


def test_convolve_spectral_pointwise():
    rng = np.random.default_rng(8)
    a = rng.standard_normal((3, G.n_s)) * (1 + 0j)
    b = rng.standard_normal((3, G.n_s)) * (1 + 0j)
    sa, sb = SpectralField(G, a.copy()), SpectralField(G, b.copy())
    prod = convolve_spectral(sa, sb)
    assert np.array_equal(prod.values, sa.values * sb.values)
    with pytest.raises(ValueError):
        convolve_spectral(sa, SpectralField(G, np.ones((2, G.n_s))))


def test_transform_D_parseval_ratio():
    """Spacetime Parseval: spectral pairing over (alpha, ell, lam) against the
    dt-weighted group norm of the evolved field; ratio 2 pi^3 at d=1."""
    g = Grid(d=1, n_rho=128, r_max=12.0, n_s=256, s_half=40.0)
    theta = np.zeros((13, g.n_s), dtype=complex)
    rng = np.random.default_rng(9)
    prof = bump(np.abs(g.lam), 0.5, 4.0)
    for ell in range(13):
        theta[ell] = prof * (rng.standard_normal(g.n_s) * 0.2 + 1.0)
    times = np.linspace(0.0, 0.7, 8)
    u = schrodinger_evolve(CauchyDataS(SpectralField(g, theta)), times)
    A = transform_D(u, L_max=24)
    spec = spectral_inner_D(A, A).real
    dt = times[1] - times[0]
    phys = sum(dt * l2_norm(u.at_time(i)) ** 2 for i in range(len(times)))
    ratio = spec / phys
    assert abs(ratio - 2 * np.pi**3) / (2 * np.pi**3) < 1e-12


def test_transform_D_rejects_nonuniform_times():
    g = Grid(d=1, n_rho=32, r_max=10.0, n_s=64, s_half=20.0,
             t_nodes=np.array([0.0, 0.1, 0.3]))
    u_vals = np.zeros((3, 32, 64), dtype=complex)
    from hharm.fields import SpaceTimeField

    with pytest.raises(ValueError, match="uniform"):
        transform_D(SpaceTimeField(g, u_vals), L_max=4)


def test_dilation_covariance_against_closure():
    c = GaussianClosure(d=1, a=1.0, b=0.5, omega=3.0)
    a = 1.2
    num = forward(dilate(c.sample(G512), a), L_max=8)
    cd = GaussianClosure(d=1, a=c.a * a**2, b=c.b * a**4, omega=c.omega * a**2)
    ref = cd.coefficients(np.arange(9), G512.lam)
    ref[:, G512.izero] = 0.0
    assert np.max(np.abs(num.values - ref)) / np.max(np.abs(ref)) < 1e-8
