"""Spectral propagators: unitarity, transport, half-waves, Duhamel stepping,
admissibility gates, and the decay probes."""

from __future__ import annotations

import numpy as np
import pytest

from hharm.fields import Grid, RadialField, l2_norm
from hharm.propagators import (
    CauchyDataS,
    CauchyDataW,
    admissible,
    duhamel,
    ensure_spectral,
    schrodinger_decay_probe,
    schrodinger_evolve,
    transport_reference,
    wave_decay_probe,
    wave_energy_series,
    wave_evolve,
)
from hharm.transform import SpectralField, forward, inverse
from hharm.windows import bump

G = Grid(d=1, n_rho=128, r_max=12.0, n_s=256, s_half=40.0)


def banded_spectrum(grid=G, L_max=6, seed=0, lo=0.5, hi=2.0, positive=False):
    rng = np.random.default_rng(seed)
    lam = grid.lam if positive else np.abs(grid.lam)
    prof = bump(lam, lo, hi)
    theta = prof[None, :] * (
        rng.standard_normal((L_max + 1, grid.n_s))
        + 1j * rng.standard_normal((L_max + 1, grid.n_s))
    )
    return SpectralField(grid, theta)


def test_schrodinger_unitarity():
    sf = banded_spectrum()
    times = np.linspace(0.0, 3.0, 9)
    u = schrodinger_evolve(CauchyDataS(sf), times)
    norms = np.array([l2_norm(u.at_time(i)) for i in range(9)])
    assert np.max(np.abs(norms / norms[0] - 1.0)) < 1e-12


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_transport_shift(ell):
    """A single positive-frequency band moves rigidly: the free flow equals a
    central translation by 4 t (2 ell + d)."""
    theta = np.zeros((ell + 1, G.n_s), dtype=complex)
    theta[ell] = bump(G.lam, 0.5, 2.0)  # positive lam only
    sf = SpectralField(G, theta)
    u0 = inverse(sf)
    for t in (0.2374, 16 * G.h_s / (4 * (2 * ell + 1))):
        ut = schrodinger_evolve(CauchyDataS(sf), [t]).at_time(0)
        ref = transport_reference(u0, ell, t, lam_sign=+1)
        err = l2_norm(RadialField(G, ut.values - ref.values)) / l2_norm(ref)
        assert err < 1e-8


def test_wave_energy_conserved():
    g0 = banded_spectrum(seed=1)
    g1 = banded_spectrum(seed=2)
    data = CauchyDataW(g0, g1)
    times = np.linspace(0.0, 4.0, 17)
    E = wave_energy_series(data, times)
    assert np.max(np.abs(E / E[0] - 1.0)) < 1e-12


def test_wave_zero_velocity_is_cosine_flow():
    g0 = banded_spectrum(seed=3)
    zero = SpectralField(G, np.zeros_like(g0.values))
    u = wave_evolve(CauchyDataW(g0, zero), [0.7])
    # gamma_pm = theta0 / 2: evolution is the cosine multiplier
    from hharm.propagators import _eig_table

    eig = _eig_table(g0)
    ref = inverse(SpectralField(G, np.cos(0.7 * np.sqrt(eig)) * g0.values))
    err = np.max(np.abs(u.values[0] - ref.values))
    assert err < 1e-12 * np.max(np.abs(ref.values))


def test_halfwave_split_refuses_null_ray_mass():
    g0 = banded_spectrum(seed=4)
    g1 = banded_spectrum(seed=5)
    g1.values[:, G.izero] = 1.0  # bypass the constructor's zeroing
    with pytest.raises(ValueError, match="refused"):
        wave_evolve(CauchyDataW(g0, g1), [0.1])


def test_wave_t0_recovers_datum():
    g0 = banded_spectrum(seed=6)
    g1 = banded_spectrum(seed=7)
    u = wave_evolve(CauchyDataW(g0, g1), [0.0])
    ref = inverse(g0)
    assert np.max(np.abs(u.values[0] - ref.values)) < 1e-12


def test_duhamel_manufactured_solution_order():
    """u_hat(t) = a(t) w_hat with the matching source has trapezoid error
    O(dt^2); halving the step should show order >= 1.9."""
    g = Grid(d=1, n_rho=96, r_max=12.0, n_s=256, s_half=40.0)
    w = banded_spectrum(g, L_max=4, seed=8)
    from hharm.propagators import _eig_table

    eig = _eig_table(w)

    def a(t):
        return np.cos(2.0 * t) * np.exp(-t / 3.0)

    def aprime(t):
        return -2.0 * np.sin(2.0 * t) * np.exp(-t / 3.0) - a(t) / 3.0

    def source(t):
        return SpectralField(g, (eig * a(t) + 1j * aprime(t)) * w.values)

    T = 0.4
    errs = []
    for n in (8, 16):
        times = np.linspace(0.0, T, n + 1)
        u = duhamel(CauchyDataS(w), source, times)
        ref = inverse(SpectralField(g, a(T) * w.values))
        errs.append(
            l2_norm(RadialField(g, u.values[-1] - ref.values)) / l2_norm(ref)
        )
    order = np.log2(errs[0] / errs[1])
    assert order >= 1.9


def test_duhamel_rejects_nonuniform_ladder():
    w = banded_spectrum(L_max=2, seed=9)
    with pytest.raises(ValueError, match="uniform"):
        duhamel(CauchyDataS(w), lambda t: w, np.array([0.0, 0.1, 0.3]))


def test_ensure_spectral_passthrough_and_forward():
    sf = banded_spectrum(L_max=2, seed=10)
    assert ensure_spectral(sf) is sf
    f = inverse(sf)
    fw = ensure_spectral(f, L_max=2)
    assert isinstance(fw, SpectralField)
    with pytest.raises(TypeError):
        ensure_spectral(np.zeros(3))


SCHRODINGER_TABLE = [
    (2.0, 2.0, True), (2.0, 4.0, True), (2.0, np.inf, True), (4.0, 4.0, True),
    (3.0, 8.0, True), (np.inf, np.inf, True), (2.0, 3.0, True), (5.0, np.inf, True),
    (4.0, 2.0, False), (1.5, 2.0, False), (6.0, 4.0, False),
]

WAVE_TABLE = [
    (2.0, np.inf, True), (4.0, 4.0, True), (np.inf, np.inf, True),
    (3.0, 6.0, True), (4.0, 8.0, True),
    (2.0, 2.0, False), (2.0, 4.0, False), (1.0, 4.0, False), (8.0, 4.0, False),
]


@pytest.mark.parametrize("p,q,ok", SCHRODINGER_TABLE)
def test_admissible_schrodinger_d1(p, q, ok):
    assert admissible("schrodinger", p, q, 1) is ok


@pytest.mark.parametrize("p,q,ok", WAVE_TABLE)
def test_admissible_wave_d1(p, q, ok):
    assert admissible("wave", p, q, 1) is ok


def test_admissible_rejects_unknown_equation():
    with pytest.raises(ValueError):
        admissible("heat", 2.0, 2.0, 1)


def test_wave_decay_probe_quick():
    out = wave_decay_probe(times=(1.0, 2.0, 4.0, 8.0), n_quad=1600)
    assert np.all(np.diff(out["sup_norms"]) < 0)
    assert out["fitted_exponent"] < -0.35


def test_schrodinger_nondecay_probe():
    out = schrodinger_decay_probe()
    assert abs(out["fitted_exponent"]) < 0.05
    assert out["max_rel_drift"] < 1e-10
