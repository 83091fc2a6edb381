"""Radial spectral transform on H^d and its inverse, norms, and localizers.

Conventions (fixed across the package)
--------------------------------------
For a radial field f(|Y|, s) the spectral coefficients are indexed by the
Laguerre band ell >= 0 and the central frequency lam != 0:

    theta(ell, lam) = multiplicity^{-1} *
        int exp(-i s lam) K_ell(lam, Y) f(Y, s) dY ds,

with K_ell(lam, Y) = exp(-|lam| |Y|^2) L_ell^{(d-1)}(2 |lam| |Y|^2) (whose
value at 0 is the multiplicity binom(ell+d-1, ell)).  Inversion:

    f(Y, s) = (2^{d-1} / pi^{d+1}) * sum_ell int exp(i s lam)
              K_ell(lam, Y) theta(ell, lam) |lam|^d dlam,

with no extra multiplicity factor (it lives inside K_ell).  The Plancherel
identity in these conventions reads

    sum_ell mult_ell int |theta|^2 |lam|^d dlam
        = (pi^{d+1} / 2^{d-1}) * int |f|^2 dY ds.

The lam = 0 column is excluded from the model space: forward output is
exactly 0 there and no synthesis or norm touches it.  On the product group
R_t x H^d the transform composes a uniform-grid t-DFT (frequencies alpha)
with the radial transform; the Plancherel constant picks up 2 pi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import roots_genlaguerre

from .fields import (
    GaussianClosure,
    Grid,
    MixedNormSpec,
    RadialField,
    SpaceTimeField,
    l2_inner,
    mixed_norm,
    s_analysis,
    s_synthesis,
    sphere_area,
)
from .specfun import eigenvalue, laguerre_table, multiplicity
from .windows import ball_profile, ring_profile

__all__ = [
    "SpectralField",
    "SpectralFieldD",
    "forward",
    "inverse",
    "spectral_inner",
    "plancherel_constant",
    "plancherel_pair",
    "convolve_spectral",
    "sobolev_norm",
    "sobolev_multiplier",
    "LocalizerSpec",
    "localize",
    "bernstein_check",
    "transform_D",
    "spectral_inner_D",
]


def plancherel_constant(d: int) -> float:
    """Ratio (spectral energy) / (physical energy): pi^{d+1} / 2^{d-1}."""
    return np.pi ** (d + 1) / 2.0 ** (d - 1)


@dataclass
class SpectralField:
    """Spectral coefficients theta(ell, lam_k) on a grid's frequency lattice.

    values has shape (L_max+1, n_s); the lam = 0 column is identically zero.
    """

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.ndim != 2 or self.values.shape[1] != self.grid.n_s:
            raise ValueError("values must have shape (L_max+1, n_s)")
        self.values[:, self.grid.izero] = 0.0

    @property
    def L_max(self) -> int:
        return self.values.shape[0] - 1

    @property
    def d(self) -> int:
        return self.grid.d

    def copy(self) -> "SpectralField":
        return SpectralField(self.grid, self.values.copy())

    def mults(self):
        return np.array(
            [multiplicity(l, self.grid.d) for l in range(self.L_max + 1)], dtype=float
        )


def _kernel_contract(grid: Grid, C, L_max, out=None):
    """sum_i C[..., k, i] * K_ell(lam_k, rho_i) for all ell, fused recurrence.

    C carries the lam-major layout (..., n_s, n_rho); returns (..., L+1, n_s).
    """
    d = grid.d
    alpha = d - 1
    u = 2.0 * np.abs(grid.lam)[:, None] * grid.rho[None, :] ** 2  # (n_s, n_rho)
    E = np.exp(-u / 2)
    lead = C.shape[:-2]
    theta = np.empty(lead + (L_max + 1, grid.n_s), dtype=complex)
    L0 = np.ones_like(u)
    L1 = 1.0 + alpha - u
    theta[..., 0, :] = ((C * (E * L0)).sum(-1))
    if L_max >= 1:
        theta[..., 1, :] = ((C * (E * L1)).sum(-1))
    for k in range(1, L_max):
        L0, L1 = L1, ((2 * k + alpha + 1 - u) * L1 - (k + alpha) * L0) / (k + 1)
        theta[..., k + 1, :] = ((C * (E * L1)).sum(-1))
    return theta


def _forward_samples(grid: Grid, values, L_max):
    """Grid-mode forward on raw samples of shape (..., n_rho, n_s)."""
    fhat = s_analysis(grid, values, axis=-1)  # (..., n_rho, n_s)
    C = np.swapaxes(fhat, -1, -2) * grid.w_radial[None, :]  # (..., n_s, n_rho)
    theta = _kernel_contract(grid, C, L_max)
    mults = np.array([multiplicity(l, grid.d) for l in range(L_max + 1)], dtype=float)
    theta /= mults[:, None]
    theta[..., :, grid.izero] = 0.0
    return theta


def forward(f, L_max: int = 64, mode: str = "grid", grid: Grid | None = None,
            n_quad: int | None = None) -> SpectralField:
    """Radial spectral transform.

    mode="grid" (default): f is a RadialField; the Y-integral uses the grid's
    Gauss-Legendre rule and the s-integral the exact uniform-grid DFT.

    mode="closure": f is a GaussianClosure (or list of them) evaluated by
    lam-adapted generalized Gauss-Laguerre quadrature — for each lam the
    substitution u = 2|lam| rho^2 turns the radial integral into a weight
    e^{-pu} u^{d-1} integral with p = a/(2|lam|) + 1/2, which the rule
    integrates exactly for every band ell <= 2 n_quad - 1.  `grid` supplies
    the frequency lattice.
    """
    if mode == "grid":
        if not isinstance(f, RadialField):
            raise TypeError("grid mode expects a RadialField")
        return SpectralField(f.grid, _forward_samples(f.grid, f.values, L_max))
    if mode == "closure":
        closures = f if isinstance(f, (list, tuple)) else [f]
        if grid is None:
            raise ValueError("closure mode needs a target grid")
        n = n_quad or max(48, L_max // 2 + 8)
        return _forward_closure(closures, grid, L_max, n)
    raise ValueError(f"unknown mode {mode!r}")


def _forward_closure(closures, grid: Grid, L_max: int, n_quad: int) -> SpectralField:
    d = grid.d
    uq, wq = roots_genlaguerre(n_quad, d - 1)
    theta = np.zeros((L_max + 1, grid.n_s), dtype=complex)
    al = np.abs(grid.lam)
    live = al > 0
    mults = np.array([multiplicity(l, d) for l in range(L_max + 1)], dtype=float)
    pref = sphere_area(d) / (2.0 * (2.0 * al[live]) ** d)
    for c in closures:
        if not isinstance(c, GaussianClosure):
            raise TypeError("closure mode expects GaussianClosure data")
        p = c.a / (2.0 * al[live]) + 0.5  # (n_live,)
        # radial integral: p^{-d} sum_q w_q L_ell^{(d-1)}(u_q / p)
        x = uq[None, :] / p[:, None]  # (n_live, n_quad)
        tab = laguerre_table(L_max, d - 1, x)  # (L+1, n_live, n_quad)
        rad = (tab * wq[None, None, :]).sum(-1) * p[None, :] ** (-d) * pref[None, :]
        theta[:, live] += (c.phat(grid.lam[live])[None, :] * rad) / mults[:, None]
    return SpectralField(grid, theta)


def inverse(sf: SpectralField) -> RadialField:
    """Synthesis back to the radial grid (exact inverse on the model space)."""
    grid = sf.grid
    d = grid.d
    alpha = d - 1
    u = 2.0 * np.abs(grid.lam)[:, None] * grid.rho[None, :] ** 2
    E = np.exp(-u / 2)
    G = np.zeros((grid.n_s, grid.n_rho), dtype=complex)
    L0 = np.ones_like(u)
    L1 = 1.0 + alpha - u
    th = sf.values
    G += th[0][:, None] * E * L0
    if sf.L_max >= 1:
        G += th[1][:, None] * E * L1
    for k in range(1, sf.L_max):
        L0, L1 = L1, ((2 * k + alpha + 1 - u) * L1 - (k + alpha) * L0) / (k + 1)
        G += th[k + 1][:, None] * E * L1
    G *= (2.0**d / np.pi**d) * np.abs(grid.lam)[:, None] ** d
    G[grid.izero, :] = 0.0
    return RadialField(grid, s_synthesis(grid, G.T, axis=1))


def spectral_inner(sf: SpectralField, sg: SpectralField) -> complex:
    """Spectral pairing sum_ell mult int theta_f conj(theta_g) |lam|^d dlam."""
    if sf.grid is not sg.grid and not sf.grid.compatible(sg.grid):
        raise ValueError("spectral fields live on different grids")
    if sf.L_max != sg.L_max:
        raise ValueError("band sizes differ")
    w = sf.grid.w_lam
    return complex(
        np.sum(sf.mults()[:, None] * w[None, :] * sf.values * np.conj(sg.values))
    )


def plancherel_pair(f: RadialField, g: RadialField, L_max: int = 64) -> dict:
    """Physical and spectral pairings of two fields plus their ratio.

    For band-localized fields the ratio approximates pi^{d+1}/2^{d-1}.
    """
    sf = forward(f, L_max)
    sg = forward(g, L_max)
    phys = l2_inner(f, g)
    spec = spectral_inner(sf, sg)
    return {
        "physical": phys,
        "spectral": spec,
        "ratio": spec.real / phys.real if phys.real != 0 else np.nan,
        "target": plancherel_constant(f.grid.d),
    }


def convolve_spectral(sf: SpectralField, sg: SpectralField) -> SpectralField:
    """Pointwise spectral product — the transform of the group convolution."""
    if not sf.grid.compatible(sg.grid):
        raise ValueError("spectral fields live on different grids")
    if sf.L_max != sg.L_max:
        raise ValueError("band sizes differ")
    return SpectralField(sf.grid, sf.values * sg.values)


def sobolev_norm(sf: SpectralField, sigma: float) -> float:
    """Homogeneous Sobolev norm of order sigma via the spectral multiplier.

    ||f||_sigma^2 = (2^{d-1}/pi^{d+1}) sum_ell mult int
                    (4 |lam| (2 ell + d))^sigma |theta|^2 |lam|^d dlam,
    so sigma = 0 recovers the physical L^2 norm.  For sigma < 0 the call is
    refused when more than 1e-12 of the spectral mass sits in the two
    frequency bins adjacent to lam = 0 (the negative power is then dominated
    by unresolved low frequencies).
    """
    grid = sf.grid
    w = grid.w_lam
    mults = sf.mults()
    dens = mults[:, None] * w[None, :] * np.abs(sf.values) ** 2
    total = dens.sum()
    if sigma < 0:
        edge = dens[:, grid.izero - 1].sum() + dens[:, grid.izero + 1].sum()
        if total > 0 and edge > 1e-12 * total:
            raise ValueError(
                "negative-order norm refused: spectral mass within one bin of lam=0"
            )
    ells = np.arange(sf.L_max + 1)
    eig = eigenvalue(ells[:, None], grid.lam[None, :], grid.d)
    eig[:, grid.izero] = 1.0  # the column carries zero mass; avoid 0^sigma
    val = (dens * eig**sigma).sum() / plancherel_constant(grid.d)
    return float(np.sqrt(val))


@dataclass(frozen=True)
class LocalizerSpec:
    """Smooth spectral localizer at scale Lambda.

    kind="ball": profile 1 on eigenvalue <= Lambda^2/2, 0 above Lambda^2.
    kind="ring": supported on eigenvalue in [Lambda^2/4, Lambda^2].
    """

    kind: str = "ball"
    scale: float = 1.0

    def profile(self, eig):
        x = np.asarray(eig, dtype=float) / self.scale**2
        if self.kind == "ball":
            return ball_profile(x)
        if self.kind == "ring":
            return ring_profile(x)
        raise ValueError(f"unknown localizer kind {self.kind!r}")


def localize(sf: SpectralField, loc: LocalizerSpec) -> SpectralField:
    ells = np.arange(sf.L_max + 1)
    eig = eigenvalue(ells[:, None], sf.grid.lam[None, :], sf.grid.d)
    return SpectralField(sf.grid, sf.values * loc.profile(eig))


def sobolev_multiplier(sf: SpectralField, sigma: float) -> SpectralField:
    """Diagonal derivative multiplier: theta -> eig^{sigma/2} theta.

    Commutes exactly with localize (both are diagonal in (ell, lam));
    sobolev_norm(sf, sigma) equals sobolev_norm(sobolev_multiplier(sf, sigma), 0).
    """
    ells = np.arange(sf.L_max + 1)
    eig = eigenvalue(ells[:, None], sf.grid.lam[None, :], sf.grid.d)
    eig[:, sf.grid.izero] = 1.0  # column carries no mass; avoid 0^negative
    return SpectralField(sf.grid, sf.values * eig ** (sigma / 2.0))


def bernstein_check(f: RadialField, loc: LocalizerSpec, p: float, q: float,
                    scales=(1.0, 2.0, 4.0, 8.0), L_max: int = 64) -> dict:
    """Norm-comparison exponent for localized fields across dilation scales.

    Localizes f with `loc`, then forms the exact dilation family (the same
    sample array read on grids shrunk by 1/scale in Y and 1/scale^2 in s) and
    measures ||f_a||_q / ||f_a||_p.  Both norms are exactly covariant, so the
    fitted log-log exponent must match Q (1/p - 1/q), Q = 2d + 2.
    """
    if q < p:
        raise ValueError("needs p <= q")
    f0 = inverse(localize(forward(f, L_max=L_max), loc))
    g0 = f0.grid
    Q = 2.0 * g0.d + 2.0
    ratios = []
    for a in scales:
        ga = Grid(d=g0.d, n_rho=g0.n_rho, r_max=g0.r_max / a,
                  n_s=g0.n_s, s_half=g0.s_half / a**2)
        fa = RadialField(ga, f0.values)
        num = mixed_norm(fa, MixedNormSpec((q, q), ("Y", "s")))
        den = mixed_norm(fa, MixedNormSpec((p, p), ("Y", "s")))
        ratios.append(num / den)
    scales = np.asarray(scales, dtype=float)
    ratios = np.asarray(ratios)
    fitted = float(np.polyfit(np.log(scales), np.log(ratios), 1)[0])
    return {
        "scales": scales,
        "ratios": ratios,
        "fitted_exponent": fitted,
        "target_exponent": Q * (1.0 / p - 1.0 / q),
    }


# ---------------------------------------------------------------------------
# Product group R_t x H^d
# ---------------------------------------------------------------------------

@dataclass
class SpectralFieldD:
    """Joint spectrum on R_t x H^d: values[q, ell, k] at (alpha_q, ell, lam_k)."""

    grid: Grid
    alpha: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        self.alpha = np.asarray(self.alpha, dtype=float)

    @property
    def L_max(self) -> int:
        return self.values.shape[1] - 1


def transform_D(u: SpaceTimeField, L_max: int = 64) -> SpectralFieldD:
    """Euclidean t-DFT composed with the radial transform.

    Requires uniformly spaced t_nodes (the t axis is treated as periodic with
    weight dt, so discrete Parseval is exact for t-compact packets).
    """
    grid = u.grid
    t = grid.t_nodes
    n_t = t.size
    dt = t[1] - t[0]
    if not np.allclose(np.diff(t), dt, rtol=0, atol=1e-12 * abs(dt)):
        raise ValueError("transform_D needs uniform t_nodes")
    m = np.arange(n_t) - n_t // 2
    alpha = 2.0 * np.pi * m / (n_t * dt)
    fw = np.fft.fftshift(np.fft.fft(u.values, axis=0), axes=0)
    fw *= dt * np.exp(-1j * t[0] * alpha)[:, None, None]
    theta = _forward_samples(grid, fw, L_max)  # batched over alpha
    return SpectralFieldD(grid, alpha, theta)


def spectral_inner_D(a: SpectralFieldD, b: SpectralFieldD) -> complex:
    """sum_alpha dalpha sum_ell mult int theta conj(theta') |lam|^d dlam."""
    grid = a.grid
    dal = a.alpha[1] - a.alpha[0]
    w = grid.w_lam
    mults = np.array(
        [multiplicity(l, grid.d) for l in range(a.L_max + 1)], dtype=float
    )
    return complex(
        dal
        * np.sum(mults[None, :, None] * w[None, None, :] * a.values * np.conj(b.values))
    )
