"""Grids, field containers, and physical-side field operations.

Geometry conventions
--------------------
A point of H^d is (Y, s) with Y in R^{2d} and s central; the group law is
(Y, s)(Y', s') = (Y + Y', s + s' + 2 sigma(Y, Y')) with the symplectic form
sigma((y, eta), (y', eta')) = <eta, y'> - <eta', y>.  Haar measure is
Lebesgue, dilations act by delta_a(Y, s) = (aY, a^2 s), and the homogeneous
dimension is Q = 2d + 2.

Radial fields depend on (|Y|, s) only and are stored as complex arrays of
shape (n_rho, n_s) on a tensor grid:

* rho: Gauss-Legendre nodes on [0, r_max].  The radial measure weight
  |S^{2d-1}| rho^{2d-1} is folded into ``Grid.w_radial`` so that
  sum(w_radial * h_s * f) approximates the full group integral.
* s: uniform nodes s_j = -S + j h_s on the circle of circumference 2S.  The
  conjugate frequencies are lam_k = pi k / S for k in [-n_s/2, n_s/2); the
  lam = 0 column is excluded from the model space throughout (fields are
  treated modulo their s-mean; see ``transform``).

``s_analysis``/``s_synthesis`` implement the uniform-grid Fourier pair

    theta_k = h_s * sum_j exp(-i s_j lam_k) f_j
    f_j     = (1 / 2S) * sum_k exp(+i s_j lam_k) theta_k

which are exact mutual inverses (discrete Parseval holds with weights h_s
and 1/(2S) = dlam/(2 pi)).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from math import factorial

import numpy as np
from scipy.special import roots_legendre

__all__ = [
    "Grid",
    "RadialField",
    "SpaceTimeField",
    "MixedNormSpec",
    "GaussianClosure",
    "random_packet",
    "sample_packets",
    "s_analysis",
    "s_synthesis",
    "mixed_norm",
    "l2_norm",
    "l2_inner",
    "s_translate",
    "dilate",
    "group_convolve_radial",
    "sphere_area",
]


def sphere_area(d: int) -> float:
    """Surface area of the unit sphere in R^{2d}: 2 pi^d / (d-1)!."""
    return 2.0 * np.pi**d / factorial(d - 1)


@dataclass
class Grid:
    """Tensor grid for radial fields on H^d (optionally with a time axis)."""

    d: int = 1
    n_rho: int = 256
    r_max: float = 12.0
    n_s: int = 512
    s_half: float = 40.0
    t_nodes: np.ndarray | None = None

    rho: np.ndarray = field(init=False, repr=False)
    w_rho: np.ndarray = field(init=False, repr=False)
    w_radial: np.ndarray = field(init=False, repr=False)
    s: np.ndarray = field(init=False, repr=False)
    lam: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.n_s % 2:
            raise ValueError("n_s must be even")
        x, w = roots_legendre(self.n_rho)
        self.rho = 0.5 * self.r_max * (x + 1.0)
        self.w_rho = 0.5 * self.r_max * w
        self.w_radial = self.w_rho * sphere_area(self.d) * self.rho ** (2 * self.d - 1)
        self.h_s = 2.0 * self.s_half / self.n_s
        self.s = -self.s_half + self.h_s * np.arange(self.n_s)
        k = np.arange(self.n_s) - self.n_s // 2
        self.lam = np.pi * k / self.s_half
        self.dlam = np.pi / self.s_half
        self.izero = self.n_s // 2
        if self.t_nodes is not None:
            self.t_nodes = np.asarray(self.t_nodes, dtype=float)

    @property
    def w_lam(self):
        """Spectral measure weights dlam * |lam|^d with the lam=0 bin zeroed."""
        w = self.dlam * np.abs(self.lam) ** self.d
        w[self.izero] = 0.0
        return w

    @property
    def w_t(self):
        """Trapezoid weights on the time axis."""
        t = self.t_nodes
        if t is None:
            raise ValueError("grid has no time axis")
        if t.size == 1:
            return np.ones(1)
        w = np.zeros_like(t)
        dt = np.diff(t)
        w[:-1] += dt / 2
        w[1:] += dt / 2
        return w

    def with_times(self, t_nodes) -> "Grid":
        return replace(self, t_nodes=np.asarray(t_nodes, dtype=float))

    def compatible(self, other: "Grid") -> bool:
        return (
            self.d == other.d
            and self.n_rho == other.n_rho
            and self.n_s == other.n_s
            and self.r_max == other.r_max
            and self.s_half == other.s_half
        )


@dataclass
class RadialField:
    """Radial field sampled on a Grid; values has shape (n_rho, n_s)."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.grid.n_rho, self.grid.n_s):
            raise ValueError(
                f"values shape {self.values.shape} does not match grid "
                f"({self.grid.n_rho}, {self.grid.n_s})"
            )

    def copy(self) -> "RadialField":
        return RadialField(self.grid, self.values.copy())


@dataclass
class SpaceTimeField:
    """Time-indexed radial field; values has shape (n_t, n_rho, n_s)."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        if self.grid.t_nodes is None:
            raise ValueError("grid must carry t_nodes")
        self.values = np.asarray(self.values, dtype=complex)
        expect = (len(self.grid.t_nodes), self.grid.n_rho, self.grid.n_s)
        if self.values.shape != expect:
            raise ValueError(f"values shape {self.values.shape}, expected {expect}")

    def at_time(self, i: int) -> RadialField:
        g = replace(self.grid, t_nodes=None)
        return RadialField(g, self.values[i])


# ---------------------------------------------------------------------------
# Uniform s-axis Fourier pair
# ---------------------------------------------------------------------------

def s_analysis(grid: Grid, values, axis=-1):
    """h_s-weighted DFT onto the ascending frequencies grid.lam."""
    values = np.asarray(values)
    fw = np.fft.fftshift(np.fft.fft(values, axis=axis), axes=axis)
    shp = [1] * values.ndim
    shp[axis] = grid.n_s
    # phase accounts for the grid origin at s = -S
    phase = np.exp(1j * grid.s_half * grid.lam).reshape(shp)
    return grid.h_s * phase * fw


def s_synthesis(grid: Grid, theta, axis=-1):
    """Exact inverse of s_analysis."""
    theta = np.asarray(theta)
    shp = [1] * theta.ndim
    shp[axis] = grid.n_s
    phase = np.exp(-1j * grid.s_half * grid.lam).reshape(shp)
    tw = np.fft.ifftshift(theta * phase.reshape(shp), axes=axis)
    return np.fft.ifft(tw, axis=axis) / grid.h_s


# ---------------------------------------------------------------------------
# Mixed norms
# ---------------------------------------------------------------------------

_AXIS_ORDER_RADIAL = {"Y": 0, "s": 1}
_AXIS_ORDER_SPACETIME = {"t": 0, "Y": 1, "s": 2}


@dataclass(frozen=True)
class MixedNormSpec:
    """Iterated-norm request, axes listed outermost first.

    ``MixedNormSpec((2, np.inf), ("Y", "s"))`` is the L^2_Y of the sup over s.
    Exponents must be >= 1 or inf.
    """

    exponents: tuple
    axes: tuple

    def __post_init__(self):
        if len(self.exponents) != len(self.axes):
            raise ValueError("exponents and axes must align")
        for p in self.exponents:
            if not (p == np.inf or p >= 1):
                raise ValueError(f"exponent {p} out of range")
        if len(set(self.axes)) != len(self.axes):
            raise ValueError("repeated axis")


def _axis_weights(f, name):
    g = f.grid
    if name == "Y":
        return g.w_radial
    if name == "s":
        return np.full(g.n_s, g.h_s)
    if name == "t":
        return g.w_t
    raise ValueError(f"unknown axis {name!r}")


def mixed_norm(f, spec: MixedNormSpec) -> float:
    """Iterated L^p norm of a RadialField or SpaceTimeField.

    Reduction runs innermost-first.  Finite exponents use the grid quadrature
    weights (Gauss-Legendre in Y with the surface factor, uniform in s,
    trapezoid in t); p = inf takes the grid maximum.
    """
    table = _AXIS_ORDER_SPACETIME if isinstance(f, SpaceTimeField) else _AXIS_ORDER_RADIAL
    if set(spec.axes) != set(table):
        raise ValueError(f"norm must cover axes {tuple(table)} exactly, got {spec.axes}")
    work = np.abs(f.values)
    # numeric axis ids shrink as we reduce; process innermost (last listed) first
    live = {name: table[name] for name in table}
    for p, name in zip(reversed(spec.exponents), reversed(spec.axes)):
        ax = live.pop(name)
        if p == np.inf:
            work = work.max(axis=ax)
        else:
            w = _axis_weights(f, name)
            shp = [1] * work.ndim
            shp[ax] = w.size
            work = (work**p * w.reshape(shp)).sum(axis=ax) ** (1.0 / p)
        for other in live:
            if live[other] > ax:
                live[other] -= 1
    return float(work)


def l2_norm(f) -> float:
    if isinstance(f, SpaceTimeField):
        return mixed_norm(f, MixedNormSpec((2, 2, 2), ("t", "Y", "s")))
    return mixed_norm(f, MixedNormSpec((2, 2), ("Y", "s")))


def l2_inner(f: RadialField, g: RadialField) -> complex:
    """Group-measure inner product (f, g) = int f conj(g)."""
    gr = f.grid
    return complex(np.sum(gr.w_radial[:, None] * f.values * np.conj(g.values)) * gr.h_s)


# ---------------------------------------------------------------------------
# Translations / dilations
# ---------------------------------------------------------------------------

def s_translate(f: RadialField, s0: float) -> RadialField:
    """Central translation: output(Y, s) = input(Y, s - s0).

    Shifts by integer multiples of h_s are exact circular rolls; other shifts
    go through the trigonometric interpolant (spectrum times e^{-i s0 lam}),
    which is exact on the trigonometric model space and L^2-isometric.
    """
    g = f.grid
    steps = s0 / g.h_s
    if abs(steps - round(steps)) < 1e-12:
        return RadialField(g, np.roll(f.values, round(steps), axis=1))
    theta = s_analysis(g, f.values, axis=1)
    theta *= np.exp(-1j * s0 * g.lam)[None, :]
    return RadialField(g, s_synthesis(g, theta, axis=1))


def _barycentric_resample(grid: Grid, values, targets):
    # Polynomial interpolation is stable on the Gauss-Legendre node family.
    # For Gauss nodes the barycentric weights are (-1)^j sqrt((1-x_j^2) w_j)
    # up to a common factor that cancels in the quotient, so no O(n^2)
    # difference products are needed.  The contraction is an einsum rather
    # than a gemm so the reduction order is fixed and the resample is
    # bitwise reproducible run to run.
    x = 2.0 * grid.rho / grid.r_max - 1.0
    w_unit = 2.0 / grid.r_max * grid.w_rho
    bw = np.sqrt((1.0 - x**2) * w_unit)
    bw[1::2] *= -1.0
    diff = targets[:, None] - grid.rho[None, :]
    exact = diff == 0.0
    with np.errstate(divide="ignore"):
        coef = bw[None, :] / diff
    hit = exact.any(axis=1)
    coef[hit] = 0.0
    coef[exact] = 1.0
    num = np.einsum("tj,js->ts", coef, values)
    return num / coef.sum(axis=1)[:, None]


def dilate(f: RadialField, a: float) -> RadialField:
    """Dilated field f(delta_a (Y,s)) = f(aY, a^2 s) on the same grid.

    Arguments that land outside the computational box are treated as 0 (the
    box is not periodized under dilation); if more than 1% of the squared
    mass of f lives in the truncated region a warning is issued.

    Resampling: trigonometric interpolation in s, barycentric polynomial
    interpolation on the Gauss-Legendre nodes in rho.
    """
    if a <= 0:
        raise ValueError("dilation factor must be positive")
    g = f.grid
    if a > 1:
        lost = (np.abs(f.values) ** 2 * g.w_radial[:, None] * g.h_s)[
            :, np.abs(g.s) > g.s_half / a**2
        ].sum()
        lost += (np.abs(f.values) ** 2 * g.w_radial[:, None] * g.h_s)[
            g.rho > g.r_max / a, :
        ].sum()
        total = np.sum(np.abs(f.values) ** 2 * g.w_radial[:, None] * g.h_s)
        if total > 0 and lost / total > 0.01:
            warnings.warn(
                f"dilate: {100 * lost / total:.1f}% of squared mass truncated",
                stacklevel=2,
            )
    # s axis: evaluate the trig interpolant at a^2 s_j (0 outside the box)
    s_targets = a**2 * g.s
    inside = np.abs(s_targets) < g.s_half
    theta = s_analysis(g, f.values, axis=1)
    kernel = np.exp(1j * np.outer(s_targets[inside], g.lam)) / (2 * g.s_half)
    vals_s = np.zeros_like(f.values)
    # einsum, not a gemm: BLAS threading is free to reorder the reduction,
    # which breaks bitwise reproducibility of verification reports
    vals_s[:, inside] = np.einsum("rk,tk->rt", theta, kernel)
    # rho axis: barycentric resample at a * rho_i (0 beyond r_max)
    r_targets = a * g.rho
    r_inside = r_targets <= g.r_max
    out = np.zeros_like(f.values)
    out[r_inside, :] = _barycentric_resample(g, vals_s, r_targets[r_inside])
    return RadialField(g, out)


# ---------------------------------------------------------------------------
# Group convolution of radial fields
# ---------------------------------------------------------------------------

def group_convolve_radial(f: RadialField, g: RadialField, L_max: int = 64) -> RadialField:
    """Group convolution (f * g)(v) = int f(v w^{-1}) g(w) dw of radial fields.

    Radial fields form a commutative convolution algebra; the product is
    computed spectrally (the transform maps convolution to the pointwise
    product of spectra in this normalization) and synthesized back.  The
    result is the band projection of the true convolution onto ell <= L_max
    and the grid frequency window.
    """
    from . import transform  # local import to avoid a cycle

    if not f.grid.compatible(g.grid):
        raise ValueError("fields must share a grid")
    tf = transform.forward(f, L_max)
    tg = transform.forward(g, L_max)
    return transform.inverse(transform.convolve_spectral(tf, tg))


# ---------------------------------------------------------------------------
# Analytic closures for test data
# ---------------------------------------------------------------------------

@dataclass
class GaussianClosure:
    """Separable packet amp * e^{-a rho^2} * e^{-b (s-s0)^2} e^{i omega s}.

    Carries its own s-Fourier transform and, through the Laplace transform of
    the Laguerre family, the exact spectral coefficients: with
    phat(lam) = amp sqrt(pi/b) exp(-(lam-omega)^2/(4b)) exp(-i (lam-omega) s0),

        coefficients(ell, lam) = phat(lam) pi^d (a-|lam|)^ell / (a+|lam|)^{ell+d}.
    """

    d: int = 1
    a: float = 1.0
    b: float = 0.5
    omega: float = 5.0
    s0: float = 0.0
    amp: complex = 1.0

    def values(self, rho, s):
        rho = np.asarray(rho, dtype=float)
        s = np.asarray(s, dtype=float)
        return (
            self.amp
            * np.exp(-self.a * rho**2)
            * np.exp(-self.b * (s - self.s0) ** 2)
            * np.exp(1j * self.omega * s)
        )

    def sample(self, grid: Grid) -> RadialField:
        return RadialField(
            grid, self.values(grid.rho[:, None], grid.s[None, :])
        )

    def phat(self, lam):
        lam = np.asarray(lam, dtype=float)
        return (
            self.amp
            * np.sqrt(np.pi / self.b)
            * np.exp(-((lam - self.omega) ** 2) / (4 * self.b))
            * np.exp(-1j * (lam - self.omega) * self.s0)
        )

    def coefficients(self, ells, lam):
        """Exact spectral coefficients on an (ells x lam) product grid."""
        ells = np.asarray(ells)[:, None]
        lam = np.asarray(lam, dtype=float)[None, :]
        al = np.abs(lam)
        rad = np.pi**self.d * (self.a - al) ** ells / (self.a + al) ** (ells + self.d)
        return self.phat(lam[0])[None, :] * rad


def random_packet(rng, d=1, n_terms=2, s0_range=0.0, omega_range=(4.0, 6.5)):
    """Seeded sum of modulated Gaussian closures.

    The default carrier range [4, 6.5] keeps essentially no spectral mass on
    the lam = 0 line; pass a low omega_range for data meant to overlap
    small frequencies (for example the sphere's rays lam <= 1/d).
    """
    parts = []
    for _ in range(n_terms):
        parts.append(
            GaussianClosure(
                d=d,
                a=rng.uniform(0.7, 1.5),
                b=rng.uniform(0.4, 0.8),
                omega=rng.uniform(*omega_range) * rng.choice([-1.0, 1.0]),
                s0=rng.uniform(-s0_range, s0_range) if s0_range else 0.0,
                amp=rng.uniform(0.5, 1.5) * np.exp(2j * np.pi * rng.uniform()),
            )
        )
    return parts


def sample_packets(parts, grid: Grid) -> RadialField:
    out = np.zeros((grid.n_rho, grid.n_s), dtype=complex)
    for p in parts:
        out += p.sample(grid).values
    return RadialField(grid, out)
