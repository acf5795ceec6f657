"""Discrete geometry of the unit-area flat torus.

The surface model throughout the library is the square torus [0,1)^2 with
the flat metric, sampled on a uniform n-by-n grid.  Everything here is
spectral: integrals are periodic trapezoid sums (exact for band-limited
integrands), the Laplacian multiplies Fourier modes by -|k|^2, and the
Dirichlet energy is a Parseval sum.  The FFT convention is numpy's:
forward transform unnormalized, inverse scaled by 1/n^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


class GridError(ValueError):
    """Invalid grid construction parameters."""


@dataclass(frozen=True)
class TorusGrid:
    """Uniform periodic grid on the unit-area square torus.

    ``n`` nodes per axis, side length ``L = 1`` so that the total area
    ``n^2 * dx^2`` is exactly 1.  Node coordinates are ``j / n`` for
    ``j = 0..n-1``; the grid owns its spectral wavenumbers.
    """

    n: int
    L: float = 1.0

    def __post_init__(self):
        if self.n % 2 != 0:
            raise GridError("n must be even")
        if self.n < 8:
            raise GridError("n must be at least 8")
        if self.L != 1.0:
            raise GridError("side length is fixed at 1 (unit-area torus)")

    @property
    def dx(self) -> float:
        return self.L / self.n

    @cached_property
    def axis_points(self) -> np.ndarray:
        return np.arange(self.n) * self.dx

    @cached_property
    def X(self) -> np.ndarray:
        """x coordinate of each node; axis 1 is x (x-fastest in C order)."""
        return np.meshgrid(self.axis_points, self.axis_points, indexing="xy")[0]

    @cached_property
    def Y(self) -> np.ndarray:
        return np.meshgrid(self.axis_points, self.axis_points, indexing="xy")[1]

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        """Per-axis angular wavenumbers 2*pi*fftfreq; index k pairs with n-k."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.dx)

    @cached_property
    def k2(self) -> np.ndarray:
        """|k|^2 on the full 2-D mode grid."""
        KX, KY = np.meshgrid(self.wavenumbers, self.wavenumbers, indexing="xy")
        return KX**2 + KY**2


def build_grid(n: int) -> TorusGrid:
    """Build the unit-area torus grid with n nodes per axis (even, >= 8)."""
    return TorusGrid(int(n))


@dataclass
class ScalarField:
    """Real scalar function sampled on a TorusGrid.

    The discrete stand-in for u in H^1(M).  Field algebra (add, subtract,
    scale, negate, pointwise exp) returns new fields on the same grid;
    values are always finite float64.
    """

    grid: TorusGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.shape != (self.grid.n, self.grid.n):
            raise ValueError(f"values shape {v.shape} does not match grid n={self.grid.n}")
        if not np.all(np.isfinite(v)):
            raise ValueError("field values must be finite")
        self.values = v

    def _like(self, values) -> "ScalarField":
        return ScalarField(self.grid, values)

    def _coerce(self, other):
        if isinstance(other, ScalarField):
            if other.grid is not self.grid and other.grid != self.grid:
                raise ValueError("fields live on different grids")
            return other.values
        return float(other)

    def __add__(self, other):
        return self._like(self.values + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._like(self.values - self._coerce(other))

    def __rsub__(self, other):
        return self._like(self._coerce(other) - self.values)

    def __mul__(self, other):
        return self._like(self.values * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self._like(-self.values)

    def exp(self) -> "ScalarField":
        return self._like(np.exp(self.values))

    def copy(self) -> "ScalarField":
        return self._like(self.values.copy())


def constant_field(grid: TorusGrid, c: float) -> ScalarField:
    return ScalarField(grid, np.full((grid.n, grid.n), float(c)))


def field_from_function(grid: TorusGrid, fn) -> ScalarField:
    """Sample fn(x, y) (vectorized over coordinate meshes) onto the grid."""
    return ScalarField(grid, np.asarray(fn(grid.X, grid.Y), dtype=np.float64))


def integrate(f: ScalarField) -> float:
    """Integral over the torus: periodic trapezoid rule, sum * dx^2.

    Exact (to roundoff) for trigonometric polynomials below the Nyquist band.
    """
    return float(f.values.sum() * f.grid.dx**2)


def mean(f: ScalarField) -> float:
    """Average of f; equals integrate(f) because the area is 1."""
    return integrate(f) / (f.grid.L**2)


def laplacian(f: ScalarField) -> ScalarField:
    """Spectral Laplacian: each Fourier mode multiplied by -|k|^2.

    The zero mode is annihilated, so the output has zero mean exactly.
    """
    fh = np.fft.fft2(f.values)
    out = np.fft.ifft2(-f.grid.k2 * fh).real
    return ScalarField(f.grid, out)


def grad_norm_sq(f: ScalarField) -> float:
    """Dirichlet integral int |grad f|^2 via Parseval.

    Equals -integrate(f * laplacian(f)) to roundoff; always >= 0 and zero
    iff f is constant.
    """
    fh = np.fft.fft2(f.values)
    n = f.grid.n
    return float(np.sum(f.grid.k2 * (fh.real**2 + fh.imag**2)) / n**4)


def solve_helmholtz(f: ScalarField, shift: float = 1.0) -> ScalarField:
    """Spectral solve of (-Lap + shift) g = f; exact on the grid.

    The zero mode is divided by ``shift`` (for shift=1 the mode is kept
    as is), so means transform consistently.
    """
    fh = np.fft.fft2(f.values)
    gh = fh / (f.grid.k2 + shift)
    return ScalarField(f.grid, np.fft.ifft2(gh).real)


def torus_distance(p, q, L: float = 1.0) -> float:
    """Geodesic distance of the flat torus: per-axis wrapped differences."""
    d = 0.0
    for a, b in zip(p, q):
        t = abs(a - b) % L
        t = min(t, L - t)
        d += t * t
    return float(np.sqrt(d))


def distance_field(grid: TorusGrid, point) -> np.ndarray:
    """Array of torus distances from every node to ``point``.

    Equivalent to minimizing the Euclidean distance over the 9 periodic
    translates; on the square torus the axes decouple.
    """
    px, py = point
    dxv = np.abs(grid.X - px) % grid.L
    dyv = np.abs(grid.Y - py) % grid.L
    dxv = np.minimum(dxv, grid.L - dxv)
    dyv = np.minimum(dyv, grid.L - dyv)
    return np.sqrt(dxv**2 + dyv**2)
