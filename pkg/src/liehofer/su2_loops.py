"""Desk-scale numerics on SU(2): discretized energy and positive Hofer
length of based loops of unit quaternions, and finite-difference Hessian
spectra at the circle subgroups.

Distances are in lattice units: the once-around geodesic (winding m = 1,
coweight [2] of A1) has length sqrt(2) and energy 2, so the per-step
distance is sqrt(2) times the quaternion angle in turns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure

_SQRT2 = np.sqrt(2.0)
_IDENTITY = np.array([1.0, 0.0, 0.0, 0.0])


def _qmul(a, b):
    """Hamilton product of quaternion arrays (..., 4)."""
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def _qexp(w):
    """Exponential of pure-imaginary quaternions, w shape (..., 3)."""
    theta = np.linalg.norm(w, axis=-1, keepdims=True)
    out = np.empty(w.shape[:-1] + (4,))
    out[..., :1] = np.cos(theta)
    small = theta < 1e-300
    scale = np.where(small, 1.0, np.sin(theta) / np.where(small, 1.0, theta))
    out[..., 1:] = w * scale
    return out


@dataclass
class DiscreteLoop:
    """Based N-point loop of unit quaternions, q_0 = q_N = identity."""

    points: np.ndarray

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=float)
        norms = np.linalg.norm(self.points, axis=1)
        if np.max(np.abs(norms - 1.0)) > 1e-12:
            raise ValueError("loop points must be unit quaternions")
        if not (
            np.allclose(self.points[0], _IDENTITY, atol=1e-12)
            and np.allclose(self.points[-1], _IDENTITY, atol=1e-12)
        ):
            raise ValueError("loop must be based at the identity")

    @property
    def n(self):
        return len(self.points) - 1


def geodesic_loop(m, n, axis=(1.0, 0.0, 0.0)):
    """The circle subgroup of winding m sampled at n+1 equispaced times.

    Corresponds to the A1 coweight [2m] in lattice units.
    """
    if m < 1:
        raise ValueError("winding number m must be >= 1")
    if n < 16:
        raise ValueError("need at least 16 sample points")
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    theta = np.arange(n + 1) / n
    w = 2 * np.pi * m * np.outer(theta, axis)
    points = _qexp(w)
    points[0] = _IDENTITY
    points[-1] = _IDENTITY
    return DiscreteLoop(points)


def constant_loop(n):
    """The constant loop at the identity (energy and length zero)."""
    return DiscreteLoop(np.tile(_IDENTITY, (n + 1, 1)))


def random_loop(n, rng, amplitude=1.0):
    """Random based loop: the constant loop pushed by independent
    tangent vectors of the given amplitude at the interior points."""
    w = rng.uniform(-amplitude, amplitude, size=(n - 1, 3))
    points = np.tile(_IDENTITY, (n + 1, 1))
    points[1:-1] = _qexp(w)
    return DiscreteLoop(points)


def _step_distances(loop):
    """Lattice-unit geodesic distances between consecutive points."""
    dots = np.clip(np.sum(loop.points[:-1] * loop.points[1:], axis=1), -1.0, 1.0)
    return _SQRT2 * np.arccos(dots) / (2 * np.pi)


def discrete_energy(loop):
    """Discrete Riemannian energy N * sum d_i^2 (lattice units)."""
    d = _step_distances(loop)
    return float(loop.n * np.sum(d * d))


def discrete_lplus(loop):
    """Discrete positive Hofer length sum d_i.

    For SU(2)-valued loops the fiberwise maximum of the normalized
    Hamiltonian equals the velocity norm, so L+ is the Riemannian length.
    """
    return float(np.sum(_step_distances(loop)))


def apply_tangent(loop, x):
    """Push the interior points along exponential normal coordinates:
    q_j -> q_j exp(w_j), with x the flattened (n-1, 3) tangent field."""
    w = np.asarray(x, dtype=float).reshape(loop.n - 1, 3)
    points = loop.points.copy()
    points[1:-1] = _qmul(points[1:-1], _qexp(w))
    return DiscreteLoop(points)


@dataclass
class SpectralReport:
    """Eigenvalue classification of a discretized Hessian."""

    functional: str
    m: int
    n: int
    negative_count: int
    zero_count: int
    positive_count: int
    min_eigenvalue: float
    max_eigenvalue: float
    tolerance: float
    step: float


def _functional(name):
    if name == "energy":
        return discrete_energy
    if name == "lplus":
        return discrete_lplus
    raise ValueError(f"unknown functional {name!r} (expected 'energy' or 'lplus')")


def energy_hessian(m, n, h=1e-4):
    """Second-difference matrix of the discrete energy at the winding-m
    geodesic, in exponential normal coordinates at the loop points.

    The energy couples each point only to its neighbors, so blocks with
    point distance > 1 vanish identically and are not evaluated.
    """
    return _fd_hessian(discrete_energy, m, n, h)


def _fd_hessian(func, m, n, h):
    base = geodesic_loop(m, n)
    dim = 3 * (n - 1)
    f0 = func(base)

    def f(x):
        return func(apply_tangent(base, x))

    hess = np.zeros((dim, dim))
    e = np.eye(dim)
    for i in range(dim):
        hess[i, i] = (f(h * e[i]) - 2.0 * f0 + f(-h * e[i])) / (h * h)
        pt_i = i // 3
        for j in range(i + 1, dim):
            if j // 3 - pt_i > 1:
                break  # no coupling beyond adjacent points
            v = (
                f(h * (e[i] + e[j]))
                - f(h * (e[i] - e[j]))
                - f(h * (-e[i] + e[j]))
                + f(-h * (e[i] + e[j]))
            ) / (4.0 * h * h)
            hess[i, j] = hess[j, i] = v
    return 0.5 * (hess + hess.T)


def _classify(values, tol):
    scale = float(np.max(np.abs(values))) if len(values) else 0.0
    band = tol * scale
    neg = int(np.sum(values < -band))
    zero = int(np.sum(np.abs(values) <= band))
    return neg, zero, len(values) - neg - zero


def hessian_spectrum(functional, m, n, h=1e-4, tol=1e-6):
    """Eigenvalue counts of the chosen functional at the winding-m geodesic.

    'energy': dense symmetric eigensolve of the full second-difference
    matrix; the zero band tol * max|eigenvalue| absorbs the two critical-
    stratum directions (the adjoint-orbit 2-sphere).

    'lplus': second differences of L+ along the energy-unstable
    eigendirections only; negativity off that subspace is exactly what the
    conjecture leaves open, so it is not asserted here.
    """
    if n < 32:
        raise ValueError("need n >= 32 for spectral work")
    if not 1e-5 <= h <= 1e-2:
        raise ValueError("step h must lie in [1e-5, 1e-2]")
    _functional(functional)  # validate name early
    ehess = energy_hessian(m, n, h)
    try:
        evals, evecs = np.linalg.eigh(ehess)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(
            f"eigensolver failed for energy Hessian (m={m}, n={n}): {exc}"
        ) from exc

    if functional == "energy":
        neg, zero, pos = _classify(evals, tol)
        return SpectralReport(
            functional, m, n, neg, zero, pos,
            float(evals[0]), float(evals[-1]), tol, h,
        )

    # lplus: probe along the energy-negative eigendirections
    band = tol * float(np.max(np.abs(evals)))
    directions = evecs[:, evals < -band]
    base = geodesic_loop(m, n)
    l0 = discrete_lplus(base)
    second = np.array(
        [
            (
                discrete_lplus(apply_tangent(base, h * v))
                - 2.0 * l0
                + discrete_lplus(apply_tangent(base, -h * v))
            )
            / (h * h)
            for v in directions.T
        ]
    )
    neg, zero, pos = _classify(second, tol)
    return SpectralReport(
        functional, m, n, neg, zero, pos,
        float(second.min()) if len(second) else 0.0,
        float(second.max()) if len(second) else 0.0,
        tol, h,
    )
