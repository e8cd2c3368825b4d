"""Cyclic Jacobi eigensolvers for real symmetric and complex Hermitian matrices.

Both solvers sweep the strict upper triangle row by row, annihilating each
pivot with a plane rotation (a unitary plane rotation carrying the pivot's
phase in the Hermitian case).  Convergence is declared when the off-diagonal
Frobenius mass drops below ``OFF_TOLERANCE`` times the Frobenius norm of the
input; the sweep cap defaults to ``DEFAULT_MAX_SWEEPS`` and can be overridden
through the ``JSPEC_MAX_SWEEPS`` environment variable.  Non-convergence
raises `NumericError` rather than returning a partial answer.

Eigenvalues are returned sorted non-increasing with matching eigenvector
columns; ties keep the solver's natural order (stable sort).
"""

from __future__ import annotations

import math
import os

import numpy as np

from .errors import NumericError

OFF_TOLERANCE = 1e-13
DEFAULT_MAX_SWEEPS = 40

__all__ = [
    "OFF_TOLERANCE",
    "DEFAULT_MAX_SWEEPS",
    "resolve_max_sweeps",
    "jacobi_eigh_symmetric",
    "jacobi_eigh_hermitian",
]


def resolve_max_sweeps(max_sweeps: int | None = None) -> int:
    if max_sweeps is not None:
        return int(max_sweeps)
    env = os.environ.get("JSPEC_MAX_SWEEPS")
    if env is not None:
        return int(env)
    return DEFAULT_MAX_SWEEPS


def _sorted_desc(values: np.ndarray, vectors: np.ndarray):
    order = np.argsort(-values, kind="stable")
    return values[order], vectors[:, order]


def _off_mass(a: np.ndarray) -> float:
    # summed directly over off-diagonal entries; differencing the full and
    # diagonal Frobenius masses cancels catastrophically near convergence
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return math.sqrt(float(np.vdot(off, off).real))


def _rotation_tangent(tau: float) -> float:
    # smaller-magnitude root of t^2 + 2*tau*t - 1 = 0
    return math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))


def jacobi_eigh_symmetric(a, max_sweeps: int | None = None):
    """Diagonalize a real symmetric matrix; returns (values, vector columns)."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a[0, 0].reshape(1), v
    fnorm = math.sqrt(float(np.vdot(a, a).real))
    if fnorm == 0.0:
        return np.zeros(n), v
    thresh = OFF_TOLERANCE * fnorm
    skip = thresh / (2.0 * n)
    sweeps = resolve_max_sweeps(max_sweeps)
    for sweep in range(sweeps + 1):
        if _off_mass(a) <= thresh:
            return _sorted_desc(np.diagonal(a).copy(), v)
        if sweep == sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = _rotation_tangent(tau)
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # A <- R^T A R, columns then rows
                col_p = a[:, p].copy()
                a[:, p] = c * col_p - s * a[:, q]
                a[:, q] = s * col_p + c * a[:, q]
                row_p = a[p, :].copy()
                a[p, :] = c * row_p - s * a[q, :]
                a[q, :] = s * row_p + c * a[q, :]
                a[p, q] = a[q, p] = 0.0
                col_p = v[:, p].copy()
                v[:, p] = c * col_p - s * v[:, q]
                v[:, q] = s * col_p + c * v[:, q]
    raise NumericError(
        f"Jacobi sweep cap ({sweeps}) reached with off-diagonal mass "
        f"{_off_mass(a):.3e} > {thresh:.3e}"
    )


def jacobi_eigh_hermitian(a, max_sweeps: int | None = None):
    """Diagonalize a complex Hermitian matrix; returns (real values, unitary columns)."""
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    if n == 1:
        return a[0, 0].real.reshape(1), v
    fnorm = math.sqrt(float(np.vdot(a, a).real))
    if fnorm == 0.0:
        return np.zeros(n), v
    thresh = OFF_TOLERANCE * fnorm
    skip = thresh / (2.0 * n)
    sweeps = resolve_max_sweeps(max_sweeps)
    for sweep in range(sweeps + 1):
        if _off_mass(a) <= thresh:
            return _sorted_desc(np.diagonal(a).real.copy(), v)
        if sweep == sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                r = abs(a[p, q])
                if r <= skip:
                    continue
                phase = a[p, q] / r  # e^{i alpha}
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = _rotation_tangent(tau)
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # A <- J^H A J with J = [[c, s*phase], [-s*conj(phase), c]]
                col_p = a[:, p].copy()
                a[:, p] = c * col_p - (s * phase.conjugate()) * a[:, q]
                a[:, q] = (s * phase) * col_p + c * a[:, q]
                row_p = a[p, :].copy()
                a[p, :] = c * row_p - (s * phase) * a[q, :]
                a[q, :] = (s * phase.conjugate()) * row_p + c * a[q, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                col_p = v[:, p].copy()
                v[:, p] = c * col_p - (s * phase.conjugate()) * v[:, q]
                v[:, q] = (s * phase) * col_p + c * v[:, q]
    raise NumericError(
        f"Jacobi sweep cap ({sweeps}) reached with off-diagonal mass "
        f"{_off_mass(a):.3e} > {thresh:.3e}"
    )
