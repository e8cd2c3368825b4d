"""Automorphism representations, frame transport, one-parameter paths in the
identity component, orbit sampling, and restricted orbit paths for products.

Representations per kind: an orthogonal matrix U acting as X -> U X U^T on
real symmetric matrices (identity component: det U = +1), a unitary U acting
as X -> U X U^* on Hermitian matrices (the automorphism group is connected,
so everything is in the identity component), and an orthogonal matrix R
acting on the vector part of a spin factor with the leading coordinate fixed
(identity component: det R = +1).  Product automorphisms act factor-wise;
factor-permuting maps are deliberately excluded.

Paths inside the identity component are realized by factoring the
representation into plane rotations (plus diagonal phases in the unitary
case) and scaling every angle by the path parameter, which avoids matrix
logarithms entirely: any continuous path suffices for the connectivity
witnesses built on top.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import algebra as alg
from .algebra import (
    Algebra,
    ComplexHermitian,
    Element,
    ProductAlgebra,
    RealSymmetric,
    SpinFactor,
)
from .errors import (
    AlgebraMismatchError,
    NotInIdentityComponentError,
    NumericError,
    OrbitMismatchError,
    UnsupportedAlgebraError,
)
from .spectral import JordanFrame, eigen_map, spectral_decompose

ORTHO_TOL = 1e-10
EIG_MATCH_TOL = 1e-8

__all__ = [
    "ORTHO_TOL",
    "EIG_MATCH_TOL",
    "Automorphism",
    "GPath",
    "PathPolyline",
    "automorphism_from_matrix",
    "product_automorphism",
    "identity_automorphism",
    "apply_automorphism",
    "random_g_automorphism",
    "frame_transport",
    "g_path",
    "orbit_path",
    "restricted_orbit_path",
    "orbit_sample",
]


# ---------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True, eq=False)
class Automorphism:
    """Algebra automorphism with its per-kind representation.

    `matrix` holds the orthogonal/unitary representation for simple kinds;
    `factors` holds per-factor automorphisms for products.  `in_g` records
    membership in the identity component of the automorphism group.
    """

    algebra: Algebra
    matrix: np.ndarray | None
    factors: tuple["Automorphism", ...] | None
    in_g: bool


def _rep_size(a: Algebra) -> int:
    if isinstance(a, (RealSymmetric, ComplexHermitian)):
        return a.n
    if isinstance(a, SpinFactor):
        return a.d - 1
    raise UnsupportedAlgebraError("product automorphisms are built factor-wise")


def automorphism_from_matrix(a: Algebra, mat) -> Automorphism:
    """Validate and wrap a representation matrix.

    Real symmetric with odd n: U and -U induce the same map, so the sign is
    canonicalized to det +1, making the identity-component flag exact.
    """
    if isinstance(a, ProductAlgebra):
        raise UnsupportedAlgebraError("build product automorphisms from factors")
    size = _rep_size(a)
    want_complex = isinstance(a, ComplexHermitian)
    mat = np.array(mat, dtype=complex if want_complex else float)
    if mat.shape != (size, size):
        raise ValueError(f"representation must be {size}x{size}, got {mat.shape}")
    gram_err = float(np.abs(mat.conj().T @ mat - np.eye(size)).max())
    if gram_err > ORTHO_TOL:
        raise ValueError(f"representation is not orthogonal/unitary (error {gram_err:.2e})")
    if want_complex:
        return Automorphism(a, mat, None, True)
    det = float(np.linalg.det(mat))
    if isinstance(a, RealSymmetric) and a.n % 2 == 1 and det < 0.0:
        mat = -mat
        det = -det
    return Automorphism(a, mat, None, det > 0.0)


def product_automorphism(parts) -> Automorphism:
    parts = tuple(parts)
    a = ProductAlgebra(tuple(p.algebra for p in parts))
    return Automorphism(a, None, parts, all(p.in_g for p in parts))


def identity_automorphism(a: Algebra) -> Automorphism:
    if isinstance(a, ProductAlgebra):
        return product_automorphism([identity_automorphism(f) for f in a.factors])
    size = _rep_size(a)
    eye = np.eye(size, dtype=complex if isinstance(a, ComplexHermitian) else float)
    return Automorphism(a, eye, None, True)


def apply_automorphism(phi: Automorphism, x: Element) -> Element:
    if phi.algebra != x.algebra:
        raise AlgebraMismatchError(f"automorphism on {phi.algebra} applied to {x.algebra}")
    a = x.algebra
    if isinstance(a, RealSymmetric):
        m = phi.matrix @ alg.sym_matrix(x) @ phi.matrix.T
        return alg.element_from_sym(a, (m + m.T) / 2.0)
    if isinstance(a, ComplexHermitian):
        m = phi.matrix @ alg.herm_matrix(x) @ phi.matrix.conj().T
        return alg.element_from_herm(a, (m + m.conj().T) / 2.0)
    if isinstance(a, SpinFactor):
        x0, xbar = alg.spin_parts(x)
        return alg.element_from_spin(a, x0, phi.matrix @ xbar)
    parts = [apply_automorphism(p, xi) for p, xi in zip(phi.factors, alg.split_product(x))]
    return alg.join_product(a, parts)


def _haar_special_orthogonal(n: int, rng) -> np.ndarray:
    if n == 1:
        return np.eye(1)
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    q = q * np.sign(np.diagonal(r))
    if np.linalg.det(q) < 0.0:
        q[:, 0] = -q[:, 0]
    return q


def _haar_unitary(n: int, rng) -> np.ndarray:
    m = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(m)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_g_automorphism(a: Algebra, rng) -> Automorphism:
    """Random element of the identity component: orthonormalized Gaussian
    matrices, determinant-corrected where needed."""
    if isinstance(a, RealSymmetric):
        return Automorphism(a, _haar_special_orthogonal(a.n, rng), None, True)
    if isinstance(a, ComplexHermitian):
        return Automorphism(a, _haar_unitary(a.n, rng), None, True)
    if isinstance(a, SpinFactor):
        return Automorphism(a, _haar_special_orthogonal(a.d - 1, rng), None, True)
    return product_automorphism([random_g_automorphism(f, rng) for f in a.factors])


# ---------------------------------------------------------------------------
# frame transport


def _frame_vector(e: Element) -> np.ndarray:
    """Unit (eigen)vector u with the idempotent equal to u u^*."""
    a = e.algebra
    m = alg.sym_matrix(e) if isinstance(a, RealSymmetric) else alg.herm_matrix(e)
    j = int(np.argmax(np.diagonal(m).real))
    pivot = m[j, j].real
    if pivot <= 0.0:
        raise NumericError("rank-one idempotent has no positive diagonal entry")
    return m[:, j] / math.sqrt(pivot)


def _orthonormalize_columns(u: np.ndarray) -> np.ndarray:
    # QR cleanup of a nearly orthonormal matrix, keeping column directions
    q, r = np.linalg.qr(u)
    d = np.diagonal(r)
    if np.iscomplexobj(u):
        return q * (d / np.abs(d))
    return q * np.sign(d)


def _rotation_between(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Rotation in SO(k), k >= 2, mapping unit vector u to unit vector v."""
    k = u.size
    c = float(u @ v)
    if c >= 1.0 - 1e-14:
        return np.eye(k)
    if c <= -1.0 + 1e-14:
        # half-turn in a plane containing u
        p = np.zeros(k)
        p[int(np.argmin(np.abs(u)))] = 1.0
        p = p - (u @ p) * u
        p /= np.linalg.norm(p)
        return np.eye(k) - 2.0 * np.outer(u, u) - 2.0 * np.outer(p, p)
    w = v - c * u
    w /= np.linalg.norm(w)
    s = math.sqrt(max(0.0, 1.0 - c * c))
    rot = np.eye(k)
    rot += (c - 1.0) * (np.outer(u, u) + np.outer(w, w))
    rot += s * (np.outer(w, u) - np.outer(u, w))
    return rot


def frame_transport(e_frame: JordanFrame, f_frame: JordanFrame) -> Automorphism:
    """Automorphism in the identity component taking each e_i to f_i.

    Real symmetric: the eigenvector-column matrix, with one column sign
    flipped if needed to force det +1 (sign flips do not change rank-one
    idempotents).  Hermitian: any unitary works since the group is
    connected.  Spin: a rotation of the vector part mapping axis to axis.
    """
    a = e_frame.algebra
    if isinstance(a, ProductAlgebra):
        raise UnsupportedAlgebraError("frame transport is defined on simple algebras")
    if a != f_frame.algebra:
        raise AlgebraMismatchError("frames live in different algebras")
    if isinstance(a, (RealSymmetric, ComplexHermitian)):
        u_e = _orthonormalize_columns(
            np.column_stack([_frame_vector(e) for e in e_frame.idempotents])
        )
        u_f = _orthonormalize_columns(
            np.column_stack([_frame_vector(f) for f in f_frame.idempotents])
        )
        if isinstance(a, RealSymmetric):
            if float(np.linalg.det(u_e)) < 0.0:
                u_e[:, 0] = -u_e[:, 0]
            if float(np.linalg.det(u_f)) < 0.0:
                u_f[:, 0] = -u_f[:, 0]
            w = u_f @ u_e.T
        else:
            w = u_f @ u_e.conj().T
        return Automorphism(a, w, None, True)
    u = 2.0 * alg.spin_parts(e_frame.idempotents[0])[1]
    v = 2.0 * alg.spin_parts(f_frame.idempotents[0])[1]
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    return Automorphism(a, _rotation_between(u, v), None, True)


# ---------------------------------------------------------------------------
# paths in the identity component


def _factor_special_orthogonal(u: np.ndarray):
    """Plane-rotation factorization u = G_1 ... G_k with every angle real.

    Triangularizes with adjacent-row rotations; the leftover diagonal of
    +/-1 entries has det +1, so its -1 entries pair up into half-turn plane
    rotations appended at the end.
    """
    m = u.copy()
    n = m.shape[0]
    rots: list[tuple[int, int, float]] = []
    for j in range(n - 1):
        for i in range(n - 1, j, -1):
            b = m[i, j]
            if b == 0.0:
                continue
            phi = math.atan2(-b, m[i - 1, j])
            c, s = math.cos(phi), math.sin(phi)
            row_p = m[i - 1, :].copy()
            m[i - 1, :] = c * row_p - s * m[i, :]
            m[i, :] = s * row_p + c * m[i, :]
            m[i, j] = 0.0
            rots.append((i - 1, i, -phi))
    negatives = [k for k in range(n) if m[k, k] < 0.0]
    if len(negatives) % 2 == 1:
        raise NumericError("orthogonal factorization left an odd sign count (det != +1)")
    for k in range(0, len(negatives), 2):
        rots.append((negatives[k], negatives[k + 1], math.pi))
    return rots


def _factor_unitary(u: np.ndarray):
    """Complex plane-rotation factorization plus diagonal phases."""
    m = u.copy()
    n = m.shape[0]
    rots: list[tuple[int, int, float, float]] = []
    for j in range(n - 1):
        for i in range(n - 1, j, -1):
            b = m[i, j]
            if b == 0.0:
                continue
            a_piv = m[i - 1, j]
            if a_piv == 0.0:
                theta, psi = math.pi / 2.0, 0.0
            else:
                ratio = b / a_piv
                theta = math.atan(abs(ratio))
                psi = math.atan2(ratio.imag, ratio.real)
            c, s = math.cos(theta), math.sin(theta)
            e_pos = complex(math.cos(psi), math.sin(psi))
            row_p = m[i - 1, :].copy()
            m[i - 1, :] = c * row_p + (s * e_pos.conjugate()) * m[i, :]
            m[i, :] = (-s * e_pos) * row_p + c * m[i, :]
            m[i, j] = 0.0
            rots.append((i - 1, i, -theta, psi))
    phases = np.angle(np.diagonal(m))
    return rots, phases


@dataclass(frozen=True, eq=False)
class GPath:
    """Continuous path t -> automorphism with sample(0) the identity and
    sample(1) the factored target; every sample stays in the identity
    component by construction (angles and phases scale with t)."""

    algebra: Algebra
    rotations: tuple | None  # (p, q, angle) or (p, q, angle, psi)
    phases: np.ndarray | None
    factor_paths: tuple["GPath", ...] | None

    def sample(self, t: float) -> Automorphism:
        a = self.algebra
        if self.factor_paths is not None:
            return product_automorphism([fp.sample(t) for fp in self.factor_paths])
        size = _rep_size(a)
        if isinstance(a, ComplexHermitian):
            m = np.diag(np.exp(1j * t * self.phases))
            for p, q, theta, psi in reversed(self.rotations):
                c, s = math.cos(t * theta), math.sin(t * theta)
                e_pos = complex(math.cos(psi), math.sin(psi))
                row_p = m[p, :].copy()
                m[p, :] = c * row_p + (s * e_pos.conjugate()) * m[q, :]
                m[q, :] = (-s * e_pos) * row_p + c * m[q, :]
            return Automorphism(a, m, None, True)
        m = np.eye(size)
        for p, q, angle in reversed(self.rotations):
            c, s = math.cos(t * angle), math.sin(t * angle)
            row_p = m[p, :].copy()
            m[p, :] = c * row_p - s * m[q, :]
            m[q, :] = s * row_p + c * m[q, :]
        return Automorphism(a, m, None, True)


def g_path(phi: Automorphism) -> GPath:
    """Factor an identity-component automorphism into a scalable path."""
    if not phi.in_g:
        raise NotInIdentityComponentError(
            "automorphism is outside the identity component; no path exists"
        )
    a = phi.algebra
    if isinstance(a, ProductAlgebra):
        return GPath(a, None, None, tuple(g_path(p) for p in phi.factors))
    if isinstance(a, ComplexHermitian):
        rots, phases = _factor_unitary(phi.matrix)
        return GPath(a, tuple(rots), phases, None)
    return GPath(a, tuple(_factor_special_orthogonal(phi.matrix)), None, None)


# ---------------------------------------------------------------------------
# polylines and orbit paths


@dataclass(frozen=True, eq=False)
class PathPolyline:
    """Discretized continuous path: element samples, the realized maximum
    consecutive step in the trace-form norm, and the membership tolerance
    the path was audited against."""

    samples: tuple[Element, ...]
    max_step: float
    tolerance: float

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))


def polyline_from_samples(samples, tolerance: float) -> PathPolyline:
    samples = list(samples)
    if len(samples) < 2:
        raise ValueError("a polyline needs at least two samples")
    max_step = max(
        alg.distance(samples[k], samples[k + 1]) for k in range(len(samples) - 1)
    )
    return PathPolyline(tuple(samples), max_step, tolerance)


def _matched_eigenvalues(x: Element, y: Element) -> bool:
    return bool(
        np.max(np.abs(eigen_map(x) - eigen_map(y))) <= EIG_MATCH_TOL
    )


def orbit_path(x: Element, y: Element, steps: int) -> PathPolyline:
    """Path inside the eigenvalue orbit of x from x to y (simple algebras).

    Built by transporting the frame of x onto the frame of y (aligned by the
    shared non-increasing eigenvalue order; within an exactly degenerate
    block any alignment reaches the same endpoint) and sweeping the
    transport along its identity-component path.
    """
    if isinstance(x.algebra, ProductAlgebra):
        raise UnsupportedAlgebraError("use restricted_orbit_path on product algebras")
    if x.algebra != y.algebra:
        raise AlgebraMismatchError("endpoints live in different algebras")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if not _matched_eigenvalues(x, y):
        raise OrbitMismatchError(
            "endpoints have different eigenvalues; they lie in different orbits"
        )
    f_x, _ = spectral_decompose(x)
    f_y, _ = spectral_decompose(y)
    path = g_path(frame_transport(f_x, f_y))
    samples = [apply_automorphism(path.sample(t), x) for t in np.linspace(0.0, 1.0, steps)]
    return polyline_from_samples(samples, EIG_MATCH_TOL)


def restricted_orbit_path(x: Element, y: Element, steps: int) -> PathPolyline:
    """Factor-wise orbit path in a product algebra; stays inside the
    restricted orbit (every factor keeps its own eigenvalues)."""
    a = x.algebra
    if not isinstance(a, ProductAlgebra):
        raise UnsupportedAlgebraError("restricted_orbit_path needs a product algebra")
    if a != y.algebra:
        raise AlgebraMismatchError("endpoints live in different algebras")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    xs, ys = alg.split_product(x), alg.split_product(y)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not _matched_eigenvalues(xi, yi):
            raise OrbitMismatchError(
                f"factor {i} has mismatched eigenvalues; endpoints are in "
                "different restricted orbits"
            )
    legs = [orbit_path(xi, yi, steps) for xi, yi in zip(xs, ys)]
    samples = [
        alg.join_product(a, [leg.samples[k] for leg in legs]) for k in range(steps)
    ]
    return polyline_from_samples(samples, EIG_MATCH_TOL)


def orbit_sample(x: Element, count: int, seed: int) -> list[Element]:
    """`count` random images of x under identity-component automorphisms,
    deterministic given the seed (per-index derivation)."""
    if isinstance(x.algebra, ProductAlgebra):
        raise UnsupportedAlgebraError("orbit_sample is defined on simple algebras")
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = []
    for i in range(count):
        rng = np.random.default_rng((int(seed), int(i)))
        out.append(apply_automorphism(random_g_automorphism(x.algebra, rng), x))
    return out
