"""Spectral sets: inverse images of permutation-invariant sets under the
eigenvalue map.

Provides membership, constructive connectivity witnesses (three-leg paths:
orbit leg, frame-composition leg, orbit leg), component enumeration for
finite sets, additive splitting, the exact range of a linear functional over
an eigenvalue orbit, and verification of direct-sum decomposition
certificates for cones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import algebra as alg
from .algebra import Element, ProductAlgebra
from .errors import (
    AlgebraMismatchError,
    InfeasiblePathError,
    MembershipError,
    UnsupportedAlgebraError,
)
from .nnls import nnls_projected_gradient
from .orbits import (
    PathPolyline,
    orbit_path,
    orbit_sample,
    polyline_from_samples,
    restricted_orbit_path,
)
from .permsets import PermSet, down_member
from .spectral import canonical_frame, compose_theta, eigen_map, sort_desc, spectral_decompose

PATH_TOL = 1e-8
SPLIT_TOL = 1e-9
NNLS_RESIDUAL = 1e-6
RANK_TOL = 1e-9

__all__ = [
    "PATH_TOL",
    "NNLS_RESIDUAL",
    "SpectralSet",
    "FanInterval",
    "SpectralComponent",
    "DecompositionCertificate",
    "CertificateVerdict",
    "ss_member",
    "factor_blocks",
    "connect",
    "components_finite",
    "sum_split",
    "propose_sum_split",
    "fan_interval",
    "fan_sample",
    "certificate_check",
]


@dataclass(frozen=True, eq=False)
class SpectralSet:
    """lambda-inverse image of a permutation-invariant set over one algebra."""

    algebra: alg.Algebra
    q: PermSet

    def __post_init__(self):
        if self.algebra.rank != self.q.n:
            raise ValueError(
                f"rank {self.algebra.rank} algebra paired with a set in "
                f"R^{self.q.n}"
            )


@dataclass(frozen=True, eq=False)
class FanInterval:
    """Exact range [delta, Delta] of <c, .> over an eigenvalue orbit, with
    elements attaining each endpoint."""

    delta: float
    Delta: float
    minimizer: Element
    maximizer: Element


@dataclass(frozen=True, eq=False)
class SpectralComponent:
    representative: np.ndarray  # sorted eigenvalues (per factor for products)
    element: Element
    description: str


@dataclass(frozen=True, eq=False)
class DecompositionCertificate:
    """Claimed direct-sum decomposition of a cone into finitely generated parts."""

    parts: tuple[tuple[Element, ...], ...]

    def __post_init__(self):
        parts = tuple(tuple(p) for p in self.parts)
        if not parts or any(not p for p in parts):
            raise ValueError("certificate needs nonempty parts")
        a = parts[0][0].algebra
        for part in parts:
            for g in part:
                if g.algebra != a:
                    raise AlgebraMismatchError("generators live in different algebras")
                if alg.norm(g) == 0.0:
                    raise ValueError("certificate generators must be nonzero")
        object.__setattr__(self, "parts", parts)

    @property
    def algebra(self) -> alg.Algebra:
        return self.parts[0][0].algebra


@dataclass(frozen=True, eq=False)
class CertificateVerdict:
    accepted: bool
    failed_clause: str | None
    detail: str


# ---------------------------------------------------------------------------
# membership


def ss_member(sset: SpectralSet, x: Element, slack: float = 0.0) -> bool:
    """x belongs to the spectral set iff its eigenvalue vector belongs to Q.

    Positive `slack` relaxes margin-backed predicates by that amount (used
    for path audits); black-box predicates are evaluated exactly.
    """
    if x.algebra != sset.algebra:
        raise AlgebraMismatchError(f"element of {x.algebra} tested against {sset.algebra}")
    return sset.q.member(eigen_map(x), slack=slack)


def factor_blocks(x: Element) -> np.ndarray:
    """Per-factor-sorted eigenvalue blocks in canonical factor order."""
    if not isinstance(x.algebra, ProductAlgebra):
        raise UnsupportedAlgebraError("factor blocks are defined for product algebras")
    return np.concatenate([eigen_map(p) for p in alg.split_product(x)])


def _block_sorted(q: np.ndarray, ranks: list[int]) -> np.ndarray:
    out = []
    pos = 0
    for r in ranks:
        out.append(sort_desc(q[pos : pos + r]))
        pos += r
    return np.concatenate(out)


# ---------------------------------------------------------------------------
# connectivity witnesses


def _interpolate_vertices(vertices: list[np.ndarray], steps: int) -> list[np.ndarray]:
    segs = len(vertices) - 1
    if segs == 0:
        return [vertices[0].copy() for _ in range(steps)]
    pts = []
    for u in np.linspace(0.0, float(segs), steps):
        idx = min(int(u), segs - 1)
        frac = u - idx
        pts.append((1.0 - frac) * vertices[idx] + frac * vertices[idx + 1])
    return pts


def _audit_membership(sset: SpectralSet, samples, tolerance: float):
    lams = np.array([eigen_map(s) for s in samples])
    margins = sset.q.margin_many(lams)
    if margins is not None:
        bad = np.flatnonzero(margins < -tolerance)
        if bad.size:
            k = int(bad[0])
            raise InfeasiblePathError(
                f"path sample {k} leaves the set (margin {margins[k]:.3e} "
                f"< -{tolerance:g})",
                clause="path-membership-audit",
            )
        return
    for k, lam in enumerate(lams):
        if not sset.q.member(lam):
            raise InfeasiblePathError(
                f"path sample {k} leaves the set", clause="path-membership-audit"
            )


def connect(
    sset: SpectralSet,
    x: Element,
    y: Element,
    q_path=None,
    steps: int = 32,
    tolerance: float = PATH_TOL,
) -> PathPolyline:
    """Constructive path witness from x to y inside the spectral set.

    Three legs: an orbit path from x to the canonical-frame composition of
    its eigenvalues, a sweep of the canonical frame along a path of
    coefficient vectors, and an orbit path down to y.  On a simple algebra
    the coefficient path defaults to the segment between the sorted
    eigenvalue vectors (valid when Q is convex, or degenerately when the
    endpoints share eigenvalues); otherwise the caller supplies `q_path`
    vertices, which must stay in the sorted slice of Q.  On a product
    algebra the orbit legs are restricted-orbit paths, `q_path` runs through
    Q itself, its endpoints must equal the per-factor-sorted eigenvalue
    blocks of x and y, and vertices are normalized per factor block before
    use.  Every emitted sample is audited for membership at `tolerance`.
    """
    if x.algebra != sset.algebra or y.algebra != sset.algebra:
        raise AlgebraMismatchError("endpoints must live in the set's algebra")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    for name, point in (("x", x), ("y", y)):
        if not ss_member(sset, point):
            raise InfeasiblePathError(
                f"endpoint {name} is not a member of the spectral set",
                clause="endpoint-membership",
            )
    scale = max(1.0, alg.norm(x))
    if alg.distance(x, y) <= 1e-12 * scale:
        return polyline_from_samples([x, y], tolerance)

    a = sset.algebra
    simple = a.is_simple()
    frame = canonical_frame(a)
    ranks = None if simple else [f.rank for f in a.factors]
    start_q = eigen_map(x) if simple else factor_blocks(x)
    end_q = eigen_map(y) if simple else factor_blocks(y)

    if q_path is None:
        if float(np.abs(start_q - end_q).max()) <= tolerance:
            vertices = [start_q, end_q]
        elif simple and sset.q.convex:
            vertices = [start_q, end_q]
        elif not simple and sset.q.finite_points is not None:
            raise InfeasiblePathError(
                "no coefficient path exists inside a finite set between "
                "distinct factor-block assignments",
                clause="no-path-in-finite-set",
            )
        elif simple:
            raise ValueError("q_path is required when Q is not flagged convex")
        else:
            raise ValueError("q_path is required in product mode")
    else:
        vertices = [np.asarray(v, dtype=float) for v in q_path]
        if len(vertices) < 2:
            raise ValueError("q_path needs at least two vertices")
        for k, v in enumerate(vertices):
            if v.shape != (a.rank,):
                raise ValueError(f"q_path vertex {k} must have length {a.rank}")
        if simple:
            for k, v in enumerate(vertices):
                if not down_member(sset.q, v):
                    raise InfeasiblePathError(
                        f"q_path vertex {k} fails the sorted-membership test",
                        clause="qpath-down-member",
                    )
        else:
            vertices = [_block_sorted(v, ranks) for v in vertices]
            for k, v in enumerate(vertices):
                if not sset.q.member(v):
                    raise InfeasiblePathError(
                        f"q_path vertex {k} is not in Q", clause="qpath-membership"
                    )
        if float(np.abs(vertices[0] - start_q).max()) > tolerance or (
            float(np.abs(vertices[-1] - end_q).max()) > tolerance
        ):
            raise InfeasiblePathError(
                "q_path endpoints do not match the endpoint eigenvalues",
                clause="qpath-endpoints",
            )

    ref_start = compose_theta(start_q, frame)
    ref_end = compose_theta(end_q, frame)
    leg = orbit_path if simple else restricted_orbit_path
    leg1 = leg(x, ref_start, steps)
    leg2 = [compose_theta(q, frame) for q in _interpolate_vertices(vertices, steps)]
    leg3 = leg(ref_end, y, steps)
    samples = list(leg1.samples) + leg2[1:] + list(leg3.samples)[1:]
    _audit_membership(sset, samples, tolerance)
    return polyline_from_samples(samples, tolerance)


# ---------------------------------------------------------------------------
# components of finite spectral sets


def _fmt_vec(v: np.ndarray) -> str:
    return "[" + ", ".join(format(float(t), ".12g") for t in v) + "]"


def components_finite(sset: SpectralSet) -> list[SpectralComponent]:
    """Arcwise connected components of the spectral set of a finite Q.

    Simple algebra: one component per distinct sorted representative, the
    full eigenvalue orbit of that vector.  Product algebra: one component
    per distinct assignment of eigenvalues to factors (block-sorted), each a
    restricted orbit; these are pairwise disjoint compact sets, hence
    genuinely separate components.
    """
    if sset.q.finite_points is None:
        raise ValueError("component enumeration needs a finite set")
    a = sset.algebra
    frame = canonical_frame(a)
    out = []
    if a.is_simple():
        for rep in sset.q.down_points():
            out.append(
                SpectralComponent(
                    representative=rep,
                    element=compose_theta(rep, frame),
                    description=f"eigenvalue orbit of {_fmt_vec(rep)}",
                )
            )
        return out
    ranks = [f.rank for f in a.factors]
    seen = sorted({tuple(_block_sorted(p, ranks)) for p in sset.q.finite_points})
    for key in seen:
        rep = np.array(key)
        blocks = []
        pos = 0
        for r in ranks:
            blocks.append(_fmt_vec(rep[pos : pos + r]))
            pos += r
        out.append(
            SpectralComponent(
                representative=rep,
                element=compose_theta(rep, frame),
                description="restricted orbit with factor blocks " + " | ".join(blocks),
            )
        )
    return out


# ---------------------------------------------------------------------------
# additive splitting


def sum_split(
    z: Element, q1_set: PermSet, q2_set: PermSet, q1, q2
) -> tuple[Element, Element]:
    """Split z into members of two spectral sets sharing z's frame.

    The caller supplies the scalar decomposition q1 + q2 = lambda(z)
    (coordinate-wise against the sorted eigenvalues); the returned summands
    are the frame compositions of q1 and q2.
    """
    rank = z.algebra.rank
    q1 = np.asarray(q1, dtype=float)
    q2 = np.asarray(q2, dtype=float)
    if q1.shape != (rank,) or q2.shape != (rank,):
        raise ValueError(f"split vectors must have length {rank}")
    lam = eigen_map(z)
    gap = float(np.abs(q1 + q2 - lam).max())
    if gap > SPLIT_TOL:
        raise MembershipError(
            f"q1 + q2 differs from the eigenvalues of z by {gap:.3e} > {SPLIT_TOL:g}"
        )
    if not q1_set.member(q1):
        raise MembershipError("q1 is not a member of the first set")
    if not q2_set.member(q2):
        raise MembershipError("q2 is not a member of the second set")
    frame, _ = spectral_decompose(z)
    return compose_theta(q1, frame), compose_theta(q2, frame)


def propose_sum_split(lam, q1_set: PermSet, q2_set: PermSet, seed: int = 0):
    """Search a scalar decomposition lam = q1 + q2 with q1 in Q1, q2 in Q2.

    Tries the halving and one-sided splits, then seeded coordinate-wise
    convex combinations.  Intended for convex-cone built-ins; raises
    MembershipError when nothing is found.
    """
    lam = np.asarray(lam, dtype=float)
    zero = np.zeros_like(lam)
    candidates = [(lam / 2.0, lam / 2.0), (lam, zero), (zero, lam)]
    rng = np.random.default_rng(seed)
    for _ in range(32):
        u = rng.uniform(0.0, 1.0, size=lam.size)
        candidates.append((u * lam, (1.0 - u) * lam))
    for q1, q2 in candidates:
        if q1_set.member(q1) and q2_set.member(q2):
            return q1, q2
    raise MembershipError("no admissible split found for the given sets")


# ---------------------------------------------------------------------------
# range of a linear functional over an orbit


def fan_interval(c: Element, a_el: Element) -> FanInterval:
    """Exact range endpoints of <c, .> over the eigenvalue orbit of a.

    The maximum pairs both sorted eigenvalue vectors in the same order on
    c's frame; the minimum pairs them oppositely.
    """
    if c.algebra != a_el.algebra:
        raise AlgebraMismatchError("both elements must share one algebra")
    if not c.algebra.is_simple():
        raise UnsupportedAlgebraError(
            "the closed-form endpoints are established for simple algebras"
        )
    lam_c = eigen_map(c)
    lam_a = eigen_map(a_el)
    big = float(lam_c @ lam_a)
    small = float(lam_c[::-1] @ lam_a)
    frame_c, _ = spectral_decompose(c)
    maximizer = compose_theta(lam_a, frame_c)
    minimizer = compose_theta(lam_a[::-1], frame_c)
    return FanInterval(delta=small, Delta=big, minimizer=minimizer, maximizer=maximizer)


def fan_sample(c: Element, a_el: Element, count: int, seed: int) -> np.ndarray:
    """Values of <c, phi(a)> over random identity-component automorphisms."""
    if c.algebra != a_el.algebra:
        raise AlgebraMismatchError("both elements must share one algebra")
    return np.array(
        [alg.inner_product(c, s) for s in orbit_sample(a_el, count, seed)]
    )


# ---------------------------------------------------------------------------
# decomposition certificates


def _numerical_rank(rows: np.ndarray) -> int:
    if rows.size == 0:
        return 0
    sv = np.linalg.svd(rows, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv >= RANK_TOL * sv[0]))


def certificate_check(
    k_members: Callable[[Element], bool],
    cert: DecompositionCertificate,
    samples: int,
    seed: int,
) -> CertificateVerdict:
    """Audit a claimed direct-sum decomposition of a cone.

    Accepts iff (i) the part spans are jointly independent (stacked rank
    equals the sum of per-part ranks), (ii) every generator passes the
    membership oracle, and (iii) each of `samples` random oracle-accepted
    elements is reconstructed by nonnegative coefficients over the pooled
    generators within the NNLS residual threshold.
    """
    if samples < 1:
        raise ValueError("need at least one audit sample")
    a = cert.algebra
    part_rows = [
        np.array([alg.isometric_coords(g) for g in part]) for part in cert.parts
    ]
    rank_sum = sum(_numerical_rank(rows) for rows in part_rows)
    stacked = np.vstack(part_rows)
    total_rank = _numerical_rank(stacked)
    if total_rank != rank_sum:
        return CertificateVerdict(
            accepted=False,
            failed_clause="span-independence",
            detail=(
                f"stacked generator rank {total_rank} != sum of per-part "
                f"ranks {rank_sum}"
            ),
        )
    for pi, part in enumerate(cert.parts):
        for gi, g in enumerate(part):
            if not k_members(g):
                return CertificateVerdict(
                    accepted=False,
                    failed_clause="generator-membership",
                    detail=f"generator {gi} of part {pi} fails the membership oracle",
                )
    gmat = stacked.T
    accepted = 0
    attempts = 0
    max_attempts = 50 * samples
    while accepted < samples and attempts < max_attempts:
        rng = np.random.default_rng((int(seed), int(attempts)))
        x = Element(a, rng.standard_normal(a.dim))
        attempts += 1
        if not k_members(x):
            continue
        accepted += 1
        _, residual = nnls_projected_gradient(
            gmat, alg.isometric_coords(x), target_residual=0.9 * NNLS_RESIDUAL
        )
        if residual > NNLS_RESIDUAL:
            return CertificateVerdict(
                accepted=False,
                failed_clause="nonnegative-reconstruction",
                detail=(
                    f"sample {accepted - 1} has NNLS residual {residual:.3e} "
                    f"> {NNLS_RESIDUAL:g}"
                ),
            )
    if accepted < samples:
        raise ValueError(
            f"membership oracle accepted only {accepted}/{samples} samples "
            f"within {max_attempts} attempts; cannot audit reconstruction"
        )
    return CertificateVerdict(
        accepted=True,
        failed_clause=None,
        detail=f"{accepted} sampled members reconstructed; spans independent",
    )
