"""Permutation-invariant subsets of R^n: predicates, built-in cones,
finite orbits, and a randomized pointedness probe.

Built-in sets expose a vectorized margin function m with membership
``m(q) >= 0``; margins let path audits shrink strict inequalities by a
tolerance.  Custom predicates are black boxes: the library audits their
permutation invariance only by random sampling, and flag honesty (convex,
cone, closed) is the caller's contract.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

FINITE_TOL = 1e-12
_MAX_ORBIT_DIM = 8  # n! orbit materialization guard

__all__ = [
    "FINITE_TOL",
    "PermSet",
    "custom_permset",
    "make_rearrangement_cone",
    "make_trace_norm_cone",
    "make_trace_halfspace",
    "make_finite_orbit",
    "down_member",
    "pointed_sample_check",
]


@dataclass(frozen=True, eq=False)
class PermSet:
    """A permutation-invariant subset of R^n.

    Exactly one of `margin_fn` (vectorized, rows -> margins) or `member_fn`
    (single vector -> bool) drives membership.  `finite_points` holds the
    deduplicated full permutation orbit when the set is finite.
    """

    n: int
    tag: str
    convex: bool = False
    cone: bool = False
    closed: bool = False
    pointed: bool | None = None
    finite_points: np.ndarray | None = None
    margin_fn: Callable[[np.ndarray], np.ndarray] | None = None
    member_fn: Callable[[np.ndarray], bool] | None = None

    def __post_init__(self):
        if (self.margin_fn is None) == (self.member_fn is None):
            raise ValueError("provide exactly one of margin_fn / member_fn")

    def _rows(self, q) -> np.ndarray:
        q = np.asarray(q, dtype=float)
        if q.shape != (self.n,):
            raise ValueError(f"expected a vector of length {self.n}, got shape {q.shape}")
        return q.reshape(1, self.n)

    def member(self, q, slack: float = 0.0) -> bool:
        """Membership; positive `slack` relaxes margin-based predicates."""
        if self.margin_fn is not None:
            return bool(self.margin_fn(self._rows(q))[0] >= -slack)
        return bool(self.member_fn(np.asarray(q, dtype=float)))

    def margin(self, q) -> float | None:
        if self.margin_fn is None:
            return None
        return float(self.margin_fn(self._rows(q))[0])

    def margin_many(self, rows: np.ndarray) -> np.ndarray | None:
        if self.margin_fn is None:
            return None
        return self.margin_fn(np.asarray(rows, dtype=float))

    def down_points(self) -> np.ndarray:
        """Sorted (non-increasing) representatives of a finite set, deduplicated,
        in lexicographic order."""
        if self.finite_points is None:
            raise ValueError(f"{self.tag} has no finite point list")
        reps = {tuple(np.sort(p)[::-1]) for p in self.finite_points}
        return np.array(sorted(reps))


def custom_permset(
    n: int,
    predicate: Callable[[np.ndarray], bool],
    convex: bool = False,
    cone: bool = False,
    closed: bool = False,
) -> PermSet:
    """Wrap a caller-supplied membership predicate (assumed permutation invariant)."""
    return PermSet(
        n=n, tag="custom", convex=convex, cone=cone, closed=closed, member_fn=predicate
    )


def make_rearrangement_cone(n: int, m: int) -> PermSet:
    """{q : sum of the m smallest entries >= 0}; for m = 1 this is the
    coordinate-wise nonnegativity test, the preimage of the symmetric cone."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"need integer n >= 2, got {n!r}")
    if not isinstance(m, int) or not 1 <= m <= n - 1:
        raise ValueError(f"need 1 <= m <= n-1, got m={m!r}")

    def margin(rows: np.ndarray) -> np.ndarray:
        # summed in decreasing-rearrangement order so the value agrees
        # exactly with the tail sum of the sorted vector
        return np.sort(rows, axis=1)[:, m - 1 :: -1].sum(axis=1)

    return PermSet(
        n=n,
        tag=f"rearr({n},{m})",
        convex=True,
        cone=True,
        closed=True,
        pointed=True,
        margin_fn=margin,
    )


def make_trace_norm_cone(n: int) -> PermSet:
    """{q : tr(q) >= sqrt(n/2) * ||q||_2}, a proper cone for n >= 3."""
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"need integer n >= 3, got {n!r}")
    factor = np.sqrt(n / 2.0)

    def margin(rows: np.ndarray) -> np.ndarray:
        return rows.sum(axis=1) - factor * np.linalg.norm(rows, axis=1)

    return PermSet(
        n=n,
        tag=f"tracenorm({n})",
        convex=True,
        cone=True,
        closed=True,
        pointed=True,
        margin_fn=margin,
    )


def make_trace_halfspace(n: int) -> PermSet:
    """{q : tr(q) >= 0}; a non-pointed closed convex cone."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"need integer n >= 1, got {n!r}")

    def margin(rows: np.ndarray) -> np.ndarray:
        return rows.sum(axis=1)

    return PermSet(
        n=n,
        tag=f"halfspace-trace({n})",
        convex=True,
        cone=True,
        closed=True,
        pointed=False,
        margin_fn=margin,
    )


def make_finite_orbit(points) -> PermSet:
    """The full permutation orbit of the given points, as a finite set.

    Membership tolerance is FINITE_TOL in the max norm.  The orbit is
    materialized, so the dimension is capped at 8.
    """
    pts = [np.asarray(p, dtype=float) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    n = pts[0].size
    if any(p.shape != (n,) for p in pts):
        raise ValueError("points must share one length")
    if n > _MAX_ORBIT_DIM:
        raise ValueError(f"orbit materialization capped at n = {_MAX_ORBIT_DIM}")
    orbit = {tuple(p[list(sigma)]) for p in pts for sigma in itertools.permutations(range(n))}
    orbit_arr = np.array(sorted(orbit))
    all_zero = bool(np.all(orbit_arr == 0.0))

    def margin(rows: np.ndarray) -> np.ndarray:
        # FINITE_TOL minus max-norm distance to the nearest orbit point
        dists = np.abs(rows[:, None, :] - orbit_arr[None, :, :]).max(axis=2).min(axis=1)
        return FINITE_TOL - dists

    return PermSet(
        n=n,
        tag=f"finite({len(orbit_arr)} pts)",
        convex=len(orbit_arr) == 1,
        cone=all_zero,
        closed=True,
        pointed=True if all_zero else None,
        finite_points=orbit_arr,
        margin_fn=margin,
    )


def down_member(q_set: PermSet, q) -> bool:
    """True iff q is sorted non-increasing and belongs to the set; because the
    set is permutation invariant this tests membership in its sorted slice."""
    q = np.asarray(q, dtype=float)
    if np.any(np.diff(q) > 0.0):
        return False
    return q_set.member(q)


def _index_rng(seed: int, index: int) -> np.random.Generator:
    # per-sample derivation keeps results independent of evaluation order
    return np.random.default_rng((int(seed), int(index)))


def pointed_sample_check(q_set: PermSet, samples: int, seed: int):
    """Randomized search for a pointedness violation q != 0 with both q and
    -q members.  Candidates mix raw Gaussians with zero-sum differences of a
    Gaussian and a random permutation of itself, so lineality directions of
    trace-type half-spaces are actually hit.  Returns the first witness in
    scan order or None; deterministic given the seed.
    """
    if not q_set.cone:
        raise ValueError(f"{q_set.tag} is not flagged as a cone")
    if samples < 1:
        raise ValueError("need at least one sample")
    n = q_set.n
    rows = np.empty((2 * samples, n))
    for i in range(samples):
        rng = _index_rng(seed, i)
        g = rng.standard_normal(n)
        rows[2 * i] = g
        rows[2 * i + 1] = g - g[rng.permutation(n)]
    margins = q_set.margin_many(rows)
    if margins is not None:
        both = (margins >= 0.0) & (q_set.margin_many(-rows) >= 0.0)
        nonzero = np.abs(rows).max(axis=1) > FINITE_TOL
        hits = np.flatnonzero(both & nonzero)
        if hits.size:
            return rows[hits[0]].copy()
        return None
    for row in rows:
        if np.abs(row).max() <= FINITE_TOL:
            continue
        if q_set.member(row) and q_set.member(-row):
            return row.copy()
    return None
