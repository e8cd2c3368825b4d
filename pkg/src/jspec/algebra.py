"""Core Euclidean Jordan algebra arithmetic.

Supported kinds: real symmetric matrices, complex Hermitian matrices, spin
factors, and Cartesian products of those.  Every element is stored as a flat
real coordinate vector against a fixed structural basis, so Hermitian
symmetry can never be violated by construction and no complex numbers leak
into the data model (complex arithmetic appears only inside kernels).

Coordinate layouts:

* real symmetric, rank n:  lower triangle row-major, ``n(n+1)/2`` reals
  ``[a00, a10, a11, a20, a21, a22, ...]``
* complex Hermitian, rank n:  lower triangle row-major with interleaved
  real/imaginary off-diagonal parts and real diagonal, ``n^2`` reals
  ``[a00, Re a10, Im a10, a11, Re a20, Im a20, Re a21, Im a21, a22, ...]``
* spin factor of ambient dimension d:  ``(x0, xbar)`` with ``xbar`` in
  ``R^(d-1)``, d reals
* product:  concatenation of factor coordinates in factor order

All operations are pure functions of immutable values and are safe for
unrestricted concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import AlgebraMismatchError

__all__ = [
    "Algebra",
    "RealSymmetric",
    "ComplexHermitian",
    "SpinFactor",
    "ProductAlgebra",
    "Element",
    "coordinate_algebra",
    "jordan_product",
    "inner_product",
    "norm",
    "distance",
    "trace",
    "unit_element",
    "zero_element",
    "random_element",
    "sym_matrix",
    "element_from_sym",
    "herm_matrix",
    "element_from_herm",
    "spin_parts",
    "element_from_spin",
    "split_product",
    "join_product",
    "scale_element",
    "add_elements",
    "isometric_coords",
]


# ---------------------------------------------------------------------------
# descriptors


class Algebra:
    """Base descriptor.  Concrete kinds define `rank` and `dim`."""

    rank: int
    dim: int

    def is_simple(self) -> bool:
        return not isinstance(self, ProductAlgebra)


@dataclass(frozen=True)
class RealSymmetric(Algebra):
    """Algebra of n x n real symmetric matrices under (XY + YX)/2."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"matrix size must be a positive integer, got {self.n!r}")

    @property
    def rank(self) -> int:
        return self.n

    @property
    def dim(self) -> int:
        return self.n * (self.n + 1) // 2


@dataclass(frozen=True)
class ComplexHermitian(Algebra):
    """Algebra of n x n complex Hermitian matrices under (XY + YX)/2."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"matrix size must be a positive integer, got {self.n!r}")

    @property
    def rank(self) -> int:
        return self.n

    @property
    def dim(self) -> int:
        return self.n * self.n


@dataclass(frozen=True)
class SpinFactor(Algebra):
    """Rank-2 spin factor on R^d: x = (x0, xbar), xbar in R^(d-1), d >= 3."""

    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 3:
            raise ValueError(f"spin factor needs ambient dimension >= 3, got {self.d!r}")

    @property
    def rank(self) -> int:
        return 2

    @property
    def dim(self) -> int:
        return self.d


@dataclass(frozen=True)
class ProductAlgebra(Algebra):
    """Cartesian product of simple algebras.

    Nested products are flattened at construction, so `factors` always
    holds simple descriptors; restricted orbits and factor blocks are
    defined against this flat list.
    """

    factors: tuple[Algebra, ...]

    def __post_init__(self):
        flat: list[Algebra] = []
        for f in self.factors:
            if isinstance(f, ProductAlgebra):
                flat.extend(f.factors)
            elif isinstance(f, Algebra):
                flat.append(f)
            else:
                raise ValueError(f"not an algebra descriptor: {f!r}")
        if not flat:
            raise ValueError("a product algebra needs at least one factor")
        object.__setattr__(self, "factors", tuple(flat))

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)


def coordinate_algebra(n: int) -> ProductAlgebra:
    """R^n as the n-fold product of scalar (1 x 1 symmetric) factors."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    return ProductAlgebra(tuple(RealSymmetric(1) for _ in range(n)))


@lru_cache(maxsize=None)
def _factor_offsets(a: ProductAlgebra) -> tuple[int, ...]:
    offs = [0]
    for f in a.factors:
        offs.append(offs[-1] + f.dim)
    return tuple(offs)


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True, eq=False)
class Element:
    """A point of the algebra: descriptor plus structural coordinates."""

    algebra: Algebra
    coords: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.coords, dtype=float)
        if arr.shape != (self.algebra.dim,):
            raise ValueError(
                f"expected {self.algebra.dim} coordinates for {self.algebra}, "
                f"got shape {arr.shape}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    def __repr__(self):
        return f"Element({self.algebra}, coords={np.array2string(self.coords, precision=4)})"


def _require_same_algebra(x: Element, y: Element):
    if x.algebra != y.algebra:
        raise AlgebraMismatchError(f"algebra mismatch: {x.algebra} vs {y.algebra}")


# -- matrix/spin packing ----------------------------------------------------


@lru_cache(maxsize=None)
def _tril_indices(n: int):
    return np.tril_indices(n)


def sym_matrix(x: Element) -> np.ndarray:
    """Unpack a real-symmetric element into a full n x n matrix."""
    n = x.algebra.n
    m = np.zeros((n, n))
    m[_tril_indices(n)] = x.coords
    m = m + np.tril(m, -1).T
    return m


def element_from_sym(a: RealSymmetric, m: np.ndarray) -> Element:
    return Element(a, np.asarray(m, dtype=float)[_tril_indices(a.n)])


@lru_cache(maxsize=None)
def _herm_layout(n: int):
    """Index maps between the packed Hermitian vector and matrix entries."""
    diag_pos = np.empty(n, dtype=int)
    off_rows, off_cols, re_pos, im_pos = [], [], [], []
    pos = 0
    for i in range(n):
        for j in range(i):
            off_rows.append(i)
            off_cols.append(j)
            re_pos.append(pos)
            im_pos.append(pos + 1)
            pos += 2
        diag_pos[i] = pos
        pos += 1
    return (
        diag_pos,
        np.array(off_rows, dtype=int),
        np.array(off_cols, dtype=int),
        np.array(re_pos, dtype=int),
        np.array(im_pos, dtype=int),
    )


def herm_matrix(x: Element) -> np.ndarray:
    """Unpack a complex-Hermitian element into a full n x n complex matrix."""
    n = x.algebra.n
    diag_pos, rows, cols, re_pos, im_pos = _herm_layout(n)
    m = np.zeros((n, n), dtype=complex)
    m[np.arange(n), np.arange(n)] = x.coords[diag_pos]
    if rows.size:
        vals = x.coords[re_pos] + 1j * x.coords[im_pos]
        m[rows, cols] = vals
        m[cols, rows] = vals.conj()
    return m


def element_from_herm(a: ComplexHermitian, m: np.ndarray) -> Element:
    n = a.n
    m = np.asarray(m, dtype=complex)
    diag_pos, rows, cols, re_pos, im_pos = _herm_layout(n)
    coords = np.empty(a.dim)
    coords[diag_pos] = m[np.arange(n), np.arange(n)].real
    if rows.size:
        coords[re_pos] = m[rows, cols].real
        coords[im_pos] = m[rows, cols].imag
    return Element(a, coords)


def spin_parts(x: Element) -> tuple[float, np.ndarray]:
    return float(x.coords[0]), x.coords[1:]


def element_from_spin(a: SpinFactor, x0: float, xbar: np.ndarray) -> Element:
    return Element(a, np.concatenate(([x0], np.asarray(xbar, dtype=float))))


def split_product(x: Element) -> list[Element]:
    a = x.algebra
    if not isinstance(a, ProductAlgebra):
        raise AlgebraMismatchError("split_product needs a product-algebra element")
    offs = _factor_offsets(a)
    return [Element(f, x.coords[offs[i] : offs[i + 1]]) for i, f in enumerate(a.factors)]


def join_product(a: ProductAlgebra, parts: list[Element]) -> Element:
    if len(parts) != len(a.factors):
        raise AlgebraMismatchError("wrong number of product factors")
    for p, f in zip(parts, a.factors):
        if p.algebra != f:
            raise AlgebraMismatchError(f"factor mismatch: {p.algebra} vs {f}")
    return Element(a, np.concatenate([p.coords for p in parts]))


# ---------------------------------------------------------------------------
# operations


def jordan_product(x: Element, y: Element) -> Element:
    """The commutative product: (XY + YX)/2 for matrices, the spin formula
    (x.y, x0*ybar + y0*xbar) for spin factors, factor-wise for products."""
    _require_same_algebra(x, y)
    a = x.algebra
    if isinstance(a, RealSymmetric):
        mx, my = sym_matrix(x), sym_matrix(y)
        return element_from_sym(a, (mx @ my + my @ mx) / 2.0)
    if isinstance(a, ComplexHermitian):
        mx, my = herm_matrix(x), herm_matrix(y)
        return element_from_herm(a, (mx @ my + my @ mx) / 2.0)
    if isinstance(a, SpinFactor):
        x0, xb = spin_parts(x)
        y0, yb = spin_parts(y)
        return element_from_spin(a, x0 * y0 + float(xb @ yb), x0 * yb + y0 * xb)
    parts = [jordan_product(p, q) for p, q in zip(split_product(x), split_product(y))]
    return join_product(a, parts)


@lru_cache(maxsize=None)
def _inner_weights(a: Algebra) -> np.ndarray:
    """Weights w such that <x, y> = sum(w * x.coords * y.coords).

    Diagonal matrix entries weigh 1, off-diagonal (and both their real and
    imaginary parts) weigh 2; the spin trace form is 2 * the Euclidean dot,
    normalized so every primitive idempotent has trace 1.
    """
    if isinstance(a, RealSymmetric):
        rows, cols = _tril_indices(a.n)
        return np.where(rows == cols, 1.0, 2.0)
    if isinstance(a, ComplexHermitian):
        w = np.full(a.dim, 2.0)
        diag_pos = _herm_layout(a.n)[0]
        w[diag_pos] = 1.0
        return w
    if isinstance(a, SpinFactor):
        return np.full(a.dim, 2.0)
    return np.concatenate([_inner_weights(f) for f in a.factors])


def inner_product(x: Element, y: Element) -> float:
    """Trace inner product tr(x o y)."""
    _require_same_algebra(x, y)
    return float(np.dot(_inner_weights(x.algebra) * x.coords, y.coords))


def norm(x: Element) -> float:
    return math.sqrt(max(0.0, inner_product(x, x)))


def distance(x: Element, y: Element) -> float:
    _require_same_algebra(x, y)
    d = x.coords - y.coords
    return math.sqrt(max(0.0, float(np.dot(_inner_weights(x.algebra) * d, d))))


def isometric_coords(x: Element) -> np.ndarray:
    """Coordinates rescaled so the plain dot product equals the trace form."""
    return np.sqrt(_inner_weights(x.algebra)) * x.coords


@lru_cache(maxsize=None)
def _trace_weights(a: Algebra) -> np.ndarray:
    """Weights t with tr(x) = sum(t * x.coords)."""
    if isinstance(a, RealSymmetric):
        rows, cols = _tril_indices(a.n)
        return np.where(rows == cols, 1.0, 0.0)
    if isinstance(a, ComplexHermitian):
        t = np.zeros(a.dim)
        t[_herm_layout(a.n)[0]] = 1.0
        return t
    if isinstance(a, SpinFactor):
        t = np.zeros(a.dim)
        t[0] = 2.0
        return t
    return np.concatenate([_trace_weights(f) for f in a.factors])


def trace(x: Element) -> float:
    """Sum of eigenvalues."""
    return float(np.dot(_trace_weights(x.algebra), x.coords))


@lru_cache(maxsize=None)
def unit_element(a: Algebra) -> Element:
    """The two-sided identity e; its eigenvalue vector is all ones."""
    if isinstance(a, RealSymmetric):
        return element_from_sym(a, np.eye(a.n))
    if isinstance(a, ComplexHermitian):
        return element_from_herm(a, np.eye(a.n, dtype=complex))
    if isinstance(a, SpinFactor):
        return element_from_spin(a, 1.0, np.zeros(a.d - 1))
    return join_product(a, [unit_element(f) for f in a.factors])


def zero_element(a: Algebra) -> Element:
    return Element(a, np.zeros(a.dim))


def scale_element(t: float, x: Element) -> Element:
    return Element(x.algebra, t * x.coords)


def add_elements(x: Element, y: Element) -> Element:
    _require_same_algebra(x, y)
    return Element(x.algebra, x.coords + y.coords)


def random_element(a: Algebra, seed: int, scale: float = 1.0) -> Element:
    """Deterministic Gaussian element: i.i.d. standard-normal coordinates
    times `scale`, mapped into the structural representation."""
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale!r}")
    rng = np.random.default_rng(seed)
    return Element(a, rng.standard_normal(a.dim) * scale)
