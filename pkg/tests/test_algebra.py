import numpy as np
import pytest

from jspec import (
    AlgebraMismatchError,
    ComplexHermitian,
    Element,
    ProductAlgebra,
    RealSymmetric,
    SpinFactor,
    coordinate_algebra,
    distance,
    element_from_spin,
    element_from_sym,
    inner_product,
    jordan_product,
    norm,
    random_element,
    trace,
    unit_element,
)
from jspec.algebra import herm_matrix, sym_matrix

from conftest import ALL_KINDS


def test_descriptor_dimensions():
    assert RealSymmetric(3).rank == 3 and RealSymmetric(3).dim == 6
    assert ComplexHermitian(3).rank == 3 and ComplexHermitian(3).dim == 9
    assert SpinFactor(5).rank == 2 and SpinFactor(5).dim == 5
    prod = ProductAlgebra((RealSymmetric(2), SpinFactor(3)))
    assert prod.rank == 4 and prod.dim == 6


def test_descriptor_validation():
    with pytest.raises(ValueError):
        RealSymmetric(0)
    with pytest.raises(ValueError):
        SpinFactor(2)
    with pytest.raises(ValueError):
        ProductAlgebra(())


def test_nested_products_flatten():
    inner = ProductAlgebra((RealSymmetric(1), SpinFactor(3)))
    outer = ProductAlgebra((RealSymmetric(2), inner))
    assert all(not isinstance(f, ProductAlgebra) for f in outer.factors)
    assert outer.rank == 2 + 1 + 2


def test_unit_is_identity_matrix():
    e = unit_element(RealSymmetric(3))
    assert np.array_equal(sym_matrix(e), np.eye(3))
    e = unit_element(SpinFactor(4))
    assert np.array_equal(e.coords, [1.0, 0.0, 0.0, 0.0])
    e = unit_element(coordinate_algebra(2))
    assert np.array_equal(e.coords, [1.0, 1.0])


def test_unit_times_unit():
    for a in ALL_KINDS:
        e = unit_element(a)
        assert distance(jordan_product(e, e), e) == 0.0


def test_orthogonal_idempotents_multiply_to_zero():
    a = RealSymmetric(2)
    e1 = element_from_sym(a, np.diag([1.0, 0.0]))
    e2 = element_from_sym(a, np.diag([0.0, 1.0]))
    assert norm(jordan_product(e1, e2)) == 0.0


def test_spin_product_formula():
    a = SpinFactor(3)
    x = element_from_spin(a, 1.0, np.array([1.0, 0.0]))
    assert np.array_equal(jordan_product(x, x).coords, [2.0, 2.0, 0.0])


def test_inner_product_values():
    assert inner_product(unit_element(RealSymmetric(3)), unit_element(RealSymmetric(3))) == 3.0
    a = RealSymmetric(2)
    e1 = element_from_sym(a, np.diag([1.0, 0.0]))
    e2 = element_from_sym(a, np.diag([0.0, 1.0]))
    assert inner_product(e1, e2) == 0.0
    s = SpinFactor(3)
    x = element_from_spin(s, 1.0, np.zeros(2))
    assert inner_product(x, x) == 2.0


def test_inner_product_matches_trace_of_product():
    # the weighted-coordinate form must agree with tr(x o y)
    for a in ALL_KINDS:
        x = random_element(a, 5)
        y = random_element(a, 6)
        assert inner_product(x, y) == pytest.approx(trace(jordan_product(x, y)), rel=1e-12, abs=1e-12)


def test_hermitian_storage_round_trip():
    a = ComplexHermitian(3)
    x = random_element(a, 0)
    m = herm_matrix(x)
    assert np.abs(m - m.conj().T).max() == 0.0


def test_random_element_determinism():
    for a in ALL_KINDS:
        x = random_element(a, 42)
        y = random_element(a, 42)
        assert np.array_equal(x.coords, y.coords)
        z = random_element(a, 43)
        assert not np.array_equal(x.coords, z.coords)


def test_random_element_rejects_bad_scale():
    with pytest.raises(ValueError):
        random_element(RealSymmetric(2), 0, scale=0.0)
    with pytest.raises(ValueError):
        random_element(RealSymmetric(2), 0, scale=-1.0)


def test_algebra_mismatch_raises():
    x = random_element(RealSymmetric(2), 0)
    y = random_element(RealSymmetric(3), 0)
    with pytest.raises(AlgebraMismatchError):
        jordan_product(x, y)
    with pytest.raises(AlgebraMismatchError):
        inner_product(x, y)


def test_element_coords_immutable():
    x = random_element(RealSymmetric(2), 1)
    with pytest.raises(ValueError):
        x.coords[0] = 7.0


@pytest.mark.parametrize("algebra", ALL_KINDS, ids=str)
def test_commutativity(algebra):
    for seed in range(40):
        x = random_element(algebra, 2 * seed)
        y = random_element(algebra, 2 * seed + 1)
        lhs = jordan_product(x, y)
        rhs = jordan_product(y, x)
        scale = max(1.0, norm(lhs))
        assert distance(lhs, rhs) <= 1e-12 * scale


@pytest.mark.parametrize("algebra", ALL_KINDS, ids=str)
def test_jordan_identity(algebra):
    # x^2 o (x o y) == x o (x^2 o y)
    for seed in range(40):
        x = random_element(algebra, 3 * seed)
        y = random_element(algebra, 3 * seed + 1)
        x2 = jordan_product(x, x)
        lhs = jordan_product(x2, jordan_product(x, y))
        rhs = jordan_product(x, jordan_product(x2, y))
        scale = max(1.0, norm(lhs), norm(rhs))
        assert distance(lhs, rhs) <= 1e-9 * scale


@pytest.mark.parametrize("algebra", ALL_KINDS, ids=str)
def test_trace_form_associativity(algebra):
    # <x o y, z> == <y, x o z>
    for seed in range(40):
        x = random_element(algebra, 4 * seed)
        y = random_element(algebra, 4 * seed + 1)
        z = random_element(algebra, 4 * seed + 2)
        lhs = inner_product(jordan_product(x, y), z)
        rhs = inner_product(y, jordan_product(x, z))
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("algebra", ALL_KINDS, ids=str)
def test_unit_is_two_sided_identity(algebra):
    e = unit_element(algebra)
    for seed in range(20):
        x = random_element(algebra, seed)
        assert distance(jordan_product(e, x), x) <= 1e-14 * max(1.0, norm(x))
