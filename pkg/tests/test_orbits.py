import numpy as np
import pytest

from jspec import (
    ComplexHermitian,
    NotInIdentityComponentError,
    OrbitMismatchError,
    ProductAlgebra,
    RealSymmetric,
    SpinFactor,
    UnsupportedAlgebraError,
    apply_automorphism,
    automorphism_from_matrix,
    coordinate_algebra,
    distance,
    eigen_map,
    element_from_sym,
    frame_transport,
    g_path,
    identity_automorphism,
    inner_product,
    jordan_product,
    norm,
    orbit_path,
    orbit_sample,
    random_element,
    random_g_automorphism,
    restricted_orbit_path,
    spectral_decompose,
    split_product,
    unit_element,
)
from jspec.algebra import Element, join_product, sym_matrix

from conftest import SIMPLE_KINDS, element_with_eigenvalues, random_frame


# ---------------------------------------------------------------------------
# automorphisms


@pytest.mark.parametrize("algebra", SIMPLE_KINDS, ids=str)
def test_action_preserves_products_and_eigenvalues(algebra):
    # 6 kinds x 170 sampled (phi, x, y) triples: >= 1000 total
    rng = np.random.default_rng(7)
    for trial in range(170):
        phi = random_g_automorphism(algebra, rng)
        x = random_element(algebra, trial)
        y = random_element(algebra, trial + 900)
        lhs = apply_automorphism(phi, jordan_product(x, y))
        rhs = jordan_product(apply_automorphism(phi, x), apply_automorphism(phi, y))
        assert distance(lhs, rhs) <= 1e-8 * max(1.0, norm(lhs))
        assert abs(
            inner_product(apply_automorphism(phi, x), apply_automorphism(phi, y))
            - inner_product(x, y)
        ) <= 1e-8 * max(1.0, abs(inner_product(x, y)))
        assert np.abs(eigen_map(apply_automorphism(phi, x)) - eigen_map(x)).max() <= 1e-8


def test_representation_validation():
    with pytest.raises(ValueError):
        automorphism_from_matrix(RealSymmetric(2), np.array([[1.0, 1.0], [0.0, 1.0]]))
    phi = automorphism_from_matrix(RealSymmetric(2), np.array([[0.0, -1.0], [1.0, 0.0]]))
    assert phi.in_g
    refl = automorphism_from_matrix(RealSymmetric(2), np.diag([1.0, -1.0]))
    assert not refl.in_g  # even rank: reflection is outside the identity component
    refl_odd = automorphism_from_matrix(RealSymmetric(3), np.diag([1.0, 1.0, -1.0]))
    assert refl_odd.in_g  # odd rank: -U gives the same map with det +1


def test_unitary_always_in_identity_component():
    rng = np.random.default_rng(0)
    phi = random_g_automorphism(ComplexHermitian(3), rng)
    assert phi.in_g
    diag = automorphism_from_matrix(ComplexHermitian(2), np.diag([1.0, -1.0]).astype(complex))
    assert diag.in_g


# ---------------------------------------------------------------------------
# frame transport


def test_transport_identity_when_frames_equal():
    frame = random_frame(RealSymmetric(3), 5)
    phi = frame_transport(frame, frame)
    assert np.abs(phi.matrix - np.eye(3)).max() < 1e-12


def test_transport_s2_quarter_turn():
    a = RealSymmetric(2)
    e_frame = random_frame(a, 0)
    x = element_from_sym(a, np.diag([1.0, 0.0]))
    e_frame, _ = spectral_decompose(x)
    y = element_from_sym(a, np.array([[0.0, 1.0], [1.0, 0.0]]))
    f_frame, _ = spectral_decompose(y)
    phi = frame_transport(e_frame, f_frame)
    # direct multiplication oracle: the first idempotent must land on
    # the projection onto span{(1,1)/sqrt(2)}
    image = apply_automorphism(phi, element_from_sym(a, np.diag([1.0, 0.0])))
    assert distance(image, element_from_sym(a, np.array([[0.5, 0.5], [0.5, 0.5]]))) < 1e-12
    u = phi.matrix
    assert abs(abs(u[0, 0]) - np.cos(np.pi / 4)) < 1e-12


@pytest.mark.parametrize("algebra", SIMPLE_KINDS, ids=str)
def test_transport_maps_frames(algebra):
    for seed in range(10):
        e_frame = random_frame(algebra, seed)
        f_frame = random_frame(algebra, seed + 5_000)
        phi = frame_transport(e_frame, f_frame)
        assert phi.in_g
        for e, f in zip(e_frame.idempotents, f_frame.idempotents):
            assert distance(apply_automorphism(phi, e), f) <= 1e-8


def test_transport_determinant_is_positive():
    for seed in range(10):
        phi = frame_transport(
            random_frame(RealSymmetric(3), seed), random_frame(RealSymmetric(3), seed + 50)
        )
        assert np.linalg.det(phi.matrix) == pytest.approx(1.0, abs=1e-10)


def test_transport_rejects_products():
    a = ProductAlgebra((RealSymmetric(2), RealSymmetric(2)))
    frame = random_frame(a, 1)
    with pytest.raises(UnsupportedAlgebraError):
        frame_transport(frame, frame)


# ---------------------------------------------------------------------------
# identity-component paths


def test_g_path_identity_is_constant():
    path = g_path(identity_automorphism(RealSymmetric(3)))
    for t in (0.0, 0.3, 1.0):
        assert np.abs(path.sample(t).matrix - np.eye(3)).max() < 1e-15


def test_g_path_single_rotation_scales_angle():
    theta = np.pi / 4
    rot = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
    path = g_path(automorphism_from_matrix(RealSymmetric(2), rot))
    half = path.sample(0.5).matrix
    expect = np.array([[np.cos(theta / 2), -np.sin(theta / 2)], [np.sin(theta / 2), np.cos(theta / 2)]])
    assert np.abs(half - expect).max() < 1e-12


@pytest.mark.parametrize("algebra", SIMPLE_KINDS, ids=str)
def test_g_path_endpoints_and_continuity(algebra):
    rng = np.random.default_rng(13)
    for _ in range(10):
        phi = random_g_automorphism(algebra, rng)
        path = g_path(phi)
        size = phi.matrix.shape[0]
        assert np.abs(path.sample(0.0).matrix - np.eye(size)).max() < 1e-12
        assert np.abs(path.sample(1.0).matrix - phi.matrix).max() < 1e-9
        # bounded increments along a fine grid
        prev = path.sample(0.0).matrix
        for t in np.linspace(0.0, 1.0, 33)[1:]:
            cur = path.sample(t).matrix
            assert np.abs(cur - prev).max() < 1.0
            gram = cur.conj().T @ cur
            assert np.abs(gram - np.eye(size)).max() < 1e-12
            prev = cur


def test_g_path_rejects_reflection():
    refl = automorphism_from_matrix(RealSymmetric(2), np.diag([1.0, -1.0]))
    with pytest.raises(NotInIdentityComponentError):
        g_path(refl)


# ---------------------------------------------------------------------------
# orbit paths


def test_orbit_path_constant_for_equal_endpoints():
    x = random_element(RealSymmetric(3), 2)
    path = orbit_path(x, x, steps=5)
    assert all(distance(s, x) < 1e-12 for s in path.samples)


@pytest.mark.parametrize("algebra", SIMPLE_KINDS, ids=str)
def test_orbit_path_preserves_eigenvalues(algebra):
    for seed in range(6):
        x = random_element(algebra, seed)
        y = orbit_sample(x, 1, seed=seed + 77)[0]
        path = orbit_path(x, y, steps=40)
        lam = eigen_map(x)
        assert distance(path.samples[0], x) == 0.0
        assert distance(path.samples[-1], y) <= 1e-10
        for s in path.samples:
            assert np.abs(eigen_map(s) - lam).max() <= 1e-8
        assert path.max_step <= 2.0 * norm(x) + 1.0


def test_orbit_path_rank_one_projections():
    # every sample of a path between rank-one projections is itself one
    a = RealSymmetric(3)
    x = element_from_sym(a, np.diag([1.0, 0.0, 0.0]))
    rng = np.random.default_rng(3)
    v = rng.standard_normal(3)
    v /= np.linalg.norm(v)
    y = element_from_sym(a, np.outer(v, v))
    path = orbit_path(x, y, steps=60)
    for s in path.samples:
        assert np.abs(eigen_map(s) - [1.0, 0.0, 0.0]).max() < 1e-9
        assert distance(jordan_product(s, s), s) < 1e-9  # idempotent


def test_orbit_path_idempotent_circle():
    # S^2 path from diag(1,0) to the projection onto (1,1)/sqrt(2) sweeps
    # the circle [[cos^2 t, cos t sin t], [cos t sin t, sin^2 t]] monotonically
    a = RealSymmetric(2)
    x = element_from_sym(a, np.diag([1.0, 0.0]))
    y = element_from_sym(a, np.array([[0.5, 0.5], [0.5, 0.5]]))
    path = orbit_path(x, y, steps=33)
    thetas = []
    for s in path.samples:
        m = sym_matrix(s)
        theta = 0.5 * np.arctan2(2.0 * m[0, 1], m[0, 0] - m[1, 1])
        if thetas:
            # the circle matrix is pi-periodic in theta; unwrap to the branch
            # nearest the previous sample
            theta += np.pi * round((thetas[-1] - theta) / np.pi)
        ref = np.array(
            [
                [np.cos(theta) ** 2, np.cos(theta) * np.sin(theta)],
                [np.cos(theta) * np.sin(theta), np.sin(theta) ** 2],
            ]
        )
        assert np.abs(m - ref).max() <= 1e-8
        thetas.append(theta)
    diffs = np.diff(thetas)
    assert np.all(diffs >= -1e-12) or np.all(diffs <= 1e-12)
    assert abs(thetas[0]) < 1e-12
    # the endpoint projects onto span{(1,1)}: theta = pi/4 up to the period
    assert abs((thetas[-1] - np.pi / 4) % np.pi) < 1e-9 or abs(
        np.pi - (thetas[-1] - np.pi / 4) % np.pi
    ) < 1e-9


def test_orbit_path_rejects_mismatch_and_products():
    with pytest.raises(OrbitMismatchError):
        orbit_path(random_element(RealSymmetric(3), 0), random_element(RealSymmetric(3), 1), 10)
    a = coordinate_algebra(2)
    with pytest.raises(UnsupportedAlgebraError):
        orbit_path(random_element(a, 0), random_element(a, 0), 10)
    with pytest.raises(ValueError):
        orbit_path(random_element(RealSymmetric(2), 0), random_element(RealSymmetric(2), 0), 1)


# ---------------------------------------------------------------------------
# restricted orbits


def test_restricted_orbit_singleton_in_coordinate_space():
    a = coordinate_algebra(3)
    c1 = Element(a, np.array([1.0, 0.0, 0.0]))
    path = restricted_orbit_path(c1, c1, steps=4)
    assert all(distance(s, c1) == 0.0 for s in path.samples)


def test_restricted_orbit_rejects_coordinate_swap():
    # same global eigenvalues, different factor blocks
    a = coordinate_algebra(3)
    c1 = Element(a, np.array([1.0, 0.0, 0.0]))
    c2 = Element(a, np.array([0.0, 1.0, 0.0]))
    assert np.array_equal(eigen_map(c1), eigen_map(c2))
    with pytest.raises(OrbitMismatchError):
        restricted_orbit_path(c1, c2, steps=4)


def test_restricted_orbit_factorwise_preservation():
    a = ProductAlgebra((RealSymmetric(2), SpinFactor(3)))
    x = random_element(a, 4)
    ys = [orbit_sample(p, 1, seed=11)[0] for p in split_product(x)]
    y = join_product(a, ys)
    path = restricted_orbit_path(x, y, steps=25)
    assert distance(path.samples[-1], y) <= 1e-10
    for s in path.samples:
        for xi, si in zip(split_product(x), split_product(s)):
            assert np.abs(eigen_map(si) - eigen_map(xi)).max() <= 1e-8


# ---------------------------------------------------------------------------
# orbit sampling


def test_orbit_sample_of_unit_is_unit():
    e = unit_element(RealSymmetric(3))
    for s in orbit_sample(e, 5, seed=0):
        assert distance(s, e) < 1e-12


def test_orbit_sample_rank_one_projections():
    a = RealSymmetric(3)
    x = element_from_sym(a, np.diag([1.0, 0.0, 0.0]))
    for s in orbit_sample(x, 50, seed=1):
        m = sym_matrix(s)
        # u u^T for a unit vector u: idempotent with unit trace
        assert np.abs(m @ m - m).max() < 1e-10
        assert abs(np.trace(m) - 1.0) < 1e-12


def test_orbit_sample_spin_sphere():
    # the orbit of (0, v) is the sphere of radius |v| in the vector part
    a = SpinFactor(4)
    x = Element(a, np.array([0.0, 1.0, 0.0, 0.0]))
    for s in orbit_sample(x, 50, seed=2):
        assert abs(s.coords[0]) < 1e-14
        assert abs(np.linalg.norm(s.coords[1:]) - 1.0) < 1e-12


def test_orbit_sample_deterministic_and_order_independent():
    x = random_element(ComplexHermitian(2), 9)
    first = orbit_sample(x, 6, seed=5)
    again = orbit_sample(x, 6, seed=5)
    for s, t in zip(first, again):
        assert np.array_equal(s.coords, t.coords)
    # per-index derivation: a longer run reproduces the shorter run's prefix
    longer = orbit_sample(x, 12, seed=5)
    for s, t in zip(first, longer):
        assert np.array_equal(s.coords, t.coords)


def test_orbit_sample_rejects_products():
    with pytest.raises(UnsupportedAlgebraError):
        orbit_sample(random_element(coordinate_algebra(2), 0), 3, seed=0)
