"""Weight-2 oracle: product and pairing identities on tensor-block lattices."""

from fractions import Fraction as Q

import pytest

from weyl_ising.lattice import e8_lattice, malpha_lattice
from weyl_ising.linalg import dot, vec_add
from weyl_ising.rootsys import build_root_system
from weyl_ising.weight2 import (
    NonRealCocycle,
    RootCreated,
    Weight2Element,
    WrongShellSize,
    canonical_label,
    ising_vector,
    oracle_pairing,
    oracle_product,
    virasoro_quadratic,
)


@pytest.fixture(scope="module")
def a2():
    R = build_root_system("A", 2)
    alpha, beta = R.simple_roots()
    gamma = vec_add(alpha, beta)
    lattices = [malpha_lattice(R, a) for a in (alpha, beta, gamma)]
    return [ising_vector(M) for M in lattices], [virasoro_quadratic(M) for M in lattices]


@pytest.fixture(scope="module")
def a3_orthogonal():
    R = build_root_system("A", 3)
    s = R.simple_roots()
    assert dot(s[0], s[2]) == 0
    return [ising_vector(malpha_lattice(R, a)) for a in (s[0], s[2])]


def test_ising_vector_shape(a2):
    (ea, _, _), _ = a2
    assert len(ea.exps) == 120
    assert all(c == Q(1, 32) for c in ea.exps.values())
    assert ea.is_real_rational()


def test_ising_norm_is_one_quarter(a2):
    (ea, eb, _), _ = a2
    assert oracle_pairing(ea, ea) == Q(1, 4)
    assert oracle_pairing(eb, eb) == Q(1, 4)


def test_virasoro_norms_and_cross_pairing(a2):
    _, (wa, wb, _) = a2
    assert oracle_pairing(wa, wa) == 4
    assert oracle_pairing(wa, wb) == 1
    assert oracle_pairing(wb, wa) == 1


def test_ising_cross_pairing(a2):
    (ea, eb, ec), _ = a2
    assert oracle_pairing(ea, eb) == Q(1, 256)
    assert oracle_pairing(ea, ec) == Q(1, 256)
    assert oracle_pairing(eb, ec) == Q(1, 256)


def test_ising_is_idempotent_axis(a2):
    (ea, _, _), _ = a2
    assert oracle_product(ea, ea) == ea.scale(2)


def test_block_virasoro_gives_weight_two(a2):
    (ea, _, _), (wa, _, _) = a2
    assert oracle_product(wa, ea) == ea.scale(2)
    assert oracle_product(ea, wa) == ea.scale(2)


def test_adjacent_product_three_term(a2):
    (ea, eb, ec), _ = a2
    expected = (ea + eb - ec).scale(Q(1, 32))
    assert oracle_product(ea, eb) == expected
    assert oracle_product(eb, ea) == expected


def test_products_are_real_rational(a2):
    (ea, eb, _), (wa, _, _) = a2
    for u, v in [(ea, ea), (ea, eb), (wa, eb)]:
        assert oracle_product(u, v).is_real_rational()


def test_form_invariance(a2):
    (ea, eb, ec), _ = a2
    for u, v, w in [(ea, eb, ec), (eb, ec, ea), (ea, ea, eb)]:
        left = oracle_pairing(oracle_product(u, v), w)
        right = oracle_pairing(v, oracle_product(u, w))
        assert left == right


def test_orthogonal_labels_give_zero(a3_orthogonal):
    e1, e3 = a3_orthogonal
    assert not oracle_product(e1, e3)
    assert oracle_pairing(e1, e3) == 0


def test_wrong_shell_size():
    with pytest.raises(WrongShellSize):
        ising_vector(e8_lattice())


def test_root_created():
    x = tuple(Q(c) for c in (2, 0, 0, 0, 0, 0, 0, 0))
    y = tuple(Q(c, 2) for c in (3, 1, 1, 1, 1, 1, 1, -1))
    assert dot(x, x) == 4 and dot(y, y) == 4 and dot(x, y) == 3
    u = Weight2Element(8, {}, {x: 1})
    v = Weight2Element(8, {}, {y: 1})
    with pytest.raises(RootCreated):
        oracle_product(u, v)


def test_non_real_sign_is_rejected():
    x = tuple(Q(c, 2) for c in (3, 2, 1, 1, 1, 0, 0, 0))
    y = tuple(Q(c) for c in (0, 1, 0, 1, 1, 0, -1, 0))
    assert dot(x, x) == 4 and dot(y, y) == 4 and dot(x, y) == 2
    u = Weight2Element(8, {}, {x: 1})
    v = Weight2Element(8, {}, {y: 1})
    with pytest.raises(NonRealCocycle):
        oracle_product(u, v)


def test_canonical_label_normalizes_sign():
    assert canonical_label((-1, 2, 0)) == (1, -2, 0)
    assert canonical_label((0, 3, -1)) == (0, 3, -1)
    with pytest.raises(ValueError):
        canonical_label((0, 0, 0))


def test_element_algebra():
    x = tuple(Q(c) for c in (2, 0, 0, 0, 0, 0, 0, 0))
    u = Weight2Element(8, {(0, 1): 1, (1, 0): 1}, {x: Q(1, 2)})
    v = u + u - u.scale(2)
    assert not v
    assert v == Weight2Element.zero(8)
    with pytest.raises(ValueError):
        Weight2Element(8, {(0, 1): 1}, {})
    with pytest.raises(ValueError):
        Weight2Element(8, {}, {(1, 0, 0, 0, 0, 0, 0, 0): 1})
