from __future__ import annotations

import pytest

from colorbraid.perm import Permutation, T, compose, conj, cycles, disjoint, interact, kappa, kappa_perm, product


def test_involution_product_is_identity():
    assert compose(T(1, 2).as_permutation(4), T(1, 2).as_permutation(4)).is_identity()


def test_left_to_right_composition():
    p = compose(T(1, 2).as_permutation(3), T(2, 3).as_permutation(3))
    assert p(1) == 3


def test_interacting_pair_gives_three_cycle():
    p = product([T(1, 2), T(1, 4), T(2, 3), T(2, 3)], 4)
    cyc = [c for c in cycles(p) if len(c) > 1]
    assert len(cyc) == 1 and sorted(cyc[0]) == [1, 2, 4]


@pytest.mark.parametrize("t, by, out", [((2, 3), (1, 2), (1, 3)), ((3, 4), (1, 2), (3, 4)),
                                        ((1, 4), (1, 2), (2, 4))])
def test_conj(t, by, out):
    assert conj(T(*t), T(*by)) == T(*out)


@pytest.mark.parametrize("t, out", [((3, 4), (1, 2)), ((2, 3), (2, 3)), ((2, 4), (1, 3)),
                                    ((1, 2), (1, 2)), ((1, 4), (2, 3)), ((1, 3), (1, 3))])
def test_kappa(t, out):
    assert kappa(T(*t)) == T(*out)


def test_kappa_rejects_outside_s4():
    with pytest.raises(ValueError):
        kappa(T(1, 5))


def test_kappa_is_a_homomorphism():
    ts = [T(a, b) for a in range(1, 5) for b in range(a + 1, 5)]
    for s in ts:
        for t in ts:
            lhs = kappa_perm(compose(s.as_permutation(4), t.as_permutation(4)))
            rhs = compose(kappa(s).as_permutation(3), kappa(t).as_permutation(3))
            assert lhs == rhs


def test_cycles():
    assert cycles(Permutation.identity(4)) == [(1,), (2,), (3,), (4,)]
    assert cycles(Permutation.from_cycles(4, [(1, 4), (2, 3)])) == [(1, 4), (2, 3)]
    p = compose(T(1, 2).as_permutation(4), T(2, 3).as_permutation(4))
    assert sorted(len(c) for c in cycles(p)) == [1, 3]


def test_interact_and_disjoint():
    assert interact(T(1, 2), T(2, 3))
    assert not interact(T(1, 2), T(1, 2))
    assert disjoint(T(1, 2), T(3, 4))
    assert not disjoint(T(1, 2), T(1, 2))


def test_bad_permutation():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        T(2, 2)
