from __future__ import annotations

import pytest

from colorbraid.braid import D, B, delta4, delta6, gen
from colorbraid.covering import rho_I
from colorbraid.homlift import (NotLiftable, build_surface, deviation_rank, groupoid_defect, homology_action,
                                homology_action_from_images, is_homology_trivial, is_unipotent, lift_chain)


@pytest.mark.parametrize("n, rank", [(6, 0), (8, 2), (10, 4), (12, 6)])
def test_rank(n, rank):
    assert build_surface(rho_I(n, [2, 3])).rank == rank


def test_lift_chain():
    c = rho_I(6, [2, 3])
    d = c.degree
    chain, end = lift_chain(c, [1, 1], 1)
    assert end == 1 and chain[0 * d + 0] == 1 and chain[0 * d + 1] == 1
    chain, end = lift_chain(c, [1], 3)
    assert end == 3 and chain[2] == 1
    chain, end = lift_chain(c, [1, -1], 1)
    assert end == 1 and not any(chain)


def test_generator_actions():
    c8 = rho_I(8, [2, 3])
    assert homology_action(gen(8, 0), c8).is_identity()
    assert homology_action(gen(8, 2), c8).is_identity()
    h4 = homology_action(gen(8, 4), c8)
    assert not h4.is_identity() and h4.det() == 1
    assert homology_action(delta4(8), c8).matrix == h4.matrix


def test_two_computations_agree():
    c = rho_I(10, [2, 3])
    for w in (gen(10, 4), delta4(10), delta6(10), gen(10, 6) * delta4(10)):
        assert homology_action(w, c).matrix == homology_action_from_images(w, c).matrix


def test_delta6_unipotent():
    h = homology_action(delta6(10), rho_I(10, [2, 3]))
    assert is_unipotent(h) and deviation_rank(h) == 1


def test_kernel_examples():
    c = rho_I(10, [2, 3])
    assert is_homology_trivial(gen(10, 2), c)
    assert is_homology_trivial(D(2, 10), c)
    assert not is_homology_trivial(gen(10, 4), c)


def test_b_as_printed_is_not_trivial():
    c = rho_I(10, [2, 3])
    assert not is_homology_trivial(B(2, 10), c)


def test_not_liftable():
    with pytest.raises(NotLiftable):
        homology_action(gen(8, 1), rho_I(8, [2, 3]))


def test_groupoid_defect():
    c = rho_I(6, [2, 3])
    d4, b4 = delta4(6), gen(6, 4)
    assert groupoid_defect(d4 * b4 * d4.inverse() * b4.inverse(), c) == []
    assert groupoid_defect(gen(6, 1, 3), c) == []
    assert groupoid_defect(gen(8, 2), rho_I(8, [2, 3])) != []
