from __future__ import annotations

import random

import pytest

from colorbraid.action import (CapExceeded, apply, bw_generator_set, delta4_table, generator_names, is_liftable,
                               orbit, running_colors, verify_orbit_classification)
from colorbraid.braid import BraidWord, delta4, gen
from colorbraid.covering import Coloring, boundary_monodromy, rho3, rho_I, rho_tilde_I
from colorbraid.perm import T


def test_three_panels():
    c = Coloring(4, (T(1, 2), T(1, 2)))
    assert apply(gen(2, 0), c) == c
    assert apply(gen(2, 0), Coloring(4, (T(1, 2), T(2, 3)))).colors == (T(1, 3), T(1, 2))
    assert apply(gen(2, 0), Coloring(4, (T(1, 2), T(3, 4)))).colors == (T(3, 4), T(1, 2))


def test_inverse_undoes():
    c = Coloring(4, (T(1, 2), T(2, 3), T(3, 4)))
    for i in range(2):
        assert apply(gen(3, i) * gen(3, i, -1), c) == c


def test_monodromy_preserved():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 6)
        c = Coloring(5, tuple(T(*sorted(rng.sample(range(1, 6), 2))) for _ in range(n)))
        w = BraidWord(n, tuple((rng.randrange(n - 1), rng.choice((1, -1))) for _ in range(8)))
        assert boundary_monodromy(apply(w, c)) == boundary_monodromy(c)


def test_liftability():
    assert is_liftable(gen(6, 1, 3), rho3(6))
    assert is_liftable(delta4(6), rho3(6))
    assert not is_liftable(gen(6, 1), rho_I(6, [2, 3]))


def test_running_colors_length():
    w = delta4(6)
    assert len(running_colors(w, rho3(6))) == len(w) + 1


def test_generator_sets():
    assert generator_names(6) == ["b0", "b1^3", "b2", "b3", "b4", "d4"]
    assert generator_names(5) == ["b0", "b1^3", "b2", "b3"]
    assert bw_generator_set(6)[-1] == delta4(6)


def test_orbit_sizes():
    gens = bw_generator_set(6)
    o = orbit(rho_I(6, [2, 3]), gens)
    assert len(o) == 6
    assert {v for v in o.vertices} == {rho_I(6, p) for p in ([2, 3], [2, 4], [2, 5], [3, 4], [3, 5], [4, 5])}
    assert len(orbit(rho_tilde_I(6, [4]), gens)) == 8
    assert len(orbit(rho_I(7, [2, 3]), bw_generator_set(7))) == 15


def test_orbit_cap():
    with pytest.raises(CapExceeded):
        orbit(rho_I(8, [2, 3]), bw_generator_set(8), cap=5)


@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_classification(n):
    assert all(r.passed for r in verify_orbit_classification(n))


def test_delta4_table():
    rows = delta4_table()
    assert rows and all(r.passed for r in rows)
