from __future__ import annotations

import pytest

from colorbraid.covering import (Coloring, boundary_monodromy, coloring_arg, dim_lights, is_connected,
                                 parse_coloring, rho3, rho_I, rho_tilde_I, stabilize, standard_class)
from colorbraid.perm import Permutation, T


def colors(*pairs):
    return tuple(T(a, b) for a, b in pairs)


def test_standard_families():
    assert rho_I(6, [2, 3]).colors == colors((1, 2), (1, 2), (1, 4), (1, 4), (2, 3), (2, 3))
    assert rho_I(6, [2, 3]).degree == 4
    assert rho3(6) == Coloring(3, colors((1, 2), (1, 2), (2, 3), (2, 3), (2, 3), (2, 3)))
    assert rho_tilde_I(6, [4]).colors == colors((1, 2), (1, 2), (1, 4), (1, 4), (2, 3), (1, 4))


def test_boundary_monodromy():
    assert boundary_monodromy(rho_I(6, [2, 3])).is_identity()
    assert boundary_monodromy(rho_I(6, [2])) == Permutation.from_cycles(4, [(1, 4), (2, 3)])
    assert boundary_monodromy(rho_I(7, [2, 3])) == Permutation.from_cycles(4, [(2, 3)])


def test_connectivity():
    assert is_connected(rho_I(6, [2, 3]))
    assert not is_connected(Coloring(4, (T(2, 3),) * 6))
    assert not is_connected(rho_I(6, [2, 3, 4, 5]))


def test_dim_lights():
    assert dim_lights(rho_I(6, [2, 3])) == rho3(6)
    assert dim_lights(rho_tilde_I(6, [2, 3, 4, 5])) == rho3(6)
    c = Coloring(4, colors((3, 4), (3, 4), (1, 2)))
    assert dim_lights(c).colors == colors((1, 2), (1, 2), (1, 2))


def test_stabilize():
    s = stabilize(rho_I(6, [2, 3]), 4)
    assert s.degree == 5
    assert s.colors[-4:] == colors((2, 3), (2, 3), (4, 5), (4, 5))


def test_standard_class_sizes():
    assert len(standard_class(6, Permutation.identity(4))) == 6
    assert len(standard_class(6, Permutation.from_cycles(4, [(1, 4), (2, 3)]))) == 8
    assert len(standard_class(8, Permutation.identity(4))) == 30


def test_text_round_trip():
    c = rho_tilde_I(8, [2, 5])
    assert parse_coloring(c.text()) == c
    assert Coloring.from_json(c.to_json()) == c
    assert coloring_arg("rho23_6") == rho_I(6, [2, 3])
    assert coloring_arg("rhot4_6") == rho_tilde_I(6, [4])


def test_invalid_colorings():
    with pytest.raises(ValueError):
        Coloring(3, colors((1, 4),))
    with pytest.raises(ValueError):
        coloring_arg("nonsense")
