from __future__ import annotations

import pytest

from colorbraid.braid import delta4, gen
from colorbraid.catalog import (MOVE_IDS, MoveSpec, census, commutator_certificate,
                                derive_move, kernel_generator_list, move_lhs, move_specs)
from colorbraid.covering import rho_I
from colorbraid.homlift import homology_action
from colorbraid.perm import T
from colorbraid.rewrite import Unknown


def test_move_lhs_examples():
    i = move_lhs("I", 8)
    assert i.word == gen(8, 2) and i.source == rho_I(8, [2, 3])
    assert move_lhs("II", 8).word == gen(8, 0)
    v = move_lhs("V", 8)
    assert v.word == delta4(8) * gen(8, 4, -1)
    assert homology_action(v.word, v.source).is_identity()


@pytest.mark.parametrize("mid", MOVE_IDS)
def test_every_move_validates(mid):
    spec = move_specs()[mid]
    for n in (spec.min_n, spec.min_n + 2):
        assert all(r.passed for r in spec.checks(n))


def test_bad_transcription_is_rejected():
    bad = MoveSpec("III", (T(1, 4), T(1, 4), T(1, 2), T(1, 2), T(2, 3), T(2, 3)), "b3 b2 b4 b3", 10, "test")
    assert not all(r.passed for r in bad.checks(10))
    with pytest.raises(ValueError):
        move_lhs("I", 7)  # odd width does not fit the context


def test_derivations():
    for mid in ("I", "V"):
        cert = derive_move(mid)
        assert cert.replay() and cert.end.letters == ()
    assert isinstance(derive_move("III"), Unknown)
    assert commutator_certificate().replay()


def test_kernel_generator_counts():
    gens = kernel_generator_list(10)
    fams = {}
    for g in gens:
        fams[g.family] = fams.get(g.family, 0) + 1
    assert fams == {"b0": 1, "b2": 1, "B": 256, "D": 16}


def test_symmetric_b_is_trivial():
    c = rho_I(10, [2, 3])
    for g in kernel_generator_list(10, symmetric_b=True):
        if g.family == "Bsym" and len(g.swapped) <= 1:
            assert homology_action(g.word, c).is_identity()


def test_census_small():
    rep = census(4, 4)
    assert rep.classified_by_monodromy
    assert rep.dumps() == census(4, 4).dumps()
    assert sum(o.size for o in rep.orbits) == rep.connected


def test_census_seeded_with_sample():
    rep = census(6, 4, mode="seeded", sample=3)
    assert rep.orbits[0].size == 6 and rep.orbits[0].sampled == 3
    with pytest.raises(ValueError):
        census(7, 5)


def test_loading_a_bad_data_file_fails(monkeypatch):
    from colorbraid import catalog
    good = catalog._data("moves.json")
    bad = {"moves": [dict(m, lhs="b3 b2 b4 b3") if m["id"] == "III" else m for m in good["moves"]]}
    monkeypatch.setattr(catalog, "_data", lambda name: bad)
    catalog.move_specs.cache_clear()
    try:
        with pytest.raises(catalog.MoveValidationError):
            catalog.move_specs()
    finally:
        monkeypatch.undo()
        catalog.move_specs.cache_clear()
    assert set(catalog.move_specs()) == set(MOVE_IDS)
