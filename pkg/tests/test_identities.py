from __future__ import annotations

from colorbraid.identities import handle_swap, lasso_identities


def by_name(checks):
    return {c.name: c for c in checks}


def test_identities_that_hold():
    for n in (8, 10):
        checks = by_name(lasso_identities(n))
        assert checks["w=b_(n-3)..b2 b_(n-2)..b3: w b2 w^-1 = b_(n-2)"].holds
        assert checks["w=b_(n-2)..b5 d4 b4 b5..b_(n-2): w b4 w^-1 = d4"].holds


def test_identities_that_fail_as_written():
    for n in (8, 10):
        checks = by_name(lasso_identities(n))
        c = checks["w=b_(n-2)..b5 d4 b4 b5..b_(n-2): w d4 w^-1 = b4"]
        assert not c.holds and c.other_order and c.homology_equal
        c = checks["w=b_(n-2)..b5 d4 b4 b5..b_(n-2): w b0 w^-1 = same"]
        assert not c.holds and c.homology_equal


def test_frozen_tally():
    assert (sum(c.holds for c in lasso_identities(8)), len(lasso_identities(8))) == (10, 14)
    assert (sum(c.holds for c in lasso_identities(10)), len(lasso_identities(10))) == (16, 20)


def test_handle_swap():
    h = handle_swap(8)
    assert not h.literal_liftable
    assert h.certificate.replay()
    assert h.certificate.start.word == h.y_corrected and h.certificate.end.word == h.x
