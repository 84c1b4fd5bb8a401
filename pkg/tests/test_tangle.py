from __future__ import annotations

import json

import pytest

from colorbraid.braid import gen
from colorbraid.catalog import shipped_certificate
from colorbraid.covering import rho_I
from colorbraid.perm import T
from colorbraid.tangle import (Cap, ColoredTangle, Cross, Cup, Rule, TangleBuilder, TangleCertificate, TangleError,
                               TangleStep, check_step, encircle_all, search)

CONTEXT = rho_I(8, [2, 3]).colors


def empty8() -> ColoredTangle:
    return ColoredTangle(4, CONTEXT, ())


def test_stabilize_and_flip_recolor_the_top():
    b = TangleBuilder(empty8())
    b.replace(Rule.STABILIZE, 0, 0, (Cap(8, T(4, 5)), Cup(8)))
    assert b.current.degree == 5
    b.replace(Rule.FLIP, 0, 2, encircle_all(8, T(4, 5), 1))
    top = b.current.source
    assert top == (T(1, 2), T(1, 2), T(1, 5), T(1, 5)) + (T(2, 3),) * 4
    assert b.current.target == CONTEXT
    cert = b.certificate()
    assert cert.replay() and cert.inverse().replay()


def test_stabilize_needs_the_new_sheet():
    with pytest.raises(TangleError):
        check_step(empty8(), TangleStep(Rule.STABILIZE, 0, (), (Cap(8, T(3, 4)), Cup(8))))


def test_illegal_p_step():
    tg = ColoredTangle.from_braid(rho_I(8, [2, 3]), gen(8, 2, 2))
    with pytest.raises(TangleError):
        check_step(tg, TangleStep(Rule.P, 0, (Cross(2, 1), Cross(2, 1)), ()))


def test_zigzag_and_search():
    c = ColoredTangle(4, (T(1, 2), T(1, 2)), (Cap(2, T(1, 2)), Cup(2)))
    goal = ColoredTangle(4, c.source, ())
    assert search(c, goal, max_states=2_000) is None  # a closed circle needs STABILIZE
    kink = ColoredTangle(4, (T(1, 2), T(3, 4)), (Cross(0, 1), Cross(0, 1)))
    cert = search(kink, ColoredTangle(4, kink.source, ()))
    assert cert is not None and cert.replay()


@pytest.mark.parametrize("name", ["derivation_I", "derivation_V", "commutator_d4_b4"])
def test_shipped_certificates_replay(name):
    cert = shipped_certificate(name)
    assert cert.replay() and cert.first_failure() is None
    again = TangleCertificate.from_json(json.loads(json.dumps(cert.to_json())))
    assert again.replay() and again.end == cert.end


def test_tampered_certificate_fails():
    cert = shipped_certificate("derivation_I")
    steps = list(cert.steps)
    steps[5], steps[6] = steps[6], steps[5]
    bad = TangleCertificate(cert.start, steps, cert.end)
    assert not bad.replay() and bad.first_failure() is not None
    truncated = TangleCertificate(cert.start, list(cert.steps[:-1]), cert.end)
    assert not truncated.replay()
