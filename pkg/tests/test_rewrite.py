from __future__ import annotations

import pytest

from colorbraid.braid import BraidWord, delta4, gen
from colorbraid.covering import Coloring, rho3, rho_I
from colorbraid.perm import T
from colorbraid.rewrite import (Budget, ColoredBraid, PatternMismatch, RewriteCertificate, RewriteStep, StepError,
                                StepKind, Unknown, applicable, apply_step, circumcision, equivalent, handle_reduce,
                                in_reduced_kernel, isotopy_certificate, replay)


def kinds_at(c: Coloring, i: int) -> set[StepKind]:
    cb = ColoredBraid(c, BraidWord(c.n))
    return {st.kind for st in applicable(cb, 0) if st.i == i}


def test_applicability_by_colors():
    assert StepKind.M_INSERT in kinds_at(Coloring(4, (T(1, 2), T(2, 3))), 0)
    assert StepKind.P_INSERT in kinds_at(Coloring(4, (T(1, 2), T(3, 4))), 0)
    same = kinds_at(Coloring(4, (T(1, 2), T(1, 2))), 0)
    assert StepKind.M_INSERT not in same and StepKind.P_INSERT not in same


def test_replay_basics():
    cb = ColoredBraid(Coloring(4, (T(1, 2), T(3, 4))), gen(2, 0, 2))
    assert replay(RewriteCertificate(cb, [], cb))
    step = RewriteStep(StepKind.P_DELETE, 0, 0, 1)
    end = apply_step(cb, step)
    assert end.letters == ()
    assert replay(RewriteCertificate(cb, [step], end))
    bad = RewriteStep(StepKind.M_DELETE, 0, 0, 1)
    with pytest.raises(StepError):
        apply_step(ColoredBraid(cb.source, gen(2, 0, 3)), bad)
    assert not replay(RewriteCertificate(cb, [bad], end))


def test_certificate_json_round_trip():
    cb = ColoredBraid(rho_I(6, [2, 3]), gen(6, 3, 2))
    cert = equivalent(cb, ColoredBraid(cb.source, BraidWord(6)))
    again = RewriteCertificate.from_json(cert.to_json())
    assert again.steps == cert.steps and replay(again)


def test_search_examples():
    m = in_reduced_kernel(gen(6, 1, 3), rho3(6))
    assert not isinstance(m, Unknown) and replay(m)
    p = in_reduced_kernel(gen(6, 3, 2), rho_I(6, [2, 3]))
    assert not isinstance(p, Unknown) and replay(p)


def test_search_budget_gives_unknown():
    c = rho_I(6, [2, 3])
    d4, b4 = delta4(6), gen(6, 4)
    res = in_reduced_kernel(d4.inverse() * b4.inverse() * d4 * b4, c, Budget(depth=4, length=60, states=2_000))
    assert isinstance(res, Unknown) and not res


def test_not_liftable_rejected():
    with pytest.raises(ValueError):
        in_reduced_kernel(gen(6, 1), rho_I(6, [2, 3]))


def test_isotopy_certificate():
    n = 6
    start = ColoredBraid(rho_I(n, [2, 3]), gen(n, 2) * gen(n, 3) * gen(n, 2))
    cert = isotopy_certificate(start, gen(n, 3) * gen(n, 2) * gen(n, 3))
    assert replay(cert) and cert.uses_only(frozenset({StepKind.FREE_CANCEL, StepKind.FREE_INSERT,
                                                      StepKind.FAR_COMM, StepKind.BRAID_REL}))
    with pytest.raises(ValueError):
        isotopy_certificate(start, gen(n, 2))


def test_handle_reduce_trivial_word():
    n = 5
    w = gen(n, 1) * gen(n, 2) * gen(n, 1) * (gen(n, 2) * gen(n, 1) * gen(n, 2)).inverse()
    cert = handle_reduce(ColoredBraid(Coloring(4, (T(1, 2),) * n), w))
    assert cert.end.letters == () and replay(cert)


def test_circumcision():
    n = 3
    c = Coloring(4, (T(1, 2), T(1, 2), T(2, 3)))
    w = BraidWord(n, ((1, 1), (0, 1), (0, 1), (1, 1)))
    cert = circumcision(ColoredBraid(c, w), 0)
    assert len(cert.steps) <= 8 and replay(cert)
    assert cert.end.letters == ((1, 1), (0, -1), (1, -1), (1, -1))
    assert cert.end.target == cert.start.target
    with pytest.raises(PatternMismatch):
        circumcision(ColoredBraid(Coloring(4, (T(1, 2), T(1, 2), T(1, 2))), w), 0)
