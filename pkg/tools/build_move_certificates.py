"""Regenerate the shipped tangle certificates for the non-local moves.

Run from the repository root::

    python3 tools/build_move_certificates.py

Each certificate is replayed before it is written to ``src/colorbraid/data``.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

from colorbraid.braid import delta4, gen
from colorbraid.perm import T
from colorbraid.tangle import (ISOTOPY_RULES, Cap, ColoredTangle, Cross, Cup, Rule, TangleBuilder,
                               TangleCertificate, TangleError, encircle_all, search)

DATA = Path(__file__).resolve().parents[1] / "src" / "colorbraid" / "data"


def shifted(a, ds):
    if isinstance(a, Cross):
        return Cross(a.i + ds, a.e)
    if isinstance(a, Cap):
        return Cap(a.i + ds, a.t)
    return Cup(a.i + ds)


def embed(b: TangleBuilder, cert: TangleCertificate, pos: int, ds: int) -> None:
    """Replay a local certificate at letter offset ``pos`` and strand offset ``ds``."""
    for st in cert.steps:
        b.replace(st.rule, st.pos + pos, len(st.old), [shifted(a, ds) for a in st.new])


def drop_right(b: TangleBuilder, s: int, e: int) -> None:
    """The circle starting at letter ``s`` lets go of its rightmost enclosed strand."""
    m = b.current.letters[s].i
    b.replace(Rule.P, s + 2, 0, [Cross(m, e), Cross(m, e)])
    t = b.current.colors_at(s + 3)[m - 1]
    b.replace(Rule.SLIDE, s, 3, [Cap(m - 1, t)])
    # letters now: cap, x_m, x_{m-2} .. x_0 x_0 .. x_{m-2}, x_{m-1}, cup_m
    for k in range(2 * (m - 1)):
        p = s + 1 + k
        a, c = b.current.letters[p], b.current.letters[p + 1]
        b.replace(Rule.COMMUTE, p, 2, [c, a])
    p = s + 2 * (m - 1) + 1
    b.replace(Rule.SLIDE, p, 3, [Cup(m - 1)])


def drop_left(b: TangleBuilder, s: int) -> None:
    """The circle starting at letter ``s`` lets go of its leftmost enclosed strand."""
    k = s + 1
    while b.current.letters[k] != b.current.letters[k + 1]:
        k += 1
    b.replace(Rule.P, k, 2, [])


def push_cap(b: TangleBuilder) -> None:
    """Move the last cap to the bottom; crossings it passes go above it or vanish."""
    c = max(k for k, a in enumerate(b.current.letters) if isinstance(a, Cap))
    while c + 1 < len(b.current.letters):
        letters = b.current.letters
        cap, x = letters[c], letters[c + 1]
        i = cap.i
        y = letters[c + 2] if c + 2 < len(letters) else None
        if x.i == i:
            b.replace(Rule.KINK, c, 2, [cap])
        elif abs(x.i - i) >= 2:
            b.replace(Rule.COMMUTE, c, 2, [Cross(x.i - 2, x.e) if x.i > i else x, cap])
            c += 1
        elif y == Cross(i, x.e):
            t = b.current.colors_at(c + 3)[x.i]
            b.replace(Rule.SLIDE, c, 3, [Cap(x.i, t)])
        else:
            sys.exit(f"cap is hooked: {b.current.text()}")


def clear_braid(b: TangleBuilder, lo: int, hi: int) -> None:
    """Remove M triples, P pairs and cancelling pairs from letters lo..hi until none is left."""
    while hi > lo:
        letters = b.current.letters
        for k in range(lo, hi):
            x = letters[k]
            if k + 2 < hi and letters[k + 1] == x and letters[k + 2] == x:
                try:
                    b.replace(Rule.M, k, 3, [])
                    hi -= 3
                    break
                except TangleError:
                    pass
            if k + 1 < hi and letters[k + 1] == x:
                try:
                    b.replace(Rule.P, k, 2, [])
                    hi -= 2
                    break
                except TangleError:
                    pass
            if k + 1 < hi and letters[k + 1] == Cross(x.i, -x.e):
                b.replace(Rule.FREE, k, 2, [])
                hi -= 2
                break
        else:
            sys.exit(f"braid left over: {b.current.text()}")


def circumcision(e: int = 1) -> TangleCertificate:
    """Two (15) strands through a (45) circle become a cup over a (14) cap."""
    start = ColoredTangle(5, (T(1, 5), T(1, 5)), encircle_all(2, T(4, 5), e))
    goal = ColoredTangle(5, (T(1, 5), T(1, 5)), (Cup(0), Cap(0, T(1, 4))))
    cert = search(start, goal, ISOTOPY_RULES | {Rule.M}, max_len=8, max_strands=4, max_states=2_000_000)
    if cert is None:
        sys.exit("circumcision search failed")
    return cert


def context(n: int) -> tuple:
    return (T(1, 2), T(1, 2), T(1, 4), T(1, 4)) + (T(2, 3),) * (n - 4)


def prepare(n: int, lhs: tuple, circ: TangleCertificate) -> TangleBuilder:
    """Stabilize, flip, shrink and circumcise above ``lhs``; the lhs is untouched."""
    b = TangleBuilder(ColoredTangle(4, context(n), lhs))
    b.note("add a trivial sheet: split circle colored (45)")
    b.replace(Rule.STABILIZE, 0, 0, [Cap(n, T(4, 5)), Cup(n)])
    b.note("slide the circle over the top; it now encircles every strand")
    b.replace(Rule.FLIP, 0, 2, encircle_all(n, T(4, 5), 1))
    b.note("P moves: the circle lets go of the (23) strands")
    for _ in range(n - 4):
        drop_right(b, 0, 1)
    b.note("P moves: the circle lets go of the (12) strands")
    for _ in range(2):
        drop_left(b, 0)
    b.note("circumcision of the two (15) strands")
    embed(b, circ, 0, 2)
    return b


def derive(n: int, lhs: tuple, circ: TangleCertificate) -> TangleCertificate:
    """lhs over the standard n-strand context to the empty tangle."""
    full = prepare(n, lhs, circ)
    empty = prepare(n, (), circ)
    full.note("push the (14) cap through the lhs")
    push_cap(full)
    full.note("cancel what the cap left above it")
    top = next(k for k, a in enumerate(full.current.letters) if isinstance(a, Cup))
    cap = max(k for k, a in enumerate(full.current.letters) if isinstance(a, Cap))
    clear_braid(full, top + 1, cap)
    if full.current != empty.current:
        sys.exit(f"did not reach the circumcised empty tangle: {full.current.text()}")
    full.note("undo the circumcision, the shrinking, the slide over the top and the extra sheet")
    full.extend(empty.certificate().inverse())
    return full.certificate()


def main() -> None:
    circ = circumcision()
    def letters(w):
        return tuple(Cross(i, e) for i, e in w.letters)
    d4, b4 = delta4(6), gen(6, 4)
    certs = {
        "derivation_I": derive(8, (Cross(2, 1),), circ),
        "derivation_V": derive(8, letters(delta4(8) * gen(8, 4, -1)), circ),
        "commutator_d4_b4": derive(6, letters(d4 * b4 * d4.inverse() * b4.inverse()), circ),
    }
    for name, cert in certs.items():
        if not cert.replay():
            sys.exit(f"{name}: {cert.first_failure()}")
        path = DATA / f"{name}.json"
        path.write_text(json.dumps(cert.to_json(), indent=1) + "\n")
        print(f"{name}: {len(cert.steps)} steps {cert.counts()}")


if __name__ == "__main__":
    main()
