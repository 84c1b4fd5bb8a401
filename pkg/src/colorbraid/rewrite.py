"""Colored braids modulo the local moves M and P, with replayable certificates.

A certificate is a list of elementary steps.  Each step is checked against the
colored braid it is applied to:

* isotopy steps (free cancellation/insertion, far commutation, three-letter
  braid relations) need no color condition;
* ``M_INSERT``/``M_DELETE`` add or remove ``b_i^{3e}`` where the running colors
  of strands i, i+1 interact (share exactly one label);
* ``P_INSERT``/``P_DELETE`` add or remove ``b_i^{2e}`` where they are disjoint.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator, Sequence

from .action import apply, is_liftable, step as color_step
from .braid import BraidWord, Letter, words_equal
from .covering import Coloring
from .perm import Transposition, disjoint, interact


class StepKind(str, Enum):
    FREE_CANCEL = "FREE_CANCEL"
    FREE_INSERT = "FREE_INSERT"
    FAR_COMM = "FAR_COMM"
    BRAID_REL = "BRAID_REL"
    M_INSERT = "M_INSERT"
    M_DELETE = "M_DELETE"
    P_INSERT = "P_INSERT"
    P_DELETE = "P_DELETE"


ISOTOPY = frozenset({StepKind.FREE_CANCEL, StepKind.FREE_INSERT, StepKind.FAR_COMM, StepKind.BRAID_REL})


class StepError(ValueError):
    """A step does not apply to the colored braid it was given."""


class PatternMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ColoredBraid:
    source: Coloring
    word: BraidWord

    def __post_init__(self):
        if self.word.strands != self.source.n:
            raise ValueError(f"word on {self.word.strands} strands over a coloring with {self.source.n} points")

    @property
    def target(self) -> Coloring:
        return apply(self.word, self.source)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return self.word.letters

    def colors_at(self, pos: int) -> tuple[Transposition, ...]:
        """Running colors just before letter ``pos``."""
        cur = list(self.source.colors)
        for i, e in self.word.letters[:pos]:
            cur = color_step(cur, i, e)
        return tuple(cur)

    def with_letters(self, letters: Sequence[Letter]) -> "ColoredBraid":
        return ColoredBraid(self.source, BraidWord(self.word.strands, tuple(letters)))

    def to_json(self) -> dict:
        return {"coloring": self.source.to_json(), "word": self.word.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "ColoredBraid":
        c = Coloring.from_json(obj["coloring"])
        return cls(c, BraidWord.from_json(c.n, obj["word"]))


@dataclass(frozen=True)
class RewriteStep:
    kind: StepKind
    pos: int
    i: int = 0
    exp: int = 1
    # replacement window of a BRAID_REL step
    letters: tuple[Letter, ...] = ()

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "pos": self.pos, "i": self.i, "exp": self.exp}
        if self.letters:
            out["to"] = [list(x) for x in self.letters]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "RewriteStep":
        try:
            kind = StepKind(obj["kind"])
        except ValueError as exc:
            raise StepError(f"unknown step kind {obj.get('kind')!r}") from exc
        to = tuple((int(i), int(e)) for i, e in obj.get("to", ()))
        return cls(kind, int(obj["pos"]), int(obj.get("i", 0)), int(obj.get("exp", 1)), to)

    def text(self) -> str:
        extra = f" -> {' '.join(f'b{i}^{e}' for i, e in self.letters)}" if self.letters else ""
        return f"{self.kind.value}@{self.pos} b{self.i}^{self.exp}{extra}"


# ---------------------------------------------------------------- braid relations

@lru_cache(maxsize=1)
def _braid_relation_table() -> dict[tuple[Letter, ...], tuple[tuple[Letter, ...], ...]]:
    """All equalities between distinct three-letter words in two adjacent generators.

    Computed once with the Artin oracle on three strands; the table is then
    shifted to any pair of adjacent indices.
    """
    letters = [(i, e) for i in (0, 1) for e in (1, -1)]
    words = [w for w in itertools.product(letters, repeat=3)
             if {i for i, _ in w} == {0, 1}
             and all(w[k] != (w[k + 1][0], -w[k + 1][1]) for k in range(2))]
    table: dict[tuple[Letter, ...], list[tuple[Letter, ...]]] = {}
    for a in words:
        for b in words:
            if a != b and words_equal(BraidWord(3, a), BraidWord(3, b)):
                table.setdefault(a, []).append(b)
    return {k: tuple(sorted(v)) for k, v in table.items()}


def braid_relation_targets(window: Sequence[Letter]) -> tuple[tuple[Letter, ...], ...]:
    if len(window) != 3:
        return ()
    lo = min(i for i, _ in window)
    if max(i for i, _ in window) != lo + 1:
        return ()
    key = tuple((i - lo, e) for i, e in window)
    return tuple(tuple((i + lo, e) for i, e in t) for t in _braid_relation_table().get(key, ()))


# ---------------------------------------------------------------- step application

def _check_index(cb: ColoredBraid, i: int) -> None:
    if not 0 <= i <= cb.word.strands - 2:
        raise StepError(f"generator index {i} out of range")


def apply_step(cb: ColoredBraid, st: RewriteStep) -> ColoredBraid:
    """Apply one step, raising StepError if it is not legal here."""
    w = list(cb.letters)
    L = len(w)
    p, k = st.pos, st.kind
    if k in (StepKind.FREE_INSERT, StepKind.M_INSERT, StepKind.P_INSERT):
        if not 0 <= p <= L:
            raise StepError(f"insert position {p} outside 0..{L}")
        _check_index(cb, st.i)
        if st.exp not in (1, -1):
            raise StepError("exponent must be +1 or -1")
        if k is StepKind.FREE_INSERT:
            block = [(st.i, st.exp), (st.i, -st.exp)]
        else:
            colors = cb.colors_at(p)
            x, y = colors[st.i], colors[st.i + 1]
            if k is StepKind.M_INSERT:
                if not interact(x, y):
                    raise StepError(f"M needs interacting colors, found {x.text()} {y.text()}")
                block = [(st.i, st.exp)] * 3
            else:
                if not disjoint(x, y):
                    raise StepError(f"P needs disjoint colors, found {x.text()} {y.text()}")
                block = [(st.i, st.exp)] * 2
        return cb.with_letters(w[:p] + block + w[p:])
    if k is StepKind.FREE_CANCEL:
        if not (0 <= p < L - 1 and w[p] == (st.i, st.exp) and w[p + 1] == (st.i, -st.exp)):
            raise StepError(f"no cancelling pair b{st.i}^{st.exp} at {p}")
        return cb.with_letters(w[:p] + w[p + 2:])
    if k is StepKind.FAR_COMM:
        if not (0 <= p < L - 1 and w[p] == (st.i, st.exp) and abs(w[p][0] - w[p + 1][0]) >= 2):
            raise StepError(f"no commuting pair starting with b{st.i}^{st.exp} at {p}")
        return cb.with_letters(w[:p] + [w[p + 1], w[p]] + w[p + 2:])
    if k is StepKind.BRAID_REL:
        if not 0 <= p <= L - 3:
            raise StepError(f"no three-letter window at {p}")
        if w[p] != (st.i, st.exp) or st.letters not in braid_relation_targets(w[p:p + 3]):
            raise StepError(f"window at {p} is not related to {st.letters}")
        return cb.with_letters(w[:p] + list(st.letters) + w[p + 3:])
    if k in (StepKind.M_DELETE, StepKind.P_DELETE):
        size = 3 if k is StepKind.M_DELETE else 2
        if not (0 <= p <= L - size and all(x == (st.i, st.exp) for x in w[p:p + size])):
            raise StepError(f"no b{st.i}^{size * st.exp} at {p}")
        colors = cb.colors_at(p)
        x, y = colors[st.i], colors[st.i + 1]
        ok = interact(x, y) if k is StepKind.M_DELETE else disjoint(x, y)
        if not ok:
            raise StepError(f"{k.value} with colors {x.text()} {y.text()}")
        return cb.with_letters(w[:p] + w[p + size:])
    raise StepError(f"unknown step kind {k}")


def inverse_step(before: ColoredBraid, st: RewriteStep) -> RewriteStep:
    """The step that undoes ``st`` (which was applied to ``before``)."""
    w = before.letters
    k, p = st.kind, st.pos
    if k is StepKind.FREE_INSERT:
        return RewriteStep(StepKind.FREE_CANCEL, p, st.i, st.exp)
    if k is StepKind.FREE_CANCEL:
        return RewriteStep(StepKind.FREE_INSERT, p, st.i, st.exp)
    if k is StepKind.M_INSERT:
        return RewriteStep(StepKind.M_DELETE, p, st.i, st.exp)
    if k is StepKind.M_DELETE:
        return RewriteStep(StepKind.M_INSERT, p, st.i, st.exp)
    if k is StepKind.P_INSERT:
        return RewriteStep(StepKind.P_DELETE, p, st.i, st.exp)
    if k is StepKind.P_DELETE:
        return RewriteStep(StepKind.P_INSERT, p, st.i, st.exp)
    if k is StepKind.FAR_COMM:
        i, e = w[p + 1]
        return RewriteStep(StepKind.FAR_COMM, p, i, e)
    if k is StepKind.BRAID_REL:
        i, e = st.letters[0]
        return RewriteStep(StepKind.BRAID_REL, p, i, e, tuple(w[p:p + 3]))
    raise StepError(f"unknown step kind {k}")


# ---------------------------------------------------------------- certificates

@dataclass
class RewriteCertificate:
    start: ColoredBraid
    steps: list[RewriteStep] = field(default_factory=list)
    end: ColoredBraid | None = None

    def __post_init__(self):
        if self.end is None:
            self.end = self.start

    def states(self) -> Iterator[ColoredBraid]:
        cur = self.start
        yield cur
        for st in self.steps:
            cur = apply_step(cur, st)
            yield cur

    def replay(self) -> bool:
        try:
            last = None
            for last in self.states():
                pass
        except StepError:
            return False
        return last == self.end

    def inverse(self) -> "RewriteCertificate":
        states = list(self.states())
        steps = [inverse_step(states[k + 1], self.steps[k]) for k in reversed(range(len(self.steps)))]
        return RewriteCertificate(self.end, steps, self.start)

    def then(self, other: "RewriteCertificate") -> "RewriteCertificate":
        if other.start != self.end:
            raise ValueError("certificates do not compose: end and start differ")
        return RewriteCertificate(self.start, self.steps + other.steps, other.end)

    def shifted(self, prefix: Sequence[Letter], suffix: Sequence[Letter] = ()) -> "RewriteCertificate":
        """The same steps acting inside ``prefix . word . suffix``.

        Only valid when the prefix returns the coloring to itself, so the
        color conditions of every step are unchanged.
        """
        src = self.start.source
        pre = BraidWord(src.n, tuple(prefix))
        if apply(pre, src) != src:
            raise ValueError("prefix must fix the source coloring")
        def wrap(cb: ColoredBraid) -> ColoredBraid:
            return cb.with_letters(tuple(prefix) + cb.letters + tuple(suffix))
        steps = [RewriteStep(s.kind, s.pos + len(prefix), s.i, s.exp, s.letters) for s in self.steps]
        return RewriteCertificate(wrap(self.start), steps, wrap(self.end))

    def uses_only(self, kinds: frozenset[StepKind]) -> bool:
        return all(s.kind in kinds for s in self.steps)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for s in self.steps:
            out[s.kind.value] = out.get(s.kind.value, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {"start": self.start.to_json(), "steps": [s.to_json() for s in self.steps],
                "end": self.end.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RewriteCertificate":
        try:
            start = ColoredBraid.from_json(obj["start"])
            end = ColoredBraid.from_json(obj["end"])
            steps = [RewriteStep.from_json(s) for s in obj["steps"]]
        except (KeyError, TypeError) as exc:
            raise StepError(f"malformed certificate: {exc}") from exc
        return cls(start, steps, end)


def replay(cert: RewriteCertificate) -> bool:
    return cert.replay()


class Builder:
    """Accumulate checked steps starting from a colored braid."""

    def __init__(self, start: ColoredBraid):
        self.start = start
        self.current = start
        self.steps: list[RewriteStep] = []

    def do(self, kind: StepKind, pos: int, i: int = 0, exp: int = 1,
           letters: Sequence[Letter] = ()) -> "Builder":
        st = RewriteStep(kind, pos, i, exp, tuple(letters))
        self.current = apply_step(self.current, st)
        self.steps.append(st)
        return self

    def extend(self, cert: RewriteCertificate) -> "Builder":
        if cert.start != self.current:
            raise ValueError("certificate does not start at the current state")
        self.steps.extend(cert.steps)
        self.current = cert.end
        return self

    def certificate(self) -> RewriteCertificate:
        return RewriteCertificate(self.start, list(self.steps), self.current)


# ---------------------------------------------------------------- applicable steps

def applicable(cb: ColoredBraid, at: int) -> list[RewriteStep]:
    """Every elementary step legal at letter position ``at``."""
    w = cb.letters
    L = len(w)
    if not 0 <= at <= L:
        raise ValueError(f"position {at} outside 0..{L}")
    out: list[RewriteStep] = []
    colors = cb.colors_at(at)
    for i in range(cb.word.strands - 1):
        for e in (1, -1):
            out.append(RewriteStep(StepKind.FREE_INSERT, at, i, e))
            if interact(colors[i], colors[i + 1]):
                out.append(RewriteStep(StepKind.M_INSERT, at, i, e))
            if disjoint(colors[i], colors[i + 1]):
                out.append(RewriteStep(StepKind.P_INSERT, at, i, e))
    if at < L:
        i, e = w[at]
        if at + 1 < L:
            if w[at + 1] == (i, -e):
                out.append(RewriteStep(StepKind.FREE_CANCEL, at, i, e))
            if abs(w[at + 1][0] - i) >= 2:
                out.append(RewriteStep(StepKind.FAR_COMM, at, i, e))
        if at + 2 < L:
            for t in braid_relation_targets(w[at:at + 3]):
                out.append(RewriteStep(StepKind.BRAID_REL, at, i, e, t))
        x, y = colors[i], colors[i + 1]
        if at + 3 <= L and all(l == (i, e) for l in w[at:at + 3]) and interact(x, y):
            out.append(RewriteStep(StepKind.M_DELETE, at, i, e))
        if at + 2 <= L and all(l == (i, e) for l in w[at:at + 2]) and disjoint(x, y):
            out.append(RewriteStep(StepKind.P_DELETE, at, i, e))
    return out


# ---------------------------------------------------------------- isotopy certificates

def _find_handle(w: Sequence[Letter]) -> tuple[int, int] | None:
    """The handle b_i^e u b_i^-e (u free of indices <= i) with leftmost right end."""
    for q, (i, s) in enumerate(w):
        p = q - 1
        while p >= 0 and w[p][0] > i:
            p -= 1
        if p >= 0 and w[p] == (i, -s):
            return p, q
    return None


def handle_reduce(start: ColoredBraid, max_steps: int = 2_000_000) -> RewriteCertificate:
    """Reduce the word by handle reduction, recording every elementary step.

    A handle's left end is pushed right through the handle: far letters are
    commuted past, and ``b_i^e b_{i+1}^d`` becomes
    ``b_{i+1}^-e b_i^d b_{i+1}^e b_i^e`` by a free insertion and a braid
    relation; the two ends then cancel.  The result is handle-free, hence empty
    exactly when the braid is trivial.
    """
    b = Builder(start)
    while True:
        h = _find_handle(b.current.letters)
        if h is None:
            return b.certificate()
        p, q = h
        i, e = b.current.letters[p]
        k = p
        while True:
            if len(b.steps) > max_steps:
                raise RuntimeError("handle reduction exceeded its step budget")
            w = b.current.letters
            j, d = w[k + 1]
            if j == i:
                b.do(StepKind.FREE_CANCEL, k, i, e)
                break
            if j >= i + 2:
                b.do(StepKind.FAR_COMM, k, i, e)
                k += 1
            else:
                b.do(StepKind.FREE_INSERT, k + 2, i, -e)
                b.do(StepKind.BRAID_REL, k, i, e, ((i + 1, -e), (i, d), (i + 1, e)))
                k += 3


def isotopy_certificate(start: ColoredBraid, target: BraidWord) -> RewriteCertificate:
    """Isotopy-only certificate from ``start`` to the same source with word ``target``.

    Append ``target^-1 target`` by free insertions, then handle-reduce the
    prefix ``word . target^-1`` to the empty word.
    """
    if not words_equal(start.word, target):
        raise ValueError("words are not equal as braids")
    b = Builder(start)
    L = len(start.letters)
    for k, (i, e) in enumerate(reversed(target.letters)):
        b.do(StepKind.FREE_INSERT, L + k, i, -e)
    mid = b.current
    split = L + len(target.letters)
    prefix = mid.with_letters(mid.letters[:split])
    red = handle_reduce(prefix)
    if red.end.letters:
        raise RuntimeError("handle reduction left a nonempty word for a trivial braid")
    b.extend(red.shifted((), mid.letters[split:]))
    return b.certificate()


def relator_product_certificate(source: Coloring, factors: Sequence[tuple[BraidWord, StepKind, int, int]]
                                ) -> RewriteCertificate:
    """Build ``prod g r g^-1`` from the empty word.

    Each factor is ``(g, kind, i, e)`` with kind M_INSERT or P_INSERT, placing
    ``b_i^{3e}`` or ``b_i^{2e}`` between ``g`` and ``g^-1``.
    """
    n = source.n
    b = Builder(ColoredBraid(source, BraidWord(n)))
    for g, kind, i, e in factors:
        base = len(b.current.letters)
        for k, (j, f) in enumerate(g.letters):
            b.do(StepKind.FREE_INSERT, base + k, j, f)
        b.do(kind, base + len(g.letters), i, e)
    return b.certificate()


def local_reduce(start: ColoredBraid, max_steps: int = 100_000) -> RewriteCertificate:
    """Greedy shortening by cancellations and local moves, left to right.

    Repeats until nothing applies: cancel ``x x^-1``; delete ``b_i^{2e}`` on
    disjoint colors (P); delete ``b_i^{3e}`` on interacting colors (M); and
    rewrite ``b_i^{2e}`` on interacting colors as ``b_i^-e`` (an M insertion
    followed by two cancellations).
    """
    b = Builder(start)
    while len(b.steps) < max_steps:
        w = b.current.letters
        for p in range(len(w) - 1):
            if w[p + 1] == (w[p][0], -w[p][1]):
                b.do(StepKind.FREE_CANCEL, p, *w[p])
                break
        else:
            for p in range(len(w) - 1):
                if w[p] != w[p + 1]:
                    continue
                i, e = w[p]
                colors = b.current.colors_at(p)
                if disjoint(colors[i], colors[i + 1]):
                    b.do(StepKind.P_DELETE, p, i, e)
                    break
                if interact(colors[i], colors[i + 1]):
                    if p + 2 < len(w) and w[p + 2] == w[p]:
                        b.do(StepKind.M_DELETE, p, i, e)
                    else:
                        b.do(StepKind.M_INSERT, p + 2, i, -e)
                        b.do(StepKind.FREE_CANCEL, p + 1, i, e)
                        b.do(StepKind.FREE_CANCEL, p, i, e)
                    break
            else:
                return b.certificate()
    return b.certificate()


def certify_equal(cb1: ColoredBraid, cb2: ColoredBraid) -> RewriteCertificate | None:
    """Cheap certificate attempt: locally reduce both sides, then join by isotopy."""
    if cb1.source != cb2.source:
        raise ValueError("colored braids must share their source coloring")
    r1, r2 = local_reduce(cb1), local_reduce(cb2)
    if not words_equal(r1.end.word, r2.end.word):
        return None
    return r1.then(isotopy_certificate(r1.end, r2.end.word)).then(r2.inverse())


# ---------------------------------------------------------------- circumcision

def circumcision(cb: ColoredBraid, at: int) -> RewriteCertificate:
    """Braid-level circumcision at letter ``at``.

    Pattern: ``b_{a+1}^e b_a^2e b_{a+1}^e`` with colors ``x, x, y`` on strands
    a, a+1, a+2 and y interacting with x: the y strand encircles the two
    parallel x strands, which leave it recolored by conjugation with y.  Two M
    steps, one inside each clasp, turn the encircling pattern into
    ``b_{a+1}^e b_a^-e b_{a+1}^-2e``.
    """
    w = cb.letters
    if at + 4 > len(w):
        raise PatternMismatch("window runs past the end of the word")
    (i0, e), (a, e1), (a2, e2), (i3, e3) = w[at:at + 4]
    if not (i0 == i3 == a + 1 and a == a2 and e == e1 == e2 == e3):
        raise PatternMismatch("expected b_{a+1}^e b_a^2e b_{a+1}^e")
    colors = cb.colors_at(at)
    x, x2, y = colors[a], colors[a + 1], colors[a + 2]
    if x != x2:
        raise PatternMismatch("the two encircled strands must carry the same color")
    if not interact(x, y):
        raise PatternMismatch(f"encircling color {y.text()} must interact with {x.text()}")
    b = Builder(cb)
    b.do(StepKind.M_INSERT, at + 3, a, -e)
    b.do(StepKind.FREE_CANCEL, at + 2, a, e)
    b.do(StepKind.FREE_CANCEL, at + 1, a, e)
    b.do(StepKind.M_INSERT, at + 3, a + 1, -e)
    b.do(StepKind.FREE_CANCEL, at + 2, a + 1, e)
    return b.certificate()


# ---------------------------------------------------------------- search

@dataclass(frozen=True)
class Budget:
    depth: int = 24
    length: int = 64
    states: int = 10_000_000

    @classmethod
    def from_env(cls, **overrides) -> "Budget":
        vals = {"depth": int(os.environ.get("COLORBRAID_MAX_DEPTH", cls.depth)),
                "length": int(os.environ.get("COLORBRAID_MAX_LENGTH", cls.length)),
                "states": int(os.environ.get("COLORBRAID_MAX_STATES", cls.states))}
        vals.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**vals)


class Unknown:
    """Search gave up within its budget; not a proof of inequivalence."""

    def __init__(self, reason: str, explored: int):
        self.reason = reason
        self.explored = explored

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"UNKNOWN({self.reason}, explored={self.explored})"


UNKNOWN = Unknown


def _neighbors(cb: ColoredBraid, max_len: int) -> Iterator[tuple[RewriteStep, ColoredBraid]]:
    L = len(cb.letters)
    for at in range(L + 1):
        for st in applicable(cb, at):
            grow = {StepKind.FREE_INSERT: 2, StepKind.M_INSERT: 3, StepKind.P_INSERT: 2}.get(st.kind, 0)
            if L + grow > max_len:
                continue
            yield st, apply_step(cb, st)


def equivalent(cb1: ColoredBraid, cb2: ColoredBraid, budget: Budget | None = None
               ) -> RewriteCertificate | Unknown:
    """Bidirectional breadth-first search for a certificate from cb1 to cb2.

    Layers are expanded alternately from the smaller frontier, and neighbors are
    generated in a fixed order, so the result only depends on the inputs.
    """
    budget = budget or Budget()
    if cb1.source != cb2.source or cb1.target != cb2.target:
        raise ValueError("colored braids must share source and target colorings")
    if cb1 == cb2:
        return RewriteCertificate(cb1, [], cb2)
    parents = [{cb1.letters: None}, {cb2.letters: None}]
    frontiers = [[cb1], [cb2]]
    depths = [0, 0]
    explored = 2
    while depths[0] + depths[1] < budget.depth and frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        other = 1 - side
        nxt = []
        for cur in frontiers[side]:
            for st, new in _neighbors(cur, budget.length):
                key = new.letters
                if key in parents[side]:
                    continue
                parents[side][key] = (cur, st)
                explored += 1
                if key in parents[other]:
                    return _join(cb1, cb2, parents, key)
                if explored >= budget.states:
                    return Unknown("state budget exhausted", explored)
                nxt.append(new)
        frontiers[side] = nxt
        depths[side] += 1
    return Unknown("depth budget exhausted", explored)


def _path(parents: dict, key) -> list[tuple[ColoredBraid, RewriteStep]]:
    out = []
    while parents[key] is not None:
        prev, st = parents[key]
        out.append((prev, st))
        key = prev.letters
    out.reverse()
    return out


def _join(cb1, cb2, parents, key) -> RewriteCertificate:
    forward = [st for _, st in _path(parents[0], key)]
    back = _path(parents[1], key)  # steps from cb2 towards the meeting point
    cert = RewriteCertificate(cb1, forward, None)
    states = list(cert.states())
    cert.end = states[-1]
    mid = RewriteCertificate(cb2, [st for _, st in back], cert.end)
    full = cert.then(mid.inverse())
    assert full.replay()
    return full


def in_reduced_kernel(w: BraidWord, c: Coloring, budget: Budget | None = None
                      ) -> RewriteCertificate | Unknown:
    if not is_liftable(w, c):
        raise ValueError(f"{w.text()} is not liftable over {c.text()}")
    return equivalent(ColoredBraid(c, w), ColoredBraid(c, BraidWord(w.strands)), budget)
