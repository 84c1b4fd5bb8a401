"""Colored tangles: braid words with caps and cups, and local moves on them.

A tangle word reads top to bottom.  Its letters are

* ``Cross(i, e)``: the crossing b_i^e between strands i and i+1;
* ``Cap(i, t)``: two new strands at positions i, i+1, both colored t;
* ``Cup(i)``: strands i and i+1 end; their colors must agree.

Moves are local window replacements.  Each replacement is checked against a
rule and against the running colors; every rule leaves the colors below the
window unchanged.  Besides isotopy the rules are the moves M and P, adding or
removing a trivial sheet (a split circle colored by a transposition into a
new sheet) and sliding such a circle over the top of the whole diagram.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence, Union

from .action import step as color_step
from .braid import BraidWord
from .covering import Coloring
from .perm import T, Transposition, disjoint, interact
from .rewrite import braid_relation_targets


class TangleError(ValueError):
    """A tangle word or a move on it is not valid."""


@dataclass(frozen=True)
class Cross:
    i: int
    e: int

    def to_json(self) -> list:
        return ["x", self.i, self.e]

    def text(self) -> str:
        return f"b{self.i}" + ("" if self.e == 1 else "^-1")


@dataclass(frozen=True)
class Cap:
    i: int
    t: Transposition

    def to_json(self) -> list:
        return ["cap", self.i, [self.t.a, self.t.b]]

    def text(self) -> str:
        return f"cap{self.i}{self.t.text()}"


@dataclass(frozen=True)
class Cup:
    i: int

    def to_json(self) -> list:
        return ["cup", self.i]

    def text(self) -> str:
        return f"cup{self.i}"


Letter = Union[Cross, Cap, Cup]


def letter_from_json(obj: Sequence) -> Letter:
    try:
        tag = obj[0]
        if tag == "x":
            return Cross(int(obj[1]), int(obj[2]))
        if tag == "cap":
            return Cap(int(obj[1]), T(*obj[2]))
        if tag == "cup":
            return Cup(int(obj[1]))
    except (IndexError, TypeError, ValueError) as exc:
        raise TangleError(f"malformed tangle letter {obj!r}") from exc
    raise TangleError(f"unknown tangle letter {obj!r}")


def _span(a: Letter) -> tuple[int, int, int]:
    """(position, strands consumed, strands produced)."""
    if isinstance(a, Cross):
        return a.i, 2, 2
    if isinstance(a, Cap):
        return a.i, 0, 2
    return a.i, 2, 0


def _shift(a: Letter, d: int) -> Letter:
    if isinstance(a, Cross):
        return Cross(a.i + d, a.e)
    if isinstance(a, Cap):
        return Cap(a.i + d, a.t)
    return Cup(a.i + d)


def advance(colors: Sequence[Transposition], a: Letter) -> list[Transposition]:
    """Colors after one letter; raises TangleError if the letter does not fit."""
    c = list(colors)
    m = len(c)
    if isinstance(a, Cross):
        if a.e not in (1, -1) or not 0 <= a.i <= m - 2:
            raise TangleError(f"{a.text()} does not fit {m} strands")
        return color_step(c, a.i, a.e)
    if isinstance(a, Cap):
        if not 0 <= a.i <= m:
            raise TangleError(f"{a.text()} does not fit {m} strands")
        return c[:a.i] + [a.t, a.t] + c[a.i:]
    if not 0 <= a.i <= m - 2:
        raise TangleError(f"{a.text()} does not fit {m} strands")
    if c[a.i] != c[a.i + 1]:
        raise TangleError(f"cup{a.i} joins strands colored {c[a.i].text()} and {c[a.i + 1].text()}")
    return c[:a.i] + c[a.i + 2:]


@dataclass(frozen=True)
class ColoredTangle:
    degree: int
    source: tuple[Transposition, ...]
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for t in self.source:
            if t.b > self.degree:
                raise TangleError(f"{t.text()} is not a transposition of S_{self.degree}")
        self.levels()

    @classmethod
    def from_braid(cls, c: Coloring, w: BraidWord) -> "ColoredTangle":
        return cls(c.degree, c.colors, tuple(Cross(i, e) for i, e in w.letters))

    def levels(self) -> list[list[Transposition]]:
        """Colors above each letter and below the last one."""
        cur = list(self.source)
        out = [cur]
        for a in self.letters:
            cur = advance(cur, a)
            if any(t.b > self.degree for t in cur):
                raise TangleError(f"color outside S_{self.degree}")
            out.append(cur)
        return out

    @property
    def target(self) -> tuple[Transposition, ...]:
        return tuple(self.levels()[-1])

    def colors_at(self, pos: int) -> list[Transposition]:
        cur = list(self.source)
        for a in self.letters[:pos]:
            cur = advance(cur, a)
        return cur

    def with_letters(self, letters: Sequence[Letter]) -> "ColoredTangle":
        return ColoredTangle(self.degree, self.source, tuple(letters))

    def is_braid(self) -> bool:
        return all(isinstance(a, Cross) for a in self.letters)

    def text(self) -> str:
        head = f"d={self.degree}: " + "".join(t.text() for t in self.source)
        return head + " | " + (" ".join(a.text() for a in self.letters) or "1")

    def to_json(self) -> dict:
        return {"degree": self.degree, "source": [[t.a, t.b] for t in self.source],
                "letters": [a.to_json() for a in self.letters]}

    @classmethod
    def from_json(cls, obj: dict) -> "ColoredTangle":
        try:
            return cls(int(obj["degree"]), tuple(T(a, b) for a, b in obj["source"]),
                       tuple(letter_from_json(x) for x in obj["letters"]))
        except (KeyError, TypeError) as exc:
            raise TangleError(f"malformed tangle: {exc}") from exc


# ---------------------------------------------------------------- rules

class Rule(str, Enum):
    FREE = "FREE"            # b b^-1 <-> empty
    COMMUTE = "COMMUTE"      # letters on disjoint strands change order
    BRAID = "BRAID"          # three-letter braid relations
    KINK = "KINK"            # cap followed by a crossing of its own strands, and upside down
    SLIDE = "SLIDE"          # a strand passes entirely over or under a cap or a cup
    ZIGZAG = "ZIGZAG"        # cap next to a cup straightens to a plain strand
    M = "M"                  # b_i^{3e} on interacting colors
    P = "P"                  # b_i^{2e} on disjoint colors
    STABILIZE = "STABILIZE"  # split circle colored (a, d+1); degree d <-> d+1
    FLIP = "FLIP"            # split circle at the top <-> circle around all strands


ISOTOPY_RULES = frozenset({Rule.FREE, Rule.COMMUTE, Rule.BRAID, Rule.KINK, Rule.SLIDE, Rule.ZIGZAG})
MOVE_RULES = ISOTOPY_RULES | {Rule.M, Rule.P, Rule.STABILIZE, Rule.FLIP}


@dataclass(frozen=True)
class TangleStep:
    rule: Rule
    pos: int
    old: tuple[Letter, ...]
    new: tuple[Letter, ...]

    def inverse(self) -> "TangleStep":
        return TangleStep(self.rule, self.pos, self.new, self.old)

    def to_json(self) -> dict:
        return {"rule": self.rule.value, "pos": self.pos,
                "old": [a.to_json() for a in self.old], "new": [a.to_json() for a in self.new]}

    @classmethod
    def from_json(cls, obj: dict) -> "TangleStep":
        try:
            rule = Rule(obj["rule"])
            return cls(rule, int(obj["pos"]), tuple(letter_from_json(x) for x in obj["old"]),
                       tuple(letter_from_json(x) for x in obj["new"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise TangleError(f"malformed tangle step {obj!r}") from exc

    def text(self) -> str:
        def show(ls):
            return " ".join(a.text() for a in ls) or "1"
        return f"{self.rule.value}@{self.pos}: {show(self.old)} -> {show(self.new)}"


def _commuted(a: Letter, b: Letter) -> tuple[Letter, Letter] | None:
    """``b', a'`` equal to ``a, b`` when the two letters touch disjoint strands."""
    ia, ina, outa = _span(a)
    ib, inb, outb = _span(b)
    if ib + inb <= ia:
        return b, _shift(a, outb - inb)
    if ib >= ia + outa:
        return _shift(b, ina - outa), a
    return None


def _one_way(rule: Rule, old: tuple, new: tuple, colors: list[Transposition]) -> bool:
    """Whether ``old -> new`` is an instance of ``rule`` in its stated direction."""
    if rule is Rule.FREE:
        return (not new and len(old) == 2 and all(isinstance(a, Cross) for a in old)
                and old[0].i == old[1].i and old[0].e == -old[1].e)
    if rule is Rule.COMMUTE:
        return len(old) == 2 and _commuted(*old) == new
    if rule is Rule.BRAID:
        if not (len(old) == 3 and len(new) == 3 and all(isinstance(a, Cross) for a in old + new)):
            return False
        return tuple((a.i, a.e) for a in new) in braid_relation_targets([(a.i, a.e) for a in old])
    if rule is Rule.KINK:
        if len(old) != 2 or len(new) != 1:
            return False
        a, b = old
        if isinstance(a, Cap) and isinstance(b, Cross):
            return b.i == a.i and new[0] == a
        if isinstance(a, Cross) and isinstance(b, Cup):
            return a.i == b.i and new[0] == b
        return False
    if rule is Rule.SLIDE:
        if len(old) != 3 or len(new) != 1:
            return False
        a, b, c = old
        n0 = new[0]
        if isinstance(a, Cap) and isinstance(b, Cross) and isinstance(c, Cross) and b.e == c.e:
            i = a.i
            if (b.i, c.i) == (i + 1, i) and isinstance(n0, Cap) and n0.i == i + 1:
                return True
            if (b.i, c.i) == (i - 1, i) and isinstance(n0, Cap) and n0.i == i - 1:
                return True
            return False
        if isinstance(a, Cross) and isinstance(b, Cross) and isinstance(c, Cup) and a.e == b.e:
            if (a.i, b.i) == (c.i, c.i + 1) and n0 == Cup(c.i + 1):
                return True
            if (a.i, b.i) == (c.i, c.i - 1) and n0 == Cup(c.i - 1):
                return True
        return False
    if rule in (Rule.M, Rule.P):
        size = 3 if rule is Rule.M else 2
        if old or len(new) != size or not all(isinstance(a, Cross) for a in new):
            return False
        if len({(a.i, a.e) for a in new}) != 1:
            return False
        i = new[0].i
        if not 0 <= i <= len(colors) - 2:
            return False
        x, y = colors[i], colors[i + 1]
        return interact(x, y) if rule is Rule.M else disjoint(x, y)
    return False


def _zigzag_ok(old: tuple) -> bool:
    if len(old) != 2:
        return False
    a, b = old
    # cap(i+1) then cup(i), or cap(i) then cup(i+1)
    return isinstance(a, Cap) and isinstance(b, Cup) and (b.i == a.i - 1 or b.i == a.i + 1)


def check_step(tg: ColoredTangle, st: TangleStep) -> ColoredTangle:
    """Apply ``st`` to ``tg`` after checking it; raises TangleError."""
    w = list(tg.letters)
    p = st.pos
    if not 0 <= p <= len(w) - len(st.old) or tuple(w[p:p + len(st.old)]) != st.old:
        raise TangleError(f"{st.text()}: window does not match")
    if st.rule is Rule.STABILIZE:
        return _stabilize(tg, st)
    if st.rule is Rule.FLIP:
        return _flip(tg, st)
    colors = tg.colors_at(p)
    if st.rule is Rule.ZIGZAG:
        ok = (_zigzag_ok(st.old) and not st.new) or (_zigzag_ok(st.new) and not st.old)
    else:
        ok = _one_way(st.rule, st.old, st.new, colors) or _one_way(st.rule, st.new, st.old, colors)
    if not ok:
        raise TangleError(f"{st.text()}: not an instance of {st.rule.value}")
    before = colors
    for a in st.old:
        before = advance(before, a)
    after = colors
    for a in st.new:
        after = advance(after, a)
    if before != after:
        raise TangleError(f"{st.text()}: colors below the window change")
    return tg.with_letters(w[:p] + list(st.new) + w[p + len(st.old):])


def _uses_label(tg: ColoredTangle, label: int) -> bool:
    return any(label in (t.a, t.b) for level in tg.levels() for t in level)


def _stabilize(tg: ColoredTangle, st: TangleStep) -> ColoredTangle:
    """A split circle colored (a, d+1) appears (degree d -> d+1) or disappears."""
    grow = not st.old
    circle = st.new if grow else st.old
    if (grow and st.new == ()) or (not grow and st.new != ()):
        raise TangleError("STABILIZE inserts or removes exactly one circle")
    if not (len(circle) == 2 and isinstance(circle[0], Cap) and circle[1] == Cup(circle[0].i)):
        raise TangleError("STABILIZE needs cap_i directly followed by cup_i")
    t = circle[0].t
    w = list(tg.letters)
    p = st.pos
    if grow:
        d = tg.degree + 1
        if t.b != d:
            raise TangleError(f"a new trivial sheet must be labeled {d}")
        return ColoredTangle(d, tg.source, tuple(w[:p] + list(circle) + w[p:]))
    d = tg.degree
    if t.b != d:
        raise TangleError("only a circle colored into the top sheet can be removed")
    rest = tg.with_letters(w[:p] + w[p + 2:])
    if _uses_label(rest, d):
        raise TangleError(f"sheet {d} is still used elsewhere")
    return ColoredTangle(d - 1, rest.source, rest.letters)


def encircle_all(m: int, t: Transposition, e: int) -> tuple[Letter, ...]:
    """A circle colored t around all ``m`` strands: the new right strand goes left and back."""
    go = tuple(Cross(i, e) for i in range(m - 1, -1, -1))
    back = tuple(Cross(i, e) for i in range(m))
    return (Cap(m, t),) + go + back + (Cup(m),)


def _flip(tg: ColoredTangle, st: TangleStep) -> ColoredTangle:
    """Slide a split circle at the very top over the top of the diagram, or back.

    The circle then encircles every strand just below the top boundary; the
    top colors are recomputed so that the colors below the circle are unchanged.
    """
    if st.pos != 0:
        raise TangleError("FLIP acts on a circle at the very top")
    m = len(tg.source)
    small, big = (st.old, st.new) if len(st.old) == 2 else (st.new, st.old)
    if not (len(small) == 2 and isinstance(small[0], Cap) and small[0].i == m and small[1] == Cup(m)):
        raise TangleError("FLIP needs a split circle at the right end of the top")
    t = small[0].t
    e = big[1].e if len(big) > 1 and isinstance(big[1], Cross) else 0
    if e not in (1, -1) or big != encircle_all(m, t, e):
        raise TangleError("FLIP needs the circle around all strands")
    below = list(tg.source) if len(st.old) == 2 else tg.colors_at(len(big))
    # colors above the big circle that produce ``below`` underneath it
    cur = below + [t, t]
    for a in reversed(big[1:-1]):
        cur = color_step(cur, a.i, -a.e)
    if cur[m] != t or cur[m + 1] != t:
        raise TangleError("the encircling circle does not close up in color")
    w = list(tg.letters)
    if len(st.old) == 2:
        return ColoredTangle(tg.degree, tuple(cur[:m]), tuple(list(big) + w[2:]))
    # removing the big circle: the top colors become those under it
    return ColoredTangle(tg.degree, tuple(below), tuple(list(small) + w[len(big):]))


# ---------------------------------------------------------------- certificates

@dataclass
class TangleCertificate:
    start: ColoredTangle
    steps: list[TangleStep] = field(default_factory=list)
    end: ColoredTangle | None = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.end is None:
            self.end = self.start

    def states(self) -> Iterator[ColoredTangle]:
        cur = self.start
        yield cur
        for st in self.steps:
            cur = check_step(cur, st)
            yield cur

    def replay(self) -> bool:
        try:
            last = None
            for last in self.states():
                pass
        except TangleError:
            return False
        return last == self.end

    def first_failure(self) -> str | None:
        try:
            last = None
            for last in self.states():
                pass
        except TangleError as exc:
            return str(exc)
        return None if last == self.end else "final state differs from the recorded end"

    def inverse(self) -> "TangleCertificate":
        return TangleCertificate(self.end, [s.inverse() for s in reversed(self.steps)], self.start)

    def rules(self) -> set[Rule]:
        return {s.rule for s in self.steps}

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for s in self.steps:
            out[s.rule.value] = out.get(s.rule.value, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {"start": self.start.to_json(), "end": self.end.to_json(), "notes": list(self.notes),
                "steps": [s.to_json() for s in self.steps]}

    @classmethod
    def from_json(cls, obj: dict) -> "TangleCertificate":
        try:
            return cls(ColoredTangle.from_json(obj["start"]), [TangleStep.from_json(s) for s in obj["steps"]],
                       ColoredTangle.from_json(obj["end"]), list(obj.get("notes", [])))
        except KeyError as exc:
            raise TangleError(f"malformed certificate: missing {exc}") from exc


class TangleBuilder:
    """Accumulate checked steps; ``replace`` infers nothing, it only checks."""

    def __init__(self, start: ColoredTangle):
        self.start = start
        self.current = start
        self.steps: list[TangleStep] = []
        self.notes: list[str] = []

    def replace(self, rule: Rule, pos: int, length: int, new: Sequence[Letter]) -> "TangleBuilder":
        old = tuple(self.current.letters[pos:pos + length])
        st = TangleStep(rule, pos, old, tuple(new))
        self.current = check_step(self.current, st)
        self.steps.append(st)
        return self

    def note(self, text: str) -> "TangleBuilder":
        self.notes.append(f"step {len(self.steps)}: {text}")
        return self

    def extend(self, cert: TangleCertificate) -> "TangleBuilder":
        if cert.start != self.current:
            raise TangleError("certificate does not start at the current state")
        for st in cert.steps:
            self.current = check_step(self.current, st)
            self.steps.append(st)
        return self

    def certificate(self) -> TangleCertificate:
        return TangleCertificate(self.start, list(self.steps), self.current, list(self.notes))


# ---------------------------------------------------------------- search

def _transpositions(d: int) -> list[Transposition]:
    return [T(a, b) for a in range(1, d + 1) for b in range(a + 1, d + 1)]


def neighbors(tg: ColoredTangle, rules: frozenset[Rule] = ISOTOPY_RULES | {Rule.M, Rule.P},
              max_len: int = 12, max_strands: int = 8) -> Iterator[TangleStep]:
    """Every single checked step from ``tg`` within the length and width limits.

    STABILIZE and FLIP are never proposed; they change the ambient picture.
    """
    w = tg.letters
    L = len(w)
    levels = tg.levels()
    trans = _transpositions(tg.degree)

    def ok(st: TangleStep) -> bool:
        if L - len(st.old) + len(st.new) > max_len:
            return False
        try:
            out = check_step(tg, st)
        except TangleError:
            return False
        return max(len(c) for c in out.levels()) <= max_strands

    for p in range(L + 1):
        m = len(levels[p])
        # removals and rewrites of windows starting at p
        for size in (1, 2, 3):
            if p + size > L:
                break
            old = w[p:p + size]
            cands: list[tuple[Rule, tuple]] = []
            if size == 2:
                cands.append((Rule.FREE, ()))
                cands.append((Rule.ZIGZAG, ()))
                swapped = _commuted(*old)
                if swapped:
                    cands.append((Rule.COMMUTE, swapped))
                if isinstance(old[0], Cap):
                    cands.append((Rule.KINK, (old[0],)))
                if isinstance(old[1], Cup):
                    cands.append((Rule.KINK, (old[1],)))
                if all(isinstance(a, Cross) for a in old) and old[0] == old[1]:
                    cands.append((Rule.P, ()))
            if size == 3:
                if all(isinstance(a, Cross) for a in old):
                    cands.extend((Rule.BRAID, tuple(Cross(i, e) for i, e in t))
                                 for t in braid_relation_targets([(a.i, a.e) for a in old]))
                    cands.append((Rule.M, ()))
                if isinstance(old[0], Cap):
                    for t in trans:
                        for i in (old[0].i - 1, old[0].i + 1):
                            cands.append((Rule.SLIDE, (Cap(i, t),)))
                if isinstance(old[2], Cup):
                    for i in (old[2].i - 1, old[2].i + 1):
                        cands.append((Rule.SLIDE, (Cup(i),)))
            for rule, new in cands:
                if rule in rules:
                    st = TangleStep(rule, p, tuple(old), tuple(new))
                    if ok(st):
                        yield st
        # insertions at p
        ins: list[tuple[Rule, tuple]] = []
        for i in range(m - 1):
            for e in (1, -1):
                ins.append((Rule.FREE, (Cross(i, e), Cross(i, -e))))
                ins.append((Rule.P, (Cross(i, e),) * 2))
                ins.append((Rule.M, (Cross(i, e),) * 3))
        for i in range(m):
            t = levels[p][i]
            ins.append((Rule.ZIGZAG, (Cap(i + 1, t), Cup(i))))
            ins.append((Rule.ZIGZAG, (Cap(i, t), Cup(i + 1))))
        for rule, new in ins:
            if rule in rules:
                st = TangleStep(rule, p, (), new)
                if ok(st):
                    yield st
        # grow a single letter at p into a kink or a slide
        if p < L:
            a = w[p]
            grow: list[tuple[Rule, tuple]] = []
            if isinstance(a, Cap):
                for e in (1, -1):
                    grow.append((Rule.KINK, (a, Cross(a.i, e))))
                for t in trans:
                    for e in (1, -1):
                        if a.i >= 1:
                            grow.append((Rule.SLIDE, (Cap(a.i - 1, t), Cross(a.i, e), Cross(a.i - 1, e))))
                        grow.append((Rule.SLIDE, (Cap(a.i + 1, t), Cross(a.i, e), Cross(a.i + 1, e))))
            if isinstance(a, Cup):
                for e in (1, -1):
                    grow.append((Rule.KINK, (Cross(a.i, e), a)))
                    if a.i >= 1:
                        grow.append((Rule.SLIDE, (Cross(a.i - 1, e), Cross(a.i, e), Cup(a.i - 1))))
                    grow.append((Rule.SLIDE, (Cross(a.i + 1, e), Cross(a.i, e), Cup(a.i + 1))))
            for rule, new in grow:
                if rule in rules:
                    st = TangleStep(rule, p, (a,), new)
                    if ok(st):
                        yield st


def search(start: ColoredTangle, goal: ColoredTangle, rules: frozenset[Rule] = ISOTOPY_RULES | {Rule.M, Rule.P},
           max_len: int = 12, max_strands: int = 8, max_states: int = 200_000) -> TangleCertificate | None:
    """Breadth-first search for a certificate; None when the limits are exhausted."""
    from collections import deque
    parent: dict[ColoredTangle, tuple[ColoredTangle, TangleStep] | None] = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            steps = []
            while parent[cur] is not None:
                prev, st = parent[cur]
                steps.append(st)
                cur = prev
            return TangleCertificate(start, list(reversed(steps)), goal)
        for st in neighbors(cur, rules, max_len, max_strands):
            nxt = check_step(cur, st)
            if nxt not in parent:
                parent[nxt] = (cur, st)
                if len(parent) > max_states:
                    return None
                queue.append(nxt)
    return None
