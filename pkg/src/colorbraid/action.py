"""The colored braid groupoid: braids acting on colorings from the right."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import kernels
from .braid import BraidWord, bw_generators, delta4
from .covering import (Coloring, in_standard_class, rho_I,
                       rho_tilde_I, standard_class)
from .perm import Permutation, T, Transposition, conj


class CapExceeded(RuntimeError):
    """A breadth-first search hit its vertex cap."""


class Codec:
    """Small-integer codes for the transpositions of S_d, with a conjugation table."""

    def __init__(self, d: int):
        self.degree = d
        self.trans = [T(a, b) for a in range(1, d + 1) for b in range(a + 1, d + 1)]
        self.index = {t: k for k, t in enumerate(self.trans)}
        # conj_table[t][u] = u t u
        self.conj_table = [[self.index[conj(t, u)] for u in self.trans] for t in self.trans]
        self.pairs = [(t.a - 1, t.b - 1) for t in self.trans]

    def encode(self, c: Coloring) -> tuple[int, ...]:
        return tuple(self.index[t] for t in c.colors)

    def decode(self, codes: Sequence[int]) -> Coloring:
        return Coloring(self.degree, tuple(self.trans[k] for k in codes))


@lru_cache(maxsize=None)
def codec(d: int) -> Codec:
    return Codec(d)


def step(colors: Sequence[Transposition], i: int, e: int) -> list[Transposition]:
    """One crossing.  beta_i: (x, y) -> (x y x, x); its inverse: (x, y) -> (y, y x y)."""
    c = list(colors)
    x, y = c[i], c[i + 1]
    if e > 0:
        c[i], c[i + 1] = conj(y, x), x
    else:
        c[i], c[i + 1] = y, conj(x, y)
    return c


def apply(w: BraidWord, c: Coloring) -> Coloring:
    if w.strands != c.n:
        raise ValueError(f"strand mismatch: word on {w.strands}, coloring with {c.n} points")
    cd = codec(c.degree)
    return cd.decode(kernels.apply_codes(cd.encode(c), w.letters, cd.conj_table))


def running_colors(w: BraidWord, c: Coloring) -> list[tuple[Transposition, ...]]:
    """Colorings before each letter and after the last one (len(w) + 1 entries)."""
    if w.strands != c.n:
        raise ValueError("strand mismatch")
    out = [c.colors]
    cur = list(c.colors)
    for i, e in w.letters:
        cur = step(cur, i, e)
        out.append(tuple(cur))
    return out


def is_liftable(w: BraidWord, c: Coloring) -> bool:
    return apply(w, c) == c


def bw_generator_set(n: int) -> list[BraidWord]:
    return bw_generators(n)


def generator_names(n: int) -> list[str]:
    names = ["b0", "b1^3"] + [f"b{i}" for i in range(2, n - 1)]
    if n >= 6:
        names.append("d4")
    return names


@dataclass
class Orbit:
    base: Coloring
    vertices: list[Coloring]
    edges: dict[tuple[int, int], int]
    generator_set: list[BraidWord]
    generator_names: list[str] = field(default_factory=list)

    def index(self, c: Coloring) -> int:
        return self.vertices.index(c)

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {
            "base": self.base.text(),
            "vertices": [v.text() for v in self.vertices],
            "edges": [{"from": a, "gen": self.generator_names[g] if self.generator_names else g, "to": b}
                      for (a, g), b in sorted(self.edges.items())],
        }


def orbit(c: Coloring, gens: Sequence[BraidWord], cap: int = 100_000,
          names: Sequence[str] | None = None) -> Orbit:
    """Closure of ``c`` under ``gens``; vertices sorted by canonical text order.

    The generators permute a finite set, so closing under the words themselves
    (without inverses) already gives the full orbit.
    """
    cd = codec(c.degree)
    letters = [g.letters for g in gens]
    start = cd.encode(c)
    seen = {start}
    queue = deque([start])
    raw_edges = {}
    while queue:
        cur = queue.popleft()
        for g, lw in enumerate(letters):
            nxt = kernels.apply_codes(cur, lw, cd.conj_table)
            raw_edges[(cur, g)] = nxt
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"orbit exceeded cap of {cap} vertices")
                seen.add(nxt)
                queue.append(nxt)
    decoded = {code: cd.decode(code) for code in seen}
    order = sorted(seen, key=lambda code: decoded[code].text())
    pos = {code: k for k, code in enumerate(order)}
    edges = {(pos[a], g): pos[b] for (a, g), b in raw_edges.items()}
    return Orbit(c, [decoded[code] for code in order], edges, list(gens), list(names or []))


def full_generators(n: int) -> list[BraidWord]:
    return [BraidWord(n, ((i, 1),)) for i in range(n - 1)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _class_monodromies(n: int) -> list[Permutation]:
    ident = Permutation.identity(4)
    if n % 2 == 0:
        return [ident, Permutation.from_cycles(4, [(1, 4), (2, 3)])]
    return [Permutation.from_cycles(4, [(2, 3)]), Permutation.from_cycles(4, [(1, 4)])]


def verify_orbit_classification(n: int, cap: int = 100_000) -> list[CheckResult]:
    """BFS orbit of a seed equals the enumerated class for each boundary monodromy."""
    if not 6 <= n <= 12:
        raise ValueError("n must be in 6..12")
    out = []
    gens = bw_generator_set(n)
    for sigma in _class_monodromies(n):
        members = standard_class(n, sigma)
        seed = members[0]
        orb = orbit(seed, gens, cap)
        ok = sorted(orb.vertices, key=Coloring.sort_key) == members
        out.append(CheckResult(f"n={n} monodromy {sigma}", ok,
                               f"orbit {len(orb)} vs class {len(members)}"))
    return out


def delta4_table() -> list[CheckResult]:
    """How delta4 moves the standard width-6 colorings."""
    n = 6
    d4 = delta4(n)
    out = []
    fixed = [("rho_{}", rho_I(n, [])), ("rhot_{}", rho_tilde_I(n, []))]
    for i in range(2, 6):
        for j in range(i + 1, 6):
            fixed.append((f"rho_{{{i}{j}}}", rho_I(n, [i, j])))
            fixed.append((f"rhot_{{{i}{j}}}", rho_tilde_I(n, [i, j])))
    for name, c in fixed:
        out.append(CheckResult(f"delta4 fixes {name}", apply(d4, c) == c))
    for i in range(2, 6):
        got = apply(d4, rho_I(n, [i]))
        out.append(CheckResult(f"delta4 sends rho_{i} to rhot_{i}", got == rho_tilde_I(n, [i]), got.text()))
    return out


def standard_label(c: Coloring) -> str:
    """Name a standard-class coloring by its index set, e.g. '23' or '~4'."""
    if not in_standard_class(c):
        return c.text()
    ones = [str(i) for i in range(2, c.n) if c.colors[i] == T(1, 4)]
    twos = [str(i) for i in range(2, c.n) if c.colors[i] == T(2, 3)]
    if len(ones) <= len(twos):
        return "".join(ones) or "{}"
    return "~" + ("".join(twos) or "{}")
