"""Orbit complexes: one-cells, a spanning tree, lassos and stabilizer generators.

Two-cells are not stored.  The proofs only use them through two checkable
rules, both exposed here: commuting squares (``square_report``) and tail
independence of lassos at the homology level (``tail_independence``).
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .action import CheckResult, Orbit, bw_generator_set, generator_names, orbit, standard_label
from .braid import BraidWord, delta4, delta6, gen, words_equal
from .covering import Coloring, rho_I
from .homlift import homology_action
from .rewrite import Budget, ColoredBraid, RewriteCertificate, certify_equal, equivalent


class NotInvolutive(ValueError):
    pass


@dataclass(frozen=True)
class OneCell:
    a: int
    b: int
    label: int

    @property
    def is_loop(self) -> bool:
        return self.a == self.b


@dataclass
class OrbitComplex:
    orbit: Orbit
    basepoint: int
    cells: list[OneCell]
    tree: set[int]
    # BFS tree: vertex -> (parent vertex, generator index)
    parent: dict[int, tuple[int, int] | None]
    names: list[str] = field(default_factory=list)

    @property
    def vertices(self) -> list[Coloring]:
        return self.orbit.vertices

    @property
    def gens(self) -> list[BraidWord]:
        return self.orbit.generator_set

    def loops(self) -> list[OneCell]:
        return [c for c in self.cells if c.is_loop]

    def edges(self) -> list[OneCell]:
        return [c for c in self.cells if not c.is_loop]

    def label_name(self, g: int) -> str:
        return self.names[g] if self.names else f"g{g}"

    def tail(self, v: int) -> BraidWord:
        """Word of the tree path from the basepoint to ``v``."""
        n = self.orbit.base.n
        parts = []
        while self.parent[v] is not None:
            u, g = self.parent[v]
            parts.append(self.gens[g])
            v = u
        out = BraidWord(n)
        for p in reversed(parts):
            out = out * p
        return out

    def to_dot(self) -> str:
        lines = ["graph orbit {", "  node [shape=ellipse];"]
        for k, v in enumerate(self.vertices):
            shape = ", shape=doubleoctagon" if k == self.basepoint else ""
            lines.append(f'  v{k} [label="{standard_label(v)}"{shape}];')
        for idx, c in enumerate(self.cells):
            style = ", style=bold" if idx in self.tree else ""
            lines.append(f'  v{c.a} -- v{c.b} [label="{self.label_name(c.label)}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "basepoint": self.basepoint,
            "vertices": [v.text() for v in self.vertices],
            "cells": [{"a": c.a, "b": c.b, "label": self.label_name(c.label), "tree": k in self.tree}
                      for k, c in enumerate(self.cells)],
        }


def build_complex(c: Coloring, gens: Sequence[BraidWord] | None = None, cap: int = 100_000,
                  names: Sequence[str] | None = None) -> OrbitComplex:
    """Orbit of ``c`` with one-cells for unordered pairs and a BFS spanning tree."""
    if gens is None:
        gens = bw_generator_set(c.n)
        names = generator_names(c.n)
    orb = orbit(c, gens, cap, names)
    nv = len(orb.vertices)
    for (v, g), w in orb.edges.items():
        if orb.edges[(w, g)] != v:
            raise NotInvolutive(f"generator {g} does not act as an involution at vertex {v}")
    cells: list[OneCell] = []
    index: dict[tuple[int, int, int], int] = {}
    for v in range(nv):
        for g in range(len(gens)):
            w = orb.edges[(v, g)]
            key = (min(v, w), max(v, w), g)
            if key not in index:
                index[key] = len(cells)
                cells.append(OneCell(key[0], key[1], g))
    base = orb.index(c)
    parent: dict[int, tuple[int, int] | None] = {base: None}
    tree: set[int] = set()
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for g in range(len(gens)):
            w = orb.edges[(v, g)]
            if w not in parent:
                parent[w] = (v, g)
                tree.add(index[(min(v, w), max(v, w), g)])
                queue.append(w)
    return OrbitComplex(orb, base, cells, tree, parent, list(names or []))


@dataclass
class Lasso:
    head: OneCell
    tail: BraidWord
    word: BraidWord

    def to_json(self, names: Sequence[str]) -> dict:
        return {"head": {"a": self.head.a, "b": self.head.b, "label": names[self.head.label] if names else self.head.label},
                "tail": self.tail.to_json(), "word": self.word.to_json(), "text": self.word.text()}


def lassos(x: OrbitComplex) -> list[Lasso]:
    """One closed path per loop and per non-tree edge, with tree tails."""
    out = []
    for k, cell in enumerate(x.cells):
        if k in x.tree:
            continue
        g = x.gens[cell.label]
        ta = x.tail(cell.a)
        if cell.is_loop:
            w = ta * g * ta.inverse()
        else:
            w = ta * g * x.tail(cell.b).inverse()
        out.append(Lasso(cell, ta, w))
    return out


def schreier_generators(x: OrbitComplex) -> list[BraidWord]:
    return [l.word for l in lassos(x)]


# ---------------------------------------------------------------- rules standing in for 2-cells

def _isolated_chain_cells(x: OrbitComplex) -> set[int]:
    """Edges whose component in the loop-free 1-skeleton is a simple path."""
    adj: dict[int, set[int]] = {v: set() for v in range(len(x.vertices))}
    for c in x.edges():
        adj[c.a].add(c.b)
        adj[c.b].add(c.a)
    seen: set[int] = set()
    out: set[int] = set()
    for v in adj:
        if v in seen or not adj[v]:
            continue
        comp, stack = set(), [v]
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u] - comp)
        seen |= comp
        cells = [k for k, c in enumerate(x.cells) if not c.is_loop and c.a in comp]
        degrees = [len(adj[u]) for u in comp]
        if max(degrees) <= 2 and len(cells) == len(comp) - 1:
            out.update(cells)
    return out


def square_report(x: OrbitComplex, delta_name: str = "d4", beta_name: str = "b4") -> list[CheckResult]:
    """Every edge outside an isolated chain lies on a square whose labels commute.

    Labels commute as braids, or are the delta_4/beta_4 pair, which commute
    only modulo M.
    """
    out = []
    isolated = _isolated_chain_cells(x)
    e = x.orbit.edges
    for k, cell in enumerate(x.cells):
        if cell.is_loop or k in isolated:
            continue
        v1, v2, gx = cell.a, cell.b, cell.label
        witness = None
        for gy in range(len(x.gens)):
            if gy == gx:
                continue
            v3, v4 = e[(v1, gy)], e[(v2, gy)]
            if v3 == v1 or v4 == v2 or e[(v3, gx)] != v4 or v3 == v4:
                continue
            pair = {x.label_name(gx), x.label_name(gy)}
            gw, hw = x.gens[gx], x.gens[gy]
            if words_equal(gw * hw, hw * gw):
                witness = f"{x.label_name(gy)} (commute)"
            elif pair == {delta_name, beta_name}:
                witness = f"{x.label_name(gy)} (commute modulo M)"
            if witness:
                break
        name = f"edge {standard_label(x.vertices[v1])}-{standard_label(x.vertices[v2])} {x.label_name(gx)}"
        out.append(CheckResult(name, witness is not None, witness or "no square"))
    return out


def tail_independence(x: OrbitComplex) -> list[CheckResult]:
    """Lassos with the same head but a different tail act equally on H1.

    The second tail comes from a BFS tree built with the generator order reversed.
    """
    gens = x.gens
    e = x.orbit.edges
    parent2: dict[int, tuple[int, int] | None] = {x.basepoint: None}
    queue = deque([x.basepoint])
    while queue:
        v = queue.popleft()
        for g in reversed(range(len(gens))):
            w = e[(v, g)]
            if w not in parent2:
                parent2[w] = (v, g)
                queue.append(w)

    def tail2(v: int) -> BraidWord:
        out = BraidWord(x.orbit.base.n)
        while parent2[v] is not None:
            u, g = parent2[v]
            out = gens[g] * out
            v = u
        return out

    base = x.vertices[x.basepoint]
    out = []
    for cell in x.loops():
        t1, t2 = x.tail(cell.a), tail2(cell.a)
        if t1 == t2:
            continue
        g = gens[cell.label]
        h1 = homology_action(t1 * g * t1.inverse(), base)
        h2 = homology_action(t2 * g * t2.inverse(), base)
        out.append(CheckResult(f"loop {x.label_name(cell.label)} at {standard_label(x.vertices[cell.a])}",
                               h1.matrix == h2.matrix))
    return out


# ---------------------------------------------------------------- generation check

def stabilizer_generators(n: int, part: str) -> tuple[list[str], list[BraidWord]]:
    """Expected generators of the stabilizer of rho_23^n (part a) or rho_{2,3,n-1}^n (part b)."""
    if part == "a":
        names = ["b0", "b2"] + [f"b{i}" for i in range(4, n - 1)] + ["d4"]
        words = [gen(n, 0), gen(n, 2)] + [gen(n, i) for i in range(4, n - 1)] + [delta4(n)]
        if n >= 8:
            names.append("d6")
            words.append(delta6(n))
        return names, words
    if part == "b":
        names = ["b0", "b2"] + [f"b{i}" for i in range(4, n - 2)]
        words = [gen(n, 0), gen(n, 2)] + [gen(n, i) for i in range(4, n - 2)]
        conj_by = BraidWord(n, tuple((i, -1) for i in range(n - 3, 2, -1)))
        names.append(f"[b{n - 2}]" + "".join(f"b{i}^-1" for i in range(n - 3, 2, -1)))
        words.append(gen(n, n - 2).conj(conj_by))
        if n >= 8:
            names.append("d4")
            words.append(delta4(n))
        if n >= 10:
            names.append("d6")
            words.append(delta6(n))
        return names, words
    raise ValueError("part must be 'a' or 'b'")


def generation_basepoint(n: int, part: str) -> Coloring:
    return rho_I(n, [2, 3]) if part == "a" else rho_I(n, [2, 3, n - 1])


@dataclass
class GenerationEntry:
    lasso: str
    status: str          # CERTIFIED, HOMOLOGY-MATCHED or UNKNOWN
    expression: str = ""
    certificate: RewriteCertificate | None = None

    def line(self) -> str:
        return f"{self.status:16s} {self.lasso}" + (f"  ==  {self.expression}" if self.expression else "")


def _candidates(names: list[str], words: list[BraidWord], n: int, max_len: int):
    letters = [(nm, w) for nm, w in zip(names, words)] + [(nm + "^-1", w.inverse()) for nm, w in zip(names, words)]
    yield "1", BraidWord(n)
    for length in range(1, max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            w = BraidWord(n)
            for _, x in combo:
                w = w * x
            yield " ".join(nm for nm, _ in combo), w


def verify_generation(n: int, part: str = "a", budget: Budget | None = None, max_len: int = 2,
                      search: bool = False) -> list[GenerationEntry]:
    """Try to express every Schreier generator through the expected generators.

    Candidates are products of at most ``max_len`` generators whose homology
    action matches; each is then tried for a certificate (local reduction plus
    isotopy, and optionally a bounded search).
    """
    if part == "a" and n not in (6, 7, 8):
        raise ValueError("part (a) is checked for n in 6..8")
    if part == "b" and n not in (6, 8):
        raise ValueError("part (b) is checked for n in {6, 8}")
    base = generation_basepoint(n, part)
    x = build_complex(base)
    names, words = stabilizer_generators(n, part)
    cands = [(nm, w, homology_action(w, base).matrix) for nm, w in _candidates(names, words, n, max_len)]
    out = []
    for las in lassos(x):
        s = las.word
        hs = homology_action(s, base).matrix
        matched = [(nm, w) for nm, w, h in cands if h == hs]
        label = f"{x.label_name(las.head.label)} at {standard_label(x.vertices[las.head.a])}"
        if not las.head.is_loop:
            label += f"-{standard_label(x.vertices[las.head.b])}"
        entry = GenerationEntry(label, "UNKNOWN")
        for nm, w in matched:
            cert = certify_equal(ColoredBraid(base, s), ColoredBraid(base, w))
            if cert is None and search:
                found = equivalent(ColoredBraid(base, s), ColoredBraid(base, w), budget)
                cert = found or None
            if cert is not None:
                entry = GenerationEntry(label, "CERTIFIED", nm, cert)
                break
        else:
            if matched:
                entry = GenerationEntry(label, "HOMOLOGY-MATCHED", matched[0][0])
        out.append(entry)
    return out
