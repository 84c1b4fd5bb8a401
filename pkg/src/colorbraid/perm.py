"""Permutations of {1..d}, transpositions and the map kappa: S4 -> S3.

Composition is left to right: ``(p * q)(x) == q(p(x))``.  This is the order in
which monodromies of concatenated loops multiply.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

MAX_DEGREE = 16


class Permutation:
    """A permutation of {1..d} stored as its one-line image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        d = len(images)
        if d == 0 or d > MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {d}")
        if sorted(images) != list(range(1, d + 1)):
            raise ValueError(f"not a permutation of 1..{d}: {images}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(1, d + 1))

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(1, d + 1))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                img[x - 1] = cyc[(k + 1) % len(cyc)]
        return cls(img)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(x == k + 1 for k, x in enumerate(self.images))

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return cycle_text(self)


class Transposition(NamedTuple):
    """The transposition (a b) with a < b; degree is carried by the coloring."""

    a: int
    b: int

    @classmethod
    def of(cls, x: int, y: int) -> "Transposition":
        if x == y:
            raise ValueError(f"degenerate transposition ({x} {y})")
        if min(x, y) < 1:
            raise ValueError(f"labels are 1-based, got ({x} {y})")
        return cls(min(x, y), max(x, y))

    def __call__(self, x: int) -> int:
        if x == self.a:
            return self.b
        if x == self.b:
            return self.a
        return x

    def as_permutation(self, d: int) -> Permutation:
        if self.b > d:
            raise ValueError(f"{self} does not live in S_{d}")
        img = list(range(1, d + 1))
        img[self.a - 1], img[self.b - 1] = self.b, self.a
        return Permutation(img)

    def text(self) -> str:
        return f"({self.a}{self.b})" if self.b < 10 else f"({self.a} {self.b})"

    def __str__(self) -> str:
        return self.text()


def T(a: int, b: int) -> Transposition:
    """Shorthand constructor used throughout the package."""
    return Transposition.of(a, b)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(q.images[x - 1] for x in p.images)


def inverse(p: Permutation) -> Permutation:
    img = [0] * p.degree
    for k, x in enumerate(p.images):
        img[x - 1] = k + 1
    return Permutation(img)


def product(perms: Iterable[Permutation | Transposition], d: int) -> Permutation:
    acc = Permutation.identity(d)
    for p in perms:
        if isinstance(p, Transposition):
            p = p.as_permutation(d)
        acc = compose(acc, p)
    return acc


def conj(t: Transposition, by: Transposition) -> Transposition:
    """``by * t * by``: relabel the support of ``t`` through ``by``."""
    return Transposition.of(by(t.a), by(t.b))


def interact(t: Transposition, u: Transposition) -> bool:
    """True when the supports share exactly one label."""
    return len({t.a, t.b} & {u.a, u.b}) == 1


def disjoint(t: Transposition, u: Transposition) -> bool:
    return not ({t.a, t.b} & {u.a, u.b})


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its minimum, sorted by minimum."""
    seen = set()
    out = []
    for start in range(1, p.degree + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = p(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p(x)
        out.append(tuple(cyc))
    return out


def cycle_text(p: Permutation) -> str:
    parts = [c for c in cycles(p) if len(c) > 1]
    if not parts:
        return "id"
    sep = "" if p.degree < 10 else " "
    return "".join("(" + sep.join(map(str, c)) + ")" for c in parts)


_KAPPA = {
    (1, 2): (1, 2), (3, 4): (1, 2),
    (2, 3): (2, 3), (1, 4): (2, 3),
    (1, 3): (1, 3), (2, 4): (1, 3),
}

KLEIN_FOUR = (
    Permutation([1, 2, 3, 4]),
    Permutation([2, 1, 4, 3]),
    Permutation([3, 4, 1, 2]),
    Permutation([4, 3, 2, 1]),
)


def kappa(t: Transposition) -> Transposition:
    """Image of a transposition of S4 in S3 (pairs of opposite edges share a color)."""
    key = (t.a, t.b)
    if key not in _KAPPA:
        raise ValueError(f"{t} is not a transposition of S_4")
    return Transposition(*_KAPPA[key])


def kappa_perm(p: Permutation) -> Permutation:
    """Extend kappa to all of S4 through the action on the three pair-partitions."""
    if p.degree != 4:
        raise ValueError("kappa is defined on S_4 only")
    # partitions {12|34} -> 3, {14|23} -> 1, {13|24} -> 2: matches the transposition table
    parts = [frozenset({frozenset({1, 4}), frozenset({2, 3})}),
             frozenset({frozenset({1, 3}), frozenset({2, 4})}),
             frozenset({frozenset({1, 2}), frozenset({3, 4})})]
    img = []
    for part in parts:
        moved = frozenset(frozenset(p(x) for x in block) for block in part)
        img.append(parts.index(moved) + 1)
    return Permutation(img)
