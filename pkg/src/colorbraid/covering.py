"""Colorings of the punctured disk, i.e. simple branched coverings of degree d."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm import (MAX_DEGREE, Permutation, T, Transposition, cycles, kappa,
                   product)


@dataclass(frozen=True)
class Coloring:
    degree: int
    colors: tuple[Transposition, ...]

    def __post_init__(self):
        if not 2 <= self.degree <= MAX_DEGREE:
            raise ValueError(f"degree must be in 2..{MAX_DEGREE}")
        if len(self.colors) < 1:
            raise ValueError("a coloring needs at least one branch point")
        fixed = []
        for c in self.colors:
            if not isinstance(c, Transposition):
                c = T(*c)
            if c.b > self.degree:
                raise ValueError(f"{c} is not a transposition of S_{self.degree}")
            fixed.append(c)
        object.__setattr__(self, "colors", tuple(fixed))

    @property
    def n(self) -> int:
        return len(self.colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, i: int) -> Transposition:
        return self.colors[i]

    def text(self) -> str:
        return f"d={self.degree}: " + "".join(c.text() for c in self.colors)

    def __str__(self) -> str:
        return self.text()

    def sort_key(self) -> tuple:
        return (self.degree, self.colors)

    def to_json(self) -> dict:
        return {"degree": self.degree, "colors": [[c.a, c.b] for c in self.colors]}

    @classmethod
    def from_json(cls, obj: dict) -> "Coloring":
        return cls(int(obj["degree"]), tuple(T(a, b) for a, b in obj["colors"]))

    def replace(self, colors: Iterable[Transposition]) -> "Coloring":
        return Coloring(self.degree, tuple(colors))


_TEXT_RE = re.compile(r"^\s*d\s*=\s*(\d+)\s*:\s*(.*)$")
_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,?\s*(\d+)\s*\)")
_COMPACT_RE = re.compile(r"\((\d)(\d)\)")


def parse_coloring(text: str) -> Coloring:
    """Parse ``"d=4: (12)(12)(14)(14)(23)(23)"`` or ``"(1 2)(1 2)..."`` style text."""
    m = _TEXT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse coloring {text!r}; expected 'd=<deg>: (ab)(ab)...'")
    d = int(m.group(1))
    body = m.group(2)
    pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(body)]
    if not pairs:
        raise ValueError(f"no transpositions in {text!r}")
    return Coloring(d, tuple(T(a, b) for a, b in pairs))


def rho3(n: int) -> Coloring:
    """The standard 3-fold coloring (12),(12),(23),...,(23)."""
    if n < 3:
        raise ValueError("rho3 needs n >= 3")
    return Coloring(3, (T(1, 2), T(1, 2)) + (T(2, 3),) * (n - 2))


def _check_index_set(n: int, index_set: Iterable[int]) -> frozenset[int]:
    if n < 3:
        raise ValueError("n must be at least 3")
    s = frozenset(int(i) for i in index_set)
    bad = [i for i in s if not 2 <= i <= n - 1]
    if bad:
        raise ValueError(f"indices {sorted(bad)} outside 2..{n - 1}")
    return s


def rho_I(n: int, index_set: Iterable[int]) -> Coloring:
    """(12) at 0 and 1, (14) at positions in the index set, (23) elsewhere."""
    s = _check_index_set(n, index_set)
    cols = [T(1, 2), T(1, 2)]
    cols += [T(1, 4) if i in s else T(2, 3) for i in range(2, n)]
    return Coloring(4, tuple(cols))


def rho_tilde_I(n: int, index_set: Iterable[int]) -> Coloring:
    """Like :func:`rho_I` with the roles of (14) and (23) exchanged."""
    s = _check_index_set(n, index_set)
    cols = [T(1, 2), T(1, 2)]
    cols += [T(2, 3) if i in s else T(1, 4) for i in range(2, n)]
    return Coloring(4, tuple(cols))


def boundary_monodromy(c: Coloring) -> Permutation:
    return product(c.colors, c.degree)


def generated_orbit(c: Coloring, start: int = 1) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for t in c.colors:
            y = t(x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def is_connected(c: Coloring) -> bool:
    return len(generated_orbit(c)) == c.degree


def dim_lights(c: Coloring) -> Coloring:
    if c.degree != 4:
        raise ValueError("dimming applies to degree-4 colorings only")
    return Coloring(3, tuple(kappa(t) for t in c.colors))


def stabilize(c: Coloring, j: int) -> Coloring:
    """Add a trivial sheet d+1 joined to sheet j by two appended branch points."""
    if not 1 <= j <= c.degree:
        raise ValueError(f"sheet {j} out of range 1..{c.degree}")
    t = T(j, c.degree + 1)
    return Coloring(c.degree + 1, c.colors + (t, t))


def in_standard_class(c: Coloring) -> bool:
    """Membership in the class of connected degree-4 colorings by (12)(12) then (14)/(23)."""
    return (c.degree == 4 and c.colors[0] == T(1, 2) and c.colors[1] == T(1, 2)
            and all(t in (T(1, 4), T(2, 3)) for t in c.colors[2:])
            and is_connected(c))


def standard_class(n: int, sigma: Permutation | None = None) -> list[Coloring]:
    """All connected rho_I / rho_tilde_I of width n, optionally with boundary monodromy sigma."""
    out = set()
    for bits in itertools.product((T(1, 4), T(2, 3)), repeat=n - 2):
        c = Coloring(4, (T(1, 2), T(1, 2)) + bits)
        if not is_connected(c):
            continue
        if sigma is not None and boundary_monodromy(c) != sigma:
            continue
        out.add(c)
    return sorted(out, key=Coloring.sort_key)


def all_colorings(n: int, d: int) -> Iterator[Coloring]:
    trans = [T(a, b) for a in range(1, d + 1) for b in range(a + 1, d + 1)]
    for cols in itertools.product(trans, repeat=n):
        yield Coloring(d, cols)


def coloring_from_pairs(d: int, pairs: Sequence[Sequence[int]]) -> Coloring:
    return Coloring(d, tuple(T(a, b) for a, b in pairs))


_NAMED_RE = re.compile(r"^(rho3|rho|rhot)(\d*)_(\d+)$")


def named_coloring(name: str) -> Coloring:
    """Short names used on the command line.

    ``rho23_6`` is rho_I(6, {2, 3}); ``rhot4_6`` is rho_tilde_I(6, {4});
    ``rho_8`` is rho_I with the empty set; ``rho3_7`` is the 3-fold coloring.
    Index digits are single positions, so this form covers n <= 11.
    """
    m = _NAMED_RE.match(name.strip())
    if not m:
        raise ValueError(f"unknown coloring name {name!r}")
    kind, digits, n = m.group(1), m.group(2), int(m.group(3))
    if kind == "rho3":
        if digits:
            raise ValueError(f"rho3 takes no index set: {name!r}")
        return rho3(n)
    idx = [int(ch) for ch in digits]
    return rho_I(n, idx) if kind == "rho" else rho_tilde_I(n, idx)


def coloring_arg(text: str) -> Coloring:
    """Accept a named coloring, canonical text, or a JSON object string."""
    text = text.strip()
    if text.startswith("{"):
        import json
        return Coloring.from_json(json.loads(text))
    if text.startswith("d"):
        return parse_coloring(text)
    return named_coloring(text)


def monodromy_cycles(c: Coloring) -> list[tuple[int, ...]]:
    return cycles(boundary_monodromy(c))
