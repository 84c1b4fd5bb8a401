"""Braid words, named braids and the Artin action on the free group.

Letters are ``(i, e)`` with ``e = +1`` for beta_i and ``e = -1`` for its inverse.
Words are read left to right, which is top to bottom in a braid diagram.
``[x]y`` means ``y^-1 x y``.

Free-group words are tuples of nonzero ints: ``k + 1`` stands for alpha_k and
``-(k + 1)`` for its inverse.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels

Letter = tuple[int, int]
FreeWord = tuple[int, ...]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least two strands")
        fixed = []
        for i, e in self.letters:
            i, e = int(i), int(e)
            if not 0 <= i <= self.strands - 2:
                raise ValueError(f"generator index {i} out of range for {self.strands} strands")
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
            fixed.append((i, e))
        object.__setattr__(self, "letters", tuple(fixed))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError(f"strand mismatch: {self.strands} vs {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def conj(self, by: "BraidWord") -> "BraidWord":
        """``[self]by``, i.e. ``by^-1 self by``."""
        return by.inverse() * self * by

    def widen(self, strands: int) -> "BraidWord":
        if strands < self.strands:
            raise ValueError("cannot narrow a braid word")
        return BraidWord(strands, self.letters)

    def free_reduce(self) -> "BraidWord":
        out: list[Letter] = []
        for i, e in self.letters:
            if out and out[-1] == (i, -e):
                out.pop()
            else:
                out.append((i, e))
        return BraidWord(self.strands, tuple(out))

    def text(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"b{i}" if e == 1 else f"b{i}^-1" for i, e in self.letters)

    def __str__(self) -> str:
        return self.text()

    def to_json(self) -> list:
        return [[i, e] for i, e in self.letters]

    @classmethod
    def from_json(cls, strands: int, obj: Sequence[Sequence[int]]) -> "BraidWord":
        return cls(strands, tuple((int(i), int(e)) for i, e in obj))

    def max_index(self) -> int:
        return max((i for i, _ in self.letters), default=-1)

    def permutation(self) -> tuple[int, ...]:
        """Where each starting position ends up (0-based)."""
        pos = list(range(self.strands))
        where = list(range(self.strands))  # where[p] = strand currently at p
        for i, _ in self.letters:
            where[i], where[i + 1] = where[i + 1], where[i]
        for p, s in enumerate(where):
            pos[s] = p
        return tuple(pos)


def word(strands: int, *letters: Letter | int) -> BraidWord:
    """Build a word from letters; a bare int ``i`` means ``(i, +1)``."""
    out = []
    for x in letters:
        if isinstance(x, tuple):
            out.append(x)
        else:
            out.append((int(x), 1))
    return BraidWord(strands, tuple(out))


def gen(strands: int, i: int, e: int = 1) -> BraidWord:
    return BraidWord(strands, ((i, 1 if e > 0 else -1),) * abs(e))


def descending(strands: int, hi: int, lo: int, e: int = 1) -> BraidWord:
    """beta_hi beta_{hi-1} ... beta_lo (empty if hi < lo)."""
    return BraidWord(strands, tuple((i, e) for i in range(hi, lo - 1, -1)))


def ascending(strands: int, lo: int, hi: int, e: int = 1) -> BraidWord:
    """beta_lo beta_{lo+1} ... beta_hi (empty if hi < lo)."""
    return BraidWord(strands, tuple((i, e) for i in range(lo, hi + 1)))


# ---------------------------------------------------------------- named braids

def _need(n: int, top: int, what: str) -> None:
    if top > n - 2:
        raise ValueError(f"{what} uses beta_{top} and needs at least {top + 2} strands, got {n}")


def delta4(n: int) -> BraidWord:
    _need(n, 4, "delta4")
    v = word(n, 3, 2, 1, 1, 2, 3, 3, 2, 1)
    return gen(n, 4).conj(v)


def delta6(n: int) -> BraidWord:
    _need(n, 6, "delta6")
    u = BraidWord(n, tuple((i, -1) for i in (5, 4, 3, 2, 6, 5, 4, 3)))
    return delta4(n).conj(u)


def delta_k(k: int, n: int) -> BraidWord:
    """The general rotation word, read literally from its display.

    ``[b_k] b_{k-1} b_{k-2} ... b_2 b_1^2 b_2^-1 ... b_{k-4}^-1 b_{k-3} b_{k-2}^2 b_{k-3} ... b_1``
    """
    if k < 4 or k % 2:
        raise ValueError("delta_k is defined for even k >= 4")
    _need(n, k, f"delta_k({k})")
    body = descending(n, k - 1, 2) * gen(n, 1, 2) * ascending(n, 2, k - 4, -1)
    body = body * gen(n, k - 3) * gen(n, k - 2, 2) * descending(n, k - 3, 1)
    return gen(n, k).conj(body)


def delta_k_pattern(k: int, n: int) -> BraidWord:
    """Rotation word following the pattern of delta4: ``[b_k] b_{k-1}..b_2 b_1^2 b_2..b_{k-1}^2 .. b_1``.

    At k = 4 this is exactly delta4; it is kept next to :func:`delta_k` so the
    two readings can be compared.
    """
    if k < 4 or k % 2:
        raise ValueError("delta_k is defined for even k >= 4")
    _need(n, k, f"delta_k_pattern({k})")
    body = descending(n, k - 1, 2) * gen(n, 1, 2) * ascending(n, 2, k - 2)
    body = body * gen(n, k - 1, 2) * descending(n, k - 2, 1)
    return gen(n, k).conj(body)


def chi(g: int, n: int) -> BraidWord:
    _need(n, 2 * g + 3, f"chi({g})")
    return descending(n, 2 * g + 3, 5) * gen(n, 4, 2) * ascending(n, 5, 2 * g + 3)


def D(g: int, n: int) -> BraidWord:
    _need(n, 2 * g + 4, f"D({g})")
    c = chi(g, n)
    b = gen(n, 2 * g + 4)
    return b * c * b.inverse() * c.inverse()


def B(g: int, n: int) -> BraidWord:
    """``(b4 b5 b6)^4 ([d6^-1] b6^-1 b5^-1 b4^-2 b5^-1 b6^-1 b7^-1) d6^-1``.

    The word does not depend on g; g only fixes the context width 2g + 6.
    """
    _need(n, 7, "B")
    d6i = delta6(n).inverse()
    tail = BraidWord(n, tuple((i, -1) for i in (6, 5, 4, 4, 5, 6, 7)))
    return word(n, 4, 5, 6) ** 4 * d6i.conj(tail) * d6i


def bw_generator(i: int, n: int) -> BraidWord:
    """The i-th entry of the 3-fold liftable generating list (b1 appears cubed)."""
    gens = bw_generators(n)
    return gens[i]


def bw_generators(n: int) -> list[BraidWord]:
    if n < 3:
        raise ValueError("need n >= 3")
    out = [gen(n, 0), gen(n, 1, 3)]
    out += [gen(n, i) for i in range(2, n - 1)]
    if n >= 6:
        out.append(delta4(n))
    return out


def named(name: str, n: int, arg: int | None = None) -> BraidWord:
    table = {
        "delta4": lambda: delta4(n),
        "delta6": lambda: delta6(n),
        "delta_k": lambda: delta_k(_req(arg, name), n),
        "chi": lambda: chi(_req(arg, name), n),
        "B": lambda: B(_req(arg, name), n),
        "D": lambda: D(_req(arg, name), n),
        "bw_generator": lambda: bw_generator(_req(arg, name), n),
    }
    if name not in table:
        raise ValueError(f"unknown braid name {name!r}")
    return table[name]()


def _req(arg: int | None, name: str) -> int:
    if arg is None:
        raise ValueError(f"{name} needs an integer argument")
    return int(arg)


# ------------------------------------------------------------------- text form

_TOKEN_RE = re.compile(r"\s*(\[|\]|\(|\)|\^-?\d+|b\d+|d4|d6|dN\(\d+\)|chi\(\d+\)|B\(\d+\)|D\(\d+\)|1)")


def _tokenize(text: str) -> list[str]:
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ValueError(f"unexpected input at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse_word(text: str, n: int) -> BraidWord:
    """Parse the whitespace-separated word grammar.

    Tokens: ``b<i>``, ``d4``, ``d6``, ``dN(<k>)``, ``chi(<g>)``, ``B(<g>)``,
    ``D(<g>)``, ``1`` (empty); postfix ``^k`` (k may be negative); groups in
    parentheses; ``[x]y`` conjugates x by the following atom or group y.
    """
    toks = _tokenize(text)
    w, k = _parse_seq(toks, 0, n, closer=None)
    if k != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return w


def _parse_seq(toks, k, n, closer):
    acc = BraidWord(n)
    while k < len(toks) and toks[k] != closer:
        atom, k = _parse_atom(toks, k, n)
        acc = acc * atom
    return acc, k


def _parse_atom(toks, k, n):
    t = toks[k]
    if t == "[":
        inner, k = _parse_seq(toks, k + 1, n, "]")
        if k >= len(toks):
            raise ValueError("unclosed '['")
        by, k = _parse_atom(toks, k + 1, n)
        atom = inner.conj(by)
    elif t == "(":
        atom, k = _parse_seq(toks, k + 1, n, ")")
        if k >= len(toks):
            raise ValueError("unclosed '('")
        k += 1
    elif t.startswith("b"):
        atom, k = gen(n, int(t[1:])), k + 1
    elif t == "d4":
        atom, k = delta4(n), k + 1
    elif t == "d6":
        atom, k = delta6(n), k + 1
    elif t == "1":
        atom, k = BraidWord(n), k + 1
    else:
        name, arg = t.split("(")
        arg = int(arg.rstrip(")"))
        fn = {"dN": delta_k, "chi": chi, "B": B, "D": D}[name]
        atom, k = fn(arg, n), k + 1
    while k < len(toks) and toks[k].startswith("^"):
        atom = atom ** int(toks[k][1:])
        k += 1
    return atom, k


# ---------------------------------------------------------------- Artin action

def free_reduce(w: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def free_inverse(w: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(w))


def artin_images(w: BraidWord) -> tuple[FreeWord, ...]:
    """Images of alpha_0..alpha_{n-1} under the automorphism of ``w``.

    beta_i sends alpha_i to alpha_i alpha_{i+1} alpha_i^-1 and alpha_{i+1} to
    alpha_i; the automorphism of a word is the composite of its letters' maps
    taken left to right, so ``(w1 w2)(x) = w1(w2(x))``.
    """
    return kernels.artin_images(w.strands, w.letters)


def substitute(f: Sequence[int], images: Sequence[FreeWord]) -> FreeWord:
    out: list[int] = []
    for x in f:
        piece = images[x - 1] if x > 0 else free_inverse(images[-x - 1])
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def artin_apply(w: BraidWord, f: Sequence[int]) -> FreeWord:
    if any(abs(x) > w.strands for x in f):
        raise ValueError("free word uses a generator beyond the braid's rank")
    return substitute(free_reduce(f), artin_images(w))


def words_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise ValueError(f"strand mismatch: {w1.strands} vs {w2.strands}")
    return artin_images(w1) == artin_images(w2)


def is_trivial(w: BraidWord) -> bool:
    return all(img == (k + 1,) for k, img in enumerate(artin_images(w)))


def free_text(f: Sequence[int]) -> str:
    if not f:
        return "1"
    return " ".join(f"a{abs(x) - 1}" + ("" if x > 0 else "^-1") for x in f)
