"""Conjugation identities used when rewriting lassos of the standard orbit complexes.

Each identity reads ``w x w^-1 = y`` for a path word ``w``.  Equality is
decided exactly by comparing Artin images.  When the literal form fails the
check also records whether the other conjugation order ``w^-1 x w = y`` holds
and whether both sides at least act alike on H1 over a base coloring where
they are liftable.
"""
from __future__ import annotations

from dataclasses import dataclass

from .action import is_liftable
from .braid import BraidWord, ascending, delta4, delta_k, delta_k_pattern, descending, gen, words_equal
from .covering import Coloring, rho_I
from .homlift import homology_action
from .perm import disjoint
from .rewrite import Builder, ColoredBraid, RewriteCertificate, StepKind, isotopy_certificate


@dataclass
class IdentityCheck:
    name: str
    n: int
    w: BraidWord
    x: BraidWord
    y: BraidWord
    holds: bool
    other_order: bool
    base: Coloring | None = None
    homology_equal: bool | None = None

    def line(self) -> str:
        status = "PASS" if self.holds else "FAIL"
        extra = ""
        if not self.holds:
            extra = f" (w^-1 x w = y: {'yes' if self.other_order else 'no'}"
            if self.homology_equal is not None:
                extra += f"; equal on H1 over {self.base.text()}: {'yes' if self.homology_equal else 'no'}"
            extra += ")"
        return f"[{status}] n={self.n} {self.name}{extra}"


def _check(name: str, n: int, w: BraidWord, x: BraidWord, y: BraidWord,
           base: Coloring | None = None) -> IdentityCheck:
    holds = words_equal(w * x * w.inverse(), y)
    other = words_equal(w.inverse() * x * w, y)
    chk = IdentityCheck(name, n, w, x, y, holds, other, base)
    if not holds and base is not None:
        lhs = w * x * w.inverse()
        if is_liftable(lhs, base) and is_liftable(y, base):
            chk.homology_equal = homology_action(lhs, base).matrix == homology_action(y, base).matrix
    return chk


def lasso_identities(n: int) -> list[IdentityCheck]:
    """Every conjugation identity used for the standard complexes at even width n >= 8."""
    if n % 2 or n < 8:
        raise ValueError("identities are stated for even n >= 8")
    out: list[IdentityCheck] = []
    d4 = delta4(n)

    if n == 8:
        w = gen(n, 5) * d4 * gen(n, 6) * gen(n, 5)
        out.append(_check("w=b5 d4 b6 b5: w b6 w^-1 = d4", n, w, gen(n, 6), d4))
    else:
        for label, dk in (("literal", delta_k(n - 2, n)), ("pattern", delta_k_pattern(n - 2, n))):
            w = dk * BraidWord(n, tuple((i, 1) for i in (n - 4, n - 5, n - 3, n - 4, n - 2, n - 3)))
            out.append(_check(f"w=d_(n-2) b_(n-4) b_(n-5) b_(n-3) b_(n-4) b_(n-2) b_(n-3) ({label} d_(n-2)): "
                              "w b_(n-2) w^-1 = d_(n-2) b_(n-5) d_(n-2)^-1",
                              n, w, gen(n, n - 2), dk * gen(n, n - 5) * dk.inverse()))

    # tail from the (n-2, n-1) vertex of the tilde row to its (2, 3) vertex
    w = descending(n, n - 3, 2) * descending(n, n - 2, 3)
    out.append(_check("w=b_(n-3)..b2 b_(n-2)..b3: w b2 w^-1 = b_(n-2)", n, w, gen(n, 2), gen(n, n - 2)))
    for i in range(4, n - 1):
        out.append(_check(f"w=b_(n-3)..b2 b_(n-2)..b3: w b{i} w^-1 = b{i - 2}", n, w, gen(n, i), gen(n, i - 2)))

    if n >= 10:
        w = descending(n, n - 2, 7)
        out.append(_check("w=b_(n-2)..b7: w b_(n-2) w^-1 = b_(n-3)", n, w, gen(n, n - 2), gen(n, n - 3)))

    # tail around the (n-1) vertex of the complex of rho_{2,3,n-1}
    base = rho_I(n, [2, 3, n - 1])
    w = descending(n, n - 2, 5) * d4 * gen(n, 4) * ascending(n, 5, n - 2)
    for i in [0, 1, 2] + list(range(5, n - 1)):
        x = gen(n, i, 3) if i == 1 else gen(n, i)
        out.append(_check(f"w=b_(n-2)..b5 d4 b4 b5..b_(n-2): w {'b1^3' if i == 1 else f'b{i}'} w^-1 = same",
                          n, w, x, x, base))
    out.append(_check("w=b_(n-2)..b5 d4 b4 b5..b_(n-2): w b4 w^-1 = d4", n, w, gen(n, 4), d4, base))
    out.append(_check("w=b_(n-2)..b5 d4 b4 b5..b_(n-2): w d4 w^-1 = b4", n, w, d4, gen(n, 4), base))
    tail = descending(n, n - 2, 5, -1) * gen(n, 4, -1) * d4.inverse() * ascending(n, 5, n - 2, -1)
    out.append(_check("w=b_(n-2)..b5 d4 b4 b5..b_(n-2): w b3 w^-1 = [b3] b_(n-2)^-1..b5^-1 b4^-1 d4^-1 "
                      "b5^-1..b_(n-2)^-1", n, w, gen(n, 3), gen(n, 3).conj(tail), base))
    short = gen(n, 4, -1) * d4.inverse() * ascending(n, 5, n - 2, -1)
    out.append(_check("[b3] b_(n-2)^-1..b5^-1 b4^-1 d4^-1 b5^-1..b_(n-2)^-1 = [b3] b4^-1 d4^-1 b5^-1..b_(n-2)^-1",
                      n, BraidWord(n), gen(n, 3).conj(tail), gen(n, 3).conj(short)))
    return out


@dataclass
class HandleSwap:
    """Result of relating two handles of the width-8 complex over rho_{2,3,7}."""
    x: BraidWord
    y_literal: BraidWord
    y_corrected: BraidWord
    literal_liftable: bool
    certificate: RewriteCertificate


def flip_disjoint_crossings(cb: ColoredBraid) -> RewriteCertificate:
    """Invert every crossing between disjoint colors with a P insertion and a free cancellation."""
    b = Builder(cb)
    for p, (i, e) in enumerate(cb.letters):
        c = b.current.colors_at(p)
        if disjoint(c[i], c[i + 1]):
            b.do(StepKind.P_INSERT, p + 1, i, -e)
            b.do(StepKind.FREE_CANCEL, p, i, e)
    return b.certificate()


def handle_swap(n: int = 8) -> HandleSwap:
    """Certify [b6] b5^-1 b4^-1 b3^-1 ~ [b3] b4^-1 b5^-1 b6^-1 over rho_{2,3,7}.

    The variant ending at b4^-1 is not liftable there, so it is reported and
    the one with the extra b3^-1 is certified instead.
    """
    base = rho_I(n, [2, 3, 7])
    x = gen(n, 3).conj(gen(n, 4, -1) * gen(n, 5, -1) * gen(n, 6, -1))
    y_lit = gen(n, 6).conj(gen(n, 5, -1) * gen(n, 4, -1))
    y = gen(n, 6).conj(gen(n, 5, -1) * gen(n, 4, -1) * gen(n, 3, -1))
    flip = flip_disjoint_crossings(ColoredBraid(base, y))
    cert = flip.then(isotopy_certificate(flip.end, x))
    return HandleSwap(x, y_lit, y, is_liftable(y_lit, base), cert)
