"""Non-local moves, kernel generators and the orbit census.

A move is a colored braid (its left-hand side) over a context coloring; the
right-hand side is always the empty braid.  The two necessary conditions for
a move to preserve the covering manifold are checked on every move: the lhs
is liftable over its context and acts trivially on H1 of the closed cover.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Sequence

from . import kernels
from .action import CheckResult, apply, bw_generator_set, codec, is_liftable, orbit
from .braid import BraidWord, delta4, delta6, gen, parse_word
from .covering import Coloring, boundary_monodromy, is_connected, rho_I
from .homlift import homology_action
from .perm import T, cycle_text
from .rewrite import ColoredBraid, Unknown, certify_equal
from .tangle import ColoredTangle, TangleCertificate

MOVE_IDS = ("I", "II", "III", "IV", "V")
DERIVABLE = ("I", "V")


class MoveValidationError(ValueError):
    """A move's lhs is not liftable or not homology-trivial over its context."""


def _data(name: str) -> dict:
    return json.loads(resources.files("colorbraid").joinpath("data", name).read_text())


# ---------------------------------------------------------------- moves

@dataclass(frozen=True)
class MoveSpec:
    id: str
    prefix: tuple  # leading colors of the context; the rest are (23)
    lhs_text: str
    min_n: int
    origin: str
    note: str = ""

    def context(self, n: int) -> Coloring:
        if n < self.min_n or (n - len(self.prefix)) % 2:
            raise ValueError(f"move {self.id} needs an even width >= {self.min_n}, got {n}")
        return Coloring(4, tuple(self.prefix) + (T(2, 3),) * (n - len(self.prefix)))

    def lhs(self, n: int) -> BraidWord:
        return parse_word(self.lhs_text, n)

    def colored(self, n: int) -> ColoredBraid:
        return ColoredBraid(self.context(n), self.lhs(n))

    def checks(self, n: int) -> list[CheckResult]:
        cb = self.colored(n)
        lift = is_liftable(cb.word, cb.source)
        out = [CheckResult(f"move {self.id} lhs liftable at n={n}", lift, cb.source.text())]
        if lift:
            h = homology_action(cb.word, cb.source)
            out.append(CheckResult(f"move {self.id} lhs homology-trivial at n={n}", h.is_identity(),
                                   f"rank {h.size}"))
        else:
            out.append(CheckResult(f"move {self.id} lhs homology-trivial at n={n}", False, "not liftable"))
        return out

    def to_json(self) -> dict:
        return {"id": self.id, "prefix": [[t.a, t.b] for t in self.prefix], "lhs": self.lhs_text,
                "min_n": self.min_n, "origin": self.origin, "note": self.note}

    @classmethod
    def from_json(cls, obj: dict) -> "MoveSpec":
        return cls(obj["id"], tuple(T(a, b) for a, b in obj["prefix"]), obj["lhs"], int(obj["min_n"]),
                   obj.get("origin", ""), obj.get("note", ""))


@lru_cache(maxsize=1)
def move_specs() -> dict[str, MoveSpec]:
    """All five moves, each validated at its minimum width; raises on a bad entry."""
    specs = {}
    for obj in _data("moves.json")["moves"]:
        spec = MoveSpec.from_json(obj)
        bad = [r for r in spec.checks(spec.min_n) if not r.passed]
        if bad:
            raise MoveValidationError("; ".join(r.line() for r in bad))
        specs[spec.id] = spec
    return specs


def move_lhs(move_id: str, n: int) -> ColoredBraid:
    specs = move_specs()
    if move_id not in specs:
        raise ValueError(f"unknown move {move_id!r}; expected one of {', '.join(MOVE_IDS)}")
    spec = specs[move_id]
    cb = spec.colored(n)
    bad = [r for r in spec.checks(n) if not r.passed]
    if bad:
        raise MoveValidationError("; ".join(r.line() for r in bad))
    return cb


# ---------------------------------------------------------------- derivations

@lru_cache(maxsize=None)
def shipped_certificate(name: str) -> TangleCertificate:
    return TangleCertificate.from_json(_data(f"{name}.json"))


def _as_tangle(cb: ColoredBraid) -> ColoredTangle:
    return ColoredTangle.from_braid(cb.source, cb.word)


def derive_move(move_id: str) -> TangleCertificate | Unknown:
    """Certificate taking the move's lhs to the empty tangle, or UNKNOWN.

    The certificate is shipped as data; it is replayed here and must start at
    the lhs over the width-8 context and end at the empty tangle on the same
    colors.
    """
    if move_id not in DERIVABLE:
        return Unknown(f"no derivation for move {move_id}", 0)
    cert = shipped_certificate(f"derivation_{move_id}")
    cb = move_lhs(move_id, 8)
    start = _as_tangle(cb)
    end = ColoredTangle(4, cb.source.colors, ())
    if cert.start != start or cert.end != end:
        raise MoveValidationError(f"derivation of move {move_id} does not match its lhs")
    failure = cert.first_failure()
    if failure:
        raise MoveValidationError(f"derivation of move {move_id} fails: {failure}")
    return cert


def commutator_certificate() -> TangleCertificate:
    """Shipped certificate taking d4 b4 d4^-1 b4^-1 over rho_I(6,{2,3}) to the empty tangle."""
    cert = shipped_certificate("commutator_d4_b4")
    d4, b4 = delta4(6), gen(6, 4)
    c = d4 * b4 * d4.inverse() * b4.inverse()
    base = rho_I(6, [2, 3])
    if cert.start != ColoredTangle.from_braid(base, c) or cert.end != ColoredTangle(4, base.colors, ()):
        raise MoveValidationError("commutator certificate does not match its braid")
    return cert


# ---------------------------------------------------------------- kernel generators

Token = tuple  # ("b", i, e) for a letter that may become d4, ("w", BraidWord) otherwise


def _expand(tokens: Sequence[Token], n: int, swap: frozenset[int] = frozenset()) -> BraidWord:
    out = BraidWord(n)
    slot = 0
    d4 = delta4(n)
    for tok in tokens:
        if tok[0] == "b":
            _, i, e = tok
            out = out * ((d4 if e > 0 else d4.inverse()) if slot in swap else gen(n, i, e))
            slot += 1
        else:
            out = out * tok[1]
    return out


def _letters(n: int, idx: Sequence[int], e: int = 1) -> list[Token]:
    """Letters as tokens; occurrences of b4 are substitution slots."""
    return [("b", i, e) if i == 4 else ("w", gen(n, i, e)) for i in idx]


def _invert(tokens: Sequence[Token]) -> list[Token]:
    out = []
    for tok in reversed(tokens):
        out.append(("b", tok[1], -tok[2]) if tok[0] == "b" else ("w", tok[1].inverse()))
    return out


def b_tokens(g: int, n: int, symmetric: bool = False) -> list[Token]:
    """``(b4 b5 b6)^4 ([d6^-1] u) d6^-1`` with u = b6^-1 b5^-1 b4^-2 b5^-1 b6^-1 b7^-1.

    ``symmetric=True`` uses u = b7^-1 b6^-1 b5^-1 b4^-2 b5^-1 b6^-1 b7^-1 instead.
    """
    if n < 2 * g + 6 or n < 9:
        raise ValueError(f"B needs at least {max(2 * g + 6, 9)} strands")
    head = _letters(n, (4, 5, 6)) * 4
    tail_idx = ((7,) if symmetric else ()) + (6, 5, 4, 4, 5, 6, 7)
    u = _letters(n, tail_idx, -1)
    d6i = ("w", delta6(n).inverse())
    return head + _invert(u) + [d6i] + u + [d6i]


def d_tokens(g: int, n: int) -> list[Token]:
    """``b_{2g+4} chi b_{2g+4}^-1 chi^-1`` with chi = b_{2g+3}..b5 b4^2 b5..b_{2g+3}."""
    if n < 2 * g + 6:
        raise ValueError(f"D needs at least {2 * g + 6} strands")
    chi = _letters(n, tuple(range(2 * g + 3, 4, -1)) + (4, 4) + tuple(range(5, 2 * g + 4)))
    b = ("w", gen(n, 2 * g + 4))
    return [b] + chi + [("w", gen(n, 2 * g + 4, -1))] + _invert(chi)


def substitution_variants(tokens: Sequence[Token], n: int) -> list[tuple[tuple[int, ...], BraidWord]]:
    """Every word obtained by turning a subset of the b4 slots into d4 (same exponent)."""
    slots = sum(1 for t in tokens if t[0] == "b")
    out = []
    for r in range(slots + 1):
        for sub in itertools.combinations(range(slots), r):
            out.append((sub, _expand(tokens, n, frozenset(sub))))
    return out


@dataclass
class KernelGenerator:
    name: str
    word: BraidWord
    family: str
    swapped: tuple[int, ...] = ()


def kernel_generator_list(n: int, symmetric_b: bool = False) -> list[KernelGenerator]:
    """b0, b2, B, D and all their b4 -> d4 substitution variants over width n = 2g + 6."""
    if n % 2 or n < 10:
        raise ValueError("kernel generators need an even width n = 2g + 6 with g >= 2")
    g = (n - 6) // 2
    out = [KernelGenerator("b0", gen(n, 0), "b0"), KernelGenerator("b2", gen(n, 2), "b2")]
    fam = "Bsym" if symmetric_b else "B"
    for sub, w in substitution_variants(b_tokens(g, n, symmetric_b), n):
        out.append(KernelGenerator(f"{fam}{list(sub)}", w, fam, sub))
    for sub, w in substitution_variants(d_tokens(g, n), n):
        out.append(KernelGenerator(f"D{list(sub)}", w, "D", sub))
    return out


# ---------------------------------------------------------------- census

@dataclass
class OrbitStats:
    size: int
    monodromy: str
    seed: str
    sampled: int = 0
    homology_trivial: int = 0
    certified: int = 0
    unknown: int = 0

    def to_json(self) -> dict:
        return {"size": self.size, "monodromy": self.monodromy, "seed": self.seed,
                "schreier": {"sampled": self.sampled, "homology_trivial": self.homology_trivial,
                             "certified": self.certified, "unknown": self.unknown}}


@dataclass
class CensusReport:
    n: int
    d: int
    mode: str
    generators: str
    total: int
    connected: int
    orbits: list[OrbitStats] = field(default_factory=list)

    @property
    def classified_by_monodromy(self) -> bool:
        mons = [o.monodromy for o in self.orbits]
        return len(mons) == len(set(mons))

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "mode": self.mode, "generators": self.generators,
                "total": self.total, "connected": self.connected,
                "classified_by_monodromy": self.classified_by_monodromy,
                "orbits": [o.to_json() for o in self.orbits]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1) + "\n"

    def table(self) -> str:
        lines = [f"n={self.n} d={self.d} mode={self.mode} generators={self.generators}",
                 f"sequences {self.total}, connected {self.connected}, orbits {len(self.orbits)}, "
                 f"classified by monodromy: {'yes' if self.classified_by_monodromy else 'no'}",
                 f"{'size':>8}  {'monodromy':<16} {'triv':>5} {'cert':>5} {'unk':>5}  seed"]
        for o in self.orbits:
            lines.append(f"{o.size:>8}  {o.monodromy:<16} {o.homology_trivial:>5} {o.certified:>5} "
                         f"{o.unknown:>5}  {o.seed}")
        return "\n".join(lines) + "\n"


def _decode(code: int, n: int, cd) -> Coloring:
    base = len(cd.trans)
    digits = []
    for _ in range(n):
        digits.append(code % base)
        code //= base
    return cd.decode(digits)


def _schreier_sample(seed: Coloring, gens: Sequence[BraidWord], limit: int) -> list[BraidWord]:
    """The first ``limit`` Schreier generators of the stabilizer of ``seed`` in BFS order."""
    n = seed.n
    tree = {seed: BraidWord(n)}
    queue = deque([seed])
    out = []
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for g in gens:
            w = apply(g, v)
            if w not in tree:
                tree[w] = tree[v] * g
                queue.append(w)
    for v in order:
        for g in gens:
            w = apply(g, v)
            s = tree[v] * g * tree[w].inverse()
            if tree[v] * g == tree[w]:
                continue
            out.append(s)
            if len(out) >= limit:
                return out
    return out


def _orbit_stats(seed: Coloring, size: int, gens: Sequence[BraidWord], sample: int) -> OrbitStats:
    st = OrbitStats(size, cycle_text(boundary_monodromy(seed)), seed.text())
    if not sample:
        return st
    for s in _schreier_sample(seed, gens, sample):
        st.sampled += 1
        try:
            triv = homology_action(s, seed).is_identity()
        except Exception:  # noqa: BLE001  torsion or a degenerate surface: count as not trivial
            triv = False
        st.homology_trivial += triv
        cert = certify_equal(ColoredBraid(seed, s), ColoredBraid(seed, BraidWord(seed.n)))
        if cert is not None:
            st.certified += 1
        else:
            st.unknown += 1
    return st


def census(n: int, d: int, mode: str = "exhaustive", sample: int = 0,
           seeds: Sequence[Coloring] = ()) -> CensusReport:
    """Orbits of connected d-colorings of n points.

    ``exhaustive`` enumerates every sequence and splits the connected ones into
    orbits of the full braid group.  ``seeded`` runs a breadth-first search
    from each seed under the liftable generators of the 3-fold cover instead.
    ``sample`` Schreier generators per orbit get homology and M/P statistics.
    """
    if d not in (4, 5):
        raise ValueError("census supports degree 4 or 5")
    if mode == "exhaustive":
        if n > 6:
            raise ValueError("exhaustive census is limited to n <= 6")
        cd = codec(d)
        labels = kernels.census_labels(n, d, cd.pairs, cd.conj_table)
        first: dict[int, int] = {}
        sizes: dict[int, int] = {}
        for code, lab in enumerate(labels):
            if lab < 0:
                continue
            first.setdefault(lab, code)
            sizes[lab] = sizes.get(lab, 0) + 1
        gens = [gen(n, i) for i in range(n - 1)]
        rep = CensusReport(n, d, mode, "full", len(labels), sum(sizes.values()))
        for lab in sorted(first):
            seed = _decode(first[lab], n, cd)
            rep.orbits.append(_orbit_stats(seed, sizes[lab], gens, sample))
        return rep
    if mode == "seeded":
        if n > 9:
            raise ValueError("seeded census is limited to n <= 9")
        gens = bw_generator_set(n)
        seeds = list(seeds) or [rho_I(n, [2, 3])]
        rep = CensusReport(n, d, mode, "liftable", 0, 0)
        for s in seeds:
            if s.degree != d or not is_connected(s):
                raise ValueError(f"seed {s.text()} is not a connected {d}-coloring")
            orb = orbit(s, gens)
            rep.total += len(orb)
            rep.connected += len(orb)
            rep.orbits.append(_orbit_stats(s, len(orb), gens, sample))
        return rep
    raise ValueError(f"unknown census mode {mode!r}")
