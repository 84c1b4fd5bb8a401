"""The thirteen acceptance checks, shared by ``colorbraid verify`` and the test suite.

Each check returns a :class:`Criterion` with a pass flag, a one-line summary
and optional notes.  Nothing here relaxes an oracle: when a literal statement
fails, the criterion is red and the notes record the closest variant that does
hold.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .action import apply, bw_generator_set, delta4_table, is_liftable, orbit, standard_label, \
    verify_orbit_classification
from .braid import BraidWord, delta4, delta6, gen
from .catalog import census, commutator_certificate, derive_move, kernel_generator_list, move_specs
from .complex import build_complex, schreier_generators
from .covering import Coloring, rho_I, rho_tilde_I
from .homlift import build_surface, deviation_rank, homology_action, is_unipotent
from .identities import handle_swap, lasso_identities
from .perm import T, kappa
from .rewrite import Builder, ColoredBraid, RewriteCertificate, StepKind, apply_step, applicable, replay
from .tangle import TangleCertificate


@dataclass
class Criterion:
    number: int
    title: str
    passed: bool = True
    detail: str = ""
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:>2} {self.title}: {self.detail} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "detail": self.detail, "notes": self.notes, "seconds": round(self.seconds, 3)}


KAPPA_TABLE = {(1, 2): (1, 2), (3, 4): (1, 2), (2, 3): (2, 3),
               (1, 4): (2, 3), (1, 3): (1, 3), (2, 4): (1, 3)}

FIG1_PANELS = (
    ((T(1, 2), T(1, 2)), (T(1, 2), T(1, 2))),
    ((T(1, 2), T(2, 3)), (T(1, 3), T(1, 2))),
    ((T(1, 2), T(3, 4)), (T(3, 4), T(1, 2))),
)

SQUARE_EDGES = {("23", "24", "b3"), ("24", "25", "b4"), ("24", "34", "b2"),
                ("25", "35", "b2"), ("34", "35", "b4"), ("35", "45", "b3")}
TILDE_EDGES = {("2", "3", "b2"), ("3", "4", "b3"), ("4", "5", "b4"),
               ("~2", "~3", "b2"), ("~3", "~4", "b3"), ("~4", "~5", "b4"),
               ("2", "~2", "d4"), ("3", "~3", "d4"), ("4", "~4", "d4"), ("5", "~5", "d4")}


def _random_coloring(rng: random.Random, n: int, d: int) -> Coloring:
    pairs = [(a, b) for a in range(1, d + 1) for b in range(a + 1, d + 1)]
    return Coloring(d, tuple(T(*rng.choice(pairs)) for _ in range(n)))


def _random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple((rng.randrange(n - 1), rng.choice((1, -1))) for _ in range(length)))


def _relator(rng: random.Random, n: int) -> BraidWord:
    i = rng.randrange(n - 1)
    kinds = ["free"] + (["braid"] if i + 1 < n - 1 else []) + (["far"] if n >= 4 else [])
    kind = rng.choice(kinds)
    if kind == "free":
        return gen(n, i) * gen(n, i, -1)
    if kind == "braid":
        a, b = gen(n, i), gen(n, i + 1)
        return a * b * a * (b * a * b).inverse()
    j = rng.choice([j for j in range(n - 1) if abs(j - i) >= 2] or [i])
    a, b = gen(n, i), gen(n, j)
    return a * b * a.inverse() * b.inverse()


def _edge_set(c: Coloring) -> tuple[int, set[tuple[str, str, str]]]:
    x = build_complex(c)
    edges = set()
    for cell in x.cells:
        if cell.a != cell.b:
            u, v = sorted((standard_label(x.vertices[cell.a]), standard_label(x.vertices[cell.b])))
            edges.add((u, v, x.label_name(cell.label)))
    return len(x.vertices), edges


# ---------------------------------------------------------------- criteria

def kappa_images() -> Criterion:
    got = {k: tuple(kappa(T(*k))) for k in KAPPA_TABLE}
    bad = [k for k in KAPPA_TABLE if got[k] != KAPPA_TABLE[k]]
    return Criterion(1, "kappa table", not bad, f"{6 - len(bad)}/6 images match")


def action_rules(samples: int = 10_000, seed: int = 1) -> Criterion:
    crit = Criterion(2, "generator action")
    panels = [apply(gen(2, 0), Coloring(4, before)).colors == after for before, after in FIG1_PANELS]
    rng = random.Random(seed)
    broken = 0
    for _ in range(samples):
        n, d = rng.randint(3, 6), rng.randint(2, 5)
        c = _random_coloring(rng, n, d)
        w = _random_word(rng, n, rng.randint(0, 12))
        k = rng.randint(0, len(w))
        w2 = BraidWord(n, w.letters[:k]) * _relator(rng, n) * BraidWord(n, w.letters[k:])
        broken += apply(w, c) != apply(w2, c)
    crit.passed = all(panels) and broken == 0
    crit.detail = f"panels {sum(panels)}/3, relator insertions changing the result {broken}/{samples}"
    return crit


def delta4_on_width_six() -> Criterion:
    rows = delta4_table()
    bad = [r.name for r in rows if not r.passed]
    return Criterion(3, "delta4 on width-6 standard colorings", not bad,
                     f"{len(rows) - len(bad)}/{len(rows)} table entries hold", bad)


def orbit_sizes(widths: tuple[int, ...] = (6, 7, 8, 9)) -> Criterion:
    crit = Criterion(4, "orbit sizes and classification")
    size6, edges6 = _edge_set(rho_I(6, [2, 3]))
    size8, edges8 = _edge_set(rho_tilde_I(6, [4]))
    gens = bw_generator_set(6)
    sizes_ok = len(orbit(rho_I(6, [2, 3]), gens)) == 6 and len(orbit(rho_tilde_I(6, [4]), gens)) == 8
    labels_ok = edges6 == SQUARE_EDGES and edges8 == TILDE_EDGES
    rows = [r for n in widths for r in verify_orbit_classification(n)]
    bad = [r.line() for r in rows if not r.passed]
    crit.passed = sizes_ok and labels_ok and not bad
    crit.detail = (f"|C(rho23^6)|={size6}, |C(rhot4^6)|={size8}, edge labels "
                   f"{'match' if labels_ok else 'differ'}, classification {len(rows) - len(bad)}/{len(rows)} "
                   f"for n in {list(widths)}")
    crit.notes = bad
    return crit


def identity_suite(widths: tuple[int, ...] = (8, 10)) -> Criterion:
    checks = [c for n in widths for c in lasso_identities(n)]
    bad = [c for c in checks if not c.holds]
    crit = Criterion(5, "conjugation identity suite", not bad,
                     f"{len(checks) - len(bad)}/{len(checks)} identities hold as braids")
    crit.notes = [c.line() for c in bad]
    return crit


def cover_rank(widths: tuple[int, ...] = (6, 8, 10, 12)) -> Criterion:
    ranks = {n: build_surface(rho_I(n, [2, 3])).rank for n in widths}
    ok = all(r == n - 6 for n, r in ranks.items())
    return Criterion(6, "H1 rank of the closed cover", ok,
                     ", ".join(f"n={n}: {r}" for n, r in ranks.items()) + " (expected n-6)")


def generator_actions() -> Criterion:
    crit = Criterion(7, "generator actions on H1")
    dets = []
    for n in (8, 10):
        c = rho_I(n, [2, 3])
        h = {name: homology_action(w, c) for name, w in
             (("b0", gen(n, 0)), ("b2", gen(n, 2)), ("b4", gen(n, 4)), ("d4", delta4(n)))}
        dets += [a.det() for a in h.values()]
        ok = h["b0"].is_identity() and h["b2"].is_identity()
        ok &= h["d4"].matrix == h["b4"].matrix and not h["b4"].is_identity()
        if not ok:
            crit.passed = False
            crit.notes.append(f"n={n}: b0/b2 identity or d4=b4 != identity fails")
    h6 = homology_action(delta6(10), rho_I(10, [2, 3]))
    dets.append(h6.det())
    unip = is_unipotent(h6) and deviation_rank(h6) == 1
    crit.passed = crit.passed and unip and all(x == 1 for x in dets)
    crit.detail = (f"b0=b2=id, d4=b4!=id at n=8,10; d6 at n=10 unipotent rank-one: {'yes' if unip else 'no'}; "
                   f"det=1 on {sum(x == 1 for x in dets)}/{len(dets)}")
    return crit


def kernel_generators(n: int = 10) -> Criterion:
    crit = Criterion(8, "kernel generators on H1")
    c = rho_I(n, [2, 3])

    def tally(gens):
        lift = [g for g in gens if is_liftable(g.word, c)]
        triv = [g for g in lift if homology_action(g.word, c).is_identity()]
        return len(gens), len(lift), len(triv), [g.family for g in gens if g not in triv]

    total, lift, triv, bad = tally(kernel_generator_list(n))
    b4_nontrivial = not homology_action(gen(n, 4), c).is_identity()
    crit.passed = not bad and b4_nontrivial
    crit.detail = f"{triv}/{total} liftable and trivial ({lift} liftable); b4 nontrivial: {b4_nontrivial}"
    by_family: dict[str, int] = {}
    for fam in bad:
        by_family[fam] = by_family.get(fam, 0) + 1
    if bad:
        crit.notes.append("failing generators by family: " + ", ".join(f"{k} {v}" for k, v in sorted(by_family.items())))
        s_total, s_lift, s_triv, _ = tally(kernel_generator_list(n, symmetric_b=True))
        crit.notes.append(f"with the symmetric conjugator in B: {s_triv}/{s_total} liftable and trivial")
    return crit


def _random_certificate(rng: random.Random, steps: int) -> RewriteCertificate:
    n = rng.randint(3, 6)
    base = _random_coloring(rng, n, rng.randint(2, 5))
    b = Builder(ColoredBraid(base, _random_word(rng, n, rng.randint(0, 6))))
    for _ in range(steps):
        cur = b.current
        at = rng.randint(0, len(cur.letters))
        options = [st for st in applicable(cur, at) if len(cur.letters) < 16 or "INSERT" not in st.kind.value]
        if options:
            st = rng.choice(options)
            b.do(st.kind, st.pos, st.i, st.exp, st.letters)
    return b.certificate()


def mp_soundness(certs: int = 10_000, words: int = 100, seed: int = 2) -> Criterion:
    crit = Criterion(9, "M/P soundness")
    rng = random.Random(seed)
    bad_replay = sum(not replay(_random_certificate(rng, rng.randint(1, 8))) for _ in range(certs))
    c = rho_I(8, [2, 3])
    schreier = schreier_generators(build_complex(c))
    changed = tried = 0
    while tried < words:
        w = BraidWord(8)
        for _ in range(rng.randint(1, 3)):
            w = w * rng.choice(schreier) ** rng.choice((1, -1))
        cb = ColoredBraid(c, w)
        at = rng.randint(0, len(w))
        ins = [st for st in applicable(cb, at) if st.kind in (StepKind.M_INSERT, StepKind.P_INSERT)]
        if not ins:
            continue
        tried += 1
        st = rng.choice(ins)
        after = apply_step(cb, st)
        changed += homology_action(after.word, c).matrix != homology_action(w, c).matrix
    crit.passed = bad_replay == 0 and changed == 0
    crit.detail = (f"{certs - bad_replay}/{certs} random certificates replay; "
                   f"{changed}/{tried} M/P insertions changed the H1 action")
    return crit


def _cert_summary(cert: TangleCertificate) -> str:
    return ", ".join(f"{k} {v}" for k, v in sorted(cert.counts().items()))


def commutator() -> Criterion:
    crit = Criterion(10, "commutator of d4 and b4")
    n = 6
    c = rho_I(n, [2, 3])
    d4, b4 = delta4(n), gen(n, 4)
    w = d4 * b4 * d4.inverse() * b4.inverse()
    trivial = is_liftable(w, c) and homology_action(w, c).is_identity()
    cert = commutator_certificate()
    ok = cert.replay()
    crit.passed = trivial and ok
    crit.detail = (f"H1-trivial over rho23^6: {trivial}; shipped certificate replays: {ok} "
                   f"({len(cert.steps)} steps)")
    crit.notes = ["the shipped certificate is a stabilized tangle certificate: " + _cert_summary(cert),
                  "no braid-level search is run here; the shipped certificate is checked first"]
    return crit


def handle_identity() -> Criterion:
    crit = Criterion(11, "handle identity at n=8")
    h = handle_swap(8)
    base = h.certificate.start.source
    literal_equal = (h.literal_liftable and is_liftable(h.x, base)
                     and homology_action(h.x, base).matrix == homology_action(h.y_literal, base).matrix)
    corrected_equal = homology_action(h.x, base).matrix == homology_action(h.y_corrected, base).matrix
    cert_ok = replay(h.certificate) and h.certificate.end.word == h.x
    crit.passed = literal_equal
    crit.detail = (f"literal pair equal on H1 over {base.text()}: "
                   f"{'yes' if literal_equal else 'no'} (second word liftable: {h.literal_liftable})")
    crit.notes = [f"{h.y_corrected.text()} vs {h.x.text()}: equal on H1 {corrected_equal}, "
                  f"M/P certificate replays {cert_ok} ({', '.join(f'{k} {v}' for k, v in sorted(h.certificate.counts().items()))})"]
    return crit


def move_catalog() -> Criterion:
    crit = Criterion(12, "moves catalog")
    rows = []
    for spec in move_specs().values():
        rows += spec.checks(spec.min_n)
    bad = [r.line() for r in rows if not r.passed]
    derived = {}
    for mid in ("I", "V"):
        cert = derive_move(mid)
        derived[mid] = bool(cert) and cert.replay()
    crit.passed = not bad and all(derived.values())
    crit.detail = (f"{len(rows) - len(bad)}/{len(rows)} lhs checks pass; derivations replay: "
                   + ", ".join(f"{k} {v}" for k, v in derived.items()))
    crit.notes = bad + [f"derivation {k}: {_cert_summary(derive_move(k))}" for k in derived if derived[k]]
    return crit


def census_check() -> Criterion:
    crit = Criterion(13, "degree-5 census at n=6")
    first = census(6, 5)
    again = census(6, 5).dumps()
    same = first.dumps() == again
    crit.passed = first.classified_by_monodromy and same
    crit.detail = (f"{first.connected} connected sequences in {len(first.orbits)} orbits, classified by "
                   f"monodromy: {first.classified_by_monodromy}; byte-identical rerun: {same}")
    return crit


def _widths(candidates: Sequence[int], n_max: int) -> tuple[int, ...]:
    return tuple(n for n in candidates if n <= n_max)


CRITERIA: dict[int, Callable[[int], Criterion]] = {
    1: lambda n_max: kappa_images(),
    2: lambda n_max: action_rules(),
    3: lambda n_max: delta4_on_width_six(),
    4: lambda n_max: orbit_sizes(_widths((6, 7, 8, 9), n_max)),
    5: lambda n_max: identity_suite(_widths((8, 10), n_max)),
    6: lambda n_max: cover_rank(_widths((6, 8, 10, 12), n_max)),
    7: lambda n_max: generator_actions(),
    8: lambda n_max: kernel_generators(),
    9: lambda n_max: mp_soundness(),
    10: lambda n_max: commutator(),
    11: lambda n_max: handle_identity(),
    12: lambda n_max: move_catalog(),
    13: lambda n_max: census_check(),
}


def run_criterion(k: int, n_max: int = 12) -> Criterion:
    """Run one check.  ``n_max`` caps the widths of the families that scale with n."""
    if k not in CRITERIA:
        raise ValueError(f"no criterion {k}; choose 1..{len(CRITERIA)}")
    t0 = time.perf_counter()
    crit = CRITERIA[k](n_max)
    crit.seconds = time.perf_counter() - t0
    return crit


def run_all(only: Sequence[int] | None = None, n_max: int = 12) -> list[Criterion]:
    return [run_criterion(k, n_max) for k in (only or sorted(CRITERIA))]
