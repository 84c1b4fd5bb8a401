"""Command-line front end.

Every subcommand prints JSON lines on stdout; ``--pretty`` switches to tables.
Exit codes: 0 success, 1 a verification failed, 2 bad usage or input,
3 a search ran out of budget.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .action import CapExceeded, apply, bw_generator_set, full_generators, generator_names, is_liftable, orbit
from .braid import BraidWord, parse_word
from .covering import Coloring, coloring_arg
from .homlift import NotLiftable, homology_action

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class Config:
    """Search budgets and output settings; CLI flags beat environment variables."""
    depth: int = 24
    length: int = 64
    states: int = 10_000_000
    cap: int = 100_000
    pretty: bool = False
    out: str | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "Config":
        env = os.environ
        cfg = cls(depth=int(env.get("COLORBRAID_MAX_DEPTH", cls.depth)),
                  length=int(env.get("COLORBRAID_MAX_LENGTH", cls.length)),
                  states=int(env.get("COLORBRAID_MAX_STATES", cls.states)),
                  cap=int(env.get("COLORBRAID_BFS_CAP", cls.cap)))
        for name in ("depth", "length", "states", "cap"):
            val = getattr(args, f"max_{name}" if name != "cap" else "cap", None)
            if val is not None:
                setattr(cfg, name, val)
        for name in ("depth", "length", "states", "cap"):
            if getattr(cfg, name) <= 0:
                raise UsageError(f"{name} must be positive")
        cfg.pretty = bool(getattr(args, "pretty", False))
        cfg.out = getattr(args, "out", None)
        return cfg

    def budget(self):
        from .rewrite import Budget
        return Budget(depth=self.depth, length=self.length, states=self.states)


class Output:
    def __init__(self, cfg: Config):
        self.cfg = cfg

    def record(self, obj: dict, text: str | None = None) -> None:
        if self.cfg.pretty and text is not None:
            print(text)
        else:
            print(json.dumps(obj, sort_keys=True))

    def write(self, payload: str) -> None:
        if self.cfg.out:
            with open(self.cfg.out, "w") as fh:
                fh.write(payload)


# ---------------------------------------------------------------- helpers

def _coloring(text: str) -> Coloring:
    try:
        return coloring_arg(text)
    except ValueError as exc:
        raise UsageError(f"bad coloring {text!r}: {exc}") from exc


def _word(text: str, n: int) -> BraidWord:
    try:
        return parse_word(text, n)
    except ValueError as exc:
        raise UsageError(f"bad braid word {text!r}: {exc}") from exc


def _generators(kind: str, n: int) -> tuple[list[BraidWord], list[str]]:
    if kind == "bw":
        return bw_generator_set(n), generator_names(n)
    if kind == "full":
        return full_generators(n), [f"b{i}" for i in range(n - 1)]
    raise UsageError(f"unknown generator set {kind!r}")


def _matrix_text(rows: Sequence[Sequence[int]]) -> str:
    if not rows:
        return "(rank 0)"
    width = max(len(str(x)) for r in rows for x in r)
    return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in rows)


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


# ---------------------------------------------------------------- subcommands

def cmd_act(args, cfg, out) -> int:
    c = _coloring(args.coloring)
    w = _word(args.word, c.n)
    r = apply(w, c)
    out.record({"coloring": c.text(), "word": w.text(), "result": r.text()}, r.text())
    return EXIT_OK


def cmd_liftable(args, cfg, out) -> int:
    c = _coloring(args.coloring)
    w = _word(args.word, c.n)
    ok = is_liftable(w, c)
    out.record({"coloring": c.text(), "word": w.text(), "liftable": ok}, "liftable" if ok else "not liftable")
    return EXIT_OK


def cmd_orbit(args, cfg, out) -> int:
    c = _coloring(args.seed)
    gens, names = _generators(args.gens, c.n)
    orb = orbit(c, gens, cfg.cap, names)
    obj = orb.to_json()
    obj["size"] = len(orb)
    out.record(obj, f"{len(orb)} vertices\n" + "\n".join(v.text() for v in orb.vertices))
    out.write(json.dumps(obj, sort_keys=True, indent=1) + "\n")
    return EXIT_OK


def cmd_complex(args, cfg, out) -> int:
    from .complex import build_complex
    c = _coloring(args.seed)
    gens, names = _generators(args.gens, c.n)
    x = build_complex(c, gens, cfg.cap, names)
    obj = x.to_json()
    out.record(obj, f"{len(x.vertices)} vertices, {len(x.edges())} edges, {len(x.loops())} loops")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(x.to_dot())
    out.write(json.dumps(obj, sort_keys=True, indent=1) + "\n")
    return EXIT_OK


def cmd_lassos(args, cfg, out) -> int:
    from .complex import build_complex, lassos
    c = _coloring(args.seed)
    gens, names = _generators(args.gens, c.n)
    x = build_complex(c, gens, cfg.cap, names)
    for las in lassos(x):
        out.record(las.to_json(names), las.word.text())
    return EXIT_OK


def _certificate_result(cert, out: Output, label: str) -> int:
    from .rewrite import Unknown
    if isinstance(cert, Unknown):
        out.record({"result": "UNKNOWN", "reason": cert.reason, "explored": cert.explored},
                   f"{label}: UNKNOWN ({cert.reason}, {cert.explored} states)")
        return EXIT_UNKNOWN
    obj = cert.to_json()
    out.record({"result": "CERTIFIED", "steps": len(cert.steps), "counts": cert.counts()},
               f"{label}: certified in {len(cert.steps)} steps")
    out.write(json.dumps(obj, sort_keys=True, indent=1) + "\n")
    return EXIT_OK


def cmd_reduce(args, cfg, out) -> int:
    from .rewrite import in_reduced_kernel
    c = _coloring(args.coloring)
    w = _word(args.word, c.n)
    if not is_liftable(w, c):
        raise UsageError(f"{w.text()} is not liftable over {c.text()}")
    return _certificate_result(in_reduced_kernel(w, c, cfg.budget()), out, "reduce")


def cmd_equiv(args, cfg, out) -> int:
    from .rewrite import ColoredBraid, equivalent
    c = _coloring(args.coloring)
    w1, w2 = _word(args.word1, c.n), _word(args.word2, c.n)
    cb1, cb2 = ColoredBraid(c, w1), ColoredBraid(c, w2)
    if cb1.target != cb2.target:
        out.record({"result": "DIFFERENT-TARGETS", "targets": [cb1.target.text(), cb2.target.text()]},
                   "the words end at different colorings")
        return EXIT_FAIL
    return _certificate_result(equivalent(cb1, cb2, cfg.budget()), out, "equiv")


def cmd_check_cert(args, cfg, out) -> int:
    from .rewrite import RewriteCertificate, StepError
    from .tangle import TangleCertificate, TangleError
    obj = _load_json(args.file)
    kind = "tangle" if _is_tangle(obj) else "braid"
    try:
        cert = TangleCertificate.from_json(obj) if kind == "tangle" else RewriteCertificate.from_json(obj)
    except (StepError, TangleError, ValueError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from exc
    ok = cert.replay()
    out.record({"file": args.file, "kind": kind, "steps": len(cert.steps), "replays": ok, "counts": cert.counts()},
               f"{args.file}: {kind} certificate, {len(cert.steps)} steps, {'replays' if ok else 'FAILS'}")
    return EXIT_OK if ok else EXIT_FAIL


def _is_tangle(obj: dict) -> bool:
    start = obj.get("start")
    return isinstance(start, dict) and "letters" in start


def cmd_homology(args, cfg, out) -> int:
    c = _coloring(args.coloring)
    w = _word(args.word, c.n)
    try:
        h = homology_action(w, c)
    except NotLiftable as exc:
        raise UsageError(str(exc)) from exc
    obj = {"coloring": c.text(), "word": w.text(), "rank": h.size, "matrix": [list(r) for r in h.matrix],
           "identity": h.is_identity(), "det": h.det()}
    out.record(obj, f"rank {h.size}, identity: {h.is_identity()}\n{_matrix_text(h.matrix)}")
    return EXIT_OK


def cmd_moves(args, cfg, out) -> int:
    from . import catalog
    if args.action == "list":
        for spec in catalog.move_specs().values():
            out.record(spec.to_json(), f"{spec.id:<4} n>={spec.min_n:<3} {spec.lhs_text}")
        return EXIT_OK
    if args.action == "validate":
        if args.file:
            specs = [catalog.MoveSpec.from_json(o) for o in _load_json(args.file)["moves"]]
        else:
            specs = list(catalog.move_specs().values())
        failed = False
        for spec in specs:
            for n in (args.n,) if args.n else (spec.min_n, spec.min_n + 2):
                for r in spec.checks(n):
                    failed |= not r.passed
                    out.record({"move": spec.id, "n": n, "check": r.name, "passed": r.passed, "detail": r.detail},
                               r.line())
        return EXIT_FAIL if failed else EXIT_OK
    if args.action == "derive":
        if not args.id:
            raise UsageError("moves derive needs a move id")
        cert = catalog.derive_move(args.id)
        code = _certificate_result(cert, out, f"move {args.id}")
        return code
    raise UsageError(f"unknown moves action {args.action!r}")


def cmd_census(args, cfg, out) -> int:
    from .catalog import census
    seeds = [_coloring(s) for s in args.seed]
    try:
        rep = census(args.n, args.d, args.mode, args.sample, seeds)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.record(rep.to_json(), rep.table())
    out.write(rep.table() if cfg.pretty else rep.dumps())
    return EXIT_OK


def cmd_verify(args, cfg, out) -> int:
    from .acceptance import run_criterion
    only = [int(k) for k in args.only.split(",")] if args.only else list(range(1, 14))
    failed = False
    for k in only:
        crit = run_criterion(k, args.n_max)
        failed |= not crit.passed
        text = crit.line() + "".join(f"\n      {note}" for note in crit.notes)
        out.record(crit.to_json(), text)
        sys.stdout.flush()
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON lines")
    common.add_argument("--out", help="also write the full result to this file")
    common.add_argument("--max-depth", type=int, help="search depth (env COLORBRAID_MAX_DEPTH)")
    common.add_argument("--max-length", type=int, help="longest intermediate word (env COLORBRAID_MAX_LENGTH)")
    common.add_argument("--max-states", type=int, help="search states (env COLORBRAID_MAX_STATES)")
    common.add_argument("--cap", type=int, help="orbit size cap (env COLORBRAID_BFS_CAP)")

    p = argparse.ArgumentParser(prog="colorbraid", description="Colored braids and 4-fold branched covers.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("act", parents=[common], help="apply a braid word to a coloring")
    s.add_argument("coloring")
    s.add_argument("word")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("liftable", parents=[common], help="does the word fix the coloring")
    s.add_argument("coloring")
    s.add_argument("word")
    s.set_defaults(func=cmd_liftable)

    for name, func, helptext in (("orbit", cmd_orbit, "orbit of a coloring"),
                                 ("complex", cmd_complex, "orbit complex with a spanning tree"),
                                 ("lassos", cmd_lassos, "lasso words of the orbit complex")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--seed", required=True, help="coloring, e.g. rho23_6 or 'd=4: (12)(12)...'")
        s.add_argument("--gens", default="bw", choices=("bw", "full"))
        if name == "complex":
            s.add_argument("--dot", help="write Graphviz output here")
        s.set_defaults(func=func)

    s = sub.add_parser("reduce", parents=[common], help="M/P certificate from a liftable word to the empty word")
    s.add_argument("coloring")
    s.add_argument("word")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("equiv", parents=[common], help="M/P certificate between two colored braids")
    s.add_argument("coloring")
    s.add_argument("word1")
    s.add_argument("word2")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("check-cert", parents=[common], help="replay a certificate file")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_cert)

    s = sub.add_parser("homology", parents=[common], help="action of a liftable word on H1 of the cover")
    s.add_argument("--coloring", required=True)
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("moves", parents=[common], help="non-local moves: list, validate, derive")
    s.add_argument("action", choices=("list", "validate", "derive"))
    s.add_argument("id", nargs="?")
    s.add_argument("--n", type=int, help="width for validate")
    s.add_argument("--file", help="moves data file to validate instead of the shipped one")
    s.set_defaults(func=cmd_moves)

    s = sub.add_parser("census", parents=[common], help="orbits of connected colorings")
    s.add_argument("--n", type=int, default=6)
    s.add_argument("--d", type=int, default=5)
    s.add_argument("--mode", choices=("exhaustive", "seeded"), default="exhaustive")
    s.add_argument("--sample", type=int, default=0, help="Schreier generators to test per orbit")
    s.add_argument("--seed", action="append", default=[], help="seed coloring for seeded mode")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    s.add_argument("--n-max", type=int, default=12, help="largest width for families that scale with n")
    s.add_argument("--only", help="comma-separated criterion numbers")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = Config.from_args(args)
        return args.func(args, cfg, Output(cfg))
    except (UsageError, NotLiftable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
