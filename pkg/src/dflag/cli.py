"""Command line entry point: ``dflag <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from typing import TextIO

from .ci import enumerate_ci_orbits
from .finiteness import (
    JointTriple,
    ParabolicShape,
    composition,
    forbidden_witness,
    is_finite_bruteforce,
    multiple_flag_witness,
    table3_codes,
    table_rows,
)
from .oracle import DEFAULT_BOUND, DEFAULT_TRIALS
from .orbits import OrbitError, StackedPartialPermutation, closure_dot, dim_orbit, enumerate_orbits
from .steinberg import grs, phi_k, phi_s
from .verify import SUITES, ordered_map, suite_ci, suite_closure, suite_grs, suite_nilpotency, suite_oracle, suite_travkin
from .young import format_partition

TSV_HEADER = ("p", "q", "r", "omega", "dim", "lambda", "mu", "signed", "T1", "T2", "lambda_prime", "mu_prime", "nu")


class UsageError(Exception):
    pass


def _comp(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a composition: {text!r}") from None
    if not parts or any(x < 0 for x in parts):
        raise argparse.ArgumentTypeError(f"not a composition: {text!r}")
    return parts


def orbit_record(w: StackedPartialPermutation) -> dict:
    lam, mu = phi_k(w)
    rec = w.to_json()
    rec["dim"] = dim_orbit(w)
    rec["graph"] = w.graph.to_json()
    rec["phi_k"] = {"lambda": list(lam), "mu": list(mu)}
    rec["phi_s"] = phi_s(w).to_json()
    rec["grs"] = grs(w).to_json()
    return rec


def _tsv_row(w: StackedPartialPermutation) -> str:
    lam, mu = phi_k(w)
    t = grs(w)
    fields = (
        w.p, w.q, w.r, str(w), dim_orbit(w), format_partition(lam), format_partition(mu), str(phi_s(w)),
        json.dumps(t.t1.to_json(), separators=(",", ":")), json.dumps(t.t2.to_json(), separators=(",", ":")),
        format_partition(t.lambda_prime), format_partition(t.mu_prime), format_partition(t.nu),
    )  # fmt: skip
    return "\t".join(str(x) for x in fields)


def _json_line(w: StackedPartialPermutation) -> str:
    return json.dumps(orbit_record(w), separators=(",", ":"))


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def cmd_orbits(args: argparse.Namespace, out: TextIO) -> int:
    try:
        orbits = enumerate_orbits(args.p, args.q, args.r)
    except OrbitError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "dot":
        out.write(closure_dot(orbits))
        return 0
    if args.format == "tsv":
        out.write("\t".join(TSV_HEADER) + "\n")
    render = _tsv_row if args.format == "tsv" else _json_line
    # chunked so output streams while the pool works on the next batch
    step = 256
    for k in range(0, len(orbits), step):
        for line in ordered_map(render, orbits[k:k + step]):
            out.write(line + "\n")
    return 0


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    if args.kind == "aiii":
        if args.a is None or args.b is None or args.c is None:
            raise UsageError("classify aiii needs --a, --b and --c")
        try:
            t = JointTriple.from_primes(args.a, args.b, args.c)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        w = forbidden_witness(t)
        rec = {
            "input": t.to_json(),
            "finite": w is None,
            "witness": None if w is None else w.to_json(),
            "tits": str(t.tits()),
            "table_rows": table_rows(ParabolicShape.of(t)),
        }
        if args.bruteforce:
            rec["finite_bruteforce"] = is_finite_bruteforce(t)
    else:
        comps = [args.a1, args.a2, args.a3]
        if any(c is None for c in comps):
            raise UsageError("classify triple-a needs --a1, --a2 and --a3")
        if len({sum(c) for c in comps}) != 1:
            raise UsageError("compositions must have a common total")
        w = multiple_flag_witness(*comps)
        rec = {
            "input": [list(composition(c)) for c in comps],
            "finite": w is None,
            "witness": None if w is None else [list(x) for x in w],
            "table3": table3_codes(*comps),
        }
    out.write(json.dumps(rec, separators=(",", ":")) + "\n")
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    suite = args.suite
    if suite == "oracle":
        rep = suite_oracle(args.seed, args.pmax, args.qmax, args.trials, args.bound)
    elif suite == "closure":
        rep = suite_closure(args.pmax, args.qmax)
    elif suite == "grs":
        rep = suite_grs(args.pmax, args.qmax)
    elif suite == "nilpotency":
        rep = suite_nilpotency(args.seed, args.instances)
    elif suite == "ci":
        rep = suite_ci(args.nmax)
    else:
        rep = suite_travkin(args.nmax)
    for line in rep.lines():
        out.write(line + "\n")
    return 0 if rep.ok else 1


def cmd_ci(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 1:
        raise UsageError("n must be positive")
    for o in enumerate_ci_orbits(args.n):
        out.write(json.dumps(o.to_json(), separators=(",", ":")) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dflag", description="Orbits of the AIII double flag variety and related checks.")
    parser.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    o = sub.add_parser("orbits", help="enumerate orbits with dimension, graph, Steinberg maps and gRS data")
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--q", type=int, required=True)
    o.add_argument("--r", type=int, required=True)
    o.add_argument("--format", choices=("json", "tsv", "dot"), default="json")
    o.add_argument("--out", default=argparse.SUPPRESS)
    o.set_defaults(func=cmd_orbits)

    c = sub.add_parser("classify", help="finite type deciders")
    c.add_argument("kind", choices=("aiii", "triple-a"))
    c.add_argument("--a", type=_comp, help="a' (the last part is completed from b')")
    c.add_argument("--b", type=_comp, help="b' (the last part is completed from a')")
    c.add_argument("--c", type=_comp)
    c.add_argument("--a1", type=_comp)
    c.add_argument("--a2", type=_comp)
    c.add_argument("--a3", type=_comp)
    c.add_argument("--bruteforce", action="store_true", help="also run the exhaustive Tits form check")
    c.add_argument("--out", default=argparse.SUPPRESS)
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--pmax", type=int, default=3)
    v.add_argument("--qmax", type=int, default=3)
    v.add_argument("--nmax", type=int, default=3)
    v.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    v.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    v.add_argument("--instances", type=int, default=200)
    v.add_argument("--out", default=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    ci = sub.add_parser("ci", help="type CI orbits embedded in type AIII")
    ci.add_argument("--n", type=int, required=True)
    ci.add_argument("--out", default=argparse.SUPPRESS)
    ci.set_defaults(func=cmd_ci)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _output(args.out) as out:
            return args.func(args, out)
    except UsageError as exc:
        print(f"dflag: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head); not an error
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
