"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a Report: a list of named checks with a pass flag and a
short detail string. Work over orbits is farmed out to a process pool whose
size is capped by DFV_THREADS; results are always collected in enumeration
order so the output does not depend on scheduling.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import TypeVar

from .ci import enumerate_ci_orbits, is_symplectic, sigma
from .linalg import char_poly, is_nilpotent, is_zero, matpow
from .nilpotency import CASES, FORM_CASES, counterexample, nilpotency_case_check, random_instance, theta_split
from .oracle import DEFAULT_BOUND, DEFAULT_TRIALS, hom_dim, oracle_phi_k, oracle_phi_s
from .orbits import (
    StackedPartialPermutation,
    closure_leq,
    count_partial_permutations,
    dim_orbit,
    enumerate_orbits,
    rank_matrix,
    variety_dim,
)
from .steinberg import fiber, grs, grs_inverse, phi_k, phi_s
from .young import partitions

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks] + [f"{'PASS' if self.ok else 'FAIL'} suite {self.suite}"]


def workers() -> int:
    try:
        n = int(os.environ.get("DFV_THREADS", "1"))
    except ValueError:
        n = 1
    return max(1, min(n, os.cpu_count() or 1))


def ordered_map(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """map preserving input order, in a process pool when DFV_THREADS > 1."""
    n = workers()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * n))))


def all_orbits(pmax: int, qmax: int, pmin: int = 1, qmin: int = 1) -> list[StackedPartialPermutation]:
    return [
        w
        for p in range(pmin, pmax + 1)
        for q in range(qmin, qmax + 1)
        for r in range(1, p + q + 1)
        for w in enumerate_orbits(p, q, r)
    ]


# oracle


@dataclass(frozen=True)
class _OracleJob:
    w: StackedPartialPermutation
    seed: int
    trials: int
    bound: int


def _oracle_one(job: _OracleJob) -> tuple[bool, bool, bool]:
    w = job.w
    k_ok = phi_k(w) == oracle_phi_k(w, job.seed, job.trials, job.bound)
    s_ok = phi_s(w) == oracle_phi_s(w, job.seed, job.trials, job.bound)
    d_ok = dim_orbit(w) == w.p**2 + w.q**2 - hom_dim(w)
    return k_ok, s_ok, d_ok


def oracle_mismatches(
    orbits: Sequence[StackedPartialPermutation],
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_BOUND,
) -> dict[str, list[StackedPartialPermutation]]:
    results = ordered_map(_oracle_one, [_OracleJob(w, seed, trials, bound) for w in orbits])
    out: dict[str, list[StackedPartialPermutation]] = {"phi_k": [], "phi_s": [], "dim": []}
    for w, (k_ok, s_ok, d_ok) in zip(orbits, results):
        if not k_ok:
            out["phi_k"].append(w)
        if not s_ok:
            out["phi_s"].append(w)
        if not d_ok:
            out["dim"].append(w)
    return out


def suite_oracle(seed: int, pmax: int, qmax: int, trials: int = DEFAULT_TRIALS, bound: int = DEFAULT_BOUND) -> Report:
    rep = Report("oracle")
    orbits = all_orbits(pmax, qmax)
    bad = oracle_mismatches(orbits, seed, trials, bound)
    for key, label in (("phi_k", "phi_k = oracle"), ("phi_s", "phi_s = oracle"), ("dim", "dim = p^2+q^2-hom")):
        first = f", first {bad[key][0]}" if bad[key] else ""
        rep.add(label, not bad[key], f"{len(orbits)} orbits, {len(bad[key])} mismatches{first}")
    return rep


# closure


def suite_closure(pmax: int, qmax: int) -> Report:
    rep = Report("closure")
    n_sets = antisym = trans = maxima = mono = strict = 0
    for p in range(1, pmax + 1):
        for q in range(1, qmax + 1):
            for r in range(1, p + q + 1):
                orbits = enumerate_orbits(p, q, r)
                n_sets += 1
                ranks = [rank_matrix(w) for w in orbits]
                leq = [[closure_leq(a, b) for b in orbits] for a in orbits]
                dims = [dim_orbit(w) for w in orbits]
                m = len(orbits)
                antisym += sum(
                    1 for a in range(m) for b in range(a + 1, m) if (leq[a][b] and leq[b][a]) or ranks[a] == ranks[b]
                )
                antisym += sum(1 for a in range(m) if not leq[a][a])
                trans += sum(
                    1
                    for a in range(m)
                    for b in range(m)
                    if leq[a][b]
                    for c in range(m)
                    if leq[b][c] and not leq[a][c]
                )
                tops = [b for b in range(m) if all(leq[a][b] for a in range(m))]
                if len(tops) != 1 or dims[tops[0]] != variety_dim(p, q, r):
                    maxima += 1
                for a in range(m):
                    for b in range(m):
                        if a != b and leq[a][b]:
                            mono += dims[a] > dims[b]
                            strict += dims[a] == dims[b]
    rep.add("reflexive and antisymmetric", antisym == 0, f"{n_sets} (p,q,r) sets")
    rep.add("transitive", trans == 0, f"{trans} violations")
    rep.add("unique maximal orbit of full dimension", maxima == 0, f"{maxima} failures")
    rep.add("dimension monotone along closure", mono == 0, f"{mono} violations; {strict} equal-dimension pairs")
    return rep


# gRS


def grs_stats(p: int, q: int, r: int) -> tuple[int, int, int, int]:
    """(orbits, distinct quintuples, round-trip failures, fiber total)."""
    orbits = enumerate_orbits(p, q, r)
    images = [grs(w) for w in orbits]
    bad = sum(1 for w, t in zip(orbits, images) if not t.is_valid() or grs_inverse(t, p, q, r) != w)
    total = sum(1 for lam in partitions(p) for mu in partitions(q) for _ in fiber(lam, mu, r))
    return len(orbits), len(set(images)), bad, total


def suite_grs(pmax: int, qmax: int) -> Report:
    rep = Report("grs")
    params = [(p, q, r) for p in range(1, pmax + 1) for q in range(1, qmax + 1) for r in range(1, p + q + 1)]
    stats = ordered_map(_grs_star, params)
    inj = [x for x, s in zip(params, stats) if s[1] != s[0]]
    rt = [x for x, s in zip(params, stats) if s[2]]
    sums = [x for x, s in zip(params, stats) if s[3] != s[0]]
    n = sum(s[0] for s in stats)
    rep.add("grs injective", not inj, f"{n} orbits over {len(params)} (p,q,r)" + (f", first {inj[0]}" if inj else ""))
    rep.add("grs_inverse round trip", not rt, f"{len(rt)} failing (p,q,r)")
    rep.add("fiber sums match orbit counts", not sums, f"{len(sums)} failing (p,q,r)")
    return rep


def _grs_star(args: tuple[int, int, int]) -> tuple[int, int, int, int]:
    return grs_stats(*args)


# nilpotency


def suite_nilpotency(seed: int, instances: int = 200) -> Report:
    rep = Report("nilpotency")
    for case in CASES + FORM_CASES:
        fails = [k for k in range(instances) if not nilpotency_case_check(case, *random_instance(case, seed, k))]
        label = f"case {case}" if case in CASES else f"part (2) {case}"
        rep.add(label, not fails, f"{instances} instances" + (f", first failure at index {fails[0]}" if fails else ""))
    y, p, _ = counterexample()
    v, w = theta_split(y, p)
    cp = char_poly(w)
    ok = is_zero(matpow(y, 4)) and is_zero(matpow(v, 3)) and not is_nilpotent(w)
    poly = " ".join(f"{'+' if c > 0 else '-'}{abs(c)}t^{k}" for k, c in reversed(list(enumerate(cp))) if c)
    rep.add("6x6 counterexample has a non-nilpotent s-part", ok, f"char poly {poly}")
    return rep


# CI embedding


def suite_ci(nmax: int) -> Report:
    rep = Report("ci")
    for n in range(1, nmax + 1):
        orbits = enumerate_orbits(n, n, n)
        fixed = {w for w in orbits if sigma(w) == w}
        sym = {w for w in orbits if is_symplectic(w)}
        invol = all(sigma(sigma(w)) == w for w in orbits)
        rep.add(f"n={n} sigma-fixed = symmetric", fixed == sym, f"{len(fixed)} fixed, {len(sym)} symmetric")
        rep.add(f"n={n} sigma involutive", invol, f"{len(orbits)} orbits")
    rep.add("n=1 count is 3", len(enumerate_ci_orbits(1)) == 3, f"{len(enumerate_ci_orbits(1))}")
    return rep


# mirabolic counting


def decreasing_subsequences(word: Sequence[int]) -> int:
    """Number of (possibly empty) strictly decreasing subsequences."""
    # ends[k] counts decreasing subsequences ending at position k
    ends = []
    for k, x in enumerate(word):
        ends.append(1 + sum(ends[j] for j in range(k) if word[j] > x))
    return 1 + sum(ends)


def mirabolic_count(n: int) -> int:
    return sum(decreasing_subsequences(w) for w in permutations(range(1, n + 1)))


def mirabolic_pair(tau: dict[int, int], n: int) -> tuple[tuple[int, ...], frozenset[int]]:
    """Complete a partial permutation (column -> row) to w with a descent on the added values."""
    cols = [c for c in range(1, n + 1) if c not in tau]
    rows = sorted((r for r in range(1, n + 1) if r not in tau.values()), reverse=True)
    w = dict(tau)
    w.update(zip(cols, rows))
    return tuple(w[c] for c in range(1, n + 1)), frozenset(rows)


def _is_descent(w: Sequence[int], values: frozenset[int]) -> bool:
    picked = [x for x in w if x in values]
    return all(x > y for x, y in zip(picked, picked[1:]))


def partial_permutations(n: int) -> Iterable[dict[int, int]]:
    for k in range(n + 1):
        for cols in combinations(range(1, n + 1), k):
            for rows in permutations(range(1, n + 1), k):
                yield dict(zip(cols, rows))


def suite_travkin(nmax: int) -> Report:
    rep = Report("travkin")
    for n in range(1, nmax + 1):
        a, b = count_partial_permutations(n, n), mirabolic_count(n)
        pairs = {mirabolic_pair(t, n) for t in partial_permutations(n)}
        valid = all(_is_descent(w, d) for w, d in pairs)
        rep.add(f"n={n} partial permutations = permutations with a descent", a == b == len(pairs) and valid, f"{a} vs {b}")
    return rep


SUITES = ("oracle", "closure", "grs", "nilpotency", "ci", "travkin")
