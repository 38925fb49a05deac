"""Orbits of K on the AIII double flag variety via stacked partial permutations.

An orbit is the S_r class of a (p+q) x r matrix omega = (tau1; tau2) of rank r
whose blocks are partial permutation matrices. Each column is an edge (both
halves nonzero) or a marked point on one side. Indices are 1-based.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from math import comb, factorial


class OrbitError(ValueError):
    """Invalid orbit data."""


@dataclass(frozen=True)
class OrbitColumn:
    plus: int | None = None
    minus: int | None = None

    def __post_init__(self) -> None:
        if self.plus is None and self.minus is None:
            raise OrbitError("zero column")

    @property
    def kind(self) -> str:
        if self.plus is not None and self.minus is not None:
            return "edge"
        return "plus" if self.plus is not None else "minus"

    def sort_key(self) -> tuple:
        if self.kind == "edge":
            return (0, self.plus, self.minus)
        if self.kind == "plus":
            return (1, self.plus, 0)
        return (2, self.minus, 0)

    def to_json(self) -> dict:
        return {"plus": self.plus, "minus": self.minus}


def edge(i: int, j: int) -> OrbitColumn:
    return OrbitColumn(i, j)


def marked_plus(i: int) -> OrbitColumn:
    return OrbitColumn(i, None)


def marked_minus(j: int) -> OrbitColumn:
    return OrbitColumn(None, j)


@dataclass(frozen=True)
class OrbitGraph:
    edges: tuple[tuple[int, int], ...]
    marked_plus: tuple[int, ...]
    marked_minus: tuple[int, ...]
    free_plus: tuple[int, ...]
    free_minus: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "edges": [list(e) for e in self.edges],
            "marked_plus": list(self.marked_plus),
            "marked_minus": list(self.marked_minus),
            "free_plus": list(self.free_plus),
            "free_minus": list(self.free_minus),
        }


@dataclass(frozen=True)
class StackedPartialPermutation:
    """Canonical representative of an orbit: columns sorted, rows used at most once."""

    p: int
    q: int
    columns: tuple[OrbitColumn, ...]

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise OrbitError("negative dimensions")
        cols = tuple(sorted(self.columns, key=OrbitColumn.sort_key))
        plus = [c.plus for c in cols if c.plus is not None]
        minus = [c.minus for c in cols if c.minus is not None]
        if len(set(plus)) != len(plus) or len(set(minus)) != len(minus):
            raise OrbitError("row index used twice")
        if any(not 1 <= i <= self.p for i in plus) or any(not 1 <= j <= self.q for j in minus):
            raise OrbitError("index out of range")
        if not cols:
            raise OrbitError("rank must be positive")
        object.__setattr__(self, "columns", cols)

    @property
    def r(self) -> int:
        return len(self.columns)

    @property
    def n(self) -> int:
        return self.p + self.q

    @cached_property
    def graph(self) -> OrbitGraph:
        edges = tuple((c.plus, c.minus) for c in self.columns if c.kind == "edge")
        mp = tuple(c.plus for c in self.columns if c.kind == "plus")
        mm = tuple(c.minus for c in self.columns if c.kind == "minus")
        used_p = {c.plus for c in self.columns if c.plus is not None}
        used_m = {c.minus for c in self.columns if c.minus is not None}
        return OrbitGraph(
            edges=edges,
            marked_plus=mp,
            marked_minus=mm,
            free_plus=tuple(i for i in range(1, self.p + 1) if i not in used_p),
            free_minus=tuple(j for j in range(1, self.q + 1) if j not in used_m),
        )

    @property
    def tau1(self) -> list[list[int]]:
        return [[1 if c.plus == i else 0 for c in self.columns] for i in range(1, self.p + 1)]

    @property
    def tau2(self) -> list[list[int]]:
        return [[1 if c.minus == j else 0 for c in self.columns] for j in range(1, self.q + 1)]

    def matrix(self) -> list[list[int]]:
        """The stacked (p+q) x r matrix."""
        return self.tau1 + self.tau2

    def key(self) -> tuple:
        return (self.p, self.q, tuple(c.sort_key() for c in self.columns))

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r, "columns": [c.to_json() for c in self.columns]}

    def __str__(self) -> str:
        g = self.graph
        parts = [f"{i}+{j}-" for i, j in g.edges]
        parts += [f"({i}+)" for i in g.marked_plus] + [f"({j}-)" for j in g.marked_minus]
        return f"omega[{self.p},{self.q}]{{{' '.join(parts)}}}"


def orbit(p: int, q: int, *columns: OrbitColumn) -> StackedPartialPermutation:
    return StackedPartialPermutation(p, q, tuple(columns))


def canonicalize(tau1: Sequence[Sequence[int]], tau2: Sequence[Sequence[int]]) -> StackedPartialPermutation:
    """Canonical representative of the S_r class of the stacked matrix (tau1; tau2)."""
    p, q = len(tau1), len(tau2)
    widths = {len(row) for row in list(tau1) + list(tau2)}
    if len(widths) > 1:
        raise OrbitError("ragged matrix")
    r = widths.pop() if widths else 0
    cols = []
    for k in range(r):
        plus = [i + 1 for i in range(p) if tau1[i][k]]
        minus = [j + 1 for j in range(q) if tau2[j][k]]
        if any(tau1[i][k] not in (0, 1) for i in range(p)) or any(tau2[j][k] not in (0, 1) for j in range(q)):
            raise OrbitError("entries must be 0 or 1")
        if len(plus) > 1 or len(minus) > 1:
            raise OrbitError("column of a partial permutation has two ones")
        if not plus and not minus:
            raise OrbitError("rank deficient: zero column")
        cols.append(OrbitColumn(plus[0] if plus else None, minus[0] if minus else None))
    return StackedPartialPermutation(p, q, tuple(cols))


def _check_range(p: int, q: int, r: int) -> None:
    if p < 0 or q < 0 or not 1 <= r <= p + q:
        raise OrbitError(f"need 1 <= r <= p+q, got p={p} q={q} r={r}")


def enumerate_orbits(p: int, q: int, r: int) -> list[StackedPartialPermutation]:
    """All orbit representatives, grouped by (k, s, t) = (#edges, #marked+, #marked-)."""
    _check_range(p, q, r)
    out = []
    for k in range(r + 1):
        for s in range(r - k + 1):
            t = r - k - s
            if k + s > p or k + t > q:
                continue
            for plus_used in combinations(range(1, p + 1), k + s):
                for edge_plus in combinations(plus_used, k):
                    mp = [i for i in plus_used if i not in edge_plus]
                    for minus_used in combinations(range(1, q + 1), k + t):
                        for edge_minus in combinations(minus_used, k):
                            mm = [j for j in minus_used if j not in edge_minus]
                            for perm in permutations(edge_minus):
                                cols = [OrbitColumn(i, j) for i, j in zip(edge_plus, perm)]
                                cols += [OrbitColumn(i, None) for i in mp]
                                cols += [OrbitColumn(None, j) for j in mm]
                                out.append(StackedPartialPermutation(p, q, tuple(cols)))
    return out


def count_orbits(p: int, q: int, r: int) -> int:
    """Closed count: choose the used rows on each side, then match k of them."""
    total = 0
    for k in range(r + 1):
        for s in range(r - k + 1):
            t = r - k - s
            total += comb(p, k + s) * comb(k + s, k) * comb(q, k + t) * comb(k + t, k) * factorial(k)
    return total


def count_partial_permutations(p: int, r: int) -> int:
    """Number of p x r partial permutation matrices."""
    return sum(comb(p, k) * comb(r, k) * factorial(k) for k in range(min(p, r) + 1))


@dataclass(frozen=True, order=True)
class Indecomposable:
    """kind is one of 'I+', "I'+", 'I-', "I'-", 'I'; i, j are 1-based (0 when unused)."""

    kind: str
    i: int = 0
    j: int = 0

    def __str__(self) -> str:
        if self.kind == "I":
            return f"I_{{{self.i},{self.j}}}"
        return f"{self.kind}_{self.i or self.j}"


def indec_decomposition(w: StackedPartialPermutation) -> list[Indecomposable]:
    g = w.graph
    out = [Indecomposable("I", i, j) for i, j in g.edges]
    out += [Indecomposable("I+", i) for i in g.marked_plus]
    out += [Indecomposable("I'+", i) for i in g.free_plus]
    out += [Indecomposable("I-", 0, j) for j in g.marked_minus]
    out += [Indecomposable("I'-", 0, j) for j in g.free_minus]
    return sorted(out)


def rank_matrix(w: StackedPartialPermutation) -> list[list[int]]:
    """r[i][j] = edges and marked points inside the vertices {k+ <= i} and {l- <= j}."""
    r = [[0] * (w.q + 1) for _ in range(w.p + 1)]
    for i in range(w.p + 1):
        for j in range(w.q + 1):
            r[i][j] = sum(
                1
                for c in w.columns
                if (c.plus is None or c.plus <= i) and (c.minus is None or c.minus <= j)
            )
    return r


def dim_orbit(w: StackedPartialPermutation) -> int:
    g = w.graph
    d = w.p ** 2 + w.q ** 2
    d -= sum(g.free_plus) + sum(g.free_minus)
    for i in g.marked_plus:
        d -= sum(1 for x in g.marked_plus if x <= i)
    for j in g.marked_minus:
        d -= sum(1 for x in g.marked_minus if x <= j)
    for i, j in g.edges:
        d -= sum(1 for a, b in g.edges if a <= i and b <= j)
        d -= sum(1 for x in g.marked_plus if x <= i)
        d -= sum(1 for x in g.marked_minus if x <= j)
    return d


def variety_dim(p: int, q: int, r: int) -> int:
    """dim of Fl(V+) x Fl(V-) x Gr_r(V)."""
    n = p + q
    return p * (p - 1) // 2 + q * (q - 1) // 2 + r * (n - r)


def closure_leq(w: StackedPartialPermutation, v: StackedPartialPermutation) -> bool:
    """True iff the orbit of w lies in the closure of the orbit of v."""
    if (w.p, w.q, w.r) != (v.p, v.q, v.r):
        raise OrbitError("orbits live in different varieties")
    rw, rv = rank_matrix(w), rank_matrix(v)
    return all(rw[i][j] >= rv[i][j] for i in range(w.p + 1) for j in range(w.q + 1))


def hasse_covers(orbits: Sequence[StackedPartialPermutation]) -> list[tuple[int, int]]:
    """Cover relations (a, b) with orbit a strictly below b, as indices into ``orbits``."""
    n = len(orbits)
    ranks = [rank_matrix(w) for w in orbits]

    def leq(a: int, b: int) -> bool:
        ra, rb = ranks[a], ranks[b]
        return all(x >= y for row_a, row_b in zip(ra, rb) for x, y in zip(row_a, row_b))

    below = [[a != b and leq(a, b) for b in range(n)] for a in range(n)]
    covers = []
    for a in range(n):
        for b in range(n):
            if below[a][b] and not any(below[a][c] and below[c][b] for c in range(n)):
                covers.append((a, b))
    return covers


def closure_dot(orbits: Sequence[StackedPartialPermutation]) -> str:
    lines = ["digraph closure {", "  rankdir=BT;"]
    for k, w in enumerate(orbits):
        lines.append(f'  n{k} [label="{w}\\ndim {dim_orbit(w)}"];')
    for a, b in hasse_covers(orbits):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
