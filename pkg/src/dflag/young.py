"""Partitions, standard tableaux, Robinson-Schensted and signed Young diagrams.

Labels are arbitrary integers ordered the usual way, so tableaux may carry
negative entries. Every value here is immutable.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from itertools import permutations

Partition = tuple[int, ...]

PLUS = "+"
MINUS = "-"


class TableauError(ValueError):
    """Raised for malformed tableaux or illegal insertions."""


def partition(parts: Iterable[int]) -> Partition:
    """Validate and return a partition, dropping trailing zeros."""
    out = tuple(int(x) for x in parts)
    while out and out[-1] == 0:
        out = out[:-1]
    if any(x <= 0 for x in out) or any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"not a partition: {parts!r}")
    return out


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > c) for c in range(lam[0]))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff lam >= mu in dominance order (equal sizes assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def column_strip_leq(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """inner is contained in outer and the skew shape has at most one box per row."""
    if len(inner) > len(outer):
        return False
    for i, o in enumerate(outer):
        x = inner[i] if i < len(inner) else 0
        if not (o - 1 <= x <= o):
            return False
    return True


def boxes_in_first_columns(lam: Sequence[int], c: int) -> int:
    return sum(min(x, c) for x in lam)


def remove_column_strips(outer: Sequence[int]) -> Iterator[Partition]:
    """Every partition nu with nu contained in outer by a column strip."""
    outer = tuple(outer)

    def rec(i: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if i == len(outer):
            yield partition(prefix)
            return
        for x in (outer[i], outer[i] - 1):
            if x < 0 or (prefix and x > prefix[-1]):
                continue
            yield from rec(i + 1, prefix + (x,))

    seen = set()
    for nu in rec(0, ()):
        if nu not in seen:
            seen.add(nu)
            yield nu


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling with distinct integer labels."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows if len(row))
        object.__setattr__(self, "rows", rows)
        seen: set[int] = set()
        for i, row in enumerate(rows):
            if i and len(row) > len(rows[i - 1]):
                raise TableauError(f"row lengths must weakly decrease: {rows}")
            for j, x in enumerate(row):
                if x in seen:
                    raise TableauError(f"repeated entry {x}")
                seen.add(x)
                if j and row[j - 1] >= x:
                    raise TableauError(f"row {i} not increasing: {row}")
                if i and rows[i - 1][j] >= x:
                    raise TableauError(f"column {j} not increasing at row {i}")

    @classmethod
    def vertical(cls, labels: Iterable[int]) -> StandardTableau:
        """Single column holding the labels in increasing order."""
        return cls(tuple((x,) for x in sorted(labels)))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> frozenset[int]:
        return frozenset(x for row in self.rows for x in row)

    def reading_word(self) -> tuple[int, ...]:
        """Rows from bottom to top, each read left to right."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def transpose(self) -> StandardTableau:
        shape = self.shape
        return StandardTableau(
            tuple(tuple(self.rows[i][j] for i in range(lc)) for j, lc in enumerate(conjugate(shape)))
        )

    def position(self, x: int) -> tuple[int, int]:
        for i, row in enumerate(self.rows):
            if x in row:
                return i, row.index(x)
        raise KeyError(x)

    def restrict(self, labels: Iterable[int]) -> StandardTableau:
        """Sub-tableau on the given labels; only valid for order ideals such as {x <= k}."""
        keep = set(labels)
        return StandardTableau(tuple(tuple(x for x in row if x in keep) for row in self.rows))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


EMPTY = StandardTableau()


def _insert(rows: list[list[int]], a: int) -> tuple[int, int]:
    """Row-insert a into rows in place and return the new box."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([a])
            return i, 0
        row = rows[i]
        # bump the smallest entry exceeding a
        j = next((k for k, x in enumerate(row) if x > a), None)
        if j is None:
            row.append(a)
            return i, len(row) - 1
        row[j], a = a, row[j]
        i += 1


def row_insert(t: StandardTableau, a: int) -> StandardTableau:
    if a in t.entries():
        raise TableauError(f"{a} already in tableau")
    rows = [list(r) for r in t.rows]
    _insert(rows, a)
    return StandardTableau(tuple(tuple(r) for r in rows))


def rowinsert(word: Iterable[int]) -> StandardTableau:
    """Insertion tableau of a word of distinct labels."""
    rows: list[list[int]] = []
    seen: set[int] = set()
    for a in word:
        if a in seen:
            raise TableauError(f"repeated label {a}")
        seen.add(a)
        _insert(rows, a)
    return StandardTableau(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class PartialBijection:
    """A bijection from a finite sorted set of integers onto another set."""

    domain: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        d = tuple(self.domain)
        v = tuple(self.values)
        if len(d) != len(v):
            raise ValueError("domain and values differ in length")
        order = sorted(range(len(d)), key=lambda k: d[k])
        d = tuple(d[k] for k in order)
        v = tuple(v[k] for k in order)
        if len(set(d)) != len(d) or len(set(v)) != len(v):
            raise ValueError("not a bijection")
        object.__setattr__(self, "domain", d)
        object.__setattr__(self, "values", v)

    @classmethod
    def from_mapping(cls, m: Mapping[int, int]) -> PartialBijection:
        keys = sorted(m)
        return cls(tuple(keys), tuple(m[k] for k in keys))

    @classmethod
    def from_word(cls, word: Sequence[int]) -> PartialBijection:
        """One-line notation: position k (1-based) maps to word[k-1]."""
        return cls(tuple(range(1, len(word) + 1)), tuple(word))

    def __call__(self, x: int) -> int:
        return self.values[self.domain.index(x)]

    def __len__(self) -> int:
        return len(self.domain)

    def inverse(self) -> PartialBijection:
        return PartialBijection(self.values, self.domain)

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain, self.values))


def rs(sigma: PartialBijection) -> tuple[StandardTableau, StandardTableau]:
    """Insertion and recording tableaux; the recording one is labelled by the domain."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for j, v in zip(sigma.domain, sigma.values):
        i, _ = _insert(p_rows, v)
        if i == len(q_rows):
            q_rows.append([])
        q_rows[i].append(j)
    as_t = lambda rows: StandardTableau(tuple(tuple(r) for r in rows))  # noqa: E731
    return as_t(p_rows), as_t(q_rows)


def reverse_bump(t: StandardTableau, row: int) -> tuple[StandardTableau, int]:
    """Undo one insertion whose new box was the end of ``row``."""
    rows = [list(r) for r in t.rows]
    if row >= len(rows) or (row + 1 < len(rows) and len(rows[row + 1]) == len(rows[row])):
        raise TableauError(f"row {row} does not end in a corner")
    x = rows[row].pop()
    for i in range(row - 1, -1, -1):
        r = rows[i]
        j = max(k for k, y in enumerate(r) if y < x)
        r[j], x = x, r[j]
    return StandardTableau(tuple(tuple(r) for r in rows)), x


def rs_inverse(p: StandardTableau, q: StandardTableau) -> PartialBijection:
    if p.shape != q.shape:
        raise TableauError("insertion and recording tableaux differ in shape")
    mapping: dict[int, int] = {}
    while q.size:
        j = max(q.entries())
        i, _ = q.position(j)
        p, v = reverse_bump(p, i)
        q = StandardTableau(tuple(tuple(x for x in r if x != j) for r in q.rows))
        mapping[j] = v
    return PartialBijection.from_mapping(mapping)


def plactic_product(*ts: StandardTableau) -> StandardTableau:
    """Product in the plactic monoid of tableaux with disjoint entries."""
    rows: list[list[int]] = []
    seen: set[int] = set()
    for t in ts:
        if seen & t.entries():
            raise TableauError("factors share entries")
        seen |= t.entries()
        for a in t.reading_word():
            _insert(rows, a)
    return StandardTableau(tuple(tuple(r) for r in rows))


def schutzenberger(t: StandardTableau) -> StandardTableau:
    """Evacuation by repeated deletion of the minimum and jeu de taquin."""
    n = t.size
    if t.entries() != frozenset(range(1, n + 1)):
        raise TableauError("entries must be 1..n")
    rows = [list(r) for r in t.rows]
    out = [[0] * len(r) for r in rows]
    for k in range(n):
        i = j = 0
        while True:
            right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
            below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                rows[i][j] = right
                j += 1
            else:
                rows[i][j] = below
                i += 1
        rows[i].pop()
        if not rows[i]:
            rows.pop()
        out[i][j] = n - k
    return StandardTableau(tuple(tuple(r) for r in out))


def standard_tableaux(shape: Sequence[int], labels: Iterable[int] | None = None) -> Iterator[StandardTableau]:
    """All standard fillings of shape with the given labels (default 1..n)."""
    shape = tuple(shape)
    n = sum(shape)
    labels = sorted(labels) if labels is not None else list(range(1, n + 1))
    if len(labels) != n:
        raise ValueError("label count does not match shape")

    def rec(k: int, filled: list[list[int]]) -> Iterator[StandardTableau]:
        if k == n:
            yield StandardTableau(tuple(tuple(r) for r in filled))
            return
        for i, target in enumerate(shape):
            cur = len(filled[i])
            if cur < target and (i == 0 or len(filled[i - 1]) > cur):
                filled[i].append(labels[k])
                yield from rec(k + 1, filled)
                filled[i].pop()

    yield from rec(0, [[] for _ in shape])


def all_permutations(n: int) -> Iterator[PartialBijection]:
    for w in permutations(range(1, n + 1)):
        yield PartialBijection.from_word(w)


@dataclass(frozen=True, order=True)
class SignedRow:
    length: int
    sign: str

    def __post_init__(self) -> None:
        if self.length <= 0 or self.sign not in (PLUS, MINUS):
            raise ValueError(f"bad signed row {self.length}{self.sign}")

    def count(self, sign: str, upto: int | None = None) -> int:
        """Boxes of the given sign among the first ``upto`` columns."""
        n = self.length if upto is None else min(upto, self.length)
        if sign == self.sign:
            return (n + 1) // 2
        return n // 2


def _row_key(row: SignedRow) -> tuple[int, int]:
    return (-row.length, 0 if row.sign == PLUS else 1)


@dataclass(frozen=True)
class SignedYoungDiagram:
    rows: tuple[SignedRow, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(r if isinstance(r, SignedRow) else SignedRow(*r) for r in self.rows)
        object.__setattr__(self, "rows", tuple(sorted(rows, key=_row_key)))

    @classmethod
    def of(cls, *rows: tuple[int, str]) -> SignedYoungDiagram:
        return cls(tuple(SignedRow(k, s) for k, s in rows))

    @property
    def shape(self) -> Partition:
        return tuple(r.length for r in self.rows)

    @property
    def signature(self) -> tuple[int, int]:
        return (sum(r.count(PLUS) for r in self.rows), sum(r.count(MINUS) for r in self.rows))

    def column_counts(self, c: int) -> tuple[int, int]:
        """(#plus, #minus) among the first c columns."""
        return (
            sum(r.count(PLUS, c) for r in self.rows),
            sum(r.count(MINUS, c) for r in self.rows),
        )

    def cumulative_counts(self) -> tuple[list[int], list[int]]:
        width = self.rows[0].length if self.rows else 0
        plus, minus = [], []
        for c in range(1, width + 1):
            a, b = self.column_counts(c)
            plus.append(a)
            minus.append(b)
        return plus, minus

    def to_json(self) -> list[dict]:
        return [{"len": r.length, "sign": r.sign} for r in self.rows]

    def __str__(self) -> str:
        return " ".join(f"{r.length}{r.sign}" for r in self.rows) or "()"


class ReconstructionError(RuntimeError):
    """Column counts admit no signed Young diagram."""


def signed_diagram_from_column_counts(nplus: Sequence[int], nminus: Sequence[int]) -> SignedYoungDiagram:
    """Invert :meth:`SignedYoungDiagram.column_counts`.

    ``nplus[c-1]`` and ``nminus[c-1]`` are the sign counts in the first c
    columns. In column c a row starting with + shows + if c is odd and -
    if c is even, so the per-column counts determine how many rows of each
    leading sign reach column c.
    """
    if len(nplus) != len(nminus):
        raise ReconstructionError("count sequences differ in length")
    width = len(nplus)
    xp = [nplus[c] - (nplus[c - 1] if c else 0) for c in range(width)]
    xm = [nminus[c] - (nminus[c - 1] if c else 0) for c in range(width)]
    # reach[c] = rows of length > c, by leading sign
    reach_plus = [xp[c] if c % 2 == 0 else xm[c] for c in range(width)] + [0]
    reach_minus = [xm[c] if c % 2 == 0 else xp[c] for c in range(width)] + [0]
    rows: list[SignedRow] = []
    for reach, sign in ((reach_plus, PLUS), (reach_minus, MINUS)):
        for c in range(width):
            k = reach[c] - reach[c + 1]
            if k < 0:
                raise ReconstructionError(f"column counts {list(nplus)}, {list(nminus)} are inconsistent")
            rows.extend(SignedRow(c + 1, sign) for _ in range(k))
    out = SignedYoungDiagram(tuple(rows))
    got = out.cumulative_counts()
    pad = lambda xs, v: list(xs) + [v] * (width - len(xs))  # noqa: E731
    if pad(got[0], got[0][-1] if got[0] else 0) != list(nplus) or pad(got[1], got[1][-1] if got[1] else 0) != list(nminus):
        raise ReconstructionError("reconstructed diagram does not reproduce the counts")
    return out


def signed_diagrams(p: int, q: int) -> Iterator[SignedYoungDiagram]:
    """All signed Young diagrams of signature (p, q)."""

    def rec(p: int, q: int, bound: tuple[int, int]) -> Iterator[tuple[SignedRow, ...]]:
        if p == 0 and q == 0:
            yield ()
            return
        for length in range(min(p + q, bound[0]), 0, -1):
            for sign in (PLUS, MINUS):
                if (-length, 0 if sign == PLUS else 1) < (-bound[0], bound[1]):
                    continue
                row = SignedRow(length, sign)
                dp, dq = row.count(PLUS), row.count(MINUS)
                if dp <= p and dq <= q:
                    for rest in rec(p - dp, q - dq, (length, 0 if sign == PLUS else 1)):
                        yield (row,) + rest

    for rows in rec(p, q, (p + q, 0)):
        yield SignedYoungDiagram(rows)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    return partition(int(x) for x in text.split(",")) if text else ()
