"""Finite type criteria through the Tits form of a star quiver.

A multiple flag variety of N flags of types a_1..a_N (compositions of n) is a
representation space of a star quiver with N branches. Its dimension vector d
has Tits form (d|d) = (sum_j |a_j|^2 - (N-2) n^2) / 2 and the variety has
finitely many orbits iff every summand d' of d (d - d' again a dimension
vector of flags of the same lengths) has (d'|d') >= 1.

For the AIII double flag variety GL_p/Q1 x GL_q/Q2 x GL_n/P the relevant
triples are (a, b, c) with a = (a', |b'|), b = (b', |a'|) and |c| = |a'| + |b'|.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product

Composition = tuple[int, ...]


def composition(parts: Iterable[int]) -> Composition:
    out = tuple(int(x) for x in parts)
    if any(x < 0 for x in out):
        raise ValueError(f"negative part in {out}")
    return out


def plus_part(a: Sequence[int]) -> Composition:
    """Nonzero parts in nonincreasing order."""
    return tuple(sorted((x for x in a if x), reverse=True))


def sumsq(a: Iterable[int]) -> int:
    return sum(x * x for x in a)


def tits_form(*comps: Sequence[int]) -> Fraction:
    """(d|d) for the flag types ``comps`` of a common n."""
    if not comps:
        raise ValueError("need at least one composition")
    totals = {sum(a) for a in comps}
    if len(totals) != 1:
        raise ValueError(f"compositions of different totals {sorted(totals)}")
    n = totals.pop()
    return Fraction(sum(sumsq(a) for a in comps) - (len(comps) - 2) * n * n, 2)


@dataclass(frozen=True)
class DimensionVector:
    """Dimensions on a star quiver: a center and one branch per flag."""

    center: int
    branches: tuple[tuple[int, ...], ...]

    @classmethod
    def of_flags(cls, *comps: Sequence[int]) -> DimensionVector:
        n = sum(comps[0]) if comps else 0
        branches = []
        for a in comps:
            if sum(a) != n:
                raise ValueError("compositions of different totals")
            partial, acc = [], 0
            for x in a[:-1]:
                acc += x
                partial.append(acc)
            branches.append(tuple(partial))
        return cls(n, tuple(branches))

    def tits(self) -> int:
        """sum of squares over vertices minus products along arrows."""
        value = self.center ** 2
        for br in self.branches:
            chain = list(br) + [self.center]
            value += sum(x * x for x in br)
            value -= sum(x * y for x, y in zip(chain, chain[1:]))
        return value


@dataclass(frozen=True)
class JointTriple:
    """(a, b, c) with a = (a', |b'|), b = (b', |a'|) and |c| = |a'| + |b'|."""

    a: Composition
    b: Composition
    c: Composition

    def __post_init__(self) -> None:
        for name in "abc":
            object.__setattr__(self, name, composition(getattr(self, name)))
        if not self.a or not self.b or not self.c:
            raise ValueError("compositions must have at least one part")
        ap, bp = self.a[:-1], self.b[:-1]
        if self.a[-1] != sum(bp) or self.b[-1] != sum(ap) or sum(self.c) != sum(ap) + sum(bp):
            raise ValueError(f"({self.a}, {self.b}, {self.c}) is not a joint triple")

    @classmethod
    def from_primes(cls, a_prime: Sequence[int], b_prime: Sequence[int], c: Sequence[int]) -> JointTriple:
        return cls(tuple(a_prime) + (sum(b_prime),), tuple(b_prime) + (sum(a_prime),), tuple(c))

    @property
    def a_prime(self) -> Composition:
        return self.a[:-1]

    @property
    def b_prime(self) -> Composition:
        return self.b[:-1]

    @property
    def p(self) -> int:
        return sum(self.a_prime)

    @property
    def q(self) -> int:
        return sum(self.b_prime)

    @property
    def n(self) -> int:
        return sum(self.c)

    def swapped(self) -> JointTriple:
        return JointTriple(self.b, self.a, self.c)

    def tits(self) -> Fraction:
        return tits_form(self.a, self.b, self.c)

    def dimension_vector(self) -> DimensionVector:
        return DimensionVector.of_flags(self.a, self.b, self.c)

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b), "c": list(self.c)}


def dominated(a: Sequence[int]) -> Iterator[Composition]:
    """Every composition bounded by a componentwise."""
    return product(*(range(x + 1) for x in a))


@cache
def _min_sumsq_by_total(a: Composition) -> dict[int, Composition]:
    """For each total, a dominated vector of least sum of squares."""
    best: dict[int, Composition] = {}
    for v in dominated(a):
        s = sum(v)
        if s not in best or sumsq(v) < sumsq(best[s]):
            best[s] = v
    return best


def summands(t: JointTriple) -> Iterator[JointTriple]:
    """All nonzero mu in the semigroup with t - mu again in it (exhaustive)."""
    cs: dict[int, list[Composition]] = {}
    for c0 in dominated(t.c):
        cs.setdefault(sum(c0), []).append(c0)
    for a0 in dominated(t.a_prime):
        for b0 in dominated(t.b_prime):
            for c0 in cs.get(sum(a0) + sum(b0), []):
                if sum(c0) or any(a0) or any(b0):
                    yield JointTriple.from_primes(a0, b0, c0)


def bruteforce_witness(t: JointTriple) -> JointTriple | None:
    """A summand with Tits form below 1, or None.

    The Tits form of a summand separates into terms for a0', b0' and c0 once
    the totals |a0'| and |b0'| are fixed, so minimizing each term over its
    own dominated vectors covers every summand.
    """
    ma = _min_sumsq_by_total(t.a_prime)
    mb = _min_sumsq_by_total(t.b_prime)
    mc = _min_sumsq_by_total(t.c)
    for p0, a0 in sorted(ma.items()):
        for q0, b0 in sorted(mb.items()):
            n0 = p0 + q0
            if n0 == 0 or n0 not in mc:
                continue
            c0 = mc[n0]
            value = sumsq(a0) + q0 * q0 + sumsq(b0) + p0 * p0 + sumsq(c0) - n0 * n0
            if value < 2:
                return JointTriple.from_primes(a0, b0, c0)
    return None


def is_finite_bruteforce(t: JointTriple) -> bool:
    return bruteforce_witness(t) is None


FORBIDDEN: tuple[tuple[Composition, Composition, Composition], ...] = (
    ((1, 1, 1), (1, 1, 1), (2, 2, 2)),
    ((2, 2), (1, 1, 1, 1, 1), (3, 3, 3)),
    ((1, 1), (1, 1), (1, 1, 1, 1)),
    ((3,), (1, 1, 1, 1, 1), (2, 2, 2, 2)),
    ((2,), (1, 1, 1), (1, 1, 1, 1, 1)),
    ((3,), (2, 2), (1, 1, 1, 1, 1, 1, 1)),
)


def _embeds(pattern: Sequence[int], target: Sequence[int]) -> bool:
    """Parts of pattern fit into distinct parts of target, each no larger."""
    pat, tgt = plus_part(pattern), plus_part(target)
    return len(pat) <= len(tgt) and all(x <= y for x, y in zip(pat, tgt))


def forbidden_witness(t: JointTriple) -> JointTriple | None:
    for pa, pb, pc in FORBIDDEN:
        for x, y in ((pa, pb), (pb, pa)):
            if _embeds(x, t.a_prime) and _embeds(y, t.b_prime) and _embeds(pc, t.c):
                return JointTriple.from_primes(x, y, pc)
    return None


def is_finite_fast(t: JointTriple) -> bool:
    return forbidden_witness(t) is None


@dataclass(frozen=True)
class FactorShape:
    """Block structure of a parabolic in GL_m."""

    size: int
    blocks: int
    min_block: int

    @classmethod
    def of(cls, parts: Sequence[int]) -> FactorShape:
        nz = [x for x in parts if x]
        return cls(sum(nz), len(nz), min(nz) if nz else 0)

    @property
    def full(self) -> bool:
        return self.blocks <= 1

    @property
    def maximal(self) -> bool:
        return self.blocks <= 2

    @property
    def mirabolic(self) -> bool:
        return self.blocks == 2 and self.min_block == 1


@dataclass(frozen=True)
class ParabolicShape:
    """Descriptors of (P, Q1, Q2) that the classification table depends on."""

    P: FactorShape
    Q1: FactorShape
    Q2: FactorShape

    @classmethod
    def of(cls, t: JointTriple) -> ParabolicShape:
        return cls(FactorShape.of(t.c), FactorShape.of(t.a_prime), FactorShape.of(t.b_prime))

    def swapped(self) -> ParabolicShape:
        return ParabolicShape(self.P, self.Q2, self.Q1)


def _table_rows(s: ParabolicShape, amended: bool = False) -> list[str]:
    P, Q1, Q2 = s.P, s.Q1, s.Q2
    rows = []
    if Q2.full and (Q1.full or Q1.mirabolic):
        rows.append("PA-1")
    if Q2.size == 1:
        rows.append("PA-2")
    if Q1.maximal and Q2.size == 2 and Q2.full:
        rows.append("PA-3")
    if P.blocks <= 6 and Q1.maximal and Q2.full:
        rows.append("P6")
    if P.blocks <= 4 and Q1.blocks <= 4 and Q2.full:
        rows.append("P4-1")
    if P.blocks <= 4 and P.min_block == 1 and Q2.full:
        rows.append("P4-2")
    # the |P| = 4 argument also allows Q2 = GL_q with q <= 2 and any Q1,
    # which no printed row covers once |Q1| >= 5
    if amended and P.blocks <= 4 and Q2.full and Q2.size <= 2:
        rows.append("P4-3")
    if P.blocks <= 3 and P.min_block == 1:
        rows.append("P3-1")
    if P.blocks <= 3 and P.min_block == 2 and Q2.blocks <= 2:
        rows.append("P3-2")
    if P.blocks <= 3 and (Q2.full or Q2.mirabolic):
        rows.append("P3-3")
    if P.blocks <= 3 and Q1.blocks <= 4 and Q2.maximal:
        rows.append("P3-4")
    if P.blocks <= 2:
        rows.append("P2")
    return rows


def table_rows(shape: ParabolicShape, amended: bool = False) -> list[str]:
    """Rows of the AIII finite type table matched by shape, allowing Q1 <-> Q2.

    With ``amended`` an extra row P4-3 (|P| <= 4, Q2 = GL_q, q <= 2) is added.
    """
    return sorted(set(_table_rows(shape, amended)) | set(_table_rows(shape.swapped(), amended)))


def classify_table(shape: ParabolicShape, amended: bool = False) -> bool:
    return bool(table_rows(shape, amended))


def multiple_flag_witness(*comps: Sequence[int]) -> tuple[Composition, ...] | None:
    """A summand d' of d (possibly d itself) with (d'|d') < 1, or None.

    Summands are tuples of compositions of a common n' with the same lengths,
    bounded componentwise by ``comps``. The Tits form separates per flag once
    n' is fixed.
    """
    comps = tuple(composition(a) for a in comps)
    totals = {sum(a) for a in comps}
    if len(totals) != 1:
        raise ValueError("compositions of different totals")
    n = totals.pop()
    mins = [_min_sumsq_by_total(a) for a in comps]
    for n0 in range(1, n + 1):
        pick = [m[n0] for m in mins]
        if 2 * tits_form(*pick) < 2:
            return tuple(pick)
    return None


def is_finite_multiple_flag_A(*comps: Sequence[int]) -> bool:
    return multiple_flag_witness(*comps) is None


def is_finite_triple_flag_A(a1: Sequence[int], a2: Sequence[int], a3: Sequence[int]) -> bool:
    return is_finite_multiple_flag_A(a1, a2, a3)


def table3_codes(a1: Sequence[int], a2: Sequence[int], a3: Sequence[int]) -> list[str]:
    """Codes of the type A triple flag finite type list matched by the block structures."""
    shapes = [plus_part(a) for a in (a1, a2, a3)]
    codes = set()
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        x, y, z = shapes[i], shapes[j], shapes[k]
        lens = (len(x), len(y), len(z))
        if len(x) <= 1:
            codes.add("A")
        if len(x) == 2 and 1 in x:
            codes.add("S")
        if len(x) == 2 and len(y) == 2:
            codes.add("D")
        if lens == (2, 3, 3):
            codes.add("E6")
        if lens == (2, 3, 4):
            codes.add("E7")
        if lens == (2, 3, 5):
            codes.add("E8")
        if len(x) == 2 and 2 in x and len(y) == 3:
            codes.add("E(a)")
        if len(x) == 2 and len(y) == 3 and 1 in y:
            codes.add("E(b)")
    return sorted(codes)
