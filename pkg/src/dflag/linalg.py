"""Exact rational linear algebra on plain lists of Fractions.

Small dense matrices only; everything is row reduction over Q.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def mat(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(m: int, n: int | None = None) -> Matrix:
    return [[Fraction(0)] * (m if n is None else n) for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b)) if b else []
    if not bt:
        return [[] for _ in a]
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def add(a: Matrix, b: Matrix, scale: Fraction | int = 1) -> Matrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matpow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    rows, cols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}, one vector per free column."""
    n = ncols if ncols is not None else shape(a)[1]
    if not a:
        return [[Fraction(int(i == k)) for i in range(n)] for k in range(n)]
    r, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(r, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def is_nilpotent(a: Matrix) -> bool:
    return is_zero(matpow(a, len(a)))


def kernel_dims(a: Matrix) -> list[int]:
    """dim ker a^k for k = 0..n."""
    n = len(a)
    out, power = [0], identity(n)
    for _ in range(n):
        power = matmul(power, a)
        out.append(n - rank(power))
    return out


def char_poly(a: Matrix) -> list[Fraction]:
    """Coefficients c_0..c_n of det(tI - a), by Faddeev-LeVerrier."""
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = zeros(n)
    for k in range(1, n + 1):
        m = add(matmul(a, m), identity(n), coeffs[n - k + 1])
        am = matmul(a, m)
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return coeffs


@dataclass(frozen=True)
class LinearSubspace:
    """Subspace of Q^ambient stored by its reduced echelon basis."""

    ambient: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Sequence]) -> LinearSubspace:
        vs = [[Fraction(x) for x in v] for v in vectors]
        if any(len(v) != ambient for v in vs):
            raise ValueError("vector length differs from ambient dimension")
        r, _ = rref(vs) if vs else ([], [])
        return cls(ambient, tuple(tuple(row) for row in r))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __add__(self, other: LinearSubspace) -> LinearSubspace:
        return LinearSubspace.span(self.ambient, list(self.basis) + list(other.basis))

    def intersection_dim(self, other: LinearSubspace) -> int:
        return self.dim + other.dim - (self + other).dim

    def contains(self, v: Sequence) -> bool:
        return (self + LinearSubspace.span(self.ambient, [v])).dim == self.dim
