"""Exact linear-algebra ground truth for the combinatorial maps.

Coordinates: V = V+ (+) V- with basis e+_1..e+_p, e-_1..e-_q, the flags are
the standard coordinate flags, and [omega] is the column span of omega.
The conormal directions at omega form the linear space

    D_omega = {y : Im y in [omega] in ker y, diagonal blocks of y strictly upper triangular}

and the Steinberg maps read off Jordan types of the block-diagonal part
y^theta and of the off-diagonal part y^-theta of a generic y in D_omega.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    LinearSubspace,
    Matrix,
    is_nilpotent,
    is_zero,
    matmul,
    matpow,
    nullspace,
    rank,
    transpose,
    zeros,
)
from .orbits import Indecomposable, StackedPartialPermutation
from .young import (
    Partition,
    SignedYoungDiagram,
    conjugate,
    partition,
    signed_diagram_from_column_counts,
)

DEFAULT_TRIALS = 5
DEFAULT_BOUND = 20
RETRY_BOUND = 10**6


class OracleError(RuntimeError):
    """A sampled element contradicts a proven structural fact, or genericity failed."""


class NotNilpotentError(ValueError):
    pass


def omega_matrix(w: StackedPartialPermutation) -> Matrix:
    return [[Fraction(x) for x in row] for row in w.matrix()]


def annihilator(w: StackedPartialPermutation) -> list[list[Fraction]]:
    """Rows spanning the linear forms vanishing on [omega]."""
    return nullspace(transpose(omega_matrix(w)), w.n)


def _solve(equations: list[list[Fraction]], nvars: int) -> list[list[Fraction]]:
    return nullspace(equations, nvars)


def conormal_basis(w: StackedPartialPermutation) -> list[Matrix]:
    """Basis of D_omega as n x n matrices."""
    n, p = w.n, w.p
    om = omega_matrix(w)
    ann = annihilator(w)
    idx = lambda a, b: a * n + b  # noqa: E731
    eqs = []
    for k in range(w.r):
        for a in range(n):
            row = [Fraction(0)] * (n * n)
            for b in range(n):
                row[idx(a, b)] = om[b][k]
            eqs.append(row)
    for form in ann:
        for b in range(n):
            row = [Fraction(0)] * (n * n)
            for a in range(n):
                row[idx(a, b)] = form[a]
            eqs.append(row)
    for a in range(n):
        for b in range(n):
            same_block = (a < p) == (b < p)
            if same_block and a >= b:
                row = [Fraction(0)] * (n * n)
                row[idx(a, b)] = Fraction(1)
                eqs.append(row)
    return [[vec[a * n:(a + 1) * n] for a in range(n)] for vec in _solve(eqs, n * n)]


def conormal_space(w: StackedPartialPermutation) -> LinearSubspace:
    n = w.n
    return LinearSubspace.span(n * n, [[x for row in y for x in row] for y in conormal_basis(w)])


def theta_part(y: Matrix, p: int) -> Matrix:
    n = len(y)
    return [[y[a][b] if (a < p) == (b < p) else Fraction(0) for b in range(n)] for a in range(n)]


def s_part(y: Matrix, p: int) -> Matrix:
    n = len(y)
    return [[y[a][b] if (a < p) != (b < p) else Fraction(0) for b in range(n)] for a in range(n)]


def _block(y: Matrix, rows: range, cols: range) -> Matrix:
    return [[y[a][b] for b in cols] for a in rows]


def jordan_type(x: Matrix) -> Partition:
    """Jordan block sizes of a nilpotent matrix, from ranks of its powers."""
    n = len(x)
    if n == 0:
        return ()
    if not is_nilpotent(x):
        raise NotNilpotentError("matrix is not nilpotent")
    kers, power = [0], [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    while kers[-1] < n:
        power = matmul(power, x)
        kers.append(n - rank(power))
    # columns of the Young diagram have lengths ker_k - ker_{k-1}
    cols = [kers[k] - kers[k - 1] for k in range(1, len(kers))]
    return conjugate(partition(cols))


def signed_jordan_type(x: Matrix, p: int, q: int) -> SignedYoungDiagram:
    """Signed Young diagram of a nilpotent x in s, via dim ker x^k cap V+-."""
    n = p + q
    if len(x) != n or any(len(row) != n for row in x):
        raise ValueError("wrong size")
    if not is_zero(theta_part(x, p)):
        raise ValueError("x is not block anti-diagonal")
    if not is_nilpotent(x):
        raise NotNilpotentError("matrix is not nilpotent")
    nplus, nminus = [], []
    power = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(n):
        power = matmul(power, x)
        nplus.append(p - rank(_block(power, range(n), range(p))) if p else 0)
        nminus.append(q - rank(_block(power, range(n), range(p, n))) if q else 0)
    return signed_diagram_from_column_counts(nplus, nminus)


def _rank_profile(x: Matrix, cols: Sequence[range]) -> tuple[int, ...]:
    """Ranks of x^k restricted to each column block, k = 1..n."""
    out = []
    power = x
    for _ in range(len(x)):
        out.extend(rank(_block(power, range(len(x)), c)) if len(c) else 0 for c in cols)
        power = matmul(power, x)
    return tuple(out)


@dataclass(frozen=True)
class OracleSample:
    y: Matrix
    profile_k: tuple[int, ...]
    profile_s: tuple[int, ...]


def _rng(seed: int, w: StackedPartialPermutation, trial: int, bound: int) -> random.Random:
    return random.Random(f"{seed}|{w.key()}|{trial}|{bound}")


def sample_conormal(
    w: StackedPartialPermutation, basis: list[Matrix], rng: random.Random, bound: int
) -> Matrix:
    n = w.n
    y = zeros(n)
    for b in basis:
        c = rng.randint(-bound, bound)
        if c:
            y = [[u + c * v for u, v in zip(ry, rb)] for ry, rb in zip(y, b)]
    return y


def check_sample(y: Matrix, w: StackedPartialPermutation) -> None:
    """Structural facts every element of D_omega must satisfy."""
    p, n = w.p, w.n
    if not is_zero(matmul(y, y)):
        raise OracleError(f"y^2 != 0 for a conormal element of {w}")
    v, x = theta_part(y, p), s_part(y, p)
    for a in range(n):
        for b in range(n):
            if (a < p) == (b < p) and a >= b and v[a][b] != 0:
                raise OracleError("theta part is not strictly upper triangular")
    if not is_nilpotent(x):
        raise OracleError(f"the s-part of a conormal element of {w} is not nilpotent")
    v2, x2 = matmul(v, v), matmul(x, x)
    for m in range(1, n // 2 + 1):
        lhs = matpow(x2, m)
        rhs = matpow(v2, m)
        sign = -1 if m % 2 else 1
        if any(a != sign * b for ra, rb in zip(lhs, rhs) for a, b in zip(ra, rb)):
            raise OracleError("(y^-theta)^(2m) != (-1)^m (y^theta)^(2m)")


def _samples(w: StackedPartialPermutation, seed: int, trials: int, bound: int) -> list[OracleSample]:
    basis = conormal_basis(w)
    p, n = w.p, w.n
    blocks = (range(0, p), range(p, n))
    out = []
    for t in range(trials):
        y = sample_conormal(w, basis, _rng(seed, w, t, bound), bound)
        check_sample(y, w)
        out.append(OracleSample(y, _rank_profile(theta_part(y, p), blocks), _rank_profile(s_part(y, p), blocks)))
    return out


def _generic(samples: list[OracleSample], attr: str) -> OracleSample | None:
    """Sample whose rank profile is the componentwise max, if attained by at least half."""
    profiles = [getattr(s, attr) for s in samples]
    top = tuple(max(col) for col in zip(*profiles)) if profiles and profiles[0] else ()
    hits = [s for s, prof in zip(samples, profiles) if prof == top]
    if 2 * len(hits) < len(samples):
        return None
    return hits[0]


def generic_sample(
    w: StackedPartialPermutation, attr: str, seed: int, trials: int, bound: int
) -> OracleSample:
    for b in (bound, RETRY_BOUND):
        got = _generic(_samples(w, seed, trials, b), attr)
        if got is not None:
            return got
    raise OracleError(f"no dominant sample for {w} after resampling")


def oracle_phi_k(
    w: StackedPartialPermutation, seed: int = 0, trials: int = DEFAULT_TRIALS, bound: int = DEFAULT_BOUND
) -> tuple[Partition, Partition]:
    y = generic_sample(w, "profile_k", seed, trials, bound).y
    p, n = w.p, w.n
    return (
        jordan_type(_block(y, range(0, p), range(0, p))),
        jordan_type(_block(y, range(p, n), range(p, n))),
    )


def oracle_phi_s(
    w: StackedPartialPermutation, seed: int = 0, trials: int = DEFAULT_TRIALS, bound: int = DEFAULT_BOUND
) -> SignedYoungDiagram:
    y = generic_sample(w, "profile_s", seed, trials, bound).y
    return signed_jordan_type(s_part(y, w.p), w.p, w.q)


def hom_dim(w: StackedPartialPermutation) -> int:
    """dim of pairs (A, D) of upper triangular matrices with (A + D)[omega] in [omega]."""
    p, n = w.p, w.n
    unknowns = [(a, b) for a in range(n) for b in range(n) if (a < p) == (b < p) and a <= b]
    om = omega_matrix(w)
    ann = annihilator(w)
    eqs = []
    for form in ann:
        for k in range(w.r):
            # form . X . omega[:, k] is linear in the entries of X
            eqs.append([form[a] * om[b][k] for a, b in unknowns])
    return len(unknowns) - rank(eqs) if eqs else len(unknowns)


def _coordinate_space(n: int, coords: Sequence[int]) -> LinearSubspace:
    return LinearSubspace.span(n, [[Fraction(int(i == c)) for i in range(n)] for c in coords])


def omega_space(w: StackedPartialPermutation) -> LinearSubspace:
    return LinearSubspace.span(w.n, transpose(omega_matrix(w)))


def hom_with_indec(w: StackedPartialPermutation, ind: Indecomposable) -> int:
    p, n = w.p, w.n
    big_w = omega_space(w)
    fp = list(range(ind.i))
    fm = [p + j for j in range(ind.j)]
    if ind.kind == "I'+":
        return ind.i
    if ind.kind == "I'-":
        return ind.j
    if ind.kind == "I+":
        return _coordinate_space(n, fp).intersection_dim(big_w)
    if ind.kind == "I-":
        return _coordinate_space(n, fm).intersection_dim(big_w)
    if ind.kind == "I":
        return _coordinate_space(n, fp + fm).intersection_dim(big_w)
    raise ValueError(f"unknown indecomposable {ind.kind}")
