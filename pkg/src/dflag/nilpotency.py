"""Harness for the nilpotent projection property.

For y = [[a, b], [c, d]] nilpotent with v = diag(a, d) nilpotent, each of the
cases A..G forces w = [[0, b], [c, 0]] to be nilpotent:

    A  y^2 = 0                  E  rk a <= 1 and d = 0
    B  y^3 = 0 and rk y = 2     F  q = 2, a^2 = 0, d = 0
    C  y^3 = 0, a^2 = d^2 = 0   G  q = 1
    D  y^3 = 0 and q = 2

The form cases "orthogonal" and "symplectic" take y with y^2 = 0 whose
skew-adjoint part (y - y*)/2 is nilpotent and test the self-adjoint part.
Random instances are built by solving linear conditions, never by rejection
on the conclusion.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from fractions import Fraction

from .linalg import (
    Matrix,
    add,
    identity,
    is_nilpotent,
    is_zero,
    mat,
    matmul,
    matpow,
    nullspace,
    rank,
    transpose,
    zeros,
)
from .orbits import enumerate_orbits

CASES = ("A", "B", "C", "D", "E", "F", "G")
FORM_CASES = ("orthogonal", "symplectic")


class PreconditionError(ValueError):
    """The instance does not satisfy the hypotheses of the requested case."""


def blocks(y: Matrix, p: int) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    n = len(y)
    a = [row[:p] for row in y[:p]]
    b = [row[p:] for row in y[:p]]
    c = [row[:p] for row in y[p:n]]
    d = [row[p:] for row in y[p:n]]
    return a, b, c, d


def theta_split(y: Matrix, p: int) -> tuple[Matrix, Matrix]:
    n = len(y)
    v = [[y[i][j] if (i < p) == (j < p) else Fraction(0) for j in range(n)] for i in range(n)]
    w = [[y[i][j] if (i < p) != (j < p) else Fraction(0) for j in range(n)] for i in range(n)]
    return v, w


def standard_form(kind: str, n: int) -> Matrix:
    """Antidiagonal orthogonal or symplectic Gram matrix."""
    if kind == "orthogonal":
        return [[Fraction(int(i + j == n - 1)) for j in range(n)] for i in range(n)]
    if kind == "symplectic":
        if n % 2:
            raise ValueError("symplectic forms need even dimension")
        m = n // 2
        return [[Fraction((1 if i < m else -1) if i + j == n - 1 else 0) for j in range(n)] for i in range(n)]
    raise ValueError(kind)


def adjoint(y: Matrix, form: Matrix) -> Matrix:
    """y* with (y u, v) = (u, y* v) for the Gram matrix ``form``."""
    # forms here satisfy form^-1 = +-form, and the sign cancels
    inv = form if form == transpose(form) else [[-x for x in row] for row in form]
    return matmul(matmul(inv, transpose(y)), form)


def form_split(y: Matrix, form: Matrix) -> tuple[Matrix, Matrix]:
    ys = adjoint(y, form)
    half = Fraction(1, 2)
    v = [[half * (x - z) for x, z in zip(r1, r2)] for r1, r2 in zip(y, ys)]
    w = [[half * (x + z) for x, z in zip(r1, r2)] for r1, r2 in zip(y, ys)]
    return v, w


def check_hypotheses(case: str, y: Matrix, p: int, q: int) -> None:
    n = len(y)
    if case in FORM_CASES:
        if not is_zero(matmul(y, y)):
            raise PreconditionError("y^2 != 0")
        v, _ = form_split(y, standard_form(case, n))
        if not is_nilpotent(v):
            raise PreconditionError("skew-adjoint part is not nilpotent")
        return
    if case not in CASES:
        raise ValueError(f"unknown case {case}")
    if p + q != n:
        raise PreconditionError("p + q differs from the matrix size")
    if not is_nilpotent(y):
        raise PreconditionError("y is not nilpotent")
    v, _ = theta_split(y, p)
    if not is_nilpotent(v):
        raise PreconditionError("theta part is not nilpotent")
    a, _, _, d = blocks(y, p)
    y3_zero = lambda: is_zero(matpow(y, 3))  # noqa: E731
    ok = {
        "A": lambda: is_zero(matmul(y, y)),
        "B": lambda: y3_zero() and rank(y) == 2,
        "C": lambda: y3_zero() and is_zero(matmul(a, a)) and is_zero(matmul(d, d)),
        "D": lambda: y3_zero() and q == 2,
        "E": lambda: rank(a) <= 1 and is_zero(d),
        "F": lambda: q == 2 and is_zero(matmul(a, a)) and is_zero(d),
        "G": lambda: q == 1,
    }[case]()
    if not ok:
        raise PreconditionError(f"hypotheses of case {case} fail")


def nilpotency_case_check(case: str, y: Matrix, p: int, q: int) -> bool:
    """True iff the off-diagonal (or self-adjoint) part of y is nilpotent."""
    y = mat(y)
    check_hypotheses(case, y, p, q)
    if case in FORM_CASES:
        _, w = form_split(y, standard_form(case, len(y)))
    else:
        _, w = theta_split(y, p)
    return is_nilpotent(w)


def counterexample() -> tuple[Matrix, int, int]:
    """y = [[a, 1], [b, -a]] in gl_6 with nilpotent y and y^theta but not y^-theta."""
    a = [[0, 1, 0], [0, 0, -1], [0, 0, 0]]
    b = [[0, 0, 1], [0, 0, 0], [1, 0, 0]]
    one = [[int(i == j) for j in range(3)] for i in range(3)]
    rows = [a[i] + one[i] for i in range(3)] + [b[i] + [-x for x in a[i]] for i in range(3)]
    return mat(rows), 3, 3


# random instances ---------------------------------------------------------


def _unimodular(m: int, rng: random.Random, steps: int = 6) -> tuple[Matrix, Matrix]:
    g, g_inv = identity(m), identity(m)
    if m < 2:
        s = rng.choice((1, -1))
        return [[Fraction(s)]] if m else [], [[Fraction(s)]] if m else []
    for _ in range(steps):
        i, j = rng.sample(range(m), 2)
        t = rng.choice((-2, -1, 1, 2))
        e = identity(m)
        e[i][j] = Fraction(t)
        e_inv = identity(m)
        e_inv[i][j] = Fraction(-t)
        g, g_inv = matmul(e, g), matmul(g_inv, e_inv)
    return g, g_inv


def conjugate_by_k(y: Matrix, p: int, rng: random.Random) -> Matrix:
    n = len(y)
    g1, h1 = _unimodular(p, rng)
    g2, h2 = _unimodular(n - p, rng)
    k, k_inv = zeros(n), zeros(n)
    for i in range(p):
        for j in range(p):
            k[i][j], k_inv[i][j] = g1[i][j], h1[i][j]
    for i in range(n - p):
        for j in range(n - p):
            k[p + i][p + j], k_inv[p + i][p + j] = g2[i][j], h2[i][j]
    return matmul(matmul(k, y), k_inv)


def _random_chain(p: int, q: int, length: int, rng: random.Random) -> list[list[list[int]]]:
    """Nested spans W_1 < ... < W_{length-1} of partial permutation columns."""
    n = p + q
    r = rng.randint(1, n)
    w = rng.choice(enumerate_orbits(p, q, r))
    cols = [c for c in w.columns]
    rng.shuffle(cols)
    vecs = []
    for c in cols:
        v = [0] * n
        if c.plus is not None:
            v[c.plus - 1] = 1
        if c.minus is not None:
            v[p + c.minus - 1] = 1
        vecs.append(v)
    cuts = sorted(rng.randint(0, len(vecs)) for _ in range(length - 1))
    return [vecs[:k] for k in cuts]


def _chain_equations(n: int, chain: list[list[list[int]]]) -> list[list[Fraction]]:
    """Linear conditions y W_k in W_{k-1} on the n*n entries of y."""
    spans = [[]] + chain + [[[int(i == j) for i in range(n)] for j in range(n)]]
    eqs = []
    for lower, upper in zip(spans, spans[1:]):
        forms = nullspace(mat(lower), n) if lower else [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
        for u in upper:
            for f in forms:
                eqs.append([f[a] * u[b] for a in range(n) for b in range(n)])
    return eqs


def _entries_zero(n: int, cells) -> list[list[Fraction]]:
    eqs = []
    for a, b in cells:
        row = [Fraction(0)] * (n * n)
        row[a * n + b] = Fraction(1)
        eqs.append(row)
    return eqs


def _strict_upper_blocks(p: int, n: int):
    return [(a, b) for a in range(n) for b in range(n) if (a < p) == (b < p) and a >= b]


def _square_zero_block(offset: int, m: int, rng: random.Random):
    """Cells forced to vanish so that the m x m block maps into S and kills S."""
    s = set(rng.sample(range(m), m // 2)) if m >= 2 else set()
    return [(offset + i, offset + j) for i in range(m) for j in range(m) if i not in s or j in s]


def _random_solution(eqs: list[list[Fraction]], n: int, rng: random.Random, bound: int = 3) -> Matrix:
    basis = nullspace(eqs, n * n) if eqs else nullspace([], n * n)
    vec = [Fraction(0)] * (n * n)
    for b in basis:
        c = rng.randint(-bound, bound)
        if c:
            vec = [x + c * y for x, y in zip(vec, b)]
    return [vec[a * n:(a + 1) * n] for a in range(n)]


def _linear_instance(case: str, p: int, q: int, rng: random.Random) -> Matrix:
    n = p + q
    if case == "A":
        length = 2
    elif case in ("C", "D"):
        length = 3
    else:
        length = n
    eqs = _chain_equations(n, _random_chain(p, q, length, rng))
    if case in ("A", "D", "G"):
        eqs += _entries_zero(n, _strict_upper_blocks(p, n))
    if case == "C":
        eqs += _entries_zero(n, _square_zero_block(0, p, rng) + _square_zero_block(p, q, rng))
    if case in ("E", "F"):
        eqs += _entries_zero(n, [(a, b) for a in range(p, n) for b in range(p, n)])
    if case == "E":
        i, j = sorted(rng.sample(range(p), 2)) if p >= 2 else (0, 0)
        eqs += _entries_zero(n, [(a, b) for a in range(p) for b in range(p) if (a, b) != (i, j) or p < 2])
    if case == "F":
        eqs += _entries_zero(n, _square_zero_block(0, p, rng))
    return _random_solution(eqs, n, rng)


def _rank_two_instance(p: int, q: int, rng: random.Random) -> Matrix:
    """y = U V^T with V_+^T U_+ and V_-^T U_- nilpotent along a common line."""
    n = p + q
    u = [[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(n)]
    # with a square block of full rank both V blocks would be proportional, so
    # degenerate one block half of the time
    if rng.random() < 0.5:
        lo, hi = (0, p) if rng.random() < 0.5 else (p, n)
        t = Fraction(rng.randint(-2, 2))
        for i in range(lo, hi):
            u[i][1] = t * u[i][0]
    x = [Fraction(rng.randint(-2, 2)) for _ in range(2)]
    line = [[x[0] * -x[1], x[0] * x[0]], [x[1] * -x[1], x[1] * x[0]]]  # x (-x1, x0), square zero
    t1, t2 = rng.randint(-2, 2), rng.randint(-2, 2)
    targets = ([[t1 * e for e in row] for row in line], [[t2 * e for e in row] for row in line])
    v = []
    for block, target in ((u[:p], targets[0]), (u[p:], targets[1])):
        # solve V^T U = target for V, one row of V^T at a time
        m = len(block)
        vt = []
        for k in range(2):
            aug = [[block[i][c] for i in range(m)] + [target[k][c]] for c in range(2)]
            sol = _solve_affine(aug, m, rng)
            if sol is None:
                return zeros(n)
            vt.append(sol)
        v.extend([vt[0][i], vt[1][i]] for i in range(m))
    return matmul(u, transpose(v))


def _solve_affine(aug: list[list[Fraction]], m: int, rng: random.Random) -> list[Fraction] | None:
    """Random solution of A x = b given the augmented rows [A | b]."""
    from .linalg import rref

    r, piv = rref(aug)
    if m in piv:
        return None
    x = [Fraction(0)] * m
    free = [c for c in range(m) if c not in piv]
    for f in free:
        x[f] = Fraction(rng.randint(-2, 2))
    for row, pc in zip(r, piv):
        x[pc] = row[m] - sum(row[f] * x[f] for f in free)
    return x


def _form_instance(kind: str, n: int, rng: random.Random) -> Matrix:
    """y^2 = 0 from a partial permutation span, skew part strictly upper triangular."""
    form = standard_form(kind, n)
    chain = _random_chain(n, 0, 2, rng) if n else [[]]
    eqs = _chain_equations(n, chain)
    adj = _unit_adjoints(form)
    # (y - y*)[a][b] = 0 for a >= b, linear in y
    for a in range(n):
        for b in range(a + 1):
            row = [Fraction(int((i, j) == (a, b))) - adj[i, j][a][b] for i in range(n) for j in range(n)]
            eqs.append(row)
    y = _random_solution(eqs, n, rng)
    g, g_inv = _form_group_element(form, rng)
    return matmul(matmul(g, y), g_inv)


def _form_group_element(form: Matrix, rng: random.Random) -> tuple[Matrix, Matrix]:
    """exp(x) for a random nilpotent x in the Lie algebra of the form's group."""
    n = len(form)
    adj = _unit_adjoints(form)
    g, g_inv = identity(n), identity(n)
    for lower in (True, False, True):
        cells = [(i, j) for i in range(n) for j in range(n) if (i > j if lower else i < j)]
        eqs = []
        for a in range(n):
            for b in range(n):
                row = [Fraction(0)] * (n * n)
                for i, j in cells:
                    row[i * n + j] = int((i, j) == (a, b)) + adj[i, j][a][b]
                eqs.append(row)
        eqs += _entries_zero(n, [(i, j) for i in range(n) for j in range(n) if (i, j) not in cells])
        x = _random_solution(eqs, n, rng, bound=2)
        g, g_inv = matmul(_exp_nilpotent(x), g), matmul(g_inv, _exp_nilpotent([[-e for e in r] for r in x]))
    return g, g_inv


def _unit_adjoints(form: Matrix) -> dict[tuple[int, int], Matrix]:
    n = len(form)
    out = {}
    for i in range(n):
        for j in range(n):
            e = zeros(n)
            e[i][j] = Fraction(1)
            out[i, j] = adjoint(e, form)
    return out


def _exp_nilpotent(x: Matrix) -> Matrix:
    n = len(x)
    out, term = identity(n), identity(n)
    for k in range(1, n + 1):
        term = [[e / k for e in row] for row in matmul(term, x)]
        out = add(out, term)
    return out


def random_instance(case: str, seed: int, index: int) -> tuple[Matrix, int, int]:
    """A seeded instance satisfying the hypotheses of ``case`` (y, p, q)."""
    rng = random.Random(f"nilpotency|{case}|{seed}|{index}")
    if case in FORM_CASES:
        n = rng.choice((2, 4, 6)) if case == "symplectic" else rng.randint(2, 6)
        return _form_instance(case, n, rng), n, 0
    p = rng.randint(2 if case in ("B", "E") else 1, 3)
    q = {"D": 2, "F": 2, "G": 1}.get(case, rng.randint(2 if case == "B" else 1, 3))
    builder: Callable[[], Matrix]
    if case == "B":
        builder = lambda: _rank_two_instance(p, q, rng)  # noqa: E731
    else:
        builder = lambda: _linear_instance(case, p, q, rng)  # noqa: E731
    y = builder()
    for _ in range(40):
        if case == "B" and rank(y) == 2:
            break
        if case != "B" and not is_zero(theta_split(y, p)[1]):
            break
        y = builder()
    return conjugate_by_k(y, p, rng), p, q
