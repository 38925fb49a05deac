"""Type CI orbits inside the AIII double flag variety with p = q = r = n.

A Lagrangian subspace of C^2n spanned by the columns of omega = (tau1; tau2)
corresponds to the symmetric condition tau1^T tau2 = tau2^T tau1. The
involution sigma sends omega to the complementary columns (xi2; xi1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import mat, rank
from .orbits import OrbitColumn, OrbitError, StackedPartialPermutation, dim_orbit, enumerate_orbits


class CompletionError(RuntimeError):
    pass


def _check_square(w: StackedPartialPermutation) -> int:
    if not (w.p == w.q == w.r):
        raise OrbitError(f"need p = q = r, got ({w.p}, {w.q}, {w.r})")
    return w.p


def _product(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    """x^T y for 0/1 matrices of equal height."""
    cols = len(x[0]) if x else 0
    return [[sum(x[k][i] * y[k][j] for k in range(len(x))) for j in range(cols)] for i in range(cols)]


def is_symplectic(w: StackedPartialPermutation) -> bool:
    _check_square(w)
    m = _product(w.tau1, w.tau2)
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))


def is_symplectic_transposed(w: StackedPartialPermutation) -> bool:
    """Same test with tau2^T tau1."""
    _check_square(w)
    m = _product(w.tau2, w.tau1)
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))


def complete_xi(w: StackedPartialPermutation) -> tuple[list[list[int]], list[list[int]]]:
    """Complementary columns: edges repeated, free points added on their own side."""
    n = _check_square(w)
    g = w.graph
    cols = [OrbitColumn(i, j) for i, j in g.edges]
    cols += [OrbitColumn(i, None) for i in g.free_plus]
    cols += [OrbitColumn(None, j) for j in g.free_minus]
    if len(cols) != n:
        raise CompletionError(f"completion of {w} has {len(cols)} columns")
    xi1 = [[1 if c.plus == i else 0 for c in cols] for i in range(1, n + 1)]
    xi2 = [[1 if c.minus == j else 0 for c in cols] for j in range(1, n + 1)]
    _verify_completion(w, xi1, xi2)
    return xi1, xi2


def _verify_completion(w: StackedPartialPermutation, xi1, xi2) -> None:
    n = w.p
    t1, t2 = w.tau1, w.tau2
    for block in (xi1, xi2):
        if any(sum(row) > 1 for row in block) or any(sum(col) > 1 for col in zip(*block)):
            raise CompletionError("xi is not a partial permutation")
    stacked = xi1 + xi2
    if rank(mat(stacked)) != n:
        raise CompletionError("xi does not have full rank")
    g = [t1[i] + xi1[i] for i in range(n)] + [t2[j] + [-x for x in xi2[j]] for j in range(n)]
    if rank(mat(g)) != 2 * n:
        raise CompletionError("g is singular")
    a, b = _product(xi1, t1), _product(xi2, t2)
    if a != b:
        raise CompletionError("xi1^T tau1 != xi2^T tau2")


def sigma(w: StackedPartialPermutation) -> StackedPartialPermutation:
    """Canonical representative of (xi2; xi1)."""
    n = _check_square(w)
    xi1, xi2 = complete_xi(w)
    cols = []
    for k in range(n):
        plus = next((j + 1 for j in range(n) if xi2[j][k]), None)
        minus = next((i + 1 for i in range(n) if xi1[i][k]), None)
        cols.append(OrbitColumn(plus, minus))
    return StackedPartialPermutation(n, n, tuple(cols))


@dataclass(frozen=True)
class CiOrbit:
    omega: StackedPartialPermutation

    @property
    def n(self) -> int:
        return self.omega.p

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "omega": self.omega.to_json(),
            "symmetric": is_symplectic(self.omega),
            "ambient_dim": dim_orbit(self.omega),
        }


def enumerate_ci_orbits(n: int) -> list[CiOrbit]:
    if n < 1:
        raise ValueError("n must be positive")
    return [CiOrbit(w) for w in enumerate_orbits(n, n, n) if is_symplectic(w)]
