"""Combinatorial Steinberg maps and the generalized Robinson-Schensted bijection.

For an orbit omega with graph having edges (sigma(j), j), marked points
l (plus side) and m (minus side) and free points l', m':

* phi_k(omega) is the pair of shapes of L.RS1(sigma).L' and M.RS2(sigma).M',
  where L, L', M, M' are single columns holding the marked and free points.
* grs(omega) refines phi_k to a quintuple of tableaux and intermediate shapes.
* phi_s(omega) is the signed Young diagram whose column sign counts come from
  the shapes above and from two auxiliary bijections w_{s,+}, w_{s,-}.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import product

from .orbits import OrbitColumn, OrbitError, StackedPartialPermutation, enumerate_orbits
from .young import (
    PartialBijection,
    Partition,
    SignedYoungDiagram,
    StandardTableau,
    TableauError,
    boxes_in_first_columns,
    column_strip_leq,
    plactic_product,
    remove_column_strips,
    reverse_bump,
    rowinsert,
    rs,
    rs_inverse,
    signed_diagram_from_column_counts,
    standard_tableaux,
)


class FiberError(ValueError):
    """A quintuple that is not in any gRS fiber."""


def edge_bijection(w: StackedPartialPermutation) -> PartialBijection:
    """sigma: minus index j -> plus index i for each edge (i, j)."""
    return PartialBijection.from_mapping({j: i for i, j in w.graph.edges})


def _factors(w: StackedPartialPermutation):
    g = w.graph
    sigma = edge_bijection(w)
    s1, s2 = rs(sigma)
    return (
        StandardTableau.vertical(g.marked_plus),
        s1,
        StandardTableau.vertical(g.free_plus),
        StandardTableau.vertical(g.marked_minus),
        s2,
        StandardTableau.vertical(g.free_minus),
    )


def phi_k(w: StackedPartialPermutation) -> tuple[Partition, Partition]:
    ell, s1, ell_free, m, s2, m_free = _factors(w)
    return (
        plactic_product(ell, s1, ell_free).shape,
        plactic_product(m, s2, m_free).shape,
    )


def w_k_plus(w: StackedPartialPermutation) -> PartialBijection:
    g = w.graph
    sigma = edge_bijection(w)
    word = sorted(g.marked_plus, reverse=True) + list(sigma.values) + sorted(g.free_plus, reverse=True)
    return PartialBijection.from_word(word)


def w_k_minus(w: StackedPartialPermutation) -> PartialBijection:
    g = w.graph
    inv = edge_bijection(w).inverse()
    word = sorted(g.marked_minus, reverse=True) + list(inv.values) + sorted(g.free_minus, reverse=True)
    return PartialBijection.from_word(word)


def phi_k_via_w(w: StackedPartialPermutation) -> tuple[Partition, Partition]:
    return rs(w_k_plus(w))[0].shape, rs(w_k_minus(w))[0].shape


@dataclass(frozen=True)
class GrsQuintuple:
    t1: StandardTableau
    t2: StandardTableau
    lambda_prime: Partition
    mu_prime: Partition
    nu: Partition

    @property
    def shapes(self) -> tuple[Partition, Partition]:
        return self.t1.shape, self.t2.shape

    def rank(self) -> int:
        return sum(self.lambda_prime) + sum(self.mu_prime) - sum(self.nu)

    def is_valid(self) -> bool:
        """The column strip chain condition."""
        lam, mu = self.shapes
        return (
            column_strip_leq(self.nu, self.lambda_prime)
            and column_strip_leq(self.lambda_prime, lam)
            and column_strip_leq(self.nu, self.mu_prime)
            and column_strip_leq(self.mu_prime, mu)
        )

    def to_json(self) -> dict:
        return {
            "T1": self.t1.to_json(),
            "T2": self.t2.to_json(),
            "lambda_prime": list(self.lambda_prime),
            "mu_prime": list(self.mu_prime),
            "nu": list(self.nu),
        }


def grs(w: StackedPartialPermutation) -> GrsQuintuple:
    ell, s1, ell_free, m, s2, m_free = _factors(w)
    left_p = plactic_product(ell, s1)
    left_m = plactic_product(m, s2)
    return GrsQuintuple(
        t1=plactic_product(left_p, ell_free),
        t2=plactic_product(left_m, m_free),
        lambda_prime=left_p.shape,
        mu_prime=left_m.shape,
        nu=s1.shape,
    )


def _sharp(t: StandardTableau) -> StandardTableau:
    """Plactic anti-automorphism induced by reversing and negating words."""
    return rowinsert(-x for x in reversed(t.reading_word()))


def _peel_right(t: StandardTableau, inner: Partition) -> tuple[StandardTableau, StandardTableau]:
    """Write t = S.C with sh(S) = inner and C a single column."""
    if not column_strip_leq(inner, t.shape):
        raise FiberError(f"{inner} is not a column strip inside {t.shape}")
    ejected = []
    for row in range(len(t.shape) - 1, -1, -1):
        inner_len = inner[row] if row < len(inner) else 0
        if t.shape[row] > inner_len:
            t, x = reverse_bump(t, row)
            ejected.append(x)
    return t, StandardTableau.vertical(ejected)


def _peel_left(t: StandardTableau, inner: Partition) -> tuple[StandardTableau, StandardTableau]:
    """Write t = C.S with sh(S) = inner and C a single column."""
    s_sharp, c_sharp = _peel_right(_sharp(t), inner)
    return StandardTableau.vertical(-x for x in c_sharp.entries()), _sharp(s_sharp)


def grs_inverse(t: GrsQuintuple, p: int, q: int, r: int) -> StackedPartialPermutation:
    lam, mu = t.shapes
    if sum(lam) != p or sum(mu) != q:
        raise FiberError("tableau sizes do not match (p, q)")
    if t.t1.entries() != frozenset(range(1, p + 1)) or t.t2.entries() != frozenset(range(1, q + 1)):
        raise FiberError("tableaux must be filled with 1..p and 1..q")
    if not t.is_valid() or t.rank() != r:
        raise FiberError("quintuple violates the column strip or rank condition")
    left_p, ell_free = _peel_right(t.t1, t.lambda_prime)
    ell, s1 = _peel_left(left_p, t.nu)
    left_m, m_free = _peel_right(t.t2, t.mu_prime)
    m, s2 = _peel_left(left_m, t.nu)
    sigma = rs_inverse(s1, s2)
    cols = [OrbitColumn(i, j) for j, i in sigma.as_dict().items()]
    cols += [OrbitColumn(i, None) for i in ell.entries()]
    cols += [OrbitColumn(None, j) for j in m.entries()]
    try:
        w = StackedPartialPermutation(p, q, tuple(cols))
    except OrbitError as exc:  # pragma: no cover - would mean the peel is wrong
        raise FiberError(str(exc)) from exc
    if grs(w) != t:
        raise FiberError("peeled factors do not reproduce the quintuple")
    return w


def fiber(lam: Partition, mu: Partition, r: int) -> Iterator[GrsQuintuple]:
    """All quintuples over the shape pair (lam, mu) with rank r."""
    shapes = []
    for lp in remove_column_strips(lam):
        for nu in remove_column_strips(lp):
            for mp in remove_column_strips(mu):
                if column_strip_leq(nu, mp) and sum(lp) + sum(mp) == sum(nu) + r:
                    shapes.append((lp, mp, nu))
    if not shapes:
        return
    t1s = list(standard_tableaux(lam))
    t2s = list(standard_tableaux(mu))
    for (lp, mp, nu), t1, t2 in product(shapes, t1s, t2s):
        yield GrsQuintuple(t1, t2, lp, mp, nu)


def w_s_plus(w: StackedPartialPermutation) -> PartialBijection:
    g = w.graph
    sigma = edge_bijection(w)
    mapping = {m: -(k + 1) for k, m in enumerate(g.marked_minus)}
    mapping.update(sigma.as_dict())
    for k, ell in enumerate(sorted(g.free_plus, reverse=True)):
        mapping[w.q + 1 + k] = ell
    return PartialBijection.from_mapping(mapping)


def w_s_minus(w: StackedPartialPermutation) -> PartialBijection:
    g = w.graph
    inv = edge_bijection(w).inverse()
    mapping = {ell: -(k + 1) for k, ell in enumerate(g.marked_plus)}
    mapping.update(inv.as_dict())
    for k, m in enumerate(sorted(g.free_minus, reverse=True)):
        mapping[w.p + 1 + k] = m
    return PartialBijection.from_mapping(mapping)


def phi_s_shapes(w: StackedPartialPermutation) -> tuple[Partition, Partition]:
    """(lambda', mu') used for odd columns."""
    return rs(w_s_plus(w))[0].shape, rs(w_s_minus(w))[0].shape


def phi_s(w: StackedPartialPermutation) -> SignedYoungDiagram:
    lam, mu = phi_k(w)
    lp, mp = phi_s_shapes(w)
    s, t = len(w.graph.marked_plus), len(w.graph.marked_minus)
    width = w.p + w.q
    nplus, nminus = [], []
    for c in range(1, width + 1):
        if c % 2 == 0:
            nplus.append(boxes_in_first_columns(lam, c))
            nminus.append(boxes_in_first_columns(mu, c))
        else:
            nplus.append(s - t + boxes_in_first_columns(lp, c))
            nminus.append(t - s + boxes_in_first_columns(mp, c))
    out = signed_diagram_from_column_counts(nplus, nminus)
    if out.signature != (w.p, w.q):
        raise TableauError(f"phi_s produced signature {out.signature} for {w}")
    return out


def phi_s_fibers(p: int, q: int, r: int) -> dict[SignedYoungDiagram, list[StackedPartialPermutation]]:
    """Orbits grouped by their phi_s value, in enumeration order.

    No combinatorial description of these fibers is known; this is only the
    empirical grouping.
    """
    out: dict[SignedYoungDiagram, list[StackedPartialPermutation]] = {}
    for w in enumerate_orbits(p, q, r):
        out.setdefault(phi_s(w), []).append(w)
    return out
