from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dflag.oracle import hom_dim
from dflag.orbits import (
    Indecomposable,
    OrbitColumn,
    OrbitError,
    StackedPartialPermutation,
    canonicalize,
    closure_dot,
    closure_leq,
    count_orbits,
    count_partial_permutations,
    dim_orbit,
    edge,
    enumerate_orbits,
    hasse_covers,
    indec_decomposition,
    marked_minus,
    marked_plus,
    orbit,
    rank_matrix,
    variety_dim,
)

EXAMPLE_TAU1 = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
EXAMPLE_TAU2 = [[0, 1, 0, 0], [0, 0, 0, 1], [1, 0, 0, 0]]
EXAMPLE = orbit(5, 3, edge(2, 3), edge(4, 1), marked_plus(5), marked_minus(2))

SMALL = [(p, q, r) for p in range(1, 4) for q in range(1, 4) for r in range(1, p + q + 1)]


def brute_orbits(p, q, r):
    """Canonical classes of all (p+q) x r stacked matrices of the right kind."""
    cols = [OrbitColumn(i, j) for i in [None, *range(1, p + 1)] for j in [None, *range(1, q + 1)] if i or j]
    seen = set()
    for choice in product(cols, repeat=r):
        try:
            seen.add(StackedPartialPermutation(p, q, choice))
        except OrbitError:
            pass
    return seen


def test_canonicalize_worked_example():
    w = canonicalize(EXAMPLE_TAU1, EXAMPLE_TAU2)
    assert w == EXAMPLE
    assert w.graph.edges == ((2, 3), (4, 1))
    assert w.graph.marked_plus == (5,) and w.graph.marked_minus == (2,)
    assert w.graph.free_plus == (1, 3) and w.graph.free_minus == ()


def test_canonicalize_is_column_order_invariant():
    for perm in permutations(range(4)):
        t1 = [[row[k] for k in perm] for row in EXAMPLE_TAU1]
        t2 = [[row[k] for k in perm] for row in EXAMPLE_TAU2]
        assert canonicalize(t1, t2) == EXAMPLE


def test_canonicalize_single_edge_and_round_trip():
    assert canonicalize([[1]], [[1]]) == orbit(1, 1, edge(1, 1))
    assert canonicalize(EXAMPLE.tau1, EXAMPLE.tau2) == EXAMPLE


@pytest.mark.parametrize(
    "tau1, tau2",
    [
        ([[1, 1]], [[0, 0]]),  # row used twice
        ([[0]], [[0]]),  # zero column
        ([[1], [1]], [[0]]),  # column with two ones
        ([[2]], [[0]]),
    ],
)
def test_canonicalize_rejects(tau1, tau2):
    with pytest.raises(OrbitError):
        canonicalize(tau1, tau2)


def test_enumerate_small_examples():
    assert set(enumerate_orbits(1, 1, 1)) == {
        orbit(1, 1, edge(1, 1)),
        orbit(1, 1, marked_plus(1)),
        orbit(1, 1, marked_minus(1)),
    }
    assert enumerate_orbits(1, 1, 2) == [orbit(1, 1, marked_plus(1), marked_minus(1))]


@pytest.mark.parametrize("p, q, r", [(1, 1, 3), (2, 2, 0), (0, 1, 2)])
def test_enumerate_rejects_bad_rank(p, q, r):
    with pytest.raises(OrbitError):
        enumerate_orbits(p, q, r)


@pytest.mark.parametrize("p, q, r", SMALL)
def test_enumeration_matches_brute_force(p, q, r):
    got = enumerate_orbits(p, q, r)
    assert len(got) == len(set(got)) == count_orbits(p, q, r)
    if r <= 4:
        assert set(got) == brute_orbits(p, q, r)


def test_orbit_count_222():
    # k edges, s marked +, t marked -: sum of C(2,k+s) C(k+s,k) C(2,k+t) C(k+t,k) k!
    assert count_orbits(2, 2, 2) == len(enumerate_orbits(2, 2, 2)) == 16


def test_count_partial_permutations():
    assert count_partial_permutations(1, 1) == 2
    assert count_partial_permutations(2, 2) == 7
    assert count_partial_permutations(3, 3) == 34


def test_indecomposables_of_worked_example():
    # free points give I', marked points give I (the 2- vertex is circled)
    assert set(indec_decomposition(EXAMPLE)) == {
        Indecomposable("I+", 5),
        Indecomposable("I'+", 1),
        Indecomposable("I'+", 3),
        Indecomposable("I-", 0, 2),
        Indecomposable("I", 2, 3),
        Indecomposable("I", 4, 1),
    }


def test_indecomposables_small():
    assert indec_decomposition(orbit(1, 1, edge(1, 1))) == [Indecomposable("I", 1, 1)]
    w = orbit(2, 2, marked_plus(1), marked_plus(2))
    assert set(indec_decomposition(w)) == {
        Indecomposable("I+", 1),
        Indecomposable("I+", 2),
        Indecomposable("I'-", 0, 1),
        Indecomposable("I'-", 0, 2),
    }


@pytest.mark.parametrize("p, q, r", SMALL)
def test_indecomposables_cover_every_vertex_once(p, q, r):
    for w in enumerate_orbits(p, q, r):
        parts = indec_decomposition(w)
        plus = sorted(x.i for x in parts if x.kind in ("I", "I+", "I'+"))
        minus = sorted(x.j for x in parts if x.kind in ("I", "I-", "I'-"))
        assert plus == list(range(1, p + 1)) and minus == list(range(1, q + 1))
        assert sum(1 for x in parts if x.kind in ("I", "I+", "I-")) == r


def test_rank_matrix_examples():
    r = rank_matrix(EXAMPLE)
    assert r[0][0] == 0 and r[5][3] == 4
    assert r[2][0] == 0 and r[5][0] == 1
    assert r[0][2] == 1  # the marked 2- vertex
    assert rank_matrix(orbit(1, 1, edge(1, 1))) == [[0, 0], [0, 1]]


@pytest.mark.parametrize("p, q, r", SMALL)
def test_rank_matrix_monotone(p, q, r):
    for w in enumerate_orbits(p, q, r):
        m = rank_matrix(w)
        assert m[p][q] == r
        assert all(m[i][j] <= m[i + 1][j] for i in range(p) for j in range(q + 1))
        assert all(m[i][j] <= m[i][j + 1] for i in range(p + 1) for j in range(q))


def test_dim_examples():
    assert dim_orbit(orbit(1, 1, edge(1, 1))) == 1
    assert dim_orbit(orbit(1, 1, marked_plus(1))) == 0
    assert dim_orbit(orbit(1, 1, marked_plus(1), marked_minus(1))) == 0
    assert dim_orbit(EXAMPLE) == 25


@pytest.mark.parametrize("p, q, r", SMALL)
def test_dim_matches_stabilizer(p, q, r):
    for w in enumerate_orbits(p, q, r):
        assert dim_orbit(w) == p * p + q * q - hom_dim(w)


def test_variety_dim():
    assert variety_dim(1, 1, 1) == 1
    assert variety_dim(5, 3, 4) == 10 + 3 + 16


def test_closure_leq_small_poset():
    e, mp, mm = orbit(1, 1, edge(1, 1)), orbit(1, 1, marked_plus(1)), orbit(1, 1, marked_minus(1))
    assert closure_leq(mp, e) and closure_leq(mm, e)
    assert not closure_leq(e, mp) and not closure_leq(mp, mm) and not closure_leq(mm, mp)
    assert all(closure_leq(w, w) for w in (e, mp, mm))


def test_closure_leq_rejects_mixed_varieties():
    with pytest.raises(OrbitError):
        closure_leq(orbit(1, 1, edge(1, 1)), orbit(2, 1, edge(1, 1)))


@pytest.mark.parametrize("p, q, r", SMALL)
def test_closure_is_a_partial_order_with_a_dense_orbit(p, q, r):
    orbits = enumerate_orbits(p, q, r)
    ranks = {w: tuple(map(tuple, rank_matrix(w))) for w in orbits}
    assert len(set(ranks.values())) == len(orbits)
    tops = [v for v in orbits if all(closure_leq(w, v) for w in orbits)]
    assert len(tops) == 1
    assert dim_orbit(tops[0]) == variety_dim(p, q, r)
    for a, b in hasse_covers(orbits):
        assert dim_orbit(orbits[a]) < dim_orbit(orbits[b])


def test_closure_dot():
    dot = closure_dot(enumerate_orbits(1, 1, 1))
    assert dot.startswith("digraph closure {")
    assert dot.count("->") == 2


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_json_round_trip(p, q, data):
    r = data.draw(st.integers(1, p + q))
    w = data.draw(st.sampled_from(enumerate_orbits(p, q, r)))
    rec = w.to_json()
    cols = [OrbitColumn(c["plus"], c["minus"]) for c in rec["columns"]]
    assert StackedPartialPermutation(rec["p"], rec["q"], tuple(cols)) == w
    assert canonicalize(w.tau1, w.tau2) == w
