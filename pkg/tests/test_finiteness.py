from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dflag.finiteness import (
    DimensionVector,
    FactorShape,
    JointTriple,
    ParabolicShape,
    bruteforce_witness,
    classify_table,
    composition,
    forbidden_witness,
    is_finite_bruteforce,
    is_finite_fast,
    is_finite_triple_flag_A,
    multiple_flag_witness,
    plus_part,
    summands,
    table3_codes,
    table_rows,
    tits_form,
)
from dflag.young import partitions


def compositions(n, max_parts=None):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out = (first,) + rest
            if max_parts is None or len(out) <= max_parts:
                yield out


def joint_triples(nmax, pmin=0, qmin=0, parts=compositions):
    for n in range(1, nmax + 1):
        for p in range(pmin, n - qmin + 1):
            q = n - p
            for a in parts(p):
                for b in parts(q):
                    for c in parts(n):
                        yield JointTriple.from_primes(a, b, c)


def part_tuples(n):
    return [tuple(x) for x in partitions(n)] if n else [()]


small_comp = st.lists(st.integers(0, 3), min_size=0, max_size=3).map(tuple)


@st.composite
def triples(draw):
    a, b = draw(small_comp), draw(small_comp)
    n = sum(a) + sum(b)
    if n == 0:
        a = (1,)
        n = 1
    cuts = sorted(draw(st.lists(st.integers(0, n), max_size=3)))
    c = tuple(y - x for x, y in zip([0] + cuts, cuts + [n]))
    return JointTriple.from_primes(a, b, c)


# Tits form


def test_tits_form_examples():
    assert tits_form((1, 1), (1, 1), (1, 1), (1, 1)) == 0
    assert tits_form((1, 1, 2), (1, 1, 2), (1, 1, 1, 1)) == 0
    assert tits_form((1, 1), (1, 1)) == 2
    assert tits_form((2,), (2,), (2,)) == 4
    with pytest.raises(ValueError):
        tits_form((1,), (2,))


FLAG_TUPLES = [((1, 1), (1, 1), (1, 1), (1, 1)), ((1, 1, 2), (1, 1, 2), (1, 1, 1, 1)), ((2, 1), (3,), (1, 1, 1))]


@pytest.mark.parametrize("comps", FLAG_TUPLES)
def test_dimension_vector_matches_tits_form(comps):
    assert DimensionVector.of_flags(*comps).tits() == tits_form(*comps)


@given(triples())
def test_dimension_vector_tits_for_triples(t):
    assert Fraction(t.dimension_vector().tits()) == t.tits()


def test_joint_triple_validation():
    t = JointTriple.from_primes((1, 1), (2,), (3, 1))
    assert (t.a, t.b, t.p, t.q, t.n) == ((1, 1, 2), (2, 2), 2, 2, 4)
    with pytest.raises(ValueError):
        JointTriple((1, 1), (1, 1), (3,))
    with pytest.raises(ValueError):
        composition((1, -1))
    assert plus_part((0, 2, 0, 3, 1)) == (3, 2, 1)


# deciders


def test_bruteforce_examples():
    assert is_finite_bruteforce(JointTriple.from_primes((1, 1), (1, 1), (2, 2)))
    assert not is_finite_bruteforce(JointTriple.from_primes((1, 1), (1, 1), (1, 1, 1, 1)))
    w = bruteforce_witness(JointTriple.from_primes((1, 1, 1), (1, 1, 1), (2, 2, 2)))
    assert w is not None and w.tits() < 1


def test_fast_examples():
    assert is_finite_fast(JointTriple.from_primes((1, 1), (1, 1), (2, 2)))
    w = forbidden_witness(JointTriple.from_primes((2, 2, 1), (1, 1, 1), (2, 2, 2, 2)))
    assert w == JointTriple.from_primes((1, 1, 1), (1, 1, 1), (2, 2, 2))


@pytest.mark.parametrize("t", list(joint_triples(6)), ids=str)
def test_at_most_two_blocks_in_c_is_finite(t):
    if len(plus_part(t.c)) <= 2:
        assert is_finite_bruteforce(t) and is_finite_fast(t)


def test_fast_equals_bruteforce_small():
    bad = [t for t in joint_triples(6) if is_finite_fast(t) != is_finite_bruteforce(t)]
    assert bad == []


@given(triples())
def test_swap_invariance(t):
    assert is_finite_bruteforce(t) == is_finite_bruteforce(t.swapped())
    assert is_finite_fast(t) == is_finite_fast(t.swapped())


@given(triples(), st.integers(0, 3))
def test_zero_parts_do_not_matter(t, k):
    k = min(k, len(t.c))
    padded = JointTriple.from_primes(t.a_prime + (0,), (0,) + t.b_prime, t.c[:k] + (0,) + t.c[k:])
    assert is_finite_bruteforce(padded) == is_finite_bruteforce(t)
    assert is_finite_fast(padded) == is_finite_fast(t)


SMALL_TRIPLES = [JointTriple.from_primes((1, 1), (1,), (2, 1)), JointTriple.from_primes((2, 1), (1, 1), (1, 2, 2))]


@pytest.mark.parametrize("t", SMALL_TRIPLES, ids=str)
def test_separable_minimum_equals_exhaustive_minimum(t):
    exhaustive = min(2 * s.tits() for s in summands(t))
    w = bruteforce_witness(t)
    assert (w is None) == (exhaustive >= 2)


@pytest.mark.parametrize("t", list(joint_triples(5)), ids=str)
def test_bruteforce_matches_exhaustive_summands(t):
    assert is_finite_bruteforce(t) == all(s.tits() >= 1 for s in summands(t))


# classification table


def shape(a, b, c):
    return ParabolicShape.of(JointTriple.from_primes(a, b, c))


def test_factor_shape():
    f = FactorShape.of((0, 3, 1))
    assert (f.size, f.blocks, f.min_block) == (4, 2, 1)
    assert f.maximal and f.mirabolic and not f.full


def test_table_rows_examples():
    assert "P2" in table_rows(shape((1, 1, 1), (1, 1, 1), (3, 3)))
    assert "P6" in table_rows(shape((2, 3), (4,), (2, 2, 2, 1, 1, 1)))
    assert table_rows(shape((2, 2), (2, 2), (2, 2, 2, 2))) == []
    assert "PA-2" in table_rows(shape((1, 1, 1, 1), (1,), (1,) * 5))


def test_table_gap_and_amended_row():
    # |P| = 4 with blocks >= 2, Q2 = GL_2, six blocks in Q1: finite, but no
    # printed row applies
    t = JointTriple.from_primes((1,) * 6, (2,), (2, 2, 2, 2))
    assert is_finite_bruteforce(t)
    assert not classify_table(ParabolicShape.of(t))
    assert table_rows(ParabolicShape.of(t), amended=True) == ["P4-3"]


def test_amended_table_agrees_on_partition_triples():
    bad = [t for t in joint_triples(8, 1, 1, part_tuples) if classify_table(ParabolicShape.of(t), True) != is_finite_fast(t)]
    assert bad == []


# type A triple flags


def test_triple_flag_examples():
    assert is_finite_triple_flag_A((1, 1), (1, 1), (1, 1))
    assert multiple_flag_witness((1, 1), (1, 1), (1, 1), (1, 1)) is not None
    assert is_finite_triple_flag_A((2, 2), (2, 2), (1, 1, 1, 1))
    assert multiple_flag_witness((2, 2), (2, 2), (2, 2), (2, 2)) is not None
    assert is_finite_triple_flag_A((2, 2), (2, 2), (2, 2))
    assert not is_finite_triple_flag_A((1, 1, 1), (1, 1, 1), (1, 1, 1))
    assert is_finite_triple_flag_A((1, 5), (2, 2, 2), (1,) * 6)


def test_table3_matches_triple_flag_decider():
    bad = []
    for n in range(1, 7):
        ps = part_tuples(n)
        for a1, a2, a3 in product(ps, repeat=3):
            if bool(table3_codes(a1, a2, a3)) != is_finite_triple_flag_A(a1, a2, a3):
                bad.append((a1, a2, a3))
    assert bad == []
