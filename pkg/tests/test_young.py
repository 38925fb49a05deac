from itertools import combinations, pairwise

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dflag.young import (
    EMPTY,
    PartialBijection,
    ReconstructionError,
    SignedYoungDiagram,
    StandardTableau,
    TableauError,
    all_permutations,
    boxes_in_first_columns,
    column_strip_leq,
    conjugate,
    dominates,
    parse_partition,
    partition,
    partitions,
    plactic_product,
    remove_column_strips,
    row_insert,
    rowinsert,
    rs,
    rs_inverse,
    schutzenberger,
    signed_diagram_from_column_counts,
    signed_diagrams,
    standard_tableaux,
)

T = StandardTableau


def lis(word):
    """Longest increasing subsequence by brute force over subsets."""
    for k in range(len(word), 0, -1):
        for idx in combinations(range(len(word)), k):
            sub = [word[i] for i in idx]
            if all(a < b for a, b in pairwise(sub)):
                return k
    return 0


def lds(word):
    return lis([-x for x in word])


# partitions


def test_partition_drops_trailing_zeros():
    assert partition([3, 2, 1, 0, 0]) == (3, 2, 1)
    assert partition([]) == ()


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        partition([2, -1])
    with pytest.raises(ValueError):
        partition([1, 3])


def test_conjugate():
    assert conjugate((3, 1, 1)) == (3, 1, 1)
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((4, 2)) == (2, 2, 1, 1)
    assert conjugate(()) == ()


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (4, 5), (6, 11), (8, 22)])
def test_partition_counts(n, count):
    assert len(list(partitions(n))) == count


def test_dominance():
    assert dominates((3,), (2, 1))
    assert dominates((2, 1), (1, 1, 1))
    assert not dominates((2, 2), (3, 1))


def test_column_strip_examples():
    assert column_strip_leq((1, 1), (2, 2))
    assert not column_strip_leq((1,), (3,))
    assert column_strip_leq((2, 1), (2, 1))
    assert not column_strip_leq((2,), (1, 1))


def test_remove_column_strips_is_exact():
    lam = (3, 2, 2, 1)
    got = set(remove_column_strips(lam))
    want = {mu for k in range(sum(lam) + 1) for mu in partitions(k) if column_strip_leq(mu, lam)}
    assert got == want


def test_boxes_in_first_columns():
    assert boxes_in_first_columns((2, 1), 1) == 2
    assert boxes_in_first_columns((3, 1, 1), 2) == 4
    assert boxes_in_first_columns((5, 4), 0) == 0


# tableaux


def test_tableau_validation():
    with pytest.raises(TableauError):
        T(((1, 3), (2, 1)))
    with pytest.raises(TableauError):
        T(((2, 1),))
    with pytest.raises(TableauError):
        T(((1,), (2, 3)))


def test_row_insert_examples():
    assert row_insert(T(((1, 2),)), 3) == T(((1, 2, 3),))
    assert row_insert(EMPTY, 5) == T(((5,),))
    assert row_insert(T(((1, 3),)), 2) == T(((1, 2), (3,)))


def test_row_insert_bumps_smallest_larger_entry():
    # with 2 and 4 both larger than 1, the smaller one is bumped
    assert row_insert(T(((2, 4),)), 1) == T(((1, 4), (2,)))


def test_row_insert_rejects_duplicates():
    with pytest.raises(TableauError):
        row_insert(T(((1, 2),)), 2)


def test_rs_examples():
    ident = PartialBijection.from_word((1, 2, 3))
    assert rs(ident) == (T(((1, 2, 3),)), T(((1, 2, 3),)))
    sigma = PartialBijection.from_mapping({1: 4, 3: 2})
    assert rs(sigma) == (T(((2,), (4,))), T(((1,), (3,))))


def test_rs_handles_negative_labels():
    sigma = PartialBijection.from_mapping({1: 4, 2: -1, 3: 2, 4: 3, 5: 1})
    assert rs(sigma)[0].shape == (3, 1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_rs_is_a_bijection(n):
    images = {rs(w) for w in all_permutations(n)}
    pairs = sum(len(list(standard_tableaux(lam))) ** 2 for lam in partitions(n))
    assert len(images) == pairs
    for w in all_permutations(min(n, 5)):
        assert rs_inverse(*rs(w)) == w


@pytest.mark.parametrize("n", range(1, 7))
def test_rs_shape_matches_greene(n):
    for w in all_permutations(n):
        shape = rs(w)[0].shape
        assert shape[0] == lis(w.values)
        assert len(shape) == lds(w.values)


@pytest.mark.parametrize("n", range(1, 5))
def test_rs_of_inverse_swaps(n):
    for w in all_permutations(n):
        p, q = rs(w)
        assert rs(w.inverse()) == (q, p)


@pytest.mark.parametrize("n", range(1, 6))
def test_rs_reversal_transposes(n):
    for w in all_permutations(n):
        reversed_w = PartialBijection.from_word(tuple(reversed(w.values)))
        assert rs(reversed_w)[0] == rs(w)[0].transpose()


def test_plactic_product_examples():
    assert plactic_product(T(((5,),)), T(((2,), (4,))), T(((1,), (3,)))) == T(((1, 3), (2,), (4,), (5,)))
    assert plactic_product(T(((2,),)), T(((1,), (3,)))) == T(((1, 3), (2,)))
    t = T(((1, 3), (2,)))
    assert plactic_product(t, EMPTY) == t
    assert plactic_product(EMPTY, t) == t


def test_plactic_product_rejects_overlap():
    with pytest.raises(TableauError):
        plactic_product(T(((1, 2),)), T(((2,),)))


def _random_tableau(labels, data):
    shape = data.draw(st.sampled_from(list(partitions(len(labels)))))
    return data.draw(st.sampled_from(list(standard_tableaux(shape, labels))))


@given(st.data())
def test_plactic_product_associative(data):
    labels = list(range(1, data.draw(st.integers(0, 6)) + 1))
    perm = data.draw(st.permutations(labels))
    cut1 = data.draw(st.integers(0, len(perm)))
    cut2 = data.draw(st.integers(cut1, len(perm)))
    a, b, c = (_random_tableau(sorted(part), data) for part in (perm[:cut1], perm[cut1:cut2], perm[cut2:]))
    assert plactic_product(plactic_product(a, b), c) == plactic_product(a, plactic_product(b, c))


@given(st.permutations(list(range(1, 8))), st.integers(0, 7))
def test_plactic_product_is_insertion_of_concatenation(word, cut):
    a, b = rowinsert(word[:cut]), rowinsert(word[cut:])
    assert plactic_product(a, b) == rowinsert(word)


def test_schutzenberger_examples():
    assert schutzenberger(T(((1,),))) == T(((1,),))
    assert schutzenberger(T(((1, 2),))) == T(((1, 2),))
    assert schutzenberger(T(((1, 2), (3,)))) == T(((1, 3), (2,)))


def test_schutzenberger_rejects_gaps():
    with pytest.raises(TableauError):
        schutzenberger(T(((1, 3),)))


@pytest.mark.parametrize("n", range(1, 7))
def test_schutzenberger_involutive(n):
    for lam in partitions(n):
        for t in standard_tableaux(lam):
            s = schutzenberger(t)
            assert s.shape == t.shape
            assert schutzenberger(s) == t


@pytest.mark.parametrize("n", range(1, 6))
def test_schutzenberger_and_longest_element(n):
    for w in all_permutations(n):
        w0w = PartialBijection.from_word(tuple(n + 1 - x for x in w.values))
        assert rs(w0w)[0] == schutzenberger(rs(w)[0]).transpose()


def test_standard_tableaux_counts():
    # hook length formula values
    assert len(list(standard_tableaux((3, 2)))) == 5
    assert len(list(standard_tableaux((3, 2, 1)))) == 16
    assert len(list(standard_tableaux(()))) == 1


# signed diagrams


def test_signed_diagram_sorting_and_signature():
    d = SignedYoungDiagram.of((1, "-"), (2, "-"), (1, "+"), (2, "+"))
    assert str(d) == "2+ 2- 1+ 1-"
    assert d.signature == (3, 3)


def test_signed_diagram_reconstruction_examples():
    lam = SignedYoungDiagram.of((2, "-"), (2, "-"), (1, "+"), (1, "+"), (1, "+"), (1, "-"))
    assert signed_diagram_from_column_counts(*lam.cumulative_counts()) == lam
    assert signed_diagram_from_column_counts([0, 0], [0, 0]) == SignedYoungDiagram()
    assert signed_diagram_from_column_counts([1], [1]) == SignedYoungDiagram.of((1, "+"), (1, "-"))


def test_signed_diagram_reconstruction_rejects_inconsistent_counts():
    # two + boxes in column one but three in the first two columns of a
    # diagram with no - boxes is impossible
    with pytest.raises(ReconstructionError):
        signed_diagram_from_column_counts([2, 3], [0, 0])


@pytest.mark.parametrize("p, q", [(p, q) for p in range(8) for q in range(8) if p + q <= 7])
def test_signed_diagram_round_trip(p, q):
    seen = set()
    for d in signed_diagrams(p, q):
        assert d.signature == (p, q)
        counts = d.cumulative_counts()
        width = max(p + q, 1)
        padded = [list(c) + [c[-1] if c else 0] * (width - len(c)) for c in counts]
        assert signed_diagram_from_column_counts(*padded) == d
        seen.add(d)
    assert len(seen) == len(list(signed_diagrams(p, q)))


def test_signed_diagram_counts_small():
    # nilpotent orbits of U(1,1) and U(2,1)
    assert len(list(signed_diagrams(1, 1))) == 3
    assert len(list(signed_diagrams(2, 1))) == 4


def test_parse_partition():
    assert parse_partition("2,1,1") == (2, 1, 1)
    assert parse_partition("") == ()


def test_partial_bijection():
    s = PartialBijection.from_mapping({3: 1, 1: 5})
    assert s.domain == (1, 3) and s.values == (5, 1)
    assert s(3) == 1
    assert s.inverse().as_dict() == {5: 1, 1: 3}
    with pytest.raises(ValueError):
        PartialBijection((1, 2), (3, 3))


def test_vertical_tableau():
    assert T.vertical([3, 1]) == T(((1,), (3,)))
