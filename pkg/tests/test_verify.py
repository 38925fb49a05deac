import pytest

from dflag.orbits import count_partial_permutations
from dflag.verify import (
    Report,
    decreasing_subsequences,
    mirabolic_count,
    mirabolic_pair,
    ordered_map,
    partial_permutations,
    suite_ci,
    suite_closure,
    suite_grs,
    suite_nilpotency,
    suite_oracle,
    suite_travkin,
    workers,
)


def test_report_lines():
    rep = Report("x")
    rep.add("a", True, "ok")
    rep.add("b", False)
    assert rep.lines() == ["PASS a: ok", "FAIL b", "FAIL suite x"]
    assert not rep.ok


def test_decreasing_subsequences():
    assert decreasing_subsequences([]) == 1
    assert decreasing_subsequences([1, 2]) == 3
    assert decreasing_subsequences([2, 1]) == 4
    assert decreasing_subsequences([3, 2, 1]) == 8


@pytest.mark.parametrize("n, count", [(1, 2), (2, 7), (3, 34), (4, 209), (5, 1546)])
def test_mirabolic_counts(n, count):
    assert mirabolic_count(n) == count
    if n <= 4:
        assert count_partial_permutations(n, n) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_completion_is_injective(n):
    taus = list(partial_permutations(n))
    assert len({mirabolic_pair(t, n) for t in taus}) == len(taus)


def test_workers_env(monkeypatch):
    monkeypatch.setenv("DFV_THREADS", "junk")
    assert workers() == 1
    monkeypatch.setenv("DFV_THREADS", "1")
    assert ordered_map(abs, [-3, 1, -2]) == [3, 1, 2]


def test_ordered_map_in_pool(monkeypatch):
    monkeypatch.setattr("dflag.verify.workers", lambda: 2)
    assert ordered_map(abs, list(range(-20, 0))) == list(range(20, 0, -1))


@pytest.mark.parametrize(
    "make",
    [
        lambda: suite_travkin(4),
        lambda: suite_ci(3),
        lambda: suite_grs(2, 2),
        lambda: suite_closure(2, 2),
        lambda: suite_oracle(0, 2, 2),
        lambda: suite_nilpotency(0, 10),
    ],
)
def test_suites_pass_small(make):
    rep = make()
    assert rep.ok, rep.lines()
