import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from patternstats.perms import complement, parse_perm, reverse
from patternstats.stats import STATS, all_stats, consec3_count, stat

from helpers import naive_stat

small_perms = st.integers(0, 8).flatmap(
    lambda n: st.permutations(tuple(range(1, n + 1))).map(tuple))


def test_known_values():
    assert stat("pk", (1, 3, 2)) == 1
    p = parse_perm("617238459")
    assert stat("des", p) == 3
    assert stat("pk", p) == 2
    assert stat("vl", p) == 3


def test_empty_and_singleton_are_zero():
    for kind in STATS:
        assert stat(kind, ()) == 0
        assert stat(kind, (1,)) == 0


def test_unknown_stat():
    with pytest.raises(ValueError):
        stat("maj", (1, 2))


@given(small_perms)
def test_all_stats_matches_definitions(p):
    bundle = all_stats(p)
    for kind in STATS:
        assert bundle[kind] == naive_stat(kind, p)


def test_consec3_known_values():
    assert consec3_count((1, 2, 3, 4, 5, 6), (1, 2, 3)) == 4
    p = parse_perm("617238459")
    assert consec3_count(p, (1, 3, 2)) + consec3_count(p, (2, 3, 1)) == 2
    assert consec3_count((2, 1), (1, 2, 3)) == 0
    with pytest.raises(ValueError):
        consec3_count((1, 2, 3), (1, 2))


def test_window_identities_exhaustive():
    for n in range(8):
        for p in itertools.permutations(range(1, n + 1)):
            s = all_stats(p)
            assert s["pk"] == consec3_count(p, (1, 3, 2)) + consec3_count(p, (2, 3, 1))
            assert s["vl"] == consec3_count(p, (2, 1, 3)) + consec3_count(p, (3, 1, 2))
            assert s["dasc"] == consec3_count(p, (1, 2, 3))
            assert s["ddes"] == consec3_count(p, (3, 2, 1))
            if n >= 1:
                assert s["asc"] + s["des"] == n - 1


@given(small_perms)
def test_stat_symmetries(p):
    s = all_stats(p)
    assert s["pk"] == all_stats(complement(p))["vl"]
    assert s["dasc"] == all_stats(reverse(p))["ddes"]
    assert s["asc"] == all_stats(reverse(p))["des"]
