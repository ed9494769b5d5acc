from itertools import permutations

import numpy as np
import pytest

from spidercross.bounds import exact_s_k_2, lower_bound, upper_bound
from spidercross.convex import count_crossings_convex
from spidercross.search import (
    BudgetExceeded,
    _lex_permutations,
    count_orders,
    exhaustive_max,
    hill_climb,
    iter_order_chunks,
    verify_conjecture,
)
from spidercross.spider import LegTooShort, make_spider

from oracles import brute_count, brute_max, legs_lists


def test_exhaustive_s32():
    r = exhaustive_max(make_spider([2, 2, 2]))
    assert r.best_count == 8
    assert r.orders_examined == 360
    assert r.exhaustive and r.matches_conjecture
    assert count_crossings_convex(r.witness) == 8


def test_exhaustive_s42():
    r = exhaustive_max(make_spider([2, 2, 2, 2]))
    assert r.best_count == 16 == exact_s_k_2(4)
    assert r.orders_examined == 20160


def test_exhaustive_star():
    r = exhaustive_max(make_spider([1, 1, 1]))
    assert r.best_count == 0
    assert r.matches_conjecture is None


def test_exhaustive_three_two_two():
    assert exhaustive_max(make_spider([3, 2, 2])).best_count == 13 == brute_max([3, 2, 2])


def test_budget():
    s = make_spider([2, 2, 2, 2, 2])
    with pytest.raises(BudgetExceeded) as info:
        exhaustive_max(s)
    assert info.value.orders == count_orders(s) == 1814400


def test_lex_permutations():
    for r in range(1, 6):
        table = _lex_permutations(r)
        assert [tuple(row) for row in table] == list(permutations(range(r)))


@pytest.mark.parametrize("legs", legs_lists(8))
def test_symmetry_reduction_is_sound(legs):
    s = make_spider(legs)
    expected = brute_max(legs)
    plain = exhaustive_max(s, reflection=False)
    assert plain.orders_examined == count_orders(s, reflection=False)
    assert plain.best_count == expected
    mirrored = exhaustive_max(s)
    assert mirrored.best_count == expected
    # the lexicographically smallest maximiser always survives the mirror quotient
    assert mirrored.witness == plain.witness
    both = exhaustive_max(s, equal_legs=True)
    assert both.best_count == expected
    assert exhaustive_max(s, reflection=False, equal_legs=True).best_count == expected


def test_witness_is_lexicographically_smallest():
    s = make_spider([3, 2, 2])
    idx = list(range(1, s.n))
    best, first = -1, None
    for p in permutations(idx):
        c = brute_count([3, 2, 2], [s.vertices[0], *(s.vertices[t] for t in p)])
        if c > best:
            best, first = c, (0, *p)
    assert exhaustive_max(s).witness.indices == first


def test_chunks_cover_each_mirror_pair_once():
    s = make_spider([2, 2, 2])
    rows = np.vstack(list(iter_order_chunks(s)))
    seen = {tuple(r) for r in rows}
    assert len(seen) == len(rows) == 360
    for r in rows:
        mirror = (0, *reversed(r[1:]))
        assert tuple(mirror) not in seen


def test_workers_do_not_change_result():
    s = make_spider([3, 3, 2])
    assert exhaustive_max(s, workers=4) == exhaustive_max(s, workers=1)


@pytest.mark.slow
def test_exhaustive_s52_with_extended_budget():
    r = exhaustive_max(make_spider([2] * 5), budget=2_000_000)
    assert r.best_count == exact_s_k_2(5) == 26


def test_hill_climb_examples():
    assert hill_climb(make_spider([2, 2, 2]), seed=5).best_count == 8
    assert hill_climb(make_spider([4, 3, 2, 2]), seed=1).best_count == 40
    s = make_spider([6, 6, 6, 6, 6])
    r = hill_climb(s, seed=2, restarts=3, steps=50)
    assert lower_bound(s) <= r.best_count <= upper_bound(s)
    assert not r.exhaustive
    assert count_crossings_convex(r.witness) == r.best_count


def test_hill_climb_is_deterministic():
    s = make_spider([4, 3, 3, 2, 1])
    assert hill_climb(s, seed=11, restarts=3, steps=40) == hill_climb(s, seed=11, restarts=3, steps=40)


def test_hill_climb_finds_optimum_without_construction():
    # legs of length 1 get no constructive start; the climber still finds the max
    s = make_spider([3, 2, 1])
    assert hill_climb(s, seed=0, restarts=10).best_count == brute_max([3, 2, 1])


def test_hill_climb_rejects_bad_parameters():
    with pytest.raises(ValueError):
        hill_climb(make_spider([2, 2, 2]), restarts=0)


def test_verify_conjecture():
    rows = verify_conjecture([make_spider([2, 2, 2]), make_spider([3, 2, 2])])
    assert [(r.conjectured, r.exhaustive_max, r.equal) for r in rows] == [(8, 8, True), (13, 13, True)]
    assert rows[0].to_json()["status"] == "equal"
    with pytest.raises(LegTooShort):
        verify_conjecture([make_spider([1, 1, 1])])
