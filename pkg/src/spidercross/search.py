"""Maximising crossings over convex drawings.

Orders are handled in bulk as integer matrices: row ``r`` lists vertex
indices (into ``spider.vertices``) around the circle, starting with the
centre (index 0). Crossing tests are vectorised over rows with numpy.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional, Sequence

import numpy as np

from .bounds import conjectured_mrcr
from .convex import CyclicOrder, algorithm_order, count_crossings_convex, order_from_indices
from .spider import SpiderSpec

DEFAULT_BUDGET = 500_000
# orders per enumeration chunk is at most TAIL_MAX!
TAIL_MAX = 9


class BudgetExceeded(RuntimeError):
    def __init__(self, orders: int, budget: int):
        self.orders = orders
        self.budget = budget
        super().__init__(f"exhaustive search needs {orders} orders, budget is {budget}; raise --budget to override")


@dataclass(frozen=True)
class SearchResult:
    best_count: int
    witness: CyclicOrder
    orders_examined: int
    exhaustive: bool
    matches_conjecture: Optional[bool]

    def to_json(self) -> dict:
        return {
            "legs": list(self.witness.spider.legs),
            "best_count": self.best_count,
            "witness": [list(v) for v in self.witness.sequence],
            "orders_examined": self.orders_examined,
            "exhaustive": self.exhaustive,
            "matches_conjecture": self.matches_conjecture,
        }


class _PairTable:
    """Endpoint vertex indices of every non-incident edge pair."""

    def __init__(self, s: SpiderSpec):
        idx = s.vertex_index
        ends = np.array(
            [[idx[e1.a], idx[e1.b], idx[e2.a], idx[e2.b]] for e1, e2 in s.nonincident_pairs],
            dtype=np.intp,
        ).reshape(-1, 4)
        self.a, self.b, self.c, self.d = ends.T


@lru_cache(maxsize=None)
def _pair_table(s: SpiderSpec) -> _PairTable:
    return _PairTable(s)


def positions_of(orders: np.ndarray) -> np.ndarray:
    """Inverse permutations: ``pos[r, v]`` is where vertex ``v`` sits in row ``r``."""
    rows, n = orders.shape
    pos = np.empty((rows, n), dtype=np.int16)
    pos[np.arange(rows)[:, None], orders] = np.arange(n, dtype=np.int16)
    return pos


def cross_matrix(s: SpiderSpec, orders: np.ndarray) -> np.ndarray:
    """(N, P) booleans: does non-incident pair ``p`` cross in order row ``r``?"""
    t = _pair_table(s)
    pos = positions_of(orders)
    pa, pb = pos[:, t.a], pos[:, t.b]
    lo, hi = np.minimum(pa, pb), np.maximum(pa, pb)
    pc, pd = pos[:, t.c], pos[:, t.d]
    return ((lo < pc) & (pc < hi)) != ((lo < pd) & (pd < hi))


def count_batch(s: SpiderSpec, orders: np.ndarray) -> np.ndarray:
    return cross_matrix(s, orders).sum(axis=1)


@lru_cache(maxsize=None)
def _lex_permutations(r: int) -> np.ndarray:
    """All permutations of range(r) as rows, in lexicographic order."""
    table = np.zeros((1, 0), dtype=np.int8)
    for size in range(1, r + 1):
        blocks = []
        for first in range(size):
            rest = table + (table >= first)
            blocks.append(np.hstack([np.full((len(table), 1), first, dtype=np.int8), rest.astype(np.int8)]))
        table = np.vstack(blocks)
    table.setflags(write=False)
    return table


def count_orders(s: SpiderSpec, reflection: bool = True) -> int:
    total = math.factorial(s.n - 1)
    return total // 2 if reflection else total


def _vertex_types(s: SpiderSpec) -> np.ndarray:
    # invariant under swapping legs of equal length
    return np.array([0] + [s.leg_length(v.i) * (s.n + 1) + v.j for v in s.vertices[1:]])


def _equal_leg_groups(s: SpiderSpec) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for i, length in enumerate(s.legs, start=1):
        groups.setdefault(length, []).append(s.vertex_index[(i, 1)])
    return [g for g in groups.values() if len(g) > 1]


def iter_order_chunks(s: SpiderSpec, reflection: bool = True, equal_legs: bool = False) -> Iterator[np.ndarray]:
    """Every convex drawing of ``s`` up to the requested symmetries, in lexicographic order.

    Rotations are removed by starting at the centre. With ``reflection``
    only rows whose second entry is below their last entry survive (the
    lexicographically smaller of each mirror pair). With ``equal_legs``
    legs of equal length appear in increasing index order, and the mirror
    test compares vertex types instead so the two quotients stay compatible.
    """
    n = s.n
    others = list(range(1, n))
    tail_len = min(n - 1, TAIL_MAX)
    table = _lex_permutations(tail_len)
    types = _vertex_types(s)
    groups = _equal_leg_groups(s) if equal_legs else []
    for prefix in permutations(others, n - 1 - tail_len):
        rest = np.array([v for v in others if v not in prefix], dtype=np.int8)
        tail = rest[table]
        head = np.broadcast_to(np.array((0, *prefix), dtype=np.int8), (len(tail), len(prefix) + 1))
        rows = np.hstack([head, tail])
        keep = np.ones(len(rows), dtype=bool)
        if reflection and not groups:
            keep &= rows[:, 1] < rows[:, -1]
        elif reflection:
            keep &= types[rows[:, 1]] <= types[rows[:, -1]]
        if groups:
            pos = positions_of(rows)
            for g in groups:
                for u, v in zip(g, g[1:]):
                    keep &= pos[:, u] < pos[:, v]
        yield rows[keep]


def _chunk_best(s: SpiderSpec, rows: np.ndarray) -> tuple[int, Optional[np.ndarray], int]:
    if len(rows) == 0:
        return -1, None, 0
    counts = count_batch(s, rows)
    r = int(np.argmax(counts))
    return int(counts[r]), rows[r], len(rows)


def _conjecture_flag(s: SpiderSpec, best: int) -> Optional[bool]:
    if s.legs[-1] < 2:
        return None
    return best == conjectured_mrcr(s)


def exhaustive_max(
    s: SpiderSpec,
    budget: Optional[int] = DEFAULT_BUDGET,
    reflection: bool = True,
    equal_legs: bool = False,
    workers: int = 1,
) -> SearchResult:
    """Maximum crossing count over every convex drawing of ``s``.

    The witness is the lexicographically smallest maximising order among
    those enumerated. Chunks may be evaluated on ``workers`` threads; the
    merge keeps chunk order, so the result does not depend on the thread
    count.
    """
    total = count_orders(s, reflection)
    if budget is not None and total > budget:
        raise BudgetExceeded(total, budget)
    chunks = iter_order_chunks(s, reflection, equal_legs)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda rows: _chunk_best(s, rows), chunks))
    else:
        results = [_chunk_best(s, rows) for rows in chunks]
    best, witness, examined = -1, None, 0
    for count, row, size in results:
        examined += size
        if count > best:
            best, witness = count, row
    order = order_from_indices(s, witness)
    return SearchResult(best, order, examined, True, _conjecture_flag(s, best))


@lru_cache(maxsize=None)
def _moves(n: int) -> np.ndarray:
    """Index maps for cyclic adjacent swaps and single-vertex reinsertions."""
    out = []
    for t in range(n):
        m = list(range(n))
        u = (t + 1) % n
        m[t], m[u] = m[u], m[t]
        out.append(m)
    for p in range(n):
        for q in range(n):
            if q in (p, p - 1, p + 1):
                continue
            m = list(range(n))
            m.insert(q, m.pop(p))
            out.append(m)
    return np.array(out, dtype=np.intp)


def _canonical(row: np.ndarray) -> np.ndarray:
    start = int(np.flatnonzero(row == 0)[0])
    return np.roll(row, -start)


def hill_climb(s: SpiderSpec, seed: int = 0, restarts: int = 8, steps: int = 200) -> SearchResult:
    """Random-restart local search over cyclic orders.

    Each step evaluates the full swap/reinsertion neighbourhood and moves to
    a uniformly chosen strictly better neighbour; a restart ends at a local
    optimum or after ``steps`` moves. When every leg has length >= 2 the
    first restart begins at :func:`algorithm_order`, so the result is never
    below the lower bound.
    """
    if restarts < 1 or steps < 1:
        raise ValueError("restarts and steps must be positive")
    rng = np.random.default_rng(seed)
    n = s.n
    moves = _moves(n)
    best, best_row, examined = -1, None, 0
    for restart in range(restarts):
        if restart == 0 and s.legs[-1] >= 2:
            cur = np.array(algorithm_order(s).indices, dtype=np.int16)
        else:
            cur = rng.permutation(n).astype(np.int16)
        cur_count = int(count_batch(s, cur[None, :])[0])
        examined += 1
        for _ in range(steps):
            cand = cur[moves]
            counts = count_batch(s, cand)
            examined += len(cand)
            better = np.flatnonzero(counts > cur_count)
            if len(better) == 0:
                break
            pick = better[rng.integers(len(better))]
            cur, cur_count = cand[pick], int(counts[pick])
        if cur_count > best:
            best, best_row = cur_count, _canonical(cur)
    witness = order_from_indices(s, best_row)
    assert count_crossings_convex(witness) == best
    return SearchResult(best, witness, examined, False, _conjecture_flag(s, best))


@dataclass(frozen=True)
class VerifyRow:
    spider: SpiderSpec
    conjectured: int
    exhaustive_max: int
    orders_examined: int

    @property
    def status(self) -> str:
        if self.exhaustive_max == self.conjectured:
            return "equal"
        # "greater" would refute the conjecture; "less" cannot happen
        return "greater" if self.exhaustive_max > self.conjectured else "less"

    @property
    def equal(self) -> bool:
        return self.status == "equal"

    def to_json(self) -> dict:
        return {
            "legs": list(self.spider.legs),
            "conjectured": self.conjectured,
            "exhaustive_max": self.exhaustive_max,
            "equal": self.equal,
            "status": self.status,
            "orders_examined": self.orders_examined,
        }


def verify_conjecture(
    spiders: Sequence[SpiderSpec],
    budget: Optional[int] = DEFAULT_BUDGET,
    reflection: bool = True,
    equal_legs: bool = False,
    workers: int = 1,
) -> list[VerifyRow]:
    """Compare the conjectured value with the exhaustive convex maximum, per spider."""
    for s in spiders:
        s.require_long_legs()
    rows = []
    for s in spiders:
        r = exhaustive_max(s, budget, reflection, equal_legs, workers)
        rows.append(VerifyRow(s, conjectured_mrcr(s), r.best_count, r.orders_examined))
    return rows
