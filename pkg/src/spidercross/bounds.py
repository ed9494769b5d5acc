"""Closed-form crossing bounds for spiders and the leg-thrackling graph.

A pair of legs is *thrackled* in a drawing when every non-incident pair of
edges with one edge on each leg crosses (a leg's centre edge belongs to it).
Pairs inside a single leg are left out, so each missed crossing is charged
to at most one leg pair.

No three legs can be pairwise thrackled in a rectilinear drawing, so the
graph on legs whose edges are the thrackled pairs is triangle-free and has
at most floor(k^2/4) edges; every missing edge costs at least one crossing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Union

import numpy as np

from .convex import CyclicOrder, chords_cross
from .geometry import CoordinateDrawing
from .spider import SpiderError, SpiderSpec, thrackle_bound


class KTooSmall(SpiderError):
    pass


def _missed_by_algorithm(s: SpiderSpec) -> int:
    return sum((length - 1) * ((i - 1) // 2) for i, length in enumerate(s.legs, start=1) if i >= 3)


def lower_bound(s: SpiderSpec) -> int:
    """Crossings achieved by the five-block convex placement."""
    s.require_long_legs()
    return thrackle_bound(s) - _missed_by_algorithm(s)


def mantel_max_edges(k: int) -> int:
    return k * k // 4


def upper_bound(s: SpiderSpec) -> int:
    """Thrackle bound minus one crossing per leg pair that cannot be thrackled."""
    s.require_long_legs()
    return thrackle_bound(s) - (comb(s.k, 2) - mantel_max_edges(s.k))


def exact_s_k_2(k: int) -> int:
    """Maximum rectilinear crossing number of the spider with k legs of length 2."""
    if k < 3:
        raise KTooSmall(f"k must be at least 3, got {k}")
    return comb(2 * k, 2) - 2 * comb(k, 2) - k + mantel_max_edges(k)


def conjectured_mrcr(s: SpiderSpec) -> int:
    """Conjectured exact value; the same expression as :func:`lower_bound`."""
    return lower_bound(s)


@dataclass(frozen=True)
class BoundsReport:
    thrackle: int
    lower: int
    upper: int
    exact: Optional[int]
    conjectured: int

    @property
    def exact_is_proven(self) -> bool:
        return self.exact is not None

    def to_json(self) -> dict:
        return {
            "thrackle": self.thrackle,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "conjectured": self.conjectured,
            "exact_is_proven": self.exact_is_proven,
        }


def bounds_report(s: SpiderSpec) -> BoundsReport:
    exact = exact_s_k_2(s.k) if all(length == 2 for length in s.legs) else None
    return BoundsReport(
        thrackle=thrackle_bound(s),
        lower=lower_bound(s),
        upper=upper_bound(s),
        exact=exact,
        conjectured=conjectured_mrcr(s),
    )


@dataclass(frozen=True)
class AuxGraph:
    """Legs 1..k as vertices; an edge {a, b} (a < b) for each thrackled leg pair."""

    k: int
    edges: frozenset

    def __post_init__(self):
        for a, b in self.edges:
            if not 1 <= a < b <= self.k:
                raise ValueError(f"bad auxiliary edge {(a, b)} for k={self.k}")

    @property
    def non_edges(self) -> list[tuple[int, int]]:
        return [p for p in combinations(range(1, self.k + 1), 2) if p not in self.edges]

    def to_json(self) -> dict:
        return {"k": self.k, "edges": sorted(list(e) for e in self.edges)}


def _leg_pair_index(s: SpiderSpec) -> dict[tuple[int, int], np.ndarray]:
    """For each leg pair, the positions in ``s.nonincident_pairs`` of pairs joining the two legs."""
    out = {}
    pairs = s.nonincident_pairs
    for a, b in combinations(range(1, s.k + 1), 2):
        out[a, b] = np.array(
            [t for t, (e1, e2) in enumerate(pairs) if {e1.leg, e2.leg} == {a, b}], dtype=np.intp
        )
    return out


def _crosses(drawing: Union[CyclicOrder, CoordinateDrawing]):
    if isinstance(drawing, CyclicOrder):
        return lambda e1, e2: chords_cross(drawing, e1, e2)
    return drawing.edges_cross


def auxiliary_graph(s: SpiderSpec, drawing: Union[CyclicOrder, CoordinateDrawing]) -> AuxGraph:
    s.require_long_legs()
    if drawing.spider != s:
        raise SpiderError("drawing belongs to a different spider")
    crosses = _crosses(drawing)
    cross = np.array([crosses(e1, e2) for e1, e2 in s.nonincident_pairs], dtype=bool)
    edges = frozenset(p for p, idx in _leg_pair_index(s).items() if cross[idx].all())
    return AuxGraph(s.k, edges)


def aux_edges_batch(s: SpiderSpec, cross: np.ndarray) -> tuple[list[tuple[int, int]], np.ndarray]:
    """Vectorised :func:`auxiliary_graph` over many drawings at once.

    ``cross`` is an (N, P) boolean matrix whose columns follow
    ``s.nonincident_pairs``. Returns the leg pairs and an (N, C(k,2)) matrix
    marking which of them are thrackled in each drawing.
    """
    s.require_long_legs()
    index = _leg_pair_index(s)
    legs = list(index)
    out = np.empty((cross.shape[0], len(legs)), dtype=bool)
    for c, p in enumerate(legs):
        out[:, c] = cross[:, index[p]].all(axis=1)
    return legs, out


def has_triangle_batch(k: int, legs: list[tuple[int, int]], thrackled: np.ndarray) -> np.ndarray:
    col = {p: c for c, p in enumerate(legs)}
    found = np.zeros(thrackled.shape[0], dtype=bool)
    for a, b, c in combinations(range(1, k + 1), 3):
        found |= thrackled[:, col[a, b]] & thrackled[:, col[a, c]] & thrackled[:, col[b, c]]
    return found


def is_triangle_free(g: AuxGraph) -> bool:
    return not any(
        {(a, b), (a, c), (b, c)} <= g.edges for a, b, c in combinations(range(1, g.k + 1), 3)
    )


def missed_by_leg_pair(s: SpiderSpec, drawing: Union[CyclicOrder, CoordinateDrawing]) -> dict[tuple[int, int], int]:
    """Non-crossing non-incident pairs keyed by the legs of their two edges (a <= b)."""
    crosses = _crosses(drawing)
    out: dict[tuple[int, int], int] = {}
    for e1, e2 in s.nonincident_pairs:
        if not crosses(e1, e2):
            key = tuple(sorted((e1.leg, e2.leg)))
            out[key] = out.get(key, 0) + 1
    return out
