"""Spider graphs: subdivisions of the star K_{1,k}.

Vertices are labelled ``(i, j)``: leg ``i`` (1-based, legs sorted by
non-increasing length) at distance ``j`` from the centre ``(0, 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import NamedTuple, Sequence


class SpiderError(ValueError):
    """Base class for invalid spider input."""


class TooFewLegs(SpiderError):
    pass


class NonPositiveLeg(SpiderError):
    pass


class LegTooShort(SpiderError):
    """Raised by operations that need every leg to have length >= 2."""


class VertexLabel(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


CENTER = VertexLabel(0, 0)


class EdgeRef(NamedTuple):
    """An edge ``a - b`` with ``a`` the endpoint closer to the centre."""

    a: VertexLabel
    b: VertexLabel

    @property
    def leg(self) -> int:
        return self.b.i

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


def edge(u: Sequence[int], v: Sequence[int]) -> EdgeRef:
    """Build an edge in canonical form from two ``(i, j)`` pairs."""
    u, v = VertexLabel(*u), VertexLabel(*v)
    if (u.j, u.i) > (v.j, v.i):
        u, v = v, u
    return EdgeRef(u, v)


@dataclass(frozen=True)
class SpiderSpec:
    """A spider with legs stored in non-increasing order.

    ``perm[t]`` is the 0-based position in the caller's original list of
    the leg that became leg ``t + 1``.
    """

    legs: tuple[int, ...]
    perm: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.legs) < 3:
            raise TooFewLegs(f"a spider needs at least 3 legs, got {len(self.legs)}")
        if any(not isinstance(x, int) or x < 1 for x in self.legs):
            raise NonPositiveLeg(f"leg lengths must be positive integers, got {list(self.legs)}")
        if any(a < b for a, b in zip(self.legs, self.legs[1:])):
            raise SpiderError("legs must be non-increasing; use make_spider() to sort")
        if not self.perm:
            object.__setattr__(self, "perm", tuple(range(len(self.legs))))

    @property
    def k(self) -> int:
        return len(self.legs)

    @property
    def m(self) -> int:
        return sum(self.legs)

    @property
    def n(self) -> int:
        return self.m + 1

    def leg_length(self, i: int) -> int:
        return self.legs[i - 1]

    def has_vertex(self, v: VertexLabel) -> bool:
        if v.i == 0:
            return v.j == 0
        return 1 <= v.i <= self.k and 1 <= v.j <= self.legs[v.i - 1]

    def has_edge(self, e: EdgeRef) -> bool:
        a, b = e
        if not (self.has_vertex(a) and self.has_vertex(b)) or b.j != a.j + 1:
            return False
        return a == CENTER or a.i == b.i

    def require_long_legs(self) -> None:
        if self.legs[-1] < 2:
            raise LegTooShort(f"every leg must have length >= 2, got {list(self.legs)}")

    @cached_property
    def vertices(self) -> tuple[VertexLabel, ...]:
        return tuple(enumerate_vertices(self))

    @cached_property
    def edges(self) -> tuple[EdgeRef, ...]:
        return tuple(enumerate_edges(self))

    @cached_property
    def vertex_index(self) -> dict[VertexLabel, int]:
        return {v: t for t, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[EdgeRef, int]:
        return {e: t for t, e in enumerate(self.edges)}

    @cached_property
    def nonincident_pairs(self) -> tuple[tuple[EdgeRef, EdgeRef], ...]:
        """All unordered non-incident edge pairs, in canonical edge order."""
        es = self.edges
        return tuple(
            (es[p], es[q])
            for p in range(len(es))
            for q in range(p + 1, len(es))
            if not are_incident(es[p], es[q])
        )

    def to_json(self) -> dict:
        return {"legs": list(self.legs)}


def make_spider(legs: Sequence[int]) -> SpiderSpec:
    """Canonicalize ``legs`` into a SpiderSpec, sorting longest first."""
    legs = list(legs)
    if len(legs) < 3:
        raise TooFewLegs(f"a spider needs at least 3 legs, got {len(legs)}")
    for x in legs:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise NonPositiveLeg(f"leg lengths must be positive integers, got {legs}")
    order = sorted(range(len(legs)), key=lambda t: -legs[t])
    return SpiderSpec(tuple(legs[t] for t in order), tuple(order))


def enumerate_vertices(s: SpiderSpec) -> list[VertexLabel]:
    out = [CENTER]
    for i, length in enumerate(s.legs, start=1):
        out.extend(VertexLabel(i, j) for j in range(1, length + 1))
    return out


def enumerate_edges(s: SpiderSpec) -> list[EdgeRef]:
    out = []
    for i, length in enumerate(s.legs, start=1):
        out.append(EdgeRef(CENTER, VertexLabel(i, 1)))
        out.extend(EdgeRef(VertexLabel(i, j), VertexLabel(i, j + 1)) for j in range(1, length))
    return out


def are_incident(e1: EdgeRef, e2: EdgeRef) -> bool:
    return bool({e1.a, e1.b} & {e2.a, e2.b})


def thrackle_bound(s: SpiderSpec) -> int:
    # centre has degree k, every internal leg vertex degree 2, leaves degree 1
    degree_two = sum(length - 1 for length in s.legs)
    return comb(s.m, 2) - comb(s.k, 2) - degree_two


def spider_from_json(obj: dict) -> SpiderSpec:
    try:
        legs = obj["legs"]
    except (KeyError, TypeError):
        raise SpiderError('spider JSON must be an object with a "legs" array') from None
    if not isinstance(legs, list):
        raise SpiderError('"legs" must be an array of integers')
    return make_spider(legs)


def label_from_json(obj) -> VertexLabel:
    if not (isinstance(obj, (list, tuple)) and len(obj) == 2 and all(isinstance(x, int) for x in obj)):
        raise SpiderError(f"vertex label must be a two-element integer array, got {obj!r}")
    return VertexLabel(*obj)


def edge_to_json(e: EdgeRef) -> list:
    return [list(e.a), list(e.b)]
