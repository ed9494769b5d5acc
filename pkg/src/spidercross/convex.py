"""Convex drawings of spiders, described by the cyclic order of their vertices.

When the vertices sit in convex position, two non-incident edges cross
exactly when their endpoints alternate around the circle, so the whole
crossing pattern is a function of the cyclic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .geometry import CoordinateDrawing, RationalPoint, validate_good_drawing, ViolationKind
from .spider import (
    CENTER,
    EdgeRef,
    SpiderError,
    SpiderSpec,
    VertexLabel,
    are_incident,
    label_from_json,
    spider_from_json,
)

# realize(): perturbation scale and how many perturbations to try
PERTURB_DENOMINATOR = 10**9
MAX_RETRIES = 64


@dataclass(frozen=True)
class CyclicOrder:
    """Anticlockwise circular sequence of all vertices, rotated to start at (0,0)."""

    spider: SpiderSpec
    sequence: tuple[VertexLabel, ...]

    def __post_init__(self):
        seq = tuple(VertexLabel(*v) for v in self.sequence)
        if sorted(seq) != sorted(self.spider.vertices) or len(set(seq)) != len(seq):
            raise SpiderError("order must list every vertex of the spider exactly once")
        start = seq.index(CENTER)
        object.__setattr__(self, "sequence", seq[start:] + seq[:start])

    @cached_property
    def position(self) -> dict[VertexLabel, int]:
        return {v: t for t, v in enumerate(self.sequence)}

    @cached_property
    def indices(self) -> tuple[int, ...]:
        """The sequence as indices into ``spider.vertices``."""
        idx = self.spider.vertex_index
        return tuple(idx[v] for v in self.sequence)

    def reversed(self) -> CyclicOrder:
        return CyclicOrder(self.spider, self.sequence[::-1])

    def to_json(self) -> dict:
        return {"legs": list(self.spider.legs), "order": [list(v) for v in self.sequence]}

    def __len__(self) -> int:
        return len(self.sequence)


def order_from_json(obj: dict) -> CyclicOrder:
    s = spider_from_json(obj)
    if s.legs != tuple(obj["legs"]):
        raise SpiderError("order files must list legs in non-increasing order")
    seq = obj.get("order")
    if not isinstance(seq, list):
        raise SpiderError('order JSON needs an "order" array')
    return CyclicOrder(s, tuple(label_from_json(v) for v in seq))


def order_from_indices(s: SpiderSpec, indices: Iterable[int]) -> CyclicOrder:
    vs = s.vertices
    return CyclicOrder(s, tuple(vs[int(t)] for t in indices))


def algorithm_order(s: SpiderSpec) -> CyclicOrder:
    """The five-block placement V0 | V1 | V2 | V3 | V4 that misses few crossings."""
    s.require_long_legs()
    rest = [v for v in s.vertices if v != CENTER]
    odd = lambda x: x % 2 == 1  # noqa: E731
    v1 = sorted((v for v in rest if odd(v.i) and not odd(v.j)), key=lambda v: (-v.i, v.j))
    v2 = sorted((v for v in rest if not odd(v.i) and odd(v.j)), key=lambda v: (v.i, -v.j))
    v3 = sorted((v for v in rest if odd(v.i) and odd(v.j)), key=lambda v: (-v.i, v.j))
    v4 = sorted((v for v in rest if not odd(v.i) and not odd(v.j)), key=lambda v: (v.i, -v.j))
    seq = [CENTER, *v1, *v2, *v3, *v4]
    assert len(set(seq)) == s.n == len(seq)
    return CyclicOrder(s, tuple(seq))


def _alternate(a: int, b: int, c: int, d: int) -> bool:
    if a > b:
        a, b = b, a
    return (a < c < b) != (a < d < b)


def chords_cross(o: CyclicOrder, e1: EdgeRef, e2: EdgeRef) -> bool:
    if are_incident(e1, e2):
        return False
    pos = o.position
    return _alternate(pos[e1.a], pos[e1.b], pos[e2.a], pos[e2.b])


def crossing_pairs_convex(o: CyclicOrder) -> list[tuple[EdgeRef, EdgeRef]]:
    pos = o.position
    return [
        (e1, e2)
        for e1, e2 in o.spider.nonincident_pairs
        if _alternate(pos[e1.a], pos[e1.b], pos[e2.a], pos[e2.b])
    ]


def count_crossings_convex(o: CyclicOrder) -> int:
    return len(crossing_pairs_convex(o))


def missed_pairs(o: CyclicOrder) -> list[tuple[EdgeRef, EdgeRef]]:
    """Non-incident edge pairs that do not cross in ``o``."""
    pos = o.position
    return [
        (e1, e2)
        for e1, e2 in o.spider.nonincident_pairs
        if not _alternate(pos[e1.a], pos[e1.b], pos[e2.a], pos[e2.b])
    ]


def circle_point(u: Fraction) -> RationalPoint:
    """Rational point on the unit circle at angle 2*atan(u)."""
    d = 1 + u * u
    return RationalPoint((1 - u * u) / d, 2 * u / d)


def _parameters(n: int, retry: int) -> list[Fraction]:
    # strictly increasing, deliberately irregular so that symmetric
    # configurations (and hence concurrent chords) are rare
    base = [Fraction(2 * t - (n - 1), n) + Fraction(t * t, 7919 * n) for t in range(n)]
    if retry:
        base = [u + Fraction(t * t * retry, PERTURB_DENOMINATOR) for t, u in enumerate(base)]
    return base


def realize(o: CyclicOrder) -> CoordinateDrawing:
    """Exact coordinates on the unit circle, anticlockwise in sequence order.

    Points in convex position cannot create vertex-on-edge or overlap
    problems, so the only degeneracy is three chords through one point; the
    parameters are perturbed deterministically until none remains.
    """
    n = len(o)
    for retry in range(MAX_RETRIES):
        us = _parameters(n, retry)
        positions = {v: circle_point(u) for v, u in zip(o.sequence, us)}
        d = CoordinateDrawing(o.spider, positions)
        violations = validate_good_drawing(d)
        if not violations:
            return d
        unexpected = [v for v in violations if v.kind is not ViolationKind.THREE_EDGES_CONCURRENT]
        if unexpected:
            raise RuntimeError(f"internal error: convex placement produced {unexpected[0]}")
    raise RuntimeError(f"internal error: no good realization after {MAX_RETRIES} perturbations")


def rotations_and_reflections(o: CyclicOrder) -> list[Sequence[VertexLabel]]:
    """Every linear sequence describing the same convex drawing up to symmetry."""
    seq = list(o.sequence)
    out = []
    for s in (seq, seq[::-1]):
        out.extend(s[r:] + s[:r] for r in range(len(s)))
    return out
