"""Lattice quiver families Gamma(t), Xi_a(m), Gamma_a(m, n) and their classification."""

import itertools
import logging
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from networkx.algorithms.isomorphism import DiGraphMatcher

from config.settings import ISOMORPHISM_VERTEX_CAP
from models import INFINITY, Arrow, LatticeBox, LieQuiverError, LieQuiverErrorType, QuiverGraph

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


def gamma_t(t: int) -> QuiverGraph:
    """The quiver with sink 0, source t+1 and t middle vertices."""
    if t < 1:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"Gamma(t) needs t >= 1, got {t}")
    vertices = tuple(range(t + 2))
    arrows = [Arrow(r, t + 1) for r in range(1, t + 1)]
    arrows += [Arrow(0, r) for r in range(1, t + 1)]
    return QuiverGraph(vertices, tuple(arrows))


def _box_points(sides: Sequence[int]) -> List[Point]:
    return [tuple(p) for p in itertools.product(*(range(s + 1) for s in sides))]


def _finite_sides(m: Sequence, window: Optional[Sequence[int]]) -> Tuple[int, ...]:
    return LatticeBox(tuple(m)).clipped(window).m


def xi(m: Sequence, window: Optional[Sequence[int]] = None) -> QuiverGraph:
    """Xi(m): the box [0, m] with arrows x <- x + 2e_j and x <- x + e_j + e_k.

    Args:
        m: Box sides, ``INFINITY`` allowed together with ``window``
        window: Bounds replacing infinite sides

    Returns:
        QuiverGraph on tuples of lattice coordinates
    """
    sides = _finite_sides(m, window)
    points = _box_points(sides)
    arrows = []
    r = len(sides)
    for x in points:
        for j in range(r):
            if x[j] < sides[j] - 1:
                arrows.append(Arrow(x, x[:j] + (x[j] + 2,) + x[j + 1:]))
            for k in range(j + 1, r):
                if x[j] < sides[j] and x[k] < sides[k]:
                    y = list(x)
                    y[j] += 1
                    y[k] += 1
                    arrows.append(Arrow(x, tuple(y)))
    return QuiverGraph(tuple(points), tuple(arrows))


def xi_a(m: Sequence, a: int, window: Optional[Sequence[int]] = None) -> QuiverGraph:
    """Full subquiver of Xi(m) on the points with |x| = a mod 2."""
    if a not in (0, 1):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"Parity must be 0 or 1, got {a}")
    full = xi(m, window)
    return full.subquiver([x for x in full.vertices if sum(x) % 2 == a])


def xi_count(m: Sequence[int], a: int) -> int:
    """Closed-form number of vertices of Xi_a(m)."""
    box = LatticeBox(tuple(m))
    if not box.is_finite:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Vertex count needs finite sides")
    size = box.lattice_size
    return (size + 1) // 2 if a == 0 else size // 2


def gamma_amn(a: int, m: Sequence, n: Sequence, window: Optional[Sequence[int]] = None) -> QuiverGraph:
    """Gamma_a(m, n): points (x, y) of the box with |x| = |y| + a.

    Arrows are (x, y) <- (x + e_i, y + e_j) whenever both stay inside the box.

    Raises:
        LieQuiverError: If a lies outside -|n|..|m|
    """
    box = LatticeBox(tuple(m), tuple(n), a).clipped(window)
    if not -sum(box.n) <= a <= sum(box.m):
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"Offset {a} outside {-sum(box.n)}..{sum(box.m)}"
        )
    xs = _box_points(box.m)
    ys = _box_points(box.n)
    vertices = [(x, y) for x in xs for y in ys if sum(x) == sum(y) + a]
    arrows = []
    for x, y in vertices:
        for i in range(len(box.m)):
            if x[i] >= box.m[i]:
                continue
            for j in range(len(box.n)):
                if y[j] < box.n[j]:
                    source = (x[:i] + (x[i] + 1,) + x[i + 1:], y[:j] + (y[j] + 1,) + y[j + 1:])
                    arrows.append(Arrow((x, y), source))
    return QuiverGraph(tuple(vertices), tuple(arrows))


def gamma_amn_opposite(m: Sequence[int], n: Sequence[int], a: int) -> Tuple[int, Dict]:
    """Offset a' and vertex map (x, y) -> (m - x, n - y) with Gamma_a ~ Gamma_a'^op."""
    quiver = gamma_amn(a, m, n)
    partner = sum(m) - sum(n) - a
    mapping = {
        (x, y): (tuple(s - c for s, c in zip(m, x)), tuple(s - c for s, c in zip(n, y)))
        for x, y in quiver.vertices
    }
    return partner, mapping


def quiver_isomorphic(first: QuiverGraph, second: QuiverGraph,
                      vertex_cap: int = ISOMORPHISM_VERTEX_CAP) -> Tuple[bool, Optional[Dict[Hashable, Hashable]]]:
    """Decide whether two quivers are isomorphic.

    Returns:
        (isomorphic, mapping from first's vertices to second's)

    Raises:
        LieQuiverError: If either quiver exceeds the vertex cap
    """
    for quiver in (first, second):
        if len(quiver.vertices) > vertex_cap:
            raise LieQuiverError(
                LieQuiverErrorType.CAP_EXCEEDED,
                f"Isomorphism test limited to {vertex_cap} vertices, got {len(quiver.vertices)}"
            )
    if len(first.vertices) != len(second.vertices) or len(first.arrows) != len(second.arrows):
        return False, None
    matcher = DiGraphMatcher(first.to_networkx(), second.to_networkx())
    if not matcher.is_isomorphic():
        return False, None
    return True, dict(matcher.mapping)


def _normalize_sides(m: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted((s for s in m if s != 0), reverse=True))


def xi_canonical_class(m: Sequence[int], a: int) -> Tuple:
    """Key with equal values exactly for isomorphic Xi_a(m).

    Rank one boxes are lines with floor((m - a) / 2) arrows; Xi_0((1,1)) joins
    that series, Xi_1((1,1)) is two isolated points, and every other box with
    two or more nonzero sides is its own class.
    """
    sides = _normalize_sides(m)
    if any(s == INFINITY for s in sides):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Classification needs finite sides")
    if not sides:
        return ("line", 0) if a == 0 else ("empty",)
    if len(sides) == 1:
        return ("line", (sides[0] - a) // 2)
    if sides == (1, 1):
        return ("line", 1) if a == 0 else ("discrete", 2)
    return ("xi", sides, a)


def xi_op_isomorphic(m: Sequence[int]) -> bool:
    """Whether Xi_0(m) is isomorphic to Xi_1(m)^op, for boxes with two or more sides."""
    sides = _normalize_sides(m)
    if len(sides) < 2:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "The opposite rule needs at least two nonzero sides")
    return sum(sides) % 2 == 1
