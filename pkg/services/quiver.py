"""The quiver Delta_Psi: order, distance, arrows, windows and component signatures."""

import logging
from collections import deque
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from config.settings import INTERVAL_VERTEX_CAP
from models import (
    INFINITY, Arrow, Extended, LieQuiverError, LieQuiverErrorType, Path, PathList,
    PsiSet, QuiverGraph, Root, Weight,
)
from .rootdata import is_regular, root_system

logger = logging.getLogger(__name__)

SimpleVec = Tuple[int, ...]


def _weight_key(weight: Weight) -> Tuple[int, ...]:
    return weight.coords


class QuiverService:
    """Builds finite pieces of Delta_Psi for one extremal set Psi."""

    def __init__(self, psi: PsiSet, vertex_cap: int = INTERVAL_VERTEX_CAP):
        """Initialize the quiver service.

        Args:
            psi: Extremal set of positive roots
            vertex_cap: Largest vertex set materialized by window operations
        """
        self.psi = psi
        self.system = root_system(psi.lie_type)
        self.vertex_cap = vertex_cap
        self._eps = {beta: self.system.eps(beta.simple) for beta in psi}
        self._parts: Dict[SimpleVec, Optional[int]] = {}

    # Order and distance

    def _difference(self, lam: Weight, mu: Weight) -> Optional[SimpleVec]:
        delta = self.system.integral_simple_coords(mu - lam)
        if delta is None or any(c < 0 for c in delta):
            return None
        return delta

    def _rests(self, delta: SimpleVec) -> Iterator[SimpleVec]:
        for beta in self.psi:
            rest = tuple(d - b for d, b in zip(delta, beta.simple))
            if all(c >= 0 for c in rest):
                yield rest

    def _min_parts(self, delta: SimpleVec) -> Optional[int]:
        """Number of Psi-parts in delta, or None when delta has no decomposition.

        Psi is extremal, so a functional equal on all of Psi gives every
        decomposition the same length and the first one found is minimal.
        """
        if not any(delta):
            return 0
        if delta in self._parts:
            return self._parts[delta]
        path = [delta]
        choices = [self._rests(delta)]
        while choices:
            rest = next(choices[-1], None)
            if rest is None:
                self._parts[path.pop()] = None
                choices.pop()
                continue
            known = 0 if not any(rest) else self._parts.get(rest, -1)
            if known is None:
                continue
            if known == -1:
                path.append(rest)
                choices.append(self._rests(rest))
                continue
            total = len(path) + known
            for depth, vertex in enumerate(path):
                self._parts[vertex] = total - depth
            return total
        return None

    def leq_psi(self, lam: Weight, mu: Weight) -> bool:
        """True when mu - lam is a nonnegative integer combination of Psi."""
        return self.d_psi(lam, mu) is not None

    def d_psi(self, lam: Weight, mu: Weight) -> Optional[int]:
        """Minimum number of Psi-parts in mu - lam, or None when lam is not below mu."""
        delta = self._difference(lam, mu)
        if delta is None:
            return None
        return self._min_parts(delta)

    # Arrows

    def has_arrow(self, lam: Weight, beta: Root) -> bool:
        """True when lam <- lam + beta is an arrow of Delta_Psi."""
        if beta not in self.psi:
            raise LieQuiverError(
                LieQuiverErrorType.INVALID_INPUT,
                f"{beta} is not in {self.psi}"
            )
        return lam.is_dominant() and (lam - self._eps[beta]).is_dominant()

    def arrows_into(self, lam: Weight) -> List[Root]:
        """Roots beta with an arrow lam <- lam + beta."""
        return [beta for beta in self.psi if self.has_arrow(lam, beta)]

    def arrows_out_of(self, lam: Weight) -> List[Root]:
        """Roots beta with an arrow lam - beta <- lam."""
        out = []
        for beta in self.psi:
            below = lam - beta.weight
            if below.is_dominant() and self.has_arrow(below, beta):
                out.append(beta)
        return out

    def build_delta(self, vertices: Iterable[Weight], check_closed: bool = True) -> QuiverGraph:
        """Full subquiver of Delta_Psi on a finite interval-closed vertex set.

        Args:
            vertices: Finite set of dominant weights
            check_closed: Verify interval-closedness before building

        Returns:
            QuiverGraph with arrows labelled by their Psi roots

        Raises:
            LieQuiverError: If the set is not interval-closed
        """
        ordered = sorted(set(vertices), key=_weight_key)
        for lam in ordered:
            if not lam.is_dominant():
                raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{lam} is not dominant")
        if check_closed:
            self._check_interval_closed(ordered)
        present = set(ordered)
        arrows = []
        for lam in ordered:
            for beta in self.psi:
                top = lam + beta.weight
                if top in present and self.has_arrow(lam, beta):
                    arrows.append(Arrow(lam, top, beta))
        logger.debug("Built Delta on %d vertices with %d arrows", len(ordered), len(arrows))
        return QuiverGraph(tuple(ordered), tuple(arrows))

    def _check_interval_closed(self, ordered: Sequence[Weight]):
        present = set(ordered)
        minimal = [a for a in ordered if not any(b != a and self.leq_psi(b, a) for b in ordered)]
        maximal = [a for a in ordered if not any(b != a and self.leq_psi(a, b) for b in ordered)]
        for low in minimal:
            for high in maximal:
                if not self.leq_psi(low, high):
                    continue
                for mid in self.interval(low, high):
                    if mid not in present:
                        raise LieQuiverError(
                            LieQuiverErrorType.NOT_INTERVAL_CLOSED,
                            f"{low} <= {mid} <= {high} but {mid} is missing"
                        )

    # Windows

    def _guard(self, size: int, what: str):
        if size > self.vertex_cap:
            raise LieQuiverError(
                LieQuiverErrorType.CAP_EXCEEDED,
                f"{what} exceeds {self.vertex_cap} vertices"
            )

    def _nonneg_simple(self, weight: Weight) -> bool:
        return all(c >= 0 for c in self.system.simple_coords(weight))

    def interval(self, mu: Weight, nu: Weight) -> Set[Weight]:
        """The interval [mu, nu] of dominant weights; empty when mu is not below nu."""
        if not self.leq_psi(mu, nu):
            return set()
        return self._descend(nu, lambda y: self._nonneg_simple(y - mu), lambda y: self.leq_psi(mu, y))

    def down_set(self, lam: Weight) -> Set[Weight]:
        """All dominant weights below lam."""
        return self._descend(lam, self._nonneg_simple, lambda y: True)

    def _descend(self, start: Weight, keep_going, accept) -> Set[Weight]:
        found = set()
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            if x.is_dominant() and accept(x):
                found.add(x)
                self._guard(len(found), f"Set below {start}")
            for beta in self.psi:
                y = x - beta.weight
                if y in seen or not keep_going(y):
                    continue
                seen.add(y)
                stack.append(y)
        return found

    def up_set(self, lam: Weight, depth: int) -> Set[Weight]:
        """Dominant weights lam + (at most ``depth`` Psi-parts)."""
        layer = {lam}
        found = {lam} if lam.is_dominant() else set()
        for _ in range(depth):
            layer = {x + beta.weight for x in layer for beta in self.psi}
            found.update(x for x in layer if x.is_dominant())
            self._guard(len(found), f"Set above {lam}")
        return found

    def component(self, lam: Weight, window: Weight) -> Set[Weight]:
        """Connected component of lam in Delta_Psi truncated to coords <= window."""

        def inside(x: Weight) -> bool:
            return all(a <= b for a, b in zip(x.coords, window.coords))

        if not inside(lam):
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{lam} lies outside window {window}")
        seen = {lam}
        queue = deque([lam])
        while queue:
            x = queue.popleft()
            neighbours = [x + beta.weight for beta in self.arrows_into(x)]
            neighbours += [x - beta.weight for beta in self.arrows_out_of(x)]
            for y in neighbours:
                if y not in seen and inside(y):
                    seen.add(y)
                    self._guard(len(seen), f"Component of {lam}")
                    queue.append(y)
        return seen

    # Length-two paths

    def _pairs(self, eta: SimpleVec) -> List[Tuple[Root, Root]]:
        pairs = []
        for first in self.psi:
            rest = tuple(e - b for e, b in zip(eta, first.simple))
            second = self.psi.find(rest)
            if second is not None:
                pairs.append((first, second))
        return pairs

    def sums(self) -> List[SimpleVec]:
        """All eta in Psi + Psi, in sorted order."""
        return sorted({tuple(a + b for a, b in zip(x.simple, y.simple)) for x in self.psi for y in self.psi})

    def m_count(self, eta: Sequence[int]) -> int:
        """Number of ordered pairs (beta, beta') in Psi x Psi with beta + beta' = eta."""
        eta = tuple(eta)
        pairs = self._pairs(eta)
        if not pairs:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{eta} is not in Psi + Psi")
        return len(pairs)

    def paths2(self, lam: Weight, eta: Sequence[int]) -> PathList:
        """Length-two paths lam <- lam + beta <- lam + eta, sorted by beta.

        Raises:
            LieQuiverError: If eta is not in Psi + Psi
        """
        eta = tuple(eta)
        pairs = self._pairs(eta)
        if not pairs:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{eta} is not in Psi + Psi")
        paths = []
        for bottom, top in pairs:
            if not lam.is_dominant() or not self.has_arrow(lam, bottom):
                continue
            middle = lam + bottom.weight
            if not self.has_arrow(middle, top):
                continue
            paths.append(Path((lam, middle, middle + top.weight), (bottom, top)))
        paths.sort(key=lambda p: p.labels[0].sort_key)
        return paths

    def t_count(self, lam: Weight, eta: Sequence[int]) -> int:
        return len(self.paths2(lam, eta))

    # Component signatures

    def a_shape(self) -> Tuple[List[int], List[int]]:
        """Index lists (i_p) and (j_q) when Psi = {alpha_{i_p,j_q}} with the spacing rule.

        Raises:
            LieQuiverError: If Psi does not have this product shape
        """
        if self.psi.lie_type.family != "A":
            raise LieQuiverError(LieQuiverErrorType.UNSUPPORTED_CASE, "Product-shaped sets are type A")
        starts = sorted({r.i for r in self.psi})
        ends = sorted({r.j for r in self.psi})
        expected = {("a", i, j) for i in starts for j in ends}
        if {r.label for r in self.psi} != expected or starts[-1] >= ends[0]:
            raise LieQuiverError(
                LieQuiverErrorType.UNSUPPORTED_CASE,
                f"{self.psi} is not of the form {{alpha_(i_p,j_q)}} with i_r < j_1"
            )
        if not is_regular(self.psi):
            raise LieQuiverError(LieQuiverErrorType.NOT_REGULAR, f"{self.psi} is not regular")
        return starts, ends

    def component_signature_a(self, lam: Weight) -> Tuple[Tuple[Extended, ...], Tuple[Extended, ...], int]:
        """Box sides (m, n) and offset a of the lattice quiver isomorphic to the component of lam."""
        starts, ends = self.a_shape()
        m = tuple(lam.h(i - 1) + lam.h(i) for i in starts)
        n = tuple(lam.h(j) + lam.h(j + 1) for j in ends)
        a = sum(lam.h(i) for i in starts) - sum(lam.h(j) for j in ends)
        return m, n, a

    def signature_coords_a(self, mu: Weight) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Lattice coordinates (mu(h_{i_p}), mu(h_{j_q})) of a component vertex."""
        starts, ends = self.a_shape()
        return tuple(mu.h(i) for i in starts), tuple(mu.h(j) for j in ends)

    def c_indices(self) -> List[int]:
        if self.psi.lie_type.family != "C":
            raise LieQuiverError(LieQuiverErrorType.UNSUPPORTED_CASE, "Psi(i_1,...,i_k) is a type C set")
        indices = sorted({r.i for r in self.psi} | {r.j for r in self.psi})
        if not is_regular(self.psi):
            raise LieQuiverError(LieQuiverErrorType.NOT_REGULAR, f"{self.psi} is not regular")
        return indices

    def component_signature_c(self, lam: Weight) -> Tuple[Tuple[Extended, ...], int]:
        """Box sides m and parity a with the component of lam isomorphic to Xi_a(m).

        Raises:
            LieQuiverError: If lam is an isolated vertex
        """
        indices = self.c_indices()
        if not self.arrows_into(lam) and not self.arrows_out_of(lam):
            raise LieQuiverError(
                LieQuiverErrorType.UNSUPPORTED_CASE,
                f"{lam} is an isolated vertex of Delta_Psi"
            )
        m = tuple(lam.h(i - 1) + lam.h(i) for i in indices)
        a = sum(lam.h(i) for i in indices) % 2
        return m, a

    def signature_coords_c(self, mu: Weight) -> Tuple[int, ...]:
        return tuple(mu.h(i) for i in self.c_indices())


def sinks(quiver: QuiverGraph) -> List:
    return quiver.sinks()


def sources(quiver: QuiverGraph) -> List:
    return quiver.sources()


def components(quiver: QuiverGraph) -> List[List]:
    return quiver.components()


__all__ = ["QuiverService", "sinks", "sources", "components", "INFINITY"]
