"""Quiver data models."""

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .errors import LieQuiverError, LieQuiverErrorType

Vertex = Hashable


class Arrow(NamedTuple):
    """An arrow target <- source with an optional label."""
    target: Vertex
    source: Vertex
    label: Optional[object] = None


@dataclass(frozen=True)
class Path:
    """A path x_0 <- x_1 <- ... <- x_k listed from its target."""
    vertices: Tuple[Vertex, ...]
    labels: Tuple[object, ...] = ()

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def target(self) -> Vertex:
        return self.vertices[0]

    @property
    def source(self) -> Vertex:
        return self.vertices[-1]


PathList = List[Path]


@dataclass(frozen=True)
class QuiverGraph:
    """Finite quiver without loops or multiple arrows."""
    vertices: Tuple[Vertex, ...]
    arrows: Tuple[Arrow, ...]
    _into: Dict[Vertex, Tuple[Arrow, ...]] = field(default=None, repr=False, compare=False)
    _out_of: Dict[Vertex, Tuple[Arrow, ...]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        known = set(vertices)
        if len(known) != len(vertices):
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Duplicate vertices in quiver")
        seen = set()
        into = defaultdict(list)
        out_of = defaultdict(list)
        for arrow in self.arrows:
            if arrow.target not in known or arrow.source not in known:
                raise LieQuiverError(
                    LieQuiverErrorType.INVALID_INPUT,
                    f"Arrow {arrow.target} <- {arrow.source} leaves the vertex set"
                )
            if arrow.target == arrow.source:
                raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"Loop at {arrow.target}")
            if (arrow.target, arrow.source) in seen:
                raise LieQuiverError(
                    LieQuiverErrorType.INVALID_INPUT,
                    f"Multiple arrows {arrow.target} <- {arrow.source}"
                )
            seen.add((arrow.target, arrow.source))
            into[arrow.target].append(arrow)
            out_of[arrow.source].append(arrow)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "_into", {v: tuple(into[v]) for v in vertices})
        object.__setattr__(self, "_out_of", {v: tuple(out_of[v]) for v in vertices})

    @classmethod
    def from_pairs(cls, vertices: Sequence[Vertex], pairs: Sequence[Tuple[Vertex, Vertex]]) -> "QuiverGraph":
        """Build from (target, source) pairs."""
        return cls(tuple(vertices), tuple(Arrow(t, s) for t, s in pairs))

    def arrows_into(self, vertex: Vertex) -> Tuple[Arrow, ...]:
        return self._into[vertex]

    def arrows_from(self, vertex: Vertex) -> Tuple[Arrow, ...]:
        return self._out_of[vertex]

    def has_arrow(self, target: Vertex, source: Vertex) -> bool:
        return any(a.source == source for a in self._into.get(target, ()))

    def paths_from(self, source: Vertex, length: int) -> PathList:
        """All paths of the given length starting at source."""
        partial = [[source]]
        labels = [[]]
        for _ in range(length):
            next_partial, next_labels = [], []
            for walk, names in zip(partial, labels):
                for arrow in self._out_of[walk[-1]]:
                    next_partial.append(walk + [arrow.target])
                    next_labels.append(names + [arrow.label])
            partial, labels = next_partial, next_labels
        return [Path(tuple(reversed(walk)), tuple(reversed(names))) for walk, names in zip(partial, labels)]

    def paths(self, target: Vertex, source: Vertex, length: int) -> PathList:
        """All paths of the given length from source to target."""
        return [p for p in self.paths_from(source, length) if p.target == target]

    def sinks(self) -> List[Vertex]:
        """Vertices with no arrow leaving them."""
        return [v for v in self.vertices if not self._out_of[v]]

    def sources(self) -> List[Vertex]:
        """Vertices with no arrow entering them."""
        return [v for v in self.vertices if not self._into[v]]

    def to_networkx(self) -> nx.DiGraph:
        """Directed graph with edges source -> target."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((a.source, a.target) for a in self.arrows)
        return graph

    def components(self) -> List[List[Vertex]]:
        """Connected components of the underlying graph, in vertex order."""
        order = {v: k for k, v in enumerate(self.vertices)}
        parts = [sorted(c, key=order.__getitem__) for c in nx.weakly_connected_components(self.to_networkx())]
        return sorted(parts, key=lambda c: order[c[0]])

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and len(self.components()) == 1

    def subquiver(self, vertices: Sequence[Vertex]) -> "QuiverGraph":
        """Full subquiver on the given vertices."""
        keep = set(vertices)
        ordered = tuple(v for v in self.vertices if v in keep)
        return QuiverGraph(ordered, tuple(a for a in self.arrows if a.target in keep and a.source in keep))

    def opposite(self) -> "QuiverGraph":
        return QuiverGraph(self.vertices, tuple(Arrow(a.source, a.target, a.label) for a in self.arrows))

    def to_dict(self) -> dict:
        index = {v: k for k, v in enumerate(self.vertices)}
        return {
            "vertices": [v.to_list() if hasattr(v, "to_list") else v for v in self.vertices],
            "arrows": [[index[a.target], index[a.source]] for a in self.arrows],
        }
