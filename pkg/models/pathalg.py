"""Quadratic quiver algebras and matrix Hilbert series."""

from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Tuple

from .quiver import QuiverGraph
from .relations import PathVec


@dataclass
class QuadraticAlgebra:
    """Path algebra of a finite quiver modulo quadratic relations."""
    quiver: QuiverGraph
    relations: List[PathVec] = field(default_factory=list)
    name: str = ""

    @property
    def relation_count(self) -> int:
        return len(self.relations)


@dataclass
class HilbertMatrix:
    """entries[(x, y)][d] = dim of the degree-d paths from y to x modulo relations."""
    vertices: Tuple[Hashable, ...]
    entries: Dict[Tuple[Hashable, Hashable], List[int]]
    max_degree: int

    def entry(self, target, source) -> List[int]:
        return self.entries[(target, source)]

    def degree(self, d: int) -> List[List[int]]:
        return [[self.entries[(x, y)][d] for y in self.vertices] for x in self.vertices]

    def total(self, d: int) -> int:
        return sum(c[d] for c in self.entries.values())

    def to_dict(self) -> dict:
        names = [v.to_list() if hasattr(v, "to_list") else v for v in self.vertices]
        return {
            "vertices": names,
            "max_degree": self.max_degree,
            "entries": [[self.entries[(x, y)] for y in self.vertices] for x in self.vertices],
        }
