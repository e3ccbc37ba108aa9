"""Relation data: path vectors, relation spaces and tensor vectors."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .lie import Root, Weight
from .quiver import Path

Label = Tuple[str, int, int]


def _fraction_text(c: Fraction) -> List[int]:
    return [c.numerator, c.denominator]


@dataclass(frozen=True)
class PathVec:
    """Rational combination of length-two paths sharing both endpoints."""
    paths: Tuple[Path, ...]
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def target(self):
        return self.paths[0].target

    @property
    def source(self):
        return self.paths[0].source

    def support(self) -> List[Path]:
        return [p for p, c in zip(self.paths, self.coeffs) if c != 0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def dot(self, other: "PathVec") -> Fraction:
        lookup = dict(zip(other.paths, other.coeffs))
        return sum((c * lookup.get(p, 0) for p, c in zip(self.paths, self.coeffs)), Fraction(0))

    def scale(self, factor) -> "PathVec":
        return PathVec(self.paths, tuple(c * factor for c in self.coeffs))

    def coefficient(self, bottom: Label) -> Fraction:
        """Coefficient of the path whose first step is labelled ``bottom``."""
        for p, c in zip(self.paths, self.coeffs):
            if p.labels[0].label == tuple(bottom):
                return c
        return Fraction(0)


@dataclass
class RelationSpace:
    """The space of relations between lam and lam + eta in path coordinates."""
    lam: Weight
    eta: Tuple[int, ...]
    paths: List[Path]
    basis: List[PathVec] = field(default_factory=list)
    generic: Optional[bool] = None
    case: str = ""

    @property
    def t(self) -> int:
        return len(self.paths)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def matrix(self) -> List[List[Fraction]]:
        return [list(v.coeffs) for v in self.basis]

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam.to_list(),
            "eta": list(self.eta),
            "paths": [[p.labels[0].kind, p.labels[0].i, p.labels[0].j] for p in self.paths],
            "relations": [[_fraction_text(c) for c in v.coeffs] for v in self.basis],
            "generic": self.generic,
            "case": self.case,
        }


@dataclass
class TensorVec:
    """Rational vector over e_gamma (x) e_gamma' keyed by root label pairs."""
    terms: Dict[Tuple[Label, Label], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: Fraction(c) for k, c in self.terms.items() if c != 0}

    def add_term(self, first: Root, second: Root, coeff):
        key = (first.label, second.label)
        total = self.terms.get(key, 0) + coeff
        if total == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = Fraction(total)

    def coefficient(self, first: Label, second: Label) -> Fraction:
        return self.terms.get((tuple(first), tuple(second)), Fraction(0))

    def symmetrized(self) -> Dict[Tuple[Label, Label], Fraction]:
        """Image in the symmetric square, keyed by the sorted label pair."""
        out: Dict[Tuple[Label, Label], Fraction] = {}
        for (a, b), c in self.terms.items():
            key = (a, b) if a <= b else (b, a)
            out[key] = out.get(key, 0) + c
        return {k: v for k, v in out.items() if v != 0}

    def is_antisymmetric(self) -> bool:
        return not self.symmetrized()

    def __add__(self, other: "TensorVec") -> "TensorVec":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorVec(out)

    def scale(self, factor) -> "TensorVec":
        return TensorVec({k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TensorVec) and self.terms == other.terms
