"""Lie-theoretic value types: Lie types, weights, roots and root sets."""

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple, Union

from .errors import LieQuiverError, LieQuiverErrorType

INFINITY = math.inf

Extended = Union[int, float]

FAMILIES = ("A", "C")


@dataclass(frozen=True)
class LieType:
    """A simple Lie algebra of type A_l or C_l."""
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise LieQuiverError(
                LieQuiverErrorType.INVALID_INPUT,
                f"Unsupported family '{self.family}', expected one of {', '.join(FAMILIES)}"
            )
        if not isinstance(self.rank, int) or self.rank < 1:
            raise LieQuiverError(
                LieQuiverErrorType.INVALID_INPUT,
                f"Rank must be a positive integer, got {self.rank!r}"
            )

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse a label such as ``"A3"`` or ``"C2"``."""
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise LieQuiverError(
                LieQuiverErrorType.INVALID_INPUT,
                f"Cannot parse Lie type '{text}'"
            )
        return cls(text[0], int(text[1:]))

    @property
    def root_kind(self) -> str:
        """Kind letter of the roots that make up extremal sets."""
        return "a" if self.family == "A" else "b"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates, entry i = lambda(h_i)."""
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        """The fundamental weight varpi_i; varpi_0 and varpi_{l+1} are zero."""
        return cls(tuple(1 if t == i else 0 for t in range(1, rank + 1)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def h(self, i: int) -> Extended:
        """Return lambda(h_i), with lambda(h_i) = +inf outside 1..l."""
        if 1 <= i <= self.rank:
            return self.coords[i - 1]
        return INFINITY

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def to_list(self) -> list:
        return list(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Root:
    """A positive root alpha_{i,j} (kind "a") or beta_{i,j} (kind "b")."""
    kind: str
    i: int
    j: int
    weight: Weight
    simple: Tuple[int, ...]

    @property
    def label(self) -> Tuple[str, int, int]:
        return (self.kind, self.i, self.j)

    @property
    def sort_key(self) -> Tuple[str, int, int]:
        return self.label

    @property
    def height(self) -> int:
        return sum(self.simple)

    def dominates(self, other: "Root") -> bool:
        """True when self - other is a nonnegative sum of simple roots."""
        return all(a >= b for a, b in zip(self.simple, other.simple))

    def __str__(self) -> str:
        return f"{self.kind}({self.i},{self.j})"


@dataclass(frozen=True)
class PsiSet:
    """An ordered set of positive roots of one Lie type."""
    lie_type: LieType
    roots: Tuple[Root, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(self.roots), key=lambda r: r.sort_key))
        if not ordered:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Root set cannot be empty")
        object.__setattr__(self, "roots", ordered)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, root: object) -> bool:
        return root in self.roots

    def find(self, simple: Tuple[int, ...]) -> Optional[Root]:
        """Return the member with the given simple-root coordinates, if any."""
        for root in self.roots:
            if root.simple == tuple(simple):
                return root
        return None

    def has_label(self, kind: str, i: int, j: int) -> bool:
        return any(r.label == (kind, i, j) for r in self.roots)

    def to_dict(self) -> dict:
        kind = self.lie_type.root_kind
        return {
            "family": self.lie_type.family,
            "rank": self.lie_type.rank,
            "roots": [[r.i, r.j] if r.kind == kind else [r.kind, r.i, r.j] for r in self.roots],
        }

    def __str__(self) -> str:
        return "{" + ", ".join(str(r) for r in self.roots) + "}"


@dataclass(frozen=True)
class LinearForm:
    """Affine form sum_t coeffs[t] * h_{t+1} + constant on weights."""
    coeffs: Tuple[int, ...]
    constant: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def evaluate(self, weight: Weight) -> int:
        return sum(c * x for c, x in zip(self.coeffs, weight.coords)) + self.constant

    def is_zero(self) -> bool:
        return self.constant == 0 and not any(self.coeffs)

    def __add__(self, other: Union["LinearForm", int]) -> "LinearForm":
        if isinstance(other, int):
            return LinearForm(self.coeffs, self.constant + other)
        return LinearForm(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.constant + other.constant,
        )

    def __neg__(self) -> "LinearForm":
        return LinearForm(tuple(-c for c in self.coeffs), -self.constant)

    def __sub__(self, other: Union["LinearForm", int]) -> "LinearForm":
        return self + (-other)

    def __str__(self) -> str:
        parts = []
        for t, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            term = f"h{t}" if abs(c) == 1 else f"{abs(c)}*h{t}"
            parts.append(("- " if c < 0 else "+ ") + term)
        if self.constant or not parts:
            parts.append(("- " if self.constant < 0 else "+ ") + str(abs(self.constant)))
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]
