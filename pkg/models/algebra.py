"""Evaluated elements of U(n^-): f-words, sigma maps and rational word sums."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple, Union

from .errors import LieQuiverError, LieQuiverErrorType

FWord = Tuple[int, ...]

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class SigmaMap:
    """A bijection sigma: {i..j} -> {1..j-i+1}; values[r - i] = sigma(r)."""
    start: int
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{values} is not a bijection onto 1..{len(values)}")
        for prev, cur in zip(values, values[1:]):
            if cur < prev and cur != prev - 1:
                raise LieQuiverError(
                    LieQuiverErrorType.INVALID_INPUT,
                    f"{values} breaks the descent rule at {prev} -> {cur}"
                )
        object.__setattr__(self, "values", values)

    @property
    def end(self) -> int:
        return self.start + len(self.values) - 1

    def __call__(self, r: int) -> int:
        return self.values[r - self.start]

    def descends_at(self, r: int) -> bool:
        """True when sigma(r) = sigma(r - 1) - 1."""
        return self(r) == self(r - 1) - 1

    @property
    def word(self) -> FWord:
        """f_sigma = f_{sigma^-1(1)} ... f_{sigma^-1(n)}."""
        word = [0] * len(self.values)
        for offset, v in enumerate(self.values):
            word[v - 1] = self.start + offset
        return tuple(word)


@dataclass
class FElement:
    """Finite rational combination of f-words, words read left to right."""
    terms: Dict[FWord, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(w): Fraction(c) for w, c in self.terms.items() if c != 0}

    @classmethod
    def unit(cls) -> "FElement":
        return cls({(): Fraction(1)})

    @classmethod
    def zero(cls) -> "FElement":
        return cls()

    @classmethod
    def word(cls, word: FWord, coeff: Scalar = 1) -> "FElement":
        return cls({tuple(word): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[FWord, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "FElement") -> "FElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FElement(out)

    def __neg__(self) -> "FElement":
        return FElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FElement") -> "FElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "FElement":
        return FElement({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: Union["FElement", int, Fraction]) -> "FElement":
        if not isinstance(other, FElement):
            return self.scale(other)
        out: Dict[FWord, Fraction] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return FElement(out)

    __rmul__ = scale

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FElement) and self.terms == other.terms

    def dump(self) -> List[Tuple[FWord, str]]:
        """Debug listing of (word, "num/den") pairs in word order."""
        return [(w, str(c)) for w, c in self]
