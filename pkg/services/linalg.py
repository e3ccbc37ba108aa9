"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping comparable keys to nonzero Fractions. The Echelon
class keeps an incremental row echelon form and tracks, for every reduced
vector, the combination of inputs that produced it, so kernels come out of
the same elimination pass.
"""

import logging
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

logger = logging.getLogger(__name__)

Vector = Dict[Hashable, Fraction]


def add_into(vec: Vector, key: Hashable, coeff) -> None:
    """vec[key] += coeff, dropping the entry when it cancels."""
    if coeff == 0:
        return
    total = vec.get(key, 0) + coeff
    if total == 0:
        vec.pop(key, None)
    else:
        vec[key] = total


def combine(pairs) -> Vector:
    """Sum of c * v over (c, v) pairs."""
    out: Vector = {}
    for c, v in pairs:
        for k, x in v.items():
            add_into(out, k, c * x)
    return out


class Echelon:
    """Incremental row echelon form with combination tracking."""

    def __init__(self):
        self.rows: List[Tuple[Vector, Vector, Hashable]] = []

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[Hashable]:
        return [piv for _, _, piv in self.rows]

    def reduce(self, vec: Vector, comb: Optional[Vector] = None) -> Tuple[Vector, Vector]:
        """Eliminate all pivots from vec.

        Returns:
            The reduced vector and the input combination it equals
        """
        vec = dict(vec)
        comb = dict(comb) if comb else {}
        for row, row_comb, piv in self.rows:
            lead = vec.get(piv)
            if lead is None:
                continue
            factor = lead / row[piv]
            for k, x in row.items():
                add_into(vec, k, -factor * x)
            for k, x in row_comb.items():
                add_into(comb, k, -factor * x)
        return vec, comb

    def add(self, vec: Vector, comb: Optional[Vector] = None) -> Tuple[bool, Vector]:
        """Insert vec; returns (independent, combination of the reduced remainder)."""
        reduced, reduced_comb = self.reduce(vec, comb)
        if not reduced:
            return False, reduced_comb
        self.rows.append((reduced, reduced_comb, min(reduced)))
        return True, reduced_comb

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)[0]


def nullspace(columns: Sequence[Vector]) -> List[Dict[int, Fraction]]:
    """Kernel of the matrix with the given sparse columns, as index -> coefficient maps."""
    ech = Echelon()
    kernel = []
    for index, column in enumerate(columns):
        independent, comb = ech.add(column, {index: Fraction(1)})
        if not independent:
            kernel.append(comb)
    logger.debug("Nullspace of %d columns has dimension %d", len(columns), len(kernel))
    return kernel


def rank(vectors: Sequence[Vector]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def _sym(x) -> Rational:
    if isinstance(x, Fraction):
        return Rational(x.numerator, x.denominator)
    return Rational(x)


def _to_fraction(x) -> Fraction:
    x = Rational(x)
    return Fraction(int(x.p), int(x.q))


def dense_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a dense rational matrix."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return Matrix([[_sym(x) for x in r] for r in rows]).rank()


def rref(rows: Sequence[Sequence]) -> Tuple[Tuple[Fraction, ...], ...]:
    """Canonical reduced row echelon form, zero rows dropped."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return ()
    reduced, pivots = Matrix([[_sym(x) for x in r] for r in rows]).rref()
    return tuple(tuple(_to_fraction(x) for x in reduced.row(k)) for k in range(len(pivots)))


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """True when two lists of equal-length vectors span the same subspace."""
    return rref(a) == rref(b)


def dense_nullspace(rows: Sequence[Sequence], width: int) -> List[Tuple[Fraction, ...]]:
    """Basis of {x : row . x = 0 for every row} over the rationals."""
    if not rows:
        return [tuple(Fraction(int(i == k)) for i in range(width)) for k in range(width)]
    matrix = Matrix([[_sym(x) for x in r] for r in rows])
    return [tuple(_to_fraction(x) for x in v) for v in matrix.nullspace()]
