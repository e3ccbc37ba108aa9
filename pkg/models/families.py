"""Lattice boxes behind the quiver families Xi(m) and Gamma_a(m, n)."""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import LieQuiverError, LieQuiverErrorType
from .lie import INFINITY, Extended


def parse_sides(text: str) -> Tuple[Extended, ...]:
    """Parse a comma list of box sides, ``inf`` allowed."""
    sides = []
    for item in text.split(","):
        item = item.strip().lower()
        if item in ("inf", "+inf", "oo"):
            sides.append(INFINITY)
            continue
        try:
            value = int(item)
        except ValueError:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"Cannot parse box side '{item}'")
        sides.append(value)
    return tuple(sides)


@dataclass(frozen=True)
class LatticeBox:
    """Box sides m (and n for Gamma_a(m, n)) with offset or parity a."""
    m: Tuple[Extended, ...]
    n: Optional[Tuple[Extended, ...]] = None
    a: int = 0

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))
        if self.n is not None:
            object.__setattr__(self, "n", tuple(self.n))
        for side in self.m + (self.n or ()):
            if side != INFINITY and (not isinstance(side, int) or side < 0):
                raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"Box side {side!r} must be a nonnegative integer or inf")
        if not self.m:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Box needs at least one side")

    @property
    def is_finite(self) -> bool:
        return all(side != INFINITY for side in self.m + (self.n or ()))

    def clipped(self, window: Optional[Sequence[int]]) -> "LatticeBox":
        """Replace infinite sides by the window bound."""
        if self.is_finite:
            return self
        if window is None:
            raise LieQuiverError(
                LieQuiverErrorType.INVALID_INPUT,
                "Infinite box side needs an explicit window bound"
            )
        sides = self.m + (self.n or ())
        if len(window) == 1:
            window = tuple(window) * len(sides)
        if len(window) != len(sides):
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"Window needs {len(sides)} bounds, got {len(window)}")
        cut = tuple(int(w) if s == INFINITY else s for s, w in zip(sides, window))
        r = len(self.m)
        return LatticeBox(cut[:r], cut[r:] if self.n is not None else None, self.a)

    @property
    def lattice_size(self) -> int:
        if not self.is_finite:
            return math.inf
        return math.prod(s + 1 for s in self.m + (self.n or ()))


@dataclass(frozen=True)
class GammaParameters:
    """Data of a type A component as Gamma_a(m, n) with the shifts between consecutive indices.

    ``z_minus[k]`` sits between i_k and i_{k+1}, ``z_plus[k]`` between j_k and j_{k+1}.
    """
    m: Tuple[Extended, ...]
    n: Tuple[Extended, ...]
    a: int
    z_minus: Tuple[int, ...]
    z_plus: Tuple[int, ...]

    def __post_init__(self):
        if len(self.z_minus) != len(self.m) - 1 or len(self.z_plus) != len(self.n) - 1:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Need one shift between each pair of consecutive sides")

    def contains(self, x: Sequence[int], y: Sequence[int]) -> bool:
        """Whether (x, y) is a vertex of Gamma_a(m, n)."""
        return (all(0 <= c <= s for c, s in zip(x, self.m))
                and all(0 <= c <= s for c, s in zip(y, self.n))
                and sum(x) == sum(y) + self.a)

    def h_minus(self, x: Sequence[int], p: int, p2: int) -> int:
        """mu(H_{i_p, i_{p2} - 1}) at the vertex with first coordinates x, for p < p2."""
        total = x[p] - x[p2] + p2 - p - 1
        for k in range(p, p2):
            total += self.m[k + 1] + self.z_minus[k]
        return total

    def h_plus(self, y: Sequence[int], q: int, q2: int) -> int:
        """mu(H_{j_q + 1, j_{q2}}) at the vertex with second coordinates y, for q < q2."""
        total = y[q2] - y[q] + q2 - q - 1
        for k in range(q, q2):
            total += self.n[k] + self.z_plus[k]
        return total


@dataclass(frozen=True)
class XiParameters:
    """Data of a type C component as Xi_a(m); ``zeta[p]`` sits between i_p and i_{p+1}."""
    m: Tuple[Extended, ...]
    a: int
    zeta: Tuple[int, ...]

    def __post_init__(self):
        if len(self.zeta) != len(self.m) - 1:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Need one shift between each pair of consecutive sides")

    def contains(self, x: Sequence[int]) -> bool:
        """Whether x is a vertex of Xi_a(m)."""
        return all(0 <= c <= s for c, s in zip(x, self.m)) and sum(x) % 2 == self.a

    def h_value(self, x: Sequence[int], r: int, s: int) -> int:
        """mu(H_{i_r, i_s - 1}) at the vertex x, for r < s."""
        total = x[r] - x[s] + s - r - 1
        for p in range(r + 1, s + 1):
            total += self.m[p] + self.zeta[p - 1]
        return total
