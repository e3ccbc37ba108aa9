"""Root-system data for types A and C: roots, root strings, extremal sets."""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import Eq, Matrix, Rational, symbols
from sympy.solvers.simplex import lpmax

from config.settings import EXTREMAL_SEARCH_MAX_RANK
from models import (
    LieQuiverError, LieQuiverErrorType, LieType, LinearForm, PsiSet, Root, Weight,
)

logger = logging.getLogger(__name__)

SimpleVec = Tuple[int, ...]


def cartan_matrix(lie_type: LieType) -> List[List[int]]:
    """Return the Cartan matrix A with A[i][j] = alpha_j(h_i) (0-based)."""
    n = lie_type.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i > 0:
            a[i][i - 1] = -1
        if i < n - 1:
            a[i][i + 1] = -1
    if lie_type.family == "C" and n >= 2:
        a[n - 2][n - 1] = -2
    return a


def _simple_coords_of_root(lie_type: LieType, kind: str, i: int, j: int) -> SimpleVec:
    n = lie_type.rank
    c = [0] * n
    if kind == "a":
        for t in range(i, j + 1):
            c[t - 1] = 1
        return tuple(c)
    for t in range(1, n):
        c[t - 1] = (1 if i <= t else 0) + (1 if j <= t else 0)
    c[n - 1] = 1
    return tuple(c)


def _weight_of_simple(cartan: List[List[int]], simple: Sequence[int]) -> Weight:
    return Weight(tuple(sum(row[j] * simple[j] for j in range(len(simple))) for row in cartan))


class RootSystem:
    """Positive roots, Cartan data and root strings for one Lie type."""

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        self.rank = lie_type.rank
        self.cartan = cartan_matrix(lie_type)
        self._inverse = [
            [Fraction(int(x.p), int(x.q)) for x in row]
            for row in Matrix(self.cartan).inv().tolist()
        ]
        self.positive_roots = tuple(self._build_roots())
        self._by_simple: Dict[SimpleVec, Root] = {r.simple: r for r in self.positive_roots}
        self._by_label: Dict[Tuple[str, int, int], Root] = {r.label: r for r in self.positive_roots}
        negatives = {tuple(-x for x in r.simple) for r in self.positive_roots}
        self.all_roots: FrozenSet[SimpleVec] = frozenset(self._by_simple) | frozenset(negatives)

    def _build_roots(self) -> Iterable[Root]:
        n = self.rank
        labels = []
        if self.lie_type.family == "A":
            labels = [("a", i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
        else:
            labels = [("a", i, j) for i in range(1, n) for j in range(i, n)]
            labels += [("b", i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
        for kind, i, j in labels:
            simple = _simple_coords_of_root(self.lie_type, kind, i, j)
            yield Root(kind, i, j, self.weight_of(simple), simple)

    def weight_of(self, simple: Sequence[int]) -> Weight:
        """Fundamental-weight coordinates of a simple-root combination."""
        return _weight_of_simple(self.cartan, simple)

    def simple_coords(self, weight: Weight) -> Tuple[Fraction, ...]:
        """Exact simple-root coordinates of a weight."""
        n = self.rank
        return tuple(
            sum((self._inverse[j][i] * weight.coords[i] for i in range(n)), Fraction(0))
            for j in range(n)
        )

    def integral_simple_coords(self, weight: Weight) -> Optional[SimpleVec]:
        """Simple-root coordinates when the weight lies in the root lattice."""
        coords = self.simple_coords(weight)
        if any(c.denominator != 1 for c in coords):
            return None
        return tuple(int(c) for c in coords)

    def root(self, kind: str, i: int, j: int) -> Root:
        try:
            return self._by_label[(kind, i, j)]
        except KeyError:
            raise LieQuiverError(
                LieQuiverErrorType.NOT_A_ROOT,
                f"{kind}({i},{j}) is not a positive root of {self.lie_type}"
            )

    def root_by_simple(self, simple: Sequence[int]) -> Optional[Root]:
        return self._by_simple.get(tuple(simple))

    def is_root(self, simple: Sequence[int]) -> bool:
        return tuple(simple) in self.all_roots

    def eps(self, simple: Sequence[int]) -> Weight:
        """epsilon(beta): lengths of the alpha_i-strings above beta."""
        simple = tuple(simple)
        if simple not in self.all_roots:
            raise LieQuiverError(
                LieQuiverErrorType.NOT_A_ROOT,
                f"{simple} is not a root of {self.lie_type}"
            )
        out = []
        for i in range(self.rank):
            t = 0
            while True:
                shifted = list(simple)
                shifted[i] += t + 1
                if tuple(shifted) not in self.all_roots:
                    break
                t += 1
            out.append(t)
        return Weight(tuple(out))

    def phi(self, simple: Sequence[int]) -> Weight:
        return self.eps(simple) + self.weight_of(simple)

    def above(self, beta: Root) -> List[Root]:
        """Roots of the same kind as beta that dominate it, in label order."""
        return [r for r in self.positive_roots if r.kind == beta.kind and r.dominates(beta)]


@lru_cache(maxsize=None)
def root_system(lie_type: LieType) -> RootSystem:
    """Shared RootSystem instance for a Lie type."""
    return RootSystem(lie_type)


def _as_simple(lie_type: LieType, beta: Union[Root, Sequence[int]]) -> SimpleVec:
    if isinstance(beta, Root):
        return beta.simple
    simple = tuple(int(x) for x in beta)
    if len(simple) != lie_type.rank:
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"Expected {lie_type.rank} simple-root coordinates, got {len(simple)}"
        )
    return simple


def positive_roots(lie_type: LieType) -> List[Root]:
    """All positive roots of the given type, alpha family first."""
    return list(root_system(lie_type).positive_roots)


def simple_coords(lie_type: LieType, weight: Weight) -> Tuple[Fraction, ...]:
    return root_system(lie_type).simple_coords(weight)


def eps(lie_type: LieType, beta: Union[Root, Sequence[int]]) -> Weight:
    """Return epsilon(beta) by root-string search.

    Raises:
        LieQuiverError: If beta is not a root
    """
    return root_system(lie_type).eps(_as_simple(lie_type, beta))


def phi(lie_type: LieType, beta: Union[Root, Sequence[int]]) -> Weight:
    """Return phi(beta) = epsilon(beta) + beta."""
    return root_system(lie_type).phi(_as_simple(lie_type, beta))


def _inner_products(lie_type: LieType) -> List[List[Fraction]]:
    # (alpha_i, alpha_j) with long roots of squared length 2 in type A, 4 in type C
    cartan = cartan_matrix(lie_type)
    n = lie_type.rank
    half_length = [1] * n
    if lie_type.family == "C":
        half_length = [1] * (n - 1) + [2]
    return [[Fraction(cartan[i][j] * half_length[i]) for j in range(n)] for i in range(n)]


def weyl_dimension(lie_type: LieType, weight: Weight) -> int:
    """Dimension of the irreducible module V(weight) by the Weyl formula."""
    if not weight.is_dominant():
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"Weyl dimension needs a dominant weight, got {weight}"
        )
    system = root_system(lie_type)
    form = _inner_products(lie_type)
    n = lie_type.rank
    # (lambda + rho, beta) = sum_i beta_i (lambda_i + 1) (alpha_i, alpha_i) / 2
    result = Fraction(1)
    for root in system.positive_roots:
        top = sum(root.simple[i] * (weight.coords[i] + 1) * form[i][i] / 2 for i in range(n))
        bottom = sum(root.simple[i] * form[i][i] / 2 for i in range(n))
        result *= Fraction(top) / Fraction(bottom)
    return int(result)


def is_extremal_combinatorial(lie_type: LieType, roots: Iterable[Root]) -> bool:
    """Finite characterisation: S+S misses R and 0, and sums in S+S force S."""
    system = root_system(lie_type)
    members = {r.simple for r in roots}
    if not members:
        return False
    sums = set()
    for a, b in itertools.product(members, repeat=2):
        total = tuple(x + y for x, y in zip(a, b))
        if total in system.all_roots or not any(total):
            return False
        sums.add(total)
    for a, b in itertools.product(system.all_roots, repeat=2):
        total = tuple(x + y for x, y in zip(a, b))
        if total in sums and not (a in members and b in members):
            return False
    return True


def extremal_witness(lie_type: LieType, roots: Iterable[Root]) -> Optional[Tuple[Fraction, ...]]:
    """Linear functional xi maximised over R exactly on the given roots.

    Solves the exact LP maximising the gap between xi on S and xi on R minus S.

    Returns:
        Values of xi on the simple roots, or None when no positive gap exists
    """
    system = root_system(lie_type)
    members = {r.simple for r in roots}
    xi = symbols(f"xi1:{lie_type.rank + 1}")
    top, gap = symbols("top gap")

    def value(vec):
        return sum(c * x for c, x in zip(vec, xi))

    constraints = [gap <= 1]
    for vec in sorted(system.all_roots):
        if vec in members:
            constraints.append(Eq(value(vec), top))
        else:
            constraints.append(value(vec) <= top - gap)
    optimum, point = lpmax(gap, constraints)
    if optimum <= 0:
        return None
    values = tuple(Rational(point.get(x, 0)) for x in xi)
    return tuple(Fraction(int(v.p), int(v.q)) for v in values)


def is_extremal(lie_type: LieType, roots: Iterable[Root]) -> bool:
    """Decide whether a set of positive roots is extremal.

    The combinatorial test decides; when it succeeds the LP witness must exist.

    Raises:
        LieQuiverError: If the two characterisations disagree
    """
    roots = list(roots)
    decided = is_extremal_combinatorial(lie_type, roots)
    if decided:
        witness = extremal_witness(lie_type, roots)
        if witness is None:
            raise LieQuiverError(
                LieQuiverErrorType.ORACLE_FAILURE,
                f"No LP witness for {{{', '.join(str(r) for r in roots)}}} in {lie_type}"
            )
        logger.debug("Extremal witness for %s: %s", [str(r) for r in roots], witness)
    return decided


def psi_c(lie_type: LieType, indices: Iterable[int]) -> PsiSet:
    """Return Psi(i_1,...,i_k) = {beta_{i_r,i_s}} in type C."""
    if lie_type.family != "C":
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Psi(i_1,...,i_k) is a type C set")
    system = root_system(lie_type)
    idx = sorted(set(indices))
    if not idx or idx[0] < 1 or idx[-1] > lie_type.rank:
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"Indices {idx} out of range 1..{lie_type.rank}"
        )
    roots = tuple(system.root("b", a, b) for a, b in itertools.combinations_with_replacement(idx, 2))
    return PsiSet(lie_type, roots)


def enumerate_extremal(lie_type: LieType) -> List[PsiSet]:
    """All extremal sets of positive roots.

    Type C uses the closed classification; type A searches subsets, growing
    cliques under the S+S condition before the full test.

    Raises:
        LieQuiverError: If a type A search exceeds the rank guard
    """
    if lie_type.family == "C":
        n = lie_type.rank
        return [
            psi_c(lie_type, combo)
            for k in range(1, n + 1)
            for combo in itertools.combinations(range(1, n + 1), k)
        ]
    if lie_type.rank > EXTREMAL_SEARCH_MAX_RANK:
        raise LieQuiverError(
            LieQuiverErrorType.CAP_EXCEEDED,
            f"Exhaustive search is limited to rank {EXTREMAL_SEARCH_MAX_RANK}, got {lie_type.rank}"
        )
    system = root_system(lie_type)
    roots = list(system.positive_roots)

    def compatible(a: Root, b: Root) -> bool:
        total = tuple(x + y for x, y in zip(a.simple, b.simple))
        return total not in system.all_roots

    found: List[PsiSet] = []

    def grow(chosen: List[Root], start: int):
        if chosen and is_extremal_combinatorial(lie_type, chosen):
            found.append(PsiSet(lie_type, tuple(chosen)))
        for k in range(start, len(roots)):
            candidate = roots[k]
            if all(compatible(candidate, c) for c in chosen):
                chosen.append(candidate)
                grow(chosen, k + 1)
                chosen.pop()

    grow([], 0)
    logger.info("Found %d extremal sets in %s", len(found), lie_type)
    return found


def is_regular(psi: PsiSet) -> bool:
    """Type-specific regularity: no two Psi indices are adjacent."""
    if psi.lie_type.family == "C":
        indices = sorted({r.i for r in psi} | {r.j for r in psi})
        return all(b != a + 1 for a, b in zip(indices, indices[1:]))
    # type A: alpha_{i,j}, alpha_{i,k} in Psi with j<k forces k>j+1, and dually for starts
    for a, b in itertools.combinations(psi.roots, 2):
        if a.i == b.i and abs(a.j - b.j) == 1:
            return False
        if a.j == b.j and abs(a.i - b.i) == 1:
            return False
    return True


def h_form(rank: int, r: int, s: int) -> LinearForm:
    """Return H_{r,s} = h_r + ... + h_s + s - r, the zero form when r > s."""
    if r > s:
        return LinearForm((0,) * rank, 0)
    if r < 1 or s > rank:
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"H_{{{r},{s}}} needs 1 <= r, s <= {rank}"
        )
    return LinearForm(tuple(1 if r <= t <= s else 0 for t in range(1, rank + 1)), s - r)


def h_value(weight: Weight, r: int, s: int) -> int:
    """Evaluate H_{r,s} at a weight."""
    if r > s:
        return 0
    return sum(weight.coords[t - 1] for t in range(r, s + 1)) + s - r


def parse_psi(lie_type: LieType, text: str) -> PsiSet:
    """Parse the Psi mini-grammar.

    Type C: ``"1,3"`` means Psi(1,3). Type A: ``"a:1,3x3,5"`` lists the
    labels alpha_{1,3} and alpha_{3,5}.

    Raises:
        LieQuiverError: If the text is malformed or names a non-root
    """
    text = text.strip()
    system = root_system(lie_type)
    try:
        if ":" in text:
            kind, body = text.split(":", 1)
            kind = kind.strip().lower()
            roots = []
            for item in body.split("x"):
                i, j = (int(x) for x in item.split(","))
                roots.append(system.root(kind, i, j))
            return PsiSet(lie_type, tuple(roots))
        return psi_c(lie_type, (int(x) for x in text.split(",")))
    except ValueError as e:
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"Cannot parse Psi specification '{text}': {str(e)}"
        )


def psi_from_json(data: dict) -> PsiSet:
    """Inverse of PsiSet.to_dict."""
    try:
        lie_type = LieType(str(data["family"]), int(data["rank"]))
        system = root_system(lie_type)
        roots = []
        for entry in data["roots"]:
            if len(entry) == 3:
                roots.append(system.root(str(entry[0]), int(entry[1]), int(entry[2])))
            else:
                roots.append(system.root(lie_type.root_kind, int(entry[0]), int(entry[1])))
        return PsiSet(lie_type, tuple(roots))
    except (KeyError, TypeError, ValueError) as e:
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"Invalid Psi JSON: {str(e)}"
        )
