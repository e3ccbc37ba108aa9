"""Matrix realisations of sl_{l+1} and sp_{2l} with checked root vectors."""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from models import FWord, LieQuiverError, LieQuiverErrorType, LieType, Root
from .linalg import add_into
from .rootdata import root_system

logger = logging.getLogger(__name__)

SparseMatrix = Dict[Tuple[int, int], Fraction]
Label = Tuple[str, int, int]


def unit_matrix(a: int, b: int) -> SparseMatrix:
    return {(a, b): Fraction(1)}


def mat_add(x: SparseMatrix, y: SparseMatrix, coeff=1) -> SparseMatrix:
    out = dict(x)
    for k, v in y.items():
        add_into(out, k, coeff * v)
    return out


def mat_scale(x: SparseMatrix, coeff) -> SparseMatrix:
    return {k: v * coeff for k, v in x.items() if v * coeff != 0}


def mat_mul(x: SparseMatrix, y: SparseMatrix) -> SparseMatrix:
    rows: Dict[int, List[Tuple[int, Fraction]]] = {}
    for (a, b), v in y.items():
        rows.setdefault(a, []).append((b, v))
    out: SparseMatrix = {}
    for (a, b), v in x.items():
        for c, w in rows.get(b, ()):
            add_into(out, (a, c), v * w)
    return out


def bracket(x: SparseMatrix, y: SparseMatrix) -> SparseMatrix:
    return mat_add(mat_mul(x, y), mat_mul(y, x), -1)


def ratio(x: SparseMatrix, y: SparseMatrix) -> Fraction:
    """The scalar c with x = c * y.

    Raises:
        LieQuiverError: If x is not a multiple of y
    """
    if not x:
        return Fraction(0)
    key = next(iter(y))
    c = x.get(key, Fraction(0)) / y[key]
    if mat_add(x, y, -c):
        raise LieQuiverError(LieQuiverErrorType.ORACLE_FAILURE, "Matrices are not proportional")
    return c


class MatrixLieAlgebra:
    """Chevalley generators and positive root vectors of a classical Lie algebra."""

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        self.rank = lie_type.rank
        self.system = root_system(lie_type)
        if lie_type.family == "A":
            self.size = self.rank + 1
        else:
            self.size = 2 * self.rank
        self.e, self.f = self._chevalley()
        self.h = [bracket(x, y) for x, y in zip(self.e, self.f)]
        self.root_vectors: Dict[Label, SparseMatrix] = self._root_vectors()
        self._check_structure()
        logger.debug("Built %s realisation of size %d", lie_type, self.size)

    @property
    def dimension(self) -> int:
        if self.lie_type.family == "A":
            return self.size * self.size - 1
        return self.rank * (2 * self.rank + 1)

    def _chevalley(self) -> Tuple[List[SparseMatrix], List[SparseMatrix]]:
        n = self.rank
        if self.lie_type.family == "A":
            return ([unit_matrix(i, i + 1) for i in range(1, n + 1)],
                    [unit_matrix(i + 1, i) for i in range(1, n + 1)])
        e, f = [], []
        for i in range(1, n):
            e.append(mat_add(unit_matrix(i, i + 1), unit_matrix(2 * n - i, 2 * n + 1 - i), -1))
            f.append(mat_add(unit_matrix(i + 1, i), unit_matrix(2 * n + 1 - i, 2 * n - i), -1))
        e.append(unit_matrix(n, n + 1))
        f.append(unit_matrix(n + 1, n))
        return e, f

    def _root_vectors(self) -> Dict[Label, SparseMatrix]:
        n = self.rank
        vectors: Dict[Label, SparseMatrix] = {}
        if self.lie_type.family == "A":
            for root in self.system.positive_roots:
                vectors[root.label] = unit_matrix(root.i, root.j + 1)
            return vectors
        for j in range(1, n):
            vectors[("a", j, j)] = self.e[j - 1]
        for width in range(1, n):
            for i in range(1, n - width):
                j = i + width
                vectors[("a", i, j)] = bracket(self.e[i - 1], vectors[("a", i + 1, j)])
        vectors[("b", n, n)] = self.e[n - 1]
        for j in range(n, 0, -1):
            if j < n:
                vectors[("b", j, j)] = mat_scale(bracket(self.e[j - 1], vectors[("b", j, j + 1)]), Fraction(1, 2))
            if j > 1:
                vectors[("b", j - 1, j)] = bracket(self.e[j - 2], vectors[("b", j, j)])
            for i in range(j - 2, 0, -1):
                vectors[("b", i, j)] = bracket(self.e[i - 1], vectors[("b", i + 1, j)])
        return vectors

    def root_vector(self, root: Root) -> SparseMatrix:
        return self.root_vectors[root.label]

    def _fail(self, what: str):
        raise LieQuiverError(LieQuiverErrorType.ORACLE_FAILURE, f"{self.lie_type}: {what}")

    def _check_structure(self):
        n = self.rank
        cartan = self.system.cartan
        for i in range(n):
            for j in range(n):
                if bracket(self.e[i], self.f[j]) != (self.h[i] if i == j else {}):
                    self._fail(f"[e_{i + 1}, f_{j + 1}] is wrong")
                if bracket(self.h[i], self.e[j]) != mat_scale(self.e[j], cartan[i][j]):
                    self._fail(f"[h_{i + 1}, e_{j + 1}] is wrong")
        for root in self.system.positive_roots:
            x = self.root_vectors[root.label]
            for i in range(n):
                shifted = list(root.simple)
                shifted[i] += 1
                target = self.system.root_by_simple(shifted)
                image = bracket(self.e[i], x)
                if target is None:
                    if image:
                        self._fail(f"[e_{i + 1}, e_{root}] leaves the root spaces")
                    continue
                ratio(image, self.root_vectors[target.label])
        if self.lie_type.family == "A":
            self._check_type_a()
        else:
            self._check_type_c()

    def _check_type_a(self):
        # [e_r, e_{p,q}] = d_{r,p-1} e_{r,q} - d_{r,q+1} e_{p,r}
        n = self.rank
        vec = self.root_vectors
        for r in range(1, n + 1):
            for p in range(1, n + 1):
                for q in range(p, n + 1):
                    expected: SparseMatrix = {}
                    if r == p - 1:
                        expected = mat_add(expected, vec[("a", r, q)])
                    if r == q + 1:
                        expected = mat_add(expected, vec[("a", p, r)], -1)
                    if bracket(self.e[r - 1], vec[("a", p, q)]) != expected:
                        self._fail(f"[e_{r}, e_a({p},{q})] has the wrong constant")

    def _check_type_c(self):
        # [e_i, e_b(j,k)] = d_{i,j-1} e_b(i,k) + d_{i,k-1} (1 + d_{i,j}) e_b(j,i); coefficient 1 when j = k = i+1
        n = self.rank
        vec = self.root_vectors

        def b(x: int, y: int) -> SparseMatrix:
            return vec[("b", min(x, y), max(x, y))]

        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(j, n + 1):
                    expected: SparseMatrix = {}
                    if j == k == i + 1:
                        expected = b(i, k)
                    else:
                        if i == j - 1:
                            expected = mat_add(expected, b(i, k))
                        if i == k - 1:
                            expected = mat_add(expected, b(j, i), 1 + (i == j))
                    if bracket(self.e[i - 1], b(j, k)) != expected:
                        self._fail(f"[e_{i}, e_b({j},{k})] has the wrong constant")

    def ad_f_word(self, word: FWord, x: SparseMatrix) -> SparseMatrix:
        """ad(f_{w_1}) ... ad(f_{w_k}) x, the last letter acting first."""
        for letter in reversed(word):
            x = bracket(self.f[letter - 1], x)
            if not x:
                break
        return x

    def root_coefficient(self, x: SparseMatrix, simple: Sequence[int]) -> Tuple[Root, Fraction]:
        """Express x as a multiple of the positive root vector with the given coordinates."""
        root = self.system.root_by_simple(simple)
        if root is None:
            self._fail(f"{tuple(simple)} is not a positive root")
        return root, ratio(x, self.root_vectors[root.label])


@lru_cache(maxsize=None)
def build_algebra(lie_type: LieType) -> MatrixLieAlgebra:
    """Shared checked matrix realisation for a Lie type."""
    return MatrixLieAlgebra(lie_type)
