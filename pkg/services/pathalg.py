"""Quadratic quiver algebras: graded dimensions, duals, Koszulity and global dimension.

Paths are tuples of vertex indices listed from the target. An arrow is its
pair (target, source), so a quiver here has no multiple arrows.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from config.settings import KOSZUL_EXTRA_DEGREES, NORMALIZE_PATHS, RESOLUTION_LENGTH_CAP
from models import (
    HilbertMatrix, LieQuiverError, LieQuiverErrorType, Path, PathVec, PsiSet,
    QuadraticAlgebra, QuiverGraph, Weight,
)
from .linalg import Echelon, add_into, nullspace
from .quiver import QuiverService
from .relations import relation_space

logger = logging.getLogger(__name__)

IndexPath = Tuple[int, ...]
Vector = Dict[Tuple, Fraction]


class _Truncation:
    """Degree-by-degree normal forms for one quadratic algebra."""

    def __init__(self, algebra: QuadraticAlgebra):
        quiver = algebra.quiver
        self.quiver = quiver
        self.index = {v: k for k, v in enumerate(quiver.vertices)}
        self.size = len(quiver.vertices)
        self.out: Dict[int, List[int]] = {k: [] for k in range(self.size)}
        for arrow in quiver.arrows:
            self.out[self.index[arrow.source]].append(self.index[arrow.target])
        self.relations: List[Tuple[int, int, Dict[IndexPath, Fraction]]] = []
        for rel in algebra.relations:
            vec: Dict[IndexPath, Fraction] = {}
            for path, c in zip(rel.paths, rel.coeffs):
                if c:
                    vec[tuple(self.index[v] for v in path.vertices)] = c
            if vec:
                self.relations.append((self.index[rel.target], self.index[rel.source], vec))
        self._walks: Dict[Tuple[int, int], List[IndexPath]] = {}
        self._info: Dict[Tuple[int, int, int], Tuple[Echelon, List[IndexPath]]] = {}

    def walks(self, source: int, length: int) -> List[IndexPath]:
        """Paths of the given length starting at source, listed from their target."""
        key = (source, length)
        if key not in self._walks:
            if length == 0:
                found = [(source,)]
            else:
                found = [(t,) + w for w in self.walks(source, length - 1) for t in self.out[w[0]]]
            self._walks[key] = found
        return self._walks[key]

    def paths(self, target: int, source: int, length: int) -> List[IndexPath]:
        return [w for w in self.walks(source, length) if w[0] == target]

    def info(self, target: int, source: int, degree: int) -> Tuple[Echelon, List[IndexPath]]:
        """Echelon form of the ideal in one degree and the paths outside its pivots."""
        key = (target, source, degree)
        if key in self._info:
            return self._info[key]
        ech = Echelon()
        if degree >= 2:
            for r_target, r_source, vec in self.relations:
                for before in range(degree - 1):
                    after = degree - 2 - before
                    heads = self.paths(target, r_target, before)
                    tails = self.paths(r_source, source, after)
                    for head in heads:
                        for tail in tails:
                            ech.add({head[:-1] + p + tail[1:]: c for p, c in vec.items()})
        pivots = set(ech.pivots)
        basis = [p for p in self.paths(target, source, degree) if p not in pivots]
        self._info[key] = (ech, basis)
        return ech, basis

    def dim(self, target: int, source: int, degree: int) -> int:
        return len(self.info(target, source, degree)[1])

    def normal_form(self, target: int, source: int, degree: int, vec: Dict[IndexPath, Fraction]) -> Dict[IndexPath, Fraction]:
        return self.info(target, source, degree)[0].reduce(vec)[0]

    def longest(self) -> int:
        return nx.dag_longest_path_length(self.quiver.to_networkx())


def graded_dims(algebra: QuadraticAlgebra, max_degree: int) -> HilbertMatrix:
    """dim e_x A_d e_y for all vertex pairs and d <= max_degree."""
    trunc = _Truncation(algebra)
    vertices = algebra.quiver.vertices
    entries = {}
    for x, vx in enumerate(vertices):
        for y, vy in enumerate(vertices):
            entries[(vx, vy)] = [int(x == y)] + [trunc.dim(x, y, d) for d in range(1, max_degree + 1)]
    return HilbertMatrix(tuple(vertices), entries, max_degree)


def quadratic_dual(algebra: QuadraticAlgebra) -> QuadraticAlgebra:
    """Opposite quiver with the orthogonal complement of the relations per endpoint pair."""
    quiver = algebra.quiver
    opposite = quiver.opposite()
    by_pair: Dict[Tuple, List[PathVec]] = {}
    for rel in algebra.relations:
        by_pair.setdefault((rel.target, rel.source), []).append(rel)
    relations: List[PathVec] = []
    for source in quiver.vertices:
        targets = {}
        for path in quiver.paths_from(source, 2):
            targets.setdefault(path.target, []).append(path)
        for target, paths in targets.items():
            rows = by_pair.get((target, source), [])
            columns = []
            for path in paths:
                column = {}
                for k, rel in enumerate(rows):
                    c = {p.vertices: c for p, c in zip(rel.paths, rel.coeffs)}.get(path.vertices, 0)
                    if c:
                        column[k] = Fraction(c)
                columns.append(column)
            for vec in nullspace(columns):
                reversed_paths = tuple(Path(tuple(reversed(p.vertices)), tuple(reversed(p.labels))) for p in paths)
                coeffs = tuple(vec.get(k, Fraction(0)) for k in range(len(paths)))
                relations.append(PathVec(reversed_paths, coeffs))
    return QuadraticAlgebra(opposite, relations, f"{algebra.name}!" if algebra.name else "")


def numerical_koszulity(algebra: QuadraticAlgebra, max_degree: Optional[int] = None) -> bool:
    """Whether H_A(t) times H_{A!}(-t), transposed, is the identity up to max_degree.

    Args:
        algebra: Finite quadratic algebra
        max_degree: Truncation degree, default longest path plus KOSZUL_EXTRA_DEGREES
    """
    if max_degree is None:
        max_degree = _Truncation(algebra).longest() + KOSZUL_EXTRA_DEGREES
    h_a = graded_dims(algebra, max_degree)
    h_dual = graded_dims(quadratic_dual(algebra), max_degree)
    vertices = algebra.quiver.vertices
    for x in vertices:
        for y in vertices:
            product = [0] * (max_degree + 1)
            for k in vertices:
                a = h_a.entry(x, k)
                b = h_dual.entry(y, k)
                for i in range(max_degree + 1):
                    for j in range(max_degree + 1 - i):
                        product[i + j] += a[i] * b[j] * (-1 if j % 2 else 1)
            expected = [int(x == y)] + [0] * max_degree
            if product != expected:
                logger.info("Koszul identity fails at (%s, %s): %s", x, y, product)
                return False
    return True


# Projective resolutions


class _Resolver:
    """Minimal projective resolutions of vertex simples over a finite algebra."""

    def __init__(self, algebra: QuadraticAlgebra, cap: int):
        self.trunc = _Truncation(algebra)
        if not nx.is_directed_acyclic_graph(algebra.quiver.to_networkx()):
            raise LieQuiverError(
                LieQuiverErrorType.INVALID_INPUT,
                "Global dimension needs a finite-dimensional algebra (acyclic quiver)"
            )
        self.max_length = self.trunc.longest()
        self.cap = cap

    def free_basis(self, gens: List[int]) -> List[Tuple[Tuple[int, IndexPath], int, int]]:
        """Basis (key, vertex, degree) of the free module on the given vertices."""
        out = []
        for k, y in enumerate(gens):
            for x in range(self.trunc.size):
                for d in range(self.max_length + 1):
                    if d == 0:
                        if x == y:
                            out.append(((k, (y,)), x, 0))
                        continue
                    for path in self.trunc.info(x, y, d)[1]:
                        out.append(((k, path), x, d))
        return out

    def left_arrow(self, target: int, key: Tuple[int, IndexPath], gens: List[int]) -> Vector:
        k, path = key
        longer = (target,) + path
        reduced = self.trunc.normal_form(target, gens[k], len(longer) - 1, {longer: Fraction(1)})
        return {(k, p): c for p, c in reduced.items()}

    def apply_arrow(self, target: int, vec: Vector, gens: List[int]) -> Vector:
        out: Vector = {}
        for key, c in vec.items():
            for k, v in self.left_arrow(target, key, gens).items():
                add_into(out, k, c * v)
        return out

    def projective_dimension(self, start: int) -> int:
        gens = [start]
        module = [({key: Fraction(1)}, x) for key, x, d in self.free_basis(gens) if d > 0]
        steps = 0
        while module:
            steps += 1
            if steps > self.cap:
                raise LieQuiverError(
                    LieQuiverErrorType.CAP_EXCEEDED,
                    f"Resolution of the simple at vertex {start} passes {self.cap} steps"
                )
            new_gens: List[int] = []
            gen_vecs: List[Vector] = []
            by_vertex: Dict[int, List[Vector]] = {}
            for vec, x in module:
                by_vertex.setdefault(x, []).append(vec)
            for x, members in by_vertex.items():
                radical = Echelon()
                for vec, y in module:
                    if x in self.trunc.out[y]:
                        radical.add(self.apply_arrow(x, vec, gens))
                for vec in members:
                    independent, _ = radical.add(vec)
                    if independent:
                        new_gens.append(x)
                        gen_vecs.append(vec)
            kernel = []
            by_target: Dict[int, List[Tuple[int, IndexPath]]] = {}
            for key, x, _ in self.free_basis(new_gens):
                by_target.setdefault(x, []).append(key)
            for x, keys in by_target.items():
                ech = Echelon()
                for n, (k, path) in enumerate(keys):
                    image = gen_vecs[k]
                    for step in range(len(path) - 1, 0, -1):
                        image = self.apply_arrow(path[step - 1], image, gens)
                    independent, comb = ech.add(image, {n: Fraction(1)})
                    if not independent:
                        kernel.append(({keys[m]: c for m, c in comb.items()}, x))
            gens = new_gens
            module = kernel
        return steps


def projective_dimensions(algebra: QuadraticAlgebra, cap: int = RESOLUTION_LENGTH_CAP) -> Dict:
    """Projective dimension of the simple module at every vertex."""
    resolver = _Resolver(algebra, cap)
    vertices = algebra.quiver.vertices
    return {v: resolver.projective_dimension(k) for k, v in enumerate(vertices)}


def global_dimension(algebra: QuadraticAlgebra, cap: int = RESOLUTION_LENGTH_CAP) -> int:
    dims = projective_dimensions(algebra, cap)
    return max(dims.values()) if dims else 0


# Algebras attached to Delta_Psi


def _delta_algebra(psi: PsiSet, vertices, name: str, normalize: bool, check_closed: bool = True) -> QuadraticAlgebra:
    service = QuiverService(psi)
    quiver = service.build_delta(vertices, check_closed)
    present = set(quiver.vertices)
    relations: List[PathVec] = []
    for lam in quiver.vertices:
        for eta in service.sums():
            top = lam + service.system.weight_of(eta)
            if top not in present:
                continue
            relations.extend(relation_space(psi, lam, eta, normalize).basis)
    logger.info("%s: %d vertices, %d arrows, %d relations", name, len(quiver.vertices), len(quiver.arrows), len(relations))
    return QuadraticAlgebra(quiver, relations, name)


def interval_algebra(psi: PsiSet, mu: Weight, nu: Weight, normalize: bool = NORMALIZE_PATHS) -> QuadraticAlgebra:
    """S_Psi on the interval [mu, nu].

    Raises:
        LieQuiverError: If mu is not below nu
    """
    service = QuiverService(psi)
    if not service.leq_psi(mu, nu):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{mu} is not below {nu}")
    return _delta_algebra(psi, service.interval(mu, nu), f"[{mu},{nu}]", normalize)


def down_set_algebra(psi: PsiSet, lam: Weight, normalize: bool = NORMALIZE_PATHS) -> QuadraticAlgebra:
    return _delta_algebra(psi, QuiverService(psi).down_set(lam), f"<={lam}", normalize)


def up_set_algebra(psi: PsiSet, lam: Weight, depth: int, normalize: bool = NORMALIZE_PATHS) -> QuadraticAlgebra:
    return _delta_algebra(psi, QuiverService(psi).up_set(lam, depth), f">={lam}/{depth}", normalize, check_closed=False)


def component_algebra(psi: PsiSet, lam: Weight, window: Weight, normalize: bool = NORMALIZE_PATHS) -> QuadraticAlgebra:
    """S_Psi on the full subquiver of the window-truncated component of lam."""
    vertices = QuiverService(psi).component(lam, window)
    return _delta_algebra(psi, vertices, f"component of {lam}", normalize, check_closed=False)


def path_algebra(quiver: QuiverGraph, relations: Sequence[Dict[Tuple, Fraction]] = (), name: str = "") -> QuadraticAlgebra:
    """Quadratic algebra from a quiver and relations given as {vertex path: coefficient} maps."""
    built = []
    for rel in relations:
        items = list(dict(rel).items())
        built.append(PathVec(tuple(Path(tuple(p)) for p, _ in items), tuple(c for _, c in items)))
    return QuadraticAlgebra(quiver, built, name)


def perturb(algebra: QuadraticAlgebra, index: int, factor, position: Optional[int] = None) -> QuadraticAlgebra:
    """Copy of the algebra with one relation coefficient scaled.

    Args:
        index: Relation to change
        factor: Scalar applied to the coefficient
        position: Path coordinate to scale, default the first nonzero one
    """
    if not 0 <= index < len(algebra.relations):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"No relation {index}")
    rel = algebra.relations[index]
    if position is None:
        position = next(k for k, c in enumerate(rel.coeffs) if c)
    coeffs = list(rel.coeffs)
    coeffs[position] *= factor
    relations = list(algebra.relations)
    relations[index] = PathVec(rel.paths, tuple(coeffs))
    return QuadraticAlgebra(algebra.quiver, relations, f"{algebra.name}~")


__all__ = [
    "graded_dims", "quadratic_dual", "numerical_koszulity", "projective_dimensions",
    "global_dimension", "interval_algebra", "down_set_algebra", "up_set_algebra", "component_algebra",
    "path_algebra", "perturb",
]
