"""Brute-force verification layer.

Irreducible modules are cyclic submodules of tensor products of exterior
powers of the defining representation, generated by the product of the
highest weight vectors. All arithmetic is exact; every answer here is
recomputed from the matrix realisation and never from a closed formula.
"""

import logging
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from config.settings import MODULE_DIM_CAP, NORMALIZE_PATHS
from models import (
    FElement, FWord, LieQuiverError, LieQuiverErrorType, LieType, PathVec, PsiSet,
    RelationSpace, Root, TensorVec, Weight,
)
from .adapted import u_eval, x_minus_eval, z_norm
from .linalg import Echelon, add_into, nullspace
from .matrices import MatrixLieAlgebra, SparseMatrix, bracket, build_algebra, ratio
from .quiver import QuiverService
from .rootdata import h_value, root_system, weyl_dimension

logger = logging.getLogger(__name__)

Factor = Tuple[int, ...]
AmbientKey = Tuple[Factor, ...]
ModuleVector = Dict[AmbientKey, Fraction]
SimpleVec = Tuple[int, ...]


class BasisVector(NamedTuple):
    """A weight vector of a module and the f-word producing it from v_lambda."""
    vec: ModuleVector
    word: FWord


def _columns(x: SparseMatrix) -> Dict[int, List[Tuple[int, Fraction]]]:
    cols: Dict[int, List[Tuple[int, Fraction]]] = {}
    for (a, b), v in x.items():
        cols.setdefault(b, []).append((a, v))
    return cols


def _sort_sign(indices: List[int]) -> Tuple[Optional[Factor], int]:
    """Sort a wedge factor; (None, 0) when an index repeats."""
    if len(set(indices)) != len(indices):
        return None, 0
    inversions = sum(1 for p in range(len(indices)) for q in range(p + 1, len(indices)) if indices[p] > indices[q])
    return tuple(sorted(indices)), (-1 if inversions % 2 else 1)


class HWModule:
    """The irreducible module V(lam) inside a tensor product of wedge powers.

    Args:
        algebra: Matrix realisation acting on every wedge factor
        highest: Highest weight lam
        cap: Largest dimension allowed for the module
    """

    def __init__(self, algebra: MatrixLieAlgebra, highest: Weight, cap: int = MODULE_DIM_CAP):
        if highest.rank != algebra.rank or not highest.is_dominant():
            raise LieQuiverError(
                LieQuiverErrorType.INVALID_INPUT,
                f"{highest} is not a dominant weight of {algebra.lie_type}"
            )
        self.algebra = algebra
        self.highest = highest
        self.cap = cap
        self._e = [_columns(x) for x in algebra.e]
        self._f = [_columns(x) for x in algebra.f]
        factors = []
        for k, mult in enumerate(highest.coords, start=1):
            factors.extend([tuple(range(1, k + 1))] * mult)
        self.hw: ModuleVector = {tuple(factors): Fraction(1)}
        self._spaces: Dict[SimpleVec, List[BasisVector]] = {
            (0,) * algebra.rank: [BasisVector(self.hw, ())]
        }

    def _act(self, columns: Dict[int, List[Tuple[int, Fraction]]], vec: ModuleVector) -> ModuleVector:
        out: ModuleVector = {}
        for key, c in vec.items():
            for p, factor in enumerate(key):
                for t, b in enumerate(factor):
                    for a, v in columns.get(b, ()):
                        moved = list(factor)
                        moved[t] = a
                        ordered, sign = _sort_sign(moved)
                        if ordered is None:
                            continue
                        add_into(out, key[:p] + (ordered,) + key[p + 1:], c * v * sign)
        return out

    def act_e(self, i: int, vec: ModuleVector) -> ModuleVector:
        return self._act(self._e[i - 1], vec)

    def act_f(self, i: int, vec: ModuleVector) -> ModuleVector:
        return self._act(self._f[i - 1], vec)

    def apply_word(self, word: FWord, vec: Optional[ModuleVector] = None) -> ModuleVector:
        """f_{w_1} ... f_{w_k} applied to vec (default v_lam), last letter first."""
        vec = self.hw if vec is None else vec
        for letter in reversed(word):
            vec = self.act_f(letter, vec)
            if not vec:
                break
        return vec

    def apply(self, element: FElement, vec: Optional[ModuleVector] = None) -> ModuleVector:
        """An evaluated U(n^-) element applied to vec."""
        out: ModuleVector = {}
        for word, coeff in element:
            for k, v in self.apply_word(word, vec).items():
                add_into(out, k, coeff * v)
        return out

    def space(self, delta: Sequence[int]) -> List[BasisVector]:
        """Basis of the weight space V(lam)_{lam - delta}, delta in simple coordinates."""
        delta = tuple(delta)
        if delta in self._spaces:
            return self._spaces[delta]
        if any(d < 0 for d in delta):
            return []
        ech = Echelon()
        basis: List[BasisVector] = []
        for i, d in enumerate(delta, start=1):
            if d == 0:
                continue
            lower = delta[:i - 1] + (d - 1,) + delta[i:]
            for item in self.space(lower):
                vec = self.act_f(i, item.vec)
                independent, _ = ech.add(vec)
                if independent:
                    basis.append(BasisVector(vec, (i,) + item.word))
        self._spaces[delta] = basis
        return basis

    def weight_space_dim(self, delta: Sequence[int]) -> int:
        return len(self.space(delta))

    def multiplicities(self) -> Dict[SimpleVec, int]:
        """Dimensions of all nonzero weight spaces keyed by simple-coordinate depth.

        Raises:
            LieQuiverError: If the running total passes the cap
        """
        rank = self.algebra.rank
        frontier = [(0,) * rank]
        found: Dict[SimpleVec, int] = {}
        total = 0
        while frontier:
            delta = frontier.pop()
            if delta in found:
                continue
            size = self.weight_space_dim(delta)
            if size == 0:
                continue
            found[delta] = size
            total += size
            if total > self.cap:
                raise LieQuiverError(
                    LieQuiverErrorType.CAP_EXCEEDED,
                    f"V{self.highest} passes {self.cap} basis vectors"
                )
            for i in range(rank):
                frontier.append(delta[:i] + (delta[i] + 1,) + delta[i + 1:])
        return found

    def weight_multiplicities(self) -> Dict[Weight, int]:
        system = self.algebra.system
        return {self.highest - system.weight_of(delta): size for delta, size in self.multiplicities().items()}

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities().values())


def irreducible_module(lie_type: LieType, lam: Weight, cap: int = MODULE_DIM_CAP,
                       check_dimension: bool = False) -> HWModule:
    """Build V(lam), refusing modules larger than cap.

    Raises:
        LieQuiverError: If the Weyl dimension passes the cap, or the built
            module disagrees with it when check_dimension is set
    """
    expected = weyl_dimension(lie_type, lam)
    if expected > cap:
        raise LieQuiverError(
            LieQuiverErrorType.CAP_EXCEEDED,
            f"dim V{lam} = {expected} for {lie_type} passes the module cap {cap}"
        )
    module = HWModule(build_algebra(lie_type), lam, cap)
    if check_dimension:
        built = module.dimension
        if built != expected:
            raise LieQuiverError(
                LieQuiverErrorType.ORACLE_FAILURE,
                f"V{lam} for {lie_type} has dimension {built}, Weyl formula gives {expected}"
            )
    logger.debug("Built V%s for %s (Weyl dimension %d)", lam, lie_type, expected)
    return module


def fundamental_module(lie_type: LieType, k: int, cap: int = MODULE_DIM_CAP) -> HWModule:
    if not 1 <= k <= lie_type.rank:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"No fundamental weight {k} in {lie_type}")
    return irreducible_module(lie_type, Weight.fundamental(lie_type.rank, k), cap)


def weight_space_dim(lie_type: LieType, lam: Weight, eta: Sequence[int], cap: int = MODULE_DIM_CAP) -> int:
    """dim V(lam)_{lam - eta}."""
    return irreducible_module(lie_type, lam, cap).weight_space_dim(eta)


# Invariants in tensor powers of n^+


def _root_tuples(lie_type: LieType, eta: SimpleVec, degree: int) -> List[Tuple[Root, ...]]:
    roots = root_system(lie_type).positive_roots
    found: List[Tuple[Root, ...]] = []

    def grow(prefix: List[Root], rest: SimpleVec):
        if len(prefix) == degree:
            if not any(rest):
                found.append(tuple(prefix))
            return
        for root in roots:
            left = tuple(a - b for a, b in zip(rest, root.simple))
            if min(left) >= 0:
                prefix.append(root)
                grow(prefix, left)
                prefix.pop()

    grow([], eta)
    return found


def _e_on_root(algebra: MatrixLieAlgebra, i: int, root: Root) -> Optional[Tuple[Root, Fraction]]:
    shifted = list(root.simple)
    shifted[i - 1] += 1
    target = algebra.system.root_by_simple(shifted)
    if target is None:
        return None
    c = ratio(bracket(algebra.e[i - 1], algebra.root_vector(root)), algebra.root_vector(target))
    return (target, c) if c else None



def invariant_vectors(lie_type: LieType, lam: Weight, eta: Sequence[int], degree: int = 2) -> List[Dict[Tuple, Fraction]]:
    """Basis of T^degree(n^+)^lam_eta: kernel of every e_i^{lam(h_i)+1} on the eta part.

    Vectors are keyed by tuples of root labels.
    """
    algebra = build_algebra(lie_type)
    tuples = _root_tuples(lie_type, tuple(eta), degree)

    def act(i: int, vec: Dict[Tuple[Root, ...], Fraction]) -> Dict[Tuple[Root, ...], Fraction]:
        out: Dict[Tuple[Root, ...], Fraction] = {}
        for key, c in vec.items():
            for p, root in enumerate(key):
                image = _e_on_root(algebra, i, root)
                if image is not None:
                    add_into(out, key[:p] + (image[0],) + key[p + 1:], c * image[1])
        return out

    columns = []
    for key in tuples:
        column: Dict[Tuple, Fraction] = {}
        for i in range(1, lie_type.rank + 1):
            vec = {key: Fraction(1)}
            for _ in range(lam.coords[i - 1] + 1):
                vec = act(i, vec)
                if not vec:
                    break
            for k, v in vec.items():
                column[(i, tuple(r.label for r in k))] = v
        columns.append(column)
    kernel = nullspace(columns)
    return [
        {tuple(r.label for r in tuples[index]): c for index, c in vec.items()}
        for vec in kernel
    ]


# p-maps and Pi vectors


class PMapTerm(NamedTuple):
    """Coefficient of e_gamma (x) (basis vector of V(nu)) in p_{nu,beta}."""
    gamma: Root
    basis: BasisVector
    coeff: Fraction


def p_map(lie_type: LieType, nu: Weight, beta: Root, cap: int = MODULE_DIM_CAP) -> List[PMapTerm]:
    """The n^+-invariant vector of weight nu + beta in g (x) V(nu).

    Normalised so that e_beta (x) v_nu has coefficient one.

    Raises:
        LieQuiverError: If the invariant space is not one-dimensional
    """
    module = irreducible_module(lie_type, nu, cap)
    algebra = module.algebra
    system = algebra.system
    unknowns = []
    for gamma in system.positive_roots:
        if not gamma.dominates(beta):
            continue
        delta = tuple(g - b for g, b in zip(gamma.simple, beta.simple))
        for index, item in enumerate(module.space(delta)):
            unknowns.append((gamma, index, item))
    columns = []
    for gamma, _, item in unknowns:
        image: Dict[Tuple, Fraction] = {}
        for i in range(1, algebra.rank + 1):
            moved = _e_on_root(algebra, i, gamma)
            if moved is not None:
                target, c = moved
                for k, v in item.vec.items():
                    add_into(image, (i, target.label, k), c * v)
            for k, v in module.act_e(i, item.vec).items():
                add_into(image, (i, gamma.label, k), v)
        columns.append(image)
    kernel = nullspace(columns)
    if len(kernel) != 1:
        raise LieQuiverError(
            LieQuiverErrorType.ORACLE_FAILURE,
            f"(g (x) V{nu})^n+ of weight {nu + beta.weight} has dimension {len(kernel)}"
        )
    solution = kernel[0]
    lead_index = next(k for k, (gamma, index, _) in enumerate(unknowns) if gamma == beta and index == 0)
    lead = solution.get(lead_index)
    if not lead:
        raise LieQuiverError(LieQuiverErrorType.ORACLE_FAILURE, f"p-map at {nu} has no e_{beta} (x) v term")
    return [PMapTerm(unknowns[k][0], unknowns[k][2], c / lead) for k, c in sorted(solution.items())]


def pi_oracle(lie_type: LieType, lam: Weight, bottom: Root, top: Root, cap: int = MODULE_DIM_CAP) -> TensorVec:
    """Pi_lam(bottom, top) from the p-maps, top applied first.

    Args:
        bottom: Root of the arrow lam <- lam + bottom
        top: Root of the arrow lam + bottom <- lam + bottom + top
    """
    algebra = build_algebra(lie_type)
    eta = tuple(a + b for a, b in zip(bottom.simple, top.simple))
    base = algebra.root_vector(bottom)
    out = TensorVec()
    for term in p_map(lie_type, lam + bottom.weight, top, cap):
        image = algebra.ad_f_word(term.basis.word, base)
        if not image:
            continue
        rest = tuple(e - g for e, g in zip(eta, term.gamma.simple))
        root, c = algebra.root_coefficient(image, rest)
        out.add_term(term.gamma, root, c * term.coeff)
    return out


def relation_space_oracle(psi: PsiSet, lam: Weight, eta: Sequence[int], normalize: bool = NORMALIZE_PATHS,
                          cap: int = MODULE_DIM_CAP) -> RelationSpace:
    """Relations between lam and lam + eta solved directly from oracle Pi vectors.

    Each basis vector is normalised to have its first nonzero entry equal to one.
    """
    quiver = QuiverService(psi)
    paths = quiver.paths2(lam, eta)
    space = RelationSpace(lam, tuple(eta), paths, case="oracle")
    if not paths:
        return space
    pis = []
    for path in paths:
        bottom, top = path.labels
        pis.append(pi_oracle(psi.lie_type, lam, bottom, top, cap))
    kernel = nullspace([p.symmetrized() for p in pis])
    for solution in kernel:
        coeffs = [solution.get(k, Fraction(0)) for k in range(len(paths))]
        if normalize:
            coeffs = [c * _path_norm(psi, lam, p) for c, p in zip(coeffs, paths)]
        lead = next(c for c in coeffs if c)
        space.basis.append(PathVec(tuple(paths), tuple(c / lead for c in coeffs)))
    logger.debug("Oracle relations at %s + %s: %d of %d paths", lam, tuple(eta), len(kernel), len(paths))
    return space


def _path_norm(psi: PsiSet, lam: Weight, path) -> Fraction:
    """Factor turning a Pi coordinate into a normalised path coordinate."""
    bottom, top = path.labels
    return Fraction(1) / (z_norm(psi, bottom, lam) * z_norm(psi, top, lam + bottom.weight))


# Adapted family checks


def verify_adapted(psi: PsiSet, beta: Root, lam: Weight, cap: int = MODULE_DIM_CAP) -> bool:
    """Check that sum_gamma e_gamma (x) u_{beta,gamma}(lam) v_lam is a nonzero n^+-invariant.

    Raises:
        LieQuiverError: If there is no arrow lam <- lam + beta
    """
    if not QuiverService(psi).has_arrow(lam, beta):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"No arrow {lam} <- {lam + beta.weight}")
    lie_type = psi.lie_type
    module = irreducible_module(lie_type, lam, cap)
    algebra = module.algebra
    terms = []
    for gamma in root_system(lie_type).above(beta):
        terms.append((gamma, module.apply(u_eval(lie_type, beta, gamma, lam))))
    if not any(vec for _, vec in terms):
        logger.warning("Adapted vector for %s at %s vanishes", beta, lam)
        return False
    for i in range(1, lie_type.rank + 1):
        image: Dict[Tuple, Fraction] = {}
        for gamma, vec in terms:
            x = algebra.root_vector(gamma)
            moved = bracket(algebra.e[i - 1], x)
            raised = module.act_e(i, vec)
            for mk, mv in moved.items():
                for k, v in vec.items():
                    add_into(image, (mk, k), mv * v)
            for mk, mv in x.items():
                for k, v in raised.items():
                    add_into(image, (mk, k), mv * v)
        if image:
            logger.info("e_%d does not kill the adapted vector for %s at %s", i, beta, lam)
            return False
    return True


def e_action_identity(lie_type: LieType, i: int, j: int, lam: Weight, cap: int = MODULE_DIM_CAP) -> bool:
    """Check e_r X^-_{i,j}(lam) v_lam = d_{r,i} lam(H_{i,j}) X^-_{i+1,j}(lam) v_lam for every r."""
    if not 1 <= i <= j <= lie_type.rank:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"X^-({i},{j}) needs 1 <= i <= j <= {lie_type.rank}")
    module = irreducible_module(lie_type, lam, cap)
    vec = module.apply(x_minus_eval(i, j, j, lam))
    shifted = module.apply(x_minus_eval(i + 1, j, j, lam))
    scalar = h_value(lam, i, j)
    for r in range(1, lie_type.rank + 1):
        expected = {k: scalar * v for k, v in shifted.items()} if r == i else {}
        expected = {k: v for k, v in expected.items() if v}
        if module.act_e(r, vec) != expected:
            return False
    return True


def report(instance: dict, case: str, dims: dict, passed: bool, details: Optional[dict] = None) -> dict:
    """One verification report entry."""
    return {"instance": instance, "case": case, "dims": dims, "pass": passed, "details": details or {}}


__all__ = [
    "BasisVector", "HWModule", "irreducible_module", "fundamental_module", "weight_space_dim",
    "invariant_vectors", "PMapTerm", "p_map", "pi_oracle", "relation_space_oracle",
    "verify_adapted", "e_action_identity", "report", "build_algebra",
]
