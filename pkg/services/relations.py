"""Closed-form relation spaces, genericity and Koszul-dual complements."""

import itertools
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from config.settings import NORMALIZE_PATHS
from models import (
    GammaParameters, LieQuiverError, LieQuiverErrorType, LinearForm, Path, PathVec, PsiSet,
    RelationSpace, Root, TensorVec, Weight, XiParameters,
)
from .adapted import pi_adapted, z_norm
from .linalg import dense_nullspace, dense_rank
from .quiver import QuiverService
from .rootdata import h_form, h_value, is_regular

logger = logging.getLogger(__name__)

Label = Tuple[str, int, int]
Coefficients = Dict[Label, Fraction]
HValue = Callable[[int, int], int]


def pi_closed_form(psi: PsiSet, lam: Weight, bottom: Root, top: Root) -> TensorVec:
    """Pi_lam(bottom, top) for the path lam <- lam + bottom <- lam + bottom + top.

    Raises:
        LieQuiverError: If either arrow is missing or the roots are of the wrong kind
    """
    kind = psi.lie_type.root_kind
    for root in (bottom, top):
        if root.kind != kind:
            raise LieQuiverError(
                LieQuiverErrorType.UNSUPPORTED_CASE,
                f"No adapted family for {root} in {psi.lie_type}"
            )
    quiver = QuiverService(psi)
    middle = lam + bottom.weight
    if not quiver.has_arrow(lam, bottom) or not quiver.has_arrow(middle, top):
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"No path {lam} <- {middle} <- {middle + top.weight}"
        )
    return pi_adapted(psi.lie_type, lam, bottom, top)


# Case dispatch


def _pairs(psi: PsiSet, eta: Tuple[int, ...]) -> List[Tuple[Root, Root]]:
    pairs = []
    for first in psi:
        second = psi.find(tuple(e - b for e, b in zip(eta, first.simple)))
        if second is not None:
            pairs.append((first, second))
    return pairs


def _clean(terms: Sequence[Tuple[Label, int]]) -> Coefficients:
    out: Coefficients = {}
    for label, c in terms:
        c = Fraction(c)
        if c:
            out[label] = out.get(label, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


def _single(present: Set[Label]) -> List[Coefficients]:
    return [{next(iter(present)): Fraction(1)}]


def _relations_a(pairs, lam: Weight, paths: List[Path]) -> Tuple[str, List[Coefficients]]:
    t = len(paths)
    roots = sorted({p[0] for p in pairs}, key=lambda r: r.sort_key)
    present = {p.labels[0].label for p in paths}
    if len(pairs) == 2:
        first, second = roots
        if first.i == second.i:
            lo, hi = (first, second) if first.j < second.j else (second, first)
            case = "common-head"
        else:
            lo, hi = (first, second) if first.i > second.i else (second, first)
            case = "common-tail"
        if t == 2:
            return f"{case}/t2", [_clean([(lo.label, 1), (hi.label, -1)])]
        return f"{case}/t1", _single(present)
    if len(pairs) == 4:
        i, j = sorted({r.i for r in roots})
        k, m = sorted({r.j for r in roots})
        x, y = h_value(lam, i, j - 1), h_value(lam, k + 1, m)

        def a(p: int, q: int) -> Label:
            return ("a", p, q)

        if t == 4 and x != y:
            return "crossing/t4", [
                _clean([(a(i, k), (x + 1) * (y + 2)), (a(j, m), -(x + 2) * (y + 1)), (a(i, m), -(x - y))]),
                _clean([(a(i, k), x * (y + 1)), (a(j, m), -(x + 1) * y), (a(j, k), -(x - y))]),
            ]
        if t == 4:
            return "crossing/t4-degenerate", [
                _clean([(a(i, k), 1), (a(j, m), -1)]),
                _clean([(a(i, k), 2), (a(i, m), x), (a(j, k), -(x + 2))]),
            ]
        if t == 2:
            if a(i, k) in present:
                return "crossing/t2", [_clean([(a(i, m), y), (a(i, k), y + 2)])]
            return "crossing/t2", [_clean([(a(i, m), x), (a(j, m), x + 2)])]
        if t == 1:
            return "crossing/t1", []
    raise LieQuiverError(
        LieQuiverErrorType.UNSUPPORTED_CASE,
        f"No closed form for {len(pairs)} decompositions and {t} paths at {lam}"
    )


def _relations_c(labels: Set[Label], present: Set[Label], hv: HValue) -> Tuple[str, List[Coefficients]]:
    """Type C rows over first-step labels (kind, r, s); hv(r, s) is mu(H_{r, s - 1})."""
    t = len(present)
    count = len(labels)
    idx = sorted({l[1] for l in labels} | {l[2] for l in labels})

    def b(p: int, q: int) -> Label:
        return ("b", min(p, q), max(p, q))

    if count == 2:
        i, j = idx
        if b(i, i) in labels:
            if t == 2:
                return "diag-first/t2", [_clean([(b(i, i), 1), (b(i, j), -1)])]
            return "diag-first/t1", _single(present)
        if t == 2:
            return "diag-last/t2", [_clean([(b(i, j), 1), (b(j, j), -1)])]
        return "diag-last/t1", _single(present)
    if count == 3:
        i, j = idx
        x = hv(i, j)
        if t == 3:
            return "doubled-root/t3", [_clean([(b(i, i), x * x), (b(j, j), -(x + 2) ** 2), (b(i, j), x + 1)])]
        if t == 2:
            return "doubled-root/t2", [_clean([(b(i, i), 1), (b(i, j), 2)])]
        return "doubled-root/t1", []
    if count == 4:
        i, j, k = idx
        x, y = hv(i, j), hv(j, k)
        if b(i, i) in labels:
            if t == 4:
                return "triple-first/t4", [
                    _clean([(b(i, i), 2 * (1 + y)), (b(i, j), -(3 + x) * (x + y + 3)), (b(i, k), (2 + x) * (x + y + 4))]),
                    _clean([(b(i, i), x * (x + y + 2)), (b(i, j), 2 * x + y + 4), (b(j, k), -(2 + x) * (x + y + 4))]),
                ]
            if t == 2:
                return "triple-first/t2", [_clean([(b(i, i), x + y + 1), (b(i, k), x + y + 4)])]
            return "triple-first/t1", _single(present)
        if b(j, j) in labels:
            if t == 4:
                return "triple-middle/t4", [
                    _clean([(b(i, k), (x - 1) * (2 + y)), (b(j, j), -(1 + x) * y), (b(j, k), -(x - y - 1))]),
                    _clean([(b(i, j), (1 + x) * y), (b(i, k), 2 * (2 + x + y)), (b(j, k), -(2 + x) * (1 + y))]),
                ]
            if t == 2:
                if b(j, j) in present:
                    return "triple-middle/t2", [_clean([(b(i, j), x - 1), (b(j, j), x + 2)])]
                return "triple-middle/t2", [_clean([(b(i, j), (1 + x) * y), (b(i, k), 2 * (2 + x + y))])]
            return "triple-middle/t1", []
        if t == 4:
            return "triple-last/t4", [
                _clean([(b(j, k), (1 + y) * (3 + x + y)), (b(i, k), -(2 + y) * (2 + x + y)), (b(i, j), 2 * (1 + x))]),
                _clean([(b(k, k), 2 * (1 + x)), (b(j, k), (y - 1) * (x + y + 1)), (b(i, k), -y * (x + y))]),
            ]
        if t == 2:
            return "triple-last/t2", [_clean([(b(i, j), x + 1), (b(j, k), x + 4)])]
        return "triple-last/t1", _single(present)
    if count == 6:
        return _relations_quadruple(idx, hv, t)
    raise LieQuiverError(
        LieQuiverErrorType.UNSUPPORTED_CASE,
        f"No closed form for {count} decompositions and {t} paths"
    )


def _relations_quadruple(idx: List[int], hv: HValue, t: int) -> Tuple[str, List[Coefficients]]:
    i, j, k, l = idx
    x, y, z = hv(i, j), hv(j, k), hv(k, l)
    # the p2 coordinate carries this extra factor in every relation
    f2 = Fraction(x + y + 2, x + y + 1)
    p1, p2, p3 = ("b", k, l), ("b", j, l), ("b", j, k)
    p4, p5, p6 = ("b", i, l), ("b", i, k), ("b", i, j)

    def rel(terms) -> Coefficients:
        return _clean([(p, c * f2 if p == p2 else c) for p, c in terms])

    if t == 6:
        return "quadruple/t6", [
            rel([
                (p1, (x + 1) * (y + 2) * (x - z) * (z + 1)),
                (p2, y * (x + y + 1) * (x - z) * (y + z + 2)),
                (p3, z * (x + 1) * (y + 1) * (x + y + 2) * (y + z + 1)),
                (p4, -x * (y + 1) * (z + 1) * (x + y + 1) * (y + z + 2)),
            ]),
            rel([
                (p1, (x + 1) * (z + 1) * (x + y + 2) * (x + z + 2) * (y + z + 3)),
                (p2, y * (x + 1) * (z + 2) * (x + y + 1) * (y + z + 2) * (x + y + z + 3)),
                (p3, -(y + 1) * (x + y + 2) * (x + z + 2) * (y + z + 1) * (x + y + z + 3)),
                (p5, -x * (y + 1) * (z + 1) * (x + y + 2) * (y + z + 2) * (x + y + z + 2)),
            ]),
            rel([
                (p1, (y + 2) * (z + 1) * (x + y + 2) * (y + z + 3) * (x + y + z + 3)),
                (p2, -(z + 2) * (x + y + 1) * (y + z + 2) * (x + 2 * y + z + 4)),
                (p3, -z * (y + 1) * (x + y + z + 3) * (x + 2 * y + z + 4)),
                (p6, -(y + 1) * (z + 1) * (x + y + 1) * (y + z + 2) * (x + y + z + 2)),
            ]),
        ]
    if t == 2:
        if y == 0:
            return "quadruple/t2", [rel([(p2, (z + 2) * (x + z + 4)), (p6, (z + 1) * (x + z + 2))])]
        if x == 0:
            return "quadruple/t2", [rel([(p4, (y + 1) * (z + 2) * (y + z + 3)), (p5, (y + 2) * z * (y + z + 2))])]
        return "quadruple/t2", [rel([(p3, (x + 2) * (y + 1) * (x + y + 3)), (p5, x * (y + 2) * (x + y + 2))])]
    if t == 1:
        return "quadruple/t1", []
    raise LieQuiverError(LieQuiverErrorType.UNSUPPORTED_CASE, f"No closed form for 6 decompositions and {t} paths")


def _path_norm(psi: PsiSet, lam: Weight, path: Path) -> Fraction:
    bottom, top = path.labels
    return z_norm(psi, bottom, lam) * z_norm(psi, top, lam + bottom.weight)


def relation_space(psi: PsiSet, lam: Weight, eta: Sequence[int], normalize: bool = NORMALIZE_PATHS) -> RelationSpace:
    """The relations between lam and lam + eta from the closed-form case list.

    Args:
        psi: Extremal set of type A or C
        lam: Target vertex
        eta: Element of Psi + Psi in simple coordinates
        normalize: Normalised path coordinates; otherwise raw Pi coordinates

    Returns:
        RelationSpace with basis vectors over the paths sorted by first step

    Raises:
        LieQuiverError: If eta is not in Psi + Psi or the configuration has no closed form
    """
    eta = tuple(eta)
    paths = QuiverService(psi).paths2(lam, eta)
    pairs = _pairs(psi, eta)
    space = RelationSpace(lam, eta, paths)
    if not paths:
        space.case = "empty"
        space.generic = True
        return space
    if len(pairs) == 1:
        space.case = "self"
        space.generic = True
        return space
    if psi.lie_type.family == "A":
        case, coeffs = _relations_a(pairs, lam, paths)
    else:
        case, coeffs = _relations_c(
            {p[0].label for p in pairs}, {p.labels[0].label for p in paths},
            lambda r, s: h_value(lam, r, s - 1),
        )
    space.case = case
    for terms in coeffs:
        values = [terms.get(p.labels[0].label, Fraction(0)) for p in paths]
        if not normalize:
            values = [c * _path_norm(psi, lam, p) for c, p in zip(values, paths)]
        space.basis.append(PathVec(tuple(paths), tuple(values)))
    space.generic = is_generic(space.basis, len(paths))
    logger.debug("Relations at %s + %s: case %s, %d of %d paths", lam, eta, case, space.dimension, space.t)
    return space


def is_generic(vectors: Sequence[PathVec], t: int) -> bool:
    """Whether span(vectors) meets every coordinate subspace in the expected dimension.

    Raises:
        LieQuiverError: If the vectors are dependent
    """
    rows = [list(v.coeffs) for v in vectors]
    k = len(rows)
    if k and dense_rank(rows) != k:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "Genericity needs independent vectors")
    if k == 0:
        return True
    for size in range(1, t + 1):
        for subset in itertools.combinations(range(t), size):
            outside = [c for c in range(t) if c not in subset]
            projected = [[row[c] for c in outside] for row in rows]
            meet = k - (dense_rank(projected) if outside else 0)
            if meet != max(0, size + k - t):
                return False
    return True


def n_eta(psi: PsiSet, eta: Sequence[int]) -> Optional[LinearForm]:
    """The affine form cutting out the non-generic weights for eta, or None when there are none.

    Raises:
        LieQuiverError: If Psi is not regular
    """
    if not is_regular(psi):
        raise LieQuiverError(LieQuiverErrorType.NOT_REGULAR, f"{psi} is not regular")
    eta = tuple(eta)
    pairs = _pairs(psi, eta)
    if not pairs:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{eta} is not in Psi + Psi")
    rank = psi.lie_type.rank
    roots = {p[0] for p in pairs}
    if psi.lie_type.family == "A":
        if len(pairs) != 4:
            return None
        i, j = sorted({r.i for r in roots})
        k, m = sorted({r.j for r in roots})
        return h_form(rank, i, j - 1) - h_form(rank, k + 1, m)
    idx = sorted({r.i for r in roots} | {r.j for r in roots})
    if len(pairs) == 4 and ("b", idx[1], idx[1]) in {r.label for r in roots}:
        i, j, k = idx
        return h_form(rank, i, j - 1) - h_form(rank, j, k - 1) - 1
    if len(pairs) == 6:
        i, j, k, l = idx
        return h_form(rank, i, j - 1) - h_form(rank, k, l - 1)
    return None


def koszul_dual_space(space: RelationSpace) -> List[PathVec]:
    """Orthogonal complement of the relations under the path pairing."""
    t = space.t
    if t == 0:
        return []
    complement = dense_nullspace(space.matrix(), t)
    return [PathVec(tuple(space.paths), vec) for vec in complement]


# Lattice families


Step = Tuple[int, int]
LatticeRows = List[Dict[Step, Fraction]]


def _shift(lam: Weight, lo: int, hi: int) -> int:
    """Sum of lam(h_t) for lo < t < hi - 1, plus hi - lo - 1."""
    return sum(lam.h(t) for t in range(lo + 1, hi - 1)) + hi - lo - 1


def gamma_parameters(psi: PsiSet, lam: Weight) -> GammaParameters:
    """Box sides, offset and shifts of the component of lam for a product-shaped Psi.

    Raises:
        LieQuiverError: If Psi is not a regular set {alpha_(i_p,j_q)}
    """
    quiver = QuiverService(psi)
    starts, ends = quiver.a_shape()
    m, n, a = quiver.component_signature_a(lam)
    z_minus = tuple(_shift(lam, lo, hi) for lo, hi in zip(starts, starts[1:]))
    z_plus = tuple(_shift(lam, lo + 1, hi + 1) for lo, hi in zip(ends, ends[1:]))
    return GammaParameters(m, n, a, z_minus, z_plus)


def xi_parameters(psi: PsiSet, lam: Weight) -> XiParameters:
    """Box sides, parity and shifts zeta of the component of lam for Psi(i_1, ..., i_k).

    Raises:
        LieQuiverError: If Psi is not regular or lam is isolated
    """
    quiver = QuiverService(psi)
    indices = quiver.c_indices()
    m, a = quiver.component_signature_c(lam)
    zeta = tuple(_shift(lam, lo, hi) for lo, hi in zip(indices, indices[1:]))
    return XiParameters(m, a, zeta)


def _bump(x: Tuple[int, ...], *positions: int) -> Tuple[int, ...]:
    out = list(x)
    for p in positions:
        out[p] += 1
    return tuple(out)


def _lattice_vecs(paths: Dict[Step, Path], rows: LatticeRows) -> List[PathVec]:
    firsts = sorted(paths)
    ordered = tuple(paths[f] for f in firsts)
    return [PathVec(ordered, tuple(row.get(f, Fraction(0)) for f in firsts)) for row in rows]


def gamma_relations(params: GammaParameters, x: Sequence[int], y: Sequence[int]) -> List[PathVec]:
    """Relations of Gamma_a(m, n) with target (x, y).

    Paths have lattice points as vertices and index pairs (p, q) as labels,
    the step (x, y) <- (x + e_p, y + e_q) being alpha_(i_p,j_q).

    Raises:
        LieQuiverError: If (x, y) is not a vertex
    """
    x, y = tuple(x), tuple(y)
    if not params.contains(x, y):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{(x, y)} is not a vertex of Gamma_{params.a}(m, n)")
    r, s = len(params.m), len(params.n)

    def path(first: Step, second: Step) -> Path:
        middle = (_bump(x, first[0]), _bump(y, first[1]))
        top = (_bump(middle[0], second[0]), _bump(middle[1], second[1]))
        return Path(((x, y), middle, top), (first, second))

    def inside(first: Step, second: Step) -> bool:
        return params.contains(_bump(x, first[0], second[0]), _bump(y, first[1], second[1]))

    out: List[PathVec] = []
    for p in range(r):
        for q, q2 in itertools.combinations(range(s), 2):
            if inside((p, q), (p, q2)):
                paths = {(p, q): path((p, q), (p, q2)), (p, q2): path((p, q2), (p, q))}
                out += _lattice_vecs(paths, [{(p, q): Fraction(1), (p, q2): Fraction(-1)}])
    for p, p2 in itertools.combinations(range(r), 2):
        for q in range(s):
            if inside((p, q), (p2, q)):
                paths = {(p, q): path((p, q), (p2, q)), (p2, q): path((p2, q), (p, q))}
                out += _lattice_vecs(paths, [{(p, q): Fraction(1), (p2, q): Fraction(-1)}])
    for p, p2 in itertools.combinations(range(r), 2):
        for q, q2 in itertools.combinations(range(s), 2):
            if not inside((p, q), (p2, q2)):
                continue
            big_m, big_n = params.h_minus(x, p, p2), params.h_plus(y, q, q2)
            paths = {
                (p, q): path((p, q), (p2, q2)), (p2, q2): path((p2, q2), (p, q)),
                (p, q2): path((p, q2), (p2, q)), (p2, q): path((p2, q), (p, q2)),
            }
            if big_m != big_n:
                rows = [
                    {(p, q): (big_m + 1) * (big_n + 2), (p2, q2): -(big_m + 2) * (big_n + 1), (p, q2): -(big_m - big_n)},
                    {(p, q): big_m * (big_n + 1), (p2, q2): -(big_m + 1) * big_n, (p2, q): -(big_m - big_n)},
                ]
            else:
                rows = [
                    {(p, q): 1, (p2, q2): -1},
                    {(p, q): 2, (p, q2): big_m, (p2, q): -(big_m + 2)},
                ]
            out += _lattice_vecs(paths, [{k: Fraction(v) for k, v in row.items()} for row in rows])
    return out


def xi_relations(params: XiParameters, x: Sequence[int]) -> List[PathVec]:
    """Relations of Xi_a(m) with target x.

    Labels are index pairs (r, s) with r <= s, the step x <- x + e_r + e_s
    being beta_(i_r,i_s).

    Raises:
        LieQuiverError: If x is not a vertex
    """
    x = tuple(x)
    if not params.contains(x):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{x} is not a vertex of Xi_{params.a}(m)")
    k = len(params.m)
    steps = [(r, s) for r in range(k) for s in range(r, k)]
    groups: Dict[Tuple[int, ...], Dict[Step, Path]] = {}
    for first, second in itertools.product(steps, repeat=2):
        middle = _bump(x, *first)
        top = _bump(middle, *second)
        if params.contains(top):
            groups.setdefault(top, {})[first] = Path((x, middle, top), (first, second))

    def hv(r: int, s: int) -> int:
        return params.h_value(x, r, s)

    out: List[PathVec] = []
    for top in sorted(groups):
        paths = groups[top]
        if len(paths) < 2:
            continue
        labels = {("b",) + first for first in paths}
        _, coeffs = _relations_c(labels, labels, hv)
        out += _lattice_vecs(paths, [{label[1:]: c for label, c in row.items()} for row in coeffs])
    return out


def family_relations(psi: PsiSet, lam: Weight, window: Weight) -> List[PathVec]:
    """Relations on the component of lam, computed on the lattice from its parameters.

    Type A components become Gamma_a(m, n) through signature_coords_a, type C
    components Xi_a(m) through signature_coords_c. Relations with a vertex
    outside the window are dropped.

    Raises:
        LieQuiverError: If Psi has neither lattice shape
    """
    quiver = QuiverService(psi)
    vertices = quiver.component(lam, window)
    if psi.lie_type.family == "A":
        gamma = gamma_parameters(psi, lam)
        points = {quiver.signature_coords_a(mu) for mu in vertices}

        def relations_at(point) -> List[PathVec]:
            return gamma_relations(gamma, *point)
    else:
        xi = xi_parameters(psi, lam)
        points = {quiver.signature_coords_c(mu) for mu in vertices}

        def relations_at(point) -> List[PathVec]:
            return xi_relations(xi, point)

    out = [
        vec for point in sorted(points) for vec in relations_at(point)
        if all(v in points for path in vec.paths for v in path.vertices)
    ]
    logger.info("Family relations for %s around %s: %d", psi, lam, len(out))
    return out


def to_lattice(psi: PsiSet, vec: PathVec) -> PathVec:
    """Rewrite a relation of Delta_Psi with lattice points and index-pair labels."""
    quiver = QuiverService(psi)
    if psi.lie_type.family == "A":
        starts, ends = quiver.a_shape()
        translate = quiver.signature_coords_a

        def step(root: Root) -> Step:
            return starts.index(root.i), ends.index(root.j)
    else:
        indices = quiver.c_indices()
        translate = quiver.signature_coords_c

        def step(root: Root) -> Step:
            return indices.index(root.i), indices.index(root.j)

    paths = tuple(
        Path(tuple(translate(v) for v in p.vertices), tuple(step(root) for root in p.labels))
        for p in vec.paths
    )
    return PathVec(paths, vec.coeffs)


__all__ = [
    "pi_closed_form", "relation_space", "is_generic", "n_eta", "koszul_dual_space",
    "gamma_parameters", "xi_parameters", "gamma_relations", "xi_relations", "family_relations", "to_lattice",
]
