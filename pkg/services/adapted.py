"""Adapted families of U(b) elements, evaluated at weights.

Everything here lives after evaluation at a weight: the elements X^+-, U and u
are returned as FElements whose coefficients are the values of their
H-polynomial coefficients at the given weight.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from models import (
    FElement, FWord, LieQuiverError, LieQuiverErrorType, LieType, PsiSet, Root,
    SigmaMap, TensorVec, Weight,
)
from .matrices import build_algebra
from .rootdata import h_value, root_system

logger = logging.getLogger(__name__)

MonomialArray = Tuple[Tuple[int, ...], ...]


@lru_cache(maxsize=None)
def _sigma_values(n: int) -> Tuple[Tuple[int, ...], ...]:
    found = []

    def grow(prefix: List[int], used: set):
        if len(prefix) == n:
            found.append(tuple(prefix))
            return
        for v in range(1, n + 1):
            if v in used:
                continue
            if prefix and v < prefix[-1] and v != prefix[-1] - 1:
                continue
            prefix.append(v)
            used.add(v)
            grow(prefix, used)
            prefix.pop()
            used.discard(v)

    grow([], set())
    return tuple(found)


def sigma_set(i: int, j: int) -> List[SigmaMap]:
    """All bijections {i..j} -> {1..j-i+1} whose descents drop by exactly one."""
    if i > j:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"Sigma({i},{j}) needs i <= j")
    return [SigmaMap(i, values) for values in _sigma_values(j - i + 1)]


def f_sigma(sigma: SigmaMap) -> FWord:
    return sigma.word


# Standard monomials


def standard_monomials(rank: int, eta: Sequence[int]) -> List[MonomialArray]:
    """Arrays a[j][i] (1 <= i <= j <= rank), nondecreasing in i, of weight -eta.

    The array stands for f_1^{a11} (f_2^{a22} f_1^{a21}) ... (f_l^{all} ... f_1^{al1}).
    """
    eta = list(eta)
    if len(eta) != rank or any(k < 0 for k in eta):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"{tuple(eta)} is not a nonnegative weight of rank {rank}")
    found: List[MonomialArray] = []
    remaining = eta[:]
    blocks: List[Tuple[int, ...]] = []

    def block(j: int):
        if j > rank:
            if not any(remaining):
                found.append(tuple(blocks))
            return
        row: List[int] = []

        def fill(i: int, low: int):
            if i > j:
                blocks.append(tuple(row))
                block(j + 1)
                blocks.pop()
                return
            for v in range(low, remaining[i - 1] + 1):
                row.append(v)
                remaining[i - 1] -= v
                fill(i + 1, v)
                remaining[i - 1] += v
                row.pop()

        fill(1, 0)

    block(1)
    return found


def _entry(array: MonomialArray, j: int, s: int) -> int:
    if s < 1 or s > j:
        return 0
    return array[j - 1][s - 1]


def is_lambda_standard(array: MonomialArray, lam: Weight) -> bool:
    rank = len(array)
    for j in range(1, rank + 1):
        for i in range(1, j + 1):
            bound = _entry(array, j, i) - _entry(array, j, i - 1)
            for r in range(j + 1, rank + 1):
                bound += 2 * _entry(array, r, i) - _entry(array, r, i - 1) - _entry(array, r, i + 1)
            if lam.coords[i - 1] < bound:
                return False
    return True


def lambda_standard(rank: int, eta: Sequence[int], lam: Weight) -> List[MonomialArray]:
    """Standard monomials of weight -eta that are lambda-standard."""
    return [a for a in standard_monomials(rank, eta) if is_lambda_standard(a, lam)]


def monomial_word(array: MonomialArray) -> FWord:
    word: List[int] = []
    for j, row in enumerate(array, start=1):
        for i in range(j, 0, -1):
            word.extend([i] * row[i - 1])
    return tuple(word)


# X elements


def x_minus_eval(i: int, j: int, k: int, lam: Weight) -> FElement:
    """X^-_{i,j,k} at lam: sum of f_sigma times prod_s (-1)^d (H_{s,k} + 1 - d)."""
    if i == j + 1:
        return FElement.unit()
    if i > j + 1:
        return FElement.zero()
    out = FElement.zero()
    for sigma in sigma_set(i, j):
        coeff = Fraction(1)
        for s in range(i + 1, j + 1):
            d = 1 if sigma.descends_at(s) else 0
            coeff *= (-1 if d else 1) * (h_value(lam, s, k) + 1 - d)
        out = out + FElement.word(sigma.word, coeff)
    return out


def x_plus_eval(i: int, j: int, l: int, lam: Weight) -> FElement:
    """X^+_{i,j,l} at lam: sum of f_sigma times prod_r (+-1)(H_{l,r} + d)."""
    if i == j + 1:
        return FElement.unit()
    if i > j + 1:
        return FElement.zero()
    out = FElement.zero()
    for sigma in sigma_set(i, j):
        coeff = Fraction(1)
        for r in range(i, j):
            d = 1 if sigma.descends_at(r + 1) else 0
            coeff *= (1 if d else -1) * (h_value(lam, l, r) + d)
        out = out + FElement.word(sigma.word, coeff)
    return out


def _inverse(value: int, what: str) -> Fraction:
    if value == 0:
        raise LieQuiverError(LieQuiverErrorType.ZERO_DENOMINATOR, f"{what} vanishes")
    return Fraction(1, value)


def u_a_eval(i: int, j: int, p: int, q: int, lam: Weight) -> FElement:
    """u_{alpha_ij, alpha_pq}(lam) for p <= i, j <= q.

    Raises:
        LieQuiverError: If an H factor of the normalising scalar vanishes
    """
    if not (1 <= p <= i <= j <= q):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"u(a({i},{j}), a({p},{q})) needs p <= i <= j <= q")
    scalar = Fraction(-1 if (i - p) % 2 else 1)
    for t in range(p, i):
        scalar *= _inverse(h_value(lam, t, i - 1), f"H_{{{t},{i - 1}}}({lam})")
    for t in range(j + 1, q + 1):
        scalar *= _inverse(h_value(lam, j + 1, t), f"H_{{{j + 1},{t}}}({lam})")
    return (x_minus_eval(p, i - 1, i - 1, lam) * x_plus_eval(j + 1, q, j + 1, lam)).scale(scalar)


def ubar_c_eval(r: int, s: int, i: int, j: int, mu: Weight) -> FElement:
    """The type C element U_{r,s,i,j}(mu); X factors tied to i use mu - varpi_j."""
    if r > i + 1:
        return FElement.zero()
    shifted = mu - Weight.fundamental(mu.rank, j) if j >= 1 else mu
    if r == s:
        return x_minus_eval(r, i, i, shifted) * x_minus_eval(r, j, j, mu)
    same = 1 if i == j else 0
    first = Fraction(1)
    second = Fraction(1)
    for t in range(r, s):
        first *= h_value(mu, t, i) - (1 if t == r else 0) - same
        second *= h_value(mu, t, j)
    out = (x_minus_eval(s, i, i, shifted) * x_minus_eval(r, j, j, mu)).scale(first)
    out = out + (x_minus_eval(r, i, i, shifted) * x_minus_eval(s, j, j, mu)).scale(second)
    for t in range(r + 1, s):
        coeff = Fraction(1)
        for p in range(r, t):
            coeff *= h_value(mu, p, j)
        for p in range(t + 1, s):
            coeff *= h_value(mu, p, i) - same
        term = x_minus_eval(s, i, i, shifted) * x_minus_eval(r, t - 1, i, shifted) * x_minus_eval(t, j, j, mu)
        out = out - term.scale(coeff)
    return out


def u_c_eval(i: int, j: int, r: int, s: int, lam: Weight) -> FElement:
    """u_{beta_ij, beta_rs}(lam) for r <= i, s <= j.

    Raises:
        LieQuiverError: If an H factor of the normalising scalar vanishes
    """
    if not (1 <= r <= i and r <= s <= j and i <= j):
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"u(b({i},{j}), b({r},{s})) needs r <= i, r <= s <= j")
    same = 1 if i == j else 0
    sign = -1 if (i + j + r + s) % 2 else 1
    scalar = Fraction(sign * (2 if r == s else 1), 1 + same)
    for t in range(r, i):
        scalar *= _inverse(h_value(lam, t, i - 1) - same, f"H_{{{t},{i - 1}}}({lam}) - {same}")
    for t in range(r, j):
        scalar *= _inverse(h_value(lam, t, j - 1), f"H_{{{t},{j - 1}}}({lam})")
    return ubar_c_eval(r, s, i - 1, j - 1, lam).scale(scalar)


def u_eval(lie_type: LieType, beta: Root, gamma: Root, lam: Weight) -> FElement:
    """The adapted family member u_{beta,gamma}(lam) for the type of beta."""
    if lie_type.family == "A":
        return u_a_eval(beta.i, beta.j, gamma.i, gamma.j, lam)
    return u_c_eval(beta.i, beta.j, gamma.i, gamma.j, lam)


def above(lie_type: LieType, beta: Root) -> List[Root]:
    """Roots gamma of the same kind as beta with gamma >= beta."""
    return root_system(lie_type).above(beta)


# Normalisation


def z_norm(psi: PsiSet, beta: Root, lam: Weight) -> Fraction:
    """The factor Z_{beta,Psi} evaluated at lam.

    Raises:
        LieQuiverError: If there is no arrow lam <- lam + beta
    """
    system = root_system(psi.lie_type)
    if not (lam - system.eps(beta.simple)).is_dominant():
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"No arrow {lam} <- {lam + beta.weight} for {beta}"
        )
    i, j = beta.i, beta.j
    value = Fraction(1)
    if psi.lie_type.family == "A":
        for t in range(1, i):
            if psi.has_label("a", t, j):
                value *= h_value(lam, t, i - 1)
        for t in range(j + 1, lam.rank + 1):
            if psi.has_label("a", i, t):
                value *= h_value(lam, j + 1, t)
        return value
    same = 1 if i == j else 0
    for t in range(1, i):
        if psi.has_label("b", t, i):
            value *= h_value(lam, t, i - 1) - same
    for t in range(1, j):
        if psi.has_label("b", t, j):
            value *= h_value(lam, t, j - 1)
    return value


def pi_adapted(lie_type: LieType, lam: Weight, bottom: Root, top: Root) -> TensorVec:
    """Pi_lam(bottom, top) from the adapted family of top at lam + bottom.

    Returns:
        sum over gamma >= top of e_gamma (x) ad(u_{top,gamma}) e_bottom
    """
    algebra = build_algebra(lie_type)
    middle = lam + bottom.weight
    eta = tuple(a + b for a, b in zip(bottom.simple, top.simple))
    base = algebra.root_vector(bottom)
    out = TensorVec()
    for gamma in above(lie_type, top):
        element = u_eval(lie_type, top, gamma, middle)
        rest = tuple(e - g for e, g in zip(eta, gamma.simple))
        for word, coeff in element:
            image = algebra.ad_f_word(word, base)
            if not image:
                continue
            root, c = algebra.root_coefficient(image, rest)
            out.add_term(gamma, root, c * coeff)
    logger.debug("Adapted Pi at %s for %s <- %s: %d terms", lam, bottom, top, len(out.terms))
    return out
