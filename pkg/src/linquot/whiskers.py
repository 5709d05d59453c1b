"""Whisker-graph specifics: leaf statistics of a power generator, the
variable membership of its colon ideal, and the closed-form projective
dimension / Betti numbers.

The ambient variable order is the one fixed by ``whisker_graph``:
(xR, xL, y1..yr, z1..zl).
"""

from __future__ import annotations

from math import comb

from .errors import FamilyParameterError, LinquotError
from .graphs import EdgeIdeal, whisker_counts
from .monomials import Monomial


def _comb0(n: int, j: int) -> int:
    """Binomial with the vanishing convention outside 0 <= j <= n.

    The j < 0 branch carries the k = 1 case of the Betti formula, so this
    must not delegate blindly to math.comb.
    """
    if j < 0 or n < 0 or j > n:
        return 0
    return comb(n, j)


def _leaf_profile(m: Monomial, r: int, l: int) -> tuple[int, list[int], list[int]]:
    k2 = m.degree()
    if k2 % 2:
        raise LinquotError(f"{m} has odd degree; not a power generator")
    k = k2 // 2
    ys = list(m.exponents[2:2 + r])
    zs = list(m.exponents[2 + r:2 + r + l])
    alpha = k - sum(ys) - sum(zs)
    if alpha < 0:
        raise LinquotError(f"{m} is not a generator of any whisker ideal power")
    if m.exponents[0] != alpha + sum(ys) or m.exponents[1] != alpha + sum(zs):
        raise LinquotError(f"{m} is not a generator of any whisker ideal power")
    return k, ys, zs


def whisker_bc(m: Monomial, ideal: EdgeIdeal) -> tuple[int, int]:
    """(B, C) of a power generator: highest whisker index used on each side.

    Trees give unique edge decompositions, so B and C can be peeled straight
    off the leaf-variable exponents.
    """
    r, l = whisker_counts(ideal.graph)
    _, ys, zs = _leaf_profile(m, r, l)
    B = max((i + 1 for i, e in enumerate(ys) if e), default=0)
    C = max((j + 1 for j, e in enumerate(zs) if e), default=0)
    return B, C


def whisker_quotient_variables(m: Monomial, r: int, l: int, k: int) -> set[int]:
    """Variable indices generating the colon ideal at m in the revlex
    ordering of the whisker ideal's k-th power: y_j for j < B, z_j for
    j < C, xR when C > 0, xL when B > 0.  Cardinality B + C.
    """
    if m.n != r + l + 2:
        raise LinquotError(f"{m} does not live in the whisker ring on {r + l + 2} variables")
    kk, ys, zs = _leaf_profile(m, r, l)
    if kk != k:
        raise LinquotError(f"{m} has degree {2 * kk}, not a k={k} power generator")
    B = max((i + 1 for i, e in enumerate(ys) if e), default=0)
    C = max((j + 1 for j, e in enumerate(zs) if e), default=0)
    out: set[int] = set()
    out.update(2 + j for j in range(B - 1))          # y_1 .. y_{B-1}
    out.update(2 + r + j for j in range(C - 1))      # z_1 .. z_{C-1}
    if C > 0:
        out.add(0)                                   # xR
    if B > 0:
        out.add(1)                                   # xL
    assert len(out) == B + C
    return out


def _check_params(r: int, l: int, k: int) -> None:
    if r < 0 or l < 0 or r + l < 1:
        raise FamilyParameterError("whisker formulas need r, l >= 0 with r + l >= 1")
    if k < 1:
        raise FamilyParameterError("whisker formulas need k >= 1")


def whisker_pd_closed_form(r: int, l: int, k: int) -> int:
    _check_params(r, l, k)
    return r + l if k >= 2 else max(r, l)


def whisker_betti_closed_form(r: int, l: int, k: int, i: int) -> int:
    _check_params(r, l, k)
    if i < 0:
        raise FamilyParameterError("homological index must be >= 0")
    if i == 0:
        return comb(r + l + k, k)
    return (_comb0(k - 2 + i, i) * _comb0(r + l + k, k + i)
            + _comb0(k - 2 + i, i - 1) * (_comb0(r + k, k + i) + _comb0(l + k, k + i)))


def whisker_betti_table(r: int, l: int, k: int):
    """The closed-form numbers packaged as a BettiTable."""
    from .quotients import BettiTable
    pd = whisker_pd_closed_form(r, l, k)
    betti = tuple(whisker_betti_closed_form(r, l, k, i) for i in range(pd + 1))
    return BettiTable(pd, betti, degree_shift=2 * k)
