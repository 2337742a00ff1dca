"""Weights, normalised Killing pairing, formal characters and the height m_V.

Type A weights are kept in the ambient (n+1)-dimensional space with the
pairing <L_i, L_j> = n/(n+1) or -1/(n+1); types B and D use an orthonormal
basis L_1..L_n.  Spin_3 is treated as SL_2.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .core import SL, SPIN_ODD, GroupId, VerlindeQuery, verlinde_number

Weight = Tuple[Fraction, ...]
FormalCharacter = Dict[Weight, int]

REPS = ("vector", "ext2", "adjoint")


def ambient_dim(group: GroupId) -> int:
    group = group.evaluation_group()
    return group.param if group.family == SL else group.n


def weight(*coords) -> Weight:
    return tuple(Fraction(c) for c in coords)


def basis_vector(group: GroupId, i: int, sign: int = 1) -> Weight:
    """sign * L_i (1-based)."""
    dim = ambient_dim(group)
    if not 1 <= i <= dim:
        raise IndexError(f"L_{i} out of range for {group}")
    return tuple(Fraction(sign if j == i - 1 else 0) for j in range(dim))


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def killing_pairing(group: GroupId, lam: Sequence, mu: Sequence) -> Fraction:
    """Normalised Killing form <lam, mu> (long roots have squared length 2)."""
    dim = ambient_dim(group)
    if len(lam) != dim or len(mu) != dim:
        raise ValueError(f"weights for {group} need {dim} coordinates")
    lam = [Fraction(x) for x in lam]
    mu = [Fraction(x) for x in mu]
    dot = sum(x * y for x, y in zip(lam, mu))
    if group.evaluation_group().family != SL:
        return dot
    # <L_i, L_j> = delta_ij - 1/(n+1)
    return dot - sum(lam) * sum(mu) / dim


def highest_coroot(group: GroupId) -> Weight:
    group = group.evaluation_group()
    if group.family == SL:
        top = basis_vector(group, 1)
        return _add(top, basis_vector(group, group.param, -1))
    if group.n < 2:
        raise ValueError(f"highest coroot L_1 + L_2 needs rank >= 2, {group} has {group.n}")
    return _add(basis_vector(group, 1), basis_vector(group, 2))


def formal_character(group: GroupId, rep: str) -> FormalCharacter:
    """Weights of ``rep`` with multiplicities."""
    if rep not in REPS:
        raise ValueError(f"unknown representation {rep!r}; expected one of {REPS}")
    if group.family == SPIN_ODD and group.param == 3:
        if rep in ("vector", "adjoint"):
            # the vector representation of Spin_3 is the adjoint of SL_2
            return formal_character(GroupId.sl(2), "adjoint")
        raise ValueError("ext2 is not defined for Spin_3")
    dim = ambient_dim(group)
    chars: Counter = Counter()
    if group.family == SL:
        if rep == "ext2":
            for i in range(1, dim + 1):
                for j in range(i + 1, dim + 1):
                    chars[_add(basis_vector(group, i), basis_vector(group, j))] += 1
        elif rep == "adjoint" and group.param == 2:
            root = _add(basis_vector(group, 1), basis_vector(group, 2, -1))
            chars[root] += 1
            chars[weight(0, 0)] += 1
            chars[tuple(-x for x in root)] += 1
        else:
            raise ValueError(f"{rep} is not supported for {group}")
    else:
        if rep != "vector":
            raise ValueError(f"{rep} is not supported for {group}")
        for i in range(1, dim + 1):
            chars[basis_vector(group, i)] += 1
            chars[basis_vector(group, i, -1)] += 1
        if group.family == SPIN_ODD:
            chars[weight(*([0] * dim))] += 1
    return dict(chars)


def character_mass(ch: FormalCharacter) -> int:
    return sum(ch.values())


def height(group: GroupId, rep: str) -> Fraction:
    """m_V = 1/2 * sum over weights of n_lambda <lambda, theta_check>^2."""
    ch = formal_character(group, rep)
    pairing_group = group.evaluation_group()
    theta = highest_coroot(pairing_group)
    total = sum(
        mult * killing_pairing(pairing_group, lam, theta) ** 2 for lam, mult in ch.items()
    )
    return total / 2


def integral_height(group: GroupId, rep: str) -> int:
    h = height(group, rep)
    if h.denominator != 1 or h <= 0:
        raise ArithmeticError(f"height of {rep} for {group} is not a positive integer: {h}")
    return h.numerator


def level_dimension(group: GroupId, rep: str, k: int, g: int) -> int:
    """dim H^0(M(G), Theta(V)^k) = N_{k m_V}(G)."""
    if k < 1:
        raise ValueError(f"tensor power must be >= 1, got {k}")
    return verlinde_number(VerlindeQuery(group, k * integral_height(group, rep), g))


__all__ = [
    "REPS",
    "ambient_dim",
    "basis_vector",
    "character_mass",
    "formal_character",
    "height",
    "highest_coroot",
    "integral_height",
    "killing_pairing",
    "level_dimension",
    "weight",
]
