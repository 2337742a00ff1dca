"""Even/odd theta-function counts on abelian varieties and their Prym sums."""

from __future__ import annotations

from .core import SL, GroupId

PARITIES = ("even", "odd", "total")


def _check(g: int, m: int, parity: str) -> None:
    if g < 1:
        raise ValueError(f"dimension must be >= 1, got {g}")
    if m < 1:
        raise ValueError(f"level must be >= 1, got {m}")
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}, got {parity!r}")


def theta_dim(g: int, m: int, parity: str = "total") -> int:
    """dim H^0_(+/-)(A, m Xi) for a principally polarised A of dimension g.

    Even level: (m^g +/- 2^g)/2.  Odd level: (m^g +/- 1)/2.
    """
    _check(g, m, parity)
    total = m**g
    if parity == "total":
        return total
    excess = 2**g if m % 2 == 0 else 1
    sign = 1 if parity == "even" else -1
    return (total + sign * excess) // 2


def prym_sum(g: int, m: int, parity: str = "total") -> int:
    """Sum of theta_dim over all 2^(2g) half-periods of a genus-g curve.

    The zero half-period contributes the Jacobian (dimension g), the other
    2^(2g) - 1 contribute Pryms of dimension g - 1.
    """
    _check(g, m, parity)
    if g < 2:
        raise ValueError(f"Prym sums need curve genus >= 2, got {g}")
    return theta_dim(g, m, parity) + (2 ** (2 * g) - 1) * theta_dim(g - 1, m, parity)


def group_dimension(group: GroupId) -> int:
    if group.family == SL:
        return group.param**2 - 1
    m = group.param
    return m * (m - 1) // 2


def moduli_dimension(group: GroupId, g: int) -> int:
    """(g-1) dim G + dim Z(G); the centre is finite for these simple groups."""
    if g < 2:
        raise ValueError(f"genus must be >= 2, got {g}")
    return (g - 1) * group_dimension(group)
