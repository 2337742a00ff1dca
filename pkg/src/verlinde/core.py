"""Verlinde numbers of SL_r and Spin_m, evaluated exactly in a cyclotomic field.

Each summand of the Verlinde formula is a product of sines raised to the even
power -2g+2.  Squaring every sine gives 4 sin^2(pi a/k) = (1 - z^a)(1 - z^-a)
with z a primitive k-th root of unity, so every term is an element of Q(z)
and the final sum is extracted as an exact integer.

Group conventions: ``GroupId.sl(r)`` is SL_r (rank n = r - 1);
``GroupId.spin(m)`` is Spin_m, with n = m // 2.  Spin_3 is evaluated as SL_2.
"""

from __future__ import annotations

import itertools
import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import ResourceBoundError
from .exact import CyclotomicNumber, root_power, sine_product, to_rational_integer

log = logging.getLogger(__name__)

SL = "SL"
SPIN_ODD = "SpinOdd"
SPIN_EVEN = "SpinEven"
FAMILIES = (SL, SPIN_ODD, SPIN_EVEN)

Weight = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class GroupId:
    """A group family with its rank parameter (r for SL_r, m for Spin_m)."""

    family: str
    param: int

    def __post_init__(self):
        if self.family == SL:
            ok = self.param >= 2
        elif self.family == SPIN_ODD:
            ok = self.param >= 3 and self.param % 2 == 1
        elif self.family == SPIN_EVEN:
            ok = self.param >= 4 and self.param % 2 == 0
        else:
            raise ValueError(f"unknown group family {self.family!r}")
        if not ok:
            raise ValueError(f"invalid rank parameter {self.param} for {self.family}")

    @classmethod
    def sl(cls, r: int) -> "GroupId":
        return cls(SL, r)

    @classmethod
    def spin(cls, m: int) -> "GroupId":
        return cls(SPIN_ODD if m % 2 else SPIN_EVEN, m)

    @property
    def n(self) -> int:
        """Rank of the root system (number of coordinates of a weight vector)."""
        if self.family == SL:
            return self.param - 1
        return self.param // 2

    @property
    def tag(self) -> str:
        return f"sl:{self.param}" if self.family == SL else f"spin:{self.param}"

    def __str__(self):
        return f"SL_{self.param}" if self.family == SL else f"Spin_{self.param}"

    def evaluation_group(self) -> "GroupId":
        """The group whose formula is actually evaluated (Spin_3 -> SL_2)."""
        if self.family == SPIN_ODD and self.param == 3:
            return GroupId.sl(2)
        return self


@dataclass(frozen=True)
class VerlindeQuery:
    group: GroupId
    level: int
    genus: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")


# summation domain


def weight_coefficients(group: GroupId) -> Tuple[Tuple[int, ...], int]:
    """Coefficients and constant offset of the alcove constraint.

    The domain is ``sum(c_i * t_i) <= level + offset`` with every t_i >= 1.
    """
    group = group.evaluation_group()
    n = group.n
    if group.family == SL:
        return (1,) * n, n
    if group.family == SPIN_EVEN:
        if n == 2:
            raise ValueError("Spin_4 has a product domain, not a single constraint")
        return (1,) + (2,) * (n - 3) + (1, 1), 2 * n - 3
    return ((1,) + (2,) * (n - 2) + (1,)), 2 * n - 2


def enumerate_weights(group: GroupId, level: int) -> List[Weight]:
    """All admissible weight vectors t, in lexicographic order."""
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    group = group.evaluation_group()
    if group.family == SPIN_EVEN and group.n == 2:
        # D_2 = A_1 x A_1: the alcove is the product of two level-l A_1 alcoves.
        side = range(1, level + 2)
        return list(itertools.product(side, side))
    coeffs, offset = weight_coefficients(group)
    bound = level + offset
    n = len(coeffs)
    # smallest contribution of the coordinates after position i
    tail = [sum(coeffs[i + 1 :]) for i in range(n)]
    out: List[Weight] = []
    prefix = [0] * n

    def extend(i: int, used: int) -> None:
        if i == n:
            out.append(tuple(prefix))
            return
        c = coeffs[i]
        t = 1
        while used + c * t + tail[i] <= bound:
            prefix[i] = t
            extend(i + 1, used + c * t)
            t += 1

    extend(0, 0)
    return out


def count_weights(group: GroupId, level: int) -> int:
    """Number of admissible weight vectors, without enumerating them."""
    group = group.evaluation_group()
    if group.family == SPIN_EVEN and group.n == 2:
        return (level + 1) ** 2
    coeffs, offset = weight_coefficients(group)
    # shift t_i = 1 + u_i: count u >= 0 with sum(c_i u_i) <= level
    ways = [1] + [0] * level
    for c in coeffs:
        for total in range(c, level + 1):
            ways[total] += ways[total - c]
    return sum(ways)


def check_size(group: GroupId, level: int, max_terms: int | None) -> None:
    if max_terms is not None and count_weights(group, level) > max_terms:
        raise ResourceBoundError(
            f"{group} at level {level} has {count_weights(group, level)} weights "
            f"(bound {max_terms})"
        )


def cyclotomic_order(group: GroupId, level: int) -> int:
    """Order k of the root of unity in which the sum is evaluated."""
    group = group.evaluation_group()
    n = group.n
    if group.family == SL:
        return level + n + 1
    if group.family == SPIN_EVEN:
        return level + 2 * n - 2
    # doubled so that the half-integer argument t_n / 2 becomes integral
    return 2 * (level + 2 * n - 1)


def prefactor(group: GroupId, level: int) -> int:
    """The base P of the overall factor P**(g-1)."""
    group = group.evaluation_group()
    n = group.n
    if group.family == SL:
        return (n + 1) * (level + n + 1) ** n
    if group.family == SPIN_EVEN:
        return 4 * (level + 2 * n - 2) ** n
    return 4 * (level + 2 * n - 1) ** n


def sine_arguments(group: GroupId, t: Sequence[int]) -> List[int]:
    """Arguments a (relative to ``cyclotomic_order``) of the 4 sin^2 factors of t."""
    group = group.evaluation_group()
    n = group.n
    if len(t) != n:
        raise ValueError(f"weight {tuple(t)} has length {len(t)}, expected {n}")
    # partial[i] = t_1 + ... + t_i (1-based), partial[0] = 0
    partial = [0]
    for x in t:
        partial.append(partial[-1] + x)

    def span(i: int, j: int) -> int:
        # t_i + ... + t_{j-1}, 1-based
        return partial[j - 1] - partial[i - 1]

    args: List[int] = []
    if group.family == SL:
        for i in range(1, n + 2):
            for j in range(i + 1, n + 2):
                args.append(span(i, j))
    elif group.family == SPIN_EVEN:
        tn1, tn = t[n - 2], t[n - 1]
        for i in range(1, n):
            args.append(span(i, n))
            args.append(span(i, n - 1) + tn)
            for j in range(i + 1, n):
                args.append(span(i, j))
                args.append(span(i, j) + 2 * span(j, n - 1) + tn1 + tn)
    else:
        tn = t[n - 1]
        for i in range(1, n + 1):
            args.append(2 * span(i, n) + tn)
            for j in range(i + 1, n + 1):
                args.append(2 * span(i, j))
                args.append(2 * (span(i, j) + 2 * span(j, n) + tn))
    return args


def term(group: GroupId, level: int, t: Sequence[int]) -> CyclotomicNumber:
    """S_t: the product of squared sines whose (g-1)-th inverse power is summed."""
    k = cyclotomic_order(group, level)
    return sine_product(k, sine_arguments(group, t))


# exact evaluation


@lru_cache(maxsize=256)
def _inverse_terms(group: GroupId, level: int) -> Tuple[Tuple[Weight, CyclotomicNumber], ...]:
    group = group.evaluation_group()
    seen: Dict[CyclotomicNumber, CyclotomicNumber] = {}
    out = []
    for t in enumerate_weights(group, level):
        s = term(group, level, t)
        inv = seen.get(s)
        if inv is None:
            inv = seen[s] = s.inverse()
        out.append((t, inv))
    return tuple(out)


def _weighted_sum(terms, exponent: int, k: int) -> CyclotomicNumber:
    # equal inverses are frequent (Weyl symmetry), so group before powering
    counts: Dict[CyclotomicNumber, int] = {}
    for _, inv in terms:
        counts[inv] = counts.get(inv, 0) + 1
    total = CyclotomicNumber.zero(k)
    for inv, mult in counts.items():
        total = total + (inv**exponent) * mult
    return total


def _evaluate(group: GroupId, level: int, genus: int, keep=None) -> int:
    k = cyclotomic_order(group, level)
    terms = _inverse_terms(group.evaluation_group(), level)
    if keep is not None:
        terms = [pair for pair in terms if keep(pair[0])]
    total = _weighted_sum(terms, genus - 1, k)
    total = total * prefactor(group, level) ** (genus - 1)
    return to_rational_integer(total)


class _Memo:
    """Thread-safe (group, level, genus, part) -> int table."""

    def __init__(self):
        self._lock = threading.Lock()
        self._table: Dict[tuple, int] = {}

    def get(self, key):
        with self._lock:
            return self._table.get(key)

    def put(self, key, value):
        with self._lock:
            self._table.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._table.clear()


_memo = _Memo()


def clear_memo() -> None:
    _memo.clear()
    _inverse_terms.cache_clear()


def _warn_low_rank(group: GroupId) -> None:
    if group.family == SPIN_EVEN and group.n in (2, 3):
        log.info(
            "%s: even spin formula evaluated below n=4 (agrees with %s)",
            group,
            "SL_2 x SL_2" if group.n == 2 else "SL_4",
        )


def verlinde_number(q: VerlindeQuery, *, memo: bool = True, max_terms: int | None = None) -> int:
    """Exact N_l(G) at genus g.

    ``max_terms`` bounds the size of the summation domain; larger queries
    raise ``ResourceBoundError`` before any work is done.
    """
    check_size(q.group, q.level, max_terms)
    key = (q.group, q.level, q.genus, "all")
    if memo:
        hit = _memo.get(key)
        if hit is not None:
            return hit
    _warn_low_rank(q.group)
    value = _evaluate(q.group, q.level, q.genus)
    if memo:
        _memo.put(key, value)
    return value


def verlinde_split(
    q: VerlindeQuery, *, memo: bool = True, max_terms: int | None = None
) -> Tuple[int, int]:
    """(N+, N-) for odd spin groups: t_n even versus t_n odd.

    For Spin_3 the partition is by the parity of t_1 in the SL_2 sum.
    """
    if q.group.family != SPIN_ODD:
        raise ValueError(f"parity split is defined only for odd spin groups, not {q.group}")
    check_size(q.group, q.level, max_terms)
    parts = []
    for name, parity in (("plus", 0), ("minus", 1)):
        key = (q.group, q.level, q.genus, name)
        hit = _memo.get(key) if memo else None
        if hit is None:
            hit = _evaluate(q.group, q.level, q.genus, keep=lambda t, p=parity: t[-1] % 2 == p)
            if memo:
                _memo.put(key, hit)
        parts.append(hit)
    return parts[0], parts[1]


def term_sum(group: GroupId, level: int, genus: int, order: Sequence[int] | None = None) -> int:
    """Same value as ``verlinde_number`` but adds the terms one at a time.

    ``order`` is a permutation of term indices; used to check that the
    result does not depend on summation order.
    """
    terms = _inverse_terms(group.evaluation_group(), level)
    if order is not None:
        terms = [terms[i] for i in order]
    k = cyclotomic_order(group, level)
    total = CyclotomicNumber.zero(k)
    for _, inv in terms:
        total = total + inv ** (genus - 1)
    return to_rational_integer(total * prefactor(group, level) ** (genus - 1))


# the A_t * B_t terms of N_2(Spin_{2n+1})


def term_value(group: GroupId, t: Sequence[int]) -> Fraction:
    """A_t * B_t for Spin_{2n+1} at level 2, built from (1 - xi^e) factors.

    xi is a primitive (4n+2)-th root of unity and zeta = xi^2.  This is
    assembled factor by factor from root powers, independently of
    ``sine_product``.
    """
    if group.family != SPIN_ODD or group.n < 2:
        raise ValueError(f"term_value needs Spin_(2n+1) with n >= 2, got {group}")
    n = group.n
    t = tuple(t)
    if t not in set(enumerate_weights(group, 2)):
        raise ValueError(f"{t} is not an admissible weight for {group} at level 2")
    order = 4 * n + 2
    one = CyclotomicNumber.one(order)

    def f(e: int) -> CyclotomicNumber:
        return one - root_power(order, e)

    def tail(i: int) -> int:
        # 2 t_i + ... + 2 t_{n-1} + t_n, 1-based
        return 2 * sum(t[i - 1 : n - 1]) + t[n - 1]

    a_t = one
    for i in range(1, n + 1):
        e = tail(i)
        a_t = a_t * f(e) * f(order - e)
    b_t = one
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            s = sum(t[i - 1 : j - 1])
            u = s + tail(j)
            # zeta^x = xi^(2x)
            b_t = b_t * f(2 * s) * f(2 * (2 * n + 1 - s)) * f(2 * u) * f(2 * (2 * n + 1 - u))
    value = a_t * b_t
    if not value.is_rational():
        raise ArithmeticError(f"A_t B_t is not rational for t={t}")
    return value.coeffs[0]


# floating-point oracle


def _brute_domain(group: GroupId, level: int) -> Iterator[Weight]:
    n = group.n
    if group.family == SPIN_EVEN and n == 2:
        yield from itertools.product(range(1, level + 2), repeat=2)
        return
    if group.family == SL:
        bound, weights = level + n, [1] * n
    elif group.family == SPIN_EVEN:
        bound = level + 2 * n - 3
        weights = [1] + [2] * (n - 3) + [1, 1]
    else:
        bound = level + 2 * n - 2
        weights = [1] + [2] * (n - 2) + [1]
    for t in itertools.product(range(1, bound + 1), repeat=n):
        if sum(w * x for w, x in zip(weights, t)) <= bound:
            yield t


def verlinde_float(q: VerlindeQuery) -> float:
    """Double-precision evaluation of the trigonometric sum.

    Written directly from the sine form of the formula; accuracy degrades
    as P**(g-1) grows, so use it as a cross-check for g <= 4 and small rank.
    """
    group = q.group.evaluation_group()
    level, g = q.level, q.genus
    n = group.n
    sin, pi = math.sin, math.pi
    total = 0.0
    for t in _brute_domain(group, level):
        s = lambda i, j: sum(t[i - 1 : j - 1])  # noqa: E731
        prod = 1.0
        if group.family == SL:
            k = level + n + 1
            for i in range(1, n + 2):
                for j in range(i + 1, n + 2):
                    prod *= 2 * sin(pi * s(i, j) / k)
        elif group.family == SPIN_EVEN:
            k = level + 2 * n - 2
            for i in range(1, n):
                prod *= 4 * sin(pi * s(i, n) / k) * sin(pi * (s(i, n - 1) + t[n - 1]) / k)
                for j in range(i + 1, n):
                    big = s(i, j) + 2 * s(j, n - 1) + t[n - 2] + t[n - 1]
                    prod *= 4 * sin(pi * s(i, j) / k) * sin(pi * big / k)
        else:
            k = level + 2 * n - 1
            for i in range(1, n + 1):
                prod *= 2 * sin(pi * (s(i, n) + t[n - 1] / 2) / k)
                for j in range(i + 1, n + 1):
                    big = s(i, j) + 2 * s(j, n) + t[n - 1]
                    prod *= 4 * sin(pi * s(i, j) / k) * sin(pi * big / k)
        total += prod ** (-2 * g + 2)
    return float(prefactor(group, level)) ** (g - 1) * total
