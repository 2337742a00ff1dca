"""Exact arithmetic in the cyclotomic field Q(zeta_k).

Elements are stored as an integer coefficient vector over a common positive
denominator, in the power basis 1, z, ..., z**(d-1) with d = deg Phi_k.
The pair is kept in lowest terms, so equality is structural.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Sequence, Tuple

from . import poly
from ._backend import kernels


class OrderMismatchError(ValueError):
    """Operands live in cyclotomic fields of different orders."""


class ZeroFactorError(ZeroDivisionError):
    """A sine factor vanishes, i.e. its argument is divisible by the order."""


class IntegralityError(ArithmeticError):
    """An element expected to be a rational integer is not one."""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> Tuple[int, ...]:
    """Coefficients of Phi_k, constant term first.

    Obtained by dividing x**k - 1 by Phi_d for every proper divisor d of k.
    """
    if k < 1:
        raise ValueError(f"cyclotomic order must be positive, got {k}")
    num = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            num, rem = poly.divmod_poly(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def _power_table(k: int) -> Tuple[Tuple[int, ...], ...]:
    phi = cyclotomic_polynomial(k)
    return tuple(tuple(row) for row in kernels.power_table(k, phi))


def totient(k: int) -> int:
    return len(cyclotomic_polynomial(k)) - 1


class CyclotomicNumber:
    """An element of Q(zeta_k), immutable.

    ``CyclotomicNumber(k, coeffs)`` accepts any rational coefficient sequence
    of length at most ``k``; it is reduced modulo Phi_k on construction.
    """

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs: Sequence = (), den: int = 1):
        phi = cyclotomic_polynomial(order)
        d = len(phi) - 1
        coeffs = list(coeffs)
        if len(coeffs) > d:
            _, coeffs = poly.divmod_poly(coeffs, phi)
        coeffs = coeffs + [0] * (d - len(coeffs))
        common = reduce(_lcm, (Fraction(c).denominator for c in coeffs), 1)
        num = [int(Fraction(c) * common) for c in coeffs]
        self.order = order
        self._set(num, den * common)

    @classmethod
    def _raw(cls, order: int, num: Sequence[int], den: int = 1) -> "CyclotomicNumber":
        obj = cls.__new__(cls)
        obj.order = order
        obj._set(num, den)
        return obj

    def _set(self, num, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = [-c for c in num], -den
        g = reduce(math.gcd, num, den)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        self._num = tuple(num)
        self._den = den
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls._raw(order, [0] * totient(order))

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cls.from_rational(order, 1)

    @classmethod
    def from_rational(cls, order: int, value) -> "CyclotomicNumber":
        value = Fraction(value)
        num = [0] * totient(order)
        num[0] = value.numerator
        return cls._raw(order, num, value.denominator)

    # accessors

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> Tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def __bool__(self):
        return not self.is_zero()

    # arithmetic

    def _check(self, other) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatchError(
                f"cannot combine elements of orders {self.order} and {other.order}"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        num = [a * d2 + b * d1 for a, b in zip(self._num, other._num)]
        return CyclotomicNumber._raw(self.order, num, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.order, [-a for a in self._num], self._den)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        phi = cyclotomic_polynomial(self.order)
        num = kernels.mulmod(self._num, other._num, phi)
        return CyclotomicNumber._raw(self.order, num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_k."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicNumber.from_rational(
                self.order, Fraction(self._den, self._num[0])
            )
        phi = cyclotomic_polynomial(self.order)
        g, s, _ = poly.gcdext(poly.trim(self._num), list(phi))
        # Phi_k is irreducible, so the gcd is 1.
        assert g == [1], g
        return CyclotomicNumber(self.order, [c * self._den for c in s])

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = CyclotomicNumber.one(self.order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self) -> "CyclotomicNumber":
        """Image under the automorphism z -> z**-1 (complex conjugation)."""
        table = _power_table(self.order)
        k = self.order
        acc = [0] * len(self._num)
        for j, c in enumerate(self._num):
            if c:
                row = table[(-j) % k]
                for i, r in enumerate(row):
                    acc[i] += c * r
        return CyclotomicNumber._raw(self.order, acc, self._den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return (
            self.order == other.order
            and self._den == other._den
            and self._num == other._num
        )

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.order, self._num, self._den))
        return self._hash

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.order)
        return sum(c * z**j for j, c in enumerate(self._num)) / self._den

    def __repr__(self):
        terms = [f"{c}*z^{j}" for j, c in enumerate(self._num) if c]
        body = " + ".join(terms) or "0"
        if self._den != 1:
            body = f"({body})/{self._den}"
        return f"CyclotomicNumber[{self.order}]({body})"


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def root_power(k: int, a: int) -> CyclotomicNumber:
    """zeta_k ** a, reduced modulo Phi_k."""
    return CyclotomicNumber._raw(k, _power_table(k)[a % k])


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")
    return a * b


def cyc_inverse(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.inverse()


def four_sin_sq(k: int, a: int) -> CyclotomicNumber:
    """(1 - zeta_k**a)(1 - zeta_k**-a), which equals 4 sin^2(pi a / k)."""
    return sine_product(k, (a,))


def sine_product(k: int, args: Iterable[int]) -> CyclotomicNumber:
    """Product of ``four_sin_sq(k, a)`` over ``args``, computed in one pass."""
    args = tuple(args)
    for a in args:
        if a % k == 0:
            raise ZeroFactorError(f"sine argument {a} is divisible by order {k}")
    phi = cyclotomic_polynomial(k)
    num = kernels.sine_product(args, _power_table(k), phi)
    return CyclotomicNumber._raw(k, num)


def to_rational_integer(a: CyclotomicNumber) -> int:
    """The integer represented by ``a``; raise if ``a`` is not one."""
    if not a.is_rational() or a.denominator != 1:
        raise IntegralityError(f"not a rational integer: {a!r}")
    return a.numerators[0]
