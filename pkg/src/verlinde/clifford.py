"""The rational Clifford algebra of the standard form Q(x) = x_1^2 + ... + x_m^2.

Basis elements e_S are indexed by subsets S of {1..m}, stored as bitmasks
(bit i-1 <-> e_i), with e_S the product of its generators in increasing
order.  The relations are e_i^2 = 1 and e_i e_j = -e_j e_i for i != j.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .errors import ResourceBoundError
from .exact._backend import kernels

MAX_DIM = 10


class NotInCliffordGroupError(ValueError):
    """The element does not map V into V under x -> s x s*."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _reorder_sign(a: int, b: int) -> int:
    """Sign picked up when sorting the generators of e_a e_b."""
    swaps = 0
    a >>= 1
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def _integral(terms: Dict[int, Fraction]) -> Tuple[Dict[int, int], int]:
    den = 1
    for c in terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {k: c.numerator * (den // c.denominator) for k, c in terms.items()}, den


class CliffordElement:
    """Immutable element of the Clifford algebra of dimension ``dim``."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Optional[Dict[int, object]] = None):
        if dim < 1:
            raise ValueError(f"dimension must be positive, got {dim}")
        full = 1 << dim
        clean = {}
        for mask, c in (terms or {}).items():
            if not 0 <= mask < full:
                raise ValueError(f"basis mask {mask:b} outside dimension {dim}")
            c = Fraction(c)
            if c:
                clean[mask] = c
        self.dim = dim
        self.terms: Dict[int, Fraction] = clean

    @classmethod
    def _from_clean(cls, dim: int, terms: Dict[int, Fraction]) -> "CliffordElement":
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def scalar(cls, dim: int, value) -> "CliffordElement":
        return cls(dim, {0: value})

    @classmethod
    def basis(cls, dim: int, *indices: int) -> "CliffordElement":
        """The product e_{i1} e_{i2} ... in the given order."""
        out = cls.scalar(dim, 1)
        for i in indices:
            if not 1 <= i <= dim:
                raise ValueError(f"e_{i} out of range for dimension {dim}")
            out = out * cls(dim, {1 << (i - 1): 1})
        return out

    @classmethod
    def vector(cls, coords: Sequence) -> "CliffordElement":
        dim = len(coords)
        return cls(dim, {1 << i: c for i, c in enumerate(coords)})

    # structure

    def _same(self, other: "CliffordElement") -> None:
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, CliffordElement):
            other = CliffordElement.scalar(self.dim, other)
        self._same(other)
        terms = dict(self.terms)
        for mask, c in other.terms.items():
            terms[mask] = terms.get(mask, 0) + c
        return CliffordElement(self.dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.dim, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            c = Fraction(other)
            return CliffordElement(self.dim, {k: c * v for k, v in self.terms.items()})
        self._same(other)
        left, dl = _integral(self.terms)
        right, dr = _integral(other.terms)
        acc = kernels.blade_product(left, right, self.dim)
        den = dl * dr
        return CliffordElement._from_clean(
            self.dim, {k: Fraction(v, den) for k, v in acc.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            try:
                other = CliffordElement.scalar(self.dim, other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"CliffordElement({self.dim}, 0)"
        parts = []
        for mask in sorted(self.terms, key=lambda m: (_popcount(m), m)):
            idx = [str(i + 1) for i in range(self.dim) if mask >> i & 1]
            label = "e" + ",".join(idx) if idx else "1"
            parts.append(f"{self.terms[mask]}*{label}")
        return f"CliffordElement({self.dim}, {' + '.join(parts)})"

    def grade(self, mask: int) -> int:
        return _popcount(mask)

    def is_even(self) -> bool:
        return all(_popcount(m) % 2 == 0 for m in self.terms)

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self.terms)

    def scalar_part(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def is_vector(self) -> bool:
        return all(_popcount(m) == 1 for m in self.terms)

    def vector_coords(self) -> Tuple[Fraction, ...]:
        if not self.is_vector():
            raise ValueError(f"{self!r} is not in V")
        return tuple(self.terms.get(1 << i, Fraction(0)) for i in range(self.dim))


def clifford_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a * b


def alpha(a: CliffordElement) -> CliffordElement:
    """Principal involution: -1 on V, so (-1)^|S| on e_S."""
    return CliffordElement(
        a.dim, {m: (-c if _popcount(m) & 1 else c) for m, c in a.terms.items()}
    )


def beta(a: CliffordElement) -> CliffordElement:
    """Principal anti-involution: reverses products, (-1)^(|S|(|S|-1)/2) on e_S."""

    def sign(m):
        r = _popcount(m)
        return -1 if (r * (r - 1) // 2) & 1 else 1

    return CliffordElement(a.dim, {m: sign(m) * c for m, c in a.terms.items()})


def conjugate(a: CliffordElement) -> CliffordElement:
    """x* = beta(alpha(x))."""
    return beta(alpha(a))


def spinor_norm(s: CliffordElement) -> CliffordElement:
    """Nm(s) = beta(s) s."""
    return beta(s) * s


# invertibility


def _left_matrix(s: CliffordElement) -> List[Dict[int, Fraction]]:
    """Rows of the matrix of x -> s x in the basis e_S (row = output mask)."""
    size = 1 << s.dim
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(size)]
    for b in range(size):
        for a, ca in s.terms.items():
            out = a ^ b
            rows[out][b] = rows[out].get(b, 0) + _reorder_sign(a, b) * ca
    return rows


def inverse(s: CliffordElement, max_dim: int = MAX_DIM) -> Optional[CliffordElement]:
    """Two-sided inverse of ``s``, or None if ``s`` is a zero divisor.

    When s s* is a nonzero scalar, s* / (s s*) is returned (certified by
    multiplying back).  Otherwise the regular representation is solved exactly.
    """
    if not s.terms:
        return None
    star = conjugate(s)
    ss = s * star
    if ss.is_scalar() and ss.scalar_part():
        cand = star * (1 / ss.scalar_part())
        if cand * s == 1:
            return cand
    if s.dim > max_dim:
        raise ResourceBoundError(f"regular representation of dimension 2^{s.dim} exceeds bound")
    size = 1 << s.dim
    sol = linalg.solve(_left_matrix(s), [1] + [0] * (size - 1), size)
    if sol is None:
        return None
    inv = CliffordElement(s.dim, dict(enumerate(sol)))
    # a one-sided inverse in a finite-dimensional algebra is two-sided
    assert inv * s == 1
    return inv


def is_invertible(s: CliffordElement) -> bool:
    return inverse(s) is not None


# the Clifford group and its action on V


def _image(s: CliffordElement, star: CliffordElement, i: int) -> CliffordElement:
    e_i = CliffordElement(s.dim, {1 << (i - 1): 1})
    return s * e_i * star


def is_in_clifford_group(s: CliffordElement) -> bool:
    """s invertible with s V s* contained in V."""
    if not is_invertible(s):
        return False
    star = conjugate(s)
    return all(_image(s, star, i).is_vector() for i in range(1, s.dim + 1))


def is_in_special_clifford(s: CliffordElement) -> bool:
    return s.is_even() and is_in_clifford_group(s)


def is_in_spin(s: CliffordElement) -> bool:
    return is_in_special_clifford(s) and spinor_norm(s) == 1


def twisted_action(s: CliffordElement, x) -> Tuple[Fraction, ...]:
    """pi_s(x) = s x s* for a vector x, as coordinates in e_1..e_m."""
    if not isinstance(x, CliffordElement):
        x = CliffordElement.vector(x)
    if x.dim != s.dim or not x.is_vector():
        raise ValueError("twisted_action needs a vector of the same dimension")
    if not is_invertible(s):
        raise NotInCliffordGroupError(f"{s!r} is not invertible")
    out = s * x * conjugate(s)
    if not out.is_vector():
        raise NotInCliffordGroupError(f"s x s* left V for s = {s!r}")
    return out.vector_coords()


def orthogonal_matrix_of(s: CliffordElement) -> List[List[Fraction]]:
    """Matrix of x -> s x s* / Nm(s) in the basis e_1..e_m (columns are images)."""
    bs = beta(s)
    nm = bs * s
    # a nonzero scalar Nm(s) makes beta(s) / Nm(s) a left, hence two-sided, inverse
    if not nm.is_scalar() or not nm.scalar_part():
        raise NotInCliffordGroupError(f"spinor norm of {s!r} is not a nonzero scalar")
    scale = 1 / nm.scalar_part()
    star = alpha(bs)
    images = [_image(s, star, i) for i in range(1, s.dim + 1)]
    if not all(img.is_vector() for img in images):
        raise NotInCliffordGroupError(f"{s!r} is not in the Clifford group")
    cols = [img.vector_coords() for img in images]
    return [[cols[j][i] * scale for j in range(s.dim)] for i in range(s.dim)]


def is_orthogonal(matrix: Sequence[Sequence[Fraction]]) -> bool:
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            dot = sum(matrix[k][i] * matrix[k][j] for k in range(n))
            if dot != (1 if i == j else 0):
                return False
    return True


# centre of the even part


def even_center_basis(m: int, max_dim: int = MAX_DIM) -> List[CliffordElement]:
    """Basis of the centre of A+, i.e. even z commuting with every e_i e_j."""
    if m < 1:
        raise ValueError(f"dimension must be positive, got {m}")
    if m > max_dim:
        raise ResourceBoundError(f"even part of dimension 2^{m - 1} exceeds bound (m <= {max_dim})")
    evens = [mask for mask in range(1 << m) if _popcount(mask) % 2 == 0]
    col = {mask: j for j, mask in enumerate(evens)}
    rows: List[Dict[int, Fraction]] = []
    for i in range(m):
        for j in range(i + 1, m):
            g = (1 << i) | (1 << j)
            # coefficient of e_T in z g - g z, as a linear form in z
            eqs: Dict[int, Dict[int, Fraction]] = {}
            for mask in evens:
                c = _reorder_sign(mask, g) - _reorder_sign(g, mask)
                if c:
                    eqs.setdefault(mask ^ g, {})[col[mask]] = Fraction(c)
            rows.extend(eqs.values())
    basis = linalg.nullspace(rows, len(evens))
    return [CliffordElement(m, {evens[j]: c for j, c in enumerate(vec)}) for vec in basis]
