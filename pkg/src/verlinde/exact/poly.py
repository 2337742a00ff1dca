"""Dense univariate polynomials over Z and Q.

A polynomial is a list of coefficients, constant term first, with no trailing
zeros; the zero polynomial is ``[]``.  Integer and ``Fraction`` coefficients
mix freely since ``Fraction`` absorbs ``int``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Poly = List


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    """Degree of ``p``; the zero polynomial has degree -1."""
    return len(trim(p)) - 1


def add(p: Sequence, q: Sequence) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p: Sequence, q: Sequence) -> Poly:
    return add(p, [-c for c in q])


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p: Sequence, c) -> Poly:
    return trim([c * a for a in p])


def divmod_poly(p: Sequence, q: Sequence) -> Tuple[Poly, Poly]:
    """Euclidean division ``p = quot * q + rem`` with ``deg rem < deg q``.

    Exact over Q.  When ``q`` is monic with integer coefficients and ``p`` is
    integral, quotient and remainder stay integral.
    """
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = trim(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(rem) <= dq:
        return [], rem
    quot = [0] * (len(rem) - dq)
    monic = lead == 1
    for shift in range(len(rem) - 1 - dq, -1, -1):
        c = rem[shift + dq]
        if not c:
            continue
        if not monic:
            c = Fraction(c) / lead
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
    return trim(quot), trim(rem[:dq])


def gcdext(a: Sequence, b: Sequence) -> Tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic over Q."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quot, rem = divmod_poly(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quot, s1))
        t0, t1 = t1, sub(t0, mul(quot, t1))
    if not r0:
        return [], s0, t0
    inv = 1 / Fraction(r0[-1])
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)
