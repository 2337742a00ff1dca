"""Pure-Python reference kernels for the exact arithmetic hot loops.

Cyclotomic side: ``phi`` is a monic integer polynomial, constant term first,
of degree ``d``, and residues are length-``d`` integer sequences.

Clifford side: elements with integer coefficients are dicts from subset
bitmasks to nonzero ints.

The compiled module ``_kernels`` exports the same functions with identical
results.
"""

from functools import lru_cache


def mulmod(a, b, phi):
    """Product of two residues modulo the monic polynomial ``phi``."""
    d = len(phi) - 1
    prod = [0] * (2 * d - 1)
    for i in range(d):
        ai = a[i]
        if ai:
            for j in range(d):
                bj = b[j]
                if bj:
                    prod[i + j] += ai * bj
    for top in range(2 * d - 2, d - 1, -1):
        c = prod[top]
        if c:
            base = top - d
            for i in range(d):
                prod[base + i] -= c * phi[i]
    return prod[:d]


def power_table(k, phi):
    """Residues of x**j modulo ``phi`` for j = 0..k-1."""
    d = len(phi) - 1
    cur = [0] * d
    cur[0] = 1
    table = []
    for _ in range(k):
        table.append(cur)
        nxt = [0] + cur[:-1]
        c = cur[-1]
        if c:
            for i in range(d):
                nxt[i] -= c * phi[i]
        cur = nxt
    return table


def sine_product(args, table, phi):
    """Product over ``args`` of (1 - x**a)(1 - x**-a), reduced modulo ``phi``.

    ``table`` is ``power_table(k, phi)``; every ``a`` must satisfy
    ``0 < a % k``.
    """
    d = len(phi) - 1
    k = len(table)
    acc = [0] * d
    acc[0] = 1
    for a in args:
        a %= k
        up = table[a]
        down = table[k - a]
        factor = [-(u + w) for u, w in zip(up, down)]
        factor[0] += 2
        acc = mulmod(acc, factor, phi)
    return acc


def _reorder_parity(a, b):
    swaps = 0
    a >>= 1
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return swaps & 1


@lru_cache(maxsize=16)
def sign_rows(dim):
    """Row a is a bitmask over b, bit b set when e_a e_b = -e_(a^b)."""
    size = 1 << dim
    rows = []
    for a in range(size):
        row = 0
        for b in range(size):
            if _reorder_parity(a, b):
                row |= 1 << b
        rows.append(row)
    return tuple(rows)


def blade_product(left, right, dim):
    """Product of two integer Clifford elements with e_i**2 = 1."""
    signs = sign_rows(dim)
    acc = {}
    get = acc.get
    for a, ca in left.items():
        neg = signs[a]
        for b, cb in right.items():
            key = a ^ b
            if neg >> b & 1:
                acc[key] = get(key, 0) - ca * cb
            else:
                acc[key] = get(key, 0) + ca * cb
    return {k: v for k, v in acc.items() if v}
