# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels for Z[x]/(phi) and the Clifford product.

Same contract as ``_kernels_py``.  Work is done in int64 with overflow
detection; on overflow the call is redone with Python integers.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

from . import _kernels_py


cdef extern from *:
    """
    static inline int mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint mul_ovf(long long a, long long b, long long *r) nogil
    int popcount "__builtin_popcount"(unsigned int x) nogil
    bint add_ovf(long long a, long long b, long long *r) nogil


cdef int64_t LIMIT = (<int64_t>1) << 62


cdef bint _fits(seq):
    for c in seq:
        if not (-LIMIT < c < LIMIT):
            return False
    return True


cdef int _mulmod_c(const long long *a, const long long *b, const long long *phi,
                   long long *prod, Py_ssize_t d) nogil:
    """prod[0:d] = a*b mod phi; returns 1 on overflow."""
    cdef Py_ssize_t i, j, top, base
    cdef long long t, c
    for i in range(2 * d - 1):
        prod[i] = 0
    for i in range(d):
        if a[i] == 0:
            continue
        for j in range(d):
            if b[j] == 0:
                continue
            if mul_ovf(a[i], b[j], &t) or add_ovf(prod[i + j], t, &prod[i + j]):
                return 1
    top = 2 * d - 2
    while top >= d:
        c = prod[top]
        if c != 0:
            base = top - d
            for i in range(d):
                if mul_ovf(c, phi[i], &t) or add_ovf(prod[base + i], -t, &prod[base + i]):
                    return 1
        top -= 1
    return 0


cdef long long *_to_c(seq, Py_ssize_t n) except NULL:
    cdef long long *buf = <long long *> malloc(max(n, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def mulmod(a, b, phi):
    """Product of two residues modulo the monic polynomial ``phi``."""
    cdef Py_ssize_t d = len(phi) - 1
    if not (_fits(a) and _fits(b) and _fits(phi)):
        return _kernels_py.mulmod(a, b, phi)
    cdef long long *ca = _to_c(a, d)
    cdef long long *cb = NULL
    cdef long long *cp = NULL
    cdef long long *prod = NULL
    cdef int ovf
    try:
        cb = _to_c(b, d)
        cp = _to_c(phi, d + 1)
        prod = <long long *> malloc((2 * d) * sizeof(long long))
        if prod == NULL:
            raise MemoryError()
        with nogil:
            ovf = _mulmod_c(ca, cb, cp, prod, d)
        if ovf:
            return _kernels_py.mulmod(a, b, phi)
        return [prod[i] for i in range(d)]
    finally:
        free(ca)
        free(cb)
        free(cp)
        free(prod)


def power_table(k, phi):
    """Residues of x**j modulo ``phi`` for j = 0..k-1."""
    # Coefficients of x**j mod Phi_k are bounded by those of Phi_k's
    # multiples; the Python version is already cheap and runs once per k.
    return _kernels_py.power_table(k, phi)


def sine_product(args, table, phi):
    """Product over ``args`` of (1 - x**a)(1 - x**-a), reduced modulo ``phi``."""
    cdef Py_ssize_t d = len(phi) - 1
    cdef Py_ssize_t k = len(table)
    cdef Py_ssize_t i
    cdef int ovf = 0
    if not _fits(phi):
        return _kernels_py.sine_product(args, table, phi)
    cdef long long *cp = _to_c(phi, d + 1)
    cdef long long *acc = NULL
    cdef long long *factor = NULL
    cdef long long *prod = NULL
    try:
        acc = <long long *> malloc(d * sizeof(long long))
        factor = <long long *> malloc(d * sizeof(long long))
        prod = <long long *> malloc((2 * d) * sizeof(long long))
        if acc == NULL or factor == NULL or prod == NULL:
            raise MemoryError()
        for i in range(d):
            acc[i] = 0
        acc[0] = 1
        for a in args:
            a %= k
            up = table[a]
            down = table[k - a]
            for i in range(d):
                factor[i] = -(up[i] + down[i])
            factor[0] += 2
            with nogil:
                ovf = _mulmod_c(acc, factor, cp, prod, d)
            if ovf:
                return _kernels_py.sine_product(args, table, phi)
            for i in range(d):
                acc[i] = prod[i]
        return [acc[i] for i in range(d)]
    finally:
        free(cp)
        free(acc)
        free(factor)
        free(prod)


cdef unsigned int _parity_mask(unsigned int a, int dim) nogil:
    """Bit j set when an odd number of generators of a lie above j."""
    cdef unsigned int mask = 0
    cdef int j, above = 0
    for j in range(dim - 1, -1, -1):
        if above & 1:
            mask |= 1u << j
        if a >> j & 1:
            above += 1
    return mask


def blade_product(left, right, int dim):
    """Product of two integer Clifford elements with e_i**2 = 1."""
    cdef Py_ssize_t nl = len(left), nr = len(right), size = 1 << dim
    cdef Py_ssize_t i, j
    if not (_fits(left.values()) and _fits(right.values())):
        return _kernels_py.blade_product(left, right, dim)
    cdef unsigned int *lk = <unsigned int *> malloc(max(nl, 1) * sizeof(unsigned int))
    cdef unsigned int *rk = <unsigned int *> malloc(max(nr, 1) * sizeof(unsigned int))
    cdef long long *lv = <long long *> malloc(max(nl, 1) * sizeof(long long))
    cdef long long *rv = <long long *> malloc(max(nr, 1) * sizeof(long long))
    cdef long long *acc = <long long *> malloc(size * sizeof(long long))
    cdef unsigned int a, b, p
    cdef long long t
    cdef int ovf = 0
    try:
        if lk == NULL or rk == NULL or lv == NULL or rv == NULL or acc == NULL:
            raise MemoryError()
        i = 0
        for key, val in left.items():
            lk[i] = key
            lv[i] = val
            i += 1
        i = 0
        for key, val in right.items():
            rk[i] = key
            rv[i] = val
            i += 1
        with nogil:
            for i in range(size):
                acc[i] = 0
            for i in range(nl):
                a = lk[i]
                p = _parity_mask(a, dim)
                for j in range(nr):
                    b = rk[j]
                    # |rv[j]| < 2**62, so negating it cannot overflow
                    if mul_ovf(lv[i], -rv[j] if popcount(b & p) & 1 else rv[j], &t):
                        ovf = 1
                        break
                    if add_ovf(acc[a ^ b], t, &acc[a ^ b]):
                        ovf = 1
                        break
                if ovf:
                    break
        if ovf:
            return _kernels_py.blade_product(left, right, dim)
        return {k: acc[k] for k in range(size) if acc[k] != 0}
    finally:
        free(lk)
        free(rk)
        free(lv)
        free(rv)
        free(acc)
