# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Twin of ``hyptile._kernels_py`` with identical contracts.  Arithmetic
runs on int64 behind a magnitude guard: ``canonicalize_scaled`` raises
OverflowError when inputs are too large to be provably safe, and the
dispatcher falls back to the arbitrary-precision pure kernel.
"""

cdef extern from *:
    ctypedef long long int64 "long long"

DEF MAX_DIM = 64
# with n <= 64 coordinates below this bound, every intermediate value in
# the reduction stays within int64 (sum bound 2^59 plus slack)
DEF SAFE_LIMIT = 9007199254740992  # 2**53


cdef inline int64 floordiv(int64 a, int64 b) nogil:
    cdef int64 t = a / b
    if a % b != 0 and (a < 0) != (b < 0):
        t -= 1
    return t


def canonicalize_scaled(y, big, small):
    """See hyptile._kernels_py.canonicalize_scaled; int64 fast path."""
    cdef Py_ssize_t n = len(y)
    if n > MAX_DIM:
        raise OverflowError("dimension above compiled kernel limit")
    cdef int64 q = big
    cdef int64 p = small
    if q > SAFE_LIMIT or p > SAFE_LIMIT:
        raise OverflowError("side lengths above int64 safety bound")

    cdef int64 yv[MAX_DIM]
    cdef int64 kv[MAX_DIM]
    cdef Py_ssize_t i, l
    cdef int64 v, t, yn
    for i in range(n):
        v = y[i]  # raises OverflowError beyond int64
        if v > SAFE_LIMIT or v < -SAFE_LIMIT:
            raise OverflowError("coordinate above int64 safety bound")
        yv[i] = v
        kv[i] = 0

    cdef int64 pq = p + q
    cdef int64 qp = q - p
    cdef Py_ssize_t last = n - 1
    cdef long iterations = 0

    with nogil:
        for i in range(last):
            t = floordiv(yv[i], q)
            if t != 0:
                yv[i] -= t * q
                yv[i + 1] += t * p
                kv[i] += t

        while True:
            yn = yv[last]
            if yn >= pq:
                l = last
                for i in range(last):
                    if yv[i] >= p:
                        l = i
                        break
                for i in range(l):
                    yv[i] += qp
                    kv[i] -= 1
                if l == last:
                    yv[last] -= pq
                else:
                    yv[l] -= p
                    yv[last] -= q
                kv[last] += 1
                iterations += 1
            elif yn < 0:
                l = last
                for i in range(last):
                    if yv[i] < qp:
                        l = i
                        break
                for i in range(l):
                    yv[i] -= qp
                    kv[i] += 1
                if l == last:
                    yv[last] += pq
                else:
                    yv[l] += p
                    yv[last] += q
                kv[last] -= 1
                iterations += 1
            else:
                break

        if yv[last] >= q:
            l = -1
            for i in range(last):
                if yv[i] >= p:
                    l = i
                    break
            if l >= 0:
                for i in range(l):
                    yv[i] += qp
                    kv[i] -= 1
                yv[l] -= p
                yv[last] -= q
                kv[last] += 1

    return [yv[i] for i in range(n)], [kv[i] for i in range(n)], iterations


def fill_torus_cells(int[::1] assign, int[::1] residues, int[::1] big_offsets,
                     int[::1] small_offsets, Py_ssize_t n, int m):
    """See hyptile._kernels_py.fill_torus_cells."""
    cdef long long strides[MAX_DIM]
    cdef Py_ssize_t j, ri, oi
    cdef long long idx
    cdef int c, owner
    cdef Py_ssize_t count = residues.shape[0] // n
    cdef Py_ssize_t nbig = big_offsets.shape[0] // n
    cdef Py_ssize_t nsmall = small_offsets.shape[0] // n
    cdef int[::1] offsets
    cdef Py_ssize_t ncells
    cdef int owner_bit
    if n > MAX_DIM:
        raise OverflowError("dimension above compiled kernel limit")
    strides[0] = 1
    for j in range(1, n):
        strides[j] = strides[j - 1] * m

    for ri in range(count):
        for owner_bit in range(2):
            if owner_bit == 0:
                offsets = big_offsets
                ncells = nbig
            else:
                offsets = small_offsets
                ncells = nsmall
            owner = 2 * <int> ri + owner_bit
            with nogil:
                for oi in range(ncells):
                    idx = 0
                    for j in range(n):
                        c = residues[ri * n + j] + offsets[oi * n + j]
                        if c >= m:
                            c -= m
                        idx += c * strides[j]
                    if assign[idx] != -1:
                        with gil:
                            return idx
                    assign[idx] = owner
    return -1


def facet_events(int[::1] assign, Py_ssize_t n, int m):
    """See hyptile._kernels_py.facet_events."""
    cdef long long total = 1
    cdef Py_ssize_t axis
    cdef long long stride, block, wrap, idx, nb
    cdef long long a, b
    for axis in range(n):
        total *= m
    events = []
    for axis in range(n):
        stride = 1
        for _ in range(axis):
            stride *= m
        block = stride * m
        wrap = block - stride
        for idx in range(total):
            a = assign[idx]
            if (idx % block) < wrap:
                nb = idx + stride
            else:
                nb = idx - wrap
            b = assign[nb]
            if a != b and ((a ^ b) & 1) == 0:
                events.append((a * total + b) * 64 + axis)
    return events
