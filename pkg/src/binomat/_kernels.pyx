# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) kernels for p < 2**31. Same contracts as _purekernels."""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef i64* _load(list a, Py_ssize_t n, i64 p) except NULL:
    cdef i64* m = <i64*> malloc(n * n * sizeof(i64))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef list row
    for i in range(n):
        row = a[i]
        for j in range(n):
            m[i * n + j] = ((<i64> row[j]) % p + p) % p
    return m


cdef list _store(i64* m, Py_ssize_t n):
    return [[m[i * n + j] for j in range(n)] for i in range(n)]


cdef void _mul(i64* a, i64* b, i64* out, Py_ssize_t n, i64 p) noexcept nogil:
    cdef Py_ssize_t i, j, k
    cdef i64 acc
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = (acc + a[i * n + k] * b[k * n + j]) % p
            out[i * n + j] = acc


def matmul_mod(list a, list b, long long p):
    cdef Py_ssize_t n = len(a)
    cdef i64* x = _load(a, n, p)
    cdef i64* y = NULL
    cdef i64* z = NULL
    try:
        y = _load(b, n, p)
        z = <i64*> malloc(n * n * sizeof(i64))
        if z == NULL:
            raise MemoryError()
        _mul(x, y, z, n, p)
        return _store(z, n)
    finally:
        free(x)
        free(y)
        free(z)


def matpow_mod(list a, object e, long long p):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i
    cdef i64* base = _load(a, n, p)
    cdef i64* res = <i64*> malloc(n * n * sizeof(i64))
    cdef i64* tmp = <i64*> malloc(n * n * sizeof(i64))
    cdef i64* swap
    try:
        if res == NULL or tmp == NULL:
            raise MemoryError()
        for i in range(n * n):
            res[i] = 0
        for i in range(n):
            res[i * n + i] = 1 % p
        while e:
            if e & 1:
                _mul(res, base, tmp, n, p)
                swap = res; res = tmp; tmp = swap
            e >>= 1
            if e:
                _mul(base, base, tmp, n, p)
                swap = base; base = tmp; tmp = swap
        return _store(res, n)
    finally:
        free(base)
        free(res)
        free(tmp)


def berkowitz_mod(list a, long long p):
    cdef Py_ssize_t n = len(a)
    cdef i64* m = _load(a, n, p)
    cdef i64* vect = <i64*> malloc((n + 2) * sizeof(i64))
    cdef i64* nvect = <i64*> malloc((n + 2) * sizeof(i64))
    cdef i64* t = <i64*> malloc((n + 2) * sizeof(i64))
    cdef i64* v = <i64*> malloc((n + 1) * sizeof(i64))
    cdef i64* nv = <i64*> malloc((n + 1) * sizeof(i64))
    cdef i64* swap
    cdef Py_ssize_t r, i, k, s, lo, hi
    cdef i64 acc
    try:
        if vect == NULL or nvect == NULL or t == NULL or v == NULL or nv == NULL:
            raise MemoryError()
        with nogil:
            vect[0] = 1 % p
            for r in range(n):
                t[0] = 1 % p
                t[1] = (p - m[r * n + r]) % p
                for i in range(r):
                    v[i] = m[i * n + r]
                for s in range(r):
                    acc = 0
                    for k in range(r):
                        acc = (acc + m[r * n + k] * v[k]) % p
                    t[s + 2] = (p - acc) % p
                    for i in range(r):
                        acc = 0
                        for k in range(r):
                            acc = (acc + m[i * n + k] * v[k]) % p
                        nv[i] = acc
                    swap = v; v = nv; nv = swap
                for i in range(r + 2):
                    lo = i - r - 1
                    if lo < 0:
                        lo = 0
                    hi = i if i < r else r
                    acc = 0
                    for k in range(lo, hi + 1):
                        acc = (acc + t[i - k] * vect[k]) % p
                    nvect[i] = acc
                swap = vect; vect = nvect; nvect = swap
        return [vect[n - i] for i in range(n + 1)]
    finally:
        free(m)
        free(vect)
        free(nvect)
        free(t)
        free(v)
        free(nv)
