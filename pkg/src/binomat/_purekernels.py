"""Pure-Python kernels. ``_kernels.pyx`` mirrors the ``*_mod`` functions with
C integer arithmetic; both must agree bit for bit.

Matrices are lists of row lists of ints already reduced into [0, p).
"""

from __future__ import annotations


def matmul_mod(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def matpow_mod(a: list[list[int]], e: int, p: int) -> list[list[int]]:
    n = len(a)
    result = [[int(i == j) % p for j in range(n)] for i in range(n)]
    base = [row[:] for row in a]
    while e:
        if e & 1:
            result = matmul_mod(result, base, p)
        e >>= 1
        if e:
            base = matmul_mod(base, base, p)
    return result


def berkowitz_mod(a: list[list[int]], p: int) -> list[int]:
    """Ascending coefficients of det(xI - a) over GF(p)."""
    n = len(a)
    vect = [1 % p]
    for r in range(n):
        col = [a[i][r] for i in range(r)]
        row = a[r][:r]
        t = [1 % p, (-a[r][r]) % p]
        v = col
        for _ in range(r):
            t.append((-sum(x * y for x, y in zip(row, v))) % p)
            v = [sum(a[i][k] * v[k] for k in range(r)) % p for i in range(r)]
        new = []
        for i in range(r + 2):
            lo = max(0, i - r - 1)
            hi = min(i, r)
            new.append(sum(t[i - k] * vect[k] for k in range(lo, hi + 1)) % p)
        vect = new
    return vect[::-1]


def berkowitz(a, zero, one) -> list:
    """Ascending coefficients of det(xI - a) for entries in any commutative
    ring supporting +, -, * (no division)."""
    n = len(a)
    vect = [one]
    for r in range(n):
        col = [a[i][r] for i in range(r)]
        row = a[r][:r]
        t = [one, -a[r][r]]
        v = col
        for _ in range(r):
            acc = zero
            for x, y in zip(row, v):
                acc = acc + x * y
            t.append(-acc)
            nv = []
            for i in range(r):
                acc = zero
                ai = a[i]
                for k in range(r):
                    acc = acc + ai[k] * v[k]
                nv.append(acc)
            v = nv
        new = []
        for i in range(r + 2):
            acc = zero
            for k in range(max(0, i - r - 1), min(i, r) + 1):
                acc = acc + t[i - k] * vect[k]
            new.append(acc)
        vect = new
    return vect[::-1]
