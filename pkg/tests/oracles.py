"""Independent slow references. Nothing here imports binomat arithmetic."""

from fractions import Fraction
from math import sqrt

PHI_FLOAT = (1 + sqrt(5)) / 2


def naive_fib(k: int) -> int:
    a, b = 0, 1  # F_0, F_1
    if k >= 0:
        for _ in range(k):
            a, b = b, a + b
        return a
    for _ in range(-k):
        a, b = b - a, a  # step down: F_{j-1} = F_{j+1} - F_j
    return a


def pascal(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    row = [1]
    for _ in range(a):
        row = [x + y for x, y in zip([0] + row, row + [0])]
    return row[b]


def fibonomial_signed(n: int, m: int) -> Fraction:
    if m > n:
        return Fraction(0)
    num = den = 1
    for t in range(m):
        num *= naive_fib(n - t)
        den *= naive_fib(t + 1)
    return Fraction((-1) ** (m * (m + 1) // 2) * num, den)


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def matpow(a, e):
    n = len(a)
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(e):
        out = matmul(out, a)
    return out


# polynomials as ascending lists of Fractions


def padd(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def pmul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def pstrip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def cofactor_det(m, zero, one, add, mul, neg):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = zero
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = mul(m[0][j], cofactor_det(minor, zero, one, add, mul, neg))
        total = add(total, term if j % 2 == 0 else neg(term))
    return total


def cofactor_charpoly(a):
    """det(xI - A) by Laplace expansion, ascending Fraction coefficients."""
    n = len(a)
    m = [[[Fraction(-a[i][j]), Fraction(int(i == j))] for j in range(n)] for i in range(n)]
    det = cofactor_det(m, [Fraction(0)], [Fraction(1)], padd, pmul, lambda p: [-c for c in p])
    return pstrip(det)


def eig_float_R(n: int) -> list[float]:
    """Eigenvalue multiset from the signed-power description, as floats."""
    bar = 1 - PHI_FLOAT
    k, odd = divmod(n, 2)
    out = [float((-1) ** k)] if odd else []
    for i in range(1, k + 1):
        ex = 2 * i if odd else 2 * i - 1
        s = (-1) ** (k + i)
        out += [s * PHI_FLOAT**ex, s * bar**ex]
    return sorted(out, key=lambda v: -abs(v))
