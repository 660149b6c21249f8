"""Dense square matrices over an exact scalar ring.

Entries are stored row-major as tuples; ``m[i, j]`` is 0-based while the
constructor helpers that take formulas (``from_function``) pass 1-based
indices, matching how the matrix families are written down.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import kernels
from .finite import GF, PrimeField
from .numbers import DomainError
from .poly import Poly
from .rings import QQ


class SingularMatrixError(ArithmeticError):
    def __init__(self, rank: int, order: int):
        super().__init__(f"matrix of order {order} is singular (rank {rank})")
        self.rank = rank
        self.order = order


class Matrix:
    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows):
        rows = [tuple(ring(x) for x in r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DomainError("matrix must be square with order >= 1")
        self.ring = ring
        self.rows = tuple(rows)

    @classmethod
    def _raw(cls, ring, rows) -> Matrix:
        # rows already coerced into ring
        m = object.__new__(cls)
        m.ring = ring
        m.rows = tuple(tuple(r) for r in rows)
        return m

    @classmethod
    def from_function(cls, ring, n: int, f) -> Matrix:
        """Entry (i, j) = f(i, j) with 1-based i, j."""
        if n < 1:
            raise DomainError("order must be >= 1")
        return cls(ring, [[f(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])

    @classmethod
    def identity(cls, ring, n: int) -> Matrix:
        return cls.from_function(ring, n, lambda i, j: int(i == j))

    @classmethod
    def zero(cls, ring, n: int) -> Matrix:
        return cls.from_function(ring, n, lambda i, j: 0)

    @classmethod
    def diagonal(cls, ring, values) -> Matrix:
        values = list(values)
        return cls.from_function(ring, len(values), lambda i, j: values[i - 1] if i == j else 0)

    @classmethod
    def from_columns(cls, ring, columns) -> Matrix:
        columns = list(columns)
        return cls(ring, list(zip(*columns)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.n)]

    def _same(self, other: Matrix):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected a Matrix, got {type(other).__name__}")
        if other.n != self.n:
            raise DomainError(f"order mismatch: {self.n} vs {other.n}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise TypeError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    # -- integer views used by the fast paths
    def _residues(self) -> list[list[int]] | None:
        if isinstance(self.ring, PrimeField):
            return [[x.value for x in r] for r in self.rows]
        return None

    def _integers(self) -> list[list[int]] | None:
        if self.ring is QQ and all(x.denominator == 1 for r in self.rows for x in r):
            return [[x.numerator for x in r] for r in self.rows]
        return None

    def __add__(self, other):
        self._same(other)
        return Matrix._raw(
            self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        self._same(other)
        return Matrix._raw(
            self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return Matrix._raw(self.ring, [[-a for a in r] for r in self.rows])

    def scale(self, c) -> Matrix:
        c = self.ring(c)
        return Matrix._raw(self.ring, [[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        self._same(other)
        res = self._residues()
        if res is not None:
            p = self.ring.p
            out = kernels.matmul_mod(res, other._residues(), p)
            return Matrix._raw(self.ring, [[self.ring(x) for x in r] for r in out])
        ints, oints = self._integers(), other._integers()
        if ints is not None and oints is not None:
            cols = list(zip(*oints))
            return Matrix._raw(
                QQ,
                [[Fraction(sum(x * y for x, y in zip(r, c))) for c in cols] for r in ints],
            )
        cols = other.columns()
        zero = self.ring.zero
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix._raw(self.ring, out)

    def __rmul__(self, c):
        return self.scale(c)

    def matvec(self, v) -> tuple:
        if len(v) != self.n:
            raise DomainError("vector length does not match the matrix order")
        zero = self.ring.zero
        out = []
        for r in self.rows:
            acc = zero
            for x, y in zip(r, v):
                acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def __pow__(self, e: int) -> Matrix:
        if e < 0:
            return self.inverse() ** (-e)
        res = self._residues()
        if res is not None:
            out = kernels.matpow_mod(res, e, self.ring.p)
            return Matrix._raw(self.ring, [[self.ring(x) for x in r] for r in out])
        result, base = Matrix.identity(self.ring, self.n), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def first_mismatch(self, other: Matrix) -> tuple[int, int] | None:
        """1-based coordinates of the first differing entry, or None."""
        self._same(other)
        for i, (r, s) in enumerate(zip(self.rows, other.rows), 1):
            for j, (a, b) in enumerate(zip(r, s), 1):
                if a != b:
                    return i, j
        return None

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def trace(self):
        acc = self.ring.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def transpose(self) -> Matrix:
        return Matrix._raw(self.ring, list(zip(*self.rows)))

    def charpoly(self) -> Poly:
        """Monic det(xI - A) by the division-free Berkowitz algorithm."""
        res = self._residues()
        if res is not None:
            return Poly(self.ring, kernels.berkowitz_mod(res, self.ring.p))
        if self.ring is QQ:
            # det(xI - A) = d^-n det(d x I - dA): run on integers
            d = lcm(*(x.denominator for r in self.rows for x in r))
            ints = [[int(x * d) for x in r] for r in self.rows]
            cs = kernels.berkowitz(ints, 0, 1)
            n = self.n
            return Poly(QQ, [Fraction(c, d ** (n - k)) for k, c in enumerate(cs)])
        return Poly(self.ring, kernels.berkowitz(self.rows, self.ring.zero, self.ring.one))

    def _rref(self, augment=None):
        """Reduced row echelon form (optionally of [A | augment]); returns
        (rows, pivot columns)."""
        n = self.n
        width = n + (augment.n if augment is not None else 0)
        rows = [
            list(r) + (list(augment.rows[i]) if augment is not None else [])
            for i, r in enumerate(self.rows)
        ]
        pivots = []
        r = 0
        for c in range(n):
            pr = next((k for k in range(r, n) if rows[k][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = self.ring.one / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for k in range(n):
                if k != r and rows[k][c]:
                    f = rows[k][c]
                    rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
            pivots.append(c)
            r += 1
            if r == n:
                break
        assert all(len(row) == width for row in rows)
        return rows, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def inverse(self) -> Matrix:
        rows, pivots = self._rref(Matrix.identity(self.ring, self.n))
        if len(pivots) < self.n:
            raise SingularMatrixError(len(pivots), self.n)
        return Matrix._raw(self.ring, [r[self.n :] for r in rows])

    def is_invertible(self) -> bool:
        return self.rank() == self.n

    def det(self):
        """Determinant by Gaussian elimination (field entries)."""
        rows = [list(r) for r in self.rows]
        n = self.n
        det = self.ring.one
        for c in range(n):
            pr = next((k for k in range(c, n) if rows[k][c]), None)
            if pr is None:
                return self.ring.zero
            if pr != c:
                rows[c], rows[pr] = rows[pr], rows[c]
                det = -det
            piv = rows[c][c]
            det = det * piv
            inv = self.ring.one / piv
            for k in range(c + 1, n):
                if rows[k][c]:
                    f = rows[k][c] * inv
                    rows[k] = [x - f * y for x, y in zip(rows[k], rows[c])]
        return det

    def kernel_basis(self) -> list[tuple]:
        """Basis of the right null space; each vector scaled so its last
        nonzero coordinate is 1."""
        rows, pivots = self._rref()
        n = self.n
        free = [c for c in range(n) if c not in pivots]
        zero, one = self.ring.zero, self.ring.one
        basis = []
        for f in free:
            v = [zero] * n
            v[f] = one
            for r, c in enumerate(pivots):
                v[c] = -rows[r][f]
            last = next(x for x in reversed(v) if x)
            inv = one / last
            basis.append(tuple(x * inv for x in v))
        return basis

    def map(self, fn, ring) -> Matrix:
        return Matrix(ring, [[fn(x) for x in r] for r in self.rows])

    def abs(self) -> Matrix:
        if not getattr(self.ring, "is_ordered", False):
            raise DomainError(f"absolute value needs an ordered ring, not {self.ring!r}")
        return Matrix._raw(self.ring, [[abs(x) for x in r] for r in self.rows])

    def mod(self, p: int) -> Matrix:
        if self.ring is not QQ:
            raise DomainError(f"reduction mod p is defined for rational matrices, not {self.ring!r}")
        return self.map(lambda x: x, GF(p))

    def embed(self, ring) -> Matrix:
        try:
            return self.map(ring, ring)
        except TypeError as exc:
            raise DomainError(f"cannot embed {self.ring!r} into {ring!r}") from exc

    def to_json(self) -> dict:
        return {
            "order": self.n,
            "ring": self.ring.tag,
            "rows": [[str(x) for x in r] for r in self.rows],
        }

    def render(self, fmt: str = "pretty") -> str:
        sep = "," if fmt == "csv" else " "
        return "\n".join(sep.join(str(x) for x in r) for r in self.rows)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Matrix({self.ring!r}, {[[str(x) for x in r] for r in self.rows]})"


def map_entries(a: Matrix, how: str, target=None) -> Matrix:
    """Entrywise image: how is "abs", "mod" (target = prime p) or "embed"
    (target = destination ring)."""
    if how == "abs":
        return a.abs()
    if how == "mod":
        return a.mod(target)
    if how == "embed":
        return a.embed(target)
    raise DomainError(f"unknown entry map {how!r}")
