"""Exact dense linear algebra over a large prime field or the rationals.

Entries are plain Python ints (reduced mod q) or fractions.Fraction, so all
arithmetic is exact; there is no floating point anywhere in the package.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import BadParameters, DimensionMismatch, NotInvertible

# Primes available to randomized rank computations, indexed by the CLI's
# --prime flag.  Index 0 is the default.  Each prime must dwarf the degree
# of any determinant polynomial we evaluate, so that a single random trial
# misses the generic rank with probability at most degree/q.
PRIME_TABLE = (
    4611686018427387847,  # 2**62 - 57
    2305843009213693951,  # 2**61 - 1
    2147483647,           # 2**31 - 1
)
DEFAULT_PRIME = PRIME_TABLE[0]


class PrimeField:
    """Arithmetic modulo a prime q; elements are ints in [0, q)."""

    __slots__ = ("q",)
    mode = "prime"

    def __init__(self, q: int = DEFAULT_PRIME):
        if q < 2:
            raise BadParameters("modulus must be at least 2, got %r" % (q,))
        self.q = q

    zero = 0
    one = 1

    def of(self, x):
        return int(x) % self.q

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def mul(self, a, b):
        return (a * b) % self.q

    def neg(self, a):
        return (-a) % self.q

    def inv(self, a):
        try:
            return pow(a, -1, self.q)
        except ValueError:
            raise NotInvertible("%d has no inverse mod %d" % (a, self.q))

    def describe(self) -> str:
        return "GF(%d)" % self.q

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return "PrimeField(%d)" % self.q


class RationalField:
    """Exact rational arithmetic via fractions.Fraction."""

    __slots__ = ()
    mode = "rational"

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise NotInvertible("zero is not invertible")
        return 1 / Fraction(a)

    def describe(self) -> str:
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()


def default_field() -> PrimeField:
    return PrimeField(DEFAULT_PRIME)


class ExactMatrix:
    """Dense matrix over a PrimeField or RationalField.

    Rank, kernel, and determinant routines never mutate the matrix; they
    run plain Gauss-Jordan elimination on a copy.  At the sizes this
    package meets (a few hundred rows) that is entirely adequate.
    """

    __slots__ = ("nrows", "ncols", "data", "field")

    def __init__(self, data, field, _trusted=False):
        if _trusted:
            self.data = data
        else:
            self.data = [[field.of(x) for x in row] for row in data]
        self.nrows = len(self.data)
        self.ncols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.ncols:
                raise DimensionMismatch("ragged rows in matrix data")
        self.field = field

    @classmethod
    def zeros(cls, nrows, ncols, field):
        z = field.zero
        return cls([[z] * ncols for _ in range(nrows)], field, _trusted=True)

    @classmethod
    def identity(cls, n, field):
        m = cls.zeros(n, n, field)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @classmethod
    def column(cls, entries, field):
        return cls([[x] for x in entries], field)

    def copy(self) -> "ExactMatrix":
        return ExactMatrix([row[:] for row in self.data], self.field, _trusted=True)

    def transpose(self) -> "ExactMatrix":
        data = [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return ExactMatrix(data, self.field, _trusted=True)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.nrows != self.nrows or other.field != self.field:
            raise DimensionMismatch("hstack needs matching row counts and fields")
        data = [self.data[i] + other.data[i] for i in range(self.nrows)]
        return ExactMatrix(data, self.field, _trusted=True)

    def submatrix(self, row_idx, col_idx) -> "ExactMatrix":
        data = [[self.data[i][j] for j in col_idx] for i in row_idx]
        return ExactMatrix(data, self.field, _trusted=True)

    def col(self, j):
        return [self.data[i][j] for i in range(self.nrows)]

    def mul_vec(self, vec):
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length %d, matrix has %d columns"
                                    % (len(vec), self.ncols))
        f = self.field
        out = []
        for row in self.data:
            acc = f.zero
            for a, x in zip(row, vec):
                if a != 0 and x != 0:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows or self.field != other.field:
            raise DimensionMismatch("matmul shape mismatch")
        f = self.field
        ot = other.transpose()
        data = []
        for row in self.data:
            out = []
            for colv in ot.data:
                acc = f.zero
                for a, b in zip(row, colv):
                    if a != 0 and b != 0:
                        acc = f.add(acc, f.mul(a, b))
                out.append(acc)
            data.append(out)
        return ExactMatrix(data, f, _trusted=True)

    def _rref(self):
        """Reduced row echelon form of a working copy.

        Returns (rows, pivot_cols); rows[r] has its pivot in pivot_cols[r]
        and zero rows are dropped.
        """
        f = self.field
        rows = [row[:] for row in self.data]
        nrows, ncols = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(ncols):
            p = None
            for i in range(r, nrows):
                if rows[i][c] != 0:
                    p = i
                    break
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            pivrow = rows[r]
            inv = f.inv(pivrow[c])
            if inv != f.one:
                for j in range(c, ncols):
                    if pivrow[j] != 0:
                        pivrow[j] = f.mul(pivrow[j], inv)
            for i in range(nrows):
                if i != r and rows[i][c] != 0:
                    fac = rows[i][c]
                    cur = rows[i]
                    for j in range(c, ncols):
                        if pivrow[j] != 0:
                            cur[j] = f.sub(cur[j], f.mul(fac, pivrow[j]))
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return rows[:r], pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def in_column_span(self, vec) -> bool:
        """Whether vec is a linear combination of this matrix's columns."""
        if len(vec) != self.nrows:
            raise DimensionMismatch("vector length %d, matrix has %d rows"
                                    % (len(vec), self.nrows))
        aug = ExactMatrix([self.data[i] + [self.field.of(vec[i])]
                           for i in range(self.nrows)], self.field, _trusted=True)
        _, pivots = aug._rref()
        return self.ncols not in pivots

    def right_kernel(self) -> "ExactMatrix":
        """Basis of the null space, one basis vector per column."""
        f = self.field
        rows, pivots = self._rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis_cols = []
        for fc in free:
            v = [f.zero] * self.ncols
            v[fc] = f.one
            for r, pc in enumerate(pivots):
                if rows[r][fc] != 0:
                    v[pc] = f.neg(rows[r][fc])
            basis_cols.append(v)
        if not basis_cols:
            return ExactMatrix([[] for _ in range(self.ncols)], f, _trusted=True)
        data = [[bc[i] for bc in basis_cols] for i in range(self.ncols)]
        return ExactMatrix(data, f, _trusted=True)

    def left_kernel_basis(self) -> "ExactMatrix":
        """Basis of {y : y M = 0}, one basis vector per row."""
        return self.transpose().right_kernel().transpose()

    def det(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("determinant of a %dx%d matrix"
                                    % (self.nrows, self.ncols))
        f = self.field
        n = self.nrows
        d = self.data
        if n == 0:
            return f.one
        if n == 1:
            return d[0][0]
        if n == 2:
            return f.sub(f.mul(d[0][0], d[1][1]), f.mul(d[0][1], d[1][0]))
        if n == 3:
            pos = f.add(f.add(f.mul(d[0][0], f.mul(d[1][1], d[2][2])),
                              f.mul(d[0][1], f.mul(d[1][2], d[2][0]))),
                        f.mul(d[0][2], f.mul(d[1][0], d[2][1])))
            neg = f.add(f.add(f.mul(d[0][2], f.mul(d[1][1], d[2][0])),
                              f.mul(d[0][1], f.mul(d[1][0], d[2][2]))),
                        f.mul(d[0][0], f.mul(d[1][2], d[2][1])))
            return f.sub(pos, neg)
        rows = [row[:] for row in d]
        det = f.one
        for c in range(n):
            p = None
            for i in range(c, n):
                if rows[i][c] != 0:
                    p = i
                    break
            if p is None:
                return f.zero
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = f.neg(det)
            piv = rows[c][c]
            det = f.mul(det, piv)
            inv = f.inv(piv)
            for i in range(c + 1, n):
                if rows[i][c] != 0:
                    fac = f.mul(rows[i][c], inv)
                    cur = rows[i]
                    for j in range(c, n):
                        if rows[c][j] != 0:
                            cur[j] = f.sub(cur[j], f.mul(fac, rows[c][j]))
        return det

    def cofactor(self, i: int, j: int):
        """Signed minor (-1)^(i+j) det(M without row i, column j); 0-based."""
        idx_r = [r for r in range(self.nrows) if r != i]
        idx_c = [c for c in range(self.ncols) if c != j]
        minor = self.submatrix(idx_r, idx_c).det()
        if (i + j) % 2:
            return self.field.neg(minor)
        return minor

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and other.field == self.field
                and other.data == self.data)

    def __repr__(self):
        return "ExactMatrix(%dx%d over %s)" % (self.nrows, self.ncols,
                                               self.field.describe())


def sample_generic_matrix(nrows: int, ncols: int, seed: int,
                          first_column_ones: bool = False,
                          field: PrimeField | None = None) -> ExactMatrix:
    """Matrix with entries drawn uniformly from the field by a seeded RNG.

    Entries are drawn row by row, left to right, so the result is a pure
    function of (nrows, ncols, seed, field).  With first_column_ones the
    first column is overwritten with ones after sampling.
    """
    if field is None:
        field = default_field()
    if getattr(field, "mode", None) != "prime":
        raise BadParameters("uniform sampling needs a finite field")
    if nrows < 0 or ncols < 0:
        raise BadParameters("negative matrix shape")
    rng = random.Random(seed)
    q = field.q
    data = [[rng.randrange(q) for _ in range(ncols)] for _ in range(nrows)]
    if first_column_ones and ncols > 0:
        for row in data:
            row[0] = field.one
    return ExactMatrix(data, field, _trusted=True)
