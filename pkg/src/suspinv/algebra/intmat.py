"""Integer matrices with Smith and Hermite normal forms.

Everything is arbitrary-precision ``int``; no numpy, since overflow would
silently break the lattice equalities built on top of these routines.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import DimensionMismatch, NotSquare


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.col(j) for j in range(self.cols)], self.rows)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            cols = [other.col(j) for j in range(other.cols)]
            return IntMatrix.from_rows(
                [[sum(a * b for a, b in zip(self.row(i), c)) for c in cols] for i in range(self.rows)],
                other.cols,
            )
        v = list(other)
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.cols} columns")
        return [sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows)]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __pow__(self, p: int) -> "IntMatrix":
        if not self.is_square:
            raise NotSquare(f"{self.rows}x{self.cols}")
        if p < 0:
            raise ValueError("negative matrix power")
        result, base = IntMatrix.identity(self.rows), self
        while p:
            if p & 1:
                result = result @ base
            base = base @ base
            p >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.entries)

    def det(self) -> int:
        if not self.is_square:
            raise NotSquare(f"{self.rows}x{self.cols}")
        return bareiss_det(self.tolist())


def left_mul_vec(v: Sequence[int], m: IntMatrix) -> list:
    """Row vector times matrix; entries of v may be any ring elements."""
    if len(v) != m.rows:
        raise DimensionMismatch(f"vector of length {len(v)} against {m.rows} rows")
    out = []
    for j in range(m.cols):
        acc = 0
        for i, a in enumerate(v):
            if m[i, j]:
                acc = acc + a * m[i, j]
        out.append(acc)
    return out


def mat_vec(m: IntMatrix, v: Sequence) -> list:
    """Matrix times column vector; entries of v may be any ring elements."""
    if len(v) != m.cols:
        raise DimensionMismatch(f"vector of length {len(v)} against {m.cols} columns")
    out = []
    for i in range(m.rows):
        acc = 0
        for j, a in enumerate(v):
            if m[i, j]:
                acc = acc + m[i, j] * a
        out.append(acc)
    return out


def bareiss_det(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# Smith normal form -----------------------------------------------------------

def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with D = U m V, U and V unimodular, d1 | d2 | ... >= 0."""
    rows, cols = m.rows, m.cols
    a = m.tolist()
    u = IntMatrix.identity(rows).tolist()
    v = IntMatrix.identity(cols).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # pivot must divide the whole remaining block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return IntMatrix.from_rows(u, rows), IntMatrix.from_rows(a, cols), IntMatrix.from_rows(v, cols)


def diagonal(d: IntMatrix) -> list[int]:
    return [d[i, i] for i in range(min(d.rows, d.cols))]


# Hermite normal form -------------------------------------------------------

def hermite_normal_form(m: IntMatrix) -> IntMatrix:
    """Row-style HNF: echelon, positive pivots, entries above a pivot reduced mod it.

    Zero rows are kept at the bottom so the shape is unchanged.
    """
    a = m.tolist()
    rows, cols = m.rows, m.cols
    r = 0
    for c in range(cols):
        if r == rows:
            break
        # gcd-combine column c of rows r.. into row r
        for i in range(r + 1, rows):
            if a[i][c]:
                x, y, g = _xgcd(a[r][c], a[i][c])
                p, q = a[r][c] // g, a[i][c] // g
                a[r], a[i] = ([x * s + y * t for s, t in zip(a[r], a[i])],
                              [-q * s + p * t for s, t in zip(a[r], a[i])])
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-s for s in a[r]]
        piv = a[r][c]
        for i in range(r):
            q = a[i][c] // piv
            if q:
                a[i] = [s - q * t for s, t in zip(a[i], a[r])]
        r += 1
    return IntMatrix.from_rows(a, cols)


def lattice_basis(vectors: Sequence[Sequence[int]], dim: int) -> list[list[int]]:
    """HNF basis (nonzero rows) of the Z-span of ``vectors`` in Z^dim."""
    if not vectors:
        return []
    h = hermite_normal_form(IntMatrix.from_rows(vectors, dim))
    return [list(h.row(i)) for i in range(h.rows) if any(h.row(i))]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return x0, y0, a


# linear systems ------------------------------------------------------------

def solve_integer(m: IntMatrix, b: Sequence[int]) -> list[int] | None:
    """Some integer x with m x = b, or None when no integer solution exists."""
    u, d, v = smith_normal_form(m)
    ub = u @ list(b)
    y = [0] * m.cols
    for i in range(m.rows):
        di = d[i, i] if i < m.cols else 0
        if di == 0:
            if ub[i]:
                return None
        else:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
    return v @ y


def solve_integer_matrix(m: IntMatrix, rhs: IntMatrix) -> IntMatrix | None:
    """Integer X with m X = rhs (column by column), or None."""
    cols = []
    for j in range(rhs.cols):
        x = solve_integer(m, rhs.col(j))
        if x is None:
            return None
        cols.append(x)
    return IntMatrix.from_rows(cols, m.cols).transpose()


def rational_coordinates(basis: Sequence[Sequence[int]], target: Sequence) -> list[Fraction] | None:
    """Rational c with sum c_i basis_i = target, for linearly independent rows; None if outside the span."""
    r = len(basis)
    n = len(target)
    # augmented system over Q: columns are basis vectors
    aug = [[Fraction(basis[i][j]) for i in range(r)] + [Fraction(target[j])] for j in range(n)]
    piv_cols = []
    row = 0
    for c in range(r):
        p = next((i for i in range(row, n) if aug[i][c] != 0), None)
        if p is None:
            return None  # basis not independent
        aug[row], aug[p] = aug[p], aug[row]
        pv = aug[row][c]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(n):
            if i != row and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        piv_cols.append(c)
        row += 1
    if any(aug[i][r] != 0 for i in range(row, n)):
        return None
    return [aug[i][r] for i in range(r)]
