"""Exact integer and rational matrix algebra.

Everything here runs over arbitrary-precision integers or `fractions.Fraction`;
no floating point is used anywhere, so downstream invariant checks can assert
equality with zero tolerance.

The three public computations are Smith normal form with unimodular
transforms, rational rank, and the inertia (signature) of a symmetric
rational form under congruence diagonalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class NonSymmetricMatrix(ValueError):
    """Raised when a symmetric form is required but the input is not."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows * cols")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(int(x) for r in rows for x in r)
        return cls(len(rows), ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        a, b = self.to_rows(), other.to_rows()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntMatrix.from_rows(out) if out else IntMatrix.zeros(0, other.cols)


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form data: U * A * V = diag(d_1 ... d_r) padded with zeros.

    `diag` lists only the nonzero invariant factors, each dividing the next;
    `left` and `right` are unimodular.
    """

    diag: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        entries = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(self.diag):
            entries[i][i] = d
        return IntMatrix.from_rows(entries) if rows else IntMatrix.zeros(0, cols)

    @property
    def rank(self) -> int:
        return len(self.diag)


@dataclass(frozen=True)
class SignatureTriple:
    """Inertia of a symmetric rational form."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus


def _min_pivot(m, t, rows, cols):
    """Position of the smallest nonzero |entry| in the trailing block, scan order row-major."""
    best = None
    best_abs = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = m[i][j]
            if v != 0 and (best_abs is None or abs(v) < best_abs):
                best, best_abs = (i, j), abs(v)
    return best


def smith_normal_form(A: IntMatrix) -> SNFResult:
    """Diagonalize A over the integers with unimodular row/column transforms.

    Pivot choice is the smallest nonzero absolute value in the remaining
    block, ties broken by row-major scan order, which makes the output
    deterministic.
    """
    rows, cols = A.rows, A.cols
    m = A.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def row_op(dst, src, q):
        m[dst] = [a - q * b for a, b in zip(m[dst], m[src])]
        u[dst] = [a - q * b for a, b in zip(u[dst], u[src])]

    def col_op(dst, src, q):
        for r in m:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(rows, cols):
        pos = _min_pivot(m, t, rows, cols)
        if pos is None:
            break
        while True:
            i, j = pos
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            pivot = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    row_op(i, t, m[i][t] // pivot)
                    dirty = dirty or m[i][t] != 0
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    col_op(j, t, m[t][j] // pivot)
                    dirty = dirty or m[t][j] != 0
            if dirty:
                pos = _min_pivot(m, t, rows, cols)
                continue
            # pivot must divide the whole trailing block for the chain property
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # pull the offending row up, then repeat
            pos = _min_pivot(m, t, rows, cols)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    diag = tuple(m[i][i] for i in range(t))
    left = IntMatrix.from_rows(u) if rows else IntMatrix.zeros(0, 0)
    right = IntMatrix.from_rows(v) if cols else IntMatrix.zeros(0, 0)
    return SNFResult(diag, left, right)


def rational_rank(A: IntMatrix) -> int:
    """Rank of A over the rationals, by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in A.to_rows()]
    rows, cols = A.rows, A.cols
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(r + 1, rows):
            if m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def symmetric_signature(Q) -> SignatureTriple:
    """Inertia of a symmetric matrix of exact rationals via congruence moves.

    Zero diagonal entries are repaired with the standard add-a-row move when
    an off-diagonal partner exists; rows that are entirely zero count toward
    `n_zero`.
    """
    m = [[Fraction(x) for x in row] for row in Q]
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSymmetricMatrix("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise NonSymmetricMatrix(f"entries ({i},{j}) and ({j},{i}) differ")

    n_plus = n_minus = n_zero = 0
    for k in range(n):
        if m[k][k] == 0:
            partner = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
            if partner is None:
                n_zero += 1
                continue
            # congruence: add (or, if that cancels, subtract) row/col `partner`
            # into row/col k; one of the two signs always creates a pivot
            c, d = m[k][partner], m[partner][partner]
            eps = 1 if 2 * c + d != 0 else -1
            for j in range(n):
                m[k][j] += eps * m[partner][j]
            for i in range(n):
                m[i][k] += eps * m[i][partner]
        pivot = m[k][k]
        if pivot > 0:
            n_plus += 1
        else:
            n_minus += 1
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / pivot
                for j in range(n):
                    m[i][j] -= f * m[k][j]
                for j in range(n):
                    m[j][i] -= f * m[j][k]
    return SignatureTriple(n_plus, n_minus, n_zero)


def determinant(A: IntMatrix) -> int:
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    m = A.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
