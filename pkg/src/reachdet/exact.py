"""Exact rational scalars, index polynomials and dense linear algebra.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.  Matrices are immutable row-major
grids of fractions; vectors are plain tuples of fractions.

Index arguments that name a row or column of a paper-style system (``t``
below) are 1-based.  Python containers stay 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]
Vector = tuple  # tuple[Fraction, ...]

LAPLACE_MAX = 8


class SingularMatrixError(ValueError):
    """Raised when an operation needs a nonsingular matrix and gets a singular one."""


class RationalSyntaxError(ValueError):
    def __init__(self, text: str, offset: int):
        self.text = text
        self.offset = offset
        super().__init__(f"invalid rational {text!r} at offset {offset}")


def parse_rational(text: str) -> Fraction:
    """Parse ``-?[0-9]+(/[1-9][0-9]*)?`` into a Fraction.

    On failure raises :class:`RationalSyntaxError` carrying the offset of
    the first character that cannot extend a valid prefix.
    """
    if not isinstance(text, str):
        raise RationalSyntaxError(repr(text), 0)
    n = len(text)
    pos = 0
    if pos < n and text[pos] == "-":
        pos += 1
    start = pos
    while pos < n and text[pos].isdigit() and text[pos].isascii():
        pos += 1
    if pos == start:
        raise RationalSyntaxError(text, pos)
    if pos < n:
        if text[pos] != "/":
            raise RationalSyntaxError(text, pos)
        pos += 1
        if pos >= n or text[pos] not in "123456789":
            raise RationalSyntaxError(text, pos)
        while pos < n and text[pos].isdigit() and text[pos].isascii():
            pos += 1
        if pos < n:
            raise RationalSyntaxError(text, pos)
    return Fraction(text)


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(q: Fraction) -> str:
    """Canonical ``p/q`` text, or ``p`` when the denominator is 1."""
    return str(q)


def bit_size(q: Fraction) -> int:
    return q.numerator.bit_length() + q.denominator.bit_length()


# --------------------------------------------------------------------------
# Polynomials in the term index


@dataclass(frozen=True)
class IndexPolynomial:
    """Polynomial in the term index ``i`` with ascending rational coefficients.

    Trailing zeros are trimmed; the empty tuple is the zero polynomial.
    """

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = [to_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, c: RationalLike) -> IndexPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def __call__(self, i: int) -> Fraction:
        return poly_eval(self, i)


def poly_eval(p: IndexPolynomial, i: int) -> Fraction:
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * i + c
    return acc


# --------------------------------------------------------------------------
# Matrices


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(to_rational(x) for x in row) for row in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RationalLike]]) -> ExactMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> ExactMatrix:
        ncols = nrows if ncols is None else ncols
        return cls(tuple((Fraction(0),) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(tuple(tuple(Fraction(int(r == c)) for c in range(n)) for r in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx):
        r, c = idx
        return self.rows[r][c]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(tuple(zip(*self.rows)) if self.rows else ())

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def with_column(self, j: int, values: Sequence[Fraction]) -> ExactMatrix:
        if len(values) != self.nrows:
            raise ValueError("column length mismatch")
        return ExactMatrix(
            tuple(row[:j] + (values[r],) + row[j + 1:] for r, row in enumerate(self.rows))
        )

    def minor(self, drop_row: int, drop_col: int) -> ExactMatrix:
        return ExactMatrix(
            tuple(
                row[:drop_col] + row[drop_col + 1:]
                for r, row in enumerate(self.rows)
                if r != drop_row
            )
        )

    def matvec(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(dot(row, v) for row in self.rows)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def dump(self) -> str:
        """Row-major text dump: tab-separated canonical entries, one row per line."""
        return "\n".join("\t".join(format_rational(x) for x in row) for row in self.rows)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    acc = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            acc += a * b
    return acc


def block_diag(blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    zero = Fraction(0)
    rows = []
    col = 0
    for b in blocks:
        left = (zero,) * col
        right = (zero,) * (m - col - b.ncols)
        rows.extend(left + row + right for row in b.rows)
        col += b.ncols
    assert len(rows) == n
    return ExactMatrix(tuple(rows))


def _require_square(M: ExactMatrix) -> None:
    if not M.is_square():
        raise ValueError(f"determinant needs a square matrix, got {M.nrows}x{M.ncols}")


# --------------------------------------------------------------------------
# Determinants


def det_laplace(M: ExactMatrix) -> Fraction:
    """Determinant by first-row cofactor expansion.  Reference oracle only."""
    _require_square(M)
    if M.nrows > LAPLACE_MAX:
        raise ValueError(f"cofactor expansion limited to {LAPLACE_MAX} rows, got {M.nrows}")
    return _laplace(M.rows)


def _laplace(rows) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    rest = rows[1:]
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        sub = tuple(r[:j] + r[j + 1:] for r in rest)
        term = a * _laplace(sub)
        total += -term if j % 2 else term
    return total


def det_gauss(M: ExactMatrix) -> Fraction:
    """Gaussian elimination over the rationals, first nonzero pivot, explicit swap sign."""
    _require_square(M)
    a = M.tolist()
    n = len(a)
    sign = 1
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        pivot_row = a[c]
        piv = pivot_row[c]
        det *= piv
        nz = [k for k in range(c + 1, n) if pivot_row[k] != 0]
        for r in range(c + 1, n):
            row = a[r]
            x = row[c]
            if x == 0:
                continue
            f = x / piv
            for k in nz:
                row[k] -= f * pivot_row[k]
    return det if sign > 0 else -det


def det_bareiss(M: ExactMatrix) -> Fraction:
    """Fraction-free Bareiss elimination; every entry must be an integer."""
    _require_square(M)
    if not M.is_integral():
        raise ValueError("Bareiss path needs an integer matrix")
    a = [[x.numerator for x in row] for row in M.rows]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = 1
    for c in range(n - 1):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        pr = a[c]
        for r in range(c + 1, n):
            row = a[r]
            x = row[c]
            for k in range(c + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row[k] = (piv * row[k] - x * pr[k]) // prev
            row[c] = 0
        prev = piv
    return Fraction(sign * a[n - 1][n - 1])


def det_elimination(M: ExactMatrix) -> Fraction:
    """Exact determinant; integer matrices go through the Bareiss path."""
    _require_square(M)
    if M.is_integral():
        return det_bareiss(M)
    return det_gauss(M)


# --------------------------------------------------------------------------
# Solving, rank, inverse rows


def _lower_triangular(M: ExactMatrix) -> bool:
    return all(M.rows[r][c] == 0 for r in range(M.nrows) for c in range(r + 1, M.ncols))


def _upper_triangular(M: ExactMatrix) -> bool:
    return all(M.rows[r][c] == 0 for r in range(M.nrows) for c in range(r))


def solve(A: ExactMatrix, b: Sequence[RationalLike]) -> Vector:
    """Unique solution of ``A y = b``.  Raises SingularMatrixError if none exists."""
    if not A.is_square():
        raise ValueError("solve needs a square matrix")
    n = A.nrows
    b = [to_rational(x) for x in b]
    if len(b) != n:
        raise ValueError("right-hand side length mismatch")
    if any(A.rows[k][k] == 0 for k in range(n)):
        return _solve_gauss(A, b)
    if _lower_triangular(A):
        y = [Fraction(0)] * n
        for r in range(n):
            row = A.rows[r]
            acc = b[r]
            for c in range(r):
                if row[c]:
                    acc -= row[c] * y[c]
            y[r] = acc / row[r]
        return tuple(y)
    if _upper_triangular(A):
        y = [Fraction(0)] * n
        for r in range(n - 1, -1, -1):
            row = A.rows[r]
            acc = b[r]
            for c in range(r + 1, n):
                if row[c]:
                    acc -= row[c] * y[c]
            y[r] = acc / row[r]
        return tuple(y)
    return _solve_gauss(A, b)


def _solve_gauss(A: ExactMatrix, b: list) -> Vector:
    n = A.nrows
    a = [list(row) + [b[r]] for r, row in enumerate(A.rows)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise SingularMatrixError("system matrix is singular; no unique solution")
        a[c], a[p] = a[p], a[c]
        pr = a[c]
        piv = pr[c]
        nz = [k for k in range(c + 1, n + 1) if pr[k] != 0]
        for r in range(c + 1, n):
            row = a[r]
            if row[c] == 0:
                continue
            f = row[c] / piv
            for k in nz:
                row[k] -= f * pr[k]
            row[c] = Fraction(0)
    y = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        row = a[r]
        acc = row[n]
        for c in range(r + 1, n):
            if row[c]:
                acc -= row[c] * y[c]
        y[r] = acc / row[r]
    return tuple(y)


def rank(M: ExactMatrix) -> int:
    a = M.tolist()
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((k for k in range(r, nrows) if a[k][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        piv = pr[c]
        nz = [k for k in range(c + 1, ncols) if pr[k] != 0]
        for k in range(r + 1, nrows):
            row = a[k]
            if row[c] == 0:
                continue
            f = row[c] / piv
            for j in nz:
                row[j] -= f * pr[j]
            row[c] = Fraction(0)
        r += 1
    return r


def inverse_row(A: ExactMatrix, t: int) -> Vector:
    """Row ``t`` (1-based) of ``A^-1``, found by solving ``A^T w = e_t``.

    The result satisfies ``w . column_i(A) = 1 if i == t else 0``.
    """
    n = A.nrows
    if not 1 <= t <= n:
        raise ValueError(f"row index {t} outside 1..{n}")
    e = [Fraction(int(k == t - 1)) for k in range(n)]
    return solve(A.transpose(), e)
