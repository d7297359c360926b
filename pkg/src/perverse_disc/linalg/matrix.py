"""
Dense exact matrices over the rationals.

Entries are `fractions.Fraction`, so every value is kept in lowest terms and
no operation rounds. Shapes with zero rows or zero columns are legal: they
stand for maps to or from the zero space.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import DimensionMismatchError, NotInvertibleError

Scalar = Union[int, Fraction]
Row = Tuple[Fraction, ...]

_RATIONAL = re.compile(r"([-−]?)([0-9]+)(?:/([0-9]+))?")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (optional leading ``-`` or ``−``) losslessly."""
    match = _RATIONAL.fullmatch(text)
    if match is None:
        raise ValueError(f"not a rational number: {text!r}")
    sign, numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(int(numerator), int(denominator) if denominator else 1)
    return -value if sign else value


def format_rational(value: Fraction) -> str:
    """Render a rational as ``p`` or ``p/q`` with an ASCII minus sign."""
    return str(Fraction(value))


def _coerce(value: Union[Scalar, str]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"matrix entries must be int, Fraction or str, got {type(value).__name__}")
    return Fraction(value)


@dataclass(frozen=True)
class Matrix:
    """An immutable ``rows × cols`` grid of rationals, stored row-major."""

    rows: int
    cols: int
    entries: Tuple[Row, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DimensionMismatchError(
                f"entries do not form a {self.rows}x{self.cols} grid"
            )
        if not all(type(x) is Fraction for row in self.entries for x in row):
            object.__setattr__(
                self,
                "entries",
                tuple(tuple(_coerce(x) for x in row) for row in self.entries),
            )

    # Constructors

    @classmethod
    def of(
        cls,
        data: Sequence[Sequence[Union[Scalar, str]]],
        rows: Optional[int] = None,
        cols: Optional[int] = None,
    ) -> "Matrix":
        """Build from nested rows; pass ``cols`` explicitly for 0-row matrices."""
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(rows, cols, tuple(tuple(_coerce(x) for x in row) for row in data))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Union[Scalar, str]]], rows: int) -> "Matrix":
        if any(len(column) != rows for column in columns):
            raise DimensionMismatchError(f"every column must have {rows} entries")
        return cls.of(columns, rows=len(columns), cols=rows).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zero = Fraction(0)
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def block_diagonal(cls, *blocks: "Matrix") -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        zero = Fraction(0)
        out: List[Row] = []
        offset = 0
        for block in blocks:
            left = (zero,) * offset
            right = (zero,) * (cols - offset - block.cols)
            out.extend(left + row + right for row in block.entries)
            offset += block.cols
        return cls(rows, cols, tuple(out))

    # Shape helpers

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def column(self, j: int) -> Row:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> Tuple[Row, ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix(self.cols, 0, ((),) * self.cols)
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def take_rows(self, indices: Iterable[int]) -> "Matrix":
        picked = tuple(self.entries[i] for i in indices)
        return Matrix(len(picked), self.cols, picked)

    def take_columns(self, indices: Iterable[int]) -> "Matrix":
        idx = list(indices)
        return Matrix(self.rows, len(idx), tuple(tuple(row[j] for j in idx) for row in self.entries))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionMismatchError(f"hstack of {self.shape} and {other.shape}")
        return Matrix(
            self.rows,
            self.cols + other.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionMismatchError(f"vstack of {self.shape} and {other.shape}")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    # Arithmetic

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return Matrix.zeros(self.rows, other.cols)
        other_columns = list(zip(*other.entries))
        zero = Fraction(0)
        return Matrix(
            self.rows,
            other.cols,
            tuple(
                tuple(sum((a * b for a, b in zip(row, column)), zero) for column in other_columns)
                for row in self.entries
            ),
        )

    def _zip_with(self, other: "Matrix", op_name: str, sign: int) -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot {op_name} {self.shape} and {other.shape}")
        return Matrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a + sign * b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._zip_with(other, "add", 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._zip_with(other, "subtract", -1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, factor: Scalar) -> "Matrix":
        c = Fraction(factor)
        return Matrix(self.rows, self.cols, tuple(tuple(c * x for x in row) for row in self.entries))

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"[{self.rows}x{self.cols}]"
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.entries) + "]"


def _reduce_rows(work: List[List[Fraction]], limit: int) -> List[int]:
    """Gauss-Jordan elimination in place, pivoting only in the first ``limit`` columns.

    The pivot in each column is the first nonzero entry scanning downwards.
    Returns the pivot columns in order.
    """
    pivots: List[int] = []
    pivot_row = 0
    nrows = len(work)
    for col in range(limit):
        if pivot_row == nrows:
            break
        source = next((r for r in range(pivot_row, nrows) if work[r][col] != 0), None)
        if source is None:
            continue
        work[pivot_row], work[source] = work[source], work[pivot_row]
        lead = work[pivot_row][col]
        if lead != 1:
            work[pivot_row] = [x / lead for x in work[pivot_row]]
        prow = work[pivot_row]
        for r in range(nrows):
            if r == pivot_row:
                continue
            factor = work[r][col]
            if factor != 0:
                work[r] = [x - factor * p for x, p in zip(work[r], prow)]
        pivots.append(col)
        pivot_row += 1
    return pivots


def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns."""
    work = [list(row) for row in m.entries]
    pivots = _reduce_rows(work, m.cols)
    return Matrix(m.rows, m.cols, tuple(tuple(row) for row in work)), tuple(pivots)


def rcef(m: Matrix) -> Tuple[Matrix, int]:
    """Reduced column echelon form: the canonical basis of the column span.

    Returns the ``m.rows × rank`` matrix of nonzero columns together with the
    rank. Two matrices have the same column span exactly when their results
    are equal.
    """
    reduced, pivots = rref(m.transpose())
    rank = len(pivots)
    return reduced.take_rows(range(rank)).transpose(), rank


def matrix_rank(m: Matrix) -> int:
    return len(rref(m)[1])


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """A solution X of ``a @ X == b`` with free variables set to zero.

    Returns None when the system is inconsistent. The solution is unique when
    the columns of ``a`` are independent.
    """
    if a.rows != b.rows:
        raise DimensionMismatchError(f"cannot solve {a.shape} against {b.shape}")
    work = [list(ra) + list(rb) for ra, rb in zip(a.entries, b.entries)]
    pivots = _reduce_rows(work, a.cols)
    for row in work[len(pivots):]:
        if any(x != 0 for x in row[a.cols:]):
            return None
    solution = [[Fraction(0)] * b.cols for _ in range(a.cols)]
    for i, col in enumerate(pivots):
        solution[col] = work[i][a.cols:]
    return Matrix(a.cols, b.cols, tuple(tuple(row) for row in solution))


def inverse_matrix(m: Matrix) -> Matrix:
    """Inverse by Gauss-Jordan on ``[m | I]``."""
    if m.rows != m.cols:
        raise NotInvertibleError(f"matrix is not square (shape = {m.shape})")
    n = m.rows
    identity = Matrix.identity(n)
    work = [list(row) + list(unit) for row, unit in zip(m.entries, identity.entries)]
    if len(_reduce_rows(work, n)) < n:
        raise NotInvertibleError("matrix is singular")
    return Matrix(n, n, tuple(tuple(row[n:]) for row in work))


def determinant(m: Matrix) -> Fraction:
    if m.rows != m.cols:
        raise DimensionMismatchError(f"determinant of non-square matrix {m.shape}")
    work = [list(row) for row in m.entries]
    n = m.rows
    det = Fraction(1)
    for col in range(n):
        source = next((r for r in range(col, n) if work[r][col] != 0), None)
        if source is None:
            return Fraction(0)
        if source != col:
            work[col], work[source] = work[source], work[col]
            det = -det
        lead = work[col][col]
        det *= lead
        for r in range(col + 1, n):
            factor = work[r][col] / lead
            if factor != 0:
                work[r] = [x - factor * p for x, p in zip(work[r], work[col])]
    return det
