"""Exact integer matrices and Smith normal form.

Matrices are immutable, row major, and arbitrary precision.  A matrix with
``rows`` r and ``cols`` c represents a homomorphism Z^c -> Z^r sending the
j-th basis vector to column j.  Empty matrices (r = 0 or c = 0) are legal and
mean what they should.

Everything downstream (fixed schemes of twisted Frobenius maps, kernels of
character maps, centers of root data) reduces to the Smith normal form
computed here, so this module has no dependencies beyond the error types.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import DimensionMismatch, InvalidArgument


class IntMatrix:
    """An immutable matrix over Z.

    >>> a = IntMatrix([[2, 4], [6, 8]])
    >>> a.rows, a.cols
    (2, 2)
    >>> a[1, 0]
    6
    >>> a.transpose() @ IntMatrix.identity(2) == a.transpose()
    True
    """

    __slots__ = ("_data", "rows", "cols")

    def __init__(self, data: Iterable[Sequence[int]], *, cols: int | None = None):
        rows = []
        for row in data:
            rows.append(tuple(self._as_int(x) for x in row))
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise InvalidArgument("ragged rows: all rows must have the same length")
            if cols is not None and cols != width:
                raise InvalidArgument(f"cols = {cols} disagrees with row width {width}")
        else:
            width = 0 if cols is None else cols
        if width < 0:
            raise InvalidArgument("cols must be nonnegative")
        self._data = tuple(rows)
        self.rows = len(rows)
        self.cols = width

    @staticmethod
    def _as_int(x) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidArgument(f"matrix entries must be plain integers, got {x!r}")
        return x

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        if n < 0:
            raise InvalidArgument("identity size must be nonnegative")
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        if rows < 0 or cols < 0:
            raise InvalidArgument("matrix dimensions must be nonnegative")
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], *, rows: int | None = None) -> "IntMatrix":
        """Build the matrix whose j-th column is columns[j]."""
        cols = list(columns)
        if cols:
            height = len(cols[0])
            if any(len(c) != height for c in cols):
                raise InvalidArgument("ragged columns: all columns must have the same length")
            if rows is not None and rows != height:
                raise InvalidArgument(f"rows = {rows} disagrees with column height {height}")
        else:
            height = 0 if rows is None else rows
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(height)], cols=len(cols))

    @property
    def data(self) -> tuple[tuple[int, ...], ...]:
        return self._data

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self._data[i][j] for i in range(self.rows))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        if self.rows and self.cols:
            return f"IntMatrix({[list(r) for r in self._data]})"
        return f"IntMatrix.zeros({self.rows}, {self.cols})"

    def _require_same_shape(self, other: "IntMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        self._require_same_shape(other)
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        self._require_same_shape(other)
        return IntMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in row] for row in self._data], cols=self.cols)

    def __rmul__(self, k: int) -> "IntMatrix":
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return IntMatrix([[k * a for a in row] for row in self._data], cols=self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ocols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ocols] for row in self._data],
            cols=other.cols,
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise InvalidArgument(f"determinant needs a square matrix, got {self.rows}x{self.cols}")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self._data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    # Bareiss update: division is exact
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.is_square and self.det() in (1, -1)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))


def _swap_rows(m: list[list[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: list[list[int]], i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _row_addmul(m: list[list[int]], dst: int, src: int, k: int) -> None:
    if k:
        row_dst, row_src = m[dst], m[src]
        for j in range(len(row_dst)):
            row_dst[j] += k * row_src[j]


def _col_addmul(m: list[list[int]], dst: int, src: int, k: int) -> None:
    if k:
        for row in m:
            row[dst] += k * row[src]


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (u, d, v) with u @ a @ v == d in Smith normal form.

    u and v are unimodular; d is diagonal with nonnegative entries satisfying
    d[0,0] | d[1,1] | ... and zeros at the end.  Pivot selection is the
    smallest nonzero entry in absolute value, ties broken by (row, column)
    index, which makes the transforms deterministic.

    >>> u, d, v = smith_normal_form(IntMatrix([[2, 4], [6, 8]]))
    >>> d.diagonal()
    (2, 4)
    >>> u @ IntMatrix([[2, 4], [6, 8]]) @ v == d
    True
    """
    r, c = a.rows, a.cols
    m = [list(row) for row in a.data]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    t = 0
    while t < min(r, c):
        # locate the pivot: smallest absolute nonzero entry, (i, j) tie-break
        piv = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                e = m[i][j]
                if e != 0 and (best is None or abs(e) < best):
                    best = abs(e)
                    piv = (i, j)
        if piv is None:
            break
        if piv != (t, t):
            if piv[0] != t:
                _swap_rows(m, t, piv[0])
                _swap_rows(u, t, piv[0])
            if piv[1] != t:
                _swap_cols(m, t, piv[1])
                _swap_cols(v, t, piv[1])

        # clear column t below the pivot, then row t to its right; if any
        # remainder survives, a strictly smaller pivot now exists and we loop
        dirty = False
        d = m[t][t]
        for i in range(t + 1, r):
            if m[i][t]:
                q = m[i][t] // d
                _row_addmul(m, i, t, -q)
                _row_addmul(u, i, t, -q)
                if m[i][t]:
                    dirty = True
        for j in range(t + 1, c):
            if m[t][j]:
                q = m[t][j] // d
                _col_addmul(m, j, t, -q)
                _col_addmul(v, j, t, -q)
                if m[t][j]:
                    dirty = True
        if dirty:
            continue

        # divisibility fix-up: the pivot must divide the rest of the block
        d = m[t][t]
        bad = None
        for i in range(t + 1, r):
            if any(m[i][j] % d for j in range(t + 1, c)):
                bad = i
                break
        if bad is not None:
            _row_addmul(m, t, bad, 1)
            _row_addmul(u, t, bad, 1)
            continue
        t += 1

    for i in range(min(r, c)):
        if m[i][i] < 0:
            for j in range(c):
                m[i][j] = -m[i][j]
            for j in range(r):
                u[i][j] = -u[i][j]

    return IntMatrix(u, cols=r), IntMatrix(m, cols=c), IntMatrix(v, cols=c)


def rank(a: IntMatrix) -> int:
    """The rank of a over Q (= number of nonzero Smith invariants)."""
    _, d, _ = smith_normal_form(a)
    return sum(1 for e in d.diagonal() if e != 0)


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """A basis of ker(a: Z^c -> Z^r) as the columns of a c x k matrix.

    The basis spans a saturated direct summand of Z^c (the kernel of an
    integer matrix always is one), so each column is primitive.  Columns are
    the kernel columns of the Smith decomposition, sign-normalized so the
    first nonzero entry of each is positive.

    >>> kernel_basis(IntMatrix([[1, -1], [-1, 1]])).column(0)
    (1, 1)
    """
    _, d, v = smith_normal_form(a)
    nonzero = sum(1 for e in d.diagonal() if e != 0)
    cols = []
    for j in range(nonzero, a.cols):
        col = list(v.column(j))
        lead = next((x for x in col if x != 0), 0)
        if lead < 0:
            col = [-x for x in col]
        cols.append(col)
    return IntMatrix.from_columns(cols, rows=a.cols)
