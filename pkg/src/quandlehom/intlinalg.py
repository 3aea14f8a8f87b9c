"""Exact integer matrix algebra: Smith normal form with unimodular
transforms, determinants, and integer linear-system solving.

Entries are Python ints throughout; nothing here ever touches floating
point.  Matrices at this project's scale are tiny, so the implementation
favors a single fully-tested code path over speed.
"""

from dataclasses import dataclass


class IntMatrix:
    """A dense, effectively immutable integer matrix.

    >>> IntMatrix([[1, 2], [3, 4]]) @ IntMatrix.identity(2)
    IntMatrix([[1, 2], [3, 4]])
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data, cols=None):
        data = [list(row) for row in data]
        if data:
            width = len(data[0])
        elif cols is not None:
            width = cols
        else:
            raise ValueError("cols is required for a matrix with no rows")
        if cols is not None and cols != width:
            raise ValueError(f"cols={cols} does not match row length {width}")
        for i, row in enumerate(data):
            if len(row) != width:
                raise ValueError(f"row {i} has length {len(row)}, expected {width}")
            for j, e in enumerate(row):
                if not isinstance(e, int) or isinstance(e, bool):
                    raise ValueError(f"entry ({i},{j}) = {e!r} is not an int")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def to_rows(self):
        """A fresh list-of-lists copy of the entries."""
        return [row.copy() for row in self._data]

    def transpose(self):
        return IntMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ot = other._data
        out = []
        for row in self._data:
            out.append(
                [
                    sum(row[k] * ot[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
            )
        return IntMatrix(out, cols=other.cols)

    def apply(self, vec):
        """Matrix-vector product as a list of ints."""
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != cols {self.cols}")
        return [sum(row[k] * vec[k] for k in range(self.cols)) for row in self._data]

    def is_zero(self):
        return all(e == 0 for row in self._data for e in row)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __repr__(self):
        if self.rows * self.cols > 36:
            return f"IntMatrix(shape={self.shape})"
        return f"IntMatrix({self._data!r})"


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == D with U, V unimodular and D diagonal with a
    divisibility chain d1 | d2 | ... and trailing zeros."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        return tuple(
            self.D[i, i] for i in range(min(self.D.rows, self.D.cols))
        )

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)


def _find_pivot(d, k, m, n):
    """Position of a nonzero entry of minimal |value| in d[k:, k:], or None."""
    best = None
    best_abs = None
    for i in range(k, m):
        row = d[i]
        for j in range(k, n):
            e = row[j]
            if e and (best_abs is None or abs(e) < best_abs):
                best, best_abs = (i, j), abs(e)
                if best_abs == 1:
                    return best
    return best


def snf(a):
    """Smith normal form of `a` with both unimodular transforms.

    >>> snf(IntMatrix([[2, 0], [0, 3]])).diagonal
    (1, 6)
    """
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    m, n = a.rows, a.cols
    d = a.to_rows()
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i1, i2):
        d[i1], d[i2] = d[i2], d[i1]
        u[i1], u[i2] = u[i2], u[i1]

    def swap_cols(j1, j2):
        for row in d:
            row[j1], row[j2] = row[j2], row[j1]
        for row in v:
            row[j1], row[j2] = row[j2], row[j1]

    def add_row(src, dst, q):
        # row dst += q * row src
        ds, dd = d[src], d[dst]
        for j in range(n):
            dd[j] += q * ds[j]
        us, ud = u[src], u[dst]
        for j in range(m):
            ud[j] += q * us[j]

    def add_col(src, dst, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for k in range(min(m, n)):
        pos = _find_pivot(d, k, m, n)
        if pos is None:
            break
        while True:
            pi, pj = pos
            if pi != k:
                swap_rows(k, pi)
            if pj != k:
                swap_cols(k, pj)
            pivot = d[k][k]
            for i in range(k + 1, m):
                if d[i][k]:
                    add_row(k, i, -(d[i][k] // pivot))
            for j in range(k + 1, n):
                if d[k][j]:
                    add_col(k, j, -(d[k][j] // pivot))
            # floor division leaves remainders strictly smaller than |pivot|,
            # so re-pivoting terminates
            if any(d[i][k] for i in range(k + 1, m)) or any(
                d[k][j] for j in range(k + 1, n)
            ):
                pos = _find_pivot(d, k, m, n)
                continue
            offender = None
            for i in range(k + 1, m):
                row = d[i]
                for j in range(k + 1, n):
                    if row[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # pull the non-divisible row up so the next pass shrinks the pivot
            add_row(offender, k, 1)
            pos = (k, k)
        if d[k][k] < 0:
            for j in range(n):
                d[k][j] = -d[k][j]
            for j in range(m):
                u[k][j] = -u[k][j]

    return SmithDecomposition(
        U=IntMatrix(u, cols=m), D=IntMatrix(d, cols=n), V=IntMatrix(v, cols=n)
    )


def det(a):
    """Exact determinant of a square integer matrix (Bareiss algorithm)."""
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    if a.rows != a.cols:
        raise ValueError(f"determinant requires a square matrix, got {a.shape}")
    n = a.rows
    if n == 0:
        return 1
    w = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if w[k][k] == 0:
            for i in range(k + 1, n):
                if w[i][k]:
                    w[k], w[i] = w[i], w[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) // prev
            w[i][k] = 0
        prev = w[k][k]
    return sign * w[n - 1][n - 1]


def is_unimodular(a):
    return a.rows == a.cols and abs(det(a)) == 1


def solve_in_image(a, b):
    """An integer x with a @ x == b, or None if b is not in the image of
    `a` over the integers.  The solution is re-verified before returning.
    """
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    b = list(b)
    if len(b) != a.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {a.rows}")
    for i, e in enumerate(b):
        if not isinstance(e, int) or isinstance(e, bool):
            raise ValueError(f"b[{i}] = {e!r} is not an int")
    dec = snf(a)
    c = dec.U.apply(b)
    y = [0] * a.cols
    for i in range(min(a.rows, a.cols)):
        di = dec.D[i, i]
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di:
                return None
            y[i] = c[i] // di
    for i in range(min(a.rows, a.cols), a.rows):
        if c[i] != 0:
            return None
    x = dec.V.apply(y)
    if a.apply(x) != b:  # exactness guard; should be unreachable
        raise AssertionError("solve_in_image produced a non-solution")
    return x
