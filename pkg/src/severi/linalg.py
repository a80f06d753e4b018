"""Exact dense matrices over cyclic-extension elements.

Determinants use fraction-free (Bareiss) elimination to keep intermediate
coefficients small over Q-extensions; inverses use Gauss-Jordan with exact
field division.  A scaled-permutation recognizer supports the structured
Hilbert 90 split, whose input matrices are monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import InputError, ShapeMismatch, Singular
from .fields import CyclicExtension, ExtElement, galois_apply
from .fields import scalar_from_json as _scalar_from_json
from .fields import scalar_to_json as _scalar_to_json


@dataclass(frozen=True)
class Matrix:
    ext: CyclicExtension
    rows: int
    cols: int
    entries: tuple[ExtElement, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries")

    def at(self, i: int, j: int) -> ExtElement:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[ExtElement, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[ExtElement, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def as_rows(self) -> list[list[ExtElement]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        ent = tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.ext, self.cols, self.rows, ent)

    def map(self, fn: Callable[[ExtElement], ExtElement]) -> "Matrix":
        return Matrix(self.ext, self.rows, self.cols, tuple(fn(e) for e in self.entries))

    def scale(self, c: ExtElement) -> "Matrix":
        return self.map(lambda e: e * c)

    def apply(self, v: Sequence[ExtElement]) -> tuple[ExtElement, ...]:
        if len(v) != self.cols:
            raise ShapeMismatch(f"vector length {len(v)} != cols {self.cols}")
        out = []
        for i in range(self.rows):
            acc = self.ext.zero()
            for j in range(self.cols):
                acc = acc + self.at(i, j) * v[j]
            out.append(acc)
        return tuple(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix addition shape mismatch")
        return Matrix(self.ext, self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.map(lambda e: -e)

    def __mul__(self, other: "Matrix") -> "Matrix":
        return mul(self, other)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __repr__(self) -> str:
        rows = [" ".join(repr(self.at(i, j)) for j in range(self.cols))
                for i in range(self.rows)]
        return "[" + "; ".join(rows) + "]"


def from_rows(ext: CyclicExtension, rows: Sequence[Sequence]) -> Matrix:
    r = len(rows)
    c = len(rows[0]) if r else 0
    ent = []
    for row in rows:
        if len(row) != c:
            raise ShapeMismatch("ragged rows")
        for x in row:
            ent.append(x if isinstance(x, ExtElement) else ext.from_base(x))
    return Matrix(ext, r, c, tuple(ent))


def identity(ext: CyclicExtension, n: int) -> Matrix:
    one, zero = ext.one(), ext.zero()
    return Matrix(ext, n, n,
                  tuple(one if i == j else zero for i in range(n) for j in range(n)))


def zeros(ext: CyclicExtension, rows: int, cols: int) -> Matrix:
    z = ext.zero()
    return Matrix(ext, rows, cols, tuple(z for _ in range(rows * cols)))


def mul(A: Matrix, B: Matrix) -> Matrix:
    if A.cols != B.rows:
        raise ShapeMismatch(f"{A.rows}x{A.cols} times {B.rows}x{B.cols}")
    ext = A.ext
    zero = ext.zero()
    Brows = B.as_rows()
    out = []
    for i in range(A.rows):
        arow = A.row(i)
        acc = [zero] * B.cols
        for t in range(A.cols):
            x = arow[t]
            if x.is_zero():
                continue
            brow = Brows[t]
            for j in range(B.cols):
                if not brow[j].is_zero():
                    acc[j] = acc[j] + x * brow[j]
        out.extend(acc)
    return Matrix(ext, A.rows, B.cols, tuple(out))


def det(A: Matrix) -> ExtElement:
    """Fraction-free elimination; every division is exact."""
    if A.rows != A.cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return A.ext.one()
    m = A.as_rows()
    sign = 1
    prev = A.ext.one()
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if piv is None:
            return A.ext.zero()
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = A.ext.zero()
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def inverse(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise ShapeMismatch("inverse of a non-square matrix")
    n = A.rows
    ext = A.ext
    aug = [list(A.row(i)) + list(identity(ext, n).row(i)) for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
        if piv is None:
            raise Singular("matrix is not invertible")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r == c or aug[r][c].is_zero():
                continue
            f = aug[r][c]
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    ent = tuple(aug[i][n + j] for i in range(n) for j in range(n))
    return Matrix(ext, n, n, ent)


def galois_matrix(L: CyclicExtension, A: Matrix, j: int) -> Matrix:
    """sigma^j applied to every entry."""
    if A.ext != L:
        raise InputError("matrix is not over the given extension")
    return A.map(lambda e: galois_apply(L, e, j))


@dataclass(frozen=True)
class ScaledPermutation:
    """A monomial matrix: A e_j = scales[perm[j]] * e_{perm[j]}.

    perm[j] is the row of the unique nonzero entry in column j; scales[i] is
    the unique nonzero entry in row i.
    """

    perm: tuple[int, ...]
    scales: tuple[ExtElement, ...]


def as_scaled_permutation(A: Matrix) -> Optional[ScaledPermutation]:
    """Recognize a monomial matrix; None means not_monomial."""
    if A.rows != A.cols:
        raise ShapeMismatch("scaled-permutation recognition needs a square matrix")
    n = A.rows
    perm = [-1] * n
    scales: list[Optional[ExtElement]] = [None] * n
    for j in range(n):
        hits = [i for i in range(n) if not A.at(i, j).is_zero()]
        if len(hits) != 1:
            return None
        i = hits[0]
        if scales[i] is not None:
            return None  # two nonzeros in row i
        perm[j] = i
        scales[i] = A.at(i, j)
    return ScaledPermutation(tuple(perm), tuple(scales))  # type: ignore[arg-type]


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns, exact field division."""
    m = A.as_rows()
    ext = A.ext
    pivots: list[int] = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        piv = next((i for i in range(r, A.rows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(A.rows):
            if i == r or m[i][c].is_zero():
                continue
            f = m[i][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    ent = tuple(x for row in m for x in row)
    return Matrix(ext, A.rows, A.cols, ent), pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def pgl_equal(A: Matrix, B: Matrix) -> bool:
    """True iff B = c*A for some nonzero scalar c of the extension."""
    if (A.rows, A.cols) != (B.rows, B.cols):
        return False
    c: Optional[ExtElement] = None
    for x, y in zip(A.entries, B.entries):
        if x.is_zero() != y.is_zero():
            return False
        if x.is_zero():
            continue
        ratio = y / x
        if c is None:
            c = ratio
        elif ratio != c:
            return False
    return c is not None and not c.is_zero()


# ---------------------------------------------------------------------------
# JSON form: {rows, cols, entries: [[coeff-vectors]]}
# ---------------------------------------------------------------------------


def matrix_to_json(A: Matrix) -> dict:
    return {
        "rows": A.rows,
        "cols": A.cols,
        "entries": [[_scalar_to_json(c) for c in e.coeffs] for e in A.entries],
    }


def matrix_from_json(L: CyclicExtension, obj: dict) -> Matrix:
    ent = tuple(L.el([_scalar_from_json(c) for c in coeffs])
                for coeffs in obj["entries"])
    return Matrix(L, obj["rows"], obj["cols"], ent)
