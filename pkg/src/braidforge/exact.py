"""Exact arithmetic in Q(w), w a primitive cube root of unity, and dense
matrices over it.

Rationals are :class:`fractions.Fraction`; a :class:`Cyclotomic` is the pair
``re + om*w`` reduced with ``w**2 = -1 - w``.  All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatchError, SingularMatrixError

Rational = Fraction
Scalar = Union[int, Fraction, "Cyclotomic"]

__all__ = [
    "Rational",
    "Cyclotomic",
    "Matrix",
    "OMEGA",
    "ONE",
    "ZERO",
    "as_cyc",
    "as_rational",
    "cyc_mul",
    "cyc_inv",
    "rref",
    "mat_rank",
    "kernel_basis",
    "mat_inverse",
    "encode_scalar",
    "decode_scalar",
    "encode_matrix",
    "decode_matrix",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, Cyclotomic):
        if x.om:
            raise ValueError(f"{x} is not rational")
        return x.re
    raise TypeError(f"cannot interpret {x!r} as a rational")


class Cyclotomic:
    """An element ``re + om*w`` of Q(w).  Treat instances as immutable."""

    __slots__ = ("re", "om")

    def __init__(self, re=0, om=0) -> None:
        self.re = re if type(re) is Fraction else Fraction(re)
        self.om = om if type(om) is Fraction else Fraction(om)

    @classmethod
    def _raw(cls, re: Fraction, om: Fraction) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.re = re
        obj.om = om
        return obj

    def __reduce__(self):
        return (Cyclotomic, (self.re, self.om))

    def __repr__(self) -> str:
        return f"Cyclotomic({self.re}, {self.om})"

    def __str__(self) -> str:
        if not self.om:
            return str(self.re)
        mag = abs(self.om)
        term = "w" if mag == 1 else f"{mag}w"
        if not self.re:
            return ("-" if self.om < 0 else "") + term
        return f"{self.re}{'-' if self.om < 0 else '+'}{term}"

    def __hash__(self) -> int:
        if not self.om:
            return hash(self.re)
        return hash((self.re, self.om))

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclotomic):
            return self.re == other.re and self.om == other.om
        if isinstance(other, (int, Fraction)):
            return not self.om and self.re == other
        return NotImplemented

    def __bool__(self) -> bool:
        # hot in support scans; skips two Fraction.__bool__ calls
        return bool(self.re._numerator or self.om._numerator)

    def is_rational(self) -> bool:
        return not self.om

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._raw(-self.re, -self.om)

    def __add__(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return Cyclotomic._raw(self.re + other.re, self.om + other.om)
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.re + other, self.om)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return Cyclotomic._raw(self.re - other.re, self.om - other.om)
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.re - other, self.om)
        return NotImplemented

    def __rsub__(self, other) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            a, b, c, d = self.re, self.om, other.re, other.om
            if not b:
                return Cyclotomic._raw(a * c, a * d)
            if not d:
                return Cyclotomic._raw(a * c, b * c)
            bd = b * d
            return Cyclotomic._raw(a * c - bd, a * d + b * c - bd)
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.re * other, self.om * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclotomic":
        """Image under w -> w**2, i.e. ``(re - om) - om*w``."""
        return Cyclotomic._raw(self.re - self.om, -self.om)

    def norm(self) -> Fraction:
        a, b = self.re, self.om
        return a * a - a * b + b * b

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        if not self.om:
            return Cyclotomic._raw(1 / self.re, Fraction(0))
        nrm = self.norm()
        return Cyclotomic._raw((self.re - self.om) / nrm, -self.om / nrm)

    def __truediv__(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero in Q(w)")
            return Cyclotomic._raw(self.re / other, self.om / other)
        return NotImplemented

    def __rtruediv__(self, other) -> "Cyclotomic":
        return as_cyc(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


ZERO = Cyclotomic(0, 0)
ONE = Cyclotomic(1, 0)
OMEGA = Cyclotomic(0, 1)

# shared instances for small integer labels (scalars are never mutated)
_SMALL_INTS = {k: Cyclotomic(k, 0) for k in range(-8, 9)}


def as_cyc(x) -> Cyclotomic:
    kind = type(x)
    if kind is Cyclotomic:
        return x
    if kind is int:
        small = _SMALL_INTS.get(x)
        if small is not None:
            return small
    elif isinstance(x, Cyclotomic):
        return x
    return Cyclotomic._raw(as_rational(x), Fraction(0))


def cyc_mul(x: Cyclotomic, y: Cyclotomic) -> Cyclotomic:
    return as_cyc(x) * as_cyc(y)


def cyc_inv(x: Cyclotomic) -> Cyclotomic:
    """Inverse via the conjugate over the norm ``a**2 - a*b + b**2``."""
    return as_cyc(x).inverse()


class Matrix:
    """Dense row-major matrix with :class:`Cyclotomic` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        entries = tuple(as_cyc(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (Matrix, (self.rows, self.cols, self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        entries = [ZERO] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = v
        return cls(n, n, entries)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble from a grid of blocks; every block row shares a height."""
        heights = [row[0].rows for row in blocks]
        widths = [b.cols for b in blocks[0]] if blocks else []
        out = []
        for row, h in zip(blocks, heights):
            if len(row) != len(widths):
                raise DimensionMismatchError("ragged block grid")
            for b, w in zip(row, widths):
                if b.rows != h or b.cols != w:
                    raise DimensionMismatchError("block shape mismatch")
            for i in range(h):
                line = []
                for b in row:
                    line.extend(b.row(i))
                out.append(line)
        return cls(sum(heights), sum(widths), [e for r in out for e in r])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Cyclotomic:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def tolist(self) -> list[list[Cyclotomic]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix(
            r1 - r0, c1 - c0, [self[i, j] for i in range(r0, r1) for j in range(c0, c1)]
        )

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = as_cyc(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * m : (i + 1) * m]
            acc = [ZERO] * p
            for k, aik in enumerate(arow):
                if not aik:
                    continue
                brow = b[k * p : (k + 1) * p]
                for j, bkj in enumerate(brow):
                    if bkj:
                        acc[j] = acc[j] + aik * bkj
            out.extend(acc)
        return Matrix(n, p, out)

    def __pow__(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatchError("power of a non-square matrix")
        if k < 0:
            return mat_inverse(self) ** (-k)
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def trace(self) -> Cyclotomic:
        if self.rows != self.cols:
            raise DimensionMismatchError("trace of a non-square matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self[i, i]
        return total

    def is_scalar(self) -> bool:
        if self.rows != self.cols:
            return False
        d = self[0, 0] if self.rows else ZERO
        return self == Matrix.identity(self.rows).scale(d)

    def apply(self, vec: Sequence) -> list[Cyclotomic]:
        if len(vec) != self.cols:
            raise DimensionMismatchError("vector length mismatch")
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, x in zip(self.row(i), vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Cyclotomic]], list[int]]:
    """Gauss-Jordan elimination; pivots are the leftmost column with a nonzero
    entry, taking the topmost such row.  Returns the nonzero rows of the
    reduced form and their pivot columns."""
    m = [[as_cyc(e) for e in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [inv * e if e else e for e in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b if b else a for a, b in zip(m[i], prow)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _rows_of(m: Matrix) -> list[tuple]:
    return [m.row(i) for i in range(m.rows)]


def mat_rank(m: Matrix) -> int:
    return len(rref(_rows_of(m))[1])


def kernel_basis(m: Matrix) -> list[tuple[Cyclotomic, ...]]:
    """Basis of {v : m v = 0}, one vector per free column."""
    reduced, pivots = rref(_rows_of(m))
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def mat_inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionMismatchError(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    aug = [list(m.row(i)) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError(f"matrix has rank {sum(p < n for p in pivots)} < {n}")
    return Matrix(n, n, [e for row in reduced for e in row[n:]])


# -- serialization: p/q + (r/s)w  <->  [p, q, r, s]

def encode_scalar(x) -> list[int]:
    x = as_cyc(x)
    return [x.re.numerator, x.re.denominator, x.om.numerator, x.om.denominator]


def decode_scalar(data) -> Cyclotomic:
    if (
        not isinstance(data, (list, tuple))
        or len(data) != 4
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in data)
    ):
        raise ValueError(f"scalar must be four integers [p, q, r, s], got {data!r}")
    p, q, r, s = data
    if q <= 0 or s <= 0:
        raise ValueError(f"denominators must be positive in {data!r}")
    x = Cyclotomic(Fraction(p, q), Fraction(r, s))
    if encode_scalar(x) != list(data):
        raise ValueError(f"scalar {data!r} is not in reduced form")
    return x


def encode_matrix(m: Matrix) -> list[list[list[int]]]:
    return [[encode_scalar(e) for e in m.row(i)] for i in range(m.rows)]


def decode_matrix(data) -> Matrix:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix must be a nested list of scalar tuples")
    if not data:
        return Matrix(0, 0, [])
    return Matrix.from_rows([[decode_scalar(e) for e in r] for r in data])
