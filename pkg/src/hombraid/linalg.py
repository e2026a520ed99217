"""Dense exact matrices over Q or Q(l).

Tensor factors are flattened row-major: ``e_i (x) e_j`` in ``V (x) W`` sits at
flat index ``i * dim(W) + j``.  Every construction in the package relies on
this single convention.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, RationalFunction, Scalar, as_scalar, format_scalar, inverse, parse_scalar


class ShapeError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    def __init__(self, rank: int, size: int):
        super().__init__(f"matrix is singular (rank {rank} < {size})")
        self.rank = rank
        self.size = size


class Matrix:
    """Immutable dense matrix; rows are stored as tuples of scalars."""

    __slots__ = ("rows", "cols", "_data", "_nz")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if cols is None:
            if not data:
                raise ShapeError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ShapeError("ragged matrix rows")
        self._init(data, len(data), cols)

    def _init(self, data, rows, cols):
        object.__setattr__(self, "_data", data)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_nz", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _wrap(cls, data: tuple, rows: int, cols: int) -> "Matrix":
        obj = object.__new__(cls)
        obj._init(data, rows, cols)
        return obj

    # -- constructors --

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        row = (ZERO,) * cols
        return cls._wrap((row,) * rows, rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        data = []
        for i, v in enumerate(values):
            row = [ZERO] * n
            row[i] = as_scalar(v)
            data.append(tuple(row))
        return cls._wrap(tuple(data), n, n)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict) -> "Matrix":
        """Build from a sparse ``{(i, j): value}`` mapping."""
        data = [[ZERO] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            data[i][j] = as_scalar(v)
        return cls._wrap(tuple(tuple(r) for r in data), rows, cols)

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls._wrap(tuple((as_scalar(v),) for v in values), len(values), 1)

    @classmethod
    def row(cls, values: Sequence) -> "Matrix":
        return cls._wrap((tuple(as_scalar(v) for v in values),), 1, len(values))

    # -- access --

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row_tuple(self, i: int) -> tuple:
        return self._data[i]

    def column_vector(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def nonzeros(self):
        """Per-row lists of ``(j, value)`` for nonzero entries (cached)."""
        if self._nz is None:
            nz = tuple(tuple((j, x) for j, x in enumerate(r) if x) for r in self._data)
            object.__setattr__(self, "_nz", nz)
        return self._nz

    def nnz(self) -> int:
        return sum(len(r) for r in self.nonzeros())

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(tuple(tuple(r[j] for r in self._data) for j in range(self.cols)),
                            self.cols, self.rows)

    def is_zero(self) -> bool:
        return not any(self.nonzeros())

    def has_parameter(self) -> bool:
        return any(isinstance(x, RationalFunction) for r in self.nonzeros() for _, x in r)

    def map(self, f) -> "Matrix":
        return Matrix._wrap(tuple(tuple(as_scalar(f(x)) for x in r) for r in self._data), self.rows, self.cols)

    # -- arithmetic --

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        return self.scale(-ONE)

    def scale(self, k) -> "Matrix":
        k = as_scalar(k)
        if not k:
            return Matrix.zeros(self.rows, self.cols)
        return Matrix._wrap(tuple(tuple(x * k if x else ZERO for x in r) for r in self._data),
                            self.rows, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def __str__(self):
        return "\n".join("[" + ", ".join(format_scalar(x) for x in r) + "]" for r in self._data)


def _same_shape(a: Matrix, b: Matrix):
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product; zero entries are skipped so sparse operators stay cheap."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    bnz = b.nonzeros()
    n = b.cols
    out = []
    for arow in a.nonzeros():
        if not arow:
            out.append((ZERO,) * n)
            continue
        acc = [ZERO] * n
        for k, x in arow:
            for j, y in bnz[k]:
                acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return Matrix._wrap(tuple(out), a.rows, n)


def chain(*ms: Matrix) -> Matrix:
    """``chain(A, B, C) == A @ B @ C``."""
    return reduce(matmul, ms)


def apply(a: Matrix, v: Sequence) -> tuple:
    if len(v) != a.cols:
        raise ShapeError(f"vector of length {len(v)} for matrix {a.shape}")
    v = [as_scalar(x) for x in v]
    out = []
    for row in a.nonzeros():
        acc = ZERO
        for j, x in row:
            if v[j]:
                acc = acc + x * v[j]
        out.append(acc)
    return tuple(out)


def equal(a: Matrix, b: Matrix) -> bool:
    return a.shape == b.shape and a == b


def kron(*ms: Matrix) -> Matrix:
    """Kronecker product; ``kron(A, B)[i*rB + k, j*cB + l] = A[i, j] * B[k, l]``."""
    if not ms:
        return Matrix.identity(1)
    return reduce(_kron2, ms)


def _kron2(a: Matrix, b: Matrix) -> Matrix:
    rb, cb = b.shape
    data = []
    anz = a.nonzeros()
    bnz = b.nonzeros()
    for i in range(a.rows):
        for k in range(rb):
            row = [ZERO] * (a.cols * cb)
            for j, x in anz[i]:
                base = j * cb
                for l, y in bnz[k]:
                    row[base + l] = x * y
            data.append(tuple(row))
    return Matrix._wrap(tuple(data), a.rows * rb, a.cols * cb)


def kron_power(a: Matrix, n: int) -> Matrix:
    if n == 0:
        return Matrix.identity(1)
    return kron(*([a] * n))


def invert(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; pivot is the first nonzero entry in the column."""
    if not a.is_square:
        raise ShapeError(f"cannot invert non-square {a.shape} matrix")
    n = a.rows
    left = [list(r) for r in a._data]
    right = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if left[r][col]), None)
        if piv is None:
            continue
        left[rank], left[piv] = left[piv], left[rank]
        right[rank], right[piv] = right[piv], right[rank]
        p = inverse(left[rank][col])
        left[rank] = [x * p if x else ZERO for x in left[rank]]
        right[rank] = [x * p if x else ZERO for x in right[rank]]
        lnz = [(j, x) for j, x in enumerate(left[rank]) if x]
        rnz = [(j, x) for j, x in enumerate(right[rank]) if x]
        for r in range(n):
            f = left[r][col]
            if r == rank or not f:
                continue
            lr, rr = left[r], right[r]
            for j, x in lnz:
                lr[j] = lr[j] - f * x
            for j, x in rnz:
                rr[j] = rr[j] - f * x
        rank += 1
    if rank < n:
        raise SingularMatrixError(rank, n)
    return Matrix._wrap(tuple(tuple(r) for r in right), n, n)


def rank(a: Matrix) -> int:
    rows = [list(r) for r in a._data]
    r = 0
    for col in range(a.cols):
        piv = next((i for i in range(r, a.rows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = inverse(rows[r][col])
        for i in range(r + 1, a.rows):
            f = rows[i][col] * p
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def tensor_permutation(dims: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Matrix moving tensor factor ``perm[p]`` of the input to position ``p``.

    The input space is ``V_0 (x) ... (x) V_{n-1}`` with ``dim V_i = dims[i]``;
    the output space is ``V_perm[0] (x) ... (x) V_perm[n-1]``.
    """
    n = len(dims)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation: {perm}")
    out_dims = [dims[p] for p in perm]
    total = 1
    for d in dims:
        total *= d

    def flat(idx, ds):
        f = 0
        for i, d in zip(idx, ds):
            f = f * d + i
        return f

    entries = {}
    for idx in product(*(range(d) for d in dims)):
        out = tuple(idx[p] for p in perm)
        entries[(flat(out, out_dims), flat(idx, dims))] = ONE
    return Matrix.from_entries(total, total, entries)


def permutation_tau(d: int) -> Matrix:
    """The flip ``e_i (x) e_j -> e_j (x) e_i`` on ``k^d (x) k^d``."""
    return tensor_permutation([d, d], [1, 0])


def flat_index(idx: Sequence[int], d: int) -> int:
    f = 0
    for i in idx:
        f = f * d + i
    return f


def unflatten(f: int, d: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        f, r = divmod(f, d)
        out.append(r)
    return tuple(reversed(out))


def first_difference(a: Matrix, b: Matrix):
    """First ``(row, col)`` where ``a`` and ``b`` differ, scanning column-major."""
    _same_shape(a, b)
    for j in range(a.cols):
        for i in range(a.rows):
            if a[i, j] != b[i, j]:
                return i, j
    return None


class Tensor3:
    """Structure constants ``t[k][i][j]`` of a bilinear map ``U (x) V -> W``.

    ``k`` indexes the output, ``(i, j)`` the inputs.
    """

    __slots__ = ("out_dim", "in1_dim", "in2_dim", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(tuple(as_scalar(x) for x in row) for row in plane) for plane in entries)
        out_dim = len(entries)
        in1 = len(entries[0]) if out_dim else 0
        in2 = len(entries[0][0]) if out_dim and in1 else 0
        for plane in entries:
            if len(plane) != in1 or any(len(r) != in2 for r in plane):
                raise ShapeError("ragged structure constants")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "out_dim", out_dim)
        object.__setattr__(self, "in1_dim", in1)
        object.__setattr__(self, "in2_dim", in2)

    def __setattr__(self, name, value):
        raise AttributeError("Tensor3 is immutable")

    @classmethod
    def zeros(cls, out_dim, in1, in2) -> "Tensor3":
        return cls([[[ZERO] * in2 for _ in range(in1)] for _ in range(out_dim)])

    @classmethod
    def from_matrix(cls, m: Matrix, in1: int, in2: int) -> "Tensor3":
        if m.cols != in1 * in2:
            raise ShapeError(f"matrix with {m.cols} columns is not a map on {in1}x{in2}")
        return cls([[[m[k, i * in2 + j] for j in range(in2)] for i in range(in1)] for k in range(m.rows)])

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.out_dim, self.in1_dim, self.in2_dim

    def __getitem__(self, kij):
        k, i, j = kij
        return self.entries[k][i][j]

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def as_matrix(self) -> Matrix:
        """The linear map ``U (x) V -> W`` as an ``out x (in1*in2)`` matrix."""
        return Matrix._wrap(
            tuple(tuple(x for row in plane for x in row) for plane in self.entries),
            self.out_dim, self.in1_dim * self.in2_dim)

    def apply(self, u: Sequence, v: Sequence) -> tuple:
        flat = [as_scalar(x) * as_scalar(y) for x in u for y in v]
        return apply(self.as_matrix(), flat)


# -- JSON ----------------------------------------------------------------------

def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[format_scalar(x) for x in r] for r in m.tolist()],
    }


def matrix_from_json(obj: dict, allow_parameter: bool = True) -> Matrix:
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ShapeError(f"matrix JSON needs rows, cols, entries: {exc}") from None
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ShapeError(f"matrix entries do not match declared shape {rows}x{cols}")
    return Matrix._wrap(
        tuple(tuple(_scalar_from_json(x, allow_parameter) for x in r) for r in entries), rows, cols)


def vector_to_json(v: Sequence) -> list[str]:
    return [format_scalar(x) for x in v]


def vector_from_json(obj, allow_parameter: bool = True) -> tuple:
    return tuple(_scalar_from_json(x, allow_parameter) for x in obj)


def tensor_to_json(t: Tensor3) -> list:
    return [[[format_scalar(x) for x in row] for row in plane] for plane in t.entries]


def tensor_from_json(obj, allow_parameter: bool = True) -> Tensor3:
    return Tensor3([[[_scalar_from_json(x, allow_parameter) for x in row] for row in plane] for plane in obj])


def _scalar_from_json(x, allow_parameter: bool) -> Scalar:
    if isinstance(x, bool):
        raise ValueError(f"not a scalar: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x, allow_parameter=allow_parameter)
    raise ValueError(f"scalars must be strings or integers, got {x!r}")
