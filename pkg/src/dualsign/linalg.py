"""Dense exact linear algebra over the fields in :mod:`dualsign.fields`.

Gaussian elimination pivots on the first nonzero entry of the leftmost
unfinished column; exact arithmetic needs no magnitude heuristics and the
fixed rule makes every echelon form, nullspace basis and solution
deterministic.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatch, InputError
from .fields import Field, FieldElement


class Matrix:
    """Immutable matrix; entries stored as raw field payloads."""

    __slots__ = ("field", "rows", "ncols", "_data")

    def __init__(self, field: Field, data: Sequence[Sequence], *, _raw: bool = False) -> None:
        if _raw:
            rows = tuple(tuple(r) for r in data)
        else:
            rows = tuple(tuple(field.elem(x).payload for x in r) for r in data)
        if not rows or not rows[0]:
            raise InputError("matrices must have positive dimensions")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise InputError("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_data", rows)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        one, zero = field.p_one(), field.p_zero()
        return Matrix(field, [[one if i == j else zero for j in range(n)] for i in range(n)], _raw=True)

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        zero = field.p_zero()
        return Matrix(field, [[zero] * cols for _ in range(rows)], _raw=True)

    @staticmethod
    def from_flat(field: Field, flat: Sequence, rows: int, cols: int) -> "Matrix":
        if len(flat) != rows * cols:
            raise DimensionMismatch("flat entry count does not match shape")
        it = iter(flat)
        return Matrix(field, [[next(it) for _ in range(cols)] for _ in range(rows)])

    # -- access -------------------------------------------------------------
    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self._data[i][j])

    def row(self, i: int) -> tuple:
        return tuple(FieldElement(self.field, x) for x in self._data[i])

    def flat(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.ncols

    # -- arithmetic ----------------------------------------------------------
    def _same_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise InputError("matrices over different fields")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.ncols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.ncols} @ {other.rows}x{other.ncols}")
        F = self.field
        bt = list(zip(*other._data))
        out = []
        for arow in self._data:
            orow = []
            for bcol in bt:
                acc = F.p_zero()
                for a, b in zip(arow, bcol):
                    acc = F.p_add(acc, F.p_mul(a, b))
                orow.append(acc)
            out.append(orow)
        return Matrix(F, out, _raw=True)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if (self.rows, self.ncols) != (other.rows, other.ncols):
            raise DimensionMismatch("matrix addition shape mismatch")
        F = self.field
        return Matrix(F, [[F.p_add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self._data, other._data)], _raw=True)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        F = self.field
        return Matrix(F, [[F.p_neg(a) for a in r] for r in self._data], _raw=True)

    def scale(self, c) -> "Matrix":
        F = self.field
        cp = F.elem(c).payload
        return Matrix(F, [[F.p_mul(cp, a) for a in r] for r in self._data], _raw=True)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self._data)), _raw=True)

    def trace(self) -> FieldElement:
        if not self.is_square():
            raise DimensionMismatch("trace of non-square matrix")
        F = self.field
        acc = F.p_zero()
        for i in range(self.rows):
            acc = F.p_add(acc, self._data[i][i])
        return FieldElement(F, acc)

    def map_entries(self, fn: Callable, target_field: Field) -> "Matrix":
        """Apply a payload map entrywise (reduction, lifting, embedding)."""
        return Matrix(target_field, [[fn(a) for a in r] for r in self._data], _raw=True)

    def is_zero(self) -> bool:
        F = self.field
        return all(F.p_is_zero(a) for r in self._data for a in r)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self._data == other._data)

    def __hash__(self):
        return hash((self.field, self._data))

    def __repr__(self):
        F = self.field
        return "[" + "; ".join(", ".join(F.p_str(a) for a in r) for r in self._data) + "]"

    # -- elimination-based operations ---------------------------------------
    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        R, pivots = _rref_raw(self.field, [list(r) for r in self._data])
        return Matrix(self.field, R, _raw=True), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> FieldElement:
        if not self.is_square():
            raise DimensionMismatch("determinant of non-square matrix")
        F = self.field
        a = [list(r) for r in self._data]
        n = self.rows
        det = F.p_one()
        for col in range(n):
            piv = None
            for i in range(col, n):
                if not F.p_is_zero(a[i][col]):
                    piv = i
                    break
            if piv is None:
                return FieldElement(F, F.p_zero())
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = F.p_neg(det)
            det = F.p_mul(det, a[col][col])
            inv = F.p_inv(a[col][col])
            for i in range(col + 1, n):
                if F.p_is_zero(a[i][col]):
                    continue
                f = F.p_mul(a[i][col], inv)
                a[i] = [F.p_sub(x, F.p_mul(f, y)) for x, y in zip(a[i], a[col])]
        return FieldElement(F, det)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("inverse of non-square matrix")
        F = self.field
        n = self.rows
        aug = [list(r) + [F.p_one() if i == j else F.p_zero() for j in range(n)]
               for i, r in enumerate(self._data)]
        R, pivots = _rref_raw(F, aug)
        if list(pivots) != list(range(n)):
            raise InputError("matrix is singular")
        return Matrix(F, [r[n:] for r in R], _raw=True)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows


def _rref_raw(F: Field, a: list[list]) -> tuple[list[list], list[int]]:
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not F.p_is_zero(a[i][c]):
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.p_inv(a[r][c])
        a[r] = [F.p_mul(inv, x) for x in a[r]]
        for i in range(nrows):
            if i != r and not F.p_is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [F.p_sub(x, F.p_mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


class LinearSolution:
    """Particular solution plus reduced nullspace basis of ``A x = b``."""

    __slots__ = ("particular", "nullspace")

    def __init__(self, particular: tuple, nullspace: tuple) -> None:
        self.particular = particular
        self.nullspace = nullspace

    @property
    def dimension(self) -> int:
        return len(self.nullspace)

    def is_unique(self) -> bool:
        return not self.nullspace


def solve_linear(coeffs: Matrix, rhs: Sequence) -> LinearSolution | None:
    """Exact solution set of ``coeffs @ x = rhs``; None when inconsistent.

    The nullspace basis comes from the reduced echelon form (one vector per
    free column, free coordinate set to 1), so it is deterministic.
    """
    F = coeffs.field
    b = [F.elem(x).payload for x in rhs]
    if len(b) != coeffs.rows:
        raise DimensionMismatch("rhs length does not match row count")
    n = coeffs.ncols
    aug = [list(r) + [b[i]] for i, r in enumerate(coeffs._data)]
    R, pivots = _rref_raw(F, aug)
    pivots = [p for p in pivots if p < n]
    rank = len(pivots)
    # inconsistency: pivot in the augmented column
    for i in range(rank, len(R)):
        if not F.p_is_zero(R[i][n]):
            return None
    particular = [F.p_zero()] * n
    for i, p in enumerate(pivots):
        particular[p] = R[i][n]
    free_cols = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [F.p_zero()] * n
        vec[fc] = F.p_one()
        for i, p in enumerate(pivots):
            vec[p] = F.p_neg(R[i][fc])
        basis.append(tuple(FieldElement(F, x) for x in vec))
    return LinearSolution(tuple(FieldElement(F, x) for x in particular), tuple(basis))


def nullspace(coeffs: Matrix) -> tuple:
    sol = solve_linear(coeffs, [coeffs.field.zero()] * coeffs.rows)
    assert sol is not None
    return sol.nullspace


def span_dimension(mats: Iterable[Matrix]) -> int:
    """Dimension of the linear span of square matrices inside the n^2 space.

    Value ``n**2`` iff the matrices generate the full matrix algebra as a
    vector space (the absolute-irreducibility criterion).
    """
    mats = list(mats)
    if not mats:
        return 0
    F = mats[0].field
    n = mats[0].rows
    for m in mats:
        if m.field != F:
            raise InputError("matrices over different fields")
        if not m.is_square() or m.rows != n:
            raise DimensionMismatch("span_dimension needs same-size square matrices")
    stacked = [list(m.flat()) for m in mats]
    _, pivots = _rref_raw(F, stacked)
    return len(pivots)


def matrices_from_vectors(field: Field, vecs: Sequence[Sequence], n: int) -> list[Matrix]:
    return [Matrix.from_flat(field, [field.elem(x) for x in v], n, n) for v in vecs]


def column_space_basis(m: Matrix) -> Matrix:
    """Matrix whose columns are the reduced basis of the column space."""
    R, pivots = m.transpose().rref()
    rows = [R._data[i] for i in range(len(pivots))]
    return Matrix(m.field, rows, _raw=True).transpose()


def restrict_action(op: Matrix, basis: Matrix) -> Matrix:
    """Matrix of ``op`` on the invariant subspace spanned by ``basis`` columns.

    Solves ``basis @ Y = op @ basis``; raises if the subspace is not
    invariant.
    """
    F = op.field
    target = op @ basis
    cols = []
    for j in range(basis.ncols):
        rhs = [FieldElement(F, target._data[i][j]) for i in range(target.rows)]
        sol = solve_linear(basis, rhs)
        if sol is None:
            raise InputError("subspace is not invariant under the operator")
        cols.append([x.payload for x in sol.particular])
    return Matrix(F, list(zip(*cols)), _raw=True)
