"""Exact dense and sparse linear algebra over a :class:`FieldSpec`.

Vectors are tuples (or lists) of field elements. Sparse rows are dicts
``{column: value}`` without stored zeros; over GF(2) they are bit-packed
Python ints (bit ``c`` set means a 1 in column ``c``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import FieldSpec

# Matrices with more than this many entries go through sparse elimination.
DENSE_LIMIT = 10**6


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(field.coerce(x) for r in rows for x in r)
        return cls(field, len(rows), cols, flat)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int):
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int):
        return cls.from_rows(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        flat = tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.field, self.cols, self.rows, flat)

    def apply(self, v: Sequence) -> tuple:
        F = self.field
        out = []
        for i in range(self.rows):
            acc = F.zero
            for a, b in zip(self.row(i), v):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)


@dataclass(frozen=True)
class SparseMatrix:
    field: FieldSpec
    rows: int
    cols: int
    data: tuple  # per row: tuple of (col, value), cols increasing, no zeros

    @classmethod
    def from_dict_rows(cls, field: FieldSpec, rows: Sequence[dict], cols: int):
        data = tuple(tuple(sorted((c, v) for c, v in r.items() if v)) for r in rows)
        return cls(field, len(rows), cols, data)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.data)

    def to_dense(self) -> Matrix:
        F = self.field
        flat = [F.zero] * (self.rows * self.cols)
        for i, r in enumerate(self.data):
            for c, v in r:
                flat[i * self.cols + c] = v
        return Matrix(F, self.rows, self.cols, tuple(flat))

    def rank(self) -> int:
        return sparse_rank(self.field, [dict(r) for r in self.data])


# -- dense elimination --------------------------------------------------------

def rref(field: FieldSpec, rows: Iterable[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of the span of ``rows``: nonzero rows only,
    pivots increasing, pivot entries 1."""
    F = field
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(mat)
    if F.is_prime_field:
        p = F.p
        for c in range(ncols):
            piv = next((i for i in range(r, nrows) if mat[i][c] % p), None)
            if piv is None:
                continue
            mat[r], mat[piv] = mat[piv], mat[r]
            inv = pow(mat[r][c], p - 2, p)
            prow = [x * inv % p for x in mat[r]]
            mat[r] = prow
            for i in range(nrows):
                if i != r:
                    f = mat[i][c] % p
                    if f:
                        row_i = mat[i]
                        for j in range(c, ncols):
                            if prow[j]:
                                row_i[j] = (row_i[j] - f * prow[j]) % p
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return [[x % p for x in row] for row in mat[:r]], pivots
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not F.is_zero(mat[i][c])), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = F.inv(mat[r][c])
        prow = [F.mul(x, inv) for x in mat[r]]
        mat[r] = prow
        for i in range(nrows):
            if i != r:
                f = mat[i][c]
                if not F.is_zero(f):
                    row_i = mat[i]
                    for j in range(c, ncols):
                        if not F.is_zero(prow[j]):
                            row_i[j] = F.sub(row_i[j], F.mul(f, prow[j]))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat[:r], pivots


@dataclass(frozen=True)
class Subspace:
    """Subspace of field^ambient with basis in reduced row echelon form."""

    field: FieldSpec
    ambient: int
    basis: tuple[tuple, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, field: FieldSpec, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [v for v in vectors]
        if len(vecs) * ambient > DENSE_LIMIT:
            basis, pivots = _sparse_rref(field, vecs, ambient)
        else:
            basis, pivots = rref(field, vecs, ambient)
        return cls(field, ambient, tuple(tuple(b) for b in basis), tuple(pivots))

    @classmethod
    def zero(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient: int) -> "Subspace":
        one, zero = field.one, field.zero
        basis = tuple(tuple(one if j == i else zero for j in range(ambient)) for i in range(ambient))
        return cls(field, ambient, basis, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence) -> list:
        """Residue of ``v`` after clearing the pivot columns."""
        F = self.field
        v = list(v)
        for b, c in zip(self.basis, self.pivots):
            f = v[c]
            if not F.is_zero(f):
                for j in range(c, self.ambient):
                    if not F.is_zero(b[j]):
                        v[j] = F.sub(v[j], F.mul(f, b[j]))
        return v

    def contains(self, v: Sequence) -> bool:
        return all(self.field.is_zero(x) for x in self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field, self.ambient, self.basis) == (other.field, other.ambient, other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        # Zassenhaus: rows (u|u) and (w|0); the rows with zero left half
        # span the intersection in their right half.
        F, n = self.field, self.ambient
        zero = (F.zero,) * n
        rows = [tuple(u) + tuple(u) for u in self.basis] + [tuple(w) + zero for w in other.basis]
        basis, pivots = rref(F, rows, 2 * n)
        inter = [b[n:] for b, c in zip(basis, pivots) if c >= n]
        return Subspace.span(F, n, inter)

    def complement_indices(self) -> list[int]:
        """Coordinates not used as pivots; their unit vectors span a
        complement."""
        ps = set(self.pivots)
        return [i for i in range(self.ambient) if i not in ps]

    def coordinates(self, v: Sequence) -> list:
        """Coefficients of ``v`` in the echelon basis (``v`` must lie in the
        subspace)."""
        return [v[c] for c in self.pivots]


def kernel_from_rref(field: FieldSpec, basis: Sequence[Sequence], pivots: Sequence[int], ncols: int) -> Subspace:
    F = field
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    vecs = []
    for fcol in free:
        v = [F.zero] * ncols
        v[fcol] = F.one
        for row, pc in zip(basis, pivots):
            if not F.is_zero(row[fcol]):
                v[pc] = F.neg(row[fcol])
        vecs.append(v)
    # already echelon up to ordering; normalise through rref
    return Subspace.span(F, ncols, vecs)


def rank_kernel(m: Matrix) -> tuple[int, Subspace]:
    if m.rows * m.cols > DENSE_LIMIT:
        basis, pivots = _sparse_rref(m.field, m.row_list(), m.cols)
    else:
        basis, pivots = rref(m.field, m.row_list(), m.cols)
    return len(pivots), kernel_from_rref(m.field, basis, pivots, m.cols)


def rank(field: FieldSpec, rows: Sequence[Sequence], ncols: int) -> int:
    if len(rows) * ncols > DENSE_LIMIT:
        return sparse_rank(field, [{j: x for j, x in enumerate(r) if x} for r in rows])
    return len(rref(field, rows, ncols)[1])


def annihilator(field: FieldSpec, ambient: int, vectors: Sequence[Sequence]) -> Subspace:
    """{x : <v, x> = 0 for all v in vectors}."""
    if not vectors:
        return Subspace.full(field, ambient)
    return rank_kernel(Matrix.from_rows(field, vectors, ambient))[1]


# -- sparse elimination -------------------------------------------------------

def _sparse_rref(field: FieldSpec, vectors: Sequence[Sequence], ncols: int):
    rows = [{j: x for j, x in enumerate(v) if not field.is_zero(x)} for v in vectors]
    piv = _sparse_echelon(field, rows)
    # back substitution to reach reduced form
    F = field
    order = sorted(piv)
    for c in reversed(order):
        row = piv[c]
        for c2 in order:
            if c2 >= c:
                break
            other = piv[c2]
            f = other.get(c)
            if f is not None:
                for j, x in row.items():
                    y = F.sub(other.get(j, F.zero), F.mul(f, x))
                    if F.is_zero(y):
                        other.pop(j, None)
                    else:
                        other[j] = y
    basis = []
    for c in order:
        dense = [F.zero] * ncols
        for j, x in piv[c].items():
            dense[j] = x
        basis.append(dense)
    return basis, order


def _sparse_echelon(field: FieldSpec, rows: list[dict]) -> dict[int, dict]:
    """Echelonise dict rows; returns {leading column: monic row}.

    Rows are processed shortest first (a cheap Markowitz-style choice that
    keeps fill-in down)."""
    F = field
    pivots: dict[int, dict] = {}
    rows = sorted((r for r in rows if r), key=len)
    if F.is_prime_field:
        p = F.p
        for row in rows:
            row = dict(row)
            while row:
                lead = min(row)
                prow = pivots.get(lead)
                if prow is None:
                    inv = pow(row[lead], p - 2, p)
                    pivots[lead] = {j: x * inv % p for j, x in row.items()}
                    break
                f = row[lead]
                for j, x in prow.items():
                    y = (row.get(j, 0) - f * x) % p
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        return pivots
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = F.inv(row[lead])
                pivots[lead] = {j: F.mul(x, inv) for j, x in row.items()}
                break
            f = row[lead]
            for j, x in prow.items():
                y = F.sub(row.get(j, F.zero), F.mul(f, x))
                if F.is_zero(y):
                    row.pop(j, None)
                else:
                    row[j] = y
    return pivots


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of bit-packed rows."""
    pivots: dict[int, int] = {}
    for x in rows:
        while x:
            top = x.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = x
                break
            x ^= p
    return len(pivots)


def sparse_rank(field: FieldSpec, rows: Iterable) -> int:
    """Rank of sparse rows: dicts ``{col: value}``, or bit-packed ints over
    GF(2)."""
    if field.is_prime_field and field.p == 2:
        packed = []
        for r in rows:
            if isinstance(r, int):
                packed.append(r)
            else:
                x = 0
                for c, v in r.items():
                    if v % 2:
                        x |= 1 << c
                packed.append(x)
        return gf2_rank(packed)
    return len(_sparse_echelon(field, [dict(r) for r in rows]))


# -- Frobenius-semilinear kernels --------------------------------------------

def semilinear_kernel(m: Matrix, frob_power: int) -> Subspace:
    """Kernel of v -> m . Frob^frob_power(v), Frob raising every coordinate
    to the p-th power.

    The map is only GF(p)-linear, so the kernel is found over GF(p) after
    restriction of scalars and then spanned over the full field again."""
    F = m.field
    if F.characteristic == 0:
        raise ValueError("Frobenius-semilinear maps need positive characteristic")
    if F.degree == 1:
        return rank_kernel(m)[1]
    p, k = F.p, F.degree
    prime = FieldSpec(p)
    t_powers = [F.from_coeffs([0] * l + [1]) for l in range(k)]
    # column (j, l) of the GF(p) matrix: image of t^l e_j
    real_cols = []
    for j in range(m.cols):
        col = [m[i, j] for i in range(m.rows)]
        for tl in t_powers:
            img = F.frob(tl, frob_power)
            coords = []
            for x in col:
                coords.extend(F.prime_subfield_coords(F.mul(x, img)))
            real_cols.append(coords)
    nrows_real = m.rows * k
    real_rows = [[real_cols[c][r] for c in range(len(real_cols))] for r in range(nrows_real)]
    real = Matrix(prime, nrows_real, m.cols * k, tuple(x for r in real_rows for x in r))
    _, ker = rank_kernel(real)
    vecs = []
    for b in ker.basis:
        vecs.append([F.from_prime_coords(b[j * k:(j + 1) * k]) for j in range(m.cols)])
    return Subspace.span(F, m.cols, vecs)
