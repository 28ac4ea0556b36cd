"""Dense exact linear algebra over any FieldDescriptor.

Everything is immutable.  Reduced row echelon form is the canonical
normal form throughout: two subspaces are equal iff their RREF bases
agree entrywise.  Pivoting always takes the first nonzero row, never by
magnitude -- arithmetic is exact, and determinism matters more.
"""

from __future__ import annotations

from .errors import AmbientMismatch, DescriptorMismatch, DimensionMismatch


class Vector:
    __slots__ = ("field", "entries")

    def __init__(self, field, entries):
        entries = tuple(entries)
        for e in entries:
            if e.field != field:
                raise DescriptorMismatch("vector entries in mixed fields")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, *_):
        raise AttributeError("Vector is immutable")

    @classmethod
    def zero(cls, field, n):
        z = field.zero()
        return cls(field, (z,) * n)

    @classmethod
    def unit(cls, field, n, i):
        z, o = field.zero(), field.one()
        return cls(field, tuple(o if j == i else z for j in range(n)))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def __add__(self, other):
        self._check(other)
        return Vector(self.field, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check(other)
        return Vector(self.field, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Vector(self.field, tuple(-a for a in self.entries))

    def scale(self, s):
        if s.is_zero():
            return Vector.zero(self.field, len(self.entries))
        return Vector(self.field, tuple(s * a for a in self.entries))

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def _check(self, other):
        if not isinstance(other, Vector):
            raise DimensionMismatch("expected a Vector")
        if other.field != self.field:
            raise DescriptorMismatch("vectors over different fields")
        if len(other.entries) != len(self.entries):
            raise DimensionMismatch(
                f"vector lengths differ ({len(self.entries)} vs {len(other.entries)})"
            )

    def __repr__(self):
        from .fields import render

        return "(" + ", ".join(render(e) for e in self.entries) + ")"


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows):
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix")
            for e in r:
                if e.field != field:
                    raise DescriptorMismatch("matrix entries in mixed fields")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, field, nrows, ncols):
        z = field.zero()
        return cls(field, ((z,) * ncols,) * nrows)

    @classmethod
    def from_columns(cls, field, columns, nrows=None):
        columns = list(columns)
        if not columns:
            return cls.zero(field, nrows or 0, 0)
        n = len(columns[0])
        return cls(field, tuple(tuple(col[i] for col in columns) for i in range(n)))

    def column(self, j):
        return Vector(self.field, tuple(r[j] for r in self.rows))

    def row(self, i):
        return Vector(self.field, self.rows[i])

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch("matrix/vector size mismatch")
        z = self.field.zero()
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, v.entries):
                if not (a.is_zero() or b.is_zero()):
                    acc = acc + a * b
            out.append(acc)
        return Vector(self.field, out)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("matrix product size mismatch")
        z = self.field.zero()
        rows = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = z
                for k, a in enumerate(r):
                    if not a.is_zero():
                        b = other.rows[k][j]
                        if not b.is_zero():
                            acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return Matrix(self.field, rows)

    def sub_scalar_diag(self, s) -> "Matrix":
        """self - s*I, used to form eigenoperator matrices."""
        if self.nrows != self.ncols:
            raise DimensionMismatch("square matrix required")
        rows = [list(r) for r in self.rows]
        for i in range(self.nrows):
            rows[i][i] = rows[i][i] - s
        return Matrix(self.field, rows)

    def augment(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch("augment needs equal row counts")
        return Matrix(self.field, tuple(a + b for a, b in zip(self.rows, other.rows)))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return "Matrix[" + "; ".join(repr(Vector(self.field, r)) for r in self.rows) + "]"


def rref(m: Matrix):
    """Reduced row echelon form: returns (rref matrix, rank, pivot columns)."""
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        if not inv.is_one():
            rows[r] = [inv * e for e in rows[r]]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if factor.is_zero():
                continue
            rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(m.field, rows), r, tuple(pivots)


def kernel(m: Matrix) -> "Subspace":
    """Subspace of all v with m v = 0."""
    reduced, rank, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    z, o = m.field.zero(), m.field.one()
    basis = []
    for f in free:
        v = [z] * m.ncols
        v[f] = o
        for row_idx, pc in enumerate(pivots):
            v[pc] = -reduced.rows[row_idx][f]
        basis.append(Vector(m.field, v))
    return Subspace.from_vectors(m.field, m.ncols, basis)


def solve_in_span(target: Vector, spanners):
    """Coefficients c with sum(c_i * spanners_i) = target, or None.

    Free variables are zero; the answer is the deterministic RREF
    back-substitution solution.
    """
    spanners = list(spanners)
    field = target.field
    n = len(target)
    for s in spanners:
        target._check(s)
    k = len(spanners)
    rows = [[s[i] for s in spanners] + [target[i]] for i in range(n)]
    reduced, rank, pivots = rref(Matrix(field, rows))
    if k in pivots:
        return None
    coeffs = [field.zero()] * k
    for row_idx, pc in enumerate(pivots):
        coeffs[pc] = reduced.rows[row_idx][k]
    return coeffs


class Subspace:
    """A subspace kept as the nonzero rows of an RREF matrix (canonical)."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient, basis, pivots):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, *_):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, field, ambient, vectors) -> "Subspace":
        vectors = [v for v in vectors if not v.is_zero()]
        if not vectors:
            return cls(field, ambient, (), ())
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch("vector length differs from ambient dimension")
            if v.field != field:
                raise DescriptorMismatch("vectors over different fields")
        reduced, rank, pivots = rref(Matrix(field, [v.entries for v in vectors]))
        basis = tuple(Vector(field, reduced.rows[i]) for i in range(rank))
        return cls(field, ambient, basis, pivots)

    @classmethod
    def zero_space(cls, field, ambient):
        return cls(field, ambient, (), ())

    @classmethod
    def full_space(cls, field, ambient):
        basis = tuple(Vector.unit(field, ambient, i) for i in range(ambient))
        return cls(field, ambient, basis, tuple(range(ambient)))

    @property
    def dim(self):
        return len(self.basis)

    def _check(self, other):
        if not isinstance(other, Subspace):
            raise AmbientMismatch("expected a Subspace")
        if other.ambient != self.ambient or other.field != self.field:
            raise AmbientMismatch("subspaces in different ambient spaces")

    def reduce(self, v: Vector) -> Vector:
        """Remainder of v modulo this subspace (pivot coordinates cleared)."""
        if len(v) != self.ambient:
            raise AmbientMismatch("vector length differs from ambient dimension")
        out = v
        for row, pc in zip(self.basis, self.pivots):
            c = out[pc]
            if not c.is_zero():
                out = out - row.scale(c)
        return out

    def contains(self, v: Vector) -> bool:
        return self.reduce(v).is_zero()

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(
            self.field, self.ambient, list(self.basis) + list(other.basis)
        )

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero_space(self.field, self.ambient)
        cols = [list(v.entries) for v in self.basis] + [
            [-e for e in v.entries] for v in other.basis
        ]
        rows = [[col[i] for col in cols] for i in range(self.ambient)]
        ker = kernel(Matrix(self.field, rows))
        vectors = []
        for kv in ker.basis:
            acc = Vector.zero(self.field, self.ambient)
            for c, b in zip(kv.entries[: self.dim], self.basis):
                if not c.is_zero():
                    acc = acc + b.scale(c)
            vectors.append(acc)
        return Subspace.from_vectors(self.field, self.ambient, vectors)

    def is_direct_sum_with(self, other: "Subspace") -> bool:
        self._check(other)
        return self.sum(other).dim == self.dim + other.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"


def invert(m: Matrix) -> Matrix:
    """Inverse of a square invertible matrix via RREF on [m | I]."""
    if m.nrows != m.ncols:
        raise DimensionMismatch("only square matrices invert")
    n = m.nrows
    reduced, rank, _ = rref(m.augment(Matrix.identity(m.field, n)))
    if rank < n:
        raise DimensionMismatch("matrix is singular")
    return Matrix(m.field, tuple(r[n:] for r in reduced.rows))
