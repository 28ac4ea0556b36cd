"""Commutative structure-constant algebras: products, subalgebras, ideals,
quotients, and linear maps extended from generators.

Commutativity is structural: the multiplication table is keyed by unordered
index pairs, so x*y = y*x cannot fail by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DescriptorMismatch, DimensionMismatch, NotAnIdeal
from .linalg import Matrix, Subspace, Vector, invert, rref, solve_in_span


class AlgebraDef:
    """Algebra given by basis labels and symmetric structure constants.

    ``table`` maps an index pair (i, j) with i <= j to the product vector;
    missing pairs multiply to zero.
    """

    __slots__ = ("field", "labels", "table", "dim")

    def __init__(self, field, labels, table):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise DimensionMismatch("basis labels must be distinct")
        dim = len(labels)
        norm = {}
        for (i, j), vec in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"bad structure-constant key ({i},{j})")
            key = (i, j) if i <= j else (j, i)
            if key in norm:
                raise DimensionMismatch(f"duplicate structure-constant key {key}")
            if len(vec) != dim:
                raise DimensionMismatch("structure-constant vector has wrong length")
            if vec.field != field:
                raise DescriptorMismatch("structure constants over the wrong field")
            if not vec.is_zero():
                norm[key] = vec
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "table", norm)
        object.__setattr__(self, "dim", dim)

    def __setattr__(self, *_):
        raise AttributeError("AlgebraDef is immutable")

    def label_index(self, label):
        return self.labels.index(label)

    def basis_vector(self, i) -> Vector:
        return Vector.unit(self.field, self.dim, i)

    def zero_vector(self) -> Vector:
        return Vector.zero(self.field, self.dim)

    def vector(self, coeffs_by_label) -> Vector:
        entries = [self.field.zero()] * self.dim
        for label, c in coeffs_by_label.items():
            entries[self.label_index(label)] = c
        return Vector(self.field, entries)

    def product_of_basis(self, i, j) -> Vector:
        key = (i, j) if i <= j else (j, i)
        vec = self.table.get(key)
        return vec if vec is not None else self.zero_vector()

    def full_space(self) -> Subspace:
        return Subspace.full_space(self.field, self.dim)

    def __repr__(self):
        return f"AlgebraDef({', '.join(self.labels)})"


def multiply(alg: AlgebraDef, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the structure constants."""
    if len(x) != alg.dim or len(y) != alg.dim:
        raise DimensionMismatch("vector length differs from algebra dimension")
    out = [alg.field.zero()] * alg.dim
    for (i, j), c in alg.table.items():
        if i == j:
            s = x[i] * y[i]
        else:
            s = x[i] * y[j] + x[j] * y[i]
        if s.is_zero():
            continue
        for k, ck in enumerate(c.entries):
            if not ck.is_zero():
                out[k] = out[k] + s * ck
    return Vector(alg.field, out)


def adjoint_matrix(alg: AlgebraDef, a: Vector) -> Matrix:
    """Matrix of x -> a*x in the algebra basis."""
    cols = [multiply(alg, a, alg.basis_vector(j)) for j in range(alg.dim)]
    return Matrix.from_columns(alg.field, cols, nrows=alg.dim)


def generated_subalgebra(alg: AlgebraDef, gens) -> Subspace:
    """Smallest multiplication-closed subspace containing the generators."""
    gens = list(gens)
    span = Subspace.from_vectors(alg.field, alg.dim, gens)
    while True:
        basis = span.basis
        products = []
        for i in range(len(basis)):
            for j in range(i + 1):
                products.append(multiply(alg, basis[i], basis[j]))
        grown = Subspace.from_vectors(
            alg.field, alg.dim, list(basis) + products
        )
        if grown.dim == span.dim:
            return grown
        span = grown


def is_ideal(alg: AlgebraDef, s: Subspace) -> bool:
    for k in range(alg.dim):
        b = alg.basis_vector(k)
        for v in s.basis:
            if not s.contains(multiply(alg, b, v)):
                return False
    return True


class AlgebraMap:
    """Linear map between algebras; columns are images of source basis vectors."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        if matrix.ncols != source.dim or matrix.nrows != target.dim:
            raise DimensionMismatch("map matrix has wrong shape")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, *_):
        raise AttributeError("AlgebraMap is immutable")

    @classmethod
    def identity(cls, alg):
        return cls(alg, alg, Matrix.identity(alg.field, alg.dim))

    def apply(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        if other.target is not self.source and other.target.labels != self.source.labels:
            raise DimensionMismatch("maps do not compose")
        return AlgebraMap(other.source, self.target, self.matrix.matmul(other.matrix))

    def inverse(self) -> "AlgebraMap":
        return AlgebraMap(self.target, self.source, invert(self.matrix))

    def power(self, k: int) -> "AlgebraMap":
        if self.source is not self.target:
            raise DimensionMismatch("powers need an endomorphism")
        if k < 0:
            return self.inverse().power(-k)
        out = AlgebraMap.identity(self.source)
        base = self
        while k:
            if k & 1:
                out = base.compose(out)
            base = base.compose(base)
            k >>= 1
        return out

    def is_bijective(self) -> bool:
        if self.matrix.nrows != self.matrix.ncols:
            return False
        return rref(self.matrix)[1] == self.matrix.ncols

    def is_identity(self) -> bool:
        return self.matrix == Matrix.identity(self.source.field, self.source.dim)

    def __eq__(self, other):
        if not isinstance(other, AlgebraMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


def is_homomorphism(m: AlgebraMap) -> bool:
    """Check m(x*y) = m(x)*m(y) on all basis pairs (bilinearity does the rest)."""
    src, tgt = m.source, m.target
    images = [m.matrix.column(j) for j in range(src.dim)]
    for i in range(src.dim):
        for j in range(i + 1):
            lhs = m.apply(src.product_of_basis(i, j))
            rhs = multiply(tgt, images[i], images[j])
            if lhs != rhs:
                return False
    return True


def quotient(alg: AlgebraDef, ideal: Subspace):
    """Quotient algebra on cosets of non-pivot basis vectors, plus projection."""
    if not is_ideal(alg, ideal):
        raise NotAnIdeal("subspace is not closed under multiplication by the algebra")
    pivots = set(ideal.pivots)
    keep = [k for k in range(alg.dim) if k not in pivots]
    qdim = len(keep)
    field = alg.field

    def project(v: Vector) -> Vector:
        reduced = ideal.reduce(v)
        return Vector(field, tuple(reduced[k] for k in keep))

    qtable = {}
    for qi, ki in enumerate(keep):
        for qj, kj in enumerate(keep[: qi + 1]):
            vec = project(alg.product_of_basis(ki, kj))
            if not vec.is_zero():
                qtable[(qj, qi)] = vec
    qalg = AlgebraDef(field, tuple(alg.labels[k] for k in keep), qtable)
    proj_cols = [project(alg.basis_vector(k)) for k in range(alg.dim)]
    projection = AlgebraMap(alg, qalg, Matrix.from_columns(field, proj_cols, nrows=qdim))
    return qalg, projection


def induce_on_quotient(m: AlgebraMap, ideal: Subspace, qalg: AlgebraDef, projection: AlgebraMap):
    """Descend an endomorphism to the quotient; None if it does not preserve the ideal."""
    for v in ideal.basis:
        if not ideal.contains(m.apply(v)):
            return None
    pivots = set(ideal.pivots)
    keep = [k for k in range(m.source.dim) if k not in pivots]
    cols = [projection.apply(m.apply(m.source.basis_vector(k))) for k in keep]
    return AlgebraMap(qalg, qalg, Matrix.from_columns(qalg.field, cols, nrows=qalg.dim))


@dataclass(frozen=True)
class Inconsistent:
    """Generator images contradict a linear dependency among product words."""

    detail: str


@dataclass(frozen=True)
class NotGenerating:
    """Closure of the generators spans a proper subspace."""

    spanned_dimension: int


def extend_from_generators(alg: AlgebraDef, pairs, target: AlgebraDef):
    """Extend generator images to a linear map respecting all products.

    Closes the generators under multiplication breadth-first (left operand
    earlier in the spanning sequence), assigning the image of each product
    word to be the product of images.  Every pair of spanning words is
    checked, so a returned map is automatically a homomorphism.
    """
    pairs = list(pairs)
    if not pairs:
        raise DimensionMismatch("at least one generator pair is required")
    span_src: list[Vector] = []
    span_img: list[Vector] = []

    def feed(src, img, what):
        coeffs = solve_in_span(src, span_src)
        if coeffs is None:
            span_src.append(src)
            span_img.append(img)
            return None
        expected = Vector.zero(target.field, target.dim)
        for c, iv in zip(coeffs, span_img):
            if not c.is_zero():
                expected = expected + iv.scale(c)
        if expected != img:
            return Inconsistent(f"images disagree on dependent word ({what})")
        return None

    for src, img in pairs:
        if len(src) != alg.dim:
            raise DimensionMismatch("generator not in the source algebra")
        if len(img) != target.dim:
            raise DimensionMismatch("image not in the target algebra")
        bad = feed(src, img, "generator")
        if bad is not None:
            return bad

    i = 0
    while i < len(span_src):
        for j in range(i + 1):
            src = multiply(alg, span_src[i], span_src[j])
            img = multiply(target, span_img[i], span_img[j])
            bad = feed(src, img, f"word {i}*{j}")
            if bad is not None:
                return bad
        i += 1

    if len(span_src) < alg.dim:
        return NotGenerating(len(span_src))

    cols = []
    for k in range(alg.dim):
        coeffs = solve_in_span(alg.basis_vector(k), span_src)
        img = Vector.zero(target.field, target.dim)
        for c, iv in zip(coeffs, span_img):
            if not c.is_zero():
                img = img + iv.scale(c)
        cols.append(img)
    return AlgebraMap(alg, target, Matrix.from_columns(target.field, cols, nrows=target.dim))
