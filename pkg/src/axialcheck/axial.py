"""Axis decompositions, fusion checking, Miyamoto involutions, dihedral
conditions, axial dimension, and the scalar-identity suite.

The two middle eigenvalues coincide here, so the split of the eta-eigenspace
into its plus and minus parts is always recovered from a supplied involution,
never guessed from eigenvalues alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import (
    AlgebraDef,
    AlgebraMap,
    adjoint_matrix,
    generated_subalgebra,
    is_homomorphism,
    multiply,
)
from .errors import (
    DataInconsistency,
    DimensionMismatch,
    InvolutionMismatch,
    MiyamotoNotAutomorphism,
    NoStabilization,
    NotIdempotent,
    NotSemisimple,
    WindowTooSmall,
)
from .fields import render
from .linalg import Matrix, Subspace, Vector, invert, kernel, solve_in_span

# Allowed decomposition parts for the product of two parts.  The (0,1) entry
# is the intersection of the two overlapping rules and is empty: those
# products are forced to vanish by the eigenvalue axiom anyway.
_ALLOWED = {
    (0, 0): (0,),
    (0, 1): (),
    (0, 2): (2,),
    (0, 3): (3,),
    (1, 1): (1,),
    (1, 2): (2,),
    (1, 3): (3,),
    (2, 2): (0, 1),
    (2, 3): (3,),
    (3, 3): (0, 1, 2),
}


class FusionTable:
    """Eigenvalue map (0, 1, xi, eta) plus the allowed-parts table."""

    __slots__ = ("xi", "eta", "field")

    def __init__(self, xi, eta):
        if xi.field != eta.field:
            raise DimensionMismatch("xi and eta over different fields")
        for value, name in ((xi, "xi"), (eta, "eta")):
            if value.is_zero() or value.is_one():
                raise DataInconsistency(f"{name} must avoid 0 and 1")
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "field", xi.field)

    def __setattr__(self, *_):
        raise AttributeError("FusionTable is immutable")

    @classmethod
    def majorana(cls, eta):
        """The collapsed table with both middle eigenvalues equal to eta."""
        return cls(eta, eta)

    def phi(self, i):
        if i == 0:
            return self.field.zero()
        if i == 1:
            return self.field.one()
        return self.xi if i == 2 else self.eta

    @staticmethod
    def allowed(i, j):
        key = (i, j) if i <= j else (j, i)
        return _ALLOWED[key]


@dataclass(frozen=True)
class AxisDecomposition:
    """A verified splitting M = M0 + M1 + M2 + M3 for one axis."""

    algebra: AlgebraDef
    axis: Vector
    parts: tuple  # (Subspace, Subspace, Subspace, Subspace)
    table: FusionTable

    def part(self, i) -> Subspace:
        return self.parts[i]

    def dims(self):
        return tuple(p.dim for p in self.parts)


def split_eigenspace(alg: AlgebraDef, a: Vector, eta, tau: AlgebraMap) -> AxisDecomposition:
    """Split M along ad(a) eigenvalues 0, 1, eta, with the eta part divided
    by the supplied involution into its fixed (M2) and negated (M3) pieces.

    The caller vouches that tau is an automorphism; tau^2 = id and
    tau(a) = a are checked here.
    """
    table = FusionTable.majorana(eta)
    if multiply(alg, a, a) != a:
        raise NotIdempotent("axis candidate fails a*a = a")
    if tau.apply(a) != a:
        raise InvolutionMismatch("flip does not fix the axis")
    if tau.matrix.matmul(tau.matrix) != Matrix.identity(alg.field, alg.dim):
        raise InvolutionMismatch("flip squared is not the identity")
    ad = adjoint_matrix(alg, a)
    one = alg.field.one()
    m0 = kernel(ad)
    m1 = Subspace.from_vectors(alg.field, alg.dim, [a])
    e_eta = kernel(ad.sub_scalar_diag(eta))
    fix = kernel(tau.matrix.sub_scalar_diag(one))
    neg = kernel(tau.matrix.sub_scalar_diag(-one))
    m2 = e_eta.intersection(fix)
    m3 = e_eta.intersection(neg)
    total = m0.dim + m1.dim + m2.dim + m3.dim
    if total != alg.dim or m0.sum(m1).sum(m2).sum(m3).dim != alg.dim:
        raise NotSemisimple(
            f"parts of dimensions {(m0.dim, m1.dim, m2.dim, m3.dim)} "
            f"do not decompose the {alg.dim}-dimensional algebra"
        )
    return AxisDecomposition(alg, a, (m0, m1, m2, m3), table)


@dataclass(frozen=True)
class FusionViolation:
    part_i: int
    part_j: int
    left: Vector
    right: Vector
    product: Vector
    allowed: tuple


def check_fusion(alg: AlgebraDef, dec: AxisDecomposition):
    """All products of part basis vectors must land in the allowed parts.

    Returns the list of violations; empty means the fusion rule holds.
    """
    violations = []
    for i in range(4):
        for j in range(i, 4):
            allowed = dec.table.allowed(i, j)
            space = Subspace.zero_space(alg.field, alg.dim)
            for k in allowed:
                space = space.sum(dec.part(k))
            for x in dec.part(i).basis:
                for y in dec.part(j).basis:
                    prod = multiply(alg, x, y)
                    if not space.contains(prod):
                        violations.append(
                            FusionViolation(i, j, x, y, prod, allowed)
                        )
    return violations


def miyamoto(alg: AlgebraDef, dec: AxisDecomposition) -> AlgebraMap:
    """The map fixing M0+M1+M2 and negating M3; must be an automorphism."""
    columns = []
    signs = []
    for i in range(4):
        for v in dec.part(i).basis:
            columns.append(v)
            signs.append(-1 if i == 3 else 1)
    basis_matrix = Matrix.from_columns(alg.field, columns, nrows=alg.dim)
    one = alg.field.one()
    signed_cols = [
        col.scale(one if s > 0 else -one)
        for col, s in zip(columns, signs)
    ]
    signed = Matrix.from_columns(alg.field, signed_cols, nrows=alg.dim)
    tau = AlgebraMap(alg, alg, signed.matmul(invert(basis_matrix)))
    if not is_homomorphism(tau):
        raise MiyamotoNotAutomorphism(
            "sign map of the decomposition is not multiplicative"
        )
    return tau


class DihedralData:
    """Axis window, shift automorphism, and base flip for a dihedral algebra."""

    __slots__ = ("algebra", "eta", "lo", "hi", "axes", "shift", "flip", "_inv_cache")

    def __init__(self, algebra, eta, lo, hi, axes, shift, flip):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "axes", dict(axes))
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "flip", flip)
        object.__setattr__(self, "_inv_cache", {})

    def __setattr__(self, *_):
        raise AttributeError("DihedralData is immutable")

    @classmethod
    def build(cls, alg, seed_axes, shift, flip, eta, window=None):
        """Fill the window [-N, N+1] from seed axes by shifting both ways."""
        n = window if window is not None else alg.dim + 2
        lo, hi = -n, n + 1
        axes = dict(seed_axes)
        seed_lo, seed_hi = min(axes), max(axes)
        if set(axes) != set(range(seed_lo, seed_hi + 1)) or not seed_lo <= 0 <= seed_hi:
            raise DimensionMismatch("seed axes must cover a contiguous range around 0")
        for i in range(seed_lo, seed_hi):
            if shift.apply(axes[i]) != axes[i + 1]:
                raise DataInconsistency(f"shift does not carry axis {i} to axis {i + 1}")
        if flip.apply(axes[0]) != axes[0]:
            raise DataInconsistency("flip does not fix the base axis")
        unshift = shift.inverse()
        for i in range(seed_hi, hi):
            axes[i + 1] = shift.apply(axes[i])
        for i in range(seed_lo, lo, -1):
            axes[i - 1] = unshift.apply(axes[i])
        return cls(alg, eta, lo, hi, axes, shift, flip)

    def axis(self, i) -> Vector:
        try:
            return self.axes[i]
        except KeyError:
            raise WindowTooSmall(
                f"axis index {i} outside window [{self.lo}, {self.hi}]"
            ) from None

    def window_indices(self):
        return range(self.lo, self.hi + 1)

    def involution_at(self, j) -> AlgebraMap:
        """Conjugated flip f1^j o tau0 o f1^(-j)."""
        if j not in self._inv_cache:
            fj = self.shift.power(j)
            self._inv_cache[j] = fj.compose(self.flip).compose(fj.inverse())
        return self._inv_cache[j]

    def shifted(self) -> "DihedralData":
        """Relabelled data with axis'(i) = axis(i+1); flip becomes the next involution."""
        axes = {i: self.axes[i + 1] for i in range(self.lo, self.hi)}
        return DihedralData(
            self.algebra, self.eta, self.lo, self.hi - 1, axes,
            self.shift, self.involution_at(1),
        )


@dataclass(frozen=True)
class DihedralViolation:
    condition: str  # "D1" | "D2" | "D3" | "axis" | "fusion"
    index: int | None
    detail: str


def check_dihedral(alg, dd: DihedralData, axis_indices=None, involution_indices=None):
    """Mechanical check of the dihedral axioms; returns violations (empty = pass)."""
    violations = []
    ident = Matrix.identity(alg.field, alg.dim)

    if not is_homomorphism(dd.shift):
        violations.append(DihedralViolation("D2", None, "shift is not multiplicative"))
    if not dd.shift.is_bijective():
        violations.append(DihedralViolation("D2", None, "shift is not invertible"))
    if not is_homomorphism(dd.flip):
        violations.append(DihedralViolation("D3", 0, "flip is not multiplicative"))
    if dd.flip.matrix.matmul(dd.flip.matrix) != ident:
        violations.append(DihedralViolation("D3", 0, "flip squared is not the identity"))
    for i in range(dd.lo, dd.hi):
        if dd.shift.apply(dd.axis(i)) != dd.axis(i + 1):
            violations.append(
                DihedralViolation("D2", i, f"shift(a_{i}) differs from a_{i + 1}")
            )
    if violations:
        return violations

    span = generated_subalgebra(alg, [dd.axis(i) for i in dd.window_indices()])
    if span.dim != alg.dim:
        violations.append(
            DihedralViolation("D1", None, f"axes generate only dimension {span.dim}")
        )

    if axis_indices is None:
        axis_indices = range(-1, alg.dim + 2)
    if involution_indices is None:
        involution_indices = range(-1, 4)

    decompositions = {}
    for i in axis_indices:
        tau_i = dd.involution_at(i)
        try:
            dec = split_eigenspace(alg, dd.axis(i), dd.eta, tau_i)
        except (NotIdempotent, NotSemisimple, InvolutionMismatch) as exc:
            violations.append(DihedralViolation("axis", i, str(exc)))
            continue
        decompositions[i] = dec
        for v in check_fusion(alg, dec):
            violations.append(
                DihedralViolation(
                    "fusion", i,
                    f"product of parts ({v.part_i},{v.part_j}) escapes parts {v.allowed}",
                )
            )

    for j in involution_indices:
        tau_j = dd.involution_at(j)
        for i in dd.window_indices():
            if dd.lo <= 2 * j - i <= dd.hi:
                if tau_j.apply(dd.axis(i)) != dd.axis(2 * j - i):
                    violations.append(
                        DihedralViolation(
                            "D3", j, f"involution at {j} sends a_{i} elsewhere than a_{2*j-i}"
                        )
                    )
                    break
        dec = decompositions.get(j)
        if dec is None:
            continue
        try:
            g = miyamoto(alg, dec)
        except MiyamotoNotAutomorphism as exc:
            violations.append(DihedralViolation("D3", j, str(exc)))
            continue
        if g != tau_j:
            violations.append(
                DihedralViolation(
                    "D3", j, "conjugated flip differs from the Miyamoto involution"
                )
            )
    return violations


@dataclass(frozen=True)
class RelationWitness:
    """Minimal vanishing combination of axes and the resulting classification."""

    parity: str       # "even" | "odd"
    case: int         # 1..4
    coefficients: tuple
    adim: int
    window: tuple     # (lo, hi) of the minimal relation window

    def describe(self):
        coeffs = ", ".join(render(c) for c in self.coefficients)
        return f"adim {self.adim}, case {self.case} ({self.parity}), coefficients ({coeffs})"


def _relation_kernel(field, vectors):
    """Kernel of the matrix whose columns are the given vectors."""
    n = len(vectors[0])
    rows = [[v[i] for v in vectors] for i in range(n)]
    return kernel(Matrix(field, rows))


def axial_dimension(alg, dd: DihedralData) -> RelationWitness:
    """Grow the axis window until the span stabilizes; classify the minimal
    vanishing combination by its flip symmetry and the parity of the span."""
    field = alg.field
    lo = hi = 0
    vectors = {0: dd.axis(0)}
    rank = 0 if dd.axis(0).is_zero() else 1
    first_relation = None
    quiet = 0

    while quiet < 2:
        if hi == -lo:
            hi += 1
            new_index = hi
        else:
            lo -= 1
            new_index = lo
        if new_index < dd.lo or new_index > dd.hi:
            raise NoStabilization(
                f"axis span still growing at window [{lo}, {hi}]"
            )
        vectors[new_index] = dd.axis(new_index)
        ordered = [vectors[i] for i in range(lo, hi + 1)]
        span = Subspace.from_vectors(field, alg.dim, ordered)
        if span.dim == rank:
            quiet += 1
            if first_relation is None:
                ker = _relation_kernel(field, ordered)
                if ker.dim != 1:
                    raise DataInconsistency(
                        f"minimal relation window carries {ker.dim} independent relations"
                    )
                first_relation = (lo, hi, ker.basis[0])
        else:
            quiet = 0
            rank = span.dim

    if first_relation is None:
        raise NoStabilization("span stabilized without ever exposing a relation")
    rel_lo, rel_hi, coeffs = first_relation
    adim = rank

    by_index = {rel_lo + pos: coeffs[pos] for pos in range(len(coeffs))}
    if rel_hi == -rel_lo:
        k = rel_hi
        flipped = {i: by_index[-i] for i in by_index}
        symmetric = all(flipped[i] == by_index[i] for i in by_index)
        antisymmetric = all(flipped[i] == -by_index[i] for i in by_index)
        if symmetric == antisymmetric:
            raise DataInconsistency("minimal relation has mixed flip symmetry")
        lead = by_index[k]
        seq = tuple(by_index[i] / lead for i in range(0, k + 1))
        if symmetric:
            case, parity, alphas = 1, "even", seq
        else:
            case, parity, alphas = 2, "odd", seq[1:]
        expected_adim = 2 * k
    elif rel_hi == -rel_lo + 1:
        k = -rel_lo
        flipped = {i: by_index[1 - i] for i in by_index}
        symmetric = all(flipped[i] == by_index[i] for i in by_index)
        antisymmetric = all(flipped[i] == -by_index[i] for i in by_index)
        if symmetric == antisymmetric:
            raise DataInconsistency("minimal relation has mixed flip symmetry")
        lead = by_index[k + 1]
        alphas = tuple(by_index[i + 1] / lead for i in range(0, k + 1))
        case, parity = (3, "even") if symmetric else (4, "odd")
        expected_adim = 2 * k + 1
    else:
        raise DataInconsistency("minimal relation window has unexpected shape")

    if adim != expected_adim:
        raise DataInconsistency(
            f"axial dimension {adim} contradicts relation case {case} (expects {expected_adim})"
        )
    return RelationWitness(parity, case, alphas, adim, (rel_lo, rel_hi))


def relation_vector(dd: DihedralData, witness: RelationWitness) -> Vector:
    """Evaluate the witnessed combination on the window (must be zero)."""
    out = dd.algebra.zero_vector()
    if witness.case == 1:
        out = out + dd.axis(0).scale(witness.coefficients[0])
        for i, c in enumerate(witness.coefficients[1:], start=1):
            out = out + (dd.axis(i) + dd.axis(-i)).scale(c)
    elif witness.case == 2:
        for i, c in enumerate(witness.coefficients, start=1):
            out = out + (dd.axis(i) - dd.axis(-i)).scale(c)
    elif witness.case == 3:
        for i, c in enumerate(witness.coefficients):
            out = out + (dd.axis(i + 1) + dd.axis(-i)).scale(c)
    else:
        for i, c in enumerate(witness.coefficients):
            out = out + (dd.axis(i + 1) - dd.axis(-i)).scale(c)
    return out


def p_vector(alg, dd: DihedralData, i: int, j: int) -> Vector:
    """a_j * a_{i+j} - eta (a_j + a_{i+j}); p1 is p_vector(1, 0)."""
    aj, aij = dd.axis(j), dd.axis(i + j)
    return multiply(alg, aj, aij) - (aj + aij).scale(dd.eta)


def lambda_coefficient(alg, dec: AxisDecomposition, target: Vector):
    """Coefficient of the axis in the M1 component of target."""
    basis = list(dec.part(0).basis) + [dec.axis] + list(dec.part(2).basis) + list(
        dec.part(3).basis
    )
    coeffs = solve_in_span(target, basis)
    if coeffs is None:
        raise NotSemisimple("decomposition does not span the ambient space")
    return coeffs[dec.part(0).dim]


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""


@dataclass
class IdentityReport:
    checks: list = dc_field(default_factory=list)
    scalars: dict = dc_field(default_factory=dict)

    def add(self, name, ok, detail=""):
        self.checks.append(IdentityCheck(name, "pass" if ok else "fail", detail))

    def skip(self, name, detail=""):
        self.checks.append(IdentityCheck(name, "skipped", detail))

    @property
    def passed(self):
        return all(c.status != "fail" for c in self.checks)


def _residual_detail(v: Vector) -> str:
    return "residual (" + ", ".join(render(e) for e in v.entries) + ")"


def identity_suite(alg, dd: DihedralData) -> IdentityReport:
    """Exact check of the two-generated scalar identities on the base axis.

    Extracts lambda_1..3 from the decomposition at a_0, then mu, nu, rho
    from the three product expansions, pi from p*p, and checks the
    invariant-scalar action and the shifted-p disjunction where applicable.
    """
    report = IdentityReport()
    eta = dd.eta
    field = alg.field
    a0 = dd.axis(0)
    dec = split_eigenspace(alg, a0, eta, dd.flip)

    lambdas = {}
    for i in (1, 2, 3):
        lambdas[i] = lambda_coefficient(alg, dec, dd.axis(i))
        report.scalars[f"lambda{i}"] = lambdas[i]

    one = field.one()
    for i in (1, 2, 3):
        p_i0 = p_vector(alg, dd, i, 0)
        lhs = multiply(alg, a0, p_i0)
        rhs = a0.scale((one - eta) * lambdas[i] - eta)
        report.add(f"p{i}0_scalar", lhs == rhs, "" if lhs == rhs else _residual_detail(lhs - rhs))
        mid = p_i0 - a0.scale(lambdas[i] - eta) + (dd.axis(i) + dd.axis(-i)).scale(eta / 2)
        ok = dec.part(2).contains(mid)
        report.add(f"p{i}0_m2_part", ok, "" if ok else _residual_detail(dec.part(2).reduce(mid)))

    lam1, lam2 = lambdas[1], lambdas[2]
    p1 = p_vector(alg, dd, 1, 0)
    p20 = p_vector(alg, dd, 2, 0)
    p21 = p_vector(alg, dd, 2, 1)
    p31 = p_vector(alg, dd, 3, 1)
    p3m1 = p_vector(alg, dd, 3, -1)
    sym1 = p1.scale(field.from_int(2)) + (dd.axis(1) + dd.axis(-1)).scale(eta)
    sym2 = p20.scale(field.from_int(2)) + (dd.axis(2) + dd.axis(-2)).scale(eta)

    mu = None
    coef1 = (eta * 2 - 1) * (lam1 * 4 - eta * 3) / (eta * 2)
    residual = multiply(alg, a0, p21) - sym1.scale(coef1)
    sol = solve_in_span(residual, [a0])
    if sol is None:
        report.add("mu_expansion", False, _residual_detail(residual))
    else:
        mu = sol[0]
        report.add("mu_expansion", True)
        report.scalars["mu"] = mu

    if mu is None:
        report.skip("nu_expansion", "mu unavailable")
        report.skip("rho_expansion", "mu unavailable")
    else:
        coef2 = (eta * 2 - 1) * (lam1 * 2 - eta) / (eta * 2)
        coef3 = (mu - eta * lam2 + eta * eta * 2) / eta
        residual = (
            multiply(alg, a0, p31)
            - (p31 - p3m1).scale(eta / 2)
            + sym2.scale(coef2)
            + sym1.scale(coef3)
        )
        sol = solve_in_span(residual, [a0])
        if sol is None:
            report.add("nu_expansion", False, _residual_detail(residual))
        else:
            report.add("nu_expansion", True)
            report.scalars["nu"] = sol[0] * 2

        p30 = p_vector(alg, dd, 3, 0)
        base = (eta * 2 - 1) * (lam1 * 4 - eta * 3)
        rhs = (
            (p30.scale(field.from_int(2)) + p31 + p3m1).scale(base / 4)
            + p20.scale(mu + base * ((eta * 2 - 1) * lam1 * 2 - eta * eta * 4 + eta) / (eta * eta * 2))
            + p1.scale(base * ((eta * 2 - 1) * lam1 * 4 - eta * lam2 - eta * eta * 5 + eta * 3) / (eta * eta))
            + (dd.axis(2) + dd.axis(-2)).scale(base * (eta * 2 - 1) * (lam1 * 3 - eta * 2) / (eta * 2))
            + (dd.axis(1) + dd.axis(-1)).scale(base * (mu * 2 - eta * lam2 + eta * eta * 2) / (eta * 2))
        )
        residual = multiply(alg, p20, p21) - rhs
        sol = solve_in_span(residual, [a0])
        if sol is None:
            report.add("rho_expansion", False, _residual_detail(residual))
        else:
            report.add("rho_expansion", True)
            report.scalars["rho"] = sol[0]

    # two-generated subalgebra: p*p = pi*p, and dimension 3 away from the
    # degenerate case p = 0 (there the two axes span a Jordan-type plane)
    sub = generated_subalgebra(alg, [a0, dd.axis(1)])
    report.scalars["two_generated_dim"] = field.from_int(sub.dim)
    pp = multiply(alg, p1, p1)
    if p1.is_zero():
        report.add("p1_square", pp.is_zero())
        report.scalars["pi"] = field.zero()
        report.skip("two_generated_dim", f"p vanishes; dimension {sub.dim}")
    else:
        sol = solve_in_span(pp, [p1])
        if sol is None:
            report.add("p1_square", False, _residual_detail(pp))
        else:
            report.add("p1_square", True)
            report.scalars["pi"] = sol[0]
        report.add(
            "two_generated_dim",
            alg.dim <= 3 or sub.dim == 3,
            f"dimension {sub.dim}",
        )

    # invariant elements acting as scalars on a0 act the same on every p_{i,j}
    fixed = kernel(dd.shift.matrix.sub_scalar_diag(one)).intersection(
        kernel(dd.flip.matrix.sub_scalar_diag(one))
    )
    applicable = False
    ok = True
    for x in fixed.basis:
        sol = solve_in_span(multiply(alg, x, a0), [a0])
        if sol is None:
            continue
        applicable = True
        scale = sol[0]
        for i in (1, 2, 3):
            for j in (-1, 0, 1):
                pij = p_vector(alg, dd, i, j)
                if multiply(alg, x, pij) != pij.scale(scale):
                    ok = False
    if applicable:
        report.add("invariant_scalar_action", ok)
    else:
        report.skip("invariant_scalar_action", "no invariant element acts as a scalar")

    # shifted-p disjunction, applicable when lambda_1 = 3 eta / 4
    if lam1 == eta * 3 / 4:
        if mu is None:
            report.add("p2_shift_or_mu_zero", False, "mu unavailable")
        else:
            ok = (p21 == p20) or mu.is_zero()
            report.add("p2_shift_or_mu_zero", ok)
    else:
        report.skip("p2_shift_or_mu_zero", "lambda_1 differs from 3*eta/4")
    return report


_MODES = (
    "lemma_2_3_part1",
    "lemma_2_3_part2",
    "lemma_2_4_part1",
    "lemma_2_4_part2",
    "lemma_2_4_part3",
)


def relation_transform(coeffs, mode):
    """Coefficient-sequence transforms derived from the relation lemmas.

    Input/output conventions:

    * lemma_2_3_*: input (a_0..a_k) multiplies (a_{i+1} - a_{-i}); output is
      0-indexed over (a_i - a_{-i}) (index-0 slot is always zero).
    * lemma_2_4_part1/2: input (a_0..a_k) multiplies a_0 and (a_i + a_{-i});
      output as above.
    * lemma_2_4_part3: input (a_1..a_k); output is 1-indexed over
      (a_{i+1} - a_{-i}).
    """
    coeffs = tuple(coeffs)
    if not coeffs:
        raise DimensionMismatch("coefficient sequence must be nonempty")
    if mode not in _MODES:
        raise DimensionMismatch(f"unknown transform mode {mode!r}")
    field = coeffs[0].field
    zero = field.zero()
    k = len(coeffs) - 1

    def plain(i):
        return coeffs[i] if 0 <= i <= k else zero

    if mode in ("lemma_2_3_part1", "lemma_2_3_part2"):
        def get(i):
            if i == -1:
                return -coeffs[0]
            return plain(i)

        if mode == "lemma_2_3_part2":
            out = [get(i) + get(i - 1) for i in range(0, k + 1)]
            out.append(coeffs[k])
            return tuple(out)
        out = [zero]
        for i in range(1, k + 2):
            out.append(get(i + 1) + get(i) * 2 + get(i - 1) * 2 + get(i - 2))
        out.append(coeffs[k])
        return tuple(out)

    if mode in ("lemma_2_4_part1", "lemma_2_4_part2"):
        def get(i):
            if i == -1:
                return plain(1)
            return plain(i)

        if mode == "lemma_2_4_part2":
            out = [zero]
            out.extend(get(i - 1) - get(i + 1) for i in range(1, k + 1))
            out.append(coeffs[k])
            return tuple(out)
        out = [zero]
        for i in range(1, k + 2):
            out.append(get(i - 2) + get(i - 1) - get(i + 1) - get(i + 2))
        out.append(coeffs[k])
        return tuple(out)

    # lemma_2_4_part3: input is (a_1..a_k)
    seq = (zero,) + coeffs  # reindex so seq[i] = a_i
    kk = len(coeffs)
    out = [seq[i] - (seq[i + 1] if i + 1 <= kk else zero) for i in range(1, kk)]
    out.append(seq[kk])
    return tuple(out)
