import random

import pytest

from axialcheck.algebra import (
    AlgebraMap,
    Inconsistent,
    NotGenerating,
    adjoint_matrix,
    extend_from_generators,
    generated_subalgebra,
    is_homomorphism,
    is_ideal,
    multiply,
    quotient,
)
from axialcheck.catalog import instantiate
from axialcheck.errors import NotAnIdeal
from axialcheck.fields import parse_scalar
from axialcheck.linalg import Matrix, Subspace, Vector


def _span_of(alg, label):
    return Subspace.from_vectors(
        alg.field, alg.dim, [alg.basis_vector(alg.label_index(label))]
    )


def _rand_vec(alg, rng):
    return Vector(
        alg.field, [alg.field.from_int(rng.randint(-4, 4)) for _ in range(alg.dim)]
    )


def test_idempotent_axes_everywhere():
    for name in ("ThreeEv", "FourEv", "BarFourTwo", "FiveThree", "SixThree", "Seven", "SevenX"):
        alg, dd = instantiate(name)
        a0 = dd.axis(0)
        assert multiply(alg, a0, a0) == a0


def test_opposite_axes_multiply_to_zero_in_six_three():
    alg, dd = instantiate("SixThree")
    assert multiply(alg, dd.axis(0), dd.axis(3)).is_zero()


def test_multiply_bilinear_symmetric(QETA):
    alg, _ = instantiate("FiveThree")
    rng = random.Random(3)
    for _ in range(25):
        x, y, z = (_rand_vec(alg, rng) for _ in range(3))
        assert multiply(alg, x, y) == multiply(alg, y, x)
        assert multiply(alg, x + y, z) == multiply(alg, x, z) + multiply(alg, y, z)
        assert multiply(alg, x, alg.zero_vector()).is_zero()


def test_adjoint_of_central_element_is_scalar():
    alg, _ = instantiate("ThreeEv")
    p1 = alg.basis_vector(alg.label_index("p1"))
    ad = adjoint_matrix(alg, p1)
    scalar = parse_scalar("-eta*(3*eta+1)/4", alg.field)
    expected = Matrix.identity(alg.field, alg.dim)
    scaled = Matrix(
        alg.field,
        [[scalar * e for e in row] for row in expected.rows],
    )
    assert ad == scaled
    zero_ad = adjoint_matrix(alg, alg.zero_vector())
    assert zero_ad == Matrix.zero(alg.field, alg.dim, alg.dim)


def test_generated_subalgebra():
    alg, dd = instantiate("FourEv")
    span = generated_subalgebra(alg, [dd.axis(0), dd.axis(1)])
    assert span.dim == 3
    expected = Subspace.from_vectors(
        alg.field,
        alg.dim,
        [dd.axis(0), dd.axis(1), alg.basis_vector(alg.label_index("p1"))],
    )
    assert span == expected
    alg5, dd5 = instantiate("FiveThree")
    assert generated_subalgebra(alg5, [dd5.axis(0), dd5.axis(1)]).dim == 3
    full = generated_subalgebra(alg5, [alg5.basis_vector(i) for i in range(alg5.dim)])
    assert full.dim == alg5.dim


def test_closure_property_of_generated_subalgebra():
    alg, dd = instantiate("FiveThree")
    span = generated_subalgebra(alg, [dd.axis(0), dd.axis(1)])
    for u in span.basis:
        for v in span.basis:
            assert span.contains(multiply(alg, u, v))
    assert span.contains(dd.axis(0)) and span.contains(dd.axis(1))


def test_is_ideal_exactness():
    alg_sym, _ = instantiate("ThreeEv")
    assert not is_ideal(alg_sym, _span_of(alg_sym, "p1"))
    alg_q, _ = instantiate("ThreeEv", "q", "-1/3")
    assert is_ideal(alg_q, _span_of(alg_q, "p1"))
    seven_q, _ = instantiate("Seven")
    assert not is_ideal(seven_q, _span_of(seven_q, "p1"))
    seven5, _ = instantiate("Seven", "gf:5")
    assert is_ideal(seven5, _span_of(seven5, "p1"))
    assert is_ideal(alg_sym, Subspace.zero_space(alg_sym.field, alg_sym.dim))


def test_quotient():
    alg, _ = instantiate("ThreeEv", "q", "-1/3")
    qalg, proj = quotient(alg, _span_of(alg, "p1"))
    assert qalg.dim == 3 and qalg.labels == ("am1", "a0", "a1")
    rng = random.Random(9)
    for _ in range(20):
        x, y = _rand_vec(alg, rng), _rand_vec(alg, rng)
        assert proj.apply(multiply(alg, x, y)) == multiply(
            qalg, proj.apply(x), proj.apply(y)
        )
    zero_q, zero_proj = quotient(alg, Subspace.zero_space(alg.field, alg.dim))
    assert zero_q.dim == alg.dim and zero_proj.is_identity()
    sym, _ = instantiate("ThreeEv")
    with pytest.raises(NotAnIdeal):
        quotient(sym, _span_of(sym, "p1"))


def test_quotient_of_five_three():
    alg, dd = instantiate("FiveThree", "q", "-1/3")
    sigma = alg.zero_vector()
    for i in range(-2, 3):
        sigma = sigma + dd.axis(i)
    span = Subspace.from_vectors(alg.field, alg.dim, [sigma])
    assert is_ideal(alg, span)
    qalg, _ = quotient(alg, span)
    assert qalg.dim == 4


def test_is_homomorphism():
    alg, dd = instantiate("FiveThree")
    assert is_homomorphism(AlgebraMap.identity(alg))
    assert is_homomorphism(dd.flip)
    # swapping the central element with an axis is not multiplicative
    alg3, _ = instantiate("ThreeEv")
    n = alg3.dim
    idx = {l: i for i, l in enumerate(alg3.labels)}
    cols = [alg3.basis_vector(i) for i in range(n)]
    cols[idx["p1"]], cols[idx["a0"]] = cols[idx["a0"]], cols[idx["p1"]]
    swap = AlgebraMap(alg3, alg3, Matrix.from_columns(alg3.field, cols, nrows=n))
    assert not is_homomorphism(swap)


def test_extend_from_generators():
    alg, dd = instantiate("FiveThree")
    pairs = [(alg.basis_vector(i), alg.basis_vector(i)) for i in range(alg.dim)]
    ident = extend_from_generators(alg, pairs, alg)
    assert isinstance(ident, AlgebraMap) and ident.is_identity()
    # the cyclic shift extends to an automorphism
    shift_pairs = [(dd.axis(i), dd.axis(i + 1)) for i in range(-2, 3)]
    shift = extend_from_generators(alg, shift_pairs, alg)
    assert isinstance(shift, AlgebraMap)
    assert shift == dd.shift
    # automorphisms carry idempotents to idempotents
    for i in range(-2, 3):
        img = shift.apply(dd.axis(i))
        assert multiply(alg, img, img) == img


def test_extend_flip_fixes_central_element():
    alg, dd = instantiate("ThreeEv")
    pairs = [(dd.axis(i), dd.axis(-i)) for i in (-1, 0, 1)]
    flip = extend_from_generators(alg, pairs, alg)
    assert isinstance(flip, AlgebraMap)
    p1 = alg.basis_vector(alg.label_index("p1"))
    assert flip.apply(p1) == p1


def test_extend_failures():
    alg, dd = instantiate("ThreeEvX")
    # two axes only generate a proper subalgebra here
    result = extend_from_generators(
        alg, [(dd.axis(0), dd.axis(0)), (dd.axis(1), dd.axis(-1))], alg
    )
    assert isinstance(result, NotGenerating)
    # full basis with a non-multiplicative assignment is inconsistent
    bad = extend_from_generators(
        alg,
        [
            (dd.axis(-1), dd.axis(-1)),
            (dd.axis(0), dd.axis(0)),
            (dd.axis(1), dd.axis(0)),
        ],
        alg,
    )
    assert isinstance(bad, Inconsistent)
