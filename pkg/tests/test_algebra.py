import numpy as np
import pytest

from coring_lab.algebra import (
    Algebra,
    AlgebraHom,
    check_algebra,
    frobenius_fixed,
    is_division_ring,
    is_division_ring_by_enumeration,
    is_semisimple,
    is_semisimple_module,
    jacobson_radical,
    opposite,
    primitive_central_idempotents,
    radical_by_nilpotency,
)
from coring_lab.field import Field, TooLargeToEnumerate
from coring_lab.fixtures import mut_algebra
from helpers import dual_numbers, gf4, random_algebra


def test_gf4_multiplication_table():
    A = gf4()
    F = A.field
    x = A.basis(1)
    assert F.equal(A.mul(x, x), F.array([1, 1]))  # x^2 = x + 1
    assert check_algebra(A).ok
    assert check_algebra(Algebra.ground(F)).ok


def test_check_algebra_rejects_one_sided_unit():
    res = check_algebra(mut_algebra().algebras["Z"])
    assert not res.ok
    assert res.witness is not None


def test_radical_examples():
    assert jacobson_radical(Algebra.matrix_algebra(Field.gf(3), 2)).shape[0] == 0
    D = dual_numbers()
    rad = jacobson_radical(D)
    assert rad.shape[0] == 1
    assert D.field.equal(rad[0], D.field.array([0, 1]))
    assert jacobson_radical(gf4()).shape[0] == 0


def test_radical_over_q():
    Q = Field.rationals()
    assert jacobson_radical(Algebra.upper_triangular(Q, 2)).shape[0] == 1
    assert jacobson_radical(Algebra.matrix_algebra(Q, 2)).shape[0] == 0


def test_radical_matches_nilpotency_oracle():
    rng = np.random.default_rng(11)
    for p in (2, 3):
        F = Field.gf(p)
        for _ in range(12):
            A = random_algebra(F, rng)
            if F.p**A.dim > 4096:
                continue
            assert F.same_span(jacobson_radical(A).T, radical_by_nilpotency(A).T)


def test_radical_is_nilpotent_ideal_with_semisimple_quotient():
    F = Field.gf(2)
    A = Algebra.upper_triangular(F, 3)
    rad = jacobson_radical(A)
    assert rad.shape[0] == 3
    quot, _ = A.quotient_algebra(rad)
    assert jacobson_radical(quot).shape[0] == 0
    for r in rad:
        assert F.is_zero(F.reduce(np.linalg.matrix_power(A.left_mat(r).astype(object), A.dim)))


def test_semisimple_module_examples():
    M = Algebra.matrix_algebra(Field.gf(3), 2)
    assert is_semisimple_module(M, M.right_regular, "right")
    D = dual_numbers()
    assert not is_semisimple_module(D, D.right_regular, "right")
    assert is_semisimple_module(D, D.field.zeros((2, 0, 0)), "right")


def test_semisimple_module_agrees_with_radical():
    rng = np.random.default_rng(3)
    F = Field.gf(3)
    for _ in range(10):
        A = random_algebra(F, rng)
        assert is_semisimple_module(A, A.right_regular, "right") == (jacobson_radical(A).shape[0] == 0)
        assert is_semisimple(A) == (jacobson_radical(A).shape[0] == 0)


def test_division_ring_examples():
    assert is_division_ring(gf4())
    assert not is_division_ring(Algebra.matrix_algebra(Field.gf(3), 2))
    F = Field.gf(2)
    assert not is_division_ring(Algebra.product(Algebra.ground(F), Algebra.ground(F)))


def test_division_ring_matches_enumeration():
    rng = np.random.default_rng(8)
    for p in (2, 3, 5):
        F = Field.gf(p)
        for _ in range(10):
            A = random_algebra(F, rng)
            assert is_division_ring(A, rng) == is_division_ring_by_enumeration(A)


def test_division_enumeration_bound():
    with pytest.raises(TooLargeToEnumerate):
        is_division_ring_by_enumeration(Algebra.matrix_algebra(Field.gf(5), 3))


def test_opposite_is_involutive_and_fixes_commutative():
    A = gf4()
    assert opposite(A).same_as(A)
    U = Algebra.upper_triangular(Field.gf(2), 2)
    Uop = opposite(U)
    assert check_algebra(Uop).ok
    assert not Uop.same_as(U)
    assert opposite(Uop).same_as(U)
    F = U.field
    for i in range(U.dim):
        for j in range(U.dim):
            assert F.equal(Uop.mul(U.basis(i), U.basis(j)), U.mul(U.basis(j), U.basis(i)))


def test_algebra_hom_check_is_exhaustive():
    A = gf4()
    F = A.field
    frob = F.array([[1, 1], [0, 1]])  # x -> x^2 = x + 1
    assert AlgebraHom(A, A, frob).check().ok
    assert not AlgebraHom(A, A, F.array([[1, 0], [0, 0]])).check().ok


def test_frobenius_fixed_field():
    fixed = frobenius_fixed(gf4())
    assert fixed.shape[0] == 1


def test_central_idempotents_of_product():
    F = Field.gf(3)
    A = Algebra.product(Algebra.matrix_algebra(F, 2), Algebra.ground(F))
    idems = primitive_central_idempotents(A, np.random.default_rng(0))
    assert len(idems) == 2
    assert F.equal(F.reduce(idems[0] + idems[1]), A.unit)
    for e in idems:
        assert F.equal(A.mul(e, e), e)
