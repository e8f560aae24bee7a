import numpy as np
import pytest

from coring_lab.algebra import Algebra, AlgebraHom, check_algebra, jacobson_radical
from coring_lab.coring import (
    ComatrixCoring,
    CoringHom,
    check_coring,
    check_hat_anti_iso,
    check_right_dual_anti_iso,
    convolution_algebra,
    dual_coring,
    grouplike_search,
    hat_anti_iso,
    idempotent_ideal_coring,
    left_dual_hom,
    subcoring,
    sweedler_coring,
    trivial_coring,
    verify_grouplike,
)
from coring_lab.field import Field, TooLargeToEnumerate
from coring_lab.fixtures import build
from coring_lab.modules import Bimodule, DualModule, dual_basis, right_generators
from helpers import all_vectors, gf4, random_projective_bimodule, right_regular

# grouplike counts found by enumerating every vector of the coring
GROUPLIKES_BY_ENUMERATION = {"FIX-SW": 3, "FIX-XPROD": 4, "FIX-NONGALOIS": 2, "FIX-TWOBLOCK": 1, "FIX-DUALNUM": 1}


def _grouplikes_by_enumeration(c):
    F = c.field
    return [
        g
        for g in all_vectors(F, c.dim)
        if F.equal(c.comultiply(g), c.square.pure(g, g)) and F.equal(c.counit(g), c.base.unit)
    ]


def _unit_hom(F, B):
    return AlgebraHom(Algebra.ground(F), B, B.unit[:, None])


def test_trivial_coring_passes():
    for A in (gf4(), Algebra.upper_triangular(Field.gf(3), 2), Algebra.ground(Field.rationals())):
        c = trivial_coring(A)
        assert check_coring(c).ok
        assert verify_grouplike(c, A.unit)


def test_comatrix_triv():
    cm = ComatrixCoring(build("FIX-TRIV").bimodules["Sigma"])
    assert cm.dim == 1
    assert check_coring(cm).ok
    F = cm.field
    assert F.equal(cm.eps, F.eye(1))
    assert F.equal(cm.delta, F.eye(1)) or cm.square.dim == 1


def test_comatrix_gf4_counit_is_evaluation():
    sigma = build("FIX-GF4").bimodules["Sigma"]
    cm = ComatrixCoring(sigma)
    F = cm.field
    assert cm.dim == 4
    assert check_coring(cm).ok
    for s in range(cm.dual.dim):
        for u in range(sigma.dim):
            phi = cm.dual.basis(s)
            assert F.equal(cm.counit(cm.pure(phi, sigma.basis(u))), cm.dual.evaluate(phi, sigma.basis(u)))


def test_comatrix_of_regular_is_trivial():
    A = gf4()
    cm = ComatrixCoring(Bimodule.regular(A))
    assert cm.dim == A.dim
    assert check_coring(cm).ok


def test_comatrix_random_bimodules():
    rng = np.random.default_rng(31)
    for s in range(12):
        F = Field.gf([2, 3, 5][s % 3])
        cm = ComatrixCoring(random_projective_bimodule(F, rng))
        assert check_coring(cm).ok


def test_comatrix_delta_independent_of_dual_basis():
    rng = np.random.default_rng(12)
    differing = 0
    for s in range(12):
        F = Field.gf([2, 3, 5][s % 3])
        sigma = random_projective_bimodule(F, rng)
        dual = DualModule(sigma)
        first = dual_basis(sigma, dual)  # generated by the k-basis
        for _ in range(50):  # over GF(2) in dimension 1 the identity is the only choice
            basis_change = F.random((sigma.dim, sigma.dim), rng, bound=F.p)
            if F.is_invertible(basis_change) and not F.equal(basis_change, F.eye(sigma.dim)):
                break
        second = dual_basis(sigma, dual, generators=np.concatenate([right_generators(sigma, seed=7), basis_change], axis=1))
        assert second.check().ok
        same_pairs = first.size == second.size and F.equal(first.elements, second.elements) and F.equal(first.functionals, second.functionals)
        differing += not same_pairs
        a = ComatrixCoring(sigma, first)
        b = ComatrixCoring(sigma, second)
        assert F.equal(a.delta, b.delta)
        assert F.equal(a.eps, b.eps)
    assert differing >= 9  # observed for this seed; the remaining bimodules are too small to differ


def test_sweedler_fixture():
    fx = build("FIX-SW")
    c = fx.corings["C"]
    F = c.field
    A = c.base
    assert c.dim == 4
    assert check_coring(c).ok
    assert c.comparison.check().ok and c.comparison.is_bijective()
    for i in range(A.dim):
        for j in range(A.dim):
            assert F.equal(c.counit(c.bimodule.pure(A.basis(i), A.basis(j))), A.mul(A.basis(i), A.basis(j)))
    assert verify_grouplike(c, c.bimodule.pure(A.unit, A.unit))


def test_sweedler_over_identity_is_trivial():
    A = Algebra.upper_triangular(Field.gf(2), 2)
    c = sweedler_coring(AlgebraHom.identity(A))
    assert c.dim == A.dim
    assert check_coring(c).ok


def test_dual_coring_examples():
    F = Field.gf(3)
    M = Algebra.matrix_algebra(F, 2)
    c = dual_coring(_unit_hom(F, M))
    assert c.dim == 4
    assert check_coring(c).ok
    xprod = build("FIX-XPROD").corings["Rstar"]
    assert xprod.dim == 4 and xprod.base.dim == 2
    assert check_coring(xprod).ok
    A = gf4()
    same = dual_coring(AlgebraHom.identity(A))
    assert same.dim == A.dim and check_coring(same).ok


def test_grouplike_search_matches_enumeration():
    for name, count in GROUPLIKES_BY_ENUMERATION.items():
        c = build(name).role("coring", "corings")
        found = grouplike_search(c)
        brute = _grouplikes_by_enumeration(c)
        assert len(found) == len(brute) == count
        for g in found:
            assert any(c.field.equal(g, b) for b in brute)


def test_named_grouplikes():
    fx = build("FIX-XPROD")
    cname, g = fx.grouplikes["trace"]
    assert verify_grouplike(fx.corings[cname], g)
    F = Field.gf(2)
    matrix_coalgebra = dual_coring(_unit_hom(F, Algebra.matrix_algebra(F, 2)))
    assert grouplike_search(matrix_coalgebra) == []


def test_grouplike_search_needs_finite_field():
    with pytest.raises(TooLargeToEnumerate):
        grouplike_search(trivial_coring(Algebra.ground(Field.rationals())))


def test_convolution_dimensions():
    A = gf4()
    conv = convolution_algebra(trivial_coring(A), "left")
    assert conv.algebra.dim == A.dim and conv.algebra.is_commutative()
    sw = build("FIX-SW").corings["C"]
    for side in ("left", "right"):
        conv = convolution_algebra(sw, side)
        assert conv.algebra.dim == 4
        assert check_algebra(conv.algebra).ok


def test_matrix_coalgebra_dual_is_matrix_algebra():
    F = Field.gf(3)
    c = dual_coring(_unit_hom(F, Algebra.matrix_algebra(F, 2)))
    conv = convolution_algebra(c, "left").algebra
    assert conv.dim == 4
    assert check_algebra(conv).ok
    assert not conv.is_commutative()
    assert jacobson_radical(conv).shape[0] == 0
    assert conv.center().shape[0] == 1


def test_hat_anti_iso_fixtures():
    for name in ("FIX-TRIV", "FIX-GF4"):
        cm = ComatrixCoring(build(name).bimodules["Sigma"])
        rep = check_hat_anti_iso(cm)
        assert rep.ok, rep.first_failure()
        assert rep.facts["dim_left_dual"] == cm.dim
    cm = ComatrixCoring(build("FIX-TRIV").bimodules["Sigma"])
    conv, hats = hat_anti_iso(cm)
    assert cm.field.equal(hats[0], cm.field.eye(1))


def test_right_dual_anti_iso():
    cm = ComatrixCoring(build("FIX-GF4").bimodules["Sigma"])
    assert check_right_dual_anti_iso(cm).ok


def test_left_dual_hom_functoriality():
    sw = build("FIX-SW").corings["C"]
    F = sw.field
    f = sw.comparison  # comatrix -> Sweedler
    g = CoringHom(sw, f.source, F.inverse(f.matrix))
    assert g.check().ok
    ident = CoringHom(sw, sw, F.eye(sw.dim))
    hom_id, _, _ = left_dual_hom(ident)
    assert F.equal(hom_id.matrix, F.eye(sw.dim))
    hom_f, tgt_f, src_f = left_dual_hom(f)
    hom_g, _, _ = left_dual_hom(g, source_conv=tgt_f, target_conv=src_f)
    hom_gf, _, _ = left_dual_hom(g.compose(f), source_conv=src_f, target_conv=src_f)
    assert hom_f.check().ok and hom_g.check().ok
    assert F.equal(hom_gf.matrix, F.mm(hom_f.matrix, hom_g.matrix))


def test_mutated_coring_rejected_with_witness():
    c = build("MUT-CORING").corings["C_bad"]
    rep = check_coring(c)
    assert not rep.ok
    bad = rep.first_failure()
    assert bad.witness is not None and "basis" in bad.witness


def test_mutated_coring_hom_rejected_with_witness():
    fx = build("MUT-CORING-HOM")
    rep = fx.coring_homs["mult_x"].check()
    assert not rep.ok
    assert rep.first_failure().witness is not None


def test_idempotent_ideal_coring_and_subcoring():
    fx = build("FIX-NONFLAT")
    I = fx.corings["I"]
    assert I.dim == 3
    assert check_coring(I).ok
    two = build("FIX-TWOBLOCK").corings["C"]
    F = two.field
    sub = subcoring(two, F.array([[1], [0]]))
    assert sub.dim == 1 and check_coring(sub).ok
    A = fx.algebras["A"]
    with pytest.raises(ValueError):
        idempotent_ideal_coring(A, A.basis(1))


def test_multiplicativity_check_finds_wrong_order():
    from coring_lab.coring import _first_bad_pair

    M = Algebra.matrix_algebra(Field.gf(3), 2)
    F = M.field
    assert _first_bad_pair(F, M, M.left_regular, reverse=False) is None
    assert _first_bad_pair(F, M, M.left_regular, reverse=True) is not None
    assert _first_bad_pair(F, M, M.right_regular, reverse=True) is None
