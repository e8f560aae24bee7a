import numpy as np

from coring_lab.algebra import Algebra
from coring_lab.comodule import (
    LeftComodule,
    RightComodule,
    canonical_comatrix_comodule,
    canonical_left_comodule,
    canonical_map,
    check_comodule,
    check_left_comodule,
    coinvariants,
    colinear_homs,
    cotensor,
    descent_verify,
    endo_rings,
    generator_report,
    grouplike_can_value,
    induce_along,
    is_colinear,
    is_galois,
    is_left_linear,
    kanzaki_composite,
    regular_comodule,
    tensor_comodule,
    trivial_comodule,
)
from coring_lab.coring import ComatrixCoring, CoringHom, trivial_coring
from coring_lab.field import Field
from coring_lab.fixtures import build
from coring_lab.modules import Bimodule, DualModule, direct_sum, hom_over
from helpers import gf4, ring_automorphisms_by_enumeration

# field automorphisms of GF(9) = GF(3)[x]/(x^2+1), found by enumerating all 81 GF(3)-linear maps
AUTOMORPHISMS_OF_GF9 = 2


def test_trivial_and_canonical_comodules_pass():
    A = gf4()
    c = trivial_coring(A)
    assert check_comodule(regular_comodule(c)).ok
    for name in ("FIX-TRIV", "FIX-GF4"):
        cm = ComatrixCoring(build(name).bimodules["Sigma"])
        m = canonical_comatrix_comodule(cm)
        assert check_comodule(m).ok
        assert is_left_linear(m)
        assert check_left_comodule(canonical_left_comodule(cm)).ok


def test_corrupted_coaction_rejected():
    m = build("MUT-COMODULE").comodules["A_bad"]
    rep = check_comodule(m)
    assert not rep.ok
    assert rep.first_failure().witness is not None


def test_colinear_endomorphisms_of_coring_match_dual():
    for name in ("FIX-SW", "FIX-XPROD", "FIX-MAT", "FIX-NONFLAT"):
        c = build(name).role("coring", "corings")
        reg = regular_comodule(c)
        assert colinear_homs(reg, reg).shape[0] == DualModule(c.bimodule).dim


def test_colinear_over_trivial_coring_is_hom_over_base():
    fx = build("FIX-MAT")
    m = fx.comodules["S_C"]
    S = m.module
    assert colinear_homs(m, m).shape[0] == hom_over(S.as_right(), S.as_right()).shape[0] == 1
    A = gf4()
    c = trivial_coring(A)
    two = direct_sum(Bimodule.regular(A).as_right(), Bimodule.regular(A).as_right())
    t = trivial_comodule(c, two)
    assert colinear_homs(t, t).shape[0] == hom_over(two, two).shape[0] == 8


def test_sweedler_coinvariants():
    fx = build("FIX-SW")
    m = fx.comodules["A_g"]
    _, g = fx.grouplikes["g"]
    ends = colinear_homs(m, m)
    assert ends.shape[0] == 1
    assert coinvariants(m, g).shape[0] == 1
    assert is_colinear(m, m, ends[0])
    assert not is_colinear(m, m, m.module.ract[1])  # multiplication by x is not colinear


def test_endo_rings():
    fx = build("FIX-SW")
    endo = endo_rings(fx.comodules["A_g"])
    assert endo.S.dim == 2 and endo.T.dim == 1
    assert endo.report.ok
    xprod = endo_rings(build("FIX-XPROD").comodules["A_g"])
    assert xprod.T.dim == 1
    A = gf4()
    triv = endo_rings(regular_comodule(trivial_coring(A)))
    assert triv.T.dim == triv.S.dim == A.dim


def test_endo_rings_tensor_description():
    cm = ComatrixCoring(build("FIX-GF4").bimodules["Sigma"])
    endo = endo_rings(canonical_comatrix_comodule(cm), describe_via_tensor=True)
    assert endo.report.ok
    assert any(c.name == "T-equals-tensor-description" for c in endo.report.checks)


def test_can_sends_one_tensor_one_to_grouplike():
    for name, gname in (("FIX-SW", "g"), ("FIX-XPROD", "trace")):
        fx = build(name)
        _, g = fx.grouplikes[gname]
        can = canonical_map(fx.comodules["A_g"])
        assert can.report.ok
        assert fx.field.equal(grouplike_can_value(can), g)


def test_can_ranks_and_galois():
    triv = canonical_map(build("FIX-TRIV").comodules["Sigma_C"])
    assert triv.rank == 1 and triv.is_bijective()
    xprod = canonical_map(build("FIX-XPROD").comodules["A_g"])
    assert xprod.rank == 4 and xprod.comatrix.dim == 4
    assert is_galois(build("FIX-SW").comodules["A_g"])
    assert is_galois(build("FIX-XPROD").comodules["A_g"])
    nongalois = build("FIX-NONGALOIS").comodules["k_g"]
    assert not is_galois(nongalois)
    assert canonical_map(nongalois).rank == 1


def test_kanzaki_composite_against_galois_group():
    fx = build("FIX-XPROD")
    F = fx.field
    A = fx.algebras["A"]
    auts = ring_automorphisms_by_enumeration(A)
    assert len(auts) == AUTOMORPHISMS_OF_GF9
    can = canonical_map(fx.comodules["A_g"])
    images = kanzaki_composite(can, fx.corings["Rstar"])
    flat = images.reshape(images.shape[0], -1)
    assert F.rank(flat) == 4
    # classical Galois theory: End_T(A) is spanned by the maps u -> a sigma(u)
    classical = np.stack([F.mm(A.left_mat(A.basis(i)), g).reshape(-1) for g in auts for i in range(A.dim)])
    assert F.rank(classical) == 4
    assert F.same_span(flat.T, classical.T)


def test_induce_along_identity_and_can():
    fx = build("FIX-SW")
    m = fx.comodules["A_g"]
    F = m.field
    ident = CoringHom(m.coring, m.coring, F.eye(m.coring.dim))
    same = induce_along(ident, m)
    assert F.equal(same.rho, m.rho)
    can = canonical_map(m)
    induced = induce_along(can.hom, canonical_comatrix_comodule(can.comatrix))
    assert check_comodule(induced).ok
    assert F.equal(induced.rho, m.rho)


def test_tensor_induction_commutes_with_can():
    fx = build("FIX-SW")
    m = fx.comodules["A_g"]
    F = m.field
    can = canonical_map(m)
    sigma_T = can.endo.sigma_T
    over_comatrix = canonical_comatrix_comodule(can.comatrix)
    over_c = RightComodule(m.coring, sigma_T, m.rho, target=m.target)
    T = sigma_T.left_alg
    reg = Bimodule.regular(T).as_right()
    for X in (reg, direct_sum(reg, reg)):
        lhs = induce_along(can.hom, tensor_comodule(X, over_comatrix))
        rhs = tensor_comodule(X, over_c)
        assert check_comodule(rhs).ok
        assert F.equal(lhs.rho, rhs.rho)


def test_cotensor_with_coring_recovers_module():
    cm = ComatrixCoring(build("FIX-SW").bimodules["Sigma"])
    left = canonical_left_comodule(cm)
    assert cotensor(regular_comodule(cm), left).dim == cm.dual.dim == 2
    sigma = canonical_comatrix_comodule(cm)
    reg_left = LeftComodule(cm, cm.bimodule, cm.delta, target=cm.square)
    assert check_left_comodule(reg_left).ok
    assert cotensor(sigma, reg_left).dim == sigma.dim


def test_descent_sweedler_and_trivial():
    fx = build("FIX-SW")
    sigma = fx.bimodules["Sigma"]
    rep = descent_verify(sigma, test_modules=[fx.bimodules["B"], fx.bimodules["B2"]])
    assert rep.ok, rep.first_failure()
    assert rep.facts["dim_T"] == rep.facts["dim_B"] == 1
    triv = build("FIX-TRIV")
    assert descent_verify(triv.bimodules["Sigma"]).ok


def test_descent_fails_for_proper_trace_ideal():
    """B = k x k acting on A through the first factor: (a) and (b) fail."""
    A = gf4()
    F = A.field
    B = Algebra.product(Algebra.ground(F), Algebra.ground(F))
    lact = np.stack([F.eye(2), F.zeros((2, 2))])
    sigma = Bimodule(B, A, lact, A.right_regular, name="Sigma")
    rep = descent_verify(sigma)
    verdicts = {c.name: c.ok for c in rep.checks}
    assert not verdicts["(a) _B Sigma faithfully flat"]
    assert not verdicts["(b) lambda: B -> T bijective"]
    assert not rep.ok


def test_generator_report_patterns():
    sw = generator_report(build("FIX-SW").comodules["A_g"])
    assert sw.ok and sw.facts["(iii)"] and sw.facts["(iv)"]
    mat = generator_report(build("FIX-MAT").comodules["S_C"])
    assert mat.ok and mat.facts["(iii)"] and mat.facts["(iv)"]
    nonflat = generator_report(build("FIX-NONFLAT").comodules["I_I"])
    assert nonflat.facts["can iso"] and nonflat.facts["T = S"]
    assert not nonflat.facts["_A C flat"]
    assert nonflat.facts["flatness remark pattern"]
