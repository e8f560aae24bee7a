import numpy as np

from coring_lab.coend import build_adjunction, coend_coring, f_equals_can, f_equals_can_report, left_coaction_on_dual
from coring_lab.comodule import canonical_map, check_left_comodule
from coring_lab.coring import check_coring
from coring_lab.field import Field
from coring_lab.fixtures import build
from helpers import random_projective_bimodule

FIXTURES_WITH_SIGMA = ("FIX-TRIV", "FIX-GF4", "FIX-SW")


def test_adjunction_triangle_identities():
    for name in FIXTURES_WITH_SIGMA:
        adj = build_adjunction(build(name).bimodules["Sigma"])
        assert adj.report.ok, (name, adj.report.first_failure())


def test_coend_matches_comatrix_exactly():
    for name in FIXTURES_WITH_SIGMA:
        ce = coend_coring(build(name).bimodules["Sigma"])
        assert ce.matches_comatrix(), name
        assert check_coring(ce.coring).ok


def test_coend_on_random_bimodules():
    rng = np.random.default_rng(17)
    for s in range(6):
        F = Field.gf([2, 3, 5][s % 3])
        ce = coend_coring(random_projective_bimodule(F, rng, max_dim=4))
        assert ce.adjunction.report.ok
        assert ce.matches_comatrix()


def test_dual_is_left_comodule():
    m = build("FIX-SW").comodules["A_g"]
    can = canonical_map(m)
    left = left_coaction_on_dual(m, can.comatrix)
    assert check_left_comodule(left).ok


def test_f_equals_can():
    assert f_equals_can(build("FIX-TRIV").comodules["Sigma_C"])
    assert f_equals_can(build("FIX-SW").comodules["A_g"])
    rep = f_equals_can_report(build("FIX-XPROD").comodules["A_g"])
    assert rep.ok
    assert rep.facts["rank"] == 4
    assert f_equals_can(build("FIX-NONGALOIS").comodules["k_g"])
