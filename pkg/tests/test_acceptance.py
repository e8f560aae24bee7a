"""Acceptance criteria, exact arithmetic, zero tolerance.

Each test times its own computation (imports and interpreter start-up are
excluded), prints one PASS/FAIL line and then asserts both the verdict and the
runtime budget.
"""

import time

import numpy as np

from coring_lab.algebra import check_algebra
from coring_lab.coend import build_adjunction, coend_coring, f_equals_can
from coring_lab.comodule import canonical_map, check_comodule, coinvariants, descent_verify, endo_rings, kanzaki_composite
from coring_lab.coring import ComatrixCoring, check_coring, check_hat_anti_iso, comatrix_delta, verify_grouplike
from coring_lab.cosemisimple import decompose, is_cosemisimple
from coring_lab.field import Field
from coring_lab.fixtures import build
from coring_lab.modules import DualModule, dual_basis, is_flat_fd, right_generators
from helpers import random_projective_bimodule, ring_automorphisms_by_enumeration, tensor_dim_by_bilinear_relations


def _verdict(capsys, number, title, failures, elapsed, budget):
    ok = not failures and elapsed < budget
    line = f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'} in {elapsed:.2f} s (budget {budget} s)"
    if failures:
        line += " | " + "; ".join(failures[:5])
    with capsys.disabled():
        print("\n" + line)
    assert not failures, failures
    assert elapsed < budget, f"took {elapsed:.2f} s, budget {budget} s"


def _second_generating_set(F, sigma, rng):
    """Seeded greedy generators plus a random k-basis: never the plain k-basis."""
    for _ in range(50):
        change = F.random((sigma.dim, sigma.dim), rng, bound=F.p)
        if F.is_invertible(change):
            break
    return np.concatenate([right_generators(sigma, seed=7), change], axis=1)


def test_criterion_1_comatrix_axioms_on_random_bimodules(capsys):
    failures = []
    start = time.perf_counter()
    for seed in range(50):
        F = Field.gf([2, 3, 5][seed % 3])
        rng = np.random.default_rng(seed)
        sigma = random_projective_bimodule(F, rng)
        if sigma.right_alg.dim > 4 or sigma.dim > 6:
            failures.append(f"seed {seed}: fixture out of range")
        cm = ComatrixCoring(sigma)
        rep = check_coring(cm)
        if not rep.ok:
            failures.append(f"seed {seed}: {rep.first_failure().name}")
            continue
        other = dual_basis(sigma, cm.dual, generators=_second_generating_set(F, sigma, rng))
        if not other.check().ok:
            failures.append(f"seed {seed}: second dual basis invalid")
        elif not F.equal(comatrix_delta(cm.tensor, cm.square, other), cm.delta):
            failures.append(f"seed {seed}: Delta depends on the dual basis")
    elapsed = time.perf_counter() - start
    _verdict(capsys, 1, "comatrix coring axioms, 50 seeds", failures, elapsed, 10)


def test_criterion_2_hat_anti_isomorphism(capsys):
    failures = []
    start = time.perf_counter()
    sigmas = [("FIX-GF4", build("FIX-GF4").bimodules["Sigma"])]
    for k in range(20):
        F = Field.gf([2, 3, 5][k % 3])
        sigmas.append((f"random {k}", random_projective_bimodule(F, np.random.default_rng(1000 + k))))
    for label, sigma in sigmas:
        rep = check_hat_anti_iso(ComatrixCoring(sigma))
        for name in ("bijective", "anti-multiplicative", "eps-to-identity"):
            if not any(c.name == name and c.ok for c in rep.checks):
                failures.append(f"{label}: {name}")
    elapsed = time.perf_counter() - start
    _verdict(capsys, 2, "hat anti-isomorphism", failures, elapsed, 5)


def test_criterion_3_sweedler_galois_descent(capsys):
    failures = []
    start = time.perf_counter()
    fx = build("FIX-SW")
    cor = fx.corings["C"]
    left_factor, sigma = cor.bimodule.M, cor.bimodule.N
    if not (cor.dim == 4 == tensor_dim_by_bilinear_relations(left_factor, sigma)):
        failures.append("dim A (x)_B A differs from the bilinear-relation count 4")
    m = fx.comodules["A_g"]
    can = canonical_map(m)
    if can.endo.T.dim != 1:
        failures.append(f"dim T = {can.endo.T.dim}")
    if not (can.report.ok and can.is_bijective()):
        failures.append("can not bijective")
    rep = descent_verify(fx.bimodules["Sigma"], test_modules=[fx.bimodules["B"], fx.bimodules["B2"]])
    failures += [f"descent {c.name}" for c in rep.checks if not c.ok]
    for part in ("(a)", "(b)", "(c)", "(d) unit", "(d) counit"):
        if not any(c.name.startswith(part) for c in rep.checks):
            failures.append(f"descent {part} missing")
    elapsed = time.perf_counter() - start
    _verdict(capsys, 3, "Sweedler coring, Galois and descent", failures, elapsed, 2)


def test_criterion_4_crossed_product(capsys):
    failures = []
    start = time.perf_counter()
    fx = build("FIX-XPROD")
    F = fx.field
    cor = fx.corings["Rstar"]
    _, g = fx.grouplikes["trace"]
    if not verify_grouplike(cor, g):
        failures.append("trace map is not grouplike")
    m = fx.comodules["A_g"]
    if coinvariants(m, g).shape[0] != 1:
        failures.append("coinvariants are not GF(3)")
    can = canonical_map(m)
    if not (can.report.ok and can.is_bijective() and can.rank == 4):
        failures.append(f"can rank {can.rank}")
    images = kanzaki_composite(can, cor)
    flat = images.reshape(images.shape[0], -1)
    A = fx.algebras["A"]
    auts = ring_automorphisms_by_enumeration(A)
    classical = np.stack([F.mm(A.left_mat(A.basis(i)), a).reshape(-1) for a in auts for i in range(A.dim)])
    if len(auts) != 2:
        failures.append(f"{len(auts)} automorphisms of GF(9) found by enumeration")
    if F.rank(flat) != 4:
        failures.append("R -> End(_T A) not bijective")
    if not F.same_span(flat.T, classical.T):
        failures.append("image differs from span of a.sigma")
    elapsed = time.perf_counter() - start
    _verdict(capsys, 4, "crossed product GF(9)/GF(3)", failures, elapsed, 2)


def test_criterion_5_nonflat_counterexample(capsys):
    failures = []
    start = time.perf_counter()
    fx = build("FIX-NONFLAT")
    cor = fx.corings["I"]
    if not check_coring(cor).ok:
        failures.append("check_coring fails on I = eA")
    endo = endo_rings(fx.comodules["I_I"])
    if not (endo.T.dim == endo.S.dim == 2):
        failures.append(f"dim T = {endo.T.dim}, dim S = {endo.S.dim}")
    can = canonical_map(fx.comodules["I_I"], endo)
    if not can.is_bijective():
        failures.append("can not bijective")
    if is_flat_fd(cor.bimodule, "left"):
        failures.append("_A I reported flat")
    elapsed = time.perf_counter() - start
    _verdict(capsys, 5, "non-flat counterexample", failures, elapsed, 2)


def test_criterion_6_cosemisimple_structure(capsys):
    failures = []
    start = time.perf_counter()
    mat = build("FIX-MAT").corings["C"]
    if not is_cosemisimple(mat):
        failures.append("M2(GF(3)) trivial coring not cosemisimple")
    reference = decompose(mat, seed=0)
    blocks = reference.blocks
    if len(blocks) != 1:
        failures.append(f"{len(blocks)} blocks")
    else:
        b = blocks[0]
        if b.sigma.dim != 2:
            failures.append(f"dim Sigma = {b.sigma.dim}")
        if not (b.division is True and b.division_algebra.dim == 1):
            failures.append("D is not GF(3)")
        if b.can is None or b.can.comatrix.dim != 4 or not b.can.is_bijective():
            failures.append("block can")
    if is_cosemisimple(build("FIX-DUALNUM").corings["C"]):
        failures.append("dual numbers reported cosemisimple")
    F = mat.field
    for seed in range(10):
        res = decompose(mat, seed=seed)
        same = len(res.blocks) == len(blocks) and all(
            F.equal(x.embedding, y.embedding) and x.sigma.dim == y.sigma.dim for x, y in zip(res.blocks, blocks)
        )
        if not same:
            failures.append(f"seed {seed}: blocks differ")
    elapsed = time.perf_counter() - start
    _verdict(capsys, 6, "cosemisimple decomposition", failures, elapsed, 5)


def test_criterion_7_coend_crosscheck(capsys):
    failures = []
    start = time.perf_counter()
    for name in ("FIX-TRIV", "FIX-GF4", "FIX-SW"):
        sigma = build(name).bimodules["Sigma"]
        adj = build_adjunction(sigma)
        failures += [f"{name}: {c.name}" for c in adj.report.checks if not c.ok]
        if not coend_coring(sigma, adjunction=adj).matches_comatrix():
            failures.append(f"{name}: coend Delta/eps differ from comatrix")
    for name in ("FIX-SW", "FIX-XPROD"):
        if not f_equals_can(build(name).comodules["A_g"]):
            failures.append(f"{name}: f != can")
    elapsed = time.perf_counter() - start
    _verdict(capsys, 7, "coend cross-check", failures, elapsed, 3)


def test_criterion_8_mutations_rejected(capsys):
    failures = []
    start = time.perf_counter()
    results = {
        "algebra": check_algebra(build("MUT-ALGEBRA").algebras["Z"]),
        "coring": check_coring(build("MUT-CORING").corings["C_bad"]).first_failure(),
        "comodule": check_comodule(build("MUT-COMODULE").comodules["A_bad"]).first_failure(),
        "coring-hom": build("MUT-CORING-HOM").coring_homs["mult_x"].check().first_failure(),
    }
    for name, res in results.items():
        if res is None or res.ok:
            failures.append(f"{name}: accepted")
        elif res.witness is None:
            failures.append(f"{name}: no witness")
    elapsed = time.perf_counter() - start
    _verdict(capsys, 8, "mutation suite", failures, elapsed, 2)
