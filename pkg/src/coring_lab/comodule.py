"""Comodules, colinear maps, the canonical map and descent checks.

A right comodule is a right A-module M (stored as a Bimodule whose left
algebra may carry extra structure such as a B-action) with a coaction
rho: M -> M (x)_A C given as a (dim M(x)C, dim M) matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import Algebra, AlgebraHom, SubalgebraPresentation, jacobson_radical
from .coring import ComatrixCoring, Coring, CoringHom, convolution_algebra, hat_anti_iso, left_dual_hom
from .field import NoSolution
from .modules import (
    Bimodule,
    DualModule,
    NotProjective,
    TensorProduct,
    direct_sum,
    dual_basis,
    hom_over,
    is_faithfully_flat_fgp,
    is_flat_fd,
    is_projective,
)
from .report import Report, first_nonzero


def _first_bad_column(F, lhs, rhs):
    idx = first_nonzero(F.reduce(np.asarray(lhs) - np.asarray(rhs)))
    return None if idx is None else idx[1]


class RightComodule:
    def __init__(self, coring: Coring, module: Bimodule, rho, target: TensorProduct | None = None, name: str = ""):
        self.coring = coring
        self.module = module
        self.field = coring.field
        self.rho = np.asarray(rho)
        self.name = name or module.name
        if target is not None:
            self.__dict__["target"] = target

    @property
    def dim(self) -> int:
        return self.module.dim

    @cached_property
    def target(self) -> TensorProduct:
        """M (x)_A C."""
        return TensorProduct(self.module, self.coring.bimodule)

    @cached_property
    def double(self) -> TensorProduct:
        """(M (x)_A C) (x)_A C."""
        return TensorProduct(self.target, self.coring.bimodule)

    def with_rho(self, rho) -> "RightComodule":
        return RightComodule(self.coring, self.module, rho, target=self.target, name=self.name)


class LeftComodule:
    def __init__(self, coring: Coring, module: Bimodule, lam, target: TensorProduct | None = None, name: str = ""):
        self.coring = coring
        self.module = module
        self.field = coring.field
        self.lam = np.asarray(lam)
        self.name = name or module.name
        if target is not None:
            self.__dict__["target"] = target

    @property
    def dim(self) -> int:
        return self.module.dim

    @cached_property
    def target(self) -> TensorProduct:
        """C (x)_A N."""
        return TensorProduct(self.coring.bimodule, self.module)


def check_comodule(m: RightComodule) -> Report:
    F = m.field
    c = m.coring
    rep = Report(f"right comodule {m.name}")
    res = m.module.check()
    rep.add("module", res.ok, res.message, res.witness)
    if not res:
        return rep
    MC = m.target
    if m.rho.shape != (MC.dim, m.dim):
        rep.add("shape", False, "coaction has the wrong shape")
        return rep
    bad = None
    for j in range(c.base.dim):
        col = _first_bad_column(F, F.mm(m.rho, m.module.ract[j]), F.mm(MC.ract[j], m.rho))
        if col is not None:
            bad = (j, col)
            break
    rep.add("A-linear", bad is None, "" if bad is None else f"rho(m{bad[1]} b{bad[0]}) != rho(m{bad[1]}) b{bad[0]}", None if bad is None else {"algebra_basis": bad[0], "basis": bad[1]})
    col = _first_bad_column(F, F.mm(MC.contract_right(c.eps), m.rho), F.eye(m.dim))
    rep.add("counit", col is None, "" if col is None else f"(M (x) eps) rho(m{col}) != m{col}", None if col is None else {"basis": col})
    if not all(ch.ok for ch in rep.checks):
        return rep
    lhs = MC.induced(m.rho, F.eye(c.dim), m.double, vecs=m.rho)
    rhs = MC.apply_right_factor(c.delta, c.square, m.double, vecs=m.rho)
    col = _first_bad_column(F, lhs, rhs)
    rep.add("coassociativity", col is None, "" if col is None else f"(rho (x) C) rho(m{col}) != (M (x) Delta) rho(m{col})", None if col is None else {"basis": col})
    return rep


def check_left_comodule(n: LeftComodule) -> Report:
    F = n.field
    c = n.coring
    rep = Report(f"left comodule {n.name}")
    res = n.module.check()
    rep.add("module", res.ok, res.message, res.witness)
    if not res:
        return rep
    CN = n.target
    bad = None
    for j in range(c.base.dim):
        col = _first_bad_column(F, F.mm(n.lam, n.module.lact[j]), F.mm(CN.lact[j], n.lam))
        if col is not None:
            bad = (j, col)
            break
    rep.add("A-linear", bad is None, "" if bad is None else f"lambda(b{bad[0]} n{bad[1]}) mismatch", None if bad is None else {"algebra_basis": bad[0], "basis": bad[1]})
    col = _first_bad_column(F, F.mm(CN.contract_left(c.eps), n.lam), F.eye(n.dim))
    rep.add("counit", col is None, "" if col is None else f"(eps (x) N) lambda(n{col}) != n{col}", None if col is None else {"basis": col})
    if not all(ch.ok for ch in rep.checks):
        return rep
    T3 = TensorProduct(c.square, n.module)
    lhs = CN.induced(c.delta, F.eye(n.dim), T3, vecs=n.lam)
    rhs = CN.apply_right_factor(n.lam, CN, T3, vecs=n.lam)
    col = _first_bad_column(F, lhs, rhs)
    rep.add("coassociativity", col is None, "" if col is None else f"coassociativity fails at n{col}", None if col is None else {"basis": col})
    return rep


def is_left_linear(m: RightComodule) -> bool:
    """Whether the coaction commutes with the extra left action on M."""
    F = m.field
    return all(F.equal(F.mm(m.rho, m.module.lact[i]), F.mm(m.target.lact[i], m.rho)) for i in range(m.module.left_alg.dim))


# -- constructors ---------------------------------------------------------------------


def regular_comodule(c: Coring) -> RightComodule:
    """C as a right comodule over itself, with coaction Delta."""
    return RightComodule(c, c.bimodule, c.delta, target=c.square, name=c.name)


def trivial_comodule(c: Coring, module: Bimodule) -> RightComodule:
    """A right module over the trivial coring A: rho(m) = m (x) 1."""
    MC = TensorProduct(module, c.bimodule)
    rho = np.stack([MC.pure(module.basis(i), c.base.unit) for i in range(module.dim)], axis=1)
    return RightComodule(c, module, rho, target=MC)


def canonical_comatrix_comodule(cm: ComatrixCoring) -> RightComodule:
    """Sigma over Sigma* (x)_B Sigma: rho(u) = sum_i e_i (x) (e_i* (x) u)."""
    F = cm.field
    sigma, db = cm.sigma, cm.dual_basis
    MC = TensorProduct(sigma, cm.bimodule)
    cols = []
    for u in range(sigma.dim):
        total = F.zeros(MC.dim)
        for e, phi in zip(db.elements, db.functionals):
            total = F.reduce(total + MC.pure(e, cm.pure(phi, sigma.basis(u))))
        cols.append(total)
    return RightComodule(cm, sigma, np.stack(cols, axis=1), target=MC, name=sigma.name)


def canonical_left_comodule(cm: ComatrixCoring) -> LeftComodule:
    """Sigma* over Sigma* (x)_B Sigma: lambda(phi) = sum_i (phi (x) e_i) (x) e_i*."""
    F = cm.field
    dual, db = cm.dual, cm.dual_basis
    CN = TensorProduct(cm.bimodule, dual)
    cols = []
    for s in range(dual.dim):
        total = F.zeros(CN.dim)
        for e, phi in zip(db.elements, db.functionals):
            total = F.reduce(total + CN.pure(cm.pure(dual.basis(s), e), phi))
        cols.append(total)
    return LeftComodule(cm, dual, np.stack(cols, axis=1), target=CN, name=f"{dual.name}")


def grouplike_comodule(c: Coring, g) -> RightComodule:
    """A as a right comodule with rho(a) = 1 (x) g.a (through A (x)_A C = C)."""
    A = c.base
    module = Bimodule.regular(A).as_right()
    MC = TensorProduct(module, c.bimodule)
    cols = [MC.pure(A.unit, c.bimodule.act_right(g, A.basis(i))) for i in range(A.dim)]
    return RightComodule(c, module, np.stack(cols, axis=1), target=MC, name="A_g")


def coinvariants(m: RightComodule, g) -> np.ndarray:
    """Basis rows of {a in A : rho(a) = a (x) g} for the grouplike comodule on A."""
    F = m.field
    A = m.coring.base
    cond = np.stack([F.reduce(m.rho[:, i] - m.target.pure(A.basis(i), g)) for i in range(A.dim)], axis=1)
    return F.kernel(cond)


def tensor_comodule(X: Bimodule, m: RightComodule) -> RightComodule:
    """X (x)_B M with coaction X (x) rho, for a left B-linear coaction on M."""
    XM = TensorProduct(X, m.module)
    target = TensorProduct(XM, m.coring.bimodule)
    rho = XM.apply_right_factor(m.rho, m.target, target)
    return RightComodule(m.coring, XM, rho, target=target, name=f"{X.name}(x){m.name}")


def induce_along(f: CoringHom, m: RightComodule) -> RightComodule:
    """The induced comodule with coaction (M (x) f) rho."""
    F = m.field
    MC2 = TensorProduct(m.module, f.target.bimodule)
    rho = m.target.induced(F.eye(m.dim), f.matrix, MC2, vecs=m.rho)
    return RightComodule(f.target, m.module, rho, target=MC2, name=m.name)


# -- colinear maps and endomorphism rings -----------------------------------------------


def colinear_homs(M: RightComodule, N: RightComodule) -> np.ndarray:
    """Basis of Hom^C(M, N) as a stack (h, dim N, dim M)."""
    F = M.field
    base = hom_over(M.module.as_right(), N.module.as_right(), "right")
    if base.shape[0] == 0:
        return base
    cols = []
    for f in base:
        lhs = F.mm(N.rho, f)
        rhs = M.target.induced(f, F.eye(M.coring.dim), N.target, vecs=M.rho)
        cols.append(F.reduce(lhs - rhs).reshape(-1))
    coeffs = F.kernel(np.stack(cols, axis=1))
    if coeffs.shape[0] == 0:
        return F.zeros((0, N.dim, M.dim))
    return F.tensordot(coeffs, base, (1, 0))


def is_colinear(M: RightComodule, N: RightComodule, f) -> bool:
    F = M.field
    return F.equal(F.mm(N.rho, f), M.target.induced(f, F.eye(M.coring.dim), N.target, vecs=M.rho))


@dataclass
class EndoRings:
    """S = End_A(Sigma), T = End^C(Sigma) inside S, and Sigma as a T-A bimodule."""

    comodule: RightComodule
    S: Algebra
    T: SubalgebraPresentation
    sigma_T: Bimodule
    left_map: AlgebraHom | None
    report: Report

    @property
    def T_algebra(self) -> Algebra:
        return self.T.algebra

    def left_map_bijective(self) -> bool:
        return self.left_map is not None and self.left_map.is_bijective()


def endo_rings(m: RightComodule, describe_via_tensor: bool = False) -> EndoRings:
    F = m.field
    sigma = m.module
    A = m.coring.base
    rep = Report("endomorphism rings")
    S = Algebra.from_basis_matrices(F, hom_over(sigma.as_right(), sigma.as_right(), "right"), name="S")
    tmats = colinear_homs(m, m)
    sflat = S.rep.reshape(S.dim, -1).T
    rows = F.solve(sflat, tmats.reshape(tmats.shape[0], -1).T).T if tmats.shape[0] else F.zeros((0, S.dim))
    T = SubalgebraPresentation.build(S, rows, name="T")
    rep.facts["dim_S"] = S.dim
    rep.facts["dim_T"] = T.dim
    rep.add("T-closed", True)
    sigma_T = Bimodule(T.algebra, A, T.algebra.rep, sigma.ract, name=sigma.name)
    rep.add("Sigma-is-T-A-bimodule", sigma_T.check().ok)
    left_map = None
    B = sigma.left_alg
    tflat = T.algebra.rep.reshape(T.dim, -1).T
    try:
        mat = F.solve(tflat, sigma.lact.reshape(B.dim, -1).T)
        left_map = AlgebraHom(B, T.algebra, mat)
        rep.add("B-factors-through-T", left_map.check().ok)
    except NoSolution:
        rep.add("B-factors-through-T", False, "some b acts by a non-colinear map")
    if describe_via_tensor and left_map is not None:
        desc = tensor_description_of_T(sigma, S, left_map)
        rep.add("T-equals-tensor-description", F.same_span(desc.T, T.embedding))
    return EndoRings(m, S, T, sigma_T, left_map, rep)


def tensor_description_of_T(sigma: Bimodule, S: Algebra, left_map: AlgebraHom) -> np.ndarray:
    """Basis rows (S coordinates) of {f in S : f (x)_B x = 1 (x)_B f(x) for all x}."""
    F = sigma.field
    B = sigma.left_alg
    lam_S = F.mm(left_map.target.rep.reshape(left_map.target.dim, -1).T, left_map.matrix)  # vec of lambda(b)
    sflat = S.rep.reshape(S.dim, -1).T
    lam_coords = F.solve(sflat, lam_S)  # (dim S, dim B)
    ract = np.stack([S.right_mat(lam_coords[:, j]) for j in range(B.dim)])
    S_B = Bimodule.right_module(B, ract, name="S")
    SX = TensorProduct(S_B, sigma.as_left())
    cols = []
    for s in range(S.dim):
        col = []
        for k in range(sigma.dim):
            fx = F.mm(S.rep[s], sigma.basis(k))
            col.append(F.reduce(SX.pure(S.basis(s), sigma.basis(k)) - SX.pure(S.unit, fx)))
        cols.append(np.concatenate(col))
    return F.kernel(np.stack(cols, axis=1))


# -- canonical map -----------------------------------------------------------------------


@dataclass
class CanMap:
    hom: CoringHom
    endo: EndoRings
    comatrix: ComatrixCoring
    report: Report

    @property
    def matrix(self) -> np.ndarray:
        return self.hom.matrix

    @property
    def rank(self) -> int:
        return self.hom.source.field.rank(self.hom.matrix) if self.hom.matrix.size else 0

    def is_bijective(self) -> bool:
        return self.hom.is_bijective()


def can_on_comatrix(m: RightComodule, cmT: ComatrixCoring) -> np.ndarray:
    """can(phi (x)_T u) = (phi (x) C) rho(u) = phi(u_0) u_1, as a matrix."""
    F = m.field
    C = cmT.tensor
    G = C.generators
    blocks = []
    for i in range(C.ngens):
        contr = m.target.contract_left(cmT.dual.functional(G[:, i]))  # (dim C, dim M(x)C)
        blocks.append(F.mm(contr, m.rho))  # (dim C, dim Sigma)
    return C.descend(np.concatenate(blocks, axis=1))


def canonical_map(m: RightComodule, endo: EndoRings | None = None) -> CanMap:
    """The coring map Sigma* (x)_T Sigma -> C, verified to be a coring homomorphism."""
    endo = endo if endo is not None else endo_rings(m)
    try:
        cmT = ComatrixCoring(endo.sigma_T, name="Sigma*(x)_T Sigma")
    except NotProjective:
        raise
    mat = can_on_comatrix(m, cmT)
    hom = CoringHom(cmT, m.coring, mat)
    rep = hom.check()
    rep.title = "can"
    rep.facts["rank"] = hom.source.field.rank(mat) if mat.size else 0
    rep.facts["dim_source"] = cmT.dim
    rep.facts["dim_target"] = m.coring.dim
    return CanMap(hom, endo, cmT, rep)


def is_galois(m: RightComodule) -> bool:
    if not is_projective(m.module, "right"):
        raise NotProjective("Sigma_A is not finitely generated projective")
    return canonical_map(m).is_bijective()


def grouplike_can_value(can: CanMap) -> np.ndarray:
    """can(1 (x)_T 1) for Sigma = A (1 seen as the identity functional)."""
    cm = can.comatrix
    A = cm.sigma.right_alg
    one_fun = cm.dual.coords(A.field.eye(A.dim))
    return A.field.mm(can.matrix, cm.pure(one_fun, A.unit))


def kanzaki_composite(can: CanMap, dual_cor: Coring) -> np.ndarray:
    """R -> *(R*) -> *(Sigma* (x)_T Sigma) -> End(_T Sigma) for a dual coring R*.

    Returns a stack (dim R, dim Sigma, dim Sigma): the endomorphism for each basis element of R.
    """
    F = can.hom.source.field
    R = dual_cor.algebra_map.target
    dual = dual_cor.dual
    conv_target = convolution_algebra(dual_cor, "left")
    hom, _, conv_source = left_dual_hom(can.hom, target_conv=conv_target)
    _, hats = hat_anti_iso(can.comatrix, conv_source)
    out = []
    for r in range(R.dim):
        ev = np.stack([F.mm(dual.functionals[s], R.basis(r)) for s in range(dual.dim)], axis=1)
        coords = conv_target.coords(ev)
        pulled = hom(coords)
        out.append(F.tensordot(pulled, hats, (0, 0)))
    return np.stack(out)


# -- cotensor products ---------------------------------------------------------------------


@dataclass
class Cotensor:
    tensor: TensorProduct
    basis: np.ndarray  # columns in tensor coordinates

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def cotensor(M: RightComodule, N: LeftComodule) -> Cotensor:
    """Kernel of rho (x) N - M (x) lambda inside M (x)_A N."""
    F = M.field
    MN = TensorProduct(M.module, N.module)
    T3 = TensorProduct(M.target, N.module)
    lhs = MN.induced(M.rho, F.eye(N.dim), T3)
    rhs = MN.apply_right_factor(N.lam, N.target, T3)
    ker = F.kernel(F.reduce(lhs - rhs))
    return Cotensor(MN, ker.T if ker.shape[0] else F.zeros((MN.dim, 0)))


# -- descent and generator-condition reports ----------------------------------------------------


def default_test_modules(B: Algebra) -> list[Bimodule]:
    """B, B (+) B and the cyclic quotients B / rad^j for the nonzero proper powers."""
    F = B.field
    reg = Bimodule.regular(B)
    right = reg.as_right()
    right.name = "B"
    square = direct_sum(right, right)
    square.name = "B^2"
    mods = [right, square]
    rad = jacobson_radical(B)
    power = rad
    j = 1
    while power.shape[0]:
        quot, _ = right.quotient(power)
        quot.name = f"B/rad^{j}"
        mods.append(quot)
        prods = [B.mul(x, y) for x in power for y in rad]
        power = F.row_basis(np.stack(prods)) if prods else F.zeros((0, B.dim))
        j += 1
    return mods


def unit_is_bijective(X: Bimodule, cm: ComatrixCoring, sigma_comod: RightComodule, left: LeftComodule) -> tuple[bool, dict]:
    """X -> (X (x)_B Sigma) box Sigma*, x -> sum_i (x (x) e_i) (x) e_i*."""
    F = cm.field
    XS = tensor_comodule(X, sigma_comod)
    cot = cotensor(XS, left)
    W = cot.tensor
    db = cm.dual_basis
    cols = []
    for x in range(X.dim):
        total = F.zeros(W.dim)
        for e, phi in zip(db.elements, db.functionals):
            total = F.reduce(total + W.pure(XS.module.pure(X.basis(x), e), phi))
        cols.append(total)
    unit = np.stack(cols, axis=1) if cols else F.zeros((W.dim, 0))
    rank = F.rank(unit) if unit.size else 0
    inside = F.span_contains(cot.basis, unit) if unit.size else True
    ok = inside and rank == X.dim == cot.dim
    return ok, {"dim_X": X.dim, "dim_cotensor": cot.dim, "rank": rank}


def counit_is_bijective(M: RightComodule, cm: ComatrixCoring, left: LeftComodule) -> tuple[bool, dict]:
    """(M box Sigma*) (x)_B Sigma -> M, (m (x) phi) (x) u -> m phi(u)."""
    F = cm.field
    sigma, dual = cm.sigma, cm.dual
    cot = cotensor(M, left)
    MD = cot.tensor
    if cot.dim == 0:
        return M.dim == 0, {"dim_M": M.dim, "dim_cotensor": 0, "rank": 0}
    sub = MD.submodule(cot.basis)
    ST = TensorProduct(sub, sigma)
    psi = np.stack([MD.contract_right(dual.functionals[:, :, k].T) for k in range(sigma.dim)])  # (n, dim M, dim MD)
    amb_gens = F.mm(cot.basis, ST.generators)  # (dim MD, g)
    images = F.tensordot(psi, amb_gens, (2, 0))  # (n, dim M, g)
    counit = F.einsum("kmi,ikq->mq", images, ST.section_blocks)
    rank = F.rank(counit) if counit.size else 0
    ok = rank == M.dim == ST.dim
    return ok, {"dim_M": M.dim, "dim_source": ST.dim, "rank": rank}


def descent_verify(sigma: Bimodule, db=None, test_modules: list[Bimodule] | None = None) -> Report:
    """Finite-instance evidence for generalized descent along _B Sigma_A."""
    F = sigma.field
    B = sigma.left_alg
    rep = Report("descent")
    if db is None:
        db = dual_basis(sigma)
    cm = ComatrixCoring(sigma, db)
    comod = canonical_comatrix_comodule(cm)
    rep.facts["dim_coring"] = cm.dim
    ff = is_faithfully_flat_fgp(sigma, side="left")
    rep.add("(a) _B Sigma faithfully flat", ff)
    endo = endo_rings(comod)
    lam_ok = endo.left_map_bijective()
    rep.facts["dim_T"] = endo.T.dim
    rep.facts["dim_B"] = B.dim
    rep.add("(b) lambda: B -> T bijective", lam_ok)
    can = canonical_map(comod, endo)
    rep.add("(c) can: Sigma*(x)_T Sigma -> Sigma*(x)_B Sigma bijective", can.report.ok and can.is_bijective(), f"rank {can.rank}/{cm.dim}")
    left = canonical_left_comodule(cm)
    mods = test_modules if test_modules is not None else default_test_modules(B)
    for X in mods:
        ok, info = unit_is_bijective(X, cm, comod, left)
        rep.add(f"(d) unit at {X.name or 'X'}", ok, str(info))
    comods = [comod, regular_comodule(cm)] + [tensor_comodule(X, comod) for X in mods]
    for M in comods:
        ok, info = counit_is_bijective(M, cm, left)
        rep.add(f"(d) counit at {M.name or 'M'}", ok, str(info))
    return rep


def left_module_over_subalgebra(S: Algebra, T: SubalgebraPresentation) -> Bimodule:
    """S as a left T-module by multiplication."""
    F = S.field
    lact = np.stack([S.left_mat(T.embedding[:, i]) for i in range(T.dim)])
    return Bimodule.left_module(T.algebra, lact, name="S")


def generator_report(m: RightComodule) -> Report:
    """The conditions of the generator theorem, evaluated at finite dimension."""
    c = m.coring
    rep = Report("generator theorem")
    flat = is_flat_fd(c.bimodule, side="left")
    fgp = is_projective(m.module, "right")
    rep.facts["_A C flat"] = flat
    rep.facts["Sigma_A fgp"] = fgp
    endo = endo_rings(m)
    rep.facts["dim_S"] = endo.S.dim
    rep.facts["dim_T"] = endo.T.dim
    rep.facts["T = S"] = endo.T.dim == endo.S.dim
    can_iso = False
    if fgp:
        can = canonical_map(m, endo)
        rep.add("can is a coring map", can.report.ok)
        can_iso = can.is_bijective()
        rep.facts["can rank"] = can.rank
    rep.facts["can iso"] = can_iso
    tsigma = is_faithfully_flat_fgp(endo.sigma_T.as_left(), side="left")
    ts = is_faithfully_flat_fgp(left_module_over_subalgebra(endo.S, endo.T), side="left")
    rep.facts["_T Sigma faithfully flat"] = tsigma
    rep.facts["_T S faithfully flat"] = ts
    cond3 = fgp and can_iso and tsigma
    cond4 = flat and fgp and can_iso and ts
    rep.facts["(iii)"] = cond3
    rep.facts["(iv)"] = cond4
    if flat:
        rep.add("(iii) <=> (iv) under flatness", cond3 == cond4)
    else:
        rep.add("(iii) fails without flatness", not cond3)
    remark = can_iso and endo.T.dim == endo.S.dim and not flat
    rep.facts["flatness remark pattern"] = remark
    return rep


def subcomodule(m: RightComodule, basis_cols, coring: Coring | None = None, coring_inclusion=None) -> RightComodule:
    """The comodule on an invariant subspace W of M, optionally over a subcoring.

    ``coring_inclusion`` embeds the subcoring's space into the coring of ``m``.
    """
    F = m.field
    cols = np.asarray(basis_cols)
    cor = coring if coring is not None else m.coring
    incl_c = coring_inclusion if coring_inclusion is not None else F.eye(m.coring.dim)
    W = m.module.submodule(cols)
    WC = TensorProduct(W, cor.bimodule)
    embed = WC.induced(cols, incl_c, m.target)
    rho = F.solve(embed, F.mm(m.rho, cols))
    return RightComodule(cor, W, rho, target=WC, name=f"sub({m.name})")
