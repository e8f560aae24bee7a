"""The comatrix coring rebuilt from the adjunction between - (x)_T Sigma and - (x)_A Sigma*.

For a T-A bimodule Sigma with Sigma_A finitely generated projective, the
functor - (x)_T Sigma is left adjoint to - (x)_A Sigma* with

    unit     theta_Y(y) = sum_i y (x) e_i (x) e_i*
    counit   chi_X(x (x) phi (x) u) = x phi(u).

The coendomorphism coring Sigma* (x)_T Sigma gets its comultiplication from
the condition (C (x) theta_N) theta_N = (Delta (x) N) theta_N for N = Sigma*,
read back through the adjunction, and its counit is the adjunct of the unit
isomorphism N -> A (x)_A N.  Both must agree exactly with the comatrix data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .comodule import LeftComodule, RightComodule, canonical_map, check_left_comodule
from .coring import ComatrixCoring, Coring
from .modules import Bimodule, DualBasis, DualModule, TensorProduct, direct_sum, dual_basis, hom_over
from .report import Report


def evaluation_map(XD: TensorProduct, dual: DualModule, XDS: TensorProduct) -> np.ndarray:
    """(x (x) phi) (x) u -> x phi(u) from (X (x)_A Sigma*) (x)_T Sigma to X."""
    F = XD.field
    sigma = dual.source
    # psi[k] is the matrix of x (x) phi -> x phi(u_k)
    psi = np.stack([XD.contract_right(dual.functionals[:, :, k].T) for k in range(sigma.dim)])
    images = F.tensordot(psi, XDS.generators, (2, 0))  # (n, dim X, g)
    return F.einsum("kmi,ikq->mq", images, XDS.section_blocks)


def _regular_right(alg, copies: int = 1) -> Bimodule:
    reg = Bimodule.regular(alg).as_right()
    reg.name = alg.name or "R"
    if copies == 1:
        return reg
    out = direct_sum(*([reg] * copies))
    out.name = f"{reg.name}^{copies}"
    return out


@dataclass
class AdjunctionData:
    """Unit, counit and hom-set bijection for - (x)_T Sigma -| - (x)_A Sigma*."""

    sigma: Bimodule
    dual: DualModule
    dual_basis: DualBasis
    report: Report = field(default_factory=lambda: Report("adjunction"))

    # unit and counit ----------------------------------------------------------

    def unit(self, Y: Bimodule, YS: TensorProduct | None = None, YSD: TensorProduct | None = None):
        """theta_Y as a matrix into (Y (x)_T Sigma) (x)_A Sigma*; returns (matrix, YS, YSD)."""
        F = self.sigma.field
        YS = YS if YS is not None else TensorProduct(Y, self.sigma)
        YSD = YSD if YSD is not None else TensorProduct(YS, self.dual)
        db = self.dual_basis
        cols = []
        for y in range(Y.dim):
            total = F.zeros(YSD.dim)
            for e, phi in zip(db.elements, db.functionals):
                total = F.reduce(total + YSD.pure(YS.pure(Y.basis(y), e), phi))
            cols.append(total)
        mat = np.stack(cols, axis=1) if cols else F.zeros((YSD.dim, 0))
        return mat, YS, YSD

    def counit(self, X: Bimodule, XD: TensorProduct | None = None, XDS: TensorProduct | None = None):
        """chi_X as a matrix from (X (x)_A Sigma*) (x)_T Sigma; returns (matrix, XD, XDS)."""
        XD = XD if XD is not None else TensorProduct(X, self.dual)
        XDS = XDS if XDS is not None else TensorProduct(XD, self.sigma)
        return evaluation_map(XD, self.dual, XDS), XD, XDS

    # hom-set bijection ---------------------------------------------------------

    def eta(self, g, YS: TensorProduct, XD: TensorProduct, XDS: TensorProduct | None = None) -> np.ndarray:
        """g: Y -> X (x) Sigma*  |->  chi_X (g (x) Sigma): Y (x) Sigma -> X."""
        F = self.sigma.field
        chi, _, XDS = self.counit(XD.M, XD, XDS)
        return F.mm(chi, YS.induced(g, F.eye(self.sigma.dim), XDS))

    def eta_inverse(self, f, Y: Bimodule, XD: TensorProduct) -> np.ndarray:
        """f: Y (x) Sigma -> X  |->  (f (x) Sigma*) theta_Y: Y -> X (x) Sigma*."""
        F = self.sigma.field
        theta, _, YSD = self.unit(Y)
        return F.mm(YSD.induced(f, F.eye(self.dual.dim), XD), theta)

    # triangle identities -------------------------------------------------------

    def triangle_left(self, Y: Bimodule) -> bool:
        """chi_{Y (x) Sigma} (theta_Y (x) Sigma) = id on Y (x)_T Sigma."""
        F = self.sigma.field
        theta, YS, YSD = self.unit(Y)
        YSDS = TensorProduct(YSD, self.sigma)
        chi, _, _ = self.counit(YS, YSD, YSDS)
        return F.equal(F.mm(chi, YS.induced(theta, F.eye(self.sigma.dim), YSDS)), F.eye(YS.dim))

    def triangle_right(self, X: Bimodule) -> bool:
        """(chi_X (x) Sigma*) theta_{X (x) Sigma*} = id on X (x)_A Sigma*."""
        F = self.sigma.field
        chi, XD, XDS = self.counit(X)
        theta, _, XDSD = self.unit(XD, XDS)
        return F.equal(F.mm(XDSD.induced(chi, F.eye(self.dual.dim), XD), theta), F.eye(XD.dim))

    def round_trip(self, Y: Bimodule, X: Bimodule) -> tuple[bool, bool]:
        """eta^-1 eta and eta eta^-1 are identities on bases of both hom-spaces."""
        F = self.sigma.field
        YS = TensorProduct(Y, self.sigma)
        XD = TensorProduct(X, self.dual)
        XDS = TensorProduct(XD, self.sigma)
        right_homs = hom_over(YS.as_right(), X.as_right(), "right")
        forward = all(F.equal(self.eta(self.eta_inverse(f, Y, XD), YS, XD, XDS), f) for f in right_homs)
        left_homs = hom_over(Y.as_right(), XD.as_right(), "right")
        backward = all(F.equal(self.eta_inverse(self.eta(g, YS, XD, XDS), Y, XD), g) for g in left_homs)
        return forward, backward


def build_adjunction(sigma: Bimodule, db: DualBasis | None = None, test_modules=None) -> AdjunctionData:
    """Adjunction data for Sigma viewed as a T-A bimodule (T its left algebra).

    ``test_modules`` is a pair (right T-modules, right A-modules); the default
    uses T, T^2 and A, A^2.  The triangle identities and the hom-set round trip
    are recorded in the report.
    """
    db = db if db is not None else dual_basis(sigma)
    adj = AdjunctionData(sigma, db.dual, db)
    T, A = sigma.left_alg, sigma.right_alg
    if test_modules is None:
        test_modules = ([_regular_right(T), _regular_right(T, 2)], [_regular_right(A), _regular_right(A, 2)])
    ys, xs = test_modules
    rep = adj.report
    for Y in ys:
        rep.add(f"triangle at Y={Y.name}", adj.triangle_left(Y))
    for X in xs:
        rep.add(f"triangle at X={X.name}", adj.triangle_right(X))
    forward, backward = adj.round_trip(ys[0], xs[0])
    rep.add("eta o eta^-1 = id", forward)
    rep.add("eta^-1 o eta = id", backward)
    return adj


@dataclass
class CoendCoring:
    """Sigma* (x)_T Sigma with Delta and eps recovered from the adjunction."""

    coring: Coring
    comatrix: ComatrixCoring
    adjunction: AdjunctionData

    def matches_comatrix(self) -> bool:
        """Delta and eps coincide entry by entry with the comatrix construction."""
        F = self.coring.field
        return F.equal(self.coring.delta, self.comatrix.delta) and F.equal(self.coring.eps, self.comatrix.eps)


def coend_coring(sigma: Bimodule, db: DualBasis | None = None, adjunction: AdjunctionData | None = None) -> CoendCoring:
    F = sigma.field
    adj = adjunction if adjunction is not None else build_adjunction(sigma, db)
    cm = ComatrixCoring(sigma, adj.dual_basis)
    C, dual = cm.tensor, adj.dual
    # theta_N for N = Sigma*: N -> (Sigma* (x) Sigma) (x) Sigma* = C (x) N
    theta_n, _, CN = adj.unit(dual, C)
    # (C (x) theta_N) theta_N : N -> (C (x) C) (x) N
    XD = TensorProduct(cm.square, dual)
    twice = F.mm(CN.apply_right_factor(theta_n, CN, XD), theta_n)
    delta = adj.eta(twice, C, XD)
    # eps = eta(iota) for iota: N -> A (x)_A N
    A = sigma.right_alg
    AD = TensorProduct(Bimodule.regular(A), dual)
    iota = np.stack([AD.pure(A.unit, dual.basis(s)) for s in range(dual.dim)], axis=1)
    eps = adj.eta(iota, C, AD)
    coring = Coring(A, C, delta, eps, square=cm.square, name=f"coend({sigma.name})")
    return CoendCoring(coring, cm, adj)


def left_coaction_on_dual(m: RightComodule, cm: ComatrixCoring) -> LeftComodule:
    """lambda(phi) = sum_i ((phi (x) C) rho(e_i)) (x) e_i* making Sigma* a left C-comodule."""
    F = m.field
    C = m.coring
    dual, db = cm.dual, cm.dual_basis
    CD = TensorProduct(C.bimodule, dual)
    cols = []
    for s in range(dual.dim):
        contr = F.mm(m.target.contract_left(dual.functionals[s]), m.rho)  # (dim C, dim Sigma)
        total = F.zeros(CD.dim)
        for e, phi in zip(db.elements, db.functionals):
            total = F.reduce(total + CD.pure(F.mm(contr, e), phi))
        cols.append(total)
    lam = np.stack(cols, axis=1) if cols else F.zeros((CD.dim, 0))
    return LeftComodule(C, dual, lam, target=CD, name=f"{dual.name}")


def f_equals_can_report(m: RightComodule) -> Report:
    """f = chi_C (lambda (x)_T Sigma) against can, with T = End^C(Sigma)."""
    F = m.field
    can = canonical_map(m)
    cm = can.comatrix
    rep = Report("f = can")
    left = left_coaction_on_dual(m, cm)
    rep.add("Sigma* left comodule", check_left_comodule(left).ok)
    CD = left.target
    T = cm.sigma.left_alg
    linear = all(F.equal(F.mm(left.lam, cm.dual.ract[t]), F.mm(CD.ract[t], left.lam)) for t in range(T.dim))
    rep.add("lambda right T-linear", linear)
    CDS = TensorProduct(CD, cm.sigma)
    f = F.mm(evaluation_map(CD, cm.dual, CDS), cm.tensor.induced(left.lam, F.eye(cm.sigma.dim), CDS))
    rep.add("f = can", F.equal(f, can.matrix))
    rep.facts["rank"] = can.rank
    return rep


def f_equals_can(m: RightComodule) -> bool:
    return f_equals_can_report(m).ok
