"""Cosemisimple corings: the semisimplicity test, block decomposition and conjugacy.

A coring C is cosemisimple when C_A is projective and C is semisimple as a
right module over its right dual C* acting by c.f = f(c_(1)) c_(2).  Its
simple subcorings are the isotypic components of C as a right comodule,
i.e. as a module over the left dual *C acting by c.f = c_(1) f(c_(2)).
Each block is the comatrix coring of any simple comodule inside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    Algebra,
    SubalgebraPresentation,
    find_nonunit,
    image_algebra,
    is_division_ring,
    is_semisimple_module,
    primitive_central_idempotents,
)
from .comodule import CanMap, EndoRings, RightComodule, canonical_map, colinear_homs, endo_rings, subcomodule
from .coring import Coring, check_coring, convolution_algebra, subcoring
from .field import ENUMERATION_BOUND, TooLargeToEnumerate, Undecided
from .modules import Bimodule, LeftDualModule, hom_over, is_hom, is_projective
from .report import Report


def right_dual_operators(c: Coring):
    """C* and the stack of maps c -> f(c_(1)) c_(2), one per basis functional of C*."""
    conv = convolution_algebra(c, "right")
    F = c.field
    ops = [F.mm(c.square.contract_left(f), c.delta) for f in conv.dual.functionals]
    return conv, np.stack(ops) if ops else F.zeros((0, c.dim, c.dim))


def left_dual_operators(c: Coring) -> np.ndarray:
    """Stack of the maps c -> c_(1) f(c_(2)), one per basis functional of *C."""
    F = c.field
    dual = LeftDualModule(c.bimodule)
    ops = [F.mm(c.square.contract_right(f), c.delta) for f in dual.functionals]
    return np.stack(ops) if ops else F.zeros((0, c.dim, c.dim))


def is_cosemisimple(c: Coring) -> bool:
    """C_A projective and C semisimple as a right C*-module."""
    if not is_projective(c.bimodule, "right"):
        return False
    conv, ops = right_dual_operators(c)
    return is_semisimple_module(conv.algebra, ops, "right")


@dataclass
class Block:
    """One simple subcoring with a simple comodule and its division ring of colinear maps."""

    embedding: np.ndarray  # columns spanning the block inside C
    coring: Coring
    sigma_embedding: np.ndarray  # columns spanning Sigma inside C
    sigma: RightComodule  # Sigma as a comodule over the block
    endo: EndoRings
    division: bool | None  # None when the division test was undecided
    can: CanMap | None
    report: Report

    @property
    def dim(self) -> int:
        return self.embedding.shape[1]

    @property
    def division_algebra(self) -> Algebra:
        return self.endo.T_algebra


@dataclass
class CosemisimpleReport:
    verdict: bool
    blocks: list[Block] = field(default_factory=list)
    report: Report = field(default_factory=lambda: Report("cosemisimple"))

    @property
    def ok(self) -> bool:
        return self.report.ok


def _regular_right(c: Coring) -> RightComodule:
    """C as a right comodule, forgetting the left A-action so right subcomodules are allowed."""
    return RightComodule(c, c.bimodule.as_right(), c.delta, target=c.square, name=c.name)


def _span(F, vectors_cols, ops) -> np.ndarray:
    """Columns spanning the smallest subspace containing the vectors and stable under ops."""
    basis = F.row_basis(np.asarray(vectors_cols).T)
    while True:
        imgs = [F.mm(op, basis.T).T for op in ops]
        nxt = F.row_basis(np.concatenate([basis] + imgs))
        if nxt.shape[0] == basis.shape[0]:
            return nxt.T
        basis = nxt


def simple_subcomodule(c: Coring, block_cols, rng: np.random.Generator, ops=None) -> np.ndarray:
    """Columns of a simple right subcomodule of C inside the given block.

    A random vector is spun under *C; the resulting cyclic subcomodule is then
    shrunk by images of non-invertible colinear endomorphisms until its
    endomorphism ring is a division ring.  Valid for semisimple comodules.
    """
    F = c.field
    ops = left_dual_operators(c) if ops is None else ops
    reg = _regular_right(c)
    block_cols = np.asarray(block_cols)
    v = F.zeros(c.dim)
    while F.is_zero(v):
        v = F.mm(block_cols, F.random(block_cols.shape[1], rng))
    cols = _span(F, v[:, None], ops)
    while True:
        sub = subcomodule(reg, cols)
        ends = colinear_homs(sub, sub)
        end_alg = Algebra.from_basis_matrices(F, ends, name="End")
        if end_alg.dim == 1 or is_division_ring(end_alg, rng):
            return cols
        x = find_nonunit(end_alg, rng)
        if x is None:
            raise Undecided("no zero divisor found in End of a non-simple candidate")
        image = F.row_basis(F.tensordot(x, end_alg.rep, (0, 0)).T)  # rows span the image of x
        cols = F.mm(cols, image.T)


def decompose(c: Coring, seed: int = 0) -> CosemisimpleReport:
    """Split a cosemisimple coring into its simple subcorings and certify each one."""
    F = c.field
    rng = np.random.default_rng(seed)
    out = CosemisimpleReport(False)
    rep = out.report
    verdict = is_cosemisimple(c)
    rep.add("cosemisimple", verdict)
    out.verdict = verdict
    if not verdict:
        return out
    ops = left_dual_operators(c)
    img = image_algebra(F, ops, "left")
    idems = primitive_central_idempotents(img, rng)
    blocks_cols = []
    for e in idems:
        proj = F.tensordot(e, img.rep, (0, 0))
        blocks_cols.append(F.row_basis(proj.T).T)
    stacked = np.concatenate(blocks_cols, axis=1) if blocks_cols else F.zeros((c.dim, 0))
    rep.add("blocks-span-C", stacked.shape[1] == c.dim and F.rank(stacked) == c.dim, f"{len(idems)} blocks")
    rep.facts["blocks"] = len(idems)
    for k, cols in enumerate(blocks_cols):
        out.blocks.append(_certify_block(c, cols, rng, ops, k))
        rep.extend(out.blocks[-1].report, prefix=f"block{k}: ")
    return out


def _certify_block(c: Coring, cols, rng, ops, k: int) -> Block:
    F = c.field
    brep = Report(f"block {k}")
    sub = subcoring(c, cols)
    brep.add("subcoring", check_coring(sub).ok)
    sigma_cols = simple_subcomodule(c, cols, rng, ops)
    sigma = subcomodule(_regular_right(c), sigma_cols, coring=sub, coring_inclusion=cols)
    endo = endo_rings(sigma)
    brep.facts["dim_block"] = cols.shape[1]
    brep.facts["dim_Sigma"] = sigma.dim
    brep.facts["dim_D"] = endo.T.dim
    try:
        division = is_division_ring(endo.T_algebra, rng)
        brep.add("D-division", division)
    except Undecided as exc:
        division = None
        brep.facts["D-division"] = f"Undecided: {exc}"
    can = None
    if division is not False:
        can = canonical_map(sigma, endo)
        brep.facts["dim_comatrix"] = can.comatrix.dim
        brep.add("can-bijective", can.is_bijective(), f"rank {can.report.facts['rank']}")
    return Block(cols, sub, sigma_cols, sigma, endo, division, can, brep)


# -- conjugacy of division subrings --------------------------------------------------


def _stack(F, d) -> np.ndarray:
    """Matrices spanning a subalgebra, from an Algebra with ``rep``, a presentation or a stack."""
    if isinstance(d, SubalgebraPresentation):
        return d.algebra.rep
    if isinstance(d, Algebra):
        return d.rep
    return np.asarray(d)


@dataclass
class ConjugacyWitness:
    """A right A-module isomorphism g: Sigma -> Xi with g D g^-1 = E."""

    g: np.ndarray
    report: Report

    @property
    def ok(self) -> bool:
        return self.report.ok


def conjugacy_report(sigma: Bimodule, D, xi: Bimodule, E, g) -> Report:
    F = sigma.field
    rep = Report("conjugacy")
    dmats, emats = _stack(F, D), _stack(F, E)
    ddim = F.rank(dmats.reshape(dmats.shape[0], -1)) if dmats.size else 0
    edim = F.rank(emats.reshape(emats.shape[0], -1)) if emats.size else 0
    if ddim != edim or sigma.dim != xi.dim:
        rep.add("dimensions", False, f"dim D = {ddim}, dim E = {edim}")
        return rep
    g = F.cast(g)
    inv = F.is_invertible(g)
    rep.add("g-invertible", inv)
    rep.add("g-A-linear", is_hom(sigma.as_right(), xi.as_right(), g, "right"))
    if not inv:
        return rep
    ginv = F.inverse(g)
    conj = np.stack([F.dot(g, d, ginv) for d in dmats]) if len(dmats) else dmats
    same = F.same_span(conj.reshape(conj.shape[0], -1).T, emats.reshape(emats.shape[0], -1).T)
    rep.add("gDg^-1=E", same)
    return rep


def verify_conjugacy(sigma: Bimodule, D, xi: Bimodule, E, g) -> bool:
    """True iff g is a right A-module isomorphism with g D g^-1 = E as subalgebras."""
    return conjugacy_report(sigma, D, xi, E, g).ok


def search_conjugacy(sigma: Bimodule, D, xi: Bimodule, E, bound: int = 10**6) -> ConjugacyWitness | None:
    """Enumerate Hom_A(Sigma, Xi) over a finite field for a conjugating isomorphism."""
    F = sigma.field
    homs = hom_over(sigma.as_right(), xi.as_right(), "right")
    if F.p is None:
        raise TooLargeToEnumerate("conjugacy search needs a finite field")
    if F.p ** homs.shape[0] > bound:
        raise TooLargeToEnumerate(f"{F.p}^{homs.shape[0]} candidate maps exceed {bound}")
    for coeffs in F.enumerate_vectors(homs.shape[0], bound=max(bound, ENUMERATION_BOUND)):
        g = F.tensordot(coeffs, homs, (0, 0))
        if not F.is_invertible(g):
            continue
        rep = conjugacy_report(sigma, D, xi, E, g)
        if rep.ok:
            return ConjugacyWitness(g, rep)
    return None
