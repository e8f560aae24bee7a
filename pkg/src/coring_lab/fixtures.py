"""Built-in fixtures, built in Python and shipped as JSON under ``data/fixtures``.

Regenerate the JSON files with ``python3 -m coring_lab.fixtures [directory]``.
"""

from __future__ import annotations

import sys
from importlib import resources
from pathlib import Path

import numpy as np

from .algebra import Algebra
from .coring import sweedler_coring
from .comodule import grouplike_comodule
from .field import Field
from .io import Fixture, load, save


def _ground(fx: Fixture) -> Algebra:
    return fx.add_algebra("k", Algebra.ground(fx.field))


def _gf4(fx: Fixture) -> Algebra:
    """GF(4) = GF(2)[x]/(x^2 + x + 1) with basis {1, x}."""
    return fx.add_algebra("A", Algebra.polynomial_quotient(fx.field, [1, 1], name="A"))


def _regular_right(fx: Fixture, name: str, left: str, right: str, copies: int = 1):
    """The right regular module of ``right`` (copies times), with ``left`` = k acting by scalars."""
    F = fx.field
    alg = fx.algebras[right]
    blocks = [alg.right_regular[i] for i in range(alg.dim)]
    ract = np.stack([np.kron(F.eye(copies), b).astype(b.dtype) for b in blocks])
    n = ract.shape[1]
    return fx.add_bimodule(name, left, right, F.eye(n)[None, :, :], ract)


def fix_triv() -> Fixture:
    fx = Fixture("FIX-TRIV", Field.rationals(), "B = A = Sigma = k over Q")
    _ground(fx)
    _regular_right(fx, "Sigma", "k", "k")
    fx.add_coring("C", {"construct": "comatrix", "bimodule": "Sigma"})
    fx.add_comodule("Sigma_C", {"construct": "canonical", "coring": "C"})
    fx.test_modules = ["Sigma"]
    fx.roles = {"bimodule": "Sigma", "coring": "C", "comodule": "Sigma_C"}
    return fx


def fix_gf4() -> Fixture:
    fx = Fixture("FIX-GF4", Field.gf(2), "Sigma = GF(4) as a GF(2)-GF(4) bimodule and its comatrix coring")
    _ground(fx)
    _gf4(fx)
    fx.add_hom("h", "k", "A", [[1], [0]])
    _regular_right(fx, "Sigma", "k", "A")
    fx.add_coring("C", {"construct": "comatrix", "bimodule": "Sigma"})
    fx.add_comodule("Sigma_C", {"construct": "canonical", "coring": "C"})
    _regular_right(fx, "B", "k", "k")
    _regular_right(fx, "B2", "k", "k", 2)
    fx.test_modules = ["B", "B2"]
    fx.roles = {"bimodule": "Sigma", "coring": "C", "comodule": "Sigma_C", "hom": "h"}
    return fx


def _sweedler_base(fx: Fixture):
    _ground(fx)
    A = _gf4(fx)
    fx.add_hom("h", "k", "A", [[1], [0]])
    cor = fx.add_coring("C", {"construct": "sweedler", "hom": "h"})
    g = cor.bimodule.pure(A.unit, A.unit)
    fx.add_grouplike("g", "C", coords=fx.field.format_array(g))
    return cor


def fix_sw() -> Fixture:
    fx = Fixture("FIX-SW", Field.gf(2), "Sweedler coring GF(4) (x)_GF(2) GF(4) with grouplike 1 (x) 1")
    _sweedler_base(fx)
    fx.add_comodule("A_g", {"construct": "grouplike", "coring": "C", "grouplike": "g"})
    _regular_right(fx, "Sigma", "k", "A")
    _regular_right(fx, "B", "k", "k")
    _regular_right(fx, "B2", "k", "k", 2)
    fx.test_modules = ["B", "B2"]
    fx.roles = {"coring": "C", "comodule": "A_g", "grouplike": "g", "bimodule": "Sigma", "hom": "h"}
    return fx


def fix_mat() -> Fixture:
    F = Field.gf(3)
    fx = Fixture("FIX-MAT", F, "trivial coring over M2(GF(3)) with the simple right module of row vectors")
    _ground(fx)
    M = fx.add_algebra("M", Algebra.matrix_algebra(F, 2))
    ract = np.stack([F.cast(M.rep[i].T) for i in range(M.dim)])
    fx.add_bimodule("S", "k", "M", F.eye(2)[None, :, :], ract)
    fx.add_coring("C", {"construct": "trivial", "algebra": "M"})
    fx.add_comodule("S_C", {"construct": "trivial", "coring": "C", "module": "S"})
    fx.roles = {"coring": "C", "comodule": "S_C", "bimodule": "S"}
    return fx


def crossed_product(A: Algebra, automorphisms: list[np.ndarray], name: str = "R") -> Algebra:
    """G * A with basis sigma x_j, product (sigma a)(tau b) = sigma tau (tau^-1(a) b).

    ``automorphisms`` lists the group elements as matrices, closed under
    composition, with the identity first.
    """
    F = A.field
    n, d = len(automorphisms), A.dim
    flat = [F.cast(g).reshape(-1) for g in automorphisms]

    def index(mat):
        key = F.cast(mat).reshape(-1)
        return next(i for i, f in enumerate(flat) if F.equal(f, key))

    struct = F.zeros((n * d, n * d, n * d))
    for s in range(n):
        for t in range(n):
            st = index(F.mm(automorphisms[s], automorphisms[t]))
            tinv = F.inverse(automorphisms[t])
            for i in range(d):
                moved = F.mm(tinv, A.basis(i))
                for j in range(d):
                    prod = A.mul(moved, A.basis(j))
                    struct[s * d + i, t * d + j, st * d : (st + 1) * d] = prod
    unit = F.zeros(n * d)
    unit[:d] = A.unit
    labels = [f"g{s}*{A.labels[i]}" for s in range(n) for i in range(d)]
    return Algebra(F, struct, unit, labels=labels, name=name)


def fix_xprod() -> Fixture:
    F = Field.gf(3)
    fx = Fixture("FIX-XPROD", F, "crossed product R = C2 * GF(9) over A = GF(9), dual coring R* with the trace grouplike")
    _ground(fx)
    A = fx.add_algebra("A", Algebra.polynomial_quotient(F, [1, 0], name="A"))  # x^2 + 1
    conj = F.array([[1, 0], [0, -1]])
    fx.add_algebra("R", crossed_product(A, [F.eye(2), conj]))
    fx.add_hom("h", "A", "R", np.concatenate([F.eye(2), F.zeros((2, 2))]))
    fx.add_coring("Rstar", {"construct": "dual", "hom": "h"})
    trace = np.concatenate([F.eye(2), F.eye(2)], axis=1)  # sigma a -> a
    fx.add_grouplike("trace", "Rstar", functional=F.format_array(trace))
    fx.add_comodule("A_g", {"construct": "grouplike", "coring": "Rstar", "grouplike": "trace"})
    fx.roles = {"coring": "Rstar", "comodule": "A_g", "grouplike": "trace", "hom": "h", "algebra": "R"}
    return fx


def fix_nonflat() -> Fixture:
    F = Field.gf(2)
    fx = Fixture("FIX-NONFLAT", F, "ideal coring I = eA in A = span{e, eps, x, f} inside M3(GF(2))")
    _ground(fx)

    def unit_matrix(r, c):
        m = F.zeros((3, 3))
        m[r, c] = 1
        return m

    e = F.reduce(unit_matrix(0, 0) + unit_matrix(1, 1))
    mats = [e, unit_matrix(0, 1), unit_matrix(0, 2), unit_matrix(2, 2)]
    fx.add_algebra("A", Algebra.from_basis_matrices(F, np.stack(mats), name="A", labels=["e", "eps", "x", "f"]))
    fx.add_coring("I", {"construct": "idempotent_ideal", "algebra": "A", "idempotent": ["1", "0", "0", "0"]})
    fx.add_comodule("I_I", {"construct": "regular", "coring": "I"})
    fx.roles = {"coring": "I", "comodule": "I_I", "algebra": "A"}
    return fx


def fix_nongalois() -> Fixture:
    F = Field.gf(2)
    fx = Fixture("FIX-NONGALOIS", F, "grouplike coalgebra (k x k)* with the first projection: can has rank 1 of 2")
    _ground(fx)
    fx.add_algebra("P", Algebra.product(Algebra.ground(F), Algebra.ground(F)))
    fx.add_hom("h", "k", "P", [[1], [1]])
    fx.add_coring("Pstar", {"construct": "dual", "hom": "h"})
    fx.add_grouplike("p1", "Pstar", functional=[["1", "0"]])
    fx.add_comodule("k_g", {"construct": "grouplike", "coring": "Pstar", "grouplike": "p1"})
    fx.roles = {"coring": "Pstar", "comodule": "k_g", "grouplike": "p1"}
    return fx


def fix_dual_numbers() -> Fixture:
    F = Field.gf(2)
    fx = Fixture("FIX-DUALNUM", F, "trivial coring over GF(2)[eps]/(eps^2): not cosemisimple")
    _ground(fx)
    fx.add_algebra("D", Algebra.polynomial_quotient(F, [0, 0], name="D", var="eps"))
    fx.add_coring("C", {"construct": "trivial", "algebra": "D"})
    fx.roles = {"coring": "C"}
    return fx


def fix_two_blocks() -> Fixture:
    F = Field.gf(2)
    fx = Fixture("FIX-TWOBLOCK", F, "trivial coring over GF(2) x GF(2): a direct sum of two simple corings")
    _ground(fx)
    fx.add_algebra("P", Algebra.product(Algebra.ground(F), Algebra.ground(F)))
    fx.add_coring("C", {"construct": "trivial", "algebra": "P"})
    fx.roles = {"coring": "C"}
    return fx


# -- corrupted fixtures, one per axiom checker ------------------------------------------


def mut_algebra() -> Fixture:
    F = Field.gf(2)
    fx = Fixture("MUT-ALGEBRA", F, "right-zero semigroup algebra b_i b_j = b_j: the unit acts only on the left")
    struct = F.zeros((2, 2, 2))
    for i in range(2):
        for j in range(2):
            struct[i, j, j] = 1
    fx.add_algebra("Z", Algebra(F, struct, F.array([1, 0]), labels=["b0", "b1"], name="Z"))
    fx.roles = {"algebra": "Z"}
    return fx


def mut_coring() -> Fixture:
    F = Field.gf(2)
    fx = Fixture("MUT-CORING", F, "Sweedler coring with Delta of two basis vectors swapped")
    _ground(fx)
    _gf4(fx)
    fx.add_hom("h", "k", "A", [[1], [0]])
    sw = sweedler_coring(fx.homs["h"])
    fx.add_bimodule("C", "A", "A", sw.bimodule.lact, sw.bimodule.ract)
    bad = sw.delta.copy()
    bad[:, [0, 1]] = bad[:, [1, 0]]
    fx.add_explicit_coring("C_bad", "A", "C", bad, sw.eps, square=sw.square)
    fx.roles = {"coring": "C_bad"}
    return fx


def mut_comodule() -> Fixture:
    F = Field.gf(2)
    fx = Fixture("MUT-COMODULE", F, "grouplike comodule over the Sweedler coring with one coaction entry flipped")
    cor = _sweedler_base(fx)
    good = grouplike_comodule(cor, fx.grouplikes["g"][1])
    fx.add_bimodule("A_right", "k", "A", F.eye(2)[None, :, :], good.module.ract)
    bad = good.rho.copy()
    bad[0, 0] = (bad[0, 0] + 1) % 2
    fx.add_explicit_comodule("A_bad", "C", "A_right", bad, target=good.target)
    fx.roles = {"coring": "C", "comodule": "A_bad"}
    return fx


def mut_coring_hom() -> Fixture:
    F = Field.gf(2)
    fx = Fixture("MUT-CORING-HOM", F, "multiplication by x on the trivial GF(4)-coring: bilinear but not a coring map")
    _ground(fx)
    A = _gf4(fx)
    fx.add_coring("T", {"construct": "trivial", "algebra": "A"})
    fx.add_coring_hom("mult_x", "T", "T", F.format_array(A.left_mat(A.basis(1))))
    fx.roles = {"coring": "T", "coring_hom": "mult_x"}
    return fx


BUILDERS = {
    "FIX-TRIV": fix_triv,
    "FIX-GF4": fix_gf4,
    "FIX-SW": fix_sw,
    "FIX-MAT": fix_mat,
    "FIX-XPROD": fix_xprod,
    "FIX-NONFLAT": fix_nonflat,
    "FIX-NONGALOIS": fix_nongalois,
    "FIX-DUALNUM": fix_dual_numbers,
    "FIX-TWOBLOCK": fix_two_blocks,
    "MUT-ALGEBRA": mut_algebra,
    "MUT-CORING": mut_coring,
    "MUT-COMODULE": mut_comodule,
    "MUT-CORING-HOM": mut_coring_hom,
}


def build(name: str) -> Fixture:
    return BUILDERS[name]()


def shipped_path(name: str) -> Path:
    """Path of the JSON file shipped for a built-in fixture."""
    return Path(str(resources.files("coring_lab") / "data" / "fixtures" / f"{name}.json"))


def load_shipped(name: str) -> Fixture:
    return load(shipped_path(name))


def write_all(directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, builder in BUILDERS.items():
        path = out / f"{name}.json"
        save(builder(), path)
        paths.append(path)
    return paths


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).parent / "data" / "fixtures")
    for p in write_all(target):
        print(p)
