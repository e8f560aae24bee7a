"""Finite-dimensional unital associative algebras given by structure constants.

An algebra of dimension d has basis b_0..b_{d-1} and a (d, d, d) array
``struct`` with ``b_i b_j = sum_k struct[i, j, k] b_k``.  Elements are
coordinate vectors.  Linear maps act on column vectors, so a map V -> W is
a (dim W, dim V) matrix throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np
import sympy

from .field import ENUMERATION_BOUND, Field, NoSolution, TooLargeToEnumerate, Undecided
from .report import CheckResult


class Algebra:
    def __init__(self, field: Field, struct, unit, labels=None, name: str = "", rep=None):
        self.field = field
        self.struct = field.array(struct) if not isinstance(struct, np.ndarray) else struct
        self.dim = self.struct.shape[0]
        self.unit = field.array(unit) if not isinstance(unit, np.ndarray) else unit
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(self.dim)]
        self.name = name
        # optional faithful matrix representation: rep[i] is the matrix of b_i
        self.rep = rep

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.dim}, over {self.field})"

    # -- constructors ------------------------------------------------------

    @classmethod
    def ground(cls, field: Field) -> "Algebra":
        return cls(field, [[[1]]], [1], labels=["1"], name="k")

    @classmethod
    def from_matrices(cls, field: Field, mats, name: str = "", labels=None) -> "Algebra":
        """The algebra spanned by ``mats`` (assumed closed under products, containing I).

        A reduced basis of the span is used; products are composition.
        """
        mats = np.asarray(mats)
        if mats.ndim != 3:
            raise ValueError("expected a stack of square matrices")
        n = mats.shape[1]
        if mats.shape[0] == 0:
            basis = field.zeros((0, n, n))
        else:
            basis = field.row_basis(mats.reshape(mats.shape[0], n * n)).reshape(-1, n, n)
        return cls.from_basis_matrices(field, basis, name=name, labels=labels)

    @classmethod
    def from_basis_matrices(cls, field: Field, basis, name: str = "", labels=None) -> "Algebra":
        basis = np.asarray(basis)
        d = basis.shape[0]
        n = basis.shape[1] if basis.ndim == 3 else 0
        flat = basis.reshape(d, n * n).T
        if d == 0:
            return cls(field, field.zeros((0, 0, 0)), field.zeros(0), labels=[], name=name, rep=basis)
        prods = np.stack([field.mm(basis[i], basis[j]).reshape(n * n) for i in range(d) for j in range(d)], axis=1)
        try:
            coords = field.solve(flat, prods)
            unit = field.solve(flat, field.eye(n).reshape(n * n))
        except NoSolution:
            raise ValueError("matrix span is not a unital subalgebra") from None
        struct = coords.T.reshape(d, d, d)
        return cls(field, struct, unit, labels=labels, name=name, rep=basis)

    @classmethod
    def matrix_algebra(cls, field: Field, n: int) -> "Algebra":
        units = []
        labels = []
        for i, j in product(range(n), repeat=2):
            e = field.zeros((n, n))
            e[i, j] = field.scalar(1)
            units.append(e)
            labels.append(f"E{i + 1}{j + 1}")
        return cls.from_basis_matrices(field, np.stack(units), name=f"M{n}", labels=labels)

    @classmethod
    def polynomial_quotient(cls, field: Field, coeffs, name: str = "", var: str = "x") -> "Algebra":
        """k[x]/(f) for monic f = x^n + coeffs[n-1] x^{n-1} + ... + coeffs[0]."""
        c = [field.scalar(x) for x in coeffs]
        n = len(c)
        # reduce x^m for m < 2n - 1 into the basis 1, x, ..., x^{n-1}
        powers = [field.zeros(n) for _ in range(2 * n - 1)]
        for m in range(n):
            powers[m][m] = field.scalar(1)
        for m in range(n, 2 * n - 1):
            prev = powers[m - 1]
            shifted = field.zeros(n)
            shifted[1:] = prev[:-1]
            top = prev[-1]
            powers[m] = field.reduce(shifted - top * field.array(c))
        struct = field.zeros((n, n, n))
        for i, j in product(range(n), repeat=2):
            struct[i, j] = powers[i + j]
        unit = field.zeros(n)
        unit[0] = field.scalar(1)
        labels = ["1", var] + [f"{var}^{m}" for m in range(2, n)]
        return cls(field, struct, unit, labels=labels[:n], name=name or f"k[{var}]/f")

    @classmethod
    def upper_triangular(cls, field: Field, n: int) -> "Algebra":
        units = []
        labels = []
        for i in range(n):
            for j in range(i, n):
                e = field.zeros((n, n))
                e[i, j] = field.scalar(1)
                units.append(e)
                labels.append(f"E{i + 1}{j + 1}")
        return cls.from_basis_matrices(field, np.stack(units), name=f"UT{n}", labels=labels)

    @classmethod
    def product(cls, *algs: "Algebra") -> "Algebra":
        field = algs[0].field
        d = sum(a.dim for a in algs)
        struct = field.zeros((d, d, d))
        unit = field.zeros(d)
        labels = []
        off = 0
        for t, a in enumerate(algs):
            sl = slice(off, off + a.dim)
            struct[sl, sl, sl] = a.struct
            unit[sl] = a.unit
            labels += [f"{lab}@{t}" for lab in a.labels]
            off += a.dim
        return cls(field, struct, unit, labels=labels, name=" x ".join(a.name or "?" for a in algs))

    # -- arithmetic --------------------------------------------------------

    @property
    def one(self) -> np.ndarray:
        return self.unit

    @property
    def zero(self) -> np.ndarray:
        return self.field.zeros(self.dim)

    def basis(self, i: int) -> np.ndarray:
        e = self.field.zeros(self.dim)
        e[i] = self.field.scalar(1)
        return e

    def element(self, coords) -> np.ndarray:
        return self.field.array(coords)

    def mul(self, x, y) -> np.ndarray:
        t = np.tensordot(x, self.struct, axes=(0, 0))
        return self.field.reduce(np.tensordot(y, t, axes=(0, 0)))

    def left_mat(self, x) -> np.ndarray:
        """Matrix of y -> x y."""
        return self.field.reduce(np.tensordot(x, self.struct, axes=(0, 0)).T)

    def right_mat(self, x) -> np.ndarray:
        """Matrix of y -> y x."""
        return self.field.reduce(np.tensordot(x, self.struct, axes=(0, 1)).T)

    @cached_property
    def left_regular(self) -> np.ndarray:
        """Stack of L_{b_i}."""
        return np.ascontiguousarray(np.transpose(self.struct, (0, 2, 1)))

    @cached_property
    def right_regular(self) -> np.ndarray:
        """Stack of R_{b_i}."""
        return np.ascontiguousarray(np.transpose(self.struct, (1, 2, 0)))

    def power(self, x, n: int) -> np.ndarray:
        out = self.unit
        for _ in range(n):
            out = self.mul(out, x)
        return out

    def is_unit(self, x) -> bool:
        return self.field.is_invertible(self.left_mat(x))

    def inverse(self, x) -> np.ndarray:
        return self.field.solve(self.left_mat(x), self.unit)

    def is_commutative(self) -> bool:
        return self.field.equal(self.struct, np.transpose(self.struct, (1, 0, 2)))

    def center(self) -> np.ndarray:
        """Basis rows of the center."""
        # x central iff sum_s x_s (c[s,i,:] - c[i,s,:]) = 0 for all i
        diff = self.field.reduce(self.struct - np.transpose(self.struct, (1, 0, 2)))
        eq = np.transpose(diff, (1, 2, 0)).reshape(self.dim * self.dim, self.dim)
        return self.field.kernel(eq)

    def minimal_polynomial(self, x) -> list:
        """Monic minimal polynomial coefficients [c_0, ..., c_{m-1}, 1] of x."""
        F = self.field
        pows = [self.unit]
        while True:
            nxt = self.mul(pows[-1], x)
            basis = np.stack(pows, axis=1)
            try:
                coeffs = F.solve(basis, nxt)
            except NoSolution:
                pows.append(nxt)
                continue
            return [F.reduce(-c) for c in coeffs] + [F.scalar(1)]

    def evaluate_polynomial(self, coeffs, x) -> np.ndarray:
        out = self.zero
        pw = self.unit
        for c in coeffs:
            out = self.field.reduce(out + c * pw)
            pw = self.mul(pw, x)
        return out

    def subalgebra_generated(self, gens) -> np.ndarray:
        """Basis rows of the unital subalgebra generated by ``gens``."""
        F = self.field
        span = F.row_basis(np.stack([self.unit] + list(gens)))
        while True:
            prods = [self.mul(x, y) for x in span for y in span]
            new = F.row_basis(np.concatenate([span, np.stack(prods)]))
            if new.shape[0] == span.shape[0]:
                return new
            span = new

    def subalgebra(self, basis_rows, name: str = "") -> "SubalgebraPresentation":
        return SubalgebraPresentation.build(self, basis_rows, name=name)

    def quotient_algebra(self, ideal_rows) -> tuple["Algebra", np.ndarray]:
        """A / I for a two-sided ideal I; returns (quotient, projection matrix)."""
        F = self.field
        q = F.quotient_by(self.dim, ideal_rows)
        sec = q.section
        d = q.dim
        struct = F.zeros((d, d, d))
        for i, j in product(range(d), repeat=2):
            struct[i, j] = q.project(self.mul(sec[:, i], sec[:, j]))
        return Algebra(F, struct, q.project(self.unit), name=f"{self.name}/I"), q.projection

    def structure_signature(self):
        return (str(self.field), self.dim)

    def same_as(self, other: "Algebra") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.field.equal(self.struct, other.struct)
            and self.field.equal(self.unit, other.unit)
        )


@dataclass
class AlgebraHom:
    """Unital algebra map; ``matrix`` is (target.dim, source.dim)."""

    source: Algebra
    target: Algebra
    matrix: np.ndarray

    def __call__(self, x):
        return self.source.field.mm(self.matrix, x)

    def check(self) -> CheckResult:
        F = self.source.field
        if self.matrix.shape != (self.target.dim, self.source.dim):
            return CheckResult("algebra-hom", False, "matrix has the wrong shape")
        if not F.equal(self(self.source.unit), self.target.unit):
            return CheckResult("algebra-hom", False, "unit not preserved", {"basis": "unit"})
        imgs = [self(self.source.basis(i)) for i in range(self.source.dim)]
        for i, j in product(range(self.source.dim), repeat=2):
            lhs = self(self.source.mul(self.source.basis(i), self.source.basis(j)))
            rhs = self.target.mul(imgs[i], imgs[j])
            if not F.equal(lhs, rhs):
                return CheckResult("algebra-hom", False, "product not preserved", {"pair": (i, j)})
        return CheckResult("algebra-hom", True)

    def compose(self, other: "AlgebraHom") -> "AlgebraHom":
        """self o other."""
        return AlgebraHom(other.source, self.target, self.source.field.mm(self.matrix, other.matrix))

    def is_bijective(self) -> bool:
        F = self.source.field
        return self.source.dim == self.target.dim and F.rank(self.matrix) == self.source.dim

    @classmethod
    def identity(cls, alg: Algebra) -> "AlgebraHom":
        return cls(alg, alg, alg.field.eye(alg.dim))


@dataclass
class SubalgebraPresentation:
    """A unital subalgebra: ``embedding`` columns are its basis in parent coordinates."""

    parent: Algebra
    embedding: np.ndarray
    algebra: Algebra

    @classmethod
    def build(cls, parent: Algebra, basis_rows, name: str = "", unit=None) -> "SubalgebraPresentation":
        """``unit`` defaults to the parent's unit; pass e for a corner algebra eAe."""
        F = parent.field
        rows = F.row_basis(np.asarray(basis_rows))
        emb = rows.T
        d = emb.shape[1]
        struct = F.zeros((d, d, d))
        try:
            for i, j in product(range(d), repeat=2):
                struct[i, j] = F.solve(emb, parent.mul(emb[:, i], emb[:, j]))
            unit = F.solve(emb, parent.unit if unit is None else unit)
        except NoSolution:
            raise ValueError("subspace is not a unital subalgebra") from None
        rep = None
        if parent.rep is not None:
            rep = F.reduce(np.tensordot(emb.T, parent.rep, axes=(1, 0)))
        return cls(parent, emb, Algebra(F, struct, unit, name=name, rep=rep))

    @property
    def dim(self) -> int:
        return self.embedding.shape[1]

    def inclusion(self) -> AlgebraHom:
        return AlgebraHom(self.algebra, self.parent, self.embedding)

    def contains(self, x) -> bool:
        return self.parent.field.span_contains(self.embedding, x)

    def coords(self, x):
        return self.parent.field.solve(self.embedding, x)


def check_algebra(a: Algebra) -> CheckResult:
    """Associativity on all basis triples and two-sided unit law."""
    F = a.field
    c = a.struct
    lhs = F.reduce(np.tensordot(c, c, axes=(2, 0)))  # (b_i b_j) b_k -> [i,j,k,m]
    rhs = F.reduce(np.transpose(np.tensordot(c, c, axes=(2, 1)), (2, 0, 1, 3)))  # b_i (b_j b_k)
    bad = np.argwhere(F.reduce(lhs - rhs) != 0)
    if len(bad):
        i, j, k = (int(t) for t in bad[0][:3])
        return CheckResult("associativity", False, f"(b{i} b{j}) b{k} != b{i} (b{j} b{k})", {"triple": (i, j, k)})
    for i in range(a.dim):
        e = a.basis(i)
        if not F.equal(a.mul(a.unit, e), e):
            return CheckResult("unit", False, f"unit does not act as identity on the left of b{i}", {"basis": i, "side": "left"})
        if not F.equal(a.mul(e, a.unit), e):
            return CheckResult("unit", False, f"unit does not act as identity on the right of b{i}", {"basis": i, "side": "right"})
    return CheckResult("algebra", True)


def opposite(a: Algebra) -> Algebra:
    rep = None
    if a.rep is not None:
        rep = np.ascontiguousarray(np.transpose(a.rep, (0, 2, 1)))
    return Algebra(a.field, np.ascontiguousarray(np.transpose(a.struct, (1, 0, 2))), a.unit, labels=a.labels, name=f"{a.name}^op", rep=rep)


# -- radical -------------------------------------------------------------------


def _int_matpow_trace(m, exponent: int, modulus: int) -> int:
    """Trace of m^exponent over Z, reduced modulo ``modulus`` (m has int entries)."""
    n = m.shape[0]
    base = np.array([[int(x) % modulus for x in row] for row in m], dtype=object)
    out = np.array([[1 if i == j else 0 for j in range(n)] for i in range(n)], dtype=object)
    e = exponent
    while e:
        if e & 1:
            out = (out @ base) % modulus
        base = (base @ base) % modulus
        e >>= 1
    return int(sum(out[i, i] for i in range(n))) % modulus


def jacobson_radical(a: Algebra) -> np.ndarray:
    """Basis rows of rad(A).

    Over Q: kernel of the trace form of the left regular representation.
    Over GF(p): the trace-function filtration I_0 > I_1 > ... > I_l with
    l = floor(log_p dim), using g_i(x) = Tr(x~^(p^i)) / p^i mod p on integer
    lifts of left-regular matrices.
    """
    F = a.field
    d = a.dim
    if d == 0:
        return F.zeros((0, 0))
    reg = a.left_regular
    if F.p is None:
        gram = F.zeros((d, d))
        for i, j in product(range(d), repeat=2):
            gram[i, j] = np.trace(reg[i] @ reg[j])
        return F.kernel(gram)
    p = F.p
    levels = 0
    while p ** (levels + 1) <= d:
        levels += 1
    current = F.eye(d)
    for i in range(levels + 1):
        if current.shape[0] == 0:
            break
        modulus = p ** (i + 1)
        m = F.zeros((current.shape[0], d))
        for s in range(current.shape[0]):
            for j in range(d):
                prod_mat = a.left_mat(a.mul(current[s], a.basis(j)))
                tr = _int_matpow_trace(prod_mat, p**i, modulus)
                if tr % (p**i):
                    raise ArithmeticError("trace function not divisible; inconsistent input")
                m[s, j] = (tr // p**i) % p
        alpha = F.kernel(m.T)
        current = F.row_basis(F.mm(alpha, current)) if alpha.shape[0] else F.zeros((0, d))
    return current


def radical_by_nilpotency(a: Algebra) -> np.ndarray:
    """Oracle: rad(A) = {x : x y nilpotent for all y}, by enumeration of A.

    Only for tiny algebras over finite fields.
    """
    F = a.field
    elems = list(F.enumerate_vectors(a.dim, bound=4096))

    def nilpotent(x):
        return F.is_zero(F.reduce(np.linalg.matrix_power(a.left_mat(x).astype(object), a.dim)))

    members = [x for x in elems if all(nilpotent(a.mul(x, y)) for y in elems)]
    return F.row_basis(np.stack(members)) if members else F.zeros((0, a.dim))


def image_algebra(field: Field, action, side: str = "right") -> Algebra:
    """The matrix algebra spanned by the action matrices of a module."""
    action = np.asarray(action)
    if action.shape[1] == 0:
        return Algebra(field, field.zeros((0, 0, 0)), field.zeros(0), name="0")
    mats = action if side == "left" else np.ascontiguousarray(np.transpose(action, (0, 2, 1)))
    # right actions compose in reverse, so transposes form an honest algebra
    return Algebra.from_matrices(field, mats, name="image")


def check_module_action(alg: Algebra, action, side: str = "right") -> CheckResult:
    F = alg.field
    action = np.asarray(action)
    m = action.shape[1] if action.ndim == 3 else 0
    if action.shape[0] != alg.dim:
        return CheckResult("module", False, "one action matrix per basis element required")
    unit_act = F.reduce(np.tensordot(alg.unit, action, axes=(0, 0)))
    if not F.equal(unit_act, F.eye(m)):
        return CheckResult("module-unit", False, "unit does not act as the identity")
    comb = F.reduce(np.tensordot(alg.struct, action, axes=(2, 0)))  # [i,j] -> act(b_i b_j)
    for i, j in product(range(alg.dim), repeat=2):
        if side == "right":
            prod_ij = F.mm(action[j], action[i])
        else:
            prod_ij = F.mm(action[i], action[j])
        if not F.equal(prod_ij, comb[i, j]):
            return CheckResult("module-assoc", False, f"action of b{i} b{j} mismatch ({side})", {"pair": (i, j)})
    return CheckResult("module", True)


def is_semisimple_module(alg: Algebra, action, side: str = "right") -> bool:
    """True iff the image of ``alg`` in End(M) has zero radical."""
    res = check_module_action(alg, action, side)
    if not res:
        raise ValueError(f"action violates the module axioms: {res.message}")
    img = image_algebra(alg.field, action, side)
    if img.dim == 0:
        return True
    return jacobson_radical(img).shape[0] == 0


def is_semisimple(a: Algebra) -> bool:
    return jacobson_radical(a).shape[0] == 0


# -- division rings and idempotents ---------------------------------------------


def _sympy_poly(field: Field, coeffs):
    x = sympy.Symbol("x")
    if field.p is None:
        return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain="QQ")
    return sympy.Poly([int(c) for c in reversed(coeffs)], x, modulus=field.p)


def _from_sympy(field: Field, poly) -> list:
    coeffs = list(reversed(poly.all_coeffs()))
    if field.p is None:
        return [field.scalar(sympy.Rational(c).p) / field.scalar(sympy.Rational(c).q) for c in coeffs]
    return [field.scalar(int(c)) for c in coeffs]


def polynomial_factors(field: Field, coeffs) -> list[list]:
    """Irreducible factors (with multiplicity collapsed) of a monic polynomial."""
    poly = _sympy_poly(field, coeffs)
    _, facs = poly.factor_list()
    return [_from_sympy(field, f.monic()) for f, _ in facs]


def frobenius_fixed(a: Algebra) -> np.ndarray:
    """Basis rows of {x : x^p = x} for a commutative algebra over GF(p)."""
    F = a.field
    frob = np.stack([a.power(a.basis(i), F.p) for i in range(a.dim)], axis=1)
    return F.kernel(F.reduce(frob - F.eye(a.dim)))


def _has_basis_zero_divisor(a: Algebra) -> bool:
    F = a.field
    prods = F.reduce(a.struct)
    return bool(np.any([F.is_zero(prods[i, j]) for i, j in product(range(a.dim), repeat=2)]))


def is_division_ring(a: Algebra, rng: np.random.Generator | None = None, samples: int = 64) -> bool:
    """Decide whether every nonzero element is invertible.

    Finite fields: exact via Wedderburn (a finite division ring is a field),
    i.e. commutative, semisimple and with one-dimensional Frobenius-fixed
    subalgebra.  Over Q the commutative case is exact (irreducible minimal
    polynomial of a primitive element); the noncommutative case returns False
    on any zero-divisor certificate and raises :class:`Undecided` otherwise.
    """
    F = a.field
    if a.dim == 0:
        return False
    if _has_basis_zero_divisor(a):
        return False
    if jacobson_radical(a).shape[0]:
        return False
    if F.p is not None:
        if not a.is_commutative():
            return False
        return frobenius_fixed(a).shape[0] == 1
    rng = rng or np.random.default_rng(0)
    if a.is_commutative():
        x = _primitive_element(a, rng)
        return len(polynomial_factors(F, a.minimal_polynomial(x))) == 1
    center = a.subalgebra(a.center())
    if center.dim > 1 and not is_division_ring(center.algebra, rng):
        return False
    candidates = [a.basis(i) for i in range(a.dim)]
    candidates += [F.random(a.dim, rng, bound=2) for _ in range(samples)]
    for x in candidates:
        if F.is_zero(x):
            continue
        mp = a.minimal_polynomial(x)
        if len(polynomial_factors(F, mp)) > 1 or (len(mp) > 1 and mp[0] == 0):
            return False
    raise Undecided("no zero divisor found; division over Q not certified")


def is_division_ring_by_enumeration(a: Algebra, bound: int = ENUMERATION_BOUND) -> bool:
    """Oracle: check every nonzero element for invertibility (finite fields)."""
    F = a.field
    if F.p is None:
        raise TooLargeToEnumerate("enumeration needs a finite field")
    if F.p**a.dim > bound:
        raise TooLargeToEnumerate(f"{F.p}^{a.dim} elements exceed the bound {bound}")
    if a.dim == 0:
        return False
    for x in F.enumerate_vectors(a.dim, bound):
        if F.is_zero(x):
            continue
        if not F.is_invertible(a.left_mat(x)):
            return False
    return True


def _primitive_element(a: Algebra, rng: np.random.Generator, tries: int = 200):
    """An element whose minimal polynomial has degree dim(a) (commutative, semisimple)."""
    F = a.field
    for x in [a.basis(i) for i in range(a.dim)]:
        if len(a.minimal_polynomial(x)) - 1 == a.dim:
            return x
    for _ in range(tries):
        x = F.random(a.dim, rng, bound=3)
        if len(a.minimal_polynomial(x)) - 1 == a.dim:
            return x
    raise Undecided("no primitive element found")


def _crt_idempotents(a: Algebra, e, x, factors) -> list:
    """Split idempotent e along the coprime factorization of minpoly(x) in eAe."""
    F = a.field
    polys = [_sympy_poly(F, f) for f in factors]
    whole = polys[0]
    for f in polys[1:]:
        whole = whole * f
    out = []
    for fi in polys:
        rest = whole.exquo(fi)
        s, _, _ = rest.gcdex(fi)
        # s*rest is 1 modulo fi and 0 modulo every other factor
        u = (s * rest).rem(whole)
        out.append(_eval_in_corner(a, e, x, _from_sympy(F, u)))
    return out


def _eval_in_corner(a: Algebra, e, x, coeffs):
    """Evaluate a polynomial at x inside the corner algebra with identity e."""
    F = a.field
    out = a.zero
    pw = e
    for c in coeffs:
        out = F.reduce(out + c * pw)
        pw = a.mul(pw, x)
    return out


def _corner_minpoly(a: Algebra, e, x) -> list:
    F = a.field
    pows = [e]
    while True:
        nxt = a.mul(pows[-1], x)
        basis = np.stack(pows, axis=1)
        try:
            coeffs = F.solve(basis, nxt)
        except NoSolution:
            pows.append(nxt)
            continue
        return [F.reduce(-c) for c in coeffs] + [F.scalar(1)]


def primitive_central_idempotents(a: Algebra, rng: np.random.Generator | None = None) -> list[np.ndarray]:
    """Primitive central idempotents of a semisimple algebra, in a canonical order.

    The result does not depend on ``rng`` (only the route to it may).
    """
    F = a.field
    if a.dim == 0:
        return []
    zsub = a.subalgebra(a.center())
    zbasis = [zsub.embedding[:, i] for i in range(zsub.dim)]
    if F.p is not None:
        fixed = frobenius_fixed(zsub.algebra)
        fixed_elems = [F.mm(zsub.embedding, f) for f in fixed]
        idems = [a.unit]
        for z in fixed_elems:
            nxt = []
            for e in idems:
                ez = a.mul(e, z)
                parts = [_eigen_idem(a, e, ez, r, F) for r in range(F.p)]
                nxt += [q for q in parts if not F.is_zero(q)]
            idems = nxt
    else:
        rng = rng or np.random.default_rng(0)
        idems = [a.unit]
        done = []
        while idems:
            e = idems.pop()
            corner = SubalgebraPresentation.build(a, np.stack([a.mul(e, z) for z in zbasis]), unit=e)
            if corner.dim == 1:
                done.append(e)
                continue
            x = F.mm(corner.embedding, _primitive_element(corner.algebra, rng))
            mp = _corner_minpoly(a, e, x)
            facs = polynomial_factors(F, mp)
            if len(facs) == 1:
                done.append(e)
                continue
            idems += _crt_idempotents(a, e, x, facs)
        idems = done
    return sorted(idems, key=lambda v: [F.format_scalar(t) for t in v])


def _eigen_idem(a: Algebra, e, ez, r, F: Field):
    """Projector onto the r-eigenspace of ez in eA, where ez^p = ez."""
    out = e
    for s in range(F.p):
        if s == r:
            continue
        factor = F.reduce(ez - s * e)
        out = a.mul(out, F.reduce(factor * F.inv(r - s)))
    return out


def find_nonunit(a: Algebra, rng: np.random.Generator, tries: int = 400):
    """A nonzero non-invertible element, or None if none was found.

    Uses minimal-polynomial factorizations of basis elements, then of random
    elements: a proper factor g of minpoly(x) gives g(x) != 0 with g(x) a
    zero divisor.
    """
    F = a.field
    candidates = [a.basis(i) for i in range(a.dim)]
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            candidates.append(F.reduce(a.basis(i) + a.basis(j)))
    for t in range(len(candidates) + tries):
        x = candidates[t] if t < len(candidates) else F.random(a.dim, rng)
        if F.is_zero(x):
            continue
        if not a.is_unit(x):
            return x
        mp = a.minimal_polynomial(x)
        facs = polynomial_factors(F, mp)
        if len(facs) > 1 or len(mp) - 1 > len(facs[0]) - 1:
            g = facs[0]
            y = a.evaluate_polynomial(g, x)
            if not F.is_zero(y):
                return y
    return None
