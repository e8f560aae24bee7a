"""Bimodules, hom-spaces, duals, dual bases and tensor products over an algebra.

Every module is a :class:`Bimodule`.  A right A-module is a k-A-bimodule and a
left B-module is a B-k-bimodule, where k is the one-dimensional ground
algebra.  Left actions satisfy ``lact[i] @ lact[j] = act(b_i b_j)`` and right
actions satisfy ``ract[j] @ ract[i] = act(b_i b_j)`` (act on the right means
v.b_i.b_j = ract[j] @ ract[i] @ v).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import Algebra, check_module_action, opposite
from .field import Echelon, Field, NoSolution
from .report import CheckResult


# entries per block when generating balancing relations
RELATION_CHUNK = 8_000_000
GENERATOR_ROUNDS = 16  # candidate rounds drawn per batch in right_generators


class NotProjective(ValueError):
    """The module admits no finite dual basis."""


class Bimodule:
    def __init__(self, left_alg: Algebra, right_alg: Algebra, lact, ract, name: str = ""):
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.field: Field = right_alg.field
        self.lact = np.asarray(lact)
        self.ract = np.asarray(ract)
        self.name = name
        if self.lact.ndim != 3 or self.ract.ndim != 3:
            raise ValueError("action stacks must be 3-dimensional")
        self.dim = self.lact.shape[1]
        if self.ract.shape[1] != self.dim:
            raise ValueError("left and right actions act on spaces of different dimension")

    def __repr__(self):
        return f"Bimodule({self.name or '?'}, dim={self.dim})"

    # -- constructors ------------------------------------------------------

    @classmethod
    def regular(cls, a: Algebra) -> "Bimodule":
        """A as an A-A-bimodule."""
        return cls(a, a, a.left_regular, a.right_regular, name=a.name or "A")

    @classmethod
    def right_module(cls, a: Algebra, ract, name: str = "") -> "Bimodule":
        k = Algebra.ground(a.field)
        m = np.asarray(ract).shape[1]
        return cls(k, a, a.field.eye(m)[None], ract, name=name)

    @classmethod
    def left_module(cls, a: Algebra, lact, name: str = "") -> "Bimodule":
        k = Algebra.ground(a.field)
        m = np.asarray(lact).shape[1]
        return cls(a, k, lact, a.field.eye(m)[None], name=name)

    @classmethod
    def zero(cls, left_alg: Algebra, right_alg: Algebra) -> "Bimodule":
        F = right_alg.field
        return cls(left_alg, right_alg, F.zeros((left_alg.dim, 0, 0)), F.zeros((right_alg.dim, 0, 0)), name="0")

    # -- actions -----------------------------------------------------------

    def left_mat(self, b) -> np.ndarray:
        return self.field.tensordot(b, self.lact, (0, 0))

    def right_mat(self, a) -> np.ndarray:
        return self.field.tensordot(a, self.ract, (0, 0))

    def act_left(self, b, v) -> np.ndarray:
        return self.field.mm(self.left_mat(b), v)

    def act_right(self, v, a) -> np.ndarray:
        return self.field.mm(self.right_mat(a), v)

    def basis(self, i: int) -> np.ndarray:
        e = self.field.zeros(self.dim)
        e[i] = self.field.scalar(1)
        return e

    def check(self) -> CheckResult:
        F = self.field
        res = check_module_action(self.left_alg, self.lact, "left")
        if not res:
            return CheckResult("bimodule-left", False, res.message, res.witness)
        res = check_module_action(self.right_alg, self.ract, "right")
        if not res:
            return CheckResult("bimodule-right", False, res.message, res.witness)
        for i in range(self.left_alg.dim):
            for j in range(self.right_alg.dim):
                if not F.equal(F.mm(self.lact[i], self.ract[j]), F.mm(self.ract[j], self.lact[i])):
                    return CheckResult("bimodule-commute", False, f"left b{i} and right b{j} do not commute", {"pair": (i, j)})
        return CheckResult("bimodule", True)

    # -- derived modules ---------------------------------------------------

    def as_right(self) -> "Bimodule":
        return Bimodule.right_module(self.right_alg, self.ract, name=self.name)

    def as_left(self) -> "Bimodule":
        return Bimodule.left_module(self.left_alg, self.lact, name=self.name)

    def left_as_right_op(self) -> "Bimodule":
        """The left module structure viewed as a right module over the opposite algebra."""
        return Bimodule.right_module(opposite(self.left_alg), self.lact, name=f"{self.name}^op")

    def restrict_left(self, hom_matrix, new_left: Algebra) -> "Bimodule":
        """Pull the left action back along an algebra map new_left -> left_alg."""
        lact = self.field.tensordot(np.asarray(hom_matrix).T, self.lact, (1, 0))
        return Bimodule(new_left, self.right_alg, lact, self.ract, name=self.name)

    def restrict_right(self, hom_matrix, new_right: Algebra) -> "Bimodule":
        ract = self.field.tensordot(np.asarray(hom_matrix).T, self.ract, (1, 0))
        return Bimodule(self.left_alg, new_right, self.lact, ract, name=self.name)

    def submodule(self, basis_cols) -> "Bimodule":
        """The sub-bimodule on the span of ``basis_cols`` (assumed invariant), in those coordinates."""
        F = self.field
        cols = np.asarray(basis_cols)
        d = cols.shape[1]

        def restrict(stack):
            if d == 0:
                return F.zeros((stack.shape[0], 0, 0))
            return np.stack([F.solve(cols, F.mm(m, cols)) for m in stack])

        return Bimodule(self.left_alg, self.right_alg, restrict(self.lact), restrict(self.ract), name=f"sub({self.name})")

    def quotient(self, relation_rows) -> tuple["Bimodule", np.ndarray]:
        """M / U for an invariant subspace U; returns (quotient, projection matrix)."""
        F = self.field
        q = F.quotient_by(self.dim, relation_rows)
        proj, sec = q.projection, q.section

        def push(stack):
            return np.stack([F.dot(proj, m, sec) for m in stack]) if q.dim else F.zeros((stack.shape[0], 0, 0))

        return Bimodule(self.left_alg, self.right_alg, push(self.lact), push(self.ract), name=f"{self.name}/U"), proj

    def invariant_closure(self, vectors, sides=("left", "right")) -> np.ndarray:
        """Basis columns of the smallest sub-bimodule containing ``vectors``."""
        F = self.field
        gens = []
        if "left" in sides:
            gens += list(self.lact)
        if "right" in sides:
            gens += list(self.ract)
        span = F.row_basis(np.asarray(vectors).T) if np.asarray(vectors).size else F.zeros((0, self.dim))
        while True:
            if span.shape[0] == 0:
                return F.zeros((self.dim, 0))
            imgs = [F.mm(g, span.T).T for g in gens]
            new = F.row_basis(np.concatenate([span] + imgs))
            if new.shape[0] == span.shape[0]:
                return new.T
            span = new


def direct_sum(*mods: Bimodule) -> Bimodule:
    F = mods[0].field
    n = sum(m.dim for m in mods)
    L, R = mods[0].left_alg, mods[0].right_alg
    lact = F.zeros((L.dim, n, n))
    ract = F.zeros((R.dim, n, n))
    off = 0
    for m in mods:
        sl = slice(off, off + m.dim)
        lact[:, sl, sl] = m.lact
        ract[:, sl, sl] = m.ract
        off += m.dim
    return Bimodule(L, R, lact, ract, name=" + ".join(m.name or "?" for m in mods))


def free_right(a: Algebra, n: int) -> Bimodule:
    return direct_sum(*[Bimodule.regular(a).as_right() for _ in range(n)])


# -- hom spaces ------------------------------------------------------------------


def _intertwiner_system(F: Field, src_stack, tgt_stack):
    """Rows of the linear system N_j f = f M_j, in row-major vec(f) coordinates."""
    blocks = []
    for Mj, Nj in zip(src_stack, tgt_stack):
        n, m = Nj.shape[0], Mj.shape[0]
        blocks.append(F.reduce(np.kron(Nj, F.eye(m)) - np.kron(F.eye(n), Mj.T)))
    return blocks


def hom_over(M: Bimodule, N: Bimodule, side: str = "right") -> np.ndarray:
    """Basis of Hom(M, N) as a stack (h, dim N, dim M).

    ``side`` is "right", "left" or "both" (bimodule maps).
    """
    F = M.field
    blocks = []
    if side in ("right", "both"):
        blocks += _intertwiner_system(F, M.ract, N.ract)
    if side in ("left", "both"):
        blocks += _intertwiner_system(F, M.lact, N.lact)
    n, m = N.dim, M.dim
    if n * m == 0:
        return F.zeros((0, n, m))
    system = np.concatenate(blocks) if blocks else F.zeros((0, n * m))
    return F.kernel(system).reshape(-1, n, m)


def is_hom(M: Bimodule, N: Bimodule, f, side: str = "right") -> bool:
    F = M.field
    if side in ("right", "both"):
        if any(not F.equal(F.mm(Nj, f), F.mm(f, Mj)) for Mj, Nj in zip(M.ract, N.ract)):
            return False
    if side in ("left", "both"):
        if any(not F.equal(F.mm(Nj, f), F.mm(f, Mj)) for Mj, Nj in zip(M.lact, N.lact)):
            return False
    return True


def endomorphism_algebra(M: Bimodule, side: str = "right", name: str = "End") -> Algebra:
    """End(M) as an algebra under composition, with its matrices as ``rep``."""
    basis = hom_over(M, M, side)
    return Algebra.from_basis_matrices(M.field, basis, name=name)


class DualModule(Bimodule):
    """Sigma* = Hom_A(Sigma, A) for a B-A bimodule Sigma, as an A-B bimodule.

    ``functionals[s]`` is the (dim A, dim Sigma) matrix of the s-th basis
    functional; (a.phi.b)(u) = a phi(b.u).
    """

    def __init__(self, source: Bimodule):
        F = source.field
        A = source.right_alg
        B = source.left_alg
        self.source = source
        self.functionals = hom_over(source.as_right(), Bimodule.regular(A).as_right(), "right")
        h = self.functionals.shape[0]
        flat = self.functionals.reshape(h, -1).T  # columns are vec(phi_s)
        self._flat = flat
        lact = F.zeros((A.dim, h, h))
        for i in range(A.dim):
            imgs = F.tensordot(A.left_regular[i], self.functionals, (1, 1))  # (dA, h, m)
            imgs = np.transpose(imgs, (1, 0, 2)).reshape(h, -1).T
            lact[i] = F.solve(flat, imgs) if h else lact[i]
        ract = F.zeros((B.dim, h, h))
        for j in range(B.dim):
            imgs = F.tensordot(self.functionals, source.lact[j], (2, 0)).reshape(h, -1).T
            ract[j] = F.solve(flat, imgs) if h else ract[j]
        super().__init__(A, B, lact, ract, name=f"{source.name}*")

    def functional(self, coords) -> np.ndarray:
        """The (dim A, dim Sigma) matrix of the functional with these coordinates."""
        return self.field.tensordot(coords, self.functionals, (0, 0))

    def coords(self, fmat) -> np.ndarray:
        return self.field.solve(self._flat, np.asarray(fmat).reshape(-1))

    def evaluate(self, coords, u) -> np.ndarray:
        return self.field.mm(self.functional(coords), u)


class LeftDualModule(Bimodule):
    """*Y = Hom_A(Y, A) for an A-B bimodule Y (left A-linear maps), as a B-A bimodule.

    (b.f.a)(y) = f(y.b) a.
    """

    def __init__(self, source: Bimodule):
        F = source.field
        A = source.left_alg
        B = source.right_alg
        self.source = source
        self.functionals = hom_over(source.as_left(), Bimodule.regular(A).as_left(), "left")
        h = self.functionals.shape[0]
        flat = self.functionals.reshape(h, -1).T
        self._flat = flat
        ract = F.zeros((A.dim, h, h))
        for i in range(A.dim):
            imgs = F.tensordot(A.right_regular[i], self.functionals, (1, 1))
            imgs = np.transpose(imgs, (1, 0, 2)).reshape(h, -1).T
            ract[i] = F.solve(flat, imgs) if h else ract[i]
        lact = F.zeros((B.dim, h, h))
        for j in range(B.dim):
            imgs = F.tensordot(self.functionals, source.ract[j], (2, 0)).reshape(h, -1).T
            lact[j] = F.solve(flat, imgs) if h else lact[j]
        super().__init__(B, A, lact, ract, name=f"*{source.name}")

    def functional(self, coords) -> np.ndarray:
        return self.field.tensordot(coords, self.functionals, (0, 0))

    def coords(self, fmat) -> np.ndarray:
        return self.field.solve(self._flat, np.asarray(fmat).reshape(-1))


# -- dual bases, projectivity, faithful flatness -----------------------------------


@dataclass
class DualBasis:
    """Pairs (e_i, e_i*) with u = sum_i e_i . e_i*(u) for all u.

    ``elements`` is (r, dim Sigma); ``functionals`` is (r, dim Sigma*) in the
    coordinates of ``dual``.
    """

    dual: DualModule
    elements: np.ndarray
    functionals: np.ndarray

    @property
    def size(self) -> int:
        return self.elements.shape[0]

    def check(self) -> CheckResult:
        sigma = self.dual.source
        F = sigma.field
        for c in range(sigma.dim):
            u = sigma.basis(c)
            total = F.zeros(sigma.dim)
            for e, phi in zip(self.elements, self.functionals):
                total = F.reduce(total + sigma.act_right(e, self.dual.evaluate(phi, u)))
            if not F.equal(total, u):
                return CheckResult("dual-basis", False, f"sum e_i e_i*(u) != u for basis vector {c}", {"basis": c})
        return CheckResult("dual-basis", True)


def dual_basis(sigma: Bimodule, dual: DualModule | None = None, generators=None) -> DualBasis:
    """A dual basis of sigma as a right module, or raise :class:`NotProjective`.

    The elements are the columns of ``generators`` (default: the k-basis);
    the functionals solve sum_j m_j phi_j(u) = u for every basis vector u.
    """
    F = sigma.field
    dual = dual if dual is not None else DualModule(sigma)
    m = sigma.dim
    gens = F.eye(m) if generators is None else np.asarray(generators)
    g = gens.shape[1]
    h = dual.functionals.shape[0]
    if m == 0:
        return DualBasis(dual, F.zeros((0, 0)), F.zeros((0, h)))
    # action[t] @ gens -> (dA, m, g)
    acted = F.tensordot(sigma.ract, gens, (2, 0))
    # coefficient of x_{j,s} in row (c, row): sum_t F_s[t, c] acted[t, row, j]
    coef = F.tensordot(dual.functionals, acted, (1, 0))  # (h, m_c, m_row, g)
    system = np.transpose(coef, (1, 2, 3, 0)).reshape(m * m, g * h)
    rhs = F.eye(m).T.reshape(m * m)  # row (c, row) -> delta(c, row)
    try:
        x = F.solve(system, rhs)
    except NoSolution:
        raise NotProjective(f"{sigma.name or 'module'} is not projective") from None
    x = x.reshape(g, h)
    keep = [j for j in range(g) if not F.is_zero(x[j])]
    return DualBasis(dual, gens.T[keep], x[keep])


def is_projective(M: Bimodule, side: str = "right") -> bool:
    mod = M.as_right() if side == "right" else M.left_as_right_op()
    try:
        dual_basis(mod)
    except NotProjective:
        return False
    return True


def is_flat_fd(M: Bimodule, side: str = "left") -> bool:
    """Flatness of a finite-dimensional module, decided as projectivity."""
    return is_projective(M, side)


def trace_ideal(M: Bimodule, side: str = "right") -> np.ndarray:
    """Basis rows of the span of phi(m) over all module functionals phi."""
    mod = M.as_right() if side == "right" else M.left_as_right_op()
    F = M.field
    funcs = hom_over(mod, Bimodule.regular(mod.right_alg).as_right(), "right")
    d = mod.right_alg.dim
    if funcs.shape[0] == 0 or mod.dim == 0:
        return F.zeros((0, d))
    vals = np.transpose(funcs, (0, 2, 1)).reshape(-1, d)
    return F.row_basis(vals)


def is_faithfully_flat_fgp(M: Bimodule, side: str = "left") -> bool:
    """Projective with full trace ideal (f.g. projective generator)."""
    if not is_projective(M, side):
        return False
    alg = M.right_alg if side == "right" else M.left_alg
    return trace_ideal(M, side).shape[0] == alg.dim


# -- tensor products ---------------------------------------------------------------


def right_generators(M: Bimodule, seed: int = 0) -> np.ndarray:
    """Columns generating M as a right module, chosen greedily with a fixed seed."""
    F = M.field
    A = M.right_alg
    if A.dim == 1 or M.dim == 0:
        return F.eye(M.dim)
    rng = np.random.default_rng(seed)
    gens = []
    span = Echelon(F, M.dim)
    d = A.dim
    act = F.left_multiplier(M.ract.reshape(d * M.dim, M.dim))

    def orbit(v):
        return act(v).reshape(d, M.dim)  # (dA, m)

    pending = []
    while span.rank < M.dim:
        if not pending:
            # candidates for several rounds at once, drawn in the same order as round by round
            cands = np.stack([F.random(M.dim, rng) for _ in range(4 * GENERATOR_ROUNDS)], axis=1)
            orbits = act(cands).reshape(d, M.dim, GENERATOR_ROUNDS, 4)
            pending = [(cands[:, 4 * r : 4 * r + 4], orbits[:, :, r]) for r in reversed(range(GENERATOR_ROUNDS))]
        cands, orbits = pending.pop()
        residual = span.reduce(np.transpose(orbits, (2, 0, 1)).reshape(4 * d, M.dim))
        best = None
        for j in range(4):
            g = F.rank(residual[j * d : (j + 1) * d])
            if best is None or g > best[1]:
                best = (cands[:, j], g, orbits[:, :, j])
        if best[1] == 0:
            c = next(c for c in range(M.dim) if not F.is_zero(span.reduce(M.basis(c)[None, :])))
            best = (M.basis(c), None, orbit(M.basis(c)))
        gens.append(best[0])
        span.add(best[2])
    return np.stack(gens, axis=1)


def batched_right_generators(M: Bimodule, seed: int = 0) -> np.ndarray:
    """Columns generating M as a right module, drawn in batches of random candidates.

    Much faster than :func:`right_generators` on large modules but the list may
    be longer; meant for intermediate tensor products whose coordinates are
    never reported.
    """
    F = M.field
    A = M.right_alg
    if A.dim == 1 or M.dim == 0:
        return F.eye(M.dim)
    rng = np.random.default_rng(seed)
    d, m = A.dim, M.dim
    act = F.left_multiplier(M.ract.reshape(d * m, m))
    span = Echelon(F, m)
    gens = []
    while span.rank < m:
        count = -(-(m - span.rank) // d)  # fewest generators that could finish the span
        cands = F.random((m, count), rng)
        residual = span.reduce(np.transpose(act(cands).reshape(d, m, count), (2, 0, 1)).reshape(count * d, m))
        _, rows = F.rref(residual.T)  # pivot columns of the transpose = independent rows
        if not rows:
            c = next(c for c in range(m) if not F.is_zero(span.reduce(M.basis(c)[None, :])))
            gens.append(M.basis(c)[:, None])
            span.add(act(M.basis(c)).reshape(d, m))
            continue
        gens.append(cands[:, sorted({r // d for r in rows})])
        span.add(residual[rows])
    return np.concatenate(gens, axis=1)


class TensorProduct(Bimodule):
    """M (x)_A N for an X-A bimodule M and an A-Y bimodule N, as an X-Y bimodule.

    Presentation: generators G_1..G_g of M_A give a surjection A^g -> M with
    kernel K, so M (x)_A N = N^g / {(kappa_i . y)_i : kappa in K, y in N}.
    The ambient coordinate (i, k) stands for G_i (x) f_k.
    """

    def __init__(self, M: Bimodule, N: Bimodule, generators=None):
        if M.right_alg.dim != N.left_alg.dim:
            raise ValueError("tensor factors over different algebras")
        F = M.field
        A = M.right_alg
        self.M, self.N, self.over = M, N, A
        G = right_generators(M) if generators is None else np.asarray(generators)
        self.generators = G
        g, m, n, d = G.shape[1], M.dim, N.dim, A.dim
        self.ngens = g
        phi = np.transpose(F.tensordot(M.ract, G, (2, 0)), (1, 2, 0)).reshape(m, g * d)  # column (i, t)
        if d == 1 and F.equal(G, F.eye(m)):
            expr = F.eye(m).reshape(m, m, 1)
            kernel = F.zeros((0, g, d))
        else:
            expr, kernel = F.solve(phi, F.eye(m), with_kernel=True)
            expr = expr.T.reshape(m, g, d)
            kernel = kernel.reshape(-1, g, d)
        self.expressions = expr
        self.kernel = kernel
        # relation (kappa, k): block i = sum_t kappa[i, t] lact_N[t] f_k, kept as a reduced
        # echelon basis built chunk by chunk so the full relation list is never stored
        relations = Echelon(F, g * n)
        if kernel.shape[0] and n:
            # factor the action as lact = U S through its row space, so that only a basis
            # of the span of the kappa U is needed
            flat = N.lact.reshape(d, n * n)
            S = F.row_basis(flat)
            U = F.solve(S.T, flat.T).T if S.shape[0] else F.zeros((d, 0))
            rho = S.shape[0]
            weights = F.row_basis(F.tensordot(kernel, U, (2, 0)).reshape(-1, g * rho)).reshape(-1, g, rho)
            S = S.reshape(rho, n, n)
            step = max(1, RELATION_CHUNK // max(1, g * n * n))
            for start in range(0, weights.shape[0], step):
                block = F.tensordot(weights[start : start + step], S, (2, 0))  # (r, g, n, n)
                block = np.transpose(block, (0, 3, 1, 2)).reshape(-1, g * n)
                block = block[(block != 0).any(axis=1)]
                if block.shape[0]:
                    relations.add(block)
        rel, piv = relations.matrix()
        self.relations = rel
        self.quotient = F.quotient_by(g * n, rel, pivots=piv)
        self.ambient_dim = g * n
        self._init_dim = self.quotient.dim
        # Actions are filled lazily; see lact/ract properties.
        self.left_alg = M.left_alg
        self.right_alg = N.right_alg
        self.field = F
        self.name = f"{M.name or '?'}(x){N.name or '?'}"
        self.dim = self.quotient.dim

    # lazy outer actions -------------------------------------------------------

    @cached_property
    def lact(self):
        F = self.field
        amb = self.section_blocks
        out = []
        for s in range(self.M.left_alg.dim):
            LG = F.mm(self.M.lact[s], self.generators)
            out.append(self.embed(F.tensordot(LG, amb, (1, 0))))
        return np.stack(out) if out else self.field.zeros((0, self.dim, self.dim))

    @cached_property
    def ract(self):
        F = self.field
        g, n = self.ngens, self.N.dim
        out = []
        for s in range(self.N.right_alg.dim):
            blk = self.quotient.section.reshape(g, n, self.dim)
            moved = np.transpose(F.tensordot(self.N.ract[s], blk, (1, 1)), (1, 0, 2))
            out.append(self.quotient.project(moved.reshape(g * n, self.dim)))
        return np.stack(out) if out else self.field.zeros((0, self.dim, self.dim))

    # coordinates --------------------------------------------------------------

    @cached_property
    def section_blocks(self) -> np.ndarray:
        """(g, dim N, dim) ambient blocks y_i with basis vector q = sum_i G_i (x) y_i."""
        return self.quotient.section.reshape(self.ngens, self.N.dim, self.dim)

    def project(self, amb) -> np.ndarray:
        return self.quotient.project(amb)

    def embed(self, pairs) -> np.ndarray:
        """Tensor classes of sum_{c,k} pairs[c, k, ...] m_c (x) n_k (trailing axes kept)."""
        F = self.field
        pairs = np.asarray(pairs)
        vector = pairs.ndim == 2
        if vector:
            pairs = pairs[..., None]
        r = pairs.shape[2]
        z = F.tensordot(self.expressions, pairs, (0, 0))  # (g, dA, n, r)
        amb = F.tensordot(z, self.N.lact, ([1, 2], [0, 2]))  # (g, r, n)
        amb = np.transpose(amb, (0, 2, 1)).reshape(self.ambient_dim, r)
        out = self.project(amb)
        return out[:, 0] if vector else out

    def embed_ambient(self, pairs) -> np.ndarray:
        """Like :meth:`embed` but returns ambient N^g coordinates before projection."""
        F = self.field
        pairs = np.asarray(pairs)
        z = F.tensordot(self.expressions, pairs, (0, 0))
        amb = F.tensordot(z, self.N.lact, ([1, 2], [0, 2]))
        return np.transpose(amb, (0, 2, 1)).reshape(self.ambient_dim, -1)

    def pure(self, x, y) -> np.ndarray:
        return self.embed(np.multiply.outer(x, y))

    # maps -----------------------------------------------------------------------

    def _blocks(self, vecs=None) -> np.ndarray:
        """Section blocks of the basis, or of the columns ``vecs`` when given."""
        if vecs is None:
            return self.section_blocks
        return self.field.tensordot(self.section_blocks, np.asarray(vecs), (2, 0))

    def induced(self, f, h, target: "TensorProduct", vecs=None) -> np.ndarray:
        """Matrix of f (x) h into ``target`` for f right-linear on M and h left-linear on N.

        With ``vecs`` (columns of M (x) N) only their images are computed.
        """
        F = self.field
        fG = F.mm(f, self.generators)  # (m', g)
        hy = F.tensordot(h, self._blocks(vecs), (1, 1))  # (n', g, q)
        return target.embed(F.tensordot(fG, hy, (1, 1)))

    def apply_right_factor(self, f, PQ: "TensorProduct", target: "TensorProduct", vecs=None) -> np.ndarray:
        """M (x) f : M (x) N -> (M (x) P) (x) Q for f: N -> P (x) Q left-linear.

        ``target`` must be tensor(tensor(M, P), Q) and PQ = tensor(P, Q).
        With ``vecs`` (columns of M (x) N) only their images are computed.
        """
        F = self.field
        MP = target.M
        G, G2 = self.generators, PQ.generators
        outer = F.einsum("ai,bj->abij", G, G2).reshape(G.shape[0], G2.shape[0], -1)
        units = MP.embed(outer).T.reshape(self.ngens, PQ.ngens, MP.dim)  # (g, g', dim MP)
        blocks = self._blocks(vecs)
        cols = blocks.shape[2]
        fy = F.tensordot(f, blocks, (1, 1))  # (dim PQ, g, cols)
        lifted = PQ.quotient.lift(fy.reshape(PQ.dim, -1)).reshape(PQ.ngens, PQ.N.dim, self.ngens, cols)
        pairs = F.einsum("ijm,jkiq->mkq", units, lifted)
        return target.embed(pairs)

    def contract_left(self, f) -> np.ndarray:
        """x (x) y -> f(x) . y for f: M -> A right-linear; matrix (dim N, dim)."""
        F = self.field
        fG = F.mm(f, self.generators)  # (dA, g)
        acts = F.tensordot(fG, self.N.lact, (0, 0))  # (g, n, n)
        return F.einsum("ikl,ilq->kq", acts, self.section_blocks)

    def contract_right(self, h) -> np.ndarray:
        """x (x) y -> x . h(y) for h: N -> A left-linear; matrix (dim M, dim)."""
        F = self.field
        hy = F.tensordot(h, self.section_blocks, (1, 1))  # (dA, g, q)
        acted = F.tensordot(self.M.ract, self.generators, (2, 0))  # (dA, m, g)
        return F.einsum("tmi,tiq->mq", acted, hy)

    def descend(self, amb_images) -> np.ndarray:
        """Map on the tensor product induced by a map on ambient coordinates.

        Raises ValueError if the relations are not annihilated.
        """
        F = self.field
        amb_images = np.asarray(amb_images)
        if self.relations.shape[0] and not F.is_zero(F.mm(amb_images, self.relations.T)):
            raise ValueError("map does not annihilate the balancing relations")
        return F.mm(amb_images, self.quotient.section)

    def from_ambient(self, amb) -> np.ndarray:
        return self.project(amb)

    def basis_pairs(self):
        """For each basis vector, the pairs (G_i, y_i) of its section."""
        return self.generators, self.section_blocks


def tensor(M: Bimodule, N: Bimodule) -> TensorProduct:
    return TensorProduct(M, N)


def unit_iso_left(N: Bimodule, AN: TensorProduct) -> np.ndarray:
    """A (x)_A N -> N, a (x) y -> a y."""
    return AN.contract_left(AN.M.field.eye(AN.M.dim))


def unit_iso_right(M: Bimodule, MA: TensorProduct) -> np.ndarray:
    """M (x)_A A -> M, x (x) a -> x a."""
    return MA.contract_right(MA.N.field.eye(MA.N.dim))
