"""Shared builders and brute-force oracles for the test suite."""

from __future__ import annotations

from itertools import product

import numpy as np

from coring_lab.algebra import Algebra
from coring_lab.field import Field
from coring_lab.modules import Bimodule, direct_sum


def gf4() -> Algebra:
    return Algebra.polynomial_quotient(Field.gf(2), [1, 1], name="GF4")


def dual_numbers(p: int = 2) -> Algebra:
    return Algebra.polynomial_quotient(Field.gf(p), [0, 0], name="D", var="eps")


def right_regular(alg: Algebra, left: Algebra | None = None) -> Bimodule:
    """A as a k-A bimodule (or a left-algebra of dimension 1)."""
    F = alg.field
    k = left if left is not None else Algebra.ground(F)
    return Bimodule(k, alg, F.eye(alg.dim)[None, :, :], alg.right_regular, name=alg.name)


def simple_row_module(F: Field, n: int = 2) -> tuple[Algebra, Bimodule]:
    """M_n(k) and its simple right module of row vectors."""
    M = Algebra.matrix_algebra(F, n)
    ract = np.stack([F.cast(M.rep[i].T) for i in range(M.dim)])
    return M, Bimodule(Algebra.ground(F), M, F.eye(n)[None, :, :], ract, name="S")


# -- random algebras and bimodules for property tests -----------------------------------


def random_algebra(F: Field, rng: np.random.Generator) -> Algebra:
    """A small algebra of dimension at most 4 drawn from a few families."""
    kind = int(rng.integers(0, 5))
    if kind == 0:
        deg = int(rng.integers(1, 5))
        return Algebra.polynomial_quotient(F, [int(c) for c in rng.integers(0, F.p, deg)], name=f"poly{deg}")
    if kind == 1:
        return Algebra.upper_triangular(F, 2)
    if kind == 2:
        return Algebra.matrix_algebra(F, 2)
    if kind == 3:
        k = Algebra.ground(F)
        return Algebra.product(k, Algebra.polynomial_quotient(F, [int(c) for c in rng.integers(0, F.p, 2)]))
    return Algebra.ground(F)


def _idempotent_summands(A: Algebra) -> list[np.ndarray]:
    """Basis elements that are idempotent (e A is then a projective summand)."""
    F = A.field
    out = []
    for i in range(A.dim):
        e = A.basis(i)
        if F.equal(A.mul(e, e), e) and not F.equal(e, A.unit):
            out.append(e)
    return out


def random_projective_bimodule(F: Field, rng: np.random.Generator, max_dim: int = 6) -> Bimodule:
    """A B-A bimodule, f.g. projective on the right, in a random k-basis.

    Sigma is a direct sum of copies of A and of e A for idempotents e; B is
    k, A acting on the left of A^n, or M_n(k) mixing n equal summands.
    """
    A = random_algebra(F, rng)
    pieces = [F.eye(A.dim)]  # columns spanning A
    for e in _idempotent_summands(A):
        cols = F.row_basis(A.left_mat(e).T).T
        pieces.append(cols)
    reg = Bimodule.regular(A)
    while True:
        choice = int(rng.integers(0, len(pieces)))
        dim = pieces[choice].shape[1]
        n = int(rng.integers(1, max(1, max_dim // dim) + 1))
        if n * dim <= max_dim:
            break
    summand = reg.as_right().submodule(pieces[choice]) if choice else reg
    sigma = direct_sum(*([summand] * n)) if n > 1 else summand
    m = sigma.dim
    mode = int(rng.integers(0, 3))
    if mode == 1 and choice == 0:
        B, lact = A, sigma.lact
    elif mode == 2 and n > 1:
        B = Algebra.matrix_algebra(F, n)
        lact = np.stack([F.cast(np.kron(B.rep[i], F.eye(dim))) for i in range(B.dim)])
    else:
        B, lact = Algebra.ground(F), F.eye(m)[None, :, :]
    # random change of k-basis
    while True:
        P = F.random((m, m), rng, bound=F.p)
        if F.is_invertible(P):
            break
    Pinv = F.inverse(P)
    conj = lambda stack: np.stack([F.dot(P, s, Pinv) for s in stack])  # noqa: E731
    return Bimodule(B, A, conj(lact), conj(sigma.ract), name="Sigma")


# -- brute-force oracles ------------------------------------------------------------


def all_vectors(F: Field, n: int):
    for coords in product(range(F.p), repeat=n):
        yield F.array(list(coords))


def brute_kernel_size(F: Field, m) -> int:
    """Number of vectors x with m x = 0, by enumeration."""
    m = np.asarray(m)
    return sum(1 for x in all_vectors(F, m.shape[1]) if F.is_zero(F.mm(m, x)))


def tensor_dim_by_bilinear_relations(M: Bimodule, N: Bimodule) -> int:
    """dim M (x)_A N from the rank of the balancing relations in M (x)_k N.

    Independent of the generator-based presentation: relations
    (m_i a_t) (x) n_k - m_i (x) (a_t n_k) over all basis triples.
    """
    F = M.field
    A = M.right_alg
    m, n = M.dim, N.dim
    rows = []
    for t in range(A.dim):
        left = np.kron(M.ract[t], F.eye(n))
        right = np.kron(F.eye(m), N.lact[t])
        rows.append(F.reduce(left - right).T)
    rel = np.concatenate(rows) if rows else F.zeros((0, m * n))
    return m * n - (F.rank(rel) if rel.size else 0)


def ring_automorphisms_by_enumeration(A: Algebra) -> list[np.ndarray]:
    """Every k-linear bijection A -> A preserving unit and products."""
    F = A.field
    out = []
    d = A.dim
    for entries in product(range(F.p), repeat=d * d):
        g = F.array(list(entries)).reshape(d, d)
        if not F.equal(F.mm(g, A.unit), A.unit) or not F.is_invertible(g):
            continue
        if all(
            F.equal(F.mm(g, A.mul(A.basis(i), A.basis(j))), A.mul(F.mm(g, A.basis(i)), F.mm(g, A.basis(j))))
            for i in range(d)
            for j in range(d)
        ):
            out.append(g)
    return out
