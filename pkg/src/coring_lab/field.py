"""Exact scalar arithmetic and dense linear algebra over Q and GF(p).

Matrices are plain numpy arrays.  Over GF(p) they hold int64 residues in
[0, p); over Q they are object arrays of :class:`fractions.Fraction`.  All
elimination uses the leftmost-pivot convention, so every derived basis
(kernels, quotient sections, solutions) is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product

import numpy as np


class NoSolution(ValueError):
    """Raised by :meth:`Field.solve` when ``b`` is outside the column space."""


class TooLargeToEnumerate(RuntimeError):
    """An exhaustive search would exceed the enumeration bound."""


class Undecided(RuntimeError):
    """A decision procedure could not reach a verdict."""


ENUMERATION_BOUND = 10**6
# column-panel width for blocked elimination over GF(p)
PANEL_WIDTH = 32


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p is None``) or the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus is not prime")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, spec: str) -> "Field":
        spec = spec.strip()
        if spec.upper() in ("Q", "QQ"):
            return cls(None)
        if spec.upper().startswith("GF:"):
            return cls(int(spec[3:]))
        raise ValueError(f"unknown field spec {spec!r}")

    def __str__(self):
        return "Q" if self.p is None else f"GF:{self.p}"

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> int | None:
        return self.p

    @property
    def dtype(self):
        if self.p is not None and self.p < 2**16:
            return np.int64
        return object

    # -- scalars -----------------------------------------------------------

    def scalar(self, x):
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} is not defined in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def parse_scalar(self, text):
        if isinstance(text, (int, Fraction)):
            return self.scalar(text)
        return self.scalar(Fraction(str(text).strip()))

    def format_scalar(self, x) -> str:
        if self.p is None:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(int(x) % self.p)

    def elements(self):
        if self.p is None:
            raise TooLargeToEnumerate("Q is infinite")
        return range(self.p)

    # -- arrays ------------------------------------------------------------

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        if self.p is None:
            out = np.empty(arr.shape, dtype=object)
            for idx in np.ndindex(arr.shape):
                out[idx] = Fraction(arr[idx])
            return out
        flat = [self.scalar(x) for x in arr.ravel()]
        return np.array(flat, dtype=self.dtype).reshape(arr.shape)

    def parse_array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        flat = [self.parse_scalar(x) for x in arr.ravel()]
        return self.array(np.array(flat, dtype=object).reshape(arr.shape))

    def format_array(self, arr):
        return np.vectorize(self.format_scalar, otypes=[object])(arr).tolist() if arr.size else np.asarray(arr).tolist()

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0) if self.p is None else 0)
            return out
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.scalar(1)
        return out

    def reduce(self, arr):
        """Normalize an array produced by ring operations."""
        if self.p is None:
            return arr
        if self.dtype is object:
            return np.vectorize(lambda x: int(x) % self.p, otypes=[object])(arr)
        return np.asarray(arr) % self.p

    def cast(self, arr) -> np.ndarray:
        """Coerce integer-valued arrays (e.g. from numpy helpers) into the field."""
        if self.p is None:
            return self.array(arr)
        return self.reduce(np.asarray(arr).astype(self.dtype))

    def _exact_float_ok(self, a, b, inner: int) -> bool:
        """True when an integer product can be formed exactly in float64 (BLAS)."""
        if self.p is None or self.dtype is object or a.size == 0 or b.size == 0:
            return False
        bound = int(np.abs(a).max()) * int(np.abs(b).max()) * max(inner, 1)
        return bound < 2**52

    def mm(self, a, b) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        if a.ndim >= 1 and b.ndim >= 1 and self._exact_float_ok(a, b, a.shape[-1]):
            out = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
            return out % self.p
        return self.reduce(a @ b)

    def left_multiplier(self, a):
        """A function b -> a @ b (reduced) that converts ``a`` once for repeated use."""
        a = np.asarray(a)
        if self.p is not None and self.dtype is not object and a.size:
            af = a.astype(np.float64)
            amax = int(np.abs(a).max())

            def apply(b):
                b = np.asarray(b)
                if b.size and amax * int(np.abs(b).max()) * max(a.shape[-1], 1) < 2**52:
                    return np.rint(af @ b.astype(np.float64)).astype(np.int64) % self.p
                return self.reduce(a @ b)

            return apply
        return lambda b: self.mm(a, b)

    def dot(self, *mats) -> np.ndarray:
        out = mats[0]
        for m in mats[1:]:
            out = self.mm(out, m)
        return out

    def tensordot(self, a, b, axes) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        if isinstance(axes, int):
            inner = int(np.prod(a.shape[a.ndim - axes :])) if axes else 1
        else:
            ax = axes[0] if isinstance(axes[0], (list, tuple)) else [axes[0]]
            inner = int(np.prod([a.shape[i] for i in ax]))
        if self._exact_float_ok(a, b, inner):
            out = np.tensordot(a.astype(np.float64), b.astype(np.float64), axes=axes)
            return np.rint(out).astype(np.int64) % self.p
        return self.reduce(np.tensordot(a, b, axes=axes))

    def einsum(self, spec: str, *ops) -> np.ndarray:
        """``np.einsum`` followed by reduction, via exact float64 when entries allow it."""
        ops = [np.asarray(o) for o in ops]
        inputs, output = spec.split("->")
        sizes = {}
        for labels, o in zip(inputs.split(","), ops):
            sizes.update(zip(labels, o.shape))
        inner = int(np.prod([n for c, n in sizes.items() if c not in output]))
        if self.p is not None and self.dtype is not object and all(o.size for o in ops):
            bound = max(inner, 1)
            for o in ops:
                bound *= int(np.abs(o).max())
            if bound < 2**52:
                out = np.einsum(spec, *[o.astype(np.float64) for o in ops], optimize=True)
                return np.rint(out).astype(np.int64) % self.p
        return self.reduce(np.einsum(spec, *ops))

    def is_zero(self, arr) -> bool:
        return not np.any(np.asarray(arr) != 0)

    def equal(self, a, b) -> bool:
        a, b = np.asarray(a), np.asarray(b)
        return a.shape == b.shape and self.is_zero(self.reduce(a - b))

    def random(self, shape, rng: np.random.Generator, bound: int = 3) -> np.ndarray:
        """Uniform residues over GF(p); small integers in [-bound, bound] over Q."""
        if self.p is None:
            return self.array(rng.integers(-bound, bound + 1, size=shape))
        return self.cast(rng.integers(0, self.p, size=shape))

    def enumerate_vectors(self, n: int, bound: int = ENUMERATION_BOUND):
        """Yield every vector of F^n in lexicographic order (finite fields only)."""
        if self.p is None:
            raise TooLargeToEnumerate("cannot enumerate vectors over Q")
        if self.p**n > bound:
            raise TooLargeToEnumerate(f"{self.p}^{n} vectors exceed the bound {bound}")
        for coords in product(range(self.p), repeat=n):
            yield self.array(list(coords))

    # -- elimination -------------------------------------------------------

    def rref(self, m) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form with leftmost pivots; returns (R, pivot_cols)."""
        a = np.array(m, dtype=self.dtype, copy=True)
        if a.ndim != 2:
            raise ValueError("rref expects a 2-d array")
        finite = self.p is not None and self.dtype is not object
        rows, cols = a.shape
        if finite and rows > 2 * cols and cols:
            # tall input: grow an echelon basis of the row space chunk by chunk
            ech = Echelon(self, cols)
            for start in range(0, rows, cols):
                ech.add(self.reduce(a[start : start + cols]))
                if ech.rank == cols:
                    break
            basis, pivots = ech.matrix()
            out = self.zeros((rows, cols))
            out[: len(pivots)] = basis
            return out, pivots
        if finite and min(rows, cols) > 2 * PANEL_WIDTH:
            return self._rref_blocked(self.reduce(a))
        return self._rref_small(a)

    def _pivot_rows(self, block) -> np.ndarray:
        """Indices of rows of ``block`` picked as pivots by plain elimination."""
        a = block.copy()
        order = np.arange(a.shape[0])
        r = 0
        for c in range(a.shape[1]):
            if r == a.shape[0]:
                break
            nz = np.flatnonzero(a[r:, c] != 0)
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
                order[[r, piv]] = order[[piv, r]]
            a[r, c:] = self.reduce(a[r, c:] * self.inv(a[r, c]))
            below = np.flatnonzero(a[r + 1 :, c] != 0) + r + 1
            if below.size:
                a[below, c:] = self.reduce(a[below, c:] - np.outer(a[below, c], a[r, c:]))
            r += 1
        return order[:r]

    def _rref_blocked(self, a) -> tuple[np.ndarray, list[int]]:
        """Panel-wise elimination over GF(p).

        Pivot rows are found on a narrow column panel, row-reduced among
        themselves, then cleared from every other row by one matrix product.
        Values stay in [0, p), so products are exact in float64 when p is small.
        """
        p = self.p
        exact_float = p * p * PANEL_WIDTH < 2**52
        work = a.astype(np.float64) if exact_float else a.astype(np.int64)

        def mod(x):
            return x - np.floor(x / p) * p if exact_float else x % p

        rows, cols = work.shape
        live = np.flatnonzero((work != 0).any(axis=1))  # candidate pivot rows
        pivot_rows: list[int] = []
        pivots: list[int] = []
        for c0 in range(0, cols, PANEL_WIDTH):
            if live.size == 0:
                break
            c1 = min(c0 + PANEL_WIDTH, cols)
            sel = self._pivot_rows(work[live, c0:c1].astype(np.int64))
            if sel.size == 0:
                continue
            picked = live[sel]
            if exact_float:
                # reduce only the panel, tracking the row operations, then apply them in one product
                k = picked.size
                panel = np.concatenate([work[picked, c0:c1].astype(np.int64), np.eye(k, dtype=np.int64)], axis=1)
                reduced, rel_piv = self._rref_small(panel)
                fresh = mod(reduced[:, c1 - c0 :].astype(np.float64) @ work[picked, c0:])
            else:
                fresh, rel_piv = self._rref_small(work[picked, c0:].astype(np.int64))
                fresh = fresh[: len(rel_piv)].astype(work.dtype)
            new_piv = [c0 + c for c in rel_piv]
            work[picked, c0:] = fresh
            keep = np.ones(rows, dtype=bool)
            keep[picked] = False
            live = live[keep[live]]
            # rows outside the pivot set vanish on columns < c0, so only columns >= c0 change;
            # a row with no entry in the new pivot columns is left untouched
            touched_live = None
            for idx in (live, np.array(pivot_rows, dtype=int)):
                if idx.size:
                    coef = work[np.ix_(idx, new_piv)]
                    hit = (coef != 0).any(axis=1)
                    idx = idx[hit]
                    if idx.size:
                        work[idx, c0:] = mod(work[idx, c0:] - coef[hit] @ fresh)
                if touched_live is None:
                    touched_live = idx
            if touched_live is not None and touched_live.size:
                dead = touched_live[~(work[touched_live, c1:] != 0).any(axis=1)]
                live = np.setdiff1d(live, dead, assume_unique=True)
            pivot_rows += [int(i) for i in picked]
            pivots += new_piv
        out = self.zeros((rows, cols))
        out[: len(pivot_rows)] = work[pivot_rows].astype(np.int64)
        return out, pivots

    def _rref_small(self, a) -> tuple[np.ndarray, list[int]]:
        rows, cols = a.shape
        pivots: list[int] = []
        r = 0
        c = 0
        while r < rows and c < cols:
            live = np.flatnonzero((a[r:, c:] != 0).any(axis=0))
            if live.size == 0:
                break
            c += int(live[0])
            piv = r + int(np.flatnonzero(a[r:, c] != 0)[0])
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
            inv = self.inv(a[r, c])
            a[r, c:] = self.reduce(a[r, c:] * inv)
            col = a[:, c].copy()
            col[r] = 0
            hit = np.flatnonzero(col != 0)
            if hit.size:
                a[hit, c:] = self.reduce(a[hit, c:] - np.outer(col[hit], a[r, c:]))
            pivots.append(c)
            r += 1
            c += 1
        return a, pivots

    def rank(self, m) -> int:
        m = np.asarray(m)
        if m.size == 0:
            return 0
        return len(self.rref(m)[1])

    def row_basis(self, m) -> np.ndarray:
        """Reduced basis (rows) of the row space."""
        m = np.asarray(m)
        if m.size == 0:
            return self.zeros((0, m.shape[1] if m.ndim == 2 else 0))
        r, piv = self.rref(m)
        return r[: len(piv)]

    def reduce_against(self, echelon, pivots, vecs) -> np.ndarray:
        """Rows of ``vecs`` minus their components along a reduced echelon basis."""
        vecs = np.asarray(vecs)
        if not pivots:
            return vecs
        return self.reduce(vecs - self.mm(vecs[:, pivots], echelon))

    def extend_echelon(self, echelon, pivots, vecs) -> tuple[np.ndarray, list[int]]:
        """Reduced echelon basis of span(echelon) + span(vecs), updated incrementally."""
        ech = Echelon(self, np.asarray(vecs).shape[1])
        ech.load(echelon, pivots)
        ech.add(vecs)
        return ech.matrix()

    def kernel(self, m) -> np.ndarray:
        """Basis rows of the right null space {x : m x = 0}."""
        m = np.asarray(m)
        cols = m.shape[1]
        if m.shape[0] == 0:
            return self.eye(cols)
        r, piv = self.rref(m)
        return self._kernel_from_rref(r, piv, cols)

    def _kernel_from_rref(self, r, piv, cols) -> np.ndarray:
        pivset = set(piv)
        free = [c for c in range(cols) if c not in pivset]
        out = self.zeros((len(free), cols))
        if free:
            out[np.arange(len(free)), free] = self.scalar(1)
            if piv:
                out[:, piv] = self.reduce(-r[: len(piv)][:, free].T)
        return out

    def solve(self, a, b, *, with_kernel: bool = False):
        """Particular solution x of ``a @ x == b`` (free variables set to zero).

        With ``with_kernel`` the pair ``(x, kernel(a))`` is returned, which
        describes the whole solution set.
        """
        a = np.asarray(a)
        b = np.asarray(b)
        vector = b.ndim == 1
        if vector:
            b = b.reshape(-1, 1)
        if a.shape[0] != b.shape[0]:
            raise ValueError(f"shape mismatch: a is {a.shape}, b is {b.shape}")
        n = a.shape[1]
        aug = np.concatenate([np.asarray(a, dtype=self.dtype), np.asarray(b, dtype=self.dtype)], axis=1)
        r, piv = self.rref(aug)
        if piv and piv[-1] >= n:
            raise NoSolution("right-hand side is not in the column space")
        x = self.zeros((n, b.shape[1]))
        for i, pc in enumerate(piv):
            x[pc] = r[i, n:]
        if vector:
            x = x[:, 0]
        if with_kernel:
            # the left block of rref([a | b]) is rref(a)
            left = [c for c in piv if c < n]
            return x, self._kernel_from_rref(r[: len(left), :n], left, n)
        return x

    def inverse(self, m) -> np.ndarray:
        m = np.asarray(m)
        n = m.shape[0]
        if m.shape != (n, n):
            raise ValueError("inverse of a non-square matrix")
        try:
            return self.solve(m, self.eye(n))
        except NoSolution:
            raise ZeroDivisionError("matrix is singular") from None

    def is_invertible(self, m) -> bool:
        m = np.asarray(m)
        return m.shape[0] == m.shape[1] and self.rank(m) == m.shape[0]

    def quotient_by(self, ambient_dim: int, relations, pivots=None) -> "Quotient":
        """F^n / span(relations); pass ``pivots`` when the rows are already in reduced echelon form."""
        rel = np.asarray(relations, dtype=self.dtype)
        if rel.size == 0:
            rel = self.zeros((0, ambient_dim))
        if rel.shape[1] != ambient_dim:
            raise ValueError("relations must have ambient_dim columns")
        return Quotient(self, ambient_dim, rel, pivots)

    def coordinates(self, basis_cols, vecs) -> np.ndarray:
        """Coordinates of the columns of ``vecs`` in the columns of ``basis_cols``.

        Raises :class:`NoSolution` if some column is outside the span.
        """
        return self.solve(basis_cols, vecs)

    def span_contains(self, basis_cols, vecs) -> bool:
        try:
            self.solve(basis_cols, vecs)
        except NoSolution:
            return False
        return True

    def same_span(self, a_cols, b_cols) -> bool:
        a_cols, b_cols = np.asarray(a_cols), np.asarray(b_cols)
        ra, rb = self.rank(a_cols), self.rank(b_cols)
        if ra != rb:
            return False
        if ra == 0:
            return True
        return self.rank(np.concatenate([a_cols, b_cols], axis=1)) == ra


class Echelon:
    """A reduced echelon basis of a growing row space in F^n.

    Rows are kept in insertion order (identity on their pivot columns); over
    small prime fields they are stored as float64 so that updates are exact
    BLAS products.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        p = field.p
        self._fast = p is not None and field.dtype is not object and p < 2**12 and p * p * max(ncols, 1) < 2**40
        self._dtype = np.float64 if self._fast else field.dtype
        self._rows = np.zeros((0, ncols), dtype=self._dtype)
        self._count = 0
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return self._count

    def _mod(self, x):
        p = self.field.p
        return x - np.floor(x / p) * p

    def load(self, rows, pivots) -> None:
        """Start from an existing reduced echelon basis."""
        rows = np.asarray(rows)[: len(pivots)]
        self._rows = rows.astype(self._dtype) if self._fast else rows.copy()
        self._count = len(pivots)
        self.pivots = list(pivots)

    def reduce(self, vecs) -> np.ndarray:
        """Residues of the rows of ``vecs`` modulo the current span."""
        F = self.field
        vecs = np.asarray(vecs)
        if not self.pivots:
            return F.reduce(vecs)
        E = self._rows[: self._count]
        if self._fast:
            v = vecs.astype(np.float64)
            return self._mod(v - v[:, self.pivots] @ E).astype(np.int64)
        return F.reduce(vecs - F.mm(vecs[:, self.pivots], E))

    def add(self, vecs) -> int:
        """Extend by the rows of ``vecs``; returns the number of new pivots."""
        F = self.field
        fresh, new_piv = F.rref(self.reduce(vecs))
        if not new_piv:
            return 0
        fresh = fresh[: len(new_piv)].astype(self._dtype) if self._fast else fresh[: len(new_piv)]
        k = self._count
        if k:
            E = self._rows[:k]
            coef = E[:, new_piv]
            hit = np.flatnonzero((coef != 0).any(axis=1))
            if hit.size:
                if self._fast:
                    E[hit] = self._mod(E[hit] - coef[hit] @ fresh)
                else:
                    E[hit] = F.reduce(E[hit] - F.mm(coef[hit], fresh))
        need = k + len(new_piv)
        if need > self._rows.shape[0]:
            grown = np.zeros((max(need, 2 * self._rows.shape[0]), self.ncols), dtype=self._dtype)
            grown[:k] = self._rows[:k]
            self._rows = grown
        self._rows[k:need] = fresh
        self._count = need
        self.pivots += list(new_piv)
        return len(new_piv)

    def matrix(self) -> tuple[np.ndarray, list[int]]:
        """The basis sorted by pivot column, as field elements, with its pivots."""
        order = np.argsort(self.pivots, kind="stable")
        rows = self._rows[: self._count][order]
        if self._fast:
            rows = rows.astype(np.int64)
        return rows, [self.pivots[i] for i in order]


class Quotient:
    """The quotient F^n / span(relations), with a fixed pivot-based section.

    Quotient coordinates are the non-pivot ambient coordinates after
    reducing by the relation rows; the section puts a quotient vector back
    on those coordinates.  Equality of classes is equality of projections.
    """

    def __init__(self, field: Field, ambient_dim: int, relations: np.ndarray, pivots=None):
        self.field = field
        self.ambient_dim = ambient_dim
        self.relations = relations
        if pivots is not None:
            red, piv = relations[: len(pivots)], list(pivots)
        elif relations.shape[0]:
            red, piv = field.rref(relations)
            red = red[: len(piv)]
        else:
            red, piv = field.zeros((0, ambient_dim)), []
        self.pivots = np.array(piv, dtype=int)
        pivset = set(piv)
        self.free = np.array([c for c in range(ambient_dim) if c not in pivset], dtype=int)
        # pivot coordinate p_i = -(red_i restricted to free coordinates) . free part
        self._red_free = red[:, self.free] if len(piv) else field.zeros((0, len(self.free)))
        self.dim = len(self.free)

    @property
    def trivial(self) -> bool:
        return len(self.pivots) == 0

    def project(self, v) -> np.ndarray:
        """Ambient vectors (columns, or a single vector) to quotient coordinates."""
        v = np.asarray(v)
        if self.trivial:
            return v
        out = v[self.free]
        if len(self.pivots):
            out = self.field.reduce(out - self.field.tensordot(self._red_free.T, v[self.pivots], (1, 0)))
        return out

    def lift(self, w) -> np.ndarray:
        """Quotient coordinates to ambient representatives (the section)."""
        w = np.asarray(w)
        if self.trivial:
            return w
        out = self.field.zeros((self.ambient_dim,) + w.shape[1:])
        out[self.free] = w
        return out

    @cached_property
    def projection(self) -> np.ndarray:
        return self.project(self.field.eye(self.ambient_dim))

    @cached_property
    def section(self) -> np.ndarray:
        return self.lift(self.field.eye(self.dim))
