"""Incidence operators eta_s between permutation modules on Grassmannians.

``eta_s^{r0,r1}`` sends [L] to the sum of all r1-subspaces L' with
dim(L ∩ L') = s. The 0/1 pattern does not depend on the coefficient field,
so it is stored once and reduced into K when a dense matrix is requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import EmptyOrbit, ShapeMismatch
from .exactcore import FieldCtx, Matrix, field_of_order
from .grassmann import GrassmannIndex, grassmannian, intersection_dim
from .vectors import ModuleVector


def sigma(n: int, r0: int, r1: int) -> int:
    """Smallest realizable intersection dimension of an r0- and an r1-subspace."""
    return max(0, r0 - (n - r1))


def admissible_s(n: int, r0: int, r1: int) -> range:
    return range(sigma(n, r0, r1), min(r0, r1) + 1)


class SparseMatrix:
    """Integer matrix in coordinate form, entries sorted by (row, col)."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: Iterable[tuple[int, int, int]]):
        merged: dict[tuple[int, int], int] = {}
        for i, j, v in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ShapeMismatch(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            merged[(i, j)] = merged.get((i, j), 0) + v
        self.nrows = nrows
        self.ncols = ncols
        self.entries = tuple(sorted((i, j, v) for (i, j), v in merged.items() if v))

    @classmethod
    def from_pattern(cls, nrows: int, ncols: int, coords: Iterable[tuple[int, int]]) -> "SparseMatrix":
        return cls(nrows, ncols, ((i, j, 1) for i, j in coords))

    def csr(self) -> tuple[list[int], list[int], list[int]]:
        indptr = [0] * (self.nrows + 1)
        for i, _, _ in self.entries:
            indptr[i + 1] += 1
        for i in range(self.nrows):
            indptr[i + 1] += indptr[i]
        return indptr, [j for _, j, _ in self.entries], [v for _, _, v in self.entries]

    def rows(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.nrows)]
        for i, j, v in self.entries:
            out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, ((j, i, v) for i, j, v in self.entries))

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        right = other.rows()
        acc: dict[tuple[int, int], int] = {}
        for i, k, v in self.entries:
            for j, w in right[k].items():
                acc[(i, j)] = acc.get((i, j), 0) + v * w
        return SparseMatrix(self.nrows, other.ncols, ((i, j, v) for (i, j), v in acc.items()))

    def column_sums(self) -> list[int]:
        out = [0] * self.ncols
        for _, j, v in self.entries:
            out[j] += v
        return out

    def row_sums(self) -> list[int]:
        out = [0] * self.nrows
        for i, _, v in self.entries:
            out[i] += v
        return out

    def to_matrix(self, K: FieldCtx) -> Matrix:
        flat = [K.zero] * (self.nrows * self.ncols)
        for i, j, v in self.entries:
            flat[i * self.ncols + j] = K.from_int(v)
        return Matrix(K, self.nrows, self.ncols, flat)

    def apply(self, K: FieldCtx, coeffs) -> list:
        """Matrix times the column vector ``coeffs`` (entries of K)."""
        out = [K.zero] * self.nrows
        add = K.add
        for i, j, v in self.entries:
            c = coeffs[j]
            if c:
                out[i] = add(out[i], c if v == 1 else K.mul(K.from_int(v), c))
        return out

    def reduce_mod(self, K: FieldCtx) -> "SparseMatrix":
        """Entries reduced into K and dropped when zero there (finite K only)."""
        if not K.is_finite:
            return self
        p = K.p
        return SparseMatrix(self.nrows, self.ncols, ((i, j, v % p) for i, j, v in self.entries))

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.entries) == (other.nrows, other.ncols, other.entries)

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.entries))

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)})"


@dataclass(frozen=True)
class IncidenceOperator:
    K: FieldCtx
    source: GrassmannIndex
    target: GrassmannIndex
    s: int
    pattern: SparseMatrix  # rows = target, cols = source

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        return (self.source.field.order, self.source.n, self.source.r, self.target.r, self.s)

    @property
    def matrix(self) -> Matrix:
        return self.pattern.to_matrix(self.K)

    def column_counts(self) -> list[int]:
        return self.pattern.column_sums()

    def apply(self, v: ModuleVector) -> ModuleVector:
        if v.index.key != self.source.key or v.field != self.K:
            raise ShapeMismatch("vector is not in the source module")
        return ModuleVector(self.K, self.target, self.pattern.apply(self.K, v.coeffs))

    def over(self, K: FieldCtx) -> "IncidenceOperator":
        return IncidenceOperator(K, self.source, self.target, self.s, self.pattern)


@lru_cache(maxsize=64)
def intersection_table(q: int, n: int, r0: int, r1: int) -> tuple[tuple[int, ...], ...]:
    """``table[j][i] = dim(target_j ∩ source_i)``."""
    F = field_of_order(q)
    src, tgt = grassmannian(F, n, r0), grassmannian(F, n, r1)
    return tuple(tuple(intersection_dim(L, Lp) for L in src) for Lp in tgt)


def eta_pattern(q: int, n: int, r0: int, r1: int, s: int) -> SparseMatrix:
    table = intersection_table(q, n, r0, r1)
    nrows = len(table)
    ncols = len(table[0]) if nrows else 0
    return SparseMatrix.from_pattern(
        nrows, ncols, ((j, i) for j, row in enumerate(table) for i, d in enumerate(row) if d == s))


def build_eta(K: FieldCtx, q: int, n: int, r0: int, r1: int, s: int, cache=None) -> IncidenceOperator:
    """The incidence operator eta_s^{r0,r1} on K[Gr(r0, F_q^n)] -> K[Gr(r1, F_q^n)].

    ``cache`` is any object with ``get_incidence(key)`` / ``put_incidence(key, pattern)``
    (see :class:`grassmod.cache.CacheStore`).
    """
    if s not in admissible_s(n, r0, r1):
        raise EmptyOrbit(f"no pair of {r0}- and {r1}-subspaces of F^{n} meets in dimension {s}")
    F = field_of_order(q)
    src, tgt = grassmannian(F, n, r0), grassmannian(F, n, r1)
    key = (q, n, r0, r1, s)
    pattern = cache.get_incidence(key) if cache is not None else None
    if pattern is None or (pattern.nrows, pattern.ncols) != (len(tgt), len(src)):
        pattern = eta_pattern(q, n, r0, r1, s)
        if cache is not None:
            cache.put_incidence(key, pattern)
    return IncidenceOperator(K, src, tgt, s, pattern)


def eta_family(K: FieldCtx, q: int, n: int, r0: int, r1: int, cache=None) -> list[IncidenceOperator]:
    return [build_eta(K, q, n, r0, r1, s, cache) for s in admissible_s(n, r0, r1)]


def augmentation(v: ModuleVector):
    return v.field.sum(v.coeffs)


def compose(a: IncidenceOperator, b: IncidenceOperator) -> Matrix:
    """Matrix of ``a ∘ b``: apply ``b`` first. Entries are intersection numbers in K."""
    if a.source.key != b.target.key:
        raise ShapeMismatch("a.source must equal b.target")
    if a.K != b.K:
        raise ShapeMismatch("operators are over different coefficient fields")
    return (a.pattern @ b.pattern).to_matrix(a.K)


def pairing(u: ModuleVector, v: ModuleVector):
    if u.field != v.field or u.index.key != v.index.key:
        raise ShapeMismatch("pairing needs two vectors of the same module")
    f = u.field
    acc = f.zero
    for a, b in zip(u.coeffs, v.coeffs):
        if a and b:
            acc = f.add(acc, f.mul(a, b))
    return acc


def duality_check(q: int, n: int, r: int, r2: int, s: int, cache=None) -> bool:
    """Whether the transpose of eta_s^{r,r2} is eta_s^{r2,r}."""
    fwd = build_eta(field_of_order(q), q, n, r, r2, s, cache)
    back = build_eta(field_of_order(q), q, n, r2, r, s, cache)
    return fwd.pattern.transpose() == back.pattern
