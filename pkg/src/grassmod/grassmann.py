"""Subspaces of F_q^n, the Grassmannian as an indexed set, and the GL_n(F_q) action.

Vectors are row vectors and GL_n acts on the right: ``L . g`` is the row
space of ``basis @ g``.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .config import get_config
from .errors import AmbientMismatch, DimensionMismatch, TooLarge
from .exactcore import (
    EchelonBasis,
    FieldCtx,
    Matrix,
    field_of_order,
    inverse,
    kernel_rows,
    rank_of_rows,
    rref_rows,
    vec_mat,
)


def gaussian_binomial(q: int, n: int, r: int) -> int:
    if r < 0 or r > n:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def gl_order(q: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


@dataclass(frozen=True)
class Subspace:
    """An r-dimensional subspace of F^n held as its RREF basis."""

    field: FieldCtx
    n: int
    r: int
    basis: tuple[tuple[int, ...], ...]

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.r, self.n, [x for row in self.basis for x in row])

    def contains(self, v: Sequence[int]) -> bool:
        if self.r == 0:
            return not any(v)
        return rank_of_rows(self.field, list(self.basis) + [tuple(v)], self.n) == self.r

    def vectors(self) -> Iterator[tuple]:
        """Every vector of the subspace (finite fields only)."""
        f = self.field
        for coeffs in itertools.product(f.elements(), repeat=self.r):
            yield vec_mat(f, coeffs, self.basis) if self.r else (0,) * self.n

    def __repr__(self):
        rows = " | ".join(" ".join(map(str, r)) for r in self.basis)
        return f"Subspace({self.field.name}^{self.n}, r={self.r}: {rows})"


def canonicalize(field: FieldCtx, n: int, spanning_rows: Sequence[Sequence]) -> Subspace:
    rows, _ = rref_rows(field, [tuple(r) for r in spanning_rows], n) if spanning_rows else ([], [])
    return Subspace(field, n, len(rows), tuple(tuple(r) for r in rows))


def _check_ambient(a: Subspace, b: Subspace):
    if a.field != b.field or a.n != b.n:
        raise AmbientMismatch(f"{a.field.name}^{a.n} vs {b.field.name}^{b.n}")


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return canonicalize(a.field, a.n, list(a.basis) + list(b.basis))


def intersection_dim(a: Subspace, b: Subspace) -> int:
    _check_ambient(a, b)
    return a.r + b.r - rank_of_rows(a.field, list(a.basis) + list(b.basis), a.n)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    """``a`` meet ``b`` via the left kernel of the stacked bases."""
    _check_ambient(a, b)
    f, n = a.field, a.n
    if a.r == 0 or b.r == 0:
        return canonicalize(f, n, [])
    stacked = list(a.basis) + list(b.basis)
    cols = [tuple(row[j] for row in stacked) for j in range(n)]
    rel = kernel_rows(f, cols, len(stacked))
    vecs = [vec_mat(f, x[:a.r], a.basis) for x in rel]
    return canonicalize(f, n, vecs)


# -- enumeration --------------------------------------------------------------

class GrassmannIndex:
    """Bijection between Gr(r, F^n) and ``range(len(self))``, in canonical order."""

    def __init__(self, field: FieldCtx, n: int, r: int, table: Sequence[Subspace]):
        self.field = field
        self.n = n
        self.r = r
        self.table = tuple(table)
        self._reverse = {L.basis: i for i, L in enumerate(self.table)}
        self._perms: dict = {}

    def __len__(self) -> int:
        return len(self.table)

    def __iter__(self):
        return iter(self.table)

    def __getitem__(self, i: int) -> Subspace:
        return self.table[i]

    def index(self, L: Subspace) -> int:
        if L.field != self.field or L.n != self.n or L.r != self.r:
            raise AmbientMismatch("subspace does not belong to this Grassmannian")
        return self._reverse[L.basis]

    def permutation(self, g: "GroupElement") -> tuple[int, ...]:
        """``perm[i]`` is the index of ``table[i] . g``."""
        perm = self._perms.get(g)
        if perm is None:
            if g.field != self.field or g.n != self.n:
                raise AmbientMismatch("group element acts on a different space")
            perm = tuple(self._reverse[act(g, L).basis] for L in self.table)
            self._perms[g] = perm
        return perm

    @property
    def key(self) -> tuple:
        return (self.field.order, self.n, self.r)

    def __repr__(self):
        return f"GrassmannIndex(q={self.field.order}, n={self.n}, r={self.r}, size={len(self)})"


def _check_caps(q: int, n: int, r: int, cap: int | None, max_n: int | None):
    cfg = get_config()
    cap = cfg.max_grassmannian if cap is None else cap
    max_n = cfg.max_n if max_n is None else max_n
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    if n > max_n:
        raise TooLarge(f"ambient dimension {n} exceeds cap {max_n}")
    size = gaussian_binomial(q, n, r)
    if size > cap:
        raise TooLarge(f"|Gr({r}, F_{q}^{n})| = {size} exceeds cap {cap}")
    return size


def enumerate_grassmannian(field: FieldCtx, n: int, r: int, *, cap: int | None = None,
                           max_n: int | None = None) -> GrassmannIndex:
    """Every r-subspace of F^n, sorted by flattened RREF basis."""
    if not field.is_finite:
        raise ValueError("Grassmannians are enumerated over finite fields only")
    expected = _check_caps(field.order, n, r, cap, max_n)
    els = list(field.elements())
    table = []
    for piv in itertools.combinations(range(n), r):
        pset = set(piv)
        free = [(i, j) for i, p in enumerate(piv) for j in range(p + 1, n) if j not in pset]
        for vals in itertools.product(els, repeat=len(free)):
            rows = [[0] * n for _ in range(r)]
            for i, p in enumerate(piv):
                rows[i][p] = 1
            for (i, j), x in zip(free, vals):
                rows[i][j] = x
            table.append(Subspace(field, n, r, tuple(tuple(row) for row in rows)))
    table.sort(key=lambda L: tuple(x for row in L.basis for x in row))
    assert len(table) == expected
    return GrassmannIndex(field, n, r, table)


@lru_cache(maxsize=128)
def _grassmannian(field: FieldCtx, n: int, r: int) -> GrassmannIndex:
    return enumerate_grassmannian(field, n, r, cap=float("inf"), max_n=n)


def grassmannian(field: FieldCtx | int, n: int, r: int) -> GrassmannIndex:
    """Memoised :func:`enumerate_grassmannian` (caps are still enforced)."""
    if isinstance(field, int):
        field = field_of_order(field)
    _check_caps(field.order, n, r, None, None)
    return _grassmannian(field, n, r)


# -- the group -------------------------------------------------------------------

@dataclass(frozen=True)
class GroupElement:
    field: FieldCtx
    n: int
    mat: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.mat) != self.n or any(len(r) != self.n for r in self.mat):
            raise DimensionMismatch("group element must be n x n")
        if rank_of_rows(self.field, self.mat, self.n) != self.n:
            raise ValueError("matrix is not invertible")

    @classmethod
    def identity(cls, field: FieldCtx, n: int) -> "GroupElement":
        return cls(field, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_matrix(cls, m: Matrix) -> "GroupElement":
        return cls(m.field, m.nrows, tuple(m.row_list()))

    def matrix(self) -> Matrix:
        return Matrix.from_rows(self.field, self.mat, self.n)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """``(g * h)`` acts as ``g`` first, then ``h``."""
        if self.field != other.field or self.n != other.n:
            raise AmbientMismatch("cannot multiply elements of different groups")
        return GroupElement(self.field, self.n, _matmul_rows(self.field, self.mat, other.mat))

    def inverse(self) -> "GroupElement":
        return GroupElement.from_matrix(inverse(self.matrix()))

    def apply(self, v: Sequence) -> tuple:
        return vec_mat(self.field, v, self.mat)

    def __repr__(self):
        return f"GroupElement({self.field.name}: {' | '.join(' '.join(map(str, r)) for r in self.mat)})"


def _matmul_rows(field: FieldCtx, a, b) -> tuple:
    return tuple(vec_mat(field, row, b) for row in a)


def act(g: GroupElement, L: Subspace) -> Subspace:
    if g.field != L.field or g.n != L.n:
        raise AmbientMismatch("group element and subspace live in different spaces")
    if L.r == 0:
        return L
    return canonicalize(L.field, L.n, _matmul_rows(L.field, L.basis, g.mat))


def elementary_transvection(field: FieldCtx, n: int, i: int, j: int, c=1) -> GroupElement:
    rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    rows[i][j] = c
    return GroupElement(field, n, tuple(tuple(r) for r in rows))


def gl_generators(field: FieldCtx, n: int) -> list[GroupElement]:
    """diag(alpha, 1, ..., 1) for a primitive alpha (omitted over F_2) and all e_ij(1)."""
    gens = []
    alpha = field.primitive_element()
    if alpha != 1:
        rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        rows[0][0] = alpha
        gens.append(GroupElement(field, n, tuple(tuple(r) for r in rows)))
    for i in range(n):
        for j in range(n):
            if i != j:
                gens.append(elementary_transvection(field, n, i, j))
    return gens


def group_closure(gens: Sequence[GroupElement], limit: int = 10 ** 7, *,
                  field: FieldCtx | None = None, n: int | None = None) -> set[tuple]:
    """Matrices of every product of the generators; raises TooLarge past ``limit``.

    With no generators the result is the trivial group of ``(field, n)``.
    """
    if gens:
        field, n = gens[0].field, gens[0].n
    ident = GroupElement.identity(field, n)
    seen = {ident.mat}
    queue = deque([ident.mat])
    f = ident.field
    while queue:
        m = queue.popleft()
        for g in gens:
            h = _matmul_rows(f, m, g.mat)
            if h not in seen:
                seen.add(h)
                if len(seen) > limit:
                    raise TooLarge(f"closure exceeds {limit} elements")
                queue.append(h)
    return seen


def closure_size(gens: Sequence[GroupElement], limit: int = 10 ** 7, *,
                 field: FieldCtx | None = None, n: int | None = None) -> int:
    return len(group_closure(gens, limit, field=field, n=n))


def pair_orbit_invariant(a: Subspace, b: Subspace) -> tuple[int, int, int]:
    """``(dim a∩b, dim a/(a∩b), dim b/(a∩b))``."""
    s = intersection_dim(a, b)
    return s, a.r - s, b.r - s


def chain_between(L0: Subspace, L1: Subspace) -> list[Subspace]:
    """Chain L0 = L'_0, ..., L'_c = L1 with adjacent consecutive members.

    Built as W + <e_1..e_{c-i}> + <f_1..f_i> where W = L0∩L1 and e (resp. f)
    are the rows of L0's (resp. L1's) RREF basis that extend W, in order.
    """
    _check_ambient(L0, L1)
    if L0.r != L1.r:
        raise DimensionMismatch(f"dimensions differ: {L0.r} vs {L1.r}")
    f, n = L0.field, L0.n
    W = intersection(L0, L1)

    def complement(L):
        eb = EchelonBasis(f, n)
        for row in W.basis:
            eb.add(row)
        out = []
        for row in L.basis:
            if eb.add(row):
                out.append(row)
        return out

    es, fs = complement(L0), complement(L1)
    c = len(es)
    assert len(fs) == c
    return [canonicalize(f, n, list(W.basis) + es[:c - i] + fs[:i]) for i in range(c + 1)]


# -- sampling helpers ----------------------------------------------------------

def random_group_element(field: FieldCtx, n: int, rng: random.Random) -> GroupElement:
    while True:
        rows = tuple(tuple(rng.randrange(field.order) for _ in range(n)) for _ in range(n))
        if rank_of_rows(field, rows, n) == n:
            return GroupElement(field, n, rows)


def random_subspace(field: FieldCtx, n: int, r: int, rng: random.Random) -> Subspace:
    while True:
        rows = [tuple(rng.randrange(field.order) for _ in range(n)) for _ in range(r)]
        L = canonicalize(field, n, rows)
        if L.r == r:
            return L
