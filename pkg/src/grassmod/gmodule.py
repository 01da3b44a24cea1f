"""K[G]-submodules of K[Gr(r, F_q^n)]: spinning, Hom/End spaces, decompositions.

Hom spaces are computed from the equivariance equations over a generating
set of GL_n(F_q) only. For permutation modules every such equation reads
``X[pi1(a), pi0(b)] = X[a, b]``, so the solution space is spanned by the
indicator matrices of the connected components on pairs; ``method="linear"``
solves the same system by dense elimination instead.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

from .config import get_config
from .errors import (
    AmbientMismatch,
    EmptyModule,
    HypothesisViolated,
    NotDiagonalizable,
    TooLarge,
)
from .exactcore import (
    EchelonBasis,
    FieldCtx,
    Matrix,
    dot,
    field_of_order,
    inverse,
    kernel_rows,
    lcm,
    projective_vectors,
    rank_of_rows,
    rref_rows,
)
from .grassmann import GrassmannIndex, GroupElement, gl_generators, grassmannian
from .incidence import IncidenceOperator, SparseMatrix, eta_family
from .vectors import ModuleVector

__all__ = [
    "ModuleVector",
    "GroupAlgebraElement",
    "Submodule",
    "apply_group",
    "apply_algebra",
    "spin",
    "hom_space",
    "end_algebra",
    "decompose_semisimple",
    "summand_hom_dims",
    "is_simple",
    "socle_structure",
]


# -- group action ----------------------------------------------------------------

def apply_group(v: ModuleVector, g: GroupElement) -> ModuleVector:
    return v.permuted(v.index.permutation(g))


class GroupAlgebraElement:
    """Finite formal K-combination of elements of GL_n(F_q).

    The product ``x * y`` acts as ``x`` first and then ``y``, matching the
    right action on module vectors.
    """

    def __init__(self, field: FieldCtx, terms: Iterable[tuple[object, GroupElement]]):
        acc: dict[GroupElement, object] = {}
        for c, g in terms:
            c = field.coerce(c)
            acc[g] = field.add(acc.get(g, field.zero), c)
        self.field = field
        self.terms = tuple(sorted(((c, g) for g, c in acc.items() if c), key=lambda t: t[1].mat))

    @classmethod
    def of(cls, field: FieldCtx, g: GroupElement, coeff=None) -> "GroupAlgebraElement":
        return cls(field, [(field.one if coeff is None else coeff, g)])

    @classmethod
    def unit(cls, field: FieldCtx, F: FieldCtx, n: int) -> "GroupAlgebraElement":
        return cls.of(field, GroupElement.identity(F, n))

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.field, self.terms + other.terms)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        f = self.field
        return GroupAlgebraElement(f, self.terms + tuple((f.neg(c), g) for c, g in other.terms))

    def scale(self, c) -> "GroupAlgebraElement":
        f = self.field
        return GroupAlgebraElement(f, ((f.mul(c, a), g) for a, g in self.terms))

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        f = self.field
        return GroupAlgebraElement(f, ((f.mul(a, b), g * h) for a, g in self.terms for b, h in other.terms))

    def __pow__(self, k: int) -> "GroupAlgebraElement":
        if k < 0:
            raise ValueError("negative powers are not defined in a group algebra")
        if not self.terms:
            raise ValueError("power of the zero element needs an explicit unit")
        g0 = self.terms[0][1]
        out = GroupAlgebraElement.unit(self.field, g0.field, g0.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, self.terms))

    def __repr__(self):
        return f"GroupAlgebraElement({len(self.terms)} terms over {self.field.name})"


def apply_algebra(v: ModuleVector, x: GroupAlgebraElement) -> ModuleVector:
    if x.field != v.field:
        raise AmbientMismatch("group algebra and module have different coefficient fields")
    f = v.field
    out = [f.zero] * len(v.coeffs)
    for c, g in x.terms:
        perm = v.index.permutation(g)
        for i, a in enumerate(v.coeffs):
            if a:
                j = perm[i]
                out[j] = f.add(out[j], f.mul(c, a))
    return ModuleVector(f, v.index, out)


# -- submodules --------------------------------------------------------------

class Submodule:
    """Subspace of K[Gr] given by an RREF basis, closed under ``gens``."""

    def __init__(self, field: FieldCtx, index: GrassmannIndex, rows: Iterable[Sequence],
                 gens: Sequence[GroupElement] | None = None, verify: bool = True):
        rows, _ = rref_rows(field, [tuple(r) for r in rows], len(index))
        self.field = field
        self.index = index
        self.rows = tuple(tuple(r) for r in rows)
        self.gens = tuple(gens) if gens is not None else None
        self._eb = EchelonBasis(field, len(index))
        for r in self.rows:
            self._eb.add(r)
        if verify and gens is not None and not self.is_closed(gens):
            raise ValueError("basis does not span a G-stable subspace")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_vectors(self) -> list[ModuleVector]:
        return [ModuleVector(self.field, self.index, r) for r in self.rows]

    def contains(self, v: ModuleVector | Sequence) -> bool:
        coeffs = v.coeffs if isinstance(v, ModuleVector) else v
        return self._eb.contains(coeffs)

    def is_closed(self, gens: Sequence[GroupElement]) -> bool:
        for g in gens:
            perm = self.index.permutation(g)
            for r in self.rows:
                img = [self.field.zero] * len(r)
                for i, a in enumerate(r):
                    img[perm[i]] = a
                if not self._eb.contains(img):
                    return False
        return True

    def __le__(self, other: "Submodule") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.field == other.field and self.index.key == other.index.key and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.index.key, self.rows))

    def __repr__(self):
        return f"Submodule(dim={self.dim} in {self.field.name}[Gr{self.index.key}])"


def _default_gens(index: GrassmannIndex) -> list[GroupElement]:
    return gl_generators(index.field, index.n)


def spin(seeds: Sequence[ModuleVector], gens: Sequence[GroupElement] | None = None, *,
         verify: bool = True) -> Submodule:
    """Smallest G-stable subspace containing ``seeds`` (worklist closure)."""
    seeds = list(seeds)
    if not seeds:
        raise ValueError("spin needs at least one seed")
    K, index = seeds[0].field, seeds[0].index
    N = len(index)
    if N > get_config().max_spin_dim:
        raise TooLarge(f"module rank {N} exceeds spin cap {get_config().max_spin_dim}")
    gens = _default_gens(index) if gens is None else list(gens)
    perms = [index.permutation(g) for g in gens]
    eb = EchelonBasis(K, N)
    queue = deque()
    for v in seeds:
        if v.index.key != index.key or v.field != K:
            raise AmbientMismatch("seeds live in different modules")
        if eb.add(v.coeffs):
            queue.append(v.coeffs)
    zero = K.zero
    while queue and eb.dim < N:
        c = queue.popleft()
        for perm in perms:
            w = [zero] * N
            for i, a in enumerate(c):
                if a:
                    w[perm[i]] = a
            if eb.add(w):
                queue.append(tuple(w))
                if eb.dim == N:
                    break
    return Submodule(K, index, eb.rref(), gens, verify=verify)


def augmentation_kernel(K: FieldCtx, index: GrassmannIndex) -> Submodule:
    """K[Gr]° spanned by [L_0] - [L_i]."""
    N = len(index)
    rows = []
    for i in range(1, N):
        r = [K.zero] * N
        r[0], r[i] = K.one, K.neg(K.one)
        rows.append(r)
    return Submodule(K, index, rows, None)


# -- Hom and End -------------------------------------------------------------

@dataclass
class HomSpace:
    K: FieldCtx
    source: GrassmannIndex
    target: GrassmannIndex
    dim: int
    basis: list[SparseMatrix] = dc_field(repr=False)

    def matrices(self) -> list[Matrix]:
        return [b.to_matrix(self.K) for b in self.basis]


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def hom_space(K: FieldCtx, q: int, n: int, r0: int, r1: int,
              gens: Sequence[GroupElement] | None = None, method: str = "orbits") -> HomSpace:
    """G-equivariant maps K[Gr(r0)] -> K[Gr(r1)] as matrices (rows = target)."""
    F = field_of_order(q)
    src, tgt = grassmannian(F, n, r0), grassmannian(F, n, r1)
    gens = gl_generators(F, n) if gens is None else list(gens)
    ns, nt = len(src), len(tgt)
    pairs = [(tgt.permutation(g), src.permutation(g)) for g in gens]
    if method == "orbits":
        parent = list(range(ns * nt))
        for p1, p0 in pairs:
            for a in range(nt):
                base, img = a * ns, p1[a] * ns
                for b in range(ns):
                    ra, rb = _find(parent, base + b), _find(parent, img + p0[b])
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        classes: dict[int, list[tuple[int, int]]] = {}
        for x in range(ns * nt):
            classes.setdefault(_find(parent, x), []).append(divmod(x, ns))
        basis = [SparseMatrix.from_pattern(nt, ns, cells) for _, cells in sorted(classes.items())]
        return HomSpace(K, src, tgt, len(basis), basis)
    if method == "linear":
        nvar = ns * nt
        eqs = []
        for p1, p0 in pairs:
            for a in range(nt):
                for b in range(ns):
                    x, y = p1[a] * ns + p0[b], a * ns + b
                    if x != y:
                        row = [K.zero] * nvar
                        row[x], row[y] = K.one, K.neg(K.one)
                        eqs.append(row)
        sol = kernel_rows(K, eqs, nvar) if eqs else [
            tuple(K.one if i == j else K.zero for i in range(nvar)) for j in range(nvar)]
        basis = [SparseMatrix(nt, ns, ((i // ns, i % ns, _as_int(K, v)) for i, v in enumerate(x) if v))
                 for x in sol]
        return HomSpace(K, src, tgt, len(basis), basis)
    raise ValueError(f"unknown method {method!r}")


def _as_int(K: FieldCtx, v) -> int:
    if K.is_finite:
        if K.e != 1:
            raise ValueError("linear Hom solver returns integer matrices only over prime fields or Q")
        return v
    v = Fraction(v)
    if v.denominator != 1:
        raise ValueError("non-integral equivariant basis entry")
    return v.numerator


def end_algebra(K: FieldCtx, q: int, n: int, r: int,
                gens: Sequence[GroupElement] | None = None) -> tuple[int, bool]:
    """(dimension, commutativity) of End_{K[G]}(K[Gr(r, F_q^n)])."""
    hs = hom_space(K, q, n, r, r, gens)
    mats = [b.reduce_mod(K) for b in hs.basis]
    commutative = all(
        (a @ b).reduce_mod(K) == (b @ a).reduce_mod(K)
        for a, b in itertools.combinations(mats, 2))
    return hs.dim, commutative


# -- semisimple decomposition ------------------------------------------------

def _check_prop_hypothesis(K: FieldCtx, q: int, n: int):
    for m in range(2, n + 2):
        if K.from_int(q ** m - q) == 0:
            raise HypothesisViolated(f"q^{m} = q in {K.name} (q={q})")


def _poly_eval(K: FieldCtx, poly: Sequence, x):
    acc = K.zero
    for c in reversed(poly):
        acc = K.add(K.mul(acc, x), c)
    return acc


def _poly_div_linear(K: FieldCtx, poly: Sequence, lam) -> list:
    """Quotient of ``poly`` by ``(x - lam)``; assumes lam is a root."""
    deg = len(poly) - 1
    out = [K.zero] * deg
    carry = K.zero
    for k in range(deg, 0, -1):
        carry = K.add(poly[k], K.mul(carry, lam))
        out[k - 1] = carry
    return out


def minimal_polynomial(K: FieldCtx, op: IncidenceOperator) -> list:
    """Minimal polynomial of ``op`` (coefficients constant first).

    ``op`` commutes with G and the module is cyclic on [L_0], so the
    annihilator of [L_0] is the annihilator of the whole module.
    """
    N = len(op.source)
    v = [K.zero] * N
    v[0] = K.one
    krylov = [v]
    while True:
        nxt = op.pattern.apply(K, krylov[-1])
        cols = krylov + [nxt]
        rows = [tuple(c[i] for c in cols) for i in range(N)]
        ker = kernel_rows(K, rows, len(cols))
        if ker:
            rel = ker[0]
            lead = rel[-1]
            return [K.div(c, lead) for c in rel]
        krylov.append(nxt)


def _candidate_roots(K: FieldCtx, bound: int):
    if K.is_finite and K.order <= 1 << 16:
        return list(K.elements())
    return [K.from_int(k) for k in range(-bound, bound + 1)]


def _restricted_kernel(K: FieldCtx, basis: Sequence[Sequence] | None, N: int, func) -> list[tuple]:
    """Basis of {x in span(basis) : func(x) = 0} for a linear ``func``."""
    if basis is None:
        basis = [tuple(K.one if i == j else K.zero for i in range(N)) for j in range(N)]
    elif not K.is_finite:
        # integer multiples of the basis rows span the same space and keep func cheap
        basis = [K._to_work(b) for b in basis]
    images = [func(b) for b in basis]
    cols = [tuple(img[i] for img in images) for i in range(N)]
    coeffs = kernel_rows(K, cols, len(basis))
    out = []
    for c in coeffs:
        vec = [K.zero] * N
        for a, b in zip(c, basis):
            if a:
                for i, x in enumerate(b):
                    if x:
                        vec[i] = K.add(vec[i], K.mul(a, x))
        out.append(tuple(vec))
    return rref_rows(K, out, N)[0] if out else []


def _poly_apply(K: FieldCtx, op: IncidenceOperator, poly: Sequence, v: Sequence) -> list:
    acc = [K.zero] * len(v)
    for c in reversed(poly):
        acc = op.pattern.apply(K, acc)
        if c:
            acc = [K.add(a, K.mul(c, b)) for a, b in zip(acc, v)]
    return acc


def decompose_semisimple(K: FieldCtx, q: int, n: int, r: int,
                         gens: Sequence[GroupElement] | None = None, cache=None) -> list[Submodule]:
    """Common eigenspaces of the commuting family eta_s^{r,r}, as submodules."""
    _check_prop_hypothesis(K, q, n)
    F = field_of_order(q)
    index = grassmannian(F, n, r)
    gens = gl_generators(F, n) if gens is None else list(gens)
    N = len(index)
    blocks: list[list[tuple] | None] = [None]
    for op in eta_family(K, q, n, r, r, cache):
        mp = minimal_polynomial(K, op)
        bound = max(op.column_counts())
        roots = []
        rest = list(mp)
        for lam in _candidate_roots(K, bound):
            if len(rest) > 1 and _poly_eval(K, rest, lam) == 0:
                rest = _poly_div_linear(K, rest, lam)
                if len(rest) > 1 and _poly_eval(K, rest, lam) == 0:
                    raise NotDiagonalizable(f"repeated eigenvalue {K.format(lam)} of eta_{op.s}")
                roots.append(lam)
        new_blocks = []
        for B in blocks:
            dim_b = N if B is None else len(B)
            parts = []
            for lam in roots:
                E = _restricted_kernel(
                    K, B, N, lambda x, lam=lam: [K.sub(a, K.mul(lam, b))
                                                 for a, b in zip(op.pattern.apply(K, x), x)])
                if E:
                    parts.append(E)
            if len(rest) > 1:
                E = _restricted_kernel(K, B, N, lambda x: _poly_apply(K, op, rest, x))
                if E:
                    parts.append(E)
            if sum(len(E) for E in parts) != dim_b:
                raise NotDiagonalizable(f"eta_{op.s} does not split a block of dimension {dim_b}")
            new_blocks.extend(parts)
        blocks = new_blocks
    summands = [Submodule(K, index, B, gens) for B in blocks]
    summands.sort(key=lambda S: (S.dim, [tuple(K.sort_key(x) for x in r) for r in S.rows]))
    return summands


class _IntRing:
    """Plain integers with the few FieldCtx methods SparseMatrix.apply uses."""

    zero = 0

    @staticmethod
    def from_int(k):
        return k

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def mul(a, b):
        return a * b


_Z = _IntRing()


def summand_hom_dims(summands: Sequence[Submodule], K: FieldCtx, q: int, n: int, r: int,
                     gens: Sequence[GroupElement] | None = None) -> list[list[int]]:
    """``dims[i][j] = dim Hom_G(S_i, S_j)`` for a direct-sum decomposition of K[Gr].

    A G-map S_i -> S_j extends by zero on the other summands, so these Hom
    spaces are spanned by the blocks ``pi_j E iota_i`` of the equivariant
    endomorphisms E returned by :func:`hom_space`. Over Q all coordinates are
    computed with integers scaled by a common positive factor per vector,
    which leaves ranks unchanged.
    """
    index = summands[0].index
    N = len(index)
    stacked = [row for S in summands for row in S.rows]
    if len(stacked) != N or rank_of_rows(K, stacked, N) != N:
        raise ValueError("summands do not form a direct-sum decomposition")
    binv_cols = inverse(Matrix.from_rows(K, stacked, N)).transpose().row_list()
    ring = K
    if not K.is_finite:
        D = lcm(*(Fraction(x).denominator for col in binv_cols for x in col))
        binv_cols = [[int(Fraction(x) * D) for x in col] for col in binv_cols]
        ring = _Z
    offsets = [0]
    for S in summands:
        offsets.append(offsets[-1] + S.dim)
    k = len(summands)
    blocks: dict[tuple[int, int], list[list]] = {(i, j): [] for i in range(k) for j in range(k)}
    src_rows = [S.rows if K.is_finite else [K._to_work(row) for row in S.rows] for S in summands]
    for E in hom_space(K, q, n, r, r, gens).basis:
        for i in range(k):
            coords = []
            for b in src_rows[i]:
                img = E.apply(ring, b)
                coords.append([dot(K, img, col) if K.is_finite else sum(x * y for x, y in zip(img, col))
                               for col in binv_cols])
            for j in range(k):
                blocks[(i, j)].append([x for c in coords for x in c[offsets[j]:offsets[j + 1]]])
    dims = [[0] * k for _ in range(k)]
    for (i, j), vecs in blocks.items():
        if vecs and vecs[0]:
            dims[i][j] = rank_of_rows(K, vecs if K.is_finite else [[Fraction(x) for x in v] for v in vecs],
                                      len(vecs[0]))
    return dims


# -- simplicity and socles ----------------------------------------------------

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"
CERTIFIED_SIMPLE = "certified_simple"
NOT_SIMPLE = "not_simple"
INCONCLUSIVE = "inconclusive"


@dataclass
class SimplicityResult:
    status: str
    mode: str
    dim: int
    checked: int
    seed: int | None = None
    witness: ModuleVector | None = None
    witness_spin_dim: int | None = None

    @property
    def confidence(self) -> str:
        if self.status == INCONCLUSIVE:
            return "simple at confidence: sampled"
        return self.status


def _combine(K: FieldCtx, coeffs: Sequence, rows: Sequence[Sequence]) -> tuple:
    N = len(rows[0])
    out = [K.zero] * N
    for c, row in zip(coeffs, rows):
        if c:
            for i, x in enumerate(row):
                if x:
                    out[i] = K.add(out[i], K.mul(c, x))
    return tuple(out)


def is_simple(S: Submodule, mode: str = "auto", *, gens: Sequence[GroupElement] | None = None,
              bound: int | None = None, samples: int = 32, seed: int | None = None) -> SimplicityResult:
    """Certify simplicity by spinning vectors of ``S``.

    ``exhaustive`` spins one vector per line of S (needs finite K);
    ``sampled`` spins basis vectors, pairwise differences and ``samples``
    seeded random vectors and can only refute simplicity.
    """
    if S.dim == 0:
        raise EmptyModule("the zero module is not simple")
    K = S.field
    gens = list(gens if gens is not None else (S.gens or _default_gens(S.index)))
    cfg = get_config()
    bound = cfg.simple_exhaustive_bound if bound is None else bound
    seed = cfg.seed if seed is None else seed
    if mode == "auto":
        mode = EXHAUSTIVE if K.is_finite and K.order ** S.dim <= bound else SAMPLED
    if mode == EXHAUSTIVE:
        if not K.is_finite:
            raise ValueError("exhaustive simplicity needs a finite coefficient field")
        probes = (_combine(K, c, S.rows) for c in projective_vectors(K, S.dim))
    elif mode == SAMPLED:
        probes = _sampled_probes(K, S.rows, samples, random.Random(seed))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    checked = 0
    for vec in probes:
        checked += 1
        v = ModuleVector(K, S.index, vec)
        T = spin([v], gens, verify=False)
        if T.dim < S.dim:
            return SimplicityResult(NOT_SIMPLE, mode, S.dim, checked, seed, v, T.dim)
    status = CERTIFIED_SIMPLE if mode == EXHAUSTIVE else INCONCLUSIVE
    return SimplicityResult(status, mode, S.dim, checked, seed)


def _random_element(K: FieldCtx, rng: random.Random):
    if K.is_finite:
        return rng.randrange(K.order)
    return K.from_int(rng.randint(-5, 5))


def _sampled_probes(K: FieldCtx, rows: Sequence[Sequence], samples: int, rng: random.Random):
    for r in rows:
        yield tuple(r)
    for a, b in itertools.combinations(rows, 2):
        yield tuple(K.sub(x, y) for x, y in zip(a, b))
    made = 0
    while made < samples:
        c = [_random_element(K, rng) for _ in rows]
        if any(c):
            made += 1
            yield _combine(K, c, rows)


@dataclass
class SocleReport:
    q: int
    dim_v: int
    ell: int
    order_P: int
    predicted: str
    observed: str
    certified: bool
    probes: int
    ones_in_augmentation_kernel: bool
    every_spin_contains_ones: bool
    nonconstant_spins_contain_augmentation_kernel: bool
    seed: int

    @property
    def matches(self) -> bool:
        return self.predicted == self.observed


UNIQUE_SIMPLE = "unique_simple_ones_line"
SPLIT = "augmentation_kernel_plus_ones_line"
OTHER = "other"


def socle_structure(K: FieldCtx, q: int, dim_v: int, *, seed: int | None = None, samples: int = 64,
                    bound: int = 1 << 16) -> SocleReport:
    """Simple submodules of K[P(F_q^dim_v)] found by spinning probe vectors.

    Exhaustive (one probe per line of K^|P|) when ``|K|^|P| <= bound``.
    """
    F = field_of_order(q)
    if dim_v < 2:
        raise ValueError("need dim V >= 2")
    if not K.is_finite:
        raise ValueError("socle_structure expects a coefficient field of positive characteristic")
    ell = K.characteristic
    if dim_v > 2 and ell == F.characteristic:
        raise HypothesisViolated("dim P(V) > 1 and char K = char F")
    seed = get_config().seed if seed is None else seed
    index = grassmannian(F, dim_v, 1)
    N = len(index)
    gens = gl_generators(F, dim_v)
    ones = ModuleVector.ones(K, index)
    diff = ModuleVector.basis(K, index, 0) - ModuleVector.basis(K, index, 1)
    aug = spin([diff], gens)
    assert aug.dim == N - 1
    certified = K.order ** N <= bound
    if certified:
        probes = projective_vectors(K, N)
    else:
        probes = _socle_probes(K, N, samples, random.Random(seed))
    every_contains_ones = True
    nonconstant_generate = True
    count = 0
    for vec in probes:
        count += 1
        v = ModuleVector(K, index, vec)
        T = spin([v], gens, verify=False)
        if not T.contains(ones):
            every_contains_ones = False
        constant = all(x == vec[0] for x in vec)
        if not constant and not aug <= T:
            nonconstant_generate = False
    ones_in_aug = aug.contains(ones)
    if every_contains_ones:
        observed = UNIQUE_SIMPLE
    elif not ones_in_aug and nonconstant_generate:
        observed = SPLIT
    else:
        observed = OTHER
    predicted = UNIQUE_SIMPLE if N % ell == 0 else SPLIT
    return SocleReport(q, dim_v, ell, N, predicted, observed, certified, count, ones_in_aug,
                       every_contains_ones, nonconstant_generate, seed)


def _socle_probes(K: FieldCtx, N: int, samples: int, rng: random.Random):
    def unit(i):
        v = [0] * N
        v[i] = 1
        return v

    yield tuple([1] * N)
    for i in range(N):
        yield tuple(unit(i))
    for i, j in itertools.combinations(range(N), 2):
        v = unit(i)
        v[j] = K.neg(1)
        yield tuple(v)
    made = 0
    while made < samples:
        k = rng.randint(1, N)
        v = [0] * N
        for i in rng.sample(range(N), k):
            v[i] = rng.randrange(1, K.order)
        made += 1
        yield tuple(v)
