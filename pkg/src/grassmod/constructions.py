"""Explicit constructions and identities checked at finite scale.

* alternating binomial sums D_s(N) and the determinant of Delta(p, N);
* rank-one perturbations 1 - t*lam*w of the identity;
* the signed subset sums gamma_m over lines U + F(e0 + s*e1) and their recursion;
* the annihilating group-algebra element Xi;
* the (p-1)-th power of beta in the translation group of a projective line;
* translation sums over an affine chart of P(V);
* the factorisation K[P(V)]° -> K ⊗ Sym^{q-1} V.

Linear maps act on row vectors: a functional ``lam`` is a length-n tuple with
``lam(x) = x . lam`` and ``x -> x + lam(x) w`` has matrix ``I + lam^T w``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import (
    NoGoodScaling,
    NoUncoveredVector,
    PreconditionViolated,
    SpecInvalid,
)
from .exactcore import (
    QQ,
    FieldCtx,
    Matrix,
    all_vectors,
    dot,
    embedding,
    field_of_order,
    inverse,
    integer_determinant,
    kernel_rows,
    rank_of_rows,
    vec_mat,
)
from .gmodule import GroupAlgebraElement, apply_algebra, apply_group
from .grassmann import (
    GroupElement,
    Subspace,
    canonicalize,
    grassmannian,
    random_subspace,
    span_sum,
)
from .vectors import ModuleVector

GAMMA_MAX_M = 20


# -- small linear helpers -----------------------------------------------------

def _axpy(F: FieldCtx, a, x: Sequence, y: Sequence) -> tuple:
    """``a*x + y``."""
    return tuple(F.add(F.mul(a, xi), yi) for xi, yi in zip(x, y))


def _unit(n: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(n))


def _complete(F: FieldCtx, rows: Sequence[Sequence], n: int) -> list[tuple]:
    """``rows`` (independent) followed by standard vectors up to a basis."""
    out = [tuple(r) for r in rows]
    for i in range(n):
        if len(out) == n:
            break
        if rank_of_rows(F, out + [_unit(n, i)], n) > len(out):
            out.append(_unit(n, i))
    if rank_of_rows(F, out, n) != n:
        raise SpecInvalid("rows are not linearly independent")
    return out


def change_of_basis(F: FieldCtx, src: Sequence[Sequence], dst: Sequence[Sequence]) -> GroupElement:
    """The g with ``src[i] . g = dst[i]`` for two bases of F^n."""
    n = len(src)
    B = Matrix.from_rows(F, src, n)
    C = Matrix.from_rows(F, dst, n)
    return GroupElement.from_matrix(inverse(B) @ C)


def rank_one_element(F: FieldCtx, lam: Sequence, w: Sequence, t=1) -> GroupElement:
    """The map ``x -> x + t*lam(x)*w``."""
    n = len(w)
    rows = tuple(
        tuple(F.add(1 if a == b else 0, F.mul(t, F.mul(lam[a], w[b]))) for b in range(n))
        for a in range(n))
    return GroupElement(F, n, rows)


def annihilator(F: FieldCtx, L: Subspace) -> list[tuple]:
    """Basis of the functionals vanishing on L."""
    if L.r == 0:
        return [_unit(L.n, i) for i in range(L.n)]
    return kernel_rows(F, L.basis, L.n)


# -- alternating binomial sums --------------------------------------------------

def d_coefficient(p: int, s: int, N: int) -> int:
    """Sum of (-1)^m C(N, m) over 0 <= m <= N with m = s mod p."""
    return sum((-1) ** m * math.comb(N, m) for m in range(s % p, N + 1, p))


def delta_matrix(p: int, N: int) -> list[list[int]]:
    """Rows N .. N+p-2, columns s = 1 .. p-1."""
    return [[d_coefficient(p, s, row) for s in range(1, p)] for row in range(N, N + p - 1)]


class DeltaResult(NamedTuple):
    det: int
    is_pm_power_of_p: bool
    m: int


def p_adic_power(x: int, p: int) -> int | None:
    """m with |x| = p^m, or None."""
    x = abs(x)
    if x == 0:
        return None
    m = 0
    while x % p == 0:
        x //= p
        m += 1
    return m if x == 1 else None


def delta_check(p: int, N: int) -> DeltaResult:
    det = integer_determinant(Matrix.from_rows(QQ, delta_matrix(p, N), p - 1))
    m = p_adic_power(det, p)
    return DeltaResult(det, m is not None, -1 if m is None else m)


# -- rank-one perturbations -----------------------------------------------------

class RankOneResult(NamedTuple):
    count_noninvertible: int
    inverses_verified: bool


def rank_one_invertibility(q: int, n: int, lam: Sequence, w: Sequence) -> RankOneResult:
    """Count t in F_q with 1 - t*lam*w singular; check the closed-form inverse elsewhere."""
    F = field_of_order(q)
    lam, w = tuple(F.coerce(x) for x in lam), tuple(F.coerce(x) for x in w)
    if len(lam) != n or len(w) != n:
        raise SpecInvalid("lam and w must have length n")
    mu = dot(F, lam, w)
    ident = Matrix.identity(F, n)
    outer = Matrix.from_rows(F, [[F.mul(lam[a], w[b]) for b in range(n)] for a in range(n)], n)
    count, verified = 0, True
    for t in F.elements():
        M = ident - outer.scale(t)
        if rank_of_rows(F, M.row_list(), n) < n:
            count += 1
            continue
        one_minus = F.sub(F.one, F.mul(mu, t))
        if one_minus == 0:
            verified = False
            continue
        inv = ident + outer.scale(F.div(t, one_minus))
        verified &= (M @ inv == ident) and (inv @ M == ident)
    return RankOneResult(count, verified)


def rank_one_sweep(q: int, n: int) -> tuple[int, bool, int]:
    """(max count, all inverses verified, number of (lam, w) pairs) over all of F_q^n x F_q^n."""
    F = field_of_order(q)
    worst, ok, cases = 0, True, 0
    vecs = list(all_vectors(F, n))
    for lam in vecs:
        for w in vecs:
            res = rank_one_invertibility(q, n, lam, w)
            worst = max(worst, res.count_noninvertible)
            ok &= res.inverses_verified
            cases += 1
    return worst, ok, cases


# -- gamma ------------------------------------------------------------------

@dataclass(frozen=True)
class GammaSpec:
    q: int
    n: int
    r: int
    U: Subspace
    e0: tuple
    e1: tuple
    ts: tuple
    K: FieldCtx = QQ

    def __post_init__(self):
        F = field_of_order(self.q)
        if self.r < 1 or self.n < self.r + 1:
            raise SpecInvalid(f"need 1 <= r and n >= r + 1 (got r={self.r}, n={self.n})")
        if self.U.field != F or self.U.n != self.n or self.U.r != self.r - 1:
            raise SpecInvalid("U must be an (r-1)-subspace of F_q^n")
        if len(self.e0) != self.n or len(self.e1) != self.n:
            raise SpecInvalid("e0, e1 must have length n")
        if rank_of_rows(F, list(self.U.basis) + [self.e0, self.e1], self.n) != self.r + 1:
            raise SpecInvalid("e0, e1 are not independent modulo U")
        if any(F.coerce(t) == 0 for t in self.ts):
            raise SpecInvalid("all t_i must be nonzero")

    @property
    def field(self) -> FieldCtx:
        return field_of_order(self.q)

    @property
    def index(self):
        return grassmannian(self.field, self.n, self.r)

    def line(self, s) -> Subspace:
        F = self.field
        return canonicalize(F, self.n, list(self.U.basis) + [_axpy(F, s, self.e1, self.e0)])

    @classmethod
    def random(cls, q: int, n: int, r: int, m: int, rng: random.Random, K: FieldCtx = QQ) -> "GammaSpec":
        F = field_of_order(q)
        U = random_subspace(F, n, r - 1, rng) if r > 1 else canonicalize(F, n, [])
        while True:
            e0 = tuple(rng.randrange(q) for _ in range(n))
            e1 = tuple(rng.randrange(q) for _ in range(n))
            if rank_of_rows(F, list(U.basis) + [e0, e1], n) == r + 1:
                break
        ts = tuple(rng.randrange(1, q) for _ in range(m))
        return cls(q, n, r, U, e0, e1, ts, K)


def gamma(spec: GammaSpec, m: int) -> ModuleVector:
    """Sum over I in {1..m} of (-1)^|I| [U + F(e0 + (sum_{i in I} t_i) e1)]."""
    if not 0 <= m <= len(spec.ts):
        raise SpecInvalid(f"m={m} outside 0..{len(spec.ts)}")
    if m > GAMMA_MAX_M:
        raise SpecInvalid(f"m={m} exceeds the subset enumeration cap {GAMMA_MAX_M}")
    F, K, index = spec.field, spec.K, spec.index
    coeffs = [K.zero] * len(index)
    for k in range(m + 1):
        sign = K.one if k % 2 == 0 else K.neg(K.one)
        for I in itertools.combinations(range(m), k):
            s = F.sum(F.coerce(spec.ts[i]) for i in I)
            j = index.index(spec.line(s))
            coeffs[j] = K.add(coeffs[j], sign)
    return ModuleVector(K, index, coeffs)


def gamma_xi(spec: GammaSpec, t, wrong: bool = False) -> GroupElement:
    """Transvection fixing U + F e1 with e0 -> e0 + t e1.

    ``wrong=True`` gives the negative control e1 -> e1 + c e0 (e0 still goes
    to e0 + t e1), which does not fix e1; c != 0 is chosen with c*t != 1 so
    the map stays invertible, and the control is unavailable over F_2 when
    U + <e0, e1> is all of V.
    """
    F = spec.field
    t = F.coerce(t)
    base = _complete(F, list(spec.U.basis) + [spec.e1, spec.e0], spec.n)
    image = list(base)
    k = spec.r - 1
    image[k + 1] = _axpy(F, t, spec.e1, spec.e0)
    if wrong:
        c = next((c for c in F.nonzero_elements() if F.mul(c, t) != F.one), None)
        if c is not None:
            image[k] = _axpy(F, c, spec.e0, spec.e1)
        elif spec.n > spec.r + 1:
            image[k] = _axpy(F, F.one, base[k + 2], spec.e1)
        else:
            raise SpecInvalid("no invertible negative control exists for these vectors")
    return change_of_basis(F, base, image)


def gamma_recursion_check(spec: GammaSpec, m: int, wrong: bool = False) -> bool:
    """gamma_{m+1} == gamma_m . ([1] - [xi])."""
    if m + 1 > len(spec.ts):
        raise SpecInvalid("need m + 1 <= len(ts)")
    K = spec.K
    xi = gamma_xi(spec, spec.ts[m], wrong)
    one = GroupAlgebraElement.unit(K, spec.field, spec.n)
    op = one - GroupAlgebraElement.of(K, xi)
    return apply_algebra(gamma(spec, m), op) == gamma(spec, m + 1)


# -- Xi -----------------------------------------------------------------------

@dataclass(frozen=True)
class XiSpec:
    q: int
    n: int
    r: int
    L0: Subspace
    others: tuple
    coeffs: tuple
    K: FieldCtx = QQ
    targets: tuple | None = None

    def __post_init__(self):
        F = field_of_order(self.q)
        if not 1 <= self.r < self.n:
            raise SpecInvalid("need 1 <= r < n")
        if not self.others:
            raise SpecInvalid("need at least one L_i with i >= 1")
        for L in (self.L0,) + tuple(self.others):
            if L.field != F or L.n != self.n or L.r != self.r:
                raise SpecInvalid("all L_i must be r-subspaces of F_q^n")
        if len(set((self.L0,) + tuple(self.others))) != len(self.others) + 1:
            raise SpecInvalid("the L_i must be pairwise distinct")
        if len(self.coeffs) != len(self.others) + 1:
            raise SpecInvalid("need one coefficient per L_i")
        if self.targets is not None and (len(self.targets) != len(self.others)
                                         or any(F.coerce(t) == 0 for t in self.targets)):
            raise SpecInvalid("targets must be N nonzero field elements")

    @property
    def field(self) -> FieldCtx:
        return field_of_order(self.q)

    @property
    def index(self):
        return grassmannian(self.field, self.n, self.r)

    def alpha(self) -> ModuleVector:
        return ModuleVector.from_terms(self.K, self.index, zip((self.L0,) + tuple(self.others), self.coeffs))

    @classmethod
    def random(cls, q: int, n: int, r: int, N: int, rng: random.Random, K: FieldCtx = QQ,
               with_targets: bool = False) -> "XiSpec":
        F = field_of_order(q)
        index = grassmannian(F, n, r)
        picks = rng.sample(range(len(index)), N + 1)
        L0, others = index[picks[0]], tuple(index[i] for i in picks[1:])
        coeffs = tuple(K.from_int(rng.choice([-3, -2, -1, 1, 2, 3])) if not K.is_finite
                       else rng.randrange(1, K.order) for _ in range(N + 1))
        targets = tuple(rng.randrange(1, q) for _ in range(N)) if with_targets else None
        return cls(q, n, r, L0, others, coeffs, K, targets)


@dataclass
class XiResult:
    Xi: GroupAlgebraElement
    v: tuple
    w: tuple
    lams: tuple
    targets: tuple
    annihilated: bool
    image_formula_ok: bool
    image_support_ok: bool
    image: ModuleVector

    @property
    def ok(self) -> bool:
        return self.annihilated and self.image_formula_ok and self.image_support_ok


def _subsets(N: int):
    for k in range(N + 1):
        yield from itertools.combinations(range(N), k)


def _functional_sum(F: FieldCtx, lams: Sequence[Sequence], I: Sequence[int], n: int) -> tuple:
    out = (0,) * n
    for i in I:
        out = _axpy(F, F.one, lams[i], out)
    return out


def _formula_valid(F: FieldCtx, L0: Subspace, lams, v, N: int) -> bool:
    """The closed-form image of [L0] holds for every I with lam_I(v) != 0 or lam_I|L0 = 0."""
    for I in _subsets(N):
        lam = _functional_sum(F, lams, I, L0.n)
        if dot(F, v, lam) == 0 and any(dot(F, b, lam) for b in L0.basis):
            return False
    return True


def _invertible_all(F: FieldCtx, lams, w, N: int) -> bool:
    return all(F.add(F.one, dot(F, w, _functional_sum(F, lams, I, len(w)))) != 0 for I in _subsets(N))


def _target_tuples(F: FieldCtx, N: int, fixed: tuple | None):
    if fixed is not None:
        yield tuple(F.coerce(t) for t in fixed)
        return
    yield from itertools.product(list(F.nonzero_elements()), repeat=N)


def _no_zero_subset_sum(F: FieldCtx, ts: Sequence) -> bool:
    return all(F.sum(ts[i] for i in I) != 0 for I in _subsets(len(ts)) if I)


def _choose_scaling(spec: XiSpec, v: tuple, max_attempts: int):
    """Pick (w, lams, targets) with every 1 + xi_I invertible and the image formula valid.

    Preference order: w with lam_i(w) = 0 for all i (then every 1 + xi_I is
    unipotent), target tuples with no vanishing subset sum; then any w, any
    scaling of w, any targets.
    """
    F, n, N = spec.field, spec.n, len(spec.others)
    ws = [w for w in all_vectors(F, n) if not spec.L0.contains(w)]
    if not ws:
        raise NoGoodScaling("no vector outside L0")
    nice_targets = None
    if spec.targets is None:
        nice_targets = next((ts for ts in _target_tuples(F, N, None) if _no_zero_subset_sum(F, ts)), None)
    attempts = 0

    def build(phis, ts):
        return tuple(tuple(F.mul(F.div(t, dot(F, v, phi)), x) for x in phi) for phi, t in zip(phis, ts))

    # pass 1: lam_i vanishing on L_i + F w
    for w in ws:
        phis = []
        for L in spec.others:
            ann = annihilator(F, span_sum(L, canonicalize(F, n, [w])))
            phi = next((a for a in ann if dot(F, v, a) != 0), None)
            if phi is None:
                break
            phis.append(phi)
        else:
            order = [nice_targets] if nice_targets is not None else []
            for ts in itertools.chain(order, _target_tuples(F, N, spec.targets)):
                attempts += 1
                lams = build(phis, ts)
                if _formula_valid(F, spec.L0, lams, v, N):
                    return w, lams, ts
                if attempts > max_attempts:
                    raise NoGoodScaling(f"search exceeded {max_attempts} attempts")
    # pass 2: arbitrary lam_i vanishing on L_i, w rescaled
    phis = [next(a for a in annihilator(F, L) if dot(F, v, a) != 0) for L in spec.others]
    for w0 in ws:
        for c in F.nonzero_elements():
            w = tuple(F.mul(c, x) for x in w0)
            for ts in _target_tuples(F, N, spec.targets):
                attempts += 1
                lams = build(phis, ts)
                if _invertible_all(F, lams, w, N) and _formula_valid(F, spec.L0, lams, v, N):
                    return w, lams, ts
                if attempts > max_attempts:
                    raise NoGoodScaling(f"search exceeded {max_attempts} attempts")
    raise NoGoodScaling("no scaling makes every 1 + xi_I invertible with a valid image formula")


def xi_build(spec: XiSpec, max_attempts: int = 20000) -> XiResult:
    """Build Xi = sum_I (-1)^|I| [1 + xi_I] and verify what it does to [L_0], ..., [L_N]."""
    F, K, n, N = spec.field, spec.K, spec.n, len(spec.others)
    v = next((x for x in spec.L0.vectors() if any(x) and not any(L.contains(x) for L in spec.others)), None)
    if v is None:
        raise NoUncoveredVector("L0 is covered by L_1, ..., L_N")
    v = tuple(v)
    w, lams, ts = _choose_scaling(spec, v, max_attempts)
    terms = []
    for I in _subsets(N):
        sign = K.one if len(I) % 2 == 0 else K.neg(K.one)
        terms.append((sign, rank_one_element(F, _functional_sum(F, lams, I, n), w)))
    Xi = GroupAlgebraElement(K, terms)
    index = spec.index
    annihilated = all(apply_algebra(ModuleVector.point(K, index, L), Xi).is_zero() for L in spec.others)
    image = apply_algebra(ModuleVector.point(K, index, spec.L0), Xi)
    formula = ModuleVector.zero(K, index)
    formula_dims_ok = True
    for I in _subsets(N):
        lam = _functional_sum(F, lams, I, n)
        # L0 ∩ ker(lam): combinations c of the L0 basis with (c . B) . lam = 0
        vals = [dot(F, b, lam) for b in spec.L0.basis]
        ker = [vec_mat(F, c, spec.L0.basis) for c in kernel_rows(F, [vals], spec.L0.r)]
        term = canonicalize(F, n, ker + [_axpy(F, dot(F, v, lam), w, v)])
        if term.r != spec.r:
            formula_dims_ok = False
            break
        sign = K.one if len(I) % 2 == 0 else K.neg(K.one)
        formula = formula + ModuleVector.point(K, index, term).scale(sign)
    formula_ok = formula_dims_ok and image == formula
    Vp = span_sum(spec.L0, canonicalize(F, n, [w]))
    support_ok = all(all(Vp.contains(b) for b in index[i].basis) for i in image.support())
    if _no_zero_subset_sum(F, ts):
        support_ok &= image[spec.L0] == K.one
    return XiResult(Xi, v, w, lams, tuple(ts), annihilated, formula_ok, support_ok, image)


def r1_reduction(spec: XiSpec, result: XiResult) -> bool:
    """For r = 1: alpha . Xi . g == a_0 gamma_N(t) where v.g = e_0 and w.g = e_1."""
    if spec.r != 1:
        raise SpecInvalid("the reduction applies to r = 1")
    F, n = spec.field, spec.n
    e0, e1 = _unit(n, 0), _unit(n, 1)
    g = change_of_basis(F, _complete(F, [result.v, result.w], n), _complete(F, [e0, e1], n))
    lhs = apply_group(apply_algebra(spec.alpha(), result.Xi), g)
    gspec = GammaSpec(spec.q, n, 1, canonicalize(F, n, []), e0, e1, result.targets, spec.K)
    rhs = gamma(gspec, len(result.targets)).scale(spec.coeffs[0])
    return lhs == rhs


# -- beta in the translation group of P^1 --------------------------------------

def _line_coords(F: FieldCtx, f1: Sequence, f2: Sequence, y: Sequence):
    """(a, b) with y = a f1 + b f2."""
    g = change_of_basis(F, [f1, f2], [_unit(2, 0), _unit(2, 1)])
    return g.apply(y)


def translation(F: FieldCtx, f1: Sequence, f2: Sequence, c) -> GroupElement:
    """u_c: f1 -> f1 + c f2, f2 -> f2."""
    return change_of_basis(F, [f1, f2], [_axpy(F, c, f2, f1), tuple(f2)])


def beta_element(K: FieldCtx, q: int, coeffs: Sequence, points: Sequence[Subspace], O: Subspace
                 ) -> GroupAlgebraElement:
    F = field_of_order(q)
    f2, f1 = points[0].basis[0], O.basis[0]
    terms = []
    for a, x in zip(coeffs[1:], points[1:]):
        s, t = _line_coords(F, f1, f2, x.basis[0])
        terms.append((a, translation(F, f1, f2, F.div(t, s))))
    return GroupAlgebraElement(K, terms)


def beta_power_identity(K: FieldCtx, q: int, coeffs: Sequence, points: Sequence[Subspace], O: Subspace) -> bool:
    """alpha . beta^(p-1) == a_1^p ([x_1] - [O]) in K[P^1(F_q)]."""
    F = field_of_order(q)
    p = F.characteristic
    if not K.is_finite or K.characteristic != p:
        raise PreconditionViolated("K and F_q must have the same characteristic")
    if len(coeffs) != len(points) or not points:
        raise PreconditionViolated("need one coefficient per point")
    if any(x.field != F or x.n != 2 or x.r != 1 for x in list(points) + [O]):
        raise PreconditionViolated("points must be lines in F_q^2")
    if len(set(points)) != len(points):
        raise PreconditionViolated("points must be distinct")
    if O == points[0]:
        raise PreconditionViolated("O must differ from x_1")
    coeffs = [K.coerce(a) for a in coeffs]
    if K.sum(coeffs) != 0:
        raise PreconditionViolated("coefficients must sum to zero")
    index = grassmannian(F, 2, 1)
    alpha = ModuleVector.from_terms(K, index, zip(points, coeffs))
    beta = beta_element(K, q, coeffs, points, O)
    power = beta ** (p - 1) if beta.terms else beta
    lhs = apply_algebra(alpha, power)
    rhs = (ModuleVector.point(K, index, points[0]) - ModuleVector.point(K, index, O)).scale(K.pow(coeffs[0], p))
    return lhs == rhs


# -- translation sums ---------------------------------------------------------

def elations(F: FieldCtx, H: Subspace) -> list[GroupElement]:
    """x -> x + phi(x) h for h in H, where phi has kernel H."""
    (phi,) = annihilator(F, H)
    return [rank_one_element(F, phi, h) for h in H.vectors()]


def translation_sum_identity(K: FieldCtx, q: int, dim_v: int, H: Subspace, alpha: ModuleVector) -> bool:
    """(sum over U_H) alpha == (sum_{x not in H} a_x) sum_{x not in H}[x] + q^(dim V - 1) sum_{x in H} a_x [x]."""
    F = field_of_order(q)
    if H.field != F or H.n != dim_v or H.r != dim_v - 1:
        raise PreconditionViolated("H must be a hyperplane of F_q^dim_v")
    index = grassmannian(F, dim_v, 1)
    if alpha.index.key != index.key or alpha.field != K:
        raise PreconditionViolated("alpha must lie in K[P(V)]")
    lhs = ModuleVector.zero(K, index)
    for g in elations(F, H):
        lhs = lhs + apply_group(alpha, g)
    inside = [H.contains(index[i].basis[0]) for i in range(len(index))]
    outside_sum = K.sum(a for a, h in zip(alpha.coeffs, inside) if not h)
    scale = K.from_int(q ** (dim_v - 1))
    rhs = ModuleVector(K, index, [K.mul(scale, a) if h else outside_sum
                                  for a, h in zip(alpha.coeffs, inside)])
    return lhs == rhs


def random_hyperplane(F: FieldCtx, n: int, rng: random.Random) -> Subspace:
    return random_subspace(F, n, n - 1, rng)


# -- symmetric powers ---------------------------------------------------------

@dataclass
class SymPowerResult:
    matrix: Matrix  # rows = domain basis [x_i] - [x_0], columns = monomials
    monomials: list[tuple[int, ...]]
    injective: bool
    witness: ModuleVector | None

    @property
    def domain_dim(self) -> int:
        return self.matrix.nrows

    @property
    def codomain_dim(self) -> int:
        return self.matrix.ncols


def monomials(d: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total ``degree`` in ``d`` variables, lexicographically descending."""
    out = [c for c in itertools.product(range(degree + 1), repeat=d) if sum(c) == degree]
    return sorted(out, reverse=True)


def _multinomial(exps: Sequence[int]) -> int:
    out, total = 1, 0
    for e in exps:
        total += e
        out *= math.comb(total, e)
    return out


def sym_power_factor(q: int, dim_v: int, K: FieldCtx | None = None) -> SymPowerResult:
    """Matrix of sum a_x [x] -> sum a_x x~^(q-1) on K[P(V)]°, plus a kernel witness."""
    F = field_of_order(q)
    K = F if K is None else K
    if not K.is_finite or K.characteristic != F.characteristic or K.e % F.e:
        raise PreconditionViolated(f"{K.name} is not an extension of {F.name}")
    if dim_v < 2:
        raise PreconditionViolated("need dim V >= 2")
    emb = embedding(F, K)
    index = grassmannian(F, dim_v, 1)
    monos = monomials(dim_v, q - 1)
    mult = [K.from_int(_multinomial(m)) for m in monos]

    def image(x: Subspace) -> list:
        lift = [emb(c) for c in x.basis[0]]
        out = []
        for m, c in zip(monos, mult):
            val = c
            for a, e in zip(lift, m):
                val = K.mul(val, K.pow(a, e))
            out.append(val)
        return out

    imgs = [image(x) for x in index]
    rows = [[K.sub(a, b) for a, b in zip(imgs[i], imgs[0])] for i in range(1, len(index))]
    M = Matrix.from_rows(K, rows, len(monos))
    dom = len(rows)
    injective = rank_of_rows(K, rows, len(monos)) == dom
    witness = None
    if not injective:
        c = kernel_rows(K, M.transpose().row_list(), dom)[0]
        coeffs = [K.neg(K.sum(c))] + list(c)
        witness = ModuleVector(K, index, coeffs)
    return SymPowerResult(M, monos, injective, witness)
