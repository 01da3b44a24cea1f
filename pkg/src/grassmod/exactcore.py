"""Exact arithmetic over F_p, F_{p^e} and Q, and dense linear algebra on top of it.

Finite field elements are plain ints. For F_p that is the residue; for
F_{p^e} it is the code ``sum(c_i * p**i)`` of the coefficient vector
``(c_0, ..., c_{e-1})`` of the polynomial representative. Rationals are
``fractions.Fraction``.

Row reduction works on an internal "work" representation: residues for
finite fields, primitive integer rows for Q (fraction-free elimination with
content removal). Only the final normalisation produces Fractions, which
keeps rational elimination on machine-friendly ints.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Iterable, Iterator, Sequence

from .errors import NoIrreducibleFound, NonPrimeModulus, NonSquare, ShapeMismatch

PRIME = "prime"
EXTENSION = "extension"
RATIONAL = "rational"

MAX_FIELD_ORDER = 1 << 20
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise NonPrimeModulus otherwise."""
    if q < 2:
        raise NonPrimeModulus(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NonPrimeModulus(f"{q} is not a prime power")
    return p, e


# -- polynomials over F_p, coefficient lists constant term first ------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    _poly_trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        f = a[-1] * inv_lead % p
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - f * c) % p
        _poly_trim(a)
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_rem(poly, list(low) + [1], p):
                return False
    return True


def least_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``e`` over F_p.

    Candidates are compared as ``(c_0, c_1, ..., c_{e-1})``.
    """
    for low in itertools.product(range(p), repeat=e):
        poly = tuple(low) + (1,)
        if is_irreducible(poly, p):
            return poly
    raise NoIrreducibleFound(f"no irreducible of degree {e} over F_{p}")


# -- field contexts ----------------------------------------------------------

@dataclass(frozen=True)
class FieldCtx:
    kind: str
    p: int | None = None
    e: int = 1
    modulus: tuple[int, ...] | None = None
    _t: dict = dc_field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind == EXTENSION:
            self._build_tables()

    # identity ------------------------------------------------------------
    @property
    def is_finite(self) -> bool:
        return self.kind != RATIONAL

    @property
    def order(self) -> int | None:
        return None if self.kind == RATIONAL else self.p ** self.e

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONAL else self.p

    @property
    def name(self) -> str:
        if self.kind == RATIONAL:
            return "Q"
        return f"F{self.order}"

    def __repr__(self) -> str:
        return f"FieldCtx({self.name})"

    # elements ------------------------------------------------------------
    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONAL else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONAL else 1

    def from_int(self, k: int):
        if self.kind == RATIONAL:
            return Fraction(k)
        return k % self.p

    def coerce(self, x):
        if self.kind == RATIONAL:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, (int, str)):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into {self.name}")
        if not 0 <= x < self.order:
            raise ValueError(f"{x} is not an element code of {self.name}")
        return x

    def elements(self) -> range:
        if self.kind == RATIONAL:
            raise TypeError("Q has no element enumeration")
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    def sort_key(self, a):
        return a

    def format(self, a) -> str:
        if self.kind == RATIONAL:
            a = Fraction(a)
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def parse(self, s: str):
        if self.kind == RATIONAL:
            return Fraction(s)
        return self.coerce(int(s))

    # arithmetic ----------------------------------------------------------
    def add(self, a, b):
        if self.kind == PRIME:
            return (a + b) % self.p
        if self.kind == RATIONAL:
            return a + b
        t = self._t
        if "add" in t:
            return t["add"][a][b]
        return self._digit_add(a, b, 1)

    def sub(self, a, b):
        if self.kind == PRIME:
            return (a - b) % self.p
        if self.kind == RATIONAL:
            return a - b
        t = self._t
        if "sub" in t:
            return t["sub"][a][b]
        return self._digit_add(a, b, -1)

    def neg(self, a):
        return self.sub(self.zero, a)

    def mul(self, a, b):
        if self.kind == PRIME:
            return a * b % self.p
        if self.kind == RATIONAL:
            return a * b
        if a == 0 or b == 0:
            return 0
        t = self._t
        return t["exp"][(t["log"][a] + t["log"][b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in {self.name}")
        if self.kind == PRIME:
            return pow(a, -1, self.p)
        if self.kind == RATIONAL:
            return 1 / Fraction(a)
        t = self._t
        return t["exp"][(-t["log"][a]) % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.kind == PRIME:
            return pow(a, k, self.p)
        if self.kind == RATIONAL:
            return Fraction(a) ** k
        if a == 0:
            return 1 if k == 0 else 0
        t = self._t
        return t["exp"][(t["log"][a] * k) % (self.order - 1)]

    def sum(self, xs: Iterable):
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def multiplicative_order(self, a) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def primitive_element(self):
        if self.kind == RATIONAL:
            raise TypeError("Q has no primitive element")
        if self.kind == EXTENSION:
            return self._t["gen"]
        for a in range(1, self.p):
            if self.multiplicative_order(a) == self.p - 1:
                return a
        raise AssertionError("unreachable")

    # extension-field internals -------------------------------------------
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        code = 0
        for d in reversed(ds):
            code = code * self.p + d % self.p
        return code

    def _digit_add(self, a, b, sign):
        p = self.p
        return self.from_digits([(x + sign * y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _poly_mul_code(self, a: int, b: int) -> int:
        p, e, m = self.p, self.e, self.modulus
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_rem(prod, m, p)
        return self.from_digits(rem + [0] * (e - len(rem)))

    def _build_tables(self):
        q = self.p ** self.e
        gen = None
        for g in range(2, q):
            x, k = g, 1
            while x != 1:
                x = self._poly_mul_code(x, g)
                k += 1
            if k == q - 1:
                gen = g
                break
        if gen is None:  # q == 2 never reaches here; F_p^1 is PRIME
            raise AssertionError("extension field without generator")
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._poly_mul_code(x, gen)
        t = self._t
        t["gen"], t["exp"], t["log"] = gen, exp, log
        if q <= _TABLE_LIMIT:
            t["add"] = [[self._digit_add(a, b, 1) for b in range(q)] for a in range(q)]
            t["sub"] = [[self._digit_add(a, b, -1) for b in range(q)] for a in range(q)]
            t["mul"] = [[self.mul(a, b) for b in range(q)] for a in range(q)]

    # row work representation ---------------------------------------------
    def _to_work(self, row: Sequence) -> list:
        if self.kind != RATIONAL:
            return list(row)
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [x.numerator * (den // x.denominator) for x in row]
        return _primitive(ints)

    def _from_work(self, row: Sequence, pivot: int | None) -> tuple:
        if self.kind != RATIONAL:
            return tuple(row)
        if pivot is None:
            return tuple(Fraction(0) for _ in row)
        d = row[pivot]
        return tuple(Fraction(x, d) for x in row)

    def _make_pivot(self, row: list, c: int) -> list:
        if self.kind == RATIONAL:
            row = _primitive(row)
            return [-x for x in row] if row[c] < 0 else row
        f = self.inv(row[c])
        if f == 1:
            return row
        return self._scale_work(row, f)

    def _scale_work(self, row, f):
        if self.kind == PRIME:
            p = self.p
            return [x * f % p for x in row]
        t = self._t
        if "mul" in t:
            mf = t["mul"][f]
            return [mf[x] for x in row]
        return [self.mul(f, x) for x in row]

    def _elim(self, v: list, row: list, c: int) -> list:
        """Clear ``v[c]`` using ``row`` (pivot at ``c``); keeps the span."""
        f = v[c]
        if self.kind == PRIME:
            p = self.p
            return [(a - f * b) % p for a, b in zip(v, row)]
        if self.kind == RATIONAL:
            a0 = row[c]
            return _primitive([a0 * x - f * y for x, y in zip(v, row)])
        t = self._t
        if "mul" in t:
            mf, sub = t["mul"][f], t["sub"]
            return [sub[a][mf[b]] for a, b in zip(v, row)]
        return [self.sub(a, self.mul(f, b)) for a, b in zip(v, row)]


def _primitive(ints: list[int]) -> list[int]:
    g = 0
    for x in ints:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return ints
    if g in (0, 1):
        return ints
    return [x // g for x in ints]


@lru_cache(maxsize=None)
def make_field(kind: str, p: int | None = None, e: int = 1) -> FieldCtx:
    """Build (and memoise) a field context.

    ``make_field("extension", 2, 2)`` is F_4 with modulus x^2 + x + 1.
    """
    if kind == RATIONAL:
        return FieldCtx(RATIONAL)
    if p is None or not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p ** e > MAX_FIELD_ORDER:
        raise ValueError(f"fields larger than {MAX_FIELD_ORDER} elements are not supported")
    if kind == PRIME or e == 1:
        if kind == PRIME and e != 1:
            raise ValueError("prime fields have e == 1")
        return FieldCtx(PRIME, p, 1, (0, 1))
    if kind != EXTENSION:
        raise ValueError(f"unknown field kind {kind!r}")
    return FieldCtx(EXTENSION, p, e, least_irreducible(p, e))


QQ = make_field(RATIONAL)


def field_of_order(q: int) -> FieldCtx:
    p, e = prime_power(q)
    return make_field(PRIME if e == 1 else EXTENSION, p, e)


def parse_field(text: str) -> FieldCtx:
    """Parse ``Q``, ``F5``, ``GF(4)`` or a bare order like ``7``."""
    t = text.strip().upper().replace("GF(", "F").rstrip(")")
    if t in ("Q", "QQ", "RATIONAL"):
        return QQ
    if t.startswith("F"):
        t = t[1:]
    try:
        q = int(t)
    except ValueError:
        raise ValueError(f"cannot parse field {text!r}") from None
    return field_of_order(q)


def embedding(src: FieldCtx, dst: FieldCtx) -> Callable[[int], int]:
    """Field embedding ``src -> dst`` for finite fields of equal characteristic."""
    if src == dst:
        return lambda a: a
    if not (src.is_finite and dst.is_finite) or src.p != dst.p or dst.e % src.e:
        raise ValueError(f"{src.name} does not embed into {dst.name}")
    if src.kind == PRIME:
        return dst.from_int
    # find a root of src's modulus in dst
    for beta in dst.elements():
        acc = dst.zero
        for c in reversed(src.modulus):
            acc = dst.add(dst.mul(acc, beta), dst.from_int(c))
        if acc == 0:
            break
    else:
        raise AssertionError("modulus has no root in the larger field")
    powers = [dst.pow(beta, i) for i in range(src.e)]
    table = []
    for a in src.elements():
        img = dst.zero
        for c, pw in zip(src.digits(a), powers):
            img = dst.add(img, dst.mul(dst.from_int(c), pw))
        table.append(img)
    return table.__getitem__


# -- matrices -----------------------------------------------------------------

class Matrix:
    """Immutable dense matrix over a FieldCtx, stored row-major."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: FieldCtx, nrows: int, ncols: int, entries: Iterable):
        entries = tuple(field.coerce(x) for x in entries)
        if len(entries) != nrows * ncols:
            raise ShapeMismatch(f"{len(entries)} entries for a {nrows}x{ncols} matrix")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, field: FieldCtx, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = list(rows)
        if ncols is None:
            if not rows:
                raise ShapeMismatch("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ShapeMismatch("ragged rows")
            flat.extend(r)
        return cls(field, len(rows), ncols, flat)

    @classmethod
    def identity(cls, field: FieldCtx, n: int) -> "Matrix":
        return cls(field, n, n, [field.one if i == j else field.zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, field: FieldCtx, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols, [field.zero] * (nrows * ncols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple:
        c = self.ncols
        return self.entries[i * c:(i + 1) * c]

    def row_list(self) -> list[tuple]:
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self) -> "Matrix":
        r, c = self.nrows, self.ncols
        return Matrix(self.field, c, r, [self.entries[i * c + j] for j in range(c) for i in range(r)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows or self.field != other.field:
            raise ShapeMismatch("incompatible shapes or fields for product")
        cols = other.transpose().row_list()
        out = [dot(self.field, a, b) for a in self.row_list() for b in cols]
        return Matrix(self.field, self.nrows, other.ncols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(f, self.nrows, self.ncols, [f.add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(f, self.nrows, self.ncols, [f.sub(a, b) for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, self.nrows, self.ncols, [f.mul(c, a) for a in self.entries])

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def _same_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) or self.field != other.field:
            raise ShapeMismatch("matrices differ in shape or field")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field, self.nrows, self.ncols, self.entries) == (
            other.field, other.nrows, other.ncols, other.entries)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.row_list())
        return f"Matrix[{self.field.name}]({self.nrows}x{self.ncols}: {body})"


def dot(field: FieldCtx, a: Sequence, b: Sequence):
    if field.kind == PRIME:
        return sum(x * y for x, y in zip(a, b)) % field.p
    if field.kind == RATIONAL:
        return sum((x * y for x, y in zip(a, b)), Fraction(0))
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = field.add(acc, field.mul(x, y))
    return acc


def vec_mat(field: FieldCtx, v: Sequence, rows: Sequence[Sequence]) -> tuple:
    """Row vector ``v`` times the matrix whose rows are ``rows``."""
    n = len(rows[0]) if rows else 0
    out = [field.zero] * n
    for c, row in zip(v, rows):
        if c:
            for j, x in enumerate(row):
                if x:
                    out[j] = field.add(out[j], field.mul(c, x))
    return tuple(out)


# -- elimination ----------------------------------------------------------

def rref_rows(field: FieldCtx, rows: Iterable[Sequence], ncols: int) -> tuple[list[tuple], list[int]]:
    """RREF of a list of rows; returns only the nonzero rows and the pivots."""
    work = [field._to_work(r) for r in rows]
    pivots: list[int] = []
    top = 0
    for c in range(ncols):
        piv = None
        for i in range(top, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        prow = field._make_pivot(work[top], c)
        work[top] = prow
        for i in range(len(work)):
            if i != top and work[i][c]:
                work[i] = field._elim(work[i], prow, c)
        pivots.append(c)
        top += 1
        if top == len(work):
            break
    return [field._from_work(work[i], pivots[i]) for i in range(top)], pivots


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row-echelon form with the shape of ``m`` (zero rows at the bottom)."""
    rows, pivots = rref_rows(m.field, m.row_list(), m.ncols)
    f = m.field
    full = rows + [(f.zero,) * m.ncols] * (m.nrows - len(rows))
    return Matrix.from_rows(f, full, m.ncols) if m.nrows else m, len(pivots), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref_rows(m.field, m.row_list(), m.ncols)[1])


def rank_of_rows(field: FieldCtx, rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref_rows(field, rows, ncols)[1])


def kernel_rows(field: FieldCtx, rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis (in RREF) of ``{x : row . x = 0 for every row}``."""
    red, pivots = rref_rows(field, rows, ncols)
    pset = set(pivots)
    free = [j for j in range(ncols) if j not in pset]
    basis = []
    for fcol in free:
        x = [field.zero] * ncols
        x[fcol] = field.one
        for r, pc in zip(red, pivots):
            if r[fcol]:
                x[pc] = field.neg(r[fcol])
        basis.append(x)
    if not basis:
        return []
    return rref_rows(field, basis, ncols)[0]


def kernel_basis(m: Matrix) -> Matrix:
    """Rows form an RREF basis of the right null space of ``m``."""
    basis = kernel_rows(m.field, m.row_list(), m.ncols)
    return Matrix(m.field, len(basis), m.ncols, [x for r in basis for x in r])


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise NonSquare("only square matrices have inverses")
    f, n = m.field, m.nrows
    aug = [tuple(r) + tuple(f.one if i == j else f.zero for j in range(n)) for i, r in enumerate(m.row_list())]
    red, pivots = rref_rows(f, aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix.from_rows(f, [r[n:] for r in red], n)


def integer_determinant(m: Matrix) -> int:
    """Exact determinant of an integral matrix by Bareiss fraction-free elimination."""
    if m.nrows != m.ncols:
        raise NonSquare(f"{m.nrows}x{m.ncols} matrix has no determinant")
    a = []
    for r in m.row_list():
        row = []
        for x in r:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError("integer_determinant needs integral entries")
            row.append(x.numerator)
        a.append(row)
    return bareiss(a)


def bareiss(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    a = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


class EchelonBasis:
    """Incrementally grown semi-echelon basis of a row space.

    Each stored row is reduced against every earlier pivot, so reducing a
    vector by the rows in insertion order clears all pivot columns.
    """

    def __init__(self, field: FieldCtx, ncols: int):
        self.field = field
        self.ncols = ncols
        self._rows: list[tuple[int, list]] = []
        self.vectors: list[tuple] = []

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Sequence) -> list:
        f = self.field
        w = f._to_work(vec)
        for c, row in self._rows:
            if w[c]:
                w = f._elim(w, row, c)
        return w

    def contains(self, vec: Sequence) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Insert ``vec`` if independent; return whether the dimension grew."""
        w = self._reduce(vec)
        for c, x in enumerate(w):
            if x:
                self._rows.append((c, self.field._make_pivot(w, c)))
                self.vectors.append(tuple(vec))
                return True
        return False

    def rref(self) -> list[tuple]:
        if not self._rows:
            return []
        f = self.field
        rows = [f._from_work(r, c) for c, r in self._rows]
        return rref_rows(f, rows, self.ncols)[0]


def all_vectors(field: FieldCtx, n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(field.elements(), repeat=n)


def projective_vectors(field: FieldCtx, n: int) -> Iterator[tuple]:
    """Nonzero vectors of F^n whose first nonzero coordinate is 1."""
    for lead in range(n):
        for tail in itertools.product(field.elements(), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def lcm(*xs: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), xs, 1)
