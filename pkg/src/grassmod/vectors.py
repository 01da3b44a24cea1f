"""Elements of the permutation module K[Gr(r, F_q^n)]."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import AmbientMismatch, ShapeMismatch
from .exactcore import FieldCtx
from .grassmann import GrassmannIndex, Subspace


class ModuleVector:
    """Dense coefficient vector over K indexed by a GrassmannIndex."""

    __slots__ = ("field", "index", "coeffs")

    def __init__(self, field: FieldCtx, index: GrassmannIndex, coeffs: Iterable):
        coeffs = tuple(field.coerce(c) for c in coeffs)
        if len(coeffs) != len(index):
            raise ShapeMismatch(f"{len(coeffs)} coefficients for a module of rank {len(index)}")
        self.field = field
        self.index = index
        self.coeffs = coeffs

    # constructors -------------------------------------------------------------
    @classmethod
    def zero(cls, field: FieldCtx, index: GrassmannIndex) -> "ModuleVector":
        return cls(field, index, [field.zero] * len(index))

    @classmethod
    def basis(cls, field: FieldCtx, index: GrassmannIndex, i: int) -> "ModuleVector":
        c = [field.zero] * len(index)
        c[i] = field.one
        return cls(field, index, c)

    @classmethod
    def point(cls, field: FieldCtx, index: GrassmannIndex, L: Subspace) -> "ModuleVector":
        return cls.basis(field, index, index.index(L))

    @classmethod
    def ones(cls, field: FieldCtx, index: GrassmannIndex) -> "ModuleVector":
        return cls(field, index, [field.one] * len(index))

    @classmethod
    def from_terms(cls, field: FieldCtx, index: GrassmannIndex,
                   terms: Mapping[Subspace, object] | Iterable[tuple[Subspace, object]]) -> "ModuleVector":
        c = [field.zero] * len(index)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for L, a in items:
            i = index.index(L)
            c[i] = field.add(c[i], field.coerce(a))
        return cls(field, index, c)

    # arithmetic -----------------------------------------------------------------
    def _check(self, other: "ModuleVector"):
        if self.field != other.field or self.index is not other.index and self.index.key != other.index.key:
            raise AmbientMismatch("vectors live in different modules")

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        f = self.field
        return ModuleVector(f, self.index, [f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        f = self.field
        return ModuleVector(f, self.index, [f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "ModuleVector":
        f = self.field
        return ModuleVector(f, self.index, [f.neg(a) for a in self.coeffs])

    def scale(self, c) -> "ModuleVector":
        f = self.field
        c = f.coerce(c)
        return ModuleVector(f, self.index, [f.mul(c, a) for a in self.coeffs])

    def permuted(self, perm) -> "ModuleVector":
        out = [self.field.zero] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            out[perm[i]] = a
        return ModuleVector(self.field, self.index, out)

    # inspection -----------------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [i for i, a in enumerate(self.coeffs) if a]

    def terms(self) -> list[tuple[Subspace, object]]:
        return [(self.index[i], self.coeffs[i]) for i in self.support()]

    def __getitem__(self, L: Subspace):
        return self.coeffs[self.index.index(L)]

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return (self.field == other.field and self.index.key == other.index.key
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.index.key, self.coeffs))

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": f.name,
            "grassmannian": [str(k) for k in self.index.key],
            "terms": [[[list(map(str, row)) for row in L.basis], f.format(a)] for L, a in self.terms()],
        }

    def __repr__(self):
        f = self.field
        body = " + ".join(f"{f.format(self.coeffs[i])}[{i}]" for i in self.support())
        return f"ModuleVector({body or '0'})"
