import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassmod.errors import NonPrimeModulus, NonSquare
from grassmod.exactcore import (
    QQ,
    EchelonBasis,
    Matrix,
    embedding,
    field_of_order,
    integer_determinant,
    inverse,
    is_irreducible,
    kernel_basis,
    least_irreducible,
    make_field,
    parse_field,
    rank,
    rref,
)

SMALL_FIELDS = [field_of_order(q) for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)]


def cofactor_det(a):
    """Naive Laplace expansion along the first row (test oracle)."""
    if not a:
        return 1
    return sum((-1) ** j * a[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in a[1:]])
               for j in range(len(a)))


# -- fields ------------------------------------------------------------------

def test_prime_field_f2():
    F = make_field("prime", 2, 1)
    assert F.order == 2 and list(F.elements()) == [0, 1]


def test_f4_modulus_is_x2_x_1():
    F = make_field("extension", 2, 2)
    assert F.order == 4
    assert F.modulus == (1, 1, 1)


def test_f4_modulus_is_only_irreducible_quadratic():
    quads = [(a, b, 1) for a in range(2) for b in range(2)]
    assert [m for m in quads if is_irreducible(m, 2)] == [(1, 1, 1)]


def test_non_prime_modulus():
    with pytest.raises(NonPrimeModulus):
        make_field("prime", 4, 1)


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (2, 4), (5, 2)])
def test_least_irreducible_is_lexicographically_first(p, e):
    chosen = least_irreducible(p, e)
    earlier = [tuple(low) + (1,) for low in itertools.product(range(p), repeat=e)]
    earlier = earlier[:earlier.index(chosen)]
    assert is_irreducible(chosen, p)
    assert not any(is_irreducible(m, p) for m in earlier)


@pytest.mark.parametrize("F", SMALL_FIELDS, ids=lambda F: F.name)
def test_field_axioms_exhaustive(F):
    els = list(F.elements())
    for a in els:
        assert F.add(a, F.zero) == a and F.mul(a, F.one) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.sub(F.add(a, b), b) == a
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("F", SMALL_FIELDS, ids=lambda F: F.name)
def test_primitive_element_generates(F):
    alpha = F.primitive_element()
    assert F.multiplicative_order(alpha) == F.order - 1


def test_embedding_f2_into_f4_and_f4_into_f16():
    F2, F4, F16 = field_of_order(2), field_of_order(4), field_of_order(16)
    assert [embedding(F2, F4)(a) for a in F2.elements()] == [0, 1]
    emb = embedding(F4, F16)
    for a, b in itertools.product(F4.elements(), repeat=2):
        assert emb(F4.add(a, b)) == F16.add(emb(a), emb(b))
        assert emb(F4.mul(a, b)) == F16.mul(emb(a), emb(b))


def test_parse_field():
    assert parse_field("Q") is QQ
    assert parse_field("F5").order == 5
    assert parse_field("GF(4)").order == 4


# -- rref / kernel ---------------------------------------------------------------

def test_rref_identity():
    F = field_of_order(2)
    I = Matrix.identity(F, 3)
    R, rk, piv = rref(I)
    assert R == I and rk == 3 and piv == (0, 1, 2)


def test_rref_duplicate_row():
    F = field_of_order(2)
    R, rk, piv = rref(Matrix.from_rows(F, [(1, 1), (1, 1)]))
    assert R.row_list() == [(1, 1), (0, 0)] and rk == 1 and piv == (0,)


def test_rref_f3_example():
    F = field_of_order(3)
    R, rk, _ = rref(Matrix.from_rows(F, [(0, 1, 1), (1, 0, 1)]))
    assert R.row_list() == [(1, 0, 1), (0, 1, 1)] and rk == 2


def test_kernel_examples():
    F = field_of_order(2)
    assert kernel_basis(Matrix.zeros(F, 2, 3)) == Matrix.identity(F, 3)
    assert kernel_basis(Matrix.identity(F, 3)).nrows == 0
    assert kernel_basis(Matrix.from_rows(F, [(1, 1)])).row_list() == [(1, 1)]


def test_integer_determinant_examples():
    assert integer_determinant(Matrix.from_rows(QQ, [(7,)])) == 7
    assert integer_determinant(Matrix.from_rows(QQ, [(1, 2), (3, 4)])) == -2
    assert integer_determinant(Matrix.from_rows(QQ, [(-1,)])) == -1
    with pytest.raises(NonSquare):
        integer_determinant(Matrix.from_rows(QQ, [(1, 2)]))


def random_matrix(F, rng, rows, cols):
    if F.is_finite:
        return Matrix.from_rows(F, [[rng.randrange(F.order) for _ in range(cols)] for _ in range(rows)], cols)
    return Matrix.from_rows(F, [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
                                for _ in range(rows)], cols)


@pytest.mark.parametrize("F", [field_of_order(2), field_of_order(3), field_of_order(4), field_of_order(7), QQ],
                         ids=lambda F: F.name)
def test_rank_transpose_200_cases(F):
    rng = random.Random(1234)
    for _ in range(200):
        m = random_matrix(F, rng, rng.randint(0, 5), rng.randint(1, 5))
        assert rank(m) == rank(m.transpose())


def _field_and_matrix():
    fields = st.sampled_from([field_of_order(2), field_of_order(3), field_of_order(4), field_of_order(9), QQ])

    @st.composite
    def build(draw):
        F = draw(fields)
        r, c = draw(st.integers(0, 5)), draw(st.integers(1, 6))
        if F.is_finite:
            elem = st.integers(0, F.order - 1)
        else:
            elem = st.fractions(min_value=-5, max_value=5, max_denominator=4)
        rows = [[draw(elem) for _ in range(c)] for _ in range(r)]
        return Matrix.from_rows(F, rows, c)

    return build()


@settings(max_examples=150, deadline=None)
@given(_field_and_matrix())
def test_rref_idempotent(m):
    R, rk, piv = rref(m)
    assert rref(R)[0] == R
    assert list(piv) == sorted(set(piv)) and rk == len(piv)


@settings(max_examples=150, deadline=None)
@given(_field_and_matrix())
def test_rank_nullity(m):
    K = kernel_basis(m)
    assert K.nrows + rank(m) == m.ncols
    if K.nrows:
        assert (m @ K.transpose()).is_zero()
        assert rref(K)[0] == K


@settings(max_examples=100, deadline=None)
@given(_field_and_matrix())
def test_echelon_basis_matches_rank(m):
    eb = EchelonBasis(m.field, m.ncols)
    for row in m.row_list():
        eb.add(row)
    assert eb.dim == rank(m)
    assert all(eb.contains(row) for row in m.row_list())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_cofactor(rows):
    assert integer_determinant(Matrix.from_rows(QQ, rows)) == cofactor_det(rows)


def test_inverse_roundtrip():
    rng = random.Random(7)
    for F in (field_of_order(5), field_of_order(8), QQ):
        done = 0
        while done < 20:
            m = random_matrix(F, rng, 3, 3)
            if rank(m) < 3:
                continue
            assert m @ inverse(m) == Matrix.identity(F, 3)
            done += 1
