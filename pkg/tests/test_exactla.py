import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopflab.exactla import (
    QQ,
    Cyclotomic,
    FieldMismatchError,
    Mat,
    PrimeField,
    RowReducer,
    Subspace,
    field_from_spec,
    inverse_rows,
    kernel,
    left_kernel_rows,
    mat_mul,
    quotient_basis,
    rank,
    rref,
    rref_rows,
    root_of_unity,
    solve_left,
    tensor_index,
    tensor_unindex,
)
from hopflab.exactla import poly
from hopflab.exactla.linalg import identity, to_sparse

import oracles

FIELDS = [QQ, PrimeField(2), PrimeField(3), PrimeField(7), Cyclotomic(3), Cyclotomic(4), Cyclotomic(5),
          Cyclotomic(8)]
seeds = st.integers(min_value=0, max_value=10**9)


def elements(F, seed, k):
    rng = random.Random(seed)
    return [F.random_element(rng) for _ in range(k)]


@pytest.mark.parametrize("F", FIELDS, ids=repr)
@given(seed=seeds)
def test_field_axioms(F, seed):
    a, b, c = elements(F, seed, 3)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == F.zero
    assert F.mul(a, F.one) == a
    if a != F.zero:
        assert F.mul(a, F.inv(a)) == F.one


@pytest.mark.parametrize("F", FIELDS, ids=repr)
@given(seed=seeds)
def test_text_round_trip(F, seed):
    (a,) = elements(F, seed, 1)
    assert F.parse(F.to_text(a)) == a
    assert field_from_spec(F.spec()) == F


def test_inverse_of_zero_raises():
    for F in FIELDS:
        with pytest.raises(ZeroDivisionError):
            F.inv(F.zero)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 12])
def test_primitive_roots_in_cyclotomic_fields(n):
    F = Cyclotomic(n)
    z = root_of_unity(F, n)
    assert F.pow(z, n) == F.one
    assert all(F.pow(z, k) != F.one for k in range(1, n))


def test_gf_roots_of_unity():
    z = root_of_unity(PrimeField(7), 3)
    assert pow(z, 3, 7) == 1 and z != 1
    with pytest.raises(ValueError):
        root_of_unity(PrimeField(5), 3)


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(6)


def test_scalar_arithmetic_refuses_mixed_fields():
    a, b = QQ.scalar(1), PrimeField(3).scalar(1)
    with pytest.raises(FieldMismatchError):
        a + b


# -- row reduction ------------------------------------------------------------

def test_rref_identity_is_fixed():
    I3 = identity(QQ, 3)
    assert rref(Mat(QQ, I3, 3)).rows == I3


def test_rref_dependent_rows():
    rows, piv = rref_rows(QQ, Mat.from_values(QQ, [[2, 4], [1, 2]]).rows, 2)
    assert rows == ((QQ.one, QQ.from_int(2)),) and piv == (0,)


def test_rref_gf2_example_against_oracle():
    F = PrimeField(2)
    rows, _ = rref_rows(F, [(1, 1), (1, 0)], 2)
    expect, _ = oracles.gauss_jordan_mod([[1, 1], [1, 0]], 2)
    assert [list(r) for r in rows] == expect == [[1, 0], [0, 1]]
    # [[1,1],[1,2]] over GF(2) is [[1,1],[1,0]]
    M = Mat.from_values(F, [[1, 1], [1, 2]])
    assert rref(M).rows == ((1, 0), (0, 1))


small_q = st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=5)


def _fr(x):
    return Fraction(int(x.numerator), int(x.denominator))


@given(small_q)
def test_rref_matches_oracle_over_q(rows):
    got, piv = rref_rows(QQ, [tuple(QQ.from_int(x) for x in r) for r in rows], 4)
    want, wpiv = oracles.gauss_jordan([[Fraction(x) for x in r] for r in rows])
    assert [[_fr(x) for x in r] for r in got] == want
    assert list(piv) == wpiv


@given(small_q, st.sampled_from([2, 3, 5]))
def test_rref_matches_oracle_mod_p(rows, p):
    F = PrimeField(p)
    got, _ = rref_rows(F, [tuple(x % p for x in r) for r in rows], 4)
    want, _ = oracles.gauss_jordan_mod(rows, p)
    assert [list(r) for r in got] == want


@given(small_q)
def test_left_kernel_property(rows):
    M = [tuple(QQ.from_int(x) for x in r) for r in rows]
    K = left_kernel_rows(QQ, M, 4)
    assert len(K) + rank(QQ, M, 4) == len(M)
    for k in K:
        assert all(x == 0 for x in mat_mul(QQ, [k], M)[0])


@given(small_q, st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_left(rows, coeffs):
    M = [tuple(QQ.from_int(x) for x in r) for r in rows]
    x = [QQ.from_int(c) for c in coeffs[: len(M)]]
    target = mat_mul(QQ, [x], M)[0]
    sol = solve_left(QQ, M, target, 4)
    assert sol is not None
    assert mat_mul(QQ, [sol], M)[0] == target


@given(st.integers(0, 10**6))
def test_inverse_rows(seed):
    rng = random.Random(seed)
    F = Cyclotomic(3)
    while True:
        M = [tuple(F.random_element(rng) for _ in range(3)) for _ in range(3)]
        if rank(F, M, 3) == 3:
            break
    assert mat_mul(F, M, inverse_rows(F, M)) == identity(F, 3)


def test_row_reducer_tag_columns_never_pivot():
    red = RowReducer(QQ, 2)
    assert red.add({0: QQ.one, 2: QQ.one}) is None
    rest = red.add({0: QQ.from_int(2), 3: QQ.one})
    assert set(rest) == {2, 3}
    assert red.pivot_columns() == (0,)


# -- subspaces ----------------------------------------------------------------

def test_annihilator_examples():
    F = QQ
    assert Subspace.full(F, 3).annihilator().dim == 0
    U = Subspace.span(F, 4, [(F.one, F.one, F.zero, F.zero)])
    perp = U.annihilator()
    assert perp.dim == 3
    assert perp.annihilator() == U


@given(small_q)
def test_subspace_lattice_laws(rows):
    F = QQ
    U = Subspace.span(F, 4, [tuple(F.from_int(x) for x in r) for r in rows])
    V = Subspace.span(F, 4, [tuple(F.from_int(x) for x in r) for r in rows[::-1][:2]])
    assert U.annihilator().annihilator() == U
    assert (U & U) == U
    assert (U + V).dim + (U & V).dim == U.dim + V.dim
    assert U.annihilator().dim == 4 - U.dim


def test_kernel_of_matrix():
    F = QQ
    M = Mat.from_values(F, [[1, 2], [2, 4], [0, 0]])
    K = kernel(M)
    assert K.dim == 2
    for v in K.basis:
        assert mat_mul(F, [v], M.rows)[0] == (F.zero, F.zero)


def test_quotient_basis_examples():
    F = QQ
    e = [tuple(F.one if i == j else F.zero for j in range(4)) for i in range(4)]
    W = Subspace.span(F, 4, e[:3])
    lift, proj = quotient_basis(W, Subspace.zero(F, 4))
    assert mat_mul(F, lift.rows, proj.rows) == identity(F, 3)
    lift, _ = quotient_basis(W, W)
    assert lift.rows == ()
    # W = span{1, g, x}, U = span{1, g} inside H4's basis (1, g, x, gx)
    lift, proj = quotient_basis(W, Subspace.span(F, 4, e[:2]))
    assert lift.rows == (e[2],)
    assert all(x == 0 for r in mat_mul(F, e[:2], proj.rows) for x in r)


def test_quotient_requires_containment():
    F = QQ
    U = Subspace.span(F, 2, [(F.one, F.zero)])
    V = Subspace.span(F, 2, [(F.zero, F.one)])
    with pytest.raises(ValueError):
        quotient_basis(U, V)


def test_tensor_index():
    assert tensor_index(3, 0, 0) == 0
    assert tensor_index(3, 1, 2) == 5
    assert tensor_unindex(3, 7) == (2, 1)
    with pytest.raises(IndexError):
        tensor_index(3, 3, 0)


@given(st.integers(1, 6), st.data())
def test_tensor_index_bijective(d, data):
    k = data.draw(st.integers(0, d * d - 1))
    assert tensor_index(d, *tensor_unindex(d, k)) == k


def test_sparse_conversion_drops_zeros():
    assert to_sparse(QQ, (QQ.zero, QQ.one)) == {1: QQ.one}


# -- polynomials --------------------------------------------------------------

def test_polynomial_roots_over_cyclotomic():
    F = Cyclotomic(3)
    z = F.zeta
    # (t - 1)(t - z)(t - z^2) = t^3 - 1
    f = [F.neg(F.one), F.zero, F.zero, F.one]
    rts = poly.roots(F, f)
    assert sorted(map(str, rts)) == sorted(map(str, [F.one, z, F.mul(z, z)]))


def test_polynomial_gcd():
    F = QQ
    f = [F.from_int(c) for c in (-1, 0, 1)]   # t^2 - 1
    g = [F.from_int(c) for c in (1, 1)]       # t + 1
    assert poly.monic(F, poly.gcd(F, f, g)) == [F.one, F.one]
