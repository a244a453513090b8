from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcasimir.combinatorics import enumerate_B
from qcasimir.expressions import EGen, Eps
from qcasimir.matrices import SparseMatrix, kron_all
from qcasimir.representations import (
    ExRep,
    NotInvariant,
    SymPower,
    TensorPower,
    TensorProduct,
    M_vector,
    conjugate_by_scalars,
    lowering_coefficient,
    lower,
    make_rep,
    raise_,
    restrict_to_sym,
    sym_basis,
    sym_projector,
    tilde_basis_scalars,
    word_index,
)
from qcasimir.scalars import ONE, q_integer, q_pow, s_pow
from qcasimir.verification import all_passed, uqgl_suite

small = st.tuples(st.integers(1, 3), st.integers(1, 3))


def test_defining_action():
    V = TensorPower(2, 1)
    assert V.generator(EGen(1, 1)).apply({1: ONE}) == {0: ONE}
    assert V.generator(EGen(-1, 2)).apply({1: ONE}) == {2: ONE}
    assert V.generator(Eps(1, 2)).apply({1: ONE}) == {1: q_pow(1)}
    with pytest.raises(IndexError):
        V.generator(EGen(1, 3))


@pytest.mark.parametrize("N,k", [(1, 3), (2, 2), (3, 1)])
def test_coproduct_places_k_left_and_k_inverse_right(N, k):
    V, Vk = TensorPower(N, 1), TensorPower(N, k)
    for i in range(1, N + 1):
        for sign in (1, -1):
            e = V.generator(EGen(sign, i))
            expected = SparseMatrix.zeros((N + 1) ** k)
            for v in range(k):
                expected = expected + kron_all([V.K(i, 1)] * v + [e] + [V.K(i, -1)] * (k - 1 - v))
            assert Vk.generator(EGen(sign, i)) == expected


@settings(max_examples=6, deadline=None)
@given(small)
def test_tensor_powers_are_representations(Nk):
    N, k = Nk
    assert all_passed(uqgl_suite(TensorPower(N, k)))


@pytest.mark.parametrize("N,m", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_symmetric_and_ex_reps_are_representations(N, m):
    assert all_passed(uqgl_suite(SymPower(N, m)))
    assert all_passed(uqgl_suite(ExRep(N, m)))


def test_opposite_coproduct_is_a_representation():
    V = TensorPower(2, 1)
    assert all_passed(uqgl_suite(TensorProduct(V, TensorPower(2, 1), reversed=True)))


def test_frozen_m_vector():
    N = 2
    assert M_vector((1, 1, 0), N) == {word_index((0, 1), N): ONE, word_index((1, 0), N): q_pow(-1)}
    assert M_vector((2, 0, 0), N) == {0: ONE}


@pytest.mark.parametrize("m,N", [(1, 3), (2, 2), (3, 2), (2, 3)])
def test_symmetric_subspace(m, N):
    basis = sym_basis(m, N)
    assert basis.dim == comb(m + N, N)
    P = sym_projector(basis)
    assert P @ P == P
    for vec in basis.vectors:
        assert P.apply(vec) == vec
    # generators preserve span{M(mu)}; a single-slot operator does not
    Vm = TensorPower(N, m)
    for sym, g in Vm.generators():
        restrict_to_sym(g, basis)
    if m >= 2:
        single = kron_all([TensorPower(N, 1).generator(EGen(1, 1))] + [SparseMatrix.identity(N + 1)] * (m - 1))
        with pytest.raises(NotInvariant):
            restrict_to_sym(single, basis)


def test_lowering_and_raising():
    assert lower((2, 0), 1) == (1, 1)
    assert lower((0, 2), 1) is None
    assert raise_((0, 2), 1) == (1, 1)
    assert raise_((2, 0), 1) is None
    assert lowering_coefficient((1, 1), 1) == s_pow(1) * (ONE + q_pow(-2))


def test_frozen_normalization_scalars():
    c = tilde_basis_scalars(2, 1)
    assert c == {(2, 0): ONE, (1, 1): s_pow(1), (0, 2): ONE}


@pytest.mark.parametrize("m,N", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_ex_rep_is_the_rescaled_symmetric_power(m, N):
    S, X = SymPower(N, m), ExRep(N, m)
    c = tilde_basis_scalars(m, N)
    for sym, g in X.generators():
        assert conjugate_by_scalars(S.generator(sym), S.basis.compositions, c) == g


def test_ex_rep_action_on_top_vector():
    X = ExRep(1, 2)
    top, mid = X.position[(2, 0)], X.position[(1, 1)]
    assert X.generator(EGen(-1, 1)).apply({top: ONE}) == {mid: q_integer(1)}
    assert X.generator(EGen(1, 1)).apply({top: ONE}) == {}
    assert enumerate_B(2, 1) == X.compositions


def test_make_rep():
    assert make_rep("tensor:2", 2).dim == 9
    assert make_rep("sym", 3, 2).dim == 10
    assert make_rep("exrep:3", 1).dim == 4
    for bad in ("sym", "weird:2", "tensor:0"):
        with pytest.raises(ValueError):
            make_rep(bad, 2)
