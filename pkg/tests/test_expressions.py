from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcasimir.combinatorics import Permutation, coset_reps, enumerate_W
from qcasimir.expressions import (
    AlgebraExpr,
    EGen,
    Eps,
    Root,
    c2_regime,
    cartan_to_front,
    central_element,
    expand,
    hat,
    hat_E,
    parse,
    root_vector_expand,
    serialize,
    term_count,
    tilde_E,
    to_text,
    vanishing_pairs,
)
from qcasimir.representations import ExRep, SymPower, TensorPower
from qcasimir.scalars import INV_QDIFF, ONE, q_pow


def H(*pairs):
    return AlgebraExpr.word(*[hat(a, b) for a, b in pairs])


def c2_display():
    """The explicit five-family expansion of C_2 for N = 3."""
    qm = q_pow(-1)
    out = AlgebraExpr()
    for i in range(4):
        for j in range(i + 1):
            out = out + (H((j, i), (j, i)) * H((i, j), (i, j))).scale(q_pow(-6 + 4 * i))
    for j in range(4):
        for i1 in range(j, 4):
            for i2 in range(i1 + 1, 4):
                tail = H((i2, j), (i1, j)) + H((i1, j), (i2, j)).scale(qm)
                out = out + (H((j, i1), (j, i2)) * tail).scale(q_pow(-6 + 2 * i1 + 2 * i2))
    for i in range(4):
        for j2 in range(i + 1):
            for j1 in range(j2):
                head = H((j1, i), (j2, i)) + H((j2, i), (j1, i)).scale(qm)
                out = out + (head * H((i, j2), (i, j1))).scale(q_pow(-6 + 4 * i))
    for i2 in range(4):
        for j2 in range(i2 + 1):
            for i1 in range(j2):
                for j1 in range(i1 + 1):
                    out = out + H((j1, i1), (j2, i2), (i2, j2), (i1, j1)).scale(q_pow(-6 + 2 * i1 + 2 * i2))
    for i2 in range(4):
        for i1 in range(i2):
            for j2 in range(i1 + 1):
                for j1 in range(j2):
                    head = H((j1, i1), (j2, i2)) + H((j1, i2), (j2, i1)).scale(qm)
                    tail = H((i2, j2), (i1, j1)) + H((i2, j1), (i1, j2)).scale(qm)
                    out = out + (head * tail).scale(q_pow(-6 + 2 * i1 + 2 * i2))
    return out


def test_c1_text_for_n1():
    assert to_text(central_element(1, 1)) == "q^{-1} Ê_{00}Ê_{00} + q Ê_{01}Ê_{10} + q Ê_{11}Ê_{11}"


@pytest.mark.parametrize("N", [1, 2, 3])
def test_c1_closed_form_with_single_cartan_exponents(N):
    # diagonal part plus q^{eps_i + eps_j} E_{ji} E_{ij}; the doubled exponent does not match
    def candidate(half):
        e = AlgebraExpr()
        for i in range(N + 1):
            e = e + AlgebraExpr.word(Eps(i, 4), coeff=q_pow(2 * i - N) * INV_QDIFF**2)
            for j in range(i):
                e = e + AlgebraExpr.word(
                    Eps(i, half), Eps(j, half), Root(j, i, "modified"), Root(i, j, "modified"), coeff=q_pow(2 * i - N - 1)
                )
        return expand(e)

    C = central_element(1, N)
    for k in (1, 2):
        V = TensorPower(N, k)
        assert V.evaluate(candidate(2)) == V.evaluate(C)
        assert V.evaluate(candidate(4)) != V.evaluate(C)


def test_c2_display_acts_like_c2():
    D, C = c2_display(), central_element(2, 3)
    for W in (TensorPower(3, 3), SymPower(3, 3), ExRep(3, 2)):
        assert W.evaluate(D) == W.evaluate(C)


def test_c2_census():
    C = central_element(2, 3)
    assert term_count(C) == 50
    assert Counter(c2_regime(s.i, s.j) for s in C.summands) == {
        "j<=i": 10,
        "one-block": 20,
        "interleaved": 15,
        "separated": 5,
    }
    expected = {
        frozenset({(0, 2), (1, 1)}),
        frozenset({(0, 3), (2, 2)}),
        frozenset({(0, 3), (1, 1)}),
        frozenset({(1, 3), (2, 2)}),
        frozenset({(1, 2), (0, 3)}),
    }
    assert set(vanishing_pairs(2, 3)) == expected


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_c1_term_count(N):
    assert term_count(central_element(1, N)) == (N + 1) * (N + 2) // 2


@pytest.mark.parametrize("m,N", [(2, 2), (3, 1), (3, 2)])
def test_tilde_sums_do_not_depend_on_tau(m, N):
    V = TensorPower(N, 2)
    for i in enumerate_W(m, N):
        for j in enumerate_W(m, N):
            for sign in (1, -1):
                ref = V.evaluate(tilde_E(i, j, sign))
                for tau in coset_reps(j).reps[1:]:
                    assert V.evaluate(tilde_E(i, j, sign, tau)) == ref


def test_tilde_rejects_bad_input():
    with pytest.raises(ValueError):
        tilde_E((1, 0), (0, 1), 1)
    with pytest.raises(ValueError):
        tilde_E((0, 0), (1, 1), 1, tau=Permutation((2, 1)))
    with pytest.raises(ValueError):
        tilde_E((0,), (0, 1), 1)


def test_printed_minus_sum_is_a_q_multiple():
    # the mirrored minus sum differs from the one in the fused R^T by a power of q
    V = TensorPower(2, 2)
    for i, j, e in [((0, 0), (0, 1), 1), ((0, 1), (1, 1), -1), ((0, 1), (1, 2), 0)]:
        a, b = V.evaluate(tilde_E(i, j, -1)), V.evaluate(tilde_E(i, j, -1, printed=True))
        assert a == b.scale(q_pow(e))


def test_root_vectors():
    assert root_vector_expand(0, 1) == AlgebraExpr.word(EGen(1, 1))
    assert root_vector_expand(2, 1) == AlgebraExpr.word(EGen(-1, 2))
    e02 = root_vector_expand(0, 2)
    assert e02 == AlgebraExpr.word(EGen(1, 1), EGen(1, 2)) - AlgebraExpr.word(EGen(1, 2), EGen(1, 1)).scale(q_pow(-1))
    assert hat_E(1, 1) == AlgebraExpr.word(Eps(1, 2), coeff=INV_QDIFF)
    with pytest.raises(ValueError):
        Root(1, 1, "modified")


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([EGen(1, 1), EGen(-1, 2), Eps(0, 1), Eps(1, -2), Eps(2, 3), hat(0, 2)]), max_size=4))
def test_cartan_to_front_preserves_the_action(word):
    e = AlgebraExpr.word(*word, coeff=q_pow(1))
    V = TensorPower(2, 2)
    moved = cartan_to_front(e)
    assert V.evaluate(moved) == V.evaluate(e)
    for w, _ in moved:
        cartan = [isinstance(s, Eps) for s in w]
        assert cartan == sorted(cartan, reverse=True)


@pytest.mark.parametrize("m,N", [(1, 2), (2, 3)])
def test_serialization_roundtrip(m, N):
    C = central_element(m, N)
    back = parse(serialize(C, "json"))
    assert back == C and term_count(back) == term_count(C)
    assert serialize(C, "json") == serialize(central_element(m, N), "json")
    assert serialize(central_element(1, 1), "latex").startswith("C_{1} = q^{-1} \\hat{E}_{00}")
    with pytest.raises(ValueError):
        serialize(C, "yaml")


def test_algebra_expr_arithmetic():
    x = AlgebraExpr.word(EGen(1, 1))
    y = AlgebraExpr.word(EGen(-1, 1))
    assert (x - x).is_zero()
    assert len(x * y - y * x) == 2
    assert (x + y).scale(ONE) == x + y
    with pytest.raises(ValueError):
        central_element(1, 0)


def test_e03_has_four_words():
    assert len(root_vector_expand(0, 3)) == 4
    assert len(root_vector_expand(3, 0)) == 4


@pytest.mark.parametrize("i,j", [(0, 3), (3, 0), (0, 2), (1, 3)])
def test_pivot_choice_does_not_change_the_action(i, j):
    V = TensorPower(3, 2)
    lo, hi = min(i, j), max(i, j)
    ref = V.evaluate(root_vector_expand(i, j))
    for k in range(lo + 1, hi):
        assert V.evaluate(root_vector_expand(i, j, pivots={(i, j): k})) == ref
    with pytest.raises(ValueError):
        root_vector_expand(i, j, pivots={(i, j): hi})
