import json
import random

import pytest

from qcasimir.expressions import Root, central_element, hat
from qcasimir.matrices import SparseMatrix, matrix_unit
from qcasimir.representations import ExRep, SymPower, TensorPower
from qcasimir.scalars import INV_QDIFF, ZERO, q_pow
from qcasimir.verification import (
    NotScalar,
    VerificationReport,
    all_passed,
    slot_exchange_suite,
    c_lambda0_eigenvalue,
    check_centrality,
    check_scalar,
    transfer_examples,
    transfer_suite,
    eigenvalue_agreement,
    eigenvalue_bridge,
    eigenvalue_formula,
    exrep_suite,
    path_suite,
    lowering_suite,
    rho_pairing_suite,
    relation_suite,
    sorted_reports,
    tilde_independence,
    weyl_vector,
    well_definedness_suite,
)


def failing(reports):
    return [r for r in reports if not r.passed]


def test_check_scalar_reports_witnesses():
    c = q_pow(3) * INV_QDIFF
    assert check_scalar(SparseMatrix.identity(3).scale(c)) == c
    bad = check_scalar(SparseMatrix.identity(3) + matrix_unit(3, 0, 2))
    assert isinstance(bad, NotScalar) and bad.witness["row"] == 0 and bad.witness["col"] == 2
    uneven = check_scalar(SparseMatrix.diagonal([q_pow(0), q_pow(0), q_pow(1)]))
    assert uneven.witness["row"] == 2


def test_centrality_report_catches_non_central_matrices():
    V = TensorPower(1, 1)
    assert check_centrality(V.evaluate(central_element(1, 1)), V).passed
    report = check_centrality(matrix_unit(2, 0, 1), V)
    assert not report.passed and report.witness is not None
    line = json.loads(report.json_line())
    assert set(line) == {"check", "params", "pass", "witness"}


def test_printed_c2_is_not_central():
    V = TensorPower(2, 1)
    assert not check_centrality(V.evaluate(central_element(2, 2, printed=True)), V).passed


@pytest.mark.parametrize("N,k", [(2, 2), (3, 2), (4, 2), (3, 3)])
def test_root_vector_relations(N, k):
    assert failing(relation_suite(N, k, families=["comm", "comm1", "comm2", "comm3"])) == []


def test_hatted_relation_fails_outside_its_range():
    V = TensorPower(3, 2)
    H = lambda a, b: V.symbol(hat(a, b))
    i, j, k, l = 0, 1, 2, 3
    lhs = H(i, l) @ H(j, k) + (H(i, k) @ H(j, l)).scale(q_pow(-1))
    rhs = H(j, k) @ H(i, l) + (H(j, l) @ H(i, k)).scale(q_pow(1))
    assert lhs != rhs


def test_primed_root_vectors_break_the_commutation_family():
    V = TensorPower(3, 2)
    for variant, holds in (("modified", True), ("primed", False)):
        E = lambda a, b: V.symbol(Root(a, b, variant))
        assert (E(0, 2) @ E(1, 2) == (E(1, 2) @ E(0, 2)).scale(q_pow(1))) == holds


@pytest.mark.parametrize("m,N", [(1, 2), (2, 2), (3, 2)])
def test_representative_independence(m, N):
    assert failing(well_definedness_suite(m, N, exponent="corrected")) == []
    printed = failing(well_definedness_suite(m, N, exponent="printed"))
    assert (printed == []) == (m == 1)


def test_printed_representative_failure_counts():
    assert len(failing(well_definedness_suite(2, 2, exponent="printed"))) == 20
    assert len(failing(well_definedness_suite(3, 2, exponent="printed"))) == 80


@pytest.mark.parametrize("m,N", [(2, 2), (3, 1)])
def test_tilde_independence_suite(m, N):
    assert all_passed(tilde_independence(m, N))
    assert all_passed(tilde_independence(m, N, printed=True))


@pytest.mark.parametrize("m,N", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_symmetric_subspace_suites(m, N):
    assert lowering_suite(m, N).passed
    assert all_passed(exrep_suite(m, N))
    assert all_passed(transfer_suite(m, N))
    assert all_passed(slot_exchange_suite(m, N, literal=False))


def test_literal_slot_exchange_fails_without_the_weight_factor():
    assert all_passed(slot_exchange_suite(1, 2, literal=True))
    assert not all_passed(slot_exchange_suite(2, 2, literal=True))


def test_core_examples():
    assert transfer_examples().passed


def test_paths_and_rho_pairing():
    assert all_passed(path_suite(5, 20, seed=3))
    assert rho_pairing_suite(3, 4).passed


@pytest.mark.parametrize("m,N,k", [(1, 1, 1), (1, 2, 2), (2, 2, 1), (2, 3, 2), (2, 1, 2)])
def test_eigenvalue_convention(m, N, k):
    assert eigenvalue_agreement(m, N, k, "highest").passed
    assert not eigenvalue_agreement(m, N, k, "lowest").passed


def test_frozen_c2_eigenvalue():
    poly = [0, 2, 4, 4, 6, 8, 10, 12, 14, 20]
    expected = sum((q_pow(e - 6) for e in poly), ZERO) * INV_QDIFF**4
    assert eigenvalue_formula(2, 3, (2, 0, 0, 0)) == expected
    C = SymPower(3, 2).evaluate(central_element(2, 3))
    assert check_scalar(C) == expected


def test_trivial_weight_and_bridge():
    assert eigenvalue_formula(1, 1, (0, 0)) == (q_pow(-1) + q_pow(1)) * INV_QDIFF**2
    assert weyl_vector(3).coeffs == (3, 2, 1, 0)
    rng = random.Random(7)
    for m, N in [(1, 1), (2, 2), (2, 3)]:
        Lam = [rng.randint(-3, 3) for _ in range(N + 1)]
        assert eigenvalue_bridge(m, N, Lam).passed
    assert c_lambda0_eigenvalue(1, 1, (0, 0)) == q_pow(2) + q_pow(0)
    with pytest.raises(ValueError):
        eigenvalue_formula(1, 2, (1, 0))


def test_ex_rep_eigenvalue_matches_formula():
    X = ExRep(2, 3)
    assert check_scalar(X.evaluate(central_element(2, 2))) == eigenvalue_formula(2, 2, (3, 0, 0))


def test_report_order_is_deterministic():
    a = VerificationReport("b", {"x": 1}, True)
    b = VerificationReport("a", {"x": 2}, True)
    c = VerificationReport("a", {"x": 1}, False)
    assert [r.params["x"] for r in sorted_reports([a, b, c])] == [1, 2, 1]
