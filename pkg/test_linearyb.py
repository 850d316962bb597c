#!/usr/bin/env python3
"""
Tests for linear Yang-Baxter operators built from associative algebras and Lie superalgebras.
"""

from fractions import Fraction

import numpy as np
import pytest

from ybx.errors import DimensionError, SchemaError, StructureError
from ybx.exactcore import EquationForm, Matrix, ScalarKind, identity, lift, residual, twist
from ybx.linearyb import (
    FiniteAlgebra,
    LieSuperAlgebra,
    YBCase,
    abelian_lie,
    algebra_from_json,
    braid_qybe_transport,
    build_r_assoc,
    build_r_lie,
    dual_numbers,
    gate_matrices,
    heisenberg,
    lie_from_json,
    matrix_algebra,
    operator_corpus,
    product_algebra,
    super_heisenberg,
    yb_param_case,
    yb_residual,
)


def test_dual_number_operator_is_the_braiding_gate():
    gate, _ = gate_matrices()
    built = build_r_assoc(dual_numbers(), 1, 1, 1)
    assert built.equals(gate)
    report = yb_residual(built, 2)
    assert report.passed
    assert report.to_dict()["residual"]["exactly_zero"] is True


def test_gates_are_involutions():
    gate, cnot = gate_matrices()
    assert (gate @ gate).equals(identity(4))
    assert (cnot @ cnot).equals(identity(4))


@pytest.mark.parametrize("params,case", [
    ((2, 3, 2), YBCase.CASE_I),
    ((2, 3, 3), YBCase.CASE_II),
    ((0, 0, 5), YBCase.CASE_III),
    ((1, 2, 3), YBCase.NONE),
    ((0, 3, 3), YBCase.NONE),
])
def test_parameter_cases(params, case):
    assert yb_param_case(*params) is case


@pytest.mark.parametrize("algebra", [dual_numbers, product_algebra, matrix_algebra])
@pytest.mark.parametrize("params", [(2, 3, 2), (Fraction(1, 2), 3, 3), (0, 0, 5)])
def test_case_parameters_solve_the_braid_form(algebra, params):
    a = algebra()
    report = yb_residual(build_r_assoc(a, *params), a.dim, EquationForm.BRAID)
    assert report.passed


def test_parameters_outside_the_cases_fail_on_dual_numbers():
    report = yb_residual(build_r_assoc(dual_numbers(), 1, 2, 3), 2)
    assert not report.satisfied
    assert report.witness is not None
    assert report.to_dict()["residual"]["witness"] is not None


@pytest.mark.parametrize("lie", [lambda: abelian_lie(2, (1, 1)), heisenberg, super_heisenberg])
@pytest.mark.parametrize("alpha", [1, -1, Fraction(1, 2), 3])
def test_lie_operator_solves_the_braid_form(lie, alpha):
    l = lie()
    assert yb_residual(build_r_lie(l, alpha), l.dim).passed


def test_heisenberg_requires_central_z():
    with pytest.raises(StructureError, match="z not central"):
        heisenberg(z_index=0)


def test_odd_z_is_rejected():
    bracket = np.zeros((2, 2, 2), dtype=int)
    with pytest.raises(StructureError, match="z odd"):
        LieSuperAlgebra(2, (0, 1), bracket, (0, 1))


def test_unit_law_is_validated():
    mul = dual_numbers().mul
    with pytest.raises(StructureError):
        FiniteAlgebra(2, mul, (0, 1))


def test_twist_braid_and_identity_qybe():
    t = twist(2)
    assert yb_residual(t, 2, "braid").passed
    r_tau, tau_r = braid_qybe_transport(t, 2)
    assert r_tau.equals(identity(4))
    assert yb_residual(r_tau, 2, "qybe").passed
    assert yb_residual(tau_r, 2, "qybe").passed


def test_transport_agrees_across_the_operator_corpus():
    corpus = operator_corpus()
    assert len(corpus) == 22
    for name, r, d in corpus:
        braid = yb_residual(r, d, EquationForm.BRAID).satisfied
        r_tau, tau_r = braid_qybe_transport(r, d)
        assert yb_residual(r_tau, d, EquationForm.QYBE).satisfied == braid, name
        assert yb_residual(tau_r, d, EquationForm.QYBE).satisfied == braid, name


def test_float_operators_use_a_tolerance():
    t = Matrix(np.array(twist(2).entries, dtype=float), ScalarKind.FLOAT)
    report = yb_residual(t, 2, tol=1e-12)
    assert report.passed
    assert report.tolerance == 1e-12


def test_singular_solutions_are_not_passed():
    zero = Matrix.from_rows([[0] * 4 for _ in range(4)])
    report = yb_residual(zero, 2)
    assert report.satisfied
    assert not report.invertible
    assert not report.passed


def test_large_entries_keep_the_residual_exact():
    big = 2 ** 20
    dense = Matrix.from_rows([[big] * 4 for _ in range(4)])
    assert yb_residual(dense, 2).satisfied

    rows = [[big] * 4 for _ in range(4)]
    rows[0][0] = big + 1
    r = Matrix.from_rows(rows)
    r12, r23 = lift(r, 2, 12), lift(r, 2, 23)
    expected = residual(r12 @ r23 @ r12, r23 @ r12 @ r23)
    report = yb_residual(r, 2)
    assert report.satisfied == (expected.witness is None)
    assert report.residual.witness == expected.witness


def test_operator_dimension_must_match():
    with pytest.raises(DimensionError):
        yb_residual(twist(2), 3)


def test_algebra_documents():
    doc = dual_numbers().to_dict()
    a = algebra_from_json(doc)
    assert build_r_assoc(a, 1, 1, 1).equals(gate_matrices()[0])
    del doc["unit"]
    with pytest.raises(SchemaError) as exc:
        algebra_from_json(doc)
    assert exc.value.field == "unit"


def test_lie_documents():
    doc = super_heisenberg().to_dict()
    l = lie_from_json(doc)
    assert l.grading == (0, 1, 1)
    doc["grading"] = [0, 2, 1]
    with pytest.raises(SchemaError) as exc:
        lie_from_json(doc)
    assert exc.value.field == "grading"


def main():
    print("🧪 Running linear Yang-Baxter tests...")
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
