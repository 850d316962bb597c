#!/usr/bin/env python3
"""
Tests for the exact core: scalar kinds, matrices, lifts, residuals and the exponential.
Run directly or through pytest.
"""

from fractions import Fraction

import numpy as np
import pytest

from ybx.errors import DimensionError, KindMismatchError, SchemaError
from ybx.exactcore import (
    EquationForm,
    Matrix,
    ScalarKind,
    coerce,
    determinant,
    format_scalar,
    gauss,
    identity,
    integral_form,
    is_invertible,
    kron,
    lift,
    mat_exp,
    matrix_from_json,
    matrix_to_json,
    parse_form,
    parse_scalar,
    residual,
    twist,
    zeros,
)


def _as_float(m: Matrix) -> np.ndarray:
    return np.array(m.entries, dtype=float)


def test_twist_is_an_involution():
    t = twist(3)
    assert t.dim == 9
    assert (t @ t).equals(identity(9))


def test_kron_dimension_and_entries():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = identity(2)
    k = kron(a, b)
    assert k.dim == 4
    assert k[0, 0] == 1 and k[0, 2] == 2 and k[2, 0] == 3 and k[3, 3] == 4
    assert k[0, 1] == 0


def test_lift_13_of_twist_swaps_outer_legs():
    d = 2
    r13 = lift(twist(d), d, 13)
    for a in range(d):
        for b in range(d):
            for c in range(d):
                col = a * d * d + b * d + c
                row = c * d * d + b * d + a
                assert r13[row, col] == 1


def test_kron_is_associative():
    a = Matrix.from_rows([[1, Fraction(1, 2)], [-3, 4]])
    b = Matrix.from_rows([[0, 1, 2], [Fraction(2, 3), 0, -1], [5, 1, 1]])
    c = Matrix.from_rows([[7, 0], [Fraction(-1, 5), 2]])
    left, right = kron(kron(a, b), c), kron(a, kron(b, c))
    assert left.dim == 12
    assert left.equals(right)


@pytest.mark.parametrize("d", [2, 3])
def test_lift_13_of_twist_is_an_involution(d):
    r13 = lift(twist(d), d, 13)
    assert r13.dim == d ** 3
    assert (r13 @ r13).equals(identity(d ** 3))
    assert not r13.equals(identity(d ** 3))


def test_twist_satisfies_braid_relation_exactly():
    d = 2
    r12, r23 = lift(twist(d), d, 12), lift(twist(d), d, 23)
    norm = residual(r12 @ r23 @ r12, r23 @ r12 @ r23)
    assert norm.exactly_zero
    assert norm.to_dict() == {"kind": "rational", "exactly_zero": True, "witness": None}


def test_residual_reports_first_nonzero_entry():
    norm = residual(identity(2), zeros(2))
    assert not norm.exactly_zero
    assert norm.witness == (0, 0, Fraction(1))
    assert norm.to_dict()["witness"] == {"row": 0, "col": 0, "value": "1"}


def test_float_residual_is_max_abs():
    a = Matrix.from_rows([[1.0, 0.0], [0.0, 1.0]], ScalarKind.FLOAT)
    b = Matrix.from_rows([[1.0, 0.25], [0.0, 0.5]], ScalarKind.FLOAT)
    norm = residual(a, b)
    assert norm.value == pytest.approx(0.5)
    assert norm.is_zero(0.6) and not norm.is_zero(0.1)


def test_mixing_kinds_raises():
    a = identity(2)
    b = identity(2, ScalarKind.FLOAT)
    with pytest.raises(KindMismatchError):
        a @ b
    with pytest.raises(KindMismatchError):
        coerce(1.5, ScalarKind.RATIONAL)


def test_integer_literals_coerce_to_every_kind():
    assert coerce(3, ScalarKind.RATIONAL) == Fraction(3)
    assert coerce(3, ScalarKind.GAUSS) == gauss(3)
    assert coerce(3, ScalarKind.FLOAT) == 3.0
    assert coerce(3, ScalarKind.CFLOAT) == 3 + 0j


def test_non_square_matrices_are_rejected():
    with pytest.raises(DimensionError):
        Matrix.from_rows([[1, 2]])
    with pytest.raises(DimensionError):
        Matrix.from_rows([[1, 2], [3]])


def test_lift_checks_operator_dimension():
    with pytest.raises(DimensionError):
        lift(identity(3), 2, 12)
    with pytest.raises(DimensionError):
        lift(identity(4), 2, 21)


def test_gaussian_scalars_round_trip_through_text():
    value = parse_scalar("1/2-3*i", ScalarKind.GAUSS)
    assert value == gauss(Fraction(1, 2), -3)
    assert format_scalar(value, ScalarKind.GAUSS) == "1/2-3*i"
    assert parse_scalar("2*i", ScalarKind.GAUSS) == gauss(0, 2)
    assert parse_scalar("-5", ScalarKind.GAUSS) == gauss(-5)


def test_parse_scalar_names_the_field():
    with pytest.raises(SchemaError) as exc:
        parse_scalar("abc", ScalarKind.RATIONAL, "entries[0][1]")
    assert exc.value.field == "entries[0][1]"
    with pytest.raises(SchemaError):
        parse_scalar(True, ScalarKind.FLOAT)


def test_matrix_json_document():
    m = Matrix.from_rows([[Fraction(1, 2), 0], [0, 1]])
    doc = matrix_to_json(m)
    assert doc == {"dim": 2, "scalar": "rational", "entries": [["1/2", "0"], ["0", "1"]]}
    assert matrix_from_json(doc).equals(m)


@pytest.mark.parametrize("doc,field", [
    ({"scalar": "rational", "entries": [["1"]]}, "dim"),
    ({"dim": 1, "scalar": "octonion", "entries": [["1"]]}, "scalar"),
    ({"dim": 2, "scalar": "rational", "entries": [["1", "0"]]}, "entries"),
    ({"dim": 1, "scalar": "rational", "entries": [["x"]]}, "entries[0][0]"),
])
def test_matrix_from_json_rejects_bad_documents(doc, field):
    with pytest.raises(SchemaError) as exc:
        matrix_from_json(doc)
    assert exc.value.field == field


def test_integral_form_clears_denominators():
    m = Matrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [0, 1]])
    arr, denominator = integral_form(m)
    assert denominator == 6
    assert arr.tolist() == [[3, 2], [0, 6]]
    assert arr.dtype == np.int64


def test_integral_form_bounds_by_row_nonzeros():
    big = 2 ** 20
    sparse = Matrix.from_rows([[big if i == j else 0 for j in range(4)] for i in range(4)])
    dense = Matrix.from_rows([[big] * 4 for _ in range(4)])
    sparse_arr, _ = integral_form(sparse, degree=3)
    dense_arr, _ = integral_form(dense, degree=3)
    assert sparse_arr.dtype == np.int64
    assert dense_arr.dtype == object
    d = 2
    chain = [lift(dense, d, legs) for legs in (12, 23, 12)]
    product = chain[0] @ chain[1] @ chain[2]
    assert product[0, 0] == 8 * big ** 3


def test_exact_determinants():
    assert determinant(Matrix.from_rows([[1, 2], [3, 4]])) == Fraction(-2)
    g = Matrix.from_rows([[gauss(0, 1), 0], [0, gauss(0, 1)]], ScalarKind.GAUSS)
    assert determinant(g) == gauss(-1)
    assert is_invertible(twist(2))
    assert not is_invertible(zeros(2))


def test_mat_exp_of_nilpotent_and_diagonal():
    n = Matrix.from_rows([[0.0, 1.0], [0.0, 0.0]], ScalarKind.FLOAT)
    assert np.allclose(_as_float(mat_exp(n)), [[1.0, 1.0], [0.0, 1.0]], atol=1e-14)
    d = Matrix.from_rows([[1.0, 0.0], [0.0, 3.0]], ScalarKind.FLOAT)
    assert np.allclose(_as_float(mat_exp(d)), np.diag([np.e, np.e ** 3]), rtol=1e-12)


def test_mat_exp_needs_float_kind():
    with pytest.raises(KindMismatchError):
        mat_exp(identity(2))


def test_parse_form():
    assert parse_form("braid") is EquationForm.BRAID
    assert parse_form("qybe") is EquationForm.QYBE
    with pytest.raises(SchemaError):
        parse_form("hexagon")


def main():
    print("🧪 Running exact core tests...")
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
