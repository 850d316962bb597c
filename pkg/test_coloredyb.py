#!/usr/bin/env python3
"""
Tests for the colored family R(x) = cos x·I + sin x·J and the two-color equation system.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from ybx.errors import DomainError, SchemaError
from ybx.exactcore import ScalarKind, identity, mat_exp
from ybx.coloredyb import (
    JSpec,
    build_J,
    color_triple_from_json,
    colored_residual,
    colored_sweep,
    constant_triple,
    euler_check,
    format_residuals,
    group_law_residual,
    named_triple,
    ode_residual,
    r_matrix,
    sample_points,
    table_triple,
    yb_system_residuals,
)

ALPHAS = (0.5, 1.0, 2.0, 5.0)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_J_squares_to_minus_identity(alpha):
    j = build_J(JSpec(alpha))
    square = (j @ j + identity(4, ScalarKind.CFLOAT)).entries
    assert np.max(np.abs(square)) < 1e-13


@pytest.mark.parametrize("alpha", ALPHAS)
def test_euler_identity(alpha):
    assert euler_check(JSpec(alpha)).value < 1e-10


def test_r_matrix_is_the_exponential():
    spec = JSpec(2.0)
    for x in (-2.5, 0.3, 1.7):
        expected = mat_exp(build_J(spec).scale(complex(x)))
        assert np.max(np.abs((r_matrix(spec, x) - expected).entries)) < 1e-12


def test_group_law():
    spec = JSpec(0.5)
    assert group_law_residual(spec, 0.4, -1.3).value < 1e-10


@pytest.mark.parametrize("alpha", ALPHAS)
def test_colored_equation_holds_on_samples(alpha):
    sweep = colored_sweep(JSpec(alpha), sample_points(12), tol=1e-9)
    assert sweep.passed
    assert sweep.samples == 12
    assert sweep.to_dict()["passed"] is True


def test_colored_residual_at_the_origin_is_zero():
    assert colored_residual(JSpec(1.0), 0.0, 0.0).value == 0.0


def test_ode_residual_converges_at_second_order():
    spec = JSpec(2.0)
    coarse = ode_residual(spec, 0.7, 1e-2).value
    fine = ode_residual(spec, 0.7, 5e-3).value
    assert 3.5 < coarse / fine < 4.5


def test_ode_step_must_be_positive():
    with pytest.raises(DomainError):
        ode_residual(JSpec(1.0), 0.0, 0.0)


def test_alpha_must_be_nonzero():
    with pytest.raises(DomainError):
        JSpec(0)
    with pytest.raises(DomainError):
        JSpec(float("inf"))


def test_sample_points_are_deterministic():
    points = sample_points(25)
    assert len(points) == 25
    assert points == sample_points(25)
    # 3×3 grid first, then Halton points
    assert points[0] == (-math.pi, -math.pi)
    assert points[9] == pytest.approx((0.0, -math.pi / 3))
    assert all(-math.pi <= x <= math.pi and -math.pi <= y <= math.pi for x, y in points)
    with pytest.raises(DomainError):
        sample_points(0)


# Two-color system

def test_constant_prime_triple_residuals():
    values = yb_system_residuals(constant_triple(2, 3, 5), 0, 1, 2)
    assert values == (0, 18, 12, 18, 12)
    assert format_residuals(values) == ["0", "18", "12", "18", "12"]


@pytest.mark.parametrize("name", ["ones", "equal_difference", "equal_product"])
def test_named_triples_solve_the_system(name):
    fns = named_triple(name)
    for u in range(3):
        for v in range(3):
            for w in range(3):
                assert yb_system_residuals(fns, Fraction(u), Fraction(v), Fraction(w)) == (0, 0, 0, 0, 0)


def test_unknown_named_triple():
    with pytest.raises(SchemaError) as exc:
        named_triple("spiral")
    assert exc.value.field == "name"


def test_table_triple_lookup():
    ones = [[1, 1], [1, 1]]
    fns = table_triple([0, 1], ones, ones, ones)
    assert yb_system_residuals(fns, 0, 1, 1) == (0, 0, 0, 0, 0)
    with pytest.raises(DomainError):
        yb_system_residuals(fns, 0, 1, 2)
    with pytest.raises(SchemaError):
        table_triple([0, 0], ones, ones, ones)


def test_color_triple_documents():
    fns = color_triple_from_json({"kind": "constant", "alpha": "2", "beta": "3", "gamma": "5"})
    assert fns.values(0, 0) == (Fraction(2), Fraction(3), Fraction(5))
    assert fns.description == {"kind": "constant", "alpha": "2", "beta": "3", "gamma": "5"}

    table = color_triple_from_json({
        "kind": "table", "colors": ["0", "1"],
        "alpha": [["1", "2"], ["3", "4"]], "beta": [["1", "1"], ["1", "1"]], "gamma": [["0", "0"], ["0", "0"]],
    })
    assert table.values(Fraction(1), Fraction(0)) == (Fraction(3), Fraction(1), Fraction(0))

    with pytest.raises(SchemaError) as exc:
        color_triple_from_json({"kind": "constant", "alpha": "2", "beta": "3"})
    assert exc.value.field == "gamma"
    with pytest.raises(SchemaError):
        color_triple_from_json({"kind": "polynomial"})


def main():
    print("🧪 Running colored Yang-Baxter tests...")
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
