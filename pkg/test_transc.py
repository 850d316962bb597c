#!/usr/bin/env python3
"""
Tests for the partial-sum bound, the certified π bound, quadrature and the transcendental margins.
"""

import math
from fractions import Fraction

import mpmath
import pytest

from ybx.errors import ConvergenceError, DomainError
from ybx.transc import (
    BASEL_CAP,
    adaptive_simpson,
    certified_pi_upper,
    display_rows,
    lhs_exact,
    replay_proof,
    rhs_exact,
    thm41_check,
    transcendental_margins,
)

PI_50 = Fraction("3.14159265358979323846264338327950288419716939937510")


def test_exact_sides_at_four():
    assert lhs_exact(4) == Fraction(205, 144)
    assert rhs_exact(4) == Fraction(625, 384)
    assert lhs_exact(4) < rhs_exact(4)


def test_bound_holds_for_small_n():
    report = thm41_check(100)
    assert report.passed
    assert report.checked == 100
    assert report.first_failure is None
    assert report.below_basel_cap
    assert all(row.verdict for row in report.rows)
    assert report.rows[3].lhs == Fraction(205, 144)
    assert report.rows[3].rhs == Fraction(625, 384)
    assert report.rows[99].lhs is None
    assert report.rows[99].lhs_float == pytest.approx(float(lhs_exact(100)), rel=1e-15)


def test_report_keeps_detail_rows_and_the_last_row():
    data = thm41_check(60, detail=10).to_dict()
    assert [row["n"] for row in data["rows"]] == list(range(1, 11)) + [60]
    assert data["rows"][0] == {"n": 1, "verdict": True, "lhs": "1", "rhs": "4/3",
                               "lhs_float": 1.0, "rhs_float": pytest.approx(4 / 3)}
    assert data["proof"]["holds"] is True


def test_n_max_must_be_positive():
    with pytest.raises(DomainError):
        thm41_check(0)


def test_first_rows_match_the_printed_decimals():
    rows = display_rows()
    assert rows == [
        {"n": 1, "lhs": "1", "rhs": "1.3333"},
        {"n": 2, "lhs": "1.25", "rhs": "1.5"},
        {"n": 3, "lhs": "1.3611", "rhs": "1.5802"},
        {"n": 4, "lhs": "1.4236", "rhs": "1.6276"},
        {"n": 5, "lhs": "1.4636", "rhs": "1.6588"},
    ]
    printed_lhs = ["1", "1.25", "1.36", "1.4236"]
    printed_rhs = ["1.333", "1.5", "1.58", "1.6276", "1.658"]
    assert all(row["lhs"].startswith(text) for row, text in zip(rows, printed_lhs))
    assert all(row["rhs"].startswith(text) for row, text in zip(rows, printed_rhs))
    assert thm41_check(3).to_dict()["display"] == rows[:3]


@pytest.mark.slow
def test_bound_holds_up_to_ten_thousand():
    report = thm41_check(10_000)
    assert report.passed
    assert report.checked == 10_000
    assert report.below_basel_cap
    assert report.runtime_ms < 60_000
    assert report.rows[-1].lhs_float < math.pi ** 2 / 6
    tail = 1 / 10_000 - 1 / (2 * 10_000 ** 2)
    assert report.rows[-1].lhs_float == pytest.approx(math.pi ** 2 / 6 - tail, rel=1e-12)


def test_certified_pi_upper_bound():
    upper = certified_pi_upper(30)
    assert 0 < upper - PI_50 < Fraction(2, 10 ** 30)


def test_proof_replay():
    proof = replay_proof(digits=30)
    assert proof.holds
    assert proof.rhs5 == "5184/3125"
    assert rhs_exact(5) >= BASEL_CAP
    assert proof.pi_upper.startswith("3.14159265358979")


def test_simpson_matches_mpmath_quadrature():
    value = adaptive_simpson(lambda x: math.exp(-x * x), 0.0, 1.0)
    expected = float(mpmath.quad(lambda x: mpmath.exp(-x * x), [0, 1]))
    assert abs(value - expected) < 1e-10
    assert adaptive_simpson(math.sin, 2.0, 2.0) == 0.0


def test_simpson_raises_when_depth_runs_out():
    with pytest.raises(ConvergenceError):
        adaptive_simpson(math.sqrt, 0.0, 1.0, tol=1e-14, max_depth=2)


def test_transcendental_margins():
    reports = transcendental_margins(digits=20, grid=21)
    assert [r.name for r in reports] == [
        "four_e_minus_pi_squared",
        "pi_cubed_minus_four_e_squared",
        "quadratic_minimum",
        "basel_cap",
        "complex_modulus",
        "gaussian_bound",
    ]
    assert all(r.passed for r in reports), [r.to_dict() for r in reports if not r.passed]

    first = reports[0]
    assert first.value_name == "pi_squared_minus_four_e"
    assert first.value == "-1.003522913"
    assert first.to_dict()["value"] == "-1.003522913"
    assert first.margin == pytest.approx(1.003522913, abs=5e-10)
    assert first.high_precision.startswith("1.00352291")
    assert reports[4].kind == "sampled evidence"
    assert reports[5].detail["worst_pair"]


def main():
    print("🧪 Running transcendental bound tests...")
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
