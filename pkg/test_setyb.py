#!/usr/bin/env python3
"""
Tests for set-theoretic solutions: finite maps, closed-form families, the exponent system,
sorting by braid moves and exhaustive enumeration.
"""

import itertools
import json
from fractions import Fraction

import pytest

from ybx.errors import DomainError, SchemaError
from ybx.exactcore import EquationForm, gauss
from ybx.setyb import (
    ExponentQuadruple,
    FiniteMap,
    SortMode,
    canonical_form,
    check_family,
    compose_twist,
    enumerate_solutions,
    evaluate_chains,
    exp_morphism_check,
    finite_map_from_json,
    gaussian_triples,
    gcdlcm_map,
    identity_map,
    linear_family,
    logic_map,
    minmax_map,
    monomial_family,
    power_family,
    quotient_square_family,
    rational_triples,
    relabel,
    set_yb_check,
    solve_exponent_system,
    symmetry_checks,
    twist_map,
    write_listing,
    yb_sort,
    yb_sort_with_moves,
)

PRIMES = (Fraction(2), Fraction(3), Fraction(5))


def _all_maps(n: int):
    for codes in itertools.product(range(n * n), repeat=n * n):
        yield FiniteMap.from_codes(n, codes)


# Finite maps

@pytest.mark.parametrize("form", ["braid", "qybe"])
def test_identity_and_twist_solve_both_forms(form):
    assert set_yb_check(identity_map(3), form).passed
    assert set_yb_check(twist_map(3), form).passed


@pytest.mark.parametrize("fmap", [minmax_map(4), logic_map(), gcdlcm_map(12)[0], gcdlcm_map(30)[0]])
@pytest.mark.parametrize("form", [EquationForm.BRAID, EquationForm.QYBE])
def test_lattice_maps_solve_both_forms(fmap, form):
    report = set_yb_check(fmap, form)
    assert report.passed
    assert report.triples_checked == fmap.n ** 3


def test_gcdlcm_labels_are_sorted_divisors():
    fmap, labels = gcdlcm_map(12)
    assert labels == [1, 2, 3, 4, 6, 12]
    # gcd(4, 6) = 2, lcm(4, 6) = 12
    assert fmap(3, 4) == (1, 5)


def test_failing_map_reports_first_triple():
    # S(x, y) = (1 - x, y) on {0, 1}
    s = FiniteMap(2, ((1, 0), (1, 1), (0, 0), (0, 1)))
    report = set_yb_check(s, "braid")
    assert report.verdict == "fail"
    assert report.to_dict()["counterexample"] == {"triple": [0, 0, 0], "left": [0, 1, 0], "right": [1, 0, 0]}


def test_braid_solutions_transport_to_qybe_through_the_twist():
    for s in _all_maps(2):
        braid = set_yb_check(s, EquationForm.BRAID).passed
        assert set_yb_check(compose_twist(s), EquationForm.QYBE).passed == braid


def test_relabeling_preserves_canonical_form():
    s = logic_map()
    swapped = relabel(s, (1, 0))
    assert swapped == minmax_map(2)
    assert canonical_form(swapped) == canonical_form(s)


def test_finite_map_documents():
    doc = logic_map().to_dict()
    assert finite_map_from_json(doc) == logic_map()
    doc["table"][0] = [0, 5]
    with pytest.raises(SchemaError) as exc:
        finite_map_from_json(doc)
    assert exc.value.field == "table[0]"
    with pytest.raises(SchemaError) as exc:
        finite_map_from_json({"n": 2})
    assert exc.value.field == "table"


def test_finite_map_rejects_out_of_range_entries():
    with pytest.raises(DomainError):
        FiniteMap(2, ((0, 0), (0, 2), (1, 0), (1, 1)))


# Closed-form families

def test_power_family_chains_at_the_prime_triple():
    left, right = evaluate_chains(power_family(1, 2), EquationForm.BRAID, PRIMES)
    assert left == right == (Fraction(5), Fraction(9, 5), Fraction(16, 45))


@pytest.mark.parametrize("alpha,beta", itertools.product((1, 2, 3), repeat=2))
def test_power_family_solves_the_braid_form(alpha, beta):
    assert check_family(power_family(alpha, beta), "braid", rational_triples(30)).passed


def test_power_family_qybe_only_at_one_one():
    assert check_family(power_family(1, 1), "qybe", rational_triples(30)).passed
    report = check_family(power_family(1, 2), "qybe", rational_triples(30))
    assert not report.passed
    assert report.counterexample["triple"] == ["2", "3", "5"]


@pytest.mark.parametrize("alpha,beta", [(2, 3), (Fraction(1, 2), -4), (gauss(0, 1), gauss(1, 1))])
def test_linear_family_solves_the_braid_form(alpha, beta):
    assert check_family(linear_family(alpha, beta), "braid", gaussian_triples(30)).passed


def test_quotient_square_fails_both_forms():
    braid = check_family(quotient_square_family(), "braid", [PRIMES])
    assert not braid.passed
    assert braid.counterexample == {
        "triple": ["2", "3", "5"],
        "left": ["5/6", "4/9", "16"],
        "right": ["10/3", "4/9", "16"],
    }
    assert not check_family(quotient_square_family(), "qybe", [PRIMES]).passed


def test_family_domains_are_enforced():
    with pytest.raises(DomainError):
        power_family(0, 1)
    with pytest.raises(DomainError):
        check_family(power_family(1, 1), "braid", [(Fraction(-1), 1, 1)])
    with pytest.raises(DomainError, match="zero denominator"):
        check_family(quotient_square_family(), "braid", [(1, 0, 1)])
    with pytest.raises(DomainError):
        linear_family(0.5, 1)


def test_family_description():
    info = power_family(2, 3).describe()
    assert info == {"kind": "power", "domain": "positive rationals", "alpha": 2, "beta": 3}


# Exponent system

def test_exponent_system_matches_naive_search():
    naive = []
    for m, n, p, q in itertools.product(range(-2, 3), repeat=4):
        if (m * n * q == 0 and m * p * q == 0 and m * q * q == m * m * q
                and m * m + m * n * p == m and q * q + n * p * q == q):
            naive.append((m, n, p, q))
    found = solve_exponent_system(2)
    assert [e.as_tuple() for e in found] == sorted(naive)


def test_exponent_solutions_solve_the_braid_form():
    triples = rational_triples(10)
    for exponents in solve_exponent_system(2):
        assert check_family(monomial_family(exponents), "braid", triples).passed, exponents


def test_non_solution_exponents_fail():
    report = check_family(monomial_family(ExponentQuadruple(1, 1, 1, 1)), "braid", [PRIMES])
    assert not report.passed


def test_exponent_bound_must_be_positive():
    with pytest.raises(DomainError):
        solve_exponent_system(0)


def test_exponential_carries_linear_onto_power():
    report = exp_morphism_check(2, 3, [(0.1, 0.2), (-0.5, 0.3), (1.0, -1.0)])
    assert report.symbolic
    assert report.passed
    assert report.samples == 3


def test_symmetries_of_space():
    report = symmetry_checks()
    assert report.closure and report.klein_subgroup
    assert set(report.planes_instance.values()) == {"S_O"}
    assert set(report.axes_instance.values()) == {"I"}
    assert report.passed


# Sorting by braid moves

def test_minmax_sort():
    assert yb_sort_with_moves([3, 1, 2]) == ([1, 2, 3], 2)
    assert yb_sort([5, 4, 3, 2, 1]) == [1, 2, 3, 4, 5]
    assert yb_sort([]) == []


def test_gcdlcm_sort_builds_a_divisor_chain():
    values, moves = yb_sort_with_moves([12, 18, 8], SortMode.GCDLCM)
    assert values == [2, 12, 72]
    assert moves == 2
    assert yb_sort([4, 6], "gcdlcm") == [2, 12]


def test_gcdlcm_sort_needs_positive_values():
    with pytest.raises(DomainError):
        yb_sort([0, 3], SortMode.GCDLCM)


# Enumeration

@pytest.mark.parametrize("form", [EquationForm.BRAID, EquationForm.QYBE])
def test_enumeration_matches_exhaustive_check(form):
    naive = sorted(s.codes() for s in _all_maps(2) if set_yb_check(s, form).passed)
    result = enumerate_solutions(2, form, threads=1)
    assert [s.codes() for s in result.solutions] == naive
    assert result.summary.count == len(naive)

    iso = enumerate_solutions(2, form, up_to_iso=True, threads=1)
    canonical = sorted({canonical_form(FiniteMap.from_codes(2, codes)).codes() for codes in naive})
    assert [s.codes() for s in iso.solutions] == canonical
    assert iso.summary.count_up_to_iso == len(canonical)


def test_single_point_has_one_solution():
    result = enumerate_solutions(1, threads=1)
    assert result.summary.count == 1
    assert result.solutions == [identity_map(1)]


def test_enumeration_size_is_limited():
    with pytest.raises(DomainError):
        enumerate_solutions(4)


def test_listing_has_one_line_per_solution(tmp_path):
    result = enumerate_solutions(2, "braid", threads=1)
    path = write_listing(result, tmp_path / "listing.jsonl")
    lines = path.read_text().splitlines()
    assert len(lines) == len(result.solutions)
    assert json.loads(lines[0])["n"] == 2


def test_solution_set_is_closed_under_relabeling():
    result = enumerate_solutions(2, "braid", threads=1)
    iso = enumerate_solutions(2, "braid", up_to_iso=True, threads=1)
    listed = {s.codes() for s in result.solutions}
    for sigma in itertools.permutations(range(2)):
        relabeled = {relabel(s, sigma).codes() for s in result.solutions}
        assert relabeled == listed
        canonical = sorted({canonical_form(relabel(s, sigma)).codes() for s in result.solutions})
        assert canonical == [s.codes() for s in iso.solutions]
        assert len(canonical) == iso.summary.count_up_to_iso


@pytest.mark.slow
def test_braid_enumeration_on_three_points():
    result = enumerate_solutions(3, "braid", threads=4)
    assert result.summary.count == len(result.solutions) == 5707
    assert result.summary.count_up_to_iso == 1045
    codes = {s.codes() for s in result.solutions}
    for named in (identity_map(3), twist_map(3), minmax_map(3)):
        assert named.codes() in codes
    assert all(set_yb_check(s, "braid").passed for s in result.solutions)

    iso = enumerate_solutions(3, "braid", up_to_iso=True, threads=4)
    assert len(iso.solutions) == 1045
    assert all(canonical_form(s) == s for s in iso.solutions)


def main():
    print("🧪 Running set-theoretic Yang-Baxter tests...")
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
