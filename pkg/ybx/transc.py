"""
Transcendental Bounds
Exact verification of Σ_{k≤n} 1/k² < (2/3)((n+1)/n)^n with a replay of its Basel-problem
argument, and high-precision margins for inequalities between e and π.
"""

import math
import time
import threading
import logging
from dataclasses import dataclass, asdict, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np

from .config import get_config
from .errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

BASEL_CAP = Fraction(329, 200)
EXACT_ROW_LIMIT = 10_000
DETAIL_ROWS = 50
SCALE_BITS = 64
SIMPSON_DEPTH = 50
DELTA_DIGITS = 10
DISPLAY_ROWS = 5

# mpmath precision is process-wide
_PRECISION_LOCK = threading.Lock()

DEFAULT_GAUSSIAN_PAIRS: Tuple[Tuple[float, float], ...] = (
    (0.0, 1.0), (0.0, 0.5), (0.5, 1.0), (1.0, 2.0), (2.0, 3.0), (-1.0, 1.0), (0.0, 3.0),
)


def lhs_exact(n: int) -> Fraction:
    """Σ_{k=1..n} 1/k²."""
    return sum((Fraction(1, k * k) for k in range(1, n + 1)), Fraction(0))


def rhs_exact(n: int) -> Fraction:
    """(2/3)·((n+1)/n)^n."""
    return Fraction(2 * (n + 1) ** n, 3 * n ** n)


@dataclass
class BoundRow:
    """One n: exact sides for the first rows, floats and the exact verdict for all."""
    n: int
    verdict: bool
    lhs_float: float
    rhs_float: float
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "verdict": self.verdict,
            "lhs": str(self.lhs) if self.lhs is not None else None,
            "rhs": str(self.rhs) if self.rhs is not None else None,
            "lhs_float": self.lhs_float,
            "rhs_float": self.rhs_float,
        }


@dataclass
class ProofReplay:
    """The argument: direct rows up to 5, then Σ < π²/6 < 329/200 ≤ rhs(5) ≤ rhs(n)."""
    direct_rows: bool
    pi_upper: str
    basel_cap_certified: bool
    rhs5: str
    rhs5_above_cap: bool
    rhs_increasing: bool

    @property
    def holds(self) -> bool:
        return self.direct_rows and self.basel_cap_certified and self.rhs5_above_cap and self.rhs_increasing

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["holds"] = self.holds
        return data


@dataclass
class Thm41Report:
    n_max: int
    checked: int
    all_true: bool
    below_basel_cap: bool
    rows: List[BoundRow]
    proof: ProofReplay
    first_failure: Optional[int] = None
    runtime_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.all_true and self.proof.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_max": self.n_max,
            "checked": self.checked,
            "all_true": self.all_true,
            "below_basel_cap": self.below_basel_cap,
            "first_failure": self.first_failure,
            "rows": [row.to_dict() for row in self.rows if row.lhs is not None or row is self.rows[-1]],
            "proof": self.proof.to_dict(),
            "display": display_rows(min(self.checked, DISPLAY_ROWS)),
            "passed": self.passed,
            "runtime_ms": self.runtime_ms,
        }


def _less(p: int, q: int, r: int, s: int) -> bool:
    """p/q < r/s for positive q, s, deciding by 64-bit scaled floors first."""
    lo, hi = (p << SCALE_BITS) // q, (r << SCALE_BITS) // s
    if lo + 1 <= hi:
        return True
    if hi + 1 <= lo:
        return False
    return p * s < r * q


def _decimal(value: Fraction, places: int) -> str:
    """Truncated decimal expansion of a positive rational."""
    digits = str(value.numerator * 10 ** places // value.denominator).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


def display_rows(n_max: int = DISPLAY_ROWS, places: int = 4) -> List[Dict[str, Any]]:
    """Both sides for n ≤ n_max as truncated decimals without trailing zeros."""
    def show(value: Fraction) -> str:
        return _decimal(value, places).rstrip("0").rstrip(".")

    return [{"n": n, "lhs": show(lhs_exact(n)), "rhs": show(rhs_exact(n))} for n in range(1, n_max + 1)]


def certified_pi_upper(digits: Optional[int] = None) -> Fraction:
    """A rational number ≥ π within 10^-digits of it."""
    digits = digits or get_config().digits
    with _PRECISION_LOCK, mpmath.workdps(digits + 10):
        text = mpmath.nstr(+mpmath.pi, digits + 10, strip_zeros=False)
    return Fraction(text) + Fraction(1, 10 ** digits)


def replay_proof(n_max: int = 5, digits: Optional[int] = None) -> ProofReplay:
    direct = all(lhs_exact(n) < rhs_exact(n) for n in range(1, 6))
    pi_upper = certified_pi_upper(digits)
    rhs5 = rhs_exact(5)
    increasing = all(rhs_exact(n) < rhs_exact(n + 1) for n in range(1, min(max(n_max, 5), 200)))
    return ProofReplay(
        direct_rows=direct,
        pi_upper=_decimal(pi_upper, 30),
        basel_cap_certified=pi_upper * pi_upper / 6 < BASEL_CAP,
        rhs5=str(rhs5),
        rhs5_above_cap=rhs5 >= BASEL_CAP,
        rhs_increasing=increasing,
    )


def thm41_check(n_max: int, detail: int = DETAIL_ROWS, digits: Optional[int] = None) -> Thm41Report:
    """Exact verdicts for n ≤ min(n_max, 10⁴), plus the replay of the Basel argument.

    The partial sum is carried as an unreduced p/q; each comparison is decided exactly.
    Rows beyond `detail` keep floats only.
    """
    if not isinstance(n_max, int) or n_max < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    start = time.time()
    limit = min(n_max, EXACT_ROW_LIMIT)
    if n_max > limit:
        logger.info(f"⚠️ Exact rows stop at {limit}; the proof replay covers n > {limit}")
    logger.info(f"🚀 Checking the partial-sum bound for n ≤ {limit}")

    p, q = 0, 1
    previous_power = 1  # n^n, carried from (n)^(n-1)·n
    rows: List[BoundRow] = []
    all_true, below_cap, first_failure = True, True, None
    for n in range(1, limit + 1):
        p, q = p * n * n + q, q * n * n
        a = (n + 1) ** n
        b = previous_power * n  # n^n
        previous_power = a      # (n+1)^n, times (n+1) gives the next n^n
        verdict = _less(p, q, 2 * a, 3 * b)
        below_cap = below_cap and _less(p, q, BASEL_CAP.numerator, BASEL_CAP.denominator)
        if not verdict and first_failure is None:
            first_failure = n
        all_true = all_true and verdict
        lhs_float = ((p << SCALE_BITS) // q) / 2.0 ** SCALE_BITS
        rhs_float = (((2 * a) << SCALE_BITS) // (3 * b)) / 2.0 ** SCALE_BITS
        row = BoundRow(n, verdict, lhs_float, rhs_float)
        if n <= detail:
            row.lhs, row.rhs = Fraction(p, q), Fraction(2 * a, 3 * b)
        rows.append(row)
        if n % 2000 == 0:
            logger.info(f"   📊 n = {n}: all verdicts true so far: {all_true}")

    proof = replay_proof(n_max, digits)
    runtime_ms = (time.time() - start) * 1000
    report = Thm41Report(n_max, limit, all_true, below_cap, rows, proof, first_failure, runtime_ms)
    status = "✅" if report.passed else "❌"
    logger.info(f"{status} Partial-sum bound checked up to {limit} in {runtime_ms:.0f}ms")
    return report


# Margins

@dataclass
class MarginReport:
    """A signed margin at float64, confirmed at `digits` and at twice that.

    `value` carries the quantity an inequality is stated about when it differs from the margin.
    """
    name: str
    margin: Optional[float]
    high_precision: Optional[str]
    sign: str
    stable: bool
    kind: str = "identity"
    detail: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    value_name: Optional[str] = None
    value: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.stable and self.sign == "positive"

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["passed"] = self.passed
        return data


def _sign(value) -> str:
    if value > 0:
        return "positive"
    if value < 0:
        return "negative"
    return "zero"


def adaptive_simpson(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12,
                     max_depth: int = SIMPSON_DEPTH) -> float:
    """Adaptive Simpson quadrature with Richardson correction."""
    def simpson(lo, hi, f_lo, f_mid, f_hi):
        return (hi - lo) / 6 * (f_lo + 4 * f_mid + f_hi)

    def refine(lo, hi, f_lo, f_mid, f_hi, whole, eps, depth):
        mid = (lo + hi) / 2
        left_mid, right_mid = (lo + mid) / 2, (mid + hi) / 2
        f_lm, f_rm = f(left_mid), f(right_mid)
        left = simpson(lo, mid, f_lo, f_lm, f_mid)
        right = simpson(mid, hi, f_mid, f_rm, f_hi)
        delta = left + right - whole
        if abs(delta) <= 15 * eps:
            return left + right + delta / 15
        if depth <= 0:
            raise ConvergenceError(f"adaptive Simpson did not reach {tol} on [{a}, {b}]")
        return (refine(lo, mid, f_lo, f_lm, f_mid, left, eps / 2, depth - 1)
                + refine(mid, hi, f_mid, f_rm, f_hi, right, eps / 2, depth - 1))

    if a == b:
        return 0.0
    f_a, f_b, f_m = f(a), f(b), f((a + b) / 2)
    return refine(a, b, f_a, f_m, f_b, simpson(a, b, f_a, f_m, f_b), tol, max_depth)


def _confirm(name: str, float_value: float, exact: Callable[[], Any], digits: int,
             kind: str = "identity", detail: Optional[Dict[str, Any]] = None) -> MarginReport:
    with _PRECISION_LOCK, mpmath.workdps(digits):
        value = exact()
        text = mpmath.nstr(value, digits)
    with _PRECISION_LOCK, mpmath.workdps(2 * digits):
        doubled = exact()
    stable = _sign(value) == _sign(doubled) == _sign(float_value)
    return MarginReport(name, float_value, text, _sign(value), stable, kind, detail or {})


def _gaussian_rhs(a, b, exp, pi):
    return exp(exp(1)) / pi * (exp(-pi * a) - exp(-pi * b))


def _modulus_margin(points: np.ndarray, exp, pi, mod) -> Tuple[Any, Tuple[float, float]]:
    best, where = None, (0.0, 0.0)
    for x in points:
        for y in points:
            z = complex(x, y)
            value = mod(exp(1 - z) + exp(z.conjugate())) - pi
            if best is None or value < best:
                best, where = value, (float(x), float(y))
    return best, where


def transcendental_margins(digits: Optional[int] = None,
                           pairs: Sequence[Tuple[float, float]] = DEFAULT_GAUSSIAN_PAIRS,
                           grid: int = 101) -> List[MarginReport]:
    """Margins for π² < 4e, π³ > 4e², x² + e > πx, |e^{1−z} + e^{z̄}| > π and the Gaussian bound.

    Positive margins mean the inequality holds; the last two are sampled evidence only.
    """
    digits = digits or get_config().digits
    mp = mpmath.mp
    reports = []

    delta = _confirm("four_e_minus_pi_squared", 4 * math.e - math.pi ** 2, lambda: 4 * mp.e - mp.pi ** 2, digits)
    with _PRECISION_LOCK, mpmath.workdps(digits):
        delta.value = mpmath.nstr(mp.pi ** 2 - 4 * mp.e, DELTA_DIGITS)
    delta.value_name = "pi_squared_minus_four_e"
    reports.append(delta)
    reports.append(_confirm("pi_cubed_minus_four_e_squared", math.pi ** 3 - 4 * math.e ** 2,
                            lambda: mp.pi ** 3 - 4 * mp.e ** 2, digits))
    reports.append(_confirm("quadratic_minimum", math.e - math.pi ** 2 / 4,
                            lambda: mp.e - mp.pi ** 2 / 4, digits,
                            detail={"minimizer": math.pi / 2}))
    reports.append(_confirm("basel_cap", float(BASEL_CAP) - math.pi ** 2 / 6,
                            lambda: mpmath.mpf(329) / 200 - mp.pi ** 2 / 6, digits))

    axis = np.linspace(-3.0, 3.0, grid)
    float_min, where = _modulus_margin(axis, lambda z: complex(np.exp(z)), math.pi, abs)
    reports.append(_confirm(
        "complex_modulus", float_min,
        lambda: abs(mpmath.exp(1 - mpmath.mpc(*where)) + mpmath.exp(mpmath.conj(mpmath.mpc(*where)))) - mp.pi,
        digits, kind="sampled evidence", detail={"grid": grid, "argmin": list(where)},
    ))

    try:
        gaps = []
        for a, b in pairs:
            integral = adaptive_simpson(lambda x: math.exp(-x * x), a, b)
            gaps.append((_gaussian_rhs(a, b, math.exp, math.pi) - integral, (a, b)))
        float_gap, worst = min(gaps)

        def exact_gap():
            a, b = (mpmath.mpf(v) for v in worst)
            integral = mpmath.sqrt(mp.pi) / 2 * (mpmath.erf(b) - mpmath.erf(a))
            return _gaussian_rhs(a, b, mpmath.exp, mp.pi) - integral

        reports.append(_confirm("gaussian_bound", float_gap, exact_gap, digits, kind="sampled evidence",
                                detail={"pairs": [list(p) for p in pairs], "worst_pair": list(worst)}))
    except ConvergenceError as e:
        logger.error(f"❌ Gaussian bound quadrature failed: {e}")
        reports.append(MarginReport("gaussian_bound", None, None, "unknown", False,
                                    "sampled evidence", error=str(e)))

    for report in reports:
        logger.debug(f"📊 {report.name}: {report.high_precision} ({report.sign}, stable={report.stable})")
    return reports
