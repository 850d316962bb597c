"""
Claim Audit
Decorator-registered checks of the toolkit's mathematical claims, an expected-status
manifest, and a runner that evaluates the claims and compares them to the manifest.
"""

import json
import time
import inspect
import logging
import functools
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import get_config
from .errors import SchemaError, YBXError
from .exactcore import EquationForm, ScalarKind, gauss, identity, residual
from . import coloredyb, linearyb, setyb, transc, ujla

logger = logging.getLogger(__name__)

HOLDS = "holds"
FAILS = "fails-as-stated"
MODULES = ("linear", "set", "colored", "transc", "ujla")
CONVENTION = (
    "braid: R12 R23 R12 = R23 R12 R23; qybe: R12 R13 R23 = R23 R13 R12; "
    "compositions apply the rightmost factor first"
)


@dataclass
class ClaimOutcome:
    """What a claim check returns: whether the claim holds, plus its evidence."""
    holds: bool
    details: Dict[str, Any] = field(default_factory=dict)
    counterexample: Optional[Dict[str, Any]] = None


@dataclass
class ClaimResult:
    """One audited claim."""
    claim_id: str
    module: str
    description: str
    status: str
    expected: Optional[str]
    matched: bool
    convention: str = CONVENTION
    details: Dict[str, Any] = field(default_factory=dict)
    counterexample: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
    runtime_ms: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        # runtime_ms is left out of the serialized row
        data = asdict(self)
        data.pop("runtime_ms")
        return data


@dataclass
class AuditSummary:
    rows: List[ClaimResult]
    manifest: str
    runtime_ms: float = 0.0

    @property
    def all_matched(self) -> bool:
        return all(row.matched for row in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "manifest": self.manifest,
            "claims": len(self.rows),
            "matched": sum(1 for row in self.rows if row.matched),
            "all_matched": self.all_matched,
            "rows": [row.to_dict() for row in self.rows],
        }

    def save(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
        logger.info(f"💾 Audit results saved to {path}")
        return path


@dataclass(frozen=True)
class RegisteredClaim:
    claim_id: str
    module: str
    description: str
    check: Callable[..., ClaimOutcome]


CLAIMS: Dict[str, RegisteredClaim] = {}


def claim(claim_id: str, module: str, description: str = ""):
    """
    Register a claim check.

    Usage:
        @claim("gate_involutions", module="linear", description="both gates square to I")
        def gate_involutions() -> ClaimOutcome:
            ...
    """
    if module not in MODULES:
        raise ValueError(f"unknown module {module!r}")

    def decorator(func: Callable[..., ClaimOutcome]) -> Callable[..., ClaimOutcome]:
        @functools.wraps(func)
        def wrapper(**overrides) -> ClaimOutcome:
            outcome = func(**overrides)
            if not isinstance(outcome, ClaimOutcome):
                raise TypeError(f"claim {claim_id} returned {type(outcome).__name__}")
            return outcome

        CLAIMS[claim_id] = RegisteredClaim(claim_id, module, description or (func.__doc__ or "").strip(), wrapper)
        wrapper.claim_id = claim_id
        return wrapper

    return decorator


# Manifest

def load_manifest(path: Optional[Path] = None) -> Dict[str, str]:
    """Claim id -> expected status, in manifest order."""
    path = Path(path or get_config().manifest_path)
    try:
        with open(path, "r") as f:
            doc = json.load(f)
    except FileNotFoundError:
        raise SchemaError("manifest", f"{path} does not exist")
    except json.JSONDecodeError as e:
        raise SchemaError("manifest", f"{path} is not valid JSON: {e}")
    entries = doc.get("claims") if isinstance(doc, dict) else None
    if not isinstance(entries, list):
        raise SchemaError("claims", f"{path} has no claims list")
    expected = {}
    for index, entry in enumerate(entries):
        if not isinstance(entry, dict) or "id" not in entry or entry.get("expected") not in (HOLDS, FAILS):
            raise SchemaError(f"claims[{index}]", f"expected an id and a status in ({HOLDS}, {FAILS})")
        expected[entry["id"]] = entry["expected"]
    return expected


# Runner

def run_claim(claim_id: str, expected: Optional[str] = None, **overrides) -> ClaimResult:
    """Evaluate one claim; `status` is the raw outcome, `matched` compares it to `expected`."""
    if claim_id not in CLAIMS:
        raise SchemaError("claim", f"unknown claim {claim_id!r}; expected one of {sorted(CLAIMS)}")
    registered = CLAIMS[claim_id]
    accepted = inspect.signature(registered.check.__wrapped__).parameters
    unknown = sorted(set(overrides) - set(accepted))
    if unknown:
        raise SchemaError(unknown[0], f"claim {claim_id} takes no such option")

    logger.info(f"🧪 Checking {claim_id} ({registered.module})")
    start = time.time()
    try:
        outcome = registered.check(**overrides)
    except YBXError as e:
        logger.error(f"❌ Claim {claim_id} could not be evaluated: {e}")
        return ClaimResult(claim_id, registered.module, registered.description, "error", expected,
                           False, error=str(e), runtime_ms=(time.time() - start) * 1000)
    runtime_ms = (time.time() - start) * 1000
    status = HOLDS if outcome.holds else FAILS
    matched = expected is None or status == expected
    if matched:
        logger.info(f"   ✅ {claim_id}: {status} in {runtime_ms:.0f}ms")
    else:
        logger.warning(f"   ⚠️ {claim_id}: {status}, expected {expected}")
    return ClaimResult(claim_id, registered.module, registered.description, status, expected, matched,
                       details=outcome.details, counterexample=outcome.counterexample, runtime_ms=runtime_ms)


def audit_all(only: Optional[Sequence[str]] = None, manifest: Optional[Path] = None,
              threads: Optional[int] = None) -> AuditSummary:
    """Run the manifest's claims (optionally only those of some modules) and compare statuses."""
    only = list(only or [])
    for name in only:
        if name not in MODULES:
            raise SchemaError("only", f"unknown module {name!r}; expected one of {list(MODULES)}")
    manifest_path = Path(manifest or get_config().manifest_path)
    expected = load_manifest(manifest_path)
    missing = [claim_id for claim_id in expected if claim_id not in CLAIMS]
    if missing:
        raise SchemaError("claims", f"manifest names unregistered claims {missing}")
    unlisted = sorted(set(CLAIMS) - set(expected))
    if unlisted:
        logger.warning(f"⚠️ Registered claims missing from the manifest: {unlisted}")

    selected = [claim_id for claim_id in expected if not only or CLAIMS[claim_id].module in only]
    workers = max(1, min(threads or get_config().threads, len(selected) or 1))
    logger.info(f"🚀 Auditing {len(selected)} claims with {workers} workers")
    start = time.time()
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(run_claim, claim_id, expected[claim_id]) for claim_id in selected]
        rows = [future.result() for future in futures]
    summary = AuditSummary(rows, str(manifest_path), (time.time() - start) * 1000)
    matched = sum(1 for row in rows if row.matched)
    logger.info(f"🏁 Audit completed: {matched}/{len(rows)} claims match in {summary.runtime_ms:.0f}ms")
    return summary


# Linear claims

def _case_triples() -> List[Tuple[Fraction, Fraction, Fraction]]:
    values = (Fraction(1), Fraction(3), Fraction(-1, 2))
    others = (Fraction(2), Fraction(-3), Fraction(5, 2))
    triples = [(a, b, a) for a in values for b in others]
    triples += [(a, b, b) for a in others for b in values]
    triples += [(Fraction(0), Fraction(0), g) for g in (1, 2, 3, -1, -2, Fraction(1, 2), Fraction(-1, 3), 5,
                                                        Fraction(7, 2))]
    return triples


@claim("gate_reproduction", module="linear",
       description="the dual-number operator with α = β = γ = 1 is the braiding gate, a braid solution")
def gate_reproduction() -> ClaimOutcome:
    gate, _ = linearyb.gate_matrices()
    built = linearyb.build_r_assoc(linearyb.dual_numbers(), 1, 1, 1)
    report = linearyb.yb_residual(built, 2, EquationForm.BRAID)
    equal = built.equals(gate)
    return ClaimOutcome(equal and report.passed, {"equal_to_gate": equal, "braid": report.to_dict()})


@claim("gate_involutions", module="linear", description="the braiding gate and CNOT both square to I₄")
def gate_involutions() -> ClaimOutcome:
    gate, cnot = linearyb.gate_matrices()
    eye = identity(4)
    gate_sq, cnot_sq = residual(gate @ gate, eye), residual(cnot @ cnot, eye)
    return ClaimOutcome(gate_sq.exactly_zero and cnot_sq.exactly_zero,
                        {"gate_squared": gate_sq.to_dict(), "cnot_squared": cnot_sq.to_dict()})


@claim("assoc_case_sweep", module="linear",
       description="the associative-algebra operator solves the braid form in cases (i)-(iii)")
def assoc_case_sweep() -> ClaimOutcome:
    algebras = {name: build() for name, build in linearyb.STANDARD_ALGEBRAS.items()}
    checked, failures = 0, []
    for name, algebra in algebras.items():
        for alpha, beta, gamma in _case_triples():
            case = linearyb.yb_param_case(alpha, beta, gamma)
            report = linearyb.yb_residual(linearyb.build_r_assoc(algebra, alpha, beta, gamma), algebra.dim)
            checked += 1
            if case is linearyb.YBCase.NONE or not report.passed:
                failures.append({"algebra": name, "params": [str(alpha), str(beta), str(gamma)],
                                 "case": case.value, "braid": report.to_dict()})
    return ClaimOutcome(not failures, {"algebras": sorted(algebras), "checked": checked},
                        failures[0] if failures else None)


@claim("assoc_negative_control", module="linear",
       description="(1, 2, 3) lies outside every case and fails the braid form on the dual numbers")
def assoc_negative_control() -> ClaimOutcome:
    r = linearyb.build_r_assoc(linearyb.dual_numbers(), 1, 2, 3)
    report = linearyb.yb_residual(r, 2)
    case = linearyb.yb_param_case(1, 2, 3)
    return ClaimOutcome(case is linearyb.YBCase.NONE and not report.satisfied,
                        {"case": case.value, "braid": report.to_dict()})


@claim("lie_operator", module="linear",
       description="the Lie superalgebra operator solves the braid form for central even z")
def lie_operator() -> ClaimOutcome:
    algebras = {
        "abelian": linearyb.abelian_lie(2, (1, 1)),
        "heisenberg": linearyb.heisenberg(),
        "super_heisenberg": linearyb.super_heisenberg(),
    }
    alphas = (1, 2, -1, Fraction(1, 2), 3)
    failures = []
    for name, algebra in algebras.items():
        for alpha in alphas:
            report = linearyb.yb_residual(linearyb.build_r_lie(algebra, alpha), algebra.dim)
            if not report.passed:
                failures.append({"algebra": name, "alpha": str(alpha), "braid": report.to_dict()})
    return ClaimOutcome(not failures, {"algebras": sorted(algebras), "alphas": [str(a) for a in alphas]},
                        failures[0] if failures else None)


@claim("linear_transport", module="linear",
       description="R solves the braid form iff R∘τ and τ∘R solve the QYBE")
def linear_transport() -> ClaimOutcome:
    rows, mismatches = [], []
    for name, r, d in linearyb.operator_corpus():
        braid = linearyb.yb_residual(r, d, EquationForm.BRAID).satisfied
        r_tau, tau_r = linearyb.braid_qybe_transport(r, d)
        right = linearyb.yb_residual(r_tau, d, EquationForm.QYBE).satisfied
        left = linearyb.yb_residual(tau_r, d, EquationForm.QYBE).satisfied
        rows.append({"operator": name, "braid": braid, "qybe_r_tau": right, "qybe_tau_r": left})
        if not braid == right == left:
            mismatches.append(rows[-1])
    return ClaimOutcome(not mismatches, {"operators": len(rows), "solutions": sum(r["braid"] for r in rows)},
                        mismatches[0] if mismatches else None)


# Set-theoretic claims

@claim("set_transport", module="set", description="S solves the braid form iff τ∘S solves the QYBE, all maps at n = 2")
def set_transport() -> ClaimOutcome:
    braid_count, mismatches = 0, []
    for codes in itertools.product(range(4), repeat=4):
        s = setyb.FiniteMap.from_codes(2, codes)
        braid = setyb.set_yb_check(s, EquationForm.BRAID).passed
        qybe = setyb.set_yb_check(setyb.compose_twist(s), EquationForm.QYBE).passed
        braid_count += braid
        if braid != qybe:
            mismatches.append({"map": s.to_dict(), "braid": braid, "qybe_of_twisted": qybe})
    return ClaimOutcome(not mismatches, {"maps": 256, "braid_solutions": braid_count},
                        mismatches[0] if mismatches else None)


@claim("power_family", module="set", description="(y^α, x^β y^(1−αβ)) solves the braid form for positive integers α, β")
def power_family(samples: int = 100) -> ClaimOutcome:
    triples = setyb.rational_triples(samples)
    failures, qybe = [], {}
    for alpha, beta in itertools.product((1, 2, 3), repeat=2):
        family = setyb.power_family(alpha, beta)
        braid = setyb.check_family(family, EquationForm.BRAID, triples)
        qybe[f"{alpha},{beta}"] = setyb.check_family(family, EquationForm.QYBE, triples).verdict
        if not braid.passed:
            failures.append({"alpha": alpha, "beta": beta, **braid.to_dict()})
    return ClaimOutcome(not failures, {"triples": len(triples), "qybe_verdicts": qybe},
                        failures[0] if failures else None)


LINEAR_FAMILY_PAIRS = (
    (gauss(2), gauss(3)),
    (gauss(0, 1), gauss(1, 1)),
    (gauss(Fraction(1, 2)), gauss(-1)),
    (gauss(0, 2), gauss(Fraction(3, 2))),
    (gauss(-1), gauss(0, Fraction(1, 2))),
)


@claim("linear_family", module="set", description="(αw, βz + (1−αβ)w) solves the braid form over the Gaussian rationals")
def linear_family(samples: int = 100) -> ClaimOutcome:
    triples = setyb.gaussian_triples(samples)
    failures, qybe = [], {}
    for alpha, beta in LINEAR_FAMILY_PAIRS:
        family = setyb.linear_family(alpha, beta)
        label = ",".join(family.describe()[k] for k in ("alpha", "beta"))
        braid = setyb.check_family(family, EquationForm.BRAID, triples)
        qybe[label] = setyb.check_family(family, EquationForm.QYBE, triples).verdict
        if not braid.passed:
            failures.append({"params": label, **braid.to_dict()})
    return ClaimOutcome(not failures, {"triples": len(triples), "qybe_verdicts": qybe},
                        failures[0] if failures else None)


@claim("thm35", module="set", description="(x/y, x²) is a set-theoretic solution")
def thm35(triple: Optional[Sequence[Any]] = None, samples: int = 20) -> ClaimOutcome:
    triples = [tuple(triple)] if triple is not None else setyb.rational_triples(samples)
    family = setyb.quotient_square_family()
    braid = setyb.check_family(family, EquationForm.BRAID, triples)
    qybe = setyb.check_family(family, EquationForm.QYBE, triples)
    exponents = setyb.ExponentQuadruple(1, -1, 2, 0)
    in_system = exponents in setyb.solve_exponent_system(2)
    details = {"braid": braid.verdict, "qybe": qybe.verdict, "exponents_solve_system": in_system}
    if qybe.counterexample:
        details["qybe_counterexample"] = qybe.counterexample
    return ClaimOutcome(braid.passed or qybe.passed, details, braid.counterexample)


@claim("exponent_system", module="set",
       description="the monomial exponent system characterizes braid solutions")
def exponent_system(bound: int = 2, samples: int = 50) -> ClaimOutcome:
    solutions = setyb.solve_exponent_system(bound)
    required = [setyb.ExponentQuadruple(*e) for e in ((1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 2, -1))]
    missing = [list(e.as_tuple()) for e in required if e not in solutions]
    triples = setyb.rational_triples(samples, seed=1)
    failures = []
    for exponents in solutions:
        report = setyb.check_family(setyb.monomial_family(exponents), EquationForm.BRAID, triples)
        if not report.passed:
            failures.append({"exponents": list(exponents.as_tuple()), **report.to_dict()})
    return ClaimOutcome(not missing and not failures,
                        {"bound": bound, "solutions": len(solutions), "missing": missing},
                        failures[0] if failures else None)


@claim("exp_morphism", module="set", description="exp carries the linear family onto the power family")
def exp_morphism() -> ClaimOutcome:
    samples = [(1.0, 2.0), (-1.0, 3.0), (0.0, 0.0), (0.5, -0.25)]
    reports = {f"{a},{b}": setyb.exp_morphism_check(a, b, samples) for a, b in itertools.product((1, 2), repeat=2)}
    return ClaimOutcome(all(r.passed for r in reports.values()),
                        {key: {"symbolic": r.symbolic, "max_relative_error": r.max_relative_error}
                         for key, r in reports.items()})


@claim("symmetry", module="set", description="the eight sign symmetries of ℝ³ form a group with the stated instances")
def symmetry() -> ClaimOutcome:
    report = setyb.symmetry_checks()
    return ClaimOutcome(report.passed, {"closure": report.closure, "klein_subgroup": report.klein_subgroup,
                                        "planes": report.planes_instance, "axes": report.axes_instance})


@claim("logic_map", module="set", description="(p ∨ q, p ∧ q) solves both forms on {0, 1}")
def logic_map() -> ClaimOutcome:
    reports = {form.value: setyb.set_yb_check(setyb.logic_map(), form) for form in EquationForm}
    failed = next((r.counterexample for r in reports.values() if not r.passed), None)
    return ClaimOutcome(failed is None, {k: r.verdict for k, r in reports.items()}, failed)


@claim("lattice_solutions", module="set", description="(min, max) on chains and (gcd, lcm) on divisors solve both forms")
def lattice_solutions() -> ClaimOutcome:
    maps = {"minmax_3": setyb.minmax_map(3), "minmax_4": setyb.minmax_map(4),
            "gcdlcm_12": setyb.gcdlcm_map(12)[0], "gcdlcm_30": setyb.gcdlcm_map(30)[0]}
    verdicts, failed = {}, None
    for name, fmap in maps.items():
        for form in EquationForm:
            report = setyb.set_yb_check(fmap, form)
            verdicts[f"{name}:{form.value}"] = report.verdict
            if not report.passed and failed is None:
                failed = {"map": name, **report.to_dict()}
    return ClaimOutcome(failed is None, verdicts, failed)


@claim("bubble_sort", module="set", description="repeated braid moves sort a list or spread its gcd and lcm")
def bubble_sort() -> ClaimOutcome:
    cases = {
        "minmax [3, 1, 2]": (setyb.yb_sort([3, 1, 2]), [1, 2, 3]),
        "minmax [5, 3, 8, 1, 9, 2]": (setyb.yb_sort([5, 3, 8, 1, 9, 2]), [1, 2, 3, 5, 8, 9]),
        "minmax []": (setyb.yb_sort([]), []),
    }
    spread = setyb.yb_sort([4, 6, 10], setyb.SortMode.GCDLCM)
    ok = all(got == want for got, want in cases.values()) and spread[0] == 2 and spread[-1] == 60
    details = {name: got for name, (got, _) in cases.items()}
    details["gcdlcm [4, 6, 10]"] = spread
    return ClaimOutcome(ok, details)


# Colored claims

COLORED_ALPHAS = (0.5, 1.0, 2.0, 5.0)


@claim("euler", module="colored", description="J² = −I₄ and e^{πJ} + I₄ = 0 for every α")
def euler() -> ClaimOutcome:
    details, ok = {}, True
    tol = get_config().colored_tol
    for alpha in COLORED_ALPHAS:
        spec = coloredyb.JSpec(alpha)
        j = coloredyb.build_J(spec)
        square = residual(j @ j, identity(4, ScalarKind.CFLOAT).scale(complex(-1))).value
        exp_norm = coloredyb.euler_check(spec).value
        details[str(alpha)] = {"j_squared_plus_i": square, "euler": exp_norm}
        ok = ok and square < 1e-13 and exp_norm < tol
    return ClaimOutcome(ok, details)


@claim("colored_ybe", module="colored", description="cos x·I + sin x·J solves the colored equation")
def colored_ybe(samples: int = 25) -> ClaimOutcome:
    points = coloredyb.sample_points(samples)
    sweeps = [coloredyb.colored_sweep(coloredyb.JSpec(alpha), points) for alpha in COLORED_ALPHAS]
    worst = next((s.to_dict() for s in sweeps if not s.passed), None)
    return ClaimOutcome(worst is None, {str(s.alpha): s.max_residual for s in sweeps}, worst)


@claim("ode", module="colored", description="R solves Y' = JY; central differences converge at second order")
def ode() -> ClaimOutcome:
    spec = coloredyb.JSpec(1.0)
    coarse = coloredyb.ode_residual(spec, 1.0, 1e-3).value
    fine = coloredyb.ode_residual(spec, 1.0, 5e-4).value
    at_zero = coloredyb.ode_residual(spec, 0.0, 1e-4).value
    ratio = coarse / fine if fine else float("inf")
    return ClaimOutcome(abs(ratio - 4) <= 0.5 and at_zero < 1e-7,
                        {"ratio": ratio, "residual_h_1e-3": coarse, "residual_at_0": at_zero})


_COLOR_GRID = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(2), Fraction(3))
_CONSTANTS = (Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3), Fraction(5))


@claim("yb_system", module="colored",
       description="equal functions solve the five-equation system; constants leave (e2) = β(β−γ)(α−γ)")
def yb_system() -> ClaimOutcome:
    triples = [coloredyb.named_triple("equal_difference"), coloredyb.named_triple("equal_product"),
               coloredyb.constant_triple(Fraction(2), Fraction(2), Fraction(2))]
    for fns in triples:
        for u, v, w in itertools.product(_COLOR_GRID, repeat=3):
            values = coloredyb.yb_system_residuals(fns, u, v, w)
            if any(values):
                return ClaimOutcome(False, {"family": fns.name}, {
                    "colors": [str(u), str(v), str(w)], "residuals": coloredyb.format_residuals(values)})
    for a, b, g in itertools.product(_CONSTANTS, repeat=3):
        e1, e2, *_ = coloredyb.yb_system_residuals(coloredyb.constant_triple(a, b, g), 1, 2, 3)
        if e1 != 0 or e2 != b * (b - g) * (a - g):
            return ClaimOutcome(False, {"family": "constant"}, {
                "constants": [str(a), str(b), str(g)], "e1": str(e1), "e2": str(e2)})
    return ClaimOutcome(True, {"equal_families": [t.name for t in triples], "color_grid": len(_COLOR_GRID) ** 3,
                               "constant_grid": len(_CONSTANTS) ** 3})


# Transcendental claims

@claim("thm41", module="transc", description="Σ_{k≤n} 1/k² < (2/3)((n+1)/n)^n for every n")
def thm41(n_max: int = 2000) -> ClaimOutcome:
    report = transc.thm41_check(n_max)
    first_rows = {row.n: {"lhs": str(row.lhs), "rhs": str(row.rhs)} for row in report.rows[:5]}
    counterexample = None
    if report.first_failure is not None:
        counterexample = report.rows[report.first_failure - 1].to_dict()
    return ClaimOutcome(report.passed, {"checked": report.checked, "below_basel_cap": report.below_basel_cap,
                                        "proof": report.proof.to_dict(), "rows": first_rows,
                                        "display": transc.display_rows()}, counterexample)


@claim("margins", module="transc", description="π² < 4e, π³ > 4e², and the sampled inequalities keep positive margins")
def margins() -> ClaimOutcome:
    reports = transc.transcendental_margins()
    details = {r.name: {"margin": r.margin, "sign": r.sign, "stable": r.stable, "kind": r.kind} for r in reports}
    details[reports[0].value_name] = reports[0].value
    failed = next((r.to_dict() for r in reports if not r.passed), None)
    return ClaimOutcome(failed is None and reports[0].value == "-1.003522913", details, failed)


# UJLA claims

def _functional_specs(count: int = 10, seed: int = 3) -> List[ujla.FunctionalSpec]:
    rng = np.random.default_rng(seed)
    specs = []
    while len(specs) < count:
        dim = int(rng.integers(2, 5))
        f = [int(v) for v in rng.integers(-3, 4, size=dim)]
        e = [int(v) for v in rng.integers(-3, 4, size=dim)]
        f_of_e = sum(a * b for a, b in zip(f, e))
        if f_of_e == 0:
            continue
        alpha, beta = (Fraction(int(v), int(rng.integers(1, 4))) for v in rng.integers(-3, 4, size=2))
        specs.append(ujla.FunctionalSpec(dim, f, [Fraction(v, f_of_e) for v in e], alpha, beta))
    return specs


def _ujla_corpus() -> Dict[str, ujla.BilinearStructure]:
    m2 = ujla.matrix_algebra_structure()
    corpus = {
        "m2": m2,
        "dual_numbers": ujla.structure_from_algebra(linearyb.dual_numbers()),
        "product": ujla.structure_from_algebra(linearyb.product_algebra()),
        "zero_3": ujla.zero_structure(3),
    }
    for index, spec in enumerate(_functional_specs(4, seed=11)):
        for kind in ujla.FUNCTIONAL_KINDS:
            corpus[f"functional_{kind}_{index}"] = ujla.from_functional(spec, kind)
    return corpus


@claim("deformations", module="ujla", description="symmetrizing an associative product gives a Jordan algebra, antisymmetrizing a Lie algebra")
def deformations() -> ClaimOutcome:
    m2 = ujla.matrix_algebra_structure()
    jordan = ujla.classify(ujla.deform(m2, Fraction(1, 2), Fraction(1, 2)))
    lie = ujla.classify(ujla.deform(m2, 1, -1))
    opposite = ujla.classify(ujla.deform(m2, 0, 1))
    return ClaimOutcome(jordan.is_jordan and lie.is_lie and opposite.is_associative,
                        {"jordan": jordan.is_jordan, "lie": lie.is_lie, "opposite_associative": opposite.is_associative})


def _unit_law(b: ujla.BilinearStructure) -> bool:
    for i in range(b.dim):
        basis = [Fraction(int(i == k)) for k in range(b.dim)]
        if b.product(basis, list(b.unit)) != basis or b.product(list(b.unit), basis) != basis:
            return False
    return True


@claim("functional_products", module="ujla", description="products built from a functional are associative, Lie, Jordan and UJLA")
def functional_products(samples: int = 10) -> ClaimOutcome:
    checks = {
        "assoc": lambda r, b: r.is_associative and _unit_law(b),
        "lie": lambda r, b: r.is_lie,
        "jordan": lambda r, b: r.is_jordan,
        "ujla": lambda r, b: r.is_ujla,
    }
    for index, spec in enumerate(_functional_specs(samples)):
        for kind, check in checks.items():
            b = ujla.from_functional(spec, kind)
            report = ujla.classify(b)
            if not check(report, b):
                return ClaimOutcome(False, {"sample": index, "kind": kind},
                                    {"f": [str(v) for v in spec.f], "e": [str(v) for v in spec.e],
                                     "report": report.to_dict()})
    return ClaimOutcome(True, {"samples": samples, "kinds": list(checks)})


@claim("ujla_deformation", module="ujla", description="αab + βba is UJLA whenever ab is")
def ujla_deformation() -> ClaimOutcome:
    params = [(Fraction(1, 2), Fraction(1, 2)), (1, -1), (2, 3), (Fraction(-1, 3), 5), (0, 1)]
    checked = 0
    for name, b in _ujla_corpus().items():
        if not ujla.classify(b).is_ujla:
            continue
        for alpha, beta in params:
            report = ujla.classify(ujla.deform(b, alpha, beta))
            checked += 1
            if not report.is_ujla:
                return ClaimOutcome(False, {"structure": name},
                                    {"alpha": str(alpha), "beta": str(beta), "witnesses": report.witnesses})
    return ClaimOutcome(True, {"deformations": checked})


@claim("endo_product", module="ujla", description="p·f∘g − q·g∘f on End(V) is UJLA")
def endo_product(d: int = 2) -> ClaimOutcome:
    verdicts = {}
    for p, q in itertools.product(range(4), repeat=2):
        report = ujla.classify(ujla.endo_structure(p, q, d))
        verdicts[f"{p},{q}"] = report.is_ujla
        if not report.is_ujla:
            return ClaimOutcome(False, verdicts, {"p": p, "q": q, "witnesses": report.witnesses})
    return ClaimOutcome(True, {"d": d, "verdicts": verdicts})


@claim("unification", module="ujla", description="associative, Lie and Jordan products are all UJLA; a perturbed product is not")
def unification() -> ClaimOutcome:
    counts = {"associative": 0, "lie": 0, "jordan": 0}
    for name, b in _ujla_corpus().items():
        report = ujla.classify(b)
        for flag, held in (("associative", report.is_associative), ("lie", report.is_lie), ("jordan", report.is_jordan)):
            if held:
                counts[flag] += 1
                if not report.is_ujla:
                    return ClaimOutcome(False, counts, {"structure": name, "witnesses": report.witnesses})
    broken = ujla.classify(ujla.perturb(ujla.matrix_algebra_structure(), (0, 0, 0), 1))
    negative = not (broken.associative and broken.cyclic_axiom)
    return ClaimOutcome(negative and all(counts.values()),
                        {**counts, "perturbed_witnesses": broken.witnesses})
