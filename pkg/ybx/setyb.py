"""
Set-Theoretic Yang-Baxter Maps
Finite-map checks under both equation forms, the closed-form families with exact
evaluation, the monomial exponent system, the exponential morphism, the symmetry group
of ℝ³, braid-move sorting, and an exhaustive solution enumerator.

Compositions apply the rightmost map first: the braid form compares S¹²S²³S¹² with
S²³S¹²S²³, the QYBE form compares S¹²S¹³S²³ with S²³S¹³S¹².
"""

import math
import json
import time
import logging
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from .config import get_config
from .errors import DimensionError, DomainError, SchemaError
from .exactcore import (
    EquationForm,
    GaussianRational,
    ScalarKind,
    format_scalar,
    gauss,
    parse_form,
)

logger = logging.getLogger(__name__)

Triple = Tuple[Any, Any, Any]

# leg sequences in application order (rightmost factor first)
_CHAINS = {
    EquationForm.BRAID: ((12, 23, 12), (23, 12, 23)),
    EquationForm.QYBE: ((23, 13, 12), (12, 13, 23)),
}
_SLOTS = {12: (0, 1), 23: (1, 2), 13: (0, 2)}


def apply_chain(s: Callable[[Any, Any], Tuple[Any, Any]], legs: Sequence[int], triple: Triple) -> Triple:
    """Apply S on the given legs of a triple, one factor after another."""
    state = list(triple)
    for leg in legs:
        i, j = _SLOTS[leg]
        state[i], state[j] = s(state[i], state[j])
    return tuple(state)


def evaluate_chains(s: Callable[[Any, Any], Tuple[Any, Any]], form: EquationForm, triple: Triple) -> Tuple[Triple, Triple]:
    left, right = _CHAINS[form]
    return apply_chain(s, left, triple), apply_chain(s, right, triple)


def _format_value(value: Any) -> Any:
    if isinstance(value, GaussianRational):
        return format_scalar(value, ScalarKind.GAUSS)
    if isinstance(value, Fraction):
        return str(value)
    return int(value)


# Finite maps

@dataclass(frozen=True, order=True)
class FiniteMap:
    """A map X×X → X×X on X = {0..n−1}; table[i·n + j] = S(i, j)."""
    n: int
    table: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"n must be positive, got {self.n}")
        table = tuple((int(a), int(b)) for a, b in self.table)
        if len(table) != self.n * self.n:
            raise DimensionError(f"table must have {self.n * self.n} entries, got {len(table)}")
        for index, (a, b) in enumerate(table):
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise DomainError(f"table[{index}] = ({a}, {b}) is outside {{0..{self.n - 1}}}²")
        object.__setattr__(self, "table", table)

    def __call__(self, x: int, y: int) -> Tuple[int, int]:
        return self.table[x * self.n + y]

    def codes(self) -> Tuple[int, ...]:
        return tuple(a * self.n + b for a, b in self.table)

    @classmethod
    def from_codes(cls, n: int, codes: Sequence[int]) -> "FiniteMap":
        return cls(n, tuple(divmod(int(c), n) for c in codes))

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "table": [list(pair) for pair in self.table]}


def finite_map_from_json(doc: Dict[str, Any]) -> FiniteMap:
    if not isinstance(doc, dict):
        raise SchemaError("map", "expected a JSON object")
    for name in ("n", "table"):
        if name not in doc:
            raise SchemaError(name, "missing")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError("n", f"expected a positive integer, got {n!r}")
    table = doc["table"]
    if not isinstance(table, list) or len(table) != n * n:
        raise SchemaError("table", f"expected {n * n} pairs")
    for index, pair in enumerate(table):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) and 0 <= v < n for v in pair)):
            raise SchemaError(f"table[{index}]", f"expected a pair of integers in 0..{n - 1}")
    return FiniteMap(n, tuple(tuple(pair) for pair in table))


def from_function(n: int, fn: Callable[[int, int], Tuple[int, int]]) -> FiniteMap:
    return FiniteMap(n, tuple(fn(x, y) for x in range(n) for y in range(n)))


def identity_map(n: int) -> FiniteMap:
    return from_function(n, lambda x, y: (x, y))


def twist_map(n: int) -> FiniteMap:
    return from_function(n, lambda x, y: (y, x))


def compose_twist(s: FiniteMap) -> FiniteMap:
    """τ∘S."""
    return FiniteMap(s.n, tuple((b, a) for a, b in s.table))


def relabel(s: FiniteMap, sigma: Sequence[int]) -> FiniteMap:
    """σ·S = (σ×σ)∘S∘(σ×σ)⁻¹."""
    return FiniteMap.from_codes(s.n, _conjugate_codes(s.codes(), s.n, sigma))


def _conjugate_codes(codes: Sequence[int], n: int, sigma: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            a, b = divmod(codes[x * n + y], n)
            out[sigma[x] * n + sigma[y]] = sigma[a] * n + sigma[b]
    return tuple(out)


def _canonical_codes(codes: Sequence[int], n: int) -> Tuple[int, ...]:
    return min(_conjugate_codes(codes, n, sigma) for sigma in itertools.permutations(range(n)))


def canonical_form(s: FiniteMap) -> FiniteMap:
    """Lexicographically least table among the n! relabelings of S."""
    return FiniteMap.from_codes(s.n, _canonical_codes(s.codes(), s.n))


def minmax_map(n: int) -> FiniteMap:
    """(min, max) on the chain {0..n−1}."""
    return from_function(n, lambda x, y: (min(x, y), max(x, y)))


def logic_map() -> FiniteMap:
    """(p ∨ q, p ∧ q) on {0, 1}."""
    return from_function(2, lambda p, q: (p | q, p & q))


def divisors(m: int) -> List[int]:
    if m < 1:
        raise DomainError(f"divisors need a positive integer, got {m}")
    return [k for k in range(1, m + 1) if m % k == 0]


def gcdlcm_map(m: int) -> Tuple[FiniteMap, List[int]]:
    """(gcd, lcm) on the divisors of m, indexed in increasing order."""
    labels = divisors(m)
    index = {v: i for i, v in enumerate(labels)}
    fmap = from_function(
        len(labels),
        lambda x, y: (index[math.gcd(labels[x], labels[y])], index[math.lcm(labels[x], labels[y])]),
    )
    return fmap, labels


# Reports

@dataclass
class SetYBReport:
    """Outcome of a set-theoretic check; a failure carries the first failing triple."""
    form: str
    verdict: str
    triples_checked: int
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _run_checks(s: Callable, form: EquationForm, triples: Iterable[Triple]) -> SetYBReport:
    checked = 0
    for triple in triples:
        checked += 1
        left, right = evaluate_chains(s, form, triple)
        if left != right:
            return SetYBReport(
                form=form.value,
                verdict="fail",
                triples_checked=checked,
                counterexample={
                    "triple": [_format_value(v) for v in triple],
                    "left": [_format_value(v) for v in left],
                    "right": [_format_value(v) for v in right],
                },
            )
    return SetYBReport(form=form.value, verdict="pass", triples_checked=checked)


def set_yb_check(s: FiniteMap, form: Any = EquationForm.BRAID) -> SetYBReport:
    """Check S on all n³ triples in lexicographic order."""
    form = parse_form(form)
    return _run_checks(s, form, itertools.product(range(s.n), repeat=3))


# Closed-form families

class FamilyKind(str, Enum):
    POWER = "power"
    LINEAR = "linear"
    QUOTIENT_SQUARE = "quotient-square"
    MONOMIAL = "monomial"
    LOGIC = "logic"
    MINMAX = "minmax"
    GCDLCM = "gcdlcm"


_DOMAINS = {
    FamilyKind.POWER: "positive rationals",
    FamilyKind.MONOMIAL: "positive rationals",
    FamilyKind.LINEAR: "Gaussian rationals",
    FamilyKind.QUOTIENT_SQUARE: "nonzero rationals",
    FamilyKind.LOGIC: "booleans",
    FamilyKind.MINMAX: "integers",
    FamilyKind.GCDLCM: "positive integers",
}


@dataclass(frozen=True, order=True)
class ExponentQuadruple:
    """Exponents of the monomial map (x, y) ↦ (x^m y^n, x^p y^q)."""
    m: int
    n: int
    p: int
    q: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.m, self.n, self.p, self.q


@dataclass(frozen=True)
class ClosedFormFamily:
    """One of the closed-form maps together with its parameters and domain.

    power:           (x, y) ↦ (y^α, x^β y^{1−αβ}),      α, β positive integers
    linear:          (z, w) ↦ (αw, βz + (1−αβ)w),        α, β Gaussian rationals
    quotient-square: (x, y) ↦ (x/y, x²)
    monomial:        (x, y) ↦ (x^m y^n, x^p y^q)
    logic:           (p, q) ↦ (p ∨ q, p ∧ q)
    minmax:          (a, b) ↦ (min, max)
    gcdlcm:          (a, b) ↦ (gcd, lcm)
    """
    kind: FamilyKind
    alpha: Any = None
    beta: Any = None
    exponents: Optional[ExponentQuadruple] = None

    def __post_init__(self):
        kind = FamilyKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is FamilyKind.POWER:
            for name, value in (("alpha", self.alpha), ("beta", self.beta)):
                if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                    raise DomainError(f"power family needs positive integer {name}, got {value!r}")
        elif kind is FamilyKind.LINEAR:
            object.__setattr__(self, "alpha", self._gaussian(self.alpha, "alpha"))
            object.__setattr__(self, "beta", self._gaussian(self.beta, "beta"))
        elif kind is FamilyKind.MONOMIAL and not isinstance(self.exponents, ExponentQuadruple):
            raise DomainError("monomial family needs an exponent quadruple")

    @staticmethod
    def _gaussian(value: Any, name: str) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return gauss(value)
        raise DomainError(f"linear family needs a Gaussian rational {name}, got {value!r}")

    @property
    def domain(self) -> str:
        return _DOMAINS[self.kind]

    def describe(self) -> Dict[str, Any]:
        info = {"kind": self.kind.value, "domain": self.domain}
        if self.kind in (FamilyKind.POWER, FamilyKind.LINEAR):
            info["alpha"] = _format_value(self.alpha)
            info["beta"] = _format_value(self.beta)
        if self.exponents is not None:
            info["exponents"] = list(self.exponents.as_tuple())
        return info

    def check_domain(self, value: Any) -> Any:
        kind = self.kind
        if isinstance(value, bool):
            value = int(value)
        if kind in (FamilyKind.POWER, FamilyKind.MONOMIAL):
            if not isinstance(value, (int, Fraction)) or value <= 0:
                raise DomainError(f"{kind.value} family needs positive rationals, got {value!r}")
            return Fraction(value)
        if kind is FamilyKind.LINEAR:
            if isinstance(value, GaussianRational):
                return value
            if isinstance(value, int):
                return gauss(value)
            raise DomainError(f"linear family needs Gaussian rationals, got {value!r}")
        if kind is FamilyKind.QUOTIENT_SQUARE:
            if not isinstance(value, (int, Fraction)):
                raise DomainError(f"quotient-square family needs rationals, got {value!r}")
            if value == 0:
                raise DomainError("quotient-square family: zero denominator")
            return Fraction(value)
        if not isinstance(value, int):
            raise DomainError(f"{kind.value} family needs integers, got {value!r}")
        if kind is FamilyKind.LOGIC and value not in (0, 1):
            raise DomainError(f"logic family needs booleans, got {value}")
        if kind is FamilyKind.GCDLCM and value < 1:
            raise DomainError(f"gcdlcm family needs positive integers, got {value}")
        return value

    def __call__(self, x: Any, y: Any) -> Tuple[Any, Any]:
        kind = self.kind
        if kind is FamilyKind.POWER:
            a, b = self.alpha, self.beta
            return y ** a, x ** b * y ** (1 - a * b)
        if kind is FamilyKind.MONOMIAL:
            m, n, p, q = self.exponents.as_tuple()
            return x ** m * y ** n, x ** p * y ** q
        if kind is FamilyKind.LINEAR:
            a, b = self.alpha, self.beta
            return a * y, b * x + (gauss(1) - a * b) * y
        if kind is FamilyKind.QUOTIENT_SQUARE:
            return x / y, x * x
        if kind is FamilyKind.LOGIC:
            return x | y, x & y
        if kind is FamilyKind.MINMAX:
            return min(x, y), max(x, y)
        return math.gcd(x, y), math.lcm(x, y)


def power_family(alpha: int, beta: int) -> ClosedFormFamily:
    return ClosedFormFamily(FamilyKind.POWER, alpha, beta)


def linear_family(alpha: Any, beta: Any) -> ClosedFormFamily:
    return ClosedFormFamily(FamilyKind.LINEAR, alpha, beta)


def quotient_square_family() -> ClosedFormFamily:
    return ClosedFormFamily(FamilyKind.QUOTIENT_SQUARE)


def monomial_family(exponents: ExponentQuadruple) -> ClosedFormFamily:
    return ClosedFormFamily(FamilyKind.MONOMIAL, exponents=exponents)


def check_family(f: ClosedFormFamily, form: Any, triples: Sequence[Triple]) -> SetYBReport:
    """Evaluate both chains exactly on each triple; the first failing triple is reported."""
    form = parse_form(form)
    checked = [tuple(f.check_domain(v) for v in triple) for triple in triples]
    report = _run_checks(f, form, checked)
    logger.debug(f"🔍 {f.kind.value} family, {form.value}: {report.verdict} after {report.triples_checked} triples")
    return report


def rational_triples(count: int, seed: int = 0) -> List[Triple]:
    """Deterministic positive rational triples, starting with the prime triple (2, 3, 5)."""
    rng = np.random.default_rng(seed)
    triples = [(Fraction(2), Fraction(3), Fraction(5))]
    while len(triples) < count:
        nums = rng.integers(1, 10, size=3)
        dens = rng.integers(1, 10, size=3)
        triples.append(tuple(Fraction(int(a), int(b)) for a, b in zip(nums, dens)))
    return triples[:count]


def gaussian_triples(count: int, seed: int = 0) -> List[Triple]:
    """Deterministic Gaussian rational triples with nonzero entries."""
    rng = np.random.default_rng(seed)
    triples = [(gauss(2), gauss(3), gauss(5))]
    while len(triples) < count:
        parts = rng.integers(-4, 5, size=(3, 2))
        dens = rng.integers(1, 5, size=(3, 2))
        if any(re == 0 and im == 0 for re, im in parts):
            continue
        triples.append(tuple(
            gauss(Fraction(int(re), int(dr)), Fraction(int(im), int(di)))
            for (re, im), (dr, di) in zip(parts, dens)
        ))
    return triples[:count]


# Exponent system

def solve_exponent_system(bound: int) -> List[ExponentQuadruple]:
    """Integer solutions with |m|, |n|, |p|, |q| ≤ bound of

    mnq = 0, mpq = 0, mq² = m²q, m² + mnp = m, q² + npq = q,

    the conditions for the monomial map to satisfy the braid form.
    """
    if bound < 1:
        raise DomainError(f"bound must be at least 1, got {bound}")
    values = np.arange(-bound, bound + 1, dtype=np.int64)
    m, n, p, q = (axis.ravel() for axis in np.meshgrid(values, values, values, values, indexing="ij"))
    ok = (
        (m * n * q == 0)
        & (m * p * q == 0)
        & (m * q * q == m * m * q)
        & (m * m + m * n * p == m)
        & (q * q + n * p * q == q)
    )
    found = [ExponentQuadruple(int(a), int(b), int(c), int(d)) for a, b, c, d in zip(m[ok], n[ok], p[ok], q[ok])]
    return sorted(found, key=ExponentQuadruple.as_tuple)


# Exponential morphism

@dataclass
class MorphismReport:
    alpha: int
    beta: int
    symbolic: bool
    exponents: Dict[str, str]
    max_relative_error: float
    samples: int
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.symbolic and self.max_relative_error <= self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["passed"] = self.passed
        return data


def _exponent_of(expr: sp.Expr) -> sp.Expr:
    return sp.expand(sp.expand_log(sp.log(sp.powsimp(expr)), force=True))


def exp_morphism_check(alpha: int, beta: int, samples: Sequence[Tuple[float, float]],
                       tol: float = 1e-12) -> MorphismReport:
    """Check (f×f)∘R = S∘(f×f) for f = exp, R the linear family and S the power family.

    Real inputs, positive-real codomain. The exponents of both routes are compared as
    polynomials in z, w; the routes are also evaluated in floats on each sample.
    """
    for name, value in (("alpha", alpha), ("beta", beta)):
        if not isinstance(value, int) or value < 1:
            raise DomainError(f"{name} must be a positive integer, got {value!r}")
    z, w = sp.symbols("z w", real=True)
    through_linear = (sp.exp(alpha * w), sp.exp(beta * z + (1 - alpha * beta) * w))
    x, y = sp.exp(z), sp.exp(w)
    through_power = (y ** alpha, x ** beta * y ** (1 - alpha * beta))

    symbolic = True
    exponents = {}
    for index, (lin, pw) in enumerate(zip(through_linear, through_power)):
        lin_exp, pw_exp = _exponent_of(lin), _exponent_of(pw)
        difference = sp.Poly(sp.expand(lin_exp - pw_exp), z, w)
        symbolic = symbolic and difference.is_zero
        exponents[f"component_{index + 1}"] = str(lin_exp)

    worst = 0.0
    for zv, wv in samples:
        lin = (math.exp(alpha * wv), math.exp(beta * zv + (1 - alpha * beta) * wv))
        ex, ey = math.exp(zv), math.exp(wv)
        pw = (ey ** alpha, ex ** beta * ey ** (1 - alpha * beta))
        for a, b in zip(lin, pw):
            worst = max(worst, abs(a - b) / max(abs(a), abs(b)))
    return MorphismReport(alpha, beta, bool(symbolic), exponents, worst, len(samples), tol)


# Symmetries of ℝ³

SYMMETRIES = {
    "I": (1, 1, 1),
    "S_OX": (1, -1, -1),
    "S_OY": (-1, 1, -1),
    "S_OZ": (-1, -1, 1),
    "S_XOY": (1, 1, -1),
    "S_XOZ": (1, -1, 1),
    "S_YOZ": (-1, 1, 1),
    "S_O": (-1, -1, -1),
}
KLEIN = ("I", "S_OX", "S_OY", "S_OZ")


@dataclass
class SymmetryReport:
    closure: bool
    klein_subgroup: bool
    planes_instance: Dict[str, str]
    axes_instance: Dict[str, str]
    table: Dict[str, Dict[str, str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (self.closure and self.klein_subgroup
                and set(self.planes_instance.values()) == {"S_O"}
                and set(self.axes_instance.values()) == {"I"})

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["passed"] = self.passed
        return data


def _compose(*names: str) -> Optional[str]:
    matrix = np.eye(3, dtype=int)
    for name in names:
        matrix = matrix @ np.diag(SYMMETRIES[name])
    signs = tuple(int(v) for v in np.diag(matrix))
    return next((label for label, s in SYMMETRIES.items() if s == signs), None)


def symmetry_checks() -> SymmetryReport:
    table = {a: {b: _compose(a, b) for b in SYMMETRIES} for a in SYMMETRIES}
    closure = all(product is not None for row in table.values() for product in row.values())
    klein = (all(table[a][b] in KLEIN for a in KLEIN for b in KLEIN)
             and all(table[a][a] == "I" for a in KLEIN)
             and all(table[a][b] == table[b][a] for a in KLEIN for b in KLEIN))
    planes = {
        "S_XOY∘S_XOZ∘S_YOZ": _compose("S_XOY", "S_XOZ", "S_YOZ"),
        "S_YOZ∘S_XOZ∘S_XOY": _compose("S_YOZ", "S_XOZ", "S_XOY"),
    }
    axes = {
        "S_OX∘S_OY∘S_OZ": _compose("S_OX", "S_OY", "S_OZ"),
        "S_OZ∘S_OY∘S_OX": _compose("S_OZ", "S_OY", "S_OX"),
    }
    return SymmetryReport(closure, klein, planes, axes, table)


# Sorting by braid moves

class SortMode(str, Enum):
    MINMAX = "minmax"
    GCDLCM = "gcdlcm"


def yb_sort_with_moves(values: Sequence[int], mode: Any = SortMode.MINMAX) -> Tuple[List[int], int]:
    """Bubble-sort loop with the swap replaced by a solution applied to adjacent pairs.

    Each pass sweeps from the right end towards the left; passes repeat until nothing
    changes. Returns the final list and the number of moves that changed a pair.
    """
    mode = SortMode(mode)
    s = list(int(v) for v in values)
    if mode is SortMode.GCDLCM and any(v < 1 for v in s):
        raise DomainError(f"gcdlcm mode needs positive integers, got {list(values)}")
    rule = (lambda a, b: (min(a, b), max(a, b))) if mode is SortMode.MINMAX \
        else (lambda a, b: (math.gcd(a, b), math.lcm(a, b)))
    moves = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(s) - 2, -1, -1):
            pair = rule(s[i], s[i + 1])
            if pair != (s[i], s[i + 1]):
                s[i], s[i + 1] = pair
                moves += 1
                changed = True
    return s, moves


def yb_sort(values: Sequence[int], mode: Any = SortMode.MINMAX) -> List[int]:
    return yb_sort_with_moves(values, mode)[0]


# Enumeration

@dataclass
class EnumerationSummary:
    n: int
    form: str
    count: int
    count_up_to_iso: int
    runtime_ms: float
    partitions: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class EnumerationResult:
    solutions: List[FiniteMap]
    summary: EnumerationSummary
    up_to_iso: bool = False


def _column_order(n: int) -> List[int]:
    return [i * n + j for j in range(n) for i in range(n)]


class _Search:
    """Backtracking over table cells with watch lists.

    Every triple waits on the first unassigned cell its two chains look up; assigning a
    cell re-evaluates only the triples waiting on it.
    """

    def __init__(self, n: int, form: EquationForm):
        self.n = n
        self.left, self.right = _CHAINS[form]
        self.order = _column_order(n)
        self.table = [-1] * (n * n)
        self.watch: List[List[Triple]] = [[] for _ in range(n * n)]
        self.solutions: List[Tuple[int, ...]] = []
        self.nodes = 0
        for triple in itertools.product(range(n), repeat=3):
            self.watch[self._evaluate(triple)].append(triple)

    def _run(self, legs: Sequence[int], triple: Triple):
        n, table = self.n, self.table
        state = list(triple)
        for leg in legs:
            i, j = _SLOTS[leg]
            cell = state[i] * n + state[j]
            code = table[cell]
            if code < 0:
                return cell
            state[i], state[j] = divmod(code, n)
        return tuple(state)

    def _evaluate(self, triple: Triple):
        """True / False once decided, else the cell the triple now waits on."""
        left = self._run(self.left, triple)
        if isinstance(left, int):
            return left
        right = self._run(self.right, triple)
        if isinstance(right, int):
            return right
        return left == right

    def _assign(self, cell: int, code: int) -> Optional[List[int]]:
        # returns the cells whose watch lists grew, or None on a violated triple
        self.table[cell] = code
        waiting, self.watch[cell] = self.watch[cell], []
        grown = []
        for triple in waiting:
            outcome = self._evaluate(triple)
            if outcome is True:
                continue
            if outcome is False:
                self._undo(cell, waiting, grown)
                return None
            self.watch[outcome].append(triple)
            grown.append(outcome)
        self._saved[cell] = waiting
        return grown

    def _undo(self, cell: int, waiting: List[Triple], grown: List[int]):
        for other in reversed(grown):
            self.watch[other].pop()
        self.watch[cell] = waiting
        self.table[cell] = -1

    def run(self, first: Optional[int] = None) -> List[Tuple[int, ...]]:
        self._saved: Dict[int, List[Triple]] = {}
        if first is None:
            self._descend(0)
            return self.solutions
        grown = self._assign(self.order[0], first)
        if grown is not None:
            self._descend(1)
            self._undo(self.order[0], self._saved.pop(self.order[0]), grown)
        return self.solutions

    def _descend(self, depth: int):
        self.nodes += 1
        if depth == len(self.order):
            self.solutions.append(tuple(self.table))
            return
        cell = self.order[depth]
        for code in range(self.n * self.n):
            grown = self._assign(cell, code)
            if grown is None:
                continue
            self._descend(depth + 1)
            self._undo(cell, self._saved.pop(cell), grown)


def _enumerate_partition(args: Tuple[int, str, int]) -> Tuple[List[Tuple[int, ...]], int]:
    n, form, first = args
    search = _Search(n, EquationForm(form))
    solutions = search.run(first)
    return solutions, search.nodes


def enumerate_solutions(n: int, form: Any = EquationForm.BRAID, up_to_iso: bool = False,
                        threads: Optional[int] = None) -> EnumerationResult:
    """All maps on {0..n−1}, n ≤ 3, solving the chosen form, sorted by table.

    With up_to_iso the solutions are the canonical representatives of the relabeling
    orbits. The search is split by the value of the first cell; at n = 3 the parts run
    in worker processes.
    """
    form = parse_form(form)
    if not isinstance(n, int) or not 1 <= n <= 3:
        raise DomainError(f"n must be 1, 2 or 3, got {n!r}")
    threads = threads or get_config().threads
    start = time.time()
    logger.info(f"🔍 Enumerating {form.value} solutions on {n} elements")

    jobs = [(n, form.value, first) for first in range(n * n)]
    found: List[Tuple[int, ...]] = []
    nodes = 0
    if n == 3 and threads > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as executor:
            for index, (solutions, visited) in enumerate(executor.map(_enumerate_partition, jobs)):
                found.extend(solutions)
                nodes += visited
                logger.info(f"   📊 Partition {index + 1}/{len(jobs)}: {len(solutions)} solutions")
    else:
        for job in jobs:
            solutions, visited = _enumerate_partition(job)
            found.extend(solutions)
            nodes += visited

    found.sort()
    canonical = sorted({_canonical_codes(codes, n) for codes in found})
    runtime_ms = (time.time() - start) * 1000
    summary = EnumerationSummary(
        n=n,
        form=form.value,
        count=len(found),
        count_up_to_iso=len(canonical),
        runtime_ms=runtime_ms,
        partitions=len(jobs),
    )
    logger.info(f"✅ Found {summary.count} solutions ({summary.count_up_to_iso} up to relabeling) "
                f"in {runtime_ms:.0f}ms, {nodes} search nodes")
    chosen = canonical if up_to_iso else found
    return EnumerationResult([FiniteMap.from_codes(n, codes) for codes in chosen], summary, up_to_iso)


def write_listing(result: EnumerationResult, path: Path) -> Path:
    """One JSON document per line, one line per solution."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        for solution in result.solutions:
            f.write(json.dumps(solution.to_dict()) + "\n")
    logger.info(f"💾 Wrote {len(result.solutions)} solutions to {path}")
    return path
