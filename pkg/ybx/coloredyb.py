"""
Colored Yang-Baxter Family
R(x) = cos x·I₄ + sin x·J = e^{xJ} for the antidiagonal matrix J with J² = −I, and the
five-equation system on two-color functions α, β, γ.
"""

import math
import logging
from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import get_config
from .errors import DomainError, SchemaError
from .exactcore import (
    Matrix,
    Norm,
    ScalarKind,
    format_scalar,
    identity,
    lift,
    mat_exp,
    norm_of,
    parse_scalar,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JSpec:
    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if alpha == 0 or not math.isfinite(alpha):
            raise DomainError(f"J needs a nonzero finite alpha, got {self.alpha!r}")
        object.__setattr__(self, "alpha", alpha)


def build_J(spec: JSpec) -> Matrix:
    """Antidiagonal (i/α, i, i, αi)."""
    j = np.zeros((4, 4), dtype=np.complex128)
    j[0, 3] = 1j / spec.alpha
    j[1, 2] = 1j
    j[2, 1] = 1j
    j[3, 0] = 1j * spec.alpha
    return Matrix(j, ScalarKind.CFLOAT)


def r_matrix(spec: JSpec, x: float) -> Matrix:
    """cos x·I₄ + sin x·J."""
    return identity(4, ScalarKind.CFLOAT).scale(complex(math.cos(x))) + build_J(spec).scale(complex(math.sin(x)))


def euler_check(spec: JSpec) -> Norm:
    """‖e^{πJ} + I₄‖."""
    return norm_of((mat_exp(build_J(spec).scale(complex(math.pi))) + identity(4, ScalarKind.CFLOAT)).entries,
                   ScalarKind.CFLOAT)


def colored_residual(spec: JSpec, x: float, y: float) -> Norm:
    """‖R¹²(x)R²³(x+y)R¹²(y) − R²³(y)R¹²(x+y)R²³(x)‖ on V⊗V⊗V, dim V = 2."""
    rx, ry, rxy = r_matrix(spec, x), r_matrix(spec, y), r_matrix(spec, x + y)
    left = lift(rx, 2, 12) @ lift(rxy, 2, 23) @ lift(ry, 2, 12)
    right = lift(ry, 2, 23) @ lift(rxy, 2, 12) @ lift(rx, 2, 23)
    return norm_of((left - right).entries, ScalarKind.CFLOAT)


def ode_residual(spec: JSpec, x: float, h: float) -> Norm:
    """Central-difference residual of Y' = JY along R."""
    if not h > 0:
        raise DomainError(f"step h must be positive, got {h!r}")
    derivative = (r_matrix(spec, x + h) - r_matrix(spec, x - h)).scale(complex(1 / (2 * h)))
    return norm_of((derivative - build_J(spec) @ r_matrix(spec, x)).entries, ScalarKind.CFLOAT)


def group_law_residual(spec: JSpec, x: float, y: float) -> Norm:
    """‖e^{xJ}e^{yJ} − e^{(x+y)J}‖."""
    j = build_J(spec)
    product = mat_exp(j.scale(complex(x))) @ mat_exp(j.scale(complex(y)))
    return norm_of((product - mat_exp(j.scale(complex(x + y)))).entries, ScalarKind.CFLOAT)


def _radical_inverse(index: int, base: int) -> float:
    result, f = 0.0, 1.0 / base
    while index:
        index, digit = divmod(index, base)
        result += digit * f
        f /= base
    return result


def sample_points(count: int = 25, grid: Optional[int] = None) -> List[Tuple[float, float]]:
    """Deterministic points in [−π, π]²: a grid followed by Halton points in bases 2 and 3."""
    if count < 1:
        raise DomainError(f"sample count must be positive, got {count}")
    side = grid if grid is not None else math.isqrt(count // 2)
    points = []
    if side >= 2:
        axis = np.linspace(-math.pi, math.pi, side)
        points = [(float(x), float(y)) for x in axis for y in axis]
    elif side == 1:
        points = [(0.0, 0.0)]
    index = 1
    while len(points) < count:
        points.append((
            -math.pi + 2 * math.pi * _radical_inverse(index, 2),
            -math.pi + 2 * math.pi * _radical_inverse(index, 3),
        ))
        index += 1
    return points[:count]


@dataclass
class ColoredSweep:
    alpha: float
    samples: int
    max_residual: float
    worst_point: Tuple[float, float]
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["worst_point"] = list(self.worst_point)
        data["passed"] = self.passed
        return data


def colored_sweep(spec: JSpec, points: Sequence[Tuple[float, float]], tol: Optional[float] = None) -> ColoredSweep:
    """Max colored residual over the points."""
    tol = get_config().colored_tol if tol is None else tol
    worst, worst_point = -1.0, (0.0, 0.0)
    for x, y in points:
        value = colored_residual(spec, x, y).value
        if value > worst:
            worst, worst_point = value, (x, y)
    logger.debug(f"📊 Colored sweep alpha={spec.alpha}: max residual {worst:.3e} over {len(points)} points")
    return ColoredSweep(spec.alpha, len(points), worst, worst_point, tol)


# Two-color system

ColorFunction = Callable[[Any, Any], Any]


@dataclass(frozen=True)
class ColorFunctionTriple:
    """Three functions α(u, v), β(u, v), γ(u, v) of two colors."""
    kind: str
    alpha: ColorFunction
    beta: ColorFunction
    gamma: ColorFunction
    name: str = ""
    description: Optional[Dict[str, Any]] = None

    def values(self, u: Any, v: Any) -> Tuple[Any, Any, Any]:
        return self.alpha(u, v), self.beta(u, v), self.gamma(u, v)


def constant_triple(a: Any, b: Any, c: Any) -> ColorFunctionTriple:
    return ColorFunctionTriple(
        "constant", lambda u, v: a, lambda u, v: b, lambda u, v: c,
        name=f"constant({a}, {b}, {c})",
        description={"kind": "constant", "alpha": _fmt(a), "beta": _fmt(b), "gamma": _fmt(c)},
    )


def equal_triple(g: ColorFunction, name: str = "equal") -> ColorFunctionTriple:
    """α = β = γ = g."""
    return ColorFunctionTriple("named", g, g, g, name=name, description={"kind": "named", "name": name})


def _fmt(value: Any) -> Any:
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    return value


def table_triple(colors: Sequence[Any], alpha: Sequence[Sequence[Any]], beta: Sequence[Sequence[Any]],
                 gamma: Sequence[Sequence[Any]]) -> ColorFunctionTriple:
    """Functions tabulated on a color grid: table[i][j] is the value at (colors[i], colors[j])."""
    size = len(colors)
    index = {c: i for i, c in enumerate(colors)}
    if len(index) != size:
        raise SchemaError("colors", "colors must be distinct")
    for name, table in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if len(table) != size or any(len(row) != size for row in table):
            raise SchemaError(name, f"expected a {size}×{size} table")

    def lookup(table):
        def fn(u, v):
            if u not in index or v not in index:
                raise DomainError(f"colors ({u}, {v}) are outside the tabulated grid")
            return table[index[u]][index[v]]
        return fn

    return ColorFunctionTriple(
        "table", lookup(alpha), lookup(beta), lookup(gamma), name="table",
        description={"kind": "table", "colors": [_fmt(c) for c in colors],
                     "alpha": [[_fmt(v) for v in row] for row in alpha],
                     "beta": [[_fmt(v) for v in row] for row in beta],
                     "gamma": [[_fmt(v) for v in row] for row in gamma]},
    )


NAMED_TRIPLES: Dict[str, Callable[[], ColorFunctionTriple]] = {
    "ones": lambda: constant_triple(Fraction(1), Fraction(1), Fraction(1)),
    "equal_difference": lambda: equal_triple(lambda u, v: u - v, "equal_difference"),
    "equal_product": lambda: equal_triple(lambda u, v: u * v + 1, "equal_product"),
}


def named_triple(name: str) -> ColorFunctionTriple:
    if name not in NAMED_TRIPLES:
        raise SchemaError("name", f"unknown color triple {name!r}; expected one of {sorted(NAMED_TRIPLES)}")
    return NAMED_TRIPLES[name]()


def color_triple_from_json(doc: Dict[str, Any]) -> ColorFunctionTriple:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SchemaError("kind", "missing")
    kind = doc["kind"]
    rational = ScalarKind.RATIONAL
    if kind == "constant":
        for name in ("alpha", "beta", "gamma"):
            if name not in doc:
                raise SchemaError(name, "missing")
        return constant_triple(*(parse_scalar(doc[name], rational, name) for name in ("alpha", "beta", "gamma")))
    if kind == "table":
        for name in ("colors", "alpha", "beta", "gamma"):
            if not isinstance(doc.get(name), list):
                raise SchemaError(name, "missing or not a list")
        colors = [parse_scalar(c, rational, f"colors[{i}]") for i, c in enumerate(doc["colors"])]
        tables = []
        for name in ("alpha", "beta", "gamma"):
            rows = doc[name]
            if any(not isinstance(row, list) for row in rows):
                raise SchemaError(name, "rows must be lists")
            tables.append([[parse_scalar(v, rational, f"{name}[{i}][{j}]") for j, v in enumerate(row)]
                           for i, row in enumerate(rows)])
        return table_triple(colors, *tables)
    if kind == "named":
        return named_triple(doc.get("name"))
    raise SchemaError("kind", f"unknown kind {kind!r}; expected constant, table or named")


def yb_system_residuals(fns: ColorFunctionTriple, u: Any, v: Any, w: Any) -> Tuple[Any, Any, Any, Any, Any]:
    """Left-hand sides of the five equations at colors (u, v, w), in their displayed grouping."""
    a_uv, b_uv, g_uv = fns.values(u, v)
    a_vw, b_vw, g_vw = fns.values(v, w)
    a_uw, b_uw, g_uw = fns.values(u, w)

    e1 = ((b_vw - g_vw) * (a_uv * b_uw - a_uw * b_uv)
          + (a_uv - g_uv) * (a_vw * b_uw - a_uw * b_vw))
    e2 = (b_vw * (b_uv - g_uv) * (a_uw - g_uw)
          + (a_vw - g_vw) * (b_uw * g_uv - b_uv * g_uw))
    e3 = (a_uv * b_vw * (a_uw - g_uw) + a_vw * g_uw * (g_uv - a_uv)
          + g_vw * (a_uv * g_uw - a_uw * g_uv))
    e4 = (a_uv * b_vw * (b_uw - g_uw) + b_vw * g_uw * (g_uv - b_uv)
          + g_vw * (b_uv * g_uw - b_uw * g_uv))
    e5 = (a_uv * (a_vw - g_vw) * (b_uw - g_uw)
          + (b_uv - g_uv) * (a_uw * g_vw - a_vw * g_uw))
    return e1, e2, e3, e4, e5


def format_residuals(values: Sequence[Any]) -> List[Any]:
    return [format_scalar(v, ScalarKind.RATIONAL) if isinstance(v, (int, Fraction)) else float(v) for v in values]
