"""
UJLA Structures
Classification of bilinear products given by rational structure constants: associative,
Lie, Jordan and UJLA flags with witnesses, deformations ab ↦ α·ab + β·ba, the
constructions from a linear functional, and the (p, q)-product on endomorphisms.
"""

import math
import logging
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionError, DomainError, SchemaError
from .exactcore import ScalarKind, coerce, format_tensor, format_vector, parse_tensor, parse_vector
from .linearyb import FiniteAlgebra, left_nested, matrix_algebra, right_nested

logger = logging.getLogger(__name__)

FULL_GRID_MAX_DIM = 6
GRID = (0, 1, 2, 3)
WINDOW = 3

DEGREE_AXIOMS = ("a2b_a", "ab_a2", "ba2_a", "a2_ab")


@dataclass(frozen=True, eq=False)
class BilinearStructure:
    """Product e_i·e_j = Σ_k c[i,j,k] e_k over the rationals."""
    dim: int
    c: np.ndarray
    name: str = "structure"
    unit: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DimensionError(f"dim must be a positive integer, got {self.dim!r}")
        source = np.array(self.c, dtype=object)
        if source.shape != (self.dim,) * 3:
            raise DimensionError(f"structure constants must have shape {(self.dim,) * 3}, got {source.shape}")
        c = np.empty(source.shape, dtype=object)
        for index in np.ndindex(*source.shape):
            c[index] = coerce(source[index], ScalarKind.RATIONAL)
        c.setflags(write=False)
        object.__setattr__(self, "c", c)
        if self.unit is not None:
            object.__setattr__(self, "unit", tuple(coerce(v, ScalarKind.RATIONAL) for v in self.unit))

    def product(self, x: Sequence[Any], y: Sequence[Any]) -> List[Fraction]:
        """Coordinates of x·y for coordinate vectors x, y."""
        return [sum((x[i] * y[j] * self.c[i, j, k] for i in range(self.dim) for j in range(self.dim)),
                    Fraction(0)) for k in range(self.dim)]

    def equals(self, other: "BilinearStructure") -> bool:
        return self.dim == other.dim and all(a == b for a, b in zip(self.c.flat, other.c.flat))

    def to_dict(self) -> Dict[str, Any]:
        data = {"name": self.name, "dim": self.dim, "scalar": ScalarKind.RATIONAL.value,
                "mul": format_tensor(self.c, ScalarKind.RATIONAL)}
        if self.unit is not None:
            data["unit"] = format_vector(self.unit, ScalarKind.RATIONAL)
        return data


def structure_from_json(doc: Dict[str, Any]) -> BilinearStructure:
    if not isinstance(doc, dict):
        raise SchemaError("structure", "expected a JSON object")
    if "dim" not in doc:
        raise SchemaError("dim", "missing")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError("dim", f"expected a positive integer, got {dim!r}")
    if doc.get("scalar", "rational") != "rational":
        raise SchemaError("scalar", "structures are rational only")
    if "mul" not in doc:
        raise SchemaError("mul", "missing")
    unit = parse_vector(doc["unit"], ScalarKind.RATIONAL, "unit", dim) if "unit" in doc else None
    return BilinearStructure(dim, parse_tensor(doc["mul"], ScalarKind.RATIONAL, "mul", dim),
                             doc.get("name", "structure"), unit)


def structure_from_algebra(a: FiniteAlgebra) -> BilinearStructure:
    if a.kind is not ScalarKind.RATIONAL:
        raise DomainError("UJLA structures are rational only")
    return BilinearStructure(a.dim, a.mul, a.name, a.unit)


def matrix_algebra_structure() -> BilinearStructure:
    return structure_from_algebra(matrix_algebra())


def zero_structure(dim: int) -> BilinearStructure:
    return BilinearStructure(dim, np.zeros((dim,) * 3, dtype=int), "zero")


def deform(b: BilinearStructure, alpha: Any, beta: Any) -> BilinearStructure:
    """ab ↦ α·ab + β·ba."""
    alpha, beta = coerce(alpha, ScalarKind.RATIONAL), coerce(beta, ScalarKind.RATIONAL)
    c = b.c * alpha + b.c.transpose(1, 0, 2) * beta
    return BilinearStructure(b.dim, c, f"{b.name}_deformed({alpha},{beta})")


def perturb(b: BilinearStructure, index: Tuple[int, int, int], delta: Any) -> BilinearStructure:
    c = np.array(b.c, dtype=object)
    c[tuple(index)] = c[tuple(index)] + coerce(delta, ScalarKind.RATIONAL)
    return BilinearStructure(b.dim, c, f"{b.name}_perturbed")


@dataclass(frozen=True)
class FunctionalSpec:
    """A linear functional f (coordinate row), a vector e and two parameters."""
    dim: int
    f: Tuple[Fraction, ...]
    e: Tuple[Fraction, ...]
    alpha: Fraction = Fraction(1)
    beta: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("f", "e"):
            values = getattr(self, name)
            if len(values) != self.dim:
                raise DimensionError(f"{name} must have {self.dim} coordinates, got {len(values)}")
            object.__setattr__(self, name, tuple(coerce(v, ScalarKind.RATIONAL) for v in values))
        object.__setattr__(self, "alpha", coerce(self.alpha, ScalarKind.RATIONAL))
        object.__setattr__(self, "beta", coerce(self.beta, ScalarKind.RATIONAL))

    @property
    def f_of_e(self) -> Fraction:
        return sum((a * b for a, b in zip(self.f, self.e)), Fraction(0))


FUNCTIONAL_KINDS = ("assoc", "lie", "jordan", "ujla")


def from_functional(spec: FunctionalSpec, kind: str) -> BilinearStructure:
    """Products built from a functional f:

    assoc   f(v)w + vf(w) − f(v)f(w)e   (unit e; needs f(e) = 1)
    lie     f(v)w − vf(w)
    jordan  f(v)w + vf(w)
    ujla    αf(v)w + βvf(w)
    """
    if kind not in FUNCTIONAL_KINDS:
        raise DomainError(f"unknown functional construction {kind!r}; expected one of {FUNCTIONAL_KINDS}")
    d = spec.dim
    f = np.array(spec.f, dtype=object)
    eye = np.array([[Fraction(int(i == j)) for j in range(d)] for i in range(d)], dtype=object)
    # left[i, j, k] = f_i δ_jk; right[i, j, k] = δ_ik f_j
    left = np.multiply.outer(f, eye)
    right = np.multiply.outer(eye, f).transpose(0, 2, 1)
    if kind == "assoc":
        if spec.f_of_e != 1:
            raise DomainError(f"f(e) must be 1 for the unital construction, got {spec.f_of_e}")
        e = np.array(spec.e, dtype=object)
        c = left + right - np.multiply.outer(np.multiply.outer(f, f), e)
        return BilinearStructure(d, c, "functional_assoc", spec.e)
    if kind == "lie":
        return BilinearStructure(d, left - right, "functional_lie")
    if kind == "jordan":
        return BilinearStructure(d, left + right, "functional_jordan")
    return BilinearStructure(d, left * spec.alpha + right * spec.beta, "functional_ujla")


def endo_structure(p: Any, q: Any, d: int) -> BilinearStructure:
    """f∗g = p·f∘g − q·g∘f on End(V), dim V = d, in the matrix-unit basis E_ab -> a·d + b."""
    if not isinstance(d, int) or not 1 <= d <= 3:
        raise DomainError(f"d must be 1, 2 or 3, got {d!r}")
    p, q = coerce(p, ScalarKind.RATIONAL), coerce(q, ScalarKind.RATIONAL)
    n = d * d
    c = np.empty((n, n, n), dtype=object)
    c.fill(Fraction(0))
    for a, b, x, y in itertools.product(range(d), repeat=4):
        # E_ab∘E_xy = δ_bx E_ay and E_xy∘E_ab = δ_ya E_xb
        if b == x:
            c[a * d + b, x * d + y, a * d + y] += p
        if y == a:
            c[a * d + b, x * d + y, x * d + b] -= q
    return BilinearStructure(n, c, f"endo_{d}({p},{q})")


# Classification

def _integer_constants(c: np.ndarray, degree: int) -> np.ndarray:
    """D·c as integers; int64 when `degree`-fold products on {0..3}-grids cannot overflow."""
    denominator = math.lcm(*(v.denominator for v in c.flat))
    ints = np.empty(c.shape, dtype=object)
    for index in np.ndindex(*c.shape):
        ints[index] = c[index].numerator * (denominator // c[index].denominator)
    bound = max((abs(v) for v in ints.flat), default=0)
    dim = c.shape[0]
    if 27 * dim ** 6 * max(bound, 1) ** degree < 2 ** 62:
        return ints.astype(np.int64)
    return ints


def _coords(values: Sequence[Any]) -> List[str]:
    return [str(Fraction(int(v)) if not isinstance(v, Fraction) else v) for v in values]


def _basis(dim: int, i: int) -> List[str]:
    return _coords([int(k == i) for k in range(dim)])


def _first_hit(arr: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(arr != 0)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def _grid_points(dim: int) -> Tuple[np.ndarray, str]:
    if dim <= FULL_GRID_MAX_DIM:
        return np.array(list(itertools.product(GRID, repeat=dim)), dtype=np.int64), "full-grid"
    # a homogeneous cubic vanishes iff it vanishes on every 3-coordinate subspace
    rows = set()
    for window in itertools.combinations(range(dim), WINDOW):
        for values in itertools.product(GRID, repeat=WINDOW):
            point = [0] * dim
            for coord, value in zip(window, values):
                point[coord] = value
            rows.add(tuple(point))
    return np.array(sorted(rows), dtype=np.int64), "windows"


def _products(x: np.ndarray, y: np.ndarray, c2: np.ndarray) -> np.ndarray:
    count, dim = x.shape
    return (x[:, :, None] * y[:, None, :]).reshape(count, dim * dim) @ c2


def _degree_sides(a: np.ndarray, b: np.ndarray, c2: np.ndarray) -> Dict[str, Tuple[np.ndarray, np.ndarray]]:
    sq = _products(a, a, c2)
    ab, ba = _products(a, b, c2), _products(b, a, c2)
    sq_b, b_sq = _products(sq, b, c2), _products(b, sq, c2)
    return {
        "a2b_a": (_products(sq_b, a, c2), _products(sq, ba, c2)),
        "ab_a2": (_products(ab, sq, c2), _products(a, b_sq, c2)),
        "ba2_a": (_products(b_sq, a, c2), _products(ba, sq, c2)),
        "a2_ab": (_products(sq, ab, c2), _products(a, sq_b, c2)),
    }


@dataclass
class AxiomReport:
    """Flags of one bilinear structure; failed flags carry a witness of coordinate vectors."""
    dim: int
    cyclic_axiom: bool
    degree_axioms: Dict[str, bool]
    commutative: bool
    anticommutative: bool
    associative: bool
    jacobi: bool
    jordan_identity: bool
    witnesses: Dict[str, Dict[str, List[str]]] = field(default_factory=dict)
    evaluation: str = "full-grid"

    @property
    def is_ujla(self) -> bool:
        return self.cyclic_axiom and all(self.degree_axioms.values())

    @property
    def is_lie(self) -> bool:
        return self.anticommutative and self.jacobi

    @property
    def is_jordan(self) -> bool:
        return self.commutative and self.jordan_identity

    @property
    def is_associative(self) -> bool:
        return self.associative

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "cyclic_axiom": self.cyclic_axiom,
            "degree_axioms": dict(self.degree_axioms),
            "commutative": self.commutative,
            "anticommutative": self.anticommutative,
            "associative": self.associative,
            "jacobi": self.jacobi,
            "jordan_identity": self.jordan_identity,
            "is_ujla": self.is_ujla,
            "is_lie": self.is_lie,
            "is_jordan": self.is_jordan,
            "is_associative": self.is_associative,
            "witnesses": self.witnesses,
            "evaluation": self.evaluation,
        }


def classify(b: BilinearStructure) -> AxiomReport:
    """Compute every flag.

    Multilinear identities are checked on all basis tuples. The identities of degree three
    in a and one in b are checked with b running over the basis and a over the grid
    {0, 1, 2, 3}^dim, or over every 3-coordinate subgrid when dim > 6.
    """
    dim = b.dim
    c = _integer_constants(b.c, degree=3)
    witnesses: Dict[str, Dict[str, List[str]]] = {}

    def record(flag: str, hit: Optional[Tuple[int, ...]], names: str) -> bool:
        if hit is None:
            return True
        witnesses[flag] = {name: _basis(dim, i) for name, i in zip(names, hit)}
        return False

    commutative = record("commutative", _first_hit(c - c.transpose(1, 0, 2)), "ab")
    anticommutative = record("anticommutative", _first_hit(c + c.transpose(1, 0, 2)), "ab")

    t = right_nested(c)   # (ab)c
    u = left_nested(c)    # a(bc)
    associative = record("associative", _first_hit(t - u), "abc")
    cyclic = (t - u) + (t - u).transpose(2, 0, 1, 3) + (t - u).transpose(1, 2, 0, 3)
    cyclic_axiom = record("cyclic_axiom", _first_hit(cyclic), "abc")
    jacobi = record("jacobi", _first_hit(t + t.transpose(2, 0, 1, 3) + t.transpose(1, 2, 0, 3)), "abc")

    points, evaluation = _grid_points(dim)
    if c.dtype == object:
        points = points.astype(object)
    c2 = c.reshape(dim * dim, dim)
    degree = {name: True for name in DEGREE_AXIOMS}
    for m in range(dim):
        basis = np.zeros_like(points)
        basis[:, m] = 1
        for name, (lhs, rhs) in _degree_sides(points, basis, c2).items():
            if not degree[name]:
                continue
            rows = np.argwhere(np.any(lhs != rhs, axis=1))
            if len(rows):
                degree[name] = False
                witnesses[name] = {"a": _coords(points[int(rows[0][0])]), "b": _basis(dim, m)}
    jordan_identity = degree["a2b_a"]
    if not jordan_identity:
        witnesses["jordan_identity"] = witnesses["a2b_a"]

    report = AxiomReport(
        dim=dim,
        cyclic_axiom=cyclic_axiom,
        degree_axioms=degree,
        commutative=commutative,
        anticommutative=anticommutative,
        associative=associative,
        jacobi=jacobi,
        jordan_identity=jordan_identity,
        witnesses=witnesses,
        evaluation=evaluation,
    )
    logger.debug(f"🔍 Classified {b.name}: ujla={report.is_ujla}, lie={report.is_lie}, "
                 f"jordan={report.is_jordan}, associative={report.is_associative}")
    return report
