"""
Exact Core
Scalar kinds and dense square matrices: Kronecker products, the three leg lifts of an
operator on V⊗V to V⊗V⊗V, the twist, residual norms and the matrix exponential.

Exact kinds keep entries as Python objects in numpy object arrays (Fraction for the
rationals, sympy's QQ_I elements for the Gaussian rationals); float kinds use float64
and complex128 arrays.
"""

import re
import math
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from .config import get_config
from .errors import (
    ConvergenceError,
    DimensionError,
    DomainError,
    KindMismatchError,
    SchemaError,
)

logger = logging.getLogger(__name__)

GaussianRational = QQ_I.dtype

MAX_SERIES_TERMS = 200
LEGS = (12, 23, 13)


class ScalarKind(str, Enum):
    """The four scalar kinds of the numeric tower."""
    RATIONAL = "rational"
    GAUSS = "gauss"
    FLOAT = "float"
    CFLOAT = "cfloat"

    @property
    def exact(self) -> bool:
        return self in (ScalarKind.RATIONAL, ScalarKind.GAUSS)

    @property
    def dtype(self):
        if self is ScalarKind.FLOAT:
            return np.float64
        if self is ScalarKind.CFLOAT:
            return np.complex128
        return object


# Scalars

def _qq_to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def rational(value: Any, denominator: int = 1) -> Fraction:
    return Fraction(value) / denominator


def gauss(re: Any = 0, im: Any = 0) -> GaussianRational:
    """Build the Gaussian rational re + im·i from two rational values."""
    re, im = Fraction(re), Fraction(im)
    return QQ_I(QQ(re.numerator, re.denominator), QQ(im.numerator, im.denominator))


def gauss_parts(value: GaussianRational) -> Tuple[Fraction, Fraction]:
    return _qq_to_fraction(value.x), _qq_to_fraction(value.y)


def kind_of(value: Any) -> ScalarKind:
    if isinstance(value, bool):
        raise KindMismatchError("booleans are not scalars")
    if isinstance(value, (int, np.integer, Fraction)):
        return ScalarKind.RATIONAL
    if isinstance(value, GaussianRational):
        return ScalarKind.GAUSS
    if isinstance(value, (float, np.floating)):
        return ScalarKind.FLOAT
    if isinstance(value, (complex, np.complexfloating)):
        return ScalarKind.CFLOAT
    raise KindMismatchError(f"unsupported scalar type {type(value).__name__}")


def coerce(value: Any, kind: ScalarKind) -> Any:
    """Return value as a scalar of the given kind.

    Integer literals are accepted by every kind; any other cross-kind use raises
    KindMismatchError.
    """
    source = kind_of(value)
    if isinstance(value, (int, np.integer)):
        value = int(value)
        if kind is ScalarKind.RATIONAL:
            return Fraction(value)
        if kind is ScalarKind.GAUSS:
            return gauss(value)
        if kind is ScalarKind.FLOAT:
            return float(value)
        return complex(value)
    if source is not kind:
        raise KindMismatchError(f"cannot use a {source.value} scalar where {kind.value} is required")
    if kind is ScalarKind.FLOAT:
        return float(value)
    if kind is ScalarKind.CFLOAT:
        return complex(value)
    return value


def is_zero(value: Any) -> bool:
    if isinstance(value, GaussianRational):
        return value.x == 0 and value.y == 0
    return value == 0


def format_scalar(value: Any, kind: ScalarKind) -> Any:
    """JSON form of a scalar: "p/q", "p/q+r/s*i", a number, or [re, im]."""
    if kind is ScalarKind.RATIONAL:
        return str(Fraction(value))
    if kind is ScalarKind.GAUSS:
        re, im = gauss_parts(value)
        sign = "-" if im < 0 else "+"
        return f"{re}{sign}{abs(im)}*i"
    if kind is ScalarKind.FLOAT:
        return float(value)
    value = complex(value)
    return [value.real, value.imag]


_RATIONAL = r"\d+(?:/\d+)?"
_GAUSS_FULL = re.compile(rf"^([+-]?{_RATIONAL})\s*([+-])\s*({_RATIONAL})\s*\*\s*i$")
_GAUSS_IMAG = re.compile(rf"^([+-]?{_RATIONAL})\s*\*\s*i$")


def parse_scalar(raw: Any, kind: ScalarKind, field: str = "value") -> Any:
    """Inverse of format_scalar; raises SchemaError naming the field."""
    if isinstance(raw, bool):
        raise SchemaError(field, "booleans are not scalars")
    try:
        if kind is ScalarKind.RATIONAL:
            if isinstance(raw, int):
                return Fraction(raw)
            if isinstance(raw, str):
                return Fraction(raw.strip())
        elif kind is ScalarKind.GAUSS:
            if isinstance(raw, int):
                return gauss(raw)
            if isinstance(raw, str):
                text = raw.strip()
                match = _GAUSS_FULL.match(text)
                if match:
                    im = Fraction(match.group(3))
                    return gauss(Fraction(match.group(1)), -im if match.group(2) == "-" else im)
                match = _GAUSS_IMAG.match(text)
                if match:
                    return gauss(0, Fraction(match.group(1)))
                return gauss(Fraction(text))
        elif kind is ScalarKind.FLOAT:
            if isinstance(raw, (int, float)):
                return float(raw)
        else:
            if isinstance(raw, (int, float)):
                return complex(raw)
            if isinstance(raw, (list, tuple)) and len(raw) == 2:
                return complex(float(raw[0]), float(raw[1]))
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise SchemaError(field, f"cannot parse {raw!r} as {kind.value}: {e}")
    raise SchemaError(field, f"cannot parse {raw!r} as {kind.value}")


# Matrices

@dataclass(frozen=True, eq=False)
class Matrix:
    """Dense square matrix over one scalar kind.

    Operators on V⊗V with dim(V) = d use the basis order e_i⊗e_j -> i·d + j.
    """
    entries: np.ndarray
    kind: ScalarKind

    def __post_init__(self):
        kind = ScalarKind(self.kind)
        raw = np.array(self.entries, dtype=object if kind.exact else None)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1] or raw.shape[0] == 0:
            raise DimensionError(f"matrix must be square and nonempty, got shape {raw.shape}")
        if kind.exact:
            flat = [coerce(v, kind) for v in raw.flat]
            arr = np.empty(raw.shape, dtype=object)
            arr.flat[:] = flat
        else:
            arr = np.array(raw, dtype=kind.dtype)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "kind", kind)

    @classmethod
    def _trusted(cls, arr: np.ndarray, kind: ScalarKind) -> "Matrix":
        # results of closed operations need no revalidation
        m = object.__new__(cls)
        arr = np.array(arr, dtype=kind.dtype)
        arr.setflags(write=False)
        object.__setattr__(m, "entries", arr)
        object.__setattr__(m, "kind", kind)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], kind: ScalarKind = ScalarKind.RATIONAL) -> "Matrix":
        n = len(rows)
        arr = np.empty((n, len(rows[0]) if n else 0), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != arr.shape[1]:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {arr.shape[1]}")
            for j, v in enumerate(row):
                arr[i, j] = v
        return cls(arr, kind)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, index):
        return self.entries[index]

    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.kind is not self.kind:
            raise KindMismatchError(f"cannot combine {self.kind.value} and {other.kind.value} matrices")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if other.dim != self.dim:
            raise DimensionError(f"cannot multiply {self.dim}x{self.dim} by {other.dim}x{other.dim}")
        return Matrix._trusted(self.entries @ other.entries, self.kind)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if other.dim != self.dim:
            raise DimensionError(f"cannot add {self.dim}x{self.dim} and {other.dim}x{other.dim}")
        return Matrix._trusted(self.entries + other.entries, self.kind)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if other.dim != self.dim:
            raise DimensionError(f"cannot subtract {other.dim}x{other.dim} from {self.dim}x{self.dim}")
        return Matrix._trusted(self.entries - other.entries, self.kind)

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(-self.entries, self.kind)

    def scale(self, factor: Any) -> "Matrix":
        return Matrix._trusted(self.entries * coerce(factor, self.kind), self.kind)

    def equals(self, other: "Matrix") -> bool:
        if not isinstance(other, Matrix) or other.kind is not self.kind or other.dim != self.dim:
            return False
        return all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def tolist(self) -> List[List[Any]]:
        return self.entries.tolist()

    def max_abs(self) -> float:
        if self.kind is ScalarKind.GAUSS:
            return max(abs(complex(float(re), float(im)))
                       for re, im in (gauss_parts(v) for v in self.entries.flat))
        return float(np.max(np.abs(self.entries.astype(complex if self.kind is ScalarKind.CFLOAT else float))))

    def to_dict(self) -> Dict[str, Any]:
        return matrix_to_json(self)


def identity(dim: int, kind: ScalarKind = ScalarKind.RATIONAL) -> Matrix:
    if kind.exact:
        one, zero = coerce(1, kind), coerce(0, kind)
        arr = np.empty((dim, dim), dtype=object)
        for i in range(dim):
            for j in range(dim):
                arr[i, j] = one if i == j else zero
        return Matrix._trusted(arr, kind)
    return Matrix._trusted(np.eye(dim, dtype=kind.dtype), kind)


def zeros(dim: int, kind: ScalarKind = ScalarKind.RATIONAL) -> Matrix:
    if kind.exact:
        arr = np.empty((dim, dim), dtype=object)
        arr.flat[:] = [coerce(0, kind)] * (dim * dim)
        return Matrix._trusted(arr, kind)
    return Matrix._trusted(np.zeros((dim, dim), dtype=kind.dtype), kind)


def twist(d: int, kind: ScalarKind = ScalarKind.RATIONAL) -> Matrix:
    """The twist τ(v⊗w) = w⊗v on V⊗V, dim(V) = d."""
    arr = zeros(d * d, kind).entries.copy()
    one = coerce(1, kind)
    for i in range(d):
        for j in range(d):
            arr[j * d + i, i * d + j] = one
    return Matrix._trusted(arr, kind)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; entry ((i,k),(j,l)) = a[i][j]·b[k][l]."""
    a._check(b)
    return Matrix._trusted(np.kron(a.entries, b.entries), a.kind)


def _twist_permutation(d: int) -> np.ndarray:
    # index permutation of I⊗τ on V⊗V⊗V: e_a⊗e_b⊗e_c -> e_a⊗e_c⊗e_b
    perm = np.empty(d ** 3, dtype=np.int64)
    for a in range(d):
        for b in range(d):
            for c in range(d):
                perm[a * d * d + b * d + c] = a * d * d + c * d + b
    return perm


def _lift_array(arr: np.ndarray, d: int, legs: int) -> np.ndarray:
    eye = np.eye(d, dtype=np.int64)
    if legs == 12:
        return np.kron(arr, eye)
    if legs == 23:
        return np.kron(eye, arr)
    perm = _twist_permutation(d)
    return np.kron(arr, eye)[np.ix_(perm, perm)]


def check_operator_dim(r: Matrix, d: int):
    if not isinstance(d, (int, np.integer)) or d < 1:
        raise DimensionError(f"d must be a positive integer, got {d!r}")
    if r.dim != d * d:
        raise DimensionError(f"operator has dim {r.dim}, expected d² = {d * d}")


def lift(r: Matrix, d: int, legs: int) -> Matrix:
    """Lift an operator on V⊗V to V⊗V⊗V acting on the given pair of legs.

    legs 12 gives R⊗I, 23 gives I⊗R, 13 gives (I⊗τ)(R⊗I)(I⊗τ).
    """
    check_operator_dim(r, d)
    legs = int(legs)
    if legs not in LEGS:
        raise DimensionError(f"legs must be one of {LEGS}, got {legs}")
    return Matrix._trusted(_lift_array(r.entries, d, legs), r.kind)


# Residuals

@dataclass(frozen=True)
class Norm:
    """Size of a residual.

    Exact kinds carry either nothing (exactly zero) or the first nonzero entry in
    row-major order as (row, col, value); float kinds carry the max-absolute-entry norm.
    """
    kind: ScalarKind
    value: float = 0.0
    witness: Optional[Tuple[int, int, Any]] = None

    @property
    def exactly_zero(self) -> bool:
        return self.kind.exact and self.witness is None

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.kind.exact:
            return self.witness is None
        return self.value <= tol

    def to_dict(self) -> Dict[str, Any]:
        if self.kind.exact:
            witness = None
            if self.witness is not None:
                row, col, value = self.witness
                witness = {"row": row, "col": col, "value": format_scalar(value, self.kind)}
            return {"kind": self.kind.value, "exactly_zero": self.witness is None, "witness": witness}
        return {"kind": self.kind.value, "value": self.value}


def first_nonzero(arr: np.ndarray) -> Optional[Tuple[int, int, Any]]:
    rows, cols = arr.shape
    for i in range(rows):
        for j in range(cols):
            if not is_zero(arr[i, j]):
                return i, j, arr[i, j]
    return None


def norm_of(arr: np.ndarray, kind: ScalarKind) -> Norm:
    if kind.exact:
        return Norm(kind, witness=first_nonzero(arr))
    return Norm(kind, value=float(np.max(np.abs(arr))) if arr.size else 0.0)


def residual(a: Matrix, b: Matrix) -> Norm:
    """Norm of a − b."""
    return norm_of((a - b).entries, a.kind)


def integral_form(m: Matrix, degree: int = 1) -> Tuple[np.ndarray, int]:
    """Scale a rational matrix to integers.

    Returns (D·m as an integer array, D). The array is int64 when a product of
    `degree` such matrices cannot overflow, bounding each entry by
    max|entry|^degree · (max nonzeros per row)^(degree − 1), otherwise an object
    array of Python ints. Leg lifts keep the nonzeros per row, so the bound also
    covers products of lifted copies.
    """
    if m.kind is not ScalarKind.RATIONAL:
        raise KindMismatchError("integral_form needs a rational matrix")
    denominator = math.lcm(*(v.denominator for v in m.entries.flat))
    ints = [v.numerator * (denominator // v.denominator) for v in m.entries.flat]
    bound = max((abs(v) for v in ints), default=0)
    arr = np.empty(m.entries.shape, dtype=object)
    arr.flat[:] = ints
    row_nnz = int(np.count_nonzero(arr != 0, axis=1).max(initial=0))
    if bound ** degree * row_nnz ** max(degree - 1, 0) < 2 ** 62:
        arr = arr.astype(np.int64)
    return arr, denominator


def _domain_matrix(m: Matrix) -> DomainMatrix:
    if m.kind is ScalarKind.RATIONAL:
        rows = [[QQ(v.numerator, v.denominator) for v in row] for row in m.entries]
        return DomainMatrix(rows, (m.dim, m.dim), QQ)
    return DomainMatrix([list(row) for row in m.entries], (m.dim, m.dim), QQ_I)


def determinant(m: Matrix) -> Any:
    """Exact determinant of a rational or Gaussian rational matrix."""
    if not m.kind.exact:
        raise KindMismatchError("determinant is only computed exactly; use is_invertible for floats")
    det = _domain_matrix(m).det()
    return _qq_to_fraction(det) if m.kind is ScalarKind.RATIONAL else det


def is_invertible(m: Matrix) -> bool:
    """Exact kinds decide det ≠ 0; float kinds use the SVD rank estimate."""
    if m.kind.exact:
        return not is_zero(determinant(m))
    return int(np.linalg.matrix_rank(m.entries)) == m.dim


# Exponential

def mat_exp(a: Matrix, tol: Optional[float] = None) -> Matrix:
    """Matrix exponential by scaling and squaring around a truncated Taylor series.

    The argument is scaled by 2^-s until its infinity norm is at most 1/2, the series
    is summed until the last term drops below tol, and the result is squared s times.
    """
    if a.kind.exact:
        raise KindMismatchError(f"mat_exp needs a float matrix, got {a.kind.value}")
    arr = a.entries
    if not np.all(np.isfinite(arr)):
        raise DomainError("mat_exp argument has non-finite entries")
    tol = get_config().series_tol if tol is None else tol

    norm = float(np.max(np.sum(np.abs(arr), axis=1)))
    squarings = int(math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0
    scaled = arr / (2.0 ** squarings)

    result = np.eye(a.dim, dtype=arr.dtype)
    term = np.eye(a.dim, dtype=arr.dtype)
    for k in range(1, MAX_SERIES_TERMS + 1):
        term = term @ scaled / k
        result = result + term
        if float(np.max(np.abs(term))) <= tol:
            break
    else:
        raise ConvergenceError(f"exponential series did not reach {tol} in {MAX_SERIES_TERMS} terms")

    for _ in range(squarings):
        result = result @ result
    return Matrix._trusted(result, a.kind)


# JSON

def matrix_to_json(m: Matrix) -> Dict[str, Any]:
    return {
        "dim": m.dim,
        "scalar": m.kind.value,
        "entries": [[format_scalar(v, m.kind) for v in row] for row in m.entries],
    }


def _kind_from_json(raw: Any, field: str = "scalar") -> ScalarKind:
    try:
        return ScalarKind(raw)
    except ValueError:
        raise SchemaError(field, f"unknown scalar kind {raw!r}; expected one of "
                                 f"{[k.value for k in ScalarKind]}")


def matrix_from_json(doc: Dict[str, Any]) -> Matrix:
    if not isinstance(doc, dict):
        raise SchemaError("matrix", "expected a JSON object")
    for field in ("dim", "scalar", "entries"):
        if field not in doc:
            raise SchemaError(field, "missing")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError("dim", f"expected a positive integer, got {dim!r}")
    kind = _kind_from_json(doc["scalar"])
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != dim:
        raise SchemaError("entries", f"expected {dim} rows")
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != dim:
            raise SchemaError(f"entries[{i}]", f"expected {dim} entries")
        rows.append([parse_scalar(v, kind, f"entries[{i}][{j}]") for j, v in enumerate(row)])
    return Matrix.from_rows(rows, kind)


def parse_vector(raw: Any, kind: ScalarKind, field: str, length: Optional[int] = None) -> Tuple[Any, ...]:
    if not isinstance(raw, list) or (length is not None and len(raw) != length):
        expected = f"a list of {length} scalars" if length is not None else "a list of scalars"
        raise SchemaError(field, f"expected {expected}")
    return tuple(parse_scalar(v, kind, f"{field}[{i}]") for i, v in enumerate(raw))


def parse_tensor(raw: Any, kind: ScalarKind, field: str, dim: int) -> np.ndarray:
    """Parse a dim×dim×dim nested list of scalars into an object array."""
    arr = np.empty((dim, dim, dim), dtype=object)
    if not isinstance(raw, list) or len(raw) != dim:
        raise SchemaError(field, f"expected {dim} slices")
    for i, plane in enumerate(raw):
        if not isinstance(plane, list) or len(plane) != dim:
            raise SchemaError(f"{field}[{i}]", f"expected {dim} rows")
        for j, vec in enumerate(plane):
            for k, v in enumerate(parse_vector(vec, kind, f"{field}[{i}][{j}]", dim)):
                arr[i, j, k] = v
    return arr


def format_tensor(arr: np.ndarray, kind: ScalarKind) -> List[Any]:
    dim = arr.shape[0]
    return [[[format_scalar(arr[i, j, k], kind) for k in range(dim)] for j in range(dim)]
            for i in range(dim)]


def format_vector(values: Iterable[Any], kind: ScalarKind) -> List[Any]:
    return [format_scalar(v, kind) for v in values]


class EquationForm(str, Enum):
    """Which form of the Yang-Baxter equation a check evaluates.

    braid: R¹²R²³R¹² = R²³R¹²R²³; qybe: R¹²R¹³R²³ = R²³R¹³R¹².
    """
    BRAID = "braid"
    QYBE = "qybe"


def parse_form(raw: Any) -> EquationForm:
    try:
        return EquationForm(raw)
    except ValueError:
        raise SchemaError("form", f"unknown equation form {raw!r}; expected braid or qybe")
