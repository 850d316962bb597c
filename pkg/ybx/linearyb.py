"""
Linear Yang-Baxter Operators
Operators built from unital associative algebras and from Lie superalgebras with an even
central element, braid and QYBE residuals, the twist transport between the two forms,
and the gate matrices.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import get_config
from .errors import DimensionError, SchemaError, StructureError
from .exactcore import (
    EquationForm,
    Matrix,
    Norm,
    ScalarKind,
    _kind_from_json,
    _lift_array,
    check_operator_dim,
    coerce,
    format_tensor,
    format_vector,
    gauss,
    integral_form,
    is_invertible,
    is_zero,
    lift,
    norm_of,
    parse_form,
    parse_tensor,
    parse_vector,
    twist,
)

logger = logging.getLogger(__name__)


def _nonzero_mask(arr: np.ndarray) -> np.ndarray:
    return np.frompyfunc(lambda v: not is_zero(v), 1, 1)(arr).astype(bool)


def _first_nonzero_index(arr: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(_nonzero_mask(arr))
    return tuple(int(i) for i in hits[0]) if len(hits) else None


def _constants(raw: Any, kind: ScalarKind, dim: int, name: str) -> np.ndarray:
    arr = np.empty((dim, dim, dim), dtype=object)
    source = np.array(raw, dtype=object)
    if source.shape != (dim, dim, dim):
        raise DimensionError(f"{name} must have shape {(dim, dim, dim)}, got {source.shape}")
    for index in np.ndindex(dim, dim, dim):
        arr[index] = coerce(source[index], kind)
    arr.setflags(write=False)
    return arr


def _vector(raw: Sequence[Any], kind: ScalarKind, dim: int, name: str) -> Tuple[Any, ...]:
    if len(raw) != dim:
        raise DimensionError(f"{name} must have {dim} coordinates, got {len(raw)}")
    return tuple(coerce(v, kind) for v in raw)


def _object_vector(values: Sequence[Any]) -> np.ndarray:
    arr = np.empty(len(values), dtype=object)
    for i, v in enumerate(values):
        arr[i] = v
    return arr


def left_nested(c: np.ndarray) -> np.ndarray:
    """X[i,j,k,:] = coordinates of e_i·(e_j·e_k)."""
    return np.tensordot(c, c, axes=([2], [1])).transpose(2, 0, 1, 3)


def right_nested(c: np.ndarray) -> np.ndarray:
    """X[i,j,k,:] = coordinates of (e_i·e_j)·e_k."""
    return np.tensordot(c, c, axes=([2], [0]))


# Algebras

@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """Unital associative algebra given by structure constants e_i·e_j = Σ_k mul[i,j,k] e_k.

    Associativity and the unit laws are checked at construction.
    """
    dim: int
    mul: np.ndarray
    unit: Tuple[Any, ...]
    kind: ScalarKind = ScalarKind.RATIONAL
    name: str = "algebra"

    def __post_init__(self):
        kind = ScalarKind(self.kind)
        if not kind.exact:
            raise StructureError("algebras are defined over exact scalars only")
        if self.dim < 1:
            raise DimensionError(f"dim must be positive, got {self.dim}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "mul", _constants(self.mul, kind, self.dim, "mul"))
        object.__setattr__(self, "unit", _vector(self.unit, kind, self.dim, "unit"))
        self._validate()

    def _validate(self):
        c = self.mul
        witness = _first_nonzero_index(right_nested(c) - left_nested(c))
        if witness is not None:
            i, j, k, _ = witness
            raise StructureError(f"{self.name}: associativity fails at basis triple ({i}, {j}, {k})")

        u = _object_vector(self.unit)
        eye = np.empty((self.dim, self.dim), dtype=object)
        for i, j in np.ndindex(self.dim, self.dim):
            eye[i, j] = coerce(int(i == j), self.kind)
        left = np.tensordot(u, c, axes=([0], [0]))
        right = np.tensordot(c, u, axes=([1], [0]))
        for side, table in (("left", left), ("right", right)):
            witness = _first_nonzero_index(table - eye)
            if witness is not None:
                raise StructureError(f"{self.name}: {side} unit law fails on basis vector {witness[0]}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "dim": self.dim,
            "scalar": self.kind.value,
            "unit": format_vector(self.unit, self.kind),
            "mul": format_tensor(self.mul, self.kind),
        }


@dataclass(frozen=True, eq=False)
class LieSuperAlgebra:
    """ℤ₂-graded Lie bracket [e_i, e_j] = Σ_k bracket[i,j,k] e_k with a marked element z.

    Graded antisymmetry, the graded Jacobi identity, parity of the bracket, and that z is
    even and central are checked at construction.
    """
    dim: int
    grading: Tuple[int, ...]
    bracket: np.ndarray
    z: Tuple[Any, ...]
    kind: ScalarKind = ScalarKind.RATIONAL
    name: str = "lie"

    def __post_init__(self):
        kind = ScalarKind(self.kind)
        if not kind.exact:
            raise StructureError("Lie superalgebras are defined over exact scalars only")
        grading = tuple(int(g) for g in self.grading)
        if len(grading) != self.dim or any(g not in (0, 1) for g in grading):
            raise StructureError(f"{self.name}: grading violation: expected {self.dim} entries in {{0, 1}}, got {self.grading}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "bracket", _constants(self.bracket, kind, self.dim, "bracket"))
        object.__setattr__(self, "z", _vector(self.z, kind, self.dim, "z"))
        self._validate()

    def sign(self, i: int, j: int) -> int:
        """(−1)^{|e_i||e_j|}."""
        return -1 if self.grading[i] and self.grading[j] else 1

    def _validate(self):
        b, g, d = self.bracket, self.grading, self.dim

        for i, j, k in np.ndindex(d, d, d):
            if not is_zero(b[i, j, k]) and g[k] != (g[i] + g[j]) % 2:
                raise StructureError(f"{self.name}: grading violation: [e{i}, e{j}] has a component on e{k}")

        for i, j, k in np.ndindex(d, d, d):
            if b[i, j, k] != -self.sign(i, j) * b[j, i, k]:
                raise StructureError(f"{self.name}: graded antisymmetry fails on ({i}, {j})")

        # graded Jacobi: Σ_cyclic (−1)^{|x||z|} [x, [y, z]] = 0
        x = left_nested(b)
        parity = np.array(g)
        signs = np.where(np.multiply.outer(parity, parity) == 1, -1, 1)
        s_xz = signs[:, None, :, None]
        s_yx = signs.T[:, :, None, None]
        s_zy = signs.T[None, :, :, None]
        jacobi = s_xz * x + s_yx * x.transpose(2, 0, 1, 3) + s_zy * x.transpose(1, 2, 0, 3)
        witness = _first_nonzero_index(jacobi)
        if witness is not None:
            raise StructureError(f"{self.name}: graded Jacobi identity fails on basis triple {witness[:3]}")

        if any(not is_zero(v) and g[m] for m, v in enumerate(self.z)):
            raise StructureError(f"{self.name}: z odd")
        centre = np.tensordot(_object_vector(self.z), b, axes=([0], [0]))
        witness = _first_nonzero_index(centre)
        if witness is not None:
            raise StructureError(f"{self.name}: z not central: [z, e{witness[0]}] != 0")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "dim": self.dim,
            "scalar": self.kind.value,
            "grading": list(self.grading),
            "bracket": format_tensor(self.bracket, self.kind),
            "z": format_vector(self.z, self.kind),
        }


def field_algebra(kind: ScalarKind = ScalarKind.RATIONAL) -> FiniteAlgebra:
    return FiniteAlgebra(1, [[[1]]], (1,), kind, "field")


def dual_numbers(kind: ScalarKind = ScalarKind.RATIONAL) -> FiniteAlgebra:
    """k[x]/(x²) in the basis (1, x)."""
    mul = np.zeros((2, 2, 2), dtype=int)
    mul[0, 0, 0] = 1
    mul[0, 1, 1] = 1
    mul[1, 0, 1] = 1
    return FiniteAlgebra(2, mul, (1, 0), kind, "dual_numbers")


def matrix_algebra(kind: ScalarKind = ScalarKind.RATIONAL) -> FiniteAlgebra:
    """M₂(k) in the matrix-unit basis E11, E12, E21, E22."""
    mul = np.zeros((4, 4, 4), dtype=int)
    for a, b, c, d in np.ndindex(2, 2, 2, 2):
        if b == c:
            mul[2 * a + b, 2 * c + d, 2 * a + d] = 1
    return FiniteAlgebra(4, mul, (1, 0, 0, 1), kind, "matrix_algebra")


def product_algebra(kind: ScalarKind = ScalarKind.RATIONAL) -> FiniteAlgebra:
    """k×k with componentwise product."""
    mul = np.zeros((2, 2, 2), dtype=int)
    mul[0, 0, 0] = 1
    mul[1, 1, 1] = 1
    return FiniteAlgebra(2, mul, (1, 1), kind, "product_algebra")


STANDARD_ALGEBRAS = {
    "field": field_algebra,
    "dual_numbers": dual_numbers,
    "matrix_algebra": matrix_algebra,
    "product_algebra": product_algebra,
}


def abelian_lie(dim: int, z: Sequence[Any], kind: ScalarKind = ScalarKind.RATIONAL) -> LieSuperAlgebra:
    return LieSuperAlgebra(dim, (0,) * dim, np.zeros((dim, dim, dim), dtype=int), tuple(z), kind, "abelian")


def heisenberg(z_index: int = 2, kind: ScalarKind = ScalarKind.RATIONAL) -> LieSuperAlgebra:
    """3-dim Heisenberg algebra [e₁, e₂] = e₃ (indices 0, 1, 2), z = e_{z_index}."""
    bracket = np.zeros((3, 3, 3), dtype=int)
    bracket[0, 1, 2] = 1
    bracket[1, 0, 2] = -1
    z = [0, 0, 0]
    z[z_index] = 1
    return LieSuperAlgebra(3, (0, 0, 0), bracket, tuple(z), kind, "heisenberg")


def super_heisenberg(kind: ScalarKind = ScalarKind.RATIONAL) -> LieSuperAlgebra:
    """Even central e0 = z and odd e1, e2 with [e1, e1] = [e2, e2] = z."""
    bracket = np.zeros((3, 3, 3), dtype=int)
    bracket[1, 1, 0] = 1
    bracket[2, 2, 0] = 1
    return LieSuperAlgebra(3, (0, 1, 1), bracket, (1, 0, 0), kind, "super_heisenberg")


# Constructions

class YBCase(str, Enum):
    CASE_I = "case-i"
    CASE_II = "case-ii"
    CASE_III = "case-iii"
    NONE = "none"


def yb_param_case(alpha: Any, beta: Any, gamma: Any) -> YBCase:
    """Which of the three parameter conditions for the associative-algebra operator holds.

    (i) α = γ ≠ 0, β ≠ 0; (ii) β = γ ≠ 0, α ≠ 0; (iii) α = β = 0, γ ≠ 0.
    """
    if alpha == gamma and not is_zero(alpha) and not is_zero(beta):
        return YBCase.CASE_I
    if beta == gamma and not is_zero(beta) and not is_zero(alpha):
        return YBCase.CASE_II
    if is_zero(alpha) and is_zero(beta) and not is_zero(gamma):
        return YBCase.CASE_III
    return YBCase.NONE


def build_r_assoc(a: FiniteAlgebra, alpha: Any, beta: Any, gamma: Any) -> Matrix:
    """Matrix of a⊗b ↦ α·ab⊗1 + β·1⊗ab − γ·a⊗b on A⊗A."""
    alpha, beta, gamma = (coerce(v, a.kind) for v in (alpha, beta, gamma))
    d = a.dim
    u = _object_vector(a.unit)
    # image[i, j, p, q] = coefficient of e_p⊗e_q in the image of e_i⊗e_j
    first = np.multiply.outer(a.mul, u)
    second = np.multiply.outer(u, a.mul).transpose(1, 2, 0, 3)
    image = (first * alpha + second * beta).reshape(d * d, d * d)
    for n in range(d * d):
        image[n, n] = image[n, n] - gamma
    return Matrix(image.T, a.kind)


def build_r_lie(l: LieSuperAlgebra, alpha: Any) -> Matrix:
    """Matrix of x⊗y ↦ α·[x, y]⊗z + (−1)^{|x||y|} y⊗x on L⊗L."""
    alpha = coerce(alpha, l.kind)
    d = l.dim
    image = (np.multiply.outer(l.bracket, _object_vector(l.z)) * alpha).reshape(d * d, d * d)
    for i, j in np.ndindex(d, d):
        image[i * d + j, j * d + i] = image[i * d + j, j * d + i] + l.sign(i, j)
    return Matrix(image.T, l.kind)


def gate_matrices() -> Tuple[Matrix, Matrix]:
    """The braiding gate built from the dual numbers, and CNOT."""
    gate = Matrix.from_rows([
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, -1],
    ])
    cnot = Matrix.from_rows([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ])
    return gate, cnot


# Residuals

@dataclass
class YBReport:
    """Outcome of one linear Yang-Baxter check."""
    form: str
    d: int
    residual: Norm
    invertible: bool
    witness: Optional[Tuple[int, int]] = None
    tolerance: float = 0.0

    @property
    def satisfied(self) -> bool:
        return self.residual.is_zero(self.tolerance)

    @property
    def passed(self) -> bool:
        return self.satisfied and self.invertible

    def to_dict(self) -> Dict[str, Any]:
        return {
            "form": self.form,
            "d": self.d,
            "residual": self.residual.to_dict(),
            "invertible": self.invertible,
            "witness": list(self.witness) if self.witness else None,
            "satisfied": self.satisfied,
            "passed": self.passed,
        }


_CHAINS = {
    EquationForm.BRAID: ((12, 23, 12), (23, 12, 23)),
    EquationForm.QYBE: ((12, 13, 23), (23, 13, 12)),
}


def _chain(lifts: Dict[int, np.ndarray], legs: Sequence[int]) -> np.ndarray:
    a, b, c = (lifts[n] for n in legs)
    return a @ b @ c


def _rational_residual(r: Matrix, d: int, form: EquationForm) -> Norm:
    # work with D·R over the integers and rescale the witness by D³
    ints, denominator = integral_form(r, degree=3)
    lifts = {legs: _lift_array(ints, d, legs) for legs in (12, 23, 13)}
    left, right = (_chain(lifts, legs) for legs in _CHAINS[form])
    diff = left - right
    hits = np.argwhere(diff != 0)
    if not len(hits):
        return Norm(ScalarKind.RATIONAL)
    row, col = (int(v) for v in hits[0])
    return Norm(ScalarKind.RATIONAL, witness=(row, col, Fraction(int(diff[row, col]), denominator ** 3)))


def yb_residual(r: Matrix, d: int, form: Any = EquationForm.BRAID, tol: Optional[float] = None) -> YBReport:
    """Residual of the braid or QYBE form for an operator on V⊗V, dim(V) = d.

    braid: R¹²R²³R¹² − R²³R¹²R²³; qybe: R¹²R¹³R²³ − R²³R¹³R¹².
    """
    form = parse_form(form)
    check_operator_dim(r, d)
    if r.kind is ScalarKind.RATIONAL:
        norm = _rational_residual(r, d, form)
    else:
        lifts = {legs: lift(r, d, legs).entries for legs in (12, 23, 13)}
        left, right = (_chain(lifts, legs) for legs in _CHAINS[form])
        norm = norm_of(left - right, r.kind)
    tolerance = 0.0 if r.kind.exact else (get_config().colored_tol if tol is None else tol)
    report = YBReport(
        form=form.value,
        d=d,
        residual=norm,
        invertible=is_invertible(r),
        witness=norm.witness[:2] if norm.witness else None,
        tolerance=tolerance,
    )
    logger.debug(f"🔍 {form.value} residual at d={d}: zero={report.satisfied}, invertible={report.invertible}")
    return report


def braid_qybe_transport(r: Matrix, d: int) -> Tuple[Matrix, Matrix]:
    """Return (R∘τ, τ∘R); each solves the QYBE exactly when R solves the braid form."""
    check_operator_dim(r, d)
    tau = twist(d, r.kind)
    return r @ tau, tau @ r


# Corpus

def _seeded_operator(seed: int, d: int) -> Matrix:
    rng = np.random.default_rng(seed)
    numerators = rng.integers(-3, 4, size=(d * d, d * d))
    denominators = rng.integers(1, 4, size=(d * d, d * d))
    rows = [[Fraction(int(n), int(q)) for n, q in zip(nrow, qrow)]
            for nrow, qrow in zip(numerators, denominators)]
    return Matrix.from_rows(rows)


def operator_corpus() -> List[Tuple[str, Matrix, int]]:
    """Named operators, solutions and non-solutions, for the braid/QYBE transport checks."""
    gate, cnot = gate_matrices()
    dual = dual_numbers()
    product = product_algebra()
    corpus = [
        ("twist_d2", twist(2), 2),
        ("twist_d3", twist(3), 3),
        ("identity_d2", twist(2) @ twist(2), 2),
        ("minus_identity_d2", (twist(2) @ twist(2)).scale(-1), 2),
        ("gate", gate, 2),
        ("cnot", cnot, 2),
        ("assoc_dual_1_2_1", build_r_assoc(dual, 1, 2, 1), 2),
        ("assoc_dual_2_3_3", build_r_assoc(dual, 2, 3, 3), 2),
        ("assoc_dual_0_0_2", build_r_assoc(dual, 0, 0, 2), 2),
        ("assoc_dual_1_2_3", build_r_assoc(dual, 1, 2, 3), 2),
        ("assoc_product_1_2_1", build_r_assoc(product, 1, 2, 1), 2),
        ("assoc_product_1_2_3", build_r_assoc(product, 1, 2, 3), 2),
        ("assoc_matrix_1_1_1", build_r_assoc(matrix_algebra(), 1, 1, 1), 4),
        ("lie_heisenberg_1", build_r_lie(heisenberg(), 1), 3),
        ("lie_heisenberg_3", build_r_lie(heisenberg(), 3), 3),
        ("lie_super_2", build_r_lie(super_heisenberg(), 2), 3),
        ("diagonal_1_2_3_4", Matrix.from_rows(np.diag([1, 2, 3, 4]).tolist()), 2),
        ("diagonal_scalar_2", Matrix.from_rows(np.diag([2, 2, 2, 2]).tolist()), 2),
        ("seeded_7", _seeded_operator(7, 2), 2),
        ("seeded_11", _seeded_operator(11, 2), 2),
        ("seeded_13_d3", _seeded_operator(13, 3), 3),
        ("gauss_assoc_dual", build_r_assoc(dual_numbers(ScalarKind.GAUSS), gauss(0, 1), 1, gauss(0, 1)), 2),
    ]
    return corpus


# JSON

def _scalar_kind(doc: Dict[str, Any]) -> ScalarKind:
    return _kind_from_json(doc.get("scalar", ScalarKind.RATIONAL.value))


def _dim(doc: Dict[str, Any]) -> int:
    if "dim" not in doc:
        raise SchemaError("dim", "missing")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError("dim", f"expected a positive integer, got {dim!r}")
    return dim


def algebra_from_json(doc: Dict[str, Any]) -> FiniteAlgebra:
    if not isinstance(doc, dict):
        raise SchemaError("algebra", "expected a JSON object")
    dim, kind = _dim(doc), _scalar_kind(doc)
    for name in ("unit", "mul"):
        if name not in doc:
            raise SchemaError(name, "missing")
    unit = parse_vector(doc["unit"], kind, "unit", dim)
    mul = parse_tensor(doc["mul"], kind, "mul", dim)
    return FiniteAlgebra(dim, mul, unit, kind, doc.get("name", "algebra"))


def lie_from_json(doc: Dict[str, Any]) -> LieSuperAlgebra:
    if not isinstance(doc, dict):
        raise SchemaError("lie", "expected a JSON object")
    dim, kind = _dim(doc), _scalar_kind(doc)
    for name in ("grading", "bracket", "z"):
        if name not in doc:
            raise SchemaError(name, "missing")
    grading = doc["grading"]
    if not isinstance(grading, list) or len(grading) != dim or any(g not in (0, 1) for g in grading):
        raise SchemaError("grading", f"expected {dim} entries in {{0, 1}}")
    bracket = parse_tensor(doc["bracket"], kind, "bracket", dim)
    z = parse_vector(doc["z"], kind, "z", dim)
    return LieSuperAlgebra(dim, tuple(grading), bracket, z, kind, doc.get("name", "lie"))
