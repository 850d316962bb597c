"""
ybx: Yang-Baxter Verification Toolkit

This package checks the Yang-Baxter equation and related identities with exact arithmetic
where it can and high precision where it cannot.

Key Components:
- exactcore: exact scalars, matrices, leg lifts and residual norms
- linearyb: operators from associative algebras and Lie superalgebras
- setyb: set-theoretic maps, closed-form families and the solution enumerator
- coloredyb: the colored family built from J and the five-equation system
- ujla: bilinear products and their classification
- transc: the partial-sum bound and the e/π margins
- audit: claim registry and runner
"""

__version__ = "1.0.0"
__author__ = "ybx Team"

from .errors import (
    YBXError,
    InputError,
    KindMismatchError,
    DimensionError,
    DomainError,
    StructureError,
    SchemaError,
    ConfigError,
    ConvergenceError
)

from .config import ToolkitConfig, get_config, reload_config

from .exactcore import EquationForm, Matrix, Norm, ScalarKind

from .audit import ClaimResult, AuditSummary, audit_all, claim, run_claim

from .input_generator import SampleInputGenerator

from .cli import ReportEnvelope, run

__all__ = [
    # Errors
    "YBXError",
    "InputError",
    "KindMismatchError",
    "DimensionError",
    "DomainError",
    "StructureError",
    "SchemaError",
    "ConfigError",
    "ConvergenceError",

    # Configuration
    "ToolkitConfig",
    "get_config",
    "reload_config",

    # Core types
    "EquationForm",
    "Matrix",
    "Norm",
    "ScalarKind",

    # Audit
    "ClaimResult",
    "AuditSummary",
    "audit_all",
    "claim",
    "run_claim",

    # Inputs and command line
    "SampleInputGenerator",
    "ReportEnvelope",
    "run"
]
