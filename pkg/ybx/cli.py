"""
Command Line Interface
The `ybx` command: loads JSON inputs, dispatches to the verification modules and prints one
report envelope as JSON on standard output.
"""

import sys
import json
import time
import logging
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import click

from . import __version__
from . import audit as audit_module
from .coloredyb import (
    JSpec,
    build_J,
    color_triple_from_json,
    colored_sweep,
    euler_check,
    format_residuals,
    ode_residual,
    sample_points,
    yb_system_residuals,
)
from .config import get_config
from .errors import ConfigError, ConvergenceError, InputError, SchemaError
from .exactcore import (
    EquationForm,
    ScalarKind,
    identity,
    matrix_from_json,
    matrix_to_json,
    parse_scalar,
    residual,
)
from .linearyb import (
    algebra_from_json,
    build_r_assoc,
    build_r_lie,
    lie_from_json,
    yb_param_case,
    yb_residual,
)
from .setyb import (
    check_family,
    enumerate_solutions,
    finite_map_from_json,
    gaussian_triples,
    linear_family,
    power_family,
    quotient_square_family,
    rational_triples,
    set_yb_check,
    write_listing,
)
from .transc import thm41_check, transcendental_margins
from .ujla import FUNCTIONAL_KINDS, FunctionalSpec, classify, endo_structure, from_functional, structure_from_json

logger = logging.getLogger(__name__)

FORMS = click.Choice([form.value for form in EquationForm])
PASS, FAIL, ERROR = "pass", "fail", "error"
EXIT_CODES = {PASS: 0, FAIL: 1, ERROR: 2}


@dataclass
class ReportEnvelope:
    """What every command prints."""
    command: str
    version: str
    convention: str
    payload: Dict[str, Any]
    verdict: str
    wall_time_ms: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def _emit(payload: Dict[str, Any], passed: bool):
    click.get_current_context().find_root().obj["result"] = (payload, PASS if passed else FAIL)


def _load_json(path: str, field: str) -> Dict[str, Any]:
    try:
        with open(path, "r") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError(field, f"{path} is not valid JSON: {e}")
    except UnicodeDecodeError as e:
        raise SchemaError(field, f"{path} is not UTF-8 text: {e}")
    except OSError as e:
        raise SchemaError(field, f"{path} could not be read: {e}")


def _parse_triple(raw: str, kind: ScalarKind = ScalarKind.RATIONAL) -> Tuple[Any, Any, Any]:
    parts = [p for p in raw.split(",")]
    if len(parts) != 3:
        raise SchemaError("triple", f"expected three comma-separated scalars, got {raw!r}")
    return tuple(parse_scalar(p, kind, f"triple[{i}]") for i, p in enumerate(parts))


@click.group()
@click.version_option(__version__, prog_name="ybx")
def cli():
    """Verification toolkit for the Yang-Baxter equation and related identities."""


# check

@cli.group()
def check():
    """Check an operator, map, family or structure."""


@check.command("linear")
@click.option("--matrix", "matrix_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--d", "d", required=True, type=int, help="dimension of V")
@click.option("--form", default=EquationForm.BRAID.value, type=FORMS)
@click.option("--tol", default=None, type=float, help="tolerance for float matrices")
def check_linear(matrix_path, d, form, tol):
    """Residual of a matrix on V⊗V under the braid or QYBE form."""
    r = matrix_from_json(_load_json(matrix_path, "matrix"))
    report = yb_residual(r, d, form, tol)
    _emit(report.to_dict(), report.passed)


@check.command("set")
@click.option("--map", "map_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--family", type=click.Choice(["power", "linear", "quotient-square"]))
@click.option("--alpha", default=None)
@click.option("--beta", default=None)
@click.option("--form", default=EquationForm.BRAID.value, type=FORMS)
@click.option("--samples", default=100, type=click.IntRange(min=1))
@click.option("--triple", default=None, help="a single triple such as 2,3,5")
def check_set(map_path, family, alpha, beta, form, samples, triple):
    """A finite map on all n³ triples, or a closed-form family on sampled triples."""
    if (map_path is None) == (family is None):
        raise click.UsageError("give exactly one of --map or --family")
    if map_path is not None:
        fmap = finite_map_from_json(_load_json(map_path, "map"))
        report = set_yb_check(fmap, form)
        _emit({"n": fmap.n, **report.to_dict()}, report.passed)
        return

    gaussian = family == "linear"
    kind = ScalarKind.GAUSS if gaussian else ScalarKind.RATIONAL
    if family == "power":
        for name, value in (("alpha", alpha), ("beta", beta)):
            if value is None or not value.strip().isdigit():
                raise SchemaError(name, f"power family needs a positive integer, got {value!r}")
        f = power_family(int(alpha), int(beta))
    elif gaussian:
        if alpha is None or beta is None:
            raise SchemaError("alpha" if alpha is None else "beta", "linear family needs both parameters")
        f = linear_family(parse_scalar(alpha, kind, "alpha"), parse_scalar(beta, kind, "beta"))
    else:
        f = quotient_square_family()
    if triple is not None:
        triples = [_parse_triple(triple, kind)]
    else:
        triples = gaussian_triples(samples) if gaussian else rational_triples(samples)
    report = check_family(f, form, triples)
    _emit({"family": f.describe(), **report.to_dict()}, report.passed)


@check.command("colored")
@click.option("--alpha", default=1.0, type=float)
@click.option("--samples", default=25, type=click.IntRange(min=1))
@click.option("--grid", default=None, type=click.IntRange(min=1))
@click.option("--functions", "functions_path", type=click.Path(exists=True, dir_okay=False),
              help="color functions for the five-equation system")
@click.option("--colors", default="0,1,2", help="colors u,v,w for --functions")
def check_colored(alpha, samples, grid, functions_path, colors):
    """The J-family checks, or the five-equation system for given color functions."""
    if functions_path is not None:
        fns = color_triple_from_json(_load_json(functions_path, "functions"))
        u, v, w = _parse_triple(colors)
        values = yb_system_residuals(fns, u, v, w)
        _emit({"functions": fns.description, "colors": [str(u), str(v), str(w)],
               "residuals": format_residuals(values)}, not any(values))
        return

    spec = JSpec(alpha)
    tol = get_config().colored_tol
    j = build_J(spec)
    square = residual(j @ j, identity(4, ScalarKind.CFLOAT).scale(complex(-1))).value
    euler = euler_check(spec).value
    sweep = colored_sweep(spec, sample_points(samples, grid), tol)
    coarse, fine = ode_residual(spec, 1.0, 1e-3).value, ode_residual(spec, 1.0, 5e-4).value
    ratio = coarse / fine if fine else None
    payload = {
        "alpha": spec.alpha,
        "j_squared_plus_i": square,
        "euler": euler,
        "sweep": sweep.to_dict(),
        "ode_ratio": ratio,
        "tolerance": tol,
    }
    passed = square < 1e-13 and euler < tol and sweep.passed and ratio is not None and abs(ratio - 4) <= 0.5
    _emit(payload, passed)


@check.command("ujla")
@click.option("--structure", "structure_path", required=True, type=click.Path(exists=True, dir_okay=False))
def check_ujla(structure_path):
    """Classify a bilinear product; the verdict is whether it is UJLA."""
    b = structure_from_json(_load_json(structure_path, "structure"))
    report = classify(b)
    _emit({"name": b.name, **report.to_dict()}, report.is_ujla)


# build

@cli.group()
def build():
    """Build an operator or a product and check what it is claimed to satisfy."""


@build.command("assoc")
@click.option("--algebra", "algebra_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--alpha", required=True)
@click.option("--beta", required=True)
@click.option("--gamma", required=True)
@click.option("--form", default=EquationForm.BRAID.value, type=FORMS)
def build_assoc(algebra_path, alpha, beta, gamma, form):
    """αab⊗1 + β1⊗ab − γa⊗b on A⊗A."""
    a = algebra_from_json(_load_json(algebra_path, "algebra"))
    params = [parse_scalar(raw, a.kind, name) for raw, name in ((alpha, "alpha"), (beta, "beta"), (gamma, "gamma"))]
    r = build_r_assoc(a, *params)
    report = yb_residual(r, a.dim, form)
    _emit({"matrix": matrix_to_json(r), "case": yb_param_case(*params).value, "check": report.to_dict()},
          report.passed)


@build.command("lie")
@click.option("--algebra", "algebra_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--alpha", required=True)
def build_lie(algebra_path, alpha):
    """α[x,y]⊗z + (−1)^{|x||y|} y⊗x on L⊗L."""
    l = lie_from_json(_load_json(algebra_path, "algebra"))
    r = build_r_lie(l, parse_scalar(alpha, l.kind, "alpha"))
    report = yb_residual(r, l.dim, EquationForm.BRAID)
    _emit({"matrix": matrix_to_json(r), "check": report.to_dict()}, report.passed)


_FUNCTIONAL_FLAGS = {"assoc": "is_associative", "lie": "is_lie", "jordan": "is_jordan", "ujla": "is_ujla"}


@build.command("functional")
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--kind", required=True, type=click.Choice(list(FUNCTIONAL_KINDS)))
def build_functional(spec_path, kind):
    """A product built from a linear functional, classified."""
    doc = _load_json(spec_path, "spec")
    if not isinstance(doc, dict):
        raise SchemaError("spec", "expected a JSON object")
    for name in ("dim", "f", "e"):
        if name not in doc:
            raise SchemaError(name, "missing")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError("dim", f"expected a positive integer, got {dim!r}")
    rational = ScalarKind.RATIONAL
    spec = FunctionalSpec(
        dim,
        [parse_scalar(v, rational, f"f[{i}]") for i, v in enumerate(_list(doc["f"], "f", dim))],
        [parse_scalar(v, rational, f"e[{i}]") for i, v in enumerate(_list(doc["e"], "e", dim))],
        parse_scalar(doc.get("alpha", 1), rational, "alpha"),
        parse_scalar(doc.get("beta", 1), rational, "beta"),
    )
    b = from_functional(spec, kind)
    report = classify(b)
    flag = _FUNCTIONAL_FLAGS[kind]
    _emit({"structure": b.to_dict(), "claimed": flag, "classification": report.to_dict()},
          bool(getattr(report, flag)))


def _list(raw: Any, field: str, length: int) -> List[Any]:
    if not isinstance(raw, list) or len(raw) != length:
        raise SchemaError(field, f"expected a list of {length} scalars")
    return raw


@build.command("endo")
@click.option("--p", "p", required=True)
@click.option("--q", "q", required=True)
@click.option("--d", "d", default=2, type=int)
def build_endo(p, q, d):
    """p·f∘g − q·g∘f on End(V), classified."""
    b = endo_structure(parse_scalar(p, ScalarKind.RATIONAL, "p"), parse_scalar(q, ScalarKind.RATIONAL, "q"), d)
    report = classify(b)
    _emit({"structure": b.to_dict(), "classification": report.to_dict()}, report.is_ujla)


# set

@cli.group("set")
def set_group():
    """Set-theoretic solutions."""


@set_group.command("enumerate")
@click.option("--size", "n", required=True, type=int)
@click.option("--form", default=EquationForm.BRAID.value, type=FORMS)
@click.option("--up-to-iso", is_flag=True, default=False)
@click.option("--listing", default=None, type=click.Path(dir_okay=False), help="write one solution per line here")
def set_enumerate(n, form, up_to_iso, listing):
    """Every solution on {0..n−1}, n ≤ 3."""
    result = enumerate_solutions(n, form, up_to_iso)
    payload = result.summary.to_dict()
    payload.pop("runtime_ms")
    payload["up_to_iso"] = up_to_iso
    if listing:
        payload["listing"] = str(write_listing(result, Path(listing)))
    if n <= 2:
        payload["solutions"] = [s.to_dict()["table"] for s in result.solutions]
    _emit(payload, True)


# transc

@cli.group("transc")
def transc_group():
    """Partial-sum bound and transcendental margins."""


@transc_group.command("thm41")
@click.option("--n-max", "n_max", default=10_000, type=click.IntRange(min=1))
def transc_thm41(n_max):
    """Σ_{k≤n} 1/k² < (2/3)((n+1)/n)^n, exactly."""
    report = thm41_check(n_max)
    payload = report.to_dict()
    payload.pop("runtime_ms")
    _emit(payload, report.passed)


@transc_group.command("margins")
@click.option("--digits", default=None, type=click.IntRange(min=15))
def transc_margins(digits):
    """Signed margins of the e/π inequalities, confirmed at high precision."""
    reports = transcendental_margins(digits)
    _emit({"digits": digits or get_config().digits, "margins": [r.to_dict() for r in reports]},
          all(r.passed for r in reports))


# audit

@cli.command("audit")
@click.argument("claim_id", required=False)
@click.option("--only", multiple=True, type=click.Choice(list(audit_module.MODULES)))
@click.option("--json", "json_path", default=None, type=click.Path(dir_okay=False), help="also save results here")
@click.option("--triple", default=None, help="triple for claims that take one, such as 2,3,5")
def audit_cmd(claim_id, only, json_path, triple):
    """Run one claim (raw status) or every claim against the expected-status manifest."""
    if claim_id is None:
        if triple is not None:
            raise click.UsageError("--triple needs a claim")
        summary = audit_module.audit_all(only)
        if json_path:
            summary.save(Path(json_path))
        _emit(summary.to_dict(), summary.all_matched)
        return

    overrides = {"triple": _parse_triple(triple)} if triple is not None else {}
    expected = audit_module.load_manifest().get(claim_id)
    result = audit_module.run_claim(claim_id, expected, **overrides)
    payload = result.to_dict()
    if json_path:
        Path(json_path).parent.mkdir(parents=True, exist_ok=True)
        with open(json_path, "w") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
        logger.info(f"💾 Claim result saved to {json_path}")
    if result.status == "error":
        raise SchemaError("claim", result.error or "evaluation failed")
    _emit(payload, result.status == audit_module.HOLDS)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line; print one envelope and return the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    state: Dict[str, Any] = {}
    start = time.time()
    verdict, payload = ERROR, {}
    try:
        code = cli.main(args=argv, prog_name="ybx", standalone_mode=False, obj=state)
        if "result" not in state:
            # help, version, or a group without a command
            return code if isinstance(code, int) else 0
        payload, verdict = state["result"]
    except InputError as e:
        field = getattr(e, "field", None)
        logger.error(f"❌ {e}")
        payload = {"error": str(e), "field": field}
    except ConfigError as e:
        logger.error(f"❌ Configuration: {e}")
        payload = {"error": str(e)}
    except click.ClickException as e:
        logger.error(f"❌ {e.format_message()}")
        payload = {"error": e.format_message()}
    except click.exceptions.Abort:
        logger.error("❌ Aborted")
        payload = {"error": "aborted"}
    except ConvergenceError as e:
        logger.error(f"❌ {e}")
        verdict, payload = FAIL, {"error": str(e)}

    envelope = ReportEnvelope(
        command=" ".join(argv),
        version=__version__,
        convention=audit_module.CONVENTION,
        payload=payload,
        verdict=verdict,
        wall_time_ms=(time.time() - start) * 1000,
    )
    click.echo(envelope.to_json())
    return EXIT_CODES[verdict]


def main():
    sys.exit(run())
