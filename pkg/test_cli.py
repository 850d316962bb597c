#!/usr/bin/env python3
"""
Tests for the ybx command line: envelopes, verdicts and exit codes.
"""

import json

import pytest

from ybx import __version__
from ybx.cli import run
from ybx.input_generator import SampleInputGenerator


@pytest.fixture(scope="module")
def inputs(tmp_path_factory):
    generator = SampleInputGenerator(str(tmp_path_factory.mktemp("inputs")))
    generator.generate_all_default_inputs()
    return generator.input_dir


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_twist_passes_both_forms(capsys, inputs):
    for form in ("braid", "qybe"):
        code, envelope = _run(capsys, "check", "linear", "--matrix", str(inputs / "twist4.json"), "--d", "2",
                              "--form", form)
        assert code == 0
        assert envelope["verdict"] == "pass"
        assert envelope["payload"]["form"] == form
        assert envelope["version"] == __version__
        assert envelope["convention"].startswith("braid:")
        assert envelope["command"].startswith("check linear")


def test_gate_passes_braid(capsys, inputs):
    code, envelope = _run(capsys, "check", "linear", "--matrix", str(inputs / "gate5.json"), "--d", "2")
    assert code == 0
    assert envelope["payload"]["residual"]["exactly_zero"] is True


def test_dimension_mismatch_is_an_input_error(capsys, inputs):
    code, envelope = _run(capsys, "check", "linear", "--matrix", str(inputs / "twist4.json"), "--d", "3")
    assert code == 2
    assert envelope["verdict"] == "error"
    assert "d² = 9" in envelope["payload"]["error"]


def test_malformed_json_names_the_field(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, envelope = _run(capsys, "check", "linear", "--matrix", str(path), "--d", "2")
    assert code == 2
    assert envelope["payload"]["field"] == "matrix"


def test_undecodable_file_names_the_field(capsys, tmp_path):
    path = tmp_path / "binary.json"
    path.write_bytes(b'\xff\xfe{"dim":1}')
    code, envelope = _run(capsys, "check", "linear", "--matrix", str(path), "--d", "1")
    assert code == 2
    assert envelope["verdict"] == "error"
    assert envelope["payload"]["field"] == "matrix"
    assert "UTF-8" in envelope["payload"]["error"]


def test_quotient_square_at_the_prime_triple(capsys):
    code, envelope = _run(capsys, "check", "set", "--family", "quotient-square", "--triple", "2,3,5")
    assert code == 1
    assert envelope["verdict"] == "fail"
    assert envelope["payload"]["counterexample"] == {
        "triple": ["2", "3", "5"], "left": ["5/6", "4/9", "16"], "right": ["10/3", "4/9", "16"],
    }


def test_power_family_passes(capsys):
    code, envelope = _run(capsys, "check", "set", "--family", "power", "--alpha", "1", "--beta", "2",
                          "--samples", "20")
    assert code == 0
    assert envelope["payload"]["family"]["kind"] == "power"
    assert envelope["payload"]["triples_checked"] == 20


def test_power_family_needs_integer_parameters(capsys):
    code, envelope = _run(capsys, "check", "set", "--family", "power", "--alpha", "1/2", "--beta", "2")
    assert code == 2
    assert envelope["payload"]["field"] == "alpha"


def test_set_check_needs_exactly_one_source(capsys, inputs):
    code, _ = _run(capsys, "check", "set")
    assert code == 2
    code, _ = _run(capsys, "check", "set", "--map", str(inputs / "logic_map.json"), "--family", "power")
    assert code == 2


def test_logic_map_passes(capsys, inputs):
    code, envelope = _run(capsys, "check", "set", "--map", str(inputs / "logic_map.json"), "--form", "qybe")
    assert code == 0
    assert envelope["payload"]["n"] == 2


def test_colored_system_with_constant_functions(capsys, inputs):
    code, envelope = _run(capsys, "check", "colored", "--functions", str(inputs / "constant_triple.json"))
    assert code == 1
    assert envelope["payload"]["residuals"] == ["0", "18", "12", "18", "12"]


def test_colored_family(capsys):
    code, envelope = _run(capsys, "check", "colored", "--alpha", "2", "--samples", "8")
    assert code == 0
    payload = envelope["payload"]
    assert payload["sweep"]["samples"] == 8
    assert abs(payload["ode_ratio"] - 4) < 0.5


def test_check_ujla(capsys, inputs):
    code, envelope = _run(capsys, "check", "ujla", "--structure", str(inputs / "m2.json"))
    assert code == 0
    assert envelope["payload"]["is_associative"] is True


def test_build_assoc_cases(capsys, inputs):
    algebra = str(inputs / "dual_numbers.json")
    code, envelope = _run(capsys, "build", "assoc", "--algebra", algebra,
                          "--alpha", "1", "--beta", "1", "--gamma", "1")
    assert code == 0
    assert envelope["payload"]["case"] == "case-i"
    code, envelope = _run(capsys, "build", "assoc", "--algebra", algebra,
                          "--alpha", "1", "--beta", "2", "--gamma", "3")
    assert code == 1
    assert envelope["payload"]["case"] == "none"


def test_build_lie(capsys, inputs):
    code, _ = _run(capsys, "build", "lie", "--algebra", str(inputs / "super_heisenberg.json"), "--alpha", "2")
    assert code == 0


def test_build_functional_and_endo(capsys, inputs):
    code, envelope = _run(capsys, "build", "functional", "--spec", str(inputs / "functional.json"), "--kind", "ujla")
    assert code == 0
    assert envelope["payload"]["claimed"] == "is_ujla"
    code, envelope = _run(capsys, "build", "endo", "--p", "2", "--q", "3")
    assert code == 0
    assert envelope["payload"]["classification"]["is_ujla"] is True


def test_set_enumerate(capsys, tmp_path):
    listing = tmp_path / "solutions.jsonl"
    code, envelope = _run(capsys, "set", "enumerate", "--size", "2", "--listing", str(listing))
    assert code == 0
    payload = envelope["payload"]
    assert "runtime_ms" not in payload
    assert len(payload["solutions"]) == payload["count"]
    assert len(listing.read_text().splitlines()) == payload["count"]


def test_transc_thm41(capsys):
    code, envelope = _run(capsys, "transc", "thm41", "--n-max", "50")
    assert code == 0
    assert envelope["payload"]["checked"] == 50
    assert "runtime_ms" not in envelope["payload"]


def test_audit_single_claim_reports_raw_status(capsys):
    code, envelope = _run(capsys, "audit", "thm35", "--triple", "2,3,5")
    assert code == 1
    assert envelope["payload"]["status"] == "fails-as-stated"
    assert envelope["payload"]["matched"] is True


def test_audit_module_with_json(capsys, tmp_path):
    path = tmp_path / "audit.json"
    code, envelope = _run(capsys, "audit", "--only", "colored", "--json", str(path))
    assert code == 0
    assert envelope["payload"]["all_matched"] is True
    assert json.loads(path.read_text())["claims"] == 4


def test_unknown_claim(capsys):
    code, envelope = _run(capsys, "audit", "thm99")
    assert code == 2
    assert envelope["payload"]["field"] == "claim"


def test_usage_errors_exit_with_two(capsys):
    code, envelope = _run(capsys, "check", "linear", "--d", "2")
    assert code == 2
    assert "--matrix" in envelope["payload"]["error"]


def test_bad_configuration_exits_with_two(capsys, monkeypatch):
    monkeypatch.setattr("ybx.config._config", None)
    monkeypatch.setenv("YBX_COLORED_TOL", "loose")
    code, envelope = _run(capsys, "check", "colored", "--samples", "4")
    assert code == 2
    assert "YBX_COLORED_TOL" in envelope["payload"]["error"]


def test_version_prints_no_envelope(capsys):
    assert run(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def main():
    print("🧪 Running command line tests...")
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
