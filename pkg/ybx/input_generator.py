"""
Sample Input Generator
Builds the sample JSON documents accepted by the command line and keeps them in an input directory.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from .exactcore import matrix_to_json, twist
from .linearyb import dual_numbers, gate_matrices, heisenberg, matrix_algebra, super_heisenberg
from .setyb import logic_map

logger = logging.getLogger(__name__)

DEFAULT_INPUT_DIR = Path(__file__).parent / "inputs"


class SampleInputGenerator:
    """Generate sample input documents from the toolkit's standard objects."""

    def __init__(self, input_dir: Optional[str] = None):
        self.input_dir = Path(input_dir) if input_dir else DEFAULT_INPUT_DIR
        self.input_dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def _named(doc: Dict[str, Any], name: str, description: str) -> Dict[str, Any]:
        return {**doc, "name": name, "description": description}

    def generate_matrix_inputs(self) -> List[Dict[str, Any]]:
        gate, cnot = gate_matrices()
        return [
            self._named(matrix_to_json(twist(2)), "twist4", "the twist on V⊗V with dim V = 2"),
            self._named(matrix_to_json(gate), "gate5", "the braiding gate built from the dual numbers"),
            self._named(matrix_to_json(cnot), "cnot", "the CNOT gate"),
        ]

    def generate_algebra_inputs(self) -> List[Dict[str, Any]]:
        return [
            self._named(dual_numbers().to_dict(), "dual_numbers", "k[x]/(x²) in the basis (1, x)"),
            self._named(matrix_algebra().to_dict(), "m2", "2×2 matrices in the matrix-unit basis"),
            self._named(heisenberg().to_dict(), "heisenberg", "[e₁, e₂] = e₃ with z = e₃"),
            self._named(super_heisenberg().to_dict(), "super_heisenberg",
                        "even central z and two odd generators squaring to z"),
        ]

    def generate_other_inputs(self) -> List[Dict[str, Any]]:
        return [
            self._named({"kind": "constant", "alpha": "2", "beta": "3", "gamma": "5"},
                        "constant_triple", "constant color functions α = 2, β = 3, γ = 5"),
            self._named(logic_map().to_dict(), "logic_map", "(p ∨ q, p ∧ q) on {0, 1}"),
            self._named({"dim": 3, "f": ["1", "2", "3"], "e": ["1", "0", "0"], "alpha": "2", "beta": "5"},
                        "functional", "the functional (1, 2, 3) with e = e₁, α = 2, β = 5"),
        ]

    def save_input(self, doc: Dict[str, Any], filename: Optional[str] = None) -> str:
        """Save one document; the filename defaults to its name."""
        filename = filename or f"{doc['name']}.json"
        path = self.input_dir / filename
        with open(path, "w") as f:
            json.dump(doc, f, indent=2)
        logger.debug(f"💾 Saved {path}")
        return str(path)

    def load_input(self, filename: str) -> Dict[str, Any]:
        with open(self.input_dir / filename, "r") as f:
            return json.load(f)

    def list_inputs(self) -> List[str]:
        return sorted(f.name for f in self.input_dir.glob("*.json"))

    def generate_all_default_inputs(self) -> List[str]:
        """Generate every sample document and save it."""
        docs = self.generate_matrix_inputs() + self.generate_algebra_inputs() + self.generate_other_inputs()
        saved = [self.save_input(doc) for doc in docs]
        logger.info(f"✅ Wrote {len(saved)} sample inputs to {self.input_dir}")
        return saved
