"""Exact computations with associative and Lie H-pseudoalgebras."""
from __future__ import annotations

from importlib.resources import files

from .hopf import GroupHopf, HElement, HTensor, HopfAlgebra, PolynomialHopf, TrivialHopf, cyclic_group
from .modules import FreeModule, Tensor
from .pseudotensor import PseudoTensor, RawTensor, pseudo
from .pseudoalgebra import PseudoAlgebra, lieify, pstar
from .bialgebra import Bialgebra, CoalgebraMap
from .literal import ParseError, SemanticError, SpecError, parse_pseudotensor, parse_tensor
from .specfile import load_spec, parse_spec
from .report import Report

__version__ = "0.1.0"


def bundled_spec(name: str) -> str:
    """Path of a spec file shipped with the package, e.g. ``bundled_spec("coboundary")``."""
    return str(files("pseudalg") / "specs" / f"{name}.spec")


__all__ = [
    "Bialgebra", "CoalgebraMap", "FreeModule", "GroupHopf", "HElement", "HTensor", "HopfAlgebra",
    "ParseError", "PolynomialHopf", "PseudoAlgebra", "PseudoTensor", "RawTensor", "Report",
    "SemanticError", "SpecError", "Tensor", "TrivialHopf", "bundled_spec", "cyclic_group",
    "lieify", "load_spec", "parse_pseudotensor", "parse_spec", "parse_tensor", "pseudo", "pstar",
]
