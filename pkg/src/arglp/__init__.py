"""Abstract argumentation frameworks compiled to propositional logic programs."""

from .direct import complete_extensions, completion, select_extensions, solve_direct
from .errors import ArgLPError
from .flatten import flatten, flatten_afd, flatten_afn, strip_mediated
from .framework import Framework, Kind, universe, validate
from .generate import GenSpec, random_framework
from .harness import diff, solve
from .program import compile_framework, normalize
from .psm import Interpretation, enumerate_psms, select, well_founded
from .textio import emit_framework, emit_model, emit_program, parse_framework

__all__ = [
    "ArgLPError", "Framework", "GenSpec", "Interpretation", "Kind", "compile_framework",
    "complete_extensions", "completion", "diff", "emit_framework", "emit_model", "emit_program",
    "enumerate_psms", "flatten", "flatten_afd", "flatten_afn", "normalize", "parse_framework",
    "random_framework", "select", "select_extensions", "solve", "solve_direct", "strip_mediated",
    "universe", "validate", "well_founded",
]
__version__ = "0.1.0"
