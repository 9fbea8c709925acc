import pathlib

import pytest
from hypothesis import strategies as st

from arglp import _kernels
from arglp.framework import Kind
from arglp.generate import GenSpec, random_framework
from arglp.textio import parse_framework

DATA = pathlib.Path(__file__).parent / "data"

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE = {}

BACKENDS = ["numpy"] + (["numba"] if _kernels.numba_available() else [])


def load(name):
    return parse_framework((DATA / name).read_text())


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@st.composite
def frameworks(draw, kinds=tuple(Kind), max_args=4, max_atts=4, max_sups=3):
    """Small valid frameworks, drawn through the seeded generator."""
    kind = draw(st.sampled_from(kinds))
    n_args = draw(st.integers(1, max_args))
    n_atts = draw(st.integers(0, max_atts))
    n_sups = draw(st.integers(0, max_sups)) if kind.has_supports else 0
    if n_args < 2 and (not kind.recursive or n_atts == 0):
        n_sups = 0
    rate = draw(st.sampled_from([0.0, 0.3, 0.7])) if kind.recursive else 0.0
    seed = draw(st.integers(0, 2 ** 32))
    return random_framework(GenSpec(kind, n_args, n_atts, n_sups, rate, seed))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
