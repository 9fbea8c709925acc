"""Randomized equivalences between the program side and the extension side."""

from hypothesis import given, settings

from arglp import direct
from arglp.framework import Kind
from arglp.program import compile_framework
from arglp.psm import Interpretation, enumerate_psms, enumerate_psms_normalized, select, well_founded
from conftest import frameworks

BAF = (Kind.AFN, Kind.AFD)
NON_BAF = tuple(k for k in Kind if k not in BAF)


def completions(exts, f):
    return {direct.completion(E, f) for E in exts}


@settings(max_examples=150, deadline=None)
@given(frameworks(kinds=NON_BAF))
def test_completions_equal_psms(f):
    p = compile_framework(f)
    ps = enumerate_psms(p)
    cos = direct.complete_extensions(f)
    assert completions(cos, f) == set(ps)
    for sem, which in direct.SELECTOR_OF.items():
        if which is not None:
            assert completions(direct.select_extensions(cos, f, sem), f) == set(select(ps, which, p.atoms))


@settings(max_examples=150, deadline=None)
@given(frameworks(kinds=BAF))
def test_bipolar_programs_follow_the_recursive_reading(f):
    ps = set(enumerate_psms(compile_framework(f)))
    rec = direct.recursive_complete_extensions(f)
    assert ps == {Interpretation(E, direct.new_def_acc(f, E)[0]) for E in rec}
    assert ps <= completions(direct.complete_extensions(f), f)


@settings(max_examples=150, deadline=None)
@given(frameworks(kinds=tuple(k for k in Kind if k is not Kind.AFRAD)))
def test_normalization_preserves_psms_without_positive_loops(f):
    p = compile_framework(f)
    assert enumerate_psms_normalized(p) == enumerate_psms(p)


@settings(max_examples=150, deadline=None)
@given(frameworks())
def test_well_founded_is_the_least_psm(f):
    p = compile_framework(f)
    ps = enumerate_psms(p)
    wf = well_founded(p)
    assert wf in ps and all(wf <= m for m in ps)


@settings(max_examples=100, deadline=None)
@given(frameworks())
def test_every_psm_passes_the_pointwise_check(f):
    from arglp.psm import is_psm
    p = compile_framework(f)
    for m in enumerate_psms(p):
        assert is_psm(p, m)
