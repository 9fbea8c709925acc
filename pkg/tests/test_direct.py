import pytest
from hypothesis import given, settings

from arglp import direct
from arglp.errors import NonUniqueGrounded, ResourceLimit
from arglp.framework import Framework, Kind
from arglp.psm import Interpretation
from conftest import frameworks, load

FOUR_CO = [frozenset(), frozenset("ad"), frozenset("bd"), frozenset("d")]  # canonical order
NECESSARY_CHAIN = Framework(Kind.AFN, {"a", "b", "c", "d"},
                            {"x1": ("b", "c"), "x2": ("c", "d")}, {"s1": ("b", "a")})


def test_four_argument_af_semantics(backend):
    f = load("four-args.af")
    co = direct.complete_extensions(f, backend=backend)
    assert co == FOUR_CO
    expected = {"preferred": [set("ad"), set("bd")], "stable": [set("ad"), set("bd")],
                "semi-stable": [set("ad"), set("bd")], "grounded": [set()], "ideal": [set("d")]}
    for sem, exts in expected.items():
        assert direct.select_extensions(co, f, sem) == [frozenset(e) for e in exts]
    assert direct.acc_set(f, {"a"}) == {"a", "d"}
    assert direct.completion({"a", "d"}, f) == Interpretation({"a", "d"}, {"b", "c"})


def test_afra_and_raf_defeat_sets():
    raf = load("chain3-raf.raf")
    afra = raf.with_kind(Kind.AFRA)
    assert direct.def_set(afra, {"a", "alpha1"}) == {"b", "alpha2"}
    assert direct.def_set(raf, {"a", "alpha1"}) == {"b"}
    assert direct.complete_extensions(afra) == [frozenset({"a", "c", "alpha1"})]
    assert direct.complete_extensions(raf) == [frozenset({"a", "c", "alpha1", "alpha2"})]


def test_necessary_chain_def_and_acc():
    f = NECESSARY_CHAIN
    assert direct.def_set(f, {"a"}) == {"c"}
    assert direct.acc_set(f, {"a"}) == {"a", "b", "d"}
    assert direct.new_def_acc(f, {"a"}) == (set(), {"a", "b"})
    assert direct.new_def_acc(f, {"a", "b", "d"}) == ({"c"}, {"a", "b", "d"})
    assert direct.def_set(f, {"a", "b", "d"}) == {"c"}


def test_winter_and_season_frameworks():
    winter = load("tennis-winter-rafn.raf")
    expected = frozenset({"w_i", "r", "w_e", "w_t", "alpha2", "alpha3", "beta1"})
    for kind in (Kind.RAFN, Kind.ASAF):
        co = direct.complete_extensions(winter.with_kind(kind))
        assert co == [expected]
        for sem in direct.SEMANTICS:
            assert direct.select_extensions(co, winter.with_kind(kind), sem) == [expected]
    season = load("tennis-season-rafn.raf")
    assert direct.complete_extensions(season.with_kind(Kind.ASAF)) == [
        frozenset({"w_i", "s", "p", "alpha1", "alpha4", "beta1"})]
    assert direct.complete_extensions(season) == [
        frozenset({"w_i", "s", "p", "alpha1", "alpha2", "alpha3", "alpha4", "beta1"})]


def test_tennis_completion():
    f = load("tennis-afn.raf")
    assert direct.complete_extensions(f) == [frozenset({"w_i", "p"})]
    assert direct.completion({"w_i", "p"}, f) == Interpretation({"w_i", "p"}, {"r", "w_e"})


def test_attack_free_framework():
    f = Framework(Kind.RAFN, {"a", "b"}, {}, {"s": ("a", "b")})
    u = {"a", "b", "s"}
    assert direct.acc_set(f, set()) == u
    assert direct.complete_extensions(f) == [frozenset(u)]
    assert direct.completion(u, f).neg == set()


def test_self_attacking_attack_keeps_its_extension():
    # a2 attacks its own attack; paths through undefeated elements still count
    f = Framework(Kind.RAFN, {"a1", "a2"}, {"att1": ("a2", "att1")})
    assert direct.complete_extensions(f) == [frozenset({"a1", "a2"})]


def test_afrad_def_uses_the_greatest_fixpoint():
    f = Framework(Kind.AFRAD, {"a", "b"}, {"alpha": ("a", "b")}, {"beta": ("a", "alpha")})
    S = {"b", "beta"}
    assert direct.new_def_acc(f, S, fixpoint="least")[0] == set()
    assert direct.new_def_acc(f, S)[0] == {"a", "alpha"}
    assert direct.complete_extensions(f) == [frozenset({"b", "beta"})]
    with pytest.raises(ValueError):
        direct.new_def_acc(f, S, fixpoint="middle")


def test_resource_limit():
    f = Framework(Kind.AF, {f"a{i}" for i in range(6)})
    with pytest.raises(ResourceLimit):
        direct.complete_extensions(f, limit=5)
    assert len(direct.complete_extensions(f, limit=5, force=True)) == 1


def test_grounded_diagnostic_on_a_foreign_extension_set():
    f = load("four-args.af")
    with pytest.raises(NonUniqueGrounded):
        direct.select_extensions([frozenset("a"), frozenset("b")], f, "grounded")
    with pytest.raises(ValueError):
        direct.select_extensions(FOUR_CO, f, "naive")


def test_singleton_complete_set():
    f = Framework(Kind.AF, {"a"})
    co = direct.complete_extensions(f)
    for sem in direct.SEMANTICS:
        assert direct.select_extensions(co, f, sem) == co


@settings(max_examples=120, deadline=None)
@given(frameworks())
def test_kernel_scan_matches_set_definitions(f):
    assert direct.complete_extensions(f) == direct.complete_extensions(f, engine="sets")


@settings(max_examples=120, deadline=None)
@given(frameworks())
def test_kernel_defacc_matches_set_definitions(f):
    for S in direct.complete_extensions(f):
        assert direct.defacc_masks(f, S) == (direct.def_set(f, S), direct.acc_set(f, S))


@settings(max_examples=80, deadline=None)
@given(frameworks(kinds=(Kind.RAF, Kind.AFRA, Kind.RAFN, Kind.ASAF, Kind.RAFD, Kind.AFRAD)))
def test_recursive_reading_agrees_for_recursive_kinds(f):
    assert direct.recursive_complete_extensions(f) == direct.complete_extensions(f)
