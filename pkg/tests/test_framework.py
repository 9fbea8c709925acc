import pytest

from arglp.errors import ValidationError
from arglp.framework import Framework, Kind, all_elements, check, universe, validate
from conftest import load


def codes(f):
    return [v.code for v in validate(f)]


def test_four_argument_af_is_valid():
    f = load("four-args.af")
    assert validate(f) == []
    assert universe(f) == ["a", "b", "c", "d"]


def test_universe_orders_arguments_then_attacks_then_supports():
    f = load("tennis-winter-rafn.raf")
    assert universe(f) == ["p", "r", "w_e", "w_i", "w_t", "alpha1", "alpha2", "alpha3", "beta1"]
    assert len(universe(f)) == len(f.args) + len(f.attacks) + len(f.supports)


def test_universe_of_bipolar_frameworks_holds_arguments_only():
    f = load("tennis-afn.raf")
    assert universe(f) == ["p", "r", "w_e", "w_i"]
    assert all_elements(f)[-1] == "beta1"


def test_empty_framework():
    assert universe(Framework(Kind.AF)) == []
    assert validate(Framework(Kind.AF)) == []


def test_support_cycle_lists_its_elements():
    f = Framework(Kind.AFN, {"a", "b"}, {}, {"s1": ("a", "b"), "s2": ("b", "a")})
    (v,) = validate(f)
    assert v.code == "SupportCycle"
    assert set(v.elements) == {"a", "b"}


def test_support_cycle_through_supports_on_supports():
    f = Framework(Kind.RAFN, {"a"}, {}, {"s1": ("a", "s2"), "s2": ("a", "s1")})
    assert "SupportCycle" in codes(f)


def test_af_attack_on_attack_is_a_kind_violation():
    f = Framework(Kind.AF, {"a", "b"}, {"x": ("a", "b"), "y": ("a", "x")})
    assert codes(f) == ["KindTargetViolation"]
    assert validate(f.with_kind(Kind.RAF)) == []


def test_raf_cannot_hold_supports():
    f = Framework(Kind.RAF, {"a", "b"}, {}, {"s": ("a", "b")})
    assert "KindTargetViolation" in codes(f)


def test_afn_support_on_attack_is_a_kind_violation():
    f = Framework(Kind.AFN, {"a", "b"}, {"x": ("a", "b")}, {"s": ("a", "x")})
    assert codes(f) == ["KindTargetViolation"]
    assert validate(f.with_kind(Kind.ASAF)) == []


def test_unknown_target_and_non_argument_source():
    f = Framework(Kind.RAF, {"a"}, {"x": ("a", "zz"), "y": ("x", "a")})
    assert sorted(codes(f)) == ["SourceNotArgument", "UnknownTarget"]


def test_name_clash_and_invalid_names():
    f = Framework(Kind.AF, {"a", "x"}, {"x": ("a", "a")})
    assert "NameClash" in codes(f)
    assert "InvalidName" in codes(Framework(Kind.AF, {"__a"}))
    assert "InvalidName" in codes(Framework(Kind.AF, {"1a"}))


def test_check_raises_validation_error_with_exit_code_3():
    with pytest.raises(ValidationError) as e:
        check(Framework(Kind.AF, {"a"}, {"x": ("a", "b")}))
    assert e.value.exit_code == 3


def test_kind_flags():
    assert [k for k in Kind if k.recursive] == [Kind.RAF, Kind.AFRA, Kind.RAFN, Kind.ASAF,
                                                 Kind.RAFD, Kind.AFRAD]
    assert [k for k in Kind if k.deductive] == [Kind.AFD, Kind.RAFD, Kind.AFRAD]
    assert not Kind.AFRA.has_supports and Kind.AFN.has_supports
    assert Kind.parse("AFRAD") is Kind.AFRAD
    with pytest.raises(ValueError):
        Kind.parse("xaf")


def test_frameworks_compare_by_value():
    a = load("tennis-afn.raf")
    b = Framework(Kind.AFN, set(a.args), dict(a.attacks), dict(a.supports))
    assert a == b and hash(a) == hash(b)
    assert a != a.with_kind(Kind.AFD)
