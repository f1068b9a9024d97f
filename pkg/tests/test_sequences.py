import pytest

from vactab import sequences
from vactab.errors import BoundExceeded, OutOfDomain, UnknownIdentity

KNOWN = {
    "g": [1, 2, 7, 31, 164, 999],
    "g_half": [1, 3, 12, 59, 339, 2210],
    "a": [1, 1, 3, 11, 49, 257],
    "a_half": [1, 2, 6, 24, 116, 648],
    "u": [1, 2, 7, 33, 198, 1453],
    "u_half": [1, 3, 12, 61, 381, 2854],
    "v": [1, 1, 3, 13, 75, 541],
    "v_half": [1, 2, 6, 26, 150, 1082],
}


@pytest.mark.parametrize("name", sequences.NAMES)
def test_initial_terms(name):
    assert sequences.terms(name, 6) == KNOWN[name]


def test_names_and_oeis():
    assert sequences.normalize_name("a-half") == "a_half"
    assert sequences.generate("v", 3).oeis == "A000670"
    assert sequences.generate("u_half", 1).oeis == "not in OEIS"
    with pytest.raises(UnknownIdentity):
        sequences.normalize_name("w")


def test_term_limit():
    assert len(sequences.terms("g", sequences.MAX_TERMS)) == sequences.MAX_TERMS
    with pytest.raises(OutOfDomain):
        sequences.generate("g", sequences.MAX_TERMS + 1)


@pytest.mark.parametrize("rid", sorted(sequences.RELATIONS))
def test_relations_hold(rid):
    rep = sequences.check_relation(rid, 12)
    assert rep.passed, rep.to_json()
    assert rep.counterexample is None


def test_relation_errors():
    with pytest.raises(UnknownIdentity):
        sequences.check_relation("nope", 3)
    with pytest.raises(OutOfDomain):
        sequences.check_relation("binom-g", sequences.MAX_TERMS)


@pytest.mark.parametrize("name", sequences.NAMES)
def test_against_brute_force(name):
    max_k = 3 if name in ("g", "g_half", "a", "a_half") else 5
    assert sequences.check_against_enumeration(name, max_k).passed


def test_brute_force_bound(monkeypatch):
    monkeypatch.setenv("VT_GROUND_BOUND", "4")
    with pytest.raises(BoundExceeded):
        sequences.check_against_enumeration("g", 3)


def test_report_json_uses_strings():
    js = sequences.check_relation("binom-g", 2).to_json()
    assert js["lhs"] == ["1", "3", "12"]
    assert js["passed"] is True
