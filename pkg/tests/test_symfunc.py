from fractions import Fraction
from itertools import combinations
from math import prod

from hypothesis import given, strategies as st
import pytest

from vactab import symfunc
from vactab.errors import OutOfDomain, UnknownIdentity
from vactab.partitions import partitions_of, partitions_up_to, syt_count
from vactab.qpoly import QPoly, ZERO
from vactab.symfunc import h_eval, h_expansion, h_principal, schur_eval, schur_principal

points = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=3)


def test_schur_small_values():
    assert schur_eval((1, 1), (1, 1)) == 1
    assert schur_eval((2,), (1, 1)) == 3
    assert schur_eval((2, 1), (1, 1, 1)) == 8
    assert schur_eval((), (5, 7)) == 1
    assert schur_eval((1, 1, 1), (1, 1)) == 0
    assert h_eval((1, 1), (1, 1)) == 4


@given(st.integers(0, 4), points)
def test_one_row_schur_is_complete_homogeneous(n, pt):
    assert schur_eval((n,) if n else (), pt) == h_eval((n,) if n else (), pt)


@given(st.sampled_from(partitions_up_to(4)), points)
def test_one_column_schur_is_elementary(mu, pt):
    if any(p > 1 for p in mu):
        return
    # elementary symmetric function by direct subset sum
    e = sum(prod(c) for c in combinations(pt, len(mu)))
    assert schur_eval(mu, pt) == e


def test_principal_examples():
    assert schur_principal((1, 1), 2) == QPoly([0, 1])
    assert schur_principal((2, 1), 1) == ZERO
    assert h_principal((1,), 3) == QPoly([1, 1, 1])


@pytest.mark.parametrize("m", range(1, 4))
def test_principal_matches_pointwise(m):
    for q in (Fraction(1), Fraction(2), Fraction(1, 2)):
        pt = [q**i for i in range(m)]
        for mu in partitions_up_to(4):
            assert schur_principal(mu, m)(q) == schur_eval(mu, pt)
            assert h_principal(mu, m)(q) == h_eval(mu, pt)


def test_identity_sides():
    params = {"k": 2}
    assert symfunc.identity_side("thm3.4", "LHS", params, point=(1, 1)) == 12
    assert symfunc.identity_side("thm3.4", "RHS", params, point=(1, 1)) == 12
    two = symfunc.identity_side("eq5.6", "LHS", {"n": 2, "k": 2})
    assert two == QPoly([2, 2])
    assert symfunc.identity_side("eq5.6", "RHS", {"n": 2, "k": 2}) == two
    q = symfunc.identity_side("eq3.6", "LHS", {"k": 2, "m": 2})
    assert q == symfunc.identity_side("eq3.6", "RHS", {"k": 2, "m": 2})
    assert q(1) == 12


@pytest.mark.parametrize("ident", sorted(symfunc.POINT_IDENTITIES))
@given(pt=points)
def test_point_identities_random(ident, pt):
    params = {"k": 3, "n": 3}
    lhs = symfunc.identity_side(ident, "LHS", params, point=pt)
    assert lhs == symfunc.identity_side(ident, "RHS", params, point=pt)


def test_h_expansion_example():
    assert h_expansion(6, 3) == {(5, 1): 1, (4, 1, 1): 3, (3, 1, 1, 1): 1}


def test_unknown_and_bad_side():
    with pytest.raises(UnknownIdentity):
        symfunc.identity_side("nope", "LHS", {"k": 1}, point=(1,))
    with pytest.raises(ValueError):
        symfunc.identity_side("thm3.4", "middle", {"k": 1}, point=(1,))


def test_principal_needs_m():
    with pytest.raises(OutOfDomain):
        symfunc.identity_side("eq3.6", "LHS", {"k": 2})


def test_schur_sum_over_shapes_of_fixed_size():
    # sum of f^mu s_mu over mu of size n equals (x_1+...+x_m)^n
    pt = (Fraction(1, 2), Fraction(3), Fraction(-1))
    for n in range(5):
        assert sum(syt_count(mu) * schur_eval(mu, pt) for mu in partitions_of(n)) == sum(pt) ** n
