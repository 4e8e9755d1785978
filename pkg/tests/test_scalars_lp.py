from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxlat.exact_lp import cone_contains, feasible_nonneg, fm_cone_contains, rank, relative_interiors_meet
from coxlat.scalars import PHI, Golden, format_scalar, parse_scalar, sign
from coxlat.weak import ConeOracle

from .conftest import system

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
goldens = st.builds(Golden, fractions, fractions)


@given(goldens, goldens, goldens)
def test_golden_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    if x:
        assert (y / x) * x == y


@given(goldens)
def test_golden_sign_matches_float(x):
    f = float(x)
    if abs(f) > 1e-9:
        assert sign(x) == (1 if f > 0 else -1)
    assert (x == 0) == (sign(x) == 0)


def test_phi_is_golden_ratio():
    assert PHI * PHI == PHI + 1
    assert PHI > Fraction(161, 100) and PHI < Fraction(162, 100)


@given(st.one_of(fractions, goldens))
def test_scalar_text_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_scalar_formats():
    assert format_scalar(Fraction(-3, 4)) == "-3/4"
    assert format_scalar(Golden(Fraction(1, 2), Fraction(1, 2))) == "(1/2)+(1/2)√5"


small_vec = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@settings(max_examples=150, deadline=None)
@given(st.lists(small_vec, min_size=0, max_size=5), small_vec)
def test_simplex_agrees_with_fourier_motzkin(gens, target):
    gens = [[Fraction(v) for v in g] for g in gens]
    target = [Fraction(v) for v in target]
    assert cone_contains(gens, target) == fm_cone_contains(gens, target)


def test_feasible_nonneg_simple():
    # x + y = 1, x - y = 0 has the nonnegative solution (1/2, 1/2)
    A = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    assert feasible_nonneg(A, [Fraction(1), Fraction(0)]) is not None
    assert feasible_nonneg(A, [Fraction(-1), Fraction(0)]) is None


def test_rank_and_relative_interiors():
    e1, e2 = [Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]
    assert rank([e1, e2, [Fraction(1), Fraction(1)]]) == 2
    assert not relative_interiors_meet([e1], [e2], 2)
    assert relative_interiors_meet([e1, e2], [[Fraction(1), Fraction(1)]], 2)


@pytest.mark.parametrize("desc", ["A2", "B2", "G2", "I2:5", "A3", "B3", "H3"])
def test_cone_index_matches_simplex(desc):
    S = system(desc)
    index, simplex = ConeOracle(S, "index"), ConeOracle(S, "simplex")
    import random

    rng = random.Random(7)
    total = len(S.roots)
    for _ in range(40):
        X = 0
        for k in range(total):
            if rng.random() < 0.25:
                X |= 1 << k
        assert index.cone_roots(X) == simplex.cone_roots(X)
