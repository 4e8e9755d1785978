import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxlat.coxeter import (
    CoxeterMatrix,
    InWI,
    Swap,
    build_system,
    classify,
    deodhar_step,
    descents,
    is_reduced,
    longest_element,
    parabolic_decompose,
    popcount,
)
from coxlat.errors import NotFinite, SystemMismatch, UnsupportedField
from coxlat.weak import cone_closures, plus_down, plus_up, weak_join, weak_leq, weak_meet

from .conftest import system


@pytest.mark.parametrize(
    "desc, npos, order",
    [("A2", 3, 6), ("B2", 4, 8), ("G2", 6, 12), ("I2:5", 5, 10), ("A3", 6, 24),
     ("B3", 9, 48), ("H3", 15, 120), ("D4", 12, 192), ("F4", 24, 1152)],
)
def test_root_and_group_sizes(desc, npos, order):
    S = system(desc)
    assert S.npos == npos and len(S.roots) == 2 * npos
    assert S.order == order == len(S.enumerate())


def test_field_choice():
    assert system("H3").field.is_golden and system("I2:5").field.is_golden
    assert not system("B3").field.is_golden


def test_unsupported_and_infinite():
    with pytest.raises(UnsupportedField):
        build_system("I2:7")
    with pytest.raises(NotFinite):
        build_system(CoxeterMatrix([[1, 3, 3], [3, 1, 3], [3, 3, 1]]))  # affine A2
    with pytest.raises(NotFinite):
        build_system(CoxeterMatrix([[1, 0], [0, 1]]))  # infinite dihedral


def test_classify_and_matrix_text():
    assert classify(system("B3").matrix) == ["B3"]
    m = system("H3").matrix
    assert CoxeterMatrix.from_text(m.to_text()) == m
    assert system("A3").names == ["r", "s", "t"]
    assert system("B3").matrix[0, 1] == 4 and system("B3").matrix[1, 2] == 3


def test_element_basics(A2):
    s, t = A2.generators
    assert (s * s).is_identity()
    alpha_t = A2.root_index[(Fraction(0), Fraction(1))]
    assert A2.roots[s.apply_root(alpha_t)] == (1, 1)
    st_ = A2.from_word("st")
    assert st_.inverse() == A2.from_word("ts") and st_.inverse().length == 2


def test_inversion_sets(A2):
    def roots(mask):
        return sorted(A2.roots[k] for k in range(len(A2.roots)) if mask >> k & 1)

    assert A2.identity.inversion_set() == 0
    assert roots(A2.from_word("s").inversion_set()) == [(1, 0)]
    assert roots(A2.from_word("st").inversion_set()) == [(1, 0), (1, 1)]


def test_descents_and_words(A2):
    assert descents(A2.identity) == (0, 0)
    st_ = A2.from_word("st")
    assert descents(st_) == (A2.mask_of("s"), A2.mask_of("t"))
    assert descents(A2.w0) == (A2.simple_mask, A2.simple_mask)
    assert A2.identity.reduced_word() == ()
    assert A2.format_word(A2.w0.reduced_word()) == "sts"
    assert not is_reduced(A2, "ss") and is_reduced(A2, "sts")


def test_longest_and_parabolic(A2, A3):
    assert longest_element(A2, 0).is_identity()
    assert longest_element(A2, A2.mask_of("s")) == A2.generators[0]
    w = longest_element(A3, A3.mask_of("rs"))
    assert A3.format_word(w.reduced_word()) == "rsr" and w.length == 3
    top, low = parabolic_decompose(A2.from_word("sts"), A2.mask_of("t"))
    assert (top, low) == (A2.from_word("ts"), A2.from_word("t"))
    w = A2.from_word("st")
    assert parabolic_decompose(w, 0) == (w, A2.identity)
    assert parabolic_decompose(A2.identity, A2.simple_mask) == (A2.identity, A2.identity)


def test_deodhar(A2):
    s, t = 0, 1
    I = A2.mask_of("t")
    assert deodhar_step(s, A2.identity, I) == InWI(A2.generators[0])
    assert deodhar_step(t, A2.identity, I) == Swap(t)
    assert deodhar_step(s, A2.generators[0], I) == InWI(A2.identity)


def test_weak_order_examples(A2):
    s, t = A2.generators
    ts = A2.from_word("ts")
    assert weak_leq(A2.identity, ts) and not weak_leq(s, ts) and weak_leq(t, ts)
    assert weak_meet(s, t).is_identity()
    assert weak_join(A2.from_word("st"), ts) == A2.w0
    with pytest.raises(SystemMismatch):
        weak_leq(s, system("B2").generators[0])


def test_cone_closure_examples(A2):
    P = A2.positive_mask
    assert plus_up(A2, 0) == 0
    assert plus_up(A2, A2.simple_mask) == P
    assert plus_up(A2, P) == P
    assert cone_closures(A2, P)[2] == P


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_h3_meet_join_inversion_closures(data):
    S = system("H3")
    group = S.enumerate()
    u = group[data.draw(st.integers(0, len(group) - 1))]
    v = group[data.draw(st.integers(0, len(group) - 1))]
    assert weak_meet(u, v).inversion_set() == plus_down(S, u.inversion_set() & v.inversion_set())
    assert weak_join(u, v).inversion_set() == plus_up(S, u.inversion_set() | v.inversion_set())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=14))
def test_words_reduce_to_same_element(word):
    S = system("B3")
    w = S.from_word(word)
    red = w.reduced_word()
    assert S.from_word(red) == w and len(red) == w.length == popcount(w.inversion_set())
    assert is_reduced(S, red)
    assert w.inverse().length == w.length


def test_w0_properties():
    for desc in ("A3", "B3", "H3"):
        S = system(desc)
        w0 = S.w0
        assert w0.length == S.npos and w0 * w0 == S.identity
        rng = random.Random(1)
        group = S.enumerate()
        for _ in range(50):
            u, v = rng.choice(group), rng.choice(group)
            assert weak_leq(u, v) == weak_leq(v * w0, u * w0)


def test_fundamental_weights_dual_to_coroots(B3):
    for i in range(3):
        for j in range(3):
            assert B3.pair(B3.coroots[i], B3.fundamental_weights[j]) == (1 if i == j else 0)
