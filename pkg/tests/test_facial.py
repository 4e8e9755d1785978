import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxlat.coxeter import popcount
from coxlat.errors import NotMinimalRep, NotTypeA, ParseError
from coxlat.facial import (
    CoxeterComplex,
    ParabolicCoset,
    anti_automorphisms,
    facial_covers,
    facial_join,
    facial_leq,
    facial_meet,
    format_coset,
    halfspace_witness,
    is_join_irreducible,
    make_coset,
    mobius,
    parse_coset,
    psi1,
    root_descent_set,
    root_inversion_set,
    theta,
    weight_inversion_set,
)
from coxlat.typea import decode, encode, format_partition, parse_partition
from coxlat.weak import minus_up, plus_down

from .conftest import system


def coset(S, word, gens):
    return make_coset(S.from_word(word), S.mask_of(gens))


def roots_of(S, mask):
    return sorted(S.roots[k] for k in range(len(S.roots)) if mask >> k & 1)


@pytest.mark.parametrize("desc, size", [("A2", 13), ("B2", 17), ("I2:5", 21), ("I2:6", 25), ("A3", 75), ("B3", 147)])
def test_complex_sizes(desc, size):
    cx = CoxeterComplex.of(system(desc))
    assert len(cx) == size == cx.expected_size()
    assert len({c.key() for c in cx}) == size


def test_minimal_representative_required(A2):
    with pytest.raises(NotMinimalRep):
        ParabolicCoset(A2.from_word("st"), A2.mask_of("t"))
    assert coset(A2, "st", "t") == coset(A2, "s", "t")


def test_parse_and_format(A3):
    c = parse_coset(A3, "t,s,r:{s,t}")
    assert format_coset(c) == "tsrW_{s,t}" and format_coset(c, "cli") == "t,s,r:{s,t}"
    assert parse_coset(A3, "tsr:{st}") == c
    assert format_coset(parse_coset(A3, "e:{}"), "cli") == "e:{}"
    # non-minimal input is re-canonicalized
    assert parse_coset(A3, "t,s,r,s:{s,t}") == c
    with pytest.raises(ParseError):
        parse_coset(A3, "tsr")


def test_root_inversion_set_examples(A2):
    e_empty = coset(A2, "", "")
    assert root_inversion_set(e_empty) == A2.negative_mask
    assert root_inversion_set(coset(A2, "", "st")) == A2.all_mask
    assert roots_of(A2, root_inversion_set(coset(A2, "s", "t"))) == sorted([(1, 0), (1, 1), (0, -1), (-1, -1)])


def test_weight_inversion_set_examples(A2):
    W = A2.weights
    assert weight_inversion_set(coset(A2, "", "st")) == 0
    empty = weight_inversion_set(coset(A2, "", ""))
    assert sorted(W[k] for k in range(len(W)) if empty >> k & 1) == sorted(A2.fundamental_weights)
    sw = weight_inversion_set(coset(A2, "s", "t"))
    expected = A2.generators[0].apply_vector(A2.fundamental_weights[0])
    assert [W[k] for k in range(len(W)) if sw >> k & 1] == [expected]


def test_cover_examples(A2):
    def covers(c):
        return sorted((format_coset(d), t) for d, t in facial_covers(c))

    assert covers(coset(A2, "", "")) == [("W_{s}", 1), ("W_{t}", 1)]
    assert covers(coset(A2, "", "s")) == [("W_{s,t}", 1), ("sW_{}", 2)]
    assert covers(coset(A2, "sts", "")) == []


def test_leq_examples(A3):
    cx = CoxeterComplex.of(A3)
    bottom = coset(A3, "", "")
    a, b = coset(A3, "t", "r"), coset(A3, "tsr", "st")
    for method in ("minmax", "roots", "covers"):
        assert facial_leq(a, b, method, lattice=cx.lattice)
        assert facial_leq(b, b, method, lattice=cx.lattice)
        assert all(facial_leq(bottom, c, method, lattice=cx.lattice) for c in cx)


def test_worked_meet_and_join(A3, B3):
    assert facial_meet(coset(A3, "tsr", "st"), coset(A3, "rts", "")) == coset(A3, "t", "r")
    join = facial_join(coset(B3, "rst", "rs"), coset(B3, "tsrs", ""))
    assert join == coset(B3, "rtsrtst", "r")
    c = coset(B3, "rst", "rs")
    assert facial_meet(c, c) == c and facial_join(c, c) == c


def test_meet_root_set_inclusion_can_be_strict(A3):
    a, b = coset(A3, "tsr", "st"), coset(A3, "rts", "")
    Ra, Rb = root_inversion_set(a), root_inversion_set(b)
    m = root_inversion_set(facial_meet(a, b))
    P, M = A3.positive_mask, A3.negative_mask
    assert m & M == minus_up(A3, (Ra | Rb) & M)
    bound = plus_down(A3, Ra & Rb)
    assert m & P & ~bound == 0 and m & P != bound


def test_mobius_examples(A2):
    assert mobius(coset(A2, "", "")) == 1
    assert mobius(coset(A2, "", "st")) == 1
    assert mobius(coset(A2, "s", "")) == 0
    lat = CoxeterComplex.of(A2).lattice
    cx = lat.complex
    assert lat.mobius_by_inversion() == [mobius(c) for c in cx]


def test_join_irreducible_examples(A2):
    assert is_join_irreducible(coset(A2, "s", ""))
    assert not is_join_irreducible(coset(A2, "", "st"))
    assert not is_join_irreducible(coset(A2, "", ""))


def test_anti_automorphisms(A2):
    bottom = coset(A2, "", "")
    assert psi1(bottom) == coset(A2, "sts", "")
    assert theta(bottom) == bottom
    for c in CoxeterComplex.of(A2):
        assert psi1(psi1(c)) == c
        assert len(anti_automorphisms(c)) == 3


def test_halfspace_witness(A2):
    neg = halfspace_witness(A2, A2.negative_mask)
    assert neg is not None
    assert all(A2.pair(A2.roots[k], neg) < 0 for k in range(A2.npos))
    full = halfspace_witness(A2, A2.all_mask)
    assert full is not None and all(x == 0 for x in full)
    a_s = A2.root_index[(1, 0)]
    m_t = A2.root_index[(0, -1)]
    assert halfspace_witness(A2, 1 << a_s | 1 << m_t) is None


def test_root_descent_sets(A2):
    assert roots_of(A2, root_descent_set(coset(A2, "", ""))) == sorted([(-1, 0), (0, -1)])
    assert roots_of(A2, root_descent_set(coset(A2, "sts", ""))) == [(0, 1), (1, 0)]
    assert roots_of(A2, root_descent_set(coset(A2, "s", "t"))) == sorted([(1, 0), (0, -1)])


def test_type_a_partitions(A2, B2):
    assert format_partition(encode(coset(A2, "", ""))) == "1|2|3"
    assert format_partition(encode(coset(A2, "", "st"))) == "123"
    assert format_partition(encode(coset(A2, "s", "t"))) == "2|13"
    assert decode(A2, parse_partition("2|13")) == coset(A2, "s", "t")
    with pytest.raises(NotTypeA):
        encode(coset(B2, "", ""))
    with pytest.raises(ParseError):
        decode(A2, parse_partition("1|1|3"))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_b3_lattice_laws(data):
    cx = CoxeterComplex.of(system("B3"))
    lat = cx.lattice
    n = len(cx)
    a, b, c = (data.draw(st.integers(0, n - 1)) for _ in range(3))
    m, j = lat.meet(a, b), lat.join(a, b)
    assert lat.leq(m, a) and lat.leq(m, b) and lat.leq(a, j) and lat.leq(b, j)
    assert lat.meet(a, b) == lat.meet(b, a)
    assert lat.meet(lat.meet(a, b), c) == lat.meet(a, lat.meet(b, c))
    assert lat.join(a, lat.meet(a, b)) == a
    assert lat.leq(a, b) == (lat.meet(a, b) == a)


def test_h3_meet_join_sampled():
    S = system("H3")
    cx = CoxeterComplex.of(S)
    assert len(cx) == 363
    rng = random.Random(3)
    for _ in range(300):
        a, b = rng.choice(cx.cosets), rng.choice(cx.cosets)
        m, j = facial_meet(a, b), facial_join(a, b)
        assert facial_leq(m, a) and facial_leq(m, b) and facial_leq(a, j) and facial_leq(b, j)
        assert popcount(root_inversion_set(m)) >= S.npos
