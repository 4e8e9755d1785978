import pytest

from coxlat.congruence import (
    ProjectionPair,
    QuotientLattice,
    build_facial_congruence,
    cambrian_pi_down,
    cambrian_projections,
    congruence_from_projections,
    coxeter_elements,
    descent_projections,
    facial_proj_down_search,
    facial_proj_up,
    fan_cones,
    identity_projections,
    is_c_sortable,
    nonsublattice_witness,
    one_class_projections,
    parse_coxeter_element,
    projections_for,
    sigma_sets,
    sigma_up,
    singleton_conjecture,
    validate_projections,
    weak_congruence,
)
from coxlat.errors import Contracted, NotCoxeterElement
from coxlat.facial import CoxeterComplex, format_coset, make_coset, root_inversion_set

from .conftest import system


def el(S, word):
    return S.from_word(word)


def coset(S, word, gens):
    return make_coset(S.from_word(word), S.mask_of(gens))


def words(S, members):
    return sorted(S.format_word(S.element(k).reduced_word()) for k in members)


def test_validation(A2):
    assert validate_projections(identity_projections(A2)).ok
    assert validate_projections(descent_projections(A2)).ok
    top = A2.index(A2.w0)
    bad = ProjectionPair(A2, [top] * 6, list(range(6)))
    report = validate_projections(bad)
    assert not report.ok and report.clause == "ii"


def test_element_classes(A2):
    assert len(weak_congruence(A2, "trivial")) == 6
    descent = weak_congruence(A2, "descent")
    assert sorted(words(A2, m) for m in descent.members) == [["e"], ["s", "st"], ["sts"], ["t", "ts"]]
    camb = weak_congruence(A2, "cambrian", "st")
    assert len(camb) == 5
    assert ["t", "ts"] in [words(A2, m) for m in camb.members]


def test_descent_projection_values(A2):
    p = descent_projections(A2)
    assert p.pi_down(A2.identity).is_identity() and p.pi_up(A2.identity).is_identity()
    assert p.pi_down(el(A2, "st")) == el(A2, "s")
    assert p.pi_up(el(A2, "st")) == el(A2, "st")
    assert p.pi_down(A2.w0) == A2.w0


def test_descent_projections_valid_everywhere():
    for desc in ("A3", "B3", "H3"):
        assert validate_projections(descent_projections(system(desc))).ok


def test_cambrian_projection_values(A2):
    assert cambrian_pi_down("st", A2.identity).is_identity()
    assert cambrian_pi_down("st", el(A2, "ts")) == el(A2, "t")
    assert cambrian_pi_down("st", el(A2, "sts")) == el(A2, "sts")
    assert is_c_sortable(A2.identity, "st")
    assert not is_c_sortable(el(A2, "ts"), "st")
    assert is_c_sortable(el(A2, "st"), "st")


def test_coxeter_element_parsing(A3):
    assert parse_coxeter_element(A3, "s,r,t") == (1, 0, 2)
    assert parse_coxeter_element(A3, "srt") == (1, 0, 2)
    for bad in ("s,r", "s,s,t", "s,r,x"):
        with pytest.raises(NotCoxeterElement):
            parse_coxeter_element(A3, bad)
    with pytest.raises(NotCoxeterElement):
        projections_for(A3, "cambrian")


@pytest.mark.parametrize("desc, count", [("A2", 5), ("B2", 6), ("A3", 14), ("B3", 20), ("H3", 32)])
def test_sortable_counts(desc, count):
    S = system(desc)
    for c in coxeter_elements(S)[:2]:
        p = cambrian_projections(S, c)
        assert sum(1 for k in range(S.order) if p.down[k] == k) == count


def test_facial_projection_examples(A2):
    p = descent_projections(A2)
    s_empty = coset(A2, "s", "")
    assert facial_proj_up(s_empty, p) == coset(A2, "st", "")
    fc = build_facial_congruence(A2, "descent")
    cx = fc.complex
    assert cx[fc.pi_down[cx.index(s_empty)]] == s_empty
    assert facial_proj_up(coset(A2, "s", "t"), p) == coset(A2, "st", "")
    assert facial_proj_down_search(s_empty, p) == s_empty
    q = identity_projections(A2)
    for c in cx:
        assert facial_proj_up(c, q) == c


def test_sigma_examples(A2):
    p = descent_projections(A2)
    assert sigma_sets(el(A2, "s"), A2.mask_of("t"), p)[0] == 0
    assert sigma_sets(A2.identity, A2.mask_of("s"), p)[0] == A2.mask_of("s")
    with pytest.raises(Contracted):
        sigma_up(el(A2, "s"), 1, p)
    q = identity_projections(A2)
    for w in A2.enumerate():
        for t in range(2):
            if not w.right_descents() >> t & 1:
                assert sigma_up(w, t, q) == t


@pytest.mark.parametrize(
    "desc, kind, classes",
    [("A2", "trivial", 13), ("A2", "descent", 9), ("A2", "one-class", 1), ("B2", "descent", 9),
     ("A3", "descent", 27), ("B3", "descent", 27)],
)
def test_facial_class_counts(desc, kind, classes):
    assert len(build_facial_congruence(system(desc), kind)) == classes


@pytest.mark.parametrize("desc, classes", [("A2", 11), ("B2", 13), ("A3", 45), ("B3", 63)])
def test_facial_cambrian_counts(desc, classes):
    S = system(desc)
    for c in coxeter_elements(S):
        assert len(build_facial_congruence(S, "cambrian", c)) == classes


def test_descent_singletons(A2):
    fc = build_facial_congruence(A2, "descent")
    names = sorted(format_coset(fc.complex[k]) for k in fc.singletons())
    assert names == sorted(["W_{}", "W_{s}", "W_{t}", "W_{s,t}", "stW_{s}", "tsW_{t}", "stsW_{}"])
    assert fc.singletons() == fc.singletons_by_size()


def test_cambrian_singletons(A2):
    fc = build_facial_congruence(A2, "cambrian", "st")
    assert len(fc.singletons()) == 10
    (big,) = [m for m in fc.members if len(m) > 1]
    assert sorted(format_coset(fc.complex[k]) for k in big) == ["tW_{s}", "tW_{}", "tsW_{}"]
    assert len(build_facial_congruence(A2, "trivial").singletons()) == 13


def test_class_root_sets(A2):
    fc = build_facial_congruence(A2, "descent")
    cx = fc.complex
    cid = fc.class_of[cx.index(coset(A2, "s", ""))]
    R = root_inversion_set(coset(A2, "s", "")) & root_inversion_set(coset(A2, "st", ""))
    assert fc.class_root_set(cid) == R == fc.class_root_set_by_definition(cid)
    single = fc.class_of[cx.index(coset(A2, "", "s"))]
    assert fc.class_root_set(single) == root_inversion_set(coset(A2, "", "s"))
    one = build_facial_congruence(A2, "one-class")
    expected = root_inversion_set(coset(A2, "", "")) & root_inversion_set(coset(A2, "sts", ""))
    assert one.class_root_set(0) == expected == one.class_root_set_by_definition(0) == 0


def test_weight_set_formula_is_a_cone_identity():
    # in I2(5) a descent class sweeps four chambers; the union over the class
    # picks up a weight that the bottom/top formula omits, same cone though
    fc = build_facial_congruence(system("I2:5"), "descent")
    differs = [c for c in range(len(fc)) if fc.class_weight_set(c) != fc.class_weight_set_by_definition(c)]
    assert differs
    assert all(fc.weight_cones_agree(c) for c in range(len(fc)))


def test_quotient(A2):
    q = QuotientLattice(build_facial_congruence(A2, "descent"))
    assert len(q) == 9 and not q.check_clauses()
    # the square: 4 vertices, 4 edges, 1 face; covers form the face lattice order
    assert len(q.edges) == 12
    t = QuotientLattice(build_facial_congruence(A2, "trivial"))
    assert len(t.edges) == len(CoxeterComplex.of(A2).lattice.edges)


def test_fan_cone_counts(A2):
    for kind, c, count in (("trivial", None, 13), ("descent", None, 9), ("cambrian", "st", 11)):
        cones = fan_cones(build_facial_congruence(A2, kind, c))
        assert len(cones) == count
        assert sum(1 for cone in cones if cone.dim == 2) == {13: 6, 9: 4, 11: 5}[count]


def test_nonsublattice_witness(A3):
    rep = nonsublattice_witness(A3, "srt")
    assert rep.confirmed
    assert rep.meet == coset(A3, "tsr", "t")
    assert is_c_sortable(A3.w0, "srt")
    assert not is_c_sortable(el(A3, "stsr"), "srt")


def test_singleton_conjecture_reports(A3):
    rep = singleton_conjecture(build_facial_congruence(A3, "descent"))
    assert rep.checked > 0 and isinstance(rep.counterexamples, list)


def test_one_class_projections(A2):
    p = one_class_projections(A2)
    assert validate_projections(p).ok
    assert len(congruence_from_projections(p)) == 1
