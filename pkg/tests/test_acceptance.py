"""Acceptance criteria 1-11.  Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are written past
pytest's output capture).
"""

import random
import time

import pytest

from coxlat.checks import DEFAULT_SYSTEMS, run_checks
from coxlat.congruence import (
    QuotientLattice,
    build_facial_congruence,
    coxeter_elements,
    fan_cones,
    nonsublattice_witness,
    overlapping_cones,
    projections_for,
    singleton_correspondence,
)
from coxlat.coxeter import build_system
from coxlat.facial import CoxeterComplex, FacialLattice, facial_join, facial_meet, make_coset, mobius

from .conftest import system


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:2d} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def congruences(S, kinds=("descent", "cambrian")):
    for kind in kinds:
        if kind == "cambrian":
            for c in coxeter_elements(S):
                yield kind, c
        else:
            yield kind, None


def test_01_complex_sizes(report):
    expected = {"A2": 13, "B2": 17, "A3": 75, "B3": 147, "H3": 363}
    t0 = time.perf_counter()
    got = {}
    for desc in expected:
        S = build_system(desc)  # fresh, uncached
        cx = CoxeterComplex(S)
        got[desc] = (len(cx), cx.expected_size())
    elapsed = time.perf_counter() - t0
    ok = all(got[d] == (n, n) for d, n in expected.items()) and elapsed < 5
    report(1, ok, f"sizes {', '.join(f'{d}={got[d][0]}' for d in expected)}; {elapsed:.2f}s (< 5s)")


def test_02_lattice_property(report):
    details = []
    ok = True
    for desc in ("A2", "B2", "I2:5", "I2:6", "A3", "B3"):
        t0 = time.perf_counter()
        lat = CoxeterComplex.of(system(desc)).lattice
        n = len(lat)
        bad = sum(
            1
            for a in range(n)
            for b in range(n)
            if lat.brute_meet(a, b) != lat.meet(a, b) or lat.brute_join(a, b) != lat.join(a, b)
        )
        elapsed = time.perf_counter() - t0
        ok &= bad == 0 and (desc != "B3" or elapsed < 60)
        details.append(f"{desc} {n * n} pairs/{bad} bad")
    lat = CoxeterComplex.of(system("H3")).lattice
    rng = random.Random(2024)
    n = len(lat)
    bad = 0
    for _ in range(10_000):
        a, b = rng.randrange(n), rng.randrange(n)
        bad += lat.brute_meet(a, b) != lat.meet(a, b) or lat.brute_join(a, b) != lat.join(a, b)
    ok &= bad == 0
    details.append(f"H3 10000 random/{bad} bad")
    report(2, ok, "; ".join(details))


def test_03_worked_examples(report):
    A3, B3 = system("A3"), system("B3")

    def coset(S, word, gens):
        return make_coset(S.from_word(word), S.mask_of(gens))

    meet = facial_meet(coset(A3, "tsr", "st"), coset(A3, "rts", ""))
    join = facial_join(coset(B3, "rst", "rs"), coset(B3, "tsrs", ""))
    ok = meet == coset(A3, "t", "r") and join == coset(B3, "rtsrtst", "r")
    ok &= join.x == B3.from_word("rtsrtst") and join.I == B3.mask_of("r")
    report(3, ok, f"A3 meet = {meet}; B3 join = {join} (= rtsrtstW_{{r}} as a coset)")


def test_04_characterizations(report):
    details = []
    ok = True
    for desc in ("A2", "B2", "A3", "B3"):
        cx = CoxeterComplex(system(desc))
        try:
            pairs = FacialLattice(cx, verify=False).verify_characterizations()
            details.append(f"{desc} {pairs} pairs/0 disagreements")
        except Exception as exc:  # CharacterizationMismatch
            ok = False
            details.append(f"{desc}: {exc}")
    report(4, ok, "; ".join(details))


def test_05_mobius(report):
    details = []
    ok = True
    for desc in ("A2", "B2", "A3"):
        lat = CoxeterComplex.of(system(desc)).lattice
        mu = lat.mobius_by_inversion()
        bad = sum(mu[k] != mobius(c) for k, c in enumerate(lat.complex))
        ok &= bad == 0
        details.append(f"{desc} {len(mu)} cosets/{bad} bad")
    report(5, ok, "; ".join(details))


def test_06_class_counts(report):
    A2, A3, B3 = system("A2"), system("A3"), system("B3")
    got = {
        "descent A2": {len(build_facial_congruence(A2, "descent"))},
        "descent A3": {len(build_facial_congruence(A3, "descent"))},
        "cambrian A2": {len(build_facial_congruence(A2, "cambrian", c)) for c in coxeter_elements(A2)},
        "cambrian A3": {len(build_facial_congruence(A3, "cambrian", c)) for c in coxeter_elements(A3)},
    }
    for S in (A2, A3, B3):
        counts = set()
        for c in coxeter_elements(S):
            p = projections_for(S, "cambrian", c)
            counts.add(sum(1 for k in range(S.order) if p.down[k] == k))
        got[f"sortable {S.label}"] = counts
    expected = {"descent A2": {9}, "descent A3": {27}, "cambrian A2": {11}, "cambrian A3": {45},
                "sortable A2": {5}, "sortable A3": {14}, "sortable B3": {20}}
    report(6, got == expected, "; ".join(f"{k} {sorted(v)}" for k, v in got.items()))


def test_07_fiber_consistency(report):
    details = []
    ok = True
    for desc in ("A2", "B2", "A3", "B3"):
        S = system(desc)
        checked = 0
        for kind, c in congruences(S):
            fc = build_facial_congruence(S, kind, c)
            keyed = {}
            for k, key in enumerate(fc.keys):
                keyed.setdefault(key, set()).add(k)
            by_up, by_down = {}, {}
            for k in range(len(fc.complex)):
                by_up.setdefault(fc.pi_up[k], set()).add(k)
                by_down.setdefault(fc.pi_down[k], set()).add(k)
            parts = [{frozenset(v) for v in d.values()} for d in (keyed, by_up, by_down)]
            ok &= parts[0] == parts[1] == parts[2]
            checked += 1
        details.append(f"{desc} {checked} congruences")
    report(7, ok, "; ".join(details))


def test_08_quotient_clauses(report):
    details = []
    ok = True
    for desc in ("A2", "B2", "A3"):
        S = system(desc)
        pairs = bad = 0
        for kind, c in congruences(S):
            q = QuotientLattice(build_facial_congruence(S, kind, c))
            pairs += len(q) ** 2
            bad += len(q.check_clauses())
        ok &= bad == 0
        details.append(f"{desc} {pairs} class pairs/{bad} bad")
    report(8, ok, "; ".join(details))


def test_09_fans(report):
    details = []
    ok = True
    for desc in ("A2", "B2", "A3"):
        S = system(desc)
        overlaps = mismatches = 0
        for kind, c in congruences(S):
            fc = build_facial_congruence(S, kind, c)
            cones = fan_cones(fc)
            overlaps += len(overlapping_cones(fc, cones))
            mismatches += len(singleton_correspondence(fc, cones))
        ok &= overlaps == 0 and mismatches == 0
        details.append(f"{desc} overlaps {overlaps}, singleton mismatches {mismatches}")
    report(9, ok, "; ".join(details))


def test_10_nonsublattice(report):
    rep = nonsublattice_witness(system("A3"), "s,r,t")
    report(10, rep.confirmed, " | ".join(rep.lines()))


def test_11_property_suites(report):
    t0 = time.perf_counter()
    results = list(run_checks(DEFAULT_SYSTEMS, "exhaustive"))
    elapsed = time.perf_counter() - t0
    failed = [r.line() for r in results if not r.ok]
    ok = not failed and elapsed < 300
    detail = f"{len(results)} checks on {', '.join(DEFAULT_SYSTEMS)}, {len(failed)} failed, {elapsed:.1f}s (< 300s)"
    if failed:
        detail += "; " + "; ".join(failed[:5])
    report(11, ok, detail)
