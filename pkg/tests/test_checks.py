from coxlat.checks import _run, coxeter_catalan, run_checks

from .conftest import system


def test_failures_are_reported_not_raised():
    S = system("A2")
    assert _run("x", S, "ok", lambda: []).ok
    bad = _run("x", S, "list", lambda: ["w"])
    assert not bad.ok and "1 failures" in bad.detail
    boom = _run("x", S, "raises", lambda: (_ for _ in ()).throw(AssertionError("nope")))
    assert not boom.ok and "nope" in boom.detail
    assert bad.line().startswith("FAIL x/list [A2]")


def test_catalan_from_degrees():
    assert [coxeter_catalan(system(d)) for d in ("A2", "B2", "A3", "B3", "H3")] == [5, 6, 14, 20, 32]


def test_fast_level_on_b2():
    results = list(run_checks(["B2"], "fast"))
    assert results and all(r.ok for r in results)
    assert {r.suite for r in results} == {"coxeter_core", "facial_order", "congruence", "io_cli"}
