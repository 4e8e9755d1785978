"""Invariant suites run by ``coxlat check`` and by the test-suite.

Each suite yields :class:`CheckResult` records; nothing here raises on a
failed invariant, so one run reports every problem at once.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .congruence import (
    FacialCongruence,
    ProjectionPair,
    QuotientLattice,
    chamber_mismatches,
    conjugate_lemma_violations,
    contracted_join_irreducibles,
    coxeter_elements,
    facial_congruence,
    facial_proj_down_search,
    fan_cones,
    force_lemma_violations,
    is_c_antisortable,
    is_c_sortable,
    nonsublattice_witness,
    overlapping_cones,
    projections_for,
    restriction_violations,
    sigma_sets,
    singleton_conjecture,
    singleton_correspondence,
    validate_projections,
)
from .coxeter import (
    CoxeterSystem,
    InWI,
    Swap,
    build_system,
    deodhar_step,
    iter_subsets,
    parabolic_decompose,
    popcount,
)
from .errors import CoxlatError
from .facial import (
    CoxeterComplex,
    element_root_set,
    facial_covers,
    halfspace_witness,
    irreducibles,
    make_coset,
    mobius,
    psi1,
    psi2,
    root_descent_set,
    theta,
)
from .weak import minus_down, minus_up, plus_down, plus_up, weak_join, weak_meet

DEFAULT_SYSTEMS = ("A2", "B2", "I2:5", "A3", "B3")


@dataclass
class CheckResult:
    suite: str
    name: str
    system: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}/{self.name} [{self.system}]{extra} {self.seconds:.2f}s"


def _run(suite: str, system: CoxeterSystem, name: str, fn: Callable[[], object]) -> CheckResult:
    """Run one check; ``fn`` returns True/False, a list of failures, or a
    (ok, detail) pair."""
    t0 = time.perf_counter()
    try:
        out = fn()
        if isinstance(out, tuple):
            ok, detail = out
        elif isinstance(out, (list, set)):
            ok, detail = not out, (f"{len(out)} failures, e.g. {sorted(map(str, out))[:3]}" if out else "")
        else:
            ok, detail = bool(out), ""
    except (CoxlatError, AssertionError) as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(suite, name, system.label, ok, str(detail), time.perf_counter() - t0)


def _pairs(items, exhaustive: bool, sample: int, seed: int = 0):
    if exhaustive:
        return [(a, b) for a in items for b in items]
    rng = random.Random(seed)
    return [(rng.choice(items), rng.choice(items)) for _ in range(sample)]


# --------------------------------------------------------------------------
# coxeter_core


def coxeter_suite(S: CoxeterSystem, level: str = "exhaustive", sample: int = 10_000) -> Iterator[CheckResult]:
    name = "coxeter_core"
    group = S.enumerate()
    exhaustive = level == "exhaustive" and S.order <= 200
    inv = [w.inversion_set() for w in group]
    N = S.npos

    def root_system():
        bad = []
        if len(S.roots) != 2 * N:
            bad.append("|Phi| != 2|Phi+|")
        for i in range(S.rank):
            if sorted(S.simple_action[i]) != list(range(2 * N)):
                bad.append(f"s{i} not a permutation")
            for k in range(2 * N):
                if S.simple_action[i][S.neg(k)] != S.neg(S.simple_action[i][k]):
                    bad.append("action does not commute with negation")
        for i in range(S.rank):
            for j in range(S.rank):
                val = S.pair(S.coroots[i], S.fundamental_weights[j])
                if val != (1 if i == j else 0):
                    bad.append(f"<coroot {i}, weight {j}> = {val}")
        if any(S.w0.perm[k] < N for k in range(N)):
            bad.append("w0 keeps a positive root positive")
        return bad

    yield _run(name, S, "root_system", root_system)
    yield _run(name, S, "length_equals_inversions", lambda: [w for w in group if w.length != popcount(w.inversion_set())])
    yield _run(name, S, "group_order", lambda: (S.order == len({w.perm for w in group}), f"|W| = {S.order}"))

    def biconvex():
        bad = []
        pairs = [(a, b, S.root_index.get(tuple(x + y for x, y in zip(S.roots[a], S.roots[b]))))
                 for a in range(N) for b in range(N)]
        pairs = [(a, b, c) for a, b, c in pairs if c is not None]
        for w, n_w in zip(group, inv):
            comp = S.positive_mask & ~n_w
            for a, b, c in pairs:
                for X in (n_w, comp):
                    if X >> a & 1 and X >> b & 1 and not X >> c & 1:
                        bad.append(w)
        return bad

    yield _run(name, S, "biconvex_inversion_sets", biconvex)

    def prefix_definition():
        bad = []
        for (u, iu), (v, iv) in _pairs(list(zip(group, inv)), exhaustive, 2000):
            containment = iu & ~iv == 0
            prefix = u.length + (u.inverse() * v).length == v.length
            if containment != prefix:
                bad.append((u, v))
        return bad

    yield _run(name, S, "weak_order_prefix", prefix_definition)

    def brute(u_i, v_i, below=True):
        best = None
        for k in range(len(group)):
            if below:
                ok = inv[k] & ~inv[u_i] == 0 and inv[k] & ~inv[v_i] == 0
            else:
                ok = inv[u_i] & ~inv[k] == 0 and inv[v_i] & ~inv[k] == 0
            if ok and (best is None or (inv[best] & ~inv[k] == 0 if below else inv[k] & ~inv[best] == 0)):
                best = k
        return best

    def meet_join():
        bad = []
        idx = list(range(len(group)))
        for a, b in _pairs(idx, exhaustive, sample if S.order > 200 else 2000):
            m = S.index(weak_meet(group[a], group[b]))
            j = S.index(weak_join(group[a], group[b]))
            if m != brute(a, b, True) or j != brute(a, b, False):
                bad.append((group[a], group[b]))
        return bad

    yield _run(name, S, "meet_join_vs_bruteforce", meet_join)

    if S.rank <= 3:
        def closures():
            bad = []
            for (u, iu), (v, iv) in _pairs(list(zip(group, inv)), exhaustive, 2000):
                if weak_meet(u, v).inversion_set() != plus_down(S, iu & iv):
                    bad.append(("meet", u, v))
                if weak_join(u, v).inversion_set() != plus_up(S, iu | iv):
                    bad.append(("join", u, v))
            return bad

        yield _run(name, S, "meet_join_inversion_closures", closures)

    def deodhar():
        bad = []
        for I in iter_subsets(S.simple_mask):
            for x in group:
                if x.right_descents() & I:
                    continue
                for s in range(S.rank):
                    step = deodhar_step(s, x, I)
                    sx = x.left_mul(s)
                    in_q = not (sx.right_descents() & I)
                    swaps = [r for r in S.gens_of(I) if x.right_mul(r) == sx]
                    if isinstance(step, InWI):
                        ok = in_q and step.element == sx and not swaps
                    else:
                        ok = isinstance(step, Swap) and not in_q and swaps == [step.generator]
                    if not ok:
                        bad.append((s, x, I))
        return bad

    yield _run(name, S, "deodhar_lemma", deodhar)

    def parabolic():
        bad = []
        for I in iter_subsets(S.simple_mask):
            for w in group:
                top, low = parabolic_decompose(w, I)
                if (top * low != w or top.right_descents() & I or top.length + low.length != w.length
                        or any(s not in S.gens_of(I) for s in low.reduced_word())):
                    bad.append((w, I))
        return bad

    yield _run(name, S, "parabolic_decomposition", parabolic)

    def conjugation():
        w0 = S.w0
        conj = [(w0 * w * w0).inversion_set() for w in group]
        bad = []
        for a, b in _pairs(list(range(len(group))), exhaustive, 2000):
            if (inv[a] & ~inv[b] == 0) != (conj[a] & ~conj[b] == 0):
                bad.append((group[a], group[b]))
        return bad

    yield _run(name, S, "w0_conjugation_automorphism", conjugation)


# --------------------------------------------------------------------------
# facial_order


def facial_suite(S: CoxeterSystem, level: str = "exhaustive", sample: int = 10_000) -> Iterator[CheckResult]:
    name = "facial_order"
    cx = CoxeterComplex.of(S)
    n = len(cx)
    exhaustive = level == "exhaustive" and n <= 200
    idx = list(range(n))
    P, M = S.positive_mask, S.negative_mask

    yield _run(name, S, "complex_size", lambda: (n == cx.expected_size(), f"{n} cosets"))

    def injective():
        ok = len(set(cx.root_sets)) == n and len(set(cx.weight_sets)) == n
        return ok, ""

    yield _run(name, S, "root_weight_sets_injective", injective)

    def build():
        lat = cx.lattice  # verifies the three characterizations on every pair
        return True, f"{len(lat.edges)} covers"

    yield _run(name, S, "characterizations_agree", build)
    lat = cx.lattice

    def lattice_ops():
        bad = []
        for a, b in _pairs(idx, exhaustive, sample):
            if lat.meet(a, b) != lat.brute_meet(a, b) or lat.join(a, b) != lat.brute_join(a, b):
                bad.append((cx[a], cx[b]))
        return bad

    yield _run(name, S, "meet_join_vs_bruteforce", lattice_ops)

    def restriction():
        verts = [k for k in idx if cx[k].I == 0]
        bad = []
        for a, b in _pairs(verts, exhaustive, 2000):
            weak = cx[a].x.inversion_set() & ~cx[b].x.inversion_set() == 0
            if lat.leq(a, b) != weak:
                bad.append((cx[a], cx[b]))
            if cx[lat.meet(a, b)].I or cx[lat.join(a, b)].I:
                bad.append(("sublattice", cx[a], cx[b]))
        return bad

    yield _run(name, S, "vertex_restriction_and_sublattice", restriction)

    def split():
        bad = []
        for k, c in enumerate(cx.cosets):
            R = cx.root_sets[k]
            rx, rtop = element_root_set(c.x), element_root_set(cx.tops[k])
            if R != rx | rtop or R & M != rx & M or R & P != rtop & P:
                bad.append(c)
            if popcount(R) != S.npos + popcount(positive_roots_count(S, c.I)):
                bad.append(c)
            if root_descent_set(c) != (rx | rtop) & (S.simple_mask | S.simple_mask << S.npos):
                bad.append(c)
        return bad

    yield _run(name, S, "root_set_from_bottom_and_top", split)

    if S.rank <= 3:
        def root_meet_join():
            bad = []
            R = cx.root_sets
            for a, b in _pairs(idx, exhaustive, min(sample, 2000)):
                m, j = R[lat.meet(a, b)], R[lat.join(a, b)]
                if m & M != minus_up(S, (R[a] | R[b]) & M):
                    bad.append(("meet-", cx[a], cx[b]))
                if m & P & ~plus_down(S, R[a] & R[b]):
                    bad.append(("meet+", cx[a], cx[b]))
                if j & P != plus_up(S, (R[a] | R[b]) & P):
                    bad.append(("join+", cx[a], cx[b]))
                if j & M & ~minus_down(S, R[a] & R[b]):
                    bad.append(("join-", cx[a], cx[b]))
            return bad

        yield _run(name, S, "meet_join_root_sets", root_meet_join)

    if S.order <= 200:
        def mob():
            mu = lat.mobius_by_inversion()
            return [cx[k] for k in idx if mu[k] != mobius(cx[k])]

        yield _run(name, S, "mobius_closed_form", mob)

    def polarity():
        bad = []
        for k, c in enumerate(cx.cosets):
            W = cx.weight_sets[k]
            if popcount(W) != S.rank - popcount(c.I):
                bad.append(c)
                continue
            ws = [S.weights[i] for i in range(len(S.weights)) if W >> i & 1]
            for r in range(len(S.roots)):
                if cx.root_sets[k] >> r & 1 and any(S.pair(S.roots[r], w) > 0 for w in ws):
                    bad.append(c)
                    break
        return bad

    if S.rank <= 3:
        yield _run(name, S, "root_weight_polarity", polarity)

    def anti():
        bad = []
        images = [(cx.index(psi1(c)), cx.index(psi2(c)), cx.index(theta(c))) for c in cx.cosets]
        w0 = S.w0
        for k, c in enumerate(cx.cosets):
            p1 = images[k][0]
            if images[p1][0] != k:
                bad.append(("psi1 involution", c))
            if images[images[k][0]][1] != images[k][2]:
                bad.append(("theta = psi2 psi1", c))
            R = cx.root_sets[k]
            from .facial import image_of_set

            if cx.root_sets[p1] != image_of_set(w0, R) or cx.root_sets[images[k][1]] != S.negate_set(R):
                bad.append(("root sets", c))
        for a, b in _pairs(idx, exhaustive, 2000):
            le = lat.leq(a, b)
            if lat.leq(images[b][0], images[a][0]) != le or lat.leq(images[b][1], images[a][1]) != le:
                bad.append(("reversal", cx[a], cx[b]))
            if lat.leq(images[a][2], images[b][2]) != le:
                bad.append(("theta", cx[a], cx[b]))
        return bad

    yield _run(name, S, "anti_automorphisms", anti)

    def covers():
        bad = []
        for k, c in enumerate(cx.cosets):
            for d, tag in facial_covers(c):
                t1 = d.x == c.x and popcount(d.I) == popcount(c.I) + 1
                t2 = popcount(d.I) == popcount(c.I) - 1
                if (tag == 1) != t1 or (tag == 2) != t2:
                    bad.append(c)
        return bad

    yield _run(name, S, "cover_types", covers)
    yield _run(name, S, "irreducibles", lambda: (bool(irreducibles(lat)), ""))

    if S.rank <= 3:
        def halfspace():
            bad = []
            for k in idx if exhaustive else idx[:: max(1, n // 60)]:
                if halfspace_witness(S, cx.root_sets[k]) is None:
                    bad.append(cx[k])
            # sets missing both signs of a root are never root inversion sets
            if halfspace_witness(S, cx.root_sets[0] & ~(1 << S.npos)) is not None:
                bad.append("pairing")
            return bad

        yield _run(name, S, "halfspace_witness", halfspace)

    if S.types == [f"A{S.rank}"]:
        def type_a():
            from .typea import (decode, encode, format_partition, inversion_table,
                                inversion_table_from_roots, partition_covers)

            bad = []
            for c in cx.cosets:
                p = encode(c)
                if decode(S, p) != c or inversion_table(p) != inversion_table_from_roots(c):
                    bad.append(c)
                fc = sorted((format_partition(encode(d)), t) for d, t in facial_covers(c))
                pc = sorted((format_partition(q), t) for q, t in partition_covers(p))
                if fc != pc:
                    bad.append(c)
            return bad

        try:
            from .typea import _require_type_a

            _require_type_a(S)
            yield _run(name, S, "type_a_ordered_partitions", type_a)
        except CoxlatError:
            pass


def positive_roots_count(S: CoxeterSystem, I: int) -> int:
    from .facial import positive_roots_of

    return positive_roots_of(S, I)


# --------------------------------------------------------------------------
# congruence


def congruence_kinds(S: CoxeterSystem) -> list[tuple[str, Optional[tuple]]]:
    kinds: list[tuple[str, Optional[tuple]]] = [("trivial", None), ("one-class", None), ("descent", None)]
    kinds += [("cambrian", c) for c in coxeter_elements(S)]
    return kinds


def coxeter_catalan(S: CoxeterSystem) -> int:
    """Product of (h + e_i + 1) / (e_i + 1) from the degrees of the group."""
    degrees = _degrees(S)
    h = max(degrees)
    num = den = 1
    for d in degrees:
        num *= h + d
        den *= d
    return num // den


def _degrees(S: CoxeterSystem) -> list[int]:
    # Poincare polynomial prod (1 + q + ... + q^{d-1}) factored greedily
    counts: dict[int, int] = {}
    for w in S.enumerate():
        counts[w.length] = counts.get(w.length, 0) + 1
    poly = [counts.get(k, 0) for k in range(max(counts) + 1)]
    degrees = []
    for d in range(max(counts) + 1, 1, -1):
        while True:
            q, r = _divide(poly, [1] * d)
            if r:
                break
            poly = q
            degrees.append(d)
    return sorted(degrees)


def _divide(poly, div):
    poly = list(poly)
    if len(poly) < len(div):
        return poly, True
    out = [0] * (len(poly) - len(div) + 1)
    for i in range(len(out) - 1, -1, -1):
        coef = poly[i + len(div) - 1]
        out[i] = coef
        for j, dv in enumerate(div):
            poly[i + j] -= coef * dv
    return out, any(poly)


def congruence_suite(S: CoxeterSystem, level: str = "exhaustive") -> Iterator[CheckResult]:
    name = "congruence"
    cx = CoxeterComplex.of(S)
    group = S.enumerate()
    fan_ok = S.rank <= 3
    for kind, c in congruence_kinds(S):
        p = projections_for(S, kind, c)
        label = p.name
        report = validate_projections(p)
        yield _run(name, S, f"{label}/projections_valid", lambda: (report.ok, report.clause or ""))
        if not report.ok:
            continue
        holder: dict = {}

        def build():
            holder["fc"] = facial_congruence(cx, p)
            return True, f"{len(holder['fc'])} facial classes"

        yield _run(name, S, f"{label}/facial_fibers_match_keys", build)
        if "fc" not in holder:
            continue
        fc: FacialCongruence = holder["fc"]
        yield from _facial_congruence_checks(S, fc, p, level, fan_ok, label)

        if kind == "cambrian":
            def sortable():
                bad = []
                for k, w in enumerate(group):
                    if is_c_sortable(w, c) != (p.down[k] == k):
                        bad.append(("sortable", w))
                    if is_c_antisortable(w, c) != (p.up[k] == k):
                        bad.append(("antisortable", w))
                count = sum(1 for k in range(len(group)) if p.down[k] == k)
                if count != coxeter_catalan(S):
                    bad.append(("count", count))
                return bad

            yield _run(name, S, f"{label}/sortable_fixed_points", sortable)

            def cambrian_singletons():
                bad = []
                single = set(fc.singletons_by_size())
                for k, coset in enumerate(cx.cosets):
                    crit = is_c_antisortable(coset.x, c) and is_c_sortable(cx.tops[k], c)
                    if crit != (k in single):
                        bad.append(coset)
                return bad

            yield _run(name, S, f"{label}/cambrian_singletons", cambrian_singletons)
        if kind == "descent":
            def descent_singletons():
                single = set(fc.singletons_by_size())
                return [coset for k, coset in enumerate(cx.cosets)
                        if (coset.x.length == 0 or cx.tops[k] == S.w0) != (k in single)]

            yield _run(name, S, f"{label}/descent_singletons", descent_singletons)

            def boolean_quotient():
                return (len(fc.base) == 2 ** S.rank and len(fc) == 3 ** S.rank, f"{len(fc)} classes")

            yield _run(name, S, f"{label}/cube_face_count", boolean_quotient)

    if S.label.startswith("A3") and S.names == ["r", "s", "t"]:
        yield _run(name, S, "nonsublattice_witness", lambda: (nonsublattice_witness(S).confirmed, ""))


def _facial_congruence_checks(S, fc: FacialCongruence, p: ProjectionPair, level, fan_ok, label):
    name = "congruence"
    cx = fc.complex
    lat = cx.lattice
    n = len(cx)
    P, M = S.positive_mask, S.negative_mask

    def pi_laws():
        up, down = fc.pi_up, fc.pi_down
        bad = []
        for k in range(n):
            if not (lat.leq(down[k], k) and lat.leq(k, up[k])):
                bad.append(("i", cx[k]))
            if up[up[k]] != up[k] or up[down[k]] != up[k] or down[down[k]] != down[k] or down[up[k]] != down[k]:
                bad.append(("ii", cx[k]))
            for j in lat.up[k]:
                if not (lat.leq(up[k], up[j]) and lat.leq(down[k], down[j])):
                    bad.append(("iii", cx[k]))
        return bad

    yield _run(name, S, f"{label}/facial_projection_laws", pi_laws)

    def down_oracle():
        return [cx[k] for k in range(n) if cx.index(facial_proj_down_search(cx[k], p)) != fc.pi_down[k]]

    yield _run(name, S, f"{label}/pi_down_matches_search", down_oracle)

    def sigmas():
        bad = []
        for k, c in enumerate(cx.cosets):
            up_set, down_set = sigma_sets(c.x, c.I, p)
            z = p.pi_up(c.x)
            if up_set & z.right_descents():
                bad.append(("sigma_up domain", c))
            if cx.index(make_coset(z, up_set)) != fc.pi_up[k]:
                bad.append(("Pi_up = pi_up(x) W_Sigma", c))
            y = p.pi_down(cx.tops[k])
            if cx.index(make_coset(y, down_set)) != fc.pi_down[k]:
                bad.append(("Pi_down = pi_down(x w) W_Sigma", c))
            if p.up[S.index(c.x)] == S.index(c.x) and up_set != c.I:
                bad.append(("fixed point keeps I", c))
        return bad

    yield _run(name, S, f"{label}/sigma_sets", sigmas)
    yield _run(name, S, f"{label}/conjugate_lemma", lambda: conjugate_lemma_violations(fc))
    yield _run(name, S, f"{label}/force_lemmas", lambda: force_lemma_violations(fc))
    yield _run(name, S, f"{label}/restriction", lambda: not restriction_violations(fc))

    def contracted():
        direct, closed = contracted_join_irreducibles(fc)
        return direct == closed, f"{len(direct)} contracted"

    yield _run(name, S, f"{label}/contracted_join_irreducibles", contracted)
    yield _run(name, S, f"{label}/singletons_closed_form",
               lambda: fc.singletons() == fc.singletons_by_size())

    def class_sets():
        bad = []
        for cid in range(len(fc)):
            R = fc.class_root_set(cid)
            if R != fc.class_root_set_by_definition(cid):
                bad.append(("R", cid))
            if not fc.weight_cones_agree(cid):
                bad.append(("omega", cid))
            if R & P != cx.root_sets[fc.bottoms[cid]] & P or R & M != cx.root_sets[fc.tops[cid]] & M:
                bad.append(("split", cid))
            if S.rank <= 3:
                W = fc.class_weight_set(cid)
                ws = [S.weights[i] for i in range(len(S.weights)) if W >> i & 1]
                for r in range(len(S.roots)):
                    if R >> r & 1 and any(S.pair(S.roots[r], w) > 0 for w in ws):
                        bad.append(("polar", cid))
                        break
        return bad

    yield _run(name, S, f"{label}/class_root_weight_sets", class_sets)

    def clauses():
        q = QuotientLattice(fc)
        bad = q.check_clauses()
        return [(fc.describe(a), fc.describe(b)) for a, b, _ in bad]

    yield _run(name, S, f"{label}/quotient_clauses", clauses)

    if fan_ok and label != "one-class":
        holder: dict = {}

        def cones():
            holder["cones"] = fan_cones(fc)
            return True, f"{len(holder['cones'])} cones"

        yield _run(name, S, f"{label}/fan_cones", cones)
        if "cones" in holder:
            cs = holder["cones"]
            yield _run(name, S, f"{label}/fan_singleton_correspondence",
                       lambda: singleton_correspondence(fc, cs))
            yield _run(name, S, f"{label}/fan_disjoint_relative_interiors",
                       lambda: overlapping_cones(fc, cs))
            yield _run(name, S, f"{label}/fan_chambers", lambda: chamber_mismatches(fc, cs))

    def conjecture():
        rep = singleton_conjecture(fc)
        detail = "confirmed" if rep.confirmed else f"counterexamples: {rep.counterexamples[:3]}"
        return True, f"experimental, {rep.checked} cosets, {detail}"

    yield _run(name, S, f"{label}/singleton_conjecture", conjecture)


# --------------------------------------------------------------------------
# io


def io_suite(S: CoxeterSystem, level: str = "exhaustive") -> Iterator[CheckResult]:
    import tempfile

    from .cache import Cache
    from .serialize import complex_document, export_dot, export_json, import_json, lattice_document

    name = "io_cli"
    cx = CoxeterComplex.of(S)

    def roundtrip():
        docs = [complex_document(cx), lattice_document(cx.lattice)]
        return all(import_json(export_json(d)) == d for d in docs)

    yield _run(name, S, "json_roundtrip", roundtrip)
    yield _run(name, S, "dot_deterministic",
               lambda: export_dot(lattice_document(cx.lattice)) == export_dot(lattice_document(CoxeterComplex(S).lattice)))

    def cache_identity():
        with tempfile.TemporaryDirectory() as tmp:
            cache = Cache(tmp)
            key = {"system": S.label, "structure": "lattice"}
            doc = lattice_document(cx.lattice)
            first = cache.get_or_compute(key, lambda: export_json(doc))
            second = cache.get_or_compute(key, lambda: "recomputed")
            return first == second == export_json(doc)

    yield _run(name, S, "cache_hit_identical", cache_identity)


SUITES = {
    "coxeter_core": coxeter_suite,
    "facial_order": facial_suite,
    "congruence": congruence_suite,
    "io_cli": io_suite,
}


def run_checks(systems=DEFAULT_SYSTEMS, level: str = "exhaustive", suites=None) -> Iterator[CheckResult]:
    for desc in systems:
        S = desc if isinstance(desc, CoxeterSystem) else build_system(desc)
        for key, suite in SUITES.items():
            if suites and key not in suites:
                continue
            yield from suite(S, level)
