"""Lattice congruences of the weak order and their facial extensions.

A congruence of the weak order is given by its up and down projections,
stored as index arrays over ``system.enumerate()``.  A facial congruence is
the induced congruence on the Coxeter complex: two cosets are equivalent
exactly when their minimal elements and their maximal elements are.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .coxeter import CoxeterSystem, Element, iter_subsets, left_parabolic_factor, popcount
from .errors import Contracted, FiberMismatch, InvalidProjections, NotCoxeterElement
from .exact_lp import cone_contains, rank as vector_rank, relative_interiors_meet
from .facial import (
    CoxeterComplex,
    ParabolicCoset,
    facial_meet,
    format_coset,
    make_coset,
    psi1,
    wo,
)
from .weak import weak_leq


# --------------------------------------------------------------------------
# Projection pairs on the group


@dataclass
class ProjectionPair:
    """Up and down projections as index arrays over the group enumeration."""

    system: CoxeterSystem
    up: list[int]
    down: list[int]
    name: str = "custom"

    def pi_up(self, w: Element) -> Element:
        return self.system.element(self.up[self.system.index(w)])

    def pi_down(self, w: Element) -> Element:
        return self.system.element(self.down[self.system.index(w)])


def _tabulate(system: CoxeterSystem, fn: Callable[[Element], Element]) -> list[int]:
    return [system.index(fn(w)) for w in system.enumerate()]


def identity_projections(system: CoxeterSystem) -> ProjectionPair:
    ids = list(range(system.order))
    return ProjectionPair(system, ids, list(ids), "trivial")


def one_class_projections(system: CoxeterSystem) -> ProjectionPair:
    top, bottom = system.index(system.w0), 0
    return ProjectionPair(system, [top] * system.order, [bottom] * system.order, "one-class")


def descent_projections(system: CoxeterSystem) -> ProjectionPair:
    S = system.simple_mask
    w0 = system.w0

    def down(w):
        return wo(system, w.left_descents())

    def up(w):
        # the class maximum; D_L(w_{o,K} w_o) = S minus K
        return wo(system, S & ~w.left_descents()) * w0

    return ProjectionPair(system, _tabulate(system, up), _tabulate(system, down), "descent")


def parse_coxeter_element(system: CoxeterSystem, c) -> tuple[int, ...]:
    """Normalize a Coxeter element given as a word (names, indices or a
    comma-separated string) into a tuple of generator indices."""
    if isinstance(c, str):
        parts = [p for p in c.replace(" ", "").split(",") if p] if "," in c else list(c)
    else:
        parts = list(c)
    try:
        word = tuple(p if isinstance(p, int) else system.gen_index(p) for p in parts)
    except Exception as exc:
        raise NotCoxeterElement(str(exc)) from None
    if sorted(word) != list(range(system.rank)):
        raise NotCoxeterElement(
            f"{system.format_word(word)} must use every generator exactly once"
        )
    return word


class _Cambrian:
    """Memoized recursion for the Cambrian down projection."""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.memo: dict = {}

    def down(self, c: tuple, w: Element) -> Element:
        if w.length == 0 or not c:
            return self.system.identity
        key = (c, w.perm)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        s = c[0]
        if w.left_descents() >> s & 1:
            out = self.down(c[1:] + (s,), w.left_mul(s)).left_mul(s)
        else:
            J = 0
            for g in c[1:]:
                J |= 1 << g
            w_J, _ = left_parabolic_factor(w, J)
            out = self.down(c[1:], w_J)
        self.memo[key] = out
        return out


def _cambrian(system: CoxeterSystem) -> _Cambrian:
    cam = system.__dict__.get("_cambrian")
    if cam is None:
        cam = system.__dict__["_cambrian"] = _Cambrian(system)
    return cam


def cambrian_pi_down(c, w: Element) -> Element:
    word = parse_coxeter_element(w.system, c)
    return _cambrian(w.system).down(word, w)


def cambrian_pi_up(c, w: Element) -> Element:
    sysm = w.system
    word = parse_coxeter_element(sysm, c)
    w0 = sysm.w0
    return _cambrian(sysm).down(tuple(reversed(word)), w * w0) * w0


def cambrian_projections(system: CoxeterSystem, c) -> ProjectionPair:
    word = parse_coxeter_element(system, c)
    return ProjectionPair(
        system,
        _tabulate(system, lambda w: cambrian_pi_up(word, w)),
        _tabulate(system, lambda w: cambrian_pi_down(word, w)),
        "cambrian:" + ",".join(system.names[i] for i in word),
    )


def sorting_blocks(w: Element, c) -> list[int]:
    """Blocks ``K_1, K_2, ...`` (bit-sets) of the c-sorting word of ``w``."""
    word = parse_coxeter_element(w.system, c)
    blocks = []
    v = w
    while v.length:
        block = 0
        for s in word:
            if v.left_descents() >> s & 1:
                v = v.left_mul(s)
                block |= 1 << s
        blocks.append(block)
    return blocks


def is_c_sortable(w: Element, c) -> bool:
    blocks = sorting_blocks(w, c)
    return all(b & a == b for a, b in zip(blocks, blocks[1:]))


def is_c_antisortable(w: Element, c) -> bool:
    word = parse_coxeter_element(w.system, c)
    return is_c_sortable(w * w.system.w0, tuple(reversed(word)))


def coxeter_elements(system: CoxeterSystem) -> list[tuple[int, ...]]:
    """All orderings of the generators (each gives a Coxeter element word)."""
    from itertools import permutations

    return list(permutations(range(system.rank)))


def projections_for(system: CoxeterSystem, kind: str, c=None) -> ProjectionPair:
    if kind == "trivial":
        return identity_projections(system)
    if kind == "one-class":
        return one_class_projections(system)
    if kind == "descent":
        return descent_projections(system)
    if kind == "cambrian":
        if c is None:
            raise NotCoxeterElement("the cambrian congruence needs a Coxeter element")
        return cambrian_projections(system, c)
    raise ValueError(f"unknown congruence kind {kind!r}")


# --------------------------------------------------------------------------
# Validation and generic congruences


@dataclass
class ValidationReport:
    ok: bool
    clause: Optional[str] = None  # "i", "ii", "iii" or "fibers"
    witness: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.ok


def validate_projections(p: ProjectionPair) -> ValidationReport:
    """Check the three projection conditions, then fiber coincidence."""
    sysm = p.system
    group = sysm.enumerate()
    inv = [w.inversion_set() for w in group]
    up, down = p.up, p.down

    def leq(a, b):
        return inv[a] & ~inv[b] == 0

    for k in range(len(group)):
        if not (leq(down[k], k) and leq(k, up[k])):
            return ValidationReport(False, "i", (group[k],), "down(x) <= x <= up(x) fails")
    for k in range(len(group)):
        if up[up[k]] != up[k] or up[down[k]] != up[k] or down[down[k]] != down[k] or down[up[k]] != down[k]:
            return ValidationReport(False, "ii", (group[k],), "projection composition law fails")
    for k, w in enumerate(group):
        d = w.right_descents()
        for s in range(sysm.rank):
            if d >> s & 1:
                continue
            j = sysm.index(w.right_mul(s))
            if not (leq(up[k], up[j]) and leq(down[k], down[j])):
                return ValidationReport(False, "iii", (group[k], group[j]), "projection not order preserving")
    by_down: dict[int, int] = {}
    by_up: dict[int, int] = {}
    for k in range(len(group)):
        if by_down.setdefault(down[k], up[k]) != up[k] or by_up.setdefault(up[k], down[k]) != down[k]:
            return ValidationReport(False, "fibers", (group[k],), "fibers of up and down differ")
    return ValidationReport(True)


class Congruence:
    """A partition of an indexed poset into intervals ``[bottom, top]``.

    Classes are numbered by increasing bottom index.
    """

    def __init__(self, down: Sequence[int], up: Sequence[int]):
        bottoms = sorted(set(down))
        cid = {b: i for i, b in enumerate(bottoms)}
        self.class_of = [cid[d] for d in down]
        self.bottoms = bottoms
        self.tops = [0] * len(bottoms)
        self.members: list[list[int]] = [[] for _ in bottoms]
        for k, d in enumerate(down):
            self.members[cid[d]].append(k)
            self.tops[cid[d]] = up[k]
        self.down = list(down)
        self.up = list(up)

    def __len__(self):
        return len(self.bottoms)

    def equivalent(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def class_sizes(self) -> list[int]:
        return [len(m) for m in self.members]

    def partition(self) -> set[frozenset]:
        return {frozenset(m) for m in self.members}


def congruence_from_projections(p: ProjectionPair) -> Congruence:
    report = validate_projections(p)
    if not report:
        raise InvalidProjections(f"clause {report.clause}: {report.message} at {report.witness}")
    cong = Congruence(p.down, p.up)
    cong.projections = p
    sysm = p.system
    group = sysm.enumerate()
    inv = [w.inversion_set() for w in group]
    for cid, members in enumerate(cong.members):
        lo, hi = inv[cong.bottoms[cid]], inv[cong.tops[cid]]
        interval = [k for k in range(len(group)) if lo & ~inv[k] == 0 and inv[k] & ~hi == 0]
        if interval != members:
            raise InvalidProjections(f"class of {group[cong.bottoms[cid]]} is not an interval")
    return cong


def weak_congruence(system: CoxeterSystem, kind: str, c=None) -> Congruence:
    return congruence_from_projections(projections_for(system, kind, c))


# --------------------------------------------------------------------------
# Facial projections and transport sets


def _equiv(p: ProjectionPair, u: Element, v: Element) -> bool:
    sysm = p.system
    return p.down[sysm.index(u)] == p.down[sysm.index(v)]


def facial_proj_up(c: ParabolicCoset, p: ProjectionPair) -> ParabolicCoset:
    z = p.pi_up(c.x)
    K = (z.inverse() * p.pi_up(c.top)).left_descents()
    return make_coset(z, K)


def transported(p: ProjectionPair) -> ProjectionPair:
    """The congruence carried by ``y -> w_o y`` (up and down swap roles)."""
    sysm = p.system
    w0 = sysm.w0
    flip = [sysm.index(w0 * w) for w in sysm.enumerate()]
    up = [flip[p.down[flip[k]]] for k in range(sysm.order)]
    down = [flip[p.up[flip[k]]] for k in range(sysm.order)]
    return ProjectionPair(sysm, up, down, p.name + "'")


def facial_proj_down(c: ParabolicCoset, p: ProjectionPair, flipped: Optional[ProjectionPair] = None) -> ParabolicCoset:
    if flipped is None:
        flipped = transported(p)
    return psi1(facial_proj_up(psi1(c), flipped))


def facial_proj_down_search(c: ParabolicCoset, p: ProjectionPair) -> ParabolicCoset:
    """Oracle for the down projection: largest coset with top
    ``pi_down(x w_{o,I})`` whose minimum stays above ``pi_down(x)``."""
    y = p.pi_down(c.top)
    low = p.pi_down(c.x)
    valid = [K for K in iter_subsets(y.right_descents()) if weak_leq(low, y * wo(y.system, K))]
    best = 0
    for K in valid:
        best |= K
    if best not in valid:
        raise AssertionError("no largest coset in the down interval")
    return make_coset(y, best)


def facial_proj(c: ParabolicCoset, p: ProjectionPair) -> tuple[ParabolicCoset, ParabolicCoset]:
    """``(Pi_up(c), Pi_down(c))``."""
    return facial_proj_up(c, p), facial_proj_down(c, p)


def sigma_up(x: Element, t: int, p: ProjectionPair) -> int:
    if x.right_descents() >> t & 1:
        raise ValueError("t must not be a right descent of x")
    xt = x.right_mul(t)
    if _equiv(p, x, xt):
        raise Contracted(f"{x} is congruent to {xt}")
    z = p.pi_up(x)
    dz = z.right_descents()
    hits = []
    for s in range(x.system.rank):
        if dz >> s & 1:
            continue
        zs = z.right_mul(s)
        if weak_leq(xt, zs) and _equiv(p, xt, zs):
            hits.append(s)
    if len(hits) != 1:
        raise AssertionError(f"sigma_up({x}, {t}) has {len(hits)} candidates")
    return hits[0]


def sigma_sets(x: Element, I: int, p: ProjectionPair) -> tuple[int, int]:
    """``(Sigma_up(x, I), Sigma_down(x, I))`` as generator bit-sets."""
    sysm = x.system
    up = 0
    for t in sysm.gens_of(I):
        if not _equiv(p, x, x.right_mul(t)):
            up |= 1 << sigma_up(x, t, p)
    y = p.pi_down(x * wo(sysm, I))
    found = []
    for K in iter_subsets(y.right_descents()):
        v = y * wo(sysm, K)
        if weak_leq(v, x) and _equiv(p, v, x):
            found.append(K)
    if len(found) != 1:
        raise AssertionError(f"Sigma_down has {len(found)} candidates")
    return up, found[0]


# --------------------------------------------------------------------------
# Facial congruences


class FacialCongruence:
    """The facial congruence induced on the Coxeter complex by ``base``."""

    def __init__(self, complex_: CoxeterComplex, base: Congruence, projections: ProjectionPair):
        self.complex = complex_
        self.base = base
        self.projections = projections
        sysm = complex_.system
        index = sysm.index
        keys = [
            (base.class_of[index(c.x)], base.class_of[index(top)])
            for c, top in zip(complex_.cosets, complex_.tops)
        ]
        flipped = transported(projections)
        self.pi_up = [complex_.index(facial_proj_up(c, projections)) for c in complex_.cosets]
        self.pi_down = [complex_.index(facial_proj_down(c, projections, flipped)) for c in complex_.cosets]
        self.cong = Congruence(self.pi_down, self.pi_up)
        keyed: dict[tuple, set] = {}
        for k, key in enumerate(keys):
            keyed.setdefault(key, set()).add(k)
        if {frozenset(v) for v in keyed.values()} != self.cong.partition():
            raise FiberMismatch("Pi fibers differ from the classes keyed by (class(x), class(top))")
        by_up: dict[int, set] = {}
        for k, u in enumerate(self.pi_up):
            by_up.setdefault(u, set()).add(k)
        if {frozenset(v) for v in by_up.values()} != self.cong.partition():
            raise FiberMismatch("fibers of Pi_up and Pi_down differ")
        self.keys = keys

    @property
    def name(self) -> str:
        return self.projections.name

    def __len__(self):
        return len(self.cong)

    @property
    def class_of(self) -> list[int]:
        return self.cong.class_of

    @property
    def members(self) -> list[list[int]]:
        return self.cong.members

    @property
    def bottoms(self) -> list[int]:
        return self.cong.bottoms

    @property
    def tops(self) -> list[int]:
        return self.cong.tops

    def class_root_set(self, cid: int) -> int:
        R = self.complex.root_sets
        return R[self.bottoms[cid]] & R[self.tops[cid]]

    def class_weight_set(self, cid: int) -> int:
        W = self.complex.weight_sets
        return W[self.bottoms[cid]] | W[self.tops[cid]]

    def class_root_set_by_definition(self, cid: int) -> int:
        acc = self.complex.system.all_mask
        for k in self.members[cid]:
            acc &= self.complex.root_sets[k]
        return acc

    def class_weight_set_by_definition(self, cid: int) -> int:
        acc = 0
        for k in self.members[cid]:
            acc |= self.complex.weight_sets[k]
        return acc

    def weight_cones_agree(self, cid: int) -> bool:
        """Whether the formula and the definitional weight sets span the same
        cone (the sets themselves can differ once a class sweeps past more
        than two chambers of a rank-two face)."""
        weights = self.complex.system.weights
        a, b = self.class_weight_set(cid), self.class_weight_set_by_definition(cid)
        if a & ~b:
            return False
        gens = [weights[k] for k in range(len(weights)) if a >> k & 1]
        return all(cone_contains(gens, weights[k]) for k in range(len(weights)) if (b & ~a) >> k & 1)

    def singletons(self) -> list[int]:
        """Facial singletons by the closed criterion."""
        p = self.projections
        sysm = self.complex.system
        out = []
        for k, c in enumerate(self.complex.cosets):
            top = self.complex.tops[k]
            if p.up[sysm.index(c.x)] == sysm.index(c.x) and p.down[sysm.index(top)] == sysm.index(top):
                out.append(k)
        return out

    def singletons_by_size(self) -> list[int]:
        return sorted(m[0] for m in self.members if len(m) == 1)

    def describe(self, cid: int) -> str:
        cx = self.complex
        return "{" + ", ".join(format_coset(cx[k]) for k in self.members[cid]) + "}"


def facial_congruence(complex_: CoxeterComplex, base, projections: Optional[ProjectionPair] = None) -> FacialCongruence:
    """Build the facial congruence; ``base`` may be a Congruence (built from
    projections) or a ProjectionPair."""
    if isinstance(base, ProjectionPair):
        projections, base = base, congruence_from_projections(base)
    if projections is None:
        projections = base.projections
    return FacialCongruence(complex_, base, projections)


def build_facial_congruence(system: CoxeterSystem, kind: str, c=None) -> FacialCongruence:
    return facial_congruence(CoxeterComplex.of(system), projections_for(system, kind, c))


# --------------------------------------------------------------------------
# Quotients


CLAUSES = ("i", "ii", "iii", "iv", "v", "vi", "vii")


class QuotientLattice:
    """Quotient of the facial weak order by a facial congruence.

    Nodes are classes (numbered as in the congruence); the order compares
    bottoms.
    """

    def __init__(self, fc: FacialCongruence):
        self.fc = fc
        cx = fc.complex
        lat = cx.lattice
        n = len(fc)
        self.size = n
        bots = fc.bottoms
        self.above = [0] * n
        for a in range(n):
            ups = lat.up_sets[bots[a]]
            row = 0
            for b in range(n):
                if ups >> bots[b] & 1:
                    row |= 1 << b
            self.above[a] = row
        self.covers: list[list[int]] = []
        for a in range(n):
            strict = self.above[a] & ~(1 << a)
            cov = []
            for b in range(n):
                if strict >> b & 1 and not any(
                    (strict >> m & 1) and m != b and (self.above[m] >> b & 1) for m in range(n)
                ):
                    cov.append(b)
            self.covers.append(cov)

    def __len__(self):
        return self.size

    def leq(self, a: int, b: int) -> bool:
        return bool(self.above[a] >> b & 1)

    def meet(self, a: int, b: int) -> int:
        cx = self.fc.complex
        m = facial_meet(cx[self.fc.bottoms[a]], cx[self.fc.bottoms[b]])
        return self.fc.class_of[cx.index(m)]

    def join(self, a: int, b: int) -> int:
        from .facial import facial_join

        cx = self.fc.complex
        m = facial_join(cx[self.fc.tops[a]], cx[self.fc.tops[b]])
        return self.fc.class_of[cx.index(m)]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.size) for b in self.covers[a]]

    def clauses(self, a: int, b: int) -> dict[str, bool]:
        """Evaluate the seven equivalent descriptions of ``class a <= class b``."""
        fc = self.fc
        cx = fc.complex
        lat = cx.lattice
        sysm = cx.system
        P, M = sysm.positive_mask, sysm.negative_mask
        xa, ya = fc.bottoms[a], fc.tops[a]
        xb, yb = fc.bottoms[b], fc.tops[b]
        target = 0
        for k in fc.members[b]:
            target |= 1 << k
        exists = any(lat.up_sets[k] & target for k in fc.members[a])
        ra, rb = fc.class_root_set(a), fc.class_root_set(b)
        return {
            "i": exists,
            "ii": lat.leq(xa, xb),
            "iii": lat.leq(ya, yb),
            "iv": lat.leq(xa, yb),
            "v": weak_leq(cx[xa].x, cx[yb].x) and weak_leq(cx.tops[xa], cx.tops[yb]),
            "vi": not ((ra & ~rb) & P) and not ((rb & ~ra) & M),
            "vii": (ra & P) & ~(rb & P) == 0 and (rb & M) & ~(ra & M) == 0,
        }

    def check_clauses(self) -> list[tuple[int, int, dict]]:
        """All class pairs on which the clauses disagree (expected empty)."""
        bad = []
        for a in range(self.size):
            for b in range(self.size):
                cl = self.clauses(a, b)
                if len(set(cl.values())) != 1 or cl["ii"] != self.leq(a, b):
                    bad.append((a, b, cl))
        return bad


def quotient(fc: FacialCongruence) -> QuotientLattice:
    return QuotientLattice(fc)


# --------------------------------------------------------------------------
# Fans


@dataclass
class FanCone:
    class_id: int
    generators: list  # extreme rays, weight vectors in simple-root coordinates
    weight_indices: int  # bit-set over system.weights of the extreme rays
    dim: int


def fan_cones(fc: FacialCongruence) -> list[FanCone]:
    sysm = fc.complex.system
    weights = sysm.weights
    out = []
    for cid in range(len(fc)):
        mask = fc.class_weight_set(cid)
        idx = [k for k in range(len(weights)) if mask >> k & 1]
        extreme = [
            k for k in idx if not cone_contains([weights[j] for j in idx if j != k], weights[k])
        ]
        gens = [weights[k] for k in extreme]
        emask = 0
        for k in extreme:
            emask |= 1 << k
        out.append(FanCone(cid, gens, emask, vector_rank(gens) if gens else 0))
    return out


def singleton_correspondence(fc: FacialCongruence, cones: Optional[list[FanCone]] = None) -> list[int]:
    """Cosets violating: cone(omega(c)) is a class cone iff c is a facial singleton."""
    if cones is None:
        cones = fan_cones(fc)
    cone_sets = {fcn.weight_indices for fcn in cones}
    singles = set(fc.singletons_by_size())
    bad = []
    for k, wmask in enumerate(fc.complex.weight_sets):
        if (wmask in cone_sets) != (k in singles):
            bad.append(k)
    return bad


def overlapping_cones(fc: FacialCongruence, cones: Optional[list[FanCone]] = None) -> list[tuple[int, int]]:
    """Class pairs whose cones have meeting relative interiors (expected empty)."""
    if cones is None:
        cones = fan_cones(fc)
    dim = fc.complex.system.rank
    bad = []
    for a in range(len(cones)):
        for b in range(a + 1, len(cones)):
            if relative_interiors_meet(cones[a].generators, cones[b].generators, dim):
                bad.append((a, b))
    return bad


def chamber_mismatches(fc: FacialCongruence, cones: Optional[list[FanCone]] = None) -> list[tuple[int, int]]:
    """Check that each full-dimensional class cone contains exactly the
    chambers of its member elements, sampled at chamber barycenters."""
    if cones is None:
        cones = fan_cones(fc)
    cx = fc.complex
    sysm = cx.system
    n = sysm.rank
    bary = []
    for w in sysm.enumerate():
        acc = [sysm.field(0)] * n
        for s in range(n):
            v = w.apply_vector(sysm.fundamental_weights[s])
            acc = [a + b for a, b in zip(acc, v)]
        bary.append(acc)
    bad = []
    for cone in cones:
        if cone.dim != n:
            continue
        members = {sysm.index(cx[k].x) for k in fc.members[cone.class_id] if cx[k].I == 0}
        for k, b in enumerate(bary):
            if cone_contains(cone.generators, b) != (k in members):
                bad.append((cone.class_id, k))
    return bad


# --------------------------------------------------------------------------
# Further properties and witnesses


def alternating(system: CoxeterSystem, s: int, t: int, k: int) -> Element:
    w = system.identity
    for i in range(k):
        w = w.right_mul(s if i % 2 == 0 else t)
    return w


def force_lemma_violations(fc: FacialCongruence) -> list[str]:
    """Check both propagation lemmas on every rank-two coset."""
    sysm = fc.complex.system
    p = fc.projections
    bad = []
    for x in sysm.enumerate():
        for s in range(sysm.rank):
            for t in range(sysm.rank):
                if s == t:
                    continue
                I = 1 << s | 1 << t
                if x.right_descents() & I:
                    continue
                m = sysm.matrix[s, t]
                w_st = wo(sysm, I)
                chain1 = [x * alternating(sysm, s, t, k) for k in range(m)]
                chain2 = [x * alternating(sysm, t, s, k) for k in range(1, m + 1)]
                if _equiv(p, x, x.right_mul(s)) or _equiv(p, x * s_elem(sysm, s) * w_st, x * w_st):
                    for chain in (chain1, chain2):
                        if any(not _equiv(p, chain[0], v) for v in chain):
                            bad.append(f"force1 {x} {sysm.names[s]}{sysm.names[t]}")
                if _equiv(p, x.right_mul(s), x.right_mul(t)):
                    if any(not _equiv(p, x, v) for v in chain1 + chain2):
                        bad.append(f"force2 {x} {sysm.names[s]}{sysm.names[t]}")
    return bad


def s_elem(system: CoxeterSystem, s: int) -> Element:
    return system.generators[s]


def conjugate_lemma_violations(fc: FacialCongruence) -> list[str]:
    p = fc.projections
    bad = []
    for c, top in zip(fc.complex.cosets, fc.complex.tops):
        for s in c.system.gens_of(c.I):
            xs = c.x.right_mul(s)
            if _equiv(p, c.x, xs) != _equiv(p, xs * wo(c.system, c.I), top):
                bad.append(str(c))
    return bad


def restriction_violations(fc: FacialCongruence) -> bool:
    """Whether facial classes restricted to vertices differ from the base classes."""
    cx = fc.complex
    sysm = cx.system
    restricted = set()
    for members in fc.members:
        verts = frozenset(sysm.index(cx[k].x) for k in members if cx[k].I == 0)
        if verts:
            restricted.add(verts)
    return restricted != fc.base.partition()


def contracted_join_irreducibles(fc: FacialCongruence) -> tuple[set, set]:
    """(by definition, by the closed description) as sets of coset indices."""
    cx = fc.complex
    lat = cx.lattice
    sysm = cx.system
    base = fc.base
    direct = set()
    for k in lat.join_irreducibles_by_covers():
        (low,) = lat.down[k]
        if fc.class_of[k] == fc.class_of[low]:
            direct.add(k)

    def contracted_element(w: Element) -> bool:
        d = w.right_descents()
        if popcount(d) != 1:
            return False
        s = d.bit_length() - 1
        return base.equivalent(sysm.index(w), sysm.index(w.right_mul(s)))

    closed = set()
    for k, c in enumerate(cx.cosets):
        if c.I == 0 and contracted_element(c.x):
            closed.add(k)
        elif popcount(c.I) == 1 and contracted_element(c.x.right_mul(c.I.bit_length() - 1)):
            closed.add(k)
    return direct, closed


@dataclass
class ConjectureReport:
    system: str
    congruence: str
    checked: int
    counterexamples: list = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return not self.counterexamples


def singleton_conjecture(fc: FacialCongruence) -> ConjectureReport:
    """Experimental: does every coset containing a singleton element form a
    facial singleton?  Reports counterexamples, asserts nothing."""
    cx = fc.complex
    sysm = cx.system
    base = fc.base
    single_el = {m[0] for m in base.members if len(m) == 1}
    facial_single = set(fc.singletons_by_size())
    checked, bad = 0, []
    for k, c in enumerate(cx.cosets):
        elems = [sysm.index(c.x * u) for u in _parabolic_elements(sysm, c.I)]
        if any(e in single_el for e in elems):
            checked += 1
            if k not in facial_single:
                bad.append(format_coset(c))
    return ConjectureReport(sysm.label, fc.name, checked, bad)


def _parabolic_elements(system: CoxeterSystem, I: int) -> list[Element]:
    cache = system.__dict__.setdefault("_parabolic_elements", {})
    if I not in cache:
        seen = {system.identity.perm: system.identity}
        frontier = [system.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in system.gens_of(I):
                    v = w.right_mul(s)
                    if v.perm not in seen:
                        seen[v.perm] = v
                        nxt.append(v)
            frontier = nxt
        cache[I] = list(seen.values())
    return cache[I]


@dataclass
class NonsublatticeReport:
    first: ParabolicCoset
    second: ParabolicCoset
    meet: ParabolicCoset
    first_top_sortable: bool
    second_top_sortable: bool
    meet_top_sortable: bool
    expected_meet: ParabolicCoset

    @property
    def confirmed(self) -> bool:
        return (
            self.first_top_sortable
            and self.second_top_sortable
            and not self.meet_top_sortable
            and self.meet == self.expected_meet
        )

    def lines(self) -> list[str]:
        def tick(b):
            return "yes" if b else "no"

        return [
            f"xW_I = {self.first}, top {self.first.top} sortable: {tick(self.first_top_sortable)}",
            f"yW_J = {self.second}, top {self.second.top} sortable: {tick(self.second_top_sortable)}",
            f"meet = {self.meet} (expected {self.expected_meet}), top {self.meet.top} sortable: "
            f"{tick(self.meet_top_sortable)}",
            "confirmed" if self.confirmed else "NOT confirmed",
        ]


def nonsublattice_witness(system: Optional[CoxeterSystem] = None, c="srt") -> NonsublatticeReport:
    """Two cosets of A3 with c-sortable tops whose facial meet has a top
    that is not c-sortable, so the cosets with sortable tops are not closed
    under meets."""
    from .coxeter import build_system

    if system is None:
        system = build_system("A3")
    word = parse_coxeter_element(system, c)
    a = make_coset(system.from_word("tsr"), system.mask_of("st"))
    b = make_coset(system.from_word("stsr"), system.mask_of("s"))
    m = facial_meet(a, b)
    expected = make_coset(system.from_word("tsr"), system.mask_of("t"))
    return NonsublatticeReport(
        a,
        b,
        m,
        is_c_sortable(a.top, word),
        is_c_sortable(b.top, word),
        is_c_sortable(m.top, word),
        expected,
    )
