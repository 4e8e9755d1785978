"""Standard parabolic cosets, the Coxeter complex and the facial weak order."""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Optional

from .coxeter import (
    CoxeterSystem,
    Element,
    in_parabolic_quotient,
    iter_subsets,
    longest_element,
    parabolic_decompose,
    popcount,
)
from .errors import CharacterizationMismatch, NotMinimalRep, ParseError, SystemMismatch
from .exact_lp import strict_halfspace
from .weak import weak_join, weak_leq, weak_meet

DENSE_LIMIT = 1 << 13  # largest complex whose order is stored as bit-sets


class ParabolicCoset:
    """The coset ``x W_I`` with ``x`` its minimal-length representative."""

    __slots__ = ("x", "I")

    def __init__(self, x: Element, I: int):
        if not in_parabolic_quotient(x, I):
            raise NotMinimalRep(f"{x} is not minimal in its coset modulo {x.system.format_gens(I)}")
        self.x = x
        self.I = I

    @property
    def system(self) -> CoxeterSystem:
        return self.x.system

    @property
    def top(self) -> Element:
        """The maximal element ``x w_{o,I}`` of the coset."""
        return self.x * wo(self.x.system, self.I)

    def key(self) -> tuple:
        return (self.x.perm, self.I)

    def __eq__(self, other):
        return (
            isinstance(other, ParabolicCoset)
            and other.I == self.I
            and other.x == self.x
        )

    def __hash__(self):
        return hash((self.x.perm, self.I))

    def __repr__(self):
        return f"ParabolicCoset({self})"

    def __str__(self):
        return format_coset(self)


def format_coset(c: ParabolicCoset, style: str = "math") -> str:
    """``"tsrW_{s,t}"`` (style ``math``) or ``"t,s,r:{s,t}"`` (style ``cli``)."""
    sysm = c.system
    if style == "cli":
        word = ",".join(sysm.names[i] for i in c.x.reduced_word()) or "e"
        return f"{word}:{sysm.format_gens(c.I)}"
    word = sysm.format_word(c.x.reduced_word()) if c.x.length else ""
    return f"{word}W_{sysm.format_gens(c.I)}"


def parse_coset(system: CoxeterSystem, text: str) -> ParabolicCoset:
    """Parse ``"t,s,r:{s,t}"`` (or ``"tsr:{s,t}"`` when every generator name
    is one character; ``e`` or nothing for the identity).  The word need not
    be reduced or minimal; the coset is re-canonicalized."""
    if ":" not in text:
        raise ParseError(f"coset {text!r} must look like word:{{generators}}")
    word_text, gens_text = (part.strip() for part in text.rsplit(":", 1))
    if not (gens_text.startswith("{") and gens_text.endswith("}")):
        raise ParseError(f"generator set {gens_text!r} must be braced, e.g. {{s,t}}")
    word_text = word_text.replace(".", ",")
    if word_text in ("", "e"):
        word = []
    elif "," in word_text:
        word = [w.strip() for w in word_text.split(",") if w.strip()]
    else:
        word = list(word_text) if all(len(n) == 1 for n in system.names) else [word_text]
    inner = gens_text[1:-1].strip()
    if "," in inner:
        gens = [g.strip() for g in inner.split(",") if g.strip()]
    else:
        gens = list(inner) if all(len(n) == 1 for n in system.names) else ([inner] if inner else [])
    return make_coset(system.from_word(word), system.mask_of(gens))


def wo(system: CoxeterSystem, I: int) -> Element:
    """Cached longest element of ``W_I``."""
    cache = system.__dict__.setdefault("_wo_cache", {})
    w = cache.get(I)
    if w is None:
        w = cache[I] = longest_element(system, I)
    return w


def make_coset(w: Element, I: int) -> ParabolicCoset:
    """The coset ``w W_I``, canonicalized to its minimal representative."""
    return ParabolicCoset(parabolic_decompose(w, I)[0], I)


def positive_roots_of(system: CoxeterSystem, I: int) -> int:
    """Bit-set of the positive roots of the parabolic subsystem ``Phi_I``."""
    cache = system.__dict__.setdefault("_phi_I_cache", {})
    mask = cache.get(I)
    if mask is None:
        mask = 0
        for k in range(system.npos):
            if all(c == 0 or I >> i & 1 for i, c in enumerate(system.roots[k])):
                mask |= 1 << k
        cache[I] = mask
    return mask


def image_of_set(w: Element, mask: int) -> int:
    out = 0
    k = 0
    while mask:
        if mask & 1:
            out |= 1 << w.image(k)
        mask >>= 1
        k += 1
    return out


def element_root_set(w: Element) -> int:
    """``R(w) = w(Phi^-)``, the root inversion set of ``w W_empty``."""
    sysm = w.system
    out = 0
    N = sysm.npos
    for j in w.perm:
        out |= 1 << (j + N if j < N else j - N)
    return out


def root_inversion_set(c: ParabolicCoset) -> int:
    """``R(xW_I) = x(Phi^- u Phi^+_I)`` as a bit-set over root indices."""
    sysm = c.system
    return element_root_set(c.x) | image_of_set(c.x, positive_roots_of(sysm, c.I))


def weight_inversion_set(c: ParabolicCoset) -> int:
    """``omega(xW_I) = x(fundamental weights outside I)`` as indices into ``system.weights``."""
    sysm = c.system
    out = 0
    for s in range(sysm.rank):
        if not c.I >> s & 1:
            v = c.x.apply_vector(sysm.fundamental_weights[s])
            out |= 1 << sysm.weight_index[v]
    return out


def root_descent_set(c: ParabolicCoset) -> int:
    sysm = c.system
    pm = sysm.simple_mask | (sysm.simple_mask << sysm.npos)
    return root_inversion_set(c) & pm


def facial_covers(c: ParabolicCoset) -> list[tuple[ParabolicCoset, int]]:
    """Upper covers of ``c`` tagged with their cover type (1 or 2)."""
    sysm = c.system
    x, I = c.x, c.I
    out = []
    dr = x.right_descents()
    for s in range(sysm.rank):
        if I >> s & 1:
            J = I & ~(1 << s)
            out.append((ParabolicCoset(x * wo(sysm, I) * wo(sysm, J), J), 2))
        elif not dr >> s & 1:
            out.append((ParabolicCoset(x, I | 1 << s), 1))
    return out


# --------------------------------------------------------------------------
# Comparisons, meet and join


def _check(a: ParabolicCoset, b: ParabolicCoset) -> None:
    if a.system is not b.system:
        raise SystemMismatch("cosets belong to different Coxeter systems")


def leq_roots(a: ParabolicCoset, b: ParabolicCoset) -> bool:
    sysm = a.system
    ra, rb = root_inversion_set(a), root_inversion_set(b)
    return not ((ra & ~rb) & sysm.positive_mask) and not ((rb & ~ra) & sysm.negative_mask)


def leq_minmax(a: ParabolicCoset, b: ParabolicCoset) -> bool:
    return weak_leq(a.x, b.x) and weak_leq(a.top, b.top)


def facial_leq(a: ParabolicCoset, b: ParabolicCoset, method: str = "minmax", lattice=None) -> bool:
    _check(a, b)
    if method == "minmax":
        return leq_minmax(a, b)
    if method == "roots":
        return leq_roots(a, b)
    if method == "covers":
        if lattice is None:
            lattice = CoxeterComplex.of(a.system).lattice
        return lattice.leq_covers(lattice.index(a), lattice.index(b))
    raise ValueError(f"unknown method {method!r}")


def facial_meet(a: ParabolicCoset, b: ParabolicCoset) -> ParabolicCoset:
    _check(a, b)
    z = weak_meet(a.x, b.x)
    K = (z.inverse() * weak_meet(a.top, b.top)).left_descents()
    return make_coset(z, K)


def facial_join(a: ParabolicCoset, b: ParabolicCoset) -> ParabolicCoset:
    _check(a, b)
    z = weak_join(a.top, b.top)
    K = (z.inverse() * weak_join(a.x, b.x)).left_descents()
    return make_coset(z, K)


def conjugate_by_w0(system: CoxeterSystem, I: int) -> int:
    """The generator set ``w_o I w_o``."""
    w0 = system.w0
    out = 0
    for s in system.gens_of(I):
        out |= 1 << system.neg(w0.image(s))
    return out


def psi1(c: ParabolicCoset) -> ParabolicCoset:
    sysm = c.system
    return ParabolicCoset(sysm.w0 * c.x * wo(sysm, c.I), c.I)


def psi2(c: ParabolicCoset) -> ParabolicCoset:
    sysm = c.system
    return make_coset(c.top * sysm.w0, conjugate_by_w0(sysm, c.I))


def theta(c: ParabolicCoset) -> ParabolicCoset:
    sysm = c.system
    return make_coset(sysm.w0 * c.x * sysm.w0, conjugate_by_w0(sysm, c.I))


def anti_automorphisms(c: ParabolicCoset) -> tuple[ParabolicCoset, ParabolicCoset, ParabolicCoset]:
    return psi1(c), psi2(c), theta(c)


def mobius(c: ParabolicCoset) -> int:
    """Moebius function from the bottom ``eW_empty`` to ``c`` (closed form)."""
    if c.x.length:
        return 0
    return -1 if popcount(c.I) % 2 else 1


def is_join_irreducible(c: ParabolicCoset) -> bool:
    if c.I == 0:
        return popcount(c.x.right_descents()) == 1
    if popcount(c.I) == 1:
        s = c.I.bit_length() - 1
        return popcount(c.x.right_mul(s).right_descents()) == 1
    return False


def is_meet_irreducible(c: ParabolicCoset) -> bool:
    sysm = c.system
    if popcount(c.I) > 1:
        return False
    return popcount(sysm.simple_mask & ~c.x.right_descents()) == 1


def halfspace_witness(system: CoxeterSystem, R: int) -> Optional[list]:
    """A functional ``psi`` (values on the simple roots) with
    ``R = {alpha : psi(alpha) >= 0}``, or ``None`` when none exists."""
    negR = system.negate_set(R)
    if (R | negR) != system.all_mask:
        return None
    both = R & negR
    strict = R & ~both
    roots = system.roots
    pos = [roots[k] for k in range(len(roots)) if strict >> k & 1]
    van = [roots[k] for k in range(system.npos) if both >> k & 1]
    psi = strict_halfspace(pos, van, system.rank, system.field(0))
    if psi is None:
        return None
    zero = system.field(0)
    for k, r in enumerate(roots):
        val = sum((p * c for p, c in zip(psi, r)), zero)
        if (val >= 0) != bool(R >> k & 1):  # pragma: no cover - LP guarantees this
            return None
    return psi


# --------------------------------------------------------------------------
# The complex and the lattice


class CoxeterComplex:
    """All standard parabolic cosets of a finite system.

    Ordered by ``(|I|, I, index of x in the group enumeration)``.  Per-coset
    tops, root inversion sets and weight inversion sets are cached as lists
    aligned with ``cosets``.
    """

    def __init__(self, system: CoxeterSystem):
        self.system = system
        group = system.enumerate()
        subsets = sorted(iter_subsets(system.simple_mask), key=lambda I: (popcount(I), I))
        cosets = []
        for I in subsets:
            for x in group:
                if in_parabolic_quotient(x, I):
                    cosets.append(ParabolicCoset(x, I))
        self.cosets: list[ParabolicCoset] = cosets
        self._index = {c.key(): k for k, c in enumerate(cosets)}
        self.tops = [c.top for c in cosets]
        self.root_sets = [root_inversion_set(c) for c in cosets]
        self._weight_sets: Optional[list[int]] = None

    @classmethod
    def of(cls, system: CoxeterSystem) -> "CoxeterComplex":
        cx = system.__dict__.get("_complex")
        if cx is None:
            cx = system.__dict__["_complex"] = cls(system)
        return cx

    def __len__(self):
        return len(self.cosets)

    def __iter__(self):
        return iter(self.cosets)

    def __getitem__(self, k: int) -> ParabolicCoset:
        return self.cosets[k]

    def index(self, c: ParabolicCoset) -> int:
        return self._index[c.key()]

    @property
    def weight_sets(self) -> list[int]:
        if self._weight_sets is None:
            self._weight_sets = [weight_inversion_set(c) for c in self.cosets]
        return self._weight_sets

    def coset_of(self, w: Element, I: int) -> int:
        return self._index[(parabolic_decompose(w, I)[0].perm, I)]

    def vertex(self, w: Element) -> int:
        """Index of ``w W_empty``."""
        return self._index[(w.perm, 0)]

    def expected_size(self) -> int:
        order = self.system.order
        return sum(order // wo_order(self.system, I) for I in iter_subsets(self.system.simple_mask))

    @cached_property
    def lattice(self) -> "FacialLattice":
        return FacialLattice(self)


def wo_order(system: CoxeterSystem, I: int) -> int:
    """``|W_I|`` by enumerating the parabolic subgroup."""
    seen = {system.identity.perm}
    frontier = [system.identity]
    gens = system.gens_of(I)
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                v = w.right_mul(s)
                if v.perm not in seen:
                    seen.add(v.perm)
                    nxt.append(v)
        frontier = nxt
    return len(seen)


def enumerate_complex(system: CoxeterSystem) -> CoxeterComplex:
    return CoxeterComplex.of(system)


class FacialLattice:
    """The facial weak order as a Hasse diagram with bit-set reachability."""

    def __init__(self, complex_: CoxeterComplex, verify: bool = True):
        self.complex = complex_
        n = len(complex_)
        self.size = n
        self.up: list[list[int]] = [[] for _ in range(n)]
        self.down: list[list[int]] = [[] for _ in range(n)]
        self.tags: dict[tuple[int, int], int] = {}
        for k, c in enumerate(complex_.cosets):
            for d, tag in facial_covers(c):
                j = complex_.index(d)
                self.up[k].append(j)
                self.down[j].append(k)
                self.tags[(k, j)] = tag
        self.dense = n <= DENSE_LIMIT
        self.up_sets: list[int] = []
        self.down_sets: list[int] = []
        if self.dense:
            order = self._topological_order()
            ups = [0] * n
            for k in reversed(order):
                acc = 1 << k
                for j in self.up[k]:
                    acc |= ups[j]
                ups[k] = acc
            downs = [0] * n
            for k in order:
                acc = 1 << k
                for j in self.down[k]:
                    acc |= downs[j]
                downs[k] = acc
            self.up_sets, self.down_sets = ups, downs
            if verify:
                self.verify_characterizations()

    def _topological_order(self) -> list[int]:
        indeg = [len(d) for d in self.down]
        queue = deque(k for k in range(self.size) if indeg[k] == 0)
        order = []
        while queue:
            k = queue.popleft()
            order.append(k)
            for j in self.up[k]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(order) != self.size:
            raise CharacterizationMismatch("cover digraph has a cycle")
        return order

    def index(self, c: ParabolicCoset) -> int:
        return self.complex.index(c)

    def __len__(self):
        return self.size

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        return sorted((a, b, t) for (a, b), t in self.tags.items())

    def leq_covers(self, a: int, b: int) -> bool:
        if not self.dense:
            raise ValueError("complex too large for a dense order; use method='minmax'")
        return bool(self.up_sets[a] >> b & 1)

    def leq(self, a: int, b: int) -> bool:
        if self.dense:
            return bool(self.up_sets[a] >> b & 1)
        cx = self.complex
        return leq_minmax(cx[a], cx[b])

    def verify_characterizations(self) -> int:
        """Compare the three characterizations on all pairs; returns the number of pairs."""
        cx = self.complex
        sysm = cx.system
        P, M = sysm.positive_mask, sysm.negative_mask
        R = cx.root_sets
        xs = [c.x.inversion_set() for c in cx.cosets]
        tops = [t.inversion_set() for t in cx.tops]
        n = self.size
        for a in range(n):
            ups = self.up_sets[a]
            for b in range(n):
                by_cover = bool(ups >> b & 1)
                by_roots = not ((R[a] & ~R[b]) & P) and not ((R[b] & ~R[a]) & M)
                by_minmax = (xs[a] & ~xs[b]) == 0 and (tops[a] & ~tops[b]) == 0
                if not (by_cover == by_roots == by_minmax):
                    raise CharacterizationMismatch(
                        f"{cx[a]} <= {cx[b]}: covers={by_cover} roots={by_roots} minmax={by_minmax}"
                    )
        return n * n

    def brute_meet(self, a: int, b: int) -> int:
        lower = self.down_sets[a] & self.down_sets[b]
        return self._extreme(lower, self.down_sets)

    def brute_join(self, a: int, b: int) -> int:
        upper = self.up_sets[a] & self.up_sets[b]
        return self._extreme(upper, self.up_sets)

    @staticmethod
    def _extreme(bound: int, cones: list[int]) -> int:
        # the element m of bound whose cone contains all of bound
        hits = []
        rest = bound
        while rest:
            low = rest & -rest
            m = low.bit_length() - 1
            rest ^= low
            if bound & ~cones[m] == 0:
                hits.append(m)
        if len(hits) != 1:
            raise CharacterizationMismatch(f"no unique bound (found {len(hits)})")
        return hits[0]

    def meet(self, a: int, b: int) -> int:
        cx = self.complex
        return cx.index(facial_meet(cx[a], cx[b]))

    def join(self, a: int, b: int) -> int:
        cx = self.complex
        return cx.index(facial_join(cx[a], cx[b]))

    def mobius_by_inversion(self) -> list[int]:
        """``mu(bottom, c)`` for all ``c`` by recursive zeta-matrix inversion."""
        order = self._topological_order()
        bottom = order[0]
        mu = [0] * self.size
        for k in order:
            if k == bottom:
                mu[k] = 1
                continue
            total = 0
            below = self.down_sets[k] & ~(1 << k)
            while below:
                low = below & -below
                total += mu[low.bit_length() - 1]
                below ^= low
            mu[k] = -total
        return mu

    def join_irreducibles_by_covers(self) -> list[int]:
        return [k for k in range(self.size) if len(self.down[k]) == 1]

    def meet_irreducibles_by_covers(self) -> list[int]:
        return [k for k in range(self.size) if len(self.up[k]) == 1]


def build_facial_lattice(complex_: CoxeterComplex, verify: bool = True) -> FacialLattice:
    if verify and complex_.__dict__.get("lattice") is not None:
        return complex_.lattice
    return FacialLattice(complex_, verify=verify)


def irreducibles(lattice: FacialLattice) -> tuple[list[ParabolicCoset], list[ParabolicCoset]]:
    """Join- and meet-irreducible cosets by the closed criteria, cross-checked
    against cover counts."""
    cx = lattice.complex
    join_irr = [c for c in cx.cosets if is_join_irreducible(c)]
    meet_irr = [c for c in cx.cosets if is_meet_irreducible(c)]
    if [cx.index(c) for c in join_irr] != lattice.join_irreducibles_by_covers():
        raise CharacterizationMismatch("join-irreducible criterion disagrees with cover counts")
    if [cx.index(c) for c in meet_irr] != lattice.meet_irreducibles_by_covers():
        raise CharacterizationMismatch("meet-irreducible criterion disagrees with cover counts")
    return join_irr, meet_irr
