"""Finite Coxeter systems, their root systems, and group elements.

Roots are stored in simple-root coordinates.  Positive roots get indices
``0 .. N-1`` (simple roots first, then by height); the negative of root ``i``
has index ``i + N``.  A group element is the tuple of images of the positive
roots, which determines the whole signed permutation of the root system.
"""

from __future__ import annotations

import re
from collections import deque
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import NotFinite, NotMinimalRep, ParseError, SystemMismatch, UnsupportedField
from .exact_lp import inverse
from .scalars import PHI, QQ, QQ5, Field, Scalar

INFINITY = 0  # Coxeter matrix entry used for m(s, t) = infinity

ROOT_BOUND = 20000  # root closure safety bound


# --------------------------------------------------------------------------
# Coxeter matrices and type descriptors


class CoxeterMatrix:
    """A symmetric Coxeter matrix; ``0`` encodes an infinite entry."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        m = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(m)
        for i, row in enumerate(m):
            if len(row) != n:
                raise ParseError("Coxeter matrix must be square")
            if row[i] != 1:
                raise ParseError("Coxeter matrix diagonal must be 1")
            for j, v in enumerate(row):
                if v != m[j][i]:
                    raise ParseError("Coxeter matrix must be symmetric")
                if i != j and not (v >= 2 or v == INFINITY):
                    raise ParseError(f"off-diagonal entry m[{i}][{j}] = {v} must be >= 2")
        self.rows = m

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"CoxeterMatrix({[list(r) for r in self.rows]})"

    def to_text(self) -> str:
        lines = [str(self.rank)]
        lines += [" ".join(str(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CoxeterMatrix":
        """Parse ``n`` on the first line followed by ``n`` rows."""
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        try:
            n = int(lines[0][0])
            rows = []
            for ln in lines[1 : n + 1]:
                rows.append([INFINITY if tok in ("inf", "oo", "-1") else int(tok) for tok in ln])
        except (IndexError, ValueError) as exc:
            raise ParseError(f"malformed Coxeter matrix file: {exc}") from None
        if len(rows) != n:
            raise ParseError(f"expected {n} matrix rows, got {len(rows)}")
        return cls(rows)


def _matrix_from_edges(n: int, edges: dict[tuple[int, int], int]) -> CoxeterMatrix:
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), m in edges.items():
        rows[i][j] = rows[j][i] = m
    return CoxeterMatrix(rows)


_DESCRIPTOR = re.compile(r"^([A-IZa-iz])(\d+)(?::(\d+)|\((\d+)\))?$")


def matrix_from_type(descriptor: str) -> CoxeterMatrix:
    """Coxeter matrix of an irreducible finite type such as ``"B3"`` or ``"I2:5"``."""
    m = _DESCRIPTOR.match(descriptor.strip())
    if not m:
        raise ParseError(f"unrecognized type descriptor {descriptor!r}")
    letter, n = m.group(1).upper(), int(m.group(2))
    param = m.group(3) or m.group(4)
    chain = {(i, i + 1): 3 for i in range(n - 1)}
    if letter == "I":
        if n != 2 or param is None:
            raise ParseError("dihedral types are written I2:m")
        return _matrix_from_edges(2, {(0, 1): int(param)} if int(param) != 2 else {})
    if param is not None:
        raise ParseError(f"unexpected parameter in {descriptor!r}")
    if letter == "A" and n >= 1:
        return _matrix_from_edges(n, chain)
    if letter in "BC" and n >= 2:
        chain[(0, 1)] = 4
        return _matrix_from_edges(n, chain)
    if letter == "D" and n >= 4:
        edges = {(i, i + 1): 3 for i in range(n - 2)}
        edges[(n - 3, n - 1)] = 3
        return _matrix_from_edges(n, edges)
    if letter == "E" and n in (6, 7, 8):
        edges = {(0, 2): 3, (1, 3): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
        return _matrix_from_edges(n, edges)
    if letter == "F" and n == 4:
        return _matrix_from_edges(4, {(0, 1): 3, (1, 2): 4, (2, 3): 3})
    if letter == "G" and n == 2:
        return _matrix_from_edges(2, {(0, 1): 6})
    if letter == "H" and n in (3, 4):
        chain[(0, 1)] = 5
        return _matrix_from_edges(n, chain)
    raise NotFinite(f"{descriptor!r} is not a finite Coxeter type")


def classify(matrix: CoxeterMatrix) -> list[str]:
    """Finite-type names of the connected components of the Coxeter graph.

    Raises ``NotFinite`` when some component is not of finite type.
    """
    n = matrix.rank
    adj = {i: [j for j in range(n) if j != i and matrix[i, j] != 2] for i in range(n)}
    seen: set[int] = set()
    names = []
    for start in range(n):
        if start in seen:
            continue
        comp, queue = [], deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        names.append(_classify_component(matrix, sorted(comp), adj))
    return names


def _classify_component(matrix: CoxeterMatrix, comp: list[int], adj) -> str:
    k = len(comp)
    edges = [(i, j, matrix[i, j]) for i in comp for j in adj[i] if i < j]
    if any(m == INFINITY for _, _, m in edges):
        raise NotFinite("Coxeter graph has an infinite edge")
    if k == 1:
        return "A1"
    if k == 2:
        m = edges[0][2]
        return {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2:{m}")
    if len(edges) != k - 1:
        raise NotFinite("Coxeter graph component contains a cycle")
    labels = sorted(m for _, _, m in edges)
    big = [m for m in labels if m > 3]
    degree = {v: len(adj[v]) for v in comp}
    if len(big) > 1 or any(m > 5 for m in big):
        raise NotFinite("Coxeter graph has too many or too large labels")
    branch = [v for v in comp if degree[v] >= 3]
    if not big:
        if not branch:
            return f"A{k}"
        if len(branch) > 1 or degree[branch[0]] > 3:
            raise NotFinite("Coxeter graph branches too much")
        centre = branch[0]
        arms = []
        for first in adj[centre]:
            length, prev, cur = 1, centre, first
            while True:
                nxt = [u for u in adj[cur] if u != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return f"D{k}"
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return f"E{k}"
        raise NotFinite("simply laced tree is not of type A, D or E")
    if branch:
        raise NotFinite("Coxeter graph with a label > 3 must be a path")
    (i, j, m), = [(i, j, mm) for i, j, mm in edges if mm > 3]
    end_edge = degree[i] == 1 or degree[j] == 1
    if m == 4:
        if end_edge:
            return f"B{k}"
        if k == 4:
            return "F4"
    if m == 5 and end_edge and k in (3, 4):
        return f"H{k}"
    raise NotFinite("Coxeter graph is not of finite type")


def default_names(rank: int) -> list[str]:
    if rank == 1:
        return ["s"]
    if rank == 2:
        return ["s", "t"]
    if rank == 3:
        return ["r", "s", "t"]
    if rank == 4:
        return ["q", "r", "s", "t"]
    return [f"s{i + 1}" for i in range(rank)]


# --------------------------------------------------------------------------
# Systems


def _cartan_entries(m: int, field: Field) -> tuple[Scalar, Scalar]:
    # (A[i][j], A[j][i]) for i < j; the product equals 4 cos^2(pi/m)
    if m == 2:
        return field(0), field(0)
    if m == 3:
        return field(-1), field(-1)
    if m == 4:
        return field(-1), field(-2)
    if m == 6:
        return field(-1), field(-3)
    if m == 5:
        return -PHI, -PHI
    raise UnsupportedField(f"m = {m}: 2cos(pi/{m}) lies outside Q and Q(sqrt5)")


class CoxeterSystem:
    """A finite Coxeter system with its root system, coroots and weights.

    Immutable after construction; all caches are filled deterministically.
    """

    def __init__(self, matrix: CoxeterMatrix, names: Optional[Sequence[str]] = None, label: str = ""):
        self.matrix = matrix
        self.rank = n = matrix.rank
        self.types = classify(matrix)
        for i in range(n):
            for j in range(i + 1, n):
                if matrix[i, j] not in (2, 3, 4, 5, 6):
                    raise UnsupportedField(
                        f"m({i},{j}) = {matrix[i, j]}: cos(pi/{matrix[i, j]}) is not in a supported field"
                    )
        self.field = QQ5 if any(matrix[i, j] == 5 for i in range(n) for j in range(n)) else QQ
        self.names = list(names) if names is not None else default_names(n)
        if len(self.names) != n or len(set(self.names)) != n:
            raise ParseError("generator names must be distinct, one per generator")
        self.label = label or "x".join(self.types)
        F = self.field
        A = [[F(2) if i == j else F(0) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                A[i][j], A[j][i] = _cartan_entries(matrix[i, j], F)
        self.cartan = A
        self.root_norms = self._root_norms()
        self.gram = [[A[i][j] * self.root_norms[i] / 2 for j in range(n)] for i in range(n)]
        self._build_roots()
        inv = inverse(A)
        # fundamental weights in simple-root coordinates: A . omega_j = e_j
        self.fundamental_weights = [tuple(inv[k][j] for k in range(n)) for j in range(n)]
        self.coroots = [
            tuple(F(2) / self.root_norms[i] if k == i else F(0) for k in range(n)) for i in range(n)
        ]
        self._index_cache: Optional[dict] = None

    def _root_norms(self) -> list:
        n, A, F = self.rank, self.cartan, self.field
        norms: list = [None] * n
        for start in range(n):
            if norms[start] is not None:
                continue
            norms[start] = F(2)
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for j in range(n):
                    if j != i and A[i][j] != 0 and norms[j] is None:
                        norms[j] = A[i][j] * norms[i] / A[j][i]
                        queue.append(j)
        return norms

    def reflect(self, i: int, v: Sequence[Scalar]) -> tuple:
        """Apply the simple reflection ``s_i`` to a vector in simple-root coordinates."""
        c = sum((self.cartan[i][k] * v[k] for k in range(self.rank)), self.field(0))
        out = list(v)
        out[i] = out[i] - c
        return tuple(out)

    def _build_roots(self) -> None:
        n, F = self.rank, self.field
        simple = [tuple(F(1) if k == i else F(0) for k in range(n)) for i in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            r = queue.popleft()
            for i in range(n):
                img = self.reflect(i, r)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
                    if len(seen) > ROOT_BOUND:
                        raise NotFinite("root closure exceeded the safety bound")
        zero = F(0)
        positives = [r for r in seen if all(c >= zero for c in r)]
        negatives = [r for r in seen if all(c <= zero for c in r)]
        if len(positives) + len(negatives) != len(seen):
            raise NotFinite("root system is not split into positive and negative roots")

        def height(r):
            return sum(r, zero)

        positives.sort(key=lambda r: (height(r), tuple(-c for c in r)))
        self.npos = N = len(positives)
        self.roots: list[tuple] = positives + [tuple(-c for c in r) for r in positives]
        self.root_index = {r: k for k, r in enumerate(self.roots)}
        self.simple_action = [
            tuple(self.root_index[self.reflect(i, r)] for r in self.roots) for i in range(n)
        ]
        self.positive_mask = (1 << N) - 1
        self.negative_mask = ((1 << (2 * N)) - 1) ^ self.positive_mask
        self.simple_mask = (1 << n) - 1
        self.all_mask = (1 << (2 * N)) - 1
        assert all(self.root_index[r] == i for i, r in enumerate(simple))

    # -- root helpers -----------------------------------------------------

    def neg(self, k: int) -> int:
        N = self.npos
        return k + N if k < N else k - N

    def negate_set(self, mask: int) -> int:
        N = self.npos
        return ((mask & self.positive_mask) << N) | (mask >> N)

    def pair(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
        """W-invariant inner product of two vectors in simple-root coordinates."""
        n, G = self.rank, self.gram
        total = self.field(0)
        for i in range(n):
            if u[i] == 0:
                continue
            for j in range(n):
                if v[j] != 0:
                    total = total + u[i] * G[i][j] * v[j]
        return total

    def root_label(self, k: int) -> str:
        coords = self.roots[k]
        parts = []
        for i, c in enumerate(coords):
            if c == 0:
                continue
            coef = "" if c == 1 else "-" if c == -1 else f"({c})"
            parts.append(f"{coef}a_{self.names[i]}")
        return "+".join(parts).replace("+-", "-")

    # -- generators, names --------------------------------------------------

    def gen_index(self, name: str) -> int:
        if name in self.names:
            return self.names.index(name)
        if name.isdigit() and int(name) < self.rank:
            return int(name)
        raise ParseError(f"unknown generator {name!r} (generators: {', '.join(self.names)})")

    def mask_of(self, gens: Iterable) -> int:
        mask = 0
        for g in gens:
            mask |= 1 << (g if isinstance(g, int) else self.gen_index(g))
        return mask

    def gens_of(self, mask: int) -> list[int]:
        return [i for i in range(self.rank) if mask >> i & 1]

    def format_gens(self, mask: int) -> str:
        return "{" + ",".join(self.names[i] for i in self.gens_of(mask)) + "}"

    def format_word(self, word: Sequence[int], sep: Optional[str] = None) -> str:
        if not word:
            return "e"
        if sep is None:
            sep = "" if all(len(nm) == 1 for nm in self.names) else "."
        return sep.join(self.names[i] for i in word)

    # -- elements -------------------------------------------------------------

    @cached_property
    def identity(self) -> "Element":
        return Element(self, tuple(range(self.npos)))

    @cached_property
    def generators(self) -> list["Element"]:
        N = self.npos
        return [Element(self, self.simple_action[i][:N]) for i in range(self.rank)]

    def from_word(self, word: Iterable) -> "Element":
        w = self.identity
        for g in word:
            i = g if isinstance(g, int) else self.gen_index(g)
            w = w.right_mul(i)
        return w

    @cached_property
    def w0(self) -> "Element":
        return longest_element(self, self.simple_mask)

    def enumerate(self) -> list["Element"]:
        """All elements, ordered by length then lexicographic reduced word."""
        return list(self._enumeration)

    @cached_property
    def _enumeration(self) -> tuple:
        seen = {self.identity.perm: self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    v = w.right_mul(i)
                    if v.perm not in seen:
                        seen[v.perm] = v
                        nxt.append(v)
            frontier = nxt
        return tuple(sorted(seen.values(), key=lambda w: (w.length, w.reduced_word())))

    @property
    def order(self) -> int:
        return len(self._enumeration)

    def index(self, w: "Element") -> int:
        if self._index_cache is None:
            self._index_cache = {v.perm: k for k, v in enumerate(self._enumeration)}
        return self._index_cache[w.perm]

    def element(self, k: int) -> "Element":
        return self._enumeration[k]

    # -- weights ---------------------------------------------------------------

    @cached_property
    def weights(self) -> list[tuple]:
        """The weight orbit W(fundamental weights); fundamental weights come first."""
        out = list(self.fundamental_weights)
        seen = set(out)
        queue = deque(out)
        while queue:
            v = queue.popleft()
            for i in range(self.rank):
                img = self.reflect(i, v)
                if img not in seen:
                    seen.add(img)
                    out.append(img)
                    queue.append(img)
        return out

    @cached_property
    def weight_index(self) -> dict:
        return {v: k for k, v in enumerate(self.weights)}

    def __repr__(self):
        return f"CoxeterSystem({self.label})"


def build_system(spec, names: Optional[Sequence[str]] = None) -> CoxeterSystem:
    """Build a system from a type descriptor (``"A3"``, ``"I2:5"``), a
    :class:`CoxeterMatrix`, or a list of matrix rows."""
    if isinstance(spec, CoxeterSystem):
        return spec
    if isinstance(spec, str):
        return CoxeterSystem(matrix_from_type(spec), names, label=spec.strip().upper().replace("(", ":").rstrip(")"))
    if not isinstance(spec, CoxeterMatrix):
        spec = CoxeterMatrix(spec)
    return CoxeterSystem(spec, names)


# --------------------------------------------------------------------------
# Elements


class Element:
    """A group element stored as images of the positive roots.

    ``perm[i]`` is the index of ``w(root_i)`` for every positive root index
    ``i``; ``length`` counts positive roots sent to negative ones.
    """

    __slots__ = ("system", "perm", "length", "_word")

    def __init__(self, system: CoxeterSystem, perm: tuple):
        self.system = system
        self.perm = perm
        N = system.npos
        self.length = sum(1 for k in perm if k >= N)
        self._word = None

    def __eq__(self, other):
        return isinstance(other, Element) and self.perm == other.perm and self.system is other.system

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"Element({self.system.format_word(self.reduced_word())})"

    def __str__(self):
        return self.system.format_word(self.reduced_word())

    def _check(self, other: "Element") -> None:
        if other.system is not self.system:
            raise SystemMismatch("elements belong to different Coxeter systems")

    def image(self, k: int) -> int:
        """Index of ``w(root_k)`` for any root index ``k``."""
        N = self.system.npos
        if k < N:
            return self.perm[k]
        j = self.perm[k - N]
        return j + N if j < N else j - N

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        img = self.image
        return Element(self.system, tuple(img(k) for k in other.perm))

    def inverse(self) -> "Element":
        N = self.system.npos
        inv = [0] * N
        for i, j in enumerate(self.perm):
            if j < N:
                inv[j] = i
            else:
                inv[j - N] = i + N
        return Element(self.system, tuple(inv))

    def left_mul(self, s: int) -> "Element":
        act = self.system.simple_action[s]
        return Element(self.system, tuple(act[k] for k in self.perm))

    def right_mul(self, s: int) -> "Element":
        N = self.system.npos
        act = self.system.simple_action[s]
        return Element(self.system, tuple(self.image(act[i]) for i in range(N)))

    def is_identity(self) -> bool:
        return self.length == 0

    def apply_root(self, k: int) -> int:
        return self.image(k)

    def apply_vector(self, v: Sequence[Scalar]) -> tuple:
        """Image of an arbitrary vector given in simple-root coordinates."""
        sysm = self.system
        n = sysm.rank
        out = [sysm.field(0)] * n
        for j in range(n):
            if v[j] == 0:
                continue
            r = sysm.roots[self.perm[j]]
            for k in range(n):
                out[k] = out[k] + v[j] * r[k]
        return tuple(out)

    def inversion_set(self) -> int:
        """Bit-set of N(w) = positive roots sent to negative roots by w^{-1}."""
        N = self.system.npos
        mask = 0
        for k in self.perm:
            if k >= N:
                mask |= 1 << (k - N)
        return mask

    def left_descents(self) -> int:
        return self.inversion_set() & self.system.simple_mask

    def right_descents(self) -> int:
        N = self.system.npos
        mask = 0
        for s in range(self.system.rank):
            if self.perm[s] >= N:
                mask |= 1 << s
        return mask

    def reduced_word(self) -> tuple:
        """Lexicographically smallest reduced word (peel smallest left descent)."""
        if self._word is None:
            word = []
            w = self
            while w.length:
                d = w.left_descents()
                s = (d & -d).bit_length() - 1
                word.append(s)
                w = w.left_mul(s)
            self._word = tuple(word)
        return self._word


def descents(w: Element) -> tuple[int, int]:
    """(left, right) descent sets as generator bit-sets."""
    return w.left_descents(), w.inverse().left_descents()


def is_reduced(system: CoxeterSystem, word: Sequence) -> bool:
    return system.from_word(word).length == len(word)


def longest_element(system: CoxeterSystem, I: int) -> Element:
    """The longest element of the parabolic subgroup W_I (greedy ascent)."""
    w = system.identity
    gens = system.gens_of(I)
    while True:
        asc = next((s for s in gens if not (w.right_descents() >> s & 1)), None)
        if asc is None:
            return w
        w = w.right_mul(asc)


def parabolic_decompose(w: Element, I: int) -> tuple[Element, Element]:
    """Return ``(w^I, w_I)`` with ``w = w^I w_I`` and ``w^I`` in ``W^I``."""
    sysm = w.system
    top, low = w, sysm.identity
    while True:
        d = top.right_descents() & I
        if not d:
            return top, low
        s = (d & -d).bit_length() - 1
        top = top.right_mul(s)
        low = low.left_mul(s)


def left_parabolic_factor(w: Element, J: int) -> tuple[Element, Element]:
    """Return ``(w_J, rest)`` with ``w = w_J rest``, ``w_J`` in ``W_J`` and
    ``rest`` without left descents in ``J``."""
    sysm = w.system
    low, rest = sysm.identity, w
    while True:
        d = rest.left_descents() & J
        if not d:
            return low, rest
        s = (d & -d).bit_length() - 1
        rest = rest.left_mul(s)
        low = low.right_mul(s)


def in_parabolic_quotient(x: Element, I: int) -> bool:
    return not (x.right_descents() & I)


class InWI:
    """Deodhar branch: ``s x`` is again a minimal coset representative."""

    __slots__ = ("element",)

    def __init__(self, element: Element):
        self.element = element

    def __eq__(self, other):
        return isinstance(other, InWI) and other.element == self.element

    def __repr__(self):
        return f"InWI({self.element!r})"


class Swap:
    """Deodhar branch: ``s x = x r`` for the generator ``r`` in ``I``."""

    __slots__ = ("generator",)

    def __init__(self, generator: int):
        self.generator = generator

    def __eq__(self, other):
        return isinstance(other, Swap) and other.generator == self.generator

    def __repr__(self):
        return f"Swap({self.generator})"


def deodhar_step(s: int, x: Element, I: int):
    if not in_parabolic_quotient(x, I):
        raise NotMinimalRep(f"{x} has a right descent in the parabolic subset")
    sx = x.left_mul(s)
    if in_parabolic_quotient(sx, I):
        return InWI(sx)
    for r in x.system.gens_of(I):
        if x.right_mul(r) == sx:
            return Swap(r)
    raise AssertionError("Deodhar's lemma violated")  # pragma: no cover


def iter_subsets(mask: int) -> Iterator[int]:
    """All sub-bitmasks of ``mask``, in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")
