"""The right weak order on a finite Coxeter group and cone closures of root sets."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional

from .coxeter import CoxeterSystem, Element
from .errors import SystemMismatch
from .exact_lp import cone_contains
from .scalars import Golden


def _same(u: Element, v: Element) -> None:
    if u.system is not v.system:
        raise SystemMismatch("elements belong to different Coxeter systems")


def weak_leq(u: Element, v: Element) -> bool:
    _same(u, v)
    a = u.inversion_set()
    return a & v.inversion_set() == a


def weak_meet(u: Element, v: Element) -> Element:
    _same(u, v)
    acc = u.system.identity
    while True:
        d = u.left_descents() & v.left_descents()
        if not d:
            return acc
        s = (d & -d).bit_length() - 1
        acc = acc.right_mul(s)
        u = u.left_mul(s)
        v = v.left_mul(s)


def weak_join(u: Element, v: Element) -> Element:
    w0 = u.system.w0
    return weak_meet(u * w0, v * w0) * w0


def weak_covers(w: Element) -> list[Element]:
    """Upper covers ``w s`` for ``s`` not a right descent."""
    d = w.right_descents()
    return [w.right_mul(s) for s in range(w.system.rank) if not d >> s & 1]


# --------------------------------------------------------------------------
# Cone closures


class ConeOracle:
    """Decides ``root in cone(X)`` for bit-sets ``X`` of roots of one system.

    For rank at most ``index_rank`` a table of minimal Carathéodory bases is
    precomputed: for each root the list of linearly independent root subsets
    whose open cone contains it.  ``gamma in cone(X)`` then holds iff one of
    those bases is a subset of ``X``.  Higher ranks fall back to an exact
    phase-one simplex per query.  Results are memoized per bit-set.
    """

    index_rank = 3

    def __init__(self, system: CoxeterSystem, method: str = "auto"):
        self.system = system
        if method == "auto":
            method = "index" if system.rank <= self.index_rank else "simplex"
        if method not in ("index", "simplex"):
            raise ValueError(f"unknown cone method {method!r}")
        self.method = method
        self._bases: Optional[list[list[int]]] = None
        self._memo: dict[int, int] = {}

    def _build_index(self) -> list[list[int]]:
        sysm = self.system
        roots = [_to_zphi(r) for r in sysm.roots]
        n, total = sysm.rank, len(roots)
        bases: list[list[int]] = [[1 << k] for k in range(total)]
        for k in range(2, n + 1):
            for combo in combinations(range(total), k):
                vecs = [roots[i] for i in combo]
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if k == n:
                    base = _zdet(vecs)
                    sb = _zsign(base)
                    if sb == 0:
                        continue
                    for g in range(total):
                        if mask >> g & 1:
                            continue
                        ok = True
                        for j in range(k):
                            trial = list(vecs)
                            trial[j] = roots[g]
                            if _zsign(_zdet(trial)) != sb:
                                ok = False
                                break
                        if ok:
                            bases[g].append(mask)
                else:  # k == 2, n == 3
                    a, b = vecs
                    ab = _zcross(a, b)
                    piv = next((i for i in range(3) if ab[i] != (0, 0)), None)
                    if piv is None:
                        continue
                    sab = _zsign(ab[piv])
                    for g in range(total):
                        if mask >> g & 1:
                            continue
                        gam = roots[g]
                        if _zdot(gam, ab) != (0, 0):
                            continue
                        lam = _zcross(gam, b)[piv]  # coefficient of a, times det
                        mu = _zcross(a, gam)[piv]
                        if _zsign(lam) == sab and _zsign(mu) == sab:
                            bases[g].append(mask)
        return bases

    def contains(self, X: int, g: int) -> bool:
        """Whether root ``g`` lies in the cone of the roots in ``X``."""
        if X >> g & 1:
            return True
        if self.method == "index":
            if self._bases is None:
                self._bases = self._build_index()
            return any(b & X == b for b in self._bases[g])
        roots = self.system.roots
        gens = [roots[k] for k in range(len(roots)) if X >> k & 1]
        return cone_contains(gens, roots[g])

    def cone_roots(self, X: int) -> int:
        """Bit-set of all roots in ``cone(X)``."""
        hit = self._memo.get(X)
        if hit is not None:
            return hit
        out = 0
        for g in range(len(self.system.roots)):
            if self.contains(X, g):
                out |= 1 << g
        if len(self._memo) < 500_000:
            self._memo[X] = out
        return out


# Roots have coordinates in Z[phi] (phi the golden ratio), written here as
# integer pairs (a, b) meaning a + b*phi; phi^2 = phi + 1.


def _to_zphi(vec) -> tuple:
    out = []
    for c in vec:
        if isinstance(c, Golden):
            a, b = c.a - c.b, 2 * c.b  # sqrt5 = 2 phi - 1
        else:
            a, b = Fraction(c), Fraction(0)
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError("root coordinates are not integral")
        out.append((int(a), int(b)))
    return tuple(out)


def _zmul(x, y):
    a, b = x
    c, d = y
    return (a * c + b * d, a * d + b * c + b * d)


def _zsub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _zadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _zsign(x) -> int:
    # a + b phi = ((2a + b) + b sqrt5) / 2
    a, b = x
    p = 2 * a + b
    if b == 0 or p == 0 or (p > 0) == (b > 0):
        v = p if p != 0 else b
        return (v > 0) - (v < 0)
    if p * p > 5 * b * b:
        return 1 if p > 0 else -1
    return 1 if b > 0 else -1


def _zcross(u, v):
    return (
        _zsub(_zmul(u[1], v[2]), _zmul(u[2], v[1])),
        _zsub(_zmul(u[2], v[0]), _zmul(u[0], v[2])),
        _zsub(_zmul(u[0], v[1]), _zmul(u[1], v[0])),
    )


def _zdot(u, v):
    acc = (0, 0)
    for x, y in zip(u, v):
        acc = _zadd(acc, _zmul(x, y))
    return acc


def _zdet(vecs):
    if len(vecs) == 2:
        (a, b), (c, d) = vecs
        return _zsub(_zmul(a, d), _zmul(b, c))
    return _zdot(vecs[0], _zcross(vecs[1], vecs[2]))


def cone_oracle(system: CoxeterSystem) -> ConeOracle:
    oracle = system.__dict__.get("_cone_oracle")
    if oracle is None:
        oracle = system.__dict__["_cone_oracle"] = ConeOracle(system)
    return oracle


def plus_up(system: CoxeterSystem, X: int) -> int:
    """Positive roots in ``cone(X)``."""
    return cone_oracle(system).cone_roots(X) & system.positive_mask


def minus_up(system: CoxeterSystem, X: int) -> int:
    """Negative roots in ``cone(X)``."""
    return cone_oracle(system).cone_roots(X) & system.negative_mask


def plus_down(system: CoxeterSystem, X: int) -> int:
    P = system.positive_mask
    return P & ~plus_up(system, P & ~X)


def minus_down(system: CoxeterSystem, X: int) -> int:
    M = system.negative_mask
    return M & ~minus_up(system, M & ~X)


def cone_closures(system: CoxeterSystem, X: int) -> tuple[int, int, int, int]:
    """The four closures (plus-up, minus-up, plus-down, minus-down) of ``X``."""
    return plus_up(system, X), minus_up(system, X), plus_down(system, X), minus_down(system, X)
