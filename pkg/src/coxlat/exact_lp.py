"""Exact linear algebra and linear programming over an ordered field.

Every routine works with any scalar type supporting ``+ - * /`` and
comparisons with ``0`` (``Fraction`` and :class:`~coxlat.scalars.Golden`).
Nothing here ever touches floating point.
"""

from __future__ import annotations

from typing import Optional, Sequence

Vector = Sequence  # sequence of scalars


def _zero_like(rows) -> object:
    for row in rows:
        for v in row:
            return v * 0
    return 0


def row_reduce(rows: Sequence[Vector]) -> list[list]:
    """Reduced row echelon form (nonzero rows only)."""
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        piv = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        p = m[pivot_row][col]
        m[pivot_row] = [v / p for v in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return [r for r in m if any(v != 0 for v in r)]


def rank(vectors: Sequence[Vector]) -> int:
    return len(row_reduce(vectors))


def solve(matrix: Sequence[Vector], rhs: Vector) -> Optional[list]:
    """Solve a square system ``matrix @ x = rhs``; ``None`` when singular."""
    n = len(matrix)
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    red = row_reduce(aug)
    if len(red) < n:
        return None
    for i, row in enumerate(red):
        if row[i] == 0:
            return None
    return [red[i][n] for i in range(n)]


def inverse(matrix: Sequence[Vector]) -> list[list]:
    n = len(matrix)
    zero = _zero_like(matrix)
    one = zero + 1
    aug = [list(matrix[i]) + [one if j == i else zero for j in range(n)] for i in range(n)]
    red = row_reduce(aug)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def feasible_nonneg(A: Sequence[Vector], b: Vector) -> Optional[list]:
    """Find ``x >= 0`` with ``A x = b`` by the phase-one simplex (Bland's rule).

    ``A`` is given as a list of rows.  Returns a feasible ``x`` or ``None``.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    zero = _zero_like([list(b)] + [list(r) for r in A])
    if m == 0:
        return [zero] * n
    rows = []
    for i in range(m):
        row = list(A[i]) + [b[i]]
        if b[i] < 0:
            row = [-v for v in row]
        rows.append(row)
    ncols = n + m
    tab = []
    for i, row in enumerate(rows):
        art = [zero] * m
        art[i] = zero + 1
        tab.append(row[:n] + art + [row[n]])
    basis = [n + i for i in range(m)]
    obj = [zero] * (ncols + 1)
    for j in list(range(n)) + [ncols]:
        s = zero
        for i in range(m):
            s = s + tab[i][j]
        obj[j] = -s
    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # unbounded direction; cannot happen for phase one
            break
        p = tab[leave][enter]
        tab[leave] = [v / p for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * c for a, c in zip(tab[i], tab[leave])]
        f = obj[enter]
        obj = [a - f * c for a, c in zip(obj, tab[leave])]
        basis[leave] = enter
    if obj[ncols] != 0:
        return None
    x = [zero] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = tab[i][ncols]
    return x


def cone_contains(generators: Sequence[Vector], target: Vector) -> bool:
    """Exact test ``target in cone(generators)`` via phase-one simplex."""
    dim = len(target)
    if not generators:
        return all(v == 0 for v in target)
    A = [[g[k] for g in generators] for k in range(dim)]
    return feasible_nonneg(A, list(target)) is not None


def _normalize(row: list) -> tuple:
    # scale so the first nonzero coefficient has absolute value 1
    for v in row:
        if v != 0:
            s = v if v > 0 else -v
            return tuple(c / s for c in row)
    return tuple(row)


def fm_cone_contains(generators: Sequence[Vector], target: Vector) -> bool:
    """``target in cone(generators)`` by Fourier–Motzkin on the Farkas dual.

    ``target`` lies outside the cone iff some ``y`` has ``<g, y> <= 0`` for
    all generators and ``<target, y> >= 1``.  The variables of ``y`` are
    eliminated one at a time; the system is infeasible iff a contradiction
    ``0 <= negative`` survives.
    """
    dim = len(target)
    zero = _zero_like([list(target)] + [list(g) for g in generators])
    one = zero + 1
    # each row: coefficients (length dim) + rhs, meaning coeffs . y <= rhs
    rows = {_normalize(list(g) + [zero]) for g in generators}
    rows.add(_normalize([-t for t in target] + [-one]))
    for k in range(dim):
        pos, neg, keep = [], [], []
        for r in rows:
            (pos if r[k] > 0 else neg if r[k] < 0 else keep).append(r)
        new = set(keep)
        for p in pos:
            for q in neg:
                a, c = p[k], -q[k]
                combo = [c * pv + a * qv for pv, qv in zip(p, q)]
                new.add(_normalize(combo))
        rows = new
    # only rows 0 <= rhs remain
    feasible = all(r[dim] >= 0 for r in rows)
    return not feasible


def relative_interiors_meet(gens_a: Sequence[Vector], gens_b: Sequence[Vector], dim: int) -> bool:
    """Whether relint cone(A) and relint cone(B) intersect.

    A point of the relative interior of ``cone(A)`` is a combination with all
    coefficients strictly positive; by homogeneity we ask for coefficients
    ``>= 1`` on both sides of ``sum(l_i a_i) = sum(m_j b_j)``.
    """
    zero = _zero_like([list(g) for g in list(gens_a) + list(gens_b)])
    cols = [list(g) for g in gens_a] + [[-v for v in g] for g in gens_b]
    rhs = []
    for k in range(dim):
        s = zero
        for col in cols:
            s = s + col[k]
        rhs.append(-s)
    if not cols:
        return all(v == 0 for v in rhs)
    A = [[col[k] for col in cols] for k in range(dim)]
    return feasible_nonneg(A, rhs) is not None


def strict_halfspace(
    positive: Sequence[Vector], vanishing: Sequence[Vector], dim: int, zero
) -> Optional[list]:
    """Find a linear functional ``psi`` (coordinates in the dual basis) with
    ``psi . a >= 1`` for ``a`` in ``positive`` and ``psi . a == 0`` for ``a``
    in ``vanishing``.  ``None`` when infeasible.
    """
    one = zero + 1
    # variables: p (dim), q (dim), slacks (len(positive)); psi = p - q
    nslack = len(positive)
    A, b = [], []
    for idx, a in enumerate(positive):
        row = list(a) + [-v for v in a] + [zero] * nslack
        row[2 * dim + idx] = -one
        A.append(row)
        b.append(one)
    for a in vanishing:
        A.append(list(a) + [-v for v in a] + [zero] * nslack)
        b.append(zero)
    if not A:
        return [zero] * dim
    x = feasible_nonneg(A, b)
    if x is None:
        return None
    return [x[k] - x[dim + k] for k in range(dim)]
