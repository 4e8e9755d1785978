"""Type A view of the Coxeter complex: cosets as ordered set partitions.

With generators ``tau_1, ..., tau_{n-1}`` along a path, ``W`` acts on
``{1, ..., n}`` and positive roots are ``e_j - e_i`` for ``i < j``.  The
coset ``xW_I`` becomes the one-line notation of ``x`` cut after every
position ``i`` with ``tau_i`` not in ``I``.
"""

from __future__ import annotations

from .coxeter import CoxeterSystem, Element
from .errors import NotTypeA, ParseError
from .facial import ParabolicCoset, root_inversion_set

OrderedPartition = tuple  # tuple of frozensets, blocks in order


def _require_type_a(system: CoxeterSystem) -> int:
    n = system.rank
    chain = all(
        system.matrix[i, j] == (3 if abs(i - j) == 1 else 2)
        for i in range(n)
        for j in range(n)
        if i != j
    )
    if not chain:
        raise NotTypeA(f"{system.label} is not of type A with generators along a path")
    return n + 1


def one_line(x: Element) -> tuple[int, ...]:
    """``(x(1), ..., x(n))`` where ``x`` permutes ``{1..n}``."""
    n = _require_type_a(x.system)
    out = []
    word = x.reduced_word()
    for p in range(1, n + 1):
        v = p
        for k in reversed(word):  # tau_k swaps k+1 and k+2 (1-based positions)
            if v == k + 1:
                v = k + 2
            elif v == k + 2:
                v = k + 1
        out.append(v)
    return tuple(out)


def encode(c: ParabolicCoset) -> OrderedPartition:
    n = _require_type_a(c.system)
    line = one_line(c.x)
    blocks, cur = [], [line[0]]
    for pos in range(1, n):
        if c.I >> (pos - 1) & 1:
            cur.append(line[pos])
        else:
            blocks.append(frozenset(cur))
            cur = [line[pos]]
    blocks.append(frozenset(cur))
    return tuple(blocks)


def _element_index(system: CoxeterSystem) -> dict:
    table = system.__dict__.get("_one_line_index")
    if table is None:
        table = system.__dict__["_one_line_index"] = {one_line(w): w for w in system.enumerate()}
    return table


def decode(system: CoxeterSystem, partition: OrderedPartition) -> ParabolicCoset:
    n = _require_type_a(system)
    line = [v for block in partition for v in sorted(block)]
    if sorted(line) != list(range(1, n + 1)) or any(not b for b in partition):
        raise ParseError(f"not an ordered partition of [{n}]")
    I, pos = 0, 0
    for block in partition:
        for _ in range(len(block) - 1):
            I |= 1 << pos
            pos += 1
        pos += 1
    return ParabolicCoset(_element_index(system)[tuple(line)], I)


def format_partition(partition: OrderedPartition) -> str:
    return "|".join("".join(str(v) for v in sorted(b)) for b in partition)


def parse_partition(text: str) -> OrderedPartition:
    try:
        return tuple(frozenset(int(ch) for ch in block) for block in text.strip().split("|"))
    except ValueError:
        raise ParseError(f"bad ordered partition {text!r}") from None


def partition_covers(partition: OrderedPartition) -> list[tuple[OrderedPartition, int]]:
    """Upper covers by merging adjacent blocks ``X << Y`` (type 1) or
    splitting a block into ``Y | X`` with ``X << Y`` (type 2)."""
    out = []
    blocks = list(partition)
    for i in range(len(blocks) - 1):
        if max(blocks[i]) < min(blocks[i + 1]):
            merged = blocks[:i] + [blocks[i] | blocks[i + 1]] + blocks[i + 2 :]
            out.append((tuple(merged), 1))
    for i, block in enumerate(blocks):
        items = sorted(block)
        for cut in range(1, len(items)):
            low, high = frozenset(items[:cut]), frozenset(items[cut:])
            out.append((tuple(blocks[:i] + [high, low] + blocks[i + 1 :]), 2))
    return out


def inversion_table(partition: OrderedPartition) -> dict[tuple[int, int], int]:
    where = {v: k for k, block in enumerate(partition) for v in block}
    n = len(where)
    table = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a, b = where[i], where[j]
            table[(i, j)] = -1 if a < b else 0 if a == b else 1
    return table


def root_of(system: CoxeterSystem, i: int, j: int) -> int:
    """Index of the root ``e_i - e_j``."""
    n = _require_type_a(system)
    lo, hi = min(i, j), max(i, j)
    coords = tuple(system.field(1 if lo - 1 <= k < hi - 1 else 0) for k in range(n - 1))
    k = system.root_index[coords]  # e_hi - e_lo is positive
    return k if i > j else system.neg(k)


def inversion_table_from_roots(c: ParabolicCoset) -> dict[tuple[int, int], int]:
    """Inversion table read off ``R(xW_I)``."""
    sysm = c.system
    n = _require_type_a(sysm)
    R = root_inversion_set(c)
    table = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            fwd = bool(R >> root_of(sysm, i, j) & 1)
            back = bool(R >> root_of(sysm, j, i) & 1)
            table[(i, j)] = 0 if fwd and back else -1 if fwd else 1
    return table
