"""Noncrossing partitions of [1, n], the refinement lattice and Kreweras complementation.

Partitions are immutable and always stored canonically: each block ascending,
blocks sorted by their minimum.  Structural equality is therefore partition
equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .arith import ENUMERATION_CAP
from .errors import CrossingPartitionError, InvalidPartitionError, SizeMismatchError

Block = tuple[int, ...]


def _canonical(blocks: Iterable[Iterable[int]]) -> tuple[Block, ...]:
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


def _validate_set_partition(blocks: Sequence[Sequence[int]], n: int) -> None:
    if n < 1:
        raise InvalidPartitionError(f"n must be positive, got {n}")
    seen = set()
    for block in blocks:
        if len(block) == 0:
            raise InvalidPartitionError("empty block")
        for x in block:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InvalidPartitionError(f"non-integer element {x!r}")
            if not 1 <= x <= n:
                raise InvalidPartitionError(f"element {x} outside [1, {n}]")
            if x in seen:
                raise InvalidPartitionError(f"element {x} appears twice")
            seen.add(x)
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise InvalidPartitionError(f"missing elements {missing}")


def _block_index(blocks: Sequence[Sequence[int]], n: int) -> list[int]:
    """Map element -> block number (index 0 unused)."""
    where = [0] * (n + 1)
    for k, block in enumerate(blocks):
        for x in block:
            where[x] = k
    return where


def find_crossing(blocks: Sequence[Sequence[int]], n: int) -> tuple[int, int, int, int] | None:
    """Return a crossing quadruple ``(a, b, c, d)`` or None if noncrossing.

    Single left-to-right pass with a stack of blocks that have started but not
    finished; a block may only be continued when it is on top.
    """
    blocks = [sorted(b) for b in blocks]
    where = _block_index(blocks, n)
    nxt = [0] * (n + 1)
    prev = [0] * (n + 1)
    for block in blocks:
        for a, b in zip(block, block[1:]):
            nxt[a] = b
            prev[b] = a
    stack: list[int] = []
    for x in range(1, n + 1):
        k = where[x]
        if prev[x]:
            top = stack[-1]
            if top != k:
                # top was opened after prev[x] and still has an element beyond x
                first = blocks[top][0]
                later = next(y for y in blocks[top] if y > x)
                return prev[x], first, x, later
            if not nxt[x]:
                stack.pop()
        elif nxt[x]:
            stack.append(k)
    return None


def is_noncrossing(blocks: Sequence[Sequence[int]], n: int) -> bool:
    """True iff ``blocks`` (validated as a set partition of [1, n]) has no crossing."""
    _validate_set_partition(blocks, n)
    return find_crossing(blocks, n) is None


@dataclass(frozen=True)
class NoncrossingPartition:
    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        _validate_set_partition(self.blocks, self.n)
        canon = _canonical(self.blocks)
        if canon != self.blocks:
            object.__setattr__(self, "blocks", canon)
        quad = find_crossing(self.blocks, self.n)
        if quad is not None:
            raise CrossingPartitionError(quad)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> NoncrossingPartition:
        blocks = [tuple(b) for b in blocks]
        if n is None:
            n = sum(len(b) for b in blocks)
        return cls(n, tuple(blocks))

    @classmethod
    def top(cls, n: int) -> NoncrossingPartition:
        return cls(n, (tuple(range(1, n + 1)),))

    @classmethod
    def bottom(cls, n: int) -> NoncrossingPartition:
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    def block_of(self) -> list[int]:
        """Element -> index of its block, as a list indexed from 1."""
        return _block_index(self.blocks, self.n)

    def refines(self, other: NoncrossingPartition) -> bool:
        """Every block of ``self`` lies inside a block of ``other``."""
        _same_n(self, other)
        where = other.block_of()
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def __str__(self):
        return format_partition(self)

    def to_dict(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_dict(cls, data: dict) -> NoncrossingPartition:
        return cls.from_blocks(data["blocks"], data["n"])


def _same_n(p: NoncrossingPartition, q: NoncrossingPartition) -> None:
    if p.n != q.n:
        raise SizeMismatchError(f"partitions of different sizes: {p.n} and {q.n}")


def format_partition(p: NoncrossingPartition) -> str:
    return "/".join(",".join(map(str, b)) for b in p.blocks)


def parse_partition(text: str, n: int | None = None) -> NoncrossingPartition:
    """Parse ``"1,3/2"`` style text (or its JSON structured form)."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        if n is not None and data.get("n") != n:
            raise SizeMismatchError(f"structured partition has n={data.get('n')}, expected {n}")
        return NoncrossingPartition.from_dict(data)
    try:
        blocks = [[int(tok) for tok in chunk.split(",")] for chunk in text.split("/")]
    except ValueError as exc:
        raise InvalidPartitionError(f"cannot parse partition {text!r}") from exc
    return NoncrossingPartition.from_blocks(blocks, n)


def enumerate_nc(n: int, limit: int | None = ENUMERATION_CAP) -> Iterator[NoncrossingPartition]:
    """All of NC(n), in the order of their plane trees' Dyck words."""
    from .trees import enumerate_trees, rho

    for tree in enumerate_trees(n, limit=limit):
        yield rho(tree)


def kreweras(p: NoncrossingPartition) -> NoncrossingPartition:
    """Kreweras complement.

    Walking the interleaved circle 1 < 1' < 2 < ... < n < n', the point i' is
    joined to the primed point sitting just after the cyclic predecessor of
    i+1 inside the hull of i+1.
    """
    n = p.n
    pred = [0] * (n + 1)
    for block in p.blocks:
        for k, x in enumerate(block):
            pred[x] = block[k - 1]
    step = [0] * (n + 1)
    for i in range(1, n + 1):
        step[i] = pred[i % n + 1]
    seen = [False] * (n + 1)
    blocks = []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        cycle = []
        j = i
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = step[j]
        blocks.append(tuple(cycle))
    return NoncrossingPartition(n, _canonical(blocks))


def kreweras_bruteforce(p: NoncrossingPartition) -> NoncrossingPartition:
    """Coarsest Q in NC(n) with P on odd points and Q on even points noncrossing.

    Exhaustive over NC(n); test oracle only.
    """
    n = p.n
    lifted = [[2 * x - 1 for x in b] for b in p.blocks]
    compatible = []
    for q in _all_nc_direct(n):
        union = lifted + [[2 * x for x in b] for b in q.blocks]
        if find_crossing(union, 2 * n) is None:
            compatible.append(q)
    best = [q for q in compatible if all(r.refines(q) for r in compatible)]
    assert len(best) == 1
    return best[0]


def _all_nc_direct(n: int) -> Iterator[NoncrossingPartition]:
    """NC(n) by restricted-growth strings, filtered; independent of the tree route."""

    def grow(prefix, nblocks):
        if len(prefix) == n:
            yield prefix
            return
        for k in range(nblocks + 1):
            yield from grow(prefix + [k], max(nblocks, k + 1))

    for rgs in grow([], 0):
        blocks: dict[int, list[int]] = {}
        for x, k in enumerate(rgs, start=1):
            blocks.setdefault(k, []).append(x)
        if find_crossing(list(blocks.values()), n) is None:
            yield NoncrossingPartition(n, _canonical(blocks.values()))


def rotate_nc(p: NoncrossingPartition, i: int) -> NoncrossingPartition:
    """Relabel every element j as j - i (mod n)."""
    n = p.n
    return NoncrossingPartition(n, _canonical([[(x - i - 1) % n + 1 for x in b] for b in p.blocks]))


def nc_meet(p: NoncrossingPartition, q: NoncrossingPartition) -> NoncrossingPartition:
    _same_n(p, q)
    where = q.block_of()
    parts: dict[tuple[int, int], list[int]] = {}
    for k, block in enumerate(p.blocks):
        for x in block:
            parts.setdefault((k, where[x]), []).append(x)
    return NoncrossingPartition(p.n, _canonical(parts.values()))


def _merge_blocks(blocks: list[list[int]], n: int, pairs: Iterable[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for block in blocks:
        for x in block[1:]:
            parent[find(x)] = find(block[0])
    for a, b in pairs:
        parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def nc_join(p: NoncrossingPartition, q: NoncrossingPartition) -> NoncrossingPartition:
    """Smallest noncrossing partition coarser than both."""
    _same_n(p, q)
    n = p.n
    blocks = _merge_blocks([list(b) for b in p.blocks + q.blocks], n, [])
    while (quad := find_crossing(blocks, n)) is not None:
        blocks = _merge_blocks(blocks, n, [(quad[0], quad[1])])
    return NoncrossingPartition(n, _canonical(blocks))


def is_complement(p: NoncrossingPartition, q: NoncrossingPartition) -> bool:
    _same_n(p, q)
    n = p.n
    return nc_join(p, q) == NoncrossingPartition.top(n) and nc_meet(p, q) == NoncrossingPartition.bottom(n)
