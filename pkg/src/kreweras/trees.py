"""Plane trees on boundary indices [1, 2n], the rerooting map and the bijections to NC(n).

A plane tree with n edges is labelled along its boundary, counter-clockwise
from the root, so every edge is a pair (i, j) with i < j.  The same data is a
Dyck word (open at i, close at j) and a noncrossing perfect matching.

Walking the contour, corner p is the vertex reached after p steps (corner 0
and corner 2n are the root).  Even corners sit at even vertices and odd
corners at odd vertices, which gives linear-time forms of the tree
partitions used by ``rho`` and ``rho_bar``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .arith import ENUMERATION_CAP, catalan, check_cap
from .errors import InvalidTreeError, SizeMismatchError
from .nc import NoncrossingPartition, kreweras

Edge = tuple[int, int]


def _match(word: str) -> list[Edge]:
    stack, edges = [], []
    for pos, ch in enumerate(word, start=1):
        if ch == "(":
            stack.append(pos)
        elif ch == ")":
            if not stack:
                raise InvalidTreeError(f"unbalanced Dyck word {word!r}")
            edges.append((stack.pop(), pos))
        else:
            raise InvalidTreeError(f"unexpected character {ch!r} in Dyck word")
    if stack:
        raise InvalidTreeError(f"unbalanced Dyck word {word!r}")
    return sorted(edges)


@dataclass(frozen=True, order=False)
class PlaneTree:
    """Plane tree stored by its Dyck word; ``edges`` is derived and sorted by left index."""

    dyck: str
    edges: tuple[Edge, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.dyck) == 0 or len(self.dyck) % 2:
            raise InvalidTreeError(f"Dyck word must have positive even length, got {self.dyck!r}")
        object.__setattr__(self, "edges", tuple(_match(self.dyck)))

    @property
    def n(self) -> int:
        return len(self.dyck) // 2

    def __lt__(self, other: PlaneTree) -> bool:
        return self.dyck < other.dyck

    def __str__(self):
        return self.dyck

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> PlaneTree:
        tree = from_edges(data["edges"])
        if tree.n != data["n"]:
            raise InvalidTreeError(f"edge list has {tree.n} edges but n={data['n']}")
        return tree


# A matching is the same payload viewed as chords on a circle.
Matching = PlaneTree


def from_dyck(word: str) -> PlaneTree:
    return PlaneTree(word)


def to_dyck(tree: PlaneTree) -> str:
    return tree.dyck


def from_edges(edges: Iterable[Sequence[int]]) -> PlaneTree:
    edges = sorted(tuple(e) for e in edges)
    n = len(edges)
    if n == 0:
        raise InvalidTreeError("a plane tree needs at least one edge")
    word = [""] * (2 * n)
    for e in edges:
        if len(e) != 2:
            raise InvalidTreeError(f"edge {e} is not a pair")
        i, j = e
        if not (1 <= i < j <= 2 * n):
            raise InvalidTreeError(f"edge {e} is not a pair i < j in [1, {2 * n}]")
        if word[i - 1] or word[j - 1]:
            raise InvalidTreeError(f"index reused by edge {e}")
        word[i - 1], word[j - 1] = "(", ")"
    tree = PlaneTree("".join(word))
    if list(tree.edges) != edges:
        raise InvalidTreeError(f"edges {edges} cross")
    return tree


def parse_tree(text: str) -> PlaneTree:
    """Dyck text like ``"(()())"`` or the JSON structured form."""
    text = text.strip()
    if text.startswith("{"):
        return PlaneTree.from_dict(json.loads(text))
    return PlaneTree(text)


def star_tp(n: int) -> PlaneTree:
    """Star rooted at its centre: edges (2i-1, 2i)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return PlaneTree("()" * n)


def star_bt(n: int) -> PlaneTree:
    """Star rooted at a leaf: (1, 2n) plus (2i, 2i+1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return PlaneTree("(" + "()" * (n - 1) + ")")


def enumerate_trees(n: int, limit: int | None = ENUMERATION_CAP) -> Iterator[PlaneTree]:
    """All plane trees with n edges in lexicographic Dyck order, '(' before ')'."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_cap(catalan(n), limit)
    buf = [""] * (2 * n)

    def extend(pos, opened, depth):
        if pos == 2 * n:
            yield PlaneTree("".join(buf))
            return
        if opened < n:
            buf[pos] = "("
            yield from extend(pos + 1, opened + 1, depth + 1)
        if depth > 0:
            buf[pos] = ")"
            yield from extend(pos + 1, opened, depth - 1)

    yield from extend(0, 0, 0)


def _rotate(edges: Iterable[Edge], shift: int, n: int) -> PlaneTree:
    m = 2 * n
    word = [""] * m
    for i, j in edges:
        a, b = sorted(((i - 1 + shift) % m, (j - 1 + shift) % m))
        word[a], word[b] = "(", ")"
    return PlaneTree("".join(word))


def phi(tree: PlaneTree) -> PlaneTree:
    """Reroot one edge counter-clockwise: every index shifts down by one, 1 wraps to 2n."""
    return _rotate(tree.edges, -1, tree.n)


def phi_inverse(tree: PlaneTree) -> PlaneTree:
    return _rotate(tree.edges, 1, tree.n)


def rotate_tree(tree: PlaneTree, k: int) -> PlaneTree:
    """phi applied k times (k may be negative)."""
    return _rotate(tree.edges, -k, tree.n)


def edge_parity(edge: Sequence[int]) -> str:
    return "odd" if edge[0] % 2 else "even"


def parent_edges(tree: PlaneTree) -> dict[Edge, Edge | None]:
    """Edge -> the edge directly above it (None for edges at the root)."""
    parent: dict[Edge, Edge | None] = {}
    stack: list[Edge] = []
    for e in tree.edges:
        while stack and stack[-1][1] < e[0]:
            stack.pop()
        parent[e] = stack[-1] if stack else None
        stack.append(e)
    return parent


def vertex_parities(tree: PlaneTree) -> list[str]:
    """Parity of the vertex at each contour corner 0..2n (root is even)."""
    parities = ["even"]
    stack = ["even"]
    for ch in tree.dyck:
        if ch == "(":
            stack.append("odd" if stack[-1] == "even" else "even")
        else:
            stack.pop()
        parities.append(stack[-1])
    return parities


def corners(tree: PlaneTree) -> list[int]:
    """Vertex id at each contour corner 0..2n; the root is 0, others numbered by discovery."""
    out = [0]
    stack = [0]
    fresh = 0
    for ch in tree.dyck:
        if ch == "(":
            fresh += 1
            stack.append(fresh)
        else:
            stack.pop()
        out.append(stack[-1])
    return out


def _partition_from_corners(labels: Sequence[int], n: int) -> NoncrossingPartition:
    groups: dict[int, list[int]] = {}
    for i, v in enumerate(labels, start=1):
        groups.setdefault(v, []).append(i)
    return NoncrossingPartition.from_blocks(groups.values(), n)


def rho(tree: PlaneTree) -> NoncrossingPartition:
    """Tree partition against the leaf-rooted star, projected by 2i-1 -> i.

    Each part is the set of odd children of an even vertex together with its
    even parent edge; the edge carrying odd index 2i-1 belongs to the even
    vertex at corner 2i-2.
    """
    c = corners(tree)
    return _partition_from_corners(c[0 : 2 * tree.n : 2], tree.n)


def rho_bar(tree: PlaneTree) -> NoncrossingPartition:
    """Dual tree partition (even children of an odd vertex plus its odd parent edge)."""
    c = corners(tree)
    return _partition_from_corners(c[1 : 2 * tree.n : 2], tree.n)


def rho_inverse(p: NoncrossingPartition) -> PlaneTree:
    """The unique tree T with rho(T) = p.

    Blocks of p label the even corners and blocks of its Kreweras complement
    the odd ones; step p of the contour goes down exactly when corner p shows
    a vertex for the first time.
    """
    n = p.n
    even = p.block_of()
    odd = kreweras(p).block_of()
    labels = []
    for i in range(1, n + 1):
        labels.append(("even", even[i]))
        labels.append(("odd", odd[i]))
    seen = {labels[0]}
    word = []
    for pos in range(1, 2 * n):
        if labels[pos] in seen:
            word.append(")")
        else:
            seen.add(labels[pos])
            word.append("(")
    word.append(")")
    return PlaneTree("".join(word))


def count_loops(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> int:
    """Closed loops formed by two perfect matchings on the same endpoints."""
    mate_a, mate_b = {}, {}
    for mate, edges in ((mate_a, a), (mate_b, b)):
        for i, j in edges:
            mate[i], mate[j] = j, i
    if set(mate_a) != set(mate_b):
        raise SizeMismatchError("matchings cover different endpoints")
    unseen = set(mate_a)
    loops = 0
    while unseen:
        start = min(unseen)
        x = start
        while True:
            unseen.discard(x)
            y = mate_a[x]
            unseen.discard(y)
            x = mate_b[y]
            if x == start:
                break
        loops += 1
    return loops


def is_meander(a: PlaneTree, b: PlaneTree) -> bool:
    """A drawn above the line and B below form a single closed loop."""
    if a.n != b.n:
        raise SizeMismatchError(f"matchings of different sizes: {a.n} and {b.n}")
    return count_loops(a.edges, b.edges) == 1
