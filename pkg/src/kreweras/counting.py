"""Closed-form counts of planar and rooted planar trees, and brute-force counterparts.

The brute-force side never touches the formulas: it canonicalizes plane trees
under rerooting (for planar trees) or under cyclic reordering of the root's
subtrees (for rooted planar trees) and counts classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arith import ENUMERATION_CAP, catalan, chi_odd, divisors, euler_phi, moebius
from .errors import InconsistencyError
from .trees import PlaneTree, enumerate_trees, phi

__all__ = [
    "catalan", "euler_phi", "moebius", "chi_odd",
    "count_rooted_planar", "count_asym_rooted_planar", "count_planar", "count_asym_planar",
    "CountReport", "count_report",
    "phi_orbit", "canonical_planar", "symmetry_order",
    "count_rooted_planar_bruteforce", "count_asym_rooted_planar_bruteforce",
    "count_planar_bruteforce", "count_asym_planar_bruteforce",
]


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InconsistencyError(f"{what}: {num}/{den} is not an integer")
    return q


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")


def count_rooted_planar(n: int) -> int:
    _check_n(n)
    total = sum(euler_phi(n // d) * comb(2 * d, d) for d in divisors(n))
    return _exact_div(total, 2 * n, f"rooted planar count for n={n}")


def count_asym_rooted_planar(n: int) -> int:
    _check_n(n)
    total = sum(moebius(n // d) * comb(2 * d, d) for d in divisors(n))
    return _exact_div(total, 2 * n, f"asymmetric rooted planar count for n={n}")


def _half_corrections(n: int) -> tuple[int, int]:
    return catalan(n), chi_odd(n) * catalan((n - 1) // 2)


def count_planar(n: int) -> int:
    c, odd_term = _half_corrections(n)
    twice = 2 * count_rooted_planar(n) - c + odd_term
    return _exact_div(twice, 2, f"planar count for n={n}")


def count_asym_planar(n: int) -> int:
    c, odd_term = _half_corrections(n)
    twice = 2 * count_asym_rooted_planar(n) - c - odd_term
    return _exact_div(twice, 2, f"asymmetric planar count for n={n}")


@dataclass(frozen=True)
class CountReport:
    n: int
    catalan: int
    rooted_planar: int
    asym_rooted_planar: int
    planar: int
    asym_planar: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "catalan": self.catalan,
            "rootPT": self.rooted_planar,
            "asymRootPT": self.asym_rooted_planar,
            "PT": self.planar,
            "asymPT": self.asym_planar,
        }

    @classmethod
    def from_dict(cls, data: dict) -> CountReport:
        return cls(data["n"], data["catalan"], data["rootPT"], data["asymRootPT"], data["PT"], data["asymPT"])


def count_report(n: int) -> CountReport:
    return CountReport(
        n=n,
        catalan=catalan(n),
        rooted_planar=count_rooted_planar(n),
        asym_rooted_planar=count_asym_rooted_planar(n),
        planar=count_planar(n),
        asym_planar=count_asym_planar(n),
    )


# -- symmetry machinery -------------------------------------------------------

def phi_orbit(tree: PlaneTree) -> list[PlaneTree]:
    """[T, phi(T), ...] up to the first repeat."""
    orbit = [tree]
    nxt = phi(tree)
    while nxt != tree:
        orbit.append(nxt)
        nxt = phi(nxt)
    return orbit


def canonical_planar(tree: PlaneTree) -> PlaneTree:
    """Least Dyck word among all rerootings."""
    return min(phi_orbit(tree))


def symmetry_order(tree: PlaneTree) -> int:
    """Order of the rotational symmetry group of the underlying planar tree."""
    return 2 * tree.n // len(phi_orbit(tree))


def root_subtrees(tree: PlaneTree) -> list[str]:
    """Dyck words of the root's subtrees, each including its root edge."""
    parts, depth, start = [], 0, 0
    for pos, ch in enumerate(tree.dyck):
        depth += 1 if ch == "(" else -1
        if depth == 0:
            parts.append(tree.dyck[start : pos + 1])
            start = pos + 1
    return parts


def _min_rotation(seq: list[str]) -> tuple[tuple[str, ...], bool]:
    rotations = [tuple(seq[k:] + seq[:k]) for k in range(len(seq))]
    return min(rotations), len(set(rotations)) == len(rotations)


def _rooted_classes(n: int, limit: int | None) -> dict[tuple[str, ...], bool]:
    classes = {}
    for tree in enumerate_trees(n, limit=limit):
        key, primitive = _min_rotation(root_subtrees(tree))
        classes[key] = primitive
    return classes


def count_rooted_planar_bruteforce(n: int, limit: int | None = ENUMERATION_CAP) -> int:
    return len(_rooted_classes(n, limit))


def count_asym_rooted_planar_bruteforce(n: int, limit: int | None = ENUMERATION_CAP) -> int:
    return sum(_rooted_classes(n, limit).values())


def _orbit_lengths(n: int, limit: int | None) -> list[int]:
    seen: set[PlaneTree] = set()
    lengths = []
    for tree in enumerate_trees(n, limit=limit):
        if tree in seen:
            continue
        orbit = phi_orbit(tree)
        seen.update(orbit)
        lengths.append(len(orbit))
    return lengths


def count_planar_bruteforce(n: int, limit: int | None = ENUMERATION_CAP) -> int:
    return len(_orbit_lengths(n, limit))


def count_asym_planar_bruteforce(n: int, limit: int | None = ENUMERATION_CAP) -> int:
    return sum(1 for length in _orbit_lengths(n, limit) if length == 2 * n)
