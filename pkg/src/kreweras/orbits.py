"""Orbits of NC(n) under Kreweras complementation, computed on the tree side.

Since rho(phi(T)) = kreweras(rho(T)), the kreweras orbit of rho(T) has the
same length as the rerooting orbit of T.  ``orbit_table`` walks rerooting
orbits; ``orbit_table_kappa`` iterates kreweras directly and is kept as an
independent check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import ENUMERATION_CAP, catalan, divisors
from .counting import count_asym_planar, count_asym_rooted_planar, phi_orbit
from .nc import NoncrossingPartition, enumerate_nc, kreweras
from .trees import PlaneTree, enumerate_trees


@dataclass(frozen=True)
class OrbitTable:
    n: int
    entries: dict[int, int]
    representatives: dict[int, list[PlaneTree]] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        clean = {l: c for l, c in sorted(self.entries.items(), reverse=True) if c}
        object.__setattr__(self, "entries", clean)

    def count(self, length: int) -> int:
        return self.entries.get(length, 0)

    def total_orbits(self) -> int:
        return sum(self.entries.values())

    def total_elements(self) -> int:
        return sum(l * c for l, c in self.entries.items())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "orbits": [{"length": l, "count": c} for l, c in self.entries.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> OrbitTable:
        return cls(data["n"], {o["length"]: o["count"] for o in data["orbits"]})


def kappa_orbit(p: NoncrossingPartition) -> list[NoncrossingPartition]:
    orbit = [p]
    nxt = kreweras(p)
    while nxt != p:
        orbit.append(nxt)
        nxt = kreweras(nxt)
    return orbit


def orbit_table(n: int, limit: int | None = ENUMERATION_CAP) -> OrbitTable:
    """Exhaustive decomposition; one representative (least Dyck word) per orbit."""
    seen: set[PlaneTree] = set()
    entries: dict[int, int] = {}
    reps: dict[int, list[PlaneTree]] = {}
    # lexicographic enumeration meets each orbit first at its least element
    for tree in enumerate_trees(n, limit=limit):
        if tree in seen:
            continue
        orbit = phi_orbit(tree)
        seen.update(orbit)
        entries[len(orbit)] = entries.get(len(orbit), 0) + 1
        reps.setdefault(len(orbit), []).append(tree)
    return OrbitTable(n, entries, {l: reps[l] for l in sorted(reps, reverse=True)})


def orbit_table_kappa(n: int, limit: int | None = ENUMERATION_CAP) -> OrbitTable:
    seen: set[NoncrossingPartition] = set()
    entries: dict[int, int] = {}
    for p in enumerate_nc(n, limit=limit):
        if p in seen:
            continue
        orbit = kappa_orbit(p)
        seen.update(orbit)
        entries[len(orbit)] = entries.get(len(orbit), 0) + 1
    return OrbitTable(n, entries)


def allowed_lengths(n: int) -> set[int]:
    if n < 2:
        raise ValueError(f"allowed orbit lengths are defined for n >= 2, got {n}")
    lengths = {2 * d for d in divisors(n)}
    if n % 2:
        lengths.add(n)
    return lengths


def predicted_orbit_table(n: int) -> OrbitTable:
    """Orbit counts by length from the closed-form planar tree counts."""
    if n < 2:
        raise ValueError(f"the orbit count formulas need n >= 2, got {n}")
    entries = {2 * n: count_asym_planar(n)}
    if n % 2:
        entries[n] = catalan((n - 1) // 2)
    else:
        # also covers l = 2d with d = n/2
        entries[n] = count_asym_rooted_planar(n // 2)
    for d in divisors(n):
        if 2 * d < n:
            entries[2 * d] = count_asym_rooted_planar(d)
    return OrbitTable(n, entries)
