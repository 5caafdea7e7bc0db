"""Exhaustive cross-check harness behind ``kreweras verify``.

Each family runs a batch of independent checks over a range of n and keeps the
first few counterexamples.  Pair-quadratic families are capped at smaller n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from .arith import catalan
from .counting import (
    count_asym_planar,
    count_asym_planar_bruteforce,
    count_asym_rooted_planar,
    count_asym_rooted_planar_bruteforce,
    count_planar,
    count_planar_bruteforce,
    count_rooted_planar,
    count_rooted_planar_bruteforce,
    phi_orbit,
    symmetry_order,
)
from .nc import (
    NoncrossingPartition,
    is_complement,
    kreweras,
    kreweras_bruteforce,
    rotate_nc,
)
from .orbits import allowed_lengths, orbit_table, predicted_orbit_table
from .sieve import csp_verify, fixed_point_count
from .trees import (
    edge_parity,
    enumerate_trees,
    is_meander,
    parent_edges,
    phi,
    phi_inverse,
    rho,
    rho_bar,
    rho_inverse,
)

MAX_COUNTEREXAMPLES = 3
PAIR_CAP = 5  # meander/complement pairs
ANTI_ISO_CAP = 6
ORACLE_CAP = 6  # brute-force Kreweras
KAPPA_ORBIT_CAP = 8
BURNSIDE_CAP = 8
CSP_CAP = 8
EXACT_DIVISION_MAX = 64


@dataclass
class Family:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    failed: int = 0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checks += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_COUNTEREXAMPLES:
                self.failures.append(describe())


@dataclass
class VerifyReport:
    lo: int
    hi: int
    families: list[Family]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families)

    def family(self, name: str) -> Family:
        return next(f for f in self.families if f.name == name)

    def to_dict(self) -> dict:
        return {
            "range": [self.lo, self.hi],
            "passed": self.passed,
            "families": [
                {
                    "name": f.name,
                    "checks": f.checks,
                    "failed": f.failed,
                    "passed": f.passed,
                    "counterexamples": f.failures,
                }
                for f in self.families
            ],
        }

    def format_text(self) -> str:
        width = max(len(f.name) for f in self.families)
        lines = []
        for f in self.families:
            status = "PASS" if f.passed else "FAIL"
            lines.append(f"{f.name:<{width}}  {status}  {f.checks} checks")
            for ex in f.failures:
                lines.append(f"    counterexample: {ex}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _faulty_kreweras(n_fault: int) -> Callable[[NoncrossingPartition], NoncrossingPartition]:
    """Kreweras with one wrong output (top of NC(n_fault) maps to itself)."""

    def kappa(p):
        if p.n == n_fault and len(p.blocks) == 1 and n_fault > 1:
            return p
        return kreweras(p)

    return kappa


def run_verify(lo: int, hi: int, inject_fault: bool = False) -> VerifyReport:
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid range {lo}..{hi}")
    kappa = _faulty_kreweras(hi) if inject_fault else kreweras
    fam = {name: Family(name) for name in (
        "theorem-commute",
        "rho-bar-is-kreweras",
        "meander-lemma",
        "meander-implies-complement",
        "kreweras-oracle",
        "kreweras-complement",
        "kreweras-period",
        "kreweras-square-rotation",
        "anti-isomorphism",
        "involution-only-small-n",
        "bijections",
        "rho-inverse-roundtrip",
        "parity-structure",
        "orbit-theorem",
        "allowed-lengths",
        "orbit-period-consistency",
        "closed-form-counts",
        "exact-divisions",
        "symmetry-order",
        "csp",
        "burnside",
    )}

    for n in range(lo, hi + 1):
        trees = list(enumerate_trees(n))
        parts = [rho(t) for t in trees]
        images = [kappa(p) for p in parts]
        top, bottom = NoncrossingPartition.top(n), NoncrossingPartition.bottom(n)

        f = fam["theorem-commute"]
        for t, p, k in zip(trees, parts, images):
            f.check(rho(phi(t)) == k, lambda: f"n={n} T={t}: rho(phi(T))={rho(phi(t))} kappa(rho(T))={k}")
        f = fam["rho-bar-is-kreweras"]
        for t, k in zip(trees, images):
            f.check(rho_bar(t) == k, lambda: f"n={n} T={t}: rho_bar={rho_bar(t)} kappa(rho)={k}")
        f = fam["meander-lemma"]
        for t in trees:
            f.check(is_meander(t, phi(t)), lambda: f"n={n} T={t}")

        if n <= PAIR_CAP:
            f = fam["meander-implies-complement"]
            for a, pa in zip(trees, parts):
                for b, pb in zip(trees, parts):
                    if is_meander(a, b):
                        f.check(is_complement(pa, pb), lambda: f"n={n} T={a} T'={b}")
        if n <= ORACLE_CAP:
            f = fam["kreweras-oracle"]
            for p, k in zip(parts, images):
                f.check(kreweras_bruteforce(p) == k, lambda: f"n={n} P={p}: got {k}")

        f = fam["kreweras-complement"]
        for p, k in zip(parts, images):
            f.check(is_complement(p, k), lambda: f"n={n} P={p} kappa(P)={k}")

        f_period = fam["kreweras-period"]
        f_rot = fam["kreweras-square-rotation"]
        for p, k in zip(parts, images):
            q = p
            for _ in range(2 * n):
                q = kappa(q)
            f_period.check(q == p, lambda: f"n={n} P={p}: kappa^(2n)(P)={q}")
            k2 = kappa(k)
            f_rot.check(k2 == rotate_nc(p, 1), lambda: f"n={n} P={p}: kappa^2={k2} rotation={rotate_nc(p, 1)}")

        if n <= ANTI_ISO_CAP:
            f = fam["anti-isomorphism"]
            for p, kp in zip(parts, images):
                for q, kq in zip(parts, images):
                    f.check(p.refines(q) == kq.refines(kp), lambda: f"n={n} P={p} Q={q}")

        f = fam["involution-only-small-n"]
        involutive = all(kappa(k) == p for p, k in zip(parts, images))
        f.check(involutive == (n <= 2), lambda: f"n={n}: kappa^2 = id is {involutive}")

        f = fam["bijections"]
        expected = catalan(n)
        for label, image in (
            ("kappa", images),
            ("phi", [phi(t) for t in trees]),
            ("rho", parts),
            ("rho_bar", [rho_bar(t) for t in trees]),
        ):
            size = len(set(image))
            f.check(size == expected, lambda: f"n={n}: {label} image has {size} of {expected}")
        for t in trees:
            f.check(phi_inverse(phi(t)) == t, lambda: f"n={n} T={t}: phi_inverse(phi(T)) != T")

        f = fam["rho-inverse-roundtrip"]
        for t, p in zip(trees, parts):
            f.check(rho_inverse(p) == t, lambda: f"n={n} T={t}: rho_inverse(rho(T))={rho_inverse(p)}")
        f.check(rho(trees[-1]) == top or n == 1, lambda: f"n={n}: rho(star_tp) is not top")
        f.check(kappa(top) == bottom or n == 1, lambda: f"n={n}: kappa(top)={kappa(top)}")

        f = fam["parity-structure"]
        for t in trees:
            parent = parent_edges(t)
            ok = all(
                edge_parity(e) == "odd" if up is None else edge_parity(e) != edge_parity(up)
                for e, up in parent.items()
            )
            f.check(ok, lambda: f"n={n} T={t}")

        table = orbit_table(n)
        f = fam["orbit-theorem"]
        f.check(table.total_elements() == catalan(n), lambda: f"n={n}: sum l*o = {table.total_elements()}")
        f.check(table.total_orbits() == count_planar(n), lambda: f"n={n}: sum o = {table.total_orbits()}")
        if n >= 2:
            pred = predicted_orbit_table(n)
            f.check(table.entries == pred.entries, lambda: f"n={n}: observed {table.entries} predicted {pred.entries}")
            f = fam["allowed-lengths"]
            allowed = allowed_lengths(n)
            for length in table.entries:
                f.check(length in allowed, lambda: f"n={n}: orbit length {length} not in {sorted(allowed)}")

        if n <= KAPPA_ORBIT_CAP:
            f = fam["orbit-period-consistency"]
            for t, p in zip(trees, parts):
                period, q = 1, kappa(p)
                while q != p and period <= 2 * n:
                    q = kappa(q)
                    period += 1
                tree_period = len(phi_orbit(t))
                f.check(period == tree_period, lambda: f"n={n} P={p}: kappa period {period}, phi period {tree_period}")

        f = fam["closed-form-counts"]
        for label, closed, brute in (
            ("rootPT", count_rooted_planar, count_rooted_planar_bruteforce),
            ("asymRootPT", count_asym_rooted_planar, count_asym_rooted_planar_bruteforce),
            ("PT", count_planar, count_planar_bruteforce),
            ("asymPT", count_asym_planar, count_asym_planar_bruteforce),
        ):
            a, b = closed(n), brute(n)
            f.check(a == b, lambda: f"n={n}: {label} closed form {a}, brute force {b}")

        f = fam["symmetry-order"]
        for t in trees:
            s = symmetry_order(t)
            f.check((2 * n) % s == 0 and symmetry_order(phi(t)) == s, lambda: f"n={n} T={t}: order {s}")

        if n <= CSP_CAP:
            f = fam["csp"]
            report = csp_verify(n)
            f.check(report.passed, lambda: f"n={n}: csp report failed")
            f.check(report.conditions_agree, lambda: f"n={n}: conditions disagree")
            f.check(report.residues[0] == count_planar(n), lambda: f"n={n}: a_0={report.residues[0]}")
            if n >= 2:
                f.check(report.residues[1] == count_asym_planar(n), lambda: f"n={n}: a_1={report.residues[1]}")

        if n <= BURNSIDE_CAP:
            f = fam["burnside"]
            total = sum(fixed_point_count(n, c) for c in range(2 * n))
            f.check(total == 2 * n * table.total_orbits(), lambda: f"n={n}: sum of fixed points {total}")
            for c in range(1, 2 * n):
                g = gcd(c, 2 * n)
                a, b = fixed_point_count(n, c), fixed_point_count(n, g)
                f.check(a == b, lambda: f"n={n}: fixed({c})={a} fixed({g})={b}")

    f = fam["exact-divisions"]
    for n in range(1, EXACT_DIVISION_MAX + 1):
        try:
            count_planar(n), count_asym_planar(n)
            ok = True
        except ArithmeticError:
            ok = False
        f.check(ok, lambda: f"n={n}: inexact division")

    return VerifyReport(lo, hi, list(fam.values()))
