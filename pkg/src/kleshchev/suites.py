"""Property suites shared by the ``verify`` subcommand and the acceptance tests.

Every suite takes a charge and a size bound and returns a list of Violation;
an empty list means the property holds on that range.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from .branching import branch_simple, dim_simple, dim_specht
from .canonical import (
    basis_map,
    canonical_shape_violations,
    check_kashiwara_expansion,
    check_projective_expansion,
    decomposition_matrix,
)
from .combinatorics import BOTTOM_UP, Multicharge
from .crystal import (
    check_axioms,
    count_paths,
    generate_crystal,
    kleshchev_multipartitions,
    weight_multiplicity,
    weight_of,
    weights_of_depth,
)
from .fock import FockVector, verify_commutators, verify_serre
from .report import Violation

GRID_E = (2, 3, 4)
GRID_GAMMA = ((0,), (0, 0), (0, 1))


def grid(direction: str = BOTTOM_UP) -> list[Multicharge]:
    return [Multicharge(e, g, direction) for e in GRID_E for g in GRID_GAMMA]


def crystal_axioms(charge: Multicharge, n: int) -> list[Violation]:
    return check_axioms(generate_crystal(charge, n))


def character_identity(charge: Multicharge, depth: int) -> list[Violation]:
    out = []
    for d in range(depth + 1):
        counts = Counter(weight_of(lam, charge).alpha_coeffs for lam in kleshchev_multipartitions(charge, d))
        for beta in weights_of_depth(charge.e, d):
            want = weight_multiplicity(charge, beta, depth_cap=max(depth, 12))
            if counts.get(beta, 0) != want:
                out.append(Violation(f"Lambda-{beta}", None, "character",
                                     f"{counts.get(beta, 0)} Kleshchev labels, Freudenthal gives {want}"))
    return out


def quantum_relations(charge: Multicharge, n: int) -> list[Violation]:
    return verify_commutators(charge, n) + verify_serre(charge, n)


def canonical_shape(charge: Multicharge, n: int) -> list[Violation]:
    out = []
    for k in range(n + 1):
        out += canonical_shape_violations(charge, k)
        out += decomposition_matrix(charge, k).violations()
    return out


def kashiwara_lemma(charge: Multicharge, n: int) -> list[Violation]:
    out = []
    for k in range(n + 1):
        for lam in kleshchev_multipartitions(charge, k):
            for i in range(charge.e):
                out += check_kashiwara_expansion(i, lam, charge)
    return out


def projective_expansions(charge: Multicharge, n: int) -> list[Violation]:
    out = []
    for k in range(n + 1):
        for mu in kleshchev_multipartitions(charge, k):
            for i in range(charge.e):
                out += check_projective_expansion(i, mu, charge, "f")
                out += check_projective_expansion(i, mu, charge, "e")
    return out


def branching_rule(charge: Multicharge, n: int) -> list[Violation]:
    out = []
    for k in range(1, n + 1):
        for lam in kleshchev_multipartitions(charge, k):
            for i in range(charge.e):
                rep = branch_simple(lam, i, charge)
                if not rep.passed:
                    out.append(Violation(str(lam), i, "branching", "; ".join(rep.reasons)))
    return out


def dimension_bound(charge: Multicharge, n: int) -> list[Violation]:
    out = []
    graph = generate_crystal(charge, n)
    for k in range(n + 1):
        basis = basis_map(charge, k)
        for lam in kleshchev_multipartitions(charge, k):
            dim, paths = dim_simple(lam, charge), count_paths(graph, lam)
            if dim < paths:
                out.append(Violation(str(lam), None, "dim-bound", f"dim D = {dim} < {paths} paths"))
            if basis[lam] == FockVector.basis(charge, lam) and dim != dim_specht(lam):
                out.append(Violation(str(lam), None, "dim-specht",
                                     f"G(lam) = lam but dim D = {dim} != dim S = {dim_specht(lam)}"))
    return out


# name -> (runner, default bound, criterion number)
SUITES = {
    "crystal_axioms": (crystal_axioms, 10, 1),
    "character_identity": (character_identity, 8, 2),
    "quantum_relations": (quantum_relations, 6, 3),
    "canonical_shape": (canonical_shape, 8, 4),
    "kashiwara_lemma": (kashiwara_lemma, 7, 5),
    "projective_expansions": (projective_expansions, 7, 6),
    "branching_rule": (branching_rule, 8, 7),
    "dimension_bound": (dimension_bound, 8, 8),
}


@dataclass
class SuiteResult:
    name: str
    charge: Multicharge
    bound: int
    violations: list[Violation] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def row(self) -> dict:
        return {
            "suite": self.name,
            "e": self.charge.e,
            "charge": ",".join(map(str, self.charge.gamma)),
            "convention": self.charge.reading_direction,
            "bound": self.bound,
            "violations": len(self.violations),
            "verdict": "pass" if self.passed else "fail",
        }


def run_suite(name: str, charge: Multicharge, bound: int | None = None) -> SuiteResult:
    runner, default, _ = SUITES[name]
    bound = default if bound is None else bound
    t0 = time.perf_counter()
    found = runner(charge, bound)
    return SuiteResult(name, charge, bound, sorted(set(found)), time.perf_counter() - t0)


def run_all(charge: Multicharge, n: int) -> list[SuiteResult]:
    """Every suite at size n; the expansion checks need bases one size up, so they stop at n - 1."""
    out = []
    for name in SUITES:
        bound = max(n - 1, 0) if name in ("kashiwara_lemma", "projective_expansions") else n
        out.append(run_suite(name, charge, bound))
    return out

