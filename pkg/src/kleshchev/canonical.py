"""Canonical basis of the highest-weight submodule of the Fock space.

Each G_v(lam) starts from a bar-invariant monomial A(lam) in divided powers of
the f_i applied to the empty multipartition, then has bar-symmetric multiples
of already-known G_v(mu) subtracted until every coefficient other than the
leading one lies in vZ[v].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .combinatorics import Multicharge, Multipartition, dominance_key, dominates, multipartitions
from .crystal import (
    cartan_entry,
    e_tilde,
    epsilon,
    epsilons,
    f_tilde,
    is_kleshchev,
    kleshchev_multipartitions,
    phi,
    phis,
)
from .fock import FockVector, divided_power, e_op, f_op
from .laurent import LaurentPoly, quantum_integer
from .report import ConsistencyError, Violation


class ConventionError(ConsistencyError):
    """The Fock-space and crystal conventions disagree (wrong leading term, stray label...)."""


class NotInSpanError(ValueError):
    pass


@dataclass(frozen=True)
class CanonicalBasisElement:
    label: Multipartition
    vector: FockVector
    monomial_trace: tuple[tuple[int, int], ...]  # (residue, exponent), applied left to right

    def at_v1(self) -> dict[Multipartition, int]:
        return {mu: p.evaluate_at_one() for mu, p in self.vector}


def peel(lam: Multipartition, charge: Multicharge) -> tuple[tuple[int, int], ...]:
    """Divided-power word (i, a) building lam from the empty multipartition.

    Peels whole i-strings, always taking the smallest i with eps_i > 0.
    """
    steps = []
    while lam.size:
        for i in range(charge.e):
            a = epsilon(lam, i, charge)
            if a:
                for _ in range(a):
                    lam = e_tilde(lam, i, charge)
                steps.append((i, a))
                break
        else:
            raise ConventionError(f"{lam} is not Kleshchev")
    return tuple(reversed(steps))


def monomial_vector(lam: Multipartition, charge: Multicharge) -> FockVector:
    return _monomial(lam, charge)[0]


def _monomial(lam: Multipartition, charge: Multicharge):
    if not is_kleshchev(lam, charge):
        raise ValueError(f"{lam} is not a Kleshchev multipartition for {charge}")
    trace = peel(lam, charge)
    vec = FockVector.vacuum(charge)
    for i, a in trace:
        vec = divided_power("f", i, a, vec)
    if vec.coefficient(lam) != 1:
        raise ConventionError(f"A({lam}) has leading coefficient {vec.coefficient(lam)}")
    return vec, trace


_BASES: dict[tuple[Multicharge, int], tuple[CanonicalBasisElement, ...]] = {}


def install_basis(charge: Multicharge, n: int, elements: Iterable[CanonicalBasisElement]) -> None:
    """Register an externally loaded basis (e.g. from the on-disk cache)."""
    elements = tuple(elements)
    _BASES[(charge, n)] = elements
    builder = _builder(charge)
    for el in elements:
        builder.done[el.label] = el


def clear_bases() -> None:
    _BASES.clear()
    _BUILDERS.clear()


def ordered_kleshchev(charge: Multicharge, n: int) -> list[Multipartition]:
    """KP(n) from most to least dominant (a linear extension of dominance)."""
    return sorted(kleshchev_multipartitions(charge, n),
                  key=lambda lam: dominance_key(lam, n, charge.reading_direction), reverse=True)


class _Builder:
    """Memoised canonical basis vectors for one multicharge.

    G(lam) is seeded with f_i^(a) G(mu), mu = e~_i^a lam and a = eps_i(lam).
    That seed equals G(lam) plus bar-symmetric multiples of G(b) with
    eps_i(b) > a, and those b need not dominate lam.  Terms below lam are
    stripped first (the least one always has a bar-symmetric coefficient
    and is a Kleshchev label); after that lam is the least term, with
    coefficient 1, and the remaining labels above it are cleaned into vZ[v]
    from the least dominant upwards.
    """

    def __init__(self, charge: Multicharge):
        self.charge = charge
        self.done: dict[Multipartition, CanonicalBasisElement] = {}
        self.busy: set[Multipartition] = set()

    def key(self, mu: Multipartition):
        return dominance_key(mu, mu.size, self.charge.reading_direction)

    def seed(self, lam: Multipartition) -> tuple[FockVector, tuple[tuple[int, int], ...]]:
        charge, direction = self.charge, self.charge.reading_direction
        fallback = None
        for i in range(charge.e):
            a = epsilon(lam, i, charge)
            if not a:
                continue
            mu = lam
            for _ in range(a):
                mu = e_tilde(mu, i, charge)
            below = self.element(mu)
            vec = divided_power("f", i, a, below.vector)
            trace = below.monomial_trace + ((i, a),)
            if all(dominates(nu, lam, direction) for nu in vec.terms):
                return vec, trace
            if fallback is None:
                fallback = (vec, trace)
        if fallback is None:
            raise ConventionError(f"{lam} has no removable good node")
        return fallback

    def element(self, lam: Multipartition) -> CanonicalBasisElement:
        if lam in self.done:
            return self.done[lam]
        charge = self.charge
        if lam.size == 0:
            el = CanonicalBasisElement(lam, FockVector.vacuum(charge), ())
            self.done[lam] = el
            return el
        if not is_kleshchev(lam, charge):
            raise ConventionError(f"a correction asked for G({lam}), but {lam} is not Kleshchev")
        if lam in self.busy:
            raise ConventionError(f"circular dependency while computing G({lam})")
        self.busy.add(lam)
        try:
            vec, trace = self.seed(lam)
            cap = 10 * max(len(kleshchev_multipartitions(charge, lam.size)), 1)
            steps = 0
            lam_key = self.key(lam)
            while True:
                nu = min(vec.terms, key=self.key)
                if nu == lam:
                    break
                if self.key(nu) > lam_key:
                    raise ConventionError(f"G({lam}) seed lost its leading term {lam}")
                c = vec.coefficient(nu)
                if not c.is_bar_symmetric():
                    raise ConventionError(f"seed for {lam} has non-symmetric coefficient {c} at {nu}")
                vec = vec.axpy(-c, self.element(nu).vector)
                steps += 1
                if steps > cap:
                    raise ConventionError(f"elimination for G({lam}) did not terminate within {cap} steps")
            if vec.coefficient(lam) != 1:
                raise ConventionError(f"G({lam}) has leading coefficient {vec.coefficient(lam)}")
            while True:
                # least dominant offender first: subtracting c*G(mu) only touches mu
                # and labels above it, so cleaned coefficients stay clean
                bad = [mu for mu, p in vec if mu != lam and not p.in_positive_v_span()]
                if not bad:
                    break
                mu = min(bad, key=self.key)
                corr = vec.coefficient(mu).bar_symmetric_correction()
                vec = vec.axpy(-corr, self.element(mu).vector)
                steps += 1
                if steps > cap:
                    raise ConventionError(f"elimination for G({lam}) did not terminate within {cap} steps")
        finally:
            self.busy.discard(lam)
        el = CanonicalBasisElement(lam, vec, trace)
        self.done[lam] = el
        return el


_BUILDERS: dict[Multicharge, _Builder] = {}


def _builder(charge: Multicharge) -> _Builder:
    if charge not in _BUILDERS:
        _BUILDERS[charge] = _Builder(charge)
    return _BUILDERS[charge]


def canonical_basis(charge: Multicharge, n: int) -> tuple[CanonicalBasisElement, ...]:
    """G_v(lam) for every lam in KP(n), most dominant label first."""
    key = (charge, n)
    if key not in _BASES:
        builder = _builder(charge)
        _BASES[key] = tuple(builder.element(lam) for lam in ordered_kleshchev(charge, n))
    return _BASES[key]


def canonical_element(lam: Multipartition, charge: Multicharge) -> CanonicalBasisElement:
    return _builder(charge).element(lam)


def basis_map(charge: Multicharge, n: int) -> dict[Multipartition, FockVector]:
    return {el.label: el.vector for el in canonical_basis(charge, n)}


def canonical_shape_violations(charge: Multicharge, n: int) -> list[Violation]:
    """Unitriangularity, vZ[v] off-diagonal entries and positivity of every G_v(lam)."""
    out = []
    direction = charge.reading_direction
    for el in canonical_basis(charge, n):
        lam = el.label
        if el.vector.coefficient(lam) != 1:
            out.append(Violation(str(lam), None, "leading", f"coefficient {el.vector.coefficient(lam)}"))
        for mu, p in el.vector:
            if mu == lam:
                continue
            if not dominates(mu, lam, direction):
                out.append(Violation(str(lam), None, "unitriangular", f"{mu} does not dominate {lam}"))
            if not p.in_positive_v_span():
                out.append(Violation(str(lam), None, "vZ[v]", f"coefficient {p} at {mu}"))
            if not p.has_nonnegative_coefficients():
                out.append(Violation(str(lam), None, "positivity", f"coefficient {p} at {mu}"))
    return out


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class DecompositionMatrix:
    charge: Multicharge
    n: int
    rows: tuple[Multipartition, ...]
    columns: tuple[Multipartition, ...]
    entries: Mapping[tuple[Multipartition, Multipartition], LaurentPoly]

    def entry(self, mu: Multipartition, lam: Multipartition) -> LaurentPoly:
        return self.entries.get((mu, lam), LaurentPoly())

    def at_v1(self, mu: Multipartition, lam: Multipartition) -> int:
        return self.entry(mu, lam).evaluate_at_one()

    def column(self, lam: Multipartition, at_one: bool = False) -> list:
        if at_one:
            return [self.at_v1(mu, lam) for mu in self.rows]
        return [self.entry(mu, lam) for mu in self.rows]

    def violations(self) -> list[Violation]:
        out = []
        direction = self.charge.reading_direction
        for lam in self.columns:
            if self.entry(lam, lam) != 1:
                out.append(Violation(str(lam), None, "d_ll", f"d_ll = {self.entry(lam, lam)}"))
        for (mu, lam), p in self.entries.items():
            if mu == lam:
                continue
            if not dominates(mu, lam, direction):
                out.append(Violation(str(lam), None, "unitriangular", f"d at {mu} nonzero"))
            if not p.in_positive_v_span():
                out.append(Violation(str(lam), None, "vZ[v]", f"d at {mu} = {p}"))
            if p.evaluate_at_one() < 0:
                out.append(Violation(str(lam), None, "nonnegative", f"d at {mu} = {p}"))
        return out


def decomposition_matrix(charge: Multicharge, n: int) -> DecompositionMatrix:
    direction = charge.reading_direction
    rows = tuple(sorted(multipartitions(n, charge.level),
                        key=lambda mu: (dominance_key(mu, n, direction), tuple(mu)), reverse=True))
    basis = canonical_basis(charge, n)
    entries = {}
    for el in basis:
        for mu, p in el.vector:
            entries[(mu, el.label)] = p
    return DecompositionMatrix(charge, n, rows, tuple(el.label for el in basis), entries)


# ---------------------------------------------------------------- expansions

def expand_in_canonical(vec: FockVector, charge: Multicharge | None = None) -> dict[Multipartition, LaurentPoly]:
    """Coordinates of ``vec`` in the canonical basis, by unitriangular back-substitution."""
    charge = charge or vec.charge
    direction = charge.reading_direction
    residual = vec
    coords: dict[Multipartition, LaurentPoly] = {}
    bases: dict[int, dict[Multipartition, FockVector]] = {}
    while residual:
        # the least dominant label of each size can only come from its own G
        mu = min(residual.terms, key=lambda lam: (lam.size, dominance_key(lam, lam.size, direction)))
        n = mu.size
        if n not in bases:
            bases[n] = basis_map(charge, n)
        if mu not in bases[n]:
            raise NotInSpanError(f"residual term at {mu} is outside the span of the canonical basis")
        c = residual.coefficient(mu)
        coords[mu] = coords.get(mu, LaurentPoly()) + c
        residual = residual.axpy(-c, bases[n][mu])
    return {mu: c for mu, c in coords.items() if c}


def check_kashiwara_expansion(i: int, lam: Multipartition, charge: Multicharge) -> list[Violation]:
    """Leading coefficients and crystal inequalities for e_i G(lam) and f_i G(lam)."""
    out = []
    e = charge.e
    g = basis_map(charge, lam.size)[lam]
    eps_l, phi_l = epsilons(lam, charge), phis(lam, charge)

    for kind, op, lead_label, lead_coeff, stat, base in (
        ("e", e_op, e_tilde(lam, i, charge), quantum_integer(phi_l[i] + 1), phis, phi_l),
        ("f", f_op, f_tilde(lam, i, charge), quantum_integer(eps_l[i] + 1), epsilons, eps_l),
    ):
        try:
            coords = expand_in_canonical(op(i, g), charge)
        except NotInSpanError as exc:
            out.append(Violation(str(lam), i, f"{kind}-span", str(exc)))
            continue
        got = coords.get(lead_label, LaurentPoly()) if lead_label is not None else None
        if lead_label is not None and got != lead_coeff:
            out.append(Violation(str(lam), i, f"{kind}-leading",
                                 f"coefficient of G({lead_label}) is {got}, expected {lead_coeff}"))
        for b, c in coords.items():
            if b == lead_label:
                continue
            sb = stat(b, charge)
            for j in range(e):
                if sb[j] < base[j] + cartan_entry(j, i, e):
                    name = "phi" if kind == "e" else "eps"
                    out.append(Violation(str(lam), i, f"{kind}-inequality",
                                         f"G({b}) with coefficient {c} has {name}_{j}={sb[j]} "
                                         f"< {base[j]}+{cartan_entry(j, i, e)}"))
    return out


def projective_branch_expansion(i: int, mu: Multipartition, charge: Multicharge, direction: str = "f") -> list[tuple[Multipartition, int]]:
    """x_i G(mu) at v = 1 in the canonical basis, as (label, multiplicity) pairs.

    The leading label (f~_i mu or e~_i mu) comes first, the rest from most to
    least dominant.
    """
    op = {"f": f_op, "e": e_op}[direction]
    g = basis_map(charge, mu.size)[mu]
    coords = expand_in_canonical(op(i, g), charge)
    pairs = [(b, c.evaluate_at_one()) for b, c in coords.items()]
    pairs = [(b, m) for b, m in pairs if m]
    lead = f_tilde(mu, i, charge) if direction == "f" else e_tilde(mu, i, charge)
    d = charge.reading_direction
    pairs.sort(key=lambda t: (t[0] != lead, tuple(-x for x in dominance_key(t[0], t[0].size, d))))
    return pairs


def check_projective_expansion(i: int, mu: Multipartition, charge: Multicharge, direction: str = "f") -> list[Violation]:
    out = []
    pairs = projective_branch_expansion(i, mu, charge, direction)
    if direction == "f":
        lead, stat, need = f_tilde(mu, i, charge), epsilon, epsilon(mu, i, charge)
    else:
        lead, stat, need = e_tilde(mu, i, charge), phi, phi(mu, i, charge)
    got = dict(pairs)
    if lead is not None and got.get(lead) != need + 1:
        out.append(Violation(str(mu), i, f"{direction}P-leading",
                             f"multiplicity of P({lead}) is {got.get(lead)}, expected {need + 1}"))
    for b, m in pairs:
        if m < 0:
            out.append(Violation(str(mu), i, f"{direction}P-positive", f"multiplicity {m} at {b}"))
        if b != lead and stat(b, i, charge) < need + 2:
            out.append(Violation(str(mu), i, f"{direction}P-gap",
                                 f"{b} has statistic {stat(b, i, charge)} < {need}+2"))
    return out
