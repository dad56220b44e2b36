"""The v-deformed Fock space with the Hayashi action of e_i and f_i.

For an addable i-node b of lam, f_i puts coefficient v^(A-R) on lam+b, where
A and R count the addable and removable i-nodes of lam strictly before b in
reading order.  For a removable i-node b of mu, e_i puts v^(R-A) on mu-b with
the counts taken strictly after b.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .combinatorics import Multicharge, Multipartition, dominance_key, i_word, multipartitions
from .crystal import cartan_entry, weight_of
from .laurent import LaurentPoly, quantum_factorial, quantum_integer
from .report import Violation


class FockVector:
    """Finitely supported map from multipartitions to Laurent polynomials."""

    __slots__ = ("charge", "terms")

    def __init__(self, charge: Multicharge, terms: Mapping[Multipartition, LaurentPoly] | None = None):
        self.charge = charge
        self.terms = {lam: p for lam, p in (terms or {}).items() if p}

    @classmethod
    def basis(cls, charge: Multicharge, lam: Multipartition) -> "FockVector":
        if len(lam) != charge.level:
            raise ValueError(f"{lam} does not have {charge.level} components")
        return cls(charge, {lam: LaurentPoly.const(1)})

    @classmethod
    def vacuum(cls, charge: Multicharge) -> "FockVector":
        return cls.basis(charge, Multipartition.empty(charge.level))

    @property
    def homogeneous_size(self) -> int | None:
        sizes = {lam.size for lam in self.terms}
        return sizes.pop() if len(sizes) == 1 else None

    def coefficient(self, lam: Multipartition) -> LaurentPoly:
        return self.terms.get(lam, LaurentPoly())

    def support(self) -> list[Multipartition]:
        return list(self.terms)

    def __iter__(self) -> Iterator[tuple[Multipartition, LaurentPoly]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.charge == other.charge and self.terms == other.terms

    def _combine(self, other: "FockVector", scale: LaurentPoly | int) -> "FockVector":
        terms = dict(self.terms)
        for lam, p in other.terms.items():
            q = terms.get(lam)
            s = p * scale if q is None else q + p * scale
            if s:
                terms[lam] = s
            else:
                terms.pop(lam, None)
        out = FockVector.__new__(FockVector)
        out.charge, out.terms = self.charge, terms
        return out

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def axpy(self, scale: LaurentPoly | int, other: "FockVector") -> "FockVector":
        """self + scale * other."""
        return self._combine(other, scale)

    def scale(self, c: LaurentPoly | int) -> "FockVector":
        return FockVector(self.charge, {lam: p * c for lam, p in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def sorted_terms(self) -> list[tuple[Multipartition, LaurentPoly]]:
        """Terms from most to least dominant, ties broken lexicographically."""
        direction = self.charge.reading_direction

        def key(item):
            lam = item[0]
            return (lam.size, dominance_key(lam, lam.size, direction), tuple(lam))

        return sorted(self.terms.items(), key=key, reverse=True)

    def to_json(self) -> list:
        return [[lam.to_json(), str(p)] for lam, p in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam, p in self.sorted_terms():
            parts.append(str(lam) if p == 1 else f"({p}){lam}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FockVector({self})"


@lru_cache(maxsize=None)
def _f_action(lam: Multipartition, i: int, charge: Multicharge) -> tuple[tuple[Multipartition, int], ...]:
    out, n = [], 0
    for b, tag in i_word(lam, i, charge):
        if tag == "A":
            out.append((lam.add_node(b), n))
            n += 1
        else:
            n -= 1
    return tuple(out)


@lru_cache(maxsize=None)
def _e_action(mu: Multipartition, i: int, charge: Multicharge) -> tuple[tuple[Multipartition, int], ...]:
    out, n = [], 0
    for b, tag in reversed(i_word(mu, i, charge)):
        if tag == "R":
            out.append((mu.remove_node(b), n))
            n += 1
        else:
            n -= 1
    return tuple(out)


def _apply(action, i: int, vec: FockVector) -> FockVector:
    acc: dict[Multipartition, dict[int, int]] = {}
    for lam, p in vec.terms.items():
        for mu, k in action(lam, i, vec.charge):
            slot = acc.setdefault(mu, {})
            for d, a in p._c.items():
                slot[d + k] = slot.get(d + k, 0) + a
    terms = {}
    for mu, c in acc.items():
        c = {d: a for d, a in c.items() if a}
        if c:
            terms[mu] = LaurentPoly._wrap(c)
    out = FockVector.__new__(FockVector)
    out.charge, out.terms = vec.charge, terms
    return out


def f_op(i: int, vec: FockVector) -> FockVector:
    return _apply(_f_action, i, vec)


def e_op(i: int, vec: FockVector) -> FockVector:
    return _apply(_e_action, i, vec)


def divided_power(kind: str, i: int, k: int, vec: FockVector) -> FockVector:
    """x_i^k / [k]! for x in {"f", "e"}; division must be exact."""
    if k < 0:
        raise ValueError("divided powers need k >= 0")
    op = {"f": f_op, "e": e_op}[kind]
    for _ in range(k):
        vec = op(i, vec)
    if k < 2:
        return vec
    denom = quantum_factorial(k)
    return FockVector(vec.charge, {lam: p.exact_div(denom) for lam, p in vec.terms.items()})


def specialize_v1(vec: FockVector) -> dict[Multipartition, int]:
    out = {}
    for lam, p in vec.terms.items():
        a = p.evaluate_at_one()
        if a:
            out[lam] = a
    return out


def all_multipartitions(charge: Multicharge, n_max: int) -> Iterable[Multipartition]:
    for n in range(n_max + 1):
        yield from multipartitions(n, charge.level)


Operator = Callable[[int, FockVector], FockVector]


def verify_commutators(charge: Multicharge, n_max: int, e: Operator = e_op, f: Operator = f_op) -> list[Violation]:
    """(e_i f_j - f_j e_i) lam == delta_ij [<h_i, wt(lam)>] lam on every basis vector."""
    out = []
    for lam in all_multipartitions(charge, n_max):
        x = FockVector.basis(charge, lam)
        wt = weight_of(lam, charge)
        for i in range(charge.e):
            for j in range(charge.e):
                lhs = e(i, f(j, x)) - f(j, e(i, x))
                rhs = x.scale(quantum_integer(wt.pairing(i))) if i == j else FockVector(charge)
                if lhs != rhs:
                    out.append(Violation(str(lam), i, f"[e_{i},f_{j}]", f"got {lhs}, expected {rhs}"))
    return out


def serre_element(kind: str, i: int, j: int, vec: FockVector) -> FockVector:
    """sum_k (-1)^k x_i^(k) x_j x_i^(N-k) vec with N = 1 - a_ij."""
    op = {"f": f_op, "e": e_op}[kind]
    big_n = 1 - cartan_entry(i, j, vec.charge.e)
    total = FockVector(vec.charge)
    for k in range(big_n + 1):
        w = divided_power(kind, i, big_n - k, vec)
        w = op(j, w)
        w = divided_power(kind, i, k, w)
        total = total.axpy(-1 if k % 2 else 1, w)
    return total


def verify_serre(charge: Multicharge, n_max: int) -> list[Violation]:
    out = []
    for lam in all_multipartitions(charge, n_max):
        x = FockVector.basis(charge, lam)
        for i in range(charge.e):
            for j in range(charge.e):
                if i == j:
                    continue
                for kind in ("f", "e"):
                    res = serre_element(kind, i, j, x)
                    if res:
                        out.append(Violation(str(lam), i, f"serre_{kind}({i},{j})", f"nonzero: {res}"))
    return out
