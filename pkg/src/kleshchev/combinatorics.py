"""Partitions, multipartitions, nodes and residues.

Multipartitions are immutable tuples of partitions (themselves tuples of
positive weakly decreasing integers), so they hash and compare cheaply and
can key the caches used throughout the engine.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

BOTTOM_UP = "bottom_up"
TOP_DOWN = "top_down"
READING_DIRECTIONS = (BOTTOM_UP, TOP_DOWN)


@dataclass(frozen=True)
class Multicharge:
    """Quantum characteristic ``e`` and the residues ``gamma`` of the components."""

    e: int
    gamma: tuple[int, ...]
    reading_direction: str = BOTTOM_UP
    lambda_h: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 2:
            raise ValueError(f"e must be an integer >= 2, got {self.e!r}")
        gamma = tuple(int(g) % self.e for g in self.gamma)
        if not gamma:
            raise ValueError("a multicharge needs at least one component")
        if self.reading_direction not in READING_DIRECTIONS:
            raise ValueError(f"unknown reading direction {self.reading_direction!r}")
        object.__setattr__(self, "gamma", gamma)
        counts = [0] * self.e
        for g in gamma:
            counts[g] += 1
        # Lambda(h_i): number of components coloured i
        object.__setattr__(self, "lambda_h", tuple(counts))

    @property
    def level(self) -> int:
        return len(self.gamma)

    def mirrored(self) -> "Multicharge":
        other = TOP_DOWN if self.reading_direction == BOTTOM_UP else BOTTOM_UP
        return Multicharge(self.e, self.gamma, other)

    def __str__(self):
        return f"e={self.e} charge={','.join(map(str, self.gamma))} {self.reading_direction}"


class Node(NamedTuple):
    """A cell (component, row, column), all 1-based."""

    k: int
    r: int
    c: int


class Multipartition(tuple):
    """An m-tuple of partitions.

    >>> Multipartition([[2, 1], []])
    Multipartition(((2, 1), ()))
    >>> Multipartition([[2, 1], [1]]).size
    4
    """

    __slots__ = ()

    def __new__(cls, components: Sequence[Sequence[int]]):
        comps = []
        for comp in components:
            parts = tuple(int(p) for p in comp if p != 0)
            if any(p < 0 for p in parts):
                raise ValueError(f"negative part in {comp!r}")
            if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
                raise ValueError(f"parts not weakly decreasing: {comp!r}")
            comps.append(parts)
        if not comps:
            raise ValueError("a multipartition has at least one component")
        return tuple.__new__(cls, comps)

    @classmethod
    def _raw(cls, comps) -> "Multipartition":
        return tuple.__new__(cls, comps)

    @classmethod
    def empty(cls, m: int) -> "Multipartition":
        return tuple.__new__(cls, ((),) * m)

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> "Multipartition":
        """Parse ``"2,1"`` (level one) or ``"2,1|1|"`` (components split by ``|``)."""
        pieces = text.strip().split("|")
        comps = [[int(x) for x in p.split(",") if x.strip()] for p in pieces]
        if m is not None and len(comps) != m:
            raise ValueError(f"expected {m} components in {text!r}")
        return cls(comps)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self)

    @property
    def level(self) -> int:
        return len(self)

    def cells(self) -> Iterator[Node]:
        for k, comp in enumerate(self, start=1):
            for r, length in enumerate(comp, start=1):
                for c in range(1, length + 1):
                    yield Node(k, r, c)

    def add_node(self, node: Node) -> "Multipartition":
        comps = list(self)
        comp = list(comps[node.k - 1])
        r, c = node.r, node.c
        row = comp[r - 1] if r <= len(comp) else 0
        if r > len(comp) + 1 or c != row + 1 or (r > 1 and comp[r - 2] < c):
            raise ValueError(f"{node} is not addable to {self}")
        if node.r == len(comp) + 1:
            comp.append(1)
        else:
            comp[node.r - 1] += 1
        comps[node.k - 1] = tuple(comp)
        return Multipartition._raw(comps)

    def remove_node(self, node: Node) -> "Multipartition":
        comps = list(self)
        comp = list(comps[node.k - 1])
        r, c = node.r, node.c
        if r > len(comp) or comp[r - 1] != c or (r < len(comp) and comp[r] >= c):
            raise ValueError(f"{node} is not removable from {self}")
        comp[node.r - 1] -= 1
        if comp[node.r - 1] == 0:
            comp.pop()
        comps[node.k - 1] = tuple(comp)
        return Multipartition._raw(comps)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self]

    def __repr__(self):
        return f"Multipartition({tuple(self)!r})"

    def __str__(self):
        def fmt(comp):
            return "(" + ",".join(map(str, comp)) + ")"

        if len(self) == 1:
            return fmt(self[0]) if self[0] else "∅"
        if not any(self):
            return "∅"
        return "(" + ",".join(fmt(c) if c else "∅" for c in self) + ")"


def residue(node: Node, charge: Multicharge) -> int:
    return (charge.gamma[node.k - 1] + node.c - node.r) % charge.e


def reading_key(node: Node, direction: str = BOTTOM_UP) -> tuple[int, int]:
    """Sort key: nodes earlier in reading order have smaller keys.

    At most one addable or removable node of a given residue sits in each
    row, so (component, row) is enough to order them.
    """
    if direction == BOTTOM_UP:
        return (-node.k, -node.r)
    return (node.k, node.r)


def addable_nodes(lam: Multipartition) -> list[Node]:
    out = []
    for k, comp in enumerate(lam, start=1):
        prev = None
        for r in range(1, len(comp) + 2):
            length = comp[r - 1] if r <= len(comp) else 0
            if prev is None or prev > length:
                out.append(Node(k, r, length + 1))
            prev = length
    return out


def removable_nodes(lam: Multipartition) -> list[Node]:
    out = []
    for k, comp in enumerate(lam, start=1):
        for r, length in enumerate(comp, start=1):
            below = comp[r] if r < len(comp) else 0
            if length > below:
                out.append(Node(k, r, length))
    return out


@lru_cache(maxsize=None)
def boundary_nodes(lam: Multipartition, i: int, charge: Multicharge) -> tuple[tuple[Node, ...], tuple[Node, ...]]:
    """Addable and removable ``i``-nodes of ``lam``, each sorted in reading order."""
    key = lambda b: reading_key(b, charge.reading_direction)
    add = sorted((b for b in addable_nodes(lam) if residue(b, charge) == i), key=key)
    rem = sorted((b for b in removable_nodes(lam) if residue(b, charge) == i), key=key)
    return tuple(add), tuple(rem)


@lru_cache(maxsize=None)
def i_word(lam: Multipartition, i: int, charge: Multicharge) -> tuple[tuple[Node, str], ...]:
    """All addable (``"A"``) and removable (``"R"``) i-nodes merged in reading order."""
    add, rem = boundary_nodes(lam, i, charge)
    letters = [(b, "A") for b in add] + [(b, "R") for b in rem]
    letters.sort(key=lambda t: reading_key(t[0], charge.reading_direction))
    return tuple(letters)


def residue_counts(lam: Multipartition, charge: Multicharge) -> tuple[int, ...]:
    counts = [0] * charge.e
    for b in lam.cells():
        counts[residue(b, charge)] += 1
    return tuple(counts)


# ---------------------------------------------------------------- dominance

class Order(str, enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"

    def flipped(self) -> "Order":
        return {Order.GREATER: Order.LESS, Order.LESS: Order.GREATER}.get(self, self)


def _partial_sums(lam: Multipartition, n: int) -> list[int]:
    sums, total = [], 0
    for comp in lam:
        for r in range(n):
            total += comp[r] if r < len(comp) else 0
            sums.append(total)
    return sums


def dominance_compare(lam: Multipartition, mu: Multipartition, direction: str = BOTTOM_UP) -> Order:
    """Compare by partial sums of the components concatenated in index order.

    Under the ``top_down`` reading convention the order is reversed, which is
    the image of the usual order under conjugating every component and
    reversing the component sequence.
    """
    if len(lam) != len(mu):
        raise ValueError("multipartitions have different levels")
    if lam.size != mu.size:
        raise ValueError("multipartitions have different sizes")
    n = max(lam.size, 1)
    a, b = _partial_sums(lam, n), _partial_sums(mu, n)
    ge = all(x >= y for x, y in zip(a, b))
    le = all(x <= y for x, y in zip(a, b))
    if ge and le:
        result = Order.EQUAL
    elif ge:
        result = Order.GREATER
    elif le:
        result = Order.LESS
    else:
        result = Order.INCOMPARABLE
    return result.flipped() if direction == TOP_DOWN else result


def dominates(lam: Multipartition, mu: Multipartition, direction: str = BOTTOM_UP) -> bool:
    """``lam`` dominates or equals ``mu``."""
    return dominance_compare(lam, mu, direction) in (Order.GREATER, Order.EQUAL)


def dominance_key(lam: Multipartition, n: int, direction: str = BOTTOM_UP) -> tuple[int, ...]:
    """A total order refining dominance: larger key for more dominant labels."""
    parts = []
    for comp in lam:
        parts.extend(comp)
        parts.extend([0] * (n - len(comp)))
    if direction == TOP_DOWN:
        return tuple(-p for p in parts)
    return tuple(parts)


# ---------------------------------------------------------------- enumeration

@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of ``n`` with parts at most ``largest``, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def multipartitions(n: int, m: int) -> tuple[Multipartition, ...]:
    if m == 1:
        return tuple(Multipartition._raw((p,)) for p in partitions(n))
    out = []
    for k in range(n, -1, -1):
        for head in partitions(k):
            for tail in multipartitions(n - k, m - 1):
                out.append(Multipartition._raw((head,) + tuple(tail)))
    return tuple(out)


@lru_cache(maxsize=None)
def standard_tableaux_count(lam: Multipartition) -> int:
    """Number of standard lam-tableaux, by removing the cell holding the largest entry."""
    if lam.size == 0:
        return 1
    return sum(standard_tableaux_count(lam.remove_node(b)) for b in removable_nodes(lam))
