"""The crystal of multipartitions and its Kleshchev component.

Good nodes come from the signature rule: list the addable (A) and removable
(R) i-nodes in reading order, cancel every A standing immediately before an
R until none remain, and the reduced word has the shape R...RA...A.  The last
surviving R is the good removable node and the first surviving A is the
good addable node.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .combinatorics import Multicharge, Multipartition, Node, i_word, residue_counts
from .report import Violation


class ResourceCapExceeded(RuntimeError):
    pass


def cartan_entry(i: int, j: int, e: int) -> int:
    """Entry a_ij of the generalized Cartan matrix of type A^(1)_(e-1)."""
    if i == j:
        return 2
    if e == 2:
        return -2
    if (i - j) % e in (1, e - 1):
        return -1
    return 0


@dataclass(frozen=True)
class Weight:
    """Lambda minus sum_j alpha_coeffs[j] alpha_j, with Lambda(d) normalised to 0."""

    lambda_part: tuple[int, ...]
    alpha_coeffs: tuple[int, ...]

    @property
    def e(self) -> int:
        return len(self.alpha_coeffs)

    @property
    def d_offset(self) -> int:
        return -self.alpha_coeffs[0]

    @property
    def lambda_h(self) -> tuple[int, ...]:
        counts = [0] * self.e
        for g in self.lambda_part:
            counts[g] += 1
        return tuple(counts)

    def pairing(self, i: int) -> int:
        """<h_i, wt>."""
        e, w = self.e, self.alpha_coeffs
        return self.lambda_h[i] - sum(cartan_entry(i, j, e) * w[j] for j in range(e))

    def pairings(self) -> tuple[int, ...]:
        return tuple(self.pairing(i) for i in range(self.e))

    def plus_alpha(self, i: int, sign: int = 1) -> "Weight":
        coeffs = list(self.alpha_coeffs)
        coeffs[i] -= sign
        return Weight(self.lambda_part, tuple(coeffs))

    @property
    def depth(self) -> int:
        return sum(self.alpha_coeffs)


def weight_of(lam: Multipartition, charge: Multicharge) -> Weight:
    return Weight(tuple(sorted(charge.gamma)), residue_counts(lam, charge))


@dataclass(frozen=True)
class SignatureWord:
    letters: tuple[tuple[Node, str], ...]
    reduced: tuple[tuple[Node, str], ...]

    @property
    def epsilon(self) -> int:
        return sum(1 for _, t in self.reduced if t == "R")

    @property
    def phi(self) -> int:
        return sum(1 for _, t in self.reduced if t == "A")

    @property
    def good_removable(self) -> Node | None:
        rs = [b for b, t in self.reduced if t == "R"]
        return rs[-1] if rs else None

    @property
    def good_addable(self) -> Node | None:
        return next((b for b, t in self.reduced if t == "A"), None)

    def word(self, reduced: bool = False) -> str:
        return "".join(t for _, t in (self.reduced if reduced else self.letters))


@lru_cache(maxsize=None)
def signature(lam: Multipartition, i: int, charge: Multicharge) -> SignatureWord:
    letters = i_word(lam, i, charge)
    stack: list[tuple[Node, str]] = []
    for letter in letters:
        if letter[1] == "R" and stack and stack[-1][1] == "A":
            stack.pop()
        else:
            stack.append(letter)
    return SignatureWord(letters, tuple(stack))


def epsilon(lam: Multipartition, i: int, charge: Multicharge) -> int:
    return signature(lam, i, charge).epsilon


def phi(lam: Multipartition, i: int, charge: Multicharge) -> int:
    return signature(lam, i, charge).phi


def epsilons(lam: Multipartition, charge: Multicharge) -> tuple[int, ...]:
    return tuple(epsilon(lam, i, charge) for i in range(charge.e))


def phis(lam: Multipartition, charge: Multicharge) -> tuple[int, ...]:
    return tuple(phi(lam, i, charge) for i in range(charge.e))


def e_tilde(lam: Multipartition, i: int, charge: Multicharge) -> Multipartition | None:
    b = signature(lam, i, charge).good_removable
    return None if b is None else lam.remove_node(b)


def f_tilde(lam: Multipartition, i: int, charge: Multicharge) -> Multipartition | None:
    b = signature(lam, i, charge).good_addable
    return None if b is None else lam.add_node(b)


@lru_cache(maxsize=None)
def is_kleshchev(lam: Multipartition, charge: Multicharge) -> bool:
    if lam.size == 0:
        return True
    for i in range(charge.e):
        mu = e_tilde(lam, i, charge)
        if mu is not None:
            # one colour suffices: the component is closed under e~ and f~ e~ = id
            return is_kleshchev(mu, charge)
    return False


@lru_cache(maxsize=None)
def kleshchev_multipartitions(charge: Multicharge, n: int) -> tuple[Multipartition, ...]:
    """KP(n), generated level by level from the empty multipartition."""
    if n == 0:
        return (Multipartition.empty(charge.level),)
    found = set()
    for lam in kleshchev_multipartitions(charge, n - 1):
        for i in range(charge.e):
            mu = f_tilde(lam, i, charge)
            if mu is not None:
                found.add(mu)
    return tuple(sorted(found, key=_vertex_key))


def _vertex_key(lam: Multipartition):
    return (lam.size, tuple(tuple(-p for p in comp) for comp in lam), tuple(len(c) for c in lam))


# ---------------------------------------------------------------- graphs

@dataclass
class CrystalGraph:
    charge: Multicharge
    depth: int
    vertices: list[Multipartition] = field(default_factory=list)
    weights: dict[Multipartition, Weight] = field(default_factory=dict)
    eps: dict[Multipartition, tuple[int, ...]] = field(default_factory=dict)
    phis: dict[Multipartition, tuple[int, ...]] = field(default_factory=dict)
    # (lam, i) -> f~_i lam, stored only when the target lies inside the graph
    edges: dict[tuple[Multipartition, int], Multipartition] = field(default_factory=dict)

    def __contains__(self, lam):
        return lam in self.weights

    def __len__(self):
        return len(self.vertices)

    def level(self, n: int) -> list[Multipartition]:
        return [lam for lam in self.vertices if lam.size == n]

    def in_edges(self) -> dict[Multipartition, list[tuple[Multipartition, int]]]:
        out = defaultdict(list)
        for (lam, i), mu in self.edges.items():
            out[mu].append((lam, i))
        return out


def generate_crystal(charge: Multicharge, n_max: int, vertex_cap: int = 10**6) -> CrystalGraph:
    """Breadth-first closure of the empty multipartition under every f~_i."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    graph = CrystalGraph(charge, n_max)
    frontier = [Multipartition.empty(charge.level)]
    for n in range(n_max + 1):
        frontier.sort(key=_vertex_key)
        if len(graph.vertices) + len(frontier) > vertex_cap:
            raise ResourceCapExceeded(f"more than {vertex_cap} vertices up to size {n}")
        nxt = set()
        for lam in frontier:
            graph.vertices.append(lam)
            graph.weights[lam] = weight_of(lam, charge)
            graph.eps[lam] = epsilons(lam, charge)
            graph.phis[lam] = phis(lam, charge)
            if n == n_max:
                continue
            for i in range(charge.e):
                mu = f_tilde(lam, i, charge)
                if mu is not None:
                    graph.edges[(lam, i)] = mu
                    nxt.add(mu)
        frontier = list(nxt)
    return graph


def check_axioms(graph: CrystalGraph) -> list[Violation]:
    """Crystal axioms and semiregularity, checked against the stored graph data.

    Stored edges are trusted only as far as they agree with the operators;
    a corrupted edge shows up as a violation at its source vertex.
    """
    charge, e = graph.charge, graph.charge.e
    out: list[Violation] = []
    incoming: dict[tuple[Multipartition, int], list[Multipartition]] = defaultdict(list)
    for (lam, i), mu in graph.edges.items():
        incoming[(mu, i)].append(lam)

    def bad(lam, i, axiom, detail):
        out.append(Violation(str(lam), i, axiom, detail))

    for lam in graph.vertices:
        wt, eps, phs = graph.weights[lam], graph.eps[lam], graph.phis[lam]
        for i in range(e):
            if phs[i] - eps[i] != wt.pairing(i):
                bad(lam, i, "1", f"phi-eps={phs[i] - eps[i]} but <h_i,wt>={wt.pairing(i)}")

            # e~ is read off the stored in-edges (axiom 4 makes it the inverse of f~)
            sources = incoming.get((lam, i), [])
            if len(sources) > 1:
                bad(lam, i, "4", f"{len(sources)} incoming {i}-edges")
            up = sources[0] if sources else None
            if up is None and lam.size > 0 and e_tilde(lam, i, charge) is not None:
                bad(lam, i, "4", "e~ nonzero but no incoming edge")
            if up is not None:
                if up not in graph:
                    bad(lam, i, "closure", f"source {up} missing")
                else:
                    uwt = graph.weights[up]
                    if uwt != wt.plus_alpha(i):
                        bad(lam, i, "2", f"wt(e~b) != wt(b)+alpha_i for e~b={up}")
                    if graph.eps[up][i] != eps[i] - 1:
                        bad(lam, i, "2", f"eps_i(e~b)={graph.eps[up][i]}, expected {eps[i] - 1}")
                    if graph.phis[up][i] != phs[i] + 1:
                        bad(lam, i, "2", f"phi_i(e~b)={graph.phis[up][i]}, expected {phs[i] + 1}")
                if graph.edges.get((up, i)) != lam:
                    bad(lam, i, "4", f"f~_i({up}) != {lam}")

            down = graph.edges.get((lam, i))
            if lam.size < graph.depth:
                actual = f_tilde(lam, i, charge)
                if down != actual:
                    bad(lam, i, "4", f"stored f~ edge {down} disagrees with f~={actual}")
            else:
                down = f_tilde(lam, i, charge)
            if down is not None:
                dwt = graph.weights.get(down) or weight_of(down, charge)
                deps = graph.eps.get(down) or epsilons(down, charge)
                dphi = graph.phis.get(down) or phis(down, charge)
                if dwt != wt.plus_alpha(i, -1):
                    bad(lam, i, "3", f"wt(f~b) != wt(b)-alpha_i for f~b={down}")
                if deps[i] != eps[i] + 1:
                    bad(lam, i, "3", f"eps_i(f~b)={deps[i]}, expected {eps[i] + 1}")
                if dphi[i] != phs[i] - 1:
                    bad(lam, i, "3", f"phi_i(f~b)={dphi[i]}, expected {phs[i] - 1}")
                if down in graph and e_tilde(down, i, charge) != lam:
                    bad(lam, i, "4", f"e~_i({down}) != {lam}")

            # axiom 5 is vacuous here: phi_i is never -infinity on multipartitions.
            # semiregularity: count how far the i-string really extends
            k, b = 0, lam
            while True:
                nb = incoming.get((b, i))
                if not nb:
                    break
                b, k = nb[0], k + 1
                if k > lam.size:
                    break
            if k != eps[i]:
                bad(lam, i, "semiregular", f"eps_i={eps[i]} but e~_i string has length {k}")
            k, b = 0, lam
            while True:
                nb = graph.edges.get((b, i)) if b.size < graph.depth else f_tilde(b, i, charge)
                if nb is None:
                    break
                b, k = nb, k + 1
            if k != phs[i]:
                bad(lam, i, "semiregular", f"phi_i={phs[i]} but f~_i string has length {k}")
    return out


def count_paths(graph: CrystalGraph, lam: Multipartition) -> int:
    """Number of f~-paths from the empty multipartition to ``lam``."""
    if lam not in graph:
        raise KeyError(f"{lam} is not a vertex of the graph")
    incoming = graph.in_edges()
    paths: dict[Multipartition, int] = {}
    for mu in graph.vertices:  # vertices are stored level by level
        if mu.size > lam.size:
            break
        paths[mu] = 1 if mu.size == 0 else sum(paths[src] for src, _ in incoming.get(mu, ()))
    return paths[lam]


# ---------------------------------------------------------------- Freudenthal

@lru_cache(maxsize=None)
def positive_roots(e: int, max_height: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Positive roots of A^(1)_(e-1) up to a height, with their multiplicities.

    Roots are coefficient vectors over the simple roots alpha_0..alpha_(e-1).
    Real roots are +-(alpha_i + ... + alpha_(j-1)) + n*delta, imaginary ones n*delta
    with multiplicity e-1.
    """
    finite = []
    for i in range(1, e):
        for j in range(i + 1, e + 1):
            vec = [0] * e
            for t in range(i, j):
                vec[t] = 1
            finite.append(tuple(vec))
    roots = []
    for n in range(0, max_height + 1):
        for a in finite:
            pos = tuple(x + n for x in a)
            if sum(pos) <= max_height:
                roots.append((pos, 1))
            if n >= 1:
                neg = tuple(n - x for x in a)
                if sum(neg) <= max_height:
                    roots.append((neg, 1))
        if n >= 1 and n * e <= max_height:
            roots.append(((n,) * e, e - 1))
    return tuple(roots)


class _Freudenthal:
    def __init__(self, e: int, lambda_h: tuple[int, ...], cap: int):
        self.e, self.lam, self.cap = e, lambda_h, cap
        self.a = [[cartan_entry(i, j, e) for j in range(e)] for i in range(e)]
        self.roots = positive_roots(e, cap)
        self.memo: dict[tuple[int, ...], int] = {}

    def form(self, x, y) -> int:
        a = self.a
        return sum(x[i] * a[i][j] * y[j] for i in range(self.e) for j in range(self.e) if x[i] and y[j])

    def mult(self, beta: tuple[int, ...]) -> int:
        if any(b < 0 for b in beta):
            return 0
        if not any(beta):
            return 1
        if beta in self.memo:
            return self.memo[beta]
        # |Lambda+rho|^2 - |mu+rho|^2 for mu = Lambda - beta
        lhs = 2 * sum(b * (l + 1) for b, l in zip(beta, self.lam)) - self.form(beta, beta)
        total = 0
        for alpha, m_alpha in self.roots:
            if any(a > b for a, b in zip(alpha, beta)):
                continue
            lam_alpha = sum(a * l for a, l in zip(alpha, self.lam))
            beta_alpha = self.form(beta, alpha)
            alpha_alpha = self.form(alpha, alpha)
            k = 1
            while True:
                rest = tuple(b - k * a for a, b in zip(alpha, beta))
                if any(r < 0 for r in rest):
                    break
                m = self.mult(rest)
                if m:
                    total += m_alpha * (lam_alpha - beta_alpha + k * alpha_alpha) * m
                k += 1
        total *= 2
        if lhs == 0:
            result = 0
        else:
            if total % lhs:
                raise ArithmeticError(f"Freudenthal recursion gave a non-integer at {beta}")
            result = total // lhs
        self.memo[beta] = result
        return result


@lru_cache(maxsize=None)
def _freudenthal(e: int, lambda_h: tuple[int, ...], cap: int) -> _Freudenthal:
    return _Freudenthal(e, lambda_h, cap)


def weight_multiplicity(charge: Multicharge, weight: Weight | tuple[int, ...], depth_cap: int = 12) -> int:
    """Dimension of the weight space of L(Lambda) via Freudenthal's formula.

    ``weight`` is a Weight or the tuple of simple-root coefficients subtracted
    from Lambda.
    """
    beta = tuple(weight.alpha_coeffs if isinstance(weight, Weight) else weight)
    if len(beta) != charge.e:
        raise ValueError("weight has the wrong number of simple-root coefficients")
    if any(b < 0 for b in beta):
        return 0
    if sum(beta) > depth_cap:
        raise ResourceCapExceeded(f"weight depth {sum(beta)} exceeds cap {depth_cap}")
    return _freudenthal(charge.e, charge.lambda_h, depth_cap).mult(beta)


def weights_of_depth(e: int, depth: int):
    """All simple-root coefficient vectors with the given sum."""
    for cut in itertools.combinations(range(depth + e - 1), e - 1):
        prev, vec = -1, []
        for c in cut:
            vec.append(c - prev - 1)
            prev = c
        vec.append(depth + e - 1 - prev - 1)
        yield tuple(vec)
