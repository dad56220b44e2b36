"""Independent brute-force oracles used by the tests."""
from kleshchev.combinatorics import dominance_key, dominates
from kleshchev.fock import FockVector, divided_power
from kleshchev.laurent import LaurentPoly


def divided_power_words(charge, n):
    """Every nonzero f_{i_t}^(a_t) ... f_{i_1}^(a_1) vacuum of total size n, keyed by word."""
    out = {}

    def walk(word, vec, size):
        if size == n:
            out[word] = vec
            return
        for i in range(charge.e):
            if word and word[-1][0] == i:
                continue
            for a in range(1, n - size + 1):
                w = divided_power("f", i, a, vec)
                if not w:
                    break
                walk(word + ((i, a),), w, size + a)

    walk((), FockVector.vacuum(charge), 0)
    return out


def _bar_symmetric_part(p):
    # p_0 + sum_{k>0} p_{-k} (v^k + v^-k), written out from the coefficient pairs
    pairs = dict((k, a) for k, a in p.to_pairs())
    c = {0: pairs.get(0, 0)}
    for k, a in pairs.items():
        if k < 0:
            c[k] = a
            c[-k] = a
    return LaurentPoly(c)


def brute_force_basis(charge, n):
    """G(lam) for every label reachable as the bottom term of a unit-led divided-power monomial."""
    d = charge.reading_direction
    words = divided_power_words(charge, n)
    labels = {}
    for vec in words.values():
        low = min(vec.terms, key=lambda mu: dominance_key(mu, n, d))
        if vec.coefficient(low) == 1 and all(mu == low or dominates(mu, low, d) for mu in vec.terms):
            labels.setdefault(low, vec)
    G = {}
    for lam in sorted(labels, key=lambda mu: dominance_key(mu, n, d), reverse=True):
        vec = labels[lam]
        while True:
            bad = [mu for mu, p in vec if mu != lam and not p.in_positive_v_span()]
            if not bad:
                break
            mu = min(bad, key=lambda x: dominance_key(x, n, d))
            vec = vec.axpy(-_bar_symmetric_part(vec.coefficient(mu)), G[mu])
        G[lam] = vec
    return G
