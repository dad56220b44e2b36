import pytest

from kleshchev.combinatorics import TOP_DOWN, Multicharge, Multipartition, Node, multipartitions
from kleshchev.crystal import (
    CrystalGraph,
    ResourceCapExceeded,
    cartan_entry,
    check_axioms,
    count_paths,
    e_tilde,
    epsilon,
    f_tilde,
    generate_crystal,
    is_kleshchev,
    kleshchev_multipartitions,
    phi,
    signature,
    weight_multiplicity,
    weight_of,
)

P = Multipartition.parse
E2 = Multicharge(2, (0,))
EMPTY = Multipartition.empty(1)


def test_cartan_matrix():
    assert [[cartan_entry(i, j, 2) for j in range(2)] for i in range(2)] == [[2, -2], [-2, 2]]
    assert [[cartan_entry(i, j, 3) for j in range(3)] for i in range(3)] == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert cartan_entry(0, 2, 4) == 0


def test_signature_examples():
    s = signature(P("1,1"), 1, E2)
    assert s.word() == "RA" and s.word(reduced=True) == "RA"
    assert (s.epsilon, s.phi) == (1, 1)
    assert s.good_removable == Node(1, 2, 1)
    assert s.good_addable == Node(1, 1, 2)

    s = signature(P("2,1"), 1, E2)
    assert s.word() == "RR" and (s.epsilon, s.phi) == (2, 0)
    assert s.good_removable == Node(1, 1, 2)

    for i in range(3):
        s = signature(EMPTY, i, Multicharge(3, (0,)))
        assert s.epsilon == 0 and s.good_removable is None


def test_signature_cancels_addable_before_removable():
    # (2) at e=2: addable 1-node (2,1) read before removable 1-node (1,2) -> "AR" cancels
    s = signature(P("2"), 1, E2)
    assert s.word() == "AR"
    assert s.word(reduced=True) == ""
    assert (s.epsilon, s.phi) == (0, 0)


def test_kashiwara_operator_examples():
    assert e_tilde(P("1,1"), 1, E2) == P("1")
    assert e_tilde(EMPTY, 0, E2) is None
    assert e_tilde(e_tilde(P("2,1"), 1, E2), 1, E2) == P("1")
    assert f_tilde(EMPTY, 0, E2) == P("1")
    assert f_tilde(P("1"), 1, E2) == P("1,1")
    assert f_tilde(P("1,1"), 1, E2) == P("2,1")
    assert f_tilde(P("1"), 0, E2) is None


def test_weight_examples():
    assert weight_of(P("2"), E2).pairing(1) == 0
    assert weight_of(P("2,1"), E2).pairing(1) == -2
    w = weight_of(EMPTY, E2)
    assert w.alpha_coeffs == (0, 0) and w.pairings() == (1, 0)


@pytest.mark.parametrize("e", [2, 3, 4])
@pytest.mark.parametrize("gamma", [(0,), (0, 0), (0, 1)])
def test_phi_minus_epsilon_is_weight_pairing(e, gamma):
    charge = Multicharge(e, gamma)
    for n in range(6):
        for lam in multipartitions(n, len(gamma)):
            wt = weight_of(lam, charge)
            for i in range(e):
                assert phi(lam, i, charge) - epsilon(lam, i, charge) == wt.pairing(i)


def test_generate_crystal_examples():
    g = generate_crystal(E2, 2)
    assert set(g.vertices) == {EMPTY, P("1"), P("1,1")}
    assert generate_crystal(E2, 0).vertices == [EMPTY]
    assert set(generate_crystal(E2, 3).level(3)) == {P("2,1"), P("1,1,1")}


def test_is_kleshchev_examples():
    assert is_kleshchev(P("1,1"), E2)
    assert is_kleshchev(EMPTY, E2)
    assert not is_kleshchev(P("2"), E2)


def test_level_one_kleshchev_are_e_restricted():
    # at level one the crystal vertices are exactly the e-restricted partitions
    for e in (2, 3):
        charge = Multicharge(e, (0,))
        for n in range(8):
            want = {lam for lam in multipartitions(n, 1)
                    if all(a - b < e for a, b in zip(lam[0], lam[0][1:] + (0,)))}
            assert set(kleshchev_multipartitions(charge, n)) == want


def test_check_axioms_clean():
    assert check_axioms(generate_crystal(E2, 8)) == []
    assert check_axioms(generate_crystal(E2, 0)) == []
    assert check_axioms(generate_crystal(Multicharge(3, (0, 1), TOP_DOWN), 6)) == []


def test_check_axioms_reports_corrupted_edge():
    g = generate_crystal(E2, 4)
    lam = P("1,1")
    g.edges[(lam, 1)] = P("1,1,1")  # should be (2,1)
    report = check_axioms(g)
    assert report
    assert any(v.vertex == str(lam) and v.color == 1 for v in report)
    assert all(v.axiom for v in report)


def test_vertex_cap():
    with pytest.raises(ResourceCapExceeded):
        generate_crystal(Multicharge(3, (0, 1)), 8, vertex_cap=50)


def test_count_paths_examples():
    g = generate_crystal(E2, 3)
    assert count_paths(g, P("1,1,1")) == 1
    assert count_paths(g, EMPTY) == 1
    assert count_paths(g, P("2,1")) == 1
    with pytest.raises(KeyError):
        count_paths(g, P("3"))


def test_count_paths_level_one_e_large_is_tableaux():
    # for e > n every partition is Kleshchev and paths are standard tableaux
    from kleshchev.combinatorics import standard_tableaux_count
    charge = Multicharge(7, (0,))
    g = generate_crystal(charge, 5)
    for lam in g.level(5):
        assert count_paths(g, lam) == standard_tableaux_count(lam)


def test_weight_multiplicity_examples():
    assert weight_multiplicity(E2, (0, 0)) == 1
    assert weight_multiplicity(E2, (1, 0)) == 1
    assert weight_multiplicity(E2, (0, 1)) == 0
    assert weight_multiplicity(E2, (-1, 2)) == 0
    with pytest.raises(ResourceCapExceeded):
        weight_multiplicity(E2, (10, 10), depth_cap=12)


def test_weight_multiplicity_string_function():
    # level one, e=2: multiplicity of Lambda_0 - k delta is the number of partitions of k
    assert [weight_multiplicity(E2, (k, k)) for k in range(5)] == [1, 1, 2, 3, 5]
