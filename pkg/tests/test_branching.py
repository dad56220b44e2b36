import pytest

from kleshchev.branching import (
    PROXY_NOTE,
    branch_simple,
    dim_simple,
    dim_specht,
    i_restriction_dimension,
    restrict_simple,
    restrict_specht,
    restriction_dimension,
    simple_class,
    simple_classes,
    verify_dim_bound,
)
from kleshchev.combinatorics import TOP_DOWN, Multicharge, Multipartition
from kleshchev.crystal import generate_crystal, kleshchev_multipartitions

P = Multipartition.parse
E2 = Multicharge(2, (0,))
EMPTY = Multipartition.empty(1)


def test_simple_class_examples():
    assert simple_class(P("1,1,1"), E2).specht_coords == {P("1,1,1"): 1}
    assert simple_class(P("2,1"), E2).specht_coords == {P("2,1"): 1}
    assert simple_class(EMPTY, E2).specht_coords == {EMPTY: 1}
    # (1,1) absorbs (2) at n = 2, so [D^(1,1)] = [S^(1,1)]
    assert [sc.label for sc in simple_classes(E2, 2)] == [P("1,1")]


def test_simple_class_with_alternating_sign():
    # at e=2, n=4 the row of (2,1,1) is D^(2,1,1) + D^(1,1,1,1)
    assert simple_class(P("2,1,1"), E2).specht_coords == {P("2,1,1"): 1, P("1,1,1,1"): -1}
    assert simple_class(P("1,1,1,1"), E2).specht_coords == {P("1,1,1,1"): 1}
    assert dim_simple(P("2,1,1"), E2) == 3 - 1


def test_restrict_specht_examples():
    assert restrict_specht(P("2,1"), 1, E2) == {P("1,1"): 1, P("2"): 1}
    assert restrict_specht(EMPTY, 0, E2) == {}
    assert restrict_specht(P("1,1"), 0, E2) == {}


def test_branch_examples():
    rep = branch_simple(P("2,1"), 1, E2)
    assert rep.factors == [(P("1,1"), 2)]
    assert rep.socle_candidate == P("1,1") and rep.e_tilde == P("1,1")
    assert rep.epsilon == 2 and rep.passed
    assert rep.note == PROXY_NOTE

    rep = branch_simple(P("1,1,1"), 1, E2)
    assert rep.factors == [] and rep.epsilon == 0 and rep.passed

    for charge in (E2, Multicharge(3, (2,)), Multicharge(3, (0, 1))):
        for lam in kleshchev_multipartitions(charge, 1):
            i = next(i for i in range(charge.e) if restrict_specht(lam, i, charge))
            rep = branch_simple(lam, i, charge)
            assert rep.factors == [(Multipartition.empty(charge.level), 1)] and rep.passed


def test_branch_row_format():
    row = branch_simple(P("2,1"), 1, E2).row()
    assert (row["lambda"], row["i"], row["e_tilde"], row["verdict"]) == ("(2,1)", 1, "(1,1)", "pass")


@pytest.mark.parametrize("charge", [E2, Multicharge(3, (0, 1)), Multicharge(2, (0, 0), TOP_DOWN)])
def test_branching_rule_passes(charge):
    for n in range(1, 7):
        for lam in kleshchev_multipartitions(charge, n):
            for i in range(charge.e):
                rep = branch_simple(lam, i, charge)
                assert rep.passed, rep.reasons


def test_semisimple_case_is_specht_branching():
    # e > n: every D is a Specht module and e_i D^lam is the i-part of the classical branching
    charge = Multicharge(7, (0,))
    for lam in kleshchev_multipartitions(charge, 5):
        assert simple_class(lam, charge).specht_coords == {lam: 1}
        for i in range(7):
            assert restrict_simple(lam, i, charge) == restrict_specht(lam, i, charge)


def test_dim_examples():
    g = generate_crystal(E2, 3)
    assert dim_simple(P("2,1"), E2) == 2 and verify_dim_bound(g, P("2,1"))
    assert dim_simple(P("1"), E2) == 1 and verify_dim_bound(g, P("1"))
    assert dim_simple(P("1,1,1"), E2) == 1 and verify_dim_bound(g, P("1,1,1"))
    assert dim_simple(P("2,1"), E2) == dim_specht(P("2,1"))


@pytest.mark.parametrize("charge", [E2, Multicharge(3, (0,)), Multicharge(2, (0, 1))])
def test_restriction_dimension_is_sum_of_i_restrictions(charge):
    for n in range(1, 7):
        for lam in kleshchev_multipartitions(charge, n):
            total = sum(i_restriction_dimension(lam, i, charge) for i in range(charge.e))
            assert total == restriction_dimension(lam, charge)


def test_known_dimensions_q_minus_one():
    # simple modules of the Hecke algebra of S_5 at q = -1 have dimensions 1, 4, 5
    dims = {str(lam): dim_simple(lam, E2) for lam in kleshchev_multipartitions(E2, 5)}
    assert dims == {"(2,2,1)": 5, "(2,1,1,1)": 4, "(1,1,1,1,1)": 1}
