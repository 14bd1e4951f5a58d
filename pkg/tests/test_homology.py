import itertools
from collections import defaultdict

import pytest
from hypothesis import assume, given, settings

from stanley_lab.classes import (
    has_linear_quotients_with_order,
    is_weakly_polymatroidal,
    iter_linear_quotient_certificates,
)
from stanley_lab.homology import (
    INFINITY,
    SizeCapExceeded,
    betti_numbers,
    depth,
    lcm_lattice,
    pd_from_certificate,
    reduced_homology_ranks,
)
from stanley_lab.monomials import VariableContext, colon_by_variable, delete_variable, unit_ideal, zero_ideal

from conftest import ideal, ideals


def taylor_euler(I):
    """sum_i (-1)^i beta_{i,a} = sum over subsets sigma with lcm(sigma) = a of (-1)^|sigma|."""
    chi = defaultdict(int)
    for k in range(I.t + 1):
        for sub in itertools.combinations(I.gens, k):
            a = tuple(map(max, *sub)) if len(sub) > 1 else (sub[0] if sub else (0,) * I.n)
            chi[a] += (-1) ** k
    return {a: c for a, c in chi.items() if c}


def betti_euler(table):
    chi = defaultdict(int)
    for (i, a), b in table.entries.items():
        chi[a] += (-1) ** i * b
    return {a: c for a, c in chi.items() if c}


def squarefree(n, faces):
    return ideal(*[tuple(int(i + 1 in f) for i in range(n)) for f in faces])


# Minimal nonfaces of the 6-vertex real projective plane: the ten triangles
# that are not facets (its 1-skeleton is the complete graph).
RP2_FACETS = ["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"]
RP2 = squarefree(6, [tuple(map(int, c)) for c in itertools.combinations("123456", 3)
                     if "".join(c) not in RP2_FACETS])


def test_reduced_homology_small_complexes():
    assert reduced_homology_ranks([]) == {-1: 1}
    assert reduced_homology_ranks([(0,), (1,)]) == {0: 1}
    hollow = [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
    assert reduced_homology_ranks(hollow) == {1: 1}
    assert reduced_homology_ranks(hollow + [(0, 1, 2)]) == {}


def test_pd_from_certificate_examples():
    cert = has_linear_quotients_with_order(ideal((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert cert.counts == (1, 2)
    rep = pd_from_certificate(cert, 3)
    assert (rep.pd, rep.depth) == (3, 0)
    rep = pd_from_certificate(has_linear_quotients_with_order(ideal((1, 1, 0), (1, 0, 1), (0, 1, 1))), 3)
    assert (rep.pd, rep.depth) == (2, 1)
    rep = pd_from_certificate(has_linear_quotients_with_order(ideal((0, 2, 1, 0))), 4)
    assert (rep.pd, rep.depth) == (1, 3)


def test_betti_examples():
    t = betti_numbers(ideal((1, 1)))
    assert t.entries == {(0, (0, 0)): 1, (1, (1, 1)): 1} and t.pd == 1
    t = betti_numbers(ideal((1, 0), (0, 1)))
    assert t.totals() == [1, 2, 1] and t.pd == 2
    t = betti_numbers(ideal((1, 1, 0), (1, 0, 1), (0, 1, 1)))
    assert t.totals() == [1, 3, 2] and t.pd == 2


def test_betti_support_is_lcm_lattice():
    I = ideal((2, 1, 0), (1, 0, 2), (0, 2, 1), (1, 1, 1))
    L = lcm_lattice(I)
    for (i, a) in betti_numbers(I).entries:
        assert a in L


def test_betti_depends_on_characteristic():
    q = betti_numbers(RP2, 0)
    f2 = betti_numbers(RP2, 2)
    assert q.pd == 3 and f2.pd == 4
    assert betti_euler(q) == betti_euler(f2) == taylor_euler(RP2)
    assert depth(RP2).source == "betti-oracle"
    assert depth(RP2).depth == 3 and depth(RP2, char=2).depth == 2


def test_betti_caps():
    I = ideal(*[tuple(int(i == j) for i in range(13)) for j in range(13)])
    with pytest.raises(SizeCapExceeded):
        betti_numbers(I)


def test_depth_examples():
    rep = depth(zero_ideal(VariableContext(4)))
    assert (rep.depth, rep.pd, rep.source) == (4, 0, "convention")
    rep = depth(unit_ideal(VariableContext(2)))
    assert rep.depth == INFINITY and rep.depth > 10**9
    assert depth(ideal((2, 0), (1, 1), (0, 2))).depth == 0
    assert betti_numbers(ideal((2, 0), (1, 1), (0, 2))).pd == 2
    assert depth(ideal((0, 1, 1))).depth == 2
    # no linear quotients: falls back to the oracle
    rep = depth(ideal((1, 1, 0, 0), (0, 0, 1, 1)))
    assert (rep.pd, rep.depth, rep.source) == (2, 2, "betti-oracle")


@settings(deadline=None)
@given(ideals(max_t=6))
def test_betti_euler_characteristic(I):
    assert betti_euler(betti_numbers(I)) == taylor_euler(I)


@settings(max_examples=40, deadline=None)
@given(ideals(max_n=3, max_t=4, max_exp=2))
def test_crosscut_matches_order_complex(I):
    for char in (0, 2):
        assert betti_numbers(I, char).entries == betti_numbers(I, char, method="order-complex").entries


@settings(deadline=None)
@given(ideals(max_t=6))
def test_formula_matches_oracle(I):
    cert = has_linear_quotients_with_order(I)
    assume(cert)
    rep = pd_from_certificate(cert, I.n)
    assert rep.pd == betti_numbers(I, 0).pd == betti_numbers(I, 2).pd
    assert rep.pd + rep.depth == I.n


@settings(max_examples=50, deadline=None)
@given(ideals(max_t=5))
def test_pd_order_independent(I):
    pds = {pd_from_certificate(c, I.n).pd for c in iter_linear_quotient_certificates(I, limit=50)}
    assert len(pds) <= 1


@settings(deadline=None)
@given(ideals(min_n=2))
def test_deletion_keeps_depth(I):
    assume(is_weakly_polymatroidal(I) and 0 in I.support())
    assert depth(delete_variable(I, 0)).depth >= depth(I).depth


@settings(deadline=None)
@given(ideals())
def test_colon_monotone(I):
    assume(is_weakly_polymatroidal(I))
    assert depth(colon_by_variable(I, 0)).depth >= depth(I).depth
