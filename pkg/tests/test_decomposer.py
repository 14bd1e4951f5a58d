import pytest
from hypothesis import assume, given, settings

from stanley_lab.classes import is_weakly_polymatroidal
from stanley_lab.decomposer import NotWeaklyPolymatroidal, decompose, verify_conjecture
from stanley_lab.homology import depth
from stanley_lab.monomials import VariableContext, power, unit_ideal
from stanley_lab.stanley import StanleySpace, exact_sdepth_quotient, sdepth_of, space_monomials

from conftest import box, ideal, ideals

TRIANGLE = ideal((1, 1, 0), (1, 0, 1), (0, 1, 1))
wpm_ideals = ideals(max_n=4, max_t=6).filter(lambda I: bool(is_weakly_polymatroidal(I)))


def test_decompose_xy():
    D, trace = decompose(ideal((1, 1)))
    assert set(D.spaces) == {StanleySpace((0, 0), {1}), StanleySpace((1, 0), {0})}
    assert sdepth_of(D) == 1 == depth(ideal((1, 1))).depth
    assert trace.case == "split"
    assert [c.case for c in trace.children] == ["zero", "free"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_decompose_maximal_ideal(n):
    I = ideal(*[tuple(int(i == j) for i in range(n)) for j in range(n)])
    D, trace = decompose(I)
    assert D.spaces == (StanleySpace((0,) * n, ()),)
    assert sdepth_of(D) == 0 == depth(I).depth
    assert {node.case for node in trace.walk()} == {"eliminate", "zero"}


def test_decompose_triangle_bound():
    D, _ = decompose(TRIANGLE)
    assert sdepth_of(D) >= 1 == depth(TRIANGLE).depth


def test_precondition_errors():
    with pytest.raises(NotWeaklyPolymatroidal) as exc:
        decompose(ideal((2, 0), (0, 2)))
    assert exc.value.witness == ((2, 0), (0, 2), 0)
    with pytest.raises(ValueError):
        decompose(unit_ideal(VariableContext(2)))


def test_zero_ideal():
    from stanley_lab.monomials import zero_ideal

    D, trace = decompose(zero_ideal(VariableContext(3)))
    assert D.spaces == (StanleySpace((0, 0, 0), {0, 1, 2}),) and trace.case == "zero"


def test_verify_conjecture_examples():
    r = verify_conjecture(ideal((2, 0), (1, 1), (0, 2)))
    assert r.depth == 0 and r.sdepth_construct >= 0 and r.conjecture_holds
    r = verify_conjecture(ideal((1, 1, 1)), exact=True)
    assert (r.depth, r.sdepth_construct, r.sdepth_exact) == (2, 2, 2) and r.conjecture_holds
    r = verify_conjecture(power(TRIANGLE, 2), exact=True)
    assert r.depth <= r.sdepth_construct <= r.sdepth_exact and r.conjecture_holds


def test_trace_render():
    _, trace = decompose(ideal((1, 1)), record_depth=True)
    text = trace.render()
    assert text.splitlines()[0].startswith("split [x1] (x1*x2)")
    assert "free [x1] (x2)" in text


# -- properties

@settings(deadline=None)
@given(wpm_ideals)
def test_constructed_sdepth_bound(I):
    D, _ = decompose(I)
    assert sdepth_of(D) >= depth(I).depth


@settings(max_examples=60, deadline=None)
@given(ideals(max_n=3, max_t=4))
def test_constructed_below_exact(I):
    assume(is_weakly_polymatroidal(I) and not I.is_unit())
    D, _ = decompose(I)
    assert exact_sdepth_quotient(I).value >= sdepth_of(D)


@settings(deadline=None)
@given(wpm_ideals)
def test_trace_invariants(I):
    _, trace = decompose(I, record_depth=True)
    for node in trace.walk():
        J = node.ideal
        assert is_weakly_polymatroidal(J)
        measure = (J.n, J.total_degree())
        if node.case == "split":
            assert len(node.children) == 2
            deletion, colon = node.children
            # deletion and colon never lower depth, recomputed from scratch
            assert depth(deletion.ideal).depth >= depth(J).depth
            assert depth(colon.ideal).depth >= depth(J).depth
            assert colon.ideal.n == J.n and colon.ideal.total_degree() < J.total_degree()
        for child in node.children:
            assert (child.ideal.n, child.ideal.total_degree()) < measure
    assert trace.height() - 1 <= I.n + I.total_degree()


@settings(max_examples=50, deadline=None)
@given(wpm_ideals)
def test_split_identity(I):
    """Spaces from the deletion branch plus x1-shifted colon spaces cover each standard monomial once."""
    assume(0 in I.support() and (1,) + (0,) * (I.n - 1) not in I.gens)
    D, trace = decompose(I)
    top = tuple(x + 1 for x in I.lcm_exponents())
    counts = space_monomials(D.spaces, top)
    expected = {a: 1 for a in box(top) if not I.contains_exponents(a)}
    assert counts == expected
    deletion, colon = trace.children
    assert deletion.ideal.n == I.n - 1 and colon.ideal.n == I.n
