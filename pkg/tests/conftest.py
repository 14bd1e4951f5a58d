import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from stanley_lab.monomials import MonomialIdeal, VariableContext

ROOT = Path(__file__).resolve().parent.parent
ACCEPTANCE_SPEC = ROOT / "corpora" / "acceptance.spec"


def ideal(*gens, n=None):
    """Build an ideal from exponent tuples; ``n`` is needed only for the zero ideal."""
    if n is None:
        n = len(gens[0])
    return MonomialIdeal.from_exponents(gens, VariableContext(n))


def box(top):
    return itertools.product(*(range(x + 1) for x in top))


@st.composite
def ideals(draw, max_n=4, max_t=5, max_exp=3, min_n=1):
    n = draw(st.integers(min_n, max_n))
    vec = st.tuples(*[st.integers(0, max_exp)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_t))
    return MonomialIdeal.from_exponents(gens, VariableContext(n))


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # lets fixtures see the call outcome at teardown
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
