"""Constructive Stanley decompositions for weakly polymatroidal ideals.

The recursion always eliminates the first variable x of the current ring S:

    zero        I = 0                 -> 1 * K[all variables]
    unit        I = S                 -> nothing (zero module)
    free        x divides no generator -> decompose in S' and adjoin x to every Z
    eliminate   x in G(I)             -> S/I = S'/I'; reuse the S' spaces as they are
    split       otherwise             -> S/I = S'/I' (+) x * S/(I : x)

where S' drops x and I' = I cap S'. The result is verified exactly and its
Stanley depth compared against depth(S/I) before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classes import is_weakly_polymatroidal
from .homology import depth
from .monomials import MonomialIdeal, colon_by_variable, delete_variable
from .stanley import (
    StanleyDecomposition,
    StanleySpace,
    exact_sdepth_quotient,
    lift_free_variable,
    sdepth_of,
    verify_decomposition,
)


class NotWeaklyPolymatroidal(ValueError):
    def __init__(self, ideal, witness):
        self.ideal = ideal
        self.witness = witness
        u, v, t = witness
        super().__init__(f"{ideal} is not weakly polymatroidal: u={u}, v={v}, t={t + 1}")


class VerificationFailure(AssertionError):
    """The constructed decomposition failed verification; always a bug."""


@dataclass
class TraceNode:
    ideal: MonomialIdeal
    case: str
    variable: str | None = None
    children: list[TraceNode] = field(default_factory=list)
    depth: float | None = None
    sdepth: float | None = None

    def height(self) -> int:
        return 1 + max((c.height() for c in self.children), default=0)

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        var = f" [{self.variable}]" if self.variable else ""
        line = f"{pad}{self.case}{var} {self.ideal} in {','.join(self.ideal.context.names) or 'K'}"
        line += f"  depth={self.depth} sdepth={self.sdepth}\n"
        return line + "".join(c.render(indent + 1) for c in self.children)


def _embed(D: StanleyDecomposition) -> tuple[StanleySpace, ...]:
    """Spaces of S' viewed in S = S'[x], x at index 0, without adjoining x."""
    return tuple(StanleySpace((0,) + s.u, {z + 1 for z in s.Z}) for s in D.spaces)


def _check_child(ideal: MonomialIdeal):
    chk = is_weakly_polymatroidal(ideal)
    if not chk:
        raise VerificationFailure(f"recursion produced a non weakly polymatroidal ideal {ideal}: {chk.witness}")


def _decompose(ideal: MonomialIdeal, check_children: bool, record_depth: bool, memo: dict):
    key = (ideal.gens, ideal.context.names)
    if key in memo:
        return memo[key]
    ctx = ideal.context
    node = TraceNode(ideal, "")
    if record_depth:
        node.depth = depth(ideal).depth

    if ideal.is_zero():
        node.case = "zero"
        D = StanleyDecomposition(ideal, (StanleySpace((0,) * ctx.n, range(ctx.n)),))
    elif ideal.is_unit():
        node.case = "unit"
        D = StanleyDecomposition(ideal, ())
    else:
        if check_children:
            _check_child(ideal)
        x = ctx.names[0]
        node.variable = x
        smaller = delete_variable(ideal, 0)
        if 0 not in ideal.support():
            node.case = "free"
            D1, child = _decompose(smaller, check_children, record_depth, memo)
            node.children.append(child)
            D = lift_free_variable(D1, 0, x)
        elif (1,) + (0,) * (ctx.n - 1) in ideal.gens:
            node.case = "eliminate"
            D1, child = _decompose(smaller, check_children, record_depth, memo)
            node.children.append(child)
            D = StanleyDecomposition(ideal, _embed(D1))
        else:
            node.case = "split"
            D1, child1 = _decompose(smaller, check_children, record_depth, memo)
            colon = colon_by_variable(ideal, 0)
            D2, child2 = _decompose(colon, check_children, record_depth, memo)
            node.children += [child1, child2]
            shifted = [StanleySpace((s.u[0] + 1,) + s.u[1:], s.Z) for s in D2.spaces]
            D = StanleyDecomposition(ideal, _embed(D1) + tuple(shifted))
    node.sdepth = sdepth_of(D)
    memo[key] = D, node
    return D, node


def decompose(ideal: MonomialIdeal, check_children: bool = True, record_depth: bool = False,
              verify: bool = True, check_bound: bool = True):
    """Stanley decomposition of S/I with sdepth >= depth(S/I), plus its recursion trace.

    ``ideal`` must be weakly polymatroidal for the context order and not
    the unit ideal. Identical sub-ideals share one trace node, so the trace
    is a DAG when walked.
    """
    if ideal.is_unit():
        raise ValueError("S/S is the zero module; nothing to decompose")
    chk = is_weakly_polymatroidal(ideal)
    if not chk:
        raise NotWeaklyPolymatroidal(ideal, chk.witness)
    D, trace = _decompose(ideal, check_children, record_depth, {})
    if verify:
        bad = verify_decomposition(D)
        if bad is not None:
            raise VerificationFailure(f"decomposition of {ideal} failed verification: {bad}")
    if check_bound:
        d = trace.depth if trace.depth is not None else depth(ideal).depth
        if sdepth_of(D) < d:
            raise VerificationFailure(f"sdepth {sdepth_of(D)} < depth {d} for {ideal}")
    return D, trace


@dataclass(frozen=True)
class ConjectureReport:
    depth: float
    sdepth_construct: float
    sdepth_exact: float | None
    exact: bool
    conjecture_holds: bool
    decomposition: StanleyDecomposition = field(repr=False)


def verify_conjecture(ideal: MonomialIdeal, exact: bool = False, timeout: float = 60.0,
                      poset_cap: int = 10**6) -> ConjectureReport:
    """Check depth(S/I) <= sdepth of the constructed decomposition <= exact sdepth."""
    d = depth(ideal).depth
    D, _ = decompose(ideal, check_bound=False)
    s = sdepth_of(D)
    holds = d <= s
    ex = None
    is_exact = False
    if exact:
        res = exact_sdepth_quotient(ideal, cap=poset_cap, timeout=timeout)
        ex, is_exact = res.value, res.exact
        if is_exact and ex < s:
            raise VerificationFailure(f"exact sdepth {ex} below constructed {s} for {ideal}")
        holds = holds and (not is_exact or d <= ex)
    return ConjectureReport(d, s, ex, is_exact, holds, D)

