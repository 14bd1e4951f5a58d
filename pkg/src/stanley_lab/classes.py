"""Recognizers for polymatroidal, weakly polymatroidal and linear-quotient ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Sequence

from .monomials import MonomialIdeal, colon_by_monomial

DEFAULT_SEARCH_CAP = 10**6
MAX_PERMUTATION_N = 7


class SearchCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Check:
    """Outcome of a class test; truthy iff the ideal is in the class."""

    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class LinearQuotientCertificate:
    """Linear quotients order with, per position i >= 1, the variables generating
    (u_0, ..., u_{i-1}) : u_i. ``steps[k]`` belongs to position ``k + 1``."""

    ideal: MonomialIdeal
    order: tuple[int, ...]
    steps: tuple[frozenset[int], ...]

    ok = True

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.steps)

    @property
    def ordered_gens(self) -> list[tuple[int, ...]]:
        return [self.ideal.gens[k] for k in self.order]

    def __bool__(self):
        return True


@dataclass(frozen=True)
class LinearQuotientFailure:
    position: int
    generator: tuple[int, ...]
    colon: MonomialIdeal = field(repr=False)

    ok = False

    def __bool__(self):
        return False


def _check_order(ideal: MonomialIdeal, order: Sequence[int]):
    if sorted(order) != list(range(ideal.t)):
        raise ValueError(f"{order} is not a permutation of range({ideal.t})")


def colon_of_prefix(ideal: MonomialIdeal, order: Sequence[int], i: int) -> MonomialIdeal:
    """(u_0, ..., u_{i-1}) : u_i for the generators listed in ``order`` (0-based)."""
    _check_order(ideal, order)
    if not 1 <= i < ideal.t:
        raise IndexError(f"prefix position {i} out of range 1..{ideal.t - 1}")
    prefix = MonomialIdeal.from_exponents([ideal.gens[k] for k in order[:i]], ideal.context)
    return colon_by_monomial(prefix, ideal.gens[order[i]])


def _variable_set(colon: MonomialIdeal) -> frozenset[int] | None:
    """Indices of the variables generating ``colon``, or None if it is not linear."""
    out = set()
    for g in colon.gens:
        if sum(g) != 1:
            return None
        out.add(g.index(1))
    return frozenset(out)


def has_linear_quotients_with_order(ideal: MonomialIdeal, order: Sequence[int] | None = None):
    """Certificate if every prefix colon is generated by variables, else the first failure.

    ``order`` defaults to the stored (descending purelex) generator order.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("linear quotients are defined for proper nonzero ideals")
    if order is None:
        order = range(ideal.t)
    order = tuple(order)
    _check_order(ideal, order)
    steps = []
    for i in range(1, ideal.t):
        colon = colon_of_prefix(ideal, order, i)
        vs = _variable_set(colon)
        if vs is None:
            bad = next(g for g in colon.gens if sum(g) != 1)
            return LinearQuotientFailure(i, bad, colon)
        steps.append(vs)
    return LinearQuotientCertificate(ideal, order, tuple(steps))


def purelex_certificate(ideal: MonomialIdeal):
    return has_linear_quotients_with_order(ideal)


def _iter_lq_orders(ideal: MonomialIdeal, cap: int):
    gens = ideal.gens
    t = len(gens)
    visited = 0
    dead: set[frozenset[int]] = set()

    def admissible(prefix, k):
        colon = colon_by_monomial(
            MonomialIdeal.from_exponents([gens[j] for j in prefix], ideal.context), gens[k]
        )
        return _variable_set(colon)

    def walk(prefix, steps):
        nonlocal visited
        visited += 1
        if visited > cap:
            raise SearchCapExceeded(f"linear quotients search visited more than {cap} nodes")
        if len(prefix) == t:
            yield tuple(prefix), tuple(steps)
            return
        placed = frozenset(prefix)
        if placed in dead:
            return
        found = False
        for k in range(t):
            if k in placed:
                continue
            if prefix:
                vs = admissible(prefix, k)
                if vs is None:
                    continue
            else:
                vs = None
            for res in walk(prefix + [k], steps + ([vs] if prefix else [])):
                found = True
                yield res
        # Admissibility of a next generator depends only on the set already placed.
        if not found:
            dead.add(placed)

    yield from walk([], [])


def find_linear_quotients_order(ideal: MonomialIdeal, cap: int = DEFAULT_SEARCH_CAP):
    """Some linear quotients certificate, or None if no order works.

    Raises SearchCapExceeded when more than ``cap`` search nodes are visited.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("linear quotients are defined for proper nonzero ideals")
    # The purelex order is the usual winner; try it before searching.
    cert = has_linear_quotients_with_order(ideal)
    if cert:
        return cert
    for order, steps in _iter_lq_orders(ideal, cap):
        return LinearQuotientCertificate(ideal, order, steps)
    return None


def iter_linear_quotient_certificates(ideal: MonomialIdeal, limit: int | None = None,
                                      cap: int = DEFAULT_SEARCH_CAP):
    """Enumerate linear quotients certificates (up to ``limit`` of them)."""
    for count, (order, steps) in enumerate(_iter_lq_orders(ideal, cap)):
        if limit is not None and count >= limit:
            return
        yield LinearQuotientCertificate(ideal, order, steps)


def is_weakly_polymatroidal(ideal: MonomialIdeal) -> Check:
    """Test the weakly polymatroidal exchange for the context order x1 > ... > xn.

    For generators u, v whose first differing slot t has u_t > v_t, some j > t
    with v_j > 0 must satisfy x_t * v / x_j in I. The witness on failure is
    ``(u, v, t)``. Zero and unit ideals hold vacuously.
    """
    gens = ideal.gens
    for u in gens:
        for v in gens:
            if u == v:
                continue
            t = next(k for k in range(len(u)) if u[k] != v[k])
            if u[t] < v[t]:
                continue
            ok = False
            for j in range(t + 1, len(v)):
                if v[j] == 0:
                    continue
                w = list(v)
                w[t] += 1
                w[j] -= 1
                if ideal.contains_exponents(w):
                    ok = True
                    break
            if not ok:
                return Check(False, (u, v, t))
    return Check(True)


def permute_ideal(ideal: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Relabel variables: new slot k holds old variable ``perm[k]``."""
    names = tuple(ideal.context.names[p] for p in perm)
    ctx = type(ideal.context)(ideal.n, names)
    return MonomialIdeal.from_exponents([tuple(g[p] for p in perm) for g in ideal.gens], ctx)


def weakly_polymatroidal_permutations(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """All variable orders (as permutations) under which ``ideal`` is weakly polymatroidal."""
    if ideal.n > MAX_PERMUTATION_N:
        raise SearchCapExceeded(f"permutation search limited to n <= {MAX_PERMUTATION_N}")
    return [p for p in itertools.permutations(range(ideal.n))
            if is_weakly_polymatroidal(permute_ideal(ideal, p))]


def is_polymatroidal(ideal: MonomialIdeal) -> Check:
    """Single degree plus the symmetric exchange with membership in G(I).

    Witness on failure: ``("degrees", sorted degrees)`` or ``(u, v, i)``.
    """
    degs = ideal.degrees()
    if len(degs) > 1:
        return Check(False, ("degrees", sorted(degs)))
    gens = ideal.gens
    gset = set(gens)
    for u in gens:
        for v in gens:
            for i in range(len(u)):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(len(u)):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in gset:
                            ok = True
                            break
                if not ok:
                    return Check(False, (u, v, i))
    return Check(True)
