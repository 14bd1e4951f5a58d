"""Projective dimension and depth of S/I.

The fast route reads pd off a linear quotients certificate. The oracle
computes multigraded Betti numbers from the lcm lattice: for a lattice
element a, beta_{i,a}(S/I) is the rank of reduced homology in degree i - 2
of the open interval (1, a). That interval is computed either from its
order complex or, by the crosscut theorem, from the complex of sets of
generators below a whose lcm is strictly below a. Both routes are kept;
they check each other in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .classes import LinearQuotientCertificate, has_linear_quotients_with_order
from .monomials import MonomialIdeal

INFINITY = math.inf
MAX_BETTI_GENERATORS = 12
MAX_BETTI_VARIABLES = 8
MAX_CHAINS = 10**5


class SizeCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DepthReport:
    """pd and depth of S/I; for S/S (the zero module) depth is +inf and pd -inf."""

    pd: float
    depth: float
    source: str  # "linear-quotients-formula" | "betti-oracle" | "convention"
    n: int

    def __post_init__(self):
        if self.depth != INFINITY and self.pd + self.depth != self.n:
            raise AssertionError("pd + depth must equal n")


def _report(pd, n, source) -> DepthReport:
    return DepthReport(pd, n - pd, source, n)


def pd_from_certificate(cert: LinearQuotientCertificate, n: int) -> DepthReport:
    pd = max(cert.counts, default=0) + 1
    return _report(pd, n, "linear-quotients-formula")


# ---------------------------------------------------------------- rank

def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    """Rank over GF(p) of a sparse matrix given as a list of {col: value} rows."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                rank += 1
                break
            f = r[c]
            for k, v in piv.items():
                nv = (r.get(k, 0) - f * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def _rank_rational(rows: list[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                lead = r[c]
                pivots[c] = {k: v / lead for k, v in r.items()}
                rank += 1
                break
            f = r[c]
            for k, v in piv.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def matrix_rank(rows: list[dict[int, int]], char: int = 0) -> int:
    if char == 0:
        return _rank_rational(rows)
    return _rank_mod_p(rows, char)


def reduced_homology_ranks(faces: Iterable[Sequence], char: int = 0) -> dict[int, int]:
    """Ranks of reduced homology of a simplicial complex given by all its faces.

    Faces are sorted tuples of comparable vertices and must include every
    face (closure is the caller's job); the empty face is implied.
    Returns {dimension: rank} for the nonzero ranks, dimension -1 included.
    """
    by_dim: dict[int, list[tuple]] = {-1: [()]}
    for f in faces:
        f = tuple(f)
        if f:
            by_dim.setdefault(len(f) - 1, []).append(f)
    index = {d: {f: k for k, f in enumerate(fs)} for d, fs in by_dim.items()}
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        lower = index[d - 1]
        rows = []
        for f in by_dim[d]:
            rows.append({lower[f[:k] + f[k + 1:]]: (-1) ** k for k in range(len(f))})
        ranks[d] = matrix_rank(rows, char)
    out = {}
    for d in range(-1, top + 1):
        dim = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if dim:
            out[d] = dim
    return out


# ---------------------------------------------------------------- lcm lattice

def _lcm(a, b):
    return tuple(map(max, a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm_lattice(ideal: MonomialIdeal) -> set[tuple[int, ...]]:
    """All lcms of subsets of G(I), the empty lcm (zero vector) included."""
    elems = {(0,) * ideal.n}
    for g in ideal.gens:
        elems |= {_lcm(e, g) for e in elems}
    return elems


def _crosscut_faces(gens, a):
    below = [g for g in gens if _divides(g, a)]
    faces = []
    # The lcm of the whole set is a itself, so only proper subsets qualify.
    for k in range(1, len(below)):
        for sub in combinations(range(len(below)), k):
            m = below[sub[0]]
            for j in sub[1:]:
                m = _lcm(m, below[j])
            if m != a:
                faces.append(sub)
    return faces


def _order_complex_faces(lattice, a, cap):
    zero = (0,) * len(a)
    inner = sorted(e for e in lattice if e != a and e != zero and _divides(e, a))
    # inner is sorted lexicographically, a linear extension of divisibility.
    up = {e: [f for f in inner if f != e and _divides(e, f)] for e in inner}
    faces = []

    def extend(chain):
        faces.append(chain)
        if len(faces) > cap:
            raise SizeCapExceeded(f"order complex exceeds {cap} chains")
        for f in up[chain[-1]]:
            extend(chain + (f,))

    for e in inner:
        extend((e,))
    return faces


@dataclass(frozen=True)
class BettiTable:
    entries: dict[tuple[int, tuple[int, ...]], int]
    char: int

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def totals(self) -> list[int]:
        out = [0] * (self.pd + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return out


def betti_numbers(ideal: MonomialIdeal, char: int = 0, method: str = "crosscut") -> BettiTable:
    """Multigraded Betti numbers of S/I over Q (char 0) or GF(char).

    ``method`` is "crosscut" or "order-complex".
    """
    if ideal.t > MAX_BETTI_GENERATORS:
        raise SizeCapExceeded(f"Betti oracle limited to t <= {MAX_BETTI_GENERATORS}")
    if ideal.n > MAX_BETTI_VARIABLES:
        raise SizeCapExceeded(f"Betti oracle limited to n <= {MAX_BETTI_VARIABLES}")
    if method not in ("crosscut", "order-complex"):
        raise ValueError(f"unknown method {method!r}")
    zero = (0,) * ideal.n
    entries = {(0, zero): 1}
    if ideal.is_zero():
        return BettiTable(entries, char)
    lattice = lcm_lattice(ideal)
    for a in sorted(lattice):
        if a == zero:
            continue
        if method == "crosscut":
            faces = _crosscut_faces(ideal.gens, a)
        else:
            faces = _order_complex_faces(lattice, a, MAX_CHAINS)
        for d, r in reduced_homology_ranks(faces, char).items():
            entries[(d + 2, a)] = r
    return BettiTable(entries, char)


def depth(ideal: MonomialIdeal, char: int = 0) -> DepthReport:
    """Depth of S/I. The unit ideal gives depth +inf (zero module)."""
    n = ideal.n
    if ideal.is_zero():
        return _report(0, n, "convention")
    if ideal.is_unit():
        return DepthReport(-INFINITY, INFINITY, "convention", n)
    cert = has_linear_quotients_with_order(ideal)
    if cert:
        return pd_from_certificate(cert, n)
    table = betti_numbers(ideal, char)
    return _report(table.pd, n, "betti-oracle")
