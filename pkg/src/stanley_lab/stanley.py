"""Stanley spaces and decompositions of S/I, exact verification, exact sdepth.

Exact sdepth uses interval partitions of the characteristic poset
P = {a <= g : x^a not in I}, g the lcm of G(I). A partition into intervals
[a, b] has Stanley depth min |{i : b_i = g_i}|, and sdepth(S/I) is the
maximum over all partitions.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .monomials import MonomialIdeal, extend_variable

INFINITY = math.inf
DEFAULT_POSET_CAP = 10**6
DEFAULT_TIMEOUT = 60.0


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class StanleySpace:
    """The space u * K[Z] of all monomials u * v with v a monomial in Z."""

    u: tuple[int, ...]
    Z: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "Z", frozenset(self.Z))

    @property
    def dim(self) -> int:
        return len(self.Z)

    def __contains__(self, a: Sequence[int]) -> bool:
        return all(x == y if i not in self.Z else x >= y
                   for i, (x, y) in enumerate(zip(a, self.u)))

    def format(self) -> str:
        return " ".join(map(str, self.u)) + " | " + " ".join(str(i + 1) for i in sorted(self.Z))


@dataclass(frozen=True)
class StanleyDecomposition:
    ideal: MonomialIdeal
    spaces: tuple[StanleySpace, ...]

    def __post_init__(self):
        object.__setattr__(self, "spaces", tuple(self.spaces))

    def __len__(self):
        return len(self.spaces)

    def format(self) -> str:
        return "".join(s.format() + "\n" for s in self.spaces)


def parse_decomposition(text: str, ideal: MonomialIdeal) -> StanleyDecomposition:
    """Read the ``exponents | variables`` line format (variables numbered from 1)."""
    spaces = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        left, _, right = line.partition("|")
        u = tuple(int(x) for x in left.split())
        Z = frozenset(int(x) - 1 for x in right.split())
        spaces.append(StanleySpace(u, Z))
    return StanleyDecomposition(ideal, tuple(spaces))


@dataclass(frozen=True)
class Violation:
    kind: str  # "context" | "out-of-box" | "uncovered" | "overlap" | "covers-ideal"
    monomial: tuple[int, ...] | None
    detail: str = ""

    def __bool__(self):
        return False


def verify_decomposition(D: StanleyDecomposition) -> Violation | None:
    """Exact check that D partitions the monomials outside I.

    Returns None when D is a Stanley decomposition of S/I, else the first
    violation found. Every space generator must lie in the box [0, g];
    membership in I and in each space then depends only on exponents
    clamped to g + 1, so the box [0, g + 1] decides the whole ring.
    """
    ideal = D.ideal
    n = ideal.n
    g = ideal.lcm_exponents()
    top = tuple(x + 1 for x in g)
    counts: dict[tuple[int, ...], int] = {}
    for s in D.spaces:
        if len(s.u) != n or any(not 0 <= i < n for i in s.Z):
            return Violation("context", s.u, f"space {s.format()} does not fit n={n}")
        if any(x > y for x, y in zip(s.u, g)):
            return Violation("out-of-box", s.u, f"space generator outside [0, {g}]")
        ranges = [range(s.u[i], top[i] + 1) if i in s.Z else (s.u[i],) for i in range(n)]
        for a in itertools.product(*ranges):
            counts[a] = counts.get(a, 0) + 1
    for a in itertools.product(*(range(x + 1) for x in top)):
        c = counts.get(a, 0)
        if ideal.contains_exponents(a):
            if c:
                return Violation("covers-ideal", a, "monomial of I lies in a space")
        elif c == 0:
            return Violation("uncovered", a, "standard monomial lies in no space")
        elif c > 1:
            return Violation("overlap", a, f"monomial lies in {c} spaces")
    return None


def sdepth_of(D: StanleyDecomposition) -> float:
    return min((s.dim for s in D.spaces), default=INFINITY)


def lift_free_variable(D: StanleyDecomposition, i: int, name: str | None = None) -> StanleyDecomposition:
    """Decomposition of S/I'S from one of S'/I', where S = S'[x_new] and x_new sits at index ``i``."""
    ctx = D.ideal.context
    if name is None:
        name = next(f"y{k}" for k in itertools.count(1) if f"y{k}" not in ctx.names)
    ideal = extend_variable(D.ideal, i, name)
    spaces = tuple(
        StanleySpace(s.u[:i] + (0,) + s.u[i:], {z + (z >= i) for z in s.Z} | {i}) for s in D.spaces
    )
    return StanleyDecomposition(ideal, spaces)


# ---------------------------------------------------------------- exact sdepth

@dataclass(frozen=True)
class CharacteristicPoset:
    g: tuple[int, ...]
    elements: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.elements)


def characteristic_poset(ideal: MonomialIdeal, cap: int = DEFAULT_POSET_CAP) -> CharacteristicPoset:
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("characteristic poset needs a proper nonzero ideal")
    g = ideal.lcm_exponents()
    if math.prod(x + 1 for x in g) > cap:
        raise CapExceeded(f"box of size {math.prod(x + 1 for x in g)} exceeds cap {cap}")
    elems = tuple(a for a in itertools.product(*(range(x + 1) for x in g))
                  if not ideal.contains_exponents(a))
    return CharacteristicPoset(g, elems)


def interval_spaces(a: Sequence[int], b: Sequence[int], g: Sequence[int]) -> list[StanleySpace]:
    """Stanley spaces realizing the interval [a, b] of a characteristic poset.

    Z = {i : b_i = g_i}; coordinates outside Z range over a_i..b_i, each
    choice giving its own space.
    """
    Z = frozenset(i for i in range(len(g)) if b[i] == g[i])
    ranges = [(a[i],) if i in Z else range(a[i], b[i] + 1) for i in range(len(g))]
    return [StanleySpace(c, Z) for c in itertools.product(*ranges)]


def partition_to_decomposition(ideal: MonomialIdeal, intervals, g) -> StanleyDecomposition:
    spaces = [s for a, b in intervals for s in interval_spaces(a, b, g)]
    return StanleyDecomposition(ideal, tuple(spaces))


@dataclass(frozen=True)
class SdepthResult:
    value: float
    exact: bool
    decomposition: StanleyDecomposition | None
    intervals: tuple = ()


class _Timeout(Exception):
    pass


def _partition_with_min_rank(poset: CharacteristicPoset, k: int, deadline: float):
    """Interval partition with every top b having |{i : b_i = g_i}| >= k, or None."""
    g = poset.g
    n = len(g)
    # Ascending degree order: the first uncovered element must be an interval's bottom.
    elems = sorted(poset.elements, key=lambda a: (sum(a), a))
    index = {a: j for j, a in enumerate(elems)}
    tops = [b for b in elems if sum(b[i] == g[i] for i in range(n)) >= k]
    if not tops:
        return None

    cands: list[list[tuple[int, tuple]]] = []
    for a in elems:
        opts = []
        for b in tops:
            if all(x <= y for x, y in zip(a, b)):
                mask = 0
                for c in itertools.product(*(range(x, y + 1) for x, y in zip(a, b))):
                    mask |= 1 << index[c]
                opts.append((mask, b))
        if not opts:
            return None
        # Larger intervals first.
        opts.sort(key=lambda mb: (-bin(mb[0]).count("1"), mb[1]))
        cands.append(opts)

    full = (1 << len(elems)) - 1
    failed: set[int] = set()
    chosen: list[tuple] = []
    steps = 0

    def search(covered: int) -> bool:
        nonlocal steps
        if covered == full:
            return True
        if covered in failed:
            return False
        steps += 1
        if steps % 256 == 0 and time.monotonic() > deadline:
            raise _Timeout
        free = ~covered
        j = (free & -free).bit_length() - 1
        for mask, b in cands[j]:
            if mask & covered:
                continue
            chosen.append((elems[j], b))
            if search(covered | mask):
                return True
            chosen.pop()
        failed.add(covered)
        return False

    return list(chosen) if search(0) else None


def exact_sdepth_quotient(ideal: MonomialIdeal, cap: int = DEFAULT_POSET_CAP,
                          timeout: float = DEFAULT_TIMEOUT) -> SdepthResult:
    """sdepth(S/I) by exhaustive interval-partition search.

    Feasibility is monotone in the target rank, so targets are tried
    upwards from 1; the last feasible one is exact once the next fails.
    On timeout the best value found is returned with ``exact=False``.
    """
    n = ideal.n
    if ideal.is_unit():
        return SdepthResult(INFINITY, True, StanleyDecomposition(ideal, ()))
    if ideal.is_zero():
        D = StanleyDecomposition(ideal, (StanleySpace((0,) * n, range(n)),))
        return SdepthResult(n, True, D)
    poset = characteristic_poset(ideal, cap)
    g = poset.g
    deadline = time.monotonic() + timeout
    best = 0
    best_intervals = [(a, a) for a in poset.elements]
    # sdepth(S/I) <= dim S/I <= n - 1 for a proper nonzero ideal.
    exact = True
    for k in range(1, n):
        if time.monotonic() >= deadline:
            exact = False
            break
        try:
            part = _partition_with_min_rank(poset, k, deadline)
        except _Timeout:
            exact = False
            break
        if part is None:
            break
        best, best_intervals = k, part
    D = partition_to_decomposition(ideal, best_intervals, g)
    return SdepthResult(best, exact, D, tuple(best_intervals))


def space_monomials(spaces: Iterable[StanleySpace], box: Sequence[int]):
    """Multiset (as a dict of counts) of monomials inside [0, box] covered by ``spaces``."""
    counts: dict[tuple[int, ...], int] = {}
    for s in spaces:
        ranges = [range(s.u[i], box[i] + 1) if i in s.Z else (s.u[i],) for i in range(len(box))]
        for a in itertools.product(*ranges):
            counts[a] = counts.get(a, 0) + 1
    return counts

