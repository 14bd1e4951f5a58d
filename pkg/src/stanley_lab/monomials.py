"""Monomials and monomial ideals as exponent vectors.

Variables are indexed from 0, so ``x1`` is index 0. The ambient order is
always ``x1 > x2 > ... > xn``; pure lexicographic comparison of exponent
vectors is plain tuple comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

MAX_EXPONENT = 2**16


class ContextError(ValueError):
    """Two objects live in different variable contexts."""


class NonMinimalError(ValueError):
    """A generating set handed to MonomialIdeal is not divisibility-minimal."""


@dataclass(frozen=True)
class VariableContext:
    n: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("number of variables must be non-negative")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.n)))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.n:
            raise ValueError(f"expected {self.n} names, got {len(self.names)}")
        if len(set(self.names)) != self.n:
            raise ValueError("variable names must be distinct")

    def without(self, i: int) -> VariableContext:
        self.check_index(i)
        return VariableContext(self.n - 1, self.names[:i] + self.names[i + 1:])

    def with_variable(self, i: int, name: str) -> VariableContext:
        if not 0 <= i <= self.n:
            raise IndexError(f"insertion index {i} out of range for n={self.n}")
        return VariableContext(self.n + 1, self.names[:i] + (name,) + self.names[i:])

    def check_index(self, i: int):
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range for n={self.n}")

    def monomial(self, *exponents: int) -> Monomial:
        return Monomial(exponents, self)

    def variable(self, i: int) -> Monomial:
        self.check_index(i)
        return Monomial(tuple(int(j == i) for j in range(self.n)), self)

    def one(self) -> Monomial:
        return Monomial((0,) * self.n, self)


def _check_exponents(exps: tuple[int, ...]):
    for e in exps:
        if e < 0:
            raise ValueError(f"negative exponent in {exps}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]
    context: VariableContext = field(compare=False, repr=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.context.n:
            raise ContextError(f"{exps} has length {len(exps)}, context has n={self.context.n}")
        _check_exponents(exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def _same(self, other: Monomial):
        if self.context != other.context:
            raise ContextError("monomials belong to different contexts")

    def __mul__(self, other: Monomial) -> Monomial:
        self._same(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.context)

    def divides(self, other: Monomial) -> bool:
        self._same(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: Monomial) -> Monomial:
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)), self.context)

    def lcm(self, other: Monomial) -> Monomial:
        self._same(other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)), self.context)

    def gcd(self, other: Monomial) -> Monomial:
        self._same(other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)), self.context)

    def __str__(self):
        parts = []
        for name, e in zip(self.context.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


def divides(u: Monomial, v: Monomial) -> bool:
    return u.divides(v)


def purelex_compare(u: Monomial, v: Monomial) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to, or greater than ``v``."""
    u._same(v)
    return (u.exponents > v.exponents) - (u.exponents < v.exponents)


def minimal_exponents(vectors: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Divisibility-minimal subset of exponent vectors, sorted descending purelex."""
    # Ascending degree: a vector can only be divided by one of no larger degree.
    cands = sorted(set(tuple(v) for v in vectors), key=lambda v: (sum(v), v))
    kept: list[tuple[int, ...]] = []
    for v in cands:
        if not any(all(a <= b for a, b in zip(w, v)) for w in kept):
            kept.append(v)
    kept.sort(reverse=True)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators ``gens``.

    Generators are stored descending in pure lexicographic order. No
    generators means the zero ideal; the single generator ``1`` is the
    unit ideal.
    """

    gens: tuple[tuple[int, ...], ...]
    context: VariableContext

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in g) for g in self.gens)
        for g in gens:
            if len(g) != self.context.n:
                raise ContextError(f"generator {g} does not have length n={self.context.n}")
            _check_exponents(g)
        minimal = minimal_exponents(gens)
        if len(minimal) != len(gens) or set(minimal) != set(gens):
            raise NonMinimalError(f"generators {gens} are not divisibility-minimal")
        object.__setattr__(self, "gens", tuple(minimal))

    @classmethod
    def from_exponents(cls, vectors: Iterable[Sequence[int]], context: VariableContext | int | None = None):
        """Minimalize ``vectors`` and build the ideal they generate."""
        vectors = [tuple(v) for v in vectors]
        if context is None:
            if not vectors:
                raise ValueError("context required for the zero ideal")
            context = len(vectors[0])
        if isinstance(context, int):
            context = VariableContext(context)
        return cls(tuple(minimal_exponents(vectors)), context)

    @property
    def n(self) -> int:
        return self.context.n

    @property
    def t(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def generators(self) -> list[Monomial]:
        return [Monomial(g, self.context) for g in self.gens]

    def contains_exponents(self, a: Sequence[int]) -> bool:
        return any(all(x <= y for x, y in zip(g, a)) for g in self.gens)

    def __contains__(self, m: Monomial) -> bool:
        if m.context != self.context:
            raise ContextError("monomial and ideal belong to different contexts")
        return self.contains_exponents(m.exponents)

    def lcm_exponents(self) -> tuple[int, ...]:
        """Componentwise maximum of the generators (zero vector for I = 0)."""
        if not self.gens:
            return (0,) * self.n
        return tuple(map(max, *self.gens)) if len(self.gens) > 1 else self.gens[0]

    def support(self) -> frozenset[int]:
        return frozenset(i for g in self.gens for i, e in enumerate(g) if e)

    def total_degree(self) -> int:
        return sum(sum(g) for g in self.gens)

    def degrees(self) -> set[int]:
        return {sum(g) for g in self.gens}

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(m) for m in self.generators()) + ")"


def minimalize(gens: Iterable[Monomial], context: VariableContext | None = None) -> MonomialIdeal:
    gens = list(gens)
    if context is None:
        if not gens:
            raise ValueError("context required for an empty generating set")
        context = gens[0].context
    for g in gens:
        if g.context != context:
            raise ContextError("generators belong to different contexts")
    return MonomialIdeal.from_exponents([g.exponents for g in gens], context)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return m in ideal


def colon_by_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """The ideal (I : x_i)."""
    ideal.context.check_index(i)
    gens = []
    for g in ideal.gens:
        if g[i]:
            g = g[:i] + (g[i] - 1,) + g[i + 1:]
        gens.append(g)
    return MonomialIdeal.from_exponents(gens, ideal.context)


def colon_by_monomial(ideal: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal.from_exponents(
        [tuple(max(a - b, 0) for a, b in zip(g, u)) for g in ideal.gens], ideal.context
    )


def delete_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """I intersected with the polynomial ring on the remaining variables.

    The x_i-free minimal generators of I minimally generate the
    intersection, so nothing needs re-minimalizing.
    """
    ctx = ideal.context.without(i)
    return MonomialIdeal(tuple(g[:i] + g[i + 1:] for g in ideal.gens if not g[i]), ctx)


def extend_variable(ideal: MonomialIdeal, i: int, name: str) -> MonomialIdeal:
    """The extension of ``ideal`` to a ring with one new variable at index ``i``."""
    ctx = ideal.context.with_variable(i, name)
    return MonomialIdeal(tuple(g[:i] + (0,) + g[i:] for g in ideal.gens), ctx)


def multiply(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    if ideal.context != other.context:
        raise ContextError("ideals belong to different contexts")
    prods = [tuple(a + b for a, b in zip(g, h)) for g, h in itertools.product(ideal.gens, other.gens)]
    for p in prods:
        _check_exponents(p)
    return MonomialIdeal.from_exponents(prods, ideal.context)


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("power exponent must be at least 1")
    result = ideal
    for _ in range(k - 1):
        result = multiply(result, ideal)
    return result


def unit_ideal(context: VariableContext) -> MonomialIdeal:
    return MonomialIdeal(((0,) * context.n,), context)


def zero_ideal(context: VariableContext) -> MonomialIdeal:
    return MonomialIdeal((), context)


# Ideal text format: "n <int>" then one exponent vector per line, '#' comments.

def parse_ideal(text: str) -> tuple[MonomialIdeal, bool]:
    """Parse the ideal text format; returns the ideal and whether the input was minimal."""
    n = None
    vectors = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            head = line.split()
            if len(head) != 2 or head[0] != "n":
                raise ValueError(f"line {lineno}: expected 'n <integer>', got {line!r}")
            n = int(head[1])
            if n < 1:
                raise ValueError(f"line {lineno}: n must be positive")
            continue
        vec = tuple(int(tok) for tok in line.split())
        if len(vec) != n:
            raise ValueError(f"line {lineno}: expected {n} exponents, got {len(vec)}")
        vectors.append(vec)
    if n is None:
        raise ValueError("missing 'n <integer>' header")
    ideal = MonomialIdeal.from_exponents(vectors, VariableContext(n))
    was_minimal = len(set(vectors)) == len(vectors) == ideal.t
    return ideal, was_minimal


def read_ideal(path: str | Path) -> tuple[MonomialIdeal, bool]:
    return parse_ideal(Path(path).read_text())


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"n {ideal.n}"]
    lines += [" ".join(map(str, g)) for g in ideal.gens]
    return "\n".join(lines) + "\n"
