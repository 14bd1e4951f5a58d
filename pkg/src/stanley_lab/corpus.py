"""Seeded ideal families and the batch verification runner.

Corpus spec files are flat ``key = value`` text. Repeated ``family`` keys
each add one family::

    # comment
    seed = 7
    require_weakly_polymatroidal = true
    dedupe = true
    max_n = 5
    max_t = 10
    family = squarefree-veronese n=3 d=2
    family = veronese-type n=3 d=3 caps=2,1,2
    family = principal n=3 max_deg=2
    family = power-of k=2 base=squarefree-veronese n=3 d=2
    family = veronese-sweep n=3 max_cap=2
    family = random n=4 t=5 max_exp=3 count=40

``random`` families draw from ``random.Random(seed)`` with the family's
own ``seed=`` if given, else the file seed plus the family's position.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .classes import has_linear_quotients_with_order, is_polymatroidal, is_weakly_polymatroidal
from .decomposer import VerificationFailure, verify_conjecture
from .monomials import MonomialIdeal, VariableContext, format_ideal, power

DEFAULT_TIMEOUT = 60.0


class EmptyFamily(ValueError):
    pass


@dataclass(frozen=True)
class Family:
    kind: str
    params: dict

    def label(self) -> str:
        parts = []
        for k, v in self.params.items():
            if isinstance(v, Family):
                v = v.label()
            elif isinstance(v, (tuple, list)):
                v = ",".join(map(str, v))
            parts.append(f"{k}={v}")
        return f"{self.kind}({' '.join(parts)})"


@dataclass
class CorpusSpec:
    families: list[Family] = field(default_factory=list)
    seed: int = 0
    require_weakly_polymatroidal: bool = False
    dedupe: bool = False
    max_n: int = 8
    max_t: int = 12


_INT_KEYS = {"n", "d", "t", "k", "max_deg", "max_exp", "max_cap", "count", "seed"}


def parse_family(text: str) -> Family:
    tokens = text.split()
    if not tokens:
        raise ValueError("empty family descriptor")
    kind, rest = tokens[0], tokens[1:]
    params: dict = {}
    for j, tok in enumerate(rest):
        key, eq, val = tok.partition("=")
        if not eq:
            raise ValueError(f"bad family parameter {tok!r}")
        if key == "base":
            params["base"] = parse_family(" ".join([val] + rest[j + 1:]))
            break
        if key == "caps":
            params[key] = tuple(int(x) for x in val.split(","))
        elif key in _INT_KEYS:
            params[key] = int(val)
        else:
            raise ValueError(f"unknown family parameter {key!r}")
    return Family(kind, params)


def parse_spec(text: str) -> CorpusSpec:
    spec = CorpusSpec()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, val = line.partition("=")
        if not eq:
            raise ValueError(f"line {lineno}: expected key = value")
        key, val = key.strip(), val.strip()
        if key == "family":
            spec.families.append(parse_family(val))
        elif key == "seed":
            spec.seed = int(val)
        elif key in ("require_weakly_polymatroidal", "dedupe"):
            setattr(spec, key, val.lower() in ("1", "true", "yes"))
        elif key in ("max_n", "max_t"):
            setattr(spec, key, int(val))
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    return spec


def read_spec(path) -> CorpusSpec:
    return parse_spec(Path(path).read_text())


def veronese_type(n: int, d: int, caps=None) -> MonomialIdeal:
    """All x^a with |a| = d and a_i <= caps[i]; polymatroidal by construction."""
    caps = tuple(caps) if caps is not None else (d,) * n
    if len(caps) != n:
        raise ValueError("caps must have length n")
    vecs = [a for a in itertools.product(*(range(c + 1) for c in caps)) if sum(a) == d]
    if not vecs:
        raise EmptyFamily(f"no monomial of degree {d} under caps {caps}")
    ideal = MonomialIdeal.from_exponents(vecs, VariableContext(n))
    assert is_polymatroidal(ideal), "veronese-type ideal failed the polymatroidal self-test"
    return ideal


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    return veronese_type(n, d, (1,) * n)


def principal_ideals(n: int, max_deg: int) -> list[MonomialIdeal]:
    ctx = VariableContext(n)
    out = [MonomialIdeal((a,), ctx)
           for a in itertools.product(range(max_deg + 1), repeat=n) if 1 <= sum(a) <= max_deg]
    out.sort(key=lambda I: (sum(I.gens[0]), [-x for x in I.gens[0]]))
    if not out:
        raise EmptyFamily("principal family is empty")
    return out


def veronese_sweep(n: int, max_cap: int) -> list[MonomialIdeal]:
    """Every proper veronese-type ideal with caps in [0, max_cap]^n, deduplicated."""
    out, seen = [], set()
    for caps in itertools.product(range(max_cap + 1), repeat=n):
        for d in range(1, sum(caps) + 1):
            I = veronese_type(n, d, caps)
            if I.gens not in seen:
                seen.add(I.gens)
                out.append(I)
    return out


def random_ideals(n: int, t: int, max_exp: int, count: int, seed: int) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    ctx = VariableContext(n)
    out = []
    for _ in range(count):
        vecs = []
        while len(vecs) < t:
            v = tuple(rng.randint(0, max_exp) for _ in range(n))
            if any(v):
                vecs.append(v)
        out.append(MonomialIdeal.from_exponents(vecs, ctx))
    return out


def family_ideals(fam: Family, seed: int = 0) -> list[MonomialIdeal]:
    p = fam.params
    if fam.kind == "veronese-type":
        return [veronese_type(p["n"], p["d"], p.get("caps"))]
    if fam.kind == "squarefree-veronese":
        return [squarefree_veronese(p["n"], p["d"])]
    if fam.kind == "veronese-sweep":
        return veronese_sweep(p["n"], p["max_cap"])
    if fam.kind == "principal":
        return principal_ideals(p["n"], p["max_deg"])
    if fam.kind == "power-of":
        return [power(I, p["k"]) for I in family_ideals(p["base"], seed)]
    if fam.kind == "random":
        return random_ideals(p["n"], p["t"], p["max_exp"], p.get("count", 1), p.get("seed", seed))
    raise ValueError(f"unknown family kind {fam.kind!r}")


def generate(spec: CorpusSpec) -> list[tuple[str, MonomialIdeal]]:
    """Deterministic list of ``(ideal id, ideal)`` pairs."""
    out = []
    seen = set()
    for fpos, fam in enumerate(spec.families):
        for j, I in enumerate(family_ideals(fam, spec.seed + fpos)):
            if I.n > spec.max_n or I.t > spec.max_t:
                continue
            if spec.dedupe:
                if (I.n, I.gens) in seen:
                    continue
                seen.add((I.n, I.gens))
            if spec.require_weakly_polymatroidal and not is_weakly_polymatroidal(I):
                continue
            out.append((f"{fpos:03d}-{j:04d}", I))
    return out


# ---------------------------------------------------------------- running

@dataclass
class Row:
    id: str
    family: str
    n: int
    t: int
    gens: str
    polymatroidal: bool
    weakly_polymatroidal: bool
    linear_quotients: bool
    depth: float | None = None
    sdepth_construct: float | None = None
    sdepth_exact: float | None = None
    exact: bool = False
    conjecture_holds: bool | None = None
    status: str = "ok"
    seconds: float = 0.0


@dataclass
class VerificationReport:
    rows: list[Row]

    @property
    def violations(self) -> list[Row]:
        return [r for r in self.rows if r.conjecture_holds is False or r.status.startswith("error")]

    @property
    def ok(self) -> bool:
        return not self.violations

    def table(self) -> str:
        cols = ["id", "n", "t", "PM", "WPM", "LQ", "depth", "sd_con", "sd_exact", "holds", "status"]
        lines = [cols]
        for r in self.rows:
            ex = "" if r.sdepth_exact is None else f"{r.sdepth_exact}{'' if r.exact else '+'}"
            lines.append([r.id, str(r.n), str(r.t), _yn(r.polymatroidal), _yn(r.weakly_polymatroidal),
                          _yn(r.linear_quotients), _fmt(r.depth), _fmt(r.sdepth_construct), ex,
                          _yn(r.conjecture_holds), r.status])
        widths = [max(len(l[k]) for l in lines) for k in range(len(cols))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(l, widths)).rstrip() for l in lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        names = list(Row.__dataclass_fields__)
        w = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
        w.writeheader()
        for r in self.rows:
            w.writerow(asdict(r))
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([asdict(r) for r in self.rows], indent=1)

    def write(self, out_dir):
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.csv").write_text(self.to_csv())
        (out / "report.json").write_text(self.to_json())


def _yn(v):
    return "-" if v is None else ("yes" if v else "no")


def _fmt(v):
    return "-" if v is None else str(v)


def default_timeout() -> float:
    return float(os.environ.get("STANLEY_LAB_TIMEOUT", DEFAULT_TIMEOUT))


def run_one(ideal_id: str, family: str, ideal: MonomialIdeal, exact: bool = False,
            timeout: float = DEFAULT_TIMEOUT) -> Row:
    start = time.perf_counter()
    proper = not ideal.is_zero() and not ideal.is_unit()
    row = Row(
        ideal_id, family, ideal.n, ideal.t, format_ideal(ideal).split("\n", 1)[1].strip().replace("\n", "; "),
        polymatroidal=bool(proper and is_polymatroidal(ideal)),
        weakly_polymatroidal=bool(is_weakly_polymatroidal(ideal)),
        linear_quotients=bool(proper and has_linear_quotients_with_order(ideal)),
    )
    if not proper:
        row.status = "skipped: trivial ideal"
    elif not row.weakly_polymatroidal:
        row.status = "skipped: precondition"
    else:
        try:
            rep = verify_conjecture(ideal, exact=exact, timeout=timeout)
        except VerificationFailure as exc:
            row.status = f"error: {exc}"
        except Exception as exc:  # caps and timeouts are per-row, not fatal
            row.status = f"error ({type(exc).__name__}): {exc}"
        else:
            row.depth = rep.depth
            row.sdepth_construct = rep.sdepth_construct
            row.sdepth_exact = rep.sdepth_exact
            row.exact = rep.exact
            row.conjecture_holds = rep.conjecture_holds
            if exact and not rep.exact:
                row.status = "ok (exact sdepth timed out; lower bound)"
    row.seconds = round(time.perf_counter() - start, 4)
    return row


def _run_packed(args):
    return run_one(*args)


def run_suite(spec: CorpusSpec, exact: bool = False, jobs: int = 1,
              timeout: float | None = None) -> VerificationReport:
    if timeout is None:
        timeout = default_timeout()
    labels = {f"{k:03d}": fam.label() for k, fam in enumerate(spec.families)}
    work = [(iid, labels[iid[:3]], I, exact, timeout) for iid, I in generate(spec)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_packed, work))
    else:
        rows = [_run_packed(w) for w in work]
    rows.sort(key=lambda r: r.id)
    return VerificationReport(rows)
