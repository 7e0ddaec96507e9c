"""Exhaustive maximisation of pattern counts over all n-vertex triangulations."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .canon import CanonicalCode, canonical_code, canonical_relabel
from .counting import PatternSpec, count_pattern
from .enumerate import TriangulationSet, enumerate_triangulations
from .errors import DomainError, GraphError
from .families import is_apollonian, make_fig1b, make_fig1c, make_fn, make_octahedron
from .formats import to_graph6
from .formulas import closed_form


@lru_cache(maxsize=None)
def triangulations(n: int) -> TriangulationSet:
    """Cached flip enumeration shared by every census at order ``n``."""
    return enumerate_triangulations(n)


@lru_cache(maxsize=None)
def _code(name: str, n: int) -> CanonicalCode:
    builders = {"fn": make_fn, "fig1b": lambda _: make_fig1b(), "fig1c": lambda _: make_fig1c(),
                "octahedron": lambda _: make_octahedron()}
    return canonical_code(builders[name](n))


@dataclass(frozen=True)
class CensusRecord:
    n: int
    pattern: PatternSpec
    maximum: int
    extremal_codes: tuple[CanonicalCode, ...]
    extremal_graph6: tuple[str, ...]
    formula_value: int | None
    matches: bool
    extremal_is_expected_family: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pattern": str(self.pattern),
            "max": self.maximum,
            "extremal": list(self.extremal_graph6),
            "formula": self.formula_value,
            "matches": self.matches,
            "expected_family": self.extremal_is_expected_family,
        }


def expected_family(pattern: PatternSpec, n: int, extremal: set[CanonicalCode],
                    tset: TriangulationSet) -> bool:
    """Does the argmax set agree with the characterisation of the extremal graphs?

    Exact-set checks where a uniqueness statement exists (P4, C3, C4);
    membership of the known construction otherwise.
    """
    kind, k = pattern.kind, pattern.k
    fn = _code("fn", n)
    if kind == "P4":
        want = {7: _code("fig1b", 0), 8: _code("fig1c", 0)}.get(n, fn)
        return extremal == {want}
    if kind == "C3":
        return extremal == {c for c, g in tset.items() if is_apollonian(g) is not None}
    if kind == "C4" or (kind == "Biclique2" and k == 2):
        want = {fn}
        if n == 7:
            want.add(_code("fig1b", 0))
        elif n == 8:
            want.add(_code("fig1c", 0))
        return extremal == want
    if kind == "P2":
        return extremal == set(tset.codes)
    if kind == "Biclique2" and (k, n) in ((3, 6), (4, 6)):
        return _code("octahedron", 0) in extremal
    return fn in extremal


def run_census(pattern: PatternSpec, n: int) -> CensusRecord:
    if n < 4:
        raise GraphError("census starts at n = 4")
    tset = triangulations(n)
    best = -1
    argmax: list[CanonicalCode] = []
    for code, g in tset.items():
        value = count_pattern(g, pattern)
        if value > best:
            best, argmax = value, [code]
        elif value == best:
            argmax.append(code)
    argmax.sort()
    try:
        formula = closed_form(pattern).evaluate(n)
    except DomainError:
        formula = None
    reps = tset.representatives
    return CensusRecord(
        n=n,
        pattern=pattern,
        maximum=best,
        extremal_codes=tuple(argmax),
        extremal_graph6=tuple(to_graph6(canonical_relabel(reps[c][0])) for c in argmax),
        formula_value=formula,
        matches=formula is not None and formula == best,
        extremal_is_expected_family=expected_family(pattern, n, set(argmax), tset),
    )


def worker_count() -> int:
    raw = os.environ.get("PLANEX_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise GraphError(f"PLANEX_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise GraphError(f"PLANEX_THREADS must be a positive integer, got {raw!r}")
    return value


def _census_job(job: tuple[PatternSpec, int]) -> CensusRecord:
    return run_census(*job)


def run_censuses(jobs: list[tuple[PatternSpec, int]]) -> list[CensusRecord]:
    """Run independent census rows, in parallel when ``PLANEX_THREADS > 1``.

    Results come back in job order whatever the scheduling.
    """
    workers = worker_count()
    if workers == 1 or len(jobs) < 2:
        return [run_census(p, n) for p, n in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_census_job, jobs))


def default_patterns(kmax: int = 5) -> list[PatternSpec]:
    pats = [PatternSpec(k) for k in ("P2", "P3", "P4", "C3", "C4")]
    pats += [PatternSpec("Star", k) for k in range(2, kmax + 1)]
    pats += [PatternSpec("Biclique2", k) for k in range(2, kmax + 1)]
    return pats


def summary_table(records: list[CensusRecord]) -> str:
    header = f"{'pattern':<8} {'n':>3} {'max':>7} {'formula':>8} {'#ext':>5}  match  family"
    lines = [header, "-" * len(header)]
    for r in records:
        formula = "-" if r.formula_value is None else str(r.formula_value)
        lines.append(
            f"{str(r.pattern):<8} {r.n:>3} {r.maximum:>7} {formula:>8} "
            f"{len(r.extremal_codes):>5}  {'yes' if r.matches else 'NO ':<5}  "
            f"{'yes' if r.extremal_is_expected_family else 'NO'}"
        )
    return "\n".join(lines)
