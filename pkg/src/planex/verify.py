"""The full self-check: census rows plus every structural property.

Each check yields a :class:`Check` with a pass flag and, on failure, the
graph6 string of a counterexample so it can be reproduced directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .canon import canonical_code
from .census import default_patterns, run_censuses, triangulations
from .counting import (
    PatternSpec,
    classify_p4_at_vertex,
    count_c4,
    count_k2k,
    count_p4_at_vertex,
    count_p4_lemma,
    count_paths_bruteforce,
    count_pattern,
    count_star,
    count_star_edges,
    count_triangles,
    second_apex,
)
from .embedding import Embedding, link_cycle
from .enumerate import (
    BRUTE_FORCE_MAX_N,
    apply_flip,
    brute_force_triangulations,
    enumerate_triangulations,
    legal_flips,
)
from .families import (
    is_apollonian,
    make_apollonian,
    make_fn,
    make_nine_vertex_fixtures,
    make_octahedron,
)
from .formats import to_graph6
from .formulas import f_c3, f_c4, f_p4, lemma2_bound
from .graph import Graph, build_graph
from .planarity import embed, is_maximal_planar, is_planar

SEED = 20200101


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" [{self.detail}]" if self.detail else ""
        cex = f" counterexample={self.counterexample}" if self.counterexample else ""
        return f"{status}  {self.name}{extra}{cex}"


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines.append(f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines)


def _first_failure(graphs: list[Graph], pred: Callable[[Graph], bool]) -> str | None:
    for g in graphs:
        if not pred(g):
            return to_graph6(g)
    return None


def _forall(name: str, graphs: list[Graph], pred: Callable[[Graph], bool]) -> Check:
    cex = _first_failure(graphs, pred)
    return Check(name, cex is None, f"{len(graphs)} graphs", cex)


def random_graph(rng: random.Random, n: int, density: float) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density])


def random_relabel(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_apollonian(rng: random.Random, n: int) -> Embedding:
    stacking = [rng.randrange(2 * (3 + s) - 4) for s in range(n - 3)]
    return make_apollonian(n, stacking)


def per_vertex_violations(g: Graph) -> str | None:
    """Check decomposition, Type-I count and the base-case bounds at degree-3 vertices."""
    e = embed(g)
    n = g.n
    for v in range(n):
        if g.degree(v) != 3:
            continue
        through = count_p4_at_vertex(g, v)
        tb = classify_p4_at_vertex(e, v)
        dsum = sum(g.degree(x) for x in g.neighbors(v))
        if tb.total != through:
            return f"v={v}: classes sum {tb.total} != {through}"
        if tb.type_i != 2 * dsum - 12 or tb.type_iia + tb.type_iib != 2 * dsum - 12:
            return f"v={v}: Type-I/II counts differ from 2*sum(d)-12"
        s = count_star_edges(e, v)
        limit = 14 * n - 44 if second_apex(g, v) is None else 14 * n - 40 + s
        if through > limit:
            return f"v={v}: P4(G,v)={through} > {limit}"
    return None


def _graph_core_checks(n_max: int, rng: random.Random) -> Iterator[Check]:
    tri = [g for n in range(4, n_max + 1) for g in triangulations(n).graphs()]
    yield _forall(
        "graph: symmetry, no loops, handshake",
        tri,
        lambda g: sum(g.degrees()) == 2 * g.m
        and all(not g.has_edge(v, v) for v in range(g.n))
        and all(g.has_edge(u, v) == g.has_edge(v, u) for u in range(g.n) for v in range(g.n)),
    )
    def faces_ok(g: Graph) -> bool:
        e = embed(g)
        darts = [(f[i], f[(i + 1) % len(f)]) for f in e.faces() for i in range(len(f))]
        return len(darts) == len(set(darts)) == 2 * g.m and e.is_spherical() and e.is_triangulation()

    yield _forall("embedding: faces cover each dart once, Euler, triangular faces", tri, faces_ok)
    sample = [tri[i] for i in sorted(rng.sample(range(len(tri)), min(10, len(tri))))]
    yield _forall(
        "canonical_code invariant under 50 random relabellings",
        sample,
        lambda g: all(canonical_code(random_relabel(rng, g)) == canonical_code(g) for _ in range(50)),
    )

    def links_ok(g: Graph) -> bool:
        e = embed(g)
        for v in range(g.n):
            cyc = link_cycle(e, v)
            k = len(cyc)
            if k != g.degree(v) or not all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                return False
        return True

    yield _forall("link cycles have length d(v) and are cycles", tri, links_ok)
    yield _forall("maximal planar => 3 <= min degree <= 5", tri,
                  lambda g: is_maximal_planar(g) and 3 <= g.min_degree() <= 5)


def _enumerate_checks(n_max: int, rng: random.Random) -> Iterator[Check]:
    for n in range(4, min(n_max, BRUTE_FORCE_MAX_N) + 1):
        flips = triangulations(n)
        brute = brute_force_triangulations(n)
        yield Check(f"enumerate n={n}: flip BFS == labelled brute force",
                    flips.codes == brute.codes, f"{len(flips)} vs {len(brute)}")
    for n in range(4, n_max + 1):
        tset = triangulations(n)
        yield _forall(f"enumerate n={n}: members maximal planar with 2n-4 faces",
                      tset.graphs(),
                      lambda g: is_maximal_planar(g) and len(embed(g).faces()) == 2 * g.n - 4)
        same = True
        for _ in range(3):
            seed = random_apollonian(rng, n)
            if enumerate_triangulations(n, seed).codes != tset.codes:
                same = False
        yield Check(f"enumerate n={n}: closure identical from 3 random seeds", same, f"{len(tset)} classes")
        involution = True
        for _, (g, e) in tset.representatives.items():
            for f in legal_flips(e):
                back = apply_flip(e, f)
                undo = [h for h in legal_flips(back) if {h.u, h.v} == {f.w, f.x}]
                if len(undo) != 1 or canonical_code(apply_flip(back, undo[0]).graph) != canonical_code(g):
                    involution = False
                    break
        yield Check(f"enumerate n={n}: flip involution", involution)


def _family_checks(n_max: int, rng: random.Random) -> Iterator[Check]:
    fns = [make_fn(n) for n in range(4, 13)]
    yield _forall("families: F_n maximal planar, apex/end degrees, Apollonian", fns,
                  lambda g: is_maximal_planar(g)
                  and (g.n < 6 or g.degrees().count(g.n - 1) == 2)
                  and (g.n < 6 or g.degrees().count(3) == 2)
                  and is_apollonian(g) is not None)
    stacked = [random_apollonian(rng, n).graph for n in range(4, n_max + 1) for _ in range(5)]
    yield _forall("families: Apollonian round trip", stacked,
                  lambda g: (c := is_apollonian(g)) is not None and c.reconstruct() == g)
    yield _forall("families: Apollonian triangle count 3n-8", [g for g in stacked if g.n >= 6],
                  lambda g: count_triangles(g) == f_c3(g.n))
    yield _forall("families: C4(F_n) = (n^2+3n-22)/2", [g for g in fns if g.n >= 5],
                  lambda g: count_c4(g) == f_c4(g.n))
    yield _forall("families: P4(F_n) = 7n^2-32n+27", [g for g in fns if g.n not in (4, 7, 8)],
                  lambda g: count_p4_lemma(g) == 7 * g.n ** 2 - 32 * g.n + 27)
    for name, g, expected in make_nine_vertex_fixtures():
        got = count_paths_bruteforce(g, 4)
        yield Check(f"fixture {name}: brute-force P4 = {expected}",
                    got == expected and is_maximal_planar(g), f"got {got}",
                    None if got == expected else to_graph6(g))


def _counting_checks(n_max: int, rng: random.Random) -> Iterator[Check]:
    small = [g for n in range(4, min(n_max, 8) + 1) for g in triangulations(n).graphs()]
    randoms = [random_graph(rng, rng.randint(1, 10), rng.uniform(0.1, 0.9)) for _ in range(200)]
    yield _forall("closed-form P4 == DFS oracle", small + randoms,
                  lambda g: count_p4_lemma(g) == count_paths_bruteforce(g, 4))
    tri = [g for n in range(4, n_max + 1) for g in triangulations(n).graphs()]
    everything = tri + randoms
    yield _forall("sum_v P4(G,v) == 4 P4(G)", everything,
                  lambda g: sum(count_p4_at_vertex(g, v) for v in range(g.n)) == 4 * count_p4_lemma(g))
    yield _forall("star(2) == P3 oracle", everything, lambda g: count_star(g, 2) == count_paths_bruteforce(g, 3))
    yield _forall("K_{2,2} == C4", everything, lambda g: count_k2k(g, 2) == count_c4(g))
    yield _forall("triangulations have >= 2n-4 triangles", tri, lambda g: count_triangles(g) >= 2 * g.n - 4)

    def partition_ok(g: Graph) -> bool:
        e = embed(g)
        return all(classify_p4_at_vertex(e, v).total == count_p4_at_vertex(g, v) for v in range(g.n))

    yield _forall("Type-I/II/III classes partition P4(G,v)", [g for g in tri if g.n <= 9], partition_ok)
    pv = [g for g in tri if 6 <= g.n <= min(n_max, 10)]
    cex = None
    for g in pv:
        why = per_vertex_violations(g)
        if why:
            cex = f"{to_graph6(g)} ({why})"
            break
    yield Check("per-vertex P4 bounds at degree-3 vertices", cex is None,
                f"{len(pv)} graphs", cex)
    d4 = [g for g in tri if g.min_degree() >= 4 and g.n <= 10]
    yield _forall("min degree >= 4 => P4 < 7n^2-36n+50", d4,
                  lambda g: count_p4_lemma(g) < lemma2_bound(g.n))


def _census_checks(n_max: int, rng: random.Random) -> Iterator[Check]:
    jobs = [(p, n) for n in range(4, n_max + 1) for p in default_patterns()]
    for rec in run_censuses(jobs):
        p, n = rec.pattern, rec.n
        where = f"census {p} n={n}"
        detail = f"max {rec.maximum}, formula {rec.formula_value}, {len(rec.extremal_codes)} extremal"
        cex = None if rec.matches else (rec.extremal_graph6[0] if rec.extremal_graph6 else None)
        if p.kind == "P4":
            ok = rec.matches and len(rec.extremal_codes) == 1 and rec.extremal_is_expected_family
            yield Check(f"{where}: maximum, uniqueness, extremal graph", ok, detail, cex)
        elif p.kind == "C3":
            if n >= 6:
                yield Check(f"{where}: maximum 3n-8 and argmax == Apollonian", rec.matches and
                            rec.extremal_is_expected_family, detail, cex)
        elif p.kind == "C4":
            if n >= 5:
                want = 2 if n in (7, 8) else 1
                ok = rec.matches and len(rec.extremal_codes) == want and rec.extremal_is_expected_family
                yield Check(f"{where}: maximum and {want} extremal graph(s)", ok, detail, cex)
        elif rec.formula_value is not None:
            yield Check(f"{where}: maximum equals closed form", rec.matches, detail, cex)
    yield Check("f_p4 branch values exceed the quadratic at n = 7, 8",
                f_p4(7) == 147 > 7 * 49 - 32 * 7 + 27 and f_p4(8) == 222 > 7 * 64 - 32 * 8 + 27)
    yield _monotonicity_check(min(n_max, 9), rng)


def _monotonicity_check(n_top: int, rng: random.Random) -> Check:
    patterns = default_patterns() + [PatternSpec("Star", 1)]
    tried = 0
    for n in range(4, n_top + 1):
        graphs = triangulations(n).graphs()
        for _ in range(20):
            base = random_relabel(rng, rng.choice(graphs))
            edges = [e for e in base.edges() if rng.random() < 0.6]
            g = build_graph(n, edges)
            before = [count_pattern(g, p) for p in patterns]
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    h = g.add_edge(u, v)
                    if not is_planar(h):
                        continue
                    tried += 1
                    after = [count_pattern(h, p) for p in patterns]
                    if any(a < b for a, b in zip(after, before)):
                        return Check("monotonicity under planar edge addition", False, "", to_graph6(h))
    return Check("monotonicity under planar edge addition", True, f"{tried} additions")


def verify_all(n_max: int, seed: int = SEED) -> Report:
    if not 4 <= n_max <= 12:
        raise ValueError("verify_all supports 4 <= n_max <= 12")
    rng = random.Random(seed)
    report = Report()
    sections = (_graph_core_checks, _enumerate_checks, _family_checks, _counting_checks, _census_checks)
    for section in sections:
        report.checks.extend(section(n_max, rng))
    octa = make_octahedron()
    report.checks.append(Check("octahedron: P4 = 84 < 86", count_p4_lemma(octa) == 84 < lemma2_bound(6)))
    return report
