"""Reproduce the computational claims as a list of named checks.

Each check records what was expected, what was computed, and whether they
agree.  A failing or crashing check never stops the others.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import constructions as C
from . import partition as P
from .enumeration import (
    brute_force_maximal_strong,
    brute_force_maximal_weak,
    case_ii_candidates,
    enumerate_maximal_strong,
    pair_edge_set,
    verify_table1,
)
from .oracles import brute_automorphism_count, brute_canonical_code, random_graph, random_relabelling
from .symmetry import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    identify_group,
    is_automorphism,
)


@dataclass
class CheckResult:
    claim: str
    params: str
    expected: str
    computed: str
    passed: bool
    elapsed_seconds: float


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        payload = {"passed": self.passed, "checks": [asdict(c) for c in self.checks]}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        data = json.loads(text)
        return cls([CheckResult(**c) for c in data["checks"]])

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark}  {c.claim} [{c.params}] expected={c.expected} computed={c.computed} ({c.elapsed_seconds:.2f}s)")
        ok = sum(c.passed for c in self.checks)
        lines.append(f"{ok}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def _run(report: VerificationReport, claim: str, params: str, expected, fn: Callable[[], object]) -> None:
    t = time.monotonic()
    try:
        computed = fn()
        passed = computed == expected
    except Exception as exc:
        computed = f"error: {type(exc).__name__}: {exc}"
        passed = False
    report.checks.append(
        CheckResult(claim, params, str(expected), str(computed), passed, round(time.monotonic() - t, 3))
    )


def _grid(lo, hi, lo2=None, hi2=None):
    lo2 = lo if lo2 is None else lo2
    hi2 = hi if hi2 is None else hi2
    return [(n, v) for n in range(lo, hi + 1) for v in range(lo2, hi2 + 1)]


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


# individual claims ----------------------------------------------------------

def strong_construction_failures() -> list:
    bad = []
    for n, v in _grid(2, 6):
        g = C.gamma(n, v)
        deg = n * (v - 2) + 1
        if g.edge_count != P.strong_bound(n, v) or set(g.degrees()) != {deg} or not P.is_strongly_cp(g, n, v)[0]:
            bad.append((n, v))
    return bad


def weak_construction_failures() -> list:
    bad = []
    for n, v in _grid(2, 5):
        g = C.gamma_prime(n, v)
        if g.edge_count != P.weak_bound(n, v) or P.count_clique_partitions(g, v).count != 1:
            bad.append((n, v))
    return bad


def column_property_failures() -> list:
    bad = []
    for n, v in _grid(2, 5):
        for clique in P.enumerate_v_cliques(C.gamma(n, v), v):
            if sorted(u % v for u in clique) != list(range(v)):
                bad.append((n, v, clique))
    return bad


def sigma_failures() -> list:
    bad = []
    for n, v in _grid(2, 6):
        s = C.sigma_automorphism(n, v)
        if s.order() != n * v or not is_automorphism(C.gamma(n, v), s):
            bad.append((n, v))
    return bad


def gamma_aut_orders() -> dict:
    return {f"{n},{v}": automorphism_group(C.gamma(n, v)).order for n, v in _grid(2, 5, 2, 5)}


def expected_gamma_aut_orders() -> dict:
    return {f"{n},{v}": (2**n * _factorial(n) if v == 2 else 2 * n * v) for n, v in _grid(2, 5, 2, 5)}


def gamma_prime_aut_orders() -> dict:
    return {f"{n},{v}": automorphism_group(C.gamma_prime(n, v)).order for n, v in _grid(2, 4)}


def expected_gamma_prime_aut_orders() -> dict:
    return {f"{n},{v}": _factorial(v) * _factorial(v - 1) ** (n - 1) for n, v in _grid(2, 4)}


def enumeration_counts(pairs) -> dict:
    return {f"{n},{v}": enumerate_maximal_strong(n, v).count for n, v in pairs}


def enumeration_44() -> tuple:
    rep = enumerate_maximal_strong(4, 4)
    target = canonical_form(C.gamma(4, 4)).decode()
    return rep.count, sorted(rep.aut_orders), target in rep.graphs


def table2_summary(directory=None) -> tuple:
    specs = C.load_fixture("table2.txt", directory)
    graphs = [C.from_cycle_spec(s) for s in specs]
    tags = {"D32": "dihedral 32", "Z2xZ2": "elementary-abelian 2^2", "Z2": "cyclic 2"}
    distinct = len({canonical_form(g) for g in graphs})
    maximal = all(P.is_maximal_strong(g, 4, 4) for g in graphs)
    groups_ok = all(identify_group(automorphism_group(g)) == tags[s.meta["group"]] for s, g in zip(specs, graphs))
    first_is_gamma = are_isomorphic(graphs[0], C.gamma(4, 4))[0]
    return len(graphs), distinct, maximal, groups_ok, first_is_gamma


def table1_summary(directory=None) -> tuple:
    rows = C.load_fixture("table1.txt", directory)
    cases = {s.meta["name"]: s for s in C.load_fixture("n3v4_cases.txt", directory)}
    reference = C.from_cycle_spec(cases["case-I-i"])
    verdicts = verify_table1(rows, reference)
    with_clique = sum(1 for r in verdicts if r.stated_clique is not None and r.ok)
    iso_rows = sum(1 for r in verdicts if r.stated_clique is None and r.ok)
    failed = [r.name for r in verdicts if not r.ok]
    return with_clique, iso_rows, failed


def case_ii_candidate_check(directory=None) -> tuple:
    rows = C.load_fixture("table1.txt", directory)
    table = {pair_edge_set(s, (1, 2)) for s in rows}
    cands = set(case_ii_candidates())
    return len(cands), cands == table


def brute_force_agreement() -> list:
    bad = []
    for n, v in [(2, 2), (2, 3), (3, 2)]:
        strong = brute_force_maximal_strong(n, v)
        structured = sorted(g.encode() for g in enumerate_maximal_strong(n, v).graphs)
        weak = brute_force_maximal_weak(n, v)
        if strong != structured or weak != [canonical_form(C.gamma_prime(n, v))]:
            bad.append((n, v))
    return bad


def turan_failures() -> list:
    bad = []
    for n, v in _grid(2, 5):
        if C.gamma_prime(n, v).edge_count != C.turan(n * v, v).edge_count:
            bad.append((n, v, "edges"))
        ratio = Fraction(P.strong_bound(n, v), C.turan(n * v, v).edge_count)
        if ratio != 1 - Fraction(n - 1, n * (v - 1)):
            bad.append((n, v, "ratio"))
    return bad


def complement_circulant_failures() -> list:
    bad = []
    for n in range(2, 5):
        for v in range(3, 5):
            conn = C.symmetric_set(n * v, range(1, n))
            if not are_isomorphic(C.gamma(n, v).complement(), C.circulant(n * v, conn))[0]:
                bad.append((n, v))
    return bad


def symmetry_engine_failures(seed: int = 0) -> list:
    rng = random.Random(seed)
    bad = []
    for k in range(200):
        g = random_graph(rng, rng.randint(1, 12))
        c = canonical_form(g)
        for _ in range(5):
            if canonical_form(g.relabel(random_relabelling(rng, g.order))) != c:
                bad.append(("invariance", k))
                break
    sample = []
    for _ in range(50):
        g = random_graph(rng, rng.randint(3, 7))
        sample.append(g)
        sample.append(g.relabel(random_relabelling(rng, g.order)))
    codes = [brute_canonical_code(g) for g in sample]
    forms = [canonical_form(g) for g in sample]
    for i in range(len(sample)):
        if automorphism_group(sample[i]).order != brute_automorphism_count(sample[i]):
            bad.append(("aut", i))
        for j in range(i + 1, len(sample)):
            if (codes[i] == codes[j]) != (forms[i] == forms[j]):
                bad.append(("separation", i, j))
    return bad


def run_all(long: bool = False, seed: int = 0, fixtures: str | Path | None = None) -> VerificationReport:
    r = VerificationReport()
    _run(r, "strong construction: edges, regularity, strong property", "2<=n,v<=6", [], strong_construction_failures)
    _run(r, "weak construction: edges and unique partition", "2<=n,v<=5", [], weak_construction_failures)
    _run(r, "one vertex per column in every clique", "2<=n,v<=5", [], column_property_failures)
    _run(r, "cyclic automorphism of order nv", "2<=n,v<=6", [], sigma_failures)
    _run(r, "Aut of strong construction", "2<=n,v<=5", expected_gamma_aut_orders(), gamma_aut_orders)
    _run(r, "Aut of weak construction", "2<=n,v<=4", expected_gamma_prime_aut_orders(), gamma_prime_aut_orders)
    _run(
        r,
        "uniqueness counts",
        "(n,2),(n,3) n<=5; (2,v) v<=6; (3,4)",
        {**{f"{n},2": 1 for n in range(2, 6)}, **{f"{n},3": 1 for n in range(2, 6)},
         **{f"2,{v}": 1 for v in range(2, 7)}, "3,4": 2},
        lambda: enumeration_counts(
            [(n, 2) for n in range(2, 6)] + [(n, 3) for n in range(2, 6)] + [(2, v) for v in range(2, 7)] + [(3, 4)]
        ),
    )
    _run(r, "six (4,4) graphs", "n=4,v=4", (6, [2, 2, 4, 4, 4, 32], True), enumeration_44)
    _run(r, "(4,4) table fixtures", "table2.txt", (6, 6, True, True, True), lambda: table2_summary(fixtures))
    _run(r, "(3,4) case (II) rows", "table1.txt", (16, 4, []), lambda: table1_summary(fixtures))
    _run(r, "(3,4) case (II) candidate cycles", "table1.txt", (20, True), lambda: case_ii_candidate_check(fixtures))
    _run(r, "exhaustive scans agree", "(2,2),(2,3),(3,2)", [], brute_force_agreement)
    _run(r, "Turán edge count and ratio", "2<=n,v<=5", [], turan_failures)
    _run(r, "complement is circulant", "2<=n<=4, 3<=v<=4", [], complement_circulant_failures)
    _run(r, "symmetry engine vs brute force", f"seed={seed}", [], lambda: symmetry_engine_failures(seed))
    if long:
        _run(r, "(5,4) count", "n=5,v=4", 24, lambda: enumerate_maximal_strong(5, 4).count)
        _run(r, "(6,4) lower bound", "n=6,v=4", True, lambda: enumerate_maximal_strong(6, 4, max_seconds=1800).count >= 129)
        _run(r, "(7,4) lower bound", "n=7,v=4", True, lambda: enumerate_maximal_strong(7, 4, max_seconds=3600).count >= 828)
    return r
