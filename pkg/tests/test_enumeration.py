from __future__ import annotations

from math import factorial

import pytest

from cliquepart import constructions as C
from cliquepart import partition as P
from cliquepart.enumeration import (
    EnumerationReport,
    brute_force_maximal_weak,
    case_ii_candidates,
    enumerate_maximal_strong,
    hamiltonian_cycles,
    pair_edge_set,
    verify_table1,
)
from cliquepart.graph import parse_graph6
from cliquepart.symmetry import canonical_form


@pytest.mark.parametrize("v", [3, 4, 5])
def test_hamiltonian_cycle_count(v):
    cycles = hamiltonian_cycles(v)
    assert len(cycles) == factorial(v) * factorial(v - 1) // 2
    edge_sets = set()
    for a, b in cycles:
        edges = frozenset((a[k], b[k]) for k in range(v)) | frozenset((a[(k + 1) % v], b[k]) for k in range(v))
        edge_sets.add(edges)
    assert len(edge_sets) == len(cycles)


def test_case_ii_candidates_are_the_table_rows():
    cands = case_ii_candidates()
    assert len(cands) == 20
    rows = C.load_fixture("table1.txt")
    assert {pair_edge_set(s, (1, 2)) for s in rows} == set(cands)


def test_table1_rows_verify():
    cases = {s.meta["name"]: s for s in C.load_fixture("n3v4_cases.txt")}
    verdicts = verify_table1(C.load_fixture("table1.txt"), C.from_cycle_spec(cases["case-I-i"]))
    assert len(verdicts) == 20
    assert all(r.ok for r in verdicts), [r.message for r in verdicts if not r.ok]


def test_table1_fault_is_reported_per_row():
    rows = C.load_fixture("table1.txt")
    rows[3].meta["clique"] = "A0,A1,A2,Z9"
    verdicts = verify_table1(rows, C.gamma(3, 4))
    assert not verdicts[3].ok and verdicts[3].message
    assert sum(not r.ok for r in verdicts) == 1 + 4  # the broken row and the iso rows (wrong reference)


def test_3_4_classes_are_the_two_case_i_graphs():
    cases = {s.meta["name"]: s for s in C.load_fixture("n3v4_cases.txt")}
    want = sorted(canonical_form(C.from_cycle_spec(cases[k])).decode() for k in ("case-I-i", "case-I-iv"))
    rep = enumerate_maximal_strong(3, 4)
    assert rep.graphs == want
    assert sorted(rep.aut_orders) == [4, 24]


def test_4_4_classes_are_table2():
    rep = enumerate_maximal_strong(4, 4)
    table = sorted(canonical_form(C.from_cycle_spec(s)).decode() for s in C.load_fixture("table2.txt"))
    assert rep.graphs == table
    for g6 in rep.graphs:
        assert P.is_maximal_strong(parse_graph6(g6), 4, 4)


def test_jobs_do_not_change_the_result():
    a = enumerate_maximal_strong(4, 4, jobs=1)
    b = enumerate_maximal_strong(4, 4, jobs=2)
    assert (a.graphs, a.aut_orders, a.structures, a.level_counts) == (b.graphs, b.aut_orders, b.structures, b.level_counts)


def test_budget_truncation():
    rep = enumerate_maximal_strong(4, 4, max_nodes=50)
    assert not rep.complete
    assert "lower bound" in rep.to_text()


def test_report_json_round_trip():
    rep = enumerate_maximal_strong(3, 4)
    text = rep.to_json()
    assert EnumerationReport.from_json(text).to_json() == text
    assert "# 2 graphs" in rep.to_text()


def test_v2_short_circuit():
    rep = enumerate_maximal_strong(5, 2)
    assert rep.count == 1 and rep.graphs[0].encode() == canonical_form(C.gamma(5, 2))


def test_errors():
    with pytest.raises(ValueError):
        enumerate_maximal_strong(1, 4)
    with pytest.raises(ValueError):
        enumerate_maximal_strong(17, 4)
    with pytest.raises(ValueError, match="refused"):
        brute_force_maximal_weak(2, 4)


@pytest.mark.long
def test_5_4_count():
    rep = enumerate_maximal_strong(5, 4)
    assert rep.complete and rep.count == 24
