from __future__ import annotations

import itertools
import random
from math import factorial

import networkx as nx
import pytest

from cliquepart import constructions as C
from cliquepart.graph import Graph
from cliquepart.oracles import brute_automorphism_count, brute_canonical_code, random_graph, random_relabelling
from cliquepart.symmetry import (
    PermGroup,
    Permutation,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    equitable_partition,
    group_order,
    identify_group,
    is_automorphism,
)


def from_nx(h) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def test_permutation_algebra():
    p = Permutation.from_cycles(5, [[0, 1, 2]])
    q = Permutation.from_cycles(5, [[3, 4]])
    assert p.order() == 3 and (p * q).order() == 6
    assert (p * p.inverse()).is_identity()
    assert p.power(3).is_identity()
    assert (p * q)(0) == q(p(0))
    assert str(p * q) == "(0 1 2)(3 4)"
    assert Permutation.identity(3).cycles() == []


@pytest.mark.parametrize("n", range(1, 8))
def test_symmetric_group_order(n):
    gens = [Permutation.from_cycles(n, [list(range(n))])] if n > 1 else []
    if n > 2:
        gens.append(Permutation.from_cycles(n, [[0, 1]]))
    assert group_order(gens, n) == factorial(n)


def test_group_tags():
    assert identify_group(automorphism_group(from_nx(nx.cycle_graph(5)))) == "dihedral 10"
    assert identify_group(automorphism_group(C.gamma(2, 3))) == "dihedral 12"
    assert identify_group(automorphism_group(C.gamma_prime(2, 2))) == "cyclic 2"
    assert identify_group(automorphism_group(from_nx(nx.path_graph(1)))) == "trivial"
    cyc = PermGroup(7, [Permutation.from_cycles(7, [list(range(7))])])
    assert identify_group(cyc) == "cyclic 7"
    s4 = PermGroup(4, [Permutation.from_cycles(4, [[0, 1, 2, 3]]), Permutation.from_cycles(4, [[0, 1]])])
    assert s4.order == 24 and identify_group(s4) == "other"


def test_named_automorphism_orders():
    assert automorphism_group(from_nx(nx.petersen_graph())).order == 120
    assert automorphism_group(Graph.complete(9)).order == factorial(9)
    assert automorphism_group(Graph(6)).order == factorial(6)
    assert automorphism_group(from_nx(nx.hypercube_graph(4))).order == 384


def test_regular_non_isomorphic_pair():
    c6 = from_nx(nx.cycle_graph(6))
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(c6, two_triangles)[0]
    assert canonical_form(c6) != canonical_form(two_triangles)


@pytest.mark.parametrize("n,count", [(3, 4), (4, 11), (5, 34)])
def test_class_counts_on_all_small_graphs(n, count):
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])
        forms.add(canonical_form(g))
    assert len(forms) == count


@pytest.mark.parametrize("seed", range(40))
def test_agrees_with_brute_force(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 7))
    h = random_graph(rng, g.order, g.edge_count / max(1, g.order * (g.order - 1) // 2))
    assert automorphism_group(g).order == brute_automorphism_count(g)
    same = brute_canonical_code(g) == brute_canonical_code(h)
    ok, mapping = are_isomorphic(g, h)
    assert ok == same == (canonical_form(g) == canonical_form(h))
    if ok:
        assert g.relabel(mapping.images) == h


@pytest.mark.parametrize("seed", range(20))
def test_canonical_form_invariance(seed):
    rng = random.Random(1000 + seed)
    g = random_graph(rng, rng.randint(8, 16))
    c = canonical_form(g)
    for _ in range(4):
        h = g.relabel(random_relabelling(rng, g.order))
        assert canonical_form(h) == c
        ok, mapping = are_isomorphic(g, h)
        assert ok and g.relabel(mapping.images) == h


def test_generators_are_automorphisms():
    for s in C.load_fixture("table2.txt"):
        g = C.from_cycle_spec(s)
        grp = automorphism_group(g)
        assert all(is_automorphism(g, p) for p in grp.generators)


def test_equitable_partition_of_regular_graph_is_trivial():
    cells = equitable_partition(from_nx(nx.petersen_graph()))
    assert len(cells) == 1


def test_is_automorphism_size_mismatch():
    with pytest.raises(ValueError):
        is_automorphism(Graph(3), Permutation.identity(4))
