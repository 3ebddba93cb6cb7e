import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from combproof.graphs import (
    GraphError, Leaf, Node, NotACograph, Op, UGraph, absorb, canonical_key, co_components,
    components, cograph_of, cotree_of, find_p4, induced_cotree, is_cograph, join, leaves,
    meet, same_graph, strong_modules, union,
)
from generators import random_cograph_edges, seeds

U, J = Op.UNION, Op.JOIN


def L(*vs):
    return [Leaf(v) for v in vs]


def drinker_graph():
    return UGraph({v: None for v in ("x", "y", "px", "py")},
                  [("x", "y"), ("x", "px"), ("x", "py")])


def edge_set(g):
    return {frozenset(e) for e in g.edges}


# ---------------------------------------------------------------- brute-force modules


def modules(g):
    vs = list(g.labels)
    out = []
    for k in range(1, len(vs) + 1):
        for M in combinations(vs, k):
            Ms = set(M)
            if all(len({g.has_edge(v, m) for m in Ms}) == 1 for v in vs if v not in Ms):
                out.append(frozenset(M))
    return out


def strong_by_definition(g):
    ms = modules(g)
    return {M for M in ms
            if all(M <= N or N <= M or not (M & N) for N in ms)}


def random_cograph(rng, n):
    vs = list(range(n))
    return UGraph({v: None for v in vs}, random_cograph_edges(rng, vs))


def random_graph(rng, n, p=0.5):
    vs = list(range(n))
    return UGraph({v: None for v in vs},
                  [(u, w) for u, w in combinations(vs, 2) if rng.random() < p])


def random_plus_times(rng, vs):
    """Arbitrary union/join tree, possibly unary or repeating."""
    if len(vs) == 1:
        t = Leaf(vs[0])
        return Node(rng.choice((U, J)), (t,)) if rng.random() < 0.2 else t
    k = rng.randint(1, min(3, len(vs)))
    if k == 1:
        return Node(rng.choice((U, J)), (random_plus_times(rng, vs),))
    cuts = sorted(rng.sample(range(1, len(vs)), k - 1))
    parts = [vs[i:j] for i, j in zip([0] + cuts, cuts + [len(vs)])]
    return Node(rng.choice((U, J)), tuple(random_plus_times(rng, p) for p in parts))


def is_cotree(t, parent=None):
    if isinstance(t, Leaf):
        return True
    return (len(t.children) >= 2 and t.op is not parent
            and all(is_cotree(c, t.op) for c in t.children))


# ---------------------------------------------------------------- union and join


def test_union_and_join_of_points():
    a = UGraph({"a": None})
    b = UGraph({"b": None})
    assert len(union(a, b)) == 2 and not union(a, b).edges
    assert len(join(a, b)) == 2 and len(join(a, b).edges) == 1


def test_join_binder_onto_drinker_body():
    body = UGraph({"px": None, "y": None, "py": None}, [])
    g = join(UGraph({"x": None}), body)
    assert edge_set(g) == {frozenset(("x", v)) for v in ("px", "y", "py")}


def test_union_rejects_shared_vertices():
    with pytest.raises(GraphError):
        union(UGraph({"a": None}), UGraph({"a": None}))


# ---------------------------------------------------------------- recognition


def test_p4_is_not_a_cograph():
    g = UGraph({v: None for v in "abcd"}, [("a", "b"), ("b", "c"), ("c", "d")])
    assert not is_cograph(g)
    path = find_p4(g)
    assert path is not None and set(path) == set("abcd")
    with pytest.raises(NotACograph):
        cotree_of(g)


def test_drinker_graph_is_a_cograph():
    assert is_cograph(drinker_graph())


def test_small_graphs_are_cographs():
    rng = random.Random(0)
    for _ in range(200):
        assert is_cograph(random_graph(rng, rng.randint(1, 3)))


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_cograph_recognition_matches_p4_search(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 7))
    h = nx.Graph(list(tuple(e) for e in g.edges))
    h.add_nodes_from(g.labels)
    induced_p4 = any(
        nx.is_isomorphic(h.subgraph(S), nx.path_graph(4))
        for S in combinations(h.nodes, 4))
    assert is_cograph(g) == (not induced_p4)


def test_components_and_co_components():
    g = drinker_graph()
    assert components(g) == [frozenset(g.labels)]
    assert set(co_components(g)) == {frozenset({"x"}), frozenset({"y", "px", "py"})}


# ---------------------------------------------------------------- cotrees


def test_single_vertex_cotree():
    assert cotree_of(UGraph({"a": None})) == Leaf("a")


def test_drinker_cotree_shape():
    t = cotree_of(drinker_graph())
    assert isinstance(t, Node) and t.op is J
    kids = {frozenset(leaves(c)) for c in t.children}
    assert kids == {frozenset({"x"}), frozenset({"y", "px", "py"})}
    assert edge_set(cograph_of(t)) == edge_set(drinker_graph())


def test_cograph_of_small_tree():
    g = cograph_of(Node(U, (Node(J, tuple(L("a", "b"))), Leaf("c"))))
    assert len(g) == 3 and edge_set(g) == {frozenset("ab")}


# the two union/join trees printed in the cograph-of-tree discussion
LEFT = Node(U, (Node(J, tuple(L("a", "b"))), Leaf("c"),
                Node(J, (Leaf("d"), Leaf("e"), Node(U, tuple(L("f", "g")))))))
RIGHT = Node(U, (Node(J, tuple(L("a", "b"))), Node(U, (Leaf("c"),)),
                 Node(J, (Leaf("d"), Node(J, (Leaf("e"), Node(U, tuple(L("f", "g")))))))))
SEVEN_EDGES = {frozenset(e) for e in ("ab", "de", "df", "dg", "ef", "eg")}


def test_both_example_trees_give_the_seven_vertex_cograph():
    assert edge_set(cograph_of(LEFT)) == SEVEN_EDGES
    assert edge_set(cograph_of(RIGHT)) == SEVEN_EDGES


def test_absorb_example_tree():
    assert is_cotree(LEFT) and not is_cotree(RIGHT)
    assert canonical_key(absorb(RIGHT)) == canonical_key(LEFT)
    assert absorb(LEFT) == LEFT


def test_induced_cotree_on_first_four_leaves():
    t = induced_cotree(LEFT, "abcd")
    assert canonical_key(t) == canonical_key(
        Node(U, (Node(J, tuple(L("a", "b"))), Leaf("c"), Leaf("d"))))


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_absorb_preserves_cograph(seed):
    rng = random.Random(seed)
    vs = list(range(rng.randint(1, 8)))
    t = random_plus_times(rng, vs)
    a = absorb(t)
    assert is_cotree(a)
    assert edge_set(cograph_of(a)) == edge_set(cograph_of(t))


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_cotree_round_trip(seed):
    rng = random.Random(seed)
    g = random_cograph(rng, rng.randint(1, 9))
    t = cotree_of(g)
    assert is_cotree(t)
    assert edge_set(cograph_of(t)) == edge_set(g)


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_induced_cotree_matches_induced_graph(seed):
    rng = random.Random(seed)
    g = random_cograph(rng, rng.randint(1, 9))
    W = [v for v in g.labels if rng.random() < 0.6] or [0]
    t = induced_cotree(cotree_of(g), W)
    assert edge_set(cograph_of(t)) == edge_set(g.induced(W))


def test_induced_whole_set_is_identity():
    g = drinker_graph()
    assert g.induced(g.labels) == g
    t = cotree_of(g)
    assert induced_cotree(t, g.labels) == t


def test_meet_tags():
    t = cotree_of(drinker_graph())
    assert meet(t, "x", "py")[1] is J
    assert meet(t, "y", "py")[1] is U
    node, op = meet(LEFT, "d", "e")
    assert op is J and set(leaves(node)) == set("defg")


@given(seeds)
@settings(max_examples=200, deadline=None)
def test_meet_tag_is_adjacency(seed):
    rng = random.Random(seed)
    g = random_cograph(rng, rng.randint(2, 8))
    t = cotree_of(g)
    for v, w in combinations(g.labels, 2):
        assert (meet(t, v, w)[1] is J) == g.has_edge(v, w)


# ---------------------------------------------------------------- modules


def test_drinker_strong_modules():
    ms = strong_modules(drinker_graph())
    assert frozenset({"y", "px", "py"}) in ms
    assert frozenset({"x", "y", "px", "py"}) in ms


@given(seeds)
@settings(max_examples=150, deadline=None)
def test_strong_modules_match_definition(seed):
    rng = random.Random(seed)
    g = random_cograph(rng, rng.randint(1, 7))
    assert strong_modules(g) == strong_by_definition(g)


# ---------------------------------------------------------------- canonical equality


@given(seeds)
@settings(max_examples=200, deadline=None)
def test_same_graph_is_invariant_under_renaming(seed):
    rng = random.Random(seed)
    g = random_cograph(rng, rng.randint(1, 8))
    perm = list(g.labels)
    rng.shuffle(perm)
    h = g.rename(dict(zip(g.labels, perm)))
    assert same_graph(g, h)


@given(seeds)
@settings(max_examples=200, deadline=None)
def test_same_graph_agrees_with_isomorphism(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    g, h = random_cograph(rng, n), random_cograph(rng, n)
    G, H = nx.Graph(), nx.Graph()
    G.add_nodes_from(g.labels)
    H.add_nodes_from(h.labels)
    G.add_edges_from(tuple(e) for e in g.edges)
    H.add_edges_from(tuple(e) for e in h.edges)
    assert same_graph(g, h) == nx.is_isomorphic(G, H)


def test_same_graph_respects_labels():
    g = UGraph({1: "a", 2: "b"}, [(1, 2)])
    assert same_graph(g, UGraph({5: "b", 6: "a"}, [(5, 6)]))
    assert not same_graph(g, UGraph({5: "a", 6: "a"}, [(5, 6)]))
