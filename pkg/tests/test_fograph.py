import random
import warnings

import pytest
from hypothesis import given, settings

from combproof.examples import DRINKER, fusion_example
from combproof.fograph import (
    Binder, ConstLit, Fograph, Kind, Literal, NotClear, OccurrenceOutsidePortion,
    PortionInvalid, TermContainsBoundVar, VariablePresent, binder_kind, binders,
    binding_graph, bindings, check_fograph, check_portion, exist_quant,
    formula_of_fograph, fusion, graph_of, graph_of_sequent, is_fograph_rectified,
    literal_of_atom, literals, rectify_fograph, scope, univ_quant, xgraph_of,
)
from combproof.graphs import same_graph
from combproof.syntax import (
    App, Var, is_clear, is_rectified, parse_formula, parse_sequent, parse_term, rectify,
)
from generators import random_cograph_edges, random_formula, seeds
from oracles import parent_block

P = parse_formula


def lit(text):
    return literal_of_atom(P(text))


def edge_set(g):
    return {frozenset(e) for e in g.edges}


def by_label(g):
    return {str(l): v for v, l in g.labels.items()}


def drinker():
    g = graph_of(P(DRINKER))
    at = by_label(g)
    return g, at["x"], at["y"], at["~p(x)"], at["p(y)"]


def random_fograph(rng, n=8):
    """Random legal fograph, not necessarily rectified."""
    while True:
        vs = list(range(rng.randint(1, n)))
        edges = random_cograph_edges(rng, vs)
        labels = {}
        for v in vs:
            if rng.random() < 0.35:
                labels[v] = Binder(rng.choice("xyz"))
            else:
                labels[v] = Literal(lit("p(x)").pred, (Var(rng.choice("xyzab")),))
        g = Fograph(labels, edges)
        if check_fograph(g).ok:
            return g


# ---------------------------------------------------------------- graph of a formula


def test_drinker_graph():
    g, x, y, px, py = drinker()
    assert len(g) == 4
    assert edge_set(g) == {frozenset((x, y)), frozenset((x, px)), frozenset((x, py))}
    assert bindings(g) == {(x, px), (y, py)}
    assert binding_graph(g).arcs == {(x, px), (y, py)}


def test_atom_graph():
    g = graph_of(P("p"))
    assert len(g) == 1 and not g.edges
    assert list(g.labels.values()) == [lit("p")]


def test_constants_become_constant_literals():
    g = graph_of(P("1 \\/ 0"))
    assert sorted(l.value for l in g.labels.values()) == [0, 1]


def test_commuted_drinker_has_same_graph():
    assert same_graph(graph_of(P(DRINKER)), graph_of(P("ex x. ((all y. p(y)) \\/ ~p(x))")))


def test_graph_of_unrectified_warns():
    with pytest.warns(UserWarning):
        g = graph_of(P("(all x. p(x)) \\/ all x. q(x)"))
    assert is_fograph_rectified(g)


def test_graph_of_sequent_ids():
    g = graph_of_sequent(parse_sequent("p(x), ex y. ~p(y)"))
    assert set(g.labels) == {(0, ()), (1, ()), (1, (0,))}
    assert edge_set(g) == {frozenset(((1, ()), (1, (0,))))}


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_graph_of_is_a_fograph(seed):
    f = random_formula(random.Random(seed), 4)
    g = graph_of(f)
    assert check_fograph(g).ok
    assert is_fograph_rectified(g)


# ---------------------------------------------------------------- xgraph


def test_xgraph_keeps_repeated_variables():
    g = xgraph_of(P("(ex x. p(x)) \\/ ex x. p(x)"))
    assert len(g) == 4 and len(g.edges) == 2
    assert [g.labels[b] for b in binders(g)] == [Binder("x"), Binder("x")]


def test_xgraph_rejects_intrusion():
    with pytest.raises(NotClear):
        xgraph_of(P("p \\/ all x. q(x)"))


@given(seeds)
@settings(max_examples=200, deadline=None)
def test_xgraph_agrees_with_graph_on_clear_rectified(seed):
    f = random_formula(random.Random(seed), 4)
    if is_clear(f) and is_rectified(f):
        assert xgraph_of(f) == graph_of(f)


# ---------------------------------------------------------------- scope and kind


def test_drinker_scopes_and_kinds():
    g, x, y, px, py = drinker()
    assert scope(g, y) == {y, px, py}
    assert scope(g, x) == {x, y, px, py}
    assert binder_kind(g, x) is Kind.EXISTENTIAL
    assert binder_kind(g, y) is Kind.UNIVERSAL


def test_two_vertex_scope():
    g = graph_of(P("ex x. p(x)"))
    b = binders(g)[0]
    assert scope(g, b) == set(g.labels)
    assert binder_kind(g, b) is Kind.EXISTENTIAL
    assert binder_kind(graph_of(P("all x. p")), ()) is Kind.UNIVERSAL


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_scope_and_kind_match_component_splitting(seed):
    g = random_fograph(random.Random(seed))
    for b in binders(g):
        block, joined = parent_block(g, b) if len(g) > 1 else (frozenset({b}), False)
        assert scope(g, b) == block
        assert (binder_kind(g, b) is Kind.EXISTENTIAL) == joined


def test_no_binders_no_bindings():
    assert not bindings(graph_of(P("p & q")))


@given(seeds)
@settings(max_examples=200, deadline=None)
def test_rectified_literals_bound_once(seed):
    g = graph_of(random_formula(random.Random(seed), 4))
    bound = [l for _, l in bindings(g)]
    for v in literals(g):
        vars_bound = {g.labels[b].var for b, l in bindings(g) if l == v}
        assert len(vars_bound) == sum(1 for l in bound if l == v)


# ---------------------------------------------------------------- legality


def test_binders_without_literal_in_scope():
    g = Fograph({"x": Binder("x"), "y": Binder("y"), "p": lit("p")}, [("x", "y")])
    assert "scope-without-literal" in check_fograph(g).conditions()


def test_two_binders_in_each_others_scope():
    g = Fograph({"a": Binder("x"), "b": Binder("x"), "p": lit("p(x)")}, [])
    assert "scope-rival-binder" in check_fograph(g).conditions()


def test_drinker_is_legal():
    assert check_fograph(drinker()[0]).ok


def test_no_literal_rejected():
    assert not check_fograph(Fograph({"x": Binder("x")}, [])).ok


# ---------------------------------------------------------------- rectification


def test_rectify_two_x_binders():
    # two x-binders, each over its own x-literal, beside each other
    g = Fograph({"a": Binder("x"), "pa": lit("p(x)"), "b": Binder("x"), "qb": lit("q(x)")},
                [("a", "pa"), ("b", "qb")])
    assert not is_fograph_rectified(g)
    r = rectify_fograph(g)
    assert is_fograph_rectified(r)
    va, vb = r.labels["a"].var, r.labels["b"].var
    assert va != vb
    assert r.labels["pa"] == lit(f"p({va})") and r.labels["qb"] == lit(f"q({vb})")


def test_rectify_rectified_is_identity():
    g = drinker()[0]
    assert rectify_fograph(g) is g


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_rectify_fograph_output_rectified(seed):
    g = random_fograph(random.Random(seed))
    r = rectify_fograph(g)
    assert is_fograph_rectified(r)
    assert check_fograph(r).ok
    assert edge_set(r) == edge_set(g)


# ---------------------------------------------------------------- back to formulas


def test_formula_of_drinker_graph():
    f = formula_of_fograph(drinker()[0])
    assert same_graph(graph_of(f), graph_of(P(DRINKER)))


def test_formula_of_single_literal():
    assert formula_of_fograph(graph_of(P("p"))) == P("p")


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_formula_round_trip(seed):
    g = random_fograph(random.Random(seed))
    f = formula_of_fograph(g)
    assert is_clear(f)
    assert same_graph(xgraph_of(f), g)


# ---------------------------------------------------------------- constructors


def test_fusion_worked_example():
    g, h, Pg, Qh = fusion_example()
    # the complement {z} of {q, ~q} holds a binder and no literal
    with pytest.raises(PortionInvalid):
        fusion(g, h, Pg, Qh)
    k = fusion(g, h, Pg, Qh, check_portions=False)
    assert len(k) == 6
    assert edge_set(k) == {frozenset(e) for e in
                           [("x", "px"), ("py", "q"), ("py", "nq")]}


def test_fusion_extremes():
    g, h, _, _ = fusion_example()
    assert edge_set(fusion(g, h, (), ())) == edge_set(g) | edge_set(h)
    full = fusion(g, h, g.labels, h.labels)
    assert len(full.edges) == len(g.edges) + len(h.edges) + len(g) * len(h)


def test_fusion_requires_portions():
    g, h, _, _ = fusion_example()
    with pytest.raises(PortionInvalid):
        fusion(g, h, {"px"}, ())


def test_portion_conditions():
    g, _, _, _ = fusion_example()
    assert check_portion(g, {"py"}).ok
    assert "not-closed-under-adjacency" in check_portion(g, {"px"}).conditions()
    assert "portion-not-well-founded" in check_portion(
        Fograph({"x": Binder("x"), "p": lit("p")}, []), {"x"}).conditions()


def test_existential_quantification_examples():
    g = Fograph({"v": lit("p(f(g(y)))"), "w": lit("~p(f(g(y)))")}, [])
    h = exist_quant(g, "x", [("v", (0, 0))], {"v"}, "x")
    assert h.labels["v"] == lit("p(f(x))") and h.labels["w"] == lit("~p(f(g(y)))")
    assert edge_set(h) == {frozenset(("x", "v"))}
    h0 = exist_quant(g, "x", [], {"v"}, "x")
    assert h0.labels["v"] == g.labels["v"] and edge_set(h0) == {frozenset(("x", "v"))}
    h2 = exist_quant(g, "x", [("v", (0,)), ("w", (0,))], {"v", "w"}, "x")
    assert h2.labels["v"] == lit("p(x)") and h2.labels["w"] == lit("~p(x)")
    assert edge_set(h2) == {frozenset(("x", "v")), frozenset(("x", "w"))}


def test_existential_quantification_errors():
    g = Fograph({"v": lit("p(y)"), "w": lit("~p(y)")}, [])
    with pytest.raises(OccurrenceOutsidePortion):
        exist_quant(g, "x", [("w", (0,))], {"v"}, "x")
    with pytest.raises(VariablePresent):
        exist_quant(g, "y", [], {"v"}, "b")
    bound = Fograph({"b": Binder("y"), "v": lit("p(y)"), "w": lit("~p(c)")}, [])
    with pytest.raises(TermContainsBoundVar):
        exist_quant(bound, "x", [("v", (0,))], {"b", "v", "w"}, "x")


def test_universal_quantification():
    g = Fograph({"v": lit("p")}, [])
    h = univ_quant(g, "x", "b")
    assert h.labels["b"] == Binder("x") and not h.edges
    with pytest.raises(VariablePresent):
        univ_quant(h, "x", "c")
