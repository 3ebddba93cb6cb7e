import random

import pytest
from hypothesis import assume, given, settings

from combproof.bifib import verify_cp
from combproof.calculus import cp_of_rproof
from combproof.examples import (
    COLLAPSE_FORMULA, DRINKER, MODAL_DRINKER, MOGRAPH_EXAMPLE, collapse_example, dependency_monet, drinker_cp,
    drinker_rproof, excluded_middle_rproof, forall_distribution_rproof, net_trio,
    peirce_formula, peirce_homogeneous, peirce_rproof,
)
from combproof.fograph import ConstLit, graph_of
from combproof.homogeneous import (
    DualizingGraph, HomogeneousCp, Mograph, NotClosedModal, NotClosedMonadic,
    NotSimpleProposition, NotVerified, check_dualizing_graph, check_mograph, collapse,
    dgraph_of_fograph, dgraph_of_prop, from_homogeneous_monadic, from_homogeneous_prop,
    indistinguishable_classes, label_dualizing_graph, label_mograph, modal_mograph,
    mograph_dependencies, mograph_of_fograph, mograph_of_formula, to_homogeneous_monadic,
    to_homogeneous_prop, verify_dualizing_net, verify_homogeneous_cp, verify_monet,
)
from combproof.syntax import modal_to_fo, parse_formula, parse_modal
import oracles
from generators import random_modal, random_prop, random_rproof, seeds

P = parse_formula


# ---------------------------------------------------------------- dualizing graphs


def test_dgraph_of_single_atom():
    d = dgraph_of_prop(P("p"))
    assert d.vertices == [()] and not d.edges and not d.dualities


def test_dgraph_of_conjunction_and_disjunction():
    d = dgraph_of_prop(P("(p & ~p) \\/ q"))
    assert d.edges == {frozenset({(0, 0), (0, 1)})}
    assert d.dualities == {frozenset({(0, 0), (0, 1)})}


def test_dgraph_of_peirce():
    d = dgraph_of_prop(peirce_formula())
    # ~p,q on the left are joined to ~p; both ~p are dual to the right p
    assert len(d.vertices) == 4 and len(d.edges) == 2
    assert d.dualities == {frozenset({(0, 0, 0), (1,)}), frozenset({(0, 1), (1,)})}


def test_dgraph_requires_simple_proposition():
    with pytest.raises(NotSimpleProposition):
        dgraph_of_prop(P("p(a)"))
    with pytest.raises(NotSimpleProposition):
        dgraph_of_prop(P("all x. p"))


def test_dgraph_of_fograph_matches_prop():
    f = P("(p & ~q) \\/ (q & ~p)")
    assert dgraph_of_fograph(graph_of(f)) == dgraph_of_prop(f)


def test_duality_triangle_rejected():
    d = DualizingGraph("abc", [], [("a", "b"), ("b", "c"), ("a", "c")])
    assert "duality-triangle" in check_dualizing_graph(d).conditions()


def test_net_trio():
    good, square, shared = net_trio()
    assert verify_dualizing_net(good).ok
    assert verify_dualizing_net(square).conditions() == {"bimatching"}
    assert verify_dualizing_net(shared).conditions() == {"duality-not-matching"}


# ---------------------------------------------------------------- propositional proofs


def test_peirce_homogeneous_cp_verifies():
    assert verify_homogeneous_cp(peirce_homogeneous()).ok


def test_peirce_homogeneous_round_trip():
    cp = from_homogeneous_prop(peirce_homogeneous(), peirce_formula())
    assert verify_cp(cp).ok
    back = to_homogeneous_prop(cp)
    assert back.source == peirce_homogeneous().source
    assert verify_homogeneous_cp(back).ok


def test_prop_round_trip_from_rproofs():
    for proof in (excluded_middle_rproof(), peirce_rproof()):
        cp = cp_of_rproof(proof)
        h = to_homogeneous_prop(cp)
        assert verify_homogeneous_cp(h).ok
        assert verify_cp(from_homogeneous_prop(h, cp.formula)).ok


@given(seeds)
@settings(max_examples=100, deadline=None)
def test_random_prop_round_trip(seed):
    cp = cp_of_rproof(random_rproof(random.Random(seed), 10, propositional=True))
    assume(not any(isinstance(l, ConstLit) for l in cp.target.labels.values()))
    h = to_homogeneous_prop(cp)
    assert verify_homogeneous_cp(h).ok
    back = from_homogeneous_prop(h, cp.formula)
    assert verify_cp(back).ok
    assert oracles.cp_isomorphic(back, cp)


def test_from_prop_rejects_wrong_target():
    with pytest.raises(NotVerified):
        from_homogeneous_prop(peirce_homogeneous(), P("p \\/ ~p"))


# ---------------------------------------------------------------- mographs


def test_mograph_example():
    m = mograph_of_formula(P(MOGRAPH_EXAMPLE))
    assert len(m.dualities) == 2 and len(m.bindings) == 3
    assert check_mograph(m).ok
    assert m.binders == [(), (0, 1)]
    assert m.is_existential(()) and not m.is_existential((0, 1))


def test_mograph_ignores_variable_names():
    a = mograph_of_formula(P("ex x. (~p(x) \\/ all y. p(y))"))
    b = mograph_of_formula(P("ex u. (~p(u) \\/ all x. p(x))"))
    assert a == b


def test_mograph_accepts_unrectified_formulas():
    m = mograph_of_formula(P("(all x. p(x)) \\/ ex x. ~p(x)"))
    assert m.bindings == {((0,), (0, 0)), ((1,), (1, 0))}


@pytest.mark.parametrize("text", [DRINKER, MOGRAPH_EXAMPLE, "(all x. q(x)) \\/ ex y. ~q(y)"])
def test_mograph_of_formula_matches_fograph_route(text):
    f = P(text)
    assert mograph_of_formula(f) == mograph_of_fograph(graph_of(f))


def test_mograph_requires_closed_monadic():
    with pytest.raises(NotClosedMonadic):
        mograph_of_formula(P("p(x)"))
    with pytest.raises(NotClosedMonadic):
        mograph_of_formula(P("all x. q(x, x)"))


def test_binding_outside_scope_rejected():
    m = Mograph(["b", "l", "k"], [("b", "l")], [("l", "k")], [("b", "l"), ("b", "k")])
    assert check_mograph(m).conditions() == {"binding-outside-scope"}


def test_dependency_monet():
    m = dependency_monet()
    assert verify_monet(m).ok
    assert mograph_dependencies(m) == {frozenset({"e", "u"})}


def test_two_equivalent_universals_conflict():
    m = Mograph(["u1", "l1", "u2", "l2"], [], [("l1", "l2")],
                [("u1", "l1"), ("u2", "l2")])
    assert verify_monet(m).conditions() == {"conflict"}


# ---------------------------------------------------------------- monadic proofs


def test_drinker_monadic_round_trip():
    cp = drinker_cp()
    h = to_homogeneous_monadic(cp)
    assert h.monadic and verify_homogeneous_cp(h).ok
    back = from_homogeneous_monadic(h, cp.formula)
    assert verify_cp(back).ok
    assert oracles.cp_isomorphic(back, cp)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_forall_distribution_monadic_round_trip(n):
    cp = cp_of_rproof(forall_distribution_rproof(n))
    h = to_homogeneous_monadic(cp)
    assert verify_homogeneous_cp(h).ok
    assert verify_cp(from_homogeneous_monadic(h, cp.formula)).ok


def test_collapse_example():
    h = collapse_example()
    assert verify_homogeneous_cp(h).ok
    assert indistinguishable_classes(h) == [frozenset({"b1", "b2"})]
    c = collapse(h)
    assert verify_homogeneous_cp(c).ok
    assert "b2" not in c.source.vertices
    assert collapse(c) == c
    assert verify_cp(from_homogeneous_monadic(c, P(COLLAPSE_FORMULA))).ok


def test_collapse_rejects_unverified():
    h = collapse_example()
    bad = HomogeneousCp(h.source, h.target, {**h.map, "c": (0,)})
    with pytest.raises(NotVerified):
        collapse(bad)


# ---------------------------------------------------------------- modal


def test_modal_mograph_of_box():
    m = modal_mograph(parse_modal("[]p"))
    assert len(m.vertices) == 2 and len(m.bindings) == 1


def test_modal_mograph_requires_operator():
    with pytest.raises(NotClosedModal):
        modal_mograph(parse_modal("p \\/ []p"))


def test_modal_drinker_gives_the_drinker_cp():
    m = parse_modal(MODAL_DRINKER)
    f = modal_to_fo(m)
    assert modal_mograph(m) == mograph_of_formula(f)
    h = to_homogeneous_monadic(cp_of_rproof(drinker_rproof()))
    cp = from_homogeneous_monadic(h, f)
    assert verify_cp(cp).ok
    assert oracles.cp_isomorphic(cp, drinker_cp())


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_modal_mograph_matches_translation(seed):
    m = random_modal(random.Random(seed), 4)
    assert modal_mograph(m) == mograph_of_formula(modal_to_fo(m))


# ---------------------------------------------------------------- labelling


@given(seeds)
@settings(max_examples=200, deadline=None)
def test_labelling_a_dualizing_graph_round_trips(seed):
    d = dgraph_of_prop(random_prop(random.Random(seed), 3))
    assert dgraph_of_fograph(label_dualizing_graph(d)) == d


@pytest.mark.parametrize("text", [DRINKER, MOGRAPH_EXAMPLE, "ex x. all y. (~p(x) \\/ p(y))"])
def test_labelling_a_mograph_round_trips(text):
    m = mograph_of_formula(P(text))
    assert mograph_of_fograph(label_mograph(m)) == m
