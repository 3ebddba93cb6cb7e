"""Small worked examples used by the tests, the acceptance suite and the CLI."""

from __future__ import annotations

from .bifib import CombProof
from .calculus import RProof, all_, and_, ax, cp_of_rproof, contract, ex, exch, or_, weaken
from .fograph import Binder, Fograph, graph_of, literal_of_atom
from .graphs import UGraph
from .homogeneous import (
    DualizingGraph, HomogeneousCp, Mograph, dgraph_of_prop, mograph_of_formula,
)
from .syntax import (
    And, Atom, Exists, Forall, Formula, Or, PredSym, Var, parse_formula, parse_modal,
)

__all__ = [
    "DRINKER", "PEIRCE", "MODAL_DRINKER", "FIG_DEPENDENT", "MOGRAPH_EXAMPLE",
    "COLLAPSE_FORMULA", "drinker_formula", "drinker_cp", "drinker_rproof",
    "peirce_formula", "peirce_rproof", "peirce_homogeneous", "excluded_middle_rproof",
    "forall_distribution", "forall_distribution_rproof", "dependent_net",
    "net_trio", "dependency_monet", "collapse_example", "fusion_example",
]

DRINKER = "ex x. (~p(x) \\/ all y. p(y))"
PEIRCE = "(~p \\/ q) & ~p \\/ p"
MODAL_DRINKER = "<>(~p \\/ []p)"
FIG_DEPENDENT = "(ex x. ex y. (~p(x) \\/ ~q(y))) \\/ all z. (p(z) & q(f(z)))"
MOGRAPH_EXAMPLE = "ex x. (~p(x) \\/ all y. (p(y) & p(x)))"
COLLAPSE_FORMULA = "(all x. q(x)) \\/ ex y. (~p(y) \\/ p(y))"


def drinker_formula() -> Formula:
    return parse_formula(DRINKER)


def drinker_cp() -> CombProof:
    """Two copies of the ``x`` binder: one over ``~p(x)``, one joined to ``y`` and ``p(y)``."""
    f = drinker_formula()
    source = UGraph({v: None for v in range(5)}, [(0, 1), (2, 3), (2, 4)], {1: 0, 4: 0})
    fmap = {0: (), 1: (0, 0), 2: (), 3: (0, 1), 4: (0, 1, 0)}
    return CombProof(source, graph_of(f), fmap, f)


def drinker_rproof() -> RProof:
    P = parse_formula
    inner = P("ex x1. (~p(x1) \\/ all y1. p(y1))")
    p = ax(P("p(y)"))
    p = weaken(P("all y1. p(y1)"), p)
    p = exch(1, p)
    p = or_(p)
    p = ex(inner, Var("y"), p)
    p = weaken(P("~p(z)"), p)
    p = exch(1, p)
    p = exch(2, p)
    p = all_("y", p)
    p = or_(p)
    p = ex(P(DRINKER), Var("z"), p)
    p = exch(1, p)
    return contract(p)


def peirce_formula() -> Formula:
    return parse_formula(PEIRCE)


def peirce_rproof() -> RProof:
    P = parse_formula
    a = or_(weaken(P("q"), exch(1, ax(P("p")))))
    b = exch(1, ax(P("p")))
    c = and_(a, b)
    c = exch(1, exch(2, c))
    return or_(contract(c))


def peirce_homogeneous() -> HomogeneousCp:
    """Two axioms whose negative vertices are joined, over the dualizing graph of Peirce's law."""
    source = DualizingGraph("abcd", [("a", "c")], [("a", "b"), ("c", "d")])
    fmap = {"a": (0, 0, 0), "b": (1,), "c": (0, 1), "d": (1,)}
    return HomogeneousCp(source, dgraph_of_prop(peirce_formula()), fmap)


def excluded_middle_rproof() -> RProof:
    return or_(ax(parse_formula("p")))


def _neg_disjunction(n: int, var: str) -> Formula:
    f: Formula = Atom(PredSym(f"p{n}", True), (Var(var),))
    for i in range(n - 1, 0, -1):
        f = Or(Atom(PredSym(f"p{i}", True), (Var(var),)), f)
    return f


def forall_distribution(n: int) -> Formula:
    """``ex x. (~p1(x) \\/ ... \\/ ~pn(x))`` or the conjunction of ``all yi. pi(yi)``."""
    right: Formula = Forall(f"y{n}", Atom(PredSym(f"p{n}"), (Var(f"y{n}"),)))
    for i in range(n - 1, 0, -1):
        right = And(Forall(f"y{i}", Atom(PredSym(f"p{i}"), (Var(f"y{i}"),))), right)
    return Or(Exists("x", _neg_disjunction(n, "x")), right)


def forall_distribution_rproof(n: int) -> RProof:
    target = forall_distribution(n)
    e = target.left

    def branch(i: int) -> RProof:
        y = f"y{i}"
        p = exch(1, ax(Atom(PredSym(f"p{i}"), (Var(y),))))
        if i < n:
            rest = _neg_disjunction(n, y)
            for _ in range(i):
                rest = rest.right
            p = or_(weaken(rest, p))
        for k in range(i - 1, 0, -1):
            p = weaken(Atom(PredSym(f"p{k}", True), (Var(y),)), p)
            p = or_(exch(2, p))
        p = ex(e, Var(y), p)
        return all_(y, exch(1, p))

    acc = branch(n)
    for i in range(n - 1, 0, -1):
        acc = and_(branch(i), acc)
        acc = exch(1, contract(exch(1, exch(2, acc))))
    return or_(acc)


def dependent_net() -> Fograph:
    """Net whose dualizer sends ``x`` to ``z`` and ``y`` to ``f(z)``."""
    g = graph_of(parse_formula(FIG_DEPENDENT))
    at = {str(l): v for v, l in g.labels.items()}
    colour = {at["~p(x)"]: 0, at["p(z)"]: 0, at["~q(y)"]: 1, at["q(f(z))"]: 1}
    return Fograph(g.labels, g.edges, colour)


def net_trio() -> tuple[DualizingGraph, DualizingGraph, DualizingGraph]:
    """A dualizing net and two dualizing graphs that are not nets."""
    return (
        DualizingGraph("abcd", [("a", "b")], [("a", "c"), ("b", "d")]),
        DualizingGraph("abcd", [("a", "b"), ("c", "d")], [("a", "c"), ("b", "d")]),
        DualizingGraph("abcd", [("a", "b")], [("a", "d"), ("b", "d")]),
    )


def dependency_monet() -> Mograph:
    """An existential binder and a universal binder tied by one duality."""
    return Mograph(["e", "l1", "u", "l2"], [("e", "l1")], [("l1", "l2")],
                   [("e", "l1"), ("u", "l2")])


def collapse_example() -> HomogeneousCp:
    """Two vacuous universal binders over the same target binder."""
    target = mograph_of_formula(parse_formula(COLLAPSE_FORMULA))
    source = Mograph(["b1", "b2", "c", "l1", "l2"], [("c", "l1"), ("c", "l2")],
                     [("l1", "l2")], [("c", "l1"), ("c", "l2")])
    fmap = {"b1": (0,), "b2": (0,), "c": (1,), "l1": (1, 0, 0), "l2": (1, 0, 1)}
    return HomogeneousCp(source, target, fmap)


def fusion_example() -> tuple[Fograph, Fograph, frozenset, frozenset]:
    """``(x joined to ~p(x)) beside p(y)``, and ``q``, ``~q``, ``z`` side by side."""
    L = lambda s: literal_of_atom(parse_formula(s))
    g = Fograph({"x": Binder("x"), "px": L("~p(x)"), "py": L("p(y)")}, [("x", "px")])
    h = Fograph({"q": L("q"), "nq": L("~q"), "z": Binder("z")}, [])
    return g, h, frozenset({"py"}), frozenset({"q", "nq"})
