"""Slow reference implementations used to cross-check the package.

Nothing here calls the package's cotree, unification or bimatching code.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx

from combproof.fograph import Binder, Literal
from combproof.syntax import And, App, Atom, One, Or, Var, Zero


# ---------------------------------------------------------------- terms


def apply(t, sigma: dict):
    if isinstance(t, Var):
        return sigma.get(t.name, t)
    return App(t.symbol, tuple(apply(a, sigma) for a in t.args))


def occurs(x: str, t) -> bool:
    if isinstance(t, Var):
        return t.name == x
    return any(occurs(x, a) for a in t.args)


def robinson(equations, solvable) -> dict | None:
    """Eager textbook unification; only names in ``solvable`` may be bound.

    The answer is idempotent: every binding is fully substituted.
    """
    sigma: dict = {}
    work = list(equations)
    while work:
        s, t = work.pop()
        s, t = apply(s, sigma), apply(t, sigma)
        if s == t:
            continue
        if isinstance(t, Var) and t.name in solvable and not (
                isinstance(s, Var) and s.name in solvable):
            s, t = t, s
        if isinstance(s, Var) and s.name in solvable:
            if occurs(s.name, t):
                return None
            step = {s.name: t}
            sigma = {k: apply(v, step) for k, v in sigma.items()}
            sigma[s.name] = t
            continue
        if isinstance(s, App) and isinstance(t, App) and s.symbol == t.symbol \
                and len(s.args) == len(t.args):
            work.extend(zip(s.args, t.args))
            continue
        return None
    return sigma


def term_vars(t) -> set:
    if isinstance(t, Var):
        return {t.name}
    out = set()
    for a in t.args:
        out |= term_vars(a)
    return out


# ---------------------------------------------------------------- cographs


def _nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.labels)
    h.add_edges_from(tuple(e) for e in g.edges)
    return h


def parent_block(g, v) -> tuple[frozenset, bool]:
    """Leaves below the cotree parent of ``v``, and whether that node is a join.

    Found by splitting into components or co-components until ``v`` is alone.
    """
    h = _nx(g)
    S = set(h)
    while True:
        sub = h.subgraph(S)
        parts = list(nx.connected_components(sub))
        joined = False
        if len(parts) == 1:
            parts = list(nx.connected_components(nx.complement(sub)))
            joined = True
        mine = next(p for p in parts if v in p)
        if len(mine) == 1:
            return frozenset(S), joined
        S = mine


# ---------------------------------------------------------------- nets


def binder_table(g) -> tuple[dict, dict]:
    """Existential and universal variable name to binder vertex."""
    ex, un = {}, {}
    for v, lab in g.labels.items():
        if isinstance(lab, Binder):
            _, joined = parent_block(g, v)
            (ex if joined else un)[lab.var] = v
    return ex, un


def link_pairs(g) -> list[tuple]:
    classes: dict = {}
    for v, c in g.colour.items():
        classes.setdefault(c, []).append(v)
    return [tuple(vs) for vs in classes.values()]


def dualizer(g) -> dict | None:
    ex, _ = binder_table(g)
    eqs = []
    for u, w in link_pairs(g):
        a, b = g.labels[u], g.labels[w]
        assert isinstance(a, Literal) and isinstance(b, Literal)
        eqs.extend(zip(a.args, b.args))
    return robinson(eqs, set(ex))


def dependencies(g) -> set[frozenset] | None:
    sigma = dualizer(g)
    if sigma is None:
        return None
    ex, un = binder_table(g)
    deps = set()
    for x, b in ex.items():
        for y in term_vars(sigma.get(x, Var(x))):
            if y in un:
                deps.add(frozenset((b, un[y])))
    return deps


def bimatching(vertices, edges, leaps) -> frozenset | None:
    """Some vertex set on which both edge sets induce perfect matchings."""
    vertices = list(vertices)
    E = {frozenset(e) for e in edges}
    L = {frozenset(e) for e in leaps}
    live = [v for v in vertices
            if any(v in e for e in E) and any(v in l for l in L)]
    for k in range(2, len(live) + 1, 2):
        for W in combinations(live, k):
            Ws = set(W)
            if all(sum(1 for e in E if v in e and e <= Ws) == 1
                   and sum(1 for l in L if v in l and l <= Ws) == 1 for v in W):
                return frozenset(W)
    return None


def is_fonet(g) -> bool:
    """Dualizer exists and no induced bimatching; ``g`` must be rectified."""
    deps = dependencies(g)
    if deps is None:
        return False
    leaps = [frozenset(p) for p in link_pairs(g)] + list(deps)
    return bimatching(g.labels, g.edges, leaps) is None


# ---------------------------------------------------------------- propositions


def tautology(f) -> bool:
    """Truth table over the predicate bases of a quantifier-free formula."""
    bases = sorted({a.pred.base for a in _atoms(f)})

    def ev(g, val):
        if isinstance(g, Atom):
            return val[g.pred.base] != g.pred.dualized
        if isinstance(g, One):
            return True
        if isinstance(g, Zero):
            return False
        if isinstance(g, And):
            return ev(g.left, val) and ev(g.right, val)
        if isinstance(g, Or):
            return ev(g.left, val) or ev(g.right, val)
        raise TypeError(g)

    return all(ev(f, dict(zip(bases, bits)))
               for bits in product((False, True), repeat=len(bases)))


def _atoms(f):
    if isinstance(f, Atom):
        yield f
    for child in ("left", "right", "body"):
        if hasattr(f, child):
            yield from _atoms(getattr(f, child))


# ---------------------------------------------------------------- proofs


def cp_isomorphic(a, b) -> bool:
    """Sources isomorphic by a bijection that respects edges, links and the maps.

    Both proofs must share their target vertex ids.
    """

    def encode(cp):
        h = nx.Graph()
        for v in cp.source.labels:
            h.add_node(v, image=cp.map[v])
        for e in cp.source.edges:
            h.add_edge(*tuple(e), kind="edge")
        for link in link_pairs(cp.source):
            u, w = link
            if h.has_edge(u, w):
                return None
            h.add_edge(u, w, kind="link")
        return h

    ga, gb = encode(a), encode(b)
    if ga is None or gb is None:
        return False
    return nx.is_isomorphic(ga, gb, node_match=lambda x, y: x["image"] == y["image"],
                            edge_match=lambda x, y: x["kind"] == y["kind"])
