"""Label-free combinatorial proofs: dualizing graphs, mographs and their nets.

A dualizing graph is a cograph with a second edge set, the dualities.  A
mograph adds directed bindings from binders to literals.  Homogeneous
combinatorial proofs map a net of either kind onto the graph of a simple
proposition or of a closed monadic formula; conversions to and from standard
combinatorial proofs keep vertex ids.

>>> from combproof.syntax import parse_formula
>>> d = dgraph_of_prop(parse_formula("(~p \\\\/ q) & ~p \\\\/ p"))
>>> sorted(map(sorted, d.edges))
[[(0, 0, 0), (0, 1)], [(0, 0, 1), (0, 1)]]
>>> len(d.dualities)
2
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

import networkx as nx

from .bifib import (
    CombProof, is_fibration_directed, is_homomorphism, is_skew_fibration,
    verify_cp,
)
from .fograph import (
    Binder, ConstLit, Fograph, Literal, bindings, free_variables, graph_of,
    literals,
)
from .fonet import find_bimatching, verify_fonet
from .graphs import (
    CotreeIndex, DGraph, Op, UGraph, cotree_of, find_p4, is_cograph, vkey,
)
from .report import CheckReport
from .syntax import (
    And, Atom, Box, Diamond, Exists, Forall, Formula, Or, PredSym, Var,
    free_vars, rectify,
)
from .unify import NotLinked

__all__ = [
    "DualizingGraph", "Mograph", "HomogeneousCp", "NotSimpleProposition",
    "NotPropositional", "NotClosedMonadic", "NotClosedModal", "NotVerified",
    "BIMATCHING_CAP", "dgraph_of_prop", "dgraph_of_fograph",
    "check_dualizing_graph", "check_mograph", "verify_dualizing_net",
    "verify_homogeneous_cp_prop", "verify_homogeneous_cp_monadic",
    "verify_homogeneous_cp", "to_homogeneous_prop", "from_homogeneous_prop",
    "mograph_of_formula", "mograph_of_fograph", "modal_mograph",
    "binder_equivalence", "mograph_dependencies", "verify_monet",
    "collapse", "indistinguishable_classes", "to_homogeneous_monadic",
    "from_homogeneous_monadic", "label_dualizing_graph", "label_mograph",
    "linked_fograph",
]

# above this many vertices the bimatching search is replaced by the fonet check
BIMATCHING_CAP = 24


class NotSimpleProposition(ValueError):
    pass


class NotPropositional(ValueError):
    pass


class NotClosedMonadic(ValueError):
    pass


class NotClosedModal(ValueError):
    pass


class NotVerified(ValueError):
    def __init__(self, report: CheckReport):
        super().__init__(str(report))
        self.report = report


def _pair(e: Iterable) -> frozenset:
    p = frozenset(e)
    if len(p) != 2:
        raise ValueError(f"not a two-vertex edge: {sorted(p, key=vkey)!r}")
    return p


# ---------------------------------------------------------------- types


class DualizingGraph:
    """A cograph on ``vertices`` with undirected ``dualities`` on the same vertices."""

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable = (),
                 dualities: Iterable = ()):
        self.graph = UGraph({v: None for v in vertices}, edges)
        self.dualities = frozenset(_pair(d) for d in dualities)
        for d in self.dualities:
            for v in d:
                if v not in self.graph.labels:
                    raise ValueError(f"duality endpoint {v!r} is not a vertex")

    @property
    def vertices(self) -> list:
        return self.graph.vertices

    @property
    def edges(self) -> frozenset:
        return self.graph.edges

    @property
    def duality_graph(self) -> UGraph:
        dg = self.graph._cache.get("dualities")
        if dg is None:
            dg = UGraph(self.graph.labels, self.dualities)
            self.graph._cache["dualities"] = dg
        return dg

    def duals(self, v) -> list:
        return sorted(self.duality_graph.adj[v], key=vkey)

    def _key(self):
        return (frozenset(self.graph.labels), self.edges, self.dualities)

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self._key() == other._key()

    __hash__ = None

    def __repr__(self) -> str:
        return (f"{type(self).__name__}({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {len(self.dualities)} dualities)")


class Mograph(DualizingGraph):
    """A dualizing graph with directed bindings from binders to literals."""

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable = (),
                 dualities: Iterable = (), bindings: Iterable = ()):
        super().__init__(vertices, edges, dualities)
        self.bindings = frozenset((b, l) for b, l in bindings)
        for b, l in self.bindings:
            if b not in self.graph.labels or l not in self.graph.labels:
                raise ValueError(f"binding {b!r}->{l!r} leaves the vertex set")

    def is_literal(self, v) -> bool:
        return any(l == v for _, l in self.bindings)

    @property
    def literals(self) -> list:
        return sorted({l for _, l in self.bindings}, key=vkey)

    @property
    def binders(self) -> list:
        lits = {l for _, l in self.bindings}
        return [v for v in self.vertices if v not in lits]

    def binder_of(self, l):
        srcs = sorted((b for b, t in self.bindings if t == l), key=vkey)
        return srcs[0] if srcs else None

    @property
    def index(self) -> CotreeIndex:
        idx = self.graph._cache.get("index")
        if idx is None:
            idx = CotreeIndex(cotree_of(self.graph))
            self.graph._cache["index"] = idx
        return idx

    def scope(self, b) -> frozenset:
        parent = self.index.parent_of_vertex(b)
        return self.index.leafset[id(parent)] if parent is not None else frozenset((b,))

    def is_existential(self, b) -> bool:
        parent = self.index.parent_of_vertex(b)
        return parent is not None and parent.op is Op.JOIN

    def binding_graph(self) -> DGraph:
        return DGraph(frozenset(self.graph.labels), self.bindings)

    def _key(self):
        return super()._key() + (self.bindings,)


@dataclass
class HomogeneousCp:
    """A candidate homogeneous combinatorial proof ``map: source -> target``."""

    source: DualizingGraph
    target: DualizingGraph
    map: dict

    @property
    def monadic(self) -> bool:
        return isinstance(self.source, Mograph)


# ---------------------------------------------------------------- well-formedness


def check_dualizing_graph(d: DualizingGraph) -> CheckReport:
    """Non-empty cograph whose duality graph is a triangle-free cograph."""
    rep = CheckReport()
    if not d.vertices:
        rep.fail("empty")
        return rep
    if not is_cograph(d.graph):
        rep.fail("not-cograph", find_p4(d.graph))
    dg = d.duality_graph
    if not is_cograph(dg):
        rep.fail("duality-not-cograph", find_p4(dg))
    for e in sorted(d.dualities, key=lambda e: sorted(map(vkey, e))):
        u, w = sorted(e, key=vkey)
        common = sorted(dg.adj[u] & dg.adj[w], key=vkey)
        if common:
            rep.fail("duality-triangle", (u, w, common[0]))
            break
    return rep


def check_mograph(m: Mograph) -> CheckReport:
    """Dualizing graph with bindings into literals that lie in their binder's scope."""
    rep = check_dualizing_graph(m)
    if not rep.ok:
        return rep
    if not m.bindings:
        rep.fail("no-binding")
        return rep
    targets: dict = {}
    for b, l in m.bindings:
        targets.setdefault(l, []).append(b)
    for l, bs in sorted(targets.items(), key=lambda kv: vkey(kv[0])):
        if len(bs) > 1:
            rep.fail("literal-bound-twice", (l, tuple(sorted(bs, key=vkey))))
    for b, l in sorted(m.bindings, key=lambda a: (vkey(a[0]), vkey(a[1]))):
        if b in targets:
            rep.fail("binding-from-literal", (b, l))
    if not rep.ok:
        return rep
    lits = set(targets)
    for d in sorted(m.dualities, key=lambda e: sorted(map(vkey, e))):
        for v in sorted(d, key=vkey):
            if v not in lits:
                rep.fail("binder-in-duality", v)
    for b in m.binders:
        if not (m.scope(b) & lits):
            rep.fail("scope-without-literal", b)
    for b, l in sorted(m.bindings, key=lambda a: (vkey(a[0]), vkey(a[1]))):
        if l not in m.scope(b):
            rep.fail("binding-outside-scope", (b, l))
    return rep


# ---------------------------------------------------------------- formulas and fographs to graphs


def _require_simple_prop(p: Formula) -> None:
    if isinstance(p, Atom):
        if p.args:
            raise NotSimpleProposition(f"atom {p} has arguments")
        return
    if isinstance(p, (And, Or)):
        _require_simple_prop(p.left)
        _require_simple_prop(p.right)
        return
    raise NotSimpleProposition(f"{p} is not a simple proposition")


def _dual_pairs(preds: Mapping) -> list[tuple]:
    by_pred: dict = {}
    for v, q in preds.items():
        by_pred.setdefault(q, []).append(v)
    out = []
    for q, vs in by_pred.items():
        if q.dualized:
            continue
        for u in vs:
            for w in by_pred.get(q.dual, ()):
                out.append((u, w))
    return out


def dgraph_of_prop(p: Formula) -> DualizingGraph:
    """Atom occurrences (by path) joined when they meet at a conjunction; dual symbols are dualities."""
    _require_simple_prop(p)
    preds: dict = {}
    edges: list = []

    def go(g: Formula, path: tuple) -> list:
        if isinstance(g, Atom):
            preds[path] = g.pred
            return [path]
        left = go(g.left, path + (0,))
        right = go(g.right, path + (1,))
        if isinstance(g, And):
            edges.extend((u, w) for u in left for w in right)
        return left + right

    go(p, ())
    return DualizingGraph(preds, edges, _dual_pairs(preds))


def dgraph_of_fograph(g: UGraph) -> DualizingGraph:
    """Same cograph; dualities between literals with dual predicate symbols."""
    preds = {}
    for v in g.vertices:
        lab = g.labels[v]
        if isinstance(lab, ConstLit):
            raise NotPropositional(f"vertex {v!r} is a logical constant")
        if not isinstance(lab, Literal) or lab.args:
            raise NotPropositional(f"vertex {v!r} is not a nullary literal")
        preds[v] = lab.pred
    return DualizingGraph(preds, g.edges, _dual_pairs(preds))


def _require_closed_monadic(f: Formula) -> None:
    if free_vars(f):
        raise NotClosedMonadic(f"free variables {sorted(free_vars(f))}")

    def go(g: Formula) -> None:
        if isinstance(g, Atom):
            if len(g.args) != 1 or not isinstance(g.args[0], Var):
                raise NotClosedMonadic(f"atom {g} is not a unary predicate of a variable")
        elif isinstance(g, (And, Or)):
            go(g.left)
            go(g.right)
        elif isinstance(g, (Forall, Exists)):
            go(g.body)
        else:
            raise NotClosedMonadic(f"{g} is not allowed in a closed monadic formula")

    go(f)


def _mograph_of_tree(f: Formula, var_of, quant_kind) -> Mograph:
    # var_of(atom, env) names the binder path; quant_kind(node) is "all", "ex" or None
    preds: dict = {}
    verts: list = []
    edges: list = []
    binds: list = []

    def go(g: Formula, path: tuple, env: dict) -> list:
        kind = quant_kind(g)
        if kind is not None:
            verts.append(path)
            body = go(g.body, path + (0,), var_of.enter(g, path, env))
            if kind == "ex":
                edges.extend((path, w) for w in body)
            return [path] + body
        if isinstance(g, Atom):
            verts.append(path)
            preds[path] = g.pred
            binds.append((var_of.binder(g, env), path))
            return [path]
        left = go(g.left, path + (0,), env)
        right = go(g.right, path + (1,), env)
        if isinstance(g, And):
            edges.extend((u, w) for u in left for w in right)
        return left + right

    go(f, (), {})
    return Mograph(verts, edges, _dual_pairs(preds), binds)


class _ByVariable:
    @staticmethod
    def enter(g, path, env):
        return {**env, g.var: path}

    @staticmethod
    def binder(a, env):
        return env[a.args[0].name]


class _ByNesting:
    @staticmethod
    def enter(g, path, env):
        return {"": path}

    @staticmethod
    def binder(a, env):
        return env[""]


def mograph_of_formula(f: Formula) -> Mograph:
    """Mograph of a closed monadic formula, rectified or not; ids are paths."""
    _require_closed_monadic(f)
    return _mograph_of_tree(
        f, _ByVariable,
        lambda g: "all" if isinstance(g, Forall) else "ex" if isinstance(g, Exists) else None)


def mograph_of_fograph(g: UGraph) -> Mograph:
    """Same cograph; dualities between dual literals; bindings as in the fograph."""
    g = g if isinstance(g, Fograph) else Fograph(g.labels, g.edges)
    preds = {}
    for v in g.vertices:
        lab = g.labels[v]
        if isinstance(lab, Binder):
            continue
        if (not isinstance(lab, Literal) or len(lab.args) != 1
                or not isinstance(lab.args[0], Var)):
            raise NotClosedMonadic(f"vertex {v!r} is not a unary literal of a variable")
        preds[v] = lab.pred
    if free_variables(g):
        raise NotClosedMonadic(f"free variables {sorted(free_variables(g))}")
    return Mograph(g.labels, g.edges, _dual_pairs(preds), bindings(g))


def modal_mograph(m: Formula) -> Mograph:
    """Mograph of a simple closed modal formula; each atom is bound by its innermost operator."""

    def check(g: Formula, under: bool) -> None:
        if isinstance(g, Atom):
            if g.args:
                raise NotClosedModal(f"modal atom {g} has arguments")
            if not under:
                raise NotClosedModal(f"atom {g} is not under a modal operator")
        elif isinstance(g, (And, Or)):
            check(g.left, under)
            check(g.right, under)
        elif isinstance(g, (Box, Diamond)):
            check(g.body, True)
        else:
            raise NotClosedModal(f"{g} is not allowed in a simple modal formula")

    check(m, False)
    return _mograph_of_tree(
        m, _ByNesting,
        lambda g: "all" if isinstance(g, Box) else "ex" if isinstance(g, Diamond) else None)


# ---------------------------------------------------------------- nets


def _bimatching(d: DualizingGraph, leaps: Iterable) -> tuple:
    """Bimatching witness (or None) and the route used; ``d`` must be linked."""
    leaps = list(leaps)
    if len(d.vertices) <= BIMATCHING_CAP:
        return find_bimatching(d.vertices, d.edges, leaps), "search"
    rep = verify_fonet(linked_fograph(d))
    if rep.ok:
        return None, "fonet"
    return rep.failures[0].witness or frozenset(), "fonet"


def verify_dualizing_net(d: DualizingGraph) -> CheckReport:
    """Dualities form a perfect matching and no vertex set induces a bimatching."""
    rep = CheckReport()
    rep.extend(check_dualizing_graph(d))
    if not rep.ok:
        return rep
    for v in d.vertices:
        n = len(d.duals(v))
        if n != 1:
            rep.fail("duality-not-matching", v, f"{n} dualities")
    if not rep.ok:
        return rep
    w, route = _bimatching(d, d.dualities)
    if w is not None:
        rep.fail("bimatching", w, f"found by {route}")
    return rep


def binder_equivalence(m: Mograph) -> list[frozenset]:
    """Classes of binders linked by binding, duality, binding zig-zags."""
    lits = set(m.literals)
    for v in sorted(lits, key=vkey):
        if len(m.duals(v)) != 1:
            raise NotLinked(f"literal {v!r} is in {len(m.duals(v))} dualities")
    h = nx.Graph()
    h.add_nodes_from(m.binders)
    for d in m.dualities:
        u, w = tuple(d)
        h.add_edge(m.binder_of(u), m.binder_of(w))
    classes = [frozenset(c) for c in nx.connected_components(h)]
    return sorted(classes, key=lambda c: min(map(vkey, c)))


def _conflicts_and_deps(m: Mograph) -> tuple[list, set]:
    conflicts = []
    deps = set()
    for cls in binder_equivalence(m):
        members = sorted(cls, key=vkey)
        univ = [b for b in members if not m.is_existential(b)]
        ex = [b for b in members if m.is_existential(b)]
        if len(univ) > 1:
            conflicts.append((univ[0], univ[1]))
        deps |= {frozenset((e, u)) for e in ex for u in univ}
    return conflicts, deps


def mograph_dependencies(m: Mograph) -> set[frozenset]:
    """Pairs ``{existential, universal}`` of equivalent binders."""
    return _conflicts_and_deps(m)[1]


def verify_monet(m: Mograph) -> CheckReport:
    """Linked, consistent (no two equivalent universal binders) and bimatching-free."""
    rep = CheckReport()
    rep.extend(check_mograph(m), "mograph:")
    if not rep.ok:
        return rep
    for v in m.literals:
        n = len(m.duals(v))
        if n != 1:
            rep.fail("unlinked-literal" if n == 0 else "literal-in-several-dualities", v)
    if not rep.ok:
        return rep
    conflicts, deps = _conflicts_and_deps(m)
    for c in conflicts:
        rep.fail("conflict", c)
    if not rep.ok:
        return rep
    w, route = _bimatching(m, set(m.dualities) | deps)
    if w is not None:
        rep.fail("bimatching", w, f"found by {route}")
    return rep


# ---------------------------------------------------------------- homogeneous proofs


def _check_map(h: HomogeneousCp, rep: CheckReport) -> bool:
    ok = True
    for v in h.source.vertices:
        if v not in h.map:
            rep.fail("map-not-total", v)
            ok = False
        elif h.map[v] not in h.target.graph.labels:
            rep.fail("map-unknown-target", (v, h.map[v]))
            ok = False
    return ok


def verify_homogeneous_cp_prop(h: HomogeneousCp) -> CheckReport:
    """Source a dualizing net; skew fibration of cographs, homomorphism of dualities."""
    rep = CheckReport()
    rep.extend(verify_dualizing_net(h.source), "net:")
    rep.extend(check_dualizing_graph(h.target), "target:")
    if not _check_map(h, rep) or not rep.ok:
        return rep
    rep.extend(is_skew_fibration(h.map, h.source.graph, h.target.graph))
    rep.extend(is_homomorphism(h.map, h.source.duality_graph, h.target.duality_graph),
               "duality:")
    return rep


def verify_homogeneous_cp_monadic(h: HomogeneousCp) -> CheckReport:
    """Source a monet; existential-preserving skew fibration, duality homomorphism, binding fibration."""
    rep = CheckReport()
    src, tgt = h.source, h.target
    rep.extend(verify_monet(src), "monet:")
    rep.extend(check_mograph(tgt), "target:")
    if not _check_map(h, rep) or not rep.ok:
        return rep
    tlits = set(tgt.literals)
    for b in src.binders:
        if src.is_existential(b):
            img = h.map[b]
            if img in tlits or not tgt.is_existential(img):
                rep.fail("existential-preservation", (b, img))
    rep.extend(is_skew_fibration(h.map, src.graph, tgt.graph))
    rep.extend(is_homomorphism(h.map, src.duality_graph, tgt.duality_graph), "duality:")
    rep.extend(is_fibration_directed(h.map, src.binding_graph(), tgt.binding_graph()),
               "binding:")
    return rep


def verify_homogeneous_cp(h: HomogeneousCp) -> CheckReport:
    if h.monadic:
        return verify_homogeneous_cp_monadic(h)
    return verify_homogeneous_cp_prop(h)


def indistinguishable_classes(h: HomogeneousCp) -> list[frozenset]:
    """Groups of two or more vacuous universal binders with equal image and neighbourhood."""
    m = h.source
    bound = {b for b, _ in m.bindings}
    groups: dict = {}
    for b in m.binders:
        if b in bound or m.is_existential(b):
            continue
        groups.setdefault((h.map[b], m.graph.adj[b]), []).append(b)
    return sorted((frozenset(g) for g in groups.values() if len(g) > 1),
                  key=lambda c: min(map(vkey, c)))


def collapse(h: HomogeneousCp) -> HomogeneousCp:
    """Merge indistinguishable vacuous universal binders, repeated until none remain.

    Each class keeps its least vertex.
    """
    rep = verify_homogeneous_cp_monadic(h)
    if not rep.ok:
        raise NotVerified(rep)
    while True:
        classes = indistinguishable_classes(h)
        if not classes:
            return h
        doomed = set()
        for c in classes:
            doomed |= set(sorted(c, key=vkey)[1:])
        m = h.source
        keep = [v for v in m.vertices if v not in doomed]
        src = Mograph(keep, [tuple(e) for e in m.edges if not e & doomed],
                      [tuple(d) for d in m.dualities],
                      list(m.bindings))
        h = HomogeneousCp(src, h.target, {v: h.map[v] for v in keep})


def _links_as_colour(dualities: Iterable[frozenset]) -> dict:
    colour = {}
    for k, d in enumerate(sorted(dualities, key=lambda e: sorted(map(vkey, e)))):
        for v in d:
            colour[v] = k
    return colour


def _verified(cp: CombProof) -> None:
    rep = verify_cp(cp)
    if not rep.ok:
        raise NotVerified(rep)


def to_homogeneous_prop(cp: CombProof) -> HomogeneousCp:
    """Links become dualities; the target becomes its dualizing graph."""
    _verified(cp)
    src = cp.lifted()
    net = DualizingGraph(src.labels, src.edges, src.links())
    return HomogeneousCp(net, dgraph_of_fograph(cp.target), dict(cp.map))


def from_homogeneous_prop(h: HomogeneousCp, p: Formula) -> CombProof:
    """Dualities become links; each source vertex takes the label of its image."""
    target_d = dgraph_of_prop(p)
    if h.target != target_d:
        raise NotVerified(_single("target-not-dgraph-of-proposition"))
    rep = verify_homogeneous_cp_prop(h)
    if not rep.ok:
        raise NotVerified(rep)
    tgt = graph_of(p)
    labels = {v: tgt.labels[h.map[v]] for v in h.source.vertices}
    src = UGraph(labels, h.source.edges, _links_as_colour(h.source.dualities))
    return CombProof(src, tgt, dict(h.map), p)


def to_homogeneous_monadic(cp: CombProof) -> HomogeneousCp:
    """Links become dualities and the source's bindings are kept."""
    _verified(cp)
    src = cp.lifted()
    net = Mograph(src.labels, src.edges, src.links(), bindings(src))
    return HomogeneousCp(net, mograph_of_fograph(cp.target), dict(cp.map))


def from_homogeneous_monadic(h: HomogeneousCp, f: Formula) -> CombProof:
    """Collapse, then turn dualities into links and copy labels from the formula's graph."""
    if h.target != mograph_of_formula(f):
        raise NotVerified(_single("target-not-mograph-of-formula"))
    h = collapse(h)
    f = rectify(f)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        tgt = graph_of(f)
    labels = {v: tgt.labels[h.map[v]] for v in h.source.vertices}
    src = UGraph(labels, h.source.edges, _links_as_colour(h.source.dualities))
    return CombProof(src, tgt, dict(h.map), f)


def _single(condition: str) -> CheckReport:
    rep = CheckReport()
    rep.fail(condition)
    return rep


# ---------------------------------------------------------------- labelling


def _predicate_labels(d: DualizingGraph, vertices: list) -> dict:
    """``q_i`` on one side of each complete bipartite duality component, ``~q_i`` on the other."""
    h = nx.Graph()
    h.add_nodes_from(vertices)
    h.add_edges_from(tuple(e) for e in d.dualities)
    comps = sorted((sorted(c, key=vkey) for c in nx.connected_components(h)),
                   key=lambda c: vkey(c[0]))
    out = {}
    for i, comp in enumerate(comps, start=1):
        first = comp[0]
        for v in comp:
            out[v] = PredSym(f"q{i}", h.has_edge(first, v))
        for u, w in h.subgraph(comp).edges:
            if out[u] == out[w]:
                raise ValueError(f"duality component of {first!r} is not complete bipartite")
        dual_side = [v for v in comp if out[v].dualized]
        if any(not h.has_edge(u, w) for u in comp if not out[u].dualized for w in dual_side):
            raise ValueError(f"duality component of {first!r} is not complete bipartite")
    return out


def label_dualizing_graph(d: DualizingGraph) -> Fograph:
    """A simple propositional fograph whose dualizing graph is ``d``."""
    preds = _predicate_labels(d, d.vertices)
    return Fograph({v: Literal(q) for v, q in preds.items()}, d.edges)


def label_mograph(m: Mograph) -> Fograph:
    """A closed monadic rectified fograph whose mograph is ``m``; binders get ``v1, v2, ...``."""
    names = {b: f"v{k}" for k, b in enumerate(m.binders, start=1)}
    preds = _predicate_labels(m, m.literals)
    labels = {b: Binder(x) for b, x in names.items()}
    for l, q in preds.items():
        labels[l] = Literal(q, (Var(names[m.binder_of(l)]),))
    return Fograph(labels, m.edges)


def linked_fograph(d: DualizingGraph) -> Fograph:
    """Labelled fograph of a linked dualizing graph or mograph, one colour per duality."""
    g = label_mograph(d) if isinstance(d, Mograph) else label_dualizing_graph(d)
    return Fograph(g.labels, g.edges, _links_as_colour(d.dualities))
