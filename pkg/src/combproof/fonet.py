"""Fonets: linked fographs with a dualizer and no induced bimatching.

:func:`verify_fonet` decides fonethood in polynomial time by splitting the
net into smaller nets (removing a universal binder, cutting a fusion at a
bridge, or removing an existential binder after substituting its dualizer
value) down to unions of axioms.  An accepted net comes with a trace whose
replay through :func:`~combproof.fograph.fusion`,
:func:`~combproof.fograph.univ_quant` and
:func:`~combproof.fograph.exist_quant` rebuilds it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

import networkx as nx

from .fograph import (
    Binder, ConstLit, Fograph, Literal, binders, check_fograph, exist_quant,
    fusion, literals, rectify_fograph, univ_quant,
)
from .graphs import UGraph, co_components, components, vkey
from .report import CheckReport
from .syntax import Term, Var, subst_term, term_vars
from .unify import NoDualizer, analyse

__all__ = [
    "check_linked", "is_axiom", "find_bimatching", "bimatching_exists_bruteforce",
    "TooLarge", "AxiomUnion", "StripUniversal", "Fusion", "StripExistential",
    "Step", "FonetReport", "verify_fonet", "replay", "trace_size",
]


class TooLarge(ValueError):
    pass


def _pre_dual(a, b) -> bool:
    return (isinstance(a, Literal) and isinstance(b, Literal)
            and a.pred.dual == b.pred and len(a.args) == len(b.args))


def check_linked(g: UGraph) -> CheckReport:
    """Every colour is a non-adjacent pre-dual literal pair; other literals are 1."""
    rep = CheckReport()
    for v, lab in sorted(g.labels.items(), key=lambda kv: vkey(kv[0])):
        if isinstance(lab, ConstLit) and lab.value == 0:
            rep.fail("zero-literal", v)
        elif isinstance(lab, ConstLit) and v in g.colour:
            rep.fail("coloured-constant", v)
        elif isinstance(lab, Binder) and v in g.colour:
            rep.fail("coloured-binder", v)
        elif isinstance(lab, Literal) and v not in g.colour:
            rep.fail("unlinked-literal", v)
    for link in g.links():
        vs = sorted(link, key=vkey)
        if len(vs) != 2:
            rep.fail("colour-not-pair", tuple(vs))
            continue
        u, w = vs
        if g.has_edge(u, w):
            rep.fail("adjacent-link", (u, w))
        if not _pre_dual(g.labels[u], g.labels[w]):
            rep.fail("link-not-pre-dual", (u, w))
    return rep


def is_axiom(g: UGraph) -> bool:
    """Two exactly dual literals of one colour, or a lone uncoloured 1."""
    vs = g.vertices
    if len(vs) == 1:
        lab = g.labels[vs[0]]
        return isinstance(lab, ConstLit) and lab.value == 1 and not g.colour
    if len(vs) == 2 and not g.edges:
        a, b = (g.labels[v] for v in vs)
        return (len(g.links()) == 1 and len(g.colour) == 2
                and isinstance(a, Literal) and isinstance(b, Literal)
                and a.pred.dual == b.pred and a.args == b.args)
    return False


def find_bimatching(vertices: Iterable[Hashable], edges: Iterable[Iterable],
                    leaps: Iterable[Iterable]) -> frozenset | None:
    """A non-empty vertex set inducing a perfect matching in both edge sets, or None.

    Exhaustive backtracking; each chosen vertex may have at most one chosen
    neighbour in each edge set.
    """
    vs = sorted(vertices, key=vkey)
    nbr_e: dict = {v: set() for v in vs}
    nbr_l: dict = {v: set() for v in vs}
    for e in edges:
        u, w = tuple(e)
        nbr_e[u].add(w)
        nbr_e[w].add(u)
    for e in leaps:
        u, w = tuple(e)
        nbr_l[u].add(w)
        nbr_l[w].add(u)
    cand = [v for v in vs if nbr_e[v] and nbr_l[v]]
    pos = {v: i for i, v in enumerate(cand)}
    n = len(cand)
    chosen: set = set()

    def ok_partial(v, i) -> bool:
        # v's chosen neighbours, and the counts for already chosen neighbours
        for nbr in (nbr_e, nbr_l):
            mine = [w for w in nbr[v] if w in chosen]
            if len(mine) > 1:
                return False
            for w in mine:
                if sum(1 for u in nbr[w] if u in chosen) > 0:
                    return False
        return True

    def complete(v, i) -> bool:
        # a vertex decided before position i needs exactly one chosen neighbour
        for nbr in (nbr_e, nbr_l):
            cnt = sum(1 for w in nbr[v] if w in chosen)
            if cnt == 0 and all(pos.get(w, -1) < i for w in nbr[v]):
                return False
        return True

    def search(i: int) -> bool:
        if i == n:
            return bool(chosen) and all(
                sum(1 for w in nbr[v] if w in chosen) == 1
                for v in chosen for nbr in (nbr_e, nbr_l))
        for v in chosen:
            if not complete(v, i):
                return False
        v = cand[i]
        if ok_partial(v, i):
            chosen.add(v)
            if search(i + 1):
                return True
            chosen.discard(v)
        return search(i + 1)

    return frozenset(chosen) if search(0) else None


def bimatching_exists_bruteforce(c: UGraph, size_cap: int = 14) -> frozenset | None:
    """An induced bimatching of a linked fograph, by exhaustive search."""
    if len(c) > size_cap:
        raise TooLarge(f"{len(c)} vertices exceed the cap of {size_cap}")
    a = analyse(c)
    if a.dualizer is None:
        raise NoDualizer(str(a.failure))
    leaps = [tuple(l) for l in c.links()] + [tuple(d) for d in a.dependencies]
    return find_bimatching(c.labels, c.edges, leaps)


# ---------------------------------------------------------------- traces


@dataclass(frozen=True)
class AxiomUnion:
    """Base case: an edgeless, binderless union of axioms."""

    graph: UGraph


@dataclass(frozen=True)
class StripUniversal:
    binder: Hashable
    var: str
    child: "Step"


@dataclass(frozen=True)
class Fusion:
    """Split into two nets fused at ``portion_left`` and ``portion_right``."""

    bridge: tuple
    portion_left: frozenset
    portion_right: frozenset
    left: "Step"
    right: "Step"


@dataclass(frozen=True)
class StripExistential:
    binder: Hashable
    var: str
    term: Term
    occurrences: tuple
    portion: frozenset
    child: "Step"


Step = AxiomUnion | StripUniversal | Fusion | StripExistential


def trace_size(s: Step) -> int:
    if isinstance(s, AxiomUnion):
        return 1
    if isinstance(s, Fusion):
        return 1 + trace_size(s.left) + trace_size(s.right)
    return 1 + trace_size(s.child)


def replay(s: Step) -> Fograph:
    """Rebuild the net described by a trace using the graph constructors."""
    if isinstance(s, AxiomUnion):
        g = s.graph
        return Fograph(g.labels, g.edges, g.colour)
    if isinstance(s, StripUniversal):
        return univ_quant(replay(s.child), s.var, s.binder)
    if isinstance(s, StripExistential):
        return exist_quant(replay(s.child), s.var, s.occurrences, s.portion, s.binder)
    return fusion(replay(s.left), replay(s.right), s.portion_left, s.portion_right)


@dataclass
class FonetReport(CheckReport):
    """Verdict of :func:`verify_fonet`; ``trace`` is set on acceptance."""

    trace: Step | None = None
    rectified: UGraph | None = None


class _Reject(Exception):
    def __init__(self, condition: str, witness=None, detail: str = ""):
        super().__init__(condition)
        self.condition = condition
        self.witness = witness
        self.detail = detail


def verify_fonet(c: UGraph) -> FonetReport:
    """Accept exactly the fonets, returning a replayable decomposition trace."""
    rep = FonetReport()
    rep.extend(check_linked(c))
    if not rep.ok:
        return rep
    rep.extend(check_fograph(c))
    if not rep.ok:
        return rep
    g = rectify_fograph(c)
    rep.rectified = g
    try:
        trace = _decompose(g)
    except _Reject as r:
        rep.fail(r.condition, r.witness, r.detail)
        return rep
    rebuilt = replay(trace)
    if rebuilt != Fograph(g.labels, g.edges, g.colour):
        rep.fail("replay-mismatch", None, "decomposition does not rebuild the net")
        return rep
    rep.trace = trace
    return rep


def _sorted_pair(a, b) -> tuple:
    return tuple(sorted((a, b), key=vkey))


def _decompose(h: UGraph) -> Step:
    a = analyse(h, rectified=True)
    if a.dualizer is None:
        raise _Reject("no-dualizer", None, str(a.failure))
    leaps = {frozenset(l) for l in h.links()} | a.dependencies
    clash = [l for l in leaps if l in h.edges]
    if clash:
        raise _Reject("bimatching", frozenset(min(clash, key=_pair_key)),
                      "a leap coincides with an edge")
    bs = binders(h)
    isolated = [b for b in bs if not h.adj[b]]
    if isolated:
        b = isolated[0]
        return StripUniversal(b, h.labels[b].var, _decompose(h.without([b])))
    if not h.edges:
        if bs:
            raise _Reject("binder-without-literal", bs[0])
        for link in h.links():
            u, w = sorted(link, key=vkey)
            lu, lw = h.labels[u], h.labels[w]
            if lu.pred.dual != lw.pred or lu.args != lw.args:
                raise _Reject("link-not-dual", (u, w))
        return AxiomUnion(h)
    return _split(h, a, leaps)


def _split(h: UGraph, a, leaps: set[frozenset]) -> Step:
    theta: list = []
    blocks: list[frozenset] = []
    for comp in components(h):
        if len(comp) == 1:
            theta.append(next(iter(comp)))
            continue
        parts = co_components(h, comp)
        lone = [p for p in parts if len(p) == 1
                and isinstance(h.labels[next(iter(p))], Binder)]
        first = lone[0] if lone else parts[0]
        blocks.append(first)
        blocks.append(frozenset(comp - first))
    block_of = {v: i for i, blk in enumerate(blocks) for v in blk}
    zpairs = [(i, i + 1) for i in range(0, len(blocks), 2)]
    arcs = list(zpairs)
    cross: dict[tuple, frozenset] = {}
    for l in leaps:
        u, w = tuple(l)
        if u in block_of and w in block_of and block_of[u] != block_of[w]:
            key = tuple(sorted((block_of[u], block_of[w])))
            if key not in cross:
                arcs.append(key)
                cross[key] = l
            elif _pair_key(l) < _pair_key(cross[key]):
                cross[key] = l
    bridges = _bridges(len(blocks), arcs)
    chosen = next((k for k in range(len(zpairs)) if k in bridges), None)
    if chosen is None:
        mega = nx.MultiGraph()
        mega.add_nodes_from(range(len(blocks)))
        mega.add_edges_from(arcs)
        raise _Reject("no-bridge", _alternative_factor(nx.Graph(mega), zpairs, cross),
                      "every join pairing edge lies on a cycle of edges and leaps")
    i, j = zpairs[chosen]
    G, Gp = blocks[i], blocks[j]
    side_x = _reach(len(blocks), arcs, i, skip=chosen)
    lit = lambda S: any(not isinstance(h.labels[v], Binder) for v in S)
    if lit(G) and lit(Gp):
        X = set().union(*(blocks[k] for k in side_x))
        for v in theta:
            m = h.mate(v)
            if m is not None and m in X:
                X.add(v)
        Y = set(h.labels) - X
        left = h.induced(X)
        right = h.induced(Y)
        return Fusion((min(G, key=vkey), min(Gp, key=vkey)), G, Gp,
                      _decompose(left), _decompose(right))
    lone_blk, other = (G, Gp) if not lit(G) else (Gp, G)
    if len(lone_blk) != 1 or not lit(other):
        raise _Reject("binder-without-literal", min(lone_blk, key=vkey))
    (x,) = tuple(lone_blk)
    for l in a.dependencies:
        if x in l:
            raise _Reject("existential-dependency", tuple(sorted(l, key=vkey)),
                          "an existential binder across the split has a dependency")
    var = h.labels[x].var
    t = a.dualizer[var]
    rest = h.without([x])
    labels = {}
    occs = []
    for v in rest.vertices:
        lab = rest.labels[v]
        if isinstance(lab, Literal) and any(var in term_vars(arg) for arg in lab.args):
            for pos in _positions(lab.args, var):
                occs.append((v, pos))
            labels[v] = Literal(lab.pred, tuple(subst_term(arg, {var: t}) for arg in lab.args))
    rest = rest.relabel(labels)
    return StripExistential(x, var, t, tuple(occs), frozenset(other),
                            _decompose(rest))


def _pair_key(l: frozenset) -> list:
    return sorted(map(vkey, l))


def _adjacency(n: int, arcs: list[tuple]) -> list[list[tuple]]:
    adj: list[list[tuple]] = [[] for _ in range(n)]
    for k, (u, w) in enumerate(arcs):
        adj[u].append((w, k))
        adj[w].append((u, k))
    return adj


def _bridges(n: int, arcs: list[tuple]) -> set[int]:
    """Indices of the bridges of a multigraph on ``range(n)``, by iterative low-link DFS."""
    adj = _adjacency(n, arcs)
    order = [-1] * n
    low = [0] * n
    out: set[int] = set()
    t = 0
    for root in range(n):
        if order[root] >= 0:
            continue
        order[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            for w, k in it:
                if k == via:
                    continue
                if order[w] < 0:
                    order[w] = low[w] = t
                    t += 1
                    stack.append((w, k, iter(adj[w])))
                    break
                low[v] = min(low[v], order[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > order[u]:
                        out.add(via)
    return out


def _reach(n: int, arcs: list[tuple], start: int, skip: int) -> set[int]:
    """Vertices reachable from ``start`` without using arc ``skip``."""
    adj = _adjacency(n, arcs)
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w, k in adj[v]:
            if k != skip and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def _positions(args: tuple, var: str) -> list[tuple]:
    out = []

    def go(t: Term, pos: tuple) -> None:
        if isinstance(t, Var):
            if t.name == var:
                out.append(pos)
        else:
            for k, s in enumerate(t.args):
                go(s, pos + (k,))

    for i, t in enumerate(args):
        go(t, (i,))
    return out


def _alternative_factor(mega: nx.Graph, zpairs: list, cross: Mapping) -> dict:
    """A second perfect matching of the block graph and the leaps realizing it."""
    need = len(zpairs)
    for z in zpairs:
        trial = mega.copy()
        trial.remove_edge(*z)
        m = nx.max_weight_matching(trial, maxcardinality=True)
        if len(m) == need:
            pairs = sorted(tuple(sorted(e)) for e in m)
            leaps = [tuple(sorted(cross[p], key=vkey)) for p in pairs if p in cross]
            return {"blocks": pairs, "leaps": leaps}
    return {"blocks": [], "leaps": []}
