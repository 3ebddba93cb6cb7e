"""Graph maps: homomorphisms, fibrations, skew bifibrations and combinatorial proofs.

A combinatorial proof of a formula is a skew bifibration from a fonet onto
the graph of the formula.  Source labels may be omitted; they are then lifted
from the target through the map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping

from .fograph import (
    Binder, Fograph, Kind, binder_kind, bindings, binders, check_fograph,
    graph_of,
)
from .fonet import FonetReport, verify_fonet
from .graphs import DGraph, UGraph, find_p4, is_cograph, same_graph, vkey
from .report import CheckReport
from .syntax import Formula, And, Or, formula_of_sequent, negate

__all__ = [
    "CombProof", "is_homomorphism", "is_skew_fibration", "is_fibration",
    "is_fibration_directed", "is_skew_bifibration", "lift_labels",
    "verify_cp", "cut_formula", "verify_cut_cp", "compose",
]


@dataclass
class CombProof:
    """A candidate combinatorial proof ``map: source -> target``.

    ``source`` is a coloured graph whose labels may be None; ``formula`` is
    the proved formula when known.
    """

    source: UGraph
    target: UGraph
    map: dict
    formula: Formula | None = None

    def lifted(self) -> Fograph:
        return lift_labels(self.source, self.target, self.map)


def lift_labels(source: UGraph, target: UGraph, f: Mapping) -> Fograph:
    """Source with every missing label copied from the image vertex."""
    labels = {}
    for v, lab in source.labels.items():
        if lab is None and v in f and f[v] in target.labels:
            lab = target.labels[f[v]]
        labels[v] = lab
    return Fograph(labels, source.edges, source.colour)


def _sorted(xs):
    return sorted(xs, key=vkey)


def _check_total(f: Mapping, g: UGraph, h: UGraph, rep: CheckReport) -> bool:
    ok = True
    for v in g.vertices:
        if v not in f:
            rep.fail("map-not-total", v)
            ok = False
        elif f[v] not in h.labels:
            rep.fail("map-unknown-target", (v, f[v]))
            ok = False
    return ok


def is_homomorphism(f: Mapping, g: UGraph, h: UGraph) -> CheckReport:
    """Every edge ``vw`` of ``g`` maps to an edge ``f(v)f(w)`` of ``h``."""
    rep = CheckReport()
    if not _check_total(f, g, h, rep):
        return rep
    for e in sorted(g.edges, key=lambda e: _sorted(e)):
        u, w = _sorted(e)
        if not h.has_edge(f[u], f[w]):
            rep.fail("not-homomorphism", (u, w))
    return rep


def is_skew_fibration(f: Mapping, g: UGraph, h: UGraph) -> CheckReport:
    """Homomorphism such that each target edge ``f(v)w`` has a source neighbour of ``v`` off ``w``.

    For every ``v`` and every neighbour ``w`` of ``f(v)`` there must be a
    neighbour ``u`` of ``v`` with ``f(u)`` not adjacent to ``w``.
    """
    rep = is_homomorphism(f, g, h)
    if not rep.ok:
        return rep
    for v in g.vertices:
        for w in _sorted(h.adj[f[v]]):
            if not any(not h.has_edge(f[u], w) for u in g.adj[v]):
                rep.fail("skew-lifting", (v, w))
    return rep


def is_fibration(f: Mapping, g: UGraph, h: UGraph) -> CheckReport:
    """Undirected fibration: every target edge at ``f(v)`` lifts to a unique edge at ``v``."""
    rep = is_homomorphism(f, g, h)
    if not rep.ok:
        return rep
    for v in g.vertices:
        for w in _sorted(h.adj[f[v]]):
            lifts = [u for u in g.adj[v] if f[u] == w]
            if len(lifts) != 1:
                rep.fail("lifting", (v, w))
    return rep


def is_fibration_directed(f: Mapping, g: DGraph, h: DGraph) -> CheckReport:
    """Directed homomorphism where each arc into ``f(v)`` lifts to a unique arc into ``v``."""
    rep = CheckReport()
    for v in _sorted(g.vertices):
        if v not in f or f[v] not in h.vertices:
            rep.fail("map-not-total", v)
    if not rep.ok:
        return rep
    for a, b in sorted(g.arcs, key=lambda a: (vkey(a[0]), vkey(a[1]))):
        if (f[a], f[b]) not in h.arcs:
            rep.fail("not-directed-homomorphism", (a, b))
    into_h: dict = {}
    for a, b in h.arcs:
        into_h.setdefault(b, set()).add(a)
    into_g: dict = {}
    for a, b in g.arcs:
        into_g.setdefault(b, set()).add(a)
    for v in _sorted(g.vertices):
        for w in _sorted(into_h.get(f[v], ())):
            lifts = [u for u in into_g.get(v, ()) if f[u] == w]
            if not lifts:
                rep.fail("binding-lift-missing", (v, w))
            elif len(lifts) > 1:
                rep.fail("binding-lift-not-unique", (v, w, tuple(_sorted(lifts))))
    return rep


def is_skew_bifibration(f: Mapping, src: UGraph, tgt: UGraph) -> CheckReport:
    """Label- and existential-preserving skew fibration that is a fibration of binding graphs."""
    rep = CheckReport()
    if not _check_total(f, src, tgt, rep):
        return rep
    for v in src.vertices:
        if src.labels[v] != tgt.labels[f[v]]:
            rep.fail("label-preservation", (v, f[v]))
    rep.extend(is_skew_fibration(f, src, tgt))
    if not is_cograph(src):
        # binder kinds and bindings are undefined without a cotree
        rep.fail("source-not-cograph", find_p4(src))
        return rep
    for b in binders(src):
        if binder_kind(src, b) is Kind.EXISTENTIAL:
            img = f[b]
            if not (isinstance(tgt.labels[img], Binder)
                    and binder_kind(tgt, img) is Kind.EXISTENTIAL):
                rep.fail("existential-preservation", (b, img))
    rep.extend(is_fibration_directed(
        f, DGraph(frozenset(src.labels), bindings(src)),
        DGraph(frozenset(tgt.labels), bindings(tgt))))
    return rep


def verify_cp(cp: CombProof) -> CheckReport:
    """All conditions of a combinatorial proof; every failure is reported."""
    rep = CheckReport()
    src = cp.lifted()
    tgt = cp.target if isinstance(cp.target, Fograph) else Fograph(
        cp.target.labels, cp.target.edges, cp.target.colour)
    total = _check_total(cp.map, src, tgt, rep)
    for v in src.vertices:
        if src.labels[v] is None:
            rep.fail("unlabelled-source-vertex", v)
    t_rep = check_fograph(tgt)
    rep.extend(t_rep, "target:")
    if cp.formula is not None:
        expected = graph_of(cp.formula)
        if not (t_rep.ok and same_graph(expected, tgt)):
            rep.fail("target-not-graph-of-formula")
    if not total or not t_rep.ok or any(l is None for l in src.labels.values()):
        return rep
    net = verify_fonet(src)
    rep.extend(net, "fonet:")
    rep.extend(is_skew_bifibration(cp.map, src, tgt))
    return rep


def cut_formula(f: Formula, cuts: list[Formula]) -> Formula:
    """``f or (B1 and not B1) or ...`` nested to the right."""
    return formula_of_sequent([f] + [And(b, negate(b)) for b in cuts])


def verify_cut_cp(f: Formula, cuts: list[Formula], cp: CombProof) -> CheckReport:
    """Check ``cp`` as a combinatorial proof of ``f`` with the given cuts."""
    target_formula = cut_formula(f, list(cuts))
    return verify_cp(CombProof(cp.source, cp.target, cp.map, target_formula))


def compose(f: Mapping, g: Mapping) -> dict:
    """``g`` after ``f``."""
    return {v: g[w] for v, w in f.items()}
