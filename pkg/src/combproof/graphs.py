"""Labelled undirected graphs, cographs and cotrees.

>>> g = UGraph({"a": None, "b": None, "c": None}, [("a", "b")])
>>> t = cotree_of(g)
>>> t.op, len(t.children)
(<Op.UNION: 'union'>, 2)
>>> cograph_of(t) == g
True
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Hashable, Iterable, Mapping

__all__ = [
    "UGraph", "DGraph", "Op", "Leaf", "Node", "Cotree", "NotACograph",
    "GraphError", "vkey", "union", "join", "is_cograph", "find_p4",
    "cotree_of", "cograph_of", "absorb", "meet", "induced_cotree",
    "strong_modules", "leaves", "components", "co_components",
    "canonical_key", "same_graph", "CotreeIndex",
]


def vkey(v: Hashable):
    """Sort key that orders vertex ids of one kind naturally."""
    return (type(v).__name__, v)


class GraphError(ValueError):
    pass


class UGraph:
    """Undirected graph with a label per vertex and an optional colouring.

    ``colour`` maps some vertices to colour names; each colour class is a set
    of vertices (a link, for fographs).
    """

    def __init__(self, labels: Mapping[Hashable, Any],
                 edges: Iterable[Iterable[Hashable]] = (),
                 colour: Mapping[Hashable, Hashable] | None = None):
        self.labels = dict(labels)
        adj: dict[Hashable, set] = {v: set() for v in self.labels}
        es = set()
        for e in edges:
            u, w = tuple(e)
            if u == w:
                raise GraphError(f"self-loop at {u!r}")
            if u not in adj or w not in adj:
                raise GraphError(f"edge {u!r}-{w!r} references an unknown vertex")
            es.add(frozenset((u, w)))
            adj[u].add(w)
            adj[w].add(u)
        self.edges = frozenset(es)
        self.adj = {v: frozenset(n) for v, n in adj.items()}
        self.colour = dict(colour or {})
        unknown = set(self.colour) - set(self.labels)
        if unknown:
            raise GraphError(f"colour on unknown vertices {sorted(unknown, key=vkey)!r}")
        self._cache: dict[str, Any] = {}

    def _make(self, labels, edges, colour) -> "UGraph":
        return type(self)(labels, edges, colour)

    @property
    def vertices(self) -> list:
        return sorted(self.labels, key=vkey)

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, v) -> bool:
        return v in self.labels

    def has_edge(self, u, w) -> bool:
        return w in self.adj.get(u, ())

    def neighbours(self, v) -> frozenset:
        return self.adj[v]

    def colour_classes(self) -> dict[Hashable, frozenset]:
        classes: dict[Hashable, set] = {}
        for v, c in self.colour.items():
            classes.setdefault(c, set()).add(v)
        return {c: frozenset(vs) for c, vs in classes.items()}

    def links(self) -> list[frozenset]:
        """Colour classes, ordered by their least vertex."""
        return sorted(self.colour_classes().values(),
                      key=lambda s: sorted(map(vkey, s)))

    def mate(self, v):
        """The other vertex in ``v``'s colour class of size two, or None."""
        c = self.colour.get(v)
        if c is None:
            return None
        cls = [w for w, d in self.colour.items() if d == c and w != v]
        return cls[0] if len(cls) == 1 else None

    def induced(self, W: Iterable[Hashable]) -> "UGraph":
        W = set(W)
        missing = W - set(self.labels)
        if missing:
            raise GraphError(f"unknown vertices {sorted(missing, key=vkey)!r}")
        return self._make({v: self.labels[v] for v in W},
                          [e for e in self.edges if e <= W],
                          {v: c for v, c in self.colour.items() if v in W})

    def without(self, W: Iterable[Hashable]) -> "UGraph":
        return self.induced(set(self.labels) - set(W))

    def relabel(self, labels: Mapping[Hashable, Any]) -> "UGraph":
        """Same graph with some vertex labels replaced."""
        new = dict(self.labels)
        new.update(labels)
        return self._make(new, self.edges, self.colour)

    def rename(self, f: Mapping[Hashable, Hashable]) -> "UGraph":
        """Rename vertex ids; ids absent from ``f`` keep their name."""
        g = lambda v: f.get(v, v)
        labels = {g(v): l for v, l in self.labels.items()}
        if len(labels) != len(self.labels):
            raise GraphError("renaming identifies vertices")
        return self._make(labels, [[g(u) for u in e] for e in self.edges],
                          {g(v): c for v, c in self.colour.items()})

    def with_edges(self, extra: Iterable[Iterable[Hashable]]) -> "UGraph":
        return self._make(self.labels, list(self.edges) + [tuple(e) for e in extra],
                          self.colour)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UGraph):
            return NotImplemented
        return (self.labels == other.labels and self.edges == other.edges
                and _partition(self.colour) == _partition(other.colour))

    __hash__ = None  # mutable cache, compare by value only

    def __repr__(self) -> str:
        return (f"{type(self).__name__}({len(self.labels)} vertices, "
                f"{len(self.edges)} edges, {len(self.colour_classes())} colours)")


def _partition(colour: Mapping) -> frozenset:
    classes: dict = {}
    for v, c in colour.items():
        classes.setdefault(c, set()).add(v)
    return frozenset(frozenset(s) for s in classes.values())


@dataclass(frozen=True)
class DGraph:
    """Directed graph as a vertex set and a set of arcs."""

    vertices: frozenset
    arcs: frozenset

    def __post_init__(self) -> None:
        for a, b in self.arcs:
            if a not in self.vertices or b not in self.vertices:
                raise GraphError(f"arc {a!r}->{b!r} references an unknown vertex")

    def incoming(self, v) -> set:
        return {a for a, b in self.arcs if b == v}

    def outgoing(self, v) -> set:
        return {b for a, b in self.arcs if a == v}


def _combine(g: UGraph, h: UGraph, cross: bool) -> UGraph:
    clash = set(g.labels) & set(h.labels)
    if clash:
        raise GraphError(f"vertex ids collide: {sorted(clash, key=vkey)!r}")
    cclash = set(g.colour.values()) & set(h.colour.values())
    if cclash:
        raise GraphError(f"colour names collide: {sorted(cclash, key=str)!r}")
    edges = list(g.edges) + list(h.edges)
    if cross:
        edges += [(u, w) for u in g.labels for w in h.labels]
    return g._make({**g.labels, **h.labels}, edges, {**g.colour, **h.colour})


def union(g: UGraph, h: UGraph) -> UGraph:
    """Disjoint union."""
    return _combine(g, h, cross=False)


def join(g: UGraph, h: UGraph) -> UGraph:
    """Disjoint union plus every edge between the two parts."""
    return _combine(g, h, cross=True)


# ---------------------------------------------------------------- cotrees


class Op(Enum):
    UNION = "union"
    JOIN = "join"

    @property
    def other(self) -> "Op":
        return Op.JOIN if self is Op.UNION else Op.UNION

    def __str__(self) -> str:
        return "U" if self is Op.UNION else "J"


@dataclass(frozen=True, eq=False)
class Leaf:
    vertex: Hashable

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Leaf) and other.vertex == self.vertex

    def __hash__(self) -> int:
        return hash(("leaf", self.vertex))


@dataclass(frozen=True, eq=False)
class Node:
    op: Op
    children: tuple

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Node) and other.op is self.op
                and other.children == self.children)

    def __hash__(self) -> int:
        return hash((self.op, len(self.children)))


Cotree = Leaf | Node


class NotACograph(GraphError):
    """Raised with an induced path ``a-b-c-d`` as witness."""

    def __init__(self, witness: tuple):
        super().__init__(f"not a cograph: induced P4 {witness!r}")
        self.witness = witness


def components(g: UGraph, S: Iterable[Hashable] | None = None) -> list[frozenset]:
    """Connected components of the subgraph induced by ``S``."""
    S = set(g.labels) if S is None else set(S)
    out = []
    unseen = set(S)
    for v in sorted(S, key=vkey):
        if v not in unseen:
            continue
        unseen.discard(v)
        comp = [v]
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in unseen:
                    unseen.discard(w)
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def co_components(g: UGraph, S: Iterable[Hashable] | None = None) -> list[frozenset]:
    """Connected components of the complement of the subgraph induced by ``S``."""
    S = set(g.labels) if S is None else set(S)
    out = []
    unseen = set(S)
    for v in sorted(S, key=vkey):
        if v not in unseen:
            continue
        unseen.discard(v)
        comp = [v]
        stack = [v]
        while stack:
            u = stack.pop()
            far = unseen - g.adj[u]
            if far:
                unseen &= g.adj[u]
                comp.extend(far)
                stack.extend(far)
        out.append(frozenset(comp))
    return out


def find_p4(g: UGraph, S: Iterable[Hashable] | None = None) -> tuple | None:
    """An induced path on four vertices inside ``S``, or None."""
    S = set(g.labels) if S is None else set(S)
    for e in sorted(g.edges, key=lambda e: sorted(map(vkey, e))):
        if not e <= S:
            continue
        for b, c in (tuple(sorted(e, key=vkey)), tuple(sorted(e, key=vkey))[::-1]):
            A = (g.adj[b] & S) - g.adj[c] - {c}
            D = (g.adj[c] & S) - g.adj[b] - {b}
            for a in sorted(A, key=vkey):
                for d in sorted(D - g.adj[a] - {a}, key=vkey):
                    return (a, b, c, d)
    return None


def cotree_of(g: UGraph) -> Cotree:
    """The unique branching alternating cotree of a non-empty cograph.

    Children are ordered by their least vertex id.
    """
    cached = g._cache.get("cotree")
    if cached is not None:
        return cached
    if not g.labels:
        raise GraphError("the empty graph has no cotree")

    def build(S: frozenset, forbid: Op | None) -> Cotree:
        if len(S) == 1:
            return Leaf(next(iter(S)))
        if forbid is not Op.UNION:
            parts = components(g, S)
            if len(parts) > 1:
                return Node(Op.UNION, tuple(build(p, Op.UNION) for p in parts))
        if forbid is not Op.JOIN:
            parts = co_components(g, S)
            if len(parts) > 1:
                return Node(Op.JOIN, tuple(build(p, Op.JOIN) for p in parts))
        raise NotACograph(find_p4(g, S))

    t = build(frozenset(g.labels), None)
    g._cache["cotree"] = t
    return t


def is_cograph(g: UGraph) -> bool:
    if not g.labels:
        return True
    try:
        cotree_of(g)
    except NotACograph:
        return False
    return True


def leaves(t: Cotree) -> list:
    out = []
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Leaf):
            out.append(s.vertex)
        else:
            stack.extend(reversed(s.children))
    return out


def cograph_of(t: Cotree, labels: Mapping | None = None) -> UGraph:
    """Graph of a union/join tree; labels default to None."""
    edges = []

    def go(s: Cotree) -> list:
        if isinstance(s, Leaf):
            return [s.vertex]
        blocks = [go(c) for c in s.children]
        if s.op is Op.JOIN:
            for i, j in combinations(range(len(blocks)), 2):
                edges.extend((u, w) for u in blocks[i] for w in blocks[j])
        return [v for b in blocks for v in b]

    vs = go(t)
    if len(set(vs)) != len(vs):
        raise GraphError("a vertex labels two leaves")
    labels = labels or {}
    return UGraph({v: labels.get(v) for v in vs}, edges)


def absorb(t: Cotree) -> Cotree:
    """Merge unary nodes and same-tag parent/child pairs until alternating."""
    if isinstance(t, Leaf):
        return t
    flat: list = []
    for c in t.children:
        a = absorb(c)
        if isinstance(a, Node) and a.op is t.op:
            flat.extend(a.children)
        else:
            flat.append(a)
    if not flat:
        raise GraphError("node without children")
    if len(flat) == 1:
        return flat[0]
    return Node(t.op, tuple(flat))


def _prune(t: Cotree, W: set) -> Cotree | None:
    if isinstance(t, Leaf):
        return t if t.vertex in W else None
    kept = tuple(c for c in (_prune(c, W) for c in t.children) if c is not None)
    return Node(t.op, kept) if kept else None


def induced_cotree(t: Cotree, W: Iterable[Hashable]) -> Cotree:
    """Prune leaves outside ``W`` then absorb."""
    W = set(W)
    if not W:
        raise GraphError("empty vertex set")
    unknown = W - set(leaves(t))
    if unknown:
        raise GraphError(f"unknown leaves {sorted(unknown, key=vkey)!r}")
    return absorb(_prune(t, W))


class CotreeIndex:
    """Parent pointers and leaf sets of the nodes of one cotree."""

    def __init__(self, t: Cotree):
        self.root = t
        self.parent: dict[int, Node] = {}
        self.leafset: dict[int, frozenset] = {}
        self.leaf_node: dict[Hashable, Leaf] = {}
        self.nodes: list[Cotree] = []
        self._walk(t)

    def _walk(self, t: Cotree) -> frozenset:
        self.nodes.append(t)
        if isinstance(t, Leaf):
            self.leaf_node[t.vertex] = t
            s = frozenset((t.vertex,))
        else:
            acc: set = set()
            for c in t.children:
                self.parent[id(c)] = t
                acc |= self._walk(c)
            s = frozenset(acc)
        self.leafset[id(t)] = s
        return s

    def parent_of_vertex(self, v) -> Node | None:
        return self.parent.get(id(self.leaf_node[v]))

    def ancestors(self, v) -> list[Cotree]:
        out = [self.leaf_node[v]]
        while id(out[-1]) in self.parent:
            out.append(self.parent[id(out[-1])])
        return out


def meet(t: Cotree, v, w) -> tuple[Node, Op]:
    """Lowest common ancestor of two distinct leaves and its tag."""
    if v == w:
        raise GraphError("meet needs two distinct vertices")
    idx = CotreeIndex(t)
    for u in (v, w):
        if u not in idx.leaf_node:
            raise GraphError(f"unknown vertex {u!r}")
    above = {id(n) for n in idx.ancestors(v)}
    for n in idx.ancestors(w):
        if id(n) in above:
            return n, n.op
    raise GraphError("leaves in different trees")


def strong_modules(g: UGraph) -> set[frozenset]:
    """Leaf sets of the cotree nodes: the strong modules of a cograph."""
    idx = CotreeIndex(cotree_of(g))
    return set(idx.leafset.values())


def canonical_key(t: Cotree, labels: Mapping | None = None):
    """Fingerprint of a cotree that ignores vertex ids and child order."""
    labels = labels or {}
    if isinstance(t, Leaf):
        return ("v", repr(labels.get(t.vertex)))
    return (t.op.value, tuple(sorted(canonical_key(c, labels) for c in t.children)))


def same_graph(g: UGraph, h: UGraph) -> bool:
    """Equality of labelled cographs modulo vertex renaming (colours ignored)."""
    if len(g) != len(h) or len(g.edges) != len(h.edges):
        return False
    if not g.labels:
        return True
    return canonical_key(cotree_of(g), g.labels) == canonical_key(cotree_of(h), h.labels)
