"""
Monomial algebras K<X>/<Omega>: normal words, the Ufnarovski graph, cyclic
normal words and the semi-primeness decision.

Graph vertices are the normal words of length ell - 1, where ell is the
longest obstruction.  A vertex ``v`` has an edge to ``w`` when ``v*x_k`` is
normal and equals ``x_t*w``.  Lengths here are word lengths, never
weighted degrees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import networkx as nx

from .freealg import Alphabet, Word, divides


@dataclass(frozen=True)
class ObstructionSet:
    """A reduced finite set of words of length at least 2."""

    words: tuple[Word, ...]
    alphabet: Alphabet

    def __post_init__(self):
        words = tuple(sorted(set(tuple(w) for w in self.words), key=lambda w: (len(w), w)))
        object.__setattr__(self, "words", words)
        n = len(self.alphabet)
        for w in words:
            if any(not 0 <= i < n for i in w):
                raise ValueError(f"word {w} is not over the alphabet")
            if len(w) == 0:
                raise ValueError("1 cannot be an obstruction")
            if len(w) == 1:
                raise ValueError(f"single letter {self.alphabet.format_word(w)} cannot be an obstruction")
        for v in words:
            for u in words:
                if u != v and divides(v, u) is not None:
                    raise ValueError(
                        f"obstruction set is not reduced: {self.alphabet.format_word(v)} "
                        f"divides {self.alphabet.format_word(u)}")

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def is_normal(self, w: Word) -> bool:
        return all(divides(u, w) is None for u in self.words)

    def ends_normally(self, w: Word) -> bool:
        """No obstruction is a suffix of ``w``."""
        return not any(len(u) <= len(w) and w[len(w) - len(u):] == u for u in self.words)


def normal_words(om: ObstructionSet, max_length: int) -> list[Word]:
    """Normal words of length at most ``max_length``, shortest first, then
    lexicographically by letter index.  Includes the empty word."""
    out: list[Word] = [()]
    layer: list[Word] = [()]
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for k in range(len(om.alphabet)):
                u = w + (k,)
                # w is normal, so any new factor from om is a suffix of u
                if om.ends_normally(u):
                    nxt.append(u)
        out.extend(nxt)
        layer = nxt
    return out


def ell(om: ObstructionSet) -> int:
    if not om.words:
        raise ValueError("free algebra; Ufnarovski graph undefined")
    return max(len(u) for u in om.words)


############################################################################
# the Ufnarovski graph
############################################################################
@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    appended: int  # x_k in v_i*x_k
    dropped: int   # x_t in x_t*v_j


class UfGraph:
    def __init__(self, om: ObstructionSet):
        self.obstructions = om
        self.ell = ell(om)
        self.vertices: tuple[Word, ...] = tuple(w for w in normal_words(om, self.ell - 1)
                                                if len(w) == self.ell - 1)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        edges = []
        for i, v in enumerate(self.vertices):
            for k in range(len(om.alphabet)):
                w = v + (k,)
                if om.ends_normally(w):
                    edges.append(Edge(i, self.index[w[1:]], k, w[0]))
        self.edges: tuple[Edge, ...] = tuple(edges)

        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from((e.source, e.target) for e in self.edges)
        self.digraph = g
        self.scc_id = [0] * len(self.vertices)
        comps = sorted((sorted(c) for c in nx.strongly_connected_components(g)))
        for cid, comp in enumerate(comps):
            for v in comp:
                self.scc_id[v] = cid
        size = [len(c) for c in comps]
        self.cyclic = tuple(size[self.scc_id[v]] >= 2 or g.has_edge(v, v)
                            for v in range(len(self.vertices)))

    @property
    def alphabet(self) -> Alphabet:
        return self.obstructions.alphabet

    def successors(self, i: int) -> list[Edge]:
        return [e for e in self.edges if e.source == i]

    def cyclic_vertices(self) -> list[Word]:
        return [v for v, c in zip(self.vertices, self.cyclic) if c]

    def reachable(self, src: int, dst: int) -> bool:
        """Path of length >= 0 from ``src`` to ``dst``."""
        return src == dst or nx.has_path(self.digraph, src, dst)

    def path(self, src: int, dst: int, min_edges: int = 0) -> list[Edge] | None:
        """Shortest path of at least ``min_edges`` (0 or 1) edges, by BFS."""
        if min_edges == 0 and src == dst:
            return []
        start = [(e, [e]) for e in self.successors(src)]
        seen = set()
        queue = deque(start)
        while queue:
            e, trail = queue.popleft()
            if e.target == dst:
                return trail
            if e.target in seen:
                continue
            seen.add(e.target)
            for f in self.successors(e.target):
                queue.append((f, trail + [f]))
        return None


def build_graph(om: ObstructionSet) -> UfGraph:
    return UfGraph(om)


def route_of(u: Word, g: UfGraph) -> list[Word]:
    """Windows of length ell - 1 of a normal word ``u``."""
    span = g.ell - 1
    if len(u) < span:
        raise ValueError("word is shorter than the graph's vertices")
    if not g.obstructions.is_normal(u):
        raise ValueError("word is not normal")
    return [tuple(u[j:j + span]) for j in range(len(u) - span + 1)]


def route_word(route: Sequence[Word]) -> Word:
    """Inverse of :func:`route_of`."""
    return tuple(route[0]) + tuple(v[-1] for v in route[1:])


def is_route(route: Sequence[Word], g: UfGraph) -> bool:
    if any(v not in g.index for v in route):
        return False
    arcs = {(e.source, e.target, e.appended) for e in g.edges}
    return all((g.index[a], g.index[b], b[-1]) in arcs and a[1:] == b[:-1]
               for a, b in zip(route, route[1:]))


def is_cyclic_word(u: Word, g: UfGraph) -> bool:
    if not u:
        raise ValueError("the empty word is never cyclic")
    if not g.obstructions.is_normal(u):
        raise ValueError("word is not normal")
    span = g.ell - 1
    if len(u) <= span:
        n = len(u)
        return any(c and v[span - n:] == u for v, c in zip(g.vertices, g.cyclic))
    route = route_of(u, g)
    return g.reachable(g.index[route[-1]], g.index[route[0]])


def cyclic_witness(u: Word, g: UfGraph) -> Word | None:
    """A word ``v`` with every power of ``u*v`` normal, read off a closed
    walk through the route of ``u``; ``None`` when ``u`` is noncyclic."""
    span = g.ell - 1
    if len(u) <= span:
        for i, (vert, cyc) in enumerate(zip(g.vertices, g.cyclic)):
            if cyc and vert[span - len(u):] == u:
                cycle = g.path(i, i, min_edges=1)
                walk = tuple(vert) + tuple(e.appended for e in cycle)
                return _period_witness(walk, span - len(u), len(u), len(cycle))
        return None
    route = route_of(u, g)
    back = g.path(g.index[route[-1]], g.index[route[0]])
    if back is None:
        return None
    walk = tuple(u) + tuple(e.appended for e in back)
    return _period_witness(walk, 0, len(u), len(route) - 1 + len(back))


def _period_witness(walk: Word, offset: int, n: int, period: int) -> Word:
    # walk spells a closed walk, so it extends to an infinite word of this period
    reps = -(-n // period)
    need = offset + reps * period
    word = list(walk)
    while len(word) < need:
        word.append(word[len(word) - period])
    return tuple(word[offset + n: offset + reps * period])


############################################################################
# brute-force oracle
############################################################################
def _power_is_normal(om: ObstructionSet, uv: Word, ell_: int, qwindow: int) -> bool:
    # every factor of length <= ell of the periodic word shows up once
    # the power is at least len(uv) + ell long
    q = max(qwindow, 2, -(-(len(uv) + ell_) // len(uv)))
    return om.is_normal(uv * q)


def oracle_cyclic(u: Word, om: ObstructionSet, vbound: int | None = None,
                  qwindow: int = 2) -> bool:
    """Is there a word ``v`` with ``l(v) <= vbound`` such that all powers of
    ``u*v`` avoid the obstructions?  Searches words directly, without the
    graph.  Default ``vbound`` is ``ell * (number of normal words of length
    ell - 1)``."""
    if not u:
        raise ValueError("the empty word is never cyclic")
    if not om.words:
        return True
    top = ell(om)
    if vbound is None:
        vbound = top * sum(1 for w in normal_words(om, top - 1) if len(w) == top - 1)
    if not om.is_normal(u):
        return False
    letters = range(len(om.alphabet))
    stack = [tuple(u)]
    while stack:
        uv = stack.pop()
        if _power_is_normal(om, uv, top, qwindow):
            return True
        if len(uv) - len(u) < vbound:
            for k in letters:
                ext = uv + (k,)
                # uv*v' not normal means no power of it is
                if om.ends_normally(ext):
                    stack.append(ext)
    return False


def nilpotent_up_to(u: Word, om: ObstructionSet, vbound: int, qwindow: int) -> bool:
    """For every ``v`` with ``l(v) <= vbound`` some ``(u*v)^q`` with
    ``q <= qwindow`` has a factor in the obstruction set."""
    for n in range(vbound + 1):
        for v in product(range(len(om.alphabet)), repeat=n):
            uv = tuple(u) + v
            if all(om.is_normal(uv * q) for q in range(1, qwindow + 1)):
                return False
    return True


############################################################################
# semi-primeness
############################################################################
@dataclass
class RadicalReport:
    semiprime: bool
    noncyclic_witnesses: list[Word]
    ell: int | None = None
    checked: int = 0


def radical_report(om: ObstructionSet) -> RadicalReport:
    """Decide semi-primeness; noncyclic normal words of length 1..ell are
    returned as witnesses (their classes lie in the Jacobson radical)."""
    if not om.words:
        return RadicalReport(True, [], None, 0)
    g = build_graph(om)
    candidates = [w for w in normal_words(om, g.ell) if w]
    witnesses = [w for w in candidates if not is_cyclic_word(w, g)]
    return RadicalReport(not witnesses, witnesses, g.ell, len(candidates))


############################################################################
# DOT export
############################################################################
def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: UfGraph, name: str = "ufnarovski") -> str:
    """Graphviz digraph; cyclic vertices are drawn with a double circle and
    edges are labelled ``x_k/x_t`` for ``v*x_k == x_t*w``."""
    fmt = g.alphabet.format_word
    lines = [f"digraph {_quote(name)} {{", "  node [shape=circle];"]
    for v, cyc in zip(g.vertices, g.cyclic):
        attrs = ", shape=doublecircle" if cyc else ""
        lines.append(f"  {_quote(fmt(v))} [label={_quote(fmt(v))}{attrs}];")
    letters = g.alphabet.letters
    for e in sorted(g.edges, key=lambda e: (e.source, e.target, e.appended)):
        label = f"{letters[e.appended]}/{letters[e.dropped]}"
        lines.append(f"  {_quote(fmt(g.vertices[e.source]))} -> "
                     f"{_quote(fmt(g.vertices[e.target]))} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def obstruction_set(words: Iterable[Word], alphabet: Alphabet) -> ObstructionSet:
    return ObstructionSet(tuple(words), alphabet)
