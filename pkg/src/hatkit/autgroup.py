"""Automorphism groups, canonical forms and transitivity classification.

The engine is an individualization-refinement backtracking search.  The
refinement is the coarsest equitable refinement (every vertex of a cell
has the same number of neighbours in every cell); the target cell is the
first smallest non-singleton cell and its vertices are individualized in
increasing order.  Discovered automorphisms prune sibling branches whose
candidate lies in the orbit of an already explored candidate under the
subgroup fixing the current individualization prefix pointwise.  The
canonical certificate is the graph6 string of the relabeled graph that
minimizes the encoding over the leaves of the search tree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotAutomorphisms, TooLarge
from .graphs import Graph, is_regular, relabel
from .graph6 import write_graph6
from .perms import PermGroup, compose, identity, inverse, is_identity, schreier_sims

_MAX_VERTICES = 10_000

# ColoredPartition: ordered tuple of disjoint cells covering 0..n-1.
ColoredPartition = tuple


def unit_partition(g: Graph) -> ColoredPartition:
    return (tuple(range(g.n)),) if g.n else ()


def _check_partition(g, partition):
    seen = []
    for cell in partition:
        seen.extend(cell)
    if sorted(seen) != list(range(g.n)):
        raise ValueError("cells do not partition the vertex set")


def refine(g: Graph, partition) -> ColoredPartition:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by the multiset of (cell index, neighbour count) pairs of
    their vertices; split parts are ordered by ascending signature, so the
    result depends only on the isomorphism type of (g, partition).
    """
    _check_partition(g, partition)
    cells = [tuple(sorted(cell)) for cell in partition]
    while True:
        cell_id = [0] * g.n
        for i, cell in enumerate(cells):
            for v in cell:
                cell_id[v] = i
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups = {}
            for v in cell:
                sig = tuple(sorted(Counter(cell_id[w] for w in g.adj[v]).items()))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(tuple(groups[sig]))
        cells = new_cells
        if not changed:
            return tuple(cells)


def _individualize(partition, cell_index, v):
    cell = partition[cell_index]
    rest = tuple(w for w in cell if w != v)
    return partition[:cell_index] + ((v,), rest) + partition[cell_index + 1:]


def _target_cell(partition):
    best = None
    for i, cell in enumerate(partition):
        if len(cell) > 1 and (best is None or len(cell) < len(partition[best])):
            best = i
    return best


class _Search:
    """One full IR search over a graph: automorphism generators plus the
    minimum-encoding leaf."""

    def __init__(self, g):
        self.g = g
        self.aut_gens = []
        self._gen_set = set()
        self.leaves = {}          # encoding -> labeling of first leaf with it
        self.best_enc = None
        self.best_pi = None

    def run(self):
        if self.g.n == 0:
            self.best_pi = ()
            self.best_enc = write_graph6(self.g).encode("ascii")
            return self
        self._explore(refine(self.g, unit_partition(self.g)), ())
        return self

    def _explore(self, partition, prefix):
        cell_index = _target_cell(partition)
        if cell_index is None:
            self._leaf(partition)
            return
        cell = partition[cell_index]
        explored = []
        for v in cell:
            if explored and self._in_explored_orbit(v, explored, prefix):
                continue
            child = refine(self.g, _individualize(partition, cell_index, v))
            self._explore(child, prefix + (v,))
            explored.append(v)

    def _in_explored_orbit(self, v, explored, prefix):
        gens = [a for a in self.aut_gens if all(a[q] == q for q in prefix)]
        if not gens:
            return False
        seen = set(explored)
        queue = list(explored)
        while queue:
            x = queue.pop()
            for a in gens:
                y = a[x]
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return False

    def _leaf(self, partition):
        pi = [0] * self.g.n
        for pos, cell in enumerate(partition):
            pi[cell[0]] = pos
        pi = tuple(pi)
        enc = write_graph6(relabel(self.g, pi)).encode("ascii")
        other = self.leaves.get(enc)
        if other is None:
            self.leaves[enc] = pi
        else:
            aut = compose(pi, inverse(other))
            if not is_identity(aut) and aut not in self._gen_set:
                assert _is_automorphism(self.g, aut), "leaf pair gave a non-automorphism"
                self._gen_set.add(aut)
                self.aut_gens.append(aut)
        if self.best_enc is None or enc < self.best_enc:
            self.best_enc = enc
            self.best_pi = pi


def _is_automorphism(g, p):
    return all(p[v] in g.nbrs[p[u]] for u, v in g.edges)


@lru_cache(maxsize=512)
def _analysis(g: Graph):
    if g.n > _MAX_VERTICES:
        raise TooLarge(f"{g.n} vertices exceeds the {_MAX_VERTICES} vertex bound")
    search = _Search(g).run()
    group = schreier_sims(search.aut_gens, degree=g.n)
    for gen in group.generators:
        assert _is_automorphism(g, gen)
    return group, search.best_pi, search.best_enc


def automorphism_group(g: Graph) -> PermGroup:
    """The full automorphism group, with exact BSGS-certified order."""
    return _analysis(g)[0]


def canonical_form(g: Graph):
    """(canonically relabeled graph, certificate bytes).

    Certificates of two graphs coincide exactly when the graphs are
    isomorphic; the certificate is the graph6 encoding of the relabeled
    graph.
    """
    _, pi, enc = _analysis(g)
    return relabel(g, pi), enc


def is_isomorphic(g: Graph, h: Graph):
    """A vertex bijection g -> h when one exists, else None.

    The returned tuple maps each vertex of g to a vertex of h and is
    verified to carry edges to edges bijectively.
    """
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    if g == h:
        return identity(g.n)
    _, pi_g, enc_g = _analysis(g)
    _, pi_h, enc_h = _analysis(h)
    if enc_g != enc_h:
        return None
    mapping = compose(pi_g, inverse(pi_h))
    assert all(mapping[v] in h.nbrs[mapping[u]] for u, v in g.edges)
    return mapping


@dataclass
class TransitivityReport:
    """How a supplied group acts on a graph.

    half_arc_transitive means vertex- and edge- but not arc-transitive;
    the flags always satisfy two_arc => arc => edge.
    """

    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    two_arc_transitive: bool
    half_arc_transitive: bool
    arc_orbit_count: int

    def to_json_dict(self):
        return {
            "vertex_transitive": self.vertex_transitive,
            "edge_transitive": self.edge_transitive,
            "arc_transitive": self.arc_transitive,
            "two_arc_transitive": self.two_arc_transitive,
            "half_arc_transitive": self.half_arc_transitive,
            "arc_orbit_count": self.arc_orbit_count,
        }


def _require_automorphisms(group, g):
    if group.degree != g.n:
        raise NotAutomorphisms(
            f"group degree {group.degree} != vertex count {g.n}")
    for gen in group.generators:
        if not _is_automorphism(g, gen):
            raise NotAutomorphisms("generator does not preserve adjacency")


def _orbit_reps(items, gens, act):
    """Orbit partition of hashable items under permutation generators."""
    items = sorted(items)
    seen = set()
    orbits = []
    for item in items:
        if item in seen:
            continue
        orbit = {item}
        queue = [item]
        while queue:
            x = queue.pop()
            for s in gens:
                y = act(s, x)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def _all_arcs(g):
    return [(u, v) for u in range(g.n) for v in g.adj[u]]


def _all_two_arcs(g):
    out = []
    for v in range(g.n):
        for u in g.adj[v]:
            for w in g.adj[v]:
                if u != w:
                    out.append((u, v, w))
    return out


def transitivity_report(group: PermGroup, g: Graph) -> TransitivityReport:
    """Orbit-count classification of the action of a group on a graph.

    The group must consist of automorphisms of g.  Transitivity on each
    structure means at most one orbit; two-arc-transitivity additionally
    requires arc-transitivity so the implication chain holds even on
    degenerate graphs.
    """
    _require_automorphisms(group, g)
    gens = group.generators
    vertex_t = g.n <= 1 or len(group.orbit(0)) == g.n

    def act_edge(s, e):
        a, b = s[e[0]], s[e[1]]
        return (a, b) if a < b else (b, a)

    def act_arc(s, a):
        return (s[a[0]], s[a[1]])

    def act_two_arc(s, t):
        return (s[t[0]], s[t[1]], s[t[2]])

    edge_orbits = _orbit_reps(g.edges, gens, act_edge)
    arc_orbit_list = _orbit_reps(_all_arcs(g), gens, act_arc)
    two_arc_orbits = _orbit_reps(_all_two_arcs(g), gens, act_two_arc)

    edge_t = len(edge_orbits) <= 1
    arc_t = len(arc_orbit_list) <= 1
    two_arc_t = arc_t and len(two_arc_orbits) <= 1
    half_arc_t = vertex_t and edge_t and not arc_t

    if g.m and vertex_t and edge_t:
        k = g.degree(0)
        if k % 2 == 1 and is_regular(g, k):
            # vertex- and edge-transitive on odd valence forces arc-transitive
            assert arc_t, "odd-valence sanity check failed"

    return TransitivityReport(
        vertex_transitive=vertex_t,
        edge_transitive=edge_t,
        arc_transitive=arc_t,
        two_arc_transitive=two_arc_t,
        half_arc_transitive=half_arc_t,
        arc_orbit_count=len(arc_orbit_list),
    )


def arc_orbits(group: PermGroup, g: Graph):
    """Orbit partition of the 2|E| arcs under the group.

    For a half-arc-transitive action there are exactly two orbits and each
    is the reverse of the other; when two mutually transitive orbit checks
    apply this is verified.
    """
    _require_automorphisms(group, g)

    def act_arc(s, a):
        return (s[a[0]], s[a[1]])

    orbits = _orbit_reps(_all_arcs(g), group.generators, act_arc)
    if len(orbits) == 2:
        report = transitivity_report(group, g)
        if report.half_arc_transitive:
            reversed_first = {(b, a) for a, b in orbits[0]}
            assert reversed_first == set(orbits[1]), \
                "half-arc-transitive arc orbits are not mutual reverses"
    return orbits
