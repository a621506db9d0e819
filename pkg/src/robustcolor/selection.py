"""1-selections and 1-selection sets: recognition, assignment, enumeration.

An edge set is a 1-selection set exactly when every component of the subgraph
it induces has at most one cycle; the constructive direction orients each
component's edges away from a root (or circularly around its unique cycle) and
assigns every vertex its incoming edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError
from .graph import Graph, is_bipartite


@dataclass(frozen=True)
class SelectionSet:
    """Edge ids claimed to form a 1-selection set, with optional assignment.

    The assignment maps every vertex to an incident edge id or None; its image
    must equal ``edges`` and no edge may be assigned twice.
    """

    edges: frozenset
    assignment: dict | None = None

    def validate(self, g: Graph):
        for e in self.edges:
            if not 0 <= e < g.m:
                raise ContractError(f"invalid edge id {e}")
        if not is_selection_set(g, self.edges):
            raise ContractError("edge set has a component with two cycles")
        if self.assignment is not None:
            if set(self.assignment) != set(range(g.n)):
                raise ContractError("assignment must cover every vertex")
            used = set()
            for v, e in self.assignment.items():
                if e is None:
                    continue
                if v not in g.endpoints(e):
                    raise ContractError(f"edge {e} assigned to non-endpoint {v}")
                if e in used:
                    raise ContractError(f"edge {e} assigned to two vertices")
                used.add(e)
            if used != set(self.edges):
                raise ContractError("assignment image differs from edge set")
        return True

    def to_json_list(self):
        return sorted(self.edges)


@dataclass(frozen=True)
class RemovedGraph:
    """host minus the selection's edges; the vertex set is unchanged."""

    host: Graph
    removed: SelectionSet
    result: Graph


@dataclass(frozen=True)
class InducedSubgraph:
    """Edge-induced subgraph relabelled to dense ids, with original labels."""

    graph: Graph
    vertices: tuple  # original vertex ids, sorted; graph vertex i = vertices[i]


def induced_by_edges(g: Graph, edge_ids) -> InducedSubgraph:
    """Subgraph on the endpoints of the given edges, with exactly those edges."""
    s = set(edge_ids)
    for e in s:
        if not 0 <= e < g.m:
            raise ContractError(f"invalid edge id {e}")
    verts = sorted({v for e in s for v in g.endpoints(e)})
    index = {v: i for i, v in enumerate(verts)}
    pairs = [tuple(index[v] for v in g.endpoints(e)) for e in sorted(s)]
    return InducedSubgraph(Graph(len(verts), pairs), tuple(verts))


class _UnionFindCycles:
    """Union-find over vertices tracking cycle counts per component."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n
        self.cycles = [0] * n

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def can_add(self, u, v):
        """Would adding edge (u,v) keep every component at <= 1 cycle?"""
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return self.cycles[ru] == 0
        return self.cycles[ru] + self.cycles[rv] <= 1

    def add(self, u, v):
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            self.cycles[ru] += 1
            return ("cycle", ru)
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.size[ru] += self.size[rv]
        self.cycles[ru] += self.cycles[rv]
        return ("union", ru, rv)

    def undo(self, op):
        if op[0] == "cycle":
            self.cycles[op[1]] -= 1
        else:
            _, ru, rv = op
            self.parent[rv] = rv
            self.size[ru] -= self.size[rv]
            self.cycles[ru] -= self.cycles[rv]


def is_selection_set(g: Graph, edge_ids) -> bool:
    """True iff every component induced by the edges has at most one cycle."""
    uf = _UnionFindCycles(g.n)
    for e in edge_ids:
        if not 0 <= e < g.m:
            raise ContractError(f"invalid edge id {e}")
        u, v = g.endpoints(e)
        if not uf.can_add(u, v):
            return False
        uf.add(u, v)
    return True


def build_assignment(g: Graph, edge_ids):
    """Realize a selection set as a per-vertex assignment (vertex -> edge id).

    Tree components: edges are directed away from the smallest vertex, which
    stays unassigned. Unicyclic components: the unique cycle is oriented
    circularly starting at its smallest vertex (toward its smaller cycle
    neighbor), and trees hanging off it point away from the cycle.
    """
    s = sorted(set(edge_ids))
    adj = {}
    for e in s:
        u, v = g.endpoints(e)
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    for v in adj:
        adj[v].sort()
    assignment = {v: None for v in range(g.n)}
    seen = set()
    for root in sorted(adj):
        if root in seen:
            continue
        comp = _component_vertices(adj, root)
        seen.update(comp)
        inside = [e for e in s if g.endpoints(e)[0] in comp]
        if len(inside) > len(comp):
            raise ContractError(
                f"component containing vertex {root} has at least two cycles"
            )
        if len(inside) == len(comp):
            cycle = _find_cycle(adj, comp)
            for i, v in enumerate(cycle):
                w = cycle[(i + 1) % len(cycle)]
                assignment[w] = g.edge_id(v, w)
            anchors = list(cycle)
        else:
            anchors = [min(comp)]
        # BFS outward from the anchors through unassigned vertices
        frontier = list(anchors)
        visited = set(anchors)
        while frontier:
            nxt_frontier = []
            for v in frontier:
                for (w, e) in adj[v]:
                    if w not in visited:
                        visited.add(w)
                        assignment[w] = e
                        nxt_frontier.append(w)
            frontier = nxt_frontier
    return assignment


def _component_vertices(adj, root):
    comp = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for (w, _) in adj[u]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    return comp


def _find_cycle(adj, comp):
    """Vertex sequence of the unique cycle in a unicyclic component."""
    degree = {v: len(adj[v]) for v in comp}
    order = sorted(comp)
    queue = [v for v in order if degree[v] == 1]
    removed = set()
    while queue:
        v = queue.pop()
        removed.add(v)
        for (w, _) in adj[v]:
            if w not in removed:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)
    cycle_verts = [v for v in order if v not in removed]
    start = min(cycle_verts)
    seq = [start]
    prev = None
    cur = start
    while True:
        nxts = [w for (w, _) in adj[cur] if w not in removed and w != prev]
        nxt = min(nxts)
        if nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    return seq


def remove(g: Graph, s: SelectionSet) -> RemovedGraph:
    s.validate(g)
    return RemovedGraph(g, s, g.without_edges(s.edges))


def minimalize(g: Graph, edge_ids) -> frozenset:
    """Shrink a bipartiteness-guaranteeing selection set to a minimal one.

    Scans edges in canonical order, drops any whose removal keeps g - s
    bipartite, and restarts the scan after each drop.
    """
    s = set(edge_ids)
    if not is_selection_set(g, s):
        raise ContractError("input is not a 1-selection set")
    if not is_bipartite(g.without_edges(s)).bipartite:
        raise ContractError("input does not guarantee bipartiteness")
    changed = True
    while changed:
        changed = False
        for e in sorted(s):
            trial = s - {e}
            if is_bipartite(g.without_edges(trial)).bipartite:
                s = trial
                changed = True
                break
    return frozenset(s)


def enumerate_selection_sets(g: Graph, max_size=None, visitor=None, *,
                             maximal_only=False):
    """Visit every 1-selection set of g with at most max_size edges.

    Sets are visited in canonical subset order (depth-first inclusion by
    ascending edge id), each exactly once; supersets of sets violating the
    unicyclic condition are pruned, which is sound because the violation is
    monotone. The visitor may return False to stop early. With
    ``maximal_only`` only inclusion-maximal selection sets are visited.
    Returns the number of sets visited.
    """
    if max_size is None:
        max_size = g.n
    uf = _UnionFindCycles(g.n)
    chosen = []
    count = [0]
    stop = [False]
    m = g.m
    ends = g.edges

    chosen_set = set()

    def visit():
        count[0] += 1
        if visitor is not None and visitor(tuple(chosen)) is False:
            stop[0] = True

    def extendable():
        if len(chosen) >= max_size:
            return False
        for e in range(m):
            if e in chosen_set:
                continue
            u, v = ends[e]
            if uf.can_add(u, v):
                return True
        return False

    def rec(i):
        if stop[0]:
            return
        if i == m:
            if maximal_only and not extendable():
                visit()
            return
        if len(chosen) < max_size:
            u, v = ends[i]
            if uf.can_add(u, v):
                op = uf.add(u, v)
                chosen.append(i)
                chosen_set.add(i)
                if not maximal_only:
                    visit()
                if not stop[0]:
                    rec(i + 1)
                chosen.pop()
                chosen_set.discard(i)
                uf.undo(op)
        if stop[0]:
            return
        rec(i + 1)

    if not maximal_only:
        count[0] += 1
        if visitor is not None and visitor(()) is False:
            return count[0]
    rec(0)
    return count[0]
