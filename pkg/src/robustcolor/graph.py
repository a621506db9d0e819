"""Simple undirected graphs: storage, traversal, coloring, degeneracy, graph6 I/O.

Vertex ids are dense integers 0..n-1. Edge ids are dense integers in the
canonical order: lexicographic on (min endpoint, max endpoint). Both are stable
for the lifetime of a Graph, so solver witnesses and traces are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ContractError, FormatError


class Budget:
    """Mutable node-expansion budget shared across a search.

    ``Budget(None)`` is unlimited. ``spend()`` returns False once the limit is
    reached; searches must then report Unknown rather than No.
    """

    def __init__(self, limit=None):
        if limit is not None and limit < 0:
            raise ContractError("budget limit must be None or >= 0")
        self.limit = limit
        self.spent = 0

    def spend(self, amount=1):
        if self.limit is not None and self.spent + amount > self.limit:
            self.spent = self.limit
            return False
        self.spent += amount
        return True

    @property
    def exhausted(self):
        return self.limit is not None and self.spent >= self.limit


class Graph:
    """Immutable simple graph. Rejects loops and parallel edges at build time."""

    __slots__ = ("n", "edges", "_adj", "_incident", "_edge_index", "_masks")

    def __init__(self, n, edges):
        if n < 0:
            raise ContractError("vertex count must be non-negative")
        pairs = []
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise ContractError(f"loop at vertex {u} rejected")
            pairs.append((u, v) if u < v else (v, u))
        pairs.sort()
        for i in range(1, len(pairs)):
            if pairs[i] == pairs[i - 1]:
                raise ContractError(f"parallel edge {pairs[i]!r} rejected")
        self.n = n
        self.edges = tuple(pairs)
        adj = [[] for _ in range(n)]
        incident = [[] for _ in range(n)]
        for i, (u, v) in enumerate(pairs):
            adj[u].append(v)
            adj[v].append(u)
            incident[u].append(i)
            incident[v].append(i)
        self._adj = tuple(tuple(a) for a in adj)
        self._incident = tuple(tuple(a) for a in incident)
        self._edge_index = {e: i for i, e in enumerate(pairs)}
        masks = [0] * n
        for (u, v) in pairs:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._masks = tuple(masks)

    @property
    def m(self):
        return len(self.edges)

    def neighbors(self, v):
        return self._adj[v]

    def incident_edges(self, v):
        """Edge ids incident to v, ascending."""
        return self._incident[v]

    def degree(self, v):
        return len(self._adj[v])

    def adjacency_mask(self, v):
        return self._masks[v]

    def has_edge(self, u, v):
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def edge_id(self, u, v):
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise ContractError(f"no edge {key!r} in graph") from None

    def endpoints(self, e):
        if not 0 <= e < len(self.edges):
            raise ContractError(f"invalid edge id {e}")
        return self.edges[e]

    def without_edges(self, edge_ids):
        """New Graph on the same vertices with the given edge ids removed."""
        drop = set(edge_ids)
        for e in drop:
            if not 0 <= e < len(self.edges):
                raise ContractError(f"invalid edge id {e}")
        return Graph(self.n, [p for i, p in enumerate(self.edges) if i not in drop])

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class Coloring:
    """Proper vertex coloring: colors[v] in 0..k-1 for every vertex."""

    colors: tuple
    k: int

    def validate(self, g: Graph):
        if len(self.colors) != g.n:
            raise ContractError("coloring does not assign every vertex")
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.k:
                raise ContractError(f"color {c} at vertex {v} out of range")
        for (u, v) in g.edges:
            if self.colors[u] == self.colors[v]:
                raise ContractError(f"edge ({u},{v}) is monochromatic")
        return True


def components(g: Graph):
    """Connected components as frozensets, ordered by smallest contained vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def has_at_most_one_cycle(g: Graph, comp):
    """True iff the connected component has at most one cycle (edges <= vertices)."""
    comp = set(comp)
    if not comp:
        raise ContractError("component must be non-empty")
    for v in comp:
        for w in g.neighbors(v):
            if w not in comp:
                raise ContractError(f"vertex set not closed under adjacency at {v}")
    root = next(iter(comp))
    stack = [root]
    seen = {root}
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if seen != comp:
        raise ContractError("vertex set is not connected")
    inside = sum(1 for (u, v) in g.edges if u in comp and v in comp)
    return inside <= len(comp)


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: Coloring | None = None
    odd_cycle: tuple | None = None  # edge ids forming an odd cycle


def is_bipartite(g: Graph) -> BipartiteResult:
    """2-color the graph or exhibit an odd cycle (as an edge-id list)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(g, parent, u, w))
    return BipartiteResult(True, coloring=Coloring(tuple(color), 2))


def _odd_cycle(g, parent, u, v):
    # walk both BFS-tree paths to their meeting point, then close with (u,v)
    pu, pv = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x] != -1:
        x = parent[x]
        seen[x] = len(pu)
        pu.append(x)
    x = v
    while x not in seen:
        x = parent[x]
        pv.append(x)
    pu = pu[: seen[x] + 1]
    path = pu + pv[-2::-1]  # u .. lca .. v
    edge_ids = [g.edge_id(path[i], path[i + 1]) for i in range(len(path) - 1)]
    edge_ids.append(g.edge_id(v, u))
    return tuple(edge_ids)


@dataclass(frozen=True)
class KColorability:
    status: str  # 'yes' | 'no' | 'unknown'
    coloring: Coloring | None = None
    nodes_expanded: int = 0


def greedy_clique(g: Graph):
    """Greedy clique by descending degree (ties by id); a chi lower bound."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique = []
    for v in order:
        if all(g.adjacency_mask(v) >> u & 1 for u in clique):
            clique.append(v)
    return tuple(clique)


def _greedy_coloring(g: Graph):
    """DSATUR greedy; returns a valid Coloring (upper bound witness)."""
    n = g.n
    if n == 0:
        return Coloring((), 0)
    colors = [-1] * n
    neighbor_colors = [0] * n  # bitmask of colors used next door
    for _ in range(n):
        best = -1
        best_key = None
        for v in range(n):
            if colors[v] != -1:
                continue
            key = (bin(neighbor_colors[v]).count("1"), g.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        c = 0
        while neighbor_colors[best] >> c & 1:
            c += 1
        colors[best] = c
        for w in g.neighbors(best):
            neighbor_colors[w] |= 1 << c
    k = max(colors) + 1
    return Coloring(tuple(colors), k)


def is_k_colorable(g: Graph, k, budget: Budget | None = None) -> KColorability:
    """Exact k-colorability via saturation-degree branch and bound.

    Yes carries a proper coloring; No is an exhaustive (or clique-certified)
    refutation; Unknown only on budget exhaustion. budget=None is unlimited.
    """
    if k < 1:
        raise ContractError("k must be >= 1")
    budget = budget or Budget(None)
    if g.n == 0:
        return KColorability("yes", Coloring((), k), 0)
    if budget.limit == 0:
        return KColorability("unknown", nodes_expanded=0)
    clique = greedy_clique(g)
    if len(clique) > k:
        return KColorability("no", nodes_expanded=0)

    n = g.n
    colors = [-1] * n
    neighbor_colors = [0] * n
    # seed: clique vertices get distinct colors (sound symmetry break)
    for i, v in enumerate(clique):
        colors[v] = i
        for w in g.neighbors(v):
            neighbor_colors[w] |= 1 << i
    max_used = len(clique) - 1
    nodes = [0]

    def pick():
        best, best_key = -1, None
        for v in range(n):
            if colors[v] != -1:
                continue
            key = (bin(neighbor_colors[v]).count("1"), g.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(assigned, max_used):
        if assigned == n:
            return "yes"
        if not budget.spend():
            return "unknown"
        nodes[0] += 1
        v = pick()
        limit = min(k - 1, max_used + 1)
        saw_unknown = False
        for c in range(limit + 1):
            if neighbor_colors[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for w in g.neighbors(v):
                if not neighbor_colors[w] >> c & 1:
                    neighbor_colors[w] |= 1 << c
                    touched.append(w)
            r = solve(assigned + 1, max(max_used, c))
            if r == "yes":
                return "yes"
            if r == "unknown":
                saw_unknown = True
            colors[v] = -1
            for w in touched:
                neighbor_colors[w] &= ~(1 << c)
        return "unknown" if saw_unknown else "no"

    r = solve(len(clique), max_used)
    if r == "yes":
        return KColorability("yes", Coloring(tuple(colors), k), nodes[0])
    return KColorability(r, nodes_expanded=nodes[0])


@dataclass(frozen=True)
class ChromaticNumber:
    """Exact value when ``value`` is set; otherwise the bracketing interval."""

    value: int | None
    lower: int
    upper: int

    @property
    def exact(self):
        return self.value is not None


def chromatic_number(g: Graph, budget: Budget | None = None) -> ChromaticNumber:
    """Exact chi via iterated k-colorability from a clique lower bound."""
    if g.n == 0:
        return ChromaticNumber(0, 0, 0)
    budget = budget or Budget(None)
    lower = max(1, len(greedy_clique(g)))
    upper = _greedy_coloring(g).k
    for k in range(lower, upper):
        r = is_k_colorable(g, k, budget)
        if r.status == "yes":
            return ChromaticNumber(k, k, k)
        if r.status == "unknown":
            return ChromaticNumber(None, k, upper)
        lower = k + 1
    return ChromaticNumber(upper, upper, upper)


def chromatic_number_exact(g: Graph) -> int:
    value = chromatic_number(g).value
    assert value is not None
    return value


def degeneracy(g: Graph):
    """(d, elimination order): repeatedly remove a minimum-degree vertex.

    Ties break to the smallest vertex id; d is the maximum degree seen at
    removal time. Every vertex has at most d neighbors later in the order.
    """
    n = g.n
    if n == 0:
        return 0, ()
    deg = [g.degree(v) for v in range(n)]
    alive = [True] * n
    order = []
    d = 0
    for _ in range(n):
        v = min((x for x in range(n) if alive[x]), key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        alive[v] = False
        order.append(v)
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
    return d, tuple(order)


# graph6 format (exact, bit-compatible with the standard definition)

_G6_HEADER = ">>graph6<<"


def parse_graph6(text) -> Graph:
    """Parse one graph6 string (optionally prefixed with the standard header)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="strict")
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string", offset=0)
    data = [ord(c) for c in s]
    pos = 0
    if data[pos] == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise FormatError("truncated 8-byte graph6 order", offset=len(s))
            n = 0
            for i in range(2, 8):
                n = (n << 6) | (data[i] - 63)
            pos = 8
        else:
            if len(data) < 4:
                raise FormatError("truncated 4-byte graph6 order", offset=len(s))
            n = 0
            for i in range(1, 4):
                n = (n << 6) | (data[i] - 63)
            pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n < 0:
        raise FormatError("invalid graph6 order byte", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise FormatError(
            f"graph6 body length {len(data) - pos}, expected {nbytes} for n={n}",
            offset=pos,
        )
    bits = []
    for i in range(pos, len(data)):
        b = data[i] - 63
        if not 0 <= b < 64:
            raise FormatError(f"byte {data[i]} outside graph6 range", offset=i)
        for shift in range(5, -1, -1):
            bits.append((b >> shift) & 1)
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits", offset=pos)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (no header)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        b = 0
        for bit in bits[i : i + 6]:
            b = (b << 1) | bit
        body.append(chr(b + 63))
    return head + "".join(body)


def graph_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}, sort_keys=True)


def graph_from_json(text) -> Graph:
    try:
        obj = json.loads(text)
        return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad adjacency JSON: {exc}") from exc
