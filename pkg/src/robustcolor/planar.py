"""Combinatorial plane embeddings: rotation systems, faces, and geometric duals.

Embeddings are inputs (text format below) or construction outputs; the toolkit
never searches for an embedding of an abstract graph. Darts encode directed
edges: edge e stored as (u, v) has darts 2e (u->v) and 2e+1 (v->u); the twin of
dart d is d^1. Faces are orbits of the walk rule "rotation-successor of the
twin", numbered by their smallest dart, which makes face identities and hence
dual labels deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError, FormatError, StructureError
from .graph import Graph, is_bipartite


class RotationSystem:
    """Per-vertex cyclic dart order over a (multi)graph; loops allowed."""

    __slots__ = ("n", "edge_list", "rot", "_pos", "_faces", "_face_of")

    def __init__(self, n, edge_list, rot):
        self.n = n
        self.edge_list = tuple(tuple(e) for e in edge_list)
        self.rot = tuple(tuple(r) for r in rot)
        if len(self.rot) != n:
            raise StructureError("rotation must list every vertex")
        m = len(self.edge_list)
        pos = {}
        for v, darts in enumerate(self.rot):
            for i, d in enumerate(darts):
                if not 0 <= d < 2 * m:
                    raise StructureError(f"vertex {v}: dart {d} out of range")
                if d in pos:
                    raise StructureError(f"dart {d} appears twice in rotations")
                if self.tail(d) != v:
                    raise StructureError(
                        f"vertex {v}: dart {d} has tail {self.tail(d)}"
                    )
                pos[d] = (v, i)
        if len(pos) != 2 * m:
            missing = next(d for d in range(2 * m) if d not in pos)
            raise StructureError(f"dart {missing} missing from rotations")
        self._pos = pos
        self._faces = None
        self._face_of = None

    @property
    def m(self):
        return len(self.edge_list)

    def tail(self, d):
        e = self.edge_list[d >> 1]
        return e[0] if d & 1 == 0 else e[1]

    def head(self, d):
        return self.tail(d ^ 1)

    def rotation_next(self, d):
        v, i = self._pos[d]
        r = self.rot[v]
        return r[(i + 1) % len(r)]

    def face_next(self, d):
        return self.rotation_next(d ^ 1)

    def faces(self):
        """Face walks as dart tuples, ordered by smallest contained dart."""
        if self._faces is None:
            seen = set()
            faces = []
            face_of = {}
            for d0 in range(2 * self.m):
                if d0 in seen:
                    continue
                walk = []
                d = d0
                while d not in seen:
                    seen.add(d)
                    face_of[d] = len(faces)
                    walk.append(d)
                    d = self.face_next(d)
                faces.append(tuple(walk))
            self._faces = tuple(faces)
            self._face_of = face_of
        return self._faces

    def face_of(self, d):
        self.faces()
        return self._face_of[d]

    def incident_edges(self, v):
        return tuple(d >> 1 for d in self.rot[v])

    def component_count(self):
        seen = [False] * self.n
        adj = [[] for _ in range(self.n)]
        for (u, v) in self.edge_list:
            adj[u].append(v)
            adj[v].append(u)
        c = 0
        for s in range(self.n):
            if seen[s]:
                continue
            c += 1
            stack = [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
        return c

    def edged_component_count(self):
        """Components containing at least one edge."""
        isolated = sum(1 for v in range(self.n) if not self.rot[v])
        return self.component_count() - isolated


class Embedding:
    """A rotation system over a simple Graph (the public embedding type)."""

    __slots__ = ("graph", "rotation", "rs")

    def __init__(self, graph: Graph, rotation):
        self.graph = graph
        rotation = tuple(tuple(r) for r in rotation)
        if len(rotation) != graph.n:
            raise StructureError("rotation must cover every vertex")
        rot_darts = []
        for v, edge_ids in enumerate(rotation):
            if sorted(edge_ids) != sorted(graph.incident_edges(v)):
                bad = set(edge_ids) - set(graph.incident_edges(v))
                if bad:
                    raise StructureError(
                        f"vertex {v}: rotation names non-incident edge {min(bad)}"
                    )
                raise StructureError(
                    f"vertex {v}: rotation is not a permutation of incident edges"
                )
            darts = []
            for e in edge_ids:
                u, w = graph.endpoints(e)
                darts.append(2 * e if v == u else 2 * e + 1)
            rot_darts.append(tuple(darts))
        self.rotation = rotation
        self.rs = RotationSystem(graph.n, graph.edges, rot_darts)

    @classmethod
    def from_neighbor_rotations(cls, graph: Graph, neighbor_lists):
        """Build from cyclic neighbor orders instead of edge-id orders."""
        rotation = [
            tuple(graph.edge_id(v, w) for w in nbrs)
            for v, nbrs in enumerate(neighbor_lists)
        ]
        return cls(graph, rotation)

    def __repr__(self):
        return f"Embedding(n={self.graph.n}, m={self.graph.m})"


@dataclass(frozen=True)
class FaceSet:
    """Traced face walks; a bridge contributes 2 to its face's length."""

    faces: tuple  # dart tuples
    lengths: tuple
    isolated_vertices: tuple  # vertices on no face walk

    def __len__(self):
        return len(self.faces)


def trace_faces(emb: Embedding) -> FaceSet:
    rs = emb.rs
    faces = rs.faces()
    isolated = tuple(v for v in range(rs.n) if not rs.rot[v])
    return FaceSet(faces, tuple(len(f) for f in faces), isolated)


def face_vertices(emb: Embedding, face):
    """Vertex walk of a face (tails of its darts)."""
    return tuple(emb.rs.tail(d) for d in face)


def face_edge_ids(face):
    return tuple(d >> 1 for d in face)


@dataclass(frozen=True)
class PlanarityReport:
    ok: bool
    vertex_count: int
    edge_count: int
    traced_faces: int
    components: int
    edged_components: int
    genus: int

    @property
    def geometric_faces(self):
        # the edged components share one outer face; isolated vertices add none
        return self.traced_faces - self.edged_components + 1


def check_planarity(emb: Embedding) -> PlanarityReport:
    """Euler check: V - E + F_traced == c + c_edged for a plane embedding.

    Equivalent to |V| - |E| + |F| = 1 + c with geometric face counting (the
    edged components share a single outer face). On failure the report carries
    the genus of the surface the rotation actually describes.
    """
    rs = emb.rs
    faces = rs.faces()
    c = rs.component_count()
    ce = rs.edged_component_count()
    deficit = (c + ce) - (rs.n - rs.m + len(faces))
    return PlanarityReport(
        ok=deficit == 0,
        vertex_count=rs.n,
        edge_count=rs.m,
        traced_faces=len(faces),
        components=c,
        edged_components=ce,
        genus=deficit // 2,
    )


@dataclass(frozen=True)
class DualMultigraph:
    """Dual seen as a raw multigraph: one vertex per face, loops possible."""

    vertex_count: int
    edges: tuple  # (face, face) per primal edge id

    def degrees(self):
        deg = [0] * self.vertex_count
        for (a, b) in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)

    @property
    def is_simple(self):
        seen = set()
        for (a, b) in self.edges:
            if a == b:
                return False
            key = (a, b) if a < b else (b, a)
            if key in seen:
                return False
            seen.add(key)
        return True


class DualMap:
    """Geometric dual with the e <-> e* bijection.

    Dual edge ids equal primal edge ids (the bijection is the identity and is
    stored explicitly). When the dual is simple, ``dual_graph`` is a Graph with
    its own canonical edge ids and ``dual_edge_of_primal`` translates.
    """

    __slots__ = (
        "primal",
        "dual_rs",
        "multigraph",
        "edge_bijection",
        "face_to_vertex",
        "dual_graph",
        "dual_embedding",
        "dual_edge_of_primal",
        "primal_edge_of_dual",
    )

    def __init__(self, primal, dual_rs, multigraph, face_to_vertex):
        self.primal = primal
        self.dual_rs = dual_rs
        self.multigraph = multigraph
        self.edge_bijection = tuple(range(len(multigraph.edges)))
        self.face_to_vertex = face_to_vertex
        if multigraph.is_simple:
            pairs = [tuple(sorted(e)) for e in multigraph.edges]
            self.dual_graph = Graph(multigraph.vertex_count, pairs)
            self.dual_edge_of_primal = tuple(
                self.dual_graph.edge_id(*p) for p in pairs
            )
            inverse = [0] * len(pairs)
            for primal_e, dual_e in enumerate(self.dual_edge_of_primal):
                inverse[dual_e] = primal_e
            self.primal_edge_of_dual = tuple(inverse)
            rotation = []
            for f in range(multigraph.vertex_count):
                rotation.append(
                    tuple(
                        self.dual_edge_of_primal[d >> 1] for d in dual_rs.rot[f]
                    )
                )
            self.dual_embedding = Embedding(self.dual_graph, rotation)
        else:
            self.dual_graph = None
            self.dual_embedding = None
            self.dual_edge_of_primal = None
            self.primal_edge_of_dual = None

    @property
    def is_simple(self):
        return self.dual_graph is not None


def dual(emb: Embedding) -> DualMap:
    """Geometric dual of a connected plane embedding.

    One dual vertex per face, one dual edge per primal edge joining the faces
    on its two sides (a loop if both sides agree). The dual rotation is induced
    by the primal face walks, so the dual of the dual is the primal graph.
    """
    report = check_planarity(emb)
    if not report.ok:
        raise ContractError(f"embedding is not planar (genus {report.genus})")
    rs = emb.rs
    if rs.component_count() != 1:
        raise ContractError("dual requires a connected embedding")
    faces = rs.faces()
    dual_edges = [
        (rs.face_of(2 * e), rs.face_of(2 * e + 1)) for e in range(rs.m)
    ]
    # dual dart d has tail face_of(d); the walk order of each face is its rotation
    dual_rs = RotationSystem(len(faces), dual_edges, [tuple(w) for w in faces])
    multigraph = DualMultigraph(len(faces), tuple(dual_edges))
    # faces of the dual correspond one-to-one to primal vertices
    face_to_vertex = []
    seen_vertices = set()
    for walk in dual_rs.faces():
        tails = {rs.tail(d) for d in walk}
        if len(tails) != 1:
            raise StructureError("dual face does not wrap a single primal vertex")
        (v,) = tails
        if v in seen_vertices:
            raise StructureError(f"primal vertex {v} wrapped by two dual faces")
        seen_vertices.add(v)
        face_to_vertex.append(v)
    if len(seen_vertices) != rs.n:
        raise StructureError("dual faces do not cover all primal vertices")
    return DualMap(emb, dual_rs, multigraph, tuple(face_to_vertex))


def is_triangulation(emb: Embedding) -> bool:
    fs = trace_faces(emb)
    return len(fs) > 0 and all(l == 3 for l in fs.lengths)


def is_quadrangulation(emb: Embedding) -> bool:
    """All faces of length 4. Asserts the bipartiteness that planarity implies."""
    fs = trace_faces(emb)
    if len(fs) == 0 or any(l != 4 for l in fs.lengths):
        return False
    if not is_bipartite(emb.graph).bipartite:
        raise StructureError("quadrangulation is not bipartite; embedding is broken")
    return True


def _connected_excluding(masks, n, removed_mask):
    """Bitmask BFS over vertices not in removed_mask."""
    alive = ((1 << n) - 1) & ~removed_mask
    if alive == 0:
        return True
    start = (alive & -alive).bit_length() - 1
    reach = 1 << start
    frontier = reach
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= masks[v]
        nxt &= alive & ~reach
        reach |= nxt
        frontier = nxt
    return reach == alive


def three_connected(g: Graph) -> bool:
    """No vertex cut of size <= 2, by enumeration of vertex pairs."""
    if g.n < 4:
        raise ContractError("3-connectivity test requires at least 4 vertices")
    masks = [g.adjacency_mask(v) for v in range(g.n)]
    if not _connected_excluding(masks, g.n, 0):
        return False
    for v in range(g.n):
        if not _connected_excluding(masks, g.n, 1 << v):
            return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not _connected_excluding(masks, g.n, (1 << u) | (1 << v)):
                return False
    return True


def is_bridgeless(g: Graph) -> bool:
    """No single edge disconnects its component."""
    if g.n == 0:
        return True
    masks = [g.adjacency_mask(v) for v in range(g.n)]
    base = sum(1 for s in _components_masks(masks, g.n))
    for (u, v) in g.edges:
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        if sum(1 for s in _components_masks(masks, g.n)) != base:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            return False
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return True


def _components_masks(masks, n):
    seen = 0
    full = (1 << n) - 1
    while seen != full:
        rest = full & ~seen
        start = (rest & -rest).bit_length() - 1
        reach = 1 << start
        frontier = reach
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= masks[v]
            nxt &= ~reach
            reach |= nxt
            frontier = nxt
        seen |= reach
        yield reach


@dataclass(frozen=True)
class Region:
    """A face of the embedding after deleting a set of edges.

    ``faces`` are the original face ids merged into this region; the boundary
    consists of ``walks`` (closed dart walks along kept edges) plus degenerate
    cycles, one per isolated vertex inside the region.
    """

    faces: tuple
    walks: tuple
    isolated_vertices: tuple

    @property
    def boundary_cycles(self):
        return len(self.walks) + len(self.isolated_vertices)


def regions_after_removal(rs: RotationSystem, removed_edge_ids) -> tuple:
    """Faces of the embedded graph rs minus the given edges.

    Deleting an edge merges the faces on its two sides; each resulting region
    reports its boundary walks. Vertices whose every edge was deleted count as
    degenerate boundary cycles of the region they sit in.
    """
    removed = set(removed_edge_ids)
    rs.faces()
    parent = list(range(len(rs.faces())))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in removed:
        a, b = find(rs.face_of(2 * e)), find(rs.face_of(2 * e + 1))
        if a != b:
            parent[a] = b

    def next_kept(d):
        # rotation successor of twin, skipping removed darts
        t = d ^ 1
        while True:
            t = rs.rotation_next(t)
            if t >> 1 not in removed:
                return t
            t = t ^ 1

    walks_by_class = {}
    seen = set()
    for d0 in range(2 * rs.m):
        if d0 >> 1 in removed or d0 in seen:
            continue
        walk = []
        d = d0
        while d not in seen:
            seen.add(d)
            walk.append(d)
            d = next_kept(d)
        cls = find(rs.face_of(d0))
        walks_by_class.setdefault(cls, []).append(tuple(walk))

    isolated_by_class = {}
    for v in range(rs.n):
        darts = rs.rot[v]
        if darts and all(d >> 1 in removed for d in darts):
            cls = find(rs.face_of(darts[0]))
            isolated_by_class.setdefault(cls, []).append(v)

    classes = sorted(set(find(f) for f in range(len(rs.faces()))))
    regions = []
    for cls in classes:
        members = tuple(f for f in range(len(rs.faces())) if find(f) == cls)
        regions.append(
            Region(
                faces=members,
                walks=tuple(walks_by_class.get(cls, ())),
                isolated_vertices=tuple(isolated_by_class.get(cls, ())),
            )
        )
    return tuple(regions)


# Embedding text format: "n m", n rotation lines "v: e ...", m edge lines
# "e: u v". '#' starts a comment. Edge ids must be canonical (sorted pairs).

def parse_embedding(text) -> Embedding:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty embedding file")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"bad header numbers: {exc}") from exc
    if len(lines) != 1 + n + m:
        raise FormatError(
            f"expected {1 + n + m} content lines for n={n} m={m}, got {len(lines)}"
        )
    rotations = []
    for v in range(n):
        line = lines[1 + v]
        label, _, rest = line.partition(":")
        if label.strip() != str(v):
            raise FormatError(f"rotation line {v} labelled {label.strip()!r}")
        rotations.append(tuple(int(t) for t in rest.split()))
    pairs = []
    for e in range(m):
        line = lines[1 + n + e]
        label, _, rest = line.partition(":")
        if label.strip() != str(e):
            raise FormatError(f"edge line {e} labelled {label.strip()!r}")
        parts = rest.split()
        if len(parts) != 2:
            raise FormatError(f"edge {e} needs two endpoints, got {rest!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    g = Graph(n, pairs)
    for e, p in enumerate(pairs):
        canon = tuple(sorted(p))
        if g.edge_id(*canon) != e:
            raise FormatError(
                f"edge {e} declared as {p}, but canonical order assigns id "
                f"{g.edge_id(*canon)}; renumber edges canonically"
            )
    return Embedding(g, rotations)


def emit_embedding(emb: Embedding) -> str:
    g = emb.graph
    lines = [f"{g.n} {g.m}"]
    for v in range(g.n):
        lines.append(f"{v}: " + " ".join(str(e) for e in emb.rotation[v]))
    for e, (u, v) in enumerate(g.edges):
        lines.append(f"{e}: {u} {v}")
    return "\n".join(lines) + "\n"
