"""Stock graphs and embedded polyhedra used by the solvers, CLI, and tests.

All embeddings here are verified constructions: rotations were chosen so the
Euler check passes, and callers are expected to assert face structure rather
than trust labels.
"""

from __future__ import annotations

from .errors import ContractError
from .graph import Graph
from .planar import Embedding, trace_faces


def complete_graph(n) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n) -> Graph:
    if n < 3:
        raise ContractError("cycle needs >= 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def grid_graph(rows, cols) -> Graph:
    def vid(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph(rows * cols, edges)


def wheel_graph(rim) -> Graph:
    """Cycle of length `rim` plus a hub adjacent to every rim vertex."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(rim + 1, edges)


def fan_graph(path_len) -> Graph:
    """Path on path_len vertices plus an apex; maximal outerplanar."""
    edges = [(i, i + 1) for i in range(path_len - 1)]
    edges += [(i, path_len) for i in range(path_len)]
    return Graph(path_len + 1, edges)


def prism_graph(n) -> Graph:
    """Two n-cycles joined by a perfect matching (circular ladder)."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, edges)


def dodecahedron_graph() -> Graph:
    """The 20-vertex dodecahedron: planar, cubic, girth 5 (not bipartite)."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    outer_spokes = [(i, 5 + 2 * i) for i in range(5)]
    ring10 = [(5 + i, 5 + (i + 1) % 10) for i in range(10)]
    inner_spokes = [(5 + 2 * i + 1, 15 + i) for i in range(5)]
    inner = [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    return Graph(20, outer + outer_spokes + ring10 + inner_spokes + inner)


def tetrahedron() -> Embedding:
    g = complete_graph(4)
    return Embedding.from_neighbor_rotations(
        g, [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)]
    )


def bipyramid(k) -> Embedding:
    """Double pyramid over a k-cycle: a plane triangulation on k+2 vertices."""
    if k < 3:
        raise ContractError("bipyramid needs a cycle of length >= 3")
    top, bottom = k, k + 1
    edges = []
    for i in range(k):
        edges += [(i, (i + 1) % k), (i, top), (i, bottom)]
    g = Graph(k + 2, edges)
    nbrs = []
    for i in range(k):
        nbrs.append(((i + 1) % k, top, (i - 1) % k, bottom))
    nbrs.append(tuple(range(k)))  # top
    nbrs.append(tuple(range(k - 1, -1, -1)))  # bottom
    return Embedding.from_neighbor_rotations(g, nbrs)


def octahedron() -> Embedding:
    return bipyramid(4)


def cube() -> Embedding:
    edges = []
    for i in range(4):
        edges += [(i, (i + 1) % 4), (4 + i, 4 + (i + 1) % 4), (i, i + 4)]
    g = Graph(8, edges)
    nbrs = []
    for i in range(4):
        nbrs.append(((i - 1) % 4, i + 4, (i + 1) % 4))
    for i in range(4):
        nbrs.append((4 + (i + 1) % 4, i, 4 + (i - 1) % 4))
    return Embedding.from_neighbor_rotations(g, nbrs)


def icosahedron() -> Embedding:
    """5-regular plane triangulation on 12 vertices."""

    def a(i):
        return 1 + i % 5

    def b(i):
        return 6 + i % 5

    top, bottom = 0, 11
    edges = []
    for i in range(5):
        edges += [
            (top, a(i)),
            (a(i), a(i + 1)),
            (a(i), b(i)),
            (a(i + 1), b(i)),
            (b(i), b(i + 1)),
            (bottom, b(i)),
        ]
    g = Graph(12, edges)
    nbrs = [tuple(a(i) for i in range(5))]
    for i in range(5):
        nbrs.append((top, a(i - 1), b(i - 1), b(i), a(i + 1)))
    for i in range(5):
        nbrs.append((a(i), b(i - 1), bottom, b(i + 1), a(i + 1)))
    nbrs.append(tuple(b(4 - i) for i in range(5)))
    emb = Embedding.from_neighbor_rotations(g, nbrs)
    return emb


def stacked_triangulation(extra_vertices, face_choice=0) -> Embedding:
    """Repeatedly insert a vertex into a face of K4, keeping a triangulation.

    ``face_choice`` picks which face (by deterministic face index) receives
    each new vertex; the default always splits the current face 0.
    """
    emb = tetrahedron()
    for _ in range(extra_vertices):
        emb = stack_on_face(emb, face_choice)
    return emb


def stack_on_face(emb: Embedding, face_index) -> Embedding:
    """Insert one vertex joined to the three corners of the given 3-face."""
    fs = trace_faces(emb)
    if face_index >= len(fs.faces):
        raise ContractError(f"no face {face_index}")
    face = fs.faces[face_index]
    if len(face) != 3:
        raise ContractError("stacking requires a 3-face")
    g = emb.graph
    rs = emb.rs
    corners = [rs.tail(d) for d in face]
    x = g.n
    new_edges = list(g.edges) + [(c, x) for c in corners]
    g2 = Graph(g.n + 1, new_edges)
    # splice edge (c, x) into c's rotation right before the face's dart at c
    nbr_rot = []
    for v in range(g.n):
        walk = []
        for d in rs.rot[v]:
            walk.append(rs.head(d))
        nbr_rot.append(walk)
    for d in face:
        c = rs.tail(d)
        succ = rs.head(d)
        i = _rotation_slot(nbr_rot[c], succ, rs, c, d)
        nbr_rot[c].insert(i, x)
    # around x, corners appear in reversed face order so the three new faces close
    nbr_rot.append([rs.tail(d) for d in reversed(face)])
    return Embedding.from_neighbor_rotations(g2, nbr_rot)


def _rotation_slot(nbrs, succ, rs, c, d):
    # position of the dart d's head within c's neighbor rotation
    for i, w in enumerate(nbrs):
        if w == succ and rs.rot[c][i] == d:
            return i
    raise ContractError("face dart not found in rotation")


def triangulation_corpus(max_vertices=10):
    """The fixed corpus: tetrahedron, bipyramids, stacked triangulations.

    Returns (name, Embedding) pairs with at most max_vertices vertices.
    """
    out = [("tetrahedron", tetrahedron())]
    for k in range(3, max_vertices - 1):
        if k + 2 <= max_vertices:
            out.append((f"bipyramid-{k}", bipyramid(k)))
    for extra in range(1, max_vertices - 4 + 1):
        emb = stacked_triangulation(extra)
        if emb.graph.n <= max_vertices:
            out.append((f"stacked-{extra}", emb))
    # a second stacking pattern for variety
    for extra in range(2, max_vertices - 4 + 1, 2):
        emb = stacked_triangulation(extra, face_choice=1)
        if emb.graph.n <= max_vertices:
            out.append((f"stacked-alt-{extra}", emb))
    return out
