"""Non-commuting graphs of finite groups.

The graph of a non-abelian group has the non-central elements as vertices and
an edge between two elements exactly when they do not commute.  Adjacency is
stored as one arbitrary-size integer bitmask per vertex, which makes
neighbourhood intersections during refinement single `&` operations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cayley import CayleyTable, center
from .errors import AbelianInput, InternalInconsistency


def _row_mask(row: np.ndarray) -> int:
    """Pack a boolean row into one little-endian bitmask integer."""
    packed = np.packbits(row, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass(frozen=True)
class NcGraph:
    """An undirected graph on the non-central elements of a group.

    ``vertices[i]`` is the parent element index of local vertex i (ascending);
    ``adj[i]`` is a bitmask over local vertex positions.  Construction checks
    symmetry and irreflexivity.
    """

    vertices: tuple
    adj: tuple
    parent_descriptor: str
    parent_order: int
    parent_center_size: int

    def __post_init__(self):
        n = len(self.vertices)
        if len(self.adj) != n:
            raise ValueError("adjacency length does not match the vertex list")
        full = (1 << n) - 1
        for i, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {i} has neighbour bits outside 0..{n - 1}")
            if mask >> i & 1:
                raise ValueError(f"vertex {i} has a self-loop")
        for i, mask in enumerate(self.adj):
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"edge {i}-{j} is not symmetric")
                m &= m - 1

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def degrees(self) -> tuple:
        return tuple(mask.bit_count() for mask in self.adj)

    @property
    def is_regular(self) -> bool:
        degs = self.degrees()
        return len(set(degs)) <= 1

    def neighbors(self, i: int) -> tuple:
        out = []
        m = self.adj[i]
        while m:
            j = (m & -m).bit_length() - 1
            out.append(j)
            m &= m - 1
        return tuple(out)

    def edges(self) -> list:
        """All edges as local (i, j) pairs with i < j, lexicographic."""
        out = []
        for i, mask in enumerate(self.adj):
            m = mask >> (i + 1) << (i + 1)
            while m:
                j = (m & -m).bit_length() - 1
                out.append((i, j))
                m &= m - 1
        return out

    def complement_components(self) -> list:
        """Connected components of the complement graph, as sorted tuples."""
        n = len(self.vertices)
        full = (1 << n) - 1
        unseen = full
        comps = []
        while unseen:
            start = (unseen & -unseen).bit_length() - 1
            comp = 1 << start
            frontier = comp
            unseen &= ~comp
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nonadj = ~self.adj[v] & full & ~(1 << v)
                new = nonadj & unseen
                comp |= new
                frontier |= new
                unseen &= ~new
            members = []
            m = comp
            while m:
                j = (m & -m).bit_length() - 1
                members.append(j)
                m &= m - 1
            comps.append(tuple(members))
        return comps

    def multipartite_parts(self):
        """Part sizes (descending) if the graph is complete multipartite, else None.

        A graph is complete multipartite exactly when every connected
        component of its complement is an independent set of this graph:
        those components are then the parts.
        """
        comps = self.complement_components()
        for comp in comps:
            for idx, i in enumerate(comp):
                for j in comp[idx + 1:]:
                    if self.adj[i] >> j & 1:
                        return None
        return tuple(sorted((len(c) for c in comps), reverse=True))


def build_nc_graph(g: CayleyTable) -> NcGraph:
    """Build the non-commuting graph of a non-abelian group.

    Post-conditions checked here rather than assumed: the vertex count equals
    the group order minus the centre size, and no vertex is isolated (a
    non-central element always fails to commute with something).
    """
    if g.is_abelian:
        raise AbelianInput(
            f"{g.descriptor}: the non-commuting graph of an abelian group is empty"
        )
    comm = g.commuting
    central = comm.all(axis=1)
    verts = tuple(int(v) for v in np.nonzero(~central)[0])
    sub = ~comm[np.ix_(verts, verts)]
    np.fill_diagonal(sub, False)
    adj = tuple(_row_mask(sub[i]) for i in range(len(verts)))
    graph = NcGraph(
        vertices=verts,
        adj=adj,
        parent_descriptor=g.descriptor,
        parent_order=g.order,
        parent_center_size=len(center(g)),
    )
    if graph.num_vertices != g.order - graph.parent_center_size:
        raise InternalInconsistency(
            f"{g.descriptor}: graph has {graph.num_vertices} vertices but the "
            f"group has {g.order - graph.parent_center_size} non-central elements"
        )
    for i, mask in enumerate(adj):
        if mask == 0:
            raise InternalInconsistency(
                f"{g.descriptor}: non-central element {verts[i]} has no "
                f"non-commuting partner"
            )
    return graph


def degree_sequence(graph: NcGraph) -> tuple:
    """Vertex degrees sorted ascending."""
    return tuple(sorted(graph.degrees()))


def is_regular(graph: NcGraph) -> bool:
    """True when every vertex has the same degree."""
    return graph.is_regular


def complete_multipartite_params(graph: NcGraph):
    """Part sizes (descending) if the graph is complete multipartite, else None."""
    return graph.multipartite_parts()


def relabeled(graph: NcGraph, perm) -> NcGraph:
    """The same abstract graph with local vertices renamed by ``perm``.

    ``perm[i]`` is the new position of old vertex i.  Parent metadata is kept;
    the parent-element list is permuted alongside the vertices, so vertex
    ``perm[i]`` still refers to the same group element.
    """
    n = len(graph.vertices)
    new_vertices = [0] * n
    new_adj = [0] * n
    for i in range(n):
        new_vertices[perm[i]] = graph.vertices[i]
        mask = 0
        m = graph.adj[i]
        while m:
            j = (m & -m).bit_length() - 1
            mask |= 1 << perm[j]
            m &= m - 1
        new_adj[perm[i]] = mask
    return NcGraph(
        vertices=tuple(new_vertices),
        adj=tuple(new_adj),
        parent_descriptor=graph.parent_descriptor,
        parent_order=graph.parent_order,
        parent_center_size=graph.parent_center_size,
    )
