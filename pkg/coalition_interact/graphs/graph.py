"""Undirected communication graphs stored as per-node neighbor bit masks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from coalition_interact.errors import (
    DuplicateEdge,
    EdgeAlreadyPresent,
    LoopEdge,
    NoSuchEdge,
    NotATree,
    PlayerOutOfRange,
    PreconditionViolated,
)
from coalition_interact.games.coalition import Coalition, CoalitionLike, as_bits, players_of
from coalition_interact.games.game import QuotientMap


def _check_player(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise PlayerOutOfRange(f"Node {i} outside 1..{n}")


@dataclass(frozen=True)
class CommGraph:
    """Γ = (N, E). adj[i-1] is the neighbor mask of player i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        adj = tuple(int(a) for a in self.adj)
        if len(adj) != self.n:
            raise PlayerOutOfRange(f"Expected {self.n} neighbor masks, got {len(adj)}")
        for k, a in enumerate(adj):
            if a >> self.n:
                raise PlayerOutOfRange(f"Node {k + 1} has a neighbor outside 1..{self.n}")
            if a >> k & 1:
                raise LoopEdge(f"Node {k + 1} is adjacent to itself")
            for j in players_of(a):
                if not adj[j - 1] >> k & 1:
                    raise PreconditionViolated(f"Adjacency is not symmetric on edge ({k + 1}, {j})")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "CommGraph":
        adj = [0] * n
        for edge in edges:
            pair = tuple(int(p) for p in edge)
            if len(pair) != 2:
                raise PreconditionViolated(f"An edge has exactly two endpoints, got {pair}")
            i, j = pair
            _check_player(i, n)
            _check_player(j, n)
            if i == j:
                raise LoopEdge(f"Loop edge ({i}, {j}) is not allowed")
            if adj[i - 1] >> (j - 1) & 1:
                raise DuplicateEdge(f"Edge ({min(i, j)}, {max(i, j)}) listed twice")
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "CommGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << k) for k in range(n)))

    @classmethod
    def empty(cls, n: int) -> "CommGraph":
        return cls(n, (0,) * n)

    def neighbors(self, i: int) -> int:
        _check_player(i, self.n)
        return self.adj[i - 1]

    def has_edge(self, i: int, j: int) -> bool:
        _check_player(i, self.n)
        _check_player(j, self.n)
        return bool(self.adj[i - 1] >> (j - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ascending pairs, sorted."""
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in players_of(self.adj[i - 1])
            if i < j
        ]

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def add_edge(self, i: int, j: int) -> "CommGraph":
        if i == j:
            raise LoopEdge(f"Loop edge ({i}, {j}) is not allowed")
        if self.has_edge(i, j):
            raise EdgeAlreadyPresent(f"Edge ({min(i, j)}, {max(i, j)}) is already present")
        adj = list(self.adj)
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
        return CommGraph(self.n, tuple(adj))

    def remove_edge(self, i: int, j: int) -> "CommGraph":
        """Γ minus the single edge {i, j}; the original is untouched."""
        if i == j or not self.has_edge(i, j):
            raise NoSuchEdge(f"Edge ({min(i, j)}, {max(i, j)}) is not in the graph")
        adj = list(self.adj)
        adj[i - 1] &= ~(1 << (j - 1))
        adj[j - 1] &= ~(1 << (i - 1))
        return CommGraph(self.n, tuple(adj))

    def neighborhood(self, mask: int) -> int:
        """Union of the neighbor masks of every node in mask."""
        out = 0
        for p in players_of(mask):
            out |= self.adj[p - 1]
        return out

    def induced(self, C: CoalitionLike) -> tuple["CommGraph", tuple[int, ...]]:
        """Γ_C relabeled 1..c in ascending original order (same order as TUGame.restrict_to)."""
        bits = as_bits(C, self.n)
        members = players_of(bits)
        pos = {p: k for k, p in enumerate(members)}
        adj = []
        for p in members:
            a = 0
            for q in players_of(self.adj[p - 1] & bits):
                a |= 1 << pos[q]
            adj.append(a)
        return CommGraph(len(members), tuple(adj)), members

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges())
        return g

    def is_forest(self) -> bool:
        if self.n == 0:
            return True
        return nx.is_forest(self.to_networkx())

    def is_tree(self) -> bool:
        return nx.is_tree(self.to_networkx())

    def cut_nodes(self, S: CoalitionLike) -> Coalition:
        """Cut vertices of the induced subgraph Γ_S."""
        bits = as_bits(S, self.n)
        sub = self.to_networkx().subgraph(players_of(bits))
        out = 0
        for p in nx.articulation_points(sub):
            out |= 1 << (p - 1)
        return Coalition(out, self.n)

    def convex_hull(self, S: CoalitionLike) -> Coalition:
        """Nodes on the unique paths joining members of S; forests only."""
        bits = as_bits(S, self.n)
        if not self.is_forest():
            raise NotATree("Convex hull is defined here for forests only")
        members = players_of(bits)
        if not members:
            return Coalition(0, self.n)
        g = self.to_networkx()
        root = members[0]
        hull = 1 << (root - 1)
        for p in members[1:]:
            try:
                path = nx.shortest_path(g, root, p)
            except nx.NetworkXNoPath as e:
                raise PreconditionViolated(f"Players {root} and {p} lie in different components") from e
            for q in path:
                hull |= 1 << (q - 1)
        return Coalition(hull, self.n)

    def __repr__(self) -> str:
        return f"CommGraph(n={self.n}, edges={self.edges()})"


def remove_edge(graph: CommGraph, i: int, j: int) -> CommGraph:
    return graph.remove_edge(i, j)


def add_edge(graph: CommGraph, i: int, j: int) -> CommGraph:
    return graph.add_edge(i, j)


def quotient_graph(graph: CommGraph, C: CoalitionLike) -> tuple[CommGraph, QuotientMap]:
    """Merge C into the proxy node [C], adjacent to every node adjacent to some member of C."""
    qmap = QuotientMap.for_coalition(graph.n, C)
    lifted = qmap.lift_masks()
    reach = [graph.neighborhood(m) for m in lifted]
    adj = []
    for a in range(len(lifted)):
        mask = 0
        for b, mb in enumerate(lifted):
            if a != b and reach[a] & mb:
                mask |= 1 << b
        adj.append(mask)
    return CommGraph(qmap.n, tuple(adj)), qmap
