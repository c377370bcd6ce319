"""Components, connecting sets and intermediaries of coalitions in a communication graph."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from coalition_interact import config
from coalition_interact.errors import EmptyCoalition
from coalition_interact.games.coalition import (
    Coalition,
    CoalitionLike,
    as_bits,
    check_cap,
    lowest_bit,
    players_of,
    submasks,
)
from coalition_interact.graphs.graph import CommGraph


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components of Γ_S, ordered by their smallest member."""

    n: int
    masks: tuple[int, ...]

    def coalitions(self) -> list[Coalition]:
        return [Coalition(m, self.n) for m in self.masks]

    def __iter__(self) -> Iterator[Coalition]:
        return iter(self.coalitions())

    def __len__(self) -> int:
        return len(self.masks)

    def component_of(self, player: int) -> Coalition | None:
        bit = 1 << (player - 1)
        for m in self.masks:
            if m & bit:
                return Coalition(m, self.n)
        return None


def reach(graph: CommGraph, start: int, within: int) -> int:
    """Flood fill from the start mask, moving only through nodes of within."""
    seen = start & within
    frontier = seen
    while frontier:
        nxt = 0
        for p in players_of(frontier):
            nxt |= graph.adj[p - 1]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def component_masks(graph: CommGraph, S: int) -> list[int]:
    """Components of Γ_S as masks; ascending minimum element falls out of lowest-bit seeding."""
    out = []
    rest = S
    while rest:
        comp = reach(graph, lowest_bit(rest), S)
        out.append(comp)
        rest &= ~comp
    return out


def components(graph: CommGraph, S: CoalitionLike) -> ComponentPartition:
    bits = as_bits(S, graph.n)
    return ComponentPartition(graph.n, tuple(component_masks(graph, bits)))


def connects(graph: CommGraph, R: int, S: int) -> bool:
    """Γ_R connects S: every member of S lies in one component of Γ_R."""
    if S & (S - 1) == 0:
        return S & R == S
    return reach(graph, lowest_bit(S), R) & S == S


def is_connected_in(graph: CommGraph, S: CoalitionLike) -> bool:
    bits = as_bits(S, graph.n)
    return connects(graph, bits, bits)


@lru_cache(maxsize=8192)
def _minimal_connecting(graph: CommGraph, S: int) -> tuple[int, ...]:
    whole = (1 << graph.n) - 1
    home = reach(graph, lowest_bit(S), whole)
    if home & S != S:
        return ()
    extra = home & ~S
    found = []
    for X in submasks(extra):
        R = S | X
        if not connects(graph, R, S):
            continue
        if all(not connects(graph, R & ~(1 << (x - 1)), S) for x in players_of(X)):
            found.append(R)
    return tuple(sorted(found))


def minimal_connecting_masks(graph: CommGraph, S: CoalitionLike, max_n: int | None = None) -> tuple[int, ...]:
    bits = as_bits(S, graph.n)
    if not bits:
        raise EmptyCoalition("Minimal connecting sets need a non-empty coalition")
    check_cap(graph.n, max_n, "minimal connecting set enumeration", default=config.ENUM_MAX_N)
    return _minimal_connecting(graph, bits)


def minimal_connecting_sets(graph: CommGraph, S: CoalitionLike, max_n: int | None = None) -> list[Coalition]:
    """Every inclusion-minimal R ⊇ S whose induced subgraph connects S, ascending by bits.

    Brute force over supersets inside S's component; connectivity is monotone in
    R, so checking each single removal certifies minimality.
    """
    return [Coalition(m, graph.n) for m in minimal_connecting_masks(graph, S, max_n)]


def intermediaries_mask(graph: CommGraph, S: CoalitionLike, max_n: int | None = None) -> int:
    bits = as_bits(S, graph.n)
    union = 0
    for m in minimal_connecting_masks(graph, bits, max_n):
        union |= m
    return union & ~bits


def essential_intermediaries_mask(graph: CommGraph, S: CoalitionLike, max_n: int | None = None) -> int:
    bits = as_bits(S, graph.n)
    found = minimal_connecting_masks(graph, bits, max_n)
    if not found:
        return 0
    common = found[0]
    for m in found[1:]:
        common &= m
    return common & ~bits


def intermediaries(graph: CommGraph, S: CoalitionLike, max_n: int | None = None) -> Coalition:
    """B_Γ(S): union of the minimal connecting sets, minus S. Empty when S spans components."""
    return Coalition(intermediaries_mask(graph, S, max_n), graph.n)


def essential_intermediaries(graph: CommGraph, S: CoalitionLike, max_n: int | None = None) -> Coalition:
    """EB_Γ(S): intersection of the minimal connecting sets, minus S."""
    return Coalition(essential_intermediaries_mask(graph, S, max_n), graph.n)
