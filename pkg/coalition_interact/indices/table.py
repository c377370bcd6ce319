"""Interaction tables: index values for every coalition up to a given order."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator

import numpy as np

from coalition_interact import config
from coalition_interact.errors import OrderOutOfRange, PreconditionViolated, UnknownKind
from coalition_interact.games.coalition import Coalition, CoalitionLike, as_bits, popcounts
from coalition_interact.games.game import TUGame
from coalition_interact.indices.shapley import banzhaf_ii_div, sii_div


class IndexKind(str, Enum):
    SHAPLEY = "shapley"
    BANZHAF = "banzhaf"
    MYERSON = "myerson"
    NETWORK = "network"

    @classmethod
    def parse(cls, value: "str | IndexKind") -> "IndexKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError as e:
            options = ", ".join(k.value for k in cls)
            raise UnknownKind(f"Unknown index kind {value!r}. Use one of: {options}") from e


@dataclass(frozen=True)
class InteractionTable:
    """Index values keyed by coalition mask, tagged with the index that produced them."""

    kind: IndexKind
    n: int
    entries: dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if 0 in self.entries:
            raise PreconditionViolated("Interaction tables never hold the empty coalition")

    def value(self, S: CoalitionLike) -> float:
        return self.entries[as_bits(S, self.n)]

    def rows(self) -> list[tuple[Coalition, float]]:
        """(coalition, value) sorted by order, then bits."""
        keys = sorted(self.entries, key=lambda b: (b.bit_count(), b))
        return [(Coalition(b, self.n), self.entries[b]) for b in keys]

    def by_order(self) -> dict[int, list[tuple[Coalition, float]]]:
        grouped: dict[int, list[tuple[Coalition, float]]] = {}
        for c, v in self.rows():
            grouped.setdefault(len(c), []).append((c, v))
        return grouped

    @property
    def max_order(self) -> int:
        return max((b.bit_count() for b in self.entries), default=0)

    def merge(self, other: "InteractionTable") -> "InteractionTable":
        """Union of two tables of the same kind and size."""
        if other.kind != self.kind or other.n != self.n:
            raise PreconditionViolated(
                f"Refusing to merge a {other.kind.value} table on {other.n} players "
                f"into a {self.kind.value} table on {self.n} players"
            )
        return InteractionTable(self.kind, self.n, {**self.entries, **other.entries})

    def __iter__(self) -> Iterator[tuple[Coalition, float]]:
        return iter(self.rows())

    def __len__(self) -> int:
        return len(self.entries)


def coalitions_up_to(n: int, max_order: int) -> list[int]:
    """Non-empty masks with at most max_order members, sorted by (order, bits)."""
    if not 1 <= max_order <= n:
        raise OrderOutOfRange(f"max_order must lie in 1..{n}, got {max_order}")
    pc = popcounts(n)
    masks = np.flatnonzero((pc >= 1) & (pc <= max_order))
    return sorted((int(b) for b in masks), key=lambda b: (b.bit_count(), b))


def build_table(
    kind: IndexKind,
    n: int,
    evaluate: Callable[[int], float],
    max_order: int = config.DEFAULT_MAX_ORDER,
    coalitions: list[int] | None = None,
) -> InteractionTable:
    masks = coalitions if coalitions is not None else coalitions_up_to(n, max_order)
    return InteractionTable(kind, n, {m: float(evaluate(m)) for m in masks})


_UNRESTRICTED = {IndexKind.SHAPLEY: sii_div, IndexKind.BANZHAF: banzhaf_ii_div}


def interaction_table(
    game: TUGame,
    kind: "str | IndexKind" = IndexKind.SHAPLEY,
    max_order: int = config.DEFAULT_MAX_ORDER,
) -> InteractionTable:
    """Shapley or Banzhaf interaction for every coalition of size up to max_order."""
    kind = IndexKind.parse(kind)
    evaluator = _UNRESTRICTED.get(kind)
    if evaluator is None:
        raise UnknownKind(f"{kind.value} needs a communication graph; use myerson_table")
    return build_table(kind, game.n, lambda m: evaluator(game, m), max_order)
