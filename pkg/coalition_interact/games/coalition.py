"""Coalitions as bit vectors. Player i (1-based) occupies bit i-1."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

import numpy as np

from coalition_interact import config
from coalition_interact.errors import PlayerOutOfRange, SizeCapExceeded


@dataclass(frozen=True, order=True)
class Coalition:
    """A validated subset of the player set {1..n}."""

    bits: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise PlayerOutOfRange(f"Player count must be non-negative, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise PlayerOutOfRange(f"Coalition bits {self.bits:#b} exceed n={self.n}")

    @classmethod
    def of(cls, n: int, *players: int) -> "Coalition":
        return cls(mask_of(players, n), n)

    @classmethod
    def from_players(cls, n: int, players: Iterable[int]) -> "Coalition":
        return cls(mask_of(players, n), n)

    @classmethod
    def parse(cls, n: int, key: str) -> "Coalition":
        """Parse the canonical key format "1,3,5"."""
        key = key.strip()
        if not key:
            return cls(0, n)
        try:
            players = [int(p) for p in key.split(",")]
        except ValueError as e:
            raise PlayerOutOfRange(f"Bad coalition key {key!r}: {e}") from e
        return cls(mask_of(players, n), n)

    @classmethod
    def empty(cls, n: int) -> "Coalition":
        return cls(0, n)

    @classmethod
    def grand(cls, n: int) -> "Coalition":
        return cls((1 << n) - 1, n)

    def members(self) -> tuple[int, ...]:
        return players_of(self.bits)

    def key(self) -> str:
        return coalition_key(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __contains__(self, player: object) -> bool:
        return isinstance(player, int) and 1 <= player <= self.n and bool(self.bits >> (player - 1) & 1)

    def __or__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.bits | other.bits, max(self.n, other.n))

    def __and__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.bits & other.bits, max(self.n, other.n))

    def __sub__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.bits & ~other.bits, self.n)

    def __str__(self) -> str:
        return "{" + self.key() + "}"


CoalitionLike = Union[Coalition, int]


def as_bits(S: CoalitionLike, n: int) -> int:
    """Return the bit mask of S, checking it fits in n players."""
    if isinstance(S, Coalition):
        bits = S.bits
    elif isinstance(S, (int, np.integer)) and not isinstance(S, bool):
        bits = int(S)
    else:
        raise TypeError(f"Expected Coalition or int bit mask, got {type(S).__name__}")
    if bits < 0 or bits >> n:
        raise PlayerOutOfRange(f"Coalition {coalition_key(bits)!r} is not a subset of {{1..{n}}}")
    return bits


def mask_of(players: Iterable[int], n: int) -> int:
    mask = 0
    for p in players:
        if not 1 <= int(p) <= n:
            raise PlayerOutOfRange(f"Player {p} outside 1..{n}")
        mask |= 1 << (int(p) - 1)
    return mask


def players_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def bit_indices(mask: int) -> list[int]:
    """0-based positions of the set bits, ascending."""
    return [p - 1 for p in players_of(mask)]


def coalition_key(mask: int) -> str:
    return ",".join(str(p) for p in players_of(mask))


def submasks(mask: int) -> Iterator[int]:
    """All subsets of mask in ascending numeric order, including 0 and mask."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def lowest_bit(mask: int) -> int:
    return mask & -mask


@lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    """Read-only array of |S| for every S in 0..2^n-1."""
    counts = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        counts[1 << i: 1 << (i + 1)] = counts[: 1 << i] + 1
    counts.flags.writeable = False
    return counts


@lru_cache(maxsize=None)
def lattice_indices(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    idx.flags.writeable = False
    return idx


def check_cap(n: int, cap: int | None, what: str, default: int | None = None) -> None:
    limit = cap if cap is not None else (default if default is not None else config.MAX_N)
    if n > limit:
        raise SizeCapExceeded(n, limit, what)
