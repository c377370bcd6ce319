"""TU games, Harsanyi dividends and quotient games on dense lattice tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from coalition_interact import config
from coalition_interact.errors import (
    EmptyCoalition,
    NonZeroEmptyCoalition,
    PreconditionViolated,
    SizeMismatch,
)
from coalition_interact.games.coalition import (
    Coalition,
    CoalitionLike,
    as_bits,
    check_cap,
    coalition_key,
    players_of,
)


def _frozen(values, length: int) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True).reshape(-1)
    if arr.shape[0] != length:
        raise SizeMismatch(f"Expected {length} coalition values, got {arr.shape[0]}")
    arr.flags.writeable = False
    return arr


def embed_masks(masks: Sequence[int]) -> np.ndarray:
    """Map every subset of k compact players onto original bit masks.

    masks[k] is the original mask that compact bit k stands for; the result
    has length 2^len(masks) and entry q is the union of masks[k] over bits of q.
    """
    out = np.zeros(1 << len(masks), dtype=np.int64)
    for k, m in enumerate(masks):
        out[1 << k: 1 << (k + 1)] = out[: 1 << k] | int(m)
    return out


@dataclass(frozen=True, eq=False)
class TUGame:
    """A transferable-utility game with v(∅) = 0."""

    n: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise SizeMismatch(f"A game needs at least one player, got n={self.n}")
        arr = _frozen(self.values, 1 << self.n)
        if abs(arr[0]) > config.VALUE_TOL:
            raise NonZeroEmptyCoalition(f"v(∅) must be 0, got {arr[0]}")
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_function(cls, n: int, f: Callable[[Coalition], float], max_n: int | None = None) -> "TUGame":
        """Tabulate f over every coalition of {1..n}."""
        check_cap(n, max_n, "game storage")
        return cls(n, [float(f(Coalition(bits, n))) for bits in range(1 << n)])

    def value(self, S: CoalitionLike) -> float:
        return float(self.values[as_bits(S, self.n)])

    def grand_value(self) -> float:
        return float(self.values[-1])

    @cached_property
    def dividends(self) -> "DividendVector":
        """Harsanyi dividends, computed once per game."""
        return mobius(self)

    def _same_n(self, other: "TUGame") -> None:
        if other.n != self.n:
            raise SizeMismatch(f"Cannot combine games on {self.n} and {other.n} players")

    def __add__(self, other: "TUGame") -> "TUGame":
        self._same_n(other)
        return TUGame(self.n, self.values + other.values)

    def __sub__(self, other: "TUGame") -> "TUGame":
        self._same_n(other)
        return TUGame(self.n, self.values - other.values)

    def scale(self, alpha: float) -> "TUGame":
        return TUGame(self.n, float(alpha) * self.values)

    def squared(self) -> "TUGame":
        """The game S -> v(S)^2."""
        return TUGame(self.n, self.values ** 2)

    def restrict_to(self, C: CoalitionLike) -> tuple["TUGame", tuple[int, ...]]:
        """Subgame v|_C on players relabeled 1..c; also returns the original ids in order."""
        bits = as_bits(C, self.n)
        if not bits:
            raise EmptyCoalition("Cannot restrict a game to the empty coalition")
        members = players_of(bits)
        lift = embed_masks([1 << (p - 1) for p in members])
        return TUGame(len(members), self.values[lift]), members

    def allclose(self, other: "TUGame", tol: float = config.VALUE_TOL) -> bool:
        return self.n == other.n and bool(np.allclose(self.values, other.values, rtol=0.0, atol=tol))

    def as_dict(self, tol: float = 0.0) -> dict[str, float]:
        """Non-zero values keyed by coalition key."""
        return {
            coalition_key(int(b)): float(self.values[b])
            for b in range(1, 1 << self.n)
            if abs(self.values[b]) > tol
        }

    def __repr__(self) -> str:
        return f"TUGame(n={self.n})"


@dataclass(frozen=True, eq=False)
class DividendVector:
    """Harsanyi dividends Δ_v(T), indexed like the game table."""

    n: int
    deltas: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = _frozen(self.deltas, 1 << self.n)
        if abs(arr[0]) > config.VALUE_TOL:
            raise NonZeroEmptyCoalition(f"Dividend of ∅ must be 0, got {arr[0]}")
        object.__setattr__(self, "deltas", arr)

    def dividend(self, T: CoalitionLike) -> float:
        return float(self.deltas[as_bits(T, self.n)])

    def support(self, tol: float = config.VALUE_TOL) -> list[int]:
        """Masks with a non-zero dividend, ascending."""
        return [int(b) for b in np.flatnonzero(np.abs(self.deltas) > tol)]

    def __repr__(self) -> str:
        return f"DividendVector(n={self.n}, support={len(self.support())})"


def new_game(n: int, values, max_n: int | None = None) -> TUGame:
    """Validate and build a game from a dense table of 2^n values."""
    check_cap(n, max_n, "game storage")
    return TUGame(n, values)


def _lattice_transform(values: np.ndarray, n: int, sign: int) -> np.ndarray:
    a = np.array(values, dtype=np.float64, copy=True)
    for i in range(n):
        view = a.reshape(-1, 2, 1 << i)
        if sign < 0:
            view[:, 1, :] -= view[:, 0, :]
        else:
            view[:, 1, :] += view[:, 0, :]
    return a


def mobius(game: TUGame) -> DividendVector:
    """Harsanyi dividends by the in-place subset-lattice transform, O(n 2^n)."""
    return DividendVector(game.n, _lattice_transform(game.values, game.n, -1))


def zeta(dividends: DividendVector) -> TUGame:
    """Inverse of mobius: v(S) = sum of Δ(T) over T ⊆ S."""
    return TUGame(dividends.n, _lattice_transform(dividends.deltas, dividends.n, +1))


@dataclass(frozen=True)
class QuotientMap:
    """Relabeling used when a coalition C collapses into one proxy player.

    The proxy takes the smallest original id in C; the retained ids (the proxy
    plus N\\C) are sorted and compacted to 1..n-c+1, i.e. bits 0..n-c.
    """

    original_n: int
    merged: int
    retained: tuple[int, ...]

    @classmethod
    def for_coalition(cls, n: int, C: CoalitionLike) -> "QuotientMap":
        bits = as_bits(C, n)
        if not bits:
            raise EmptyCoalition("Quotient needs a non-empty coalition")
        proxy = players_of(bits)[0]
        rest = [p for p in range(1, n + 1) if not bits >> (p - 1) & 1]
        return cls(n, bits, tuple(sorted(rest + [proxy])))

    @property
    def n(self) -> int:
        return len(self.retained)

    @property
    def proxy(self) -> int:
        """Original id that labels [C]."""
        return players_of(self.merged)[0]

    @property
    def proxy_id(self) -> int:
        """Compact id of [C]."""
        return self.retained.index(self.proxy) + 1

    def relabel(self) -> dict[int, int]:
        return {p: k + 1 for k, p in enumerate(self.retained)}

    def lift_masks(self) -> list[int]:
        return [self.merged if p == self.proxy else 1 << (p - 1) for p in self.retained]

    def lift(self, Q: CoalitionLike) -> int:
        """Original coalition represented by a quotient coalition."""
        q = as_bits(Q, self.n)
        out = 0
        for k, m in enumerate(self.lift_masks()):
            if q >> k & 1:
                out |= m
        return out

    def project(self, S: CoalitionLike) -> int:
        """Quotient coalition of an original S that contains all of C or none of it."""
        s = as_bits(S, self.original_n)
        inside = s & self.merged
        if inside and inside != self.merged:
            raise PreconditionViolated(
                f"Coalition {coalition_key(s)!r} splits the merged set {coalition_key(self.merged)!r}"
            )
        out = 0
        for k, m in enumerate(self.lift_masks()):
            if s & m == m:
                out |= 1 << k
        return out


def quotient_game(game: TUGame, C: CoalitionLike) -> tuple[TUGame, QuotientMap]:
    """Collapse C into its proxy: v_[C](S) = v(S) and v_[C](S ∪ [C]) = v(S ∪ C)."""
    qmap = QuotientMap.for_coalition(game.n, C)
    lift = embed_masks(qmap.lift_masks())
    return TUGame(qmap.n, game.values[lift]), qmap
