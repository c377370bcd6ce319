"""Named games: messages, horse market, unanimity, dictator, null, and two illustration games."""
from __future__ import annotations

from typing import Iterable

import numpy as np

from coalition_interact.errors import EmptyCoalition, PlayerOutOfRange, UnknownKind
from coalition_interact.games.coalition import (
    CoalitionLike,
    as_bits,
    check_cap,
    lattice_indices,
    mask_of,
    popcounts,
)
from coalition_interact.games.game import TUGame

HORSE_PLAYERS = 5

# Path-restriction game: zero on singletons and on subsets of {1,2,3}, 2 elsewhere.
_EXAMPLE1A_ZERO = (0b0011, 0b0110, 0b0101, 0b0111)
# Partnership game: worth 1 on these coalitions, 0 elsewhere.
_EXAMPLE2_ONES = ((1, 3), (1, 4), (1, 2, 3), (1, 2, 4), (1, 3, 4), (1, 2, 3, 4))


def _coerce(T, n: int) -> int:
    if isinstance(T, (list, tuple, set, frozenset)):
        return mask_of(T, n)
    return as_bits(T, n)


def messages(n: int, max_n: int | None = None) -> TUGame:
    """v_m(S) = s(s-1): every pair exchanges two messages."""
    check_cap(n, max_n, "game storage")
    s = popcounts(n).astype(np.float64)
    return TUGame(n, s * (s - 1))


def horse_market() -> TUGame:
    """Player 1 sells a horse; buyers 4 and 5 value it at 90 and 100; 2 and 3 intermediate."""
    idx = lattice_indices(HORSE_PLAYERS)
    with_seller = (idx & 0b00001) != 0
    buyer4 = (idx & 0b01000) != 0
    buyer5 = (idx & 0b10000) != 0
    values = np.where(with_seller & buyer5, 100.0, np.where(with_seller & buyer4, 90.0, 0.0))
    return TUGame(HORSE_PLAYERS, values)


def unanimity(n: int, T: CoalitionLike | Iterable[int], max_n: int | None = None) -> TUGame:
    """u_T: worth 1 exactly on coalitions containing T."""
    check_cap(n, max_n, "game storage")
    bits = _coerce(T, n)
    if not bits:
        raise EmptyCoalition("Unanimity game needs a non-empty carrier")
    idx = lattice_indices(n)
    return TUGame(n, ((idx & bits) == bits).astype(np.float64))


def dictator(n: int, i: int, max_n: int | None = None) -> TUGame:
    if not 1 <= i <= n:
        raise PlayerOutOfRange(f"Dictator {i} outside 1..{n}")
    return unanimity(n, 1 << (i - 1), max_n=max_n)


def null(n: int, max_n: int | None = None) -> TUGame:
    check_cap(n, max_n, "game storage")
    return TUGame(n, np.zeros(1 << n))


def example1a() -> TUGame:
    """Superadditive 4-player game where player 2 turns null only after restriction by a path."""
    values = np.full(16, 2.0)
    values[0] = 0.0
    values[[1, 2, 4, 8]] = 0.0
    values[list(_EXAMPLE1A_ZERO)] = 0.0
    return TUGame(4, values)


def example2() -> TUGame:
    """4-player game whose only veto partnership is the singleton {1}."""
    values = np.zeros(16)
    for S in _EXAMPLE2_ONES:
        values[mask_of(S, 4)] = 1.0
    return TUGame(4, values)


BUILTIN_KINDS = ("messages", "horse_market", "unanimity", "dictator", "null", "example1a", "example2")


def builtin(kind: str, *, n: int | None = None, T=None, i: int | None = None, max_n: int | None = None) -> TUGame:
    """Dispatch a named game. Parameters follow each constructor."""
    key = kind.strip().lower().replace("-", "_")
    if key in ("horse", "horse_market"):
        return horse_market()
    if key == "example1a":
        return example1a()
    if key == "example2":
        return example2()
    if key in ("messages", "unanimity", "dictator", "null") and n is None:
        raise UnknownKind(f"Builtin game {kind!r} needs n")
    if key == "messages":
        return messages(n, max_n=max_n)
    if key == "unanimity":
        if T is None:
            raise UnknownKind("Builtin 'unanimity' needs a carrier T")
        return unanimity(n, T, max_n=max_n)
    if key == "dictator":
        if i is None:
            raise UnknownKind("Builtin 'dictator' needs a player i")
        return dictator(n, i, max_n=max_n)
    if key == "null":
        return null(n, max_n=max_n)
    raise UnknownKind(f"Unknown builtin game {kind!r}. Use one of: {', '.join(BUILTIN_KINDS)}")
