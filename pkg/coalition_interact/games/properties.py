"""Diagnostic predicates on games: null players, veto partnerships, superadditivity, convexity."""
from __future__ import annotations

import logging

import numpy as np

from coalition_interact import config
from coalition_interact.errors import EmptyCoalition
from coalition_interact.games.coalition import (
    CoalitionLike,
    as_bits,
    check_cap,
    lattice_indices,
    submasks,
)
from coalition_interact.games.game import TUGame

logger = logging.getLogger(__name__)


def marginals(game: TUGame, player: int) -> np.ndarray:
    """v(S ∪ i) - v(S) for every S ⊆ N\\i, in ascending order of S."""
    view = game.values.reshape(-1, 2, 1 << (player - 1))
    return (view[:, 1, :] - view[:, 0, :]).reshape(-1)


def null_players(game: TUGame, tol: float = config.VALUE_TOL) -> frozenset[int]:
    """Players whose marginal contribution is zero everywhere."""
    return frozenset(
        i for i in range(1, game.n + 1)
        if not np.any(np.abs(marginals(game, i)) > tol)
    )


def null_mask(game: TUGame, tol: float = config.VALUE_TOL) -> int:
    mask = 0
    for i in null_players(game, tol):
        mask |= 1 << (i - 1)
    return mask


def is_veto_partnership(game: TUGame, P: CoalitionLike, tol: float = config.VALUE_TOL) -> bool:
    """v(T ∪ S) = v(T) = 0 for every T ⊆ N\\P and S ⊊ P.

    Those coalitions are exactly the ones that do not contain all of P.
    """
    bits = as_bits(P, game.n)
    if not bits:
        raise EmptyCoalition("A veto partnership must be non-empty")
    idx = lattice_indices(game.n)
    outside = (idx & bits) != bits
    return not np.any(np.abs(game.values[outside]) > tol)


def _support_core(game: TUGame, tol: float) -> int | None:
    """Intersection of every coalition with non-zero worth; None for the null game."""
    nonzero = np.flatnonzero(np.abs(game.values) > tol)
    if nonzero.size == 0:
        return None
    return int(np.bitwise_and.reduce(nonzero.astype(np.int64)))


def veto_partnerships(game: TUGame, tol: float = config.VALUE_TOL, max_n: int | None = None) -> list[int]:
    """All veto partnerships, ascending by cardinality then bits.

    P qualifies iff every coalition with non-zero worth contains P, i.e. P is a
    non-empty subset of the intersection of the game's support.
    """
    check_cap(game.n, max_n, "veto partnership enumeration", default=config.ENUM_MAX_N)
    core = _support_core(game, tol)
    if core is None:
        core = (1 << game.n) - 1
    found = [p for p in submasks(core) if p]
    return sorted(found, key=lambda p: (p.bit_count(), p))


def is_superadditive(game: TUGame, tol: float = config.VALUE_TOL, max_n: int | None = None) -> bool:
    """v(S ∪ T) >= v(S) + v(T) for every disjoint S, T."""
    check_cap(game.n, max_n, "superadditivity check", default=config.ENUM_MAX_N)
    values = game.values
    for union in range(1, 1 << game.n):
        subs = np.fromiter(submasks(union), dtype=np.int64)
        if np.any(values[union] < values[subs] + values[union ^ subs] - tol):
            return False
    return True


def is_convex(game: TUGame, tol: float = config.VALUE_TOL) -> bool:
    """Supermodularity, tested on every pair of players via second differences."""
    n = game.n
    for i in range(n):
        for j in range(i + 1, n):
            a = game.values.reshape(1 << (n - j - 1), 2, 1 << (j - i - 1), 2, 1 << i)
            second = a[:, 1, :, 1, :] - a[:, 1, :, 0, :] - a[:, 0, :, 1, :] + a[:, 0, :, 0, :]
            if np.any(second < -tol):
                return False
    return True


def warn_if_not_superadditive(game: TUGame, label: str = "game") -> bool:
    """Log a warning for non-superadditive input; never raises."""
    if game.n > config.SUPERADDITIVE_CHECK_MAX_N:
        return True
    ok = is_superadditive(game, max_n=config.SUPERADDITIVE_CHECK_MAX_N)
    if not ok:
        logger.warning("%s is not superadditive; indices are still well defined", label)
    return ok
