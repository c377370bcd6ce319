"""Shapley value, S-derivatives, and the Shapley and Banzhaf interaction indices."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from coalition_interact.errors import EmptyCoalition, OverlappingArguments, UnknownKind
from coalition_interact.games.coalition import (
    CoalitionLike,
    as_bits,
    coalition_key,
    lattice_indices,
    popcounts,
    submasks,
)
from coalition_interact.games.game import TUGame
from coalition_interact.games.properties import marginals


def _nonempty(S: CoalitionLike, n: int) -> int:
    bits = as_bits(S, n)
    if not bits:
        raise EmptyCoalition("Interaction indices are defined on non-empty coalitions")
    return bits


def _per_player_sum(weights: np.ndarray, n: int) -> np.ndarray:
    """out[i-1] = sum of weights[T] over T containing player i."""
    out = np.empty(n)
    for i in range(n):
        out[i] = weights.reshape(-1, 2, 1 << i)[:, 1, :].sum()
    return out


def shapley(game: TUGame) -> np.ndarray:
    """φ_i = Σ_{T ∋ i} Δ_v(T) / t, from the cached dividends. Entry i-1 is player i."""
    pc = popcounts(game.n)
    weights = np.zeros(1 << game.n)
    weights[1:] = game.dividends.deltas[1:] / pc[1:]
    return _per_player_sum(weights, game.n)


@lru_cache(maxsize=None)
def _permutation_weights(n: int) -> np.ndarray:
    w = np.array([float(Fraction(factorial(s) * factorial(n - s - 1), factorial(n))) for s in range(n)])
    w.flags.writeable = False
    return w


def shapley_marginal(game: TUGame) -> np.ndarray:
    """Shapley value as weighted marginal contributions s!(n-s-1)!/n!."""
    n = game.n
    w = _permutation_weights(n)[popcounts(n - 1)]
    return np.array([float(np.dot(w, marginals(game, i))) for i in range(1, n + 1)])


def _derivatives(game: TUGame, S: int) -> tuple[np.ndarray, np.ndarray]:
    """δ_S(T) for every T ⊆ N\\S by the alternating sum over L ⊆ S, with |T|."""
    idx = lattice_indices(game.n)
    outside = idx[(idx & S) == 0]
    s = S.bit_count()
    total = np.zeros(outside.shape[0])
    for L in submasks(S):
        sign = -1.0 if (s - L.bit_count()) % 2 else 1.0
        total += sign * game.values[outside | L]
    return total, popcounts(game.n)[outside]


def s_derivative(game: TUGame, S: CoalitionLike, T: CoalitionLike) -> float:
    """δ_S^v(T) = Σ_{L ⊆ S} (-1)^{s-l} v(T ∪ L)."""
    s_bits = _nonempty(S, game.n)
    t_bits = as_bits(T, game.n)
    if s_bits & t_bits:
        raise OverlappingArguments(
            f"S={coalition_key(s_bits)!r} and T={coalition_key(t_bits)!r} must be disjoint"
        )
    s = s_bits.bit_count()
    total = 0.0
    for L in submasks(s_bits):
        sign = -1.0 if (s - L.bit_count()) % 2 else 1.0
        total += sign * game.values[t_bits | L]
    return float(total)


@lru_cache(maxsize=None)
def _sii_weights(n: int, s: int) -> np.ndarray:
    """(n-t-s)! t! / (n-s+1)! for t = 0..n-s, exact then converted."""
    w = np.array([
        float(Fraction(factorial(n - t - s) * factorial(t), factorial(n - s + 1)))
        for t in range(n - s + 1)
    ])
    w.flags.writeable = False
    return w


def sii_deriv(game: TUGame, S: CoalitionLike) -> float:
    """Shapley interaction index from S-derivatives with factorial weights."""
    bits = _nonempty(S, game.n)
    deltas, t = _derivatives(game, bits)
    return float(np.dot(_sii_weights(game.n, bits.bit_count())[t], deltas))


def _dividend_sum(game: TUGame, S: int, weight_of_excess) -> float:
    idx = lattice_indices(game.n)
    above = (idx & S) == S
    excess = popcounts(game.n)[above] - S.bit_count()
    return float(np.dot(weight_of_excess(excess), game.dividends.deltas[above]))


def sii_div(game: TUGame, S: CoalitionLike) -> float:
    """Σ_{T ⊇ S} Δ_v(T) / (t - s + 1)."""
    bits = _nonempty(S, game.n)
    return _dividend_sum(game, bits, lambda k: 1.0 / (k + 1))


def banzhaf_ii_deriv(game: TUGame, S: CoalitionLike) -> float:
    bits = _nonempty(S, game.n)
    deltas, _ = _derivatives(game, bits)
    return float(deltas.sum() / 2.0 ** (game.n - bits.bit_count()))


def banzhaf_ii_div(game: TUGame, S: CoalitionLike) -> float:
    bits = _nonempty(S, game.n)
    return _dividend_sum(game, bits, lambda k: 0.5 ** k)


def banzhaf_ii(game: TUGame, S: CoalitionLike, form: str = "dividend") -> float:
    """Banzhaf interaction index: uniform weights 2^-(n-s) over derivatives, or 2^-(t-s) over dividends."""
    if form == "dividend":
        return banzhaf_ii_div(game, S)
    if form == "derivative":
        return banzhaf_ii_deriv(game, S)
    raise UnknownKind(f"Unknown Banzhaf form {form!r}; use 'dividend' or 'derivative'")


def banzhaf_value(game: TUGame) -> np.ndarray:
    pc = popcounts(game.n)
    weights = game.dividends.deltas * 0.5 ** np.maximum(pc - 1, 0)
    return _per_player_sum(weights, game.n)
