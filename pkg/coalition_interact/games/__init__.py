"""Games, coalitions, dividends and quotient games."""
from .coalition import Coalition, CoalitionLike, as_bits, coalition_key, mask_of, players_of, submasks
from .game import DividendVector, QuotientMap, TUGame, mobius, new_game, quotient_game, zeta
from .properties import (
    is_convex,
    is_superadditive,
    is_veto_partnership,
    null_players,
    veto_partnerships,
)
from .builtins import (
    BUILTIN_KINDS,
    builtin,
    dictator,
    example1a,
    example2,
    horse_market,
    messages,
    null,
    unanimity,
)

__all__ = [
    "Coalition",
    "CoalitionLike",
    "as_bits",
    "coalition_key",
    "mask_of",
    "players_of",
    "submasks",
    "DividendVector",
    "QuotientMap",
    "TUGame",
    "mobius",
    "new_game",
    "quotient_game",
    "zeta",
    "is_convex",
    "is_superadditive",
    "is_veto_partnership",
    "null_players",
    "veto_partnerships",
    "BUILTIN_KINDS",
    "builtin",
    "dictator",
    "example1a",
    "example2",
    "horse_market",
    "messages",
    "null",
    "unanimity",
]
