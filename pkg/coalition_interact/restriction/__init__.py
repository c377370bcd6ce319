"""Graph-restricted games: Myerson value, Myerson and network-induced interaction."""
from .situation import (
    CommunicationSituation,
    build_restricted_game,
    game_centrality,
    mii,
    myerson_table,
    myerson_value,
    nii,
    restricted_banzhaf,
    restricted_game,
)
from .partnerships import (
    graph_null_players,
    is_graph_null,
    is_veto_graph_partnership,
    srvpc_quotient,
    veto_graph_partnerships,
    veto_graph_witness,
)
from .dividends import (
    DividendRelation,
    DividendReport,
    compare_dividend_relations,
    restricted_dividend_direct,
    restricted_dividend_general,
    restricted_dividend_tree,
)

__all__ = [
    "CommunicationSituation",
    "build_restricted_game",
    "game_centrality",
    "mii",
    "myerson_table",
    "myerson_value",
    "nii",
    "restricted_banzhaf",
    "restricted_game",
    "graph_null_players",
    "is_graph_null",
    "is_veto_graph_partnership",
    "srvpc_quotient",
    "veto_graph_partnerships",
    "veto_graph_witness",
    "DividendRelation",
    "DividendReport",
    "compare_dividend_relations",
    "restricted_dividend_direct",
    "restricted_dividend_general",
    "restricted_dividend_tree",
]
