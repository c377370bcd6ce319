"""File formats, table/report emission and the command implementations."""
from .loaders import game_from_dict, graph_from_dict, parse_game, parse_graph
from .outputs import (
    game_to_json,
    get_output_filename_with_ext,
    render_table,
    save_output,
    table_to_csv,
    table_to_json,
)
from .html_export import md_to_html
from .commands import (
    CommandResult,
    RunConfig,
    cmd_compute,
    cmd_counterfactual,
    cmd_independence,
    cmd_reproduce,
    cmd_verify,
)

__all__ = [
    "game_from_dict",
    "graph_from_dict",
    "parse_game",
    "parse_graph",
    "game_to_json",
    "get_output_filename_with_ext",
    "render_table",
    "save_output",
    "table_to_csv",
    "table_to_json",
    "md_to_html",
    "CommandResult",
    "RunConfig",
    "cmd_compute",
    "cmd_counterfactual",
    "cmd_independence",
    "cmd_reproduce",
    "cmd_verify",
]
