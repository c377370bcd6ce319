"""Command implementations behind the CLI. Each returns a CommandResult; main.py prints and exits."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from coalition_interact import config
from coalition_interact.axioms import (
    AXIOMS,
    Axiom,
    AxiomReport,
    EXPECTED_VIOLATIONS,
    GraphIndexFunction,
    GraphIndexKind,
    KNOWN_DISCREPANCIES,
    Verdict,
    check_admissibility,
    check_axiom,
    companion_pairs,
    compare_to_appendix,
    exhaustive_small_suite,
    independence_suite,
    linearity_pairs,
)
from coalition_interact.errors import VERDICT_MISMATCH_EXIT_CODE, PreconditionViolated
from coalition_interact.games.builtins import horse_market, messages
from coalition_interact.games.coalition import Coalition, coalition_key, players_of
from coalition_interact.games.game import TUGame
from coalition_interact.games.properties import warn_if_not_superadditive
from coalition_interact.graphs.graph import CommGraph
from coalition_interact.indices.shapley import banzhaf_ii_div, sii_div
from coalition_interact.indices.table import IndexKind, InteractionTable, build_table, coalitions_up_to
from coalition_interact.restriction.situation import CommunicationSituation, is_complete, mii, nii
from coalition_interact.reporting.html_export import md_to_html
from coalition_interact.reporting.loaders import parse_game, parse_graph
from coalition_interact.reporting.outputs import (
    format_value,
    records_to_csv,
    records_to_json,
    render_table,
    save_output,
    wide_table_csv,
    wide_table_markdown,
    write_text,
)

logger = logging.getLogger(__name__)

# Five-player communication graph used by both worked examples
FIGURE_EDGES = ((1, 2), (1, 3), (2, 4), (3, 4), (3, 5))

# Reasons quoted in the report footnotes
_IDENTITY_REASON = "computed as Myerson minus Shapley; the printed value does not match its own Myerson and Shapley rows"
_RESTRICTED_REASON = (
    "exact Shapley interaction of the restricted game; the printed Network entry "
    "follows from the printed Myerson entry, which the restricted game does not reproduce"
)

# (case, table, row, coalition) -> (value printed in the original tables, reason the computation differs)
PRINTED_DISCREPANCIES = {
    ("messages", "table2", "Myerson", 0b01001): (1.33, _RESTRICTED_REASON),
    ("messages", "table2", "Network", 0b01001): (-0.67, _RESTRICTED_REASON),
    ("messages", "table2", "Myerson", 0b10001): (0.50, _RESTRICTED_REASON),
    ("messages", "table2", "Network", 0b10001): (-1.50, _RESTRICTED_REASON),
    ("messages", "table2", "Myerson", 0b11000): (0.50, _RESTRICTED_REASON),
    ("messages", "table2", "Network", 0b11000): (-1.50, _RESTRICTED_REASON),
    ("horse", "table3", "Network", 0b10000): (-9.62, _IDENTITY_REASON),
}

# Appended to the report after the numbered footnotes
READING_NOTES = (
    "The four-player partnership game used for the converse of the partnership result has exactly one "
    "veto partnership, the singleton {1}, under a literal reading of the definition; the text states it has none.",
)

CASES = ("messages", "horse")


@dataclass(frozen=True)
class RunConfig:
    game_path: Optional[Path] = None
    graph_path: Optional[Path] = None
    index: str = IndexKind.SHAPLEY.value
    order: Optional[int] = None
    coalition: Optional[str] = None
    out: Optional[Path] = None
    fmt: str = "csv"
    toggles: tuple[str, ...] = ()
    case: Optional[str] = None
    max_n: Optional[int] = None
    tol: float = config.AXIOM_TOL
    alpha: float = 1.0


@dataclass
class CommandResult:
    text: str
    paths: list[Path] = field(default_factory=list)
    exit_code: int = 0


def load_situation(cfg: RunConfig) -> CommunicationSituation:
    """Game from --game and graph from --graph; no graph means the complete graph."""
    if cfg.game_path is None:
        raise PreconditionViolated("This command needs --game")
    game = parse_game(cfg.game_path, cfg.max_n)
    warn_if_not_superadditive(game, Path(cfg.game_path).name)
    if cfg.graph_path is None:
        return CommunicationSituation.complete(game, cfg.max_n)
    graph = parse_graph(cfg.graph_path)
    return CommunicationSituation(game, graph, cfg.max_n)


def _evaluator(kind: IndexKind, sit: CommunicationSituation) -> Callable[[int], float]:
    if kind is IndexKind.SHAPLEY:
        return lambda m: sii_div(sit.game, m)
    if kind is IndexKind.BANZHAF:
        return lambda m: banzhaf_ii_div(sit.game, m)
    if kind is IndexKind.MYERSON:
        return lambda m: mii(sit, m)
    return lambda m: nii(sit, m)


def _masks(cfg: RunConfig, n: int) -> list[int]:
    if cfg.coalition:
        return [Coalition.parse(n, cfg.coalition).bits]
    order = cfg.order if cfg.order is not None else min(config.DEFAULT_MAX_ORDER, n)
    return coalitions_up_to(n, order)


def compute_table(cfg: RunConfig, sit: CommunicationSituation) -> InteractionTable:
    kind = IndexKind.parse(cfg.index)
    if kind is IndexKind.NETWORK and is_complete(sit.graph):
        logger.warning("Network-induced interaction on a complete graph is identically 0")
    if kind in (IndexKind.SHAPLEY, IndexKind.BANZHAF) and cfg.graph_path is not None:
        logger.info("%s ignores the communication graph", kind.value)
    masks = _masks(cfg, sit.n)
    if masks == [0]:
        raise PreconditionViolated("--coalition must name at least one player")
    return build_table(kind, sit.n, _evaluator(kind, sit), coalitions=masks)


def _emit(cfg: RunConfig, content: str, output_type: str, label: str) -> Path:
    if cfg.out is not None:
        return write_text(cfg.out, content)
    return save_output(content, output_type, label, ext=cfg.fmt)


def cmd_compute(cfg: RunConfig) -> CommandResult:
    sit = load_situation(cfg)
    table = compute_table(cfg, sit)
    content = render_table(table, cfg.fmt)
    path = _emit(cfg, content, table.kind.value, Path(cfg.game_path).stem)
    logger.info("Wrote %d rows to %s", len(table), path)
    return CommandResult(content, [path])


def _case_game(case: str) -> TUGame:
    return messages(5) if case == "messages" else horse_market()


def _reproduction_tables(case: str) -> list[tuple[str, str, list[int], list[tuple[str, list[float]]]]]:
    """(file stem, caption, columns, rows) for the two tables of one worked example."""
    game = _case_game(case)
    sit = CommunicationSituation(game, CommGraph.from_edges(5, FIGURE_EDGES))
    first, second = ("table1", "table2") if case == "messages" else ("table3", "table4")
    title = "messages game" if case == "messages" else "horse market"
    out = []
    for stem, order in ((first, 1), (second, 2)):
        columns = sorted((m for m in coalitions_up_to(5, order) if m.bit_count() == order), key=players_of)
        rows = [
            ("Myerson", [mii(sit, m) for m in columns]),
            ("Shapley", [sii_div(game, m) for m in columns]),
            ("Network", [nii(sit, m) for m in columns]),
        ]
        kind = "single-player" if order == 1 else "two-player"
        out.append((stem, f"Interaction values in the {title} for {kind} coalitions", columns, rows))
    return out


def reproduction_markdown(cases: tuple[str, ...] = CASES) -> str:
    lines = ["# Interaction tables for the worked examples", ""]
    lines.append(f"Communication graph edges: {', '.join(f'{i}-{j}' for i, j in FIGURE_EDGES)}.")
    lines.append("")
    notes = []
    for case in cases:
        for stem, caption, columns, rows in _reproduction_tables(case):
            marks = {}
            for (c, t, row, mask), (printed, reason) in PRINTED_DISCREPANCIES.items():
                if c == case and t == stem:
                    notes.append((stem, row, mask, printed, reason))
                    marks[(row, mask)] = f" [{len(notes)}]"
            lines += [f"## {stem}: {caption}", "", wide_table_markdown(columns, rows, marks=marks)]
    lines += ["## Notes", ""]
    for k, (stem, row, mask, printed, reason) in enumerate(notes, start=1):
        lines.append(f"> [{k}] {stem}, {row} {{{coalition_key(mask)}}}: {reason}. The printed table lists {printed:.2f}.")
        lines.append("")
    for note in READING_NOTES:
        lines += [f"> {note}", ""]
    return "\n".join(lines)


def cmd_reproduce(case: Optional[str] = None, out_dir: Optional[Path] = None) -> CommandResult:
    """Write table1..table4 CSVs (2 decimals) plus report.md and report.html."""
    if case is not None and case not in CASES:
        raise PreconditionViolated(f"Unknown case {case!r}. Use one of: {', '.join(CASES)}")
    cases = (case,) if case else CASES
    out_dir = Path(out_dir) if out_dir is not None else config.GENERATED_DIR
    paths = []
    shown = []
    for c in cases:
        for stem, caption, columns, rows in _reproduction_tables(c):
            content = wide_table_csv(columns, rows)
            paths.append(write_text(out_dir / f"{stem}.csv", content))
            shown.append(f"{stem}: {caption}\n{content}")
    report = reproduction_markdown(cases)
    paths.append(write_text(out_dir / "report.md", report))
    paths.append(write_text(out_dir / "report.html", md_to_html(report, title="Interaction tables")))
    return CommandResult("\n".join(shown), paths)


def parse_toggle(spec: str) -> tuple[str, int, int]:
    """'i,j' toggles; '+i,j' must add a new edge; '-i,j' must remove an existing one."""
    text = spec.strip()
    mode = "toggle"
    if text.startswith(("+", "-")):
        mode = "add" if text[0] == "+" else "remove"
        text = text[1:]
    try:
        i, j = (int(p) for p in text.split(","))
    except ValueError as e:
        raise PreconditionViolated(f"Edge toggle {spec!r} is not of the form i,j") from e
    return mode, i, j


def apply_toggles(graph: CommGraph, toggles: tuple[str, ...]) -> CommGraph:
    for spec in toggles:
        mode, i, j = parse_toggle(spec)
        if mode == "toggle":
            mode = "remove" if graph.has_edge(i, j) else "add"
        graph = graph.remove_edge(i, j) if mode == "remove" else graph.add_edge(i, j)
        logger.debug("%s edge (%d, %d)", mode, i, j)
    return graph


def counterfactual_rows(cfg: RunConfig, sit: CommunicationSituation) -> list[dict]:
    after = sit.with_graph(apply_toggles(sit.graph, cfg.toggles))
    before_table = compute_table(cfg, sit)
    after_table = compute_table(cfg, after)
    rows = []
    for c, before in before_table.rows():
        value = after_table.entries[c.bits]
        rows.append({"coalition": c.key(), "order": len(c), "before": before, "after": value, "delta": value - before})
    # stable on ties, which keep (order, bits) order
    rows.sort(key=lambda r: -round(abs(r["delta"]), 9))
    return rows


def cmd_counterfactual(cfg: RunConfig) -> CommandResult:
    sit = load_situation(cfg)
    rows = counterfactual_rows(cfg, sit)
    kind = IndexKind.parse(cfg.index).value
    if cfg.fmt == "json":
        content = records_to_json(rows, kind=kind, toggles=list(cfg.toggles))
    else:
        content = records_to_csv(rows, ("coalition", "order", "before", "after", "delta"))
    path = _emit(cfg, content, "counterfactual", f"{Path(cfg.game_path).stem} {kind}")
    return CommandResult(content, [path])


def _verdict_cell(report: AxiomReport) -> str:
    return "holds" if report.holds else "VIOLATED"


def render_reports(reports: list[AxiomReport]) -> str:
    """A verdict matrix (one row per index) followed by the witnesses."""
    axes = [Axiom.GII, *AXIOMS]
    matrix: dict[str, dict[Axiom, AxiomReport]] = {}
    for r in reports:
        matrix.setdefault(r.index, {})[r.axiom] = r
    width = max((len(label) for label in matrix), default=5)
    lines = [f"{'index':<{width}}  " + "  ".join(f"{a.value:>8}" for a in axes)]
    for label, by_axiom in matrix.items():
        cells = [f"{_verdict_cell(by_axiom[a]) if a in by_axiom else '-':>8}" for a in axes]
        lines.append(f"{label:<{width}}  " + "  ".join(cells))
    for r in reports:
        if r.witness is not None:
            w = r.witness
            lines.append(
                f"{r.index} violates {r.axiom.title}: {w.description}; "
                f"{format_value(w.lhs, 6)} vs {format_value(w.rhs, 6)}"
            )
    return "\n".join(lines) + "\n"


def _report_content(cfg: RunConfig, reports: list[AxiomReport], **extra) -> str:
    if cfg.fmt == "json":
        return records_to_json([r.as_dict() for r in reports], **extra)
    return render_reports(reports)


def verify_reports(cfg: RunConfig) -> list[AxiomReport]:
    kind = GraphIndexKind.parse(cfg.index)
    index = GraphIndexFunction(kind, cfg.alpha)
    if cfg.game_path is not None:
        sit = load_situation(cfg)
        sits = [sit]
        pairs = companion_pairs(sit)
    else:
        sits = exhaustive_small_suite()
        pairs = linearity_pairs()
    reports = [check_admissibility(index, sits, cfg.tol, cfg.max_n)]
    reports += [check_axiom(index, a, sits, pairs=pairs, tol=cfg.tol, max_n=cfg.max_n) for a in AXIOMS]
    return reports


def _unexpected(kind: GraphIndexKind, reports: list[AxiomReport]) -> list[AxiomReport]:
    """Violations that are neither the index's targeted property nor documented."""
    target = EXPECTED_VIOLATIONS.get(kind)
    return [
        r for r in reports
        if r.verdict is Verdict.VIOLATED and r.axiom is not target and (kind, r.axiom) not in KNOWN_DISCREPANCIES
    ]


def cmd_verify(cfg: RunConfig) -> CommandResult:
    """Exit 0 iff every violation found is expected for the chosen index."""
    reports = verify_reports(cfg)
    kind = GraphIndexKind.parse(cfg.index)
    bad = _unexpected(kind, reports)
    content = _report_content(cfg, reports)
    paths = [write_text(cfg.out, content)] if cfg.out is not None else []
    return CommandResult(content, paths, VERDICT_MISMATCH_EXIT_CODE if bad else 0)


def cmd_independence(cfg: RunConfig) -> CommandResult:
    """Exit 0 iff verdicts match the expected matrix up to documented discrepancies."""
    reports = independence_suite(alpha=cfg.alpha, max_n=cfg.max_n)
    mismatches = compare_to_appendix(reports)
    notes = [
        {
            "index": m.kind.value,
            "axiom": m.axiom.value,
            "expected": m.expected.value,
            "actual": m.actual.value,
            "explanation": m.explanation,
        }
        for m in mismatches
    ]
    if cfg.fmt == "json":
        content = _report_content(cfg, reports, mismatches=notes)
    else:
        content = render_reports(reports)
        for note in notes:
            tag = "documented" if note["explanation"] else "UNEXPECTED"
            content += f"{tag}: {note['index']} {note['axiom']} expected {note['expected']}, got {note['actual']}\n"
            if note["explanation"]:
                content += f"    {note['explanation']}\n"
    paths = [write_text(cfg.out, content)] if cfg.out is not None else []
    undocumented = [m for m in mismatches if not m.documented]
    return CommandResult(content, paths, VERDICT_MISMATCH_EXIT_CODE if undocumented else 0)
