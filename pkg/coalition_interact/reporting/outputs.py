"""Serialize tables and reports to CSV/JSON and save them under predictable names."""
from __future__ import annotations

import csv
import io
import json
import re
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

from coalition_interact import config
from coalition_interact.games.coalition import coalition_key
from coalition_interact.games.game import TUGame
from coalition_interact.indices.table import InteractionTable

FORMATS = ("csv", "json")


def _slugify(text: str) -> str:
    """Convert text to a safe filename slug."""
    if not text or not text.strip():
        return "output"
    slug = text.lower().strip()
    slug = re.sub(r"[^\w\s-]", "", slug)
    slug = re.sub(r"[-\s]+", "_", slug)
    return slug[:50] or "output"


def format_value(x: float, decimals: int = config.CSV_DECIMALS) -> str:
    # + 0.0 turns -0.0 into 0.0
    return f"{round(float(x), decimals) + 0.0:.{decimals}f}"


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def table_to_csv(table: InteractionTable, decimals: int = config.CSV_DECIMALS) -> str:
    """coalition,order,value with rows in (order, bits) order."""
    rows = [(c.key(), len(c), format_value(v, decimals)) for c, v in table.rows()]
    return _csv_text(("coalition", "order", table.kind.value), rows)


def table_to_dict(table: InteractionTable) -> dict[str, Any]:
    return {
        "kind": table.kind.value,
        "n": table.n,
        "rows": [{"coalition": c.key(), "order": len(c), "value": v} for c, v in table.rows()],
    }


def table_to_json(table: InteractionTable) -> str:
    return _json_text(table_to_dict(table))


def render_table(table: InteractionTable, fmt: str = "csv") -> str:
    if fmt == "json":
        return table_to_json(table)
    return table_to_csv(table)


def game_to_json(game: TUGame) -> str:
    """Dense game document; parse_game reads it back exactly."""
    return _json_text({"n": game.n, "dense": [float(x) for x in game.values]})


def wide_table_csv(
    columns: Sequence[int],
    rows: Sequence[tuple[str, Sequence[float]]],
    decimals: int = config.REPRO_DECIMALS,
) -> str:
    """One row per index, one column per coalition (keys as headers)."""
    header = ["index", *(coalition_key(c) for c in columns)]
    body = [(label, *(format_value(v, decimals) for v in values)) for label, values in rows]
    return _csv_text(header, body)


def wide_table_markdown(
    columns: Sequence[int],
    rows: Sequence[tuple[str, Sequence[float]]],
    decimals: int = config.REPRO_DECIMALS,
    marks: Optional[dict[tuple[str, int], str]] = None,
) -> str:
    """Markdown version of wide_table_csv; marks appends a footnote tag to (row, column) cells."""
    marks = marks or {}
    header = "| | " + " | ".join(f"{{{coalition_key(c)}}}" for c in columns) + " |"
    rule = "|---|" + "---:|" * len(columns)
    lines = [header, rule]
    for label, values in rows:
        cells = [format_value(v, decimals) + marks.get((label, c), "") for c, v in zip(columns, values)]
        lines.append(f"| {label} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def records_to_csv(records: Sequence[dict[str, Any]], fields: Sequence[str], decimals: int = config.CSV_DECIMALS) -> str:
    def cell(value: Any) -> Any:
        return format_value(value, decimals) if isinstance(value, float) else value

    return _csv_text(fields, ([cell(r[f]) for f in fields] for r in records))


def records_to_json(records: Sequence[dict[str, Any]], **extra: Any) -> str:
    return _json_text({**extra, "rows": list(records)})


def get_output_filename_with_ext(
    output_type: str,
    label: str = "",
    ext: str = "csv",
    version: Optional[int] = None,
) -> str:
    """Return the filename that would be used for saving, e.g. Myerson-horse_market.csv."""
    safe_ext = (ext or "csv").lstrip(".").lower()
    slug = _slugify(label) if label else "output"
    prefix = output_type.replace("_", " ").replace("-", " ").title().replace(" ", "") or "Output"
    base = f"{prefix}-{slug}"
    if version is not None and version > 1:
        return f"{base}-v{version}.{safe_ext}"
    return f"{base}.{safe_ext}"


def _next_version(outputs_dir: Path, output_type: str, label: str, ext: str) -> int:
    """1 when the plain name is free, otherwise one past the highest -vN present."""
    base = Path(get_output_filename_with_ext(output_type, label, ext)).stem
    safe_ext = (ext or "csv").lstrip(".").lower()
    versions_found = []
    if (outputs_dir / f"{base}.{safe_ext}").exists():
        versions_found.append(1)
    for p in outputs_dir.glob(f"{base}-v*.{safe_ext}"):
        try:
            versions_found.append(int(p.stem.split("-v")[-1]))
        except ValueError:
            pass
    return max(versions_found) + 1 if versions_found else 1


def save_output(
    content: str,
    output_type: str,
    label: str = "",
    outputs_dir: Optional[Path] = None,
    ext: str = "csv",
    auto_version: bool = False,
) -> Path:
    """
    Save content under outputs_dir (GENERATED_DIR by default) with a slugged name.
    Overwrites unless auto_version is set, so repeated runs stay byte-identical.
    """
    outputs_dir = Path(outputs_dir) if outputs_dir is not None else config.GENERATED_DIR
    outputs_dir.mkdir(parents=True, exist_ok=True)
    version = _next_version(outputs_dir, output_type, label, ext) if auto_version else None
    filepath = outputs_dir / get_output_filename_with_ext(output_type, label, ext, version)
    filepath.write_text(content, encoding="utf-8")
    return filepath


def write_text(path: Path, content: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")
    return path
