"""Convert a Markdown report to a standalone HTML page with embedded CSS."""
from __future__ import annotations

import markdown


REPORT_CSS = """
.theme-report {
    --ink: #111111;
    --paper: #ffffff;
    --muted: #555555;
    --accent: #1f4e79;
    --rule: #d0d0d0;
    --negative: #9b1c1c;
    background: var(--paper);
    color: var(--ink);
}

.theme-report .theme-content {
    max-width: 60rem;
    margin: 0 auto;
    padding: 2rem 2.5rem;
    font-family: Georgia, 'Times New Roman', serif;
    font-size: 11pt;
    line-height: 1.45;
}

.theme-report h1 {
    font-size: 1.4rem;
    border-bottom: 2px solid var(--accent);
    padding-bottom: 0.25rem;
    margin: 0 0 1rem;
}

.theme-report h2 {
    font-size: 1.1rem;
    color: var(--accent);
    margin: 1.5rem 0 0.5rem;
}

.theme-report p {
    margin: 0 0 0.6rem;
}

.theme-report table {
    border-collapse: collapse;
    margin: 0.5rem 0 1rem;
    font-variant-numeric: tabular-nums;
    font-size: 10pt;
}

.theme-report th {
    background: var(--accent);
    color: var(--paper);
    padding: 0.25rem 0.5rem;
    text-align: right;
}

.theme-report th:first-child,
.theme-report td:first-child {
    text-align: left;
    font-weight: 700;
}

.theme-report td {
    padding: 0.2rem 0.5rem;
    text-align: right;
    border-bottom: 1px solid var(--rule);
}

.theme-report tr:nth-child(even) {
    background: #f6f8fa;
}

.theme-report code {
    font-family: 'Courier New', monospace;
    font-size: 0.9em;
    background: #f0f0f0;
    padding: 0.05rem 0.2rem;
}

.theme-report blockquote {
    border-left: 3px solid var(--negative);
    padding-left: 0.75rem;
    color: var(--muted);
    margin: 0.6rem 0;
}

@media print {
    .theme-report .theme-content {
        padding: 0.5in 0.6in;
        max-width: 100%;
    }
}
"""


def md_to_html(md_content: str, title: str = "Report") -> str:
    """Full HTML document: theme wrapper + theme-content div around the rendered Markdown."""
    html_body = markdown.markdown(
        md_content,
        extensions=["tables", "fenced_code"],
        output_format="html5",
    )

    return f"""<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <meta name="viewport" content="width=device-width, initial-scale=1.0">
    <title>{_escape_html(title)}</title>
    <style>
{REPORT_CSS}
    </style>
</head>
<body>
    <div class="theme-report">
        <div class="theme-content">
{_indent(html_body, 12)}
        </div>
    </div>
</body>
</html>
"""


def _escape_html(s: str) -> str:
    return (
        s.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _indent(html: str, spaces: int = 4) -> str:
    if not html or not html.strip():
        return ""
    prefix = " " * spaces
    return "\n".join(prefix + line for line in html.strip().splitlines())
