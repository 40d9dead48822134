"""Write, read and render result tables."""
import csv
import io
import logging
from pathlib import Path

from jinja2 import Environment, PackageLoader

from .row import CSV_FIELDS, ResultRow

logger = logging.getLogger(__name__)

TEMPLATE = "table.tmplt"
POINT_FIELDS = ["sweeps", "dt", "num_steps", "error", "order"]


def _write_records(f, records, fields):
    writer = csv.DictWriter(f, fieldnames=fields)
    writer.writeheader()
    writer.writerows(records)


def format_csv(rows):
    """Return result rows as CSV text with a header row."""
    buffer = io.StringIO()
    _write_records(buffer, [row.to_csv() for row in rows], CSV_FIELDS)
    return buffer.getvalue()


def write_csv(rows, path):
    """Write result rows to a CSV file with a header row.

    Parameters
    ----------
    rows : list [isdc.experiments.ResultRow]
        The rows.
    path : str, byte or os.PathLike
        The path to the CSV file.

    Returns
    -------
    pathlib.Path
        The path to the CSV file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        _write_records(f, [row.to_csv() for row in rows], CSV_FIELDS)
    logger.info(f"Wrote {len(rows)} rows to '{path}'.")
    return path


def write_points_csv(points, path):
    """Write the points of an order study to a CSV file.

    Returns
    -------
    pathlib.Path
        The path to the CSV file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        _write_records(f, points, POINT_FIELDS)
    logger.info(f"Wrote {len(points)} points to '{path}'.")
    return path


def read_csv(path):
    """Read result rows from a CSV file written by `write_csv`.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    ValueError
        If the schema version is not supported.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"Result file '{path}' does not exist.")
    with open(path, "r", newline="") as f:
        return [ResultRow.from_csv(record) for record in csv.DictReader(f)]


def cycles_sweeps(cycles, sweeps):
    """Format a run as ``cycles(sweeps)``, ``-`` when unknown."""
    if cycles is None or sweeps is None:
        return "-"
    return f"{cycles}({sweeps})"


def _render(title, headers, lines, note=""):
    cells = [list(map(str, headers))] + [[str(c) for c in line] for line in lines]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    table = [
        [cell.rjust(width) for cell, width in zip(row, widths)] for row in cells
    ]
    env = Environment(
        loader=PackageLoader("isdc", "templates"), trim_blocks=True, lstrip_blocks=True
    )
    template = env.get_template(TEMPLATE)
    rule = "-" * (sum(widths) + 2 * (len(widths) - 1))
    return template.render(title=title, rule=rule, table=table, note=note)


def _run_cell(row):
    if row is None:
        return "-"
    if row["error"]:
        return "error"
    text = cycles_sweeps(row["inner_cycles"], row["sweeps"])
    return text if row["converged"] else f"{text}*"


def _published_cell(row):
    if row is None:
        return "-"
    return cycles_sweeps(row["published_cycles"], row["published_sweeps"])


def render_table(rows, title="Accumulated V-cycles (sweeps)"):
    """Render paired SDC and ISDC rows in the ``cycles(sweeps)`` layout.

    Rows are grouped by their pairing key and initial guess policy, in order of first
    appearance. Runs that did not converge are marked with ``*``.

    Parameters
    ----------
    rows : list [isdc.experiments.ResultRow]
        The rows.
    title : str, optional
        The title of the table.

    Returns
    -------
    str
        The rendered table.
    """
    groups = {}
    for row in rows:
        key = (row.pair_key, row["guess"])
        groups.setdefault(key, {})[row["mode"]] = row
    lines = []
    for runs in groups.values():
        first = next(iter(runs.values()))
        sdc, isdc = runs.get("sdc-exact"), runs.get("isdc-fixed")
        savings = isdc["savings_pct"] if isdc is not None else None
        lines.append(
            [
                first["problem"],
                f"{first['nu']:g}",
                first["num_nodes"],
                first["guess"],
                _run_cell(sdc),
                _run_cell(isdc),
                "-" if savings is None else f"{savings:.0f}%",
                _published_cell(sdc),
                _published_cell(isdc),
            ]
        )
    headers = [
        "problem",
        "nu",
        "M",
        "guess",
        "SDC",
        "ISDC",
        "savings",
        "published SDC",
        "published ISDC",
    ]
    return _render(title, headers, lines, note="* residual threshold not reached")


def render_order_table(points, title="Observed temporal order"):
    """Render the points of an order study.

    Parameters
    ----------
    points : list [dict]
        The points with keys ``sweeps``, ``dt``, ``error`` and ``order``.

    Returns
    -------
    str
        The rendered table.
    """
    lines = [
        [
            p["sweeps"],
            f"{p['dt']:.1e}",
            f"{p['error']:.3e}",
            "-" if p["order"] is None else f"{p['order']:.2f}",
        ]
        for p in points
    ]
    return _render(title, ["sweeps", "dt", "error", "order"], lines)
