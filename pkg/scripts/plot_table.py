"""Plot the accumulated V-cycles of a matrix CSV as grouped bars."""
import logging

import click
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from isdc.core.sweeper import ISDC_FIXED, SDC_EXACT  # noqa: E402
from isdc.experiments import read_csv  # noqa: E402
from isdc.utils.logging import configure_logger  # noqa: E402

logger = logging.getLogger("isdc.scripts.plot_table")


def _groups(rows):
    groups = {}
    for row in rows:
        if row.failed:
            continue
        key = (row["problem"], row["nu"], row["num_nodes"], row["guess"])
        groups.setdefault(key, {})[row["mode"]] = row
    return groups


def _cycles(runs, mode):
    row = runs.get(mode)
    return np.nan if row is None else row["inner_cycles"]


def _published(runs, mode):
    row = runs.get(mode)
    if row is None or row["published_cycles"] is None:
        return np.nan
    return row["published_cycles"]


@click.command()
@click.argument("csv_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("png_path", type=click.Path(dir_okay=False))
@click.option("--published", is_flag=True, help="Add the published counts.")
def main(csv_path, png_path, published):
    """Plot the SDC and ISDC cycles of CSV_PATH to PNG_PATH."""
    configure_logger()
    groups = _groups(read_csv(csv_path))
    if not groups:
        raise click.ClickException(f"'{csv_path}' holds no successful run.")
    labels = [f"{p}\nnu={nu:g} M={m}" for p, nu, m, _ in groups]
    x = np.arange(len(groups))
    series = {
        "SDC": [_cycles(runs, SDC_EXACT) for runs in groups.values()],
        "ISDC": [_cycles(runs, ISDC_FIXED) for runs in groups.values()],
    }
    if published:
        for mode, name in ((SDC_EXACT, "SDC"), (ISDC_FIXED, "ISDC")):
            series[f"published {name}"] = [
                _published(runs, mode) for runs in groups.values()
            ]
    width = 0.8 / len(series)
    fig, ax = plt.subplots(figsize=(max(6.0, 0.9 * len(groups)), 4.0))
    for i, (name, values) in enumerate(series.items()):
        ax.bar(x + (i - (len(series) - 1) / 2) * width, values, width, label=name)
    ax.set_xticks(x)
    ax.set_xticklabels(labels, fontsize=8)
    ax.set_ylabel("accumulated V-cycles")
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    logger.info(f"Saved the figure to '{png_path}'.")


if __name__ == "__main__":
    main()
