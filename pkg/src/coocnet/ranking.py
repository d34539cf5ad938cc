"""Rank series, category comparison, and deterministic exports.

A rank series for one measure lists (rank, value, word) rows with values
in descending order, rank 1 first; ties are ordered by ascending word so
the series is reproducible.  Nodes whose value is zero or undefined are
left out: a node with no incoming edge carries no information about the
incoming side, and including a zero tail would only flatten log-log plots.

Two networks built from different text categories are compared by pairing
their global summaries and their rank series measure by measure.  Exports
(CSV tables and an optional SVG rank plot) are byte-deterministic: same
inputs, same bytes.
"""

from __future__ import annotations

import csv
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .metrics import (
    GlobalMetrics,
    NodeMetrics,
    degree,
    global_summary,
    selectivity,
    strength,
)
from .network import CooccurrenceNetwork

MEASURES = (
    "in-degree",
    "out-degree",
    "in-strength",
    "out-strength",
    "in-selectivity",
    "out-selectivity",
)

SUMMARY_COLUMNS = (
    "label",
    "N",
    "K",
    "avg_degree",
    "avg_shortest_path",
    "diameter",
    "avg_clustering",
    "density",
    "components",
    "largest_component",
)

# node-count gap (fraction of the larger network) that triggers a warning
_SIZE_GAP_LIMIT = Fraction(1, 5)


class SizeMismatchWarning(UserWarning):
    """Compared networks differ enough in size to skew the comparison."""


class RankEntry(NamedTuple):
    rank: int
    value: int | Fraction
    word: str


@dataclass(frozen=True)
class RankSeries:
    """Descending values of one measure with 1-based ranks."""

    measure: str
    entries: tuple[RankEntry, ...]

    def __post_init__(self):
        if self.measure not in MEASURES:
            raise ValueError(f"unknown measure {self.measure!r}")

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class PairComparison:
    """Everything needed to compare two text categories side by side."""

    label_a: str
    label_b: str
    summary_a: GlobalMetrics
    summary_b: GlobalMetrics
    series_a: dict[str, RankSeries]
    series_b: dict[str, RankSeries]
    excluded_a: Fraction
    excluded_b: Fraction


def rank_sequence(
    measure: str, pairs: Iterable[tuple[str, int | Fraction | None]]
) -> RankSeries:
    """Rank (word, value) pairs; None values are dropped, zeros are kept.

    Sorting is by descending value, then ascending word; ranks are the
    1-based positions after the sort.
    """
    kept = [(word, value) for word, value in pairs if value is not None]
    kept.sort(key=lambda item: (-item[1], item[0]))
    entries = tuple(
        RankEntry(rank, value, word)
        for rank, (word, value) in enumerate(kept, 1)
    )
    return RankSeries(measure=measure, entries=entries)


def _measure_value(
    net: CooccurrenceNetwork, node: int, measure: str
) -> int | Fraction | None:
    side, _, kind = measure.partition("-")
    if kind == "degree":
        k = degree(net, node, side)
        return k if k > 0 else None
    if kind == "strength":
        s = strength(net, node, side)
        return s if s > 0 else None
    if kind == "selectivity":
        return selectivity(net, node, side)
    raise ValueError(f"unknown measure {measure!r}")


def network_rank_series(net: CooccurrenceNetwork, measure: str) -> RankSeries:
    """Rank series of one measure over a network's nodes.

    Zero values are mapped to None before ranking, so a series only covers
    nodes active on the relevant side; the in-degree, in-strength, and
    in-selectivity series of one network therefore all have the same length
    (likewise for the out side).
    """
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    pairs = [
        (net.words[node], _measure_value(net, node, measure))
        for node in range(net.n_nodes)
    ]
    return rank_sequence(measure, pairs)


def all_rank_series(net: CooccurrenceNetwork) -> dict[str, RankSeries]:
    return {measure: network_rank_series(net, measure) for measure in MEASURES}


def excluded_fraction(net: CooccurrenceNetwork) -> Fraction:
    """Share of nodes missing from at least one rank series.

    A node is counted when its in-degree or out-degree is zero, which is
    exactly the condition that drops it from some series.
    """
    if net.n_nodes == 0:
        raise ValueError("excluded fraction of an empty network is undefined")
    excluded = sum(
        1
        for node in range(net.n_nodes)
        if degree(net, node, "in") == 0 or degree(net, node, "out") == 0
    )
    return Fraction(excluded, net.n_nodes)


def compare_pair(
    net_a: CooccurrenceNetwork,
    net_b: CooccurrenceNetwork,
    label_a: str,
    label_b: str,
    sample: int | None = None,
) -> PairComparison:
    """Bundle summaries and rank series of two networks for comparison.

    Warns with SizeMismatchWarning when the node counts differ by more
    than 20% of the larger network, since rank-by-rank comparisons are
    only meaningful for samples of similar size.
    """
    bigger = max(net_a.n_nodes, net_b.n_nodes)
    gap = abs(net_a.n_nodes - net_b.n_nodes)
    if bigger > 0 and Fraction(gap, bigger) > _SIZE_GAP_LIMIT:
        warnings.warn(
            f"network sizes differ by {gap} nodes "
            f"({net_a.n_nodes} vs {net_b.n_nodes}); rank series are not "
            f"directly comparable",
            SizeMismatchWarning,
            stacklevel=2,
        )
    return PairComparison(
        label_a=label_a,
        label_b=label_b,
        summary_a=global_summary(net_a, sample),
        summary_b=global_summary(net_b, sample),
        series_a=all_rank_series(net_a),
        series_b=all_rank_series(net_b),
        excluded_a=excluded_fraction(net_a),
        excluded_b=excluded_fraction(net_b),
    )


def format_value(value: int | Fraction | None) -> str:
    """Render a measure value for CSV cells and reports.

    None becomes the empty string, integral values print without a decimal
    point, and everything else is rounded to 6 significant digits.
    """
    if value is None:
        return ""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{float(value):.6g}"
    return str(value)


def export_rank_csv(series: RankSeries, path: str | Path) -> None:
    """Write one rank series as ``rank,value,word`` rows (with header)."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["rank", "value", "word"])
        for entry in series.entries:
            writer.writerow([entry.rank, format_value(entry.value), entry.word])


def summary_row(label: str, metrics: GlobalMetrics) -> list[str]:
    """One summary-CSV row; undefined measures become empty cells."""
    return [
        label,
        str(metrics.n_nodes),
        str(metrics.n_edges),
        format_value(metrics.avg_degree),
        format_value(metrics.avg_shortest_path),
        format_value(metrics.diameter),
        format_value(metrics.avg_clustering),
        format_value(metrics.density),
        str(metrics.n_components),
        str(metrics.largest_component_size),
    ]


def write_summary_csv(
    rows: Sequence[tuple[str, GlobalMetrics]], path: str | Path
) -> None:
    """Write labeled global summaries as one CSV table."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SUMMARY_COLUMNS)
        for label, metrics in rows:
            writer.writerow(summary_row(label, metrics))


def export_summary(comparison: PairComparison, path: str | Path) -> None:
    """Write the two global summaries of a comparison as one CSV table."""
    write_summary_csv(
        [
            (comparison.label_a, comparison.summary_a),
            (comparison.label_b, comparison.summary_b),
        ],
        path,
    )


NODE_COLUMNS = (
    "word",
    "in_degree",
    "out_degree",
    "in_strength",
    "out_strength",
    "in_selectivity",
    "out_selectivity",
    "clustering",
    "avg_distance",
)


def write_node_metrics_csv(
    records: Sequence[NodeMetrics], path: str | Path
) -> None:
    """Write per-node measures, one row per node in node-id order."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(NODE_COLUMNS)
        for rec in records:
            writer.writerow(
                [
                    rec.word,
                    rec.in_degree,
                    rec.out_degree,
                    rec.in_strength,
                    rec.out_strength,
                    format_value(rec.in_selectivity),
                    format_value(rec.out_selectivity),
                    format_value(rec.clustering),
                    format_value(rec.avg_distance),
                ]
            )


def export_pair_csv(
    series_a: RankSeries, series_b: RankSeries, path: str | Path
) -> None:
    """Write two same-measure series aligned rank by rank.

    Rows run to the longer series; a missing value and its ratio are empty
    cells.  The ratio column divides the first series by the second.
    """
    if series_a.measure != series_b.measure:
        raise ValueError(
            f"cannot pair {series_a.measure!r} with {series_b.measure!r}"
        )
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["rank", "value_a", "value_b", "ratio_a_over_b"])
        length = max(len(series_a), len(series_b))
        for i in range(length):
            value_a = series_a.entries[i].value if i < len(series_a) else None
            value_b = series_b.entries[i].value if i < len(series_b) else None
            ratio = (
                Fraction(value_a, value_b)
                if value_a is not None and value_b is not None
                else None
            )
            writer.writerow(
                [i + 1, format_value(value_a), format_value(value_b), format_value(ratio)]
            )


# -- SVG rank plot ----------------------------------------------------------

_SVG_WIDTH = 640
_SVG_HEIGHT = 480
_MARGIN_LEFT = 62.0
_MARGIN_RIGHT = 18.0
_MARGIN_TOP = 22.0
_MARGIN_BOTTOM = 52.0
_COLOR_A = "#1f77b4"
_COLOR_B = "#d62728"


def _polyline_points(
    series: RankSeries, x_span: float, y_span: float
) -> str:
    plot_w = _SVG_WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _SVG_HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM
    points = []
    for entry in series.entries:
        x = _MARGIN_LEFT + math.log10(entry.rank) / x_span * plot_w
        y = _MARGIN_TOP + plot_h - math.log10(float(entry.value)) / y_span * plot_h
        points.append(f"{x:.2f},{y:.2f}")
    return " ".join(points)


def render_rank_svg(
    series_a: RankSeries,
    series_b: RankSeries,
    label_a: str,
    label_b: str,
    path: str | Path,
) -> None:
    """Draw both series of one measure as log-log polylines.

    Plain hand-assembled SVG so the bytes depend only on the data.  Both
    axes are base-10 logarithmic with ticks at the decades; values are
    >= 1 by construction (zeros are never ranked), so logs are >= 0.
    """
    if series_a.measure != series_b.measure:
        raise ValueError(
            f"cannot plot {series_a.measure!r} against {series_b.measure!r}"
        )
    max_rank = max((len(s) for s in (series_a, series_b)), default=0)
    max_value = 1.0
    for series in (series_a, series_b):
        if series.entries:
            max_value = max(max_value, float(series.entries[0].value))
    # at least one decade per axis so a flat series still renders
    x_span = max(math.log10(max_rank) if max_rank >= 1 else 0.0, 1.0)
    y_span = max(math.log10(max_value), 1.0)

    plot_w = _SVG_WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _SVG_HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM
    x_axis_y = _MARGIN_TOP + plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_WIDTH}" '
        f'height="{_SVG_HEIGHT}" viewBox="0 0 {_SVG_WIDTH} {_SVG_HEIGHT}">\n',
        f'<rect width="{_SVG_WIDTH}" height="{_SVG_HEIGHT}" fill="white"/>\n',
        f'<g font-family="sans-serif" font-size="12">\n',
    ]

    # axes
    parts.append(
        f'<line x1="{_MARGIN_LEFT:.2f}" y1="{_MARGIN_TOP:.2f}" '
        f'x2="{_MARGIN_LEFT:.2f}" y2="{x_axis_y:.2f}" stroke="black"/>\n'
    )
    parts.append(
        f'<line x1="{_MARGIN_LEFT:.2f}" y1="{x_axis_y:.2f}" '
        f'x2="{_MARGIN_LEFT + plot_w:.2f}" y2="{x_axis_y:.2f}" stroke="black"/>\n'
    )

    # decade ticks
    for decade in range(int(x_span) + 1):
        x = _MARGIN_LEFT + decade / x_span * plot_w
        parts.append(
            f'<line x1="{x:.2f}" y1="{x_axis_y:.2f}" x2="{x:.2f}" '
            f'y2="{x_axis_y + 5:.2f}" stroke="black"/>\n'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{x_axis_y + 18:.2f}" '
            f'text-anchor="middle">{10 ** decade}</text>\n'
        )
    for decade in range(int(y_span) + 1):
        y = _MARGIN_TOP + plot_h - decade / y_span * plot_h
        parts.append(
            f'<line x1="{_MARGIN_LEFT - 5:.2f}" y1="{y:.2f}" '
            f'x2="{_MARGIN_LEFT:.2f}" y2="{y:.2f}" stroke="black"/>\n'
        )
        parts.append(
            f'<text x="{_MARGIN_LEFT - 8:.2f}" y="{y + 4:.2f}" '
            f'text-anchor="end">{10 ** decade}</text>\n'
        )

    # axis titles
    parts.append(
        f'<text x="{_MARGIN_LEFT + plot_w / 2:.2f}" '
        f'y="{_SVG_HEIGHT - 12:.2f}" text-anchor="middle">rank</text>\n'
    )
    parts.append(
        f'<text x="16" y="{_MARGIN_TOP + plot_h / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {_MARGIN_TOP + plot_h / 2:.2f})">'
        f"{series_a.measure}</text>\n"
    )

    # data
    for series, color in ((series_a, _COLOR_A), (series_b, _COLOR_B)):
        if series.entries:
            parts.append(
                f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                f'points="{_polyline_points(series, x_span, y_span)}"/>\n'
            )

    # legend, top right
    legend_x = _MARGIN_LEFT + plot_w - 150
    for i, (label, color) in enumerate(((label_a, _COLOR_A), (label_b, _COLOR_B))):
        y = _MARGIN_TOP + 14 + 18 * i
        parts.append(
            f'<line x1="{legend_x:.2f}" y1="{y:.2f}" x2="{legend_x + 26:.2f}" '
            f'y2="{y:.2f}" stroke="{color}" stroke-width="1.5"/>\n'
        )
        parts.append(
            f'<text x="{legend_x + 32:.2f}" y="{y + 4:.2f}">{_svg_escape(label)}</text>\n'
        )

    parts.append("</g>\n</svg>\n")
    Path(path).write_bytes("".join(parts).encode("utf-8"))


def _svg_escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )
