"""Render figures summarizing a scan record file.

Takes the line-delimited records a scan wrote and produces PNG files next to
them: a status map over the (b, c) grid for each instance present, and a bar
chart of status counts.  Rendering is headless (Agg).
"""

import collections
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .rationals import parse_rational
from .search import ALL_STATUSES, HitRecord

STATUS_COLORS = {
    "Hit": "#2ca02c",
    "NoRealRoot": "#1f77b4",
    "NoRationalRootAtBound": "#7f7f7f",
    "Singular": "#d62728",
    "Degenerate": "#ff7f0e",
}


def load_records(path):
    """Parse a scan output file into a list of field dictionaries."""
    records = []
    with open(path) as fh:
        for line in fh:
            if line.strip():
                records.append(HitRecord.parse_line(line))
    return records


def _status_map_figure(records, instance):
    fig, ax = plt.subplots(figsize=(6, 5))
    by_status = collections.defaultdict(list)
    for rec in records:
        if rec["instance"] != instance:
            continue
        b = float(parse_rational(rec["b"]))
        c = float(parse_rational(rec["c"]))
        by_status[rec["status"]].append((b, c))
    for status in ALL_STATUSES:
        pts = by_status.get(status)
        if not pts:
            continue
        xs, ys = zip(*pts)
        ax.scatter(xs, ys, s=36, color=STATUS_COLORS[status], label=status)
    ax.set_xlabel("b")
    ax.set_ylabel("c")
    ax.set_title(f"scan statuses, {instance} instance")
    ax.legend(fontsize=8, loc="best")
    fig.tight_layout()
    return fig


def _counts_figure(records):
    counts = collections.Counter(rec["status"] for rec in records)
    fig, ax = plt.subplots(figsize=(6, 4))
    labels = [s for s in ALL_STATUSES if counts[s]]
    ax.bar(labels, [counts[s] for s in labels],
           color=[STATUS_COLORS[s] for s in labels])
    ax.set_ylabel("cells")
    ax.set_title("scan status counts")
    plt.setp(ax.get_xticklabels(), rotation=20, ha="right", fontsize=8)
    fig.tight_layout()
    return fig


def render_report(records_path, out_dir=None, prefix="scan"):
    """Write the report figures; returns the list of created file paths."""
    records = load_records(records_path)
    if out_dir is None:
        out_dir = os.path.dirname(os.path.abspath(records_path))
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for instance in ("first", "second"):
        if not any(rec["instance"] == instance for rec in records):
            continue
        fig = _status_map_figure(records, instance)
        path = os.path.join(out_dir, f"{prefix}-status-{instance}.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    fig = _counts_figure(records)
    path = os.path.join(out_dir, f"{prefix}-counts.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)
    return written
