"""Deterministic CSV, SVG, and error-table output.

Floats are written with 17 significant digits so a written value reads
back as the identical double; identical inputs therefore produce
byte-identical files.
"""

from dataclasses import dataclass

import numpy as np


def format_float(x) -> str:
    return format(float(x), ".17g")


def write_csv(path, header, rows):
    """Write a CSV file; cells may be strings, ints, or floats."""
    lines = [",".join(header)]
    for row in rows:
        cells = [c if isinstance(c, str) else format_float(c) for c in row]
        lines.append(",".join(cells))
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def write_points_csv(path, points, columns=None):
    points = np.asarray(points, dtype=float)
    if columns is None:
        columns = ("x", "y", "z")[: points.shape[1]]
    write_csv(path, columns, points)


def write_history_csv(path, history):
    write_csv(path, ("iteration", "error"), [(str(k), e) for k, e in enumerate(history)])


@dataclass(frozen=True)
class ErrorTable:
    """Fit errors for several labeled runs at shared iteration checkpoints."""

    labels: tuple
    checkpoints: tuple
    errors: np.ndarray  # shape (len(labels), len(checkpoints))

    def __post_init__(self):
        errors = np.asarray(self.errors, dtype=float)
        if np.any(np.diff(self.checkpoints) <= 0):
            raise ValueError("checkpoints must be strictly increasing")
        if errors.shape != (len(self.labels), len(self.checkpoints)):
            raise ValueError("errors must be one row per label, one column per checkpoint")
        if np.any(errors < 0):
            raise ValueError("errors must be non-negative")
        errors.setflags(write=False)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "checkpoints", tuple(int(c) for c in self.checkpoints))
        object.__setattr__(self, "errors", errors)


def make_error_table(labels, histories, checkpoints) -> ErrorTable:
    """Pick per-run errors at the given checkpoints (1-based iteration counts)."""
    errors = [[history[c - 1] for c in checkpoints] for history in histories]
    return ErrorTable(tuple(labels), tuple(checkpoints), np.array(errors))


def write_error_table_csv(path, table: ErrorTable):
    header = ("curve",) + tuple(str(c) for c in table.checkpoints)
    write_csv(path, header, [(label, *row) for label, row in zip(table.labels, table.errors)])


def format_error_table(table: ErrorTable) -> str:
    width = max(len(label) for label in table.labels)
    lines = ["iterations".ljust(width) + "".join(f"{c:>12d}" for c in table.checkpoints)]
    for label, row in zip(table.labels, table.errors):
        lines.append(label.ljust(width) + "".join(f"{e:>12.3e}" for e in row))
    return "\n".join(lines)


def _svg_path(points, y_flip=True):
    pts = np.asarray(points, dtype=float)
    sign = -1.0 if y_flip else 1.0
    steps = [f"{'M' if i == 0 else 'L'} {format(x, '.9g')} {format(sign * y, '.9g')}"
             for i, (x, y) in enumerate(pts)]
    return " ".join(steps)


def write_svg(path, curves, markers=(), title=None):
    """Plot 2D polylines as an SVG document.

    curves: sequence of (label, points, style) where style is a dict with
    optional keys stroke and dasharray. The viewBox fits the joint
    bounding box plus a 5% margin; the y axis points up.
    """
    all_pts = [np.asarray(pts, dtype=float) for _, pts, _ in curves]
    all_pts += [np.asarray(m, dtype=float) for m in markers]
    stacked = np.vstack(all_pts)
    if stacked.shape[1] != 2:
        raise ValueError("SVG export supports 2D points only")
    lo = stacked.min(axis=0)
    hi = stacked.max(axis=0)
    span = np.maximum(hi - lo, 1e-30)
    lo = lo - 0.05 * span
    hi = hi + 0.05 * span
    width, height = hi - lo
    stroke_w = 0.004 * max(width, height)
    view = (format(lo[0], ".9g"), format(-hi[1], ".9g"),
            format(width, ".9g"), format(height, ".9g"))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view[0]} {view[1]} {view[2]} {view[3]}">',
    ]
    if title:
        lines.append(f"  <title>{title}</title>")
    for label, pts, style in curves:
        stroke = style.get("stroke", "black")
        dash = style.get("dasharray")
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        lines.append(
            f'  <path d="{_svg_path(pts)}" fill="none" stroke="{stroke}" '
            f'stroke-width="{format(stroke_w, ".9g")}"{dash_attr}><title>{label}</title></path>'
        )
    for mset in markers:
        for x, y in np.asarray(mset, dtype=float):
            lines.append(
                f'  <circle cx="{format(x, ".9g")}" cy="{format(-y, ".9g")}" '
                f'r="{format(1.8 * stroke_w, ".9g")}" fill="black"/>'
            )
    lines.append("</svg>")
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
