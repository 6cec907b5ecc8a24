"""Reading series from text and writing series and peak reports.

Input: one record per line. A record is a single number, or several tokens
separated by commas, semicolons or whitespace, in which case the last token
is the value. Blank lines and lines starting with ``#`` are skipped.

Output formats, all with 1-based original indices:

* ``csv``: ``index,value`` rows,
* ``gnuplot``: two whitespace-separated columns,
* ``svg``: one polyline plot with axes.

Numbers use the shortest round-trip decimal form, so output is byte-stable.
"""
from __future__ import annotations

import io
import os
import re
import sys
from pathlib import Path
from typing import IO, Optional, Union

import numpy as np

from .errors import SeriesParseError
from .peaks import PeakReport
from .series import Series

FORMATS = ("csv", "gnuplot", "svg")

_SEP = re.compile(r"[,;\s]+")
_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")

Source = Union[str, os.PathLike, IO[str]]


def parse_series(text: str) -> Series:
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        token = _SEP.split(line)[-1]
        if not _NUMBER.fullmatch(token):
            raise SeriesParseError(f"not a number: {token!r}", lineno)
        value = float(token)
        if not np.isfinite(value):
            raise SeriesParseError(f"value out of range: {token!r}", lineno)
        values.append(value)
    if not values:
        raise SeriesParseError("input contains no values")
    return Series(values)


def read_series(source: Source = "-") -> Series:
    """Read a series from a path, ``"-"`` (standard input) or an open text file."""
    if hasattr(source, "read"):
        return parse_series(source.read())
    if str(source) == "-":
        return parse_series(sys.stdin.read())
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise OSError(f"cannot read {source}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise SeriesParseError(f"{source} is not a text file") from exc
    return parse_series(text)


def fmt_num(x) -> str:
    """Shortest round-trip decimal; integral values are written without a point."""
    x = float(x)
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def format_series(series: Series, fmt: str = "csv", **svg_opts) -> str:
    if fmt == "csv":
        sep = ","
    elif fmt == "gnuplot":
        sep = " "
    elif fmt == "svg":
        return render_svg(series, **svg_opts)
    else:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    idx = series.indices() + 1
    return "".join(f"{i}{sep}{fmt_num(v)}\n" for i, v in zip(idx.tolist(), series.values.tolist()))


def format_report(report: PeakReport, fmt: str = "csv") -> str:
    """Peak positions (1-based) and plateau lengths, under a ``#`` header."""
    if fmt == "csv":
        sep = ","
    elif fmt == "gnuplot":
        sep = " "
    else:
        raise ValueError(f"peak reports support csv and gnuplot, not {fmt!r}")
    lines = [f"# index{sep}plateau_length\n"]
    lines += [f"{i + 1}{sep}{n}\n" for i, n in zip(report.peak_indices, report.plateau_lengths)]
    return "".join(lines)


def render_svg(
    series: Series,
    peaks: Optional[PeakReport] = None,
    xrange: Optional[tuple[float, float]] = None,
    yrange: Optional[tuple[float, float]] = None,
    width: int = 640,
    height: int = 400,
    title: str = "",
) -> str:
    """Single-series line plot with axes and optional peak markers."""
    x = (series.indices() + 1).astype(float)
    y = series.values
    if xrange is not None:
        keep = (x >= xrange[0]) & (x <= xrange[1])
        x, y = x[keep], y[keep]
    if x.size == 0:
        raise ValueError(f"no samples inside xrange {xrange}")
    x0, x1 = xrange if xrange is not None else (float(x.min()), float(x.max()))
    y0, y1 = yrange if yrange is not None else (float(y.min()), float(y.max()))
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    ml, mr, mt, mb = 60, 20, 30, 40
    pw, ph = width - ml - mr, height - mt - mb

    def px(xv):
        return ml + (xv - x0) / (x1 - x0) * pw

    def py(yv):
        return mt + ph - (yv - y0) / (y1 - y0) * ph

    pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x.tolist(), y.tolist()))
    out = io.StringIO()
    out.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
    )
    out.write(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>\n')
    if title:
        out.write(f'<text x="{width / 2:.2f}" y="18" text-anchor="middle" font-size="13">{_esc(title)}</text>\n')
    out.write(f'<defs><clipPath id="plot"><rect x="{ml}" y="{mt}" width="{pw}" height="{ph}"/></clipPath></defs>\n')
    out.write(
        f'<g stroke="black" stroke-width="1">'
        f'<line x1="{ml}" y1="{mt + ph}" x2="{ml + pw}" y2="{mt + ph}"/>'
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{mt + ph}"/></g>\n'
    )
    out.write('<g font-size="11" font-family="sans-serif">\n')
    for k in range(5):
        xv = x0 + (x1 - x0) * k / 4
        yv = y0 + (y1 - y0) * k / 4
        out.write(
            f'<line x1="{px(xv):.2f}" y1="{mt + ph}" x2="{px(xv):.2f}" y2="{mt + ph + 4}" stroke="black"/>'
            f'<text x="{px(xv):.2f}" y="{mt + ph + 16}" text-anchor="middle">{_tick(xv)}</text>\n'
        )
        out.write(
            f'<line x1="{ml - 4}" y1="{py(yv):.2f}" x2="{ml}" y2="{py(yv):.2f}" stroke="black"/>'
            f'<text x="{ml - 6}" y="{py(yv) + 4:.2f}" text-anchor="end">{_tick(yv)}</text>\n'
        )
    out.write("</g>\n")
    if pts:
        out.write(
            f'<polyline clip-path="url(#plot)" fill="none" stroke="#1f4e9c" stroke-width="1.2" points="{pts}"/>\n'
        )
    if peaks is not None:
        by_index = dict(zip((series.indices() + 1).tolist(), series.values.tolist()))
        out.write('<g fill="#c0392b" clip-path="url(#plot)">\n')
        for i in peaks.peak_indices:
            if i + 1 in by_index and (xrange is None or xrange[0] <= i + 1 <= xrange[1]):
                out.write(f'<circle cx="{px(i + 1):.2f}" cy="{py(by_index[i + 1]):.2f}" r="3"/>\n')
        out.write("</g>\n")
    out.write("</svg>\n")
    return out.getvalue()


def _tick(v: float) -> str:
    return f"{v:.4g}"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def write_text(text: str, destination: Union[str, os.PathLike, IO[str], None] = "-") -> None:
    if destination is None or str(destination) == "-":
        sys.stdout.write(text)
        return
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {destination}: {exc.strerror or exc}") from exc


def emit(obj: Union[Series, PeakReport], fmt: str = "csv", destination="-", **svg_opts) -> None:
    """Write a series or a peak report in one of :data:`FORMATS`."""
    if isinstance(obj, PeakReport):
        if fmt == "svg":
            raise ValueError("svg output needs a series; pass the report as peaks=")
        text = format_report(obj, fmt)
    else:
        text = format_series(obj, fmt, **svg_opts)
    write_text(text, destination)
