"""Gantt charts for rank schedules, as monospaced text or SVG 1.1.

The time axis starts at 0.  Bars are labelled ``J<n>`` with ``n`` the
1-based position of the job in nonincreasing order.  Zero-length jobs get
no bar and are listed in a footnote instead.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .core import InvalidInput, Schedule

ASCII_WIDTH = 64
SVG_WIDTH = 640
ROW_HEIGHT = 28
LEFT = 90
# one fill per rank, cycled
PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1")


def _bars(sched: Schedule):
    p = sched.instance.times
    spans = sched.intervals
    for i, row in enumerate(sched.grid):
        yield i, [(j, r, *spans[j]) for r, j in reversed(list(enumerate(row, 1))) if p[j] > 0]


def _zero_jobs(sched: Schedule) -> list[str]:
    p = sched.instance.times
    return [
        f"J{j + 1} on M{i + 1}"
        for i, row in enumerate(sched.grid)
        for j in reversed(row)
        if p[j] == 0
    ]


def render_gantt(sched: Schedule, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return _ascii(sched)
    if fmt == "svg":
        return _svg(sched)
    raise InvalidInput(f"unknown chart format {fmt!r}; use 'ascii' or 'svg'")


def _ascii(sched: Schedule) -> str:
    span = sched.makespan
    if span:
        width = span * max(1, ASCII_WIDTH // span) if span <= ASCII_WIDTH else ASCII_WIDTH
    else:
        width = 0

    def col(t):
        return t * width // span if span else 0

    lines = []
    for i, bars in _bars(sched):
        cells = [" "] * (width + 1)
        for j, _, start, end in bars:
            a, b = col(start), col(end)
            cells[a] = "|"
            label = f"J{j + 1}"
            interior = b - a - 1
            text = label if len(label) <= interior else "#" * interior
            pad = interior - len(text)
            body = "-" * (pad // 2) + text + "-" * (pad - pad // 2)
            cells[a + 1 : b] = body
            cells[b] = "|"
        lines.append(f"M{i + 1:<3}" + "".join(cells).rstrip() + f"  ({sched.loads[i]})")
    lines.append("    " + "0" + " " * max(0, width - len(str(span))) + str(span))
    zeros = _zero_jobs(sched)
    if zeros:
        lines.append("zero-length jobs at t=0 (not drawn): " + ", ".join(zeros))
    return "\n".join(lines) + "\n"


def _svg(sched: Schedule) -> str:
    span = sched.makespan
    unit = max(1, SVG_WIDTH // span) if span else 0
    zeros = _zero_jobs(sched)
    m = sched.instance.m
    chart_w = LEFT + unit * span + 20
    height = 20 + ROW_HEIGHT * m + 30 + (18 if zeros else 0)
    p = sched.instance.times
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{chart_w}" height="{height}" '
        f'font-family="monospace" font-size="12">',
    ]
    for i, bars in _bars(sched):
        y = 20 + i * ROW_HEIGHT
        out.append(f'<text x="8" y="{y + 18}">Machine {i + 1}</text>')
        for j, r, start, end in bars:
            x = LEFT + start * unit
            w = (end - start) * unit
            fill = PALETTE[(r - 1) % len(PALETTE)]
            out.append(
                f'<rect x="{x}" y="{y + 2}" width="{w}" height="{ROW_HEIGHT - 4}" '
                f'fill="{fill}" stroke="#000000"><title>J{j + 1} rank {r} p={p[j]} [{start},{end}]</title></rect>'
            )
            out.append(f'<text x="{x + w // 2}" y="{y + 18}" text-anchor="middle">J{j + 1}</text>')
    axis_y = 20 + ROW_HEIGHT * m + 4
    out.append(f'<line x1="{LEFT}" y1="{axis_y}" x2="{LEFT + unit * span}" y2="{axis_y}" stroke="#000000"/>')
    for t in sorted({0, span, *sched.loads}):
        x = LEFT + t * unit
        out.append(f'<text x="{x}" y="{axis_y + 16}" text-anchor="middle">{t}</text>')
    if zeros:
        note = "zero-length jobs at t=0 (not drawn): " + ", ".join(zeros)
        out.append(f'<text x="8" y="{axis_y + 34}">{escape(note)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
