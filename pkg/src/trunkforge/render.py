"""ASCII and SVG pictures of Morse words, drawn bottom to top.

One row per event. Strand k sits in column 2(k-1). Cups are drawn ``\\_/``,
caps ``/-\\``, and a crossing shows only its over-strand: ``/`` when the
strand from the left passes over (``p``), ``\\`` when the strand from the
right does (``m``).
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .morse import CAP, CUP, POS, MorseWord

__all__ = ["ascii_rows", "render_ascii", "render_svg", "row_tracks"]


def row_tracks(word: MorseWord) -> list[int]:
    """Strands touching each event's row: the larger of the counts below and above."""
    out = []
    count = 0
    for kind, _ in word.events:
        before = count
        count += kind.delta
        out.append(max(before, count))
    return out


def ascii_rows(word: MorseWord) -> list[str]:
    """Rows in bottom-to-top order (row 0 is the first event)."""
    rows = []
    count = 0
    for kind, pos in word.events:
        width = max(count, count + kind.delta)
        cells = [" "] * (2 * width - 1)
        for k in range(width):
            cells[2 * k] = "|"
        c = 2 * (pos - 1)
        if kind is CUP:
            cells[c : c + 3] = ["\\", "_", "/"]
        elif kind is CAP:
            cells[c : c + 3] = ["/", "-", "\\"]
        else:
            cells[c : c + 3] = [" ", "/" if kind is POS else "\\", " "]
        rows.append("".join(cells).rstrip())
        count += kind.delta
    return rows


def render_ascii(word: MorseWord, labels: bool = True) -> str:
    rows = ascii_rows(word)
    pad = max(len(r) for r in rows)
    lines = []
    for e, row in reversed(list(zip(word.events, rows))):
        lines.append(f"{row.ljust(pad)}   {e.token}" if labels else row)
    return "\n".join(lines) + "\n"


def render_svg(word: MorseWord, cell: int = 24, title: str | None = None) -> str:
    """Standalone SVG 1.1 document."""
    counts = [0]
    for kind, _ in word.events:
        counts.append(counts[-1] + kind.delta)
    width_strands = max(counts)
    n = len(word.events)
    margin = cell
    w = margin * 2 + cell * max(1, width_strands - 1)
    h = margin * 2 + cell * n

    def x(k):  # 1-based strand -> px
        return margin + cell * (k - 1)

    def y(level):  # level 0 = bottom boundary of the first row
        return h - margin - cell * level

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
    ]
    if title:
        parts.append(f"<title>{escape(title)}</title>")
    parts.append('<rect width="100%" height="100%" fill="white"/>')
    parts.append('<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">')
    for t, (kind, pos) in enumerate(word.events):
        below = counts[t]
        y0, y1 = y(t), y(t + 1)
        # passing strands
        if kind is CUP:
            moved = [(k, k) for k in range(1, pos)] + [(k, k + 2) for k in range(pos, below + 1)]
        elif kind is CAP:
            moved = [(k, k) for k in range(1, pos)] + [(k, k - 2) for k in range(pos + 2, below + 1)]
        else:
            moved = [(k, k) for k in range(1, below + 1) if k not in (pos, pos + 1)]
        for a, b in moved:
            parts.append(f'<line x1="{x(a)}" y1="{y0}" x2="{x(b)}" y2="{y1}"/>')
        xa, xb = x(pos), x(pos + 1)
        if kind is CUP:
            parts.append(f'<path d="M {xa} {y1} C {xa} {y0}, {xb} {y0}, {xb} {y1}"/>')
        elif kind is CAP:
            parts.append(f'<path d="M {xa} {y0} C {xa} {y1}, {xb} {y1}, {xb} {y0}"/>')
        else:
            # under-strand first, then a white halo and the over-strand on top
            over = (xa, y0, xb, y1) if kind is POS else (xb, y0, xa, y1)
            under = (xb, y0, xa, y1) if kind is POS else (xa, y0, xb, y1)
            parts.append('<line x1="{}" y1="{}" x2="{}" y2="{}"/>'.format(*under))
            parts.append(
                '<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="white" stroke-width="8"/>'.format(*over)
            )
            parts.append('<line x1="{}" y1="{}" x2="{}" y2="{}"/>'.format(*over))
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
