"""Renderers: magnet-strip SVG layouts and force-matrix report figures."""

_PITCH = 24
_RADIUS = 8
_MARGIN = 12
_STRIP_H = 24
_ROW_GAP = 10

_STYLE = """\
.strip { fill: none; stroke: #333333; stroke-width: 1; }
.north { fill: #2255cc; }
.south { fill: #cc2222; }"""


def render_svg(words) -> str:
    """SVG 1.1 document: one horizontal strip per word, one circle per magnet.

    A '1' becomes a circle of class "north", a '0' one of class "south",
    and a '.' leaves its slot empty. Classes are abstract; the embedded
    stylesheet maps them to the usual blue/red. Output bytes are a pure
    function of the words.
    """
    words = list(words)
    max_len = max((len(w) for w in words), default=0)
    width = 2 * _MARGIN + _PITCH * max_len
    height = 2 * _MARGIN
    if words:
        height += len(words) * _STRIP_H + (len(words) - 1) * _ROW_GAP
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<style>",
        _STYLE,
        "</style>",
    ]
    for row, word in enumerate(words):
        y0 = _MARGIN + row * (_STRIP_H + _ROW_GAP)
        cy = y0 + _STRIP_H // 2
        out.append(f'<g id="word-{row + 1}">')
        out.append(
            f'<rect class="strip" x="{_MARGIN}" y="{y0}" '
            f'width="{_PITCH * len(word)}" height="{_STRIP_H}" rx="4"/>'
        )
        for col, letter in enumerate(word):
            if letter == ".":
                continue
            cls = "north" if letter == "1" else "south"
            cx = _MARGIN + col * _PITCH + _PITCH // 2
            out.append(f'<circle class="{cls}" cx="{cx}" cy="{cy}" r="{_RADIUS}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_force_matrix_png(matrix, path) -> None:
    """Force-matrix heatmap written to a PNG file.

    The figure accompanies the CSV matrix on the verify report path. Cell
    values are annotated for small codes.
    """
    import numpy as np
    from matplotlib.backends.backend_agg import FigureCanvasAgg
    from matplotlib.figure import Figure

    data = np.array(matrix, dtype=float)
    empty = data.size == 0
    if empty:
        data = np.zeros((1, 1))
    k = data.shape[0]
    span = max(1.0, float(np.abs(data).max()))
    fig = Figure(figsize=(max(3.2, 0.45 * k + 1.8),) * 2, dpi=150)
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    image = ax.imshow(data, cmap="coolwarm", vmin=-span, vmax=span)
    ticks = range(k)
    ax.set_xticks(ticks, [str(t + 1) for t in ticks])
    ax.set_yticks(ticks, [str(t + 1) for t in ticks])
    ax.set_xlabel("reversed word j")
    ax.set_ylabel("word i")
    ax.set_title("pairwise force matrix")
    if k <= 16 and not empty:
        for i in range(k):
            for j in range(k):
                ax.text(j, i, str(int(data[i, j])),
                        ha="center", va="center", fontsize=7)
    fig.colorbar(image, ax=ax, shrink=0.8, label="force")
    fig.tight_layout()
    fig.savefig(path, format="png")
