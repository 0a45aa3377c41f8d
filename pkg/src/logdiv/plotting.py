"""Matplotlib figures for command reports, written to files."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

__all__ = [
    "arrangement_figure",
    "betti_figure",
    "cohomology_figure",
    "hilbert_figure",
    "zeta_figure",
]

STYLE = {
    "figure.figsize": (5.0, 3.4),
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def _save(fig, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def hilbert_figure(series: dict, path, *, window: list | None = None, title: str = "") -> Path:
    """Bars of a finite Hilbert function; window degrees are outlined."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        degs = sorted(series)
        ax.bar(degs, [series[d] for d in degs], color="#4c72b0", width=0.7)
        if window:
            wdeg = [deg for _, deg, _ in window]
            ax.bar(wdeg, [series.get(d, 0) for d in wdeg], width=0.7, fill=False, edgecolor="#c44e52", lw=1.2)
            for k, deg, _ in window:
                ax.annotate(f"k={k}", (deg, 0), xytext=(0, -18), textcoords="offset points",
                            ha="center", fontsize=6, color="#c44e52", annotation_clip=False)
        ax.set_xlabel("degree", labelpad=14 if window else 4)
        ax.set_ylabel("dimension")
        ax.set_title(title)
        return _save(fig, path)


def betti_figure(betti: list, path, *, title: str = "") -> Path:
    """Betti table ``[[i, j, count], ...]`` as a heatmap in Macaulay layout (row ``j - i``)."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        if not betti:
            ax.text(0.5, 0.5, "zero module", ha="center", va="center")
            ax.set_axis_off()
            return _save(fig, path)
        cols = max(i for i, _, _ in betti) + 1
        rows_keys = sorted({j - i for i, j, _ in betti})
        grid = [[0] * cols for _ in rows_keys]
        for i, j, c in betti:
            grid[rows_keys.index(j - i)][i] = c
        ax.imshow(grid, cmap="Blues", aspect="auto")
        for r, row in enumerate(grid):
            for c, v in enumerate(row):
                if v:
                    ax.text(c, r, str(v), ha="center", va="center", fontsize=9)
        ax.set_xticks(range(cols))
        ax.set_yticks(range(len(rows_keys)))
        ax.set_yticklabels([str(k) for k in rows_keys])
        ax.set_xlabel("homological degree i")
        ax.set_ylabel("j - i")
        ax.set_title(title)
        return _save(fig, path)


def _dot(a, b) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def _chart(forms: list, points: list) -> tuple:
    """Rows ``(r1, r2, l)`` of an affine chart ``p -> (r1.p / l.p, r2.p / l.p)``.

    ``l`` is chosen nonzero on every marked point and not one of the lines.
    """
    prims = {tuple(Fraction(c) / next(x for x in v if x) for c in v) for v in forms}
    for l in [(1, 1, 1), (1, 2, 3), (2, 3, 5), (1, -1, 2), (3, 1, -2), (5, -3, 7)]:
        key = tuple(Fraction(c) / next(x for x in l if x) for c in l)
        if key in prims or any(_dot(l, p) == 0 for p in points):
            continue
        for r1, r2 in [((1, 0, 0), (0, 1, 0)), ((1, 0, 0), (0, 0, 1)), ((0, 1, 0), (0, 0, 1))]:
            det = r1[0] * (r2[1] * l[2] - r2[2] * l[1]) - r1[1] * (r2[0] * l[2] - r2[2] * l[0]) + r1[2] * (r2[0] * l[1] - r2[1] * l[0])
            if det:
                return r1, r2, l
    raise ValueError("no affine chart found")


def _project(p, chart) -> tuple:
    r1, r2, l = chart
    t = _dot(l, p)
    return float(_dot(r1, p) / t), float(_dot(r2, p) / t)


def _line_points(v, chart) -> tuple | None:
    # two points of the projective line v.p = 0 that are finite in the chart
    basis = [(0, -v[2], v[1]), (v[2], 0, -v[0]), (-v[1], v[0], 0)]
    basis = [b for b in basis if any(b)]
    cands = basis + [tuple(a + b for a, b in zip(basis[0], q)) for q in basis[1:]]
    cands += [tuple(a - b for a, b in zip(basis[0], q)) for q in basis[1:]]
    finite = []
    for q in cands:
        if _dot(chart[2], q) != 0:
            P = _project(q, chart)
            if all(abs(P[0] - F[0]) + abs(P[1] - F[1]) > 1e-12 for F in finite):
                finite.append(P)
        if len(finite) == 2:
            return finite[0], finite[1]
    return None


def arrangement_figure(forms: list, path, *, points: list | None = None, title: str = "") -> Path:
    """Lines of a rank-3 arrangement in an affine chart, or lines through 0 in rank 2."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.2, 4.2))
        n = len(forms[0]) if forms else 0
        lim = 4.0
        if n == 2:
            for v in forms:
                a, b = float(v[0]), float(v[1])
                if b:
                    ax.plot([-lim, lim], [a * lim / b, -a * lim / b], lw=1)
                else:
                    ax.plot([0, 0], [-lim, lim], lw=1)
        elif n == 3:
            points = list(points or [])
            chart = _chart(forms, points)
            marks = [_project(p, chart) for p in points]
            lim = max([lim] + [1.25 * max(abs(x), abs(y)) for x, y in marks])
            for v in forms:
                seg = _line_points(v, chart)
                if seg is None:
                    continue
                (x0, y0), (x1, y1) = seg
                big = 1e3 * lim / max(abs(x1 - x0), abs(y1 - y0))
                ax.plot([x0 - big * (x1 - x0), x0 + big * (x1 - x0)], [y0 - big * (y1 - y0), y0 + big * (y1 - y0)], lw=1)
            for x, y in marks:
                ax.plot(x, y, "ko", ms=4)
        else:
            ax.text(0.5, 0.5, f"rank {n}: no picture", ha="center", va="center", transform=ax.transAxes)
        ax.set_xlim(-lim, lim)
        ax.set_ylim(-lim, lim)
        ax.set_aspect("equal")
        ax.set_title(title)
        return _save(fig, path)


def cohomology_figure(rows: list, n: int, path, *, title: str = "") -> Path:
    """One panel per complex position: ``dim H^i`` over the ``(a, b)`` window."""
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(1, n + 1, figsize=(2.0 * (n + 1), 2.6), sharey=True)
        a_max = max(r["bidegree"][0] for r in rows)
        b_max = max(r["bidegree"][1] for r in rows)
        for i, ax in enumerate(axes):
            grid = [[0] * (a_max + 1) for _ in range(b_max + 1)]
            for r in rows:
                if r["position"] == i:
                    a, b = r["bidegree"]
                    grid[b][a] = r["h"]
            ax.imshow(grid, cmap="Greens", origin="lower", aspect="auto")
            ax.set_title(f"H^{i}")
            ax.set_xlabel("a")
        axes[0].set_ylabel("b")
        fig.suptitle(title)
        return _save(fig, path)


def zeta_figure(poles: list, candidates: list, path, *, title: str = "") -> Path:
    """Poles of the zeta function against n/d candidates on the real line."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5.0, 1.8))
        ax.scatter([float(c) for c in candidates], [0] * len(candidates), marker="|", s=300,
                   color="#999999", label="flat candidates")
        ax.scatter([float(p) for p, _ in poles], [0] * len(poles), color="#c44e52", zorder=3, label="poles")
        for p, order in poles:
            ax.annotate(f"{p} ({order})", (float(p), 0), xytext=(0, 8), textcoords="offset points",
                        ha="center", fontsize=7)
        ax.set_yticks([])
        ax.set_xlabel("s")
        ax.legend(frameon=False, fontsize=7, loc="lower left")
        ax.set_title(title)
        return _save(fig, path)
