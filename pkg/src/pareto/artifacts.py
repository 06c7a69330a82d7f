import logging
from pathlib import Path
from typing import Dict, Sequence, Union

import numpy as np
import pandas as pd

from ..core.artifacts import atomic_write_text
from ..core.errors import InvalidInputError
from .front import Front

logger = logging.getLogger(__name__)

SERIES_COLORS = ('#1f77b4', '#d62728', '#2ca02c', '#9467bd')


def front_frame(front: Front) -> pd.DataFrame:
    """Every candidate of the front, flagged 1 when it survived the dominance filter"""
    candidates = list(front.candidates) or list(front.points)
    kept = {id(p) for p in front.points}
    rows = []
    for p in candidates:
        row = {
            'n_a': p.n_a, 'n_b': p.n_b, 'lambda_star': p.lambda_star,
            'method': p.method.value, 'seed': p.seed,
        }
        for i, value in enumerate(np.atleast_1d(p.x)):
            row[f'x{i}'] = float(value)
        row['f_a'] = p.f_a
        row['f_b'] = p.f_b
        row['kept_after_filter'] = int(id(p) in kept)
        rows.append(row)
    return pd.DataFrame(rows)


def write_front_csv(front: Front, path: Union[str, Path]) -> Path:
    return atomic_write_text(path, front_frame(front).to_csv(index=False, lineterminator='\n'))


def _fmt(value: float) -> str:
    return f"{value:.3f}".rstrip('0').rstrip('.')


def _ticks(lo: float, hi: float, count: int = 5) -> np.ndarray:
    return np.linspace(lo, hi, count)


def front_svg(series: Dict[str, Front], title: str = "", width: int = 480, height: int = 360) -> str:
    """
    Scatter of f_b against f_a, one colored series per method.

    Only the filtered points are drawn. The markup carries no timestamp, so
    identical fronts give identical files.
    """
    drawn = {name: front.objectives for name, front in series.items() if len(front)}
    if not drawn:
        raise InvalidInputError("Nothing to plot: every front is empty")
    values = np.vstack(list(drawn.values()))
    lo, hi = values.min(axis=0), values.max(axis=0)
    span = np.where(hi > lo, hi - lo, 1.0)
    lo, hi = lo - 0.05 * span, hi + 0.05 * span

    margin_left, margin_right, margin_top, margin_bottom = 60, 20, 30, 45
    plot_w = width - margin_left - margin_right
    plot_h = height - margin_top - margin_bottom

    def sx(v: float) -> float:
        return margin_left + (v - lo[0]) / (hi[0] - lo[0]) * plot_w

    def sy(v: float) -> float:
        return margin_top + (hi[1] - v) / (hi[1] - lo[1]) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{margin_left}" y="{margin_top}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="black"/>',
    ]
    if title:
        parts.append(f'<text x="{width / 2:.1f}" y="18" text-anchor="middle" font-size="13">{title}</text>')

    for v in _ticks(lo[0], hi[0]):
        x = sx(v)
        parts.append(f'<line x1="{x:.2f}" y1="{margin_top + plot_h}" x2="{x:.2f}" '
                     f'y2="{margin_top + plot_h + 4}" stroke="black"/>')
        parts.append(f'<text x="{x:.2f}" y="{margin_top + plot_h + 16}" text-anchor="middle">{_fmt(v)}</text>')
    for v in _ticks(lo[1], hi[1]):
        y = sy(v)
        parts.append(f'<line x1="{margin_left - 4}" y1="{y:.2f}" x2="{margin_left}" y2="{y:.2f}" stroke="black"/>')
        parts.append(f'<text x="{margin_left - 7}" y="{y + 4:.2f}" text-anchor="end">{_fmt(v)}</text>')
    parts.append(f'<text x="{margin_left + plot_w / 2:.1f}" y="{height - 8}" text-anchor="middle">f_a</text>')
    parts.append(f'<text x="14" y="{margin_top + plot_h / 2:.1f}" text-anchor="middle" '
                 f'transform="rotate(-90 14 {margin_top + plot_h / 2:.1f})">f_b</text>')

    for k, (name, points) in enumerate(drawn.items()):
        color = SERIES_COLORS[k % len(SERIES_COLORS)]
        parts.append(f'<g fill="{color}" fill-opacity="0.8" data-series="{name}">')
        parts.extend(f'<circle cx="{sx(fa):.2f}" cy="{sy(fb):.2f}" r="3"/>' for fa, fb in points)
        parts.append('</g>')
        legend_y = margin_top + 14 + 14 * k
        parts.append(f'<circle cx="{margin_left + plot_w - 90}" cy="{legend_y - 4}" r="3" fill="{color}"/>')
        parts.append(f'<text x="{margin_left + plot_w - 82}" y="{legend_y}">{name}</text>')

    parts.append('</svg>')
    return '\n'.join(parts) + '\n'


def write_front_svg(series: Dict[str, Front], path: Union[str, Path], title: str = "") -> Path:
    return atomic_write_text(path, front_svg(series, title))


def write_fronts(fronts: Sequence[Front], out_dir: Union[str, Path], stem: str) -> Dict[str, Path]:
    """Front CSV and SVG per method, named <stem>_<method>.csv/.svg"""
    out_dir = Path(out_dir)
    written = {}
    for front in fronts:
        method = front.params.get('method', 'front')
        key = method.lower()
        written[f'{key}_csv'] = write_front_csv(front, out_dir / f"{stem}_{key}.csv")
        if len(front):
            written[f'{key}_svg'] = write_front_svg({method: front}, out_dir / f"{stem}_{key}.svg",
                                                    title=f"{front.problem} ({method})")
    logger.info(f"[WRITE] {len(written)} front artifacts in {out_dir}")
    return written
