"""Tabulated curve data behind the standard plots.

Each figure is a rectangular table (header plus numeric rows) ready for CSV
output.  Cells where a function is undefined (g1 beyond pi/2, ratios at
alpha = 0 and so on) are emitted as NaN so every row keeps the same width;
ratio figures drop the alpha = 0 row entirely since both columns would be
NaN.  Alpha grids that straddle zero snap their nearest point to exactly
0.0, so the Neumann column values are exact rather than epsilon-polluted.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .basisfn import BasisFunction, eval_basis, eval_inverse
from .box import BoxGeometry, lambda1_box, lambda2_box, ratio_box
from .errors import DomainError
from .interval import IntervalGeometry, spectrum_interval

_SQUARE = BoxGeometry((0.5, 0.5))
_RECT7 = BoxGeometry((0.5 * math.sqrt(7.0), 0.5 / math.sqrt(7.0)))

_NAN = float("nan")


class FigureId(enum.Enum):
    FIRST_TWO_SQUARE_RECT = "first_two_square_rect"
    RATIO_SQUARE_RECT = "ratio_square_rect"
    PERIM_FIRST_TWO = "perim_first_two"
    PERIM_CLOSEUP = "perim_closeup"
    PERIM_RATIO = "perim_ratio"
    BASIS_GH = "basis_gh"
    BASIS_GH_INVERSE = "basis_GH"
    INTERVAL_FIRST_SIX = "interval_first_six"
    INTERVAL_VS_T_NEG = "interval_vs_t_neg"
    INTERVAL_VS_T_POS = "interval_vs_t_pos"


def _alpha_grid(lo: float, hi: float, n: int) -> np.ndarray:
    grid = np.linspace(lo, hi, n)
    if lo < 0.0 < hi:
        grid[int(np.argmin(np.abs(grid)))] = 0.0
    return grid


def _first_two_rows(grid, coupling_of):
    rows = []
    for a in grid:
        a = float(a)
        rows.append([a,
                     lambda1_box(_SQUARE, coupling_of(_SQUARE, a)),
                     lambda2_box(_SQUARE, coupling_of(_SQUARE, a)),
                     lambda1_box(_RECT7, coupling_of(_RECT7, a)),
                     lambda2_box(_RECT7, coupling_of(_RECT7, a))])
    return rows


def _ratio_rows(grid, coupling_of):
    rows = []
    for a in grid:
        a = float(a)
        if a == 0.0:
            continue
        rows.append([a,
                     ratio_box(_SQUARE, coupling_of(_SQUARE, a)),
                     ratio_box(_RECT7, coupling_of(_RECT7, a))])
    return rows


def _plain(geom, a):
    return a


def _per_length(geom, a):
    return a / geom.perimeter


def figure_table(fig: FigureId, resolution: int = 400) -> tuple:
    """Header and rows for one figure; ``resolution`` sets the grid size."""
    if not isinstance(fig, FigureId):
        raise DomainError(f"expected a FigureId, got {fig!r}")
    if not (isinstance(resolution, int) and resolution >= 16):
        raise DomainError(f"resolution must be an integer >= 16, got {resolution!r}")

    if fig is FigureId.FIRST_TWO_SQUARE_RECT:
        header = ["alpha", "lambda1_square", "lambda2_square", "lambda1_rect", "lambda2_rect"]
        return header, _first_two_rows(_alpha_grid(-10.0, 30.0, resolution), _plain)

    if fig is FigureId.RATIO_SQUARE_RECT:
        header = ["alpha", "ratio_square", "ratio_rect"]
        return header, _ratio_rows(_alpha_grid(-10.0, 30.0, resolution), _plain)

    if fig is FigureId.PERIM_FIRST_TWO:
        header = ["alpha", "lambda1_square", "lambda2_square", "lambda1_rect", "lambda2_rect"]
        return header, _first_two_rows(_alpha_grid(-20.0, 50.0, resolution), _per_length)

    if fig is FigureId.PERIM_CLOSEUP:
        header = ["alpha", "lambda1_square", "lambda2_square", "lambda1_rect", "lambda2_rect"]
        return header, _first_two_rows(_alpha_grid(-4.0, 4.0, resolution), _per_length)

    if fig is FigureId.PERIM_RATIO:
        header = ["alpha", "ratio_square", "ratio_rect"]
        return header, _ratio_rows(_alpha_grid(-20.0, 50.0, resolution), _per_length)

    if fig is FigureId.BASIS_GH:
        header = ["x", "h1", "h2", "g1", "g2"]
        xs = np.linspace(0.0, math.pi, resolution + 2)[1:-1]
        rows = []
        for x in xs:
            x = float(x)
            g1 = eval_basis(BasisFunction.G1, x) if x < 0.5 * math.pi else _NAN
            rows.append([x,
                         eval_basis(BasisFunction.H1, x),
                         eval_basis(BasisFunction.H2, x),
                         g1,
                         eval_basis(BasisFunction.G2, x)])
        return header, rows

    if fig is FigureId.BASIS_GH_INVERSE:
        header = ["y", "H1", "H2", "G1", "G2"]
        ys = np.linspace(-0.99, 8.0, resolution)
        rows = []
        for y in ys:
            y = float(y)
            h1v = eval_inverse(BasisFunction.H1, y) / y if y > 0.0 else _NAN
            h2v = eval_inverse(BasisFunction.H2, y) / y if y > 1.0 else _NAN
            g1v = eval_inverse(BasisFunction.G1, y) / y if y > 0.0 else _NAN
            g2v = eval_inverse(BasisFunction.G2, y) / y if y > -1.0 and y != 0.0 else _NAN
            rows.append([y, h1v, h2v, g1v, g2v])
        return header, rows

    if fig is FigureId.INTERVAL_FIRST_SIX:
        header = ["alpha"] + [f"lambda_{j}" for j in range(1, 7)]
        geom = IntervalGeometry(1.0)
        rows = []
        for a in _alpha_grid(-10.0, 30.0, resolution):
            a = float(a)
            rows.append([a] + spectrum_interval(geom, a, 6).values)
        return header, rows

    if fig in (FigureId.INTERVAL_VS_T_NEG, FigureId.INTERVAL_VS_T_POS):
        alpha = -1.0 if fig is FigureId.INTERVAL_VS_T_NEG else 1.0
        header = ["t", "lambda1", "lambda2"]
        if fig is FigureId.INTERVAL_VS_T_NEG:
            header.append("asymptote")
        rows = []
        for t in np.linspace(0.05, 4.0, resolution):
            geom = IntervalGeometry(float(t))
            vals = spectrum_interval(geom, alpha, 2).values
            row = [float(t), vals[0], vals[1]]
            if fig is FigureId.INTERVAL_VS_T_NEG:
                row.append(-alpha * alpha)
            rows.append(row)
        return header, rows

    raise DomainError(f"unhandled figure {fig!r}")  # pragma: no cover
