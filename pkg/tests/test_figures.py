"""Figure tables: shapes, exact special rows, NaN policy, caption claims."""

import math

import pytest

from robinbox import DomainError, FigureId, figure_table

HALF_PI = 0.5 * math.pi


def test_every_figure_is_rectangular():
    for fig in FigureId:
        header, rows = figure_table(fig, 32)
        assert len(rows) > 0
        assert all(len(r) == len(header) for r in rows)
        assert all(isinstance(c, float) for r in rows for c in r)


def test_row_counts():
    header, rows = figure_table(FigureId.FIRST_TWO_SQUARE_RECT, 40)
    assert len(rows) == 40
    # ratio figures drop the alpha = 0 row, the grid straddles zero
    header, rows = figure_table(FigureId.RATIO_SQUARE_RECT, 40)
    assert len(rows) == 39
    header, rows = figure_table(FigureId.BASIS_GH, 40)
    assert len(rows) == 40


def test_neumann_row_is_exact():
    header, rows = figure_table(FigureId.INTERVAL_FIRST_SIX, 81)
    zero_rows = [r for r in rows if r[0] == 0.0]
    assert len(zero_rows) == 1
    row = zero_rows[0]
    for j in range(6):
        want = (j * HALF_PI) ** 2
        assert abs(row[1 + j] - want) <= 1e-10 * max(1.0, want)
    assert row[1] == 0.0


def test_adjacent_curves_stay_ordered():
    header, rows = figure_table(FigureId.INTERVAL_FIRST_SIX, 64)
    for row in rows:
        vals = row[1:]
        for i in range(5):
            assert vals[i] < vals[i + 1]


def test_nan_cells_follow_domains():
    header, rows = figure_table(FigureId.BASIS_GH, 64)
    gi = header.index("g1")
    for row in rows:
        x = row[0]
        if x > HALF_PI:
            assert math.isnan(row[gi])
        else:
            assert math.isfinite(row[gi])

    header, rows = figure_table(FigureId.BASIS_GH_INVERSE, 64)
    h2 = header.index("H2")
    g2 = header.index("G2")
    for row in rows:
        y = row[0]
        assert math.isnan(row[h2]) == (y <= 1.0)
        if -1.0 < y < 0.0:
            assert math.isfinite(row[g2])


def test_ratio_square_dominates_rect_for_positive_alpha():
    header, rows = figure_table(FigureId.PERIM_RATIO, 96)
    si = header.index("ratio_square")
    ri = header.index("ratio_rect")
    positive = [r for r in rows if r[0] > 0.0]
    assert positive
    for row in positive:
        assert row[si] >= row[ri]


def test_negative_branch_has_asymptote_column():
    header, rows = figure_table(FigureId.INTERVAL_VS_T_NEG, 32)
    assert header[-1] == "asymptote"
    assert all(r[-1] == -1.0 for r in rows)
    header, rows = figure_table(FigureId.INTERVAL_VS_T_POS, 32)
    assert "asymptote" not in header


def test_figure_argument_validation():
    with pytest.raises(DomainError):
        figure_table("not_a_figure", 40)
    with pytest.raises(DomainError):
        figure_table(FigureId.BASIS_GH, 15)


def test_figure_id_lookup_by_value():
    assert FigureId("interval_first_six") is FigureId.INTERVAL_FIRST_SIX
    with pytest.raises(ValueError):
        FigureId("no_such_figure")
