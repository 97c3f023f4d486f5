import pytest

from schurhopf.shapes import (
    EMPTY_SHAPE,
    DisconnectedError,
    NotConnectedRibbonError,
    NotSkewError,
    ShapeError,
    SkewShape,
    box_bounded_shapes,
    cells_of,
    connected_components,
    connected_shapes,
    diagonal,
    format_shape,
    is_connected,
    is_ribbon,
    lies_in_bottom,
    lies_in_top,
    ne_box,
    parse_shape,
    partitions_in_box,
    partitions_of,
    ribbon_composition_of,
    ribbon_shape,
    rim_ribbon,
    rotate180,
    skew_from_cells,
    sw_box,
    transpose,
)


def shp(text):
    return parse_shape(text)


class TestCellsOf:
    def test_partition(self):
        assert cells_of(shp("2,1")) == {(0, 0), (0, 1), (1, 0)}

    def test_skew(self):
        assert cells_of(shp("2,2/1")) == {(0, 1), (1, 0), (1, 1)}

    def test_empty_skew(self):
        assert cells_of(SkewShape((1,), (1,))) == frozenset()

    def test_size_matches_cell_count(self):
        for lam in partitions_of(6):
            for shape in [SkewShape(lam), SkewShape(lam, lam[1:])]:
                assert shape.size == len(shape.cells)


class TestSkewFromCells:
    def test_inverse_of_cells(self):
        assert skew_from_cells({(0, 1), (1, 0), (1, 1)}) == shp("2,2/1")

    def test_noncontiguous_row_rejected(self):
        with pytest.raises(NotSkewError):
            skew_from_cells({(0, 0), (0, 2)})

    def test_two_diagonal_boxes(self):
        assert skew_from_cells({(0, 1), (1, 0)}) == shp("2,1/1")

    def test_bad_monotonicity_rejected(self):
        # lower row sticking out to the right cannot be skew
        with pytest.raises(NotSkewError):
            skew_from_cells({(0, 0), (1, 0), (1, 1)})

    def test_empty_row_gap(self):
        shape = skew_from_cells({(0, 1), (2, 0)})
        assert shape.outer == (2, 1, 1)
        assert shape.inner == (1, 1)
        with pytest.raises(NotSkewError):
            skew_from_cells({(0, 0), (2, 0)})

    def test_round_trip_small(self):
        for lam in partitions_of(8):
            for k in range(len(lam) + 1):
                mu = lam[k:]
                if len(mu) <= len(lam) and all(
                    mu[i] <= lam[i] for i in range(len(mu))
                ):
                    shape = SkewShape(lam, mu)
                    assert skew_from_cells(shape.cells).cells == shape.cells

    def test_round_trip_box_family(self):
        for shape in box_bounded_shapes(5, 5):
            assert skew_from_cells(shape.cells) == shape

    def test_empty(self):
        assert skew_from_cells(set()) == EMPTY_SHAPE


class TestRotate180:
    def test_hook(self):
        assert rotate180(shp("3,1")) == shp("3,3/2")

    def test_skew(self):
        assert rotate180(shp("2,2/1")) == shp("2,1")

    def test_single_box(self):
        assert rotate180(shp("1")) == shp("1")

    def test_involution_exhaustive(self):
        # every connected shape of size <= 8, the full 6x6 box family, and
        # disconnected shapes with row gaps
        for n in range(1, 9):
            for shape in connected_shapes(n):
                assert rotate180(rotate180(shape)) == shape
        for shape in box_bounded_shapes(6, 6):
            assert rotate180(rotate180(shape)) == shape
        for text in ["4,1,1/3,1", "5,2/4", "3,3,1,1/3,1,1", "6,3,1/5,2"]:
            shape = parse_shape(text)
            assert rotate180(rotate180(shape)) == shape


class TestConnectivity:
    def test_two_boxes(self):
        comps = connected_components(shp("2,1/1"))
        assert [format_shape(c) for c in comps] == ["1", "1"]

    def test_connected_square(self):
        assert connected_components(shp("2,2")) == (shp("2,2"),)

    def test_three_staircase_boxes(self):
        comps = connected_components(shp("3,2,1/2,1"))
        assert [format_shape(c) for c in comps] == ["1", "1", "1"]

    def test_column_touching(self):
        # the two right-column cells share an edge, so only two components
        comps = connected_components(shp("3,3,1/2,2"))
        assert sorted(format_shape(c) for c in comps) == ["1", "1,1"]

    def test_empty(self):
        assert connected_components(EMPTY_SHAPE) == ()
        assert is_connected(EMPTY_SHAPE)


class TestRibbons:
    def test_square_is_not_ribbon(self):
        assert not is_ribbon(shp("2,2"))

    def test_hook_is_ribbon(self):
        assert is_ribbon(shp("2,1"))

    def test_fat_skew_is_not(self):
        assert not is_ribbon(shp("3,3/1"))

    def test_composition_of(self):
        assert ribbon_composition_of(shp("2,2/1")) == (1, 2)
        assert ribbon_composition_of(shp("2,1")) == (2, 1)

    def test_disconnected_rejected(self):
        with pytest.raises(NotConnectedRibbonError):
            ribbon_composition_of(shp("2,1/1"))

    def test_non_ribbon_rejected(self):
        with pytest.raises(NotConnectedRibbonError):
            ribbon_composition_of(shp("2,2"))

    def test_shape_round_trip(self):
        for n in range(1, 8):
            for comp in _compositions(n):
                assert ribbon_composition_of(ribbon_shape(comp)) == comp

    def test_rotation_reverses_composition(self):
        for n in range(1, 9):
            for comp in _compositions(n):
                rotated = rotate180(ribbon_shape(comp))
                assert ribbon_composition_of(rotated) == comp[::-1]


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


class TestRims:
    def test_square_nw(self):
        assert rim_ribbon(shp("2,2"), "NW") == [(1, 0), (0, 0), (0, 1)]

    def test_square_se(self):
        assert rim_ribbon(shp("2,2"), "SE") == [(1, 0), (1, 1), (0, 1)]

    def test_single_box(self):
        assert rim_ribbon(shp("1"), "NW") == [(0, 0)]

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedError):
            rim_ribbon(shp("2,1/1"), "NW")

    def test_rim_meets_every_diagonal_once(self):
        for n in range(1, 8):
            for shape in connected_shapes(n):
                diags = {diagonal(c) for c in shape.cells}
                for side in ("NW", "SE"):
                    rim = rim_ribbon(shape, side)
                    assert len(rim) == len(diags)
                    assert {diagonal(c) for c in rim} == diags


class TestPlacements:
    def test_domino_in_top(self):
        placements = lies_in_top(shp("1,1"), shp("2,2/1"))
        assert placements == [frozenset({(0, 1), (1, 1)})]

    def test_row_does_not_fit_in_column(self):
        assert lies_in_top(shp("2"), shp("1,1")) == []

    def test_identity_placement(self):
        shape = shp("3,2/1")
        assert lies_in_top(shape, shape) == [shape.cells]
        assert lies_in_bottom(shape, shape) == [shape.cells]

    def test_extreme_boxes(self):
        shape = shp("4,4,2,2/2,1")
        assert ne_box(shape) == (0, 3)
        assert sw_box(shape) == (3, 0)


class TestParsing:
    def test_round_trip(self):
        for text in ["4,4,2,2/2,1", "3,1", "0", "8,7,2/3,1", "1"]:
            assert format_shape(parse_shape(text)) == text

    def test_minimal_representative(self):
        assert format_shape(SkewShape((2, 2), (2,))) == "2"

    def test_rejects_non_monotone(self):
        with pytest.raises(ShapeError):
            parse_shape("4,5")

    def test_rejects_nonpositive(self):
        with pytest.raises(ShapeError):
            parse_shape("3,0,1")

    def test_rejects_bad_skew(self):
        with pytest.raises(ShapeError):
            parse_shape("2,2/3")

    def test_empty(self):
        assert parse_shape("0") == EMPTY_SHAPE


class TestTranspose:
    def test_is_involution(self):
        for shape in box_bounded_shapes(6, 6):
            assert transpose(transpose(shape)) == shape

    def test_column_row(self):
        assert transpose(shp("1,1,1")) == shp("3")


class TestEnumerations:
    def test_connected_counts(self):
        # connected skew shapes by size, cross-checked against a direct
        # scan of the box-bounded family
        counts = [len(list(connected_shapes(n))) for n in range(1, 7)]
        assert counts == [1, 2, 4, 9, 20, 46]
        for n in range(1, 7):
            direct = {
                s.cells
                for s in box_bounded_shapes(n, n)
                if s.size == n and is_connected(s)
            }
            assert {s.cells for s in connected_shapes(n)} == direct

    def test_partitions_in_box(self):
        assert sorted(partitions_in_box(2, 2)) == [(), (1,), (1, 1), (2,), (2, 1), (2, 2)]

    def test_partitions_of(self):
        assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
