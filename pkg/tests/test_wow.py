import pytest

from schurhopf.shapes import (
    SkewShape,
    connected_shapes,
    format_shape,
    parse_shape,
    rotate180,
    skew_from_cells,
)
from schurhopf.wow import (
    RR,
    UU,
    StructureError,
    WowStructure,
    amalgamate,
    compose,
    compose_layout,
    detect_wow,
    dot_w,
    has_loose_end_ribbons,
    key_ribbons,
    rotate_structure,
    self_amalgam_cells,
)


def shp(text):
    return parse_shape(text)


class TestDetect:
    def test_positive_landmark_structure(self, positive_structure):
        st = positive_structure
        assert st.orientation == RR
        assert st.upper_w == {(0, 3), (1, 3)}
        assert st.lower_w == {(2, 0), (3, 0)}
        assert format_shape(st.w_shape) == "1,1"
        assert format_shape(st.o_shape) == "2,2,1,1/1"

    def test_transpose_symmetric_gamma_also_has_uu(self):
        structures = detect_wow(shp("4,4,2,2/2,1"))
        assert {st.orientation for st in structures} == {RR, UU}
        uu = [st for st in structures if st.orientation == UU][0]
        assert format_shape(uu.w_shape) == "2"

    def test_counterexample_structures(self):
        structures = detect_wow(shp("8,7,2/3,1"))
        assert [format_shape(st.w_shape) for st in structures] == ["3,2/1", "1"]
        assert all(st.orientation == RR for st in structures)

    def test_square_has_none(self):
        assert detect_wow(shp("2,2")) == []

    def test_box_and_domino_have_none(self):
        assert detect_wow(shp("1")) == []
        assert detect_wow(shp("2")) == []
        assert detect_wow(shp("1,1")) == []

    def test_line_shapes(self):
        # a row of three is W->O->W, a column of three is W^O^W
        row = detect_wow(shp("3"))
        assert len(row) == 1 and row[0].orientation == RR
        col = detect_wow(shp("1,1,1"))
        assert len(col) == 1 and col[0].orientation == UU

    def test_validation_rejects_garbage(self):
        gamma = shp("4,4,2,2/2,1")
        bad = WowStructure(gamma, RR, frozenset({(0, 3)}), frozenset({(3, 0)}))
        with pytest.raises(StructureError):
            bad.validate()


class TestAmalgamation:
    def test_full_overlap(self):
        one = shp("1")
        assert amalgamate(one, one, one, one.cells, one.cells) == one

    def test_column_stack(self):
        col = shp("1,1")
        box = shp("1")
        out = amalgamate(col, col, box, frozenset({(0, 0)}), frozenset({(1, 0)}))
        assert out == shp("1,1,1")

    def test_positive_self_amalgam(self, positive_structure):
        st = positive_structure
        out = amalgamate(st.gamma, st.gamma, st.w_shape, st.upper_w, st.lower_w)
        assert format_shape(out) == "7,7,5,5,2,2/5,4,2,1"
        assert out.size == 2 * 9 - 2
        assert skew_from_cells(self_amalgam_cells(st)) == out

    def test_bad_placement_rejected(self):
        with pytest.raises(ValueError):
            amalgamate(shp("2"), shp("2"), shp("1"), frozenset({(0, 0)}), frozenset({(0, 0)}))


class TestDot:
    def test_positive_overlapping_union(self, positive_structure):
        st = positive_structure
        out = dot_w(st.gamma, st.gamma, st)
        # the copies legitimately share two cells here, so the union has
        # 16 boxes, not 18
        assert out.size == 16
        assert format_shape(out) == "6,6,4,4,4,2,2/4,3,2,2,1"

    def test_requires_gamma_copies(self, positive_structure):
        with pytest.raises(ValueError):
            dot_w(shp("1"), shp("1"), positive_structure)


class TestCompose:
    def test_single_box_is_gamma(self, positive_structure):
        assert compose(shp("1"), positive_structure) == positive_structure.gamma

    def test_row_of_two_is_amalgam(self, positive_structure):
        st = positive_structure
        assert compose(shp("2"), st) == skew_from_cells(self_amalgam_cells(st))

    def test_positive_beta(self, positive_structure):
        out = compose(shp("2,1"), positive_structure)
        assert format_shape(out) == "9,9,7,7,4,4,4,2,2/7,6,4,3,2,2,1"
        assert out.size == 23

    def test_positive_beta_star(self, positive_structure):
        out = compose(rotate180(shp("2,1")), positive_structure)
        assert format_shape(out) == "9,9,7,7,7,5,5,2,2/7,6,5,5,4,2,1"
        assert out.size == 23

    def test_translation_invariance(self, positive_structure):
        # alpha given through any translated cell set composes identically
        alpha = skew_from_cells({(5, 7), (5, 8), (6, 7)})
        assert compose(alpha, positive_structure) == compose(shp("2,1"), positive_structure)

    def test_layout_offsets(self, positive_structure):
        _, offsets, _ = compose_layout(shp("2,1"), positive_structure)
        assert offsets[(0, 0)] == (0, 0)
        assert offsets[(0, 1)] == (-2, 3)
        assert offsets[(1, 0)] == (3, -2)

    def test_empty_alpha_rejected(self, positive_structure):
        with pytest.raises(ValueError):
            compose(SkewShape(()), positive_structure)


class TestKeyRibbons:
    def test_positive_instance(self, positive_structure):
        keys = key_ribbons(positive_structure)
        assert keys.top == (1, 2, 2)
        assert keys.bottom == (3, 1, 1)
        assert keys.size == 5
        assert keys.top_footprint == {(0, 2), (1, 1), (1, 2), (2, 0), (2, 1)}
        assert keys.bottom_footprint == {(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)}

    def test_uu_twin_matches(self):
        structures = detect_wow(shp("4,4,2,2/2,1"))
        uu = [st for st in structures if st.orientation == UU][0]
        keys = key_ribbons(uu)
        assert keys.top == (1, 2, 2)
        assert keys.bottom == (3, 1, 1)

    def test_counterexample_sizes(self, counterexample_structure):
        keys = key_ribbons(counterexample_structure)
        assert keys.size == 6
        assert keys.top == (3, 3)
        assert keys.bottom == (2, 4)

    def test_counterexample_small_w(self):
        st = detect_wow(shp("8,7,2/3,1"))[1]
        keys = key_ribbons(st)
        assert keys.size == 9
        assert keys.top == (4, 3, 2)
        assert keys.bottom == (2, 6, 1)

    def test_footprints_inside_gamma(self, catalog10):
        for st, keys, _ in catalog10[:300]:
            assert keys.top_footprint <= st.gamma.cells
            assert keys.bottom_footprint <= st.gamma.cells


class TestLooseEnds:
    def test_positive_clean(self, positive_structure):
        assert not has_loose_end_ribbons(positive_structure).found

    def test_counterexample_witness(self, counterexample_structure):
        loose = has_loose_end_ribbons(counterexample_structure)
        assert loose.found
        comps = {comp for comp, _ in loose.witnesses}
        assert comps == {(1, 3, 2)}
        (witness_cells,) = [cells for _, cells in loose.witnesses]
        assert witness_cells == {(0, 3), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1)}

    def test_counterexample_small_w_clean(self):
        st = detect_wow(shp("8,7,2/3,1"))[1]
        assert not has_loose_end_ribbons(st).found


class TestRotation:
    def test_positive_rotation(self, positive_structure):
        rot = rotate_structure(positive_structure)
        assert format_shape(rot.gamma) == "4,4,3,2/2,2"
        rot.validate()

    def test_double_rotation_identity(self, positive_structure):
        twice = rotate_structure(rotate_structure(positive_structure))
        assert twice == positive_structure

    def test_duality_on_small_catalog(self):
        beta = shp("2,1")
        beta_star = rotate180(beta)
        for n in range(3, 7):
            for gamma in connected_shapes(n):
                for st in detect_wow(gamma):
                    lhs = rotate180(compose(beta, st))
                    rhs = compose(beta_star, rotate_structure(st))
                    assert lhs == rhs


class TestStructureSurface:
    def test_describe(self, positive_structure):
        text = positive_structure.describe()
        assert text == "W -> O -> W: gamma=4,4,2,2/2,1; W=1,1@top(0,3)/bottom(2,0)"

    def test_json(self, positive_structure):
        data = positive_structure.to_json()
        assert data["gamma"] == "4,4,2,2/2,1"
        assert data["orientation"] == RR
        assert data["upper_w"] == [(0, 3), (1, 3)]
