"""Extended Young diagrams, corner toggles, and their assigned forms."""

import pytest

from polyreal import LinearForm
from polyreal.eyd import (
    Corner,
    EYDError,
    ExtendedYoungDiagram,
    assign_a1,
    assign_d2,
    corners,
    enumerate_eyd,
    make_eyd,
    render_eyd,
    toggle_concave,
    toggle_convex,
)

x = LinearForm.x


def shapes_for_charge(k):
    """The six smallest diagrams of charge k, empty first."""
    return [
        make_eyd(k, []),
        make_eyd(k, [k - 1]),
        make_eyd(k, [k - 1, k - 1]),
        make_eyd(k, [k - 2]),
        make_eyd(k, [k - 2, k - 1]),
        make_eyd(k, [k - 2, k - 2]),
    ]


def expected_small_forms(k, s):
    """Assignments of the six smallest diagrams for the cyclic rank 3 case."""
    table = {
        1: [
            x(s, 1),
            x(s + 1, 2) + x(s, 3) - x(s + 1, 1),
            x(s + 1, 3) + x(s, 3) - x(s + 2, 2),
            2 * x(s + 1, 2) - x(s + 1, 3),
            x(s + 1, 2) + x(s + 1, 1) - x(s + 2, 2),
            x(s + 1, 2) + x(s + 1, 3) - x(s + 2, 1),
        ],
        2: [
            x(s, 2),
            x(s, 1) + x(s, 3) - x(s + 1, 2),
            x(s, 1) + x(s + 1, 1) - x(s + 1, 3),
            2 * x(s, 3) - x(s + 1, 1),
            x(s, 3) + x(s + 1, 2) - x(s + 1, 3),
            x(s, 3) + x(s + 1, 1) - x(s + 2, 2),
        ],
        3: [
            x(s, 3),
            x(s + 1, 1) + x(s + 1, 2) - x(s + 1, 3),
            x(s + 2, 2) + x(s + 1, 2) - x(s + 2, 1),
            2 * x(s + 1, 1) - x(s + 2, 2),
            x(s + 1, 1) + x(s + 1, 3) - x(s + 2, 1),
            x(s + 1, 1) + x(s + 2, 2) - x(s + 2, 3),
        ],
    }
    return table[k]


class TestConstruction:
    def test_trailing_charge_columns_trimmed(self):
        assert make_eyd(2, [1, 2, 2]).ys == (1,)
        assert make_eyd(0, [0, 0]).ys == ()

    def test_decreasing_rejected(self):
        with pytest.raises(EYDError):
            make_eyd(1, [0, -1])

    def test_above_charge_rejected(self):
        with pytest.raises(EYDError):
            make_eyd(1, [2])

    def test_y_extends_with_charge(self):
        T = make_eyd(3, [1])
        assert T.y(0) == 1 and T.y(1) == 3 and T.y(7) == 3

    def test_boxes(self):
        assert make_eyd(1, [-3, -2, -1, -1, 0]).boxes() == 12
        assert make_eyd(5, []).boxes() == 0

    def test_json_round_trip(self):
        T = make_eyd(2, [0, 1])
        assert ExtendedYoungDiagram.from_json(T.to_json()) == T


class TestCorners:
    def test_empty_diagram(self):
        assert corners(make_eyd(4, [])) == [Corner("concave", 0, 4)]

    def test_staircase_example(self):
        T = make_eyd(1, [-3, -2, -1, -1, 0])
        got = corners(T)
        concave = {(c.x, c.y) for c in got if c.kind == "concave"}
        convex = {(c.x, c.y) for c in got if c.kind == "convex"}
        assert concave == {(0, -3), (1, -2), (2, -1), (4, 0), (5, 1)}
        assert convex == {(1, -3), (2, -2), (4, -1), (5, 0)}

    def test_diagonal(self):
        assert Corner("concave", 2, -1).diagonal == 1


class TestToggles:
    @pytest.mark.parametrize("ys", [[], [0], [-1, 0], [-2, -1, -1]])
    def test_add_then_remove_round_trip(self, ys):
        T = make_eyd(1, ys)
        for c in corners(T):
            if c.kind != "concave":
                continue
            bigger = toggle_concave(T, c)
            assert bigger.boxes() == T.boxes() + 1
            back = toggle_convex(bigger, Corner("convex", c.x + 1, c.y - 1))
            assert back == T

    def test_remove_then_add_round_trip(self):
        T = make_eyd(1, [-1, 0])
        for c in corners(T):
            if c.kind != "convex":
                continue
            smaller = toggle_convex(T, c)
            assert smaller.boxes() == T.boxes() - 1
            assert toggle_concave(smaller, Corner("concave", c.x - 1, c.y + 1)) == T

    def test_non_corner_rejected(self):
        T = make_eyd(1, [0])
        with pytest.raises(EYDError):
            toggle_concave(T, Corner("concave", 3, 1))
        with pytest.raises(EYDError):
            toggle_convex(T, Corner("convex", 1, 1))

    def test_wrong_kind_rejected(self):
        T = make_eyd(1, [0])
        concave = next(c for c in corners(T) if c.kind == "concave")
        with pytest.raises(EYDError):
            toggle_convex(T, concave)


class TestAssignment:
    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("s", [1, 2])
    def test_small_forms_cyclic_rank3(self, a1_n3, k, s):
        got = [assign_a1(a1_n3, T, s) for T in shapes_for_charge(k)]
        assert got == expected_small_forms(k, s)

    def test_empty_diagram_d2(self, d2_n3):
        for k in (1, 2, 3):
            assert assign_d2(d2_n3, make_eyd(k, []), 1) == x(1, k)

    def test_family_mismatch_rejected(self, a1_n3, d2_n3):
        from polyreal import RootDataError

        T = make_eyd(1, [])
        with pytest.raises(RootDataError):
            assign_d2(a1_n3, T, 1)
        with pytest.raises(RootDataError):
            assign_a1(d2_n3, T, 1)


def partition_count_oracle(max_boxes):
    """Cumulative partition counts via the classical coin DP."""
    counts = [1] + [0] * max_boxes
    for part in range(1, max_boxes + 1):
        for m in range(part, max_boxes + 1):
            counts[m] += counts[m - part]
    total = 0
    out = []
    for m in range(max_boxes + 1):
        total += counts[m]
        out.append(total)
    return out


class TestEnumeration:
    def test_counts_match_partition_numbers(self):
        oracle = partition_count_oracle(6)
        assert oracle == [1, 2, 4, 7, 12, 19, 30]
        for charge in (1, 3):
            for b in range(7):
                assert len(enumerate_eyd(charge, b)) == oracle[b]

    def test_all_distinct_and_within_bound(self):
        diagrams = enumerate_eyd(2, 5)
        assert len(set(diagrams)) == len(diagrams)
        assert all(T.boxes() <= 5 for T in diagrams)


class TestRender:
    def test_empty(self):
        assert render_eyd(make_eyd(3, [])) == "(empty)"

    def test_staircase_picture(self):
        T = make_eyd(1, [-3, -2, -1, -1, 0])
        assert render_eyd(T) == "\n".join(
            [
                "[][][][][]   y=1..0",
                "[][][][]   y=0..-1",
                "[][]   y=-1..-2",
                "[]   y=-2..-3",
            ]
        )
