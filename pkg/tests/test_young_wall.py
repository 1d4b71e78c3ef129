"""Young walls: properness, sites, block toggles, forms."""

import pytest

from polyreal import LinearForm, RootDataError
from polyreal.young_wall import (
    WallError,
    WallKind,
    WallSite,
    YoungWall,
    assign_wall,
    classify_sites,
    enumerate_walls,
    ground_wall,
    legal_single_adds,
    legal_single_removes,
    make_wall,
    render_wall,
    toggle_block,
    validate_proper,
)
from conftest import make_seq

x = LinearForm.x

A2_KIND = WallKind("A2wall", 3, 1)


class TestWallKind:
    def test_a2_ground_must_be_one(self):
        WallKind("A2wall", 3, 1)
        with pytest.raises(WallError):
            WallKind("A2wall", 3, 3)

    def test_d2_ground_one_or_n(self):
        WallKind("D2wall", 3, 1)
        WallKind("D2wall", 3, 3)
        with pytest.raises(WallError):
            WallKind("D2wall", 3, 2)

    def test_unknown_family(self):
        with pytest.raises(WallError):
            WallKind("C1wall", 3, 1)

    def test_rank_too_small(self):
        with pytest.raises(WallError):
            WallKind("A2wall", 2, 1)

    def test_row_colors_fold(self):
        assert [A2_KIND.row_color(l) for l in range(1, 6)] == [1, 2, 3, 2, 1]

    def test_split_rows_a2(self):
        assert [A2_KIND.is_split(l) for l in range(1, 6)] == [True, False, False, False, True]

    def test_split_rows_d2(self):
        kind = WallKind("D2wall", 3, 1)
        assert [kind.is_split(l) for l in range(1, 6)] == [True, False, True, False, True]

    def test_row_of_half(self):
        assert [A2_KIND.row_of_half(m) for m in (1, 2, 3, 4, 5)] == [1, 1, 2, 2, 3]
        deep = WallKind("D2wall", 3, 3)
        assert deep.row_of_half(1) == 3 and deep.row_of_half(3) == 4


class TestConstruction:
    def test_trailing_ground_columns_trimmed(self):
        assert make_wall(A2_KIND, [2, 1, 1]).halves == (2,)
        assert make_wall(A2_KIND, []).halves == ()

    def test_increasing_heights_rejected(self):
        with pytest.raises(WallError):
            make_wall(A2_KIND, [2, 4])

    def test_equal_full_columns_rejected(self):
        with pytest.raises(WallError):
            make_wall(A2_KIND, [2, 2])
        with pytest.raises(WallError):
            make_wall(A2_KIND, [4, 4])

    def test_odd_stop_at_unit_row_rejected(self):
        with pytest.raises(WallError):
            make_wall(A2_KIND, [3])

    def test_odd_stop_at_split_row_allowed(self):
        kind = WallKind("D2wall", 3, 1)
        assert make_wall(kind, [5]).halves == (5,)
        with pytest.raises(WallError):
            make_wall(WallKind("D2wall", 3, 1), [3])

    def test_below_ground_rejected(self):
        with pytest.raises(WallError):
            make_wall(A2_KIND, [0])

    def test_validate_proper(self):
        assert validate_proper(YoungWall(A2_KIND, (2, 2))) != []
        assert validate_proper(make_wall(A2_KIND, [4, 2])) == []

    def test_json_round_trip(self):
        Y = make_wall(A2_KIND, [4, 2])
        assert YoungWall.from_json(Y.to_json()) == Y


class TestCounts:
    def test_block_count(self):
        assert make_wall(A2_KIND, [8, 4, 2]).block_count() == 7
        assert ground_wall(A2_KIND).block_count() == 0

    def test_added_halves(self):
        assert make_wall(A2_KIND, [8, 4, 2]).added_halves() == 11

    @pytest.mark.parametrize(
        "kind",
        [A2_KIND, WallKind("D2wall", 3, 1), WallKind("D2wall", 3, 3)],
    )
    def test_peeling_matches_block_count(self, kind):
        for Y in enumerate_walls(kind, 6):
            steps = 0
            cur = Y
            while True:
                removes = legal_single_removes(cur)
                if not removes:
                    break
                cur = toggle_block(cur, removes[0])
                steps += 1
            assert cur == ground_wall(kind)
            assert steps == Y.block_count()


class TestSites:
    def test_ground(self):
        assert classify_sites(ground_wall(A2_KIND)) == [WallSite("slot", 1, 1, 1, 1, 1)]

    def test_one_full_ground_row(self):
        Y = make_wall(A2_KIND, [2])
        assert classify_sites(Y) == [
            WallSite("slot", 1, 2, 1, 2, 2),
            WallSite("block", 1, 1, 1, 1, 1),
        ]

    def test_two_rows(self):
        Y = make_wall(A2_KIND, [4])
        assert classify_sites(Y) == [
            WallSite("slot", 1, 3, 1, 3, 2),
            WallSite("block", 1, 2, 1, 2, 2),
            WallSite("slot", 2, 1, 1, 1, 1),
        ]

    def test_properness_prunes_sites(self):
        Y = make_wall(A2_KIND, [4, 2])
        assert classify_sites(Y) == [
            WallSite("slot", 1, 3, 1, 3, 2),
            WallSite("block", 2, 1, 1, 1, 1),
        ]

    def test_double_site_at_split_row(self):
        Y = make_wall(A2_KIND, [8, 4, 2])
        sites = classify_sites(Y)
        assert WallSite("slot", 1, 5, 2, 1, 2) in sites
        assert WallSite("block", 1, 4, 1, 2, 2) in sites

    def test_d2_ground_n(self):
        kind = WallKind("D2wall", 3, 3)
        assert classify_sites(ground_wall(kind)) == [WallSite("slot", 1, 3, 1, 3, 1)]


class TestToggles:
    def test_add_then_remove_round_trip(self):
        for Y in enumerate_walls(A2_KIND, 6):
            for site in legal_single_adds(Y):
                Y2 = toggle_block(Y, site)
                assert Y2.added_halves() == Y.added_halves() + site.halves
                back = WallSite("block", site.column, site.row, 1, site.color, site.halves)
                assert toggle_block(Y2, back) == Y

    def test_toggle_to_improper_rejected(self):
        Y = make_wall(A2_KIND, [2])
        with pytest.raises(WallError):
            toggle_block(Y, WallSite("slot", 2, 1, 1, 1, 1))


class TestAssignment:
    @pytest.mark.parametrize("s", [1, 2])
    def test_small_forms_a2_rank3(self, a2_n3, s):
        goldens = [
            ([], x(s, 1)),
            ([2], x(s + 1, 2) - x(s + 1, 1)),
            ([4], x(s + 1, 3) + x(s + 1, 1) - x(s + 2, 2)),
            ([4, 2], x(s + 1, 3) - x(s + 2, 1)),
            ([6], x(s + 2, 2) + x(s + 1, 1) - x(s + 2, 3)),
        ]
        for halves, expected in goldens:
            assert assign_wall(a2_n3, make_wall(A2_KIND, halves), s) == expected

    def test_d2_ground_n_form(self, c1_n3):
        kind = WallKind("D2wall", 3, 3)
        assert assign_wall(c1_n3, ground_wall(kind), 1) == x(1, 3)

    def test_family_mismatch_rejected(self, a1_n3):
        with pytest.raises(RootDataError):
            assign_wall(a1_n3, ground_wall(A2_KIND), 1)

    def test_rank_mismatch_rejected(self):
        seq = make_seq("A2", 4, [2, 1, 3, 4])
        with pytest.raises(RootDataError):
            assign_wall(seq, ground_wall(A2_KIND), 1)


def walls_oracle(kind, max_halves):
    """Weakly decreasing height tuples that pass the properness rules."""
    out = set()

    def extend(prefix, budget, cap):
        out.add(YoungWall(kind, tuple(prefix)))
        for h in range(2, min(cap, budget + 1) + 1):
            cand = prefix + [h]
            if not validate_proper(YoungWall(kind, tuple(cand))):
                extend(cand, budget - (h - 1), h)

    extend([], max_halves, max_halves + 1)
    return out


class TestEnumeration:
    @pytest.mark.parametrize(
        "kind",
        [A2_KIND, WallKind("D2wall", 3, 1), WallKind("D2wall", 3, 3)],
    )
    def test_matches_direct_oracle(self, kind):
        got = set(enumerate_walls(kind, 8))
        want = walls_oracle(kind, 8)
        assert got == want

    def test_sorted_and_distinct(self):
        out = enumerate_walls(A2_KIND, 8)
        assert out[0] == ground_wall(A2_KIND)
        assert len(set(out)) == len(out)
        keys = [(Y.added_halves(), Y.halves) for Y in out]
        assert keys == sorted(keys)


class TestRender:
    def test_ground(self):
        assert render_wall(ground_wall(A2_KIND)) == "(ground row 1, color 1)"

    def test_three_column_picture(self):
        Y = make_wall(A2_KIND, [8, 4, 2])
        assert render_wall(Y) == "\n".join(
            [
                "        [==]  row 4 color 2",
                "        [==]  row 3 color 3",
                "    [==][==]  row 2 color 2",
                "[==][==][==]  row 1 color 1",
                "~~~~~~~~~~~~  ground row 1",
            ]
        )

    def test_half_filled_cell_marked(self):
        kind = WallKind("D2wall", 3, 1)
        text = render_wall(make_wall(kind, [5]))
        assert "[__]" in text
