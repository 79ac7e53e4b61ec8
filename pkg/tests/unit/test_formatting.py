"""Tests for report rendering."""

from ramseytype import formatting


class TestBoxTable:
    def test_layout(self):
        text = formatting.box_table("t", ["a", "bb"], [[1, None], [True, [2, 3]]])
        assert text.splitlines() == [
            "┌" + "─" * 11 + "┐",
            "│ t" + " " * 9 + "│",
            "├" + "─" * 11 + "┤",
            "│ a   │ bb  │",
            "├" + "─" * 11 + "┤",
            "│ 1   │ -   │",
            "│ yes │ 2 3 │",
            "└" + "─" * 11 + "┘",
        ]

    def test_empty_rows(self):
        text = formatting.box_table("violations", ["#"], [])
        assert "(none)" in text

    def test_title_wider_than_columns(self):
        lines = formatting.box_table("a long title", ["x"], [[1]]).splitlines()
        assert len({len(line) for line in lines}) == 1


class TestRender:
    def test_json_sorts_keys(self):
        text = formatting.render({"b": 1, "a": [1, 2]}, "json", formatting.table_family)
        assert text.index('"a"') < text.index('"b"')
        assert text.endswith("}\n")

    def test_table_dispatch(self):
        data = {"family": "maxdeg:2 {K2, K1,2}",
                "members": [{"name": "K2", "order": 2, "graph6": "A_"}]}
        text = formatting.render(data, "table", formatting.table_family)
        assert text.splitlines()[1].startswith("│ maxdeg:2 {K2, K1,2}")
        assert "A_" in text

    def test_lines_of(self):
        assert formatting.lines_of(["A_", "Bw"]) == "A_\nBw\n"
        assert formatting.lines_of([]) == ""
