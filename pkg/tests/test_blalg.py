import pytest

from blchang.algebra import godel, lukasiewicz, validate_bl_axioms
from blchang.blalg import format_blalg, parse_blalg, read_blalg, write_blalg
from blchang.errors import ParseError

GODEL3 = """blalg v1
# three-element Goedel chain
elements: 0 m 1
bottom: 0
top: 1
otimes:
0 0 0
0 m m
0 m 1
imp:
1 1 1
0 1 1
0 m 1
"""


def test_parse_valid_table():
    A = parse_blalg(GODEL3)
    assert [A.fmt(x) for x in A.elements()] == ["0", "m", "1"]
    assert validate_bl_axioms(A).ok


def test_round_trip(tmp_path):
    for B in (lukasiewicz(4), godel(4)):
        path = tmp_path / "a.blalg"
        write_blalg(B, path)
        A = read_blalg(path)
        assert format_blalg(A) == format_blalg(B)


@pytest.mark.parametrize("text, line", [
    ("blalg v2\n", 1),
    (GODEL3.replace("0 m m\n", "0 m\n"), 8),
    (GODEL3.replace("0 m 1\nimp", "0 q 1\nimp"), 9),
    (GODEL3.replace("elements: 0 m 1", "elements: 0 m m"), 3),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_blalg(text)
    assert exc.value.line == line


def test_missing_section():
    with pytest.raises(ParseError):
        parse_blalg(GODEL3.split("imp:")[0])
