import io

import pytest

from tropicount.asymptotics import bound_table
from tropicount.constructions import make_family
from tropicount.errors import ParseError
from tropicount.geometry import PolygonSpec
from tropicount.serialization import (
    CSV_HEADER,
    SystemDocument,
    csv_text,
    parse_system,
    read_csv,
    read_documents,
    serialize_system,
)
from tropicount.systems import MarkedSystem


def test_trivial_round_trip():
    doc = SystemDocument("square", (1,), 1, ((1, 1),))
    text = serialize_system(doc)
    assert text == '{"family": "square", "params": {"d": 1}, "n": 1, "intervals": [[1, 1]]}'
    assert parse_system(text) == doc
    assert serialize_system(parse_system(text)) == text


def test_intervals_are_sorted():
    doc = SystemDocument("square", (2,), 1, ((2, 3), (1, 1), (2, 2)))
    assert doc.intervals == ((1, 1), (2, 2), (2, 3))


def test_marked_round_trip_keeps_canonical_form():
    spec = PolygonSpec("square", 2)
    ms = MarkedSystem((((2, 3), 3), ((1, 1), 1), ((2, 2), 2)))
    doc = SystemDocument.from_marked(spec, ms)
    back = parse_system(serialize_system(doc))
    assert back == doc
    assert back.marked().key() == ms.key()
    assert back.spec() == spec


@pytest.mark.parametrize(
    "family,params,n",
    [("square", (d,), 1) for d in range(2, 7)]
    + [("pentagon", (2, 1), 2), ("hexagonC", (3, 2, 1), 1), ("hexagonD", (3, 2), 1)],
)
def test_grid_round_trip(family, params, n):
    fam = make_family(family, params, n)
    for inst in fam.iterate():
        for ms in list(inst.marked_systems())[:5]:
            doc = SystemDocument.from_marked(fam.spec, ms)
            assert parse_system(serialize_system(doc)) == doc


@pytest.mark.parametrize(
    "text,line,column",
    [
        ('{"family": "square",\n "n": 1,, }', 2, 9),
        ('[1, 2]', 1, 1),
        ('{"family": "square", "params": {"d": 1}, "n": 1}', 1, 1),
        ('{"family": "square", "params": {"d": 1}, "n": 1, "intervals": [[2, 1]]}', 1, 50),
        ('{"family": "square", "params": {"d": 1},\n "n": 1, "intervals": [[1, 1]], "marks": [3]}', 2, 33),
        ('{"family": "square", "params": {"d": "x"}, "n": 1, "intervals": []}', 1, 22),
        ('{"family": "circle", "params": {"d": 1}, "n": 1, "intervals": []}', 1, 2),
        ('{"family": "square", "params": {"d": 1}, "n": 1, "intervals": [], "extra": 0}', 1, 67),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_system(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_document_stream_reports_line():
    good = serialize_system(SystemDocument("square", (1,), 1, ((1, 1),)))
    stream = io.StringIO(good + "\n\n" + "{bad\n")
    with pytest.raises(ParseError) as info:
        list(read_documents(stream))
    assert info.value.line == 3


def test_csv_format():
    rep = bound_table("square", (1,), [64, 128])
    text = csv_text([rep])
    lines = text.split("\n")
    assert "\r" not in text
    assert lines[0] == ",".join(CSV_HEADER)
    row = lines[1].split(",")
    assert len(row) == 9
    assert row[:5] == ["square", "1", "", "", "64"]
    assert row[8] == "4"
    # twelve significant digits
    assert len(row[5].replace(".", "").lstrip("0")) <= 12
    assert float(row[5]) == pytest.approx(rep.rows[0].log_lb, rel=1e-11)
    parsed = read_csv(io.StringIO(text))
    assert parsed[1]["n"] == "128" and parsed[1]["d1"] == ""


def test_csv_hexagon_params():
    rep = bound_table("hexagonC", (3, 2, 1), [64, 128])
    row = csv_text([rep]).split("\n")[1].split(",")
    assert row[1:4] == ["3", "2", "1"]


def test_read_csv_rejects_header():
    with pytest.raises(ParseError):
        read_csv(io.StringIO("a,b\n1,2\n"))
