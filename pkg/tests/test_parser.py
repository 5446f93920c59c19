from fractions import Fraction

import pytest

from bgraph import generators
from shared.errors import ConfigError
from shared.parser import ObjectParser, parse_int_list, parse_number
from storage.file_manager import FileManager


@pytest.fixture
def parser():
    return ObjectParser(FileManager())


class TestNumbers:
    @pytest.mark.parametrize("text, expected", [("3/4", Fraction(3, 4)), ("0.75", Fraction(3, 4)),
                                                (1, Fraction(1)), (" 2/6 ", Fraction(1, 3))])
    def test_parse_number(self, text, expected):
        assert parse_number(text) == expected

    def test_bad_number(self):
        with pytest.raises(ConfigError):
            parse_number("three")

    def test_int_list(self):
        assert parse_int_list("1,2;3") == [1, 2, 3]
        with pytest.raises(ConfigError):
            parse_int_list("")
        with pytest.raises(ConfigError):
            parse_int_list("1,x")


class TestGraphs:
    @pytest.mark.parametrize("spec, expected", [
        ("p1", generators.single_edge()),
        ("C6", generators.even_cycle(6)),
        ("path3", generators.path(3)),
        ("path2:2", generators.path(2, start_class=2)),
        ("star3", generators.star(3)),
        ("star3:2", generators.star(3, center_class=2)),
        ("k2,3", generators.complete(2, 3)),
        ("matching3", generators.matching(3)),
        ("graph:2,2:0-0;1-1", generators.matching(2)),
    ])
    def test_names(self, parser, spec, expected):
        assert parser.graph(spec) == expected

    def test_named_families(self, parser):
        heis = parser.graph("heisenberg:2")
        assert (heis.n1, heis.n2, heis.num_edges) == (4, 4, 8)
        assert parser.graph("pg:2").num_edges == 21

    @pytest.mark.parametrize("spec", ["foo", "c", "k2", "graph:2,2:0+0"])
    def test_unknown_or_malformed(self, parser, spec):
        with pytest.raises(ConfigError):
            parser.graph(spec)

    def test_json_file(self, parser, tmp_path, c6):
        path = tmp_path / "g.json"
        FileManager().write_graph(c6, str(path))
        assert parser.graph(str(path)) == c6


class TestDistributions:
    def test_named(self, parser):
        assert parser.distribution("diag3").exact == ((Fraction(1, 3), 0, 0), (0, Fraction(1, 3), 0),
                                                      (0, 0, Fraction(1, 3)))
        assert (parser.distribution("unif2x3").k1, parser.distribution("unif2x3").k2) == (2, 3)
        assert parser.distribution("point").k1 == 1

    def test_edges_of_graph(self, parser):
        x = parser.distribution("edges:c6")
        assert x.exact[0][0] == Fraction(1, 6)

    def test_rows(self, parser, skewed_nu):
        assert parser.distribution("rows:1/2,1/4;0,1/4").exact == skewed_nu.exact
        floats = parser.distribution("rows:0.5,0.5")
        assert not floats.is_exact

    def test_unknown(self, parser):
        with pytest.raises(ConfigError):
            parser.distribution("gauss2")


class TestGroups:
    def test_plain_groups(self, parser):
        group, fixed = parser.group("z6")
        assert group.order == 6 and fixed is None
        assert parser.group("d4")[0].order == 8
        assert parser.group("q8")[0].name == "Q8"
        assert parser.group("s3")[0].order == 6
        assert parser.group("a4")[0].order == 12

    def test_heisenberg_fixes_subgroups(self, parser):
        group, (t1, t2) = parser.group("heisenberg:3")
        assert group.order == 27
        assert t1.order == t2.order == 3

    def test_unknown(self, parser):
        with pytest.raises(ConfigError):
            parser.group("x5")
