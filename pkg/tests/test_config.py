from fractions import Fraction as Fr

import pytest

from gaussquad.config import (ConfigError, parse_domain, parse_grid, parse_number,
                              parse_rational, parse_surface_config, parse_terms)

SAMPLE = """
# two surfaces
name = big_sphere
kind = quadric1
a = -1
b = -1
c = 4
domain = -1.5, 1.5, -1.5, 1.5

name = bowl
kind = graph
terms = 2,0:0.5; 0,2:1/2
"""


def test_surface_file():
    s1, s2 = parse_surface_config(SAMPLE)
    assert s1.name == "big_sphere" and s1.kind == "quadric1"
    assert s1.params == {"a": -1.0, "b": -1.0, "c": 4.0}
    assert s1.domain == (-1.5, 1.5, -1.5, 1.5)
    assert s2.kind == "graph" and s2.params["terms"] == {(2, 0): 0.5, (0, 2): 0.5}


def test_alias_and_defaults():
    (s,) = parse_surface_config("kind = cylinder\nr = 3")
    assert s.kind == "circular_cylinder" and s.params == {"r": 3.0}


@pytest.mark.parametrize("text", [
    "", "# nothing", "kind quadric1", "name = x", "kind = sphere\nkind = torus",
    "kind = quadric1\na = 1\nb = 1", "kind = sphere\nr = abc", "kind = sphere\nr = -1",
    "kind = graph\nterms = 1:2", "kind = plane\ndomain = 0, 1, 2",
])
def test_malformed_files(text):
    with pytest.raises(ConfigError):
        parse_surface_config(text)


def test_grid_linspace_is_inclusive():
    g = parse_grid("a=0.5:2:4,b=1,c=1|4|9/4")
    assert g["a"] == [0.5, 1.0, 1.5, 2.0]
    assert g["b"] == [1.0]
    assert g["c"] == [1.0, 4.0, 2.25]


@pytest.mark.parametrize("text", ["", "a", "a=1:2", "a=1:2:x", "a=1:2:0", "a=1:2:1", "a=1,a=2"])
def test_bad_grids(text):
    with pytest.raises(ConfigError):
        parse_grid(text)


def test_numbers():
    assert parse_number("3/4") == 0.75
    assert parse_number("-2.5") == -2.5
    assert parse_rational("-1") == Fr(-1)
    assert parse_rational("9/4") == Fr(9, 4)
    assert parse_rational("0.25") == Fr(1, 4)
    with pytest.raises(ConfigError):
        parse_number("x")
    with pytest.raises(ConfigError):
        parse_rational("1/0")


def test_terms_and_domain():
    assert parse_terms("1,1:2;") == {(1, 1): 2.0}
    with pytest.raises(ConfigError):
        parse_terms("-1,0:1")
    with pytest.raises(ConfigError):
        parse_terms(" ; ")
    assert parse_domain("0,1, 2 ,3") == (0.0, 1.0, 2.0, 3.0)
