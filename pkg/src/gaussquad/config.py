"""
Plain-text surface definitions and command-line value syntax.

A surface file is a sequence of ``key = value`` lines; ``#`` starts a
comment and every ``name`` line opens a new surface::

    name = big_sphere
    kind = quadric1
    a = -1
    b = -1
    c = 4
    domain = -2, 2, -2, 2

    name = bowl
    kind = graph
    terms = 2,0:0.5; 0,2:0.5

Keys other than ``name``, ``kind`` and ``domain`` are surface parameters.
``terms`` (graph only) lists ``i,j:coef`` monomials of the height function.
"""

from fractions import Fraction

import numpy as np

from .surfaces import make_surface

ALIASES = {"cylinder": "circular_cylinder"}


class ConfigError(ValueError):
    """Malformed configuration or command-line value."""


def parse_number(text):
    try:
        return float(text)
    except ValueError:
        try:
            return float(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"not a number: {text!r}") from None


def parse_rational(text):
    """``p/q`` or decimal string to an exact Fraction."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"not a rational number: {text!r}") from None


def parse_terms(text):
    terms = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            mono, coef = chunk.split(":")
            i, j = (int(x) for x in mono.split(","))
        except ValueError:
            raise ConfigError(f"bad graph term {chunk!r}; expected i,j:coef") from None
        if i < 0 or j < 0:
            raise ConfigError(f"negative exponent in graph term {chunk!r}")
        terms[(i, j)] = parse_number(coef)
    if not terms:
        raise ConfigError("graph surface needs at least one term")
    return terms


def parse_domain(text):
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 4:
        raise ConfigError(f"domain needs umin, umax, vmin, vmax; got {text!r}")
    return tuple(parse_number(p) for p in parts)


def build_surface(kind, params, domain=None, name=None):
    kind = ALIASES.get(kind, kind)
    try:
        return make_surface(kind, params, domain, name)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def parse_surface_config(text):
    """Surfaces defined in a ``key = value`` file, in file order."""
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "name" or not blocks:
            blocks.append({})
        if key in blocks[-1]:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        blocks[-1][key] = value
    surfaces = []
    for block in blocks:
        if "kind" not in block:
            raise ConfigError(f"surface {block.get('name', '?')!r} has no kind")
        name = block.pop("name", None)
        kind = block.pop("kind")
        domain = parse_domain(block.pop("domain")) if "domain" in block else None
        params = {}
        for k, v in block.items():
            params[k] = parse_terms(v) if k == "terms" else parse_number(v)
        surfaces.append(build_surface(kind, params, domain, name))
    if not surfaces:
        raise ConfigError("no surfaces defined")
    return surfaces


def parse_grid(text):
    """``a=0.5:2:4,b=-1,c=1:4:2`` to ``{name: [values]}``.

    ``start:end:count`` is inclusive linear spacing; a single value or a
    ``|``-separated list is taken literally.
    """
    grid = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ConfigError(f"bad grid axis {part!r}; expected name=start:end:count")
        name, spec = (s.strip() for s in part.split("=", 1))
        if name in grid:
            raise ConfigError(f"grid axis {name!r} given twice")
        if ":" in spec:
            bits = spec.split(":")
            if len(bits) != 3:
                raise ConfigError(f"bad range {spec!r}; expected start:end:count")
            start, end = parse_number(bits[0]), parse_number(bits[1])
            try:
                count = int(bits[2])
            except ValueError:
                raise ConfigError(f"grid count must be an integer: {bits[2]!r}") from None
            if count < 1 or (count == 1 and start != end):
                raise ConfigError(f"bad grid count in {spec!r}")
            grid[name] = [float(x) for x in np.linspace(start, end, count)]
        else:
            grid[name] = [parse_number(x) for x in spec.split("|")]
    if not grid:
        raise ConfigError("empty grid")
    return grid
