"""JSON input/output: exact scalars as strings, typed parsing with
field-path error locations, and canonical serialization that round-trips.

Formats:
  rational        "3/4", "-2", or a JSON integer
  gaussian        {"re": rational, "im": rational}
  arrangement     {"ambient": n, "central": bool, "forms": [[rational]]}
                  central forms have length n, affine n+1 (constant first)
  laurent system  {"rank": r, "polys": [[{"monomial": [int], "coeff": rational}]]}
  presentation    {"generators": g, "relators": [[signed int]]}
"""

from __future__ import annotations

import json
from fractions import Fraction

from .arrangement import Arrangement
from .errors import ParseError
from .foxcalc import Presentation
from .scalars import GaussianRational
from .torus import LaurentSystem


def parse_rational(node, where):
    if isinstance(node, bool):
        raise ParseError(f"expected a rational, got {node!r}", where)
    if isinstance(node, int):
        return Fraction(node)
    if isinstance(node, str):
        try:
            return Fraction(node)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {node!r}: {exc}", where) from None
    raise ParseError(f"expected a rational, got {node!r}", where)


def parse_scalar(node, where):
    """Rational or Gaussian-rational scalar."""
    if isinstance(node, dict):
        extra = set(node) - {"re", "im"}
        if extra:
            raise ParseError(f"unknown keys {sorted(extra)}", where)
        return GaussianRational(
            parse_rational(node.get("re", 0), f"{where}.re"),
            parse_rational(node.get("im", 0), f"{where}.im"))
    return parse_rational(node, where)


def _expect(obj, key, types, where):
    if key not in obj:
        raise ParseError(f"missing key {key!r}", where)
    v = obj[key]
    if not isinstance(v, types):
        raise ParseError(f"key {key!r} has wrong type {type(v).__name__}",
                         where)
    return v


def parse_arrangement(obj, where="arrangement"):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", where)
    ambient = _expect(obj, "ambient", int, where)
    central = obj.get("central", None)
    forms_node = _expect(obj, "forms", list, where)
    if central is None:
        widths = {ambient, ambient + 1}
    else:
        widths = {ambient} if central else {ambient + 1}
    forms = []
    for i, row in enumerate(forms_node):
        if not isinstance(row, list) or len(row) not in widths:
            want = " or ".join(str(w) for w in sorted(widths))
            raise ParseError(
                f"form must be a list of {want} rationals", f"{where}.forms[{i}]")
        forms.append([parse_rational(c, f"{where}.forms[{i}][{k}]")
                      for k, c in enumerate(row)])
    return Arrangement(ambient, forms, central=central)


def parse_laurent_system(obj, where="system"):
    if isinstance(obj, list):
        polys_node, rank = obj, None
    elif isinstance(obj, dict):
        polys_node = _expect(obj, "polys", list, where)
        rank = obj.get("rank")
    else:
        raise ParseError("expected an object or a list of polynomials", where)
    polys = []
    for i, poly_node in enumerate(polys_node):
        if not isinstance(poly_node, list):
            raise ParseError("polynomial must be a list of terms",
                             f"{where}.polys[{i}]")
        terms = []
        for j, term in enumerate(poly_node):
            loc = f"{where}.polys[{i}][{j}]"
            if not isinstance(term, dict):
                raise ParseError("term must be an object", loc)
            mono = _expect(term, "monomial", list, loc)
            if not all(isinstance(e, int) and not isinstance(e, bool)
                       for e in mono):
                raise ParseError("monomial must be a list of integers",
                                 f"{loc}.monomial")
            coeff = parse_rational(_expect(term, "coeff", (int, str), loc),
                                   f"{loc}.coeff")
            terms.append((tuple(mono), coeff))
            if rank is None:
                rank = len(mono)
        polys.append(terms)
    if rank is None:
        raise ParseError("cannot infer the torus rank from an empty system",
                         where)
    return LaurentSystem(rank, polys)


def parse_presentation(obj, where="presentation"):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", where)
    g = _expect(obj, "generators", int, where)
    relators = obj.get("relators", [])
    if not isinstance(relators, list):
        raise ParseError("relators must be a list of words", where)
    for i, word in enumerate(relators):
        if not isinstance(word, list) or not all(
                isinstance(s, int) and not isinstance(s, bool) for s in word):
            raise ParseError("word must be a list of signed integers",
                             f"{where}.relators[{i}]")
    return Presentation(g, relators)


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ParseError("file not found", str(path)) from None
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed JSON: {exc.msg}",
            f"{path}:{exc.lineno}:{exc.colno}") from None


def parse_input(path):
    """Load and type a JSON input file by its shape."""
    obj = load_json(path)
    if isinstance(obj, dict):
        if "forms" in obj:
            return parse_arrangement(obj, str(path))
        if "polys" in obj:
            return parse_laurent_system(obj, str(path))
        if "generators" in obj:
            return parse_presentation(obj, str(path))
    if isinstance(obj, list):
        return parse_laurent_system(obj, str(path))
    raise ParseError(
        "unrecognized input shape: expected an arrangement ('forms'), "
        "a Laurent system ('polys'), or a presentation ('generators')",
        str(path))


def rational_str(x):
    return str(Fraction(x))


def scalar_jsonable(x):
    if isinstance(x, GaussianRational):
        return {"re": rational_str(x.re), "im": rational_str(x.im)}
    if isinstance(x, (int, Fraction)):
        return rational_str(x)
    return str(x)


def serialize(value):
    """Canonical JSON-ready form of a parsed input object."""
    if isinstance(value, Arrangement):
        forms = [f if not value.central else f[1:] for f in value.forms]
        return {
            "ambient": value.ambient,
            "central": value.central,
            "forms": [[rational_str(c) for c in f] for f in forms],
        }
    if isinstance(value, LaurentSystem):
        return {
            "rank": value.rank,
            "polys": [
                [{"monomial": list(m), "coeff": rational_str(c)}
                 for m, c in sorted(p.items())]
                for p in value.polys
            ],
        }
    if isinstance(value, Presentation):
        return {
            "generators": value.generators,
            "relators": [list(w) for w in value.relators],
        }
    raise TypeError(f"cannot serialize {type(value).__name__}")
