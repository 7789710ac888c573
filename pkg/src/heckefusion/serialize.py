"""JSON export and import of Hecke and group-algebra elements.

Schema version 1::

    {"schema": 1, "n": 3, "scalar": "qrat",
     "terms": [{"perm": [2, 1, 3], "coeff": "(q^2-1)/(q^2+1)"}]}

``scalar`` is ``"qrat"`` (coefficients in Q(q)), ``"urat"`` (rational
functions in the variable named by ``"var"``) or ``"rational"`` (group
algebra, flagged by ``"group_algebra": true``).  Terms are sorted by
permutation and coefficients use the canonical scalar strings, so export
is deterministic and import followed by export reproduces the text.
"""
import json
from fractions import Fraction

from . import perm as P
from .errors import ParseError
from .hecke import HeckeElement, lift
from .scalar import URat, parse_scalar
from .symgroup import GroupAlgebraElement

SCHEMA = 1


def element_to_dict(a, **extra):
    if isinstance(a, GroupAlgebraElement):
        out = {"schema": SCHEMA, "n": a.n, "scalar": "rational", "group_algebra": True}
        items = a.coeffs.items()
    else:
        out = {"schema": SCHEMA, "n": a.n, "scalar": "qrat" if a.var is None else "urat"}
        if a.var is not None:
            out["var"] = a.var
        items = a.terms.items()
    out.update(extra)
    out["terms"] = [{"perm": list(w), "coeff": str(c)} for w, c in sorted(items)]
    return out


def to_json(a, **extra):
    """Canonical JSON text; ``extra`` adds metadata such as tableau or method."""
    return json.dumps(element_to_dict(a, **extra), indent=None, separators=(", ", ": "))


def _parse_coeff(text, kind, var):
    if kind == "rational":
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational coefficient {text!r}: {exc}") from None
    c = parse_scalar(text)
    if kind == "qrat":
        if isinstance(c, URat):
            raise ParseError(f"coefficient {text!r} is not in Q(q)")
        return c
    if isinstance(c, URat) and c.var != var:
        raise ParseError(f"coefficient {text!r} uses {c.var!r}, expected {var!r}")
    return lift(c, var)


def element_from_dict(d):
    if not isinstance(d, dict) or d.get("schema") != SCHEMA:
        raise ParseError(f"unsupported element schema: {d.get('schema') if isinstance(d, dict) else d!r}")
    try:
        n = int(d["n"])
        kind = d["scalar"]
        terms = d["terms"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed element: {exc}") from None
    if kind not in ("qrat", "urat", "rational"):
        raise ParseError(f"unknown scalar kind {kind!r}")
    var = d.get("var") if kind == "urat" else None
    if kind == "urat" and not var:
        raise ParseError("urat element needs a 'var' field")
    coeffs = {}
    for t in terms:
        w = tuple(int(x) for x in t["perm"])
        if len(w) != n or not P.is_permutation(w):
            raise ParseError(f"bad permutation {t['perm']!r} for n = {n}")
        if w in coeffs:
            raise ParseError(f"duplicate permutation {list(w)}")
        coeffs[w] = _parse_coeff(t["coeff"], kind, var)
    if kind == "rational":
        return GroupAlgebraElement(n, coeffs)
    return HeckeElement(n, coeffs, var)


def from_json(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return element_from_dict(d)


def round_trip_exact(a):
    """Export, import, export again: both the text and the element must agree."""
    s = to_json(a)
    b = from_json(s)
    return b == a and to_json(b) == s
