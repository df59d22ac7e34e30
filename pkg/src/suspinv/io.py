"""JSON documents for systems, fields, elements, certificates and invariants.

Rationals travel as strings "p/q" and field elements as coefficient lists of
such strings, so exact report fields never contain floats.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from pathlib import Path

from .algebra.fields import QQ, FieldElement, NumberField, field_from_poly
from .algebra.intmat import IntMatrix
from .comparison import IsoCertificate
from .dimgroup import GroupElement
from .entropy import ExactEntropy
from .errors import ParseError, SuspinvError
from .invariant import ElliottInvariant, InvElement, suspension_invariant, trace_range
from .systems import SFT, Odometer, PointSystem, StationaryBVDiagram, Substitution


def rational_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {x!r}") from exc
    raise ParseError(f"rationals must be integers or 'p/q' strings, got {x!r}")


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def _int_matrix(rows, what: str) -> IntMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{what} must be a non-empty list of rows")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise ParseError(f"{what} rows must be non-empty and of equal length")
    return IntMatrix.from_rows([[_int(x, what) for x in r] for r in rows], width)


def _need(doc, key: str, what: str):
    if not isinstance(doc, dict):
        raise ParseError(f"{what} must be a JSON object")
    if key not in doc:
        raise ParseError(f"{what} is missing {key!r}")
    return doc[key]


# systems -----------------------------------------------------------------------

def parse_system(doc):
    kind = _need(doc, "kind", "system")
    try:
        if kind == "substitution":
            alphabet = _need(doc, "alphabet", "substitution")
            rules = _need(doc, "rules", "substitution")
            if not isinstance(alphabet, list) or not all(isinstance(a, str) and len(a) == 1 for a in alphabet):
                raise ParseError("alphabet must be a list of one-character strings")
            if not isinstance(rules, dict) or not all(isinstance(w, str) for w in rules.values()):
                raise ParseError("rules must map letters to strings")
            return Substitution(tuple(alphabet), {a: tuple(w) for a, w in rules.items()})
        if kind == "odometer":
            base = _need(doc, "base", "odometer")
            if not isinstance(base, list):
                raise ParseError("odometer base must be a list of integers")
            return Odometer(tuple(_int(b, "odometer base") for b in base))
        if kind == "point":
            return PointSystem()
        if kind == "sft":
            return SFT(_int_matrix(_need(doc, "adjacency", "sft"), "adjacency"))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown system kind {kind!r}")


def emit_system(system) -> dict:
    if isinstance(system, Substitution):
        return {"kind": "substitution", "alphabet": list(system.alphabet),
                "rules": {a: "".join(system.rules[a]) for a in system.alphabet}}
    if isinstance(system, Odometer):
        return {"kind": "odometer", "base": list(system.base_cycle)}
    if isinstance(system, PointSystem):
        return {"kind": "point"}
    if isinstance(system, SFT):
        return {"kind": "sft", "adjacency": system.adjacency.tolist()}
    if isinstance(system, StationaryBVDiagram):
        return {"kind": "diagram", "incidence": system.incidence.tolist(), "unit": list(system.unit_vec)}
    raise TypeError(type(system).__name__)


# fields and elements -------------------------------------------------------------

def emit_field(field: NumberField) -> dict:
    if field.is_rational:
        return {"min_poly": [0, 1], "root_interval": ["-1", "1"]}
    lo, hi = field.root_interval
    return {"min_poly": list(field.min_poly), "root_interval": [rational_str(lo), rational_str(hi)]}


def parse_field(doc) -> NumberField:
    poly = _need(doc, "min_poly", "field")
    interval = _need(doc, "root_interval", "field")
    if not isinstance(poly, list) or len(poly) < 2:
        raise ParseError("min_poly must list at least two integer coefficients")
    if not isinstance(interval, list) or len(interval) != 2:
        raise ParseError("root_interval must be a pair of rationals")
    coeffs = [_int(c, "min_poly") for c in poly]
    if coeffs[-1] == 0:
        raise ParseError("leading coefficient of min_poly is zero")
    if len(coeffs) == 2:
        return QQ
    return field_from_poly(coeffs, tuple(parse_rational(x) for x in interval))


def emit_element(e: FieldElement) -> list:
    return [rational_str(c) for c in e.coeffs]


def emit_number(e: FieldElement) -> dict:
    return {"field": emit_field(e.field), "coeffs": emit_element(e)}


def parse_number(doc) -> FieldElement:
    if isinstance(doc, (int, str)) and not isinstance(doc, bool):
        return parse_time(doc)
    field = parse_field(_need(doc, "field", "number"))
    coeffs = _need(doc, "coeffs", "number")
    if not isinstance(coeffs, list) or len(coeffs) > field.degree:
        raise ParseError(f"coeffs must be a list of at most {field.degree} rationals")
    return FieldElement(field, [parse_rational(c) for c in coeffs])


_SQRT = re.compile(
    r"^(?:(?P<a>[+-]?\d+(?:/\d+)?)\s*(?P<sa>[+-])\s*)?"
    r"(?P<sign>[+-])?(?:(?P<b>\d+(?:/\d+)?)\s*\*?\s*)?sqrt\(?(?P<d>\d+)\)?(?:\s*/\s*(?P<den>\d+))?"
    r"(?:\s*(?:_plus_|(?P<sk>[+-]))\s*(?P<k>\d+(?:/\d+)?))?$"
)


def quadratic_field(d: int) -> NumberField:
    """Q(sqrt d) for a non-square d > 1, generated by the positive root of x^2 - d."""
    r = math.isqrt(d)
    return field_from_poly([-d, 0, 1], (r, r + 1))


def parse_time(text) -> FieldElement:
    """Shorthand: "p/q", "sqrtD", "sqrtD+k", "sqrt2_plus_3", "1-sqrt2", "a+b*sqrtD", "sqrtD/m"."""
    if isinstance(text, int) and not isinstance(text, bool):
        return QQ(text)
    if not isinstance(text, str):
        raise ParseError(f"cannot read t from {text!r}")
    s = text.strip().replace(" ", "")
    if "sqrt" not in s:
        return QQ(parse_rational(s))
    m = _SQRT.match(s)
    if not m:
        raise ParseError(f"cannot read t from {text!r}")
    d = int(m["d"])
    if d < 2 or math.isqrt(d) ** 2 == d:
        raise ParseError(f"sqrt{d} is rational")
    b = Fraction(m["b"]) if m["b"] else Fraction(1)
    if m["sign"] == "-":
        b = -b
    if m["den"]:
        b /= int(m["den"])
    a = Fraction(0)
    if m["a"]:
        a = Fraction(m["a"])
        if m["sa"] == "-":
            b = -b
    if m["k"]:
        a += -Fraction(m["k"]) if m["sk"] == "-" else Fraction(m["k"])
    return FieldElement(quadratic_field(d), [a, b])


def parse_time_arg(value: str) -> FieldElement:
    """A t argument is either shorthand or the path of a number document."""
    path = Path(value)
    if path.suffix == ".json" or path.is_file():
        return parse_number(load_json(path))
    return parse_time(value)


# certificates ----------------------------------------------------------------------

def parse_certificate(doc) -> IsoCertificate:
    block = _int_matrix(_need(doc, "block", "certificate"), "block")
    mixing = doc.get("mixing_column")
    if mixing is not None:
        if not isinstance(mixing, list):
            raise ParseError("mixing_column must be a list of integers")
        mixing = tuple(_int(x, "mixing_column") for x in mixing)
    assume = doc.get("assume_measures_agree", True)
    if not isinstance(assume, bool):
        raise ParseError("assume_measures_agree must be a boolean")
    return IsoCertificate(
        block,
        _int(doc.get("source_level_offset", 1), "source_level_offset"),
        _int(doc.get("target_level_offset", 1), "target_level_offset"),
        mixing,
        _int(doc.get("unit_block", 1), "unit_block"),
        assume,
    )


def emit_certificate(cert: IsoCertificate) -> dict:
    return {
        "block": cert.block.tolist(),
        "source_level_offset": cert.source_level_offset,
        "target_level_offset": cert.target_level_offset,
        "mixing_column": list(cert.mixing()),
        "unit_block": cert.unit_block,
        "assume_measures_agree": cert.assume_measures_agree,
    }


# group elements and invariants -------------------------------------------------------

def emit_group_element(z: GroupElement) -> dict:
    return {"level": z.level, "vec": list(z.vec)}


def parse_group_element(doc) -> GroupElement:
    level = _int(_need(doc, "level", "group element"), "level")
    vec = _need(doc, "vec", "group element")
    if level < 0 or not isinstance(vec, list):
        raise ParseError("group element needs level >= 0 and an integer vec")
    return GroupElement(level, tuple(_int(x, "vec") for x in vec))


def emit_inv_element(e: InvElement) -> list:
    return [e.n, emit_group_element(e.z)]


def emit_trace_range(r) -> dict:
    return {"field": emit_field(r.field), "unit": emit_element(r.unit), "gens": [emit_element(g) for g in r.gens]}


def emit_invariant(inv: ElliottInvariant) -> dict:
    return {
        "system": emit_system(inv.system),
        "k0": {"summands": ["Z", "dimension_group"], "order_unit": emit_inv_element(inv.order_unit()),
               "rank": inv.rank()},
        "k1": inv.k1_descriptor,
        "t": emit_number(inv.t.value),
        "trace_field": emit_field(inv.trace_field),
        "trace_vec": [emit_element(w) for w in inv.base_group.trace_vec],
        "trace_range": emit_trace_range(trace_range(inv)),
        "assumptions": list(inv.assumptions),
    }


def parse_invariant(doc) -> ElliottInvariant:
    """Rebuild an invariant from its emitted document (system and t are authoritative)."""
    system = parse_system(_need(doc, "system", "invariant"))
    t = parse_number(_need(doc, "t", "invariant"))
    if _need(doc, "k1", "invariant") != "isomorphic_to_k0":
        raise ParseError("k1 must be 'isomorphic_to_k0'")
    return suspension_invariant(system, t)


def emit_entropy(h: ExactEntropy) -> dict:
    c, base = h.normalized()
    out = {}
    if isinstance(c, FieldElement):
        out["coefficient"] = emit_number(c)
    else:
        out["coefficient"] = rational_str(c)
    if isinstance(base, FieldElement):
        out["log_base"] = emit_number(base)
    else:
        out["log_base"] = rational_str(base)
    return out


# files ------------------------------------------------------------------------------

def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def error_document(exc: SuspinvError) -> dict:
    return {"error": exc.name, "message": str(exc)}
