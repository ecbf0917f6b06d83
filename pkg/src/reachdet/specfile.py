"""JSON recurrence spec files.

    {"order": 2, "initial": ["1", "1"], "coeffs": [["0"], ["1"], ["1"]], "name": "fibonacci"}

``coeffs[m]`` lists the ascending coefficients of ``f_m`` as a polynomial
in the 1-based term index ``i``.  Every rational is a string matching
``-?[0-9]+(/[1-9][0-9]*)?``; floats are rejected.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .exact import IndexPolynomial, RationalSyntaxError, format_rational, parse_rational
from .recurrence import RecurrenceSpec


class SpecError(ValueError):
    pass


def _rational(value: Any, where: str):
    if not isinstance(value, str):
        raise SpecError(f"{where}: expected a rational string, got {json.dumps(value)}")
    try:
        return parse_rational(value)
    except RationalSyntaxError as exc:
        raise SpecError(f"{where}: {exc}") from None


def parse_spec(obj: Any) -> RecurrenceSpec:
    if not isinstance(obj, dict):
        raise SpecError("spec must be a JSON object")
    unknown = set(obj) - {"order", "initial", "coeffs", "name"}
    if unknown:
        raise SpecError(f"unknown spec keys: {sorted(unknown)}")
    order = obj.get("order")
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise SpecError(f"order: expected an integer >= 1, got {json.dumps(order)}")
    initial = obj.get("initial")
    if not isinstance(initial, list) or len(initial) != order:
        raise SpecError(f"initial: expected a list of {order} rational strings")
    coeffs = obj.get("coeffs")
    if not isinstance(coeffs, list) or len(coeffs) != order + 1:
        raise SpecError(f"coeffs: expected a list of {order + 1} polynomials")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise SpecError("name: expected a string")
    alpha = tuple(_rational(v, f"initial[{k}]") for k, v in enumerate(initial))
    polys = []
    for m, poly in enumerate(coeffs):
        if not isinstance(poly, list):
            raise SpecError(f"coeffs[{m}]: expected a list of rational strings")
        polys.append(
            IndexPolynomial(tuple(_rational(v, f"coeffs[{m}][{p}]") for p, v in enumerate(poly)))
        )
    return RecurrenceSpec(alpha, tuple(polys), name)


def dump_spec(spec: RecurrenceSpec) -> dict:
    out: dict = {
        "order": spec.order,
        "initial": [format_rational(a) for a in spec.initial],
        "coeffs": [[format_rational(c) for c in p.coefficients] for p in spec.coeffs],
    }
    if spec.name is not None:
        out["name"] = spec.name
    return out


def loads_spec(text: str) -> RecurrenceSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_spec(obj)


def load_spec(path: str | Path) -> RecurrenceSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read spec file {path}: {exc.strerror}") from None
    return loads_spec(text)


def save_spec(spec: RecurrenceSpec, path: str | Path) -> None:
    Path(path).write_text(json.dumps(dump_spec(spec)) + "\n", encoding="utf-8")
