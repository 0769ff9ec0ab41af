"""JSON record formats for eigenform data.

Siegel eigenform records (see README for the full schema):

    {"label": "...", "weight": k, "level": N, "type_tag": "P"|"G"|"unknown",
     "prime_data": [{"p": 2, "lambda_p": "240", "lambda_p2": "-12/5"}, ...]}

or, for float Satake data,

    {"label": ..., "weight": ..., "level": ..., "type_tag": ...,
     "prime_data": [{"p": 2, "alpha": [re, im], "beta": [re, im]}, ...]}

Exactly one of the two prime-data shapes per record; primes strictly
increasing and coprime to the level.  Rationals are strings (optional
sign, digits, optional "/" digits) in lowest terms, never floats, so
ingestion is bit-exact.

Elliptic records:

    {"label": "...", "weight": w, "coefficients": ["1", "-528", ...]}

with coefficients[i] the raw lambda_f(i+1) as an integer string.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path

from .errors import InvariantError, ParseError, SchemaError
from .hecke import EigenvalueSystem
from .primes import is_prime
from .satake import (
    NormalizedSatake,
    SatakeSystem,
    representative_pair,
    spin_multiset,
)
from .scalars import default_tolerance
from .sk import EllipticEigenform

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")
_INTEGER_RE = re.compile(r"[+-]?\d+\Z")

TYPE_TAGS = ("P", "G", "unknown")


def parse_rational(text, field: str) -> Fraction:
    """Parse a lowest-terms rational string; reject anything else."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise SchemaError(field, f"not a rational string: {text!r}")
    if "/" in text:
        num_s, den_s = text.split("/")
        num, den = int(num_s), int(den_s)
        if den == 0:
            raise InvariantError(f"{field}: zero denominator in {text!r}")
        if den == 1 or gcd(abs(num), den) != 1:
            raise InvariantError(f"{field}: {text!r} is not in lowest terms")
        return Fraction(num, den)
    return Fraction(int(text))


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class LoadedEigenform:
    label: str
    type_tag: str
    system: object  # EigenvalueSystem (exact) or SatakeSystem (float)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.system, EigenvalueSystem)


@dataclass(frozen=True)
class LoadedElliptic:
    label: str
    form: EllipticEigenform


def _read_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: {exc.msg} (line {exc.lineno}, column {exc.colno})",
            exc.pos,
        ) from exc


def _require(doc: dict, field: str, types, path: str):
    if field not in doc:
        raise SchemaError(f"{path}.{field}", "missing field")
    value = doc[field]
    if not isinstance(value, types) or isinstance(value, bool):
        raise SchemaError(
            f"{path}.{field}", f"expected {types}, got {type(value).__name__}"
        )
    return value


def _check_float_pair(raw, field: str) -> complex:
    if (
        not isinstance(raw, list)
        or len(raw) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw)
    ):
        raise SchemaError(field, f"expected [re, im] numbers, got {raw!r}")
    return complex(float(raw[0]), float(raw[1]))


def load_eigenform(path) -> LoadedEigenform:
    """Load and validate a Siegel eigenform record."""
    doc = _read_json(path)
    if not isinstance(doc, dict):
        raise SchemaError("$", "record must be a JSON object")
    label = _require(doc, "label", str, "$")
    weight = _require(doc, "weight", int, "$")
    level = _require(doc, "level", int, "$")
    type_tag = _require(doc, "type_tag", str, "$")
    if type_tag not in TYPE_TAGS:
        raise SchemaError("$.type_tag", f"must be one of {TYPE_TAGS}")
    prime_data = _require(doc, "prime_data", list, "$")
    if not prime_data:
        raise SchemaError("$.prime_data", "must be non-empty")
    extra = set(doc) - {"label", "weight", "level", "type_tag", "prime_data"}
    if extra:
        raise SchemaError("$", f"unknown fields {sorted(extra)}")

    shapes = set()
    entries = []
    for i, item in enumerate(prime_data):
        where = f"$.prime_data[{i}]"
        if not isinstance(item, dict):
            raise SchemaError(where, "entry must be an object")
        p = _require(item, "p", int, where)
        keys = set(item) - {"p"}
        if keys == {"lambda_p", "lambda_p2"}:
            shapes.add("exact")
            l1 = parse_rational(item["lambda_p"], f"{where}.lambda_p")
            l2 = parse_rational(item["lambda_p2"], f"{where}.lambda_p2")
            entries.append((p, (l1, l2)))
        elif keys == {"alpha", "beta"}:
            shapes.add("satake")
            alpha = _check_float_pair(item["alpha"], f"{where}.alpha")
            beta = _check_float_pair(item["beta"], f"{where}.beta")
            entries.append((p, (alpha, beta)))
        else:
            raise SchemaError(
                where,
                "entry needs exactly {p, lambda_p, lambda_p2} or {p, alpha, beta}",
            )
    if len(shapes) != 1:
        raise InvariantError("record mixes eigenvalue and Satake prime data")
    shape = shapes.pop()

    last = 0
    for p, _ in entries:
        if p <= last:
            raise InvariantError(f"primes not strictly increasing at p = {p}")
        last = p
        if not is_prime(p):
            raise InvariantError(f"prime_data index {p} is not prime")
        if level % p == 0:
            raise InvariantError(f"prime {p} divides the level {level}")

    if shape == "exact":
        system = EigenvalueSystem(weight, level, dict(entries))
    else:
        tol = default_tolerance()
        msets = {}
        for p, (alpha, beta) in entries:
            if abs(alpha) <= tol or abs(beta) <= tol:
                raise InvariantError(f"zero Satake parameter at p = {p}")
            m = spin_multiset(NormalizedSatake(p, alpha, beta))
            prod = 1
            for v in m.values:
                prod *= v
            if abs(prod - 1) > tol * max(1.0, abs(prod)):
                raise InvariantError(
                    f"spin product off unity at p = {p}: {prod!r}"
                )
            msets[p] = m
        system = SatakeSystem(weight, level, msets)
    return LoadedEigenform(label, type_tag, system)


def eigenform_to_record(loaded: LoadedEigenform) -> dict:
    system = loaded.system
    record = {
        "label": loaded.label,
        "weight": system.k,
        "level": system.level,
        "type_tag": loaded.type_tag,
        "prime_data": [],
    }
    if isinstance(system, EigenvalueSystem):
        for p in system.primes:
            l1, l2 = system.pair(p)
            record["prime_data"].append(
                {
                    "p": p,
                    "lambda_p": format_rational(l1),
                    "lambda_p2": format_rational(l2),
                }
            )
    elif isinstance(system, SatakeSystem):
        for p in sorted(system.msets):
            alpha, beta = representative_pair(system.msets[p])
            record["prime_data"].append(
                {
                    "p": p,
                    "alpha": [alpha.real, alpha.imag],
                    "beta": [beta.real, beta.imag],
                }
            )
    else:
        raise TypeError(f"unknown system type {type(system).__name__}")
    return record


def save_eigenform(loaded: LoadedEigenform, path):
    Path(path).write_text(
        json.dumps(eigenform_to_record(loaded), indent=1) + "\n", encoding="utf-8"
    )


def load_elliptic(path) -> LoadedElliptic:
    """Load and validate an elliptic eigenform record."""
    doc = _read_json(path)
    if not isinstance(doc, dict):
        raise SchemaError("$", "record must be a JSON object")
    label = _require(doc, "label", str, "$")
    weight = _require(doc, "weight", int, "$")
    coeffs = _require(doc, "coefficients", list, "$")
    extra = set(doc) - {"label", "weight", "coefficients"}
    if extra:
        raise SchemaError("$", f"unknown fields {sorted(extra)}")
    values = []
    for i, raw in enumerate(coeffs):
        where = f"$.coefficients[{i}]"
        if not isinstance(raw, str) or not _INTEGER_RE.match(raw):
            raise SchemaError(where, f"not an integer string: {raw!r}")
        values.append(int(raw))
    form = EllipticEigenform(weight, values)
    return LoadedElliptic(label, form)


def save_elliptic(loaded: LoadedElliptic, path):
    record = {
        "label": loaded.label,
        "weight": loaded.form.weight,
        "coefficients": [
            format_rational(loaded.form.lam(n)) for n in range(1, loaded.form.N + 1)
        ],
    }
    Path(path).write_text(
        json.dumps(record, indent=1) + "\n", encoding="utf-8"
    )
