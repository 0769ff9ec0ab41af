import json
from fractions import Fraction

import pytest

from conftest import fixture_path

from gsp4l.errors import (
    InvariantError,
    ParseError,
    SchemaError,
    UnknownPrime,
)
from gsp4l.hecke import EigenvalueSystem, lambda_n
from gsp4l.records import (
    LoadedEigenform,
    eigenform_to_record,
    format_rational,
    load_eigenform,
    load_elliptic,
    parse_rational,
    save_eigenform,
    save_elliptic,
)
from gsp4l.satake import SatakeSystem


def write_record(tmp_path, doc, name="rec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


MINIMAL = {
    "label": "demo",
    "weight": 4,
    "level": 1,
    "type_tag": "unknown",
    "prime_data": [{"p": 3, "lambda_p": "5", "lambda_p2": "-7/2"}],
}


def test_parse_rational():
    assert parse_rational("-3/4", "f") == Fraction(-3, 4)
    assert parse_rational("17", "f") == 17
    with pytest.raises(SchemaError):
        parse_rational("3.5", "f")
    with pytest.raises(SchemaError):
        parse_rational("3 / 4", "f")
    with pytest.raises(InvariantError):
        parse_rational("2/4", "f")
    with pytest.raises(InvariantError):
        parse_rational("3/1", "f")
    with pytest.raises(InvariantError):
        parse_rational("1/0", "f")


def test_format_round_trip():
    for v in (Fraction(-3, 4), Fraction(0), Fraction(17)):
        assert parse_rational(format_rational(v), "f") == v


def test_minimal_record_loads(tmp_path):
    loaded = load_eigenform(write_record(tmp_path, MINIMAL))
    assert loaded.label == "demo" and loaded.is_exact
    sys = loaded.system
    assert sys.pair(3) == (Fraction(5), Fraction(-7, 2))
    with pytest.raises(UnknownPrime):
        lambda_n(sys, 2)


def test_record_prime_divides_level(tmp_path):
    doc = dict(MINIMAL, level=3)
    with pytest.raises(InvariantError):
        load_eigenform(write_record(tmp_path, doc))


def test_record_primes_increasing(tmp_path):
    doc = dict(
        MINIMAL,
        prime_data=[
            {"p": 5, "lambda_p": "1", "lambda_p2": "1"},
            {"p": 3, "lambda_p": "1", "lambda_p2": "1"},
        ],
    )
    with pytest.raises(InvariantError):
        load_eigenform(write_record(tmp_path, doc))


def test_record_shape_mixing_rejected(tmp_path):
    doc = dict(
        MINIMAL,
        prime_data=[
            {"p": 3, "lambda_p": "1", "lambda_p2": "1"},
            {"p": 5, "alpha": [1.0, 0.0], "beta": [1.0, 0.0]},
        ],
    )
    with pytest.raises(InvariantError):
        load_eigenform(write_record(tmp_path, doc))


def test_record_schema_errors_carry_field(tmp_path):
    doc = dict(MINIMAL)
    del doc["weight"]
    with pytest.raises(SchemaError) as err:
        load_eigenform(write_record(tmp_path, doc))
    assert "weight" in str(err.value)

    doc = dict(MINIMAL, prime_data=[{"p": 3, "lambda_p": "1"}])
    with pytest.raises(SchemaError) as err:
        load_eigenform(write_record(tmp_path, doc))
    assert "prime_data[0]" in str(err.value)

    doc = dict(MINIMAL, extra=1)
    with pytest.raises(SchemaError):
        load_eigenform(write_record(tmp_path, doc))


def test_record_parse_error_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"label": }', encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_eigenform(path)
    assert err.value.position is not None


def test_record_missing_file():
    with pytest.raises(ParseError):
        load_eigenform("/nonexistent/nope.json")


def test_golden_fixture_round_trip(tmp_path):
    src = fixture_path("siegel_sk_k10.json")
    loaded = load_eigenform(src)
    out = tmp_path / "resaved.json"
    save_eigenform(loaded, out)
    again = load_eigenform(out)
    assert again == loaded
    assert again.system.pair(2) == (Fraction(240), Fraction(135424))


def test_satake_record_round_trip(tmp_path):
    src = fixture_path("siegel_unitary_k20.json")
    loaded = load_eigenform(src)
    assert not loaded.is_exact
    assert isinstance(loaded.system, SatakeSystem)
    out = tmp_path / "resaved.json"
    save_eigenform(loaded, out)
    again = load_eigenform(out)
    assert again.system.k == 20
    assert set(again.system.msets) == set(loaded.system.msets)
    for p, m in loaded.system.msets.items():
        assert again.system.msets[p] == m


def test_satake_record_zero_alpha_rejected(tmp_path):
    doc = dict(
        MINIMAL,
        prime_data=[{"p": 3, "alpha": [0.0, 0.0], "beta": [1.0, 0.0]}],
    )
    with pytest.raises(InvariantError):
        load_eigenform(write_record(tmp_path, doc))


def test_satake_record_bad_pair_shape(tmp_path):
    doc = dict(
        MINIMAL,
        prime_data=[{"p": 3, "alpha": [0.5], "beta": [1.0, 0.0]}],
    )
    with pytest.raises(SchemaError):
        load_eigenform(write_record(tmp_path, doc))


def test_elliptic_fixture_round_trip(tmp_path):
    loaded = load_elliptic(fixture_path("elliptic_w18.json"))
    assert loaded.form.weight == 18 and loaded.form.N == 120
    out = tmp_path / "resaved.json"
    save_elliptic(loaded, out)
    again = load_elliptic(out)
    assert again.label == loaded.label
    assert again.form.lambdas == loaded.form.lambdas


def test_elliptic_schema_validation(tmp_path):
    doc = {"label": "x", "weight": 18, "coefficients": ["1", "2.5"]}
    with pytest.raises(SchemaError):
        load_elliptic(write_record(tmp_path, doc))
    doc = {"label": "x", "weight": 18, "coefficients": ["2", "1"]}
    with pytest.raises(InvariantError):
        load_elliptic(write_record(tmp_path, doc))


def test_eigenform_to_record_schema(tmp_path):
    loaded = load_eigenform(fixture_path("siegel_zero_k4.json"))
    rec = eigenform_to_record(loaded)
    assert rec["type_tag"] == "unknown"
    assert rec["prime_data"][0]["lambda_p"] == "0"
