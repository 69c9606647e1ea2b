"""JSON encodings: stable key order, exact round-trips, byte-stable output."""

import dataclasses
import json
import random
from fractions import Fraction

import pytest

from conftest import random_params, random_poly, random_ratfunc
from telescopic import (
    Certificate,
    LogCombination,
    ParameterPair,
    Poly,
    RatFunc,
    Recurrence,
    closed_form_certificates,
    closed_form_recurrence,
    make_left_family,
    proof_from_json,
    proof_to_json,
    prove_identity,
    reverify_proof,
)
from telescopic.serialize import (
    certificate_from_obj,
    certificate_to_obj,
    family_from_obj,
    family_to_obj,
    logcomb_from_obj,
    logcomb_to_obj,
    params_from_obj,
    params_to_obj,
    poly_from_obj,
    poly_to_obj,
    ratfunc_from_obj,
    ratfunc_to_obj,
    rational_from_str,
    rational_to_str,
    recurrence_from_obj,
    recurrence_to_obj,
)


def test_rational_strings():
    assert rational_to_str(Fraction(3, 4)) == "3/4"
    assert rational_to_str(Fraction(-5)) == "-5"
    assert rational_to_str(Fraction(6, -4)) == "-3/2"
    assert rational_from_str("-3/2") == Fraction(-3, 2)
    rng = random.Random(901)
    for _ in range(200):
        value = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert rational_from_str(rational_to_str(value)) == value


def test_poly_encoding_is_ascending():
    p = Poly([1, Fraction(-2, 3), 0, 4])
    assert poly_to_obj(p) == ["1", "-2/3", "0", "4"]
    assert poly_from_obj(poly_to_obj(p)) == p


def test_ratfunc_encoding():
    f = RatFunc(Poly([0, 1]), Poly([1, 1]))
    obj = ratfunc_to_obj(f)
    assert set(obj) == {"num", "den"}
    assert ratfunc_from_obj(obj) == f


def test_logcomb_encoding_sorted_by_prime():
    value = LogCombination(Fraction(-21), {3: -73, 2: 146})
    obj = logcomb_to_obj(value)
    assert obj["constant"] == "-21"
    assert [t["prime"] for t in obj["terms"]] == ["2", "3"]
    assert logcomb_from_obj(obj) == value


def test_component_round_trips():
    rng = random.Random(902)
    for _ in range(50):
        poly = random_poly(rng)
        assert poly_from_obj(poly_to_obj(poly)) == poly
        f = random_ratfunc(rng)
        assert ratfunc_from_obj(ratfunc_to_obj(f)) == f
    for _ in range(20):
        params = random_params(rng)
        assert params_from_obj(params_to_obj(params)) == params
        fam = make_left_family(params)
        assert family_from_obj(family_to_obj(fam)) == fam
        rec = closed_form_recurrence(params)
        assert recurrence_from_obj(recurrence_to_obj(rec)) == rec
        c1, c2 = closed_form_certificates(params)
        assert certificate_from_obj(certificate_to_obj(c1)) == c1
        assert certificate_from_obj(certificate_to_obj(c2)) == c2


def test_proof_json_key_order():
    proof = prove_identity(ParameterPair(2, 1), extra_n=1)
    obj = json.loads(proof_to_json(proof))
    assert list(obj) == [
        "params",
        "families",
        "recurrence",
        "certificates",
        "base_cases",
        "extra_checks",
        "substitution_check",
        "verdict",
        "tool_version",
    ]
    assert list(obj["families"]) == ["left", "right"]
    assert list(obj["certificates"]) == ["left", "right"]
    assert obj["verdict"] == {"status": "proved"}
    assert obj["base_cases"][0]["equal"] is True


def test_proof_round_trip_and_reverify():
    proof = prove_identity(ParameterPair(3, 2), extra_n=3)
    text = proof_to_json(proof)
    assert text.endswith("\n")
    restored = proof_from_json(text)
    assert restored == proof
    assert proof_to_json(restored) == text  # byte-identical re-serialization
    assert reverify_proof(restored)


def test_failed_proof_serializes_with_reason():
    forged = object.__new__(ParameterPair)
    object.__setattr__(forged, "a", Fraction(2))
    object.__setattr__(forged, "b", Fraction(2))
    proof = prove_identity(forged, mode="verify")
    obj = json.loads(proof_to_json(proof))
    assert obj["recurrence"] is None
    assert obj["certificates"] == {"left": None, "right": None}
    assert obj["verdict"]["status"] == "failed"
    assert "degenerate" in obj["verdict"]["reason"]
    # deserialization re-validates the domain constraints, so forged
    # parameters cannot ride back in through JSON
    with pytest.raises(ValueError, match="a > b > 0"):
        proof_from_json(proof_to_json(proof))


def test_failed_proof_round_trip():
    base = prove_identity(ParameterPair(2, 1), extra_n=0)
    failed = dataclasses.replace(
        base,
        recurrence=None,
        left_certificate=None,
        right_certificate=None,
        verdict="failed",
        failure_reason="synthetic failure for the encoder",
    )
    restored = proof_from_json(proof_to_json(failed))
    assert restored == failed
    assert restored.failure_reason == failed.failure_reason
    assert not reverify_proof(restored)
