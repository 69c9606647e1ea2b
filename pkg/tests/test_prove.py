"""The proof pipeline: boundary vanishing, exact propagation, the
change-of-variables check, and full ProofObject runs in both modes."""

import random
from fractions import Fraction

import pytest

from conftest import random_params
from telescopic import (
    Certificate,
    LogCombination,
    ParameterPair,
    Poly,
    ProofObject,
    RatFunc,
    Recurrence,
    SingularRecurrenceError,
    boundary_vanishing_check,
    closed_form_certificates,
    closed_form_recurrence,
    integrate_01,
    log_of_rational,
    make_left_family,
    make_right_family,
    propagate_recurrence,
    prove_identity,
    reverify_proof,
    verify_substitution_proof,
)


# -- boundary vanishing ---------------------------------------------------------


def test_boundary_vanishing_for_closed_form_certificates():
    params = ParameterPair(2, 1)
    c1, c2 = closed_form_certificates(params)
    left, right = make_left_family(params), make_right_family(params)
    for n in range(4):
        assert boundary_vanishing_check(left, c1, n)
    assert boundary_vanishing_check(right, c2, 0)


def test_boundary_vanishing_fails_without_endpoint_zeros():
    params = ParameterPair(2, 1)
    left = make_left_family(params)
    constant_cert = Certificate((RatFunc.one(),))
    assert not boundary_vanishing_check(left, constant_cert, 0)


# -- propagation ------------------------------------------------------------------


def test_propagate_reference_values():
    params = ParameterPair(2, 1)
    rec = closed_form_recurrence(params)
    lam = log_of_rational(Fraction(4, 3))
    initial = [lam, LogCombination(-2, {2: 14, 3: -7})]
    values = propagate_recurrence(rec, initial, 2)
    assert values[0] == lam
    assert values[2] == LogCombination(-21, {2: 146, 3: -73})  # 73 log(4/3) - 21


def test_propagate_target_below_order_returns_initial():
    params = ParameterPair(2, 1)
    rec = closed_form_recurrence(params)
    initial = [log_of_rational(Fraction(4, 3)), LogCombination(-2, {2: 14, 3: -7})]
    assert propagate_recurrence(rec, initial, 1) == initial


def test_propagate_matches_direct_integration():
    rng = random.Random(601)
    for _ in range(3):
        params = random_params(rng, bound=9)
        rec = closed_form_recurrence(params)
        right = make_right_family(params)
        initial = [integrate_01(right.at(0)), integrate_01(right.at(1))]
        values = propagate_recurrence(rec, initial, 6)
        for n in range(7):
            assert values[n] == integrate_01(right.at(n))


def test_propagate_validates_initial_length():
    rec = closed_form_recurrence(ParameterPair(2, 1))
    with pytest.raises(ValueError, match="initial"):
        propagate_recurrence(rec, [LogCombination.zero()], 3)


def test_propagate_singular_leading_coefficient():
    rec = Recurrence(1, (Poly.one(), Poly([0, 1])))  # leading coeff n
    with pytest.raises(SingularRecurrenceError, match="singular recurrence step"):
        propagate_recurrence(rec, [LogCombination.zero()], 1)


# -- change of variables ------------------------------------------------------------


def test_substitution_proof_reference_pair():
    params = ParameterPair(2, 1)
    for n in range(4):
        assert verify_substitution_proof(params, n)


def test_substitution_proof_random_pairs():
    rng = random.Random(602)
    for _ in range(10):
        params = random_params(rng)
        for n in range(6):
            assert verify_substitution_proof(params, n)


def test_substitution_proof_rejects_wrong_map():
    params = ParameterPair(2, 1)
    b = params.b
    wrong = RatFunc(Poly([b, b]), Poly([b, 1]))  # numerator b(1+u)
    assert not verify_substitution_proof(params, 0, substitution=wrong)


# -- the full pipeline ----------------------------------------------------------------


def test_prove_identity_verify_mode_reference_pair():
    proof = prove_identity(ParameterPair(2, 1), mode="verify", extra_n=5)
    assert proof.proved
    assert proof.verdict == "proved"
    assert proof.failure_reason is None
    n0_left = proof.base_cases[0][1]
    assert n0_left == LogCombination(0, {2: 2, 3: -1})  # log(4/3)
    assert proof.base_cases[0][2] == n0_left
    assert proof.n_checked == 6  # n = 0..extra_n
    assert proof.substitution_check


def test_prove_identity_discover_mode_reference_pair():
    proof = prove_identity(ParameterPair(2, 1), mode="discover", extra_n=3)
    assert proof.proved
    verify = prove_identity(ParameterPair(2, 1), mode="verify", extra_n=3)
    assert proof.recurrence == verify.recurrence
    assert proof.left_certificate == verify.left_certificate
    assert proof.right_certificate == verify.right_certificate


def test_prove_identity_accepts_long_mode_name():
    proof = prove_identity(ParameterPair(2, 1), mode="verify_paper_certificates", extra_n=0)
    assert proof.proved


def test_prove_identity_rejects_unknown_mode():
    with pytest.raises(ValueError, match="mode"):
        prove_identity(ParameterPair(2, 1), mode="guess")


def test_prove_identity_random_pairs_both_modes():
    rng = random.Random(603)
    for _ in range(3):
        params = random_params(rng, bound=20)
        for mode in ("verify", "discover"):
            proof = prove_identity(params, mode=mode, extra_n=4)
            assert proof.proved, (params, mode, proof.failure_reason)
            for n, l_val, r_val in proof.base_cases + proof.extra_checks:
                assert l_val == r_val


def test_prove_identity_degenerate_forged_params():
    # bypass ParameterPair validation to model corrupted inputs
    forged = object.__new__(ParameterPair)
    object.__setattr__(forged, "a", Fraction(2))
    object.__setattr__(forged, "b", Fraction(2))
    proof = prove_identity(forged, mode="verify")
    assert not proof.proved
    assert proof.verdict == "failed"
    assert "degenerate" in proof.failure_reason
    assert "(a-b)^2" in proof.failure_reason


def test_reverify_accepts_good_proof():
    proof = prove_identity(ParameterPair(2, 1), mode="verify", extra_n=2)
    assert reverify_proof(proof)


def test_reverify_rejects_failed_proof():
    forged = object.__new__(ParameterPair)
    object.__setattr__(forged, "a", Fraction(2))
    object.__setattr__(forged, "b", Fraction(2))
    proof = prove_identity(forged, mode="verify")
    assert not reverify_proof(proof)


def test_reverify_rejects_tampered_values():
    proof = prove_identity(ParameterPair(2, 1), mode="verify", extra_n=2)
    tampered = ProofObject(
        params=proof.params,
        left_family=proof.left_family,
        right_family=proof.right_family,
        recurrence=proof.recurrence,
        left_certificate=proof.left_certificate,
        right_certificate=proof.right_certificate,
        base_cases=tuple(
            (n, l + LogCombination(1), r + LogCombination(1))
            for n, l, r in proof.base_cases
        ),
        extra_checks=proof.extra_checks,
        substitution_check=proof.substitution_check,
        verdict=proof.verdict,
    )
    # the stored pairs still agree with each other, but not with the
    # freshly recomputed integrals
    assert not reverify_proof(tampered)
