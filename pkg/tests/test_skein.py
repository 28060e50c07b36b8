"""Conversions between (P, Q), link coefficients, and knot coefficients."""

import random

import pytest

from pqcalc.laurent import LaurentPoly, NotAPerfectSquareError, parse
from pqcalc.qnumbers import Family, PQPair, family_params, number_sequence
from pqcalc.skein import (
    DegenerateSkeinError,
    KnotCoefficients,
    NotSolvableOnGridError,
    SkeinCoefficients,
    knot_to_link_coeffs,
    link_coeffs_from_pq,
    pq_from_link_coeffs,
    recurrence_generate,
)


# ----------------------------------------------------------------------
# (P, Q) -> (l1, l2)


@pytest.mark.parametrize(
    "family, l1, l2",
    [
        (Family.ALEXANDER_FERMIONIC, "q^(1/2) - q^(-1/2)", "1"),
        (Family.JONES_FERMIONIC, "q^(3/2) - q^(1/2)", "q^2"),
        (Family.HOMFLY_FERMIONIC, "p*q^(1/2) - p*q^(-1/2)", "p^2"),
        (Family.ALEXANDER_BOSONIC, "q + q^(-1)", "-1"),
        (Family.JONES_BOSONIC, "q^3 + q", "-q^4"),
        (Family.HOMFLY_BOSONIC, "p^2*q + p^2*q^(-1)", "-p^4"),
    ],
)
def test_link_coeffs_per_family(family, l1, l2):
    got = link_coeffs_from_pq(family_params(family))
    assert got.l1 == parse(l1)
    assert got.l2 == parse(l2)
    assert not got.is_degenerate


def test_link_coeffs_rejects_vanishing_product():
    with pytest.raises(DegenerateSkeinError):
        link_coeffs_from_pq(PQPair(parse("q"), LaurentPoly.zero()))


def test_degenerate_flag_reads_l2():
    assert SkeinCoefficients(parse("q"), LaurentPoly.zero()).is_degenerate
    assert not SkeinCoefficients(parse("q"), parse("1")).is_degenerate


# ----------------------------------------------------------------------
# (l1, l2) -> (P, Q)


def test_pair_recovery_alexander():
    coeffs = SkeinCoefficients(parse("q^(1/2) - q^(-1/2)"), parse("1"))
    pair = pq_from_link_coeffs(coeffs)
    assert pair == family_params(Family.ALEXANDER_FERMIONIC)


def test_pair_recovery_jones():
    coeffs = SkeinCoefficients(parse("q^(3/2) - q^(1/2)"), parse("q^2"))
    pair = pq_from_link_coeffs(coeffs)
    assert pair == family_params(Family.JONES_FERMIONIC)


def test_pair_recovery_multi_term():
    pair = pq_from_link_coeffs(SkeinCoefficients(parse("2q"), parse("1 - q^2")))
    assert pair == PQPair(parse("q + 1"), parse("q - 1"))


def test_pair_recovery_rejects_off_grid_discriminant():
    with pytest.raises(NotSolvableOnGridError):
        pq_from_link_coeffs(SkeinCoefficients(parse("q"), parse("q")))


def test_pair_recovery_rejects_repeated_root():
    # discriminant 4q^2 - 4q^2 = 0
    with pytest.raises(NotSolvableOnGridError):
        pq_from_link_coeffs(SkeinCoefficients(parse("2q"), parse("-q^2")))


def test_pair_recovery_round_trip_random_monomials():
    rng = random.Random(20260819)
    done = 0
    while done < 500:
        cp = rng.choice([-1, 1]) * rng.randint(1, 9)
        cq = rng.choice([-1, 1]) * rng.randint(1, 9)
        P = LaurentPoly.monomial(cp, rng.randint(-6, 6), rng.randint(-6, 6))
        Q = LaurentPoly.monomial(cq, rng.randint(-6, 6), rng.randint(-6, 6))
        if P == Q:
            continue
        diff = P - Q
        expected = PQPair(P, Q) if diff.leading_term()[1] > 0 else PQPair(Q, P)
        got = pq_from_link_coeffs(link_coeffs_from_pq(PQPair(P, Q)))
        assert got == expected
        done += 1


# ----------------------------------------------------------------------
# (k1, k2) -> (l1, l2)


def test_knot_to_link_jones():
    got = knot_to_link_coeffs(KnotCoefficients(parse("q^3 + q"), parse("q^4")))
    assert got == link_coeffs_from_pq(family_params(Family.JONES_FERMIONIC))


def test_knot_to_link_alexander():
    got = knot_to_link_coeffs(KnotCoefficients(parse("q + q^(-1)"), parse("-1")))
    assert got == link_coeffs_from_pq(family_params(Family.ALEXANDER_FERMIONIC))


def test_knot_to_link_homfly():
    got = knot_to_link_coeffs(
        KnotCoefficients(parse("p^2*q + p^2*q^(-1)"), parse("p^4"))
    )
    assert got == link_coeffs_from_pq(family_params(Family.HOMFLY_FERMIONIC))


@pytest.mark.parametrize(
    "family",
    [Family.ALEXANDER_FERMIONIC, Family.JONES_FERMIONIC, Family.HOMFLY_FERMIONIC],
)
@pytest.mark.parametrize("fold_sign", [1, -1])
def test_knot_to_link_accepts_both_k2_spellings(family, fold_sign):
    # k-coefficients come from the matching bosonic pair; either sign of
    # the stored k2 must land on the same fermionic link coefficients
    bosonic = {
        Family.ALEXANDER_FERMIONIC: Family.ALEXANDER_BOSONIC,
        Family.JONES_FERMIONIC: Family.JONES_BOSONIC,
        Family.HOMFLY_FERMIONIC: Family.HOMFLY_BOSONIC,
    }[family]
    pb = family_params(bosonic)
    kc = KnotCoefficients(pb.P + pb.Q, fold_sign * pb.P * pb.Q)
    assert knot_to_link_coeffs(kc) == link_coeffs_from_pq(family_params(family))


def test_knot_to_link_flat_input_fails_on_second_root():
    with pytest.raises(NotAPerfectSquareError) as info:
        knot_to_link_coeffs(KnotCoefficients(parse("2"), parse("1")))
    assert "l1 root failed" in str(info.value)


def test_knot_to_link_rejects_zero_k2():
    with pytest.raises(NotAPerfectSquareError) as info:
        knot_to_link_coeffs(KnotCoefficients(parse("q + q^(-1)"), LaurentPoly.zero()))
    assert "l2 root failed" in str(info.value)


def test_knot_to_link_off_grid_first_root():
    # neither q + 1 nor -(q + 1) is a square: the cross term is missing
    with pytest.raises(NotAPerfectSquareError) as info:
        knot_to_link_coeffs(KnotCoefficients(parse("q + q^(-1)"), parse("q + 1")))
    assert "l2 root failed" in str(info.value)


# ----------------------------------------------------------------------
# recurrence generation


def test_recurrence_matches_number_sequence():
    for family in Family:
        coeffs = link_coeffs_from_pq(family_params(family))
        seq = recurrence_generate(coeffs, LaurentPoly.zero(), LaurentPoly.one(), 13)
        assert seq == number_sequence(family, 12)


def test_recurrence_trefoil_value():
    coeffs = link_coeffs_from_pq(family_params(Family.ALEXANDER_FERMIONIC))
    seq = recurrence_generate(coeffs, LaurentPoly.zero(), LaurentPoly.one(), 4)
    assert seq[3] == parse("q - 1 + q^(-1)")


def test_recurrence_custom_seeds():
    coeffs = SkeinCoefficients(parse("q"), parse("-1"))
    seq = recurrence_generate(coeffs, parse("1"), parse("q"), 4)
    assert seq == [parse("1"), parse("q"), parse("q^2 - 1"), parse("q^3 - 2q")]


def test_recurrence_count_validation():
    coeffs = SkeinCoefficients(parse("q"), parse("1"))
    with pytest.raises(ValueError):
        recurrence_generate(coeffs, LaurentPoly.zero(), LaurentPoly.one(), 1)
