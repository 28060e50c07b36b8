"""Coefficient algebra for two-term skein recurrences.

A skein relation contributes a linear recurrence

    X[n+1] = l1 * X[n] + l2 * X[n-1]

whose characteristic roots are the deformation parameters:

    x^2 - l1*x - l2 = (x - P)(x - Q),   so   l1 = P + Q,  l2 = -P*Q.

This module converts between the three coefficient views: the pair (P, Q),
the link coefficients (l1, l2), and the "knot" coefficients (k1, k2) read
off a recurrence with integer exponents, whose square roots recover the
half-exponent link coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import (
    LaurentPoly,
    NonExactDivisionError,
    NotAPerfectSquareError,
    exact_div,
    sqrt_perfect_square,
)
from .qnumbers import PQPair


class DegenerateSkeinError(ValueError):
    """The would-be relation collapses to fewer than two history terms."""


class NotSolvableOnGridError(ValueError):
    """No (P, Q) pair with integer coefficients on the half-exponent grid
    satisfies the given link coefficients."""


@dataclass(frozen=True)
class SkeinCoefficients:
    l1: LaurentPoly
    l2: LaurentPoly

    @property
    def is_degenerate(self) -> bool:
        return self.l2.is_zero


@dataclass(frozen=True)
class KnotCoefficients:
    k1: LaurentPoly
    k2: LaurentPoly


def link_coeffs_from_pq(pair: PQPair) -> SkeinCoefficients:
    """(P, Q) to (l1, l2) = (P + Q, -P*Q)."""
    prod = pair.P * pair.Q
    if prod.is_zero:
        raise DegenerateSkeinError("P*Q = 0 collapses the relation to one term")
    return SkeinCoefficients(pair.P + pair.Q, -prod)


def pq_from_link_coeffs(coeffs: SkeinCoefficients) -> PQPair:
    """Solve x^2 - l1*x - l2 = 0 for the pair (P, Q).

    P takes the branch with the principal (positive leading) square root of
    the discriminant, matching the built-in families.  Fails when the
    discriminant is not a perfect square on the grid, including the
    degenerate repeated-root case (discriminant zero).
    """
    disc = coeffs.l1 * coeffs.l1 + 4 * coeffs.l2
    try:
        root = sqrt_perfect_square(disc)
    except NotAPerfectSquareError as exc:
        raise NotSolvableOnGridError(
            f"discriminant l1^2 + 4*l2 = {disc} has no principal square root: {exc}"
        ) from exc
    two = LaurentPoly.monomial(2)
    try:
        p_root = exact_div(coeffs.l1 + root, two)
        q_root = exact_div(coeffs.l1 - root, two)
    except NonExactDivisionError as exc:
        raise NotSolvableOnGridError(
            f"roots of x^2 - ({coeffs.l1})*x - ({coeffs.l2}) have non-integer "
            "coefficients"
        ) from exc
    return PQPair(p_root, q_root)


def knot_to_link_coeffs(kc: KnotCoefficients) -> SkeinCoefficients:
    """Recover (l1, l2) from integer-exponent recurrence coefficients:

        l2 = sqrt(-k2),    l1 = sqrt(k1 - 2*l2).

    Both sign conventions for k2 occur in practice (the recurrence minus
    sign may or may not be folded into the stored value).  A square has a
    positive leading coefficient, so the admissible branch of ``-k2`` vs
    ``k2`` is unambiguous and both spellings are accepted.
    """
    radicand = -kc.k2
    if radicand.is_zero:
        raise NotAPerfectSquareError("l2 root failed: k2 = 0 has no nonzero square root")
    if radicand.leading_term()[1] < 0:
        radicand = kc.k2
    try:
        l2 = sqrt_perfect_square(radicand)
    except NotAPerfectSquareError as exc:
        raise NotAPerfectSquareError(f"l2 root failed: radicand {radicand}: {exc}") from exc
    second = kc.k1 - 2 * l2
    try:
        l1 = sqrt_perfect_square(second)
    except NotAPerfectSquareError as exc:
        raise NotAPerfectSquareError(f"l1 root failed: radicand {second}: {exc}") from exc
    return SkeinCoefficients(l1, l2)


def recurrence_generate(
    coeffs: SkeinCoefficients,
    p0: LaurentPoly,
    p1: LaurentPoly,
    count: int,
) -> list[LaurentPoly]:
    """First ``count`` values of X[n+1] = l1*X[n] + l2*X[n-1] from the
    given seeds.  ``count`` includes the seeds themselves."""
    if count < 2:
        raise ValueError("count must be at least 2")
    seq = [p0, p1]
    while len(seq) < count:
        seq.append(coeffs.l1 * seq[-1] + coeffs.l2 * seq[-2])
    return seq
