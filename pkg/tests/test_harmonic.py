"""Harmonic knot forms, crossing-sign closed forms, and classification."""

from __future__ import annotations

from math import gcd

import pytest

from chebknot.bridge import canonicalize, equivalent, Equivalence
from chebknot.contfrac import Fraction, eval_cf, fibonacci
from chebknot.errors import (
    ADifferentFrom3,
    BadLambda,
    BDivisibleBy3,
    IndexOutOfRange,
    IsLink,
    NotPairwiseCoprime,
    TrivialKnot,
)
from chebknot.harmonic import (
    HarmonicSpec,
    classify,
    closed_form_crossing_indices,
    crossing_sign_closed_form,
    harmonic_conway,
    is_harmonic_candidate,
    mirror_equivalent_c,
)


def test_harmonic_spec_validation():
    HarmonicSpec(3, 5, 7)
    with pytest.raises(NotPairwiseCoprime):
        HarmonicSpec(3, 6, 7)
    with pytest.raises(NotPairwiseCoprime):
        HarmonicSpec(3, 4, 8)


def test_harmonic_conway_worked_examples():
    form = harmonic_conway(5, 1)
    assert form.signs == (1, 1, 1, 1)
    assert eval_cf(form.signs) == Fraction(5, 3)

    # b = 3n+1 with lam = n, here n = 2: period-3 alternation
    form = harmonic_conway(7, 2)
    assert form.signs == (1, 1, 1, -1, -1, -1)
    assert eval_cf(form.signs) == Fraction(5, 4)

    form = harmonic_conway(7, 1)
    assert form.signs == (1,) * 6
    assert eval_cf(form.signs) == Fraction(13, 8)
    assert (fibonacci(7), fibonacci(6)) == (13, 8)


def test_harmonic_conway_validation():
    with pytest.raises(BDivisibleBy3):
        harmonic_conway(9, 1)
    with pytest.raises(BadLambda):
        harmonic_conway(7, 0)
    with pytest.raises(BadLambda):
        harmonic_conway(7, 4)  # 2*lam >= b
    with pytest.raises(BadLambda):
        harmonic_conway(8, 2)  # shares a factor


def test_harmonic_conway_is_one_regular_with_lam_minus_1_changes():
    for b in range(4, 41):
        if b % 3 == 0:
            continue
        for lam in range(1, (b + 1) // 2):
            if gcd(lam, b) != 1 or 2 * lam >= b:
                continue
            form = harmonic_conway(b, lam)
            t = form.signs
            changes = sum(1 for i in range(len(t) - 1) if t[i] * t[i + 1] < 0)
            assert changes == lam - 1
            # crossing number b - lam via the change-count formula
            assert len(t) - changes == b - lam


def test_closed_form_signs_worked_examples():
    assert crossing_sign_closed_form(7, 1, "A", 0) == 1
    assert crossing_sign_closed_form(7, 1, "C", 1) == -1
    with pytest.raises(IndexOutOfRange):
        crossing_sign_closed_form(7, 1, "A", 2)
    with pytest.raises(IndexOutOfRange):
        crossing_sign_closed_form(7, 1, "X", 0)
    with pytest.raises(BDivisibleBy3):
        crossing_sign_closed_form(8, 1, "A", 0)


def test_closed_form_matches_conway_parity_rule():
    # D at decreasing-x position i recovers the Conway sign sign(sin(i*theta))
    for b in range(4, 41, 3):  # b = 3n + 1
        n = (b - 1) // 3
        for lam in range(1, (b + 1) // 2):
            if gcd(lam, b) != 1 or 2 * lam >= b:
                continue
            form = harmonic_conway(b, lam)
            for k in range(n):
                for point, i in (("A", 3 * k + 1), ("B", 3 * k + 2), ("C", 3 * k + 3)):
                    d = crossing_sign_closed_form(b, lam, point, k)
                    conway = d if i % 2 == 1 else -d
                    assert conway == form.signs[i - 1]


def test_closed_form_crossing_indices_match_geometry():
    from chebknot.diagram import enumerate_crossings

    for b in (7, 10, 13, 16):
        n = (b - 1) // 3
        pts = enumerate_crossings(3, b)
        for k in range(n):
            for point, i in (("A", 3 * k + 1), ("B", 3 * k + 2), ("C", 3 * k + 3)):
                k_idx, h_idx = closed_form_crossing_indices(b, point, k)
                p = pts[i - 1]
                assert (p.k, p.h) == (k_idx, h_idx)


def test_mirror_equivalent_c_examples():
    assert mirror_equivalent_c(3, 5, 13) == 7
    assert mirror_equivalent_c(3, 4, 5) is None
    assert mirror_equivalent_c(3, 7, 19) is None
    with pytest.raises(NotPairwiseCoprime):
        mirror_equivalent_c(3, 6, 5)


def test_mirror_equivalent_c_satisfies_congruences():
    import random

    rng = random.Random(11)
    found = 0
    while found < 10:
        b = rng.randrange(4, 40)
        c = rng.randrange(4, 120)
        if b % 3 == 0 or c % 3 == 0 or gcd(b, c) != 1:
            continue
        cp = mirror_equivalent_c(3, b, c)
        if cp is None:
            continue
        assert 0 < cp < c
        assert (cp - c) % 6 == 0 and (cp + c) % (2 * b) == 0
        found += 1


def test_classify_chain_example():
    canon = classify(HarmonicSpec(3, 31, 43))
    assert (canon.b_prime, canon.c_prime) == (5, 7)
    assert canon.crossing_number == 4
    assert canon.fraction == Fraction(5, 3)
    assert canon.mirror is False
    assert canon.amphicheiral


def test_classify_swap_case():
    canon = classify(HarmonicSpec(3, 8, 7))
    assert (canon.b_prime, canon.c_prime) == (7, 8)
    assert canon.mirror is True
    assert canon.fraction == Fraction(5, 4)


def test_classify_fixed_point():
    canon = classify(HarmonicSpec(3, 5, 7))
    assert (canon.b_prime, canon.c_prime, canon.mirror) == (5, 7, False)
    assert canon.crossing_number == 4


def test_classify_idempotent_on_canonical_pairs():
    for b in range(4, 31):
        if b % 3 == 0:
            continue
        for c in range(b + 1, min(2 * b, 31)):
            if c % 3 == 0 or gcd(b, c) != 1 or (b + c) % 3 != 0:
                continue
            canon = classify(HarmonicSpec(3, b, c))
            assert (canon.b_prime, canon.c_prime, canon.mirror) == (b, c, False)
            # crossing number is (b + c) / 3
            assert canon.crossing_number == (b + c) // 3
            # the fraction satisfies beta^2 = +-1 mod alpha
            a_, b_ = canon.fraction.num, canon.fraction.den
            assert (b_ * b_) % a_ in (1 % a_, (a_ - 1) % a_)


def test_classify_torus_family():
    # the pair (3n+2, 3n+1) swaps to the canonical (3n+1, 3n+2) with the
    # mirror flag set; the canonical fraction is (2n+1)/(2n)
    for n in range(1, 11):
        canon = classify(HarmonicSpec(3, 3 * n + 2, 3 * n + 1))
        assert (canon.b_prime, canon.c_prime) == (3 * n + 1, 3 * n + 2)
        assert canon.mirror is True
        assert canon.fraction == Fraction(2 * n + 1, 2 * n)
        assert canon.crossing_number == 2 * n + 1
        # the canonical knot is the mirror of the (2n+1)-torus knot
        rel = equivalent(
            canonicalize(canon.fraction.num, canon.fraction.den),
            canonicalize(2 * n + 1, 1),
        )
        assert rel is Equivalence.MIRROR


def test_classify_fibonacci_family():
    for b in range(4, 31):
        if b % 3 == 0:
            continue
        form = harmonic_conway(b, 1)
        assert form.signs == (1,) * (b - 1)
        assert eval_cf(form.signs) == Fraction(fibonacci(b), fibonacci(b - 1))


def test_classify_distinct_canonical_pairs_are_distinct_knots():
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for b in range(4, 31):
        if b % 3 == 0:
            continue
        for c in range(b + 1, min(2 * b, 31)):
            if c % 3 == 0 or gcd(b, c) != 1 or (b + c) % 3 != 0:
                continue
            frac = classify(HarmonicSpec(3, b, c)).fraction
            knot = canonicalize(frac.num, frac.den)
            key = (knot.alpha, knot.beta)  # chirality-free class
            assert key not in seen, f"pairs {seen[key]} and {(b, c)} collide"
            seen[key] = (b, c)


def test_classify_rejects_bad_specs():
    with pytest.raises(ADifferentFrom3):
        classify(HarmonicSpec(4, 5, 7))
    with pytest.raises(NotPairwiseCoprime):
        classify(HarmonicSpec(3, 10, 15))


def test_classify_trivial_cases():
    with pytest.raises(TrivialKnot):
        classify(HarmonicSpec(3, 1, 2))
    with pytest.raises(TrivialKnot):
        classify(HarmonicSpec(3, 4, 7))  # reduces to a height-1 curve
    with pytest.raises(TrivialKnot):
        classify(HarmonicSpec(3, 2, 5))


def test_classify_terminates_and_preserves_knot_under_double_application():
    for b in range(4, 25):
        if b % 3 == 0:
            continue
        for c in range(4, 35):
            if c % 3 == 0 or gcd(b, c) != 1:
                continue
            try:
                canon = classify(HarmonicSpec(3, b, c))
            except TrivialKnot:
                continue
            again = classify(HarmonicSpec(3, canon.b_prime, canon.c_prime))
            assert (again.b_prime, again.c_prime) == (canon.b_prime, canon.c_prime)
            assert again.mirror is False


def test_is_harmonic_candidate():
    assert is_harmonic_candidate(canonicalize(5, 3)) is True
    assert is_harmonic_candidate(canonicalize(9, 2)) is False
    for m in range(3, 51):
        assert is_harmonic_candidate(canonicalize(2 * m + 1, 2)) is False
    assert is_harmonic_candidate(canonicalize(3, 1)) is True
    assert is_harmonic_candidate(canonicalize(5, 2)) is True
    with pytest.raises(IsLink):
        is_harmonic_candidate(canonicalize(4, 1))
