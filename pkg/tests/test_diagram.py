"""Crossing geometry and minimal Conway forms."""

from __future__ import annotations

import math
from math import gcd

import pytest

from conftest import fractions_with_crossing_number_up_to
from chebknot.bridge import canonicalize, stevedore_fraction, torus_fraction, twist_fraction
from chebknot.contfrac import Fraction, eval_cf, expansion_length, regular_expansion
from chebknot.diagram import (
    ConwayForm,
    conway_reversal_check,
    enumerate_crossings,
    is_minimal_by_word,
    minimal_diagram,
)
from chebknot.errors import (
    InvalidForm,
    IsLink,
    LengthMismatch,
    NotCoprime,
    NotGreaterThanOne,
    NotPGPForm,
)


# ---------------------------------------------------------------------------
# crossing enumeration
# ---------------------------------------------------------------------------

def test_crossing_counts():
    assert len(enumerate_crossings(3, 4)) == 3
    assert len(enumerate_crossings(3, 10)) == 9
    assert len(enumerate_crossings(4, 5)) == 6


def test_crossings_reject_non_coprime():
    with pytest.raises(NotCoprime):
        enumerate_crossings(3, 9)


def test_crossing_count_and_symmetry_sweep():
    for a in range(2, 6):
        for b in range(2, 41):
            if gcd(a, b) != 1:
                continue
            pts = enumerate_crossings(a, b)
            assert len(pts) == (a - 1) * (b - 1) // 2
            params = sorted([p.t for p in pts] + [p.s for p in pts])
            for lo, hi in zip(params, reversed(params)):
                assert lo == -hi  # multiset symmetric about 0
            assert len(set(params)) == len(params)


def test_crossings_sorted_by_strictly_decreasing_x():
    for b in (4, 5, 7, 8, 10, 11):
        pts = enumerate_crossings(3, b)
        xs = [p.x for p in pts]
        assert all(xs[i] > xs[i + 1] for i in range(len(xs) - 1))
        assert [p.index for p in pts] == list(range(len(pts)))
        # the sorted abscissae are exactly cos(i*pi/b), i = 1..b-1
        for i, p in enumerate(pts, start=1):
            assert math.isclose(p.x, math.cos(i * math.pi / b), abs_tol=1e-12)


def test_crossing_parameters_and_rows():
    for b in (5, 7, 8):
        for p in enumerate_crossings(3, b):
            denom = 3 * b
            assert math.isclose(p.t, math.cos(p.m_t * math.pi / denom), abs_tol=1e-12)
            assert math.isclose(p.s, math.cos(p.m_s * math.pi / denom), abs_tol=1e-12)
            assert p.t < p.s
            # crossings of C(3, b) sit on the lines y = +-1/2
            y = math.cos(b * math.acos(p.t))
            assert math.isclose(abs(y), 0.5, abs_tol=1e-9)
            assert p.row == (1 if y > 0 else -1)


def _chebyshev_derivative(n: int, t: float) -> float:
    # T_n'(cos u) = n sin(nu) / sin(u)
    u = math.acos(t)
    return n * math.sin(n * u) / math.sin(u)


def test_xy_derivative_sign_against_float_derivatives():
    """The integer sign engine agrees with honest float derivatives."""
    for a, b in ((3, 5), (3, 7), (3, 8), (3, 11), (4, 5), (5, 7)):
        for p in enumerate_crossings(a, b):
            numeric = _chebyshev_derivative(a, p.t) * _chebyshev_derivative(b, p.t)
            assert abs(numeric) > 1e-9
            assert p.xy_sign == (1 if numeric > 0 else -1)


# ---------------------------------------------------------------------------
# Conway forms
# ---------------------------------------------------------------------------

def test_conway_form_validation():
    ConwayForm((1, 1, 1), 4)
    ConwayForm((-1, -1, -1), 4)  # negated one-regular patterns allowed
    with pytest.raises(InvalidForm):
        ConwayForm((1, 1), 4)  # wrong length
    with pytest.raises(InvalidForm):
        ConwayForm((1, -1, 1, 1, 1), 6)  # double sign change
    with pytest.raises(InvalidForm):
        ConwayForm((1, 1), 3)  # b divisible by 3
    with pytest.raises(InvalidForm):
        ConwayForm((1, 0, 1), 4)


def test_conway_form_text():
    assert ConwayForm((-1, -1, -1, 1, 1, 1, 1), 8).text() == "C(-1,-1,-1,1,1,1,1)"


# ---------------------------------------------------------------------------
# minimal diagrams
# ---------------------------------------------------------------------------

def test_minimal_diagram_torus():
    # T(2, 7) presented as 7/6: diagram degree 10, via the conjugate branch
    md = minimal_diagram(Fraction(7, 6))
    assert md.b == 10
    md2 = minimal_diagram(Fraction(7, 1))
    assert md2.b == 10


def test_minimal_diagram_twist_and_stevedore():
    assert minimal_diagram(Fraction(7, 2)).b == 7
    md = minimal_diagram(Fraction(9, 2))
    assert md.b == 8 and md.mirrored
    assert md.form.signs == (-1, -1, -1, 1, 1, 1, 1)
    md61 = minimal_diagram(Fraction(9, 7))
    assert md61.b == 8 and not md61.mirrored
    assert md61.form.signs == (1, 1, 1, -1, -1, -1, -1)


def test_minimal_diagram_family_degrees():
    for k in range(1, 11):
        assert minimal_diagram(torus_fraction(k)).b == 3 * k + 1
        assert minimal_diagram(twist_fraction(2 * k + 1)).b == 3 * k + 4
        assert minimal_diagram(twist_fraction(2 * k)).b == 3 * k + 2
        assert minimal_diagram(stevedore_fraction(k)).b == 6 * k + 2


def test_minimal_diagram_rejects_bad_input():
    with pytest.raises(NotGreaterThanOne):
        minimal_diagram(Fraction(7, 9))
    with pytest.raises(IsLink):
        minimal_diagram(Fraction(4, 1))


def test_minimal_diagram_bounds_and_knot_class():
    seen = set()
    for alpha, beta, n_cross in fractions_with_crossing_number_up_to(12):
        if alpha % 2 == 0 or (alpha, beta) in seen:
            continue
        seen.add((alpha, beta))
        r = Fraction(alpha, beta)
        md = minimal_diagram(r)
        assert n_cross < md.b and 2 * md.b < 3 * n_cross
        assert md.b == min(expansion_length(r), expansion_length(Fraction(alpha, alpha - beta))) + 1
        # the emitted form evaluates to a fraction of the same knot
        value = eval_cf(md.form.signs)
        assert canonicalize(value.num, value.den) == canonicalize(alpha, beta)


def test_word_criterion_worked_examples():
    assert is_minimal_by_word(Fraction(9, 7)) is True
    assert is_minimal_by_word(Fraction(9, 2)) is False
    assert is_minimal_by_word(Fraction(2, 1)) is False
    with pytest.raises(NotPGPForm):
        is_minimal_by_word(Fraction(7, 9))


def test_word_criterion_matches_length_comparison():
    for alpha, beta, n_cross in fractions_with_crossing_number_up_to(10):
        r = Fraction(alpha, beta)
        n = expansion_length(r)
        assert is_minimal_by_word(r) == (2 * n < 3 * n_cross - 2)


def test_word_criterion_sweep_to_300():
    from math import gcd as _gcd
    from chebknot.contfrac import cn_from_regular, pm_word

    for alpha in range(2, 301):
        for beta in range(1, alpha):
            if _gcd(alpha, beta) != 1:
                continue
            cf = regular_expansion(Fraction(alpha, beta))
            w = pm_word(cf)
            n, n_cross = len(cf), cn_from_regular(cf)
            assert (w.degP >= w.degM + 3) == (2 * n < 3 * n_cross - 2)
            assert is_minimal_by_word(Fraction(alpha, beta)) == (w.degP >= w.degM + 3)


def test_reversal_check_identity_and_conjugate():
    f = minimal_diagram(Fraction(9, 7)).form
    n_cross = 6
    assert conway_reversal_check(f, f, n_cross)
    # 9/4 is the inverse-residue presentation of the same knot
    g = minimal_diagram(Fraction(9, 4)).form
    assert g.signs == (-1, -1, -1, -1, 1, 1, 1)
    assert conway_reversal_check(f, g, n_cross)
    assert conway_reversal_check(g, f, n_cross)


def test_reversal_check_distinct_knots_and_mismatch():
    f = ConwayForm(regular_expansion(Fraction(9, 7)).terms, 8)
    h = ConwayForm(regular_expansion(Fraction(7, 5)).terms, 8)
    assert not conway_reversal_check(f, h, 6)
    short = ConwayForm(regular_expansion(Fraction(3, 2)).terms, 4)
    with pytest.raises(LengthMismatch):
        conway_reversal_check(f, short, 6)


def test_reversal_check_sweep():
    # the two minimal presentations (via beta and via its inverse residue)
    # always agree up to reversal with sign (-1)^(n+1)
    from conftest import inverse_mod

    for alpha, beta, n_cross in fractions_with_crossing_number_up_to(9):
        if alpha % 2 == 0:
            continue
        md1 = minimal_diagram(Fraction(alpha, beta))
        md2 = minimal_diagram(Fraction(alpha, inverse_mod(beta, alpha)))
        assert md1.b == md2.b
        assert conway_reversal_check(md1.form, md2.form, n_cross)


def test_reversal_sign_depends_on_length_parity_only():
    # even-length pair (figure-eight, N even): the relating sign is -1,
    # so the two forms are global negations of each other
    f1 = minimal_diagram(Fraction(5, 3)).form
    f2 = minimal_diagram(Fraction(5, 2)).form
    assert f2.signs == tuple(-s for s in f1.signs)
    assert conway_reversal_check(f1, f2, 4)
    # odd-length pair with N even (the 6-crossing case): plain reversal
    g1 = minimal_diagram(Fraction(9, 7)).form
    g2 = minimal_diagram(Fraction(9, 4)).form
    assert g2.signs == tuple(reversed(g1.signs))
    assert conway_reversal_check(g1, g2, 6)
