"""Chebyshev diagram geometry and minimal Conway normal forms.

The plane curve x = T_a(t), y = T_b(t) with gcd(a, b) = 1 has exactly
(a-1)(b-1)/2 double points, at the parameter pairs

    t = cos((k/a + h/b) pi),   s = cos((k/a - h/b) pi),

for integers h, k >= 1 with k/a + h/b < 1.  For a = 3 the crossings lie on
the two lines y = +-1/2 and the diagram is already a Conway normal form:
the crossing with the i-th largest x carries the i-th twist sign, read with
the convention that a right twist is positive at odd i and negative at
even i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

from .contfrac import Fraction, crossing_number, eval_cf, pm_word, regular_expansion
from .errors import (
    ChebknotError,
    InvalidForm,
    IsLink,
    LengthMismatch,
    NotCoprime,
    NotGreaterThanOne,
    NotPGPForm,
)
from .trig import cos_sign, sin_sign


def parameter_value(m: int, denom: int) -> float:
    """cos(m*pi/denom), computed so that m and denom-m give exact negatives."""
    if 2 * m <= denom:
        return math.cos(m * math.pi / denom)
    return -math.cos((denom - m) * math.pi / denom)


def xy_derivative_sign(a: int, b: int, h: int, k: int) -> int:
    """Exact sign of x'(t) y'(t) at the crossing with indices (h, k)."""
    s = sin_sign(a * h, b) * sin_sign(b * k, a)
    return -s if (h + k) % 2 else s


@dataclass(frozen=True)
class CrossingPoint:
    """One double point of the curve x = T_a(t), y = T_b(t)."""

    a: int
    b: int
    h: int
    k: int
    index: int  # position in decreasing-x order, 0-based

    @property
    def m_t(self) -> int:
        """t = cos(m_t * pi / (a*b))."""
        return self.k * self.b + self.a * self.h

    @property
    def m_s(self) -> int:
        """s = cos(m_s * pi / (a*b))."""
        return abs(self.k * self.b - self.a * self.h)

    @property
    def t(self) -> float:
        return parameter_value(self.m_t, self.a * self.b)

    @property
    def s(self) -> float:
        return parameter_value(self.m_s, self.a * self.b)

    @property
    def x(self) -> float:
        return math.cos(self.x_key * math.pi / self.b)

    @property
    def x_key(self) -> int:
        """Integer nu with x = cos(nu*pi/b); increasing nu is decreasing x."""
        mu = (self.a * self.h) % (2 * self.b)
        if mu > self.b:
            mu = 2 * self.b - mu
        return self.b - mu if self.k % 2 else mu

    @property
    def row(self) -> int:
        """+1 for the upper crossing line, -1 for the lower (a = 3)."""
        sign = cos_sign(self.k * self.b, self.a)
        return -sign if self.h % 2 else sign

    @property
    def xy_sign(self) -> int:
        return xy_derivative_sign(self.a, self.b, self.h, self.k)


def enumerate_crossings(a: int, b: int) -> list[CrossingPoint]:
    """All (a-1)(b-1)/2 crossings of the curve, sorted by decreasing x."""
    if a < 2 or b < 2:
        raise ChebknotError("degrees must be >= 2")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    raw = []
    for k in range(1, a):
        h = 1
        while k * b + a * h < a * b:
            raw.append((k, h))
            h += 1
    points = [CrossingPoint(a, b, h, k, 0) for (k, h) in raw]
    points.sort(key=lambda p: p.x_key)
    points = [
        CrossingPoint(a, b, p.h, p.k, i) for i, p in enumerate(points)
    ]
    if len(points) != (a - 1) * (b - 1) // 2:
        raise ChebknotError("crossing count mismatch")
    return points


@dataclass(frozen=True)
class ConwayForm:
    """Twist signs of a C(3, b) diagram, listed in decreasing-x order."""

    signs: tuple[int, ...]
    b: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "signs", tuple(self.signs))
        if self.b < 2 or self.b % 3 == 0:
            raise InvalidForm(f"b = {self.b} is not a valid diagram degree")
        if len(self.signs) != self.b - 1:
            raise InvalidForm("need exactly b - 1 signs")
        if any(s not in (1, -1) for s in self.signs):
            raise InvalidForm("signs must all be +1 or -1")
        t = self.signs
        n = len(t)
        if n >= 2 and t[-1] * t[-2] < 0:
            raise InvalidForm("last two signs must agree")
        for i in range(n - 2):
            if t[i] * t[i + 1] < 0 and t[i + 1] * t[i + 2] < 0:
                raise InvalidForm("two consecutive sign changes")

    def fraction(self) -> Fraction:
        return eval_cf(self.signs)

    def negated(self) -> "ConwayForm":
        return ConwayForm(tuple(-s for s in self.signs), self.b)

    def text(self) -> str:
        return "C(" + ",".join(str(s) for s in self.signs) + ")"


@dataclass(frozen=True)
class MinimalDiagram:
    form: ConwayForm
    b: int
    mirrored: bool


def minimal_diagram(r: Fraction) -> MinimalDiagram:
    """Smallest C(3, b) diagram of the knot S(r), r > 1.

    b - 1 is the smaller of the expansion lengths of r and of
    alpha/(alpha - beta); when the latter wins, its negated expansion is a
    diagram of the same knot and the mirrored flag records the detour.
    """
    if not (r.is_positive and r > 1):
        raise NotGreaterThanOne(f"{r} is not > 1")
    if r.num % 2 == 0:
        raise IsLink("links have no C(3, b) diagram (b would be divisible by 3)")
    own = regular_expansion(r)
    conj = regular_expansion(Fraction(r.num, r.num - r.den))
    if len(own) == len(conj):
        raise ChebknotError("expansion lengths can never agree for a knot")
    if len(own) < len(conj):
        form = ConwayForm(own.terms, len(own) + 1)
        mirrored = False
    else:
        form = ConwayForm(tuple(-t for t in conj.terms), len(conj) + 1)
        mirrored = True
    n_cross = crossing_number(r)
    if not (n_cross < form.b and 2 * form.b < 3 * n_cross):
        raise ChebknotError(f"diagram degree bound violated for {r}")
    return MinimalDiagram(form, form.b, mirrored)


def is_minimal_by_word(r: Fraction) -> bool:
    """Word-degree minimality test: the expansion of r itself is minimal
    exactly when its word has at least three more P letters than M letters."""
    w = pm_word(regular_expansion(r))
    s = w.letters
    if len(s) < 2 or s[0] != "P" or s[-1] != "P":
        raise NotPGPForm(f"{r} has word {s!r}, not of the form P...P")
    return w.degP >= w.degM + 3


def conway_reversal_check(f1: ConwayForm, f2: ConwayForm, n_cross: int) -> bool:
    """True when two minimal forms of the same knot agree, directly or after
    reversal with the sign (-1)^(n+1).

    The last sign of a one-regular sequence is (-1)^m with m the M-degree
    of its word, and m = n - N, so the relating sign collapses to the
    parity of the length alone; n_cross is validated against f1.
    """
    if len(f1.signs) != len(f2.signs):
        raise LengthMismatch("forms have different lengths")
    value = abs(eval_cf(f1.signs))
    if crossing_number(value) != n_cross:
        raise ChebknotError(
            f"form {f1.text()} has crossing number {crossing_number(value)}, not {n_cross}"
        )
    if f1.signs == f2.signs:
        return True
    n = len(f1.signs)
    flip = 1 if n % 2 else -1
    return f2.signs == tuple(flip * s for s in reversed(f1.signs))
