"""Numeric ground truth for explicit parametrized curves.

Given any height function z over the diagram x = T_a(t), y = T_b(t), this
module decides every crossing from the closed-form parameter pairs: no
root finding, no intersection search.  Chebyshev heights are resolved with
exact integer trigonometry; arbitrary heights in floating point, guarded
by a separation floor.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable

from .bridge import TwoBridgeKnot, canonicalize, equivalent, Equivalence
from .contfrac import eval_cf_projective, Fraction
from .diagram import enumerate_crossings
from .errors import AmbiguousCrossing, ChebknotError, NotTwoBridge
from .heights import Parametrization
from .trig import sin_sign

SEPARATION_FLOOR_ENV = "CHEBKNOT_SEPARATION_FLOOR"
DEFAULT_SEPARATION_FLOOR = 1e-9


def _resolve_floor(floor: float | None) -> float:
    if floor is not None:
        return floor
    raw = os.environ.get(SEPARATION_FLOOR_ENV)
    return float(raw) if raw else DEFAULT_SEPARATION_FLOOR


@dataclass(frozen=True)
class ChebyshevHeight:
    """Height z(t) = sign * T_c(t); crossing signs are computed exactly."""

    c: int
    sign: int = 1

    def __call__(self, t: float) -> float:
        return self.sign * math.cos(self.c * math.acos(max(-1.0, min(1.0, t))))

    def zdiff_sign(self, a: int, b: int, h: int, k: int) -> int:
        # T_c(t) - T_c(s) = -2 sin(c*h*pi/b) sin(c*k*pi/a)
        return -self.sign * sin_sign(self.c * h, b) * sin_sign(self.c * k, a)

    def label(self) -> str:
        return f"T_{self.c}" if self.sign > 0 else f"-T_{self.c}"


@dataclass(frozen=True)
class MeasuredCrossing:
    """One crossing with its measured strand order and twist sign."""

    h: int
    k: int
    t: float
    s: float
    zdiff_sign: int
    xy_sign: int
    d_sign: int
    conway_sign: int
    separation: float

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "k": self.k,
            "t": self.t,
            "s": self.s,
            "D_sign": self.d_sign,
            "conway_sign": self.conway_sign,
        }


@dataclass(frozen=True)
class CurveSample:
    """Measured crossing data of one explicit curve."""

    a: int
    b: int
    height_label: str
    crossings: tuple[MeasuredCrossing, ...]

    @property
    def conway_signs(self) -> tuple[int, ...]:
        return tuple(c.conway_sign for c in self.crossings)

    @property
    def min_separation(self) -> float:
        return min(c.separation for c in self.crossings)

    def to_report(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "z": self.height_label,
            "crossings": [c.to_json() for c in self.crossings],
        }


def measure_crossings(
    a: int,
    b: int,
    z: Callable[[float], float],
    floor: float | None = None,
) -> CurveSample:
    """Measure every crossing of (T_a(t), T_b(t), z(t)).

    The crossing with the i-th largest x gets the twist sign
    (-1)^(i+1) * sign(D) with D = (z(t) - z(s)) x'(t) y'(t).
    """
    floor = _resolve_floor(floor)
    points = enumerate_crossings(a, b)
    measured = []
    for i, p in enumerate(points):
        zt, zs = z(p.t), z(p.s)
        separation = abs(zt - zs)
        if isinstance(z, ChebyshevHeight):
            zdiff = z.zdiff_sign(a, b, p.h, p.k)
            if zdiff == 0:
                raise AmbiguousCrossing(
                    f"height degree shares a factor with ({a}, {b}) at crossing {(p.h, p.k)}"
                )
        else:
            if separation < floor:
                raise AmbiguousCrossing(
                    f"|z(t)-z(s)| = {separation:.3e} below floor {floor:.3e} "
                    f"at crossing {(p.h, p.k)}"
                )
            zdiff = 1 if zt > zs else -1
        d = zdiff * p.xy_sign
        conway = d if i % 2 == 0 else -d
        measured.append(
            MeasuredCrossing(p.h, p.k, p.t, p.s, zdiff, p.xy_sign, d, conway, separation)
        )
    label = z.label() if isinstance(z, ChebyshevHeight) else getattr(z, "__name__", "z")
    return CurveSample(a, b, label, tuple(measured))


def recover_knot(sample: CurveSample) -> TwoBridgeKnot:
    """Canonical two-bridge knot of a measured C(3, b) diagram.

    The twist signs are evaluated as a continued fraction projectively, so
    diagrams that are not in one-regular form (non-canonical harmonic
    degrees) still recover their knot.
    """
    if sample.a != 3:
        raise NotTwoBridge("diagram recovery requires a = 3")
    p, q = eval_cf_projective(sample.conway_signs)
    if q == 0 or abs(p) <= 1:
        raise ChebknotError(
            f"measured signs evaluate to the degenerate point ({p}, {q})"
        )
    frac = Fraction(p, q)
    return canonicalize(frac.num, frac.den)


def verify_parametrization(
    r: Fraction,
    p: Parametrization,
    floor: float | None = None,
) -> bool:
    """End-to-end check: the constructed curve reproduces the input knot.

    The diagram emitted for r represents S(r) itself even when the
    mirrored flag is set (the negated conjugate expansion evaluates to an
    equivalent fraction), so the recovered knot must compare as the same.
    """
    sample = measure_crossings(3, p.b, p.height, floor=floor)
    recovered = recover_knot(sample)
    expected = canonicalize(r.num, r.den)
    return equivalent(recovered, expected) is Equivalence.SAME
