"""Harmonic knots (T_a(t), T_b(t), T_c(t)) and their classification for a = 3.

With b not divisible by 3, c = 2b - 3*lambda and gcd(lambda, b) = 1, the
diagram of (T_3, T_b, T_c) carries the Conway form e_k = sign(sin(k*theta)),
theta = lambda*pi/b, whose fraction has crossing number b - lambda.  Every
harmonic knot reduces, by moves on (b, c) that each flip the mirror, to a
unique canonical pair b' < c' < 2b' with b' + c' divisible by 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .bridge import TwoBridgeKnot
from .contfrac import Fraction, eval_cf
from .diagram import ConwayForm
from .errors import (
    ADifferentFrom3,
    BadLambda,
    BDivisibleBy3,
    ChebknotError,
    IndexOutOfRange,
    IsLink,
    NotCoprime,
    NotPairwiseCoprime,
    TrivialKnot,
)
from .trig import sin_sign


@dataclass(frozen=True)
class HarmonicSpec:
    """Degrees (a, b, c) of a harmonic curve; must be pairwise coprime."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 1:
            raise ChebknotError("degrees must be positive")
        if (
            gcd(self.a, self.b) != 1
            or gcd(self.a, self.c) != 1
            or gcd(self.b, self.c) != 1
        ):
            raise NotPairwiseCoprime(f"({self.a}, {self.b}, {self.c})")


def harmonic_conway(b: int, lam: int) -> ConwayForm:
    """Conway form of the harmonic knot with diagram degree b and twist
    parameter lam, i.e. height degree c = 2b - 3*lam.

    The k-th sign is sign(sin(k * lam * pi / b)), evaluated exactly; the
    sequence is one-regular with lam - 1 sign changes, so the crossing
    number is b - lam.
    """
    if b % 3 == 0:
        raise BDivisibleBy3(f"b = {b} is divisible by 3")
    if not (0 < 2 * lam < b) or gcd(lam, b) != 1:
        raise BadLambda(f"lambda = {lam} invalid for b = {b}")
    signs = tuple(sin_sign(k * lam, b) for k in range(1, b))
    return ConwayForm(signs, b)


def crossing_sign_closed_form(b: int, lam: int, point: str, k: int) -> int:
    """Sign of the right-twist determinant D at one crossing of the
    harmonic diagram with b = 3n + 1, by the closed sine formulas.

    The crossings with the i-th, (i+1)-th, (i+2)-th largest x, i = 3k + 1,
    are labelled A_k, B_k, C_k.
    """
    if b % 3 != 1:
        raise BDivisibleBy3(f"closed forms require b = 3n + 1, got {b}")
    if gcd(lam, b) != 1:
        raise BadLambda(f"lambda = {lam} shares a factor with b = {b}")
    n = (b - 1) // 3
    if not 0 <= k < n:
        raise IndexOutOfRange(f"k = {k} outside 0..{n - 1}")
    if point == "A":
        return (-1) ** k * sin_sign((3 * k + 1) * lam, b)
    if point == "B":
        return (-1) ** (k + 1) * sin_sign((3 * k + 2) * lam, b)
    if point == "C":
        return (-1) ** k * sin_sign((3 * k + 3) * lam, b)
    raise IndexOutOfRange(f"unknown point label {point!r}")


def closed_form_crossing_indices(b: int, point: str, k: int) -> tuple[int, int]:
    """(k_index, h_index) of the labelled crossing in the (h, k) scheme."""
    n = (b - 1) // 3
    if point == "A":
        return (1, n - k)
    if point == "B":
        return (1, n + k + 1)
    if point == "C":
        return (2, k + 1)
    raise IndexOutOfRange(f"unknown point label {point!r}")


def mirror_equivalent_c(a: int, b: int, c: int) -> int | None:
    """Smallest positive c' < c with c' = c mod 2a and c' = -c mod 2b.

    The curve with height degree c' is the mirror image of the one with
    height degree c.  Returns None when no smaller such degree exists.
    """
    HarmonicSpec(a, b, c)  # validates pairwise coprimality
    base = c % (2 * a)
    target = (-c) % (2 * b)
    sol = None
    for t in range(b):
        cand = base + 2 * a * t
        if cand % (2 * b) == target:
            sol = cand % (2 * a * b)
            if sol == 0:
                sol = 2 * a * b
            break
    if sol is None:
        return None
    return sol if 0 < sol < c else None


@dataclass(frozen=True)
class CanonicalHarmonic:
    """Canonical pair (b', c') of a harmonic knot, with mirror parity.

    mirror is True when the input curve is the mirror image of the
    canonical one (irrelevant when the knot is amphicheiral).
    """

    b_prime: int
    c_prime: int
    mirror: bool
    fraction: Fraction
    crossing_number: int

    @property
    def amphicheiral(self) -> bool:
        a, b = self.fraction.num, self.fraction.den
        return (b * b + 1) % a == 0

    def conway_form(self) -> ConwayForm:
        return harmonic_conway(self.b_prime, (2 * self.b_prime - self.c_prime) // 3)


def classify(spec: HarmonicSpec) -> CanonicalHarmonic:
    """Reduce (b, c) to the unique canonical pair b' < c' < 2b',
    b' + c' = 0 mod 3, flipping the mirror parity at every step.

    Swapping b and c mirrors the curve; when b = c mod 3 the height degree
    drops to |2b - c|, and when c > 2b to |4b - c|, each a mirror image.
    """
    if spec.a != 3:
        raise ADifferentFrom3("classification is implemented for a = 3")
    if gcd(spec.b, 3) != 1 or gcd(spec.c, 3) != 1 or gcd(spec.b, spec.c) != 1:
        raise NotCoprime(f"({spec.b}, {spec.c}) not admissible with a = 3")
    b, c = spec.b, spec.c
    mirror = False
    for _ in range(10_000):
        if b == 1 or c == 1:
            raise TrivialKnot(f"H(3, {spec.b}, {spec.c}) is the unknot")
        if c < b:
            b, c = c, b
            mirror = not mirror
        elif b % 3 == c % 3:
            c = abs(2 * b - c)
            mirror = not mirror
        elif c > 2 * b:
            c = abs(4 * b - c)
            mirror = not mirror
        else:
            break
    else:
        raise ChebknotError("canonical reduction did not terminate")
    lam = (2 * b - c) // 3
    form = harmonic_conway(b, lam)
    frac = eval_cf(form.signs)
    n_cross = b - lam
    result = CanonicalHarmonic(b, c, mirror, frac, n_cross)
    if 3 * n_cross != b + c:
        raise ChebknotError("crossing number identity violated")
    return result


def is_harmonic_candidate(k: TwoBridgeKnot) -> bool:
    """Necessary residue condition: beta^2 = +-1 mod alpha.

    False certifies that the knot is not harmonic with a = 3; True only
    admits it as a candidate.
    """
    if not k.is_knot:
        raise IsLink("candidates are knots; links have even alpha")
    r = (k.beta * k.beta) % k.alpha
    return r == 1 % k.alpha or r == (k.alpha - 1) % k.alpha
