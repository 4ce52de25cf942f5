"""Gauss sequences and height polynomials for C(3, b) diagrams.

A Conway form prescribes, at every crossing, which strand must pass over;
the Gauss sequence lists the resulting over/under signs at all 2(b-1)
crossing parameters.  A height polynomial whose sign agrees with the Gauss
sign at every parameter turns the diagram into an embedded space curve
(T_3(t), T_b(t), C(t)); one root per sign-change gap suffices, so
deg C equals the number of sign changes and b + deg C = 3N, with N the
crossing number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contfrac import Fraction, crossing_number
from .diagram import ConwayForm, MinimalDiagram, enumerate_crossings, minimal_diagram
from .errors import ChebknotError, EmptySequence, IsLink


@dataclass(frozen=True)
class GaussSequence:
    """Over/under signs (+1 over, -1 under) at the crossing parameters,
    listed from the largest parameter to the smallest."""

    events: tuple[tuple[float, int], ...]

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(g for _, g in self.events)

    @property
    def parameters(self) -> tuple[float, ...]:
        return tuple(p for p, _ in self.events)

    def __len__(self) -> int:
        return len(self.events)


def gauss_sequence(form: ConwayForm) -> GaussSequence:
    """Gauss sequence forced on the diagram C(3, b) by a Conway form.

    The twist sign at decreasing-x position i determines the required sign
    of z(t) - z(s) at that crossing through the right-twist criterion
    D = (z(t) - z(s)) x'(t) y'(t) > 0.
    """
    crossings = enumerate_crossings(3, form.b)
    keyed: list[tuple[int, float, int]] = []
    for i, c in enumerate(crossings):
        d = form.signs[i] if i % 2 == 0 else -form.signs[i]
        zdiff = d * c.xy_sign
        keyed.append((c.m_t, c.t, zdiff))
        keyed.append((c.m_s, c.s, -zdiff))
    keyed.sort(key=lambda e: e[0])  # increasing m is decreasing parameter
    return GaussSequence(tuple((p, g) for _, p, g in keyed))


def count_sign_changes(g: GaussSequence) -> int:
    s = g.signs
    return sum(1 for i in range(len(s) - 1) if s[i] * s[i + 1] < 0)


@dataclass(frozen=True)
class HeightPolynomial:
    """Real polynomial stored as leading sign times a product of (t - r)."""

    roots: tuple[float, ...]
    leading_sign: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "roots", tuple(sorted(self.roots)))
        if self.leading_sign not in (1, -1):
            raise ChebknotError("leading sign must be +1 or -1")

    @property
    def degree(self) -> int:
        return len(self.roots)

    def __call__(self, t: float) -> float:
        v = float(self.leading_sign)
        for r in self.roots:
            v *= t - r
        return v

    @property
    def is_odd_symmetric(self) -> bool:
        """Root multiset symmetric about 0, with 0 a root iff the degree
        is odd; such a product is an odd polynomial."""
        zeros = sum(1 for r in self.roots if r == 0.0)
        if zeros != self.degree % 2:
            return False
        nonzero = sorted(r for r in self.roots if r != 0.0)
        return all(nonzero[i] == -nonzero[-1 - i] for i in range(len(nonzero) // 2 + len(nonzero) % 2))

    def factored_text(self, digits: int = 6) -> str:
        parts = []
        for r in self.roots:
            if r == 0.0:
                parts.append("t")
            elif r < 0:
                parts.append(f"(t+{-r:.{digits}g})")
            else:
                parts.append(f"(t-{r:.{digits}g})")
        body = "".join(parts) if parts else "1"
        return body if self.leading_sign > 0 else "-" + body


def build_height(g: GaussSequence, amphicheiral: bool = False) -> HeightPolynomial:
    """Height polynomial with one root per Gauss sign change.

    Roots sit at gap midpoints, so the sign at every crossing parameter
    matches the Gauss sign; the leading sign is anchored at the event with
    the largest parameter.  For amphicheiral inputs the events are
    symmetric and the Gauss signs odd, which makes the root set symmetric
    about 0 and the polynomial odd.
    """
    if not g.events:
        raise EmptySequence("empty Gauss sequence")
    events = g.events  # decreasing parameter
    roots = [
        (events[i][0] + events[i + 1][0]) / 2.0
        for i in range(len(events) - 1)
        if events[i][1] * events[i + 1][1] < 0
    ]
    poly = HeightPolynomial(tuple(roots), events[0][1])
    if amphicheiral:
        params = g.parameters
        odd = all(
            params[i] == -params[-1 - i] and g.signs[i] == -g.signs[-1 - i]
            for i in range(len(params))
        )
        if not (odd and poly.is_odd_symmetric):
            raise ChebknotError("amphicheiral input did not give an odd height")
    return poly


@dataclass(frozen=True)
class Parametrization:
    """Space-curve presentation (T_3(t), T_b(t), C(t)) of a two-bridge knot."""

    b: int
    height: HeightPolynomial
    crossing_number: int
    form: ConwayForm
    mirrored: bool

    @property
    def a(self) -> int:
        return 3

    def to_json(self) -> dict:
        return {
            "a": 3,
            "b": self.b,
            "z_roots": list(self.height.roots),
            "z_leading_sign": self.height.leading_sign,
            "N": self.crossing_number,
        }


def parametrization(r: Fraction) -> Parametrization:
    """Minimal diagram, Gauss sequence and height polynomial for S(r).

    The degrees always satisfy b + deg C = 3N.
    """
    if r.is_positive and not r.is_knot:
        raise IsLink(f"{r} defines a two-component link")
    md: MinimalDiagram = minimal_diagram(r)
    g = gauss_sequence(md.form)
    alpha, beta = r.num, r.den
    amph = (beta * beta + 1) % alpha == 0
    height = build_height(g, amphicheiral=amph)
    n_cross = crossing_number(r)
    if md.b + height.degree != 3 * n_cross:
        raise ChebknotError(f"degree identity violated for {r}")
    return Parametrization(md.b, height, n_cross, md.form, md.mirrored)
