"""Minimal Chebyshev diagrams C(3, b) for two-bridge knots.

A knot S(alpha/beta) with crossing number N always fits on the curve
x = T_3(t), y = T_b(t) for some N < b < 3N/2.  The smallest such b comes
from comparing the expansion of alpha/beta with that of
alpha/(alpha - beta): the shorter one wins, and the loser's expansion is
negated to stay on the same knot.
"""

from pathlib import Path

from chebknot import (
    Fraction,
    crossing_number,
    is_minimal_by_word,
    minimal_diagram,
    render_diagram_svg,
)
from chebknot.bridge import stevedore_fraction, torus_fraction, twist_fraction

for label, r in [
    ("torus T(2,7)   ", torus_fraction(3)),
    ("twist knot 5_2 ", twist_fraction(3)),
    ("stevedore 6_1  ", stevedore_fraction(1)),
    ("8-crossing     ", Fraction(25, 7)),
]:
    md = minimal_diagram(r)
    N = crossing_number(r)
    print(
        f"{label} S({r}):  N={N}  b={md.b}  (bound {N} < {md.b} < {3 * N / 2:.1f})"
        f"  mirrored={md.mirrored}"
    )
    print(f"    {md.form.text()}")

# The minimality of the fraction's own expansion can be read off its word:
# it is minimal exactly when the P-degree exceeds the M-degree by >= 3.
print()
for text in ("9/7", "9/2"):
    r = Fraction.parse(text)
    print(f"expansion of {r} is minimal by word test: {is_minimal_by_word(r)}")

# Render the 6_1 diagram: the under-strand is broken at each undercrossing.
out = Path(__file__).with_name("six_one_diagram.svg")
out.write_text(render_diagram_svg(minimal_diagram(Fraction(9, 2)).form))
print(f"\nwrote {out}")
