"""Explicit polynomial parametrizations (T_3(t), T_b(t), C(t)).

The Gauss sequence of the minimal diagram dictates where the height
polynomial must be positive or negative; placing one root in each
sign-change gap gives deg C = 3N - b, so the total degree budget of a
crossing-number-N knot is always b + deg C = 3N.
"""

from chebknot import (
    Fraction,
    count_sign_changes,
    gauss_sequence,
    minimal_diagram,
    parametrization,
)

# The 3-twist knot S(7/2): seven-crossing diagram degree 7, height degree 8.
r = Fraction(7, 2)
p = parametrization(r)
print(f"S({r}):  x = T_3(t),  y = T_{p.b}(t),  z of degree {p.height.degree}")
print(f"  z = {p.height.factored_text()}")
print(f"  b + deg z = {p.b + p.height.degree} = 3N with N = {p.crossing_number}")

# The Gauss sequence behind it: over (+1) and under (-1) passages in
# parameter order, whose sign changes count the roots of z.
md = minimal_diagram(r)
g = gauss_sequence(md.form)
print(f"  gauss sequence   {list(g.signs)}")
print(f"  sign changes     {count_sign_changes(g)}")

# An amphicheiral knot (here the figure-eight S(5/3)) gets an odd diagram
# degree and an odd height polynomial: the curve is centrally symmetric.
print()
r = Fraction(5, 3)
p = parametrization(r)
print(f"figure-eight S({r}):  b = {p.b}, deg z = {p.height.degree}")
print(f"  odd symmetry: {p.height.is_odd_symmetric}")
print(f"  z = {p.height.factored_text(4)}")

# JSON record, as emitted by the command line tool.
print()
print("json record:", p.to_json())
