"""Classification of the harmonic knots (T_3(t), T_b(t), T_c(t)).

Every harmonic knot with pairwise coprime degrees reduces to a unique
canonical pair b' < c' < 2b' with b' + c' divisible by 3; the reduction
alternates mirror images, and the canonical knot's twist signs are
sign(sin(k * lambda * pi / b')) with c' = 2b' - 3*lambda.
"""

from math import gcd

from chebknot import HarmonicSpec, classify, eval_cf, harmonic_conway
from chebknot.errors import TrivialKnot

# A long reduction chain ending at the figure-eight knot.
for b, c in ((31, 43), (19, 31), (7, 19), (5, 7)):
    canon = classify(HarmonicSpec(3, b, c))
    print(
        f"H(3,{b:2d},{c:2d}) -> H(3,{canon.b_prime},{canon.c_prime})"
        f"  fraction {canon.fraction}  N={canon.crossing_number}"
        f"  mirror={canon.mirror}"
    )

# The torus knots appear as the pairs (3n+2, 3n+1); their canonical
# partners carry fraction (2n+1)/(2n), the mirror presentation.
print()
for n in (1, 2, 3):
    canon = classify(HarmonicSpec(3, 3 * n + 2, 3 * n + 1))
    print(f"H(3,{3 * n + 2},{3 * n + 1}): fraction {canon.fraction} -> torus T(2,{2 * n + 1})")

# lambda = 1 gives the all-plus form: consecutive Fibonacci fractions.
print()
for b in (4, 5, 7, 8):
    form = harmonic_conway(b, 1)
    print(f"b={b}: {form.text()} = {eval_cf(form.signs)}")

# A small atlas: every admissible pair up to 13, classified.
print()
print("atlas up to 13:")
for b in range(4, 14):
    if b % 3 == 0:
        continue
    for c in range(b + 1, 14):
        if c % 3 == 0 or gcd(b, c) != 1:
            continue
        try:
            canon = classify(HarmonicSpec(3, b, c))
        except TrivialKnot:
            print(f"  ({b:2d},{c:2d}) -> unknot")
            continue
        print(
            f"  ({b:2d},{c:2d}) -> ({canon.b_prime},{canon.c_prime})"
            f"  S({canon.fraction})  N={canon.crossing_number}"
        )
