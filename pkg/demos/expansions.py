"""Continued fractions with +-1 terms, their words, and their matrices.

Every positive rational has exactly one expansion into +1/-1 terms with no
two consecutive sign changes.  This script walks through the expansions of
9/7 and 9/2, the two-letter words that encode them, and the conjugate
fractions read off the transformed words.
"""

from chebknot import (
    Fraction,
    cn_from_regular,
    conjugate_fractions,
    crossing_number,
    eval_cf,
    pm_word,
    regular_expansion,
)

# The knot S(9/7) is the mirror image of S(9/2); both fractions have
# crossing number 6, but their expansions have different lengths.
for text in ("9/7", "9/2"):
    r = Fraction.parse(text)
    cf = regular_expansion(r)
    word = pm_word(cf)
    print(f"{r}:")
    print(f"  expansion        {list(cf.terms)}")
    print(f"  length           {len(cf)}")
    print(f"  crossing number  {cn_from_regular(cf)} (classical: {crossing_number(r)})")
    print(f"  word             {word.letters}  (P-degree {word.degP}, M-degree {word.degM})")
    print(f"  round trip       {eval_cf(cf.terms)}")
    print()

# The word of a fraction > 1 starts and ends with P.  Swapping the letters
# or reversing the word produces the three companion fractions: beta/alpha,
# alpha/(alpha - beta), and alpha/beta' with beta * beta' = +-1 mod alpha.
r = Fraction(9, 7)
conj = conjugate_fractions(r)
print(f"companions of {r}:")
print(f"  beta/alpha              {conj.beta_over_alpha}")
print(f"  alpha/(alpha - beta)    {conj.alpha_over_alpha_minus_beta}")
print(f"  alpha/beta'             {conj.alpha_over_beta_prime}")

# Their expansion lengths tie together through the crossing number N:
# len(beta/alpha) + len(alpha/beta) = 3N - 1, and the complementary
# fraction satisfies len(alpha/(alpha-beta)) + len(alpha/beta) = 3N - 2.
n = len(regular_expansion(r))
n_down = len(regular_expansion(conj.beta_over_alpha))
n_comp = len(regular_expansion(conj.alpha_over_alpha_minus_beta))
N = crossing_number(r)
print(f"  lengths: {n_down} + {n} = {3 * N - 1} = 3N-1,  {n_comp} + {n} = {3 * N - 2} = 3N-2")
