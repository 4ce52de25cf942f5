"""Exact continued-fraction engine.

Everything here is pure integer arithmetic: classical expansions with
positive quotients, the unique one-regular expansion into +-1 terms, the
two-letter monoid words that encode those expansions, and their 2x2 integer
matrix representation.

A word is spelled over the letters P and M, acting on rationals as the
Moebius maps P: x -> 1 + 1/x and M: x -> 1/(1 + x).  Words ending in P,
applied to the formal point 1/0, hit every positive rational exactly once;
the expansion, the word, and the matrix are three views of the same object.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Sequence

from .errors import (
    ChebknotError,
    DivisionByZeroTail,
    EmptySequence,
    NonPositiveInput,
    NotGreaterThanOne,
    NotOneRegular,
    NotPGPForm,
    WrongLeadingSigns,
    ZeroQuotient,
)


@dataclass(frozen=True)
class Fraction:
    """Reduced rational num/den with the sign carried by the denominator.

    The mirror image of the two-bridge knot S(a/b) is S(a/-b), so a
    negative fraction keeps num > 0 and stores the sign in den.
    """

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den == 0:
            raise ChebknotError("fraction with zero denominator")
        if num < 0:
            num, den = -num, -den
        if num == 0:
            den = 1
        g = gcd(num, abs(den))
        if g > 1:
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        """Parse 'a/b', '-a/b' (minus applied to b) or a bare integer."""
        s = text.strip()
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        if "/" in s:
            a_str, b_str = s.split("/", 1)
            num, den = int(a_str), int(b_str)
        else:
            num, den = int(s), 1
        if neg:
            den = -den
        return cls(num, den)

    # -- ordering (exact cross-multiplication) --------------------------
    def _cmp(self, other: "Fraction | int") -> int:
        if isinstance(other, int):
            other = Fraction(other)
        lhs = self.num * other.den
        rhs = other.num * self.den
        if self.den * other.den < 0:
            lhs, rhs = rhs, lhs
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other: "Fraction | int") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "Fraction | int") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "Fraction | int") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "Fraction | int") -> bool:
        return self._cmp(other) >= 0

    # -- structure -------------------------------------------------------
    @property
    def is_positive(self) -> bool:
        return self.num > 0 and self.den > 0

    @property
    def is_knot(self) -> bool:
        """Odd numerator: a knot.  Even numerator: a two-component link."""
        return self.num % 2 == 1

    def mirror(self) -> "Fraction":
        return Fraction(self.num, -self.den)

    def __abs__(self) -> "Fraction":
        return Fraction(self.num, abs(self.den))

    def __float__(self) -> float:
        return self.num / self.den

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def _validate_one_regular(terms: Sequence[int]) -> None:
    n = len(terms)
    if n == 0:
        raise EmptySequence("empty sign sequence")
    if any(t not in (1, -1) for t in terms):
        raise NotOneRegular("terms must all be +1 or -1")
    if n >= 2 and terms[-1] * terms[-2] < 0:
        raise NotOneRegular("last two terms must have equal sign")
    for i in range(n - 2):
        if terms[i] * terms[i + 1] < 0 and terms[i + 1] * terms[i + 2] < 0:
            raise NotOneRegular("two consecutive sign changes")


@dataclass(frozen=True)
class RegularCF:
    """One-regular continued fraction with all terms +-1."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        _validate_one_regular(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def sign_changes(self) -> int:
        t = self.terms
        return sum(1 for i in range(len(t) - 1) if t[i] * t[i + 1] < 0)

    def fraction(self) -> Fraction:
        return eval_cf(self.terms)


@dataclass(frozen=True)
class ClassicalCF:
    """Continued fraction with strictly positive integer quotients."""

    quotients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "quotients", tuple(self.quotients))
        if not self.quotients:
            raise EmptySequence("empty quotient sequence")
        if any(q <= 0 for q in self.quotients):
            raise ZeroQuotient("classical quotients must be positive")

    def fraction(self) -> Fraction:
        return eval_cf(self.quotients)


def eval_cf(quotients: Sequence[int]) -> Fraction:
    """Evaluate [q1, q2, ..., qn] = q1 + 1/(q2 + 1/(... + 1/qn)) exactly."""
    if not quotients:
        raise EmptySequence("cannot evaluate an empty continued fraction")
    if any(q == 0 for q in quotients):
        raise ZeroQuotient("continued fraction with a zero quotient")
    p, q = quotients[-1], 1
    for a in reversed(quotients[:-1]):
        if p == 0:
            raise DivisionByZeroTail("tail evaluates to zero where inverted")
        p, q = a * p + q, p
    return Fraction(p, q)


def eval_cf_projective(quotients: Sequence[int]) -> tuple[int, int]:
    """Evaluate a continued fraction as a projective pair (p, q).

    Unlike eval_cf this tolerates zero tails: an intermediate 0 simply
    passes through as the point (0, 1) and inverts to (1, 0).  The result
    is a coprime pair; q = 0 means the value is infinite.
    """
    if not quotients:
        raise EmptySequence("cannot evaluate an empty continued fraction")
    p, q = quotients[-1], 1
    for a in reversed(quotients[:-1]):
        p, q = a * p + q, p
    return p, q


def classical_expansion(r: Fraction) -> ClassicalCF:
    """Positive-quotient expansion of r > 1, last quotient >= 2 by default."""
    if not (r.is_positive and r > 1):
        raise NotGreaterThanOne(f"{r} is not > 1")
    a, b = r.num, r.den
    out = []
    while b:
        q, rem = divmod(a, b)
        out.append(q)
        a, b = b, rem
    return ClassicalCF(tuple(out))


def crossing_number(r: Fraction) -> int:
    """Sum of the classical quotients of r > 1: the knot crossing number."""
    return sum(classical_expansion(r).quotients)


def regular_expansion(r: Fraction) -> RegularCF:
    """The unique one-regular +-1 expansion of a positive rational.

    Iterative height descent: a P step prepends +1 while (a, b) becomes
    (b, a-b); an M step prepends +1, -1 and negates the remaining tail,
    tracked here by the running sign s.
    """
    if not r.is_positive:
        raise NonPositiveInput(f"{r} is not a positive fraction")
    a, b = r.num, r.den
    out: list[int] = []
    s = 1
    while not (a == 1 and b == 1):
        if a > b:
            out.append(s)
            a, b = b, a - b
        else:
            out.append(s)
            out.append(-s)
            s = -s
            a, b = b - a, a
    out.append(s)
    return RegularCF(tuple(out))


def expansion_length(r: Fraction) -> int:
    """Length of the one-regular expansion; invariant under mirroring."""
    return len(regular_expansion(abs(r)))


def cn_from_regular(cf: RegularCF) -> int:
    """Crossing number read off a one-regular expansion with leading +1, +1.

    Equals the term count minus the number of sign changes.
    """
    t = cf.terms
    if len(t) < 2 or t[0] != 1 or t[1] != 1:
        raise WrongLeadingSigns("expansion must start with two +1 terms")
    return len(t) - cf.sign_changes


# ---------------------------------------------------------------------------
# Monoid words and matrices
# ---------------------------------------------------------------------------

_SWAP = str.maketrans("PM", "MP")


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix, row-major."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)


P_MATRIX = Mat2(1, 1, 1, 0)
M_MATRIX = Mat2(0, 1, 1, 1)


@dataclass(frozen=True)
class PMWord:
    """Word over the alphabet {P, M}, spelled as a string like 'PPMPPP'."""

    letters: str

    def __post_init__(self) -> None:
        if any(ch not in "PM" for ch in self.letters):
            raise ChebknotError(f"invalid word letters: {self.letters!r}")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def degP(self) -> int:
        return self.letters.count("P")

    @property
    def degM(self) -> int:
        return self.letters.count("M")

    def reversed(self) -> "PMWord":
        return PMWord(self.letters[::-1])

    def swapped(self) -> "PMWord":
        """Exchange the two letters (P <-> M) throughout."""
        return PMWord(self.letters.translate(_SWAP))

    @property
    def is_palindromic(self) -> bool:
        return self.letters == self.letters[::-1]

    def matrix(self) -> Mat2:
        return word_to_matrix(self)

    def fraction(self) -> Fraction:
        """Value of the word at the formal point 1/0 (only sound in G.P)."""
        num, den = self.matrix().apply(1, 0)
        return Fraction(num, den)

    def terms(self) -> tuple[int, ...]:
        """The +-1 sequence this word spells: P gives one term, M two."""
        out: list[int] = []
        s = 1
        for ch in self.letters:
            if ch == "P":
                out.append(s)
            else:
                out.append(s)
                out.append(-s)
                s = -s
        return tuple(out)


def word_to_matrix(w: PMWord) -> Mat2:
    """Ordered product of the letter matrices P = [[1,1],[1,0]], M = [[0,1],[1,1]]."""
    a, b, c, d = 1, 0, 0, 1
    for ch in w.letters:
        if ch == "P":
            a, b, c, d = a + b, a, c + d, c
        else:
            a, b, c, d = b, a + b, d, c + d
    return Mat2(a, b, c, d)


def pm_word(cf: RegularCF) -> PMWord:
    """Compress a one-regular +-1 expansion into its monoid word.

    Each sign-changing couple becomes an M, every remaining term a P, so
    the length n and crossing number satisfy n = p + 2m and cn = p + m.
    Words evaluate to positive rationals, so the expansion must lead with
    +1 (negated expansions have no word).
    """
    t = cf.terms
    if t[0] != 1:
        raise NotOneRegular("only positive-valued expansions have a word")
    letters: list[str] = []
    i = 0
    while i < len(t):
        if i + 1 < len(t) and t[i] * t[i + 1] < 0:
            letters.append("M")
            i += 2
        else:
            letters.append("P")
            i += 1
    return PMWord("".join(letters))


def _pgp_inner(r: Fraction) -> PMWord:
    """Inner word G with r = P G P(1/0); requires r > 1."""
    w = pm_word(regular_expansion(r))
    s = w.letters
    if len(s) < 2 or s[0] != "P" or s[-1] != "P":
        raise NotPGPForm(f"{r} has word {s!r}, not of the form P...P")
    return PMWord(s[1:-1])


class ConjugateFractions(NamedTuple):
    """The three word-conjugate fractions of r = alpha/beta > 1."""

    beta_over_alpha: Fraction
    alpha_over_alpha_minus_beta: Fraction
    alpha_over_beta_prime: Fraction


def conjugate_fractions(r: Fraction) -> ConjugateFractions:
    """Fractions of the transformed words M*swap(G)*P, P*swap(G)*P, P*rev(G)*P.

    Writing r = P G P(1/0) with alpha > beta > 0, these evaluate to
    beta/alpha, alpha/(alpha-beta) and alpha/beta' where beta * beta' is
    congruent to (-1)^(N-1) mod alpha, N the crossing number.
    """
    g = _pgp_inner(r)
    ghat = g.swapped().letters
    gbar = g.reversed().letters
    return ConjugateFractions(
        PMWord("M" + ghat + "P").fraction(),
        PMWord("P" + ghat + "P").fraction(),
        PMWord("P" + gbar + "P").fraction(),
    )


def parity_class(cf: RegularCF) -> int:
    """Length of the expansion mod 3, which encodes the parities of num/den.

    n = 2 mod 3 forces an even numerator (a link); n = 0 mod 3 an even
    denominator; n = 1 mod 3 both odd.  The correspondence is checked.
    """
    r = cf.fraction()
    if not r.is_positive:
        raise NonPositiveInput("expansion must evaluate to a positive fraction")
    residue = len(cf) % 3
    expected = {
        2: (0, 1),
        0: (1, 0),
        1: (1, 1),
    }[residue]
    if (r.num % 2, r.den % 2) != expected:
        raise ChebknotError(
            f"parity correspondence violated for {r} with n={len(cf)}"
        )
    return residue


@dataclass(frozen=True)
class PalindromyReport:
    """Word palindromy and the chirality facts it encodes."""

    g_palindromic: bool
    beta_sq_mod_alpha: int
    amphicheiral: bool
    two_component: bool


def palindromy_report(r: Fraction) -> PalindromyReport:
    """Palindromy of the inner word G of r = P G P(1/0), alpha > beta > 0.

    G is palindromic exactly when beta^2 = (-1)^(N-1) mod alpha; the knot
    is amphicheiral exactly when beta^2 = -1 mod alpha.
    """
    g = _pgp_inner(r)
    alpha, beta = r.num, r.den
    bsq = (beta * beta) % alpha
    pal = g.is_palindromic
    n_cross = crossing_number(r)
    expected = 1 % alpha if n_cross % 2 == 1 else (alpha - 1) % alpha
    if pal != (bsq == expected):
        raise ChebknotError(f"palindromy criterion violated for {r}")
    return PalindromyReport(
        g_palindromic=pal,
        beta_sq_mod_alpha=bsq,
        amphicheiral=(bsq == (alpha - 1) % alpha and alpha > 2),
        two_component=(alpha % 2 == 0),
    )


def fibonacci(n: int) -> int:
    """F_0 = 0, F_1 = 1, F_{n+1} = F_n + F_{n-1}."""
    if n < 0:
        raise ChebknotError("negative Fibonacci index")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a

