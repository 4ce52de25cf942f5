"""Exact signs of sines and cosines at rational multiples of pi.

All crossing-sign logic in this package reduces to signs of sin(p*pi/q)
with integer p, q.  Evaluating these with integer arithmetic removes every
floating-point near-zero hazard from the combinatorial core.
"""

from __future__ import annotations


def sin_sign(p: int, q: int) -> int:
    """Sign of sin(p*pi/q) for integers p and q > 0 (0 when q divides p)."""
    if q <= 0:
        raise ValueError("q must be positive")
    r = p % (2 * q)
    if r % q == 0:
        return 0
    return 1 if r < q else -1


def cos_sign(p: int, q: int) -> int:
    """Sign of cos(p*pi/q) for integers p and q > 0."""
    # cos(x) = sin(pi/2 - x), so cos(p*pi/q) = sin((q - 2p) * pi / (2q)).
    return sin_sign(q - 2 * p, 2 * q)
