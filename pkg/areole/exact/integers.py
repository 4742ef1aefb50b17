#!/usr/bin/python3
"""
Integer number theory helpers.
"""
from typing import Tuple
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex


def gcd_bezout(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclid: return (g, u, v) with a*u + b*v = g = gcd(a, b).

    g is always nonnegative and gcd(0, 0) = 0 with u = v = 0.

    Args:
        a (int): First integer.
        b (int): Second integer.

    Returns:
        Tuple[int, int, int]: The gcd and a Bezout pair.
    """
    if a == 0 and b == 0:
        return 0, 0, 0

    u, v, g = (int(x) for x in igcdex(a, b))
    if g < 0:
        return -g, -u, -v
    return g, u, v
