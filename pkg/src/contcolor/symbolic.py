"""Symbol windows of points in subshift presentations.

Point j of an orbit with word w is sigma^j(w^Z).  A connector with middle u
between words v and w is the point v^{-inf} . u w^{inf}, with u starting at
coordinate 0.
"""

from __future__ import annotations

from math import lcm

from .presentation import Connector, SystemPresentation


def orbit_symbols(word: tuple[str, ...], j: int, lo: int, hi: int) -> tuple[str, ...]:
    n = len(word)
    return tuple(word[(i + j) % n] for i in range(lo, hi + 1))


def _connector_symbol(left: tuple[str, ...], middle: tuple[str, ...], right: tuple[str, ...], i: int) -> str:
    if i < 0:
        return left[i % len(left)]
    if i < len(middle):
        return middle[i]
    return right[(i - len(middle)) % len(right)]


def connector_symbols(S: SystemPresentation, c: Connector, k: int, lo: int, hi: int) -> tuple[str, ...]:
    """Coordinates lo..hi of sigma^k(z)."""
    left, right = S.orbit(c.left).word, S.orbit(c.right).word
    mid = c.middle or ()
    return tuple(_connector_symbol(left, mid, right, i + k) for i in range(lo, hi + 1))


def connector_is_periodic(S: SystemPresentation, c: Connector) -> bool:
    left, right = S.orbit(c.left).word, S.orbit(c.right).word
    mid = c.middle or ()
    span = len(mid) + lcm(len(left), len(right))
    return all(_connector_symbol(left, mid, right, i) == left[i % len(left)] for i in range(span))


def same_connector_orbit(S: SystemPresentation, a: Connector, b: Connector) -> bool:
    if (a.left, a.right) != (b.left, b.right):
        return False
    left, right = S.orbit(a.left).word, S.orbit(a.right).word
    ma, mb = a.middle or (), b.middle or ()
    reach = len(ma) + len(mb) + 2 * lcm(len(left), len(right)) + 2
    window = 2 * reach
    target = tuple(_connector_symbol(left, mb, right, i) for i in range(-window, window + 1))
    for k in range(-reach, reach + 1):
        if tuple(_connector_symbol(left, ma, right, i + k) for i in range(-window, window + 1)) == target:
            return True
    return False
