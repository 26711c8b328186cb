"""Exact ideal arithmetic and containment-division checks in quadratic orders."""

from ._quadcdr import *  # noqa: F401,F403
from ._quadcdr import QuadCdrError, make_ring, parse_ideal


def ideal(ring, literal):
    """Ideal from a generator literal such as ``"2, 1+w"``."""
    return parse_ideal(ring, literal)
