"""
Solution set of the two-variable power equation x^a = y^b.

Every positive solution has the form (t^b1, t^a1) for a single positive integer
t, where a = d*a1, b = d*b1 and d = gcd(a, b). Solvers use this to turn
equalities of the form u^e = w^f into a one-parameter family.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from dioph_certify.core.integer_core import gcd, ipow, perfect_root, require_positive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerEqParametrization:
    """Parametrization data for x^a = y^b.

    Attributes:
        a: Exponent of x
        b: Exponent of y
        d: gcd(a, b)
        a1: a / d, equal to lcm(a, b) / b
        b1: b / d, equal to lcm(a, b) / a
    """

    a: int
    b: int
    d: int
    a1: int
    b1: int

    @property
    def lcm(self) -> int:
        return self.d * self.a1 * self.b1

    def member(self, t: int) -> tuple[int, int]:
        """The family member (t^b1, t^a1)."""
        return ipow(t, self.b1), ipow(t, self.a1)

    def describe(self) -> str:
        """Family as text, e.g. ``(t^3, t^2)`` or ``(t, t)``."""
        x, y = (("t" if e == 1 else f"t^{e}") for e in (self.b1, self.a1))
        return f"({x}, {y})"


def parametrize(a: int, b: int) -> PowerEqParametrization:
    """Build the parametrization of x^a = y^b."""
    require_positive(a, "a")
    require_positive(b, "b")
    d = gcd(a, b)
    return PowerEqParametrization(a=a, b=b, d=d, a1=a // d, b1=b // d)


def enumerate_solutions(p: PowerEqParametrization, t_max: int) -> list[tuple[int, int]]:
    """Return [(t^b1, t^a1) for t = 1..t_max] in ascending t."""
    require_positive(t_max, "t_max")
    return [p.member(t) for t in range(1, t_max + 1)]


def recover_parameter(x: int, y: int, p: PowerEqParametrization) -> Optional[int]:
    """
    Find t with (x, y) == (t^b1, t^a1).

    Args:
        x: First coordinate
        y: Second coordinate
        p: Parametrization of x^a = y^b

    Returns:
        t when (x, y) solves x^a = y^b, otherwise None
    """
    t = perfect_root(x, p.b1)
    if t is None or ipow(t, p.a1) != y:
        return None
    return t
