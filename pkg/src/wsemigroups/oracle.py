"""Closed-form Riemann-Roch oracles for two toy curve families.

These are the ground truth the combinatorial layer is checked against.
For the projective line and for elliptic curves the dimension of every
divisor supported on two points has a closed form, so the semigroup,
the dimension jumps and the maximal points can all be recomputed from
first principles without touching the strip machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .twopoint import TwoPointSemigroup

FAMILIES = ("projective_line", "elliptic")


@dataclass(frozen=True)
class Fixture:
    """A curve family plus the order of P1 - P2 in the class group.

    The projective line has genus 0 and forces period 1.  The elliptic
    family has genus 1 and takes the period as an input; period 1 is
    accepted for completeness even though no smooth curve realises it
    (distinct points are never linearly equivalent on a curve of
    positive genus).
    """

    family: str
    period: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(
                f"unknown fixture family {self.family!r}; "
                f"expected one of {FAMILIES}")
        if self.period < 1:
            raise InputError(f"period must be >= 1, got {self.period}")
        if self.family == "projective_line" and self.period != 1:
            raise InputError("projective_line fixtures have period 1")

    @property
    def genus(self):
        return 0 if self.family == "projective_line" else 1


def ell(fixture: Fixture, m) -> int:
    """Dimension of the space of functions with pole orders bounded by m.

    >>> ell(Fixture("projective_line"), (3, -1))
    3
    >>> ell(Fixture("elliptic", 2), (0, 0))
    1
    >>> ell(Fixture("elliptic", 2), (1, -1))
    0
    """
    s = m[0] + m[1]
    if fixture.family == "projective_line":
        return s + 1 if s >= 0 else 0
    if s >= 1:
        return s
    if s == 0 and m[0] % fixture.period == 0:
        return 1
    return 0


def d_oracle(fixture: Fixture, m) -> int:
    """ell(m) - ell(m - (1,1)), the two-step dimension jump."""
    return ell(fixture, m) - ell(fixture, (m[0] - 1, m[1] - 1))


def semigroup_from_fixture(fixture: Fixture) -> TwoPointSemigroup:
    """Strip built from the pair-of-jumps membership test.

    m belongs to the semigroup iff both single-step jumps equal one:
    ell(m) - ell(m - e1) = 1 and ell(m) - ell(m - e2) = 1.
    """
    g = fixture.genus
    th = fixture.period

    def member(m):
        here = ell(fixture, m)
        return (here - ell(fixture, (m[0] - 1, m[1])) == 1
                and here - ell(fixture, (m[0], m[1] - 1)) == 1)

    rows = [[member((a, s - a)) for a in range(th)] for s in range(2 * g)]
    return TwoPointSemigroup.from_strip(g, th, rows)
