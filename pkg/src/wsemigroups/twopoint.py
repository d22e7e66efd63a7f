"""Two-point Weierstrass semigroups stored as finite periodic strips.

A two-point semigroup lives in Z^2.  Its member set is invariant under
translation by (period, -period), every point with coordinate sum >= 2g
is a member, and no point with negative sum is.  Everything in between
is recorded in a (2g) x period boolean table indexed by
(sum, m1 mod period), which makes membership, nabla sets, maximal
points, the two dimension functions and all window scans exact on an
unbounded lattice.

Two dimension functions are deliberately kept side by side: dim_jump
mirrors the sheaf dimension ell(m) - ell(m-1) through one-sided jump
predicates, while dim_nabla encodes the combinatorial statement "d = 1
iff nabla(m) is empty".  They disagree on genuine fixtures (the
elliptic sum-1 antidiagonal) and the verify() machinery measures that
instead of hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AxiomViolation,
    InvalidSemigroup,
    UnknownCheck,
    WindowTooSmall,
)
from .series import LaurentPoly, RationalGF, Window

CHECKS = (
    "closure",
    "c_prop",
    "c_identity",
    "corner_translates",
    "lemma4",
    "d_agreement",
    "symmetry",
    "funceq",
)


def interior_region(window: Window) -> Window:
    """The window shrunk by the 2-cell verification margin.

    Difference operators and reflections read neighbours of each scanned
    point, so pointwise checks stay two cells away from the boundary.
    """
    bounds = []
    for lo, hi in window.bounds:
        if hi - lo < 4:
            raise WindowTooSmall(
                f"window ({lo}, {hi}) leaves no 2-cell interior margin")
        bounds.append((lo + 2, hi - 2))
    return Window(*bounds)


def _jsonable(value):
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    raise TypeError(f"not JSON-serialisable: {value!r}")


@dataclass(frozen=True)
class CornerData:
    """Maximal points in the fundamental corner 0 < m1 <= period,
    0 <= m1 + m2 <= 2g, sorted lexicographically."""

    points: tuple


@dataclass(frozen=True)
class SymmetryReport:
    """Outcome of the symmetry-point search.

    sigma is the corner maximal with coordinate sum 2g whose reflection
    m -> normalize(sigma - m) maps the corner maximals into themselves,
    or None when no candidate works.  point_symmetry_ok records the
    windowed test n in semigroup <=> nabla(sigma - n) empty, with the
    failing n listed as witnesses.
    """

    sigma: tuple | None
    involution_ok: bool
    point_symmetry_ok: bool
    witnesses: tuple

    def to_json(self):
        return {
            "sigma": _jsonable(self.sigma),
            "involution_ok": self.involution_ok,
            "point_symmetry_ok": self.point_symmetry_ok,
            "witnesses": _jsonable(self.witnesses),
        }


@dataclass(frozen=True)
class VerificationReport:
    check: str
    passed: bool
    witnesses: tuple
    window: tuple | None
    details: dict = field(default_factory=dict)
    series: object = None

    def to_json(self):
        out = {
            "check": self.check,
            "pass": self.passed,
            "witnesses": _jsonable(self.witnesses),
        }
        if self.window is not None:
            out["window"] = _jsonable(self.window)
        if self.series is not None:
            out["series"] = self.series.to_json()
        if self.details:
            out["details"] = _jsonable(self.details)
        return out


class TwoPointSemigroup:
    """A validated two-point semigroup on the quotient strip.

    >>> S = TwoPointSemigroup.from_strip(1, 2, [[True, False], [False, False]])
    >>> S.contains((2, -2)), S.contains((1, 0)), S.contains((1, 1))
    (True, False, True)
    """

    __slots__ = ("genus", "period", "strip", "_corner")

    def __init__(self, genus, period, rows):
        genus = int(genus)
        period = int(period)
        if genus < 0:
            raise InvalidSemigroup(f"genus must be >= 0, got {genus}")
        if period < 1:
            raise InvalidSemigroup(f"period must be >= 1, got {period}")
        rows = [tuple(bool(x) for x in row) for row in rows]
        if len(rows) != 2 * genus:
            raise InvalidSemigroup(
                f"strip must have 2*genus = {2 * genus} rows, got {len(rows)}")
        if any(len(row) != period for row in rows):
            raise InvalidSemigroup(f"every strip row must have {period} entries")
        self.genus = genus
        self.period = period
        self.strip = tuple(rows)
        self._corner = None
        if genus > 0 and not self.strip[0][0]:
            raise AxiomViolation("origin (0,0) is not a member",
                                 witnesses=[((0, 0),)])
        bad = self._closure_witnesses()
        if bad:
            s1, s2, target = bad[0]
            raise AxiomViolation(
                f"quotient closure fails: classes {s1} + {s2} -> {target} "
                f"is not a member", witnesses=bad)

    @classmethod
    def from_strip(cls, genus, period, rows):
        return cls(genus, period, rows)

    @classmethod
    def from_members(cls, genus, period, gens):
        """Additive closure of {gens} + origin on the quotient classes."""
        genus = int(genus)
        period = int(period)
        if genus < 0 or period < 1:
            raise InvalidSemigroup("need genus >= 0 and period >= 1")
        seeds = {(0, 0)}
        for g in gens:
            m1, m2 = int(g[0]), int(g[1])
            s = m1 + m2
            if s < 0:
                raise InvalidSemigroup(
                    f"generator {(m1, m2)} has negative coordinate sum")
            if s < 2 * genus:
                seeds.add((s, m1 % period))
        classes = set(seeds)
        frontier = list(seeds)
        while frontier:
            s1, a1 = frontier.pop()
            for s2, a2 in list(classes):
                s = s1 + s2
                if s >= 2 * genus:
                    continue
                cls_new = (s, (a1 + a2) % period)
                if cls_new not in classes:
                    classes.add(cls_new)
                    frontier.append(cls_new)
        rows = [[(s, a) in classes for a in range(period)]
                for s in range(2 * genus)]
        return cls(genus, period, rows)

    def _closure_witnesses(self):
        """All class pairs whose sum escapes the member set."""
        members = [(s, a) for s in range(2 * self.genus)
                   for a in range(self.period) if self.strip[s][a]]
        bad = []
        for i, (s1, a1) in enumerate(members):
            for s2, a2 in members[i:]:
                s = s1 + s2
                if s >= 2 * self.genus:
                    continue
                a = (a1 + a2) % self.period
                if not self.strip[s][a]:
                    bad.append(((s1, a1), (s2, a2), (s, a)))
        return sorted(bad)

    # membership and nabla sets

    def contains(self, m):
        s = m[0] + m[1]
        if s < 0:
            return False
        if s >= 2 * self.genus:
            return True
        return self.strip[s][m[0] % self.period]

    __contains__ = contains

    def nabla(self, n, coords, strict=True):
        """Members agreeing with n on `coords` and below it elsewhere.

        coords is a nonempty subset of {1, 2}.  With strict=True the
        free coordinate runs strictly below n's; with strict=False it
        may equal it.  The free coordinate is bounded below by the
        nonnegative-sum condition, so the enumeration is finite.
        """
        coords = frozenset(coords)
        if not coords or not coords <= {1, 2}:
            raise ValueError(f"coords must be a nonempty subset of {{1,2}}")
        n1, n2 = n
        if coords == {1, 2}:
            return [(n1, n2)] if self.contains(n) else []
        slack = 0 if strict else 1
        points = []
        if coords == {1}:
            for y in range(-n1, n2 + slack):
                if self.contains((n1, y)):
                    points.append((n1, y))
        else:
            for x in range(-n2, n1 + slack):
                if self.contains((x, n2)):
                    points.append((x, n2))
        return points

    def nabla_union(self, n):
        """The strict set nabla(n) = nabla_1(n) union nabla_2(n)."""
        return sorted(set(self.nabla(n, {1})) | set(self.nabla(n, {2})))

    def is_maximal(self, n):
        return self.contains(n) and not self.nabla(n, {1}) \
            and not self.nabla(n, {2})

    # maximal points and the fundamental corner

    def corner_maximals(self) -> CornerData:
        if self._corner is None:
            pts = []
            for m1 in range(1, self.period + 1):
                for s in range(0, 2 * self.genus + 1):
                    m = (m1, s - m1)
                    if self.is_maximal(m):
                        pts.append(m)
            self._corner = CornerData(tuple(sorted(pts)))
        return self._corner

    def normalize(self, p):
        """Translate by multiples of (period, -period) until m1 in (0, period]."""
        k = (p[0] - 1) % self.period + 1
        lam = (k - p[0]) // self.period
        return (k, p[1] - lam * self.period)

    def maximal_points_in(self, window: Window):
        return [m for m in window.points() if self.is_maximal(m)]

    def corner_translates_in(self, window: Window):
        """Period translates of the corner maximals inside the window."""
        (lo1, hi1), (lo2, hi2) = window.bounds
        th = self.period
        out = set()
        for p1, p2 in self.corner_maximals().points:
            lo = max(-((p1 - lo1) // th), -((hi2 - p2) // th))
            hi = min((hi1 - p1) // th, (p2 - lo2) // th)
            for lam in range(lo, hi + 1):
                out.add((p1 + lam * th, p2 - lam * th))
        return sorted(out)

    def _count_maximals_leq(self, m):
        """Number of maximal points componentwise <= m, via translates."""
        m1, m2 = m
        th = self.period
        total = 0
        for p1, p2 in self.corner_maximals().points:
            hi = (m1 - p1) // th
            lo = -((m2 - p2) // th)
            if hi >= lo:
                total += hi - lo + 1
        return total

    def maximal_count_coefficient(self, m):
        """Coefficient of t^m in (1 - t1 t2) * sum over all maximal points."""
        return self._count_maximals_leq(m) - \
            self._count_maximals_leq((m[0] - 1, m[1] - 1))

    # dimension functions

    def _column_reaches(self, m1, smax):
        """Is there a member (m1, y) with m1 + y <= smax?"""
        if smax < 0:
            return False
        if smax >= 2 * self.genus:
            return True
        a = m1 % self.period
        return any(self.strip[s][a] for s in range(smax + 1))

    def _row_reaches(self, m2, smax):
        """Is there a member (x, m2) with x + m2 <= smax?"""
        if smax < 0:
            return False
        if smax >= 2 * self.genus:
            return True
        return any(self.strip[s][(s - m2) % self.period]
                   for s in range(smax + 1))

    def dim_jump(self, m):
        """[exists y <= m2: (m1,y) in S] + [exists x <= m1-1: (x,m2) in S]."""
        s = m[0] + m[1]
        return int(self._column_reaches(m[0], s)) + \
            int(self._row_reaches(m[1], s - 1))

    def dim_jump_swapped(self, m):
        """Same two-step count taken in the other coordinate order."""
        s = m[0] + m[1]
        return int(self._row_reaches(m[1], s)) + \
            int(self._column_reaches(m[0], s - 1))

    def order_independence_witnesses(self, window: Window):
        """Points where the two dim_jump decompositions disagree."""
        return [m for m in window.points()
                if self.dim_jump(m) != self.dim_jump_swapped(m)]

    def dim_nabla(self, m):
        """0 outside the semigroup, 1 for maximal members, else 2."""
        if not self.contains(m):
            return 0
        return 1 if self.is_maximal(m) else 2

    def euler_c(self, m, d_variant="jump"):
        """c(m) = d(m) - d(m-e1) - d(m-e2) + d(m-(1,1))."""
        if d_variant == "jump":
            d = self.dim_jump
        elif d_variant == "nabla":
            d = self.dim_nabla
        else:
            raise ValueError(f"unknown d variant {d_variant!r}")
        m1, m2 = m
        return d(m) - d((m1 - 1, m2)) - d((m1, m2 - 1)) + d((m1 - 1, m2 - 1))

    def projection_contains(self, axis, value):
        """Is `value` in the one-point projection along the given axis?

        Axis 1 asks for a member (value, y) with y <= 0; axis 2 for a
        member (x, value) with x <= 0.
        """
        if axis == 1:
            return self._column_reaches(value, value)
        if axis == 2:
            return self._row_reaches(value, value)
        raise ValueError("axis must be 1 or 2")

    def gap_class_count(self):
        return sum(1 for row in self.strip for x in row if not x)

    # series and symmetry

    def poincare_corner(self) -> RationalGF:
        """(1 - t1 t2) * sum_{m in corner maximals} t^m over
        (1 - t1)(1 - t2).  Valid only modulo the two-sided telescoping
        convention; never asserted coefficientwise against dim_jump.
        """
        corner_sum = LaurentPoly({m: 1 for m in self.corner_maximals().points},
                                 arity=2)
        one_minus_tt = LaurentPoly({(0, 0): 1, (1, 1): -1})
        return RationalGF(one_minus_tt * corner_sum, [(1, 0), (0, 1)])

    def default_window(self) -> Window:
        b = 2 * self.genus + 2 * self.period + 2
        return Window((-b, b), (-b, b))

    def _sigma_candidate(self):
        """First corner maximal with sum 2g whose reflection preserves
        the corner maximals; None if no candidate works."""
        corner = self.corner_maximals().points
        corner_set = set(corner)
        for cand in corner:
            if cand[0] + cand[1] != 2 * self.genus:
                continue
            image = [self.normalize((cand[0] - p[0], cand[1] - p[1]))
                     for p in corner]
            if all(q in corner_set for q in image):
                return cand
        return None

    def find_symmetry_point(self, window: Window | None = None) -> SymmetryReport:
        """Search for sigma and run the pointwise symmetry test.

        The pointwise test is n in S <=> nabla(sigma - n) = empty for
        every n in the window.
        """
        if window is None:
            window = self.default_window()
        sigma = self._sigma_candidate()
        if sigma is None:
            return SymmetryReport(None, False, False, ())
        witnesses = []
        for n in window.points():
            refl = (sigma[0] - n[0], sigma[1] - n[1])
            if self.contains(n) != (not self.nabla_union(refl)):
                witnesses.append(n)
        return SymmetryReport(sigma, True, not witnesses, tuple(witnesses))

    # verification

    def _scan_region(self, window: Window) -> Window:
        return interior_region(window)

    def verify(self, check, window: Window | None = None) -> VerificationReport:
        """Run one named check; see CHECKS for the ids.

        Pointwise checks scan the interior of the window, two cells in
        from each edge, so difference operators and reflections stay
        honest near the boundary.
        """
        if check not in CHECKS:
            raise UnknownCheck(f"unknown check {check!r}; pick one of {CHECKS}")
        if window is None:
            window = self.default_window()
        if window.arity != 2:
            raise WindowTooSmall("verification windows must be 2-dimensional")
        region = self._scan_region(window)
        handler = getattr(self, f"_check_{check}")
        passed, witnesses, details = handler(region)
        return VerificationReport(
            check=check,
            passed=passed,
            witnesses=tuple(witnesses),
            window=window.bounds,
            details={"scan": region.bounds, **details},
        )

    def _check_closure(self, region):
        bad = self._closure_witnesses()
        return not bad, bad, {}

    def _check_c_prop(self, region):
        """c(m) = -1 iff m-1 maximal, and c(m) = 1 iff m maximal."""
        witnesses = []
        stray = []
        for m in region.points():
            c = self.euler_c(m, "jump")
            prev_max = self.is_maximal((m[0] - 1, m[1] - 1))
            here_max = self.is_maximal(m)
            if ((c == -1) != prev_max) or ((c == 1) != here_max):
                witnesses.append(m)
                if not (prev_max and here_max):
                    stray.append(m)
        details = {"violations_both_maximal": not stray}
        if stray:
            details["stray"] = stray
        return not witnesses, witnesses, details

    def _check_c_identity(self, region):
        """c(m) with dim_jump equals 1_M(m) - 1_M(m-1)."""
        witnesses = []
        for m in region.points():
            lhs = self.euler_c(m, "jump")
            rhs = int(self.is_maximal(m)) - \
                int(self.is_maximal((m[0] - 1, m[1] - 1)))
            if lhs != rhs:
                witnesses.append(m)
        return not witnesses, witnesses, {}

    def _check_corner_translates(self, region):
        scanned = set(self.maximal_points_in(region))
        translated = set(self.corner_translates_in(region))
        witnesses = sorted(scanned ^ translated)
        details = {"scanned": len(scanned), "translates": len(translated)}
        return not witnesses, witnesses, details

    def _check_lemma4(self, region):
        """Both projections hit => dim_jump = 2, for m1, m2 > 0."""
        witnesses = []
        for m in region.points():
            if m[0] <= 0 or m[1] <= 0:
                continue
            if self.projection_contains(1, m[0]) and \
                    self.projection_contains(2, m[1]):
                if self.dim_jump(m) != 2:
                    witnesses.append(m)
        return not witnesses, witnesses, {}

    def _check_d_agreement(self, region):
        witnesses = [m for m in region.points()
                     if self.dim_jump(m) != self.dim_nabla(m)]
        return not witnesses, witnesses, {}

    def _check_symmetry(self, region):
        rep = self.find_symmetry_point(region)
        passed = rep.sigma is not None and rep.involution_ok \
            and rep.point_symmetry_ok
        details = {"sigma": rep.sigma, "involution_ok": rep.involution_ok}
        return passed, list(rep.witnesses), details

    def _check_funceq(self, region):
        """Reflection identities for the corner coefficient functions.

        With the pairing m <-> sigma - m on maximal points, the series
        coefficients satisfy mcc(m) + mcc(sigma - m) = 2 and
        cmax(m) = -cmax(sigma + 1 - m) where cmax(u) = 1_M(u) - 1_M(u-1);
        these are the pointwise faces of L(t) = eps t^{sigma+1} L(1/t)
        and P(t) = eps' t^{sigma} P(1/t).
        """
        sigma = self._sigma_candidate()
        if sigma is None:
            return False, [], {"sigma": None, "involution_ok": False}
        witnesses = []
        for m in region.points():
            refl = (sigma[0] - m[0], sigma[1] - m[1])
            if self.maximal_count_coefficient(m) + \
                    self.maximal_count_coefficient(refl) != 2:
                witnesses.append(m)
                continue
            cmax = int(self.is_maximal(m)) - \
                int(self.is_maximal((m[0] - 1, m[1] - 1)))
            cref = int(self.is_maximal((refl[0] + 1, refl[1] + 1))) - \
                int(self.is_maximal(refl))
            if cmax != -cref:
                witnesses.append(m)
        details = {"sigma": sigma, "involution_ok": True}
        return not witnesses, witnesses, details

    def __repr__(self):
        return (f"TwoPointSemigroup(genus={self.genus}, "
                f"period={self.period})")
