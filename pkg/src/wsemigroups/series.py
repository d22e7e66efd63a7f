"""Sparse Laurent polynomials and factored rational generating functions.

All arithmetic is exact over the integers.  A rational generating
function is kept in factored form: a Laurent-polynomial numerator over a
multiset of denominator factors (1 - t^v).  Expansion is one-sided: each
factor 1/(1 - t^v) always expands as sum_{k>=0} t^{k*v}, so every factor
vector v must be componentwise nonnegative and nonzero.  Substituting
t -> 1/t therefore never flips an expansion direction; it rewrites the
factors via (1 - t^-v) = -t^-v (1 - t^v) and stays in the same fraction
field representation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import ArityMismatch, InputError

_VAR_NAMES = {1: ("t",), 2: ("t1", "t2")}


def _check_exponent(e, arity=None):
    """Coerce e to a tuple of ints and check its length."""
    vec = tuple(int(x) for x in e)
    if not vec:
        raise ArityMismatch("exponent vectors must have at least one entry")
    if arity is not None and len(vec) != arity:
        raise ArityMismatch(f"expected {arity} variables, got {len(vec)}")
    return vec


class LaurentPoly:
    """A sparse Laurent polynomial with integer coefficients.

    Terms are stored as a mapping from exponent tuples to nonzero
    coefficients.  Exponents may be negative.  Instances are treated as
    immutable; all arithmetic returns new objects.

    >>> p = LaurentPoly({(0,): 1, (1,): -1})
    >>> q = LaurentPoly({(0,): 1, (1,): 1})
    >>> (p * q).terms()
    [((0,), 1), ((2,), -1)]
    """

    __slots__ = ("_terms", "_arity")

    def __init__(self, terms=None, arity=None):
        data = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for e, c in items:
                e = _check_exponent(e, arity)
                if arity is None:
                    arity = len(e)
                c = int(c)
                if c == 0:
                    continue
                data[e] = data.get(e, 0) + c
                if data[e] == 0:
                    del data[e]
        if arity is None:
            raise ArityMismatch("arity required for a polynomial with no terms")
        self._terms = data
        self._arity = arity

    @classmethod
    def zero(cls, arity):
        return cls({}, arity=arity)

    @classmethod
    def one(cls, arity):
        return cls({(0,) * arity: 1})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({tuple(e): c})

    @property
    def arity(self):
        return self._arity

    def coeff(self, e):
        return self._terms.get(_check_exponent(e, self._arity), 0)

    def terms(self):
        """Term list in lexicographic exponent order."""
        return sorted(self._terms.items())

    def support(self):
        return sorted(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self):
        return hash((self._arity, frozenset(self._terms.items())))

    def _check_same_arity(self, other):
        if self._arity != other._arity:
            raise ArityMismatch(
                f"mixed arities {self._arity} and {other._arity}")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({(0,) * self._arity: other}, arity=self._arity)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_arity(other)
        data = dict(self._terms)
        for e, c in other._terms.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        return LaurentPoly(data, arity=self._arity)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()},
                           arity=self._arity)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({(0,) * self._arity: other}, arity=self._arity)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()},
                               arity=self._arity)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_arity(other)
        data = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                else:
                    del data[e]
        return LaurentPoly(data, arity=self._arity)

    __rmul__ = __mul__

    def shift(self, e):
        """Multiply by the monomial t^e."""
        e = _check_exponent(e, self._arity)
        return LaurentPoly(
            {tuple(a + b for a, b in zip(k, e)): c
             for k, c in self._terms.items()}, arity=self._arity)

    def reverse(self):
        """Substitute t -> 1/t, negating every exponent."""
        return LaurentPoly({tuple(-x for x in e): c
                            for e, c in self._terms.items()},
                           arity=self._arity)

    def min_exponents(self):
        """Componentwise minimum of the support (None when zero)."""
        if not self._terms:
            return None
        return tuple(min(e[i] for e in self._terms)
                     for i in range(self._arity))

    def max_exponents(self):
        if not self._terms:
            return None
        return tuple(max(e[i] for e in self._terms)
                     for i in range(self._arity))

    def evaluate(self, point):
        """Exact value at a tuple of nonzero rationals."""
        if len(point) != self._arity:
            raise ArityMismatch("evaluation point has wrong length")
        pt = [Fraction(x) for x in point]
        if any(x == 0 for x in pt):
            raise ZeroDivisionError("Laurent terms cannot be evaluated at 0")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for x, k in zip(pt, e):
                term *= x ** k
            total += term
        return total

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        names = _VAR_NAMES.get(self._arity)
        parts = []
        for e, c in self.terms():
            powers = []
            for name, k in zip(names, e):
                if k == 0:
                    continue
                powers.append(name if k == 1 else f"{name}^{k}")
            mono = "*".join(powers)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


class Window:
    """A closed per-variable box of lattice points.

    Window((0, 4)) is the interval [0, 4]; Window((-6, 6), (-6, 6)) is a
    square.  Iteration is lexicographic, so output orders derived from a
    window are canonical.
    """

    __slots__ = ("_bounds",)

    def __init__(self, *bounds):
        checked = []
        for b in bounds:
            lo, hi = int(b[0]), int(b[1])
            if lo > hi:
                raise ValueError(f"empty window bound ({lo}, {hi})")
            checked.append((lo, hi))
        if not checked:
            raise ArityMismatch("window needs at least one bound pair")
        self._bounds = tuple(checked)

    @property
    def arity(self):
        return len(self._bounds)

    @property
    def bounds(self):
        return self._bounds

    def points(self):
        ranges = [range(lo, hi + 1) for lo, hi in self._bounds]
        return itertools.product(*ranges)

    def __contains__(self, point):
        return len(point) == len(self._bounds) and all(
            lo <= x <= hi for x, (lo, hi) in zip(point, self._bounds))

    def __eq__(self, other):
        return isinstance(other, Window) and self._bounds == other._bounds

    def __hash__(self):
        return hash(self._bounds)

    def __repr__(self):
        inside = ", ".join(str(b) for b in self._bounds)
        return f"Window({inside})"


def _factor_poly(v, arity):
    """The Laurent polynomial 1 - t^v."""
    return LaurentPoly({(0,) * arity: 1, v: -1}, arity=arity)


class RationalGF:
    """A rational generating function N(t) / prod_j (1 - t^{v_j}).

    The denominator is a multiset of exponent vectors, each nonnegative
    and nonzero, kept factored (never expanded into a single
    polynomial).  No cancellation between numerator and denominator is
    attempted; equality is decided by cross-multiplication.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=()):
        if not isinstance(num, LaurentPoly):
            raise TypeError("numerator must be a LaurentPoly")
        factors = []
        for v in den:
            v = _check_exponent(v, num.arity)
            if any(x < 0 for x in v):
                raise ValueError(f"denominator vector {v} has a negative entry")
            if all(x == 0 for x in v):
                raise ValueError("denominator vector must be nonzero")
            factors.append(v)
        self._num = num
        self._den = tuple(sorted(factors))

    @classmethod
    def from_poly(cls, p):
        return cls(p, ())

    @classmethod
    def geometric(cls, *vectors):
        """1 / prod (1 - t^v) for the given vectors."""
        vectors = [tuple(v) for v in vectors]
        arity = len(vectors[0])
        return cls(LaurentPoly.one(arity), vectors)

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    @property
    def arity(self):
        return self._num.arity

    def den_poly(self):
        """The expanded denominator prod (1 - t^v) as a LaurentPoly."""
        p = LaurentPoly.one(self.arity)
        for v in self._den:
            p = p * _factor_poly(v, self.arity)
        return p

    def __add__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RationalGF(
                other if isinstance(other, LaurentPoly)
                else LaurentPoly({(0,) * self.arity: other}, arity=self.arity))
        if not isinstance(other, RationalGF):
            return NotImplemented
        if self.arity != other.arity:
            raise ArityMismatch("mixed arities in rational function addition")
        num = self._num * other.den_poly() + other._num * self.den_poly()
        return RationalGF(num, self._den + other._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalGF(-self._num, self._den)

    def __mul__(self, other):
        if isinstance(other, int):
            return RationalGF(self._num * other, self._den)
        if isinstance(other, LaurentPoly):
            return RationalGF(self._num * other, self._den)
        if not isinstance(other, RationalGF):
            return NotImplemented
        if self.arity != other.arity:
            raise ArityMismatch("mixed arities in rational function product")
        return RationalGF(self._num * other._num, self._den + other._den)

    __rmul__ = __mul__

    def reciprocal(self):
        """Substitute t -> 1/t and renormalise the factors.

        Each factor rewrites as (1 - t^-v) = -t^-v (1 - t^v), so the
        result keeps the same denominator multiset and absorbs the
        monomial and the sign into the numerator:

            N(1/t) / prod (1 - t^-v)
              = (-1)^d * t^{sum v} * N(1/t) / prod (1 - t^v).
        """
        total = [0] * self.arity
        for v in self._den:
            for i, x in enumerate(v):
                total[i] += x
        num = self._num.reverse().shift(tuple(total))
        if len(self._den) % 2:
            num = -num
        return RationalGF(num, self._den)

    def equals(self, other):
        """Exact equality by cross-multiplication, no cancellation."""
        if not isinstance(other, RationalGF):
            raise TypeError("can only compare with another RationalGF")
        if self.arity != other.arity:
            raise ArityMismatch("mixed arities in rational function equality")
        return self._num * other.den_poly() == other._num * self.den_poly()

    def expand(self, window):
        """Coefficients of the one-sided expansion on a window.

        Each factor 1/(1 - t^v) contributes sum_{k>=0} t^{k*v}.  Since
        every v is nonnegative and nonzero, the coefficient of t^u in
        the expanded denominator product vanishes outside u >= 0 and is
        computed by the standard coin-change recurrence D(u) += D(u-v),
        one factor at a time, in lexicographic order.

        Returns a dict mapping every window point to its coefficient.
        """
        if not isinstance(window, Window):
            raise TypeError("expand needs a Window")
        if window.arity != self.arity:
            raise ArityMismatch("window arity does not match the series")
        if self._num.is_zero():
            return {m: 0 for m in window.points()}
        lo_e = self._num.min_exponents()
        box = tuple(max(0, hi - lo_e[i])
                    for i, (_, hi) in enumerate(window.bounds))
        dp = {}
        zero = (0,) * self.arity
        dp[zero] = 1
        grid = list(itertools.product(*[range(b + 1) for b in box]))
        for u in grid:
            dp.setdefault(u, 0)
        for v in self._den:
            for u in grid:
                prev = tuple(a - b for a, b in zip(u, v))
                if all(x >= 0 for x in prev):
                    dp[u] += dp[prev]
        out = {}
        for m in window.points():
            total = 0
            for e, c in self._num.terms():
                u = tuple(a - b for a, b in zip(m, e))
                if all(x >= 0 for x in u):
                    total += c * dp.get(u, 0)
            out[m] = total
        return out

    def evaluate(self, point):
        """Exact rational value; every factor must evaluate away from 1."""
        num = self._num.evaluate(point)
        den = Fraction(1)
        pt = [Fraction(x) for x in point]
        for v in self._den:
            factor = Fraction(1)
            for x, k in zip(pt, v):
                factor *= x ** k
            if factor == 1:
                raise ZeroDivisionError(f"factor (1 - t^{v}) vanishes at {point}")
            den *= 1 - factor
        return num / den

    def to_json(self):
        """Canonical JSON form, numerator terms in lexicographic order."""
        return {
            "num": [{"e": list(e), "c": c} for e, c in self._num.terms()],
            "den": [list(v) for v in self._den],
        }

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
            raise InputError("series JSON needs 'num' and 'den' fields")
        try:
            terms = [(tuple(t["e"]), int(t["c"])) for t in obj["num"]]
            den = [tuple(v) for v in obj["den"]]
        except (TypeError, KeyError) as exc:
            raise InputError(f"malformed series JSON: {exc}") from exc
        arity = None
        if terms:
            arity = len(terms[0][0])
        elif den:
            arity = len(den[0])
        if arity is None:
            raise InputError("series JSON carries no arity information")
        return cls(LaurentPoly(terms, arity=arity), den)

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __repr__(self):
        if not self._den:
            return f"RationalGF({self._num})"
        names = _VAR_NAMES.get(self.arity)
        factors = []
        for v in self._den:
            powers = []
            for name, k in zip(names, v):
                if k == 0:
                    continue
                powers.append(name if k == 1 else f"{name}^{k}")
            factors.append(f"(1 - {'*'.join(powers)})")
        return f"RationalGF(({self._num}) / {''.join(factors)})"
