"""Exact piecewise-linear functions on the line, stored one period at a time.

Two families cover everything this package needs:

* ``PLMap`` -- strictly increasing PL bijections f with f(x+1) = f(x)+1,
  determined by their breakpoints on [0, 1).
* ``PLCocycle`` -- continuous PL functions p with p(x+1) = p(x), likewise
  stored on [0, 1).

All coordinates are ``fractions.Fraction``; there is no floating point
anywhere.  Both classes keep a unique canonical breakpoint list (collinear
points removed, translations/constants pinned at x = 0), so ``==`` decides
equality of the represented functions.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Rational = Fraction
Pair = Tuple[Rational, Rational]


class PLError(ValueError):
    """Raised for inputs that do not describe a valid PL function."""


def rational(value) -> Rational:
    """Coerce ints, Fractions and "p/q" strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise PLError(f"bad rational literal {value!r}") from exc
    raise PLError(f"cannot interpret {value!r} as a rational (floats are rejected)")


def format_rational(q: Rational) -> str:
    """Render in lowest terms as "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _floor(q: Rational) -> int:
    return q.numerator // q.denominator


def _frac(q: Rational) -> Rational:
    return q - _floor(q)


def _prepare(points: Iterable[Pair], wrap_rise: int) -> list[Pair]:
    """Normalize points into the fundamental domain and validate x-distinctness.

    ``wrap_rise`` is 1 for equivariant maps ((x, y) -> (x mod 1, y - floor(x)))
    and 0 for periodic cocycles (y kept as given).
    """
    seen: dict[Rational, Rational] = {}
    for raw_x, raw_y in points:
        x = rational(raw_x)
        y = rational(raw_y)
        n = _floor(x)
        x -= n
        if wrap_rise:
            y -= n
        if x in seen:
            if seen[x] != y:
                raise PLError(
                    f"duplicate x = {format_rational(x)} (mod 1) with conflicting values "
                    f"{format_rational(seen[x])} and {format_rational(y)}"
                )
        else:
            seen[x] = y
    if not seen:
        raise PLError("at least one breakpoint is required")
    return sorted(seen.items())


def _essential(pairs: Sequence[Pair], wrap_rise: int) -> tuple[Pair, ...]:
    """Drop breakpoints that are linear interpolants of their cyclic neighbours."""
    k = len(pairs)
    if k == 1:
        x0, y0 = pairs[0]
        return ((Fraction(0), y0 - wrap_rise * x0),)
    slopes = []
    for i in range(k - 1):
        slopes.append((pairs[i + 1][1] - pairs[i][1]) / (pairs[i + 1][0] - pairs[i][0]))
    slopes.append((pairs[0][1] + wrap_rise - pairs[-1][1]) / (pairs[0][0] + 1 - pairs[-1][0]))
    kept = tuple(pairs[i] for i in range(k) if slopes[i - 1] != slopes[i])
    if not kept:
        # every point collinear: a translation (maps) or a constant (cocycles)
        x0, y0 = pairs[0]
        return ((Fraction(0), y0 - wrap_rise * x0),)
    return kept


class _PLBase:
    """Shared storage and evaluation for one-period PL data."""

    __slots__ = ("xs", "ys", "_slopes")

    _wrap_rise = 0  # vertical rise across one period of the extension

    def __init__(self, pairs: Sequence[Pair]):
        xs = tuple(p[0] for p in pairs)
        ys = tuple(p[1] for p in pairs)
        slopes = []
        for i in range(len(pairs) - 1):
            slopes.append((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]))
        slopes.append((ys[0] + self._wrap_rise - ys[-1]) / (xs[0] + 1 - xs[-1]))
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "_slopes", tuple(slopes))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.xs == other.xs and self.ys == other.ys

    def __hash__(self):
        return hash((type(self).__name__, self.xs, self.ys))

    def __call__(self, x) -> Rational:
        x = rational(x)
        n = _floor(x)
        r = x - n
        i = bisect_right(self.xs, r) - 1
        if i < 0:
            # wrap segment entering from (xs[-1] - 1, ys[-1] - rise)
            value = self.ys[-1] - self._wrap_rise + self._slopes[-1] * (r - self.xs[-1] + 1)
        else:
            value = self.ys[i] + self._slopes[i] * (r - self.xs[i])
        return value + n * self._wrap_rise

    def breakpoints(self) -> tuple[Pair, ...]:
        return tuple(zip(self.xs, self.ys))

    def breakpoint_xs(self) -> frozenset[Rational]:
        xs = self.xs
        if len(xs) == 1 and self._is_trivial_single():
            return frozenset()
        return frozenset(xs)

    def _is_trivial_single(self) -> bool:
        raise NotImplementedError

    def to_pairs(self) -> list[list[str]]:
        """Serializable form: ordered [x, y] pairs of "p/q" strings."""
        return [[format_rational(x), format_rational(y)] for x, y in self.breakpoints()]

    @classmethod
    def from_pairs(cls, pairs):
        return cls.from_points([(rational(x), rational(y)) for x, y in pairs])

    def __repr__(self):
        pts = ", ".join(f"({format_rational(x)}, {format_rational(y)})" for x, y in self.breakpoints())
        return f"{type(self).__name__}[{pts}]"


class PLMap(_PLBase):
    """Increasing PL bijection of the line commuting with the unit translation.

    The extension rule f(x+1) = f(x)+1 makes one period of breakpoints
    determine the whole function.  A single stored breakpoint means the map is
    a translation, canonically pinned at x = 0.
    """

    __slots__ = ()
    _wrap_rise = 1

    @classmethod
    def from_points(cls, points: Iterable[Pair]) -> "PLMap":
        pairs = _prepare(points, wrap_rise=1)
        ys = [y for _, y in pairs]
        for i in range(len(ys) - 1):
            if not ys[i] < ys[i + 1]:
                raise PLError("y-values must increase strictly; not a bijection")
        if len(pairs) > 1 and not ys[-1] < ys[0] + 1:
            raise PLError("wrap segment must rise: need last y < first y + 1")
        return cls(_essential(pairs, wrap_rise=1))

    @classmethod
    def identity(cls) -> "PLMap":
        return cls(((Fraction(0), Fraction(0)),))

    @classmethod
    def translation(cls, amount) -> "PLMap":
        return cls(((Fraction(0), rational(amount)),))

    def _is_trivial_single(self) -> bool:
        return self._slopes[0] == 1

    @property
    def is_translation(self) -> bool:
        return len(self.xs) == 1

    @property
    def is_identity(self) -> bool:
        return self.is_translation and self.ys[0] == 0

    @property
    def translation_amount(self) -> Rational:
        if not self.is_translation:
            raise PLError("not a translation")
        return self.ys[0]

    def compose(self, other: "PLMap") -> "PLMap":
        """Left-to-right composite x -> other(self(x))."""
        inv = self.invert()
        cands = set(self.xs)
        cands.update(_frac(inv(x)) for x in other.xs)
        pairs = [(x, other(self(x))) for x in sorted(cands)]
        return PLMap(_essential(pairs, wrap_rise=1))

    def invert(self) -> "PLMap":
        pairs = []
        for x, y in zip(self.xs, self.ys):
            n = _floor(y)
            pairs.append((y - n, x - n))
        pairs.sort()
        return PLMap(_essential(pairs, wrap_rise=1))


class PLCocycle(_PLBase):
    """Continuous PL function with period 1, stored on [0, 1).

    A single stored breakpoint means the function is constant, canonically
    pinned at x = 0.
    """

    __slots__ = ()
    _wrap_rise = 0

    @classmethod
    def from_points(cls, points: Iterable[Pair]) -> "PLCocycle":
        pairs = _prepare(points, wrap_rise=0)
        return cls(_essential(pairs, wrap_rise=0))

    @classmethod
    def zero(cls) -> "PLCocycle":
        return cls(((Fraction(0), Fraction(0)),))

    @classmethod
    def constant(cls, value) -> "PLCocycle":
        return cls(((Fraction(0), rational(value)),))

    def _is_trivial_single(self) -> bool:
        return True  # a single point is constant: no corner anywhere

    @property
    def is_constant(self) -> bool:
        return len(self.xs) == 1

    @property
    def is_zero(self) -> bool:
        return self.is_constant and self.ys[0] == 0

    @property
    def constant_value(self) -> Rational:
        if not self.is_constant:
            raise PLError("not constant")
        return self.ys[0]

    def add(self, other: "PLCocycle") -> "PLCocycle":
        cands = sorted(set(self.xs) | set(other.xs))
        pairs = [(x, self(x) + other(x)) for x in cands]
        return PLCocycle(_essential(pairs, wrap_rise=0))

    def negate(self) -> "PLCocycle":
        pairs = [(x, -y) for x, y in zip(self.xs, self.ys)]
        return PLCocycle(_essential(pairs, wrap_rise=0))

    def pullback(self, phi: PLMap) -> "PLCocycle":
        """The cocycle x -> self(phi(x)); exact, with breakpoints at phi's
        corners and at phi-preimages of self's corners."""
        inv = phi.invert()
        cands = set(phi.xs)
        cands.update(_frac(inv(x)) for x in self.xs)
        pairs = [(x, self(phi(x))) for x in sorted(cands)]
        return PLCocycle(_essential(pairs, wrap_rise=0))


# Functional aliases mirroring the operation vocabulary used elsewhere.

def make_plmap(points) -> PLMap:
    return PLMap.from_points(points)


def eval_plmap(phi: PLMap, x) -> Rational:
    return phi(x)


def compose_plmap(phi1: PLMap, phi2: PLMap) -> PLMap:
    return phi1.compose(phi2)


def invert_plmap(phi: PLMap) -> PLMap:
    return phi.invert()


def make_cocycle(points) -> PLCocycle:
    return PLCocycle.from_points(points)


def eval_cocycle(psi: PLCocycle, x) -> Rational:
    return psi(x)


def add_cocycle(psi1: PLCocycle, psi2: PLCocycle) -> PLCocycle:
    return psi1.add(psi2)


def negate_cocycle(psi: PLCocycle) -> PLCocycle:
    return psi.negate()


def pullback_cocycle(psi: PLCocycle, phi: PLMap) -> PLCocycle:
    return psi.pullback(phi)
