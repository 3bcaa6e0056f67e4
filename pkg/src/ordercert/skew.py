"""Vertical-line-preserving plane homeomorphisms (x, y) -> (f(x), y + p(x)).

The group carries a *right* action throughout: ``compose(g, h)`` moves a
point first by ``g`` and then by ``h``, and ``conjugate(g, h)`` is
``h^-1 g h`` (written ``g^h``).  The four standard generators are named by
ASCII letters:

    a : (x, y) -> (x + 1/6, y)
    b : (x, y) -> (x, y + 1/6)
    c : (x, y) -> (x, y + c0(x))     c0 period 1, c0(0) = 3, c0(1/2) = -3
    d : (x, y) -> (d0(x), y)         d0(n + 1/3) = n + 1/6, d0(n + 2/3) = n + 5/6

Everything is exact and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactpl import PLCocycle, PLMap, Rational, rational
from .wordsyntax import WordSyntaxError, parse_word

Point = tuple

GENERATOR_NAMES = ("a", "b", "c", "d")


def base_cocycle() -> PLCocycle:
    """The period-1 tent c0 with value 3 at integers and -3 at half-integers."""
    return PLCocycle.from_points([(Fraction(0), Fraction(3)), (Fraction(1, 2), Fraction(-3))])


def base_plmap() -> PLMap:
    """The equivariant bijection d0 interpolating 1/3 -> 1/6 and 2/3 -> 5/6."""
    return PLMap.from_points(
        [(Fraction(1, 3), Fraction(1, 6)), (Fraction(2, 3), Fraction(5, 6))]
    )


class SkewElement:
    """An exact pair (x_part, shift) acting as (x, y) -> (x_part(x), y + shift(x)).

    Each vertical line x = t is carried onto the vertical line x = x_part(t)
    by the translation y -> y + shift(t).
    """

    __slots__ = ("x_part", "shift")

    def __init__(self, x_part: PLMap, shift: PLCocycle):
        object.__setattr__(self, "x_part", x_part)
        object.__setattr__(self, "shift", shift)

    def __setattr__(self, name, value):
        raise AttributeError("SkewElement is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    @classmethod
    def identity(cls) -> "SkewElement":
        return cls(PLMap.identity(), PLCocycle.zero())

    @property
    def is_identity(self) -> bool:
        return self.x_part.is_identity and self.shift.is_zero

    @property
    def is_translation(self) -> bool:
        """True when the plane map is (x, y) -> (x + u, y + v)."""
        return self.x_part.is_translation and self.shift.is_constant

    def translation_vector(self) -> Point:
        return (self.x_part.translation_amount, self.shift.constant_value)

    def __eq__(self, other):
        if not isinstance(other, SkewElement):
            return NotImplemented
        return self.x_part == other.x_part and self.shift == other.shift

    def __hash__(self):
        return hash((self.x_part, self.shift))

    def __repr__(self):
        return f"SkewElement(x_part={self.x_part!r}, shift={self.shift!r})"

    def apply(self, point: Point) -> Point:
        x = rational(point[0])
        y = rational(point[1])
        return (self.x_part(x), y + self.shift(x))

    def compose(self, other: "SkewElement") -> "SkewElement":
        """Right action: ``p -> other(self(p))``."""
        return SkewElement(
            self.x_part.compose(other.x_part),
            self.shift.add(other.shift.pullback(self.x_part)),
        )

    def invert(self) -> "SkewElement":
        inv = self.x_part.invert()
        return SkewElement(inv, self.shift.pullback(inv).negate())

    def power(self, n: int) -> "SkewElement":
        if n < 0:
            return self.invert().power(-n)
        result = SkewElement.identity()
        square = self
        while n:
            if n & 1:
                result = result.compose(square)
            n >>= 1
            if n:
                square = square.compose(square)
        return result

    def conjugate(self, h: "SkewElement") -> "SkewElement":
        """``h^-1 * self * h``, the element written ``self^h``."""
        return h.invert().compose(self).compose(h)

    def commutes(self, other: "SkewElement") -> bool:
        return self.compose(other) == other.compose(self)

    def breakpoint_xs(self) -> frozenset[Rational]:
        """x-coordinates (mod 1) where the map fails to be differentiable."""
        return self.x_part.breakpoint_xs() | self.shift.breakpoint_xs()

    def serialize(self) -> dict:
        return {"x_part": self.x_part.to_pairs(), "shift": self.shift.to_pairs()}

    @classmethod
    def deserialize(cls, data: dict) -> "SkewElement":
        return cls(PLMap.from_pairs(data["x_part"]), PLCocycle.from_pairs(data["shift"]))


def generator(symbol: str) -> SkewElement:
    """One of the four standard generators a, b, c, d (Greek aliases accepted)."""
    aliases = {"α": "a", "β": "b", "γ": "c", "δ": "d"}
    symbol = aliases.get(symbol, symbol)
    if symbol == "a":
        return SkewElement(PLMap.translation(Fraction(1, 6)), PLCocycle.zero())
    if symbol == "b":
        return SkewElement(PLMap.identity(), PLCocycle.constant(Fraction(1, 6)))
    if symbol == "c":
        return SkewElement(PLMap.identity(), base_cocycle())
    if symbol == "d":
        return SkewElement(base_plmap(), PLCocycle.zero())
    raise ValueError(f"unknown generator {symbol!r}")


def standard_generators() -> dict[str, SkewElement]:
    return {name: generator(name) for name in GENERATOR_NAMES}


@dataclass(frozen=True)
class GeneratorWord:
    """A freely reduced word in the generator letters a, b, c, d."""

    letters: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for sym, exp in self.letters:
            if sym not in GENERATOR_NAMES:
                raise ValueError(f"unknown letter {sym!r}")
            if exp == 0:
                raise ValueError("zero exponents are not allowed")
        for (s1, _), (s2, _) in zip(self.letters, self.letters[1:]):
            if s1 == s2:
                raise ValueError("adjacent letters must differ (word not reduced)")

    @classmethod
    def parse(cls, text: str) -> "GeneratorWord":
        return cls(tuple(parse_word(text, GENERATOR_NAMES)))

    def to_element(self, gens: dict[str, SkewElement] | None = None) -> SkewElement:
        gens = gens or standard_generators()
        result = SkewElement.identity()
        for sym, exp in self.letters:
            result = result.compose(gens[sym].power(exp))
        return result


def word_to_element(word, gens: dict[str, SkewElement] | None = None) -> SkewElement:
    """Exact product of generator powers, applied left to right.

    ``word`` may be a GeneratorWord, a word string, or an iterable of
    (letter, exponent) pairs.
    """
    if isinstance(word, str):
        word = GeneratorWord.parse(word)
    if isinstance(word, GeneratorWord):
        return word.to_element(gens)
    gens = gens or standard_generators()
    result = SkewElement.identity()
    for sym, exp in word:
        result = result.compose(gens[sym].power(exp))
    return result


def stepwise_apply(word, point: Point, gens: dict[str, SkewElement] | None = None) -> Point:
    """Apply a word one generator power at a time (the independent route)."""
    if isinstance(word, str):
        word = GeneratorWord.parse(word)
    letters = word.letters if isinstance(word, GeneratorWord) else word
    gens = gens or standard_generators()
    inverses: dict[str, SkewElement] = {}
    p = (rational(point[0]), rational(point[1]))
    for sym, exp in letters:
        if exp > 0:
            g = gens[sym]
        else:
            if sym not in inverses:
                inverses[sym] = gens[sym].invert()
            g = inverses[sym]
        for _ in range(abs(exp)):
            p = g.apply(p)
    return p


def compute_epsilon(gens: dict[str, SkewElement] | None = None) -> SkewElement:
    """The product c^d c^(da) c^(da^2) c^(da^3) c^(da^4) c^(da^5), exactly."""
    gens = gens or standard_generators()
    a, c, d = gens["a"], gens["c"], gens["d"]
    result = SkewElement.identity()
    for k in range(6):
        result = result.compose(c.conjugate(d.compose(a.power(k))))
    return result


def epsilon_offsets(gens: dict[str, SkewElement] | None = None) -> list[Rational]:
    """Vertical displacement of each factor of epsilon on the line x = 0."""
    gens = gens or standard_generators()
    a, c, d = gens["a"], gens["c"], gens["d"]
    zero = Fraction(0)
    offsets = []
    for k in range(6):
        g = c.conjugate(d.compose(a.power(k)))
        offsets.append(g.apply((zero, zero))[1])
    return offsets


@dataclass(frozen=True)
class RelationFact:
    id: str
    description: str
    holds: bool


class RelationReport:
    """Named, ordered verification results; stable ids for certificates."""

    def __init__(self, facts: Sequence[RelationFact]):
        self.facts = tuple(facts)
        self._by_id = {f.id: f for f in self.facts}

    def __iter__(self):
        return iter(self.facts)

    def __getitem__(self, fact_id: str) -> RelationFact:
        return self._by_id[fact_id]

    @property
    def all_hold(self) -> bool:
        return all(f.holds for f in self.facts)

    def rows(self) -> list[tuple[str, str, bool]]:
        return [(f.id, f.description, f.holds) for f in self.facts]


def verify_relations(gens: dict[str, SkewElement] | None = None) -> RelationReport:
    """Exact check of the defining identities among a, b, c, d.

    All facts hold for the standard generators; perturbed generator maps can
    be passed in to see which facts break.
    """
    gens = gens or standard_generators()
    a, b, c, d = (gens[n] for n in GENERATOR_NAMES)
    a3 = a.power(3)
    conjugates = [c.conjugate(d.compose(a.power(k))) for k in range(6)]
    eps = SkewElement.identity()
    for g in conjugates:
        eps = eps.compose(g)

    pairwise = all(
        conjugates[i].commutes(conjugates[j])
        for i in range(6)
        for j in range(i + 1, 6)
    )
    facts = [
        RelationFact("F1", "a b == b a", a.commutes(b)),
        RelationFact("F2", "b c == c b", b.commutes(c)),
        RelationFact("F3", "b d == d b", b.commutes(d)),
        RelationFact("F4", "c^(a^3) == c^-1", c.conjugate(a3) == c.invert()),
        RelationFact("F5", "d^(a^3) == d^-1", d.conjugate(a3) == d.invert()),
        RelationFact("F6", "c^d c^(da) ... c^(da^5) == b^-36", eps == b.power(-36)),
        RelationFact("F6a", "c^(da^6) == c^d", c.conjugate(d.compose(a.power(6))) == c.conjugate(d)),
        RelationFact("F6b", "the six conjugates pairwise commute", pairwise),
        RelationFact(
            "F7",
            "a, b, c, d are all non-identity",
            all(not g.is_identity for g in (a, b, c, d)),
        ),
        RelationFact("F8", "a is neither b nor b^-1", a != b and a != b.invert()),
    ]
    return RelationReport(facts)


def perturb_generators(spec: str) -> dict[str, SkewElement]:
    """Test hook: ``"d:=d b"`` replaces generator d by the product d*b."""
    if ":=" not in spec:
        raise WordSyntaxError("perturbation must look like NAME:=WORD")
    name, _, word_text = spec.partition(":=")
    name = name.strip()
    aliases = {"α": "a", "β": "b", "γ": "c", "δ": "d"}
    name = aliases.get(name, name)
    if name not in GENERATOR_NAMES:
        raise WordSyntaxError(f"cannot perturb unknown generator {name!r}")
    gens = standard_generators()
    gens[name] = word_to_element(word_text.strip())
    return gens
