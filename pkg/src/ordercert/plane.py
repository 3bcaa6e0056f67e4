"""Words mixing vertical-skew and horizontal-skew plane homeomorphisms.

A ``V`` letter holds a :class:`~ordercert.skew.SkewElement` g acting as
(x, y) -> (f(x), y + p(x)).  An ``H`` letter holds the swap-conjugated copy
of g, acting as (x, y) -> (x + p(y), f(y)).  The coordinate swap itself is
never a letter; it only appears as the bijection between the two kinds.

Words are kept in a simplified form: adjacent letters of the same kind merge
by exact composition, identity letters vanish, and pure translations -- which
live in both copies -- are absorbed into either neighbour and stored V-first
when they stand alone.  Structural equality of simplified words therefore
decides every equality this package needs; a bounded witness search handles
inequality, and anything else is honestly reported as unknown.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .exactpl import PLCocycle, PLMap, Rational, format_rational, rational
from .skew import (
    GENERATOR_NAMES,
    RelationFact,
    RelationReport,
    SkewElement,
    generator,
    standard_generators,
)
from .wordsyntax import parse_word

Point = tuple

PLANE_GENERATOR_NAMES = ("a", "b", "c", "d", "ch", "dh")

DEFAULT_SEED = 7302016


def search_seed() -> int:
    value = os.environ.get("ORDERCERT_SEED")
    return int(value) if value else DEFAULT_SEED


@dataclass(frozen=True)
class Letter:
    """One word letter: kind "V" or "H" plus the underlying skew element."""

    kind: str
    elem: SkewElement

    def apply(self, point: Point) -> Point:
        x = rational(point[0])
        y = rational(point[1])
        if self.kind == "V":
            return self.elem.apply((x, y))
        fx, fy = self.elem.apply((y, x))
        return (fy, fx)

    def invert(self) -> "Letter":
        return Letter(self.kind, self.elem.invert())

    def swapped(self) -> "Letter":
        return Letter("H" if self.kind == "V" else "V", self.elem)

    @property
    def is_identity(self) -> bool:
        return self.elem.is_identity

    @property
    def is_translation(self) -> bool:
        return self.elem.is_translation

    def as_kind(self, kind: str) -> "Letter":
        """Re-express a pure translation in the other copy."""
        if kind == self.kind:
            return self
        if not self.is_translation:
            raise ValueError("only pure translations live in both copies")
        u, v = self.elem.translation_vector()
        swapped = SkewElement(PLMap.translation(v), PLCocycle.constant(u))
        return Letter(kind, swapped)


def _merge(left: Letter, right: Letter) -> Letter:
    return Letter(left.kind, left.elem.compose(right.elem))


def _push(stack: list[Letter], letter: Letter) -> None:
    while True:
        if letter.is_identity:
            return
        if letter.is_translation and letter.kind != "V":
            letter = letter.as_kind("V")
        if not stack:
            stack.append(letter)
            return
        top = stack[-1]
        if top.kind == letter.kind:
            stack.pop()
            letter = _merge(top, letter)
        elif letter.is_translation:
            stack.pop()
            letter = _merge(top, letter.as_kind(top.kind))
        elif top.is_translation:
            stack.pop()
            letter = _merge(top.as_kind(letter.kind), letter)
        else:
            stack.append(letter)
            return


class PlaneWord:
    """A simplified word of V and H letters; immutable."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        stack: list[Letter] = []
        for letter in letters:
            _push(stack, letter)
        object.__setattr__(self, "letters", tuple(stack))

    def __setattr__(self, name, value):
        raise AttributeError("PlaneWord is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __eq__(self, other):
        if not isinstance(other, PlaneWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        kinds = "".join(l.kind for l in self.letters) or "1"
        return f"PlaneWord<{kinds}>"

    @classmethod
    def identity(cls) -> "PlaneWord":
        return cls(())

    @property
    def is_identity_word(self) -> bool:
        return not self.letters

    def concat(self, other: "PlaneWord") -> "PlaneWord":
        return PlaneWord(self.letters + other.letters)

    def __mul__(self, other: "PlaneWord") -> "PlaneWord":
        return self.concat(other)

    def invert(self) -> "PlaneWord":
        return PlaneWord(tuple(l.invert() for l in reversed(self.letters)))

    def power(self, n: int) -> "PlaneWord":
        if n < 0:
            return self.invert().power(-n)
        result = PlaneWord.identity()
        for _ in range(n):
            result = result.concat(self)
        return result

    def apply(self, point: Point) -> Point:
        p = (rational(point[0]), rational(point[1]))
        for letter in self.letters:
            p = letter.apply(p)
        return p

    def eta_conjugate(self) -> "PlaneWord":
        """Conjugation by the coordinate swap: V and H letters trade places."""
        return PlaneWord(tuple(l.swapped() for l in self.letters))

    def serialize(self) -> list[dict]:
        return [{"kind": l.kind, "elem": l.elem.serialize()} for l in self.letters]

    @classmethod
    def deserialize(cls, data) -> "PlaneWord":
        return cls(Letter(item["kind"], SkewElement.deserialize(item["elem"])) for item in data)


def h_generator(symbol: str) -> PlaneWord:
    """The six generators a, b, c, d, ch, dh as one-letter words."""
    aliases = {
        "α": "a", "β": "b", "γ": "c", "δ": "d",
        "γη": "ch", "δη": "dh",
    }
    symbol = aliases.get(symbol, symbol)
    if symbol in GENERATOR_NAMES:
        return PlaneWord((Letter("V", generator(symbol)),))
    if symbol in ("ch", "dh"):
        return PlaneWord((Letter("H", generator(symbol[0])),))
    raise ValueError(f"unknown generator {symbol!r}")


def plane_word(text_or_letters, gens: dict[str, PlaneWord] | None = None) -> PlaneWord:
    """Build a word from a string ("a c^-1 ch^2") or (letter, exp) pairs."""
    if isinstance(text_or_letters, str):
        pairs = parse_word(text_or_letters, PLANE_GENERATOR_NAMES)
    else:
        pairs = list(text_or_letters)
    gens = gens or {name: h_generator(name) for name in PLANE_GENERATOR_NAMES}
    result = PlaneWord.identity()
    for sym, exp in pairs:
        result = result.concat(gens[sym].power(exp))
    return result


def stepwise_apply_plane(text_or_letters, point: Point,
                         gens: dict[str, PlaneWord] | None = None) -> Point:
    if isinstance(text_or_letters, str):
        pairs = parse_word(text_or_letters, PLANE_GENERATOR_NAMES)
    else:
        pairs = list(text_or_letters)
    gens = gens or {name: h_generator(name) for name in PLANE_GENERATOR_NAMES}
    p = (rational(point[0]), rational(point[1]))
    for sym, exp in pairs:
        g = gens[sym] if exp > 0 else gens[sym].invert()
        for _ in range(abs(exp)):
            p = g.apply(p)
    return p


EQUAL = "equal"
DISTINCT = "distinct"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class EqualityVerdict:
    status: str
    witness: Optional[Point] = None

    def __bool__(self):
        return self.status == EQUAL


@dataclass(frozen=True)
class WitnessSearchConfig:
    """Deterministic grid, then seeded random points; exact throughout."""

    max_denominator: int = 24
    coord_bound: int = 2
    random_count: int = 64
    random_max_denominator: int = 1000
    seed: Optional[int] = None


def _grid_points(config: WitnessSearchConfig):
    bound = config.coord_bound
    for q in range(1, config.max_denominator + 1):
        for i in range(-bound * q, bound * q + 1):
            for j in range(-bound * q, bound * q + 1):
                if gcd(gcd(abs(i), abs(j)), q) == 1:
                    yield (Fraction(i, q), Fraction(j, q))


def _random_points(config: WitnessSearchConfig):
    rng = random.Random(config.seed if config.seed is not None else search_seed())
    qmax = config.random_max_denominator
    for _ in range(config.random_count):
        q = rng.randint(1, qmax)
        yield (
            Fraction(rng.randint(-2 * q, 2 * q), q),
            Fraction(rng.randint(-2 * q, 2 * q), q),
        )


def _single_letter_witness(w1: PlaneWord, w2: PlaneWord) -> Optional[Point]:
    """Exact witness for one-letter (or empty) words of a common kind.

    Distinct canonical skew elements differ at a breakpoint of the union of
    their components' corners, so no search is needed.
    """
    kinds = {l.kind for l in w1.letters} | {l.kind for l in w2.letters}
    if len(kinds) > 1:
        return None
    kind = kinds.pop() if kinds else "V"
    e1 = w1.letters[0].elem if w1.letters else SkewElement.identity()
    e2 = w2.letters[0].elem if w2.letters else SkewElement.identity()
    xs = sorted(
        set(e1.x_part.xs) | set(e2.x_part.xs) | set(e1.shift.xs) | set(e2.shift.xs)
    )
    zero = Fraction(0)
    for x in xs:
        if e1.apply((x, zero)) != e2.apply((x, zero)):
            return (x, zero) if kind == "V" else (zero, x)
    return None


def equal_or_unknown(w1: PlaneWord, w2: PlaneWord,
                     config: WitnessSearchConfig | None = None) -> EqualityVerdict:
    """Decide equality structurally; otherwise hunt for a rational witness.

    ``equal`` only ever comes from identical simplified forms, never from
    sampling.  ``distinct`` always carries a point where the images differ.
    """
    if w1.letters == w2.letters:
        return EqualityVerdict(EQUAL)
    config = config or WitnessSearchConfig()
    if len(w1) <= 1 and len(w2) <= 1:
        witness = _single_letter_witness(w1, w2)
        if witness is not None:
            return EqualityVerdict(DISTINCT, witness)
    for point in _grid_points(config):
        if w1.apply(point) != w2.apply(point):
            return EqualityVerdict(DISTINCT, point)
    for point in _random_points(config):
        if w1.apply(point) != w2.apply(point):
            return EqualityVerdict(DISTINCT, point)
    return EqualityVerdict(UNKNOWN)


def _epsilon_mirror_word(gens: dict[str, PlaneWord]) -> PlaneWord:
    """Letterwise swap image of the six-factor epsilon product."""
    b, ch, dh = gens["b"], gens["ch"], gens["dh"]
    result = PlaneWord.identity()
    for k in range(6):
        conj = dh.concat(b.power(k))
        result = result.concat(conj.invert()).concat(ch).concat(conj)
    return result


def verify_mirrored_relations(
    skew_gens: dict[str, SkewElement] | None = None,
) -> RelationReport:
    """Exact verification of the swapped copies of the defining identities.

    Every check runs inside the horizontal-skew copy via plane-word algebra;
    nothing is inferred from the vertical-side report by symmetry.
    """
    skew_gens = skew_gens or standard_generators()
    gens = {name: PlaneWord((Letter("V", skew_gens[name]),)) for name in GENERATOR_NAMES}
    gens["ch"] = PlaneWord((Letter("H", skew_gens["c"]),))
    gens["dh"] = PlaneWord((Letter("H", skew_gens["d"]),))
    a, b, ch, dh = gens["a"], gens["b"], gens["ch"], gens["dh"]

    def same(u: PlaneWord, v: PlaneWord) -> bool:
        return u.letters == v.letters

    b3 = b.power(3)
    conj_ch = b3.invert().concat(ch).concat(b3)
    conj_dh = b3.invert().concat(dh).concat(b3)
    eps_mirror = _epsilon_mirror_word(gens)
    a_minus36 = a.power(-36)

    facts = [
        RelationFact("M1", "b a == a b", same(b.concat(a), a.concat(b))),
        RelationFact("M2", "a ch == ch a", same(a.concat(ch), ch.concat(a))),
        RelationFact("M3", "a dh == dh a", same(a.concat(dh), dh.concat(a))),
        RelationFact("M4", "ch^(b^3) == ch^-1", same(conj_ch, ch.invert())),
        RelationFact("M5", "dh^(b^3) == dh^-1", same(conj_dh, dh.invert())),
        RelationFact("M6", "ch^dh ch^(dh b) ... ch^(dh b^5) == a^-36", same(eps_mirror, a_minus36)),
        RelationFact("M7ch", "ch is non-identity", not ch.is_identity_word),
        RelationFact("M7dh", "dh is non-identity", not dh.is_identity_word),
        RelationFact(
            "M8",
            "b is neither a nor a^-1",
            not same(b, a) and not same(b, a.invert()),
        ),
    ]
    return RelationReport(facts)
