"""Atom tables: named group elements with realizations, and verified facts.

Every fact a derivation cites must carry a verification that was actually
computed in the exact algebra -- skew elements for words in a, b, c, d and
plane words when the swapped generators ch, dh are involved.  Verification
happens once, up front; checking a derivation then only consults the stored
statuses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .. import plane as plane_mod
from .. import skew as skew_mod
from ..plane import DISTINCT, EQUAL, UNKNOWN, PlaneWord, equal_or_unknown, plane_word
from ..skew import SkewElement, word_to_element
from .words import EMPTY, Word, w_format, w_inv, w_mul, w_reduce

COMMUTE = "commute"
IDENTITY_EQ = "identity_eq"
NON_IDENTITY = "non_identity"
NOT_IN_SET = "not_in_set"


class UnknownFactError(KeyError):
    pass


@dataclass(frozen=True)
class Fact:
    """A citable statement about atoms, with a stable identifier.

    kinds and args:
      commute:       args = (x, y)          -- atoms x and y commute
      identity_eq:   args = (lhs, rhs)      -- two words equal in the group
      non_identity:  args = (x,)            -- atom x is not the identity
      not_in_set:    args = (x, y)          -- x is neither y nor y^-1
    """

    id: str
    kind: str
    args: tuple
    description: str = ""

    def __str__(self):
        if self.kind == COMMUTE:
            return f"{self.args[0]} {self.args[1]} == {self.args[1]} {self.args[0]}"
        if self.kind == IDENTITY_EQ:
            return f"{w_format(self.args[0])} == {w_format(self.args[1])}"
        if self.kind == NON_IDENTITY:
            return f"{self.args[0]} != 1"
        if self.kind == NOT_IN_SET:
            return f"{self.args[0]} is neither {self.args[1]} nor {self.args[1]}^-1"
        return f"{self.kind}{self.args}"


def commute_fact(fid, x, y):
    return Fact(fid, COMMUTE, (x, y))


def identity_eq_fact(fid, lhs: Word, rhs: Word):
    return Fact(fid, IDENTITY_EQ, (w_reduce(lhs), w_reduce(rhs)))


def non_identity_fact(fid, x):
    return Fact(fid, NON_IDENTITY, (x,))


def not_in_set_fact(fid, x, y):
    return Fact(fid, NOT_IN_SET, (x, y))


@dataclass(frozen=True)
class Realization:
    """How an atom is evaluated: a word in a concrete exact algebra."""

    algebra: str  # "skew" or "plane"
    word: str


class AtomTable:
    """Atoms bound to realizations plus the fact base grounded in them."""

    def __init__(self, atoms: dict[str, Realization], facts: list[Fact]):
        self.atoms = dict(atoms)
        self.facts: dict[str, Fact] = {}
        for f in facts:
            if f.id in self.facts:
                raise ValueError(f"duplicate fact id {f.id}")
            self.facts[f.id] = f
        self.status: dict[str, bool] = {}
        self.failures: dict[str, str] = {}
        self._skew_cache: dict[str, SkewElement] = {}
        self._plane_cache: dict[str, PlaneWord] = {}

    # -- realization ------------------------------------------------------

    def _algebra(self) -> str:
        algebras = {r.algebra for r in self.atoms.values()}
        if len(algebras) != 1:
            raise ValueError("atoms must share one algebra")
        return algebras.pop()

    def realize_skew(self, word: Word) -> SkewElement:
        result = SkewElement.identity()
        for name, exp in word:
            if name not in self._skew_cache:
                self._skew_cache[name] = word_to_element(self.atoms[name].word)
            result = result.compose(self._skew_cache[name].power(exp))
        return result

    def realize_plane(self, word: Word) -> PlaneWord:
        result = PlaneWord.identity()
        for name, exp in word:
            if name not in self._plane_cache:
                self._plane_cache[name] = plane_word(self.atoms[name].word)
            result = result.concat(self._plane_cache[name].power(exp))
        return result

    # -- verification -----------------------------------------------------

    def _verify_equal(self, lhs: Word, rhs: Word) -> Optional[bool]:
        """True/False when decided, None when the algebra cannot decide."""
        if self._algebra() == "skew":
            return self.realize_skew(lhs) == self.realize_skew(rhs)
        verdict = equal_or_unknown(self.realize_plane(lhs), self.realize_plane(rhs))
        if verdict.status == EQUAL:
            return True
        if verdict.status == DISTINCT:
            return False
        return None

    def verify_fact(self, fact: Fact) -> bool:
        outcome: Optional[bool]
        if fact.kind == COMMUTE:
            x, y = fact.args
            u = ((x, 1), (y, 1))
            v = ((y, 1), (x, 1))
            outcome = self._verify_equal(u, v)
        elif fact.kind == IDENTITY_EQ:
            outcome = self._verify_equal(fact.args[0], fact.args[1])
        elif fact.kind == NON_IDENTITY:
            decided = self._verify_equal(((fact.args[0], 1),), EMPTY)
            outcome = None if decided is None else not decided
        elif fact.kind == NOT_IN_SET:
            x, y = fact.args
            first = self._verify_equal(((x, 1),), ((y, 1),))
            second = self._verify_equal(((x, 1),), ((y, -1),))
            if first is None or second is None:
                outcome = None
            else:
                outcome = not first and not second
        else:
            raise ValueError(f"unknown fact kind {fact.kind}")
        if outcome is None:
            self.failures[fact.id] = "algebra could not decide the statement"
            return False
        if not outcome:
            self.failures[fact.id] = "statement is false in the realization"
        return outcome

    def verify_all(self) -> bool:
        ok = True
        for fid, fact in self.facts.items():
            holds = self.verify_fact(fact)
            self.status[fid] = holds
            ok = ok and holds
        return ok

    def is_verified(self, fid: str) -> bool:
        return self.status.get(fid, False)

    def get(self, fid: str) -> Fact:
        try:
            return self.facts[fid]
        except KeyError:
            raise UnknownFactError(fid) from None

    # -- serialization ----------------------------------------------------

    def serialize(self) -> dict:
        return {
            "atoms": {
                name: {"algebra": r.algebra, "word": r.word}
                for name, r in self.atoms.items()
            },
            "facts": [
                {
                    "id": f.id,
                    "kind": f.kind,
                    "args": _serialize_args(f),
                    "description": f.description,
                }
                for f in self.facts.values()
            ],
        }

    @classmethod
    def deserialize(cls, data: dict) -> "AtomTable":
        atoms = {
            name: Realization(spec["algebra"], spec["word"])
            for name, spec in data["atoms"].items()
        }
        facts = []
        for item in data["facts"]:
            args = _parse_args(item["kind"], item["args"])
            facts.append(Fact(item["id"], item["kind"], args, item.get("description", "")))
        return cls(atoms, facts)


def _serialize_args(fact: Fact):
    if fact.kind == IDENTITY_EQ:
        return [[list(pair) for pair in side] for side in fact.args]
    return list(fact.args)


def _parse_args(kind: str, raw):
    if kind == IDENTITY_EQ:
        return tuple(tuple((sym, int(exp)) for sym, exp in side) for side in raw)
    return tuple(raw)


def required_commute_facts(word: Word, t_atom: str, cited: list[Fact]):
    """Check the cited commutation facts cover every letter of ``word``.

    The closure rule: a word commutes with t when each of its letters is t
    itself or is tied to t by a cited commute fact.  Returns the list of
    fact ids actually used (the parents of the derived fact), or None when
    some letter is uncovered.
    """
    used = []
    for name, _ in word:
        if name == t_atom:
            continue
        for f in cited:
            if f.kind == COMMUTE and {f.args[0], f.args[1]} == {name, t_atom}:
                if f.id not in used:
                    used.append(f.id)
                break
        else:
            return None
    return used
