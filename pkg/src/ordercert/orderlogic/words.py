"""Formal words over named atoms, plus the two judgment shapes.

A word is a freely reduced tuple of (atom, exponent) pairs; the empty tuple
is the identity.  Judgments are either a strict inequality between two words
(relative to one assumed left-invariant order) or the bare contradiction
marker that closes a derivation branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

Word = Tuple[Tuple[str, int], ...]

EMPTY: Word = ()


def w_reduce(pairs) -> Word:
    out: list[list] = []
    for sym, exp in pairs:
        if exp == 0:
            continue
        if out and out[-1][0] == sym:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([sym, int(exp)])
    return tuple((sym, exp) for sym, exp in out)


def w_mul(*words: Word) -> Word:
    pairs = []
    for w in words:
        pairs.extend(w)
    return w_reduce(pairs)


def w_inv(word: Word) -> Word:
    return tuple((sym, -exp) for sym, exp in reversed(word))


def atom_pow(name: str, exp: int) -> Word:
    return ((name, exp),) if exp else EMPTY


def t_pow(t: tuple[str, int], m: int) -> Word:
    """Power of a signed base: t = (atom, +1/-1), so t^m = atom^(sign*m)."""
    name, sign = t
    return atom_pow(name, sign * m)


def w_format(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(sym if exp == 1 else f"{sym}^{exp}" for sym, exp in word)


@dataclass(frozen=True)
class Less:
    """lhs < rhs in the assumed left-order."""

    lhs: Word
    rhs: Word

    def __str__(self):
        return f"{w_format(self.lhs)} < {w_format(self.rhs)}"


@dataclass(frozen=True)
class WordEq:
    """Branch hypothesis lhs = rhs (middle case of a trichotomy)."""

    lhs: Word
    rhs: Word

    def __str__(self):
        return f"{w_format(self.lhs)} = {w_format(self.rhs)}"


class _Contradiction:
    def __repr__(self):
        return "CONTRADICTION"

    def __str__(self):
        return "contradiction"


CONTRADICTION = _Contradiction()

Judgment = object  # Less | WordEq | CONTRADICTION
