"""Parser for the little word language used on the command line and in tests.

A word is whitespace-separated tokens.  Each token is a letter, optionally
followed by ``^`` and either a (signed) integer exponent or a conjugator --
a run of letters with optional integer exponents, written without spaces.
``x^w`` expands to ``w^-1 x w``.  Examples over the letters a, b, c, d, ch, dh::

    a^3          -> a a a
    c^d          -> d^-1 c d
    c^da2        -> a^-2 d^-1 c d a^2

Greek aliases are accepted on input (alpha/beta/gamma/delta and the
eta-conjugated pair); ASCII names are always used on output.
"""

from __future__ import annotations

GREEK_ALIASES = {
    "α": "a",  # alpha
    "β": "b",  # beta
    "γ": "c",  # gamma
    "δ": "d",  # delta
    "γη": "ch",  # gamma^eta
    "δη": "dh",  # delta^eta
}


class WordSyntaxError(ValueError):
    """Raised for malformed word or point strings."""


def _reduce(letters):
    out: list[list] = []
    for sym, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == sym:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([sym, exp])
    return [(sym, exp) for sym, exp in out]


def _take_letter(text, pos, alphabet):
    # longest match first so "ch"/"dh" win over "c"/"d"
    for name in sorted(alphabet, key=len, reverse=True):
        if text.startswith(name, pos):
            return name, pos + len(name)
    for greek in sorted(GREEK_ALIASES, key=len, reverse=True):
        ascii_name = GREEK_ALIASES[greek]
        if ascii_name in alphabet and text.startswith(greek, pos):
            return ascii_name, pos + len(greek)
    raise WordSyntaxError(f"unknown letter at {text[pos:]!r}")


def _take_int(text, pos):
    start = pos
    if pos < len(text) and text[pos] in "+-":
        pos += 1
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start or not text[start:pos].lstrip("+-"):
        raise WordSyntaxError(f"expected integer at {text[start:]!r}")
    return int(text[start:pos]), pos


def _parse_conjugator(text, alphabet):
    pos = 0
    letters = []
    while pos < len(text):
        sym, pos = _take_letter(text, pos, alphabet)
        exp = 1
        if pos < len(text) and (text[pos].isdigit() or text[pos] in "+-"):
            exp, pos = _take_int(text, pos)
        letters.append((sym, exp))
    if not letters:
        raise WordSyntaxError("empty conjugator")
    return letters


def parse_word(text: str, alphabet) -> list[tuple[str, int]]:
    """Parse a word string into a reduced list of (letter, exponent) pairs."""
    alphabet = set(alphabet)
    letters: list[tuple[str, int]] = []
    for token in text.split():
        sym, pos = _take_letter(token, 0, alphabet)
        if pos == len(token):
            letters.append((sym, 1))
            continue
        if token[pos] != "^":
            raise WordSyntaxError(f"unexpected suffix in token {token!r}")
        suffix = token[pos + 1:]
        if not suffix:
            raise WordSyntaxError(f"dangling '^' in token {token!r}")
        if suffix.lstrip("+-").isdigit():
            letters.append((sym, int(suffix)))
        else:
            conj = _parse_conjugator(suffix, alphabet)
            letters.extend((s, -e) for s, e in reversed(conj))
            letters.append((sym, 1))
            letters.extend(conj)
    return _reduce(letters)


def format_word(letters) -> str:
    parts = []
    for sym, exp in letters:
        parts.append(sym if exp == 1 else f"{sym}^{exp}")
    return " ".join(parts)
