"""The inference rules of the left-order inequality calculus.

``apply_rule`` is the single source of truth: script builders call it to
construct conclusions and the certificate checker calls it again to validate
them, so a stored conclusion is accepted only if it is exactly what the rule
instance produces.

Core rules (u, v words commuting with the signed base t = (atom, sign)):

  invert            u < t^m              ==>  t^-m < u^-1        (and the > form)
  product           u < t^m, v < t^n     ==>  u v < t^(m+n)      (and the > form)
  conjugate_window  t^(m-1) < u < t^m,
                    t^n1 < v < t^n2      ==>  t^(m-2) < u^v < t^(m+1)
  flip_bound        u^v = u^-1 (fact),
                    t^n1 < v < t^n2, 1 < t ==> t^-1 < u < t

Structural rules: transitivity, left multiplication, substitution of a
verified word equality, and the two contradiction closers (crossing
inequalities; an equality hypothesis against a non-identity / distinctness
fact).  Case splitting lives in the derivation tree, not here.
"""

from __future__ import annotations

from .facts import COMMUTE, IDENTITY_EQ, NON_IDENTITY, NOT_IN_SET, Fact, required_commute_facts
from .words import CONTRADICTION, EMPTY, Judgment, Less, Word, WordEq, atom_pow, t_pow, w_format, w_inv, w_mul, w_reduce

CORE_RULES = ("invert", "product", "conjugate_window", "flip_bound")
STRUCTURAL_RULES = ("trans", "lmul", "subst", "absurd", "eq_contra")
ALL_RULES = CORE_RULES + STRUCTURAL_RULES


class RuleError(ValueError):
    """A step is not a correct instance of its rule."""


def _word(params, key) -> Word:
    try:
        return w_reduce(tuple((sym, int(exp)) for sym, exp in params[key]))
    except (KeyError, TypeError, ValueError) as exc:
        raise RuleError(f"malformed word parameter {key!r}") from exc


def _base(params) -> tuple[str, int]:
    try:
        name, sign = params["t"]
    except (KeyError, TypeError, ValueError) as exc:
        raise RuleError("malformed base parameter 't'") from exc
    if sign not in (1, -1):
        raise RuleError("base sign must be +1 or -1")
    return (str(name), int(sign))


def _int(params, key) -> int:
    value = params.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise RuleError(f"parameter {key!r} must be an integer")
    return value


def _expect(premises, index, expected: Judgment, label: str):
    if index >= len(premises):
        raise RuleError(f"missing premise #{index + 1} ({label})")
    if premises[index] != expected:
        raise RuleError(
            f"premise #{index + 1} must be '{expected}' (got '{premises[index]}')"
        )


def _need_commute(word: Word, t: tuple[str, int], cited: list[Fact], label: str):
    if required_commute_facts(word, t[0], cited) is None:
        raise RuleError(f"commutation of {label} ({w_format(word)}) with {t[0]} is not covered by cited facts")


def apply_rule(rule: str, params: dict, premises: list[Judgment], cited: list[Fact]) -> Judgment:
    """Return the unique conclusion of this rule instance, or raise RuleError."""
    if rule == "invert":
        return _rule_invert(params, premises, cited)
    if rule == "product":
        return _rule_product(params, premises, cited)
    if rule == "conjugate_window":
        return _rule_conjugate_window(params, premises, cited)
    if rule == "flip_bound":
        return _rule_flip_bound(params, premises, cited)
    if rule == "trans":
        return _rule_trans(premises)
    if rule == "lmul":
        return _rule_lmul(params, premises)
    if rule == "subst":
        return _rule_subst(params, premises, cited)
    if rule == "absurd":
        return _rule_absurd(premises)
    if rule == "eq_contra":
        return _rule_eq_contra(premises, cited)
    raise RuleError(f"unknown rule {rule!r}")


def _rule_invert(params, premises, cited):
    u = _word(params, "u")
    t = _base(params)
    m = _int(params, "m")
    direction = params.get("direction", "lt")
    _need_commute(u, t, cited, "u")
    if direction == "lt":
        _expect(premises, 0, Less(u, t_pow(t, m)), "u < t^m")
        return Less(t_pow(t, -m), w_inv(u))
    if direction == "gt":
        _expect(premises, 0, Less(t_pow(t, m), u), "t^m < u")
        return Less(w_inv(u), t_pow(t, -m))
    raise RuleError("direction must be 'lt' or 'gt'")


def _rule_product(params, premises, cited):
    u = _word(params, "u")
    v = _word(params, "v")
    t = _base(params)
    m = _int(params, "m")
    n = _int(params, "n")
    direction = params.get("direction", "lt")
    _need_commute(u, t, cited, "u")
    _need_commute(v, t, cited, "v")
    if direction == "lt":
        _expect(premises, 0, Less(u, t_pow(t, m)), "u < t^m")
        _expect(premises, 1, Less(v, t_pow(t, n)), "v < t^n")
        return Less(w_mul(u, v), t_pow(t, m + n))
    if direction == "gt":
        _expect(premises, 0, Less(t_pow(t, m), u), "t^m < u")
        _expect(premises, 1, Less(t_pow(t, n), v), "t^n < v")
        return Less(t_pow(t, m + n), w_mul(u, v))
    raise RuleError("direction must be 'lt' or 'gt'")


def _rule_conjugate_window(params, premises, cited):
    u = _word(params, "u")
    v = _word(params, "v")
    t = _base(params)
    m = _int(params, "m")
    n1 = _int(params, "n1")
    n2 = _int(params, "n2")
    part = params.get("part")
    if n1 >= n2:
        raise RuleError("conjugator window needs n1 < n2")
    _need_commute(u, t, cited, "u")
    _need_commute(v, t, cited, "v")
    _expect(premises, 0, Less(t_pow(t, m - 1), u), "t^(m-1) < u")
    _expect(premises, 1, Less(u, t_pow(t, m)), "u < t^m")
    _expect(premises, 2, Less(t_pow(t, n1), v), "t^n1 < v")
    _expect(premises, 3, Less(v, t_pow(t, n2)), "v < t^n2")
    conj = w_mul(w_inv(v), u, v)
    if part == "lower":
        return Less(t_pow(t, m - 2), conj)
    if part == "upper":
        return Less(conj, t_pow(t, m + 1))
    raise RuleError("part must be 'lower' or 'upper'")


def _rule_flip_bound(params, premises, cited):
    u = _word(params, "u")
    v = _word(params, "v")
    t = _base(params)
    n1 = _int(params, "n1")
    n2 = _int(params, "n2")
    part = params.get("part")
    if n1 >= n2:
        raise RuleError("conjugator window needs n1 < n2")
    _need_commute(u, t, cited, "u")
    _need_commute(v, t, cited, "v")
    _expect(premises, 0, Less(t_pow(t, n1), v), "t^n1 < v")
    _expect(premises, 1, Less(v, t_pow(t, n2)), "v < t^n2")
    _expect(premises, 2, Less(EMPTY, t_pow(t, 1)), "1 < t")
    conj = w_mul(w_inv(v), u, v)
    flipped = w_inv(u)
    for f in cited:
        if f.kind == IDENTITY_EQ and (
            f.args == (conj, flipped) or f.args == (flipped, conj)
        ):
            break
    else:
        raise RuleError(
            f"no cited fact states {w_format(conj)} == {w_format(flipped)}"
        )
    if part == "lower":
        return Less(t_pow(t, -1), u)
    if part == "upper":
        return Less(u, t_pow(t, 1))
    raise RuleError("part must be 'lower' or 'upper'")


def _rule_trans(premises):
    if len(premises) < 2:
        raise RuleError("transitivity needs two premises")
    p1, p2 = premises[0], premises[1]
    if not isinstance(p1, Less) or not isinstance(p2, Less):
        raise RuleError("transitivity premises must be inequalities")
    if p1.rhs != p2.lhs:
        raise RuleError(
            f"middle words differ: '{w_format(p1.rhs)}' vs '{w_format(p2.lhs)}'"
        )
    return Less(p1.lhs, p2.rhs)


def _rule_lmul(params, premises):
    w = _word(params, "w")
    if len(premises) < 1 or not isinstance(premises[0], Less):
        raise RuleError("left multiplication needs one inequality premise")
    p = premises[0]
    return Less(w_mul(w, p.lhs), w_mul(w, p.rhs))


def _rule_subst(params, premises, cited):
    side = params.get("side")
    pos = _int(params, "pos")
    direction = params.get("dir", "lr")
    if side not in ("lhs", "rhs"):
        raise RuleError("side must be 'lhs' or 'rhs'")
    if len(premises) < 1 or not isinstance(premises[0], Less):
        raise RuleError("substitution needs one inequality premise")
    eq = None
    for f in cited:
        if f.kind == IDENTITY_EQ:
            eq = f
            break
    if eq is None:
        raise RuleError("substitution needs a cited word-equality fact")
    pattern, replacement = eq.args if direction == "lr" else (eq.args[1], eq.args[0])
    p = premises[0]
    target = p.lhs if side == "lhs" else p.rhs
    if pos < 0 or pos + len(pattern) > len(target):
        raise RuleError("substitution slice out of range")
    if target[pos: pos + len(pattern)] != pattern:
        raise RuleError(
            f"premise {side} does not contain '{w_format(pattern)}' at position {pos}"
        )
    new_word = w_mul(target[:pos], replacement, target[pos + len(pattern):])
    if side == "lhs":
        return Less(new_word, p.rhs)
    return Less(p.lhs, new_word)


def _rule_absurd(premises):
    if len(premises) == 1:
        p = premises[0]
        if isinstance(p, Less) and p.lhs == p.rhs:
            return CONTRADICTION
        raise RuleError("single-premise absurdity needs w < w")
    if len(premises) >= 2:
        p1, p2 = premises[0], premises[1]
        if (
            isinstance(p1, Less)
            and isinstance(p2, Less)
            and p1.lhs == p2.rhs
            and p1.rhs == p2.lhs
        ):
            return CONTRADICTION
        raise RuleError("absurdity needs crossing inequalities x < y and y < x")
    raise RuleError("absurdity needs premises")


def _equation_forms(eq: WordEq):
    w1, w2 = eq.lhs, eq.rhs
    return {
        w_mul(w1, w_inv(w2)),
        w_mul(w_inv(w2), w1),
        w_mul(w2, w_inv(w1)),
        w_mul(w_inv(w1), w2),
    }


def _rule_eq_contra(premises, cited):
    if len(premises) < 1 or not isinstance(premises[0], WordEq):
        raise RuleError("needs an equality hypothesis premise")
    forms = _equation_forms(premises[0])
    for f in cited:
        if f.kind == NON_IDENTITY:
            x = f.args[0]
            if atom_pow(x, 1) in forms or atom_pow(x, -1) in forms:
                return CONTRADICTION
        if f.kind == NOT_IN_SET:
            x, y = f.args
            for e in (1, -1):
                patterns = (
                    w_mul(atom_pow(x, 1), atom_pow(y, e)),
                    w_mul(atom_pow(y, e), atom_pow(x, 1)),
                    w_mul(atom_pow(x, -1), atom_pow(y, e)),
                    w_mul(atom_pow(y, e), atom_pow(x, -1)),
                )
                if any(p in forms for p in patterns):
                    return CONTRADICTION
    raise RuleError("equality hypothesis is not refuted by any cited fact")
