"""Derivation trees and the checker that validates them step by step.

A derivation is a tree of nodes.  Each node carries a list of steps (rule
applications whose premises are earlier steps or enclosing hypotheses) and
optionally ends in a case split whose branches are sub-nodes.  A branch
introduces hypothesis judgments; a leaf is valid when it has derived the
goal judgments in scope, or a contradiction (which closes any goal).

Split kinds:

  trichotomy(w1, w2)       -- branches w1 < w2 | w1 = w2 | w2 < w1
  window(v, t, n1, n2)     -- from t^n1 < v < t^n2 and 1 < t, branches
                              t^n0 < v < t^(n0+1) for n0 in [n1, n2-1] and
                              v = t^n0 for n0 in (n1, n2); the premise ids
                              must be cited on the split
  given(...)               -- root-level assumption cases: each branch
                              declares its own hypotheses and goal, so the
                              derivation certifies the conjunction of
                              per-branch conditionals

Checking is pure, deterministic, and reports the first failing step in tree
order.  Facts are consulted through an :class:`AtomTable` whose verification
statuses were computed beforehand by the exact algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .facts import AtomTable, UnknownFactError
from .rules import RuleError, apply_rule
from .words import CONTRADICTION, Judgment, Less, Word, WordEq, t_pow, w_format

CONTRADICTION_GOAL = "contradiction"


@dataclass(frozen=True)
class Step:
    id: str
    rule: str
    params: dict
    premises: tuple[str, ...]
    facts: tuple[str, ...]
    conclusion: Judgment


@dataclass(frozen=True)
class Hypothesis:
    id: str
    judgment: Judgment


@dataclass
class Branch:
    name: str
    hypotheses: tuple[Hypothesis, ...]
    node: "Node"
    goal: Union[str, tuple, None] = None  # None inherits the enclosing goal


@dataclass
class Split:
    kind: str  # trichotomy | window | given
    params: dict
    premises: tuple[str, ...]
    branches: tuple[Branch, ...]


@dataclass
class Node:
    steps: tuple[Step, ...] = ()
    split: Optional[Split] = None


@dataclass
class Derivation:
    name: str
    table: AtomTable
    goal: Union[str, tuple]  # CONTRADICTION_GOAL or a tuple of judgments
    root: Node

    def count_steps(self) -> int:
        def walk(node: Node) -> int:
            total = len(node.steps)
            if node.split:
                for br in node.split.branches:
                    total += walk(br.node)
            return total

        return walk(self.root)

    def count_branches(self) -> int:
        def walk(node: Node) -> int:
            if not node.split:
                return 1
            return sum(walk(br.node) for br in node.split.branches)

        return walk(self.root)


VALID = "valid"
INVALID = "invalid"
UNKNOWN_FACTS = "unknown_facts"


@dataclass(frozen=True)
class Verdict:
    status: str
    step_id: str = ""
    reason: str = ""

    @property
    def is_valid(self) -> bool:
        return self.status == VALID

    def __str__(self):
        if self.is_valid:
            return "valid"
        return f"{self.status} at {self.step_id or '<structure>'}: {self.reason}"


class _Failure(Exception):
    def __init__(self, status, step_id, reason):
        super().__init__(reason)
        self.verdict = Verdict(status, step_id, reason)


def _fail(step_id, reason):
    raise _Failure(INVALID, step_id, reason)


def _window_branches(v: Word, t, n1: int, n2: int):
    """Canonical hypothesis sets of the integer-window split, in order."""
    expected = []
    for n0 in range(n1, n2):
        expected.append((Less(t_pow(t, n0), v), Less(v, t_pow(t, n0 + 1))))
    for n0 in range(n1 + 1, n2):
        expected.append((WordEq(v, t_pow(t, n0)),))
    return expected


def check_derivation(derivation: Derivation, table: Optional[AtomTable] = None) -> Verdict:
    """Validate every step, split, and leaf; deterministic first failure."""
    table = table if table is not None else derivation.table
    if not table.status:
        table.verify_all()
    try:
        _check_node(derivation.root, {}, derivation.goal, table, at_root=True)
    except _Failure as failure:
        return failure.verdict
    return Verdict(VALID)


def _lookup_facts(step: Step, table: AtomTable):
    cited = []
    for fid in step.facts:
        try:
            fact = table.get(fid)
        except UnknownFactError:
            raise _Failure(UNKNOWN_FACTS, step.id, f"unknown fact {fid!r}")
        if not table.is_verified(fid):
            reason = table.failures.get(fid, "fact failed verification")
            raise _Failure(UNKNOWN_FACTS, step.id, f"fact {fid!r}: {reason}")
        cited.append(fact)
    return cited


def _check_node(node: Node, env: dict, goal, table: AtomTable, at_root: bool = False):
    env = dict(env)
    for step in node.steps:
        if step.id in env:
            _fail(step.id, "duplicate judgment id")
        premises = []
        for pid in step.premises:
            if pid not in env:
                _fail(step.id, f"premise {pid!r} is not in scope")
            premises.append(env[pid])
        cited = _lookup_facts(step, table)
        try:
            conclusion = apply_rule(step.rule, step.params, premises, cited)
        except RuleError as exc:
            _fail(step.id, str(exc))
        if conclusion != step.conclusion:
            _fail(step.id, f"stated conclusion differs from the rule's ('{conclusion}')")
        env[step.id] = conclusion

    if node.split is None:
        _check_leaf(node, env, goal)
        return

    split = node.split
    split_id = f"split:{split.kind}"
    if split.kind == "given" and not at_root:
        _fail(split_id, "assumption cases are only allowed at the root")
    if not split.branches:
        _fail(split_id, "case split with no branches")

    if split.kind == "trichotomy":
        _check_trichotomy(split, env)
    elif split.kind == "window":
        _check_window(split, env)
    elif split.kind != "given":
        _fail(split_id, f"unknown split kind {split.kind!r}")

    for branch in split.branches:
        branch_env = dict(env)
        for hyp in branch.hypotheses:
            if hyp.id in branch_env:
                _fail(hyp.id, "duplicate judgment id")
            branch_env[hyp.id] = hyp.judgment
        branch_goal = goal if branch.goal is None else branch.goal
        _check_node(branch.node, branch_env, branch_goal, table)


def _check_trichotomy(split: Split, env: dict):
    split_id = "split:trichotomy"
    try:
        w1 = tuple((s, int(e)) for s, e in split.params["w1"])
        w2 = tuple((s, int(e)) for s, e in split.params["w2"])
    except (KeyError, TypeError, ValueError):
        _fail(split_id, "malformed trichotomy words")
    expected = ((Less(w1, w2),), (WordEq(w1, w2),), (Less(w2, w1),))
    if len(split.branches) != 3:
        _fail(split_id, "trichotomy needs exactly three branches")
    for branch, hyps in zip(split.branches, expected):
        got = tuple(h.judgment for h in branch.hypotheses)
        if got != hyps:
            _fail(
                split_id,
                f"branch {branch.name!r} hypotheses are not the canonical case "
                f"({' & '.join(str(h) for h in hyps)})",
            )


def _check_window(split: Split, env: dict):
    split_id = "split:window"
    try:
        v = tuple((s, int(e)) for s, e in split.params["v"])
        name, sign = split.params["t"]
        t = (str(name), int(sign))
        n1 = int(split.params["n1"])
        n2 = int(split.params["n2"])
    except (KeyError, TypeError, ValueError):
        _fail(split_id, "malformed window parameters")
    if sign not in (1, -1):
        _fail(split_id, "base sign must be +1 or -1")
    if n1 >= n2:
        _fail(split_id, "window needs n1 < n2")
    required = (Less(t_pow(t, n1), v), Less(v, t_pow(t, n2)), Less((), t_pow(t, 1)))
    if len(split.premises) != 3:
        _fail(split_id, "window split cites three premises (both bounds and 1 < t)")
    for pid, expected in zip(split.premises, required):
        if pid not in env:
            _fail(split_id, f"premise {pid!r} is not in scope")
        if env[pid] != expected:
            _fail(split_id, f"premise {pid!r} must be '{expected}' (got '{env[pid]}')")
    expected_branches = _window_branches(v, t, n1, n2)
    if len(split.branches) != len(expected_branches):
        _fail(
            split_id,
            f"window over [{n1}, {n2}] needs {len(expected_branches)} branches, "
            f"got {len(split.branches)}",
        )
    for branch, hyps in zip(split.branches, expected_branches):
        got = tuple(h.judgment for h in branch.hypotheses)
        if got != hyps:
            _fail(
                split_id,
                f"branch {branch.name!r} hypotheses are not the canonical case "
                f"({' & '.join(str(h) for h in hyps)})",
            )


def _check_leaf(node: Node, env: dict, goal):
    has_contradiction = any(j is CONTRADICTION for j in env.values())
    if goal == CONTRADICTION_GOAL:
        if not has_contradiction:
            _fail("<leaf>", "branch does not derive a contradiction")
        return
    if has_contradiction:
        return
    judgments = set(env.values())
    if goal is None:
        _fail("<leaf>", "no goal declared for this branch")
    for wanted in goal:
        if wanted not in judgments:
            _fail("<leaf>", f"goal judgment '{wanted}' was not derived")
