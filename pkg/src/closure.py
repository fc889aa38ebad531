# braid_workbench/src/closure.py
"""
Braid closures and Markov moves.

A MoveSequence is a replayable derivation: every step is checked with the
equality oracle when applied, so a sequence that replays is a certificate
that its start and end braids have the same closure.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, List, Optional, Set, Tuple, Union

from src.braid_words import (
    BraidWord,
    GenLetter,
    GroupKind,
    concat,
    free_cancel,
    invert_word,
    make_word,
    parse,
    render,
    sigma_support,
)
from src.config import MAX_SEARCH_DEPTH, MAX_SEARCH_RANK, MAX_SEARCH_STATES
from src.equality import underlying_permutation, words_equal
from src.laurent import LaurentPoly
from src.morphisms import MorphismId, apply_morphism, dominating_element, dynkin_shift
from src.temperley_lieb import exponent_sum, normalized_invariant
from src.utils import BudgetExceededError, DomainMismatchError, IllegalMoveError, WordSyntaxError, resolve_budget

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosureInvariants:
    strands: int
    components: int
    exponent_sum: int
    normalized_bracket: Optional[LaurentPoly]  # None when the strand budget was exceeded

    def to_dict(self) -> dict:
        return {
            "strands": self.strands,
            "components": self.components,
            "exponent_sum": self.exponent_sum,
            "normalized_bracket": None if self.normalized_bracket is None else str(self.normalized_bracket),
        }


def _require_a(w: BraidWord, what: str):
    if w.kind is not GroupKind.A:
        raise DomainMismatchError(f"{what} needs an A-type word, got kind {w.header_kind}")


def closure_invariants(w: BraidWord, max_strands: Optional[int] = None) -> ClosureInvariants:
    _require_a(w, "closure_invariants")
    try:
        bracket = normalized_invariant(w, max_strands=max_strands)
    except BudgetExceededError as e:
        logger.info("Bracket skipped: %s", e)
        bracket = None
    return ClosureInvariants(
        strands=w.rank + 1,
        components=underlying_permutation(w).cycle_count(),
        exponent_sum=exponent_sum(w),
        normalized_bracket=bracket,
    )


def affine_close(x: BraidWord, max_strands: Optional[int] = None) -> ClosureInvariants:
    """Closure of an affine braid through its image in B(A_{n+1})."""
    if x.kind is not GroupKind.AFFINE:
        raise DomainMismatchError(f"affine_close needs an affine word, got kind {x.header_kind}")
    if x.parabolic:
        x = make_word(GroupKind.AFFINE, x.rank, x.letters)
    return closure_invariants(apply_morphism(MorphismId("xbar", x.rank + 1), x), max_strands=max_strands)


# --- Moves ---

@dataclass(frozen=True)
class Rewrite:
    target: BraidWord


@dataclass(frozen=True)
class Conjugate:
    by: BraidWord


@dataclass(frozen=True)
class Stabilize:
    sign: int


@dataclass(frozen=True)
class Destabilize:
    sign: int
    witness: BraidWord


MoveStep = Union[Rewrite, Conjugate, Stabilize, Destabilize]


def _top_letter(rank: int, sign: int) -> BraidWord:
    return make_word(GroupKind.A, rank, [(GenLetter.sigma(rank), sign)])


def _check_sign(sign: int, check: str):
    if sign not in (1, -1):
        raise IllegalMoveError(check, f"sign must be +1 or -1, got {sign}")


def apply_move(w: BraidWord, step: MoveStep, max_len: Optional[int] = None) -> BraidWord:
    """Applies one Markov step after checking its legality."""
    _require_a(w, "apply_move")
    if isinstance(step, Rewrite):
        target = step.target
        if not target.same_group(w):
            raise IllegalMoveError("rewrite-group", f"target {target} is not in the group of {w}")
        if not words_equal(w, target, max_len=max_len):
            raise IllegalMoveError("rewrite-equal", f"{target} is not equal to {w}")
        return target
    if isinstance(step, Conjugate):
        g = step.by
        if not g.same_group(w):
            raise IllegalMoveError("conjugate-group", f"conjugator {g} is not in the group of {w}")
        return concat(concat(invert_word(g), w), g)
    if isinstance(step, Stabilize):
        _check_sign(step.sign, "stabilize-sign")
        lifted = make_word(GroupKind.A, w.rank + 1, w.letters)
        return concat(lifted, _top_letter(w.rank + 1, step.sign))
    if isinstance(step, Destabilize):
        _check_sign(step.sign, "destabilize-sign")
        n = w.rank
        if n < 1:
            raise IllegalMoveError("destabilize-rank", "a one-strand braid cannot be destabilized")
        u = step.witness
        if u.kind is not GroupKind.A or u.rank not in (n - 1, n):
            raise IllegalMoveError("destabilize-witness", f"witness {u} must be an A-type word of rank {n - 1}")
        if any(i >= n for i in sigma_support(u)):
            raise IllegalMoveError("destabilize-support", f"witness {u} uses the top generator s{n}")
        lifted = make_word(GroupKind.A, n, u.letters)
        if not words_equal(w, concat(lifted, _top_letter(n, step.sign)), max_len=max_len):
            raise IllegalMoveError("destabilize-equal", f"{w} is not witness * s{n}^{step.sign}")
        return make_word(GroupKind.A, n - 1, u.letters)
    raise IllegalMoveError("unknown-step", f"unsupported step {step!r}")


@dataclass(frozen=True)
class MoveSequence:
    start: BraidWord
    steps: Tuple[MoveStep, ...] = field(default_factory=tuple)
    end: Optional[BraidWord] = None

    def __len__(self) -> int:
        return len(self.steps)


def replay(start: BraidWord, steps: List[MoveStep], max_len: Optional[int] = None) -> MoveSequence:
    """Applies every step in order; raises IllegalMoveError at the first bad one."""
    current = start
    for position, step in enumerate(steps, start=1):
        try:
            current = apply_move(current, step, max_len=max_len)
        except IllegalMoveError as e:
            raise IllegalMoveError(e.check, f"step {position}: {e}") from e
    return MoveSequence(start, tuple(steps), current)


def serialize_step(step: MoveStep) -> str:
    if isinstance(step, Rewrite):
        return f"rewrite {render(step.target)}"
    if isinstance(step, Conjugate):
        return f"conj {render(step.by)}"
    if isinstance(step, Stabilize):
        return f"stab {step.sign:+d}"
    return f"destab {step.sign:+d} {render(step.witness)}"


def serialize_moves(steps) -> str:
    return "\n".join(serialize_step(step) for step in steps)


def _parse_sign(token: str, offset: int) -> int:
    if token not in ("+1", "-1", "1"):
        raise WordSyntaxError(f"Expected +1 or -1, got {token!r}", offset)
    return -1 if token == "-1" else 1


def parse_moves(text: str) -> List[MoveStep]:
    """Parses one step per line; blank lines and ``#`` comments are skipped."""
    steps: List[MoveStep] = []
    line_start = 0
    for line in text.splitlines(keepends=True):
        offset = len(text[:line_start].encode("utf-8"))
        line_start += len(line)
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        verb, _, rest = body.partition(" ")
        rest = rest.strip()
        if verb == "rewrite":
            steps.append(Rewrite(parse(rest)))
        elif verb == "conj":
            steps.append(Conjugate(parse(rest)))
        elif verb == "stab":
            steps.append(Stabilize(_parse_sign(rest, offset)))
        elif verb == "destab":
            sign_text, _, word_text = rest.partition(" ")
            steps.append(Destabilize(_parse_sign(sign_text, offset), parse(word_text)))
        else:
            raise WordSyntaxError(f"Unknown move {verb!r}", offset)
    return steps


# --- Closure invariance of affine braids ---

CLOSURE_PROPOSITIONS = ("dynkin", "append_a")


def _xbar(n: int, w: BraidWord) -> BraidWord:
    return apply_morphism(MorphismId("xbar", n), w)


def closure_move_target(x: BraidWord, which: str) -> BraidWord:
    """The A-type word each derivation must end on (up to equality)."""
    n = x.rank + 1
    if which == "dynkin":
        return _xbar(n + 1, apply_morphism(MorphismId("F", n), dynkin_shift(x, 1)))
    if which == "append_a":
        return _xbar(n, x)
    raise DomainMismatchError(f"Unknown closure proposition {which!r}; expected one of {CLOSURE_PROPOSITIONS}")


def closure_move_start(x: BraidWord, which: str) -> BraidWord:
    n = x.rank + 1
    lifted = apply_morphism(MorphismId("F", n), x)
    if which == "append_a":
        lifted = lifted * make_word(GroupKind.AFFINE, n, [(GenLetter.agen(n + 1), 1)])
    elif which != "dynkin":
        raise DomainMismatchError(f"Unknown closure proposition {which!r}; expected one of {CLOSURE_PROPOSITIONS}")
    return _xbar(n + 1, lifted)


def prop_closure_moves(x: BraidWord, which: str, max_len: Optional[int] = None) -> MoveSequence:
    """Explicit Markov derivation for one of the two closure invariances.

    ``x`` lives in B(Ã_{n-1}) and is carried into B(Ã_n) by F. For ``dynkin``
    the closure of x is unchanged by the Dynkin shift (one conjugation by the
    dominating element); for ``append_a`` the closure of x * a_{n+1} equals
    that of x (rewrite, conjugate, destabilize, conjugate).
    """
    if x.kind is not GroupKind.AFFINE:
        raise DomainMismatchError(f"prop_closure_moves needs an affine word, got kind {x.header_kind}")
    if x.parabolic:
        x = make_word(GroupKind.AFFINE, x.rank, x.letters)
    n = x.rank + 1
    start = closure_move_start(x, which)
    if which == "dynkin":
        steps: List[MoveStep] = [Conjugate(_xbar(n + 1, dominating_element(n)))]
    else:
        F = MorphismId("F", n)
        a_low = make_word(GroupKind.AFFINE, n - 1, [(GenLetter.agen(n), 1)])
        a_n = apply_morphism(F, a_low)  # s_n a_{n+1} s_n^-1
        s_n = make_word(GroupKind.AFFINE, n, [(GenLetter.sigma(n), 1)])
        rewritten = apply_morphism(F, x) * a_n * s_n * invert_word(a_n)
        witness = _xbar(n, invert_word(a_low) * x * a_low)
        steps = [
            Rewrite(_xbar(n + 1, rewritten)),
            Conjugate(_xbar(n + 1, a_n)),
            Destabilize(1, witness),
            Conjugate(invert_word(_xbar(n, a_low))),
        ]
    sequence = replay(start, steps, max_len=max_len)
    logger.debug("Closure derivation %s for %s: %d steps", which, x, len(steps))
    return sequence


# --- Bounded search ---

def _destabilizations(w: BraidWord) -> List[Destabilize]:
    n = w.rank
    if n < 1 or not w.letters:
        return []
    gen, sign = w.letters[-1]
    if gen.index != n:
        return []
    body = w.letters[:-1]
    if any(g.index == n for g, _ in body):
        return []
    return [Destabilize(sign, make_word(GroupKind.A, n - 1, body))]


def markov_search(x: BraidWord, y: BraidWord,
                  max_rank: Optional[int] = None,
                  max_depth: Optional[int] = None,
                  max_states: Optional[int] = None,
                  max_len: Optional[int] = None) -> Optional[MoveSequence]:
    """Breadth-first search for a Markov derivation from x to y.

    Returns None when nothing is found within the budgets; that answer is
    inconclusive. Moves are tried in a fixed order (destabilize, conjugate by
    s1, s1^-1, s2, ..., stabilize +1, -1) so results are deterministic.
    """
    _require_a(x, "markov_search")
    _require_a(y, "markov_search")
    rank_cap = resolve_budget(max_rank, MAX_SEARCH_RANK)
    depth_cap = resolve_budget(max_depth, MAX_SEARCH_DEPTH)
    state_cap = resolve_budget(max_states, MAX_SEARCH_STATES)

    queue: Deque[Tuple[BraidWord, Tuple[MoveStep, ...], int]] = deque([(x, (), 0)])
    visited: Set[Tuple[int, tuple]] = {(x.rank, x.letters)}
    explored = 0
    while queue:
        w, path, depth = queue.popleft()
        explored += 1
        if w.rank == y.rank and words_equal(w, y, max_len=max_len):
            steps = path if w.letters == y.letters else path + (Rewrite(y),)
            logger.info("Markov search found a %d-step derivation after %d states", len(steps), explored)
            return replay(x, list(steps), max_len=max_len)
        if depth >= depth_cap or explored >= state_cap:
            continue

        successors: List[Tuple[BraidWord, Tuple[MoveStep, ...]]] = []
        for step in _destabilizations(w):
            successors.append((apply_move(w, step, max_len=max_len), (step,)))
        for i in range(1, w.rank + 1):
            for sign in (1, -1):
                g = make_word(GroupKind.A, w.rank, [(GenLetter.sigma(i), sign)])
                conjugated = apply_move(w, Conjugate(g))
                reduced = free_cancel(conjugated)
                moves: Tuple[MoveStep, ...] = (Conjugate(g),)
                if reduced.letters != conjugated.letters:
                    moves += (Rewrite(reduced),)
                successors.append((reduced, moves))
        if w.rank + 1 <= rank_cap:
            for sign in (1, -1):
                step = Stabilize(sign)
                successors.append((apply_move(w, step), (step,)))

        for nxt, moves in successors:
            key = (nxt.rank, nxt.letters)
            if key in visited:
                continue
            visited.add(key)
            queue.append((nxt, path + moves, depth + 1))
    logger.info("Markov search exhausted after %d states", explored)
    return None