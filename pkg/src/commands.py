# braid_workbench/src/commands.py
"""
Verb implementations shared by the command line and the HTTP surface.

Every verb takes word texts plus options and returns a CommandResult whose
``text`` is the human-readable output and whose ``result`` is the same
content as JSON-ready data.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from src.braid_words import GroupKind, Presentation, defining_relations, parse, render
from src.closure import (
    affine_close,
    closure_invariants,
    closure_move_target,
    markov_search,
    parse_moves,
    prop_closure_moves,
    replay,
    serialize_moves,
)
from src.decomposition import (
    from_parabolic,
    kernel_rewrite_F,
    ne_decompose,
    parse_kernel_word,
    phi_decompose,
    schreier_rewrite,
    t_exponent_sum,
    to_parabolic,
)
from src.equality import words_equal
from src.morphisms import MorphismId, apply_morphism, check_diagram, dominating_element, dynkin_shift
from src.temperley_lieb import jones_polynomial, kauffman_bracket, normalized_invariant
from src.utils import DomainMismatchError

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    verb: str
    inputs: Dict[str, Any]
    result: Any
    text: str
    ok: bool = True
    certificate: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        payload = {"verb": self.verb, "inputs": self.inputs, "result": self.result}
        if self.certificate is not None:
            payload["certificate"] = self.certificate
        return payload


@dataclass(frozen=True)
class Budgets:
    max_endo_len: Optional[int] = None
    max_strands: Optional[int] = None
    max_depth: Optional[int] = None
    max_rank: Optional[int] = None
    max_states: Optional[int] = None


def _word(text: str, kind: Optional[GroupKind] = None, what: str = "word"):
    w = parse(text)
    if kind is not None and w.kind is not kind:
        raise DomainMismatchError(f"{what} must be of kind {kind.value}, got {w.header_kind}")
    return w


def _invariants_text(inv) -> str:
    bracket = "n/a (strand budget)" if inv.normalized_bracket is None else str(inv.normalized_bracket)
    return (f"strands: {inv.strands}\ncomponents: {inv.components}\n"
            f"exponent sum: {inv.exponent_sum}\nnormalized bracket: {bracket}")


# --- Verbs ---

def cmd_eq(x: str, y: str, budgets: Budgets = Budgets()) -> CommandResult:
    wx, wy = _word(x), _word(y)
    equal = words_equal(wx, wy, max_len=budgets.max_endo_len)
    return CommandResult("eq", {"x": x, "y": y}, equal, "equal" if equal else "not equal", ok=equal)


def cmd_member(w: str, budgets: Budgets = Budgets()) -> CommandResult:
    word = _word(w, GroupKind.B)
    total = t_exponent_sum(word)
    affine = total == 0
    text = f"affine (t-sum {total})" if affine else f"not affine (t-sum {total})"
    return CommandResult("member", {"w": w}, {"affine": affine, "t_sum": total}, text, ok=affine)


def cmd_decompose(w: str, budgets: Budgets = Budgets()) -> CommandResult:
    d = phi_decompose(_word(w, GroupKind.B))
    result = {"lambda": render(d.lam), "k": d.k}
    return CommandResult("decompose", {"w": w}, result, f"lambda: {render(d.lam)}\nk: {d.k}")


def cmd_parabolic(w: str, direction: str = "auto", budgets: Budgets = Budgets()) -> CommandResult:
    word = _word(w, GroupKind.AFFINE)
    if direction == "auto":
        direction = "from" if word.parabolic else "to"
    if direction not in ("to", "from"):
        raise DomainMismatchError(f"direction must be 'to', 'from' or 'auto', got {direction!r}")
    out = to_parabolic(word) if direction == "to" else from_parabolic(word)
    return CommandResult("parabolic", {"w": w, "direction": direction}, render(out), render(out))


def cmd_kernel(w: str, budgets: Budgets = Budgets()) -> CommandResult:
    kw = kernel_rewrite_F(_word(w, GroupKind.B), max_len=budgets.max_endo_len)
    return CommandResult("kernel", {"w": w}, str(kw), str(kw))


def cmd_schreier(f_word: str, n: int, budgets: Budgets = Budgets()) -> CommandResult:
    sw = schreier_rewrite(parse_kernel_word(f_word, n))
    return CommandResult("schreier", {"f_word": f_word, "n": n}, str(sw), str(sw))


def cmd_ne(x: str, budgets: Budgets = Budgets()) -> CommandResult:
    split = ne_decompose(_word(x, GroupKind.AFFINE))
    result = {"nu": str(split.nu), "u": render(split.u)}
    return CommandResult("ne", {"x": x}, result, f"nu: {split.nu}\nu: {render(split.u)}")


def cmd_map(w: str, m: str, n: int, e: int = 1, budgets: Budgets = Budgets()) -> CommandResult:
    mid = MorphismId(m, n, e if m == "dynkin" else 0)
    out = apply_morphism(mid, _word(w))
    return CommandResult("map", {"w": w, "m": m, "n": n}, render(out), render(out))


def cmd_dynkin(w: str, e: int = 1, budgets: Budgets = Budgets()) -> CommandResult:
    out = dynkin_shift(_word(w, GroupKind.AFFINE), e)
    return CommandResult("dynkin", {"w": w, "e": e}, render(out), render(out))


def cmd_dominating(n: int, budgets: Budgets = Budgets()) -> CommandResult:
    out = render(dominating_element(n))
    return CommandResult("dominating", {"n": n}, out, out)


def cmd_diagram(name: str, n: int, w: str, budgets: Budgets = Budgets()) -> CommandResult:
    holds = check_diagram(name, n, _word(w))
    return CommandResult("diagram", {"name": name, "n": n, "w": w}, holds,
                         "commutes" if holds else "does not commute", ok=holds)


def cmd_close(w: str, budgets: Budgets = Budgets()) -> CommandResult:
    inv = closure_invariants(_word(w, GroupKind.A), max_strands=budgets.max_strands)
    return CommandResult("close", {"w": w}, inv.to_dict(), _invariants_text(inv))


def cmd_affine_close(x: str, budgets: Budgets = Budgets()) -> CommandResult:
    inv = affine_close(_word(x, GroupKind.AFFINE), max_strands=budgets.max_strands)
    return CommandResult("affine-close", {"x": x}, inv.to_dict(), _invariants_text(inv))


def cmd_bracket(w: str, budgets: Budgets = Budgets()) -> CommandResult:
    word = _word(w, GroupKind.A)
    bracket = kauffman_bracket(word, max_strands=budgets.max_strands)
    invariant = normalized_invariant(word, max_strands=budgets.max_strands)
    jones = str(jones_polynomial(word, max_strands=budgets.max_strands))
    result = {"bracket": str(bracket), "normalized": str(invariant), "jones": jones}
    text = f"bracket: {bracket}\nnormalized: {invariant}\njones: {jones}"
    return CommandResult("bracket", {"w": w}, result, text)


def cmd_moves(x: str, which: str, budgets: Budgets = Budgets()) -> CommandResult:
    word = _word(x, GroupKind.AFFINE)
    sequence = prop_closure_moves(word, which, max_len=budgets.max_endo_len)
    reaches = words_equal(sequence.end, closure_move_target(word, which), max_len=budgets.max_endo_len)
    certificate = serialize_moves(sequence.steps)
    result = {"start": render(sequence.start), "end": render(sequence.end), "steps": len(sequence),
              "reaches_target": reaches}
    text = f"start: {render(sequence.start)}\n{certificate}\nend: {render(sequence.end)}"
    return CommandResult("moves", {"x": x, "which": which}, result, text, ok=reaches, certificate=certificate)


def cmd_search(x: str, y: str, budgets: Budgets = Budgets()) -> CommandResult:
    wx, wy = _word(x, GroupKind.A), _word(y, GroupKind.A)
    sequence = markov_search(wx, wy, max_rank=budgets.max_rank, max_depth=budgets.max_depth,
                             max_states=budgets.max_states, max_len=budgets.max_endo_len)
    if sequence is None:
        return CommandResult("search", {"x": x, "y": y}, {"found": False}, "not found (inconclusive)", ok=False)
    certificate = serialize_moves(sequence.steps)
    text = "found\n" + certificate if certificate else "found"
    return CommandResult("search", {"x": x, "y": y}, {"found": True, "steps": len(sequence)}, text,
                         certificate=certificate)


def cmd_replay(start: str, moves: str, budgets: Budgets = Budgets()) -> CommandResult:
    sequence = replay(_word(start, GroupKind.A), parse_moves(moves), max_len=budgets.max_endo_len)
    end = render(sequence.end)
    return CommandResult("replay", {"start": start}, {"end": end, "steps": len(sequence)}, end)


def cmd_relations(kind: str, n: int, presentation: str = "formal", budgets: Budgets = Budgets()) -> CommandResult:
    try:
        group_kind = GroupKind(kind)
        pres = Presentation(presentation)
    except ValueError as e:
        raise DomainMismatchError(str(e)) from e
    table = defining_relations(group_kind, n, pres)
    rows = [{"label": r.label, "lhs": render(r.lhs), "rhs": render(r.rhs)} for r in table.pairs]
    text = "\n".join(f"{r['label']}: {r['lhs']} = {r['rhs']}" for r in rows)
    return CommandResult("relations", {"kind": kind, "n": n, "presentation": presentation}, rows, text)


VERBS: Dict[str, Callable[..., CommandResult]] = {
    "eq": cmd_eq,
    "member": cmd_member,
    "decompose": cmd_decompose,
    "parabolic": cmd_parabolic,
    "kernel": cmd_kernel,
    "schreier": cmd_schreier,
    "ne": cmd_ne,
    "map": cmd_map,
    "dynkin": cmd_dynkin,
    "dominating": cmd_dominating,
    "diagram": cmd_diagram,
    "close": cmd_close,
    "affine-close": cmd_affine_close,
    "bracket": cmd_bracket,
    "moves": cmd_moves,
    "search": cmd_search,
    "replay": cmd_replay,
    "relations": cmd_relations,
}


def run_verb(verb: str, words: List[str], options: Dict[str, Any], budgets: Budgets = Budgets()) -> CommandResult:
    if verb not in VERBS:
        raise DomainMismatchError(f"Unknown verb {verb!r}")
    logger.debug("Running %s on %d words", verb, len(words))
    return VERBS[verb](*words, **options, budgets=budgets)
