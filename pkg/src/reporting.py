# braid_workbench/src/reporting.py
"""
Proposition suite: every structural identity of the workbench run as an
executable check over generators and seeded random words, tallied into a
pandas DataFrame (one row per check and rank) and optionally saved as CSV.
"""

import logging
import os
import time
from typing import Callable, Iterable, List, Optional, Sequence

import pandas as pd

from src.braid_words import (
    BraidWord,
    GenLetter,
    GroupKind,
    Presentation,
    defining_relations,
    make_word,
)
from src.closure import (
    CLOSURE_PROPOSITIONS,
    Conjugate,
    Destabilize,
    Stabilize,
    apply_move,
    closure_move_start,
    closure_move_target,
    prop_closure_moves,
)
from src.config import LOCAL_REPORTS_DIR, REPORT_FILENAME, SUITE_MAX_WORD_LEN, SUITE_RANDOM_CASES, SUITE_RANKS
from src.decomposition import (
    action_table_pairs,
    from_parabolic,
    is_affine,
    kernel_expansion,
    kernel_rewrite_F,
    ne_law_holds,
    phi_decompose,
    schreier_expansion,
    schreier_rewrite,
    t_exponent_sum,
    to_parabolic,
)
from src.equality import is_identity, underlying_permutation, words_equal
from src.morphisms import (
    DIAGRAM_NAMES,
    MorphismId,
    apply_morphism,
    check_diagram,
    diagram_generators,
    diagram_source,
    quotient_element,
    quotient_relations,
)
from src.sampling import (
    insert_relator,
    make_rng,
    mutate,
    random_kernel_element,
    random_length,
    random_word,
    random_zero_sum_f_word,
)
from src.temperley_lieb import kauffman_bracket, normalized_invariant, state_sum_bracket
from src.utils import BraidError

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["Check", "Group", "Rank", "Cases", "Passed", "Failed", "Errors", "Seconds"]

FORMAL_TABLES = [
    (GroupKind.A, Presentation.FORMAL),
    (GroupKind.B, Presentation.FORMAL),
    (GroupKind.B, Presentation.PHI),
    (GroupKind.AFFINE, Presentation.FORMAL),
    (GroupKind.AFFINE, Presentation.PARABOLIC),
]


def _tally(check: str, group: str, rank: int, cases: Iterable[Callable[[], bool]]) -> dict:
    started = time.perf_counter()
    passed = failed = errors = 0
    for case in cases:
        try:
            if case():
                passed += 1
            else:
                failed += 1
        except BraidError as e:
            errors += 1
            logger.warning("🚨 %s (%s, n=%d) raised: %s", check, group, rank, e)
    row = {
        "Check": check,
        "Group": group,
        "Rank": rank,
        "Cases": passed + failed + errors,
        "Passed": passed,
        "Failed": failed,
        "Errors": errors,
        "Seconds": round(time.perf_counter() - started, 3),
    }
    marker = "✅" if failed == 0 and errors == 0 else "🚨"
    logger.info("%s %s (%s, n=%d): %d/%d", marker, check, group, rank, passed, row["Cases"])
    return row


# --- Individual checks ---

def _relation_rows(n: int, rng, cases: int) -> List[dict]:
    rows = []
    for kind, presentation in FORMAL_TABLES:
        if presentation is Presentation.PARABOLIC and n < 3:
            continue
        table = defining_relations(kind, n, presentation)
        group = f"{kind.value}/{presentation.value}"
        rows.append(_tally("relations hold", group, n,
                           [lambda r=r: words_equal(r.lhs, r.rhs) for r in table.pairs]))
        if table.pairs:
            picks = [table.pairs[int(rng.integers(0, len(table.pairs)))] for _ in range(cases)]
            mutated = [(mutate(rng, r.lhs), r.rhs) for r in picks]
            rows.append(_tally("mutated relations fail", group, n,
                               [lambda m=m: not words_equal(*m) for m in mutated]))
    return rows


def _artin_rows(n: int, rng, cases: int, max_len: int) -> List[dict]:
    distinct, related = [], []
    table = defining_relations(GroupKind.A, n)
    for _ in range(cases):
        x = random_word(rng, GroupKind.A, n, random_length(rng, max_len))
        y = random_word(rng, GroupKind.A, n, random_length(rng, max_len))
        if underlying_permutation(x) != underlying_permutation(y):
            distinct.append((x, y))
        if table.pairs:
            r = table.pairs[int(rng.integers(0, len(table.pairs)))]
            related.append((x, insert_relator(rng, x, r.lhs, r.rhs)))
    return [
        _tally("distinct permutations separate", "A", n, [lambda p=p: not words_equal(*p) for p in distinct]),
        _tally("relator insertion is invisible", "A", n, [lambda p=p: words_equal(*p) for p in related]),
    ]


def _diagram_rows(n: int, rng, cases: int, max_len: int) -> List[dict]:
    rows = []
    for name in DIAGRAM_NAMES:
        try:
            kind, rank = diagram_source(name, n)
        except BraidError:
            continue
        words = diagram_generators(name, n)
        words += [random_word(rng, kind, rank, random_length(rng, max_len)) for _ in range(cases)]
        rows.append(_tally(f"diagram {name}", kind.value, n,
                           [lambda w=w: check_diagram(name, n, w) for w in words]))
    return rows


def _membership_rows(n: int, rng, cases: int, max_len: int) -> List[dict]:
    words = [random_word(rng, GroupKind.B, n, random_length(rng, max_len)) for _ in range(cases)]

    def decomposes(w: BraidWord) -> bool:
        d = phi_decompose(w)
        return (d.k == t_exponent_sum(w) and is_affine(w) == (d.k == 0)
                and words_equal(w, d.recombine()))

    first, second = quotient_element(n)
    beta = MorphismId("beta", n)
    rows = [
        _tally("phi-decomposition recombines", "B", n, [lambda w=w: decomposes(w) for w in words]),
        _tally("quotient element", "AT", n, [
            lambda: is_identity(apply_morphism(beta, first)),
            lambda: words_equal(first, second),
        ] + [lambda r=r: words_equal(r.lhs, r.rhs) for r in quotient_relations(n)]),
    ]
    return rows


def _parabolic_rows(n: int, rng, cases: int, max_len: int) -> List[dict]:
    if n < 3:
        return []
    formal = defining_relations(GroupKind.AFFINE, n)
    affine_labels = ("affine-commutation", "affine-braid-first", "affine-braid-last")
    reverse = [r for r in formal.pairs if r.label in affine_labels]
    words = [random_word(rng, GroupKind.AFFINE, n, random_length(rng, max_len)) for _ in range(cases)]
    return [
        _tally("cycle relations from the parabolic side", "ATP", n,
               [lambda r=r: words_equal(to_parabolic(r.lhs), to_parabolic(r.rhs)) for r in reverse]),
        _tally("parabolic round trip", "AT", n,
               [lambda w=w: from_parabolic(to_parabolic(w)) == w or words_equal(from_parabolic(to_parabolic(w)), w)
                for w in words]),
    ]


def _kernel_rows(n: int, rng, cases: int, max_len: int) -> List[dict]:
    kernel_words = [random_kernel_element(rng, n) for _ in range(cases)]
    f_words = [random_zero_sum_f_word(rng, n, random_length(rng, 20)) for _ in range(cases)]
    affine_words = [random_word(rng, GroupKind.AFFINE, n, random_length(rng, max_len)) for _ in range(cases)]
    return [
        _tally("kernel action table", "B", n, [lambda p=p: words_equal(*p) for p in action_table_pairs(n)]),
        _tally("kernel rewriting is exact", "B", n,
               [lambda w=w: words_equal(kernel_expansion(kernel_rewrite_F(w)), w) for w in kernel_words]),
        _tally("Schreier rewriting is exact", "F", n,
               [lambda kw=kw: schreier_expansion(schreier_rewrite(kw)) == kw for kw in f_words]),
        _tally("kernel split recombines", "AT", n, [lambda x=x: ne_law_holds(x) for x in affine_words]),
    ]


def _closure_rows(n: int, rng, cases: int, max_len: int) -> List[dict]:
    if n < 2:
        return []
    words = [random_word(rng, GroupKind.AFFINE, n - 1, random_length(rng, max_len)) for _ in range(cases)]

    def certified(x: BraidWord, which: str) -> bool:
        sequence = prop_closure_moves(x, which)
        return words_equal(sequence.end, closure_move_target(x, which))

    rows = [
        _tally("dynkin closure derivation", "AT", n, [lambda x=x: certified(x, "dynkin") for x in words]),
        _tally("append-a closure derivation", "AT", n, [lambda x=x: certified(x, "append_a") for x in words]),
    ]
    if n == 2:
        short = [random_word(rng, GroupKind.AFFINE, 1, random_length(rng, 4)) for _ in range(max(1, cases // 4))]
        for which in CLOSURE_PROPOSITIONS:
            rows.append(_tally(f"{which} closure keeps the bracket", "AT", n, [
                lambda x=x: normalized_invariant(closure_move_start(x, which))
                == normalized_invariant(closure_move_target(x, which))
                for x in short]))
    return rows


def _bracket_rows(n: int, rng, cases: int) -> List[dict]:
    if n > 3:
        return []
    words = [random_word(rng, GroupKind.A, n, random_length(rng, 14)) for _ in range(cases)]
    trefoil = make_word(GroupKind.A, 1, [(GenLetter.sigma(1), 1)] * 3)
    unknot = make_word(GroupKind.A, 0, [])

    def move_invariant(w: BraidWord) -> bool:
        choice = int(rng.integers(0, 3))
        if choice == 0:
            g = random_word(rng, GroupKind.A, w.rank, 1 + random_length(rng, 2))
            moved = apply_move(w, Conjugate(g))
        elif choice == 1:
            moved = apply_move(w, Stabilize(int(rng.choice([1, -1]))))
        else:
            lifted = apply_move(w, Stabilize(1))
            moved = apply_move(lifted, Destabilize(1, w))
        return normalized_invariant(moved) == normalized_invariant(w)

    return [
        _tally("bracket equals state sum", "A", n,
               [lambda w=w: kauffman_bracket(w) == state_sum_bracket(w) for w in words]),
        _tally("bracket separates trefoil", "A", 1, [
            lambda: kauffman_bracket(trefoil) == state_sum_bracket(trefoil),
            lambda: normalized_invariant(trefoil) != normalized_invariant(unknot),
        ]),
        _tally("bracket is Markov invariant", "A", n, [lambda w=w: move_invariant(w) for w in words]),
    ]


def run_proposition_suite(ranks: Sequence[int] = SUITE_RANKS,
                          cases: int = SUITE_RANDOM_CASES,
                          seed: Optional[int] = None,
                          max_len: int = SUITE_MAX_WORD_LEN) -> pd.DataFrame:
    """Runs every check at every rank and returns one row per check."""
    rng = make_rng(seed)
    rows: List[dict] = []
    for n in ranks:
        logger.info("Proposition suite at n=%d", n)
        rows += _relation_rows(n, rng, cases)
        rows += _artin_rows(n, rng, cases, max_len)
        rows += _diagram_rows(n, rng, cases, max_len)
        rows += _membership_rows(n, rng, cases, max_len)
        rows += _parabolic_rows(n, rng, cases, max_len)
        rows += _kernel_rows(n, rng, cases, max_len)
        rows += _closure_rows(n, rng, cases, max_len)
        rows += _bracket_rows(n, rng, cases)
    df = pd.DataFrame(rows, columns=REPORT_COLUMNS)
    return df


def suite_passed(df: pd.DataFrame) -> bool:
    return bool((df["Failed"] == 0).all() and (df["Errors"] == 0).all())


def summarize(df: pd.DataFrame) -> pd.DataFrame:
    """Totals per check across ranks."""
    return (df.groupby("Check", sort=False)[["Cases", "Passed", "Failed", "Errors", "Seconds"]]
            .sum()
            .reset_index())


def write_report(df: pd.DataFrame, path: Optional[str] = None) -> str:
    if path is None:
        path = os.path.join(LOCAL_REPORTS_DIR, REPORT_FILENAME)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    df.to_csv(path, index=False)
    logger.info("✅ Saved proposition report to %s", path)
    return path
