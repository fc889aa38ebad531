# braid_workbench/src/equality.py
"""
Equality oracle for all three braid families.

Every word is first embedded into an A-type braid group, where the Artin
representation on the free group F_{n+1} is faithful. Two words are equal
exactly when their Artin images agree on every free generator.

Convention for s_k: x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k, all other
generators fixed. The action of a word is accumulated left to right as
psi <- psi o action(letter).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.braid_words import BraidWord, GroupKind, empty_word, make_word
from src.free_group import FreeEndomorphism, FreeWord, free_invert, free_multiply
from src.morphisms import MorphismId, apply_morphism
from src.utils import BudgetExceededError, DomainMismatchError, endo_budget

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    size: int
    images: Tuple[int, ...]  # images[i-1] is the image of i

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.size + 1)):
            raise DomainMismatchError(f"Not a permutation of 1..{self.size}: {self.images}")

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(size, tuple(range(1, size + 1)))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.size + 1))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        result = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = []
            point = start
            while point not in seen:
                seen.add(point)
                cycle.append(point)
                point = self.images[point - 1]
            result.append(tuple(cycle))
        return result

    def cycle_count(self) -> int:
        return len(self.cycles())

    def __str__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in moved)


def _require_kind_a(w: BraidWord, what: str):
    if w.kind is not GroupKind.A:
        raise DomainMismatchError(f"{what} needs an A-type word, got kind {w.header_kind}")


def underlying_permutation(w: BraidWord) -> Permutation:
    """Product of the transpositions (i, i+1), one per letter, signs ignored."""
    _require_kind_a(w, "underlying_permutation")
    positions = list(range(1, w.rank + 2))
    for gen, _ in w.letters:
        i = gen.index
        positions[i - 1], positions[i] = positions[i], positions[i - 1]
    # positions[p] is the strand found at position p+1; invert to send strand -> end position
    images = [0] * len(positions)
    for end, strand in enumerate(positions, start=1):
        images[strand - 1] = end
    return Permutation(len(positions), tuple(images))


def artin_action(w: BraidWord, max_len: Optional[int] = None) -> FreeEndomorphism:
    """Image of an A-type word in Aut(F_{n+1})."""
    _require_kind_a(w, "artin_action")
    budget = endo_budget(max_len)
    rank = w.rank + 1
    psi: List[FreeWord] = list(FreeEndomorphism.identity(rank).images)
    for gen, sign in w.letters:
        k = gen.index - 1
        a, b = psi[k], psi[k + 1]
        if sign > 0:
            new_k = free_multiply(free_multiply(a, b), free_invert(a))
            new_k1 = a
        else:
            new_k = b
            new_k1 = free_multiply(free_multiply(free_invert(b), a), b)
        if len(new_k) > budget or len(new_k1) > budget:
            raise BudgetExceededError(
                f"Artin image exceeded the length budget of {budget} letters"
            )
        psi[k], psi[k + 1] = new_k, new_k1
    return FreeEndomorphism(rank, tuple(psi))


def embed_to_A(w: BraidWord) -> BraidWord:
    """Injects any canonical word into an A-type braid group.

    Kind B of rank n goes through the strand-doubling map into rank n+1; an
    affine word of rank n is first sent into B(B_{n+1}) and then the same way.
    """
    if w.kind is GroupKind.A:
        return w
    if w.kind is GroupKind.B:
        return apply_morphism(MorphismId("underbar_i", w.rank + 1), w)
    if w.parabolic:
        w = make_word(GroupKind.AFFINE, w.rank, w.letters)
    return apply_morphism(MorphismId("xbar", w.rank + 1), w)


def _strip_common_ends(x: BraidWord, y: BraidWord) -> Tuple[BraidWord, BraidWord]:
    xl, yl = x.letters, y.letters
    start = 0
    while start < min(len(xl), len(yl)) and xl[start] == yl[start]:
        start += 1
    end = 0
    while end < min(len(xl), len(yl)) - start and xl[len(xl) - 1 - end] == yl[len(yl) - 1 - end]:
        end += 1
    return (x.with_letters(xl[start:len(xl) - end]), y.with_letters(yl[start:len(yl) - end]))


def words_equal(x: BraidWord, y: BraidWord, max_len: Optional[int] = None) -> bool:
    """True iff x and y represent the same group element."""
    if not x.same_group(y):
        raise DomainMismatchError(
            f"Cannot compare {x.header_kind} rank {x.rank} with {y.header_kind} rank {y.rank}"
        )
    ex, ey = embed_to_A(x), embed_to_A(y)
    if underlying_permutation(ex) != underlying_permutation(ey):
        return False
    ex, ey = _strip_common_ends(ex, ey)
    if ex.letters == ey.letters:
        return True
    logger.debug("Comparing Artin images of words of length %d and %d", len(ex), len(ey))
    return artin_action(ex, max_len=max_len).images == artin_action(ey, max_len=max_len).images


def is_identity(w: BraidWord, max_len: Optional[int] = None) -> bool:
    return words_equal(w, empty_word(w.kind, w.rank, w.parabolic), max_len=max_len)
