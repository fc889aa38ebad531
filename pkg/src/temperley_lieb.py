# braid_workbench/src/temperley_lieb.py
"""
Kauffman bracket of braid closures through the Temperley-Lieb algebra.

A diagram on m strands is a perfect matching of 2m points: the top points
are 0..m-1 and the bottom points m..2m-1, both read left to right. A braid
generator s_i maps to A * 1 + A^-1 * e_i (and s_i^-1 to A^-1 * 1 + A * e_i);
the product is closed up and every loop is weighted by d = -A^2 - A^-2, with
the unknot normalized to 1.

A brute-force state sum over all 2^c smoothings is kept as an independent
check of the algebraic evaluation.
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import sympy as sp

from src.braid_words import BraidWord, GroupKind
from src.config import MAX_STRANDS, STATE_SUM_MAX_CROSSINGS
from src.laurent import LOOP_WEIGHT, LaurentPoly
from src.utils import BudgetExceededError, DomainMismatchError, resolve_budget

logger = logging.getLogger(__name__)

Matching = Tuple[int, ...]

A_SYMBOL = sp.Symbol("A")
T_SYMBOL = sp.Symbol("t")


def identity_matching(m: int) -> Matching:
    return tuple(list(range(m, 2 * m)) + list(range(0, m)))


def cup_cap_matching(m: int, i: int) -> Matching:
    """The generator e_i, joining positions i and i+1 (1-based) on both sides."""
    match = list(identity_matching(m))
    top_left, top_right = i - 1, i
    bottom_left, bottom_right = m + i - 1, m + i
    match[top_left], match[top_right] = top_right, top_left
    match[bottom_left], match[bottom_right] = bottom_right, bottom_left
    return tuple(match)


def is_planar(match: Matching, m: int) -> bool:
    """Non-crossing check around the boundary circle (top left-to-right, bottom right-to-left)."""
    if len(match) != 2 * m or sorted(match) != list(range(2 * m)):
        return False
    if any(match[match[p]] != p or match[p] == p for p in range(2 * m)):
        return False
    order = list(range(m)) + list(range(2 * m - 1, m - 1, -1))
    slot = {p: k for k, p in enumerate(order)}
    stack: List[int] = []
    for p in order:
        if stack and stack[-1] == match[p]:
            stack.pop()
        elif slot[match[p]] > slot[p]:
            stack.append(p)
        else:
            return False
    return not stack


@lru_cache(maxsize=200_000)
def compose_matchings(upper: Matching, lower: Matching, m: int) -> Tuple[Matching, int]:
    """Stacks ``upper`` on ``lower``; returns the glued matching and its closed loops."""
    result = [-1] * (2 * m)
    middle_seen = [False] * m

    def walk(side: int, point: int) -> int:
        while True:
            if side == 0:
                q = upper[point]
                if q < m:
                    return q
                middle_seen[q - m] = True
                side, point = 1, q - m
            else:
                q = lower[point]
                if q >= m:
                    return q
                middle_seen[q] = True
                side, point = 0, m + q

    for p in range(m):
        if result[p] == -1:
            end = walk(0, p)
            result[p], result[end] = end, p
    for p in range(m, 2 * m):
        if result[p] == -1:
            end = walk(1, p)
            result[p], result[end] = end, p

    loops = 0
    for k in range(m):
        if middle_seen[k]:
            continue
        loops += 1
        point = k
        while not middle_seen[point]:
            middle_seen[point] = True
            q = upper[m + point] - m  # closed loops stay in the middle row
            middle_seen[q] = True
            point = lower[q]
    return tuple(result), loops


def closure_loops(match: Matching, m: int) -> int:
    """Number of loops after joining top point p to bottom point m+p."""
    parent = list(range(2 * m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int):
        parent[find(a)] = find(b)

    for p in range(2 * m):
        union(p, match[p])
    for p in range(m):
        union(p, m + p)
    return len({find(p) for p in range(2 * m)})


class TLElement:
    """Linear combination of planar diagrams with Laurent coefficients."""

    def __init__(self, strands: int, terms: Optional[Dict[Matching, LaurentPoly]] = None, check: bool = True):
        if strands < 1:
            raise DomainMismatchError(f"Temperley-Lieb elements need at least one strand, got {strands}")
        self.strands = strands
        self.terms: Dict[Matching, LaurentPoly] = {}
        for match, coeff in (terms or {}).items():
            if check and not is_planar(tuple(match), strands):
                raise DomainMismatchError(f"Diagram {match} is not a planar pairing on {strands} strands")
            if not coeff.is_zero():
                self.terms[tuple(match)] = coeff

    @classmethod
    def identity(cls, m: int) -> "TLElement":
        return cls(m, {identity_matching(m): LaurentPoly.one()}, check=False)

    @classmethod
    def generator(cls, m: int, i: int) -> "TLElement":
        return cls(m, {cup_cap_matching(m, i): LaurentPoly.one()}, check=False)

    @classmethod
    def braid_generator(cls, m: int, i: int, sign: int) -> "TLElement":
        straight = LaurentPoly.monomial(sign)
        turned = LaurentPoly.monomial(-sign)
        return cls(m, {identity_matching(m): straight, cup_cap_matching(m, i): turned}, check=False)

    def __add__(self, other: "TLElement") -> "TLElement":
        self._check_strands(other)
        terms = dict(self.terms)
        for match, coeff in other.terms.items():
            terms[match] = terms.get(match, LaurentPoly.zero()) + coeff
        return TLElement(self.strands, terms, check=False)

    def __mul__(self, other: "TLElement") -> "TLElement":
        self._check_strands(other)
        m = self.strands
        terms: Dict[Matching, LaurentPoly] = {}
        for upper, c1 in self.terms.items():
            for lower, c2 in other.terms.items():
                glued, loops = compose_matchings(upper, lower, m)
                coeff = c1 * c2 * (LOOP_WEIGHT ** loops)
                terms[glued] = terms.get(glued, LaurentPoly.zero()) + coeff
        return TLElement(m, terms, check=False)

    def closure(self) -> LaurentPoly:
        """Markov-closes every diagram; normalized so a single loop counts 1."""
        total = LaurentPoly.zero()
        for match, coeff in self.terms.items():
            total = total + coeff * (LOOP_WEIGHT ** (closure_loops(match, self.strands) - 1))
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, TLElement) and self.strands == other.strands and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def _check_strands(self, other: "TLElement"):
        if self.strands != other.strands:
            raise DomainMismatchError(f"Strand mismatch: {self.strands} vs {other.strands}")


def _require_a(w: BraidWord):
    if w.kind is not GroupKind.A:
        raise DomainMismatchError(f"Closure invariants need an A-type word, got kind {w.header_kind}")


def tl_image(w: BraidWord, max_strands: Optional[int] = None) -> TLElement:
    _require_a(w)
    m = w.rank + 1
    cap = resolve_budget(max_strands, MAX_STRANDS)
    if m > cap:
        raise BudgetExceededError(f"{m} strands exceed the Temperley-Lieb budget of {cap}")
    element = TLElement.identity(m)
    for gen, sign in w.letters:
        element = element * TLElement.braid_generator(m, gen.index, sign)
    return element


def kauffman_bracket(w: BraidWord, max_strands: Optional[int] = None) -> LaurentPoly:
    """Bracket of the closure of an A-type braid, unknot normalized to 1."""
    bracket = tl_image(w, max_strands=max_strands).closure()
    logger.debug("Bracket of %s: %s", w, bracket)
    return bracket


def writhe_factor(exponent_sum: int) -> LaurentPoly:
    """(-A^3)^(-exponent_sum)."""
    return LaurentPoly.monomial(-3 * exponent_sum, -1 if exponent_sum % 2 else 1)


def exponent_sum(w: BraidWord) -> int:
    return sum(sign for _, sign in w.letters)


def normalized_invariant(w: BraidWord, max_strands: Optional[int] = None) -> LaurentPoly:
    return writhe_factor(exponent_sum(w)) * kauffman_bracket(w, max_strands=max_strands)


def state_sum_bracket(w: BraidWord, max_crossings: Optional[int] = None) -> LaurentPoly:
    """Bracket from all 2^c smoothings of the closed braid diagram."""
    _require_a(w)
    cap = resolve_budget(max_crossings, STATE_SUM_MAX_CROSSINGS)
    c = len(w)
    if c > cap:
        raise BudgetExceededError(f"{c} crossings exceed the state-sum budget of {cap}")
    m = w.rank + 1

    def node(level: int, position: int) -> int:
        return (level % c if c else 0) * m + position

    total: Dict[int, int] = {}
    for state in itertools.product((0, 1), repeat=c):
        parent = list(range(max(c, 1) * m))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: int, b: int):
            parent[find(a)] = find(b)

        a_power = 0
        for level, ((gen, sign), vertical) in enumerate(zip(w.letters, state)):
            i = gen.index
            for p in range(m):
                if p not in (i - 1, i):
                    union(node(level, p), node(level + 1, p))
            if vertical:
                union(node(level, i - 1), node(level + 1, i - 1))
                union(node(level, i), node(level + 1, i))
                a_power += sign
            else:
                union(node(level, i - 1), node(level, i))
                union(node(level + 1, i - 1), node(level + 1, i))
                a_power -= sign
        loops = len({find(x) for x in range(max(c, 1) * m)})
        contribution = LaurentPoly.monomial(a_power) * (LOOP_WEIGHT ** (loops - 1))
        for degree, coeff in contribution.terms.items():
            total[degree] = total.get(degree, 0) + coeff
    return LaurentPoly(total)


def jones_polynomial(w: BraidWord, max_strands: Optional[int] = None) -> sp.Expr:
    """Jones polynomial of the closure, from A = t^(-1/4)."""
    invariant = normalized_invariant(w, max_strands=max_strands).to_sympy(A_SYMBOL)
    return sp.expand(invariant.subs({A_SYMBOL: T_SYMBOL ** sp.Rational(-1, 4)}))
