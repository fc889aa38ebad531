# braid_workbench/src/braid_words.py
"""
Typed braid words for the three families handled by the workbench.

Rank convention: a word of kind A and rank n lives in B(A_n) (generators
s1..sn, n+1 strands); kind B and rank n is B(B_{n+1}) (s1..sn and t); kind
AT and rank n is the affine group B(Ã_n) (s1..sn and the affine generator
a_{n+1}). Affine words may alternatively be written in the parabolic-like
alphabet s1..sn, a3 (header ``ATP``, rank >= 3).

Abbreviations (phi, and a_k other than the stored affine generator) are
expanded when a word is built, so every algorithm downstream sees only the
canonical alphabets.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

from src.config import MAX_ENDO_LEN
from src.utils import BudgetExceededError, DomainMismatchError, WordSyntaxError

logger = logging.getLogger(__name__)


class GroupKind(Enum):
    A = "A"
    B = "B"
    AFFINE = "AT"


class Presentation(Enum):
    FORMAL = "formal"
    PARABOLIC = "parabolic"
    PHI = "phi"


@dataclass(frozen=True, order=True)
class GenLetter:
    symbol: str  # "s", "t", "a" or "phi"
    index: int = 0

    @classmethod
    def sigma(cls, i: int) -> "GenLetter":
        return cls("s", i)

    @classmethod
    def agen(cls, k: int) -> "GenLetter":
        return cls("a", k)

    @property
    def is_sigma(self) -> bool:
        return self.symbol == "s"

    def __str__(self) -> str:
        if self.symbol in ("s", "a"):
            return f"{self.symbol}{self.index}"
        return self.symbol


T = GenLetter("t")
PHI = GenLetter("phi")

Letter = Tuple[GenLetter, int]


def min_rank(kind: GroupKind, parabolic: bool = False) -> int:
    if parabolic:
        return 3
    return 1 if kind is GroupKind.AFFINE else 0


def affine_letter(rank: int) -> GenLetter:
    """The stored affine generator a_{n+1} of B(Ã_n)."""
    return GenLetter.agen(rank + 1)


def _letter_is_legal(kind: GroupKind, rank: int, gen: GenLetter, parabolic: bool) -> bool:
    if gen.symbol == "s":
        return 1 <= gen.index <= rank
    if kind is GroupKind.A:
        return False
    if kind is GroupKind.B:
        if gen.symbol in ("t", "phi"):
            return True
        return gen.symbol == "a" and 2 <= gen.index <= rank + 1
    # affine
    if gen.symbol != "a":
        return False
    return gen.index == rank + 1 or 3 <= gen.index <= rank + 1


def _letter_is_canonical(kind: GroupKind, rank: int, gen: GenLetter, parabolic: bool) -> bool:
    if gen.symbol in ("s", "t"):
        return True
    if kind is GroupKind.AFFINE and gen.symbol == "a":
        return gen.index == (3 if parabolic else rank + 1)
    return False


@dataclass(frozen=True)
class BraidWord:
    kind: GroupKind
    rank: int
    letters: Tuple[Letter, ...] = ()
    parabolic: bool = False

    def __post_init__(self):
        if self.parabolic and self.kind is not GroupKind.AFFINE:
            raise DomainMismatchError("Only affine words have a parabolic-like alphabet")
        floor = min_rank(self.kind, self.parabolic)
        if self.rank < floor:
            raise DomainMismatchError(
                f"Rank {self.rank} is below the minimum {floor} for kind {self.header_kind}"
            )
        object.__setattr__(self, "letters", tuple(self.letters))
        for gen, sign in self.letters:
            if sign not in (1, -1):
                raise DomainMismatchError(f"Letter sign must be +1 or -1, got {sign}")
            if not _letter_is_legal(self.kind, self.rank, gen, self.parabolic):
                raise DomainMismatchError(
                    f"Generator {gen} is not legal in {self.header_kind} of rank {self.rank}"
                )

    @property
    def header_kind(self) -> str:
        return "ATP" if self.parabolic else self.kind.value

    @property
    def is_canonical(self) -> bool:
        return all(_letter_is_canonical(self.kind, self.rank, gen, self.parabolic) for gen, _ in self.letters)

    def with_letters(self, letters: Iterable[Letter]) -> "BraidWord":
        return BraidWord(self.kind, self.rank, tuple(letters), self.parabolic)

    def same_group(self, other: "BraidWord") -> bool:
        return (self.kind, self.rank, self.parabolic) == (other.kind, other.rank, other.parabolic)

    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __invert__(self) -> "BraidWord":
        return invert_word(self)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else invert_word(self)
        return self.with_letters(base.letters * abs(k))

    def __str__(self) -> str:
        return render(self)


# --- Constructors used throughout the package ---

def empty_word(kind: GroupKind, rank: int, parabolic: bool = False) -> BraidWord:
    return BraidWord(kind, rank, (), parabolic)


def sigma_run(indices: Iterable[int], sign: int = 1) -> List[Letter]:
    return [(GenLetter.sigma(i), sign) for i in indices]


def make_word(kind: GroupKind, rank: int, letters: Iterable[Letter], parabolic: bool = False) -> BraidWord:
    """Builds a word and expands abbreviations, returning canonical storage form."""
    return expand_abbreviations(BraidWord(kind, rank, tuple(letters), parabolic))


def _invert_letters(letters: Sequence[Letter]) -> List[Letter]:
    return [(gen, -sign) for gen, sign in reversed(letters)]


def _abbreviation(kind: GroupKind, rank: int, gen: GenLetter, parabolic: bool) -> List[Letter]:
    n = rank
    if kind is GroupKind.B and gen.symbol == "phi":
        return [(T, 1)] + sigma_run(range(1, n + 1))
    if kind is GroupKind.B and gen.symbol == "a":
        k = gen.index
        return ([(T, 1)] + sigma_run(range(1, k - 1)) + [(GenLetter.sigma(k - 1), 1)]
                + sigma_run(range(k - 2, 0, -1), -1) + [(T, -1)])
    if kind is GroupKind.AFFINE and not parabolic:
        # a_k = s_k..s_n a_{n+1} s_n^-1..s_k^-1
        k = gen.index
        return (sigma_run(range(k, n + 1)) + [(affine_letter(n), 1)]
                + sigma_run(range(n, k - 1, -1), -1))
    # parabolic: a_k = s_{k-1}^-1..s_3^-1 a3 s_3..s_{k-1}
    k = gen.index
    return (sigma_run(range(k - 1, 2, -1), -1) + [(GenLetter.agen(3), 1)]
            + sigma_run(range(3, k)))


def expand_abbreviations(w: BraidWord) -> BraidWord:
    """Replaces phi and non-stored a_k letters by their defining words."""
    if w.is_canonical:
        return w
    out: List[Letter] = []
    for gen, sign in w.letters:
        if _letter_is_canonical(w.kind, w.rank, gen, w.parabolic):
            out.append((gen, sign))
            continue
        piece = _abbreviation(w.kind, w.rank, gen, w.parabolic)
        out.extend(piece if sign > 0 else _invert_letters(piece))
    return w.with_letters(out)


# --- Group operations on words ---

def _require_same_group(x: BraidWord, y: BraidWord, what: str):
    if not x.same_group(y):
        raise DomainMismatchError(
            f"{what}: {x.header_kind} rank {x.rank} vs {y.header_kind} rank {y.rank}"
        )


def concat(x: BraidWord, y: BraidWord) -> BraidWord:
    _require_same_group(x, y, "Cannot concatenate words of different groups")
    return x.with_letters(x.letters + y.letters)


def invert_word(x: BraidWord) -> BraidWord:
    return x.with_letters(_invert_letters(x.letters))


def free_cancel(x: BraidWord) -> BraidWord:
    """Removes adjacent letter/inverse pairs. Not a normal form."""
    stack: List[Letter] = []
    for gen, sign in x.letters:
        if stack and stack[-1] == (gen, -sign):
            stack.pop()
        else:
            stack.append((gen, sign))
    return x.with_letters(stack)


def sigma_support(w: BraidWord) -> Tuple[int, ...]:
    return tuple(sorted({gen.index for gen, _ in w.letters if gen.is_sigma}))


# --- Defining relations ---

@dataclass(frozen=True)
class Relation:
    label: str
    lhs: BraidWord
    rhs: BraidWord


@dataclass(frozen=True)
class RelationTable:
    kind: GroupKind
    rank: int
    presentation: Presentation
    pairs: Tuple[Relation, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.pairs)

    def labelled(self, label: str) -> List[Relation]:
        return [r for r in self.pairs if r.label == label]


def _s(i: int, sign: int = 1) -> Letter:
    return (GenLetter.sigma(i), sign)


def _sigma_relations(word, n: int) -> List[Relation]:
    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            pairs.append(Relation("far-commutation", word([_s(i), _s(j)]), word([_s(j), _s(i)])))
    for i in range(1, n):
        pairs.append(Relation("braid", word([_s(i), _s(i + 1), _s(i)]), word([_s(i + 1), _s(i), _s(i + 1)])))
    return pairs


def _affine_cycle_relations(word, n: int, a: Letter) -> List[Relation]:
    """Relations tying a_{n+1} into the cycle s1 - ... - sn - a_{n+1} - s1."""
    if n < 2:
        return []  # B(Ã_1) is free on s1 and a2
    pairs = []
    for i in range(2, n):
        pairs.append(Relation("affine-commutation", word([_s(i), a]), word([a, _s(i)])))
    pairs.append(Relation("affine-braid-first", word([_s(1), a, _s(1)]), word([a, _s(1), a])))
    pairs.append(Relation("affine-braid-last", word([_s(n), a, _s(n)]), word([a, _s(n), a])))
    return pairs


def defining_relations(kind: GroupKind, rank: int,
                       presentation: Presentation = Presentation.FORMAL) -> RelationTable:
    """Complete relation list of the requested presentation."""
    n = rank
    parabolic = presentation is Presentation.PARABOLIC
    if parabolic and (kind is not GroupKind.AFFINE or n < 3):
        raise DomainMismatchError("The parabolic-like presentation needs kind AT and rank >= 3")
    if presentation is Presentation.PHI and (kind is not GroupKind.B or n < 1):
        raise DomainMismatchError("The phi presentation needs kind B and rank >= 1")
    if n < min_rank(kind):
        raise DomainMismatchError(f"Rank {n} is below the minimum for kind {kind.value}")

    def word(letters):
        return make_word(kind, n, letters, parabolic)

    pairs = _sigma_relations(word, n)
    if kind is GroupKind.B and presentation is Presentation.FORMAL:
        t = (T, 1)
        for i in range(2, n + 1):
            pairs.append(Relation("t-commutation", word([_s(i), t]), word([t, _s(i)])))
        if n >= 1:
            pairs.append(Relation("t-four-term", word([_s(1), t, _s(1), t]), word([t, _s(1), t, _s(1)])))
    elif kind is GroupKind.B:
        # generators s1..sn, a_{n+1}, phi: the cycle relations plus phi-conjugation
        a = (affine_letter(n), 1)
        phi, phi_inv = (PHI, 1), (PHI, -1)
        pairs.extend(_affine_cycle_relations(word, n, a))
        for i in range(1, n):
            pairs.append(Relation("phi-conjugation", word([phi, _s(i), phi_inv]), word([_s(i + 1)])))
        pairs.append(Relation("phi-conjugation", word([phi, _s(n), phi_inv]), word([a])))
        pairs.append(Relation("phi-conjugation", word([phi, a, phi_inv]), word([_s(1)])))
    elif kind is GroupKind.AFFINE and not parabolic:
        pairs.extend(_affine_cycle_relations(word, n, (affine_letter(n), 1)))
    elif parabolic:
        a3 = (GenLetter.agen(3), 1)
        pairs.append(Relation("a3-braid-s1", word([_s(1), a3, _s(1)]), word([a3, _s(1), a3])))
        pairs.append(Relation("a3-braid-s3", word([_s(3), a3, _s(3)]), word([a3, _s(3), a3])))
        for i in range(4, n + 1):
            pairs.append(Relation("a3-commutation", word([_s(i), a3]), word([a3, _s(i)])))
        pairs.append(Relation("a3-mixed", word([_s(3), _s(2), a3, _s(3)]), word([_s(2), a3, _s(3), _s(2)])))

    logger.debug("Built %d relations for %s rank %d (%s)", len(pairs), kind.value, n, presentation.value)
    return RelationTable(kind, n, presentation, tuple(pairs))


# --- Text grammar ---

_HEADER_RE = re.compile(r"\s*(ATP|AT|A|B):n=(\d+):")
_ATOM_RE = re.compile(r"(?:s(\d+)|t|a(\d+)|phi)(?:\^(-?\d+))?\Z")
_TOKEN_RE = re.compile(r"\S+")

_HEADER_KINDS = {
    "A": (GroupKind.A, False),
    "B": (GroupKind.B, False),
    "AT": (GroupKind.AFFINE, False),
    "ATP": (GroupKind.AFFINE, True),
}


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _parse_atoms(text: str, start: int, kind: GroupKind, rank: int, parabolic: bool) -> List[Letter]:
    letters: List[Letter] = []
    for match in _TOKEN_RE.finditer(text, start):
        token = match.group(0)
        atom = _ATOM_RE.match(token)
        if atom is None:
            raise WordSyntaxError(f"Unrecognized atom {token!r}", _byte_offset(text, match.start()))
        s_index, a_index, exponent = atom.groups()
        if s_index is not None:
            gen = GenLetter.sigma(int(s_index))
        elif a_index is not None:
            gen = GenLetter.agen(int(a_index))
        elif token.startswith("phi"):
            gen = PHI
        else:
            gen = T
        if not _letter_is_legal(kind, rank, gen, parabolic):
            raise DomainMismatchError(
                f"Generator {gen} exceeds rank {rank} or is not legal in kind "
                f"{'ATP' if parabolic else kind.value} (at byte {_byte_offset(text, match.start())})"
            )
        power = int(exponent) if exponent is not None else 1
        if len(letters) + abs(power) > MAX_ENDO_LEN:
            raise BudgetExceededError(
                f"Word expands past {MAX_ENDO_LEN} letters (at byte {_byte_offset(text, match.start())})"
            )
        sign = 1 if power > 0 else -1
        letters.extend([(gen, sign)] * abs(power))
    return letters


def parse(text: str) -> BraidWord:
    """Parses ``KIND:n=<rank>: atoms...`` into a canonical word."""
    header = _HEADER_RE.match(text)
    if header is None:
        raise WordSyntaxError("Expected a header such as 'A:n=2:'", _byte_offset(text, len(text) - len(text.lstrip())))
    kind, parabolic = _HEADER_KINDS[header.group(1)]
    rank = int(header.group(2))
    floor = min_rank(kind, parabolic)
    if rank < floor:
        raise DomainMismatchError(f"Rank {rank} is below the minimum {floor} for kind {header.group(1)}")
    letters = _parse_atoms(text, header.end(), kind, rank, parabolic)
    return make_word(kind, rank, letters, parabolic)


def parse_body(kind: GroupKind, rank: int, body: str, parabolic: bool = False) -> BraidWord:
    """Parses a headerless word such as ``s1 s2^-1`` for a known group."""
    return make_word(kind, rank, _parse_atoms(body, 0, kind, rank, parabolic), parabolic)


def render_letters(letters: Sequence[Letter]) -> str:
    """Run-length text form: equal adjacent letters collapse into ``base^k``."""
    atoms = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        gen, sign = letters[i]
        power = sign * (j - i)
        atoms.append(str(gen) if power == 1 else f"{gen}^{power}")
        i = j
    return " ".join(atoms)


def render(w: BraidWord) -> str:
    body = render_letters(w.letters)
    head = f"{w.header_kind}:n={w.rank}:"
    return f"{head} {body}" if body else head
