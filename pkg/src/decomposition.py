# braid_workbench/src/decomposition.py
"""
Membership and structure of the affine subgroup inside B(B_{n+1}).

- t-exponent membership and the phi-decomposition x = lambda * phi^k
- conversion between the formal and parabolic-like affine alphabets
- rewriting of the kernel of alpha over the free generators F_0..F_n
- Schreier rewriting of zero-sum F-words over g[j,i] = F0^j Fi F0^-(j+1)
- the split of an affine braid into its kernel part and its A-type part
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.braid_words import (
    PHI,
    BraidWord,
    GenLetter,
    GroupKind,
    Letter,
    T,
    affine_letter,
    free_cancel,
    invert_word,
    make_word,
    sigma_run,
)
from src.equality import is_identity, words_equal
from src.free_group import FreeWord, free_invert, free_multiply
from src.morphisms import MorphismId, apply_morphism
from src.utils import (
    BudgetExceededError,
    DomainMismatchError,
    NotInKernelError,
    WordSyntaxError,
    endo_budget,
)

logger = logging.getLogger(__name__)


def _require(w: BraidWord, kind: GroupKind, what: str, min_rank: int = 0):
    if w.kind is not kind:
        raise DomainMismatchError(f"{what} needs a word of kind {kind.value}, got {w.header_kind}")
    if w.rank < min_rank:
        raise DomainMismatchError(f"{what} needs rank >= {min_rank}, got {w.rank}")


# --- Membership and the phi-decomposition ---

def t_exponent_sum(w: BraidWord) -> int:
    _require(w, GroupKind.B, "t_exponent_sum")
    return sum(sign for gen, sign in w.letters if gen == T)


def is_affine(w: BraidWord) -> bool:
    """A B-type braid lies in the affine subgroup iff its t-exponents cancel."""
    return t_exponent_sum(w) == 0


@dataclass(frozen=True)
class PhiDecomposition:
    lam: BraidWord  # affine word of the same rank
    k: int

    def recombine(self) -> BraidWord:
        """lambda * phi^k as a B-type word."""
        n = self.lam.rank
        lifted = apply_morphism(MorphismId("iota", n), self.lam)
        sign = 1 if self.k >= 0 else -1
        return make_word(GroupKind.B, n, list(lifted.letters) + [(PHI, sign)] * abs(self.k))

    def __str__(self) -> str:
        return f"lambda = {self.lam}; k = {self.k}"


def _phi_cycle(n: int) -> List[GenLetter]:
    return [GenLetter.sigma(i) for i in range(1, n + 1)] + [affine_letter(n)]


def phi_decompose(w: BraidWord) -> PhiDecomposition:
    """Pushes every phi to the right using t = phi * s_n^-1 .. s_1^-1."""
    _require(w, GroupKind.B, "phi_decompose", min_rank=1)
    n = w.rank
    cycle = _phi_cycle(n)
    position = {g: j for j, g in enumerate(cycle)}
    size = n + 1

    def shifted(letters: List[Letter], r: int) -> List[Letter]:
        return [(cycle[(position[g] + r) % size], sign) for g, sign in letters]

    z = sigma_run(range(n, 0, -1), -1)
    z_inverse = sigma_run(range(1, n + 1))
    out: List[Letter] = []
    r = 0
    for gen, sign in w.letters:
        if gen != T:
            out.extend(shifted([(gen, sign)], r))
        elif sign > 0:
            out.extend(shifted(z, r + 1))
            r += 1
        else:
            out.extend(shifted(z_inverse, r))
            r -= 1
    lam = free_cancel(make_word(GroupKind.AFFINE, n, out))
    return PhiDecomposition(lam, r)


# --- Parabolic-like alphabet ---

def to_parabolic(w: BraidWord) -> BraidWord:
    """Rewrites a_{n+1} as s_n^-1 .. s_3^-1 a3 s_3 .. s_n."""
    _require(w, GroupKind.AFFINE, "to_parabolic", min_rank=3)
    if w.parabolic:
        return w
    return make_word(GroupKind.AFFINE, w.rank, w.letters, parabolic=True)


def from_parabolic(w: BraidWord) -> BraidWord:
    """Rewrites a3 as s_3 .. s_n a_{n+1} s_n^-1 .. s_3^-1."""
    _require(w, GroupKind.AFFINE, "from_parabolic", min_rank=3)
    if not w.parabolic:
        return w
    return make_word(GroupKind.AFFINE, w.rank, w.letters)


# --- Kernel of alpha over F_0..F_n ---

@dataclass(frozen=True)
class KernelWord:
    """Word in F_0..F_n; F_i is stored as free generator i+1."""

    rank: int
    word: FreeWord

    @classmethod
    def from_letters(cls, rank: int, letters: List[Tuple[int, int]]) -> "KernelWord":
        return cls(rank, FreeWord(rank + 1, tuple(sign * (i + 1) for i, sign in letters)))

    @property
    def letters(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((index - 1, sign) for index, sign in self.word.letters)

    @property
    def exponent_sum(self) -> int:
        return self.word.exponent_sum

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word.render("F", offset=-1) or "1"


def f_generator(n: int, i: int) -> BraidWord:
    """F_i = s_i .. s_1 t s_1^-1 .. s_i^-1 in B(B_{n+1}); F_0 = t."""
    return make_word(GroupKind.B, n, sigma_run(range(i, 0, -1)) + [(T, 1)] + sigma_run(range(1, i + 1), -1))


def kernel_expansion(kw: KernelWord) -> BraidWord:
    out: List[Letter] = []
    for i, sign in kw.letters:
        piece = f_generator(kw.rank, i)
        out.extend(piece.letters if sign > 0 else invert_word(piece).letters)
    return make_word(GroupKind.B, kw.rank, out)


def sigma_action_on_f(n: int, j: int, sign: int) -> List[FreeWord]:
    """Images of F_0..F_n under conjugation by s_j^sign, as free words."""
    rank = n + 1
    images = [FreeWord.generator(rank, i + 1) for i in range(rank)]
    lower, upper = images[j - 1], images[j]
    if sign > 0:
        images[j - 1] = upper
        images[j] = free_multiply(free_multiply(free_invert(upper), lower), upper)
    else:
        images[j] = lower
        images[j - 1] = free_multiply(free_multiply(lower, upper), free_invert(lower))
    return images


def action_table_pairs(n: int) -> List[Tuple[BraidWord, BraidWord]]:
    """(s_j F_i s_j^-1, expansion of its table image) for every j and i."""
    pairs = []
    for j in range(1, n + 1):
        images = sigma_action_on_f(n, j, 1)
        for i in range(0, n + 1):
            s = make_word(GroupKind.B, n, [(GenLetter.sigma(j), 1)])
            conjugate = s * f_generator(n, i) * invert_word(s)
            pairs.append((conjugate, kernel_expansion(KernelWord(n, images[i]))))
    return pairs


def kernel_rewrite_F(w: BraidWord, verify: bool = True, max_len: Optional[int] = None) -> KernelWord:
    """Rewrites an element of the kernel of alpha over F_0..F_n."""
    _require(w, GroupKind.B, "kernel_rewrite_F")
    n = w.rank
    if verify and not is_identity(apply_morphism(MorphismId("alpha", n), w)):
        raise NotInKernelError(f"{w} does not map to the identity of B(A_{n})")
    budget = endo_budget(max_len)
    rank = n + 1
    psi = [FreeWord.generator(rank, i + 1) for i in range(rank)]
    out = FreeWord.identity(rank)
    for gen, sign in w.letters:
        if gen == T:
            image = psi[0] if sign > 0 else free_invert(psi[0])
            out = free_multiply(out, image)
            continue
        j = gen.index
        lower, upper = psi[j - 1], psi[j]
        if sign > 0:
            psi[j - 1] = upper
            psi[j] = free_multiply(free_multiply(free_invert(upper), lower), upper)
        else:
            psi[j] = lower
            psi[j - 1] = free_multiply(free_multiply(lower, upper), free_invert(lower))
        if len(psi[j]) > budget or len(psi[j - 1]) > budget:
            raise BudgetExceededError(f"Kernel rewriting exceeded the length budget of {budget} letters")
    logger.debug("Kernel rewrite of %d letters produced %d F-letters", len(w), len(out))
    return KernelWord(n, out)


_F_ATOM_RE = re.compile(r"F(\d+)(?:\^(-?\d+))?\Z")
_G_ATOM_RE = re.compile(r"g\[(-?\d+),(\d+)\](?:\^(-?\d+))?\Z")
_TOKEN_RE = re.compile(r"\S+")


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def parse_kernel_word(text: str, n: int) -> KernelWord:
    """Parses ``F0 F1^-1 ...``; ``1`` or blank is the empty word."""
    letters: List[Tuple[int, int]] = []
    for match in _TOKEN_RE.finditer(text):
        token = match.group(0)
        if token == "1":
            continue
        atom = _F_ATOM_RE.match(token)
        if atom is None:
            raise WordSyntaxError(f"Unrecognized kernel atom {token!r}", _byte_offset(text, match.start()))
        index = int(atom.group(1))
        if index > n:
            raise DomainMismatchError(f"F{index} exceeds rank {n}")
        power = int(atom.group(2)) if atom.group(2) is not None else 1
        letters.extend([(index, 1 if power > 0 else -1)] * abs(power))
    return KernelWord.from_letters(n, letters)


# --- Schreier rewriting ---

GLetter = Tuple[int, int, int]  # (j, i, sign)


@dataclass(frozen=True)
class SchreierWord:
    rank: int
    letters: Tuple[GLetter, ...] = ()

    def __post_init__(self):
        stack: List[GLetter] = []
        for j, i, sign in self.letters:
            if not 1 <= i <= self.rank:
                raise DomainMismatchError(f"g[{j},{i}] needs 1 <= i <= {self.rank}")
            if stack and stack[-1] == (j, i, -sign):
                stack.pop()
            else:
                stack.append((j, i, sign))
        object.__setattr__(self, "letters", tuple(stack))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        atoms = [f"g[{j},{i}]" + ("" if sign > 0 else "^-1") for j, i, sign in self.letters]
        return " ".join(atoms) or "1"


def schreier_expansion(sw: SchreierWord) -> KernelWord:
    """Substitutes g[j,i] = F0^j Fi F0^-(j+1) and reduces."""
    letters: List[Tuple[int, int]] = []
    for j, i, sign in sw.letters:
        piece = [(0, 1 if j >= 0 else -1)] * abs(j) + [(i, 1)] + [(0, -1 if j + 1 >= 0 else 1)] * abs(j + 1)
        if sign < 0:
            piece = [(index, -s) for index, s in reversed(piece)]
        letters.extend(piece)
    return KernelWord.from_letters(sw.rank, letters)


def schreier_rewrite(kw: KernelWord) -> SchreierWord:
    """Rewrites a zero-sum F-word over the Schreier generators, transversal {F0^j}."""
    if kw.exponent_sum != 0:
        raise NotInKernelError(f"F-word {kw} has exponent sum {kw.exponent_sum}, expected 0")
    out: List[GLetter] = []
    j = 0
    for i, sign in kw.letters:
        if sign > 0:
            if i >= 1:
                out.append((j, i, 1))
            j += 1
        else:
            if i >= 1:
                out.append((j - 1, i, -1))
            j -= 1
    if j != 0:
        raise NotInKernelError(f"Schreier rewriting ended in coset F0^{j}")
    return SchreierWord(kw.rank, tuple(out))


def parse_schreier_word(text: str, n: int) -> SchreierWord:
    letters: List[GLetter] = []
    for match in _TOKEN_RE.finditer(text):
        token = match.group(0)
        if token == "1":
            continue
        atom = _G_ATOM_RE.match(token)
        if atom is None:
            raise WordSyntaxError(f"Unrecognized Schreier atom {token!r}", _byte_offset(text, match.start()))
        j, i = int(atom.group(1)), int(atom.group(2))
        power = int(atom.group(3)) if atom.group(3) is not None else 1
        letters.extend([(j, i, 1 if power > 0 else -1)] * abs(power))
    return SchreierWord(n, tuple(letters))


# --- Split of the affine group over B(A_n) ---

@dataclass(frozen=True)
class NeDecomposition:
    nu: SchreierWord
    u: BraidWord  # A-type part

    def kernel_part(self) -> BraidWord:
        """The Schreier word expanded back into an affine word."""
        return schreier_affine_expansion(self.nu)

    def recombine(self) -> BraidWord:
        return self.kernel_part() * apply_morphism(MorphismId("i_inc", self.u.rank), self.u)


def schreier_affine_expansion(sw: SchreierWord) -> BraidWord:
    lifted = kernel_expansion(schreier_expansion(sw))
    decomposition = phi_decompose(lifted)
    if decomposition.k != 0:
        raise NotInKernelError("Schreier word expanded outside the affine subgroup")
    return decomposition.lam


def ne_decompose(x: BraidWord) -> NeDecomposition:
    """Splits x as (kernel element) * I(u) with u = beta(x)."""
    _require(x, GroupKind.AFFINE, "ne_decompose", min_rank=1)
    if x.parabolic:
        x = from_parabolic(x)
    n = x.rank
    u = apply_morphism(MorphismId("beta", n), x)
    y = x * invert_word(apply_morphism(MorphismId("i_inc", n), u))
    lifted = apply_morphism(MorphismId("iota", n), y)
    nu = schreier_rewrite(kernel_rewrite_F(lifted, verify=False))
    logger.debug("Split %s into %d Schreier letters and %s", x, len(nu), u)
    return NeDecomposition(nu, u)


def ne_law_holds(x: BraidWord) -> bool:
    if x.parabolic:
        x = from_parabolic(x)
    return words_equal(x, ne_decompose(x).recombine())
