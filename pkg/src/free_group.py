# braid_workbench/src/free_group.py
"""
Free-group words and endomorphisms.

A FreeWord stores its letters as signed generator indices (+i for x_i,
-i for x_i^-1), always freely reduced. A FreeEndomorphism is given by the
images of the generators and acts by substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.utils import BudgetExceededError, DomainMismatchError, endo_budget

Letter = Tuple[int, int]  # (index, sign)


def _reduce_signed(signed: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for s in signed:
        if stack and stack[-1] == -s:
            stack.pop()
        else:
            stack.append(s)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    signed: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise DomainMismatchError(f"Free group rank must be positive, got {self.rank}")
        for s in self.signed:
            if s == 0 or abs(s) > self.rank:
                raise DomainMismatchError(f"Generator index {abs(s)} out of range 1..{self.rank}")
        object.__setattr__(self, "signed", _reduce_signed(self.signed))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, index: int, sign: int = 1) -> "FreeWord":
        return cls(rank, (sign * index,))

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple((abs(s), 1 if s > 0 else -1) for s in self.signed)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if s > 0 else -1 for s in self.signed)

    def is_identity(self) -> bool:
        return not self.signed

    def __len__(self) -> int:
        return len(self.signed)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return free_multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return free_invert(self)

    def __pow__(self, k: int) -> "FreeWord":
        if k < 0:
            return free_invert(self) ** -k
        result = FreeWord.identity(self.rank)
        for _ in range(k):
            result = free_multiply(result, self)
        return result

    def render(self, symbol: str = "x", offset: int = 0) -> str:
        """Text form such as ``x1 x2^-1``; ``offset`` shifts the printed index."""
        atoms = []
        for index, sign in self.letters:
            name = f"{symbol}{index + offset}"
            atoms.append(name if sign > 0 else f"{name}^-1")
        return " ".join(atoms)

    def __str__(self) -> str:
        return self.render() or "1"


def free_reduce(letters: Sequence[Union[Letter, int]], rank: int) -> FreeWord:
    """Freely reduces a sequence of ``(index, sign)`` pairs or signed indices."""
    signed = []
    for letter in letters:
        if isinstance(letter, tuple):
            index, sign = letter
            if sign not in (1, -1):
                raise DomainMismatchError(f"Letter sign must be +1 or -1, got {sign}")
            signed.append(sign * index)
        else:
            signed.append(letter)
    return FreeWord(rank, tuple(signed))


def _check_ranks(a_rank: int, b_rank: int):
    if a_rank != b_rank:
        raise DomainMismatchError(f"Free group rank mismatch: {a_rank} vs {b_rank}")


def free_multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    _check_ranks(a.rank, b.rank)
    left, right = a.signed, b.signed
    k = 0
    limit = min(len(left), len(right))
    while k < limit and left[len(left) - 1 - k] == -right[k]:
        k += 1
    return FreeWord(a.rank, left[:len(left) - k] + right[k:])


def free_invert(a: FreeWord) -> FreeWord:
    return FreeWord(a.rank, tuple(-s for s in reversed(a.signed)))


@dataclass(frozen=True)
class FreeEndomorphism:
    """Endomorphism of the free group, ``images[i-1]`` being the image of x_i."""

    rank: int
    images: Tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise DomainMismatchError(
                f"Endomorphism of rank {self.rank} needs {self.rank} images, got {len(self.images)}"
            )
        for image in self.images:
            _check_ranks(self.rank, image.rank)

    @classmethod
    def identity(cls, rank: int) -> "FreeEndomorphism":
        return cls(rank, tuple(FreeWord.generator(rank, i) for i in range(1, rank + 1)))

    @classmethod
    def from_signed(cls, rank: int, images: Sequence[Sequence[int]]) -> "FreeEndomorphism":
        return cls(rank, tuple(FreeWord(rank, tuple(image)) for image in images))

    def image(self, index: int) -> FreeWord:
        return self.images[index - 1]

    def total_length(self) -> int:
        return sum(len(image) for image in self.images)

    def is_identity(self) -> bool:
        return all(image.signed == (i,) for i, image in enumerate(self.images, start=1))

    def __call__(self, w: FreeWord, max_len: Optional[int] = None) -> FreeWord:
        return endo_apply(self, w, max_len=max_len)

    def __str__(self) -> str:
        return ", ".join(f"x{i} -> {image}" for i, image in enumerate(self.images, start=1))


def endo_apply(e: FreeEndomorphism, w: FreeWord, max_len: Optional[int] = None) -> FreeWord:
    """Substitutes every letter of ``w`` by its image and reduces."""
    _check_ranks(e.rank, w.rank)
    budget = endo_budget(max_len)
    inverses = {}
    stack: List[int] = []
    for s in w.signed:
        if s > 0:
            piece = e.images[s - 1].signed
        else:
            piece = inverses.get(-s)
            if piece is None:
                piece = tuple(-x for x in reversed(e.images[-s - 1].signed))
                inverses[-s] = piece
        for x in piece:
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
        if len(stack) > budget:
            raise BudgetExceededError(
                f"Endomorphism image exceeded the length budget of {budget} letters"
            )
    return FreeWord(w.rank, tuple(stack))


def endo_compose(e: FreeEndomorphism, f: FreeEndomorphism,
                 max_len: Optional[int] = None) -> FreeEndomorphism:
    """Returns e∘f, the endomorphism x_i -> e(f(x_i))."""
    _check_ranks(e.rank, f.rank)
    return FreeEndomorphism(e.rank, tuple(endo_apply(e, image, max_len=max_len) for image in f.images))
