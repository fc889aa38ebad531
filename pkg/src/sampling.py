# braid_workbench/src/sampling.py
"""Seeded random words for the proposition suite and the tests."""

from typing import List, Optional

import numpy as np

from src.braid_words import (
    BraidWord,
    GenLetter,
    GroupKind,
    Letter,
    T,
    affine_letter,
    concat,
    invert_word,
    make_word,
)
from src.config import RANDOM_SEED
from src.decomposition import KernelWord


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(RANDOM_SEED if seed is None else seed)


def alphabet(kind: GroupKind, rank: int, parabolic: bool = False) -> List[GenLetter]:
    """Canonical generators of the group, sigmas first."""
    gens = [GenLetter.sigma(i) for i in range(1, rank + 1)]
    if kind is GroupKind.B:
        gens.append(T)
    elif kind is GroupKind.AFFINE:
        gens.append(GenLetter.agen(3) if parabolic else affine_letter(rank))
    return gens


def random_word(rng: np.random.Generator, kind: GroupKind, rank: int, length: int,
                parabolic: bool = False) -> BraidWord:
    gens = alphabet(kind, rank, parabolic)
    if not gens:
        return make_word(kind, rank, [], parabolic)
    picks = rng.integers(0, len(gens), size=length)
    signs = rng.choice([1, -1], size=length)
    letters: List[Letter] = [(gens[int(p)], int(s)) for p, s in zip(picks, signs)]
    return make_word(kind, rank, letters, parabolic)


def random_length(rng: np.random.Generator, max_len: int) -> int:
    return int(rng.integers(0, max_len + 1))


def mutate(rng: np.random.Generator, w: BraidWord) -> BraidWord:
    """Perturbs one letter: flips its sign or replaces its generator."""
    gens = alphabet(w.kind, w.rank, w.parabolic)
    letters = list(w.letters)
    if not letters:
        return make_word(w.kind, w.rank, [(gens[0], 1)], w.parabolic)
    position = int(rng.integers(0, len(letters)))
    gen, sign = letters[position]
    if len(gens) > 1 and rng.random() < 0.5:
        others = [g for g in gens if g != gen]
        letters[position] = (others[int(rng.integers(0, len(others)))], sign)
    else:
        letters[position] = (gen, -sign)
    return w.with_letters(letters)


def insert_relator(rng: np.random.Generator, w: BraidWord, lhs: BraidWord, rhs: BraidWord) -> BraidWord:
    """Inserts lhs * rhs^-1 (a word equal to the identity) at a random position."""
    relator = concat(lhs, invert_word(rhs))
    position = int(rng.integers(0, len(w) + 1))
    return w.with_letters(w.letters[:position] + relator.letters + w.letters[position:])


def random_kernel_element(rng: np.random.Generator, rank: int, max_conjugates: int = 6,
                          max_conjugator_len: int = 4) -> BraidWord:
    """Product of conjugates u t^(+-1) u^-1, all of which die under t -> 1."""
    result = make_word(GroupKind.B, rank, [])
    for _ in range(int(rng.integers(1, max_conjugates + 1))):
        u = random_word(rng, GroupKind.B, rank, random_length(rng, max_conjugator_len))
        t_power = make_word(GroupKind.B, rank, [(T, int(rng.choice([1, -1])))])
        result = concat(result, concat(concat(u, t_power), invert_word(u)))
    return result


def random_zero_sum_f_word(rng: np.random.Generator, rank: int, length: int) -> KernelWord:
    """Random word in F_0..F_n, balanced with F_0 letters to exponent sum zero."""
    letters = [(int(i), int(s)) for i, s in zip(rng.integers(0, rank + 1, size=length),
                                                 rng.choice([1, -1], size=length))]
    balance = sum(s for _, s in letters)
    letters.extend([(0, -1 if balance > 0 else 1)] * abs(balance))
    return KernelWord.from_letters(rank, letters)
