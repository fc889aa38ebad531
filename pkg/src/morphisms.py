# braid_workbench/src/morphisms.py
"""
The arrows between the A, B and affine braid groups as word maps.

Each map is a generator-image substitution defined on canonical alphabets.
Composite arrows are kept as compositions so each definition stays visible.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from src.braid_words import (
    BraidWord,
    GenLetter,
    GroupKind,
    Letter,
    Relation,
    T,
    affine_letter,
    make_word,
    sigma_run,
)
from src.utils import DomainMismatchError

logger = logging.getLogger(__name__)

A, B, AT = GroupKind.A, GroupKind.B, GroupKind.AFFINE


@dataclass(frozen=True)
class MorphismId:
    name: str
    n: int
    exponent: int = 0  # dynkin only

    def __str__(self) -> str:
        if self.name == "dynkin":
            return f"dynkin({self.n}, {self.exponent})"
        return f"{self.name}({self.n})"


# name -> (domain kind, domain rank offset, codomain kind, codomain rank offset)
SIGNATURES: Dict[str, Tuple[GroupKind, int, GroupKind, int]] = {
    "x": (A, -1, A, 0),
    "y": (B, -1, B, 0),
    "z": (A, 0, B, 0),
    "i_inc": (A, 0, AT, 0),
    "iota": (AT, 0, B, 0),
    "F": (AT, -1, AT, 0),
    "alpha": (B, 0, A, 0),
    "beta": (AT, 0, A, 0),
    "f_semidirect": (B, -1, AT, 0),
    "underbar_i": (B, -1, A, 0),
    "xbar": (AT, -1, A, 0),
    "dynkin": (AT, 0, AT, 0),
}

MORPHISM_NAMES = tuple(SIGNATURES)


def domain_of(mid: MorphismId) -> Tuple[GroupKind, int]:
    kind, offset, _, _ = SIGNATURES[mid.name]
    return kind, mid.n + offset


def codomain_of(mid: MorphismId) -> Tuple[GroupKind, int]:
    _, _, kind, offset = SIGNATURES[mid.name]
    return kind, mid.n + offset


def _s(i: int, sign: int = 1) -> Letter:
    return (GenLetter.sigma(i), sign)


def _identity_on_sigmas(rank: int) -> Dict[GenLetter, List[Letter]]:
    return {GenLetter.sigma(i): [_s(i)] for i in range(1, rank + 1)}


def beta_image(n: int) -> List[Letter]:
    """s_n^-1 .. s_2^-1 s_1 s_2 .. s_n, the image of a_{n+1} in B(A_n)."""
    return sigma_run(range(n, 1, -1), -1) + [_s(1)] + sigma_run(range(2, n + 1))


def dominating_letters(n: int) -> List[Letter]:
    return sigma_run(range(n, 0, -1)) + [(affine_letter(n), 1)]


def _images(mid: MorphismId) -> Dict[GenLetter, List[Letter]]:
    name, n = mid.name, mid.n
    if name in ("x", "y"):
        images = _identity_on_sigmas(n - 1)
        if name == "y":
            images[T] = [(T, 1)]
        return images
    if name in ("z", "i_inc"):
        return _identity_on_sigmas(n)
    if name == "iota":
        images = _identity_on_sigmas(n)
        images[affine_letter(n)] = list(make_word(B, n, [(affine_letter(n), 1)]).letters)
        return images
    if name == "F":
        images = _identity_on_sigmas(n - 1)
        images[affine_letter(n - 1)] = [_s(n), (affine_letter(n), 1), _s(n, -1)]
        return images
    if name == "alpha":
        images = _identity_on_sigmas(n)
        images[T] = []
        return images
    if name == "beta":
        images = _identity_on_sigmas(n)
        images[affine_letter(n)] = beta_image(n)
        return images
    if name == "f_semidirect":
        # t = phi_n s_{n-1}^-1..s_1^-1 and phi_n -> D_n^-1
        images = _identity_on_sigmas(n - 1)
        d_inverse = [(g, -sign) for g, sign in reversed(dominating_letters(n))]
        images[T] = d_inverse + sigma_run(range(n - 1, 0, -1), -1)
        return images
    if name == "underbar_i":
        images = {GenLetter.sigma(i): [_s(i + 1)] for i in range(1, n)}
        images[T] = [_s(1), _s(1)]
        return images
    if name == "dynkin":
        cycle = [GenLetter.sigma(i) for i in range(1, n + 1)] + [affine_letter(n)]
        size = len(cycle)
        return {g: [(cycle[(j + mid.exponent) % size], 1)] for j, g in enumerate(cycle)}
    raise DomainMismatchError(f"Unknown morphism {name!r}")


def _substitute(w: BraidWord, images: Dict[GenLetter, List[Letter]],
                kind: GroupKind, rank: int) -> BraidWord:
    out: List[Letter] = []
    for gen, sign in w.letters:
        piece = images[gen]
        if sign > 0:
            out.extend(piece)
        else:
            out.extend((g, -s) for g, s in reversed(piece))
    return make_word(kind, rank, out)


def apply_morphism(mid: MorphismId, w: BraidWord) -> BraidWord:
    """Applies the arrow ``mid`` to a word of its domain group."""
    if mid.name not in SIGNATURES:
        raise DomainMismatchError(
            f"Unknown morphism {mid.name!r}; expected one of {', '.join(MORPHISM_NAMES)}"
        )
    dom_kind, dom_rank = domain_of(mid)
    if w.kind is AT and w.parabolic:
        w = make_word(AT, w.rank, w.letters)
    if (w.kind, w.rank) != (dom_kind, dom_rank):
        raise DomainMismatchError(
            f"{mid} expects a word of kind {dom_kind.value} and rank {dom_rank}, "
            f"got kind {w.kind.value} and rank {w.rank}"
        )
    if mid.name == "xbar":
        return apply_morphism(MorphismId("underbar_i", mid.n),
                              apply_morphism(MorphismId("iota", mid.n - 1), w))
    cod_kind, cod_rank = codomain_of(mid)
    return _substitute(w, _images(mid), cod_kind, cod_rank)


def dynkin_shift(w: BraidWord, e: int) -> BraidWord:
    """Cycles s1 -> s2 -> ... -> sn -> a_{n+1} -> s1, ``e`` steps."""
    return apply_morphism(MorphismId("dynkin", w.rank, e), w)


def dominating_element(n: int) -> BraidWord:
    if n < 1:
        raise DomainMismatchError(f"The dominating element needs n >= 1, got {n}")
    return make_word(AT, n, dominating_letters(n))


def quotient_b(n: int) -> Tuple[BraidWord, BraidWord]:
    """Both spellings of the image of a_{n+1} under the surjection onto B(A_n)."""
    first = make_word(A, n, beta_image(n))
    second = make_word(A, n, sigma_run(range(1, n + 1)) + sigma_run(range(n - 1, 0, -1), -1))
    return first, second


def quotient_element(n: int) -> Tuple[BraidWord, BraidWord]:
    """Both spellings of e = a_{n+1}^-1 b, the normal generator of the kernel of beta."""
    a_inverse = [(affine_letter(n), -1)]
    first, second = quotient_b(n)
    return (make_word(AT, n, a_inverse + list(first.letters)),
            make_word(AT, n, a_inverse + list(second.letters)))


def quotient_relations(n: int) -> List[Relation]:
    """The relations b satisfies in B(A_n), mirroring those of a_{n+1}."""
    b = list(quotient_b(n)[0].letters)

    def word(letters):
        return make_word(A, n, letters)

    pairs = []
    for i in range(2, n):
        pairs.append(Relation("b-commutation", word([_s(i)] + b), word(b + [_s(i)])))
    if n >= 2:
        pairs.append(Relation("b-braid-first", word([_s(1)] + b + [_s(1)]), word(b + [_s(1)] + b)))
        pairs.append(Relation("b-braid-last", word([_s(n)] + b + [_s(n)]), word(b + [_s(n)] + b)))
    return pairs


# --- Commuting diagrams ---

def _m(name: str, n: int, w: BraidWord) -> BraidWord:
    return apply_morphism(MorphismId(name, n), w)


def _restriction_of_y(n: int, w: BraidWord) -> Tuple[BraidWord, BraidWord]:
    from src.decomposition import phi_decompose  # decomposition builds on this module

    lifted = phi_decompose(_m("y", n, _m("iota", n - 1, w)))
    if lifted.k != 0:
        raise DomainMismatchError("Image of an affine braid left the affine subgroup")
    return lifted.lam, _m("F", n, w)


# name -> (source kind, source rank offset, smallest n, both composites)
DIAGRAMS: Dict[str, Tuple[GroupKind, int, int, Callable[[int, BraidWord], Tuple[BraidWord, BraidWord]]]] = {
    "iota∘F=y∘iota": (AT, -1, 2, lambda n, w: (_m("iota", n, _m("F", n, w)), _m("y", n, _m("iota", n - 1, w)))),
    "x∘alpha=alpha∘y": (B, -1, 1, lambda n, w: (_m("x", n, _m("alpha", n - 1, w)), _m("alpha", n, _m("y", n, w)))),
    "alpha∘iota=beta": (AT, 0, 1, lambda n, w: (_m("alpha", n, _m("iota", n, w)), _m("beta", n, w))),
    "x∘beta=beta∘F": (AT, -1, 2, lambda n, w: (_m("x", n, _m("beta", n - 1, w)), _m("beta", n, _m("F", n, w)))),
    "y|affine=F": (AT, -1, 2, _restriction_of_y),
    "y∘z=z∘x": (A, -1, 1, lambda n, w: (_m("y", n, _m("z", n - 1, w)), _m("z", n, _m("x", n, w)))),
    "F∘I=I∘x": (A, -1, 2, lambda n, w: (_m("F", n, _m("i_inc", n - 1, w)), _m("i_inc", n, _m("x", n, w)))),
    "f∘iota=F": (AT, -1, 2, lambda n, w: (_m("f_semidirect", n, _m("iota", n - 1, w)), _m("F", n, w))),
    "beta∘I=id": (A, 0, 1, lambda n, w: (_m("beta", n, _m("i_inc", n, w)), w)),
    "alpha∘z=id": (A, 0, 0, lambda n, w: (_m("alpha", n, _m("z", n, w)), w)),
}

DIAGRAM_NAMES = tuple(DIAGRAMS)


def diagram_source(name: str, n: int) -> Tuple[GroupKind, int]:
    if name not in DIAGRAMS:
        raise DomainMismatchError(f"Unknown diagram {name!r}; expected one of {', '.join(DIAGRAM_NAMES)}")
    kind, offset, smallest, _ = DIAGRAMS[name]
    if n < smallest:
        raise DomainMismatchError(f"Diagram {name!r} needs n >= {smallest}, got {n}")
    return kind, n + offset


def diagram_sides(name: str, n: int, w: BraidWord) -> Tuple[BraidWord, BraidWord]:
    kind, rank = diagram_source(name, n)
    if w.kind is AT and w.parabolic:
        w = make_word(AT, w.rank, w.letters)
    if (w.kind, w.rank) != (kind, rank):
        raise DomainMismatchError(
            f"Diagram {name!r} at n={n} needs a word of kind {kind.value} and rank {rank}"
        )
    return DIAGRAMS[name][3](n, w)


def check_diagram(name: str, n: int, w: BraidWord) -> bool:
    """True iff both composites of the named square agree on ``w``."""
    from src.equality import words_equal  # the oracle embeds through this module

    lhs, rhs = diagram_sides(name, n, w)
    result = words_equal(lhs, rhs)
    logger.debug("Diagram %s at n=%d on %s: %s", name, n, w, result)
    return result


def diagram_generators(name: str, n: int) -> List[BraidWord]:
    """Single-letter words of the diagram's source group."""
    kind, rank = diagram_source(name, n)
    gens = [GenLetter.sigma(i) for i in range(1, rank + 1)]
    if kind is B:
        gens.append(T)
    elif kind is AT:
        gens.append(affine_letter(rank))
    return [make_word(kind, rank, [(g, 1)]) for g in gens]
