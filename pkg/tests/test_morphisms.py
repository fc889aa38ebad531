import pytest

from src.braid_words import GenLetter, GroupKind, affine_letter, defining_relations, make_word, parse, render
from src.equality import is_identity, words_equal
from src.morphisms import (
    DIAGRAM_NAMES,
    MORPHISM_NAMES,
    MorphismId,
    apply_morphism,
    check_diagram,
    codomain_of,
    diagram_generators,
    diagram_source,
    domain_of,
    dominating_element,
    dynkin_shift,
    quotient_b,
    quotient_element,
    quotient_relations,
)
from src.sampling import make_rng, random_word
from src.utils import DomainMismatchError


def test_beta_image_of_the_affine_generator():
    assert render(apply_morphism(MorphismId("beta", 2), parse("AT:n=2: a3"))) == "A:n=2: s2^-1 s1 s2"


def test_alpha_forgets_t():
    assert render(apply_morphism(MorphismId("alpha", 2), parse("B:n=2: t s1 t^-1 s2"))) == "A:n=2: s1 s2"


def test_strand_doubling_map():
    out = apply_morphism(MorphismId("underbar_i", 3), parse("B:n=2: s1 t s2^-1"))
    assert render(out) == "A:n=3: s2 s1^2 s3^-1"


def test_f_carries_the_affine_generator_up():
    out = apply_morphism(MorphismId("F", 3), parse("AT:n=2: s1 a3"))
    assert render(out) == "AT:n=3: s1 s3 a4 s3^-1"


def test_signatures():
    assert domain_of(MorphismId("xbar", 3)) == (GroupKind.AFFINE, 2)
    assert codomain_of(MorphismId("xbar", 3)) == (GroupKind.A, 3)
    assert domain_of(MorphismId("f_semidirect", 3)) == (GroupKind.B, 2)
    assert set(MORPHISM_NAMES) >= {"x", "y", "z", "iota", "F", "alpha", "beta", "dynkin"}


def test_wrong_domain_is_rejected():
    with pytest.raises(DomainMismatchError):
        apply_morphism(MorphismId("beta", 2), parse("AT:n=3: a4"))
    with pytest.raises(DomainMismatchError):
        apply_morphism(MorphismId("alpha", 2), parse("A:n=2: s1"))
    with pytest.raises(DomainMismatchError):
        apply_morphism(MorphismId("nope", 2), parse("A:n=2: s1"))


def test_parabolic_words_are_accepted():
    w = parse("ATP:n=3: a3")
    assert apply_morphism(MorphismId("beta", 3), w) == apply_morphism(MorphismId("beta", 3), parse("AT:n=3: a3"))


def test_dynkin_shift_cycles_generators():
    assert render(dynkin_shift(parse("AT:n=2: s1 s2 a3"), 1)) == "AT:n=2: s2 a3 s1"
    assert render(dynkin_shift(parse("AT:n=2: s1"), -1)) == "AT:n=2: a3"
    w = parse("AT:n=3: s1 a4^-1 s3")
    assert dynkin_shift(w, 4) == w


def test_dominating_element():
    assert render(dominating_element(2)) == "AT:n=2: s2 s1 a3"
    with pytest.raises(DomainMismatchError):
        dominating_element(0)


@pytest.mark.parametrize("n", [2, 3])
def test_dominating_element_conjugates_like_the_shift(n):
    d = dominating_element(n)
    low_rank = n - 1
    gens = [GenLetter.sigma(i) for i in range(1, low_rank + 1)] + [affine_letter(low_rank)]
    for gen in gens:
        g = make_word(GroupKind.AFFINE, low_rank, [(gen, 1)])
        lhs = d * apply_morphism(MorphismId("F", n), g) * ~d
        rhs = apply_morphism(MorphismId("F", n), dynkin_shift(g, -1))
        assert words_equal(lhs, rhs), str(gen)


@pytest.mark.parametrize("name", DIAGRAM_NAMES)
@pytest.mark.parametrize("n", [2, 3])
def test_diagrams_commute_on_generators(name, n):
    for g in diagram_generators(name, n):
        assert check_diagram(name, n, g), render(g)


@pytest.mark.parametrize("name", DIAGRAM_NAMES)
def test_diagrams_commute_on_random_words(name):
    rng = make_rng(5)
    kind, rank = diagram_source(name, 3)
    for _ in range(5):
        w = random_word(rng, kind, rank, 6)
        assert check_diagram(name, 3, w), render(w)


def test_diagram_needs_its_source_group():
    with pytest.raises(DomainMismatchError):
        check_diagram("alpha∘iota=beta", 2, parse("A:n=2: s1"))
    with pytest.raises(DomainMismatchError):
        diagram_source("nope", 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quotient_spellings_agree(n):
    first, second = quotient_b(n)
    assert words_equal(first, second)
    e1, e2 = quotient_element(n)
    assert words_equal(e1, e2)
    assert is_identity(apply_morphism(MorphismId("beta", n), e1))
    assert is_identity(apply_morphism(MorphismId("beta", n), e2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quotient_relations_hold(n):
    relations = quotient_relations(n)
    assert len(relations) == n
    for rel in relations:
        assert words_equal(rel.lhs, rel.rhs), rel.label


def _morphism(name, n):
    return MorphismId(name, n, 1 if name == "dynkin" else 0)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("name", MORPHISM_NAMES)
def test_morphisms_are_homomorphisms(name, n):
    mid = _morphism(name, n)
    kind, rank = domain_of(mid)
    rng = make_rng(500 + 10 * n + MORPHISM_NAMES.index(name))
    for _ in range(4):
        x = random_word(rng, kind, rank, 4)
        y = random_word(rng, kind, rank, 4)
        product = apply_morphism(mid, x * y)
        assert words_equal(product, apply_morphism(mid, x) * apply_morphism(mid, y)), (render(x), render(y))


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("name", MORPHISM_NAMES)
def test_morphisms_preserve_defining_relations(name, n):
    mid = _morphism(name, n)
    kind, rank = domain_of(mid)
    for rel in defining_relations(kind, rank).pairs:
        assert words_equal(apply_morphism(mid, rel.lhs), apply_morphism(mid, rel.rhs)), rel.label
