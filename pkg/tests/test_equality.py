import pytest

from src.braid_words import GroupKind, Presentation, defining_relations, parse, render
from src.equality import (
    Permutation,
    artin_action,
    embed_to_A,
    is_identity,
    underlying_permutation,
    words_equal,
)
from src.sampling import insert_relator, make_rng, mutate, random_word
from src.utils import BudgetExceededError, DomainMismatchError


def test_braid_relation_holds():
    assert words_equal(parse("A:n=2: s1 s2 s1"), parse("A:n=2: s2 s1 s2"))


def test_distinct_permutations_are_unequal():
    assert not words_equal(parse("A:n=2: s1"), parse("A:n=2: s2"))


def test_pure_braid_is_not_the_identity():
    # s1^2 has trivial permutation but acts nontrivially on the free group
    w = parse("A:n=1: s1^2")
    assert underlying_permutation(w).is_identity()
    assert not is_identity(w)


def test_free_cancellation_gives_identity():
    assert is_identity(parse("A:n=3: s1 s3 s3^-1 s1^-1"))
    assert is_identity(parse("B:n=2: t s1 s1^-1 t^-1"))


def test_permutation_of_a_product():
    perm = underlying_permutation(parse("A:n=2: s1 s2"))
    assert perm.images == (3, 1, 2)
    assert perm.cycle_count() == 1
    assert str(perm) == "(1 3 2)"
    assert str(Permutation.identity(3)) == "()"


def test_permutation_validation():
    with pytest.raises(DomainMismatchError):
        Permutation(3, (1, 1, 2))


def test_artin_action_of_a_generator():
    e = artin_action(parse("A:n=1: s1"))
    assert [image.signed for image in e.images] == [(1, 2, -1), (1,)]
    assert artin_action(parse("A:n=2:")).is_identity()


def test_artin_action_needs_kind_a():
    with pytest.raises(DomainMismatchError):
        artin_action(parse("B:n=1: t"))


def test_artin_budget_is_enforced():
    w = parse("A:n=2: s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1")
    with pytest.raises(BudgetExceededError):
        artin_action(w, max_len=5)


def test_affine_generator_embedding():
    assert render(embed_to_A(parse("AT:n=2: a3"))) == "A:n=3: s1^2 s2 s3 s2^-1 s1^-2"


def test_b_embedding_doubles_t():
    assert render(embed_to_A(parse("B:n=1: t s1"))) == "A:n=2: s1^2 s2"


def test_words_from_different_groups_cannot_be_compared():
    with pytest.raises(DomainMismatchError):
        words_equal(parse("A:n=2: s1"), parse("A:n=3: s1"))


@pytest.mark.parametrize("kind,n,presentation", [
    (GroupKind.A, 2, Presentation.FORMAL),
    (GroupKind.A, 4, Presentation.FORMAL),
    (GroupKind.B, 2, Presentation.FORMAL),
    (GroupKind.B, 3, Presentation.FORMAL),
    (GroupKind.B, 3, Presentation.PHI),
    (GroupKind.AFFINE, 2, Presentation.FORMAL),
    (GroupKind.AFFINE, 3, Presentation.FORMAL),
    (GroupKind.AFFINE, 3, Presentation.PARABOLIC),
    (GroupKind.AFFINE, 4, Presentation.PARABOLIC),
])
def test_every_defining_relation_holds(kind, n, presentation):
    for rel in defining_relations(kind, n, presentation).pairs:
        assert words_equal(rel.lhs, rel.rhs), rel.label


@pytest.mark.parametrize("kind,n", [(GroupKind.A, 3), (GroupKind.B, 2), (GroupKind.AFFINE, 3)])
def test_single_letter_mutations_break_relations(kind, n):
    rng = make_rng(7)
    for rel in defining_relations(kind, n).pairs:
        mutated = mutate(rng, rel.lhs)
        # one perturbed letter changes either the t-exponent, the permutation or the free action
        assert not words_equal(mutated, rel.rhs), (rel.label, render(mutated))


def test_inserted_relators_keep_the_element():
    rng = make_rng(11)
    table = defining_relations(GroupKind.A, 3).pairs
    for k in range(10):
        w = random_word(rng, GroupKind.A, 3, 6)
        rel = table[k % len(table)]
        assert words_equal(w, insert_relator(rng, w, rel.lhs, rel.rhs))


def test_affine_relations_hold_after_random_context():
    rng = make_rng(3)
    for rel in defining_relations(GroupKind.AFFINE, 2).pairs:
        u = random_word(rng, GroupKind.AFFINE, 2, 4)
        assert words_equal(u * rel.lhs * ~u, u * rel.rhs * ~u)
