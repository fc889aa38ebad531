import pytest

from src.free_group import (
    FreeEndomorphism,
    FreeWord,
    endo_apply,
    endo_compose,
    free_invert,
    free_multiply,
    free_reduce,
)
from src.utils import BudgetExceededError, DomainMismatchError


def test_reduction_cancels_adjacent_inverses():
    w = free_reduce([(1, 1), (2, 1), (2, -1), (3, -1)], rank=3)
    assert w.letters == ((1, 1), (3, -1))
    assert str(w) == "x1 x3^-1"


def test_reduction_accepts_signed_indices():
    assert free_reduce([1, -1, 2, 2], rank=2).signed == (2, 2)
    assert free_reduce([1, 2, -2, -1], rank=2).is_identity()


def test_identity_prints_as_one():
    assert str(FreeWord.identity(4)) == "1"


def test_multiply_cancels_across_the_seam():
    a = FreeWord(3, (1, 2, 3))
    b = FreeWord(3, (-3, -2, 1))
    assert free_multiply(a, b).signed == (1, 1)
    assert (a * b).signed == (1, 1)


def test_inverse_is_two_sided():
    w = FreeWord(3, (1, -2, 3, 3))
    assert (w * free_invert(w)).is_identity()
    assert (~w * w).is_identity()


def test_powers_and_exponent_sum():
    w = FreeWord(2, (1, -2))
    assert (w ** 3).signed == (1, -2, 1, -2, 1, -2)
    assert (w ** -1).signed == (2, -1)
    assert (w ** 0).is_identity()
    assert FreeWord(2, (1, 1, -2)).exponent_sum == 1


def test_rank_mismatch_is_rejected():
    with pytest.raises(DomainMismatchError):
        FreeWord(2, (1,)) * FreeWord(3, (1,))


@pytest.mark.parametrize("signed", [(0,), (4,), (-4,)])
def test_out_of_range_generators_are_rejected(signed):
    with pytest.raises(DomainMismatchError):
        FreeWord(3, signed)


def test_bad_letter_sign_is_rejected():
    with pytest.raises(DomainMismatchError):
        free_reduce([(1, 2)], rank=2)


def test_endomorphism_substitutes_and_reduces():
    # x1 -> x1 x2 x1^-1, x2 -> x1 is the action of s1
    e = FreeEndomorphism.from_signed(2, [(1, 2, -1), (1,)])
    assert endo_apply(e, FreeWord(2, (1,))).signed == (1, 2, -1)
    assert endo_apply(e, FreeWord(2, (2, -1))).signed == (1, 1, -2, -1)
    assert e(FreeWord(2, (-2,))).signed == (-1,)


def test_composition_applies_right_factor_first():
    swap = FreeEndomorphism.from_signed(2, [(2,), (1,)])
    square_first = FreeEndomorphism.from_signed(2, [(1, 1), (2,)])
    composed = endo_compose(swap, square_first)
    assert composed.images[0].signed == (2, 2)
    assert composed.images[1].signed == (1,)
    assert endo_compose(square_first, swap).images[1].signed == (1, 1)


def test_identity_endomorphism():
    e = FreeEndomorphism.identity(3)
    assert e.is_identity()
    w = FreeWord(3, (1, -3, 2))
    assert e(w) == w
    assert e.total_length() == 3


def test_endomorphism_needs_one_image_per_generator():
    with pytest.raises(DomainMismatchError):
        FreeEndomorphism.from_signed(3, [(1,), (2,)])


def test_image_length_budget():
    doubling = FreeEndomorphism.from_signed(1, [(1, 1)])
    w = FreeWord(1, (1,))
    for _ in range(5):
        w = doubling(w)
    assert len(w) == 32
    with pytest.raises(BudgetExceededError):
        doubling(w, max_len=40)
