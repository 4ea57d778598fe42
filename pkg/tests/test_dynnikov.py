"""The lamination-coordinate equality oracle and its agreement with the
free-group decision procedure."""

import random

import pytest

from braidkit import dynnikov, words
from braidkit.errors import StrandCountMismatchError
from braidkit.words import BraidWord, delta_squared


def rand_word(rng, n, length):
    return BraidWord(
        n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
    )


def test_image_of_identity_is_reference_vector():
    b = BraidWord(4)
    assert dynnikov.lamination_image(b) == (0, 1, 0, 1, 0, 1, 0, 1)


def test_letter_then_inverse_restores_coordinates():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(2, 6)
        k = rng.choice((1, -1)) * rng.randint(1, n - 1)
        pre = rand_word(rng, n, rng.randint(0, 10))
        roundtrip = BraidWord(n, pre.letters + (k, -k))
        assert dynnikov.lamination_image(roundtrip) == dynnikov.lamination_image(pre)


def test_braid_relations_hold_in_coordinates():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(3, 6)
        pre = rand_word(rng, n, rng.randint(0, 8))
        i = rng.randint(1, n - 2)
        lhs = BraidWord(n, pre.letters + (i, i + 1, i))
        rhs = BraidWord(n, pre.letters + (i + 1, i, i + 1))
        assert dynnikov.lamination_image(lhs) == dynnikov.lamination_image(rhs)
        if n >= 4:
            lhs = BraidWord(n, pre.letters + (1, n - 1))
            rhs = BraidWord(n, pre.letters + (n - 1, 1))
            assert dynnikov.lamination_image(lhs) == dynnikov.lamination_image(rhs)


def test_full_twist_detected():
    # the central element acts trivially on unbased curves of the bare disc;
    # the padded coordinate system must still separate it from the identity
    for n in range(2, 7):
        assert not dynnikov.are_equal(delta_squared(n), BraidWord(n))


def test_strand_mismatch_rejected():
    with pytest.raises(StrandCountMismatchError):
        dynnikov.are_equal(BraidWord(3), BraidWord(4))


def test_agreement_with_free_group_decision():
    # the acceptance-scale cross-oracle run lives in test_acceptance; this is
    # a faster smoke version with the same construction
    rng = random.Random(3)
    for _ in range(400):
        n = rng.randint(2, 6)
        u = rand_word(rng, n, rng.randint(0, 16))
        if rng.random() < 0.5:
            v = u
            for _ in range(rng.randint(1, 3)):
                k = rng.randint(1, n - 1)
                s = rng.choice((1, -1))
                pos = rng.randint(0, len(v.letters))
                v = BraidWord(n, v.letters[:pos] + (s * k, -s * k) + v.letters[pos:])
        else:
            v = rand_word(rng, n, rng.randint(0, 16))
        assert words.are_equal(u, v) == dynnikov.are_equal(u, v)
