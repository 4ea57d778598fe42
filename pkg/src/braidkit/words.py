"""Braid words, the free-group action, and exact equality decisions.

The braid group on ``n`` strands is handled entirely through words in the
standard generators ``s1 .. s(n-1)``.  No normal form is kept: words are
freely reduced on construction, and equality is decided through the action
on the free group of rank ``n``, which is faithful.  A structurally
unrelated second decision procedure lives in :mod:`braidkit.dynnikov`.

Conventions, fixed once for the whole package:

* ``sk`` is the positive (counterclockwise) half-twist exchanging the
  marked points ``k`` and ``k+1``.
* ``sk`` acts on the free generators by ``x_k -> x_k x_{k+1} x_k^-1`` and
  ``x_{k+1} -> x_k``, fixing the rest.
* Products compose left to right: in ``u * v``, ``u`` acts first.

Word text grammar: whitespace-separated tokens ``s<k>`` or ``s<k>^-1``,
e.g. ``"s1 s2^-1 s1"``; the empty string is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from braidkit import kernels
from braidkit.errors import LetterIndexError, StrandCountMismatchError

#: Default cap on intermediate free-word length during the braid action.
#: Image length can grow exponentially in braid length, so every action
#: accepts a budget and fails explicitly instead of thrashing.
DEFAULT_MAX_LETTERS = 1 << 20

_TOKEN = re.compile(r"s(\d+)(\^-1)?$")


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1, .., n}``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, k: int) -> Permutation:
        """The transposition ``(k, k+1)`` in S_n."""
        images = list(range(1, n + 1))
        images[k - 1], images[k] = images[k], images[k - 1]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Left-to-right composition: apply ``self`` first, then ``other``."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(j == i + 1 for i, j in enumerate(self.images))

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths in decreasing order, fixed points included."""
        seen = [False] * self.degree
        lengths = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            length = 0
            i = start
            while not seen[i - 1]:
                seen[i - 1] = True
                i = self.images[i - 1]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word over free generators ``x_1 .. x_rank``."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise LetterIndexError(f"free letter {x} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", kernels.free_reduce(self.letters))

    @classmethod
    def generator(cls, rank: int, j: int) -> FreeWord:
        return cls(rank, (j,))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, tuple(-x for x in reversed(self.letters)))


@dataclass(frozen=True)
class BraidWord:
    """A freely reduced word in the generators of the braid group B_n.

    ``letters`` holds signed 1-based generator indices: ``k`` for ``sk``,
    ``-k`` for its inverse.  The empty word is the identity braid.
    """

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strand_count}")
        for k in self.letters:
            if k == 0 or abs(k) > self.strand_count - 1:
                raise LetterIndexError(
                    f"letter {k} out of range for {self.strand_count} strands"
                )
        object.__setattr__(self, "letters", kernels.free_reduce(self.letters))

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n)

    @classmethod
    def generator(cls, n: int, k: int, power: int = 1) -> BraidWord:
        sign = 1 if power >= 0 else -1
        return cls(n, (sign * k,) * abs(power))

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, exponent: int) -> BraidWord:
        base = self if exponent >= 0 else self.inverse()
        return BraidWord(self.strand_count, base.letters * abs(exponent))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strand_count, tuple(-k for k in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_braid_word(self)


def parse_braid_word(text: str, n: int) -> BraidWord:
    """Parse the token grammar ``s<k>``/``s<k>^-1`` into a braid word."""
    letters = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"bad braid token {token!r}")
        k = int(m.group(1))
        letters.append(-k if m.group(2) else k)
    return BraidWord(n, tuple(letters))


def format_braid_word(b: BraidWord) -> str:
    return " ".join(f"s{k}" if k > 0 else f"s{-k}^-1" for k in b.letters)


def _check_same_strands(u: BraidWord, v: BraidWord) -> None:
    if u.strand_count != v.strand_count:
        raise StrandCountMismatchError(
            f"{u.strand_count} strands vs {v.strand_count} strands"
        )


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """The product ``u v`` (``u`` first), freely reduced."""
    _check_same_strands(u, v)
    return BraidWord(u.strand_count, u.letters + v.letters)


def artin_action(
    b: BraidWord, w: FreeWord, max_letters: int = DEFAULT_MAX_LETTERS
) -> FreeWord:
    """Image of the free word ``w`` under the disc automorphism of ``b``.

    Letters of ``b`` act left to right.  Raises BudgetExceededError if an
    intermediate image exceeds ``max_letters``.
    """
    if w.rank != b.strand_count:
        raise StrandCountMismatchError(
            f"free rank {w.rank} vs {b.strand_count} strands"
        )
    image = kernels.artin_apply(b.letters, w.letters, b.strand_count, max_letters)
    return FreeWord(b.strand_count, image)


def braid_certificate(
    b: BraidWord, max_letters: int = DEFAULT_MAX_LETTERS
) -> tuple[tuple[int, ...], ...]:
    """Images of all free generators: a complete, hashable braid invariant."""
    return kernels.artin_images(b.letters, b.strand_count, max_letters)


def are_equal(u: BraidWord, v: BraidWord, max_letters: int = DEFAULT_MAX_LETTERS) -> bool:
    """Whether ``u`` and ``v`` represent the same element of B_n.

    Decided through the free-group action (faithful).  Cheap homomorphic
    invariants are compared first to short-circuit most unequal pairs.
    """
    _check_same_strands(u, v)
    if u.letters == v.letters:
        return True
    if exponent_sum(u) != exponent_sum(v):
        return False
    if permutation_of(u) != permutation_of(v):
        return False
    return braid_certificate(u, max_letters) == braid_certificate(v, max_letters)


def permutation_of(b: BraidWord) -> Permutation:
    """Image under the natural homomorphism B_n -> S_n, ``sk -> (k, k+1)``.

    Letters compose left to right, matching the word composition convention.
    """
    images = list(range(1, b.strand_count + 1))
    position = list(range(b.strand_count))  # position[v-1] = index holding value v
    for k in b.letters:
        j = abs(k)
        p, q = position[j - 1], position[j]
        images[p], images[q] = images[q], images[p]
        position[j - 1], position[j] = q, p
    return Permutation(tuple(images))


def exponent_sum(b: BraidWord) -> int:
    """Sum of letter signs: the abelianization homomorphism B_n -> Z."""
    return sum(1 if k > 0 else -1 for k in b.letters)


def is_pure(b: BraidWord) -> bool:
    """Whether ``b`` lies in the kernel of B_n -> S_n."""
    return permutation_of(b).is_identity()


def delta_squared(n: int) -> BraidWord:
    """The central full twist ``(s1 s2 .. s(n-1))^n`` generating Center(B_n)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return BraidWord(n, tuple(range(1, n)) * n)


def is_central(b: BraidWord, max_letters: int = DEFAULT_MAX_LETTERS) -> bool:
    """Whether ``b`` commutes with every generator of B_n."""
    for k in range(1, b.strand_count):
        s = BraidWord.generator(b.strand_count, k)
        if not are_equal(compose(b, s), compose(s, b), max_letters):
            return False
    return True
