"""Pure-Python word-rewriting kernels.

These are the hot inner loops of the whole toolkit: applying a braid word to
a free-group word (the disc-automorphism action) and pushing a braid word
through integer lamination coordinates.  A compiled twin of this module may
be selected at import time by :mod:`braidkit.kernels`; both backends must
produce bit-identical results.

Conventions (fixed once, here):

* A braid letter is a nonzero signed integer; ``+k`` is the positive
  half-twist exchanging strands ``k`` and ``k+1`` (1-based), ``-k`` its
  inverse.
* A free letter is a nonzero signed integer over generators ``x_1..x_n``.
* The positive letter ``k`` maps ``x_k -> x_k x_{k+1} x_k^-1`` and
  ``x_{k+1} -> x_k``, fixing all other generators; ``-k`` applies the
  inverse substitution.  A braid word acts letter by letter, left to right.
"""

from __future__ import annotations

from braidkit.errors import BudgetExceededError


def free_reduce(letters) -> tuple[int, ...]:
    """Freely reduce a sequence of signed free-group letters."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _apply_letter(k: int, word: list[int], max_letters: int) -> list[int]:
    """Apply one braid letter to a reduced free word, keeping it reduced."""
    out: list[int] = []
    if k > 0:
        lo, hi = k, k + 1
        for x in word:
            j = x if x > 0 else -x
            if j == lo:
                img = (lo, hi, -lo) if x > 0 else (lo, -hi, -lo)
            elif j == hi:
                img = (lo,) if x > 0 else (-lo,)
            else:
                img = (x,)
            for y in img:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
    else:
        lo, hi = -k, -k + 1
        for x in word:
            j = x if x > 0 else -x
            if j == lo:
                img = (hi,) if x > 0 else (-hi,)
            elif j == hi:
                img = (-hi, lo, hi) if x > 0 else (-hi, -lo, hi)
            else:
                img = (x,)
            for y in img:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
    if len(out) > max_letters:
        raise BudgetExceededError(
            f"free word grew to {len(out)} letters (budget {max_letters})"
        )
    return out


def artin_apply(braid, free, n: int, max_letters: int) -> tuple[int, ...]:
    """Image of the free word ``free`` under the braid word ``braid``.

    ``n`` is the strand count; indices are assumed validated by the caller.
    Raises BudgetExceededError if any intermediate word exceeds
    ``max_letters``.
    """
    word = list(free_reduce(free))
    if len(word) > max_letters:
        raise BudgetExceededError(
            f"free word has {len(word)} letters (budget {max_letters})"
        )
    for k in braid:
        word = _apply_letter(k, word, max_letters)
    return tuple(word)


def artin_images(braid, n: int, max_letters: int) -> tuple[tuple[int, ...], ...]:
    """Images of all free generators ``x_1..x_n`` under ``braid``.

    This tuple is a complete invariant of the braid (the action on the free
    group is faithful), so it doubles as the canonical state used for
    equality decisions and orbit deduplication.
    """
    return tuple(artin_apply(braid, (j,), n, max_letters) for j in range(1, n + 1))


def dynnikov_apply(braid, n: int) -> tuple[int, ...]:
    """Push the reference lamination coordinates through a braid word.

    Coordinates live on a disc with ``n + 2`` marked points so that every
    generator update is an interior one; the braid's letters act on
    coordinate pairs ``(k, k+1)`` for letter index ``k``.  The return value
    is the interleaved tuple ``(a_1, b_1, ..., a_n, b_n)`` of the image of
    the reference vector ``(0, 1, 0, 1, ...)``.  Two braid words on the same
    strand count are equal iff their images agree.
    """
    a = [0] * n
    b = [1] * n
    for k in braid:
        i = (k if k > 0 else -k) - 1  # 0-based left pair index
        x, y, u, v = a[i], b[i], a[i + 1], b[i + 1]
        if k > 0:
            c = x - u + max(v, 0) - min(y, 0)
            a[i] = x + max(y, 0) + max(max(v, 0) - c, 0)
            b[i] = v - max(c, 0)
            a[i + 1] = u + min(v, 0) + min(min(y, 0) + c, 0)
            b[i + 1] = y + max(c, 0)
        else:
            d = x - u - max(v, 0) + min(y, 0)
            a[i] = x - max(y, 0) - max(max(v, 0) + d, 0)
            b[i] = v + min(d, 0)
            a[i + 1] = u - min(v, 0) - min(min(y, 0) - d, 0)
            b[i + 1] = y - min(d, 0)
    out: list[int] = []
    for x, y in zip(a, b):
        out.append(x)
        out.append(y)
    return tuple(out)
