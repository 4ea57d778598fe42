"""Independent braid equality oracle via Dynnikov lamination coordinates.

This is the toolkit's second word-problem solver, sharing no machinery with
the free-group action in :mod:`braidkit.words`: a braid word is pushed
through the integer coordinates of a reference lamination by piecewise
linear updates, and two words are equal iff the image coordinates agree.

For a braid on ``n`` strands the computation runs on a disc with ``n + 2``
marked points (one pad on each side), which keeps every generator update an
interior one and makes the image of the reference vector a complete
invariant; in particular the central full twist, which acts trivially on
unbased curves of the unpadded disc, is detected.

The update of the letter ``k`` on the touched coordinate quadruple
``(x, y, u, v)``, with ``p+ = max(p, 0)`` and ``p- = min(p, 0)``:

positive:  c = x - u + v+ - y-          negative:  d = x - u - v+ + y-
           x' = x + y+ + (v+ - c)+                 x' = x - y+ - (v+ + d)+
           y' = v - c+                             y' = v + d-
           u' = u + v- + (y- + c)-                 u' = u - v- - (y- - d)-
           v' = y + c+                             v' = y - d-

All arithmetic is exact; coordinate growth is at most Fibonacci-like in the
word length.
"""

from __future__ import annotations

from braidkit import kernels
from braidkit.errors import StrandCountMismatchError
from braidkit.words import BraidWord


def lamination_image(b: BraidWord) -> tuple[int, ...]:
    """Image coordinates of the reference lamination under ``b``.

    Returns the interleaved tuple ``(a_1, b_1, .., a_n, b_n)``; equal braids
    and only equal braids produce equal tuples.
    """
    return kernels.dynnikov_apply(b.letters, b.strand_count)


def are_equal(u: BraidWord, v: BraidWord) -> bool:
    """Decide braid equality through the lamination action alone."""
    if u.strand_count != v.strand_count:
        raise StrandCountMismatchError(
            f"{u.strand_count} strands vs {v.strand_count} strands"
        )
    return lamination_image(u) == lamination_image(v)
