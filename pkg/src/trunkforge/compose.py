"""Connected sum by stacking one embedding on top of another."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError, LinkRejectedError
from .invariants import report
from .morse import CAP, CUP, Event, MorseWord, as_profile

__all__ = ["stack", "stack_identities", "StackIdentities", "scale_profile"]


def _require_knot(word: MorseWord) -> None:
    if word.components != 1:
        raise LinkRejectedError(word.components)


def stack(k1: MorseWord, k2: MorseWord) -> MorseWord:
    """Place ``k2`` above ``k1`` and join the top maximum of ``k1`` to the bottom minimum of ``k2``.

    The last event of any closed word is ``n1`` and the first is ``u1``, so
    dropping both leaves two open strands at positions 1 and 2 that splice
    without renumbering.
    """
    _require_knot(k1)
    _require_knot(k2)
    assert k1.events[-1] == Event(CAP, 1) and k2.events[0] == Event(CUP, 1)
    return MorseWord(k1.events[:-1] + k2.events[1:])


@dataclass(frozen=True)
class StackIdentities:
    """Invariants of the stacked word, each checked against its closed form."""

    bridge: int
    width: int
    trunk: int

    def __iter__(self):
        return iter((self.bridge, self.width, self.trunk))


def stack_identities(k1: MorseWord, k2: MorseWord) -> StackIdentities:
    r1, r2 = report(k1), report(k2)
    r = report(stack(k1, k2))
    expected = (
        r1.bridge + r2.bridge - 1,
        r1.width + r2.width - 2,
        max(r1.trunk, r2.trunk),
    )
    got = (r.bridge, r.width, r.trunk)
    if got != expected:
        raise InconsistencyError(f"stacked (b, w, tr) = {got}, expected {expected}")
    return StackIdentities(*got)


def scale_profile(prof, n: int) -> tuple[int, ...]:
    """Multiply every level width by ``n`` (the level data of an n-strand satellite).

    For n > 1 the result is no longer a knot profile, so it comes back as a
    plain tuple.
    """
    if n < 1:
        raise ValueError(f"scale factor must be a positive integer, got {n}")
    return tuple(n * x for x in as_profile(prof).entries)
