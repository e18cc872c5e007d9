"""Local rewriting moves on Morse words that preserve the knot type.

Every move is a height-level isotopy of the diagram:

ZigzagCancel / ZigzagInsert
    ``u<i> n<i-1>`` or ``u<i> n<i+1>`` (a cup whose arm is capped with the
    neighbouring strand) straightens to nothing.
FarCommute
    Adjacent events on disjoint strands trade heights, with positions
    re-indexed. A cap directly below a cup at the same point can end up on
    either side of it, so that case carries a side parameter.
ReidII_Cancel / ReidII_Insert
    ``p<i> m<i>`` and ``m<i> p<i>`` cancel.
ReidIII
    ``x<i> x<i+1> x<i>`` becomes ``x<i+1> x<i> x<i+1>`` for a common sign x.
ExtremumTwist
    A crossing directly above a cup on the cup's own two strands (or directly
    below a cap on its strands) is a first Reidemeister kink and can be
    added or removed.
CrossingSlide
    A crossing next to a cup or cap slides around the extremum to the other
    side, changing sign: ``p<i> n<i+1>`` = ``m<i+1> n<i>`` and
    ``u<i+1> p<i>`` = ``u<i> m<i+1>``.

The set is not claimed to generate all isotopies. Move indices are 0-based
positions in the event tuple.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from .errors import InapplicableMoveError
from .morse import CAP, CUP, NEG, POS, Event, EventKind, MorseWord, strand_counts

__all__ = [
    "MoveKind",
    "Move",
    "enumerate_moves",
    "apply_move",
    "replay",
    "inverse_move",
    "canonical_form",
    "perturb",
    "INSERT_KINDS",
    "format_trace",
    "parse_trace",
]


class MoveKind(str, Enum):
    ZIGZAG_CANCEL = "ZigzagCancel"
    ZIGZAG_INSERT = "ZigzagInsert"
    FAR_COMMUTE = "FarCommute"
    REID2_CANCEL = "ReidII_Cancel"
    REID2_INSERT = "ReidII_Insert"
    REID3 = "ReidIII"
    EXTREMUM_TWIST = "ExtremumTwist"
    CROSSING_SLIDE = "CrossingSlide"


_KIND_RANK = {k: r for r, k in enumerate(MoveKind)}

# Moves that only ever lengthen the word. ExtremumTwist insertions are
# included through their "add" parameter.
INSERT_KINDS = frozenset({MoveKind.ZIGZAG_INSERT, MoveKind.REID2_INSERT})


@dataclass(frozen=True, order=False)
class Move:
    kind: MoveKind
    index: int
    params: tuple = ()

    def sort_key(self):
        return (self.index, _KIND_RANK[self.kind], self.params)

    def __str__(self) -> str:
        return " ".join([self.kind.value, str(self.index), *map(str, self.params)])

    @classmethod
    def parse(cls, text: str) -> Move:
        parts = text.split()
        if len(parts) < 2:
            raise ValueError(f"malformed move {text!r}")
        kind = MoveKind(parts[0])
        params = tuple(int(p) if p.lstrip("-").isdigit() else p for p in parts[2:])
        return cls(kind, int(parts[1]), params)

    @property
    def is_insert(self) -> bool:
        return self.kind in INSERT_KINDS or (
            self.kind is MoveKind.EXTREMUM_TWIST and self.params[:1] == ("add",)
        )


def format_trace(moves: Iterable[Move]) -> str:
    return "".join(f"{m}\n" for m in moves)


def parse_trace(text: str) -> list[Move]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(Move.parse(line))
    return out


def _flip(kind: EventKind) -> EventKind:
    return NEG if kind is POS else POS


# Interval model used by FarCommute: an event replaces ``below`` strands
# starting at 0-based offset ``lo`` with ``above`` strands at the same offset.
_BELOW = {CUP: 0, CAP: 2, POS: 2, NEG: 2}
_ABOVE = {CUP: 2, CAP: 0, POS: 2, NEG: 2}


def _commute(a: Event, b: Event) -> list[tuple[str | None, Event, Event]]:
    """Ways to move ``b`` below ``a``: list of (side, new lower, new upper)."""
    lo_a, lo_b = a.position - 1, b.position - 1
    left = lo_b + _BELOW[b.kind] <= lo_a
    right = lo_b >= lo_a + _ABOVE[a.kind]
    out = []
    if left:
        na = Event(a.kind, lo_a - _BELOW[b.kind] + _ABOVE[b.kind] + 1)
        out.append(("L", Event(b.kind, lo_b + 1), na))
    if right:
        nb = Event(b.kind, lo_b - _ABOVE[a.kind] + _BELOW[a.kind] + 1)
        out.append(("R", nb, Event(a.kind, lo_a + 1)))
    if len(out) == 1:
        out = [(None, out[0][1], out[0][2])]
    return out


def _is_zigzag(a: Event, b: Event) -> bool:
    return a.kind is CUP and b.kind is CAP and abs(a.position - b.position) == 1


def _slide(a: Event, b: Event) -> tuple[Event, Event] | None:
    i = a.position
    if a.kind.is_crossing and b.kind is CAP:
        if b.position == i + 1:
            return Event(_flip(a.kind), i + 1), Event(CAP, i)
        if b.position == i - 1:
            return Event(_flip(a.kind), i - 1), Event(CAP, i)
    if a.kind is CUP and b.kind.is_crossing:
        j = b.position
        if j == i - 1:
            return Event(CUP, i - 1), Event(_flip(b.kind), i)
        if j == i + 1:
            return Event(CUP, i + 1), Event(_flip(b.kind), i)
    return None


def _twist_removable(events: Sequence[Event], t: int) -> bool:
    e = events[t]
    if not e.kind.is_crossing:
        return False
    below = events[t - 1] if t > 0 else None
    above = events[t + 1] if t + 1 < len(events) else None
    return (below is not None and below.kind is CUP and below.position == e.position) or (
        above is not None and above.kind is CAP and above.position == e.position
    )


def _enumerate(events: Sequence[Event], kinds=None, include_inserts=True) -> list[Move]:
    want = set(MoveKind) if kinds is None else set(kinds)
    if not include_inserts:
        want -= INSERT_KINDS
    twist_add = include_inserts
    n = len(events)
    moves: list[Move] = []
    add = moves.append

    for t in range(n - 1):
        a, b = events[t], events[t + 1]
        if MoveKind.ZIGZAG_CANCEL in want and _is_zigzag(a, b):
            add(Move(MoveKind.ZIGZAG_CANCEL, t))
        if MoveKind.FAR_COMMUTE in want:
            for side, _, _ in _commute(a, b):
                add(Move(MoveKind.FAR_COMMUTE, t, () if side is None else (side,)))
        if (
            MoveKind.REID2_CANCEL in want
            and a.kind.is_crossing
            and b.kind.is_crossing
            and a.position == b.position
            and a.kind is not b.kind
        ):
            add(Move(MoveKind.REID2_CANCEL, t))
        if MoveKind.CROSSING_SLIDE in want and _slide(a, b) is not None:
            add(Move(MoveKind.CROSSING_SLIDE, t))
        if MoveKind.REID3 in want and t + 2 < n:
            c = events[t + 2]
            if (
                a.kind.is_crossing
                and a.kind is b.kind is c.kind
                and a.position == c.position
                and abs(a.position - b.position) == 1
            ):
                add(Move(MoveKind.REID3, t))

    if MoveKind.EXTREMUM_TWIST in want:
        for t, e in enumerate(events):
            if _twist_removable(events, t):
                add(Move(MoveKind.EXTREMUM_TWIST, t, ("remove",)))
            if twist_add and e.kind.is_extremum:
                for sign in ("m", "p"):
                    add(Move(MoveKind.EXTREMUM_TWIST, t, ("add", sign)))

    if want & INSERT_KINDS:
        counts = strand_counts(events)
        for t in range(1, n):
            c = counts[t - 1]
            if MoveKind.ZIGZAG_INSERT in want:
                for j in range(1, c + 1):
                    add(Move(MoveKind.ZIGZAG_INSERT, t, (j, "L")))
                    add(Move(MoveKind.ZIGZAG_INSERT, t, (j, "R")))
            if MoveKind.REID2_INSERT in want:
                for j in range(1, c):
                    add(Move(MoveKind.REID2_INSERT, t, (j, "mp")))
                    add(Move(MoveKind.REID2_INSERT, t, (j, "pm")))

    moves.sort(key=Move.sort_key)
    return moves


def enumerate_moves(word: MorseWord, kinds=None, include_inserts: bool = True) -> list[Move]:
    """All applicable moves, ordered by (event index, kind, parameters).

    Insert moves are bounded: zigzags of one height next to any existing
    strand, Reidemeister II pairs on any adjacent strand pair, and one kink
    of either sign at each extremum.
    """
    return _enumerate(word.events, kinds, include_inserts)


def _bad(move: Move, why: str):
    raise InapplicableMoveError(f"{move}: {why}")


def _rewrite(events: tuple[Event, ...], move: Move) -> tuple[Event, ...]:
    t, kind, params = move.index, move.kind, move.params
    n = len(events)
    if kind in INSERT_KINDS:
        if not 1 <= t <= n - 1:
            _bad(move, "insertion point must lie strictly inside the word")
        c = strand_counts(events[:t])[-1]
        j, variant = params
        if kind is MoveKind.ZIGZAG_INSERT:
            if not 1 <= j <= c or variant not in ("L", "R"):
                _bad(move, f"no strand {j} (of {c}) / side {variant!r}")
            pair = (Event(CUP, j + 1), Event(CAP, j)) if variant == "R" else (Event(CUP, j), Event(CAP, j + 1))
        else:
            if not 1 <= j <= c - 1 or variant not in ("pm", "mp"):
                _bad(move, f"no strand pair {j},{j + 1} (of {c}) / order {variant!r}")
            pair = (Event(EventKind(variant[0]), j), Event(EventKind(variant[1]), j))
        return events[:t] + pair + events[t:]

    if not 0 <= t < n:
        _bad(move, "index out of range")

    if kind is MoveKind.EXTREMUM_TWIST:
        if params == ("remove",):
            if not _twist_removable(events, t):
                _bad(move, "no kink at this index")
            return events[:t] + events[t + 1 :]
        if len(params) == 2 and params[0] == "add" and params[1] in ("p", "m"):
            e = events[t]
            x = Event(EventKind(params[1]), e.position)
            if e.kind is CUP:
                return events[: t + 1] + (x,) + events[t + 1 :]
            if e.kind is CAP:
                return events[:t] + (x,) + events[t:]
            _bad(move, "kinks attach to cups and caps only")
        _bad(move, f"bad parameters {params!r}")

    if kind is MoveKind.REID3:
        if t + 2 >= n:
            _bad(move, "needs three events")
        a, b, c = events[t : t + 3]
        if not (
            a.kind.is_crossing and a.kind is b.kind is c.kind
            and a.position == c.position and abs(a.position - b.position) == 1
        ):
            _bad(move, "pattern x_i x_i+-1 x_i not present")
        return events[:t] + (b, a, b) + events[t + 3 :]

    if t + 1 >= n:
        _bad(move, "needs two events")
    a, b = events[t], events[t + 1]

    if kind is MoveKind.ZIGZAG_CANCEL:
        if not _is_zigzag(a, b):
            _bad(move, "no zigzag here")
        return events[:t] + events[t + 2 :]
    if kind is MoveKind.REID2_CANCEL:
        if not (a.kind.is_crossing and b.kind.is_crossing and a.position == b.position and a.kind is not b.kind):
            _bad(move, "no cancelling crossing pair here")
        return events[:t] + events[t + 2 :]
    if kind is MoveKind.CROSSING_SLIDE:
        slid = _slide(a, b)
        if slid is None:
            _bad(move, "no crossing next to an extremum here")
        return events[:t] + slid + events[t + 2 :]
    if kind is MoveKind.FAR_COMMUTE:
        side = params[0] if params else None
        for s, lower, upper in _commute(a, b):
            if s == side:
                return events[:t] + (lower, upper) + events[t + 2 :]
        _bad(move, "events do not commute (or wrong side parameter)")
    _bad(move, "unknown move kind")


def apply_move(word: MorseWord, move: Move) -> MorseWord:
    return MorseWord(_rewrite(word.events, move))


def inverse_move(word: MorseWord, move: Move) -> Move:
    """The move that takes ``apply_move(word, move)`` back to ``word``."""
    ev = word.events
    t, kind = move.index, move.kind
    after = _rewrite(ev, move)
    if kind is MoveKind.ZIGZAG_INSERT:
        return Move(MoveKind.ZIGZAG_CANCEL, t)
    if kind is MoveKind.REID2_INSERT:
        return Move(MoveKind.REID2_CANCEL, t)
    if kind is MoveKind.ZIGZAG_CANCEL:
        cup, cap = ev[t], ev[t + 1]
        if cap.position == cup.position - 1:
            return Move(MoveKind.ZIGZAG_INSERT, t, (cap.position, "R"))
        return Move(MoveKind.ZIGZAG_INSERT, t, (cup.position, "L"))
    if kind is MoveKind.REID2_CANCEL:
        a, b = ev[t], ev[t + 1]
        return Move(MoveKind.REID2_INSERT, t, (a.position, a.kind.value + b.kind.value))
    if kind in (MoveKind.REID3, MoveKind.CROSSING_SLIDE):
        return Move(kind, t)
    if kind is MoveKind.FAR_COMMUTE:
        for side, lower, upper in _commute(after[t], after[t + 1]):
            if (lower, upper) == (ev[t], ev[t + 1]):
                return Move(kind, t, () if side is None else (side,))
        raise AssertionError("far commutation has no inverse")  # pragma: no cover
    # ExtremumTwist
    if move.params[0] == "add":
        return Move(kind, t + 1 if ev[t].kind is CUP else t, ("remove",))
    x = ev[t]
    if t > 0 and ev[t - 1].kind is CUP and ev[t - 1].position == x.position:
        return Move(kind, t - 1, ("add", x.kind.value))
    return Move(kind, t, ("add", x.kind.value))


def replay(word: MorseWord, trace: Iterable[Move]) -> MorseWord:
    for move in trace:
        word = apply_move(word, move)
    return word


def _profile_safe_swap(a: Event, b: Event) -> bool:
    return not ({a.kind, b.kind} == {CUP, CAP})


def canonical_events(events: Sequence[Event]) -> tuple[Event, ...]:
    """Least sequence reachable by improving far commutations that keep the profile.

    Adjacent commuting pairs are swapped whenever the swap makes the event
    sequence lexicographically smaller, until no such swap is left. Cup/cap
    pairs never swap here, because that would change the level widths.
    """
    ev = list(events)
    changed = True
    while changed:
        changed = False
        for t in range(len(ev) - 1):
            a, b = ev[t], ev[t + 1]
            if not _profile_safe_swap(a, b):
                continue
            options = _commute(a, b)
            if len(options) != 1:
                continue
            _, lower, upper = options[0]
            if (lower, upper) < (a, b):
                ev[t], ev[t + 1] = lower, upper
                changed = True
    return tuple(ev)


def canonical_form(word: MorseWord) -> str:
    return " ".join(e.token for e in canonical_events(word.events))


def perturb(word: MorseWord, n: int, rng: random.Random, kinds=None) -> tuple[MorseWord, list[Move]]:
    """Apply ``n`` insert moves chosen uniformly with ``rng``."""
    kinds = INSERT_KINDS | {MoveKind.EXTREMUM_TWIST} if kinds is None else kinds
    applied = []
    for _ in range(n):
        options = [m for m in enumerate_moves(word, kinds) if m.is_insert]
        move = rng.choice(options)
        word = apply_move(word, move)
        applied.append(move)
    return word, applied
