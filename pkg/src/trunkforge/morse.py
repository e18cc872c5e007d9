"""Morse words: knot embeddings as bottom-to-top sequences of elementary slices.

A word is read from the bottom of the diagram to the top. Each event acts on
the strands of the horizontal level just below it:

``u<i>``  cup (local minimum), inserts two new strands at positions i, i+1
``n<i>``  cap (local maximum), joins strands i and i+1
``p<i>``  crossing of strands i and i+1; the strand coming from i passes over
``m<i>``  crossing of strands i and i+1; the strand coming from i passes under

Positions are 1-based. The order of events is the whole height function: no
numeric heights are stored anywhere.
"""

from __future__ import annotations

import re
import sys
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import NamedTuple

from .errors import (
    InvalidProfileError,
    LinkRejectedError,
    WordSyntaxError,
    WordValidationError,
)

__all__ = [
    "EventKind",
    "Event",
    "MorseWord",
    "WidthProfile",
    "parse_word",
    "components",
    "profile",
    "realize_profile",
    "strand_counts",
]


class EventKind(str, Enum):
    CUP = "u"
    CAP = "n"
    CROSS_POS = "p"
    CROSS_NEG = "m"

    @property
    def is_extremum(self) -> bool:
        return self is EventKind.CUP or self is EventKind.CAP

    @property
    def is_crossing(self) -> bool:
        return self is EventKind.CROSS_POS or self is EventKind.CROSS_NEG

    @property
    def delta(self) -> int:
        """Change in strand count across the event."""
        return _DELTA[self]


_DELTA = {EventKind.CUP: 2, EventKind.CAP: -2, EventKind.CROSS_POS: 0, EventKind.CROSS_NEG: 0}

CUP = EventKind.CUP
CAP = EventKind.CAP
POS = EventKind.CROSS_POS
NEG = EventKind.CROSS_NEG


class Event(NamedTuple):
    kind: EventKind
    position: int

    @property
    def token(self) -> str:
        return f"{self.kind.value}{self.position}"

    def __str__(self) -> str:
        return self.token

    @classmethod
    def from_token(cls, token: str) -> Event:
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise WordSyntaxError(f"unknown token {token!r}")
        pos = int(m.group(2))
        if pos > sys.maxsize:
            raise WordSyntaxError(f"position in {token!r} overflows a machine integer")
        return cls(EventKind(m.group(1)), pos)


_TOKEN = re.compile(r"([unpm])([1-9][0-9]*)")


def _check_events(events: Sequence[Event]) -> None:
    if not events:
        raise WordValidationError("empty word", event_index=0)
    count = 0
    for idx, (kind, pos) in enumerate(events, start=1):
        if pos < 1:
            raise WordValidationError(f"event {idx} ({kind.value}{pos}): position must be >= 1", idx)
        if kind is CUP:
            if pos > count + 1:
                raise WordValidationError(
                    f"event {idx} (u{pos}): cup position exceeds strand count {count} + 1", idx
                )
            count += 2
        else:
            if pos + 1 > count:
                raise WordValidationError(
                    f"event {idx} ({kind.value}{pos}): needs strands {pos} and {pos + 1} "
                    f"but only {count} present",
                    idx,
                )
            if kind is CAP:
                count -= 2
    if count != 0:
        raise WordValidationError(
            f"diagram does not close: {count} strands remain after the last event", len(events)
        )


@dataclass(frozen=True)
class MorseWord:
    """A validated, closed Morse word. Immutable."""

    events: tuple[Event, ...]

    def __post_init__(self):
        evs = tuple(e if isinstance(e, Event) else Event(EventKind(e[0]), int(e[1])) for e in self.events)
        object.__setattr__(self, "events", evs)
        _check_events(evs)

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> MorseWord:
        return cls(tuple(Event.from_token(t) for t in tokens))

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def __getitem__(self, i):
        return self.events[i]

    def __str__(self) -> str:
        return " ".join(e.token for e in self.events)

    def __repr__(self) -> str:
        return f"MorseWord({str(self)!r})"

    @property
    def cups(self) -> int:
        return sum(1 for e in self.events if e.kind is CUP)

    @property
    def caps(self) -> int:
        return sum(1 for e in self.events if e.kind is CAP)

    @property
    def crossings(self) -> int:
        return sum(1 for e in self.events if e.kind.is_crossing)

    @cached_property
    def components(self) -> int:
        return _count_components(self.events)

    @property
    def is_knot(self) -> bool:
        return self.components == 1


def parse_word(text: str) -> MorseWord:
    """Parse whitespace-separated tokens; ``#`` comments run to end of line."""
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    events = []
    for i, tok in enumerate(tokens, start=1):
        try:
            events.append(Event.from_token(tok))
        except WordSyntaxError as exc:
            raise WordSyntaxError(f"token {i}: {exc}", token_index=i) from None
    return MorseWord(tuple(events))


def strand_counts(events: Sequence[Event]) -> list[int]:
    """Strand count in the gap just above each event."""
    out = []
    count = 0
    for e in events:
        count += _DELTA[e.kind]
        out.append(count)
    return out


class _DisjointSet:
    def __init__(self):
        self.parent: list[int] = []

    def make(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _count_components(events: Sequence[Event]) -> int:
    # Each cup starts an arc whose two ends occupy the new strands; crossings
    # only permute which arc sits where; a cap glues the arcs it joins.
    dsu = _DisjointSet()
    strands: list[int] = []
    for kind, pos in events:
        i = pos - 1
        if kind is CUP:
            arc = dsu.make()
            strands[i:i] = [arc, arc]
        elif kind is CAP:
            dsu.union(strands[i], strands[i + 1])
            del strands[i : i + 2]
        else:
            strands[i], strands[i + 1] = strands[i + 1], strands[i]
    return len({dsu.find(a) for a in range(len(dsu.parent))})


def components(word: MorseWord) -> int:
    """Number of circle components of the closed diagram."""
    return word.components


@dataclass(frozen=True)
class WidthProfile:
    """Level widths x_1..x_p between consecutive critical points."""

    entries: tuple[int, ...] = field()

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        _check_profile(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    def reversed(self) -> WidthProfile:
        return WidthProfile(self.entries[::-1])


def _check_profile(entries: Sequence[int]) -> None:
    if not entries:
        raise InvalidProfileError("profile must be nonempty")
    for i, x in enumerate(entries):
        if x <= 0 or x % 2:
            raise InvalidProfileError(f"entry {i + 1} = {x} is not a positive even integer")
    if entries[0] != 2 or entries[-1] != 2:
        raise InvalidProfileError("profile must begin and end with 2")
    for i in range(1, len(entries)):
        if abs(entries[i] - entries[i - 1]) != 2:
            raise InvalidProfileError(
                f"entries {i} and {i + 1} ({entries[i - 1]}, {entries[i]}) do not differ by 2"
            )


def as_profile(prof) -> WidthProfile:
    return prof if isinstance(prof, WidthProfile) else WidthProfile(tuple(prof))


def profile(word: MorseWord, allow_links: bool = False) -> WidthProfile:
    """Width of each regular level between consecutive cups/caps."""
    if not word.events:
        raise WordValidationError("empty word", event_index=0)
    if not allow_links and word.components != 1:
        raise LinkRejectedError(word.components)
    return WidthProfile(_raw_profile(word.events))


def _raw_profile(events: Sequence[Event]) -> tuple[int, ...]:
    out = []
    count = 0
    for kind, _ in events:
        if kind is CUP:
            count += 2
            out.append(count)
        elif kind is CAP:
            count -= 2
            out.append(count)
    out.pop()
    return tuple(out)


def realize_profile(prof) -> MorseWord:
    """Build a crossing-free single-component word with the given profile.

    Each ascent opens a cup just left of the rightmost strand. Each descent
    caps the leftmost adjacent pair lying on different open arcs, so no
    component closes before the final cap.
    """
    entries = as_profile(prof).entries
    events = [Event(CUP, 1)]
    dsu = _DisjointSet()
    first = dsu.make()
    strands = [first, first]
    for prev, cur in zip(entries, entries[1:]):
        if cur > prev:
            pos = len(strands)
            arc = dsu.make()
            strands[pos - 1 : pos - 1] = [arc, arc]
            events.append(Event(CUP, pos))
        else:
            for i in range(len(strands) - 1):
                if dsu.find(strands[i]) != dsu.find(strands[i + 1]):
                    break
            else:  # pragma: no cover - at least two open arcs whenever count >= 4
                raise AssertionError("no cappable pair")
            dsu.union(strands[i], strands[i + 1])
            del strands[i : i + 2]
            events.append(Event(CAP, i + 1))
    events.append(Event(CAP, 1))
    return MorseWord(tuple(events))
