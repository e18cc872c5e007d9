"""Heuristic minimisation of width, trunk or bridge number over move orbits.

Everything here produces upper bounds for the knot invariants, never proofs
of minimality: the move set does not generate all isotopies, and the orbits
explored are bounded.

Breadth-first routines deduplicate words by `canonical_events`; a class is
expanded from the first representative reached, so every recorded trace
replays exactly from the starting word. Expansion is sequential.
"""

from __future__ import annotations

import math
import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from .errors import FrontierCapError, LinkRejectedError
from .invariants import InvariantReport, report
from .morse import CAP, CUP, Event, MorseWord
from .moves import Move, MoveKind, _enumerate, _rewrite, canonical_events

__all__ = [
    "Objective",
    "Strategy",
    "SearchConfig",
    "SearchResult",
    "score",
    "search",
    "orbit_min",
]


class Objective(str, Enum):
    WIDTH = "width"
    TRUNK = "trunk"
    BRIDGE = "bridge"
    LEXICOGRAPHIC = "lexicographic"


class Strategy(str, Enum):
    BFS = "bfs"
    GREEDY = "greedy"
    ANNEAL = "anneal"


def _levels(events: Sequence[Event]) -> tuple[int, int, int]:
    """(width, bridge, trunk) straight from the event sequence."""
    count = width = top = caps = 0
    last = 0
    for kind, _ in events:
        if kind is CUP:
            count += 2
        elif kind is CAP:
            count -= 2
            caps += 1
        else:
            continue
        width += count
        last = count
        if count > top:
            top = count
    # the gap above the final cap is empty and not a level
    return width - last, caps, top


def score(events: Sequence[Event], objective: Objective) -> tuple[int, ...]:
    w, b, tr = _levels(events)
    if objective is Objective.WIDTH:
        return (w,)
    if objective is Objective.TRUNK:
        return (tr,)
    if objective is Objective.BRIDGE:
        return (b,)
    return (tr, w)


def _descent_key(events, objective):
    # Greedy and annealing break plateaus in the objective on width.
    w, _, _ = _levels(events)
    return (*score(events, objective), w)


@dataclass(frozen=True)
class SearchConfig:
    objective: Objective = Objective.WIDTH
    strategy: Strategy = Strategy.GREEDY
    depth: int = 4
    max_steps: int = 1000
    t_start: float = 2.0
    t_end: float = 0.05
    steps: int = 2000
    seed: int = 0
    allow_inserts: bool | None = None
    max_frontier: int = 200_000

    def __post_init__(self):
        object.__setattr__(self, "objective", Objective(self.objective))
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        for name in ("depth", "max_steps", "steps", "max_frontier"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not (self.t_start > 0 and self.t_end > 0):
            raise ValueError("temperatures must be positive")

    @property
    def inserts(self) -> bool:
        """Whether insert moves are explored; by default only annealing uses them."""
        if self.allow_inserts is None:
            return self.strategy is Strategy.ANNEAL
        return self.allow_inserts


@dataclass(frozen=True)
class SearchResult:
    start: MorseWord
    best: MorseWord
    report: InvariantReport
    start_report: InvariantReport
    trace: tuple[Move, ...]
    exhausted: bool = False
    explored: int = 0
    config: SearchConfig = field(default_factory=SearchConfig)

    @property
    def value(self) -> int:
        return score(self.best.events, self.config.objective)[0]


def _require_knot(word: MorseWord) -> None:
    if word.components != 1:
        raise LinkRejectedError(word.components)


def search(word: MorseWord, config: SearchConfig | None = None) -> SearchResult:
    config = config or SearchConfig()
    _require_knot(word)
    run = {Strategy.BFS: _bfs, Strategy.GREEDY: _greedy, Strategy.ANNEAL: _anneal}[config.strategy]
    best_events, trace, exhausted, explored = run(word.events, config)
    best = MorseWord(best_events)
    return SearchResult(
        start=word,
        best=best,
        report=report(best),
        start_report=report(word),
        trace=tuple(trace),
        exhausted=exhausted,
        explored=explored,
        config=config,
    )


def _bfs(start, config):
    objective = config.objective
    seen = {canonical_events(start): None}
    parents: dict[tuple, tuple[tuple, Move] | None] = {start: None}
    best, best_key = start, score(start, objective)
    frontier = [start]
    exhausted = False
    explored = 1
    for _ in range(config.depth):
        nxt = []
        for events in frontier:
            for move in _enumerate(events, include_inserts=config.inserts):
                child = _rewrite(events, move)
                key = canonical_events(child)
                if key in seen:
                    continue
                seen[key] = None
                parents[child] = (events, move)
                explored += 1
                s = score(child, objective)
                if s < best_key:
                    best, best_key = child, s
                nxt.append(child)
                if len(nxt) > config.max_frontier:
                    exhausted = True
                    break
            if exhausted:
                break
        if exhausted or not nxt:
            break
        frontier = nxt
    trace = []
    node = best
    while parents[node] is not None:
        node, move = parents[node]
        trace.append(move)
    trace.reverse()
    return best, trace, exhausted, explored


def _greedy(start, config):
    objective = config.objective
    current, key = start, _descent_key(start, objective)
    trace = []
    explored = 1
    for _ in range(config.max_steps):
        chosen = None
        for move in _enumerate(current, include_inserts=config.inserts):
            child = _rewrite(current, move)
            explored += 1
            k = _descent_key(child, objective)
            if k < key and (chosen is None or k < chosen[0]):
                chosen = (k, move, child)
        if chosen is None:
            return current, trace, False, explored
        key, move, current = chosen
        trace.append(move)
    return current, trace, True, explored


def _energy(key: tuple[int, ...], objective: Objective) -> float:
    if objective is Objective.WIDTH:
        return float(key[0])
    # width still matters, at a rate that keeps extra zigzags from piling up
    return key[0] + 0.05 * key[-1]


def _anneal(start, config):
    objective = config.objective
    rng = random.Random(config.seed)
    limit = 2 * len(start) + 20
    current = start
    cur_e = _energy(_descent_key(start, objective), objective)
    best, best_key, best_len = start, _descent_key(start, objective), 0
    trace: list[Move] = []
    ratio = config.t_end / config.t_start
    for step in range(config.steps):
        temp = config.t_start * ratio ** (step / max(1, config.steps - 1))
        by_kind: dict[MoveKind, list[Move]] = {}
        for m in _enumerate(current, include_inserts=config.inserts and len(current) + 2 <= limit):
            by_kind.setdefault(m.kind, []).append(m)
        if not by_kind:
            break
        # uniform over kinds first, so the many insert positions do not swamp the rest
        kind = sorted(by_kind, key=list(MoveKind).index)[rng.randrange(len(by_kind))]
        options = by_kind[kind]
        move = options[rng.randrange(len(options))]
        child = _rewrite(current, move)
        k = _descent_key(child, objective)
        e = _energy(k, objective)
        delta = e - cur_e
        if delta <= 0 or rng.random() < math.exp(-delta / temp):
            current, cur_e = child, e
            trace.append(move)
            if k < best_key:
                best, best_key, best_len = child, k, len(trace)
    return best, trace[:best_len], False, config.steps


# Only these kinds can lower an objective in a single step: every other move
# keeps the level widths or adds levels.
_LOWERING = (MoveKind.ZIGZAG_CANCEL, MoveKind.FAR_COMMUTE)


def orbit_min(
    word: MorseWord,
    depth: int,
    objective: Objective | str = Objective.WIDTH,
    max_frontier: int = 200_000,
) -> int:
    """Exact minimum of the objective over words reachable in at most ``depth`` moves.

    All move kinds are used, inserts included. In the last layer only the
    kinds that can lower the objective are tried, which leaves the minimum
    unchanged and saves most of the work.
    """
    objective = Objective(objective)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    start = word.events
    best = score(start, objective)
    seen = {canonical_events(start)}
    frontier = [start]
    for layer in range(1, depth + 1):
        last = layer == depth
        nxt = []
        for events in frontier:
            kinds = _LOWERING if last else None
            for move in _enumerate(events, kinds):
                child = _rewrite(events, move)
                s = score(child, objective)
                if s < best:
                    best = s
                if last:
                    continue
                key = canonical_events(child)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(child)
                if len(nxt) > max_frontier:
                    raise FrontierCapError(
                        f"orbit layer {layer} exceeds the frontier cap of {max_frontier} words"
                    )
        frontier = nxt
    return best[0]
