import random

import pytest

from trunkforge import catalog
from trunkforge.errors import FrontierCapError, LinkRejectedError
from trunkforge.invariants import report
from trunkforge.morse import parse_word
from trunkforge.moves import _enumerate, _rewrite, perturb, replay
from trunkforge.search import Objective, SearchConfig, orbit_min, score, search

INFLATED = "u1 u2 n1 u2 n1 u2 n1 n1"


def brute_orbit_min(word, depth, objective):
    # every move kind at every layer, no deduplication, no pruning
    best = score(word.events, objective)
    layer = [word.events]
    for _ in range(depth):
        nxt = []
        for ev in layer:
            for move in _enumerate(ev):
                child = _rewrite(ev, move)
                best = min(best, score(child, objective))
                nxt.append(child)
        layer = nxt
    return best[0]


def test_inflated_unknot_width():
    w = parse_word(INFLATED)
    assert report(w).width == 20
    res = search(w, SearchConfig(objective="width", strategy="bfs", depth=5))
    assert (res.report.width, res.report.trunk) == (2, 2)
    assert replay(w, res.trace) == res.best
    again = search(w, SearchConfig(objective="width", strategy="bfs", depth=5))
    assert again.best == res.best and again.trace == res.trace


def test_round_circle_is_left_alone():
    w = parse_word("u1 n1")
    for strategy in ("bfs", "greedy"):
        res = search(w, SearchConfig(strategy=strategy))
        assert res.best == w and res.trace == ()


def test_greedy_recovers_stack_trunk():
    base = catalog.get("4_1#8_5").word
    w, _ = perturb(base, 3, random.Random(2))
    res = search(w, SearchConfig(objective="trunk", strategy="greedy"))
    assert res.report.trunk == 6
    assert res.report.trunk <= report(w).trunk
    assert replay(w, res.trace) == res.best


def test_anneal_deterministic_and_monotone():
    w = parse_word(INFLATED)
    cfg = SearchConfig(objective="width", strategy="anneal", steps=400, seed=7)
    a, b = search(w, cfg), search(w, cfg)
    assert a.best == b.best and a.trace == b.trace
    assert a.report.width <= 20
    assert replay(w, a.trace) == a.best


@pytest.mark.parametrize(
    "word,depth,objective,expected",
    [("u1 u2 n1 n1", 1, "width", 2), ("u1 n1", 3, "trunk", 2)],
)
def test_orbit_min_examples(word, depth, objective, expected):
    assert orbit_min(parse_word(word), depth, objective) == expected


def test_orbit_min_matches_brute_force_on_stack():
    w = catalog.get("4_1#8_5").word
    assert orbit_min(w, 2, Objective.TRUNK) == 6
    assert brute_orbit_min(w, 2, Objective.TRUNK) == 6


@pytest.mark.parametrize("seed", range(6))
def test_orbit_min_matches_brute_force_small(seed):
    w, _ = perturb(parse_word("u1 u3 p2 p2 m1 p2 n3 n1"), 1, random.Random(seed))
    for objective in Objective:
        assert orbit_min(w, 2, objective) == brute_orbit_min(w, 2, objective)


def test_orbit_min_frontier_cap():
    with pytest.raises(FrontierCapError):
        orbit_min(catalog.get("4_1#8_5").word, 3, "trunk", max_frontier=10)


def test_search_rejects_links():
    with pytest.raises(LinkRejectedError):
        search(parse_word("u1 u1 n1 n1"))


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(depth=0)
    with pytest.raises(ValueError):
        SearchConfig(strategy="dfs")
    with pytest.raises(ValueError):
        SearchConfig(t_end=0)
    assert SearchConfig(strategy="anneal").inserts
    assert not SearchConfig(strategy="bfs").inserts
    assert SearchConfig(strategy="bfs", allow_inserts=True).inserts


def test_lexicographic_score():
    ev = parse_word("u1 u2 n1 n1").events
    assert score(ev, Objective.LEXICOGRAPHIC) == (4, 8)
    assert score(ev, Objective.BRIDGE) == (2,)
