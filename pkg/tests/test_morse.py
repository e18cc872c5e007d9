import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import loop_count, random_knot_word, tokens
from trunkforge.errors import InvalidProfileError, LinkRejectedError, WordSyntaxError, WordValidationError
from trunkforge.morse import (
    Event,
    EventKind,
    MorseWord,
    WidthProfile,
    components,
    parse_word,
    profile,
    realize_profile,
)


def test_parse_round_unknot():
    w = parse_word("u1 n1")
    assert len(w) == 2
    assert w.events == (Event(EventKind.CUP, 1), Event(EventKind.CAP, 1))
    assert str(w) == "u1 n1"


def test_parse_four_events_one_component():
    w = parse_word("u1 u2 n1 n1")
    assert len(w) == 4
    assert components(w) == 1


def test_parse_reports_first_illegal_event():
    with pytest.raises(WordValidationError) as exc:
        parse_word("u1 n2")
    assert exc.value.event_index == 2


@pytest.mark.parametrize(
    "text, index",
    [
        ("n1", 1),
        ("u2 n1", 1),
        ("u1 p2 n1", 2),
        ("u1 u1", 2),
        ("u1 n1 n1", 3),
        ("", 0),
    ],
)
def test_validation_errors(text, index):
    with pytest.raises(WordValidationError) as exc:
        parse_word(text)
    assert exc.value.event_index == index


@pytest.mark.parametrize("text", ["u1 x1", "u0 n1", "u1 n01", "U1 n1", "u-1", "u1n1"])
def test_lex_errors(text):
    with pytest.raises(WordSyntaxError):
        parse_word(text)


def test_comments_and_newlines():
    text = "# a trefoil-free unknot\nu1 u2   # open a zigzag\n n1\nn1 # done\n"
    assert str(parse_word(text)) == "u1 u2 n1 n1"


def test_words_are_immutable():
    w = parse_word("u1 n1")
    with pytest.raises(AttributeError):
        w.events = ()


@pytest.mark.parametrize(
    "text, expected",
    [("u1 n1", 1), ("u1 u1 n1 n1", 2), ("u1 u2 n1 n1", 1), ("u1 u3 n3 n1", 2), ("u1 u3 p2 n3 n1", 1)],
)
def test_components(text, expected):
    assert components(parse_word(text)) == expected


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_components_matches_graph_walk(seed):
    rng = random.Random(seed)
    # build arbitrary closed words, links included
    events, count = [], 0
    while True:
        opts = [("u", rng.randint(1, count + 1))] if count < 8 else []
        if count >= 2:
            opts += [("n", rng.randint(1, count - 1)), (rng.choice("pm"), rng.randint(1, count - 1))]
        kind, pos = rng.choice(opts)
        events.append((kind, pos))
        count += {"u": 2, "n": -2}.get(kind, 0)
        if count == 0:
            break
    text = " ".join(f"{k}{p}" for k, p in events)
    assert components(parse_word(text)) == loop_count(tokens(text))


@pytest.mark.parametrize(
    "text, expected",
    [("u1 n1", (2,)), ("u1 u2 n1 n1", (2, 4, 2)), ("u1 u2 p1 p3 n1 n1", (2, 4, 2))],
)
def test_profile(text, expected):
    assert profile(parse_word(text)).entries == expected


def test_profile_rejects_links_unless_allowed():
    w = parse_word("u1 u1 n1 n1")
    with pytest.raises(LinkRejectedError):
        profile(w)
    assert profile(w, allow_links=True).entries == (2, 4, 2)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_profile_shape(seed):
    w = parse_word(random_knot_word(random.Random(seed)))
    p = profile(w).entries
    assert p[0] == p[-1] == 2
    assert all(abs(a - b) == 2 for a, b in zip(p, p[1:]))
    assert sum(p) % 2 == 0
    assert len(p) == w.cups + w.caps - 1
    assert w.cups == w.caps


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9), st.data())
def test_crossing_pair_insertion_keeps_components(seed, data):
    w = parse_word(random_knot_word(random.Random(seed)))
    counts, c = [], 0
    for e in w.events[:-1]:
        c += e.kind.delta
        counts.append(c)
    t = data.draw(st.integers(0, len(counts) - 1))
    pos = data.draw(st.integers(1, counts[t] - 1))
    pair = (Event(EventKind.CROSS_POS, pos), Event(EventKind.CROSS_NEG, pos))
    if data.draw(st.booleans()):
        pair = pair[::-1]
    w2 = MorseWord(w.events[: t + 1] + pair + w.events[t + 1 :])
    assert w2.components == w.components
    assert profile(w2) == profile(w)


def test_single_crossing_can_merge_components():
    # the component count is NOT invariant under inserting one crossing
    assert components(parse_word("u1 u3 n3 n1")) == 2
    assert components(parse_word("u1 u3 p2 n3 n1")) == 1


def test_realize_examples():
    assert str(realize_profile((2,))) == "u1 n1"
    w = realize_profile((2, 4, 2))
    assert len(w) == 4 and w.components == 1 and profile(w).entries == (2, 4, 2)
    assert str(w) == "u1 u2 n1 n1"
    w = realize_profile((2, 4, 6, 4, 2))
    assert len(w) == 6 and w.components == 1 and profile(w).entries == (2, 4, 6, 4, 2)
    assert w.crossings == 0


profiles = st.lists(st.sampled_from([2, -2]), max_size=40).map(
    lambda steps: _walk(steps)
)


def _walk(steps):
    # clamp into a valid profile: never below 2, finish by descending to 2
    out = [2]
    for s in steps:
        nxt = out[-1] + s
        out.append(nxt if nxt >= 2 else out[-1] + 2)
    while out[-1] > 2:
        out.append(out[-1] - 2)
    return tuple(out)


@settings(max_examples=300, deadline=None)
@given(profiles)
def test_realize_round_trip(p):
    w = realize_profile(p)
    assert w.components == 1
    assert w.crossings == 0
    assert profile(w).entries == p
    assert realize_profile(profile(w)) == w


@pytest.mark.parametrize("bad", [(), (4,), (2, 4), (2, 6, 2), (2, 3, 2), (2, 0, 2), (2, 4, 4, 2)])
def test_invalid_profiles(bad):
    with pytest.raises(InvalidProfileError):
        WidthProfile(bad)
    with pytest.raises(InvalidProfileError):
        realize_profile(bad)
