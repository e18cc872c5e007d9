"""Width, bridge number and trunk of knot embeddings given as Morse words."""

__version__ = "0.1.0"

from .compose import scale_profile, stack, stack_identities
from .invariants import (
    InvariantReport,
    ThickThinDecomposition,
    bridge_direct,
    bridge_ss,
    expand,
    report,
    thick_thin,
    trunk,
    width_direct,
    width_ss,
)
from .morse import Event, EventKind, MorseWord, WidthProfile, components, parse_word, profile, realize_profile
from .moves import Move, MoveKind, apply_move, canonical_form, enumerate_moves
from .search import Objective, SearchConfig, Strategy, orbit_min, search

__all__ = [
    "Event",
    "EventKind",
    "InvariantReport",
    "Move",
    "MoveKind",
    "MorseWord",
    "Objective",
    "SearchConfig",
    "Strategy",
    "ThickThinDecomposition",
    "WidthProfile",
    "apply_move",
    "bridge_direct",
    "bridge_ss",
    "canonical_form",
    "components",
    "enumerate_moves",
    "expand",
    "orbit_min",
    "parse_word",
    "profile",
    "realize_profile",
    "report",
    "scale_profile",
    "search",
    "stack",
    "stack_identities",
    "thick_thin",
    "trunk",
    "width_direct",
    "width_ss",
]
