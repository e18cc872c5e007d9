"""Catalog of named knots and template embeddings, loaded from a stanza file.

Every entry is checked against its recorded facts when the file is read, so a
catalog that loads is a catalog whose numbers agree with the library.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import CatalogError, TrunkforgeError, UnknownEntryError
from .invariants import (
    ThickThinDecomposition,
    bridge_ss,
    expand,
    report,
    width_ss,
)
from .morse import MorseWord, parse_word, realize_profile

__all__ = ["Fact", "CatalogEntry", "Catalog", "load_catalog", "default_catalog", "get", "entries"]

ENV_VAR = "TRUNKFORGE_CATALOG"
INVARIANTS = ("w", "b", "tr")

_FACT = re.compile(r"(w|b|tr)=(-?\d+)(?:\s+src=(\S+))?")


@dataclass(frozen=True)
class Fact:
    invariant: str
    value: int
    source: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    word: MorseWord | None = None
    decomposition: ThickThinDecomposition | None = None
    facts: tuple[Fact, ...] = ()
    notes: str = ""

    def fact(self, invariant: str) -> int | None:
        for f in self.facts:
            if f.invariant == invariant:
                return f.value
        return None

    def computed(self) -> dict[str, int]:
        """Invariants recomputed from the stored word or decomposition."""
        if self.word is not None:
            r = report(self.word)
            return {"w": r.width, "b": r.bridge, "tr": r.trunk}
        if self.decomposition is not None:
            d = self.decomposition
            return {"w": width_ss(d), "b": bridge_ss(d), "tr": max(d.thick)}
        return {}

    def snake_word(self) -> MorseWord:
        """A crossing-free UNKNOT with this entry's level data, for pipeline tests.

        For template entries this is not the knot the template describes.
        """
        if self.decomposition is not None:
            return realize_profile(expand(self.decomposition))
        if self.word is not None:
            return realize_profile(report(self.word).profile)
        raise CatalogError(f"{self.name}: facts-only entry has no level data")

    def knot_word(self) -> MorseWord:
        if self.word is None:
            raise CatalogError(f"{self.name}: no Morse word stored (level data or facts only)")
        return self.word

    def validate(self) -> None:
        if self.word is None and self.decomposition is None and not self.facts:
            raise CatalogError(f"{self.name}: entry has no word, decomposition or facts")
        if self.word is not None and self.decomposition is not None:
            if report(self.word).decomposition != self.decomposition:
                raise CatalogError(f"{self.name}: word and decomposition disagree")
        got = self.computed()
        for f in self.facts:
            if f.invariant in got and got[f.invariant] != f.value:
                raise CatalogError(
                    f"{self.name}: recorded {f.invariant}={f.value} but computed {got[f.invariant]}"
                )


@dataclass(frozen=True)
class Catalog:
    entries: dict[str, CatalogEntry] = field(default_factory=dict)
    source: str = ""

    def get(self, name: str) -> CatalogEntry:
        try:
            return self.entries[name]
        except KeyError:
            raise UnknownEntryError(f"unknown catalog entry {name!r}") from None

    def list(self) -> list[CatalogEntry]:
        return list(self.entries.values())

    def __contains__(self, name) -> bool:
        return name in self.entries

    def __iter__(self):
        return iter(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    return tuple(int(x) for x in text.split(",")) if text else ()


def _parse_stanza(lines: list[tuple[int, str]], source: str) -> CatalogEntry:
    name = None
    word = None
    thick = thin = None
    facts = []
    notes = []
    for lineno, line in lines:
        key, sep, value = line.partition(":")
        if not sep:
            raise CatalogError(f"{source}:{lineno}: expected 'key: value', got {line!r}")
        key, value = key.strip(), value.strip()
        try:
            if key == "name":
                name = value
            elif key == "word":
                word = parse_word(value)
            elif key == "thick":
                thick = _ints(value)
            elif key == "thin":
                thin = _ints(value)
            elif key == "fact":
                m = _FACT.fullmatch(value)
                if m is None:
                    raise CatalogError(f"malformed fact {value!r}")
                facts.append(Fact(m.group(1), int(m.group(2)), m.group(3) or ""))
            elif key == "notes":
                notes.append(value)
            else:
                raise CatalogError(f"unknown field {key!r}")
        except (TrunkforgeError, ValueError) as exc:
            raise CatalogError(f"{source}:{lineno}: {exc}") from None
    if not name:
        raise CatalogError(f"{source}:{lines[0][0]}: stanza has no name")
    decomposition = None
    if thick is not None or thin is not None:
        try:
            decomposition = ThickThinDecomposition(thick or (), thin or ())
        except TrunkforgeError as exc:
            raise CatalogError(f"{source}: {name}: {exc}") from None
    entry = CatalogEntry(name, word, decomposition, tuple(facts), " ".join(notes))
    entry.validate()
    return entry


def parse_catalog(text: str, source: str = "<string>") -> Catalog:
    stanzas: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if stanzas[-1]:
                stanzas.append([])
            continue
        stanzas[-1].append((lineno, line))
    found: dict[str, CatalogEntry] = {}
    for stanza in stanzas:
        if not stanza:
            continue
        entry = _parse_stanza(stanza, source)
        if entry.name in found:
            raise CatalogError(f"{source}: duplicate entry {entry.name!r}")
        found[entry.name] = entry
    return Catalog(found, source)


def _read_bundled() -> Catalog:
    text = resources.files("trunkforge").joinpath("data/catalog.txt").read_text()
    return parse_catalog(text, "bundled catalog")


@lru_cache(maxsize=8)
def _load_path(path: str) -> Catalog:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from None
    return parse_catalog(text, path)


_bundled = lru_cache(maxsize=1)(_read_bundled)


def load_catalog(path: str | os.PathLike | None = None) -> Catalog:
    """Read a catalog file; with no path, honour $TRUNKFORGE_CATALOG, else the bundled one."""
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    if path is None:
        return _bundled()
    return _load_path(str(Path(path).resolve()))


def default_catalog() -> Catalog:
    return load_catalog()


def get(name: str) -> CatalogEntry:
    return default_catalog().get(name)


def entries() -> list[CatalogEntry]:
    return default_catalog().list()
