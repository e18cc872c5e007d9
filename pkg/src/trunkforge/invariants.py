"""Width, bridge number and trunk of an embedding, computed two ways.

The direct route reads the level widths: width is their sum, trunk their
maximum, bridge number the count of maxima. The second route uses only the
thick and thin levels::

    width  = (sum(a*a for a in thick) - sum(b*b for b in thin)) / 2
    bridge = (sum(thick) - sum(thin)) / 2

`report` always runs both and refuses to return if they disagree.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import InconsistencyError, InvalidDecompositionError
from .morse import MorseWord, WidthProfile, as_profile, profile

__all__ = [
    "ThickThinDecomposition",
    "InvariantReport",
    "thick_thin",
    "expand",
    "width_direct",
    "bridge_direct",
    "trunk",
    "width_ss",
    "bridge_ss",
    "report",
    "report_from_profile",
]


@dataclass(frozen=True)
class ThickThinDecomposition:
    thick: tuple[int, ...]
    thin: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "thick", tuple(int(a) for a in self.thick))
        object.__setattr__(self, "thin", tuple(int(b) for b in self.thin))
        _check_decomposition(self.thick, self.thin)

    def __str__(self) -> str:
        return f"thick={_csv(self.thick)} thin={_csv(self.thin)}"


def _csv(xs: Sequence[int]) -> str:
    return ",".join(map(str, xs))


def _check_decomposition(thick: Sequence[int], thin: Sequence[int]) -> None:
    n = len(thick)
    if n < 1:
        raise InvalidDecompositionError("at least one thick level is required")
    if len(thin) != n - 1:
        raise InvalidDecompositionError(
            f"{n} thick levels need exactly {n - 1} thin levels, got {len(thin)}"
        )
    for x in (*thick, *thin):
        if x % 2:
            raise InvalidDecompositionError(f"level width {x} is odd")
    floor = 4 if n >= 2 else 2
    for a in thick:
        if a < floor:
            raise InvalidDecompositionError(f"thick width {a} is below {floor}")
    for j, b in enumerate(thin):
        if b < 2:
            raise InvalidDecompositionError(f"thin width {b} is below 2")
        if b >= min(thick[j], thick[j + 1]):
            raise InvalidDecompositionError(
                f"thin width {b} is not below both neighbours {thick[j]} and {thick[j + 1]}"
            )


def as_decomposition(d) -> ThickThinDecomposition:
    if isinstance(d, ThickThinDecomposition):
        return d
    thick, thin = d
    return ThickThinDecomposition(tuple(thick), tuple(thin))


def thick_thin(prof) -> ThickThinDecomposition:
    """Strict local maxima and minima of the profile padded with a 0 at each end."""
    x = (0, *as_profile(prof).entries, 0)
    thick, thin = [], []
    for i in range(1, len(x) - 1):
        if x[i] > x[i - 1] and x[i] > x[i + 1]:
            thick.append(x[i])
        elif x[i] < x[i - 1] and x[i] < x[i + 1]:
            thin.append(x[i])
    return ThickThinDecomposition(tuple(thick), tuple(thin))


def expand(d) -> WidthProfile:
    """Inverse of `thick_thin`: interpolate 2, a1, b1, a2, ..., an, 2 in steps of 2."""
    d = as_decomposition(d)
    turning = [2]
    for j, a in enumerate(d.thick):
        turning.append(a)
        turning.append(d.thin[j] if j < len(d.thin) else 2)
    entries = [2]
    for lo, hi in zip(turning, turning[1:]):
        step = 2 if hi > lo else -2
        entries.extend(range(lo + step, hi + step, step))
    return WidthProfile(tuple(entries))


def width_direct(prof) -> int:
    return sum(as_profile(prof).entries)


def trunk(prof) -> int:
    return max(as_profile(prof).entries)


def bridge_direct(word_or_prof) -> int:
    """Number of maxima: caps of a word, or (p + 1) / 2 for a p-entry profile."""
    if isinstance(word_or_prof, MorseWord):
        return word_or_prof.caps
    return (len(as_profile(word_or_prof)) + 1) // 2


def width_ss(d) -> int:
    d = as_decomposition(d)
    twice = sum(a * a for a in d.thick) - sum(b * b for b in d.thin)
    return twice // 2


def bridge_ss(d) -> int:
    d = as_decomposition(d)
    return (sum(d.thick) - sum(d.thin)) // 2


@dataclass(frozen=True)
class InvariantReport:
    width: int
    bridge: int
    trunk: int
    decomposition: ThickThinDecomposition
    profile: WidthProfile

    def as_dict(self) -> dict:
        return {
            "width": self.width,
            "bridge": self.bridge,
            "trunk": self.trunk,
            "thick": list(self.decomposition.thick),
            "thin": list(self.decomposition.thin),
            "profile": list(self.profile.entries),
        }

    @property
    def triple(self) -> tuple[int, int, int]:
        """(width, bridge, trunk)."""
        return self.width, self.bridge, self.trunk


def report_from_profile(prof, caps: int | None = None) -> InvariantReport:
    prof = as_profile(prof)
    d = thick_thin(prof)
    w = width_direct(prof)
    b = bridge_direct(prof)
    tr = trunk(prof)
    if caps is not None and caps != b:
        raise InconsistencyError(f"cap count {caps} disagrees with profile bridge number {b}")
    if width_ss(d) != w:
        raise InconsistencyError(f"width: level sum {w} != thick/thin formula {width_ss(d)}")
    if bridge_ss(d) != b:
        raise InconsistencyError(f"bridge: cap count {b} != thick/thin formula {bridge_ss(d)}")
    if max(d.thick) != tr:
        raise InconsistencyError(f"trunk {tr} != largest thick level {max(d.thick)}")
    return InvariantReport(w, b, tr, d, prof)


def report(word: MorseWord, allow_links: bool = False) -> InvariantReport:
    return report_from_profile(profile(word, allow_links=allow_links), caps=word.caps)
