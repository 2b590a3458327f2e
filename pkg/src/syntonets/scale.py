"""Chromatic scales under five classical temperaments.

A temperament fixes the twelve frequency ratios within one octave; a scale
stacks those ratios over consecutive octaves starting from a base frequency
(C1 = 32.7032 Hz by default).  Ratios for the non-equal temperaments are
stored as exact rationals or surds so that multi-octave scales do not
accumulate rounding from four-digit reference tables.
"""

from dataclasses import dataclass
import math

PITCH_CLASS_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

TEMPERAMENT_NAMES = ("equal", "just", "meantone", "pythagorean", "werckmeister")

#: Fundamental frequency of C1 in Hz.
C1_FREQUENCY = 32.7032

DEFAULT_OCTAVES = 9


def equal_ratio(i: int) -> float:
    """Frequency ratio of the i-th equal-tempered note (1-based, 1..12)."""
    if not 1 <= i <= 12:
        raise ValueError(f"note index must be in 1..12, got {i}")
    return 2.0 ** ((i - 1) / 12.0)


# Quarter-comma meantone: all ratios are powers of the tempered fifth 5^(1/4)
# reduced into the octave.
_MT5 = 5.0 ** 0.25
# Werckmeister III tempers four fifths by a quarter of the Pythagorean comma;
# the resulting ratios mix 3-limit rationals with powers of 2^(1/4).
_W4 = 2.0 ** 0.25

_RATIOS = {
    "just": (
        1.0, 25 / 24, 9 / 8, 6 / 5, 5 / 4, 4 / 3,
        45 / 32, 3 / 2, 8 / 5, 5 / 3, 9 / 5, 15 / 8,
    ),
    "meantone": (
        1.0, _MT5**7 / 16, _MT5**2 / 2, 4 / _MT5**3, 5 / 4, 2 / _MT5,
        _MT5**6 / 8, _MT5, 25 / 16, _MT5**3 / 2, 4 / _MT5**2, _MT5**5 / 4,
    ),
    "pythagorean": (
        1.0, 256 / 243, 9 / 8, 32 / 27, 81 / 64, 4 / 3,
        729 / 512, 3 / 2, 128 / 81, 27 / 16, 16 / 9, 243 / 128,
    ),
    "werckmeister": (
        1.0, 256 / 243, 64 * math.sqrt(2.0) / 81, 32 / 27, 256 * _W4 / 243, 4 / 3,
        1024 / 729, 8 * 2.0**0.75 / 9, 128 / 81, 1024 * _W4 / 729, 16 / 9, 128 * _W4 / 81,
    ),
}


@dataclass(frozen=True)
class Temperament:
    """Named set of twelve within-octave frequency ratios."""

    name: str
    ratios: tuple[float, ...]

    def __post_init__(self):
        if len(self.ratios) != 12:
            raise ValueError(f"expected 12 ratios, got {len(self.ratios)}")
        if self.ratios[0] != 1.0:
            raise ValueError("first ratio must be exactly 1.0")
        for a, b in zip(self.ratios, self.ratios[1:]):
            if not a < b:
                raise ValueError("ratios must be strictly increasing")
        if not self.ratios[-1] < 2.0:
            raise ValueError("ratios must stay below the octave")


def temperament_table(name: str) -> Temperament:
    """Return the ratio table for one of the five temperaments."""
    key = name.lower()
    if key == "equal":
        return Temperament("equal", tuple(equal_ratio(i) for i in range(1, 13)))
    if key in _RATIOS:
        return Temperament(key, _RATIOS[key])
    raise ValueError(f"unknown temperament {name!r}; expected one of {TEMPERAMENT_NAMES}")


def all_temperaments() -> list[Temperament]:
    return [temperament_table(name) for name in TEMPERAMENT_NAMES]


@dataclass(frozen=True)
class ScaleNote:
    """One note of a scale: position, pitch and label (e.g. "G3")."""

    index: int
    octave: int
    pitch_class: int
    frequency: float
    label: str


@dataclass(frozen=True)
class Scale:
    """A multi-octave chromatic scale under one temperament."""

    temperament: Temperament
    base_frequency: float
    octaves: int
    notes: tuple[ScaleNote, ...]

    def __len__(self) -> int:
        return len(self.notes)

    def frequencies(self) -> list[float]:
        return [note.frequency for note in self.notes]

    def labels(self) -> list[str]:
        return [note.label for note in self.notes]


def build_scale(
    temperament: Temperament,
    base_frequency: float = C1_FREQUENCY,
    octaves: int = DEFAULT_OCTAVES,
) -> Scale:
    """Build the 12-notes-per-octave chromatic scale over `octaves` octaves.

    Note (o, p) has frequency base * 2**o * ratios[p]; the power of two is
    exact in binary floating point, so octave doubling holds bit-for-bit.
    Labels count octaves from 1, matching the C1 starting convention.
    """
    if base_frequency <= 0:
        raise ValueError(f"base frequency must be positive, got {base_frequency}")
    if octaves < 1:
        raise ValueError(f"octave count must be at least 1, got {octaves}")
    notes = []
    for octave in range(octaves):
        for pitch_class, ratio in enumerate(temperament.ratios):
            index = 12 * octave + pitch_class
            notes.append(ScaleNote(
                index=index,
                octave=octave,
                pitch_class=pitch_class,
                frequency=base_frequency * 2.0**octave * ratio,
                label=f"{PITCH_CLASS_NAMES[pitch_class]}{octave + 1}",
            ))
    return Scale(temperament, base_frequency, octaves, tuple(notes))
