"""Partial spectra of notes under harmonic or power-shifted anharmonic laws.

The n-th partial of a note with fundamental f1 sits at f1 * n**beta and has
amplitude exp(-alpha * n**beta).  beta = 1 recovers the harmonic series;
beta != 1 shifts the partials as real instruments do.  Partials above the
audible cutoff (20 kHz by default) are discarded.
"""

from dataclasses import dataclass, field

import numpy as np

from .scale import Scale

#: Upper limit of audible frequency in Hz.
AUDIBLE_CUTOFF = 20000.0

DEFAULT_ALPHA = 0.05

# Safety cap on partial counts; beta far below 1 makes the series explode.
_MAX_PARTIALS = 5_000_000


@dataclass(frozen=True)
class AnharmonicityLaw:
    """Partial-shift exponent beta and amplitude decay constant alpha."""

    beta: float = 1.0
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if self.alpha < 0:
            raise ValueError(f"alpha must be non-negative, got {self.alpha}")


def partial_multiplier(n: int, beta: float) -> float:
    """Frequency multiplier n**beta of the n-th partial (n >= 1)."""
    if n < 1:
        raise ValueError(f"partial index must be >= 1, got {n}")
    return float(n) ** beta


@dataclass(frozen=True)
class PartialSpectrum:
    """Frequencies and amplitudes of one note's partials, index n from 1."""

    fundamental: float
    frequencies: np.ndarray = field(repr=False)
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.frequencies.setflags(write=False)
        self.amplitudes.setflags(write=False)

    def __len__(self) -> int:
        return len(self.frequencies)

    @property
    def partials(self) -> list[tuple[float, float]]:
        """(frequency, amplitude) pairs in partial order."""
        return list(zip(self.frequencies.tolist(), self.amplitudes.tolist()))


def build_spectrum(
    fundamental: float,
    law: AnharmonicityLaw,
    cutoff: float = AUDIBLE_CUTOFF,
) -> PartialSpectrum:
    """All partials of `fundamental` under `law` with frequency <= cutoff."""
    if fundamental <= 0:
        raise ValueError(f"fundamental must be positive, got {fundamental}")
    if cutoff <= fundamental:
        raise ValueError(
            f"cutoff {cutoff} Hz leaves no audible partials above fundamental {fundamental} Hz"
        )
    # Closed-form bound on the largest n, then trim by the exact condition
    # so boundary partials are decided by direct comparison.
    estimate = int((cutoff / fundamental) ** (1.0 / law.beta)) + 2
    if estimate > _MAX_PARTIALS:
        raise ValueError(
            f"beta={law.beta} yields more than {_MAX_PARTIALS} partials below {cutoff} Hz"
        )
    n = np.arange(1, estimate + 1, dtype=np.float64)
    multipliers = n ** law.beta
    frequencies = fundamental * multipliers
    keep = frequencies <= cutoff
    multipliers = multipliers[keep]
    return PartialSpectrum(
        fundamental=fundamental,
        frequencies=frequencies[keep],
        amplitudes=np.exp(-law.alpha * multipliers),
    )


def scale_spectra(
    scale: Scale,
    law: AnharmonicityLaw,
    cutoff: float = AUDIBLE_CUTOFF,
) -> list[PartialSpectrum]:
    """Spectrum of every note in the scale, in note order."""
    return [build_spectrum(note.frequency, law, cutoff) for note in scale.notes]
