"""
Magnitude-weighted fitness over the coordinate columns of the LAT.

    E(S) = sum over coordinates j, sum over input masks a, |LAT[a, 2^(n-j)]|^M

Smaller is better.  Values are exact Python integers; for n = 8 and M = 10
they reach 2^81, so column sums are accumulated in numpy as 32-bit limbs
and recombined with Python's big integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .sbox import SBox, bit_swap_pair
from .spectral import coordinate_spectra, coordinate_truth_table, hadamard_signs, walsh_transform

LIMB_BITS = 32
_LIMB_MASK = (1 << LIMB_BITS) - 1


@dataclass(frozen=True)
class FitnessConfig:
    magnitude: int = 10

    def __post_init__(self):
        if int(self.magnitude) != self.magnitude or self.magnitude < 1:
            raise ValueError(f"magnitude must be a positive integer, got {self.magnitude!r}")


class PowerTable:
    """Exact ``v^M`` lookup for ``v`` in ``[0, 2^(n-1)]``, split into int64 limbs."""

    def __init__(self, n: int, magnitude: int):
        self.n = n
        self.magnitude = magnitude
        powers = [v ** magnitude for v in range((1 << (n - 1)) + 1)]
        self.powers = powers
        nlimbs = max(1, -(-powers[-1].bit_length() // LIMB_BITS))
        limbs = np.empty((nlimbs, len(powers)), dtype=np.int64)
        for k in range(nlimbs):
            limbs[k] = [(p >> (LIMB_BITS * k)) & _LIMB_MASK for p in powers]
        self.limbs = limbs
        self._shifts = [LIMB_BITS * k for k in range(nlimbs)]

    def combine(self, limb_sums) -> int:
        return sum(int(v) << sh for v, sh in zip(limb_sums, self._shifts))

    def spectrum_fitness(self, spectra) -> list[int]:
        """Fitness of each spectrum row in a ``(k, 2^n)`` stack (or of a single row)."""
        w = np.asarray(spectra)
        single = w.ndim == 1
        idx = np.abs(w.reshape(-1, w.shape[-1])) >> 1
        sums = self.limbs[:, idx].sum(axis=-1)  # (nlimbs, k)
        out = [self.combine(sums[:, r]) for r in range(idx.shape[0])]
        return out[0] if single else out


@lru_cache(maxsize=16)
def power_table(n: int, magnitude: int) -> PowerTable:
    return PowerTable(n, magnitude)


def _cfg(cfg: FitnessConfig | None) -> FitnessConfig:
    return cfg if cfg is not None else FitnessConfig()


def evaluate(s: SBox, cfg: FitnessConfig | None = None) -> int:
    """E(S) summed over all n coordinate columns, every row included."""
    table = power_table(s.n, _cfg(cfg).magnitude)
    return sum(table.spectrum_fitness(coordinate_spectra(s)))


def evaluate_coordinate(s: SBox, j: int, cfg: FitnessConfig | None = None) -> int:
    """The share of E(S) contributed by coordinate ``j``'s LAT column."""
    table = power_table(s.n, _cfg(cfg).magnitude)
    return table.spectrum_fitness(walsh_transform(coordinate_truth_table(s, j)))


def swap_spectrum_update(spectrum: np.ndarray, x0: int, x1: int, bit_x0: int, n: int) -> np.ndarray:
    """Spectrum after exchanging truth-table values at ``x0`` and ``x1``.

    ``bit_x0`` is the function value at ``x0`` before the exchange; the
    value at ``x1`` is assumed to be its complement (otherwise nothing
    changes).  Each coefficient moves by 0 or +-4.
    """
    h = hadamard_signs(n)
    sign = 1 - 2 * bit_x0
    return spectrum - 2 * sign * (h[x0] - h[x1])


def bit_swap_spectrum(s: SBox, coordinate: int, arm: int, spectrum: np.ndarray | None = None):
    """Spectrum of ``coordinate`` after the bit swap ``(coordinate, arm)``, with the swapped inputs."""
    x0, x1 = bit_swap_pair(s, coordinate, arm)
    if spectrum is None:
        spectrum = walsh_transform(coordinate_truth_table(s, coordinate))
    bit_x0 = (int(s.dlut[x0]) >> (s.n - coordinate)) & 1
    return swap_spectrum_update(spectrum, x0, x1, bit_x0, s.n), (x0, x1)


def evaluate_after_bit_swap(s: SBox, coordinate: int, arm: int,
                            cfg: FitnessConfig | None = None,
                            spectrum: np.ndarray | None = None) -> int:
    """Coordinate fitness after ``bit_swap_inputs(s, coordinate, arm)``, without rebuilding the S-box.

    Pass the current spectrum of the coordinate to skip the transform.
    """
    new_spectrum, _ = bit_swap_spectrum(s, coordinate, arm, spectrum)
    return power_table(s.n, _cfg(cfg).magnitude).spectrum_fitness(new_spectrum)
