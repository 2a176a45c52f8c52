"""
Walsh spectra, linear approximation tables and the derived S-box metrics.

Everything here is exact: spectra are int64 arrays and averages are
``fractions.Fraction``.

LAT layout: ``table[a, c]`` is the entry for input mask ``a`` and
component ``c`` (output mask), i.e. ``2^(n-1) - d_H(<a, x>, <c, S(x)>)``.
Coordinate ``j`` (MSB-first) is the component with mask ``2^(n-j)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .sbox import SBox


@lru_cache(maxsize=None)
def _parity_table(n: int) -> np.ndarray:
    par = np.zeros(1 << n, dtype=np.uint8)
    for b in range(n):
        par ^= ((np.arange(1 << n) >> b) & 1).astype(np.uint8)
    par.flags.writeable = False
    return par


@lru_cache(maxsize=8)
def hadamard_signs(n: int) -> np.ndarray:
    """``H[x, a] = (-1)^<a, x>`` as an int64 matrix (symmetric)."""
    size = 1 << n
    idx = np.arange(size)
    h = 1 - 2 * _parity_table(n)[idx[:, None] & idx[None, :]].astype(np.int64)
    h.flags.writeable = False
    return h


def coordinate_mask(n: int, j: int) -> int:
    """Output mask selecting coordinate ``j`` (1 = most significant bit)."""
    if not 1 <= j <= n:
        raise ValueError(f"coordinate {j} outside [1, {n}]")
    return 1 << (n - j)


def coordinate_truth_table(s: SBox, j: int) -> np.ndarray:
    """Truth table of coordinate ``j``: ``bits[x]`` = bit ``j`` (MSB-first) of ``S(x)``."""
    shift = s.n - j
    if not 1 <= j <= s.n:
        raise ValueError(f"coordinate {j} outside [1, {s.n}]")
    return ((s.dlut >> shift) & 1).astype(np.uint8)


def coordinate_truth_tables(s: SBox) -> np.ndarray:
    """All n coordinate truth tables, row ``j-1`` holding coordinate ``j``."""
    shifts = np.arange(s.n - 1, -1, -1)[:, None]
    return ((s.dlut[None, :] >> shifts) & 1).astype(np.uint8)


def component_truth_table(s: SBox, c: int) -> np.ndarray:
    """Truth table of the component ``x -> <c, S(x)>``."""
    if not 0 <= c < s.size:
        raise ValueError(f"component mask {c} outside [0, {s.size - 1}]")
    return _parity_table(s.n)[s.dlut & c]


def walsh_transform(t) -> np.ndarray:
    """Walsh-Hadamard spectrum ``W[a] = sum_x (-1)^(t[x] xor <a, x>)``.

    Accepts a single truth table or a stack of them (transform along the
    last axis).  Uses the in-place butterfly, O(n 2^n) per table.
    """
    bits = np.asarray(t)
    size = bits.shape[-1]
    if size == 0 or size & (size - 1):
        raise ValueError(f"truth table length {size} is not a power of two")
    w = 1 - 2 * bits.astype(np.int64)
    lead = w.shape[:-1]
    h = 1
    while h < size:
        w = w.reshape(*lead, size // (2 * h), 2, h)
        u = w[..., 0, :]
        v = w[..., 1, :]
        w = np.stack((u + v, u - v), axis=-2)
        h *= 2
    return w.reshape(*lead, size)


def nonlinearity_from_spectrum(spectrum) -> int:
    w = np.asarray(spectrum)
    return (w.shape[-1] - int(np.abs(w).max())) // 2


def nonlinearity_of(t) -> int:
    """Nonlinearity ``2^(n-1) - max_a |W[a]| / 2`` of a Boolean function."""
    return nonlinearity_from_spectrum(walsh_transform(t))


def coordinate_spectra(s: SBox) -> np.ndarray:
    """Walsh spectra of the n coordinates, shape ``(n, 2^n)``."""
    return walsh_transform(coordinate_truth_tables(s))


def component_spectra(s: SBox) -> np.ndarray:
    """Spectra of all components; row ``c`` is the spectrum of ``<c, S(x)>``."""
    size = s.size
    comps = _parity_table(s.n)[np.arange(size)[:, None] & s.dlut[None, :]]
    return walsh_transform(comps)


def lat(s: SBox) -> np.ndarray:
    """Linear approximation table, indexed ``[input mask, output mask]``."""
    return (component_spectra(s) // 2).T


def sbox_nonlinearity(s: SBox) -> int:
    """NL of the S-box: row 0 and column 0 of the LAT are excluded."""
    table = lat(s)
    return (s.size >> 1) - int(np.abs(table[1:, 1:]).max())


def coordinate_nonlinearities(s: SBox) -> list[int]:
    spectra = coordinate_spectra(s)
    return [(s.size - int(m)) // 2 for m in np.abs(spectra).max(axis=1)]


def acnv(s: SBox) -> Fraction:
    """Average coordinate nonlinearity, exact."""
    nls = coordinate_nonlinearities(s)
    return Fraction(sum(nls), len(nls))


def sac_matrix(s: SBox) -> list[list[Fraction]]:
    """Dependence matrix: ``m[i][j]`` = P(output bit j flips | input bit i flips).

    Both indices are 0-based positions counted from the MSB.
    """
    n, size = s.n, s.size
    x = np.arange(size)
    rows = []
    for i in range(n):
        diff = s.dlut ^ s.dlut[x ^ (1 << (n - 1 - i))]
        counts = [int(((diff >> (n - 1 - j)) & 1).sum()) for j in range(n)]
        rows.append([Fraction(c, size) for c in counts])
    return rows


def sac(s: SBox) -> tuple[list[list[Fraction]], Fraction]:
    """Strict avalanche matrix and its mean over all n^2 cells."""
    m = sac_matrix(s)
    total = sum((v for row in m for v in row), Fraction(0))
    return m, total / (s.n * s.n)
