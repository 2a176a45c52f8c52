"""
Stochastic hill climbing over random transpositions.

A proposal exchanges two DLUT entries chosen uniformly among the mutable
positions; it is kept only if it strictly lowers E(S).  The run stops after
``max_stall`` consecutive rejections.  The default stall bound is
``N(N-1)/4`` with ``N = 2^n`` DLUT entries: half of the ``C(N, 2)``
single-transposition neighbours.

Random numbers come from numpy's PCG64 seeded with ``seed``, so runs are
reproducible bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .fitness import power_table
from .report import AnalysisReport, analyze
from .sbox import MAX_N, MIN_N, SBox, check_frozen_prefix
from .spectral import coordinate_spectra, hadamard_signs

_BATCH = 4096


def make_rng(seed: int) -> np.random.Generator:
    """The generator used throughout the package: PCG64 from a 64-bit seed."""
    if not 0 <= seed < 2 ** 64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def default_hill_stall(n: int) -> int:
    size = 1 << n
    return size * (size - 1) // 4


@dataclass(frozen=True)
class HillClimbConfig:
    magnitude: int = 10
    freeze: int = 0
    max_stall: int | None = None  # None -> N(N-1)/4
    seed: int = 0
    max_iterations: int | None = None

    def __post_init__(self):
        if self.max_stall is not None and self.max_stall < 1:
            raise ValueError("max_stall must be >= 1")
        if self.magnitude < 1:
            raise ValueError("magnitude must be >= 1")
        if self.max_iterations is not None and self.max_iterations < 0:
            raise ValueError("max_iterations must be >= 0")

    def stall_limit(self, n: int) -> int:
        return default_hill_stall(n) if self.max_stall is None else self.max_stall


@dataclass
class RunTrace:
    algorithm: str
    seed: int
    iterations: int
    accepted: int
    initial_fitness: int
    final_fitness: int
    final_sbox: SBox = field(repr=False)
    final_metrics: AnalysisReport | None = None
    stop_reason: str = "stall"
    fitness_history: list[tuple[int, int]] = field(default_factory=list, repr=False)
    coordinate_history: list[tuple[int, int, int]] | None = field(default=None, repr=False)

    def summary(self, with_history: bool = False) -> dict:
        d = {
            "algorithm": self.algorithm,
            "seed": self.seed,
            "iterations": self.iterations,
            "accepted": self.accepted,
            "stop_reason": self.stop_reason,
            "initial_fitness": str(self.initial_fitness),
            "final_fitness": str(self.final_fitness),
            "final_metrics": None if self.final_metrics is None else self.final_metrics.to_dict(),
        }
        if with_history:
            d["fitness_history"] = [[it, str(f)] for it, f in self.fitness_history]
            if self.coordinate_history is not None:
                d["coordinate_history"] = [[it, j, str(f)] for it, j, f in self.coordinate_history]
        return d


def random_sbox(n: int, seed: int) -> SBox:
    """Uniformly random bijective S-box (seeded Fisher-Yates shuffle)."""
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"unsupported dimension n={n}")
    return SBox(make_rng(seed).permutation(1 << n))


def hill_climb(start: SBox, cfg: HillClimbConfig | None = None,
               on_accept: Callable[[int, SBox], None] | None = None) -> RunTrace:
    """Minimise E(S) from ``start`` by random transpositions.

    ``on_accept(iteration, sbox)`` is called after each accepted move
    (costly; meant for tests and tracing).
    """
    cfg = cfg or HillClimbConfig()
    n, size = start.n, start.size
    k = check_frozen_prefix(cfg.freeze, n)
    mutable = size - k
    if mutable < 2:
        raise ValueError(f"freeze={k} leaves fewer than two mutable entries")
    max_stall = cfg.stall_limit(n)
    max_iter = cfg.max_iterations

    rng = make_rng(cfg.seed)
    table = power_table(n, cfg.magnitude)
    limbs = table.limbs
    h = hadamard_signs(n)

    dlut = start.dlut.copy()
    spectra = coordinate_spectra(start)
    fit = table.spectrum_fitness(spectra)
    initial = total = sum(fit)
    # rows (coordinate indices, MSB first) touched by an output difference
    rows_of = [np.array([n - 1 - b for b in range(n) if d >> b & 1], dtype=np.intp)
               for d in range(size)]
    shifts = np.arange(n - 1, -1, -1)

    history: list[tuple[int, int]] = []
    it = accepted = stall = 0
    pos = _BATCH
    while stall < max_stall and (max_iter is None or it < max_iter):
        if pos == _BATCH:
            first = rng.integers(0, mutable, _BATCH)
            second = rng.integers(0, mutable - 1, _BATCH)
            pos = 0
        i = k + int(first[pos])
        j = k + int(second[pos])
        pos += 1
        if j >= i:
            j += 1
        it += 1

        vi, vj = int(dlut[i]), int(dlut[j])
        rows = rows_of[vi ^ vj]
        sign = 1 - 2 * ((vi >> shifts[rows]) & 1)
        new_spec = spectra[rows] - (2 * sign)[:, None] * (h[i] - h[j])
        sums = limbs[:, np.abs(new_spec) >> 1].sum(axis=-1)
        new_fit = [table.combine(sums[:, r]) for r in range(len(rows))]
        old = sum(fit[r] for r in rows)
        new = sum(new_fit)
        if new < old:
            spectra[rows] = new_spec
            for r, f in zip(rows.tolist(), new_fit):
                fit[r] = f
            dlut[i], dlut[j] = vj, vi
            total += new - old
            accepted += 1
            stall = 0
            history.append((it, total))
            if on_accept is not None:
                on_accept(it, SBox(dlut))
        else:
            stall += 1

    final = SBox(dlut)
    return RunTrace(
        algorithm="hill",
        seed=cfg.seed,
        iterations=it,
        accepted=accepted,
        initial_fitness=initial,
        final_fitness=total,
        final_sbox=final,
        final_metrics=analyze(final, magnitude=cfg.magnitude),
        stop_reason="stall" if stall >= max_stall else "max_iterations",
        fitness_history=history,
    )
