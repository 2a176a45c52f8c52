"""
Bandit reformulation of coordinate-nonlinearity optimization.

Each coordinate ``j`` is a bandit with ``2^(n-1)`` arms.  Arm ``p`` is the
(n-1)-bit pattern obtained by deleting bit ``j`` (MSB-first) from an output
value; pulling it exchanges the two outputs that re-insert 0 and 1 at that
position.  Such a swap flips two truth-table bits of coordinate ``j`` and
leaves every other coordinate untouched, so a bandit's state (spectrum,
fitness, nonlinearity) only changes when its own arms are pulled.

The default strategy always plays the bandit with the lowest nonlinearity,
breaking ties uniformly at random, and pulls a uniformly random arm.  A
pull is kept only if it strictly lowers that bandit's share of E(S).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .fitness import power_table, swap_spectrum_update
from .hill import RunTrace, make_rng
from .report import analyze
from .sbox import SBox, arm_outputs, check_frozen_prefix
from .spectral import coordinate_spectra


def default_bandit_stall(n: int) -> int:
    return n << (n - 1)


@dataclass(frozen=True)
class BanditConfig:
    magnitude: int = 10
    seed: int = 0
    max_stall: int | None = None  # None -> n * 2^(n-1)
    freeze: int = 0  # not part of the original method; off by default
    max_iterations: int | None = None

    def __post_init__(self):
        if self.max_stall is not None and self.max_stall < 1:
            raise ValueError("max_stall must be >= 1")
        if self.magnitude < 1:
            raise ValueError("magnitude must be >= 1")

    def stall_limit(self, n: int) -> int:
        return default_bandit_stall(n) if self.max_stall is None else self.max_stall


@dataclass(frozen=True)
class BanditState:
    coordinate: int
    coordinate_nl: int
    coordinate_fitness: int
    spectrum: np.ndarray


class BanditModel:
    """Working S-box plus cached per-coordinate spectra, fitness and NL."""

    def __init__(self, s: SBox, magnitude: int = 10, freeze: int = 0):
        self.n = s.n
        self.size = s.size
        self.magnitude = magnitude
        self.freeze = check_frozen_prefix(freeze, s.n)
        self._table = power_table(s.n, magnitude)
        self._dlut = s.dlut.copy()
        self._inv = s.inverse.copy()
        self._spectra = coordinate_spectra(s)
        self._fitness = self._table.spectrum_fitness(self._spectra)
        self._nls = [(self.size - int(m)) // 2 for m in np.abs(self._spectra).max(axis=1)]
        self._legal = None
        if self.freeze:
            frozen = np.zeros(self.size, dtype=bool)
            frozen[self._dlut[:self.freeze]] = True
            self._legal = []
            for j in range(1, self.n + 1):
                arms = [p for p in range(self.n_arms)
                        if not any(frozen[v] for v in arm_outputs(self.n, j, p))]
                self._legal.append(np.array(arms, dtype=np.int64))

    @property
    def n_bandits(self) -> int:
        return self.n

    @property
    def n_arms(self) -> int:
        return self.size >> 1

    @property
    def sbox(self) -> SBox:
        return SBox(self._dlut)

    @property
    def nonlinearities(self) -> list[int]:
        return list(self._nls)

    @property
    def fitness(self) -> int:
        return sum(self._fitness)

    def coordinate_fitness(self, j: int) -> int:
        return self._fitness[self._row(j)]

    def bandit(self, j: int) -> BanditState:
        r = self._row(j)
        return BanditState(j, self._nls[r], self._fitness[r], self._spectra[r].copy())

    def legal_arms(self, j: int) -> np.ndarray:
        if self._legal is None:
            return np.arange(self.n_arms)
        return self._legal[self._row(j)]

    def arm_inputs(self, j: int, arm: int) -> tuple[int, int]:
        v0, v1 = arm_outputs(self.n, j, arm)
        return int(self._inv[v0]), int(self._inv[v1])

    def _row(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise ValueError(f"bandit {j} outside [1, {self.n}]")
        return j - 1

    def activate(self, j: int, arm: int) -> bool:
        """Pull ``arm`` of bandit ``j``; keep the swap only if the bandit's fitness drops.

        Returns whether the move was kept.  A rejected pull leaves the model
        unchanged, as does an arm touching a frozen input.
        """
        r = self._row(j)
        v0, v1 = arm_outputs(self.n, j, arm)
        x0, x1 = int(self._inv[v0]), int(self._inv[v1])
        if x0 < self.freeze or x1 < self.freeze:
            return False
        # v0 carries a 0 in bit j, so f_j(x0) = 0 before the swap
        new_spec = swap_spectrum_update(self._spectra[r], x0, x1, 0, self.n)
        new_fit = self._table.spectrum_fitness(new_spec)
        if new_fit >= self._fitness[r]:
            return False
        self._dlut[x0], self._dlut[x1] = v1, v0
        self._inv[v0], self._inv[v1] = x1, x0
        self._spectra[r] = new_spec
        self._fitness[r] = new_fit
        self._nls[r] = (self.size - int(np.abs(new_spec).max())) // 2
        return True

    def check_coherence(self) -> None:
        """Raise ``AssertionError`` if any cached bandit state disagrees with recomputation."""
        s = self.sbox
        assert np.array_equal(self._inv[self._dlut], np.arange(self.size))
        fresh = coordinate_spectra(s)
        assert np.array_equal(fresh, self._spectra), "cached spectra are stale"
        assert self._table.spectrum_fitness(fresh) == self._fitness, "cached fitness is stale"
        nls = [(self.size - int(m)) // 2 for m in np.abs(fresh).max(axis=1)]
        assert nls == self._nls, "cached nonlinearities are stale"


def build_model(s: SBox, magnitude: int = 10, freeze: int = 0) -> BanditModel:
    return BanditModel(s, magnitude, freeze)


def choose_bandit(model: BanditModel, rng: np.random.Generator) -> int:
    """Bandit (1-based coordinate) with the lowest nonlinearity; ties broken at random."""
    nls = model.nonlinearities
    low = min(nls)
    ties = [j + 1 for j, v in enumerate(nls) if v == low]
    if len(ties) == 1:
        return ties[0]
    return ties[int(rng.integers(len(ties)))]


Strategy = Callable[[BanditModel, np.random.Generator], int]


def bandit_optimize(start: SBox, cfg: BanditConfig | None = None,
                    strategy: Strategy = choose_bandit) -> RunTrace:
    """Run the bandit optimizer until ``max_stall`` consecutive rejected pulls.

    The returned trace's ``fitness_history`` holds ``(iteration, E(S))``
    after each kept move and ``coordinate_history`` holds
    ``(iteration, bandit, bandit fitness)``.
    """
    cfg = cfg or BanditConfig()
    model = BanditModel(start, cfg.magnitude, cfg.freeze)
    if cfg.freeze:
        empty = [j for j in range(1, model.n + 1) if len(model.legal_arms(j)) == 0]
        if empty:
            raise ValueError(f"freeze={cfg.freeze} leaves bandits {empty} without a legal arm")
    rng = make_rng(cfg.seed)
    max_stall = cfg.stall_limit(model.n)
    max_iter = cfg.max_iterations

    initial = model.fitness
    history: list[tuple[int, int]] = []
    per_bandit: list[tuple[int, int, int]] = []
    it = accepted = stall = 0
    while stall < max_stall and (max_iter is None or it < max_iter):
        j = strategy(model, rng)
        arms = model.legal_arms(j)
        arm = int(arms[rng.integers(len(arms))])
        it += 1
        if model.activate(j, arm):
            accepted += 1
            stall = 0
            history.append((it, model.fitness))
            per_bandit.append((it, j, model.coordinate_fitness(j)))
        else:
            stall += 1

    final = model.sbox
    return RunTrace(
        algorithm="bandit",
        seed=cfg.seed,
        iterations=it,
        accepted=accepted,
        initial_fitness=initial,
        final_fitness=model.fitness,
        final_sbox=final,
        final_metrics=analyze(final, magnitude=cfg.magnitude),
        stop_reason="stall" if stall >= max_stall else "max_iterations",
        fitness_history=history,
        coordinate_history=per_bandit,
    )
