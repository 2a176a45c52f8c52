"""
Bijective (n, n) S-boxes: representation, the ``.sbx`` text format and the
two moves used by the optimizers.

Bit positions are numbered from 1 at the most significant bit.  Coordinate
``j`` of an S-box is bit ``j`` (MSB-first) of every output value.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

import numpy as np

MIN_N = 3
MAX_N = 16

_COMMENT = re.compile(r"#[^\n]*")
_HEX = re.compile(r"[0-9a-fA-F]+")


class InvalidSBoxError(ValueError):
    """Raised for malformed or non-bijective S-box data."""


class SBox:
    """Immutable bijective S-box stored as its output table (DLUT).

    ``dlut[x]`` is the output for input ``x``.  The inverse permutation is
    kept alongside so that the input producing a given output is found in
    constant time.
    """

    __slots__ = ("_dlut", "_inv", "_n")

    def __init__(self, values: Iterable[int]):
        dlut = np.array(list(values) if not isinstance(values, np.ndarray) else values,
                        dtype=np.int64).ravel()
        size = dlut.size
        if size == 0 or size & (size - 1):
            raise InvalidSBoxError(f"S-box length {size} is not a power of two")
        n = size.bit_length() - 1
        if not MIN_N <= n <= MAX_N:
            raise InvalidSBoxError(f"dimension n={n} outside supported range {MIN_N}..{MAX_N}")
        if dlut.min() < 0 or dlut.max() >= size:
            bad = int(dlut[(dlut < 0) | (dlut >= size)][0])
            raise InvalidSBoxError(f"output value {bad} out of range for n={n}")
        inv = np.full(size, -1, dtype=np.int64)
        inv[dlut] = np.arange(size, dtype=np.int64)
        if (inv < 0).any():
            counts = np.bincount(dlut, minlength=size)
            dup = int(np.flatnonzero(counts > 1)[0])
            raise InvalidSBoxError(f"value {dup:#x} appears {counts[dup]} times; S-box is not bijective")
        dlut.flags.writeable = False
        inv.flags.writeable = False
        self._dlut = dlut
        self._inv = inv
        self._n = n

    @classmethod
    def identity(cls, n: int) -> "SBox":
        return cls(np.arange(1 << n))

    @property
    def n(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        return self._dlut.size

    @property
    def dlut(self) -> np.ndarray:
        """Read-only view of the output table."""
        return self._dlut

    @property
    def inverse(self) -> np.ndarray:
        """Read-only inverse table: ``inverse[y]`` is the input mapping to ``y``."""
        return self._inv

    def tolist(self) -> list[int]:
        return self._dlut.tolist()

    def __len__(self) -> int:
        return self._dlut.size

    def __getitem__(self, x):
        if isinstance(x, slice):
            return self._dlut[x].tolist()
        return int(self._dlut[x])

    def __iter__(self):
        return iter(self._dlut.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SBox):
            return NotImplemented
        return self._n == other._n and bool(np.array_equal(self._dlut, other._dlut))

    def __hash__(self) -> int:
        return hash(self._dlut.tobytes())

    def __repr__(self) -> str:
        head = " ".join(f"{v:02x}" for v in self._dlut[:8])
        return f"SBox(n={self._n}, [{head} ...])"


def check_frozen_prefix(k: int, n: int) -> int:
    """Validate a frozen-prefix length for an n-bit S-box and return it."""
    if not 0 <= k < (1 << n):
        raise ValueError(f"frozen prefix {k} outside [0, {(1 << n) - 1}]")
    return k


def parse_sbox(text: str) -> SBox:
    """Parse ``.sbx`` text: ``#`` comments, whitespace-separated hex tokens.

    The dimension is inferred from the token count.
    """
    body = _COMMENT.sub(" ", text)
    tokens = body.split()
    if not tokens:
        raise InvalidSBoxError("no S-box tokens found")
    count = len(tokens)
    if count & (count - 1) or not MIN_N <= count.bit_length() - 1 <= MAX_N:
        raise InvalidSBoxError(
            f"token count {count} is not 2^n for a supported n ({MIN_N}..{MAX_N})")
    values = []
    for pos, tok in enumerate(tokens):
        if not _HEX.fullmatch(tok):
            raise InvalidSBoxError(f"token {pos} ({tok!r}) is not hexadecimal")
        values.append(int(tok, 16))
    return SBox(values)


def serialize_sbox(s: SBox, layout: str = "flat", header: str | None = None) -> str:
    """Render ``s`` as ``.sbx`` text.

    ``flat`` writes all tokens on one line.  ``grid16`` (n = 8 only) writes
    16 rows of 16 two-digit lowercase tokens, like the usual printed tables.
    """
    width = max(2, -(-s.n // 4))
    lines = []
    if header:
        lines.extend("# " + line if line else "#" for line in header.splitlines())
    if layout == "flat":
        lines.append(" ".join(f"{v:0{width}x}" for v in s.dlut.tolist()))
    elif layout == "grid16":
        if s.n != 8:
            raise ValueError(f"grid16 layout needs n=8, got n={s.n}")
        vals = s.dlut.tolist()
        for r in range(16):
            lines.append(" ".join(f"{v:02x}" for v in vals[16 * r:16 * r + 16]))
    else:
        raise ValueError(f"unknown layout {layout!r}")
    return "\n".join(lines) + "\n"


def read_sbox(path) -> SBox:
    with open(path, encoding="utf-8") as fh:
        return parse_sbox(fh.read())


def write_sbox(path, s: SBox, layout: str = "flat", header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_sbox(s, layout, header))


def apply_transposition(s: SBox, i: int, j: int) -> SBox:
    """Return a copy of ``s`` with the outputs at inputs ``i`` and ``j`` exchanged."""
    size = s.size
    if not (0 <= i < size and 0 <= j < size):
        raise IndexError(f"transposition ({i}, {j}) out of range for size {size}")
    if i == j:
        raise ValueError("transposition needs two distinct indices")
    dlut = s.dlut.copy()
    dlut[i], dlut[j] = dlut[j], dlut[i]
    return SBox(dlut)


def arm_outputs(n: int, coordinate: int, arm: int) -> tuple[int, int]:
    """Output pair ``(v0, v1)`` addressed by ``arm`` of the bandit for ``coordinate``.

    ``arm`` is the (n-1)-bit pattern left after deleting bit ``coordinate``
    (MSB-first); ``v0``/``v1`` re-insert a 0/1 at that position.
    """
    if not 1 <= coordinate <= n:
        raise ValueError(f"coordinate {coordinate} outside [1, {n}]")
    if not 0 <= arm < (1 << (n - 1)):
        raise ValueError(f"arm {arm} outside [0, {(1 << (n - 1)) - 1}]")
    b = n - coordinate
    low = arm & ((1 << b) - 1)
    v0 = ((arm >> b) << (b + 1)) | low
    return v0, v0 | (1 << b)


def bit_swap_pair(s: SBox, coordinate: int, arm: int) -> tuple[int, int]:
    """Inputs ``(x0, x1)`` whose outputs differ only in bit ``coordinate``, per ``arm``."""
    v0, v1 = arm_outputs(s.n, coordinate, arm)
    return int(s.inverse[v0]), int(s.inverse[v1])


def bit_swap_inputs(s: SBox, coordinate: int, arm: int) -> SBox:
    """Exchange the two outputs that differ only in bit ``coordinate``.

    Only the truth table of that coordinate changes (in two positions).
    """
    x0, x1 = bit_swap_pair(s, coordinate, arm)
    return apply_transposition(s, x0, x1)


def coerce_sbox(values: SBox | Sequence[int]) -> SBox:
    return values if isinstance(values, SBox) else SBox(values)
