"""
Slow reference implementations used as test oracles.

Nothing here imports the package: every quantity is computed straight
from its textbook definition with Python integers.
"""
from fractions import Fraction


def parity(v):
    return bin(v).count("1") & 1


def naive_walsh(table):
    """W[a] = sum_x (-1)^(f(x) + a.x), O(4^n)."""
    size = len(table)
    return [sum(1 - 2 * (table[x] ^ parity(a & x)) for x in range(size)) for a in range(size)]


def coordinate_bits(dlut, n, j):
    """Truth table of coordinate j (1 = most significant output bit)."""
    return [(y >> (n - j)) & 1 for y in dlut]


def naive_lat_hamming(dlut, n):
    """LAT[X][Y] = 2^(n-1) - d_H(X, Y) with X the linear input function and
    Y the output combination, both as truth tables."""
    size = 1 << n
    table = []
    for a in range(size):
        lin = [parity(a & x) for x in range(size)]
        row = []
        for c in range(size):
            comb = [parity(c & dlut[x]) for x in range(size)]
            dist = sum(u != v for u, v in zip(lin, comb))
            row.append((size >> 1) - dist)
        table.append(row)
    return table


def brute_nonlinearity(table):
    """Minimum Hamming distance to the 2^(n+1) affine functions."""
    size = len(table)
    best = size
    for a in range(size):
        lin = [parity(a & x) for x in range(size)]
        d = sum(u != v for u, v in zip(lin, table))
        best = min(best, d, size - d)
    return best


def naive_coordinate_nls(dlut, n):
    return [brute_nonlinearity(coordinate_bits(dlut, n, j)) for j in range(1, n + 1)]


def naive_fitness(dlut, n, magnitude, coordinates=None):
    """sum of |LAT|^M over the coordinate columns, from the Walsh definition."""
    total = 0
    for j in coordinates or range(1, n + 1):
        for w in naive_walsh(coordinate_bits(dlut, n, j)):
            total += abs(w // 2) ** magnitude
    return total


def naive_sac_average(dlut, n):
    size = 1 << n
    flips = 0
    for i in range(n):
        for x in range(size):
            flips += bin(dlut[x] ^ dlut[x ^ (1 << i)]).count("1")
    return Fraction(flips, n * n * size)


# classical S-boxes rebuilt from their algebraic descriptions

def _gf_mul(a, b):
    p = 0
    for _ in range(8):
        if b & 1:
            p ^= a
        hi = a & 0x80
        a = (a << 1) & 0xFF
        if hi:
            a ^= 0x1B
        b >>= 1
    return p


def aes_sbox():
    inv = [0] * 256
    for a in range(1, 256):
        for b in range(1, 256):
            if _gf_mul(a, b) == 1:
                inv[a] = b
                break

    def rotl(v, k):
        return ((v << k) | (v >> (8 - k))) & 0xFF

    return [b ^ rotl(b, 1) ^ rotl(b, 2) ^ rotl(b, 3) ^ rotl(b, 4) ^ 0x63 for b in inv]


def whirlpool_sbox():
    E = [0x1, 0xB, 0x9, 0xC, 0xD, 0x6, 0xF, 0x3, 0xE, 0x8, 0x7, 0x4, 0xA, 0x2, 0x5, 0x0]
    R = [0x7, 0xC, 0xB, 0xD, 0xE, 0x4, 0x9, 0xF, 0x6, 0x3, 0x8, 0xA, 0x2, 0x5, 0x1, 0x0]
    Ei = [E.index(i) for i in range(16)]
    out = []
    for u in range(256):
        a, b = E[u >> 4], Ei[u & 15]
        r = R[a ^ b]
        out.append((E[a ^ r] << 4) | Ei[b ^ r])
    return out


# the same definitions evaluated with numpy broadcasting, for exhaustive sweeps

def sign_matrix(n):
    """H[a, x] = (-1)^(a.x), built entry by entry from the dot product."""
    import numpy as np
    size = 1 << n
    return np.array([[1 - 2 * parity(a & x) for x in range(size)] for a in range(size)],
                    dtype=np.int64)


def naive_walsh_many(tables):
    """Row-wise W[a] = sum_x (-1)^f(x) (-1)^(a.x) as an explicit O(4^n) sum."""
    import numpy as np
    tables = np.asarray(tables, dtype=np.int64)
    n = tables.shape[-1].bit_length() - 1
    return (1 - 2 * tables) @ sign_matrix(n).T


def naive_lat_hamming_many(perms, n):
    """LAT[p, X, Y] = 2^(n-1) - d_H for a stack of S-boxes ``perms``."""
    import numpy as np
    size = 1 << n
    perms = np.asarray(perms, dtype=np.int64)
    par = np.array([parity(v) for v in range(size)], dtype=np.int8)
    lin = par[np.arange(size)[:, None] & np.arange(size)[None, :]]          # [a, x]
    comb = par[np.arange(size)[None, :, None] & perms[:, None, :]]          # [p, c, x]
    dist = (lin[None, :, None, :] != comb[:, None, :, :]).sum(axis=-1)      # [p, a, c]
    return (size >> 1) - dist
