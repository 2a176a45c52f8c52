"""
Walsh spectra and nonlinearity
==============================

How the library turns an S-box into coordinate functions, spectra, a
linear approximation table, and the nonlinearity figures.
"""

# %%
# A bijective 4-bit S-box.  Coordinate 1 is the most significant output bit.
import numpy as np
from sboxopt import SBox, coordinate_truth_table, walsh_transform, lat
from sboxopt.spectral import coordinate_nonlinearities, sbox_nonlinearity, acnv, sac

x = SBox([15, 14, 9, 2, 11, 3, 12, 4, 1, 13, 7, 8, 6, 10, 5, 0])
for j in range(1, x.n + 1):
    print(j, coordinate_truth_table(x, j))

# %%
# The fast transform works along the last axis, so a stack of truth tables
# is transformed in one call.
tables = np.array([coordinate_truth_table(x, j) for j in range(1, 5)])
spectra = walsh_transform(tables)
print(spectra)
# Parseval: every row has squared norm 2^(2n)
print((spectra ** 2).sum(axis=1))

# %%
# LAT[a, c] is half the Walsh coefficient of the component <c, S(x)> at a.
# Coordinate j lives in column 2^(n-j).
table = lat(x)
print(table[:, 8])          # coordinate 1
print(spectra[0] // 2)      # the same numbers

# %%
# Nonlinearity of the S-box (over every nonzero component) versus the
# per-coordinate values and their average.
print("NL  ", sbox_nonlinearity(x))
print("NLs ", coordinate_nonlinearities(x))
print("ACNV", acnv(x))
print("SAC ", sac(x)[1])

# %%
# On an 8-bit S-box the same calls take milliseconds.
from sboxopt.corpus import corpus_sbox
aes = corpus_sbox("aes")
print(sbox_nonlinearity(aes), coordinate_nonlinearities(aes), acnv(aes))
