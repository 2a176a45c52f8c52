"""
The fitness function E(S)
=========================

E(S) sums |LAT entry|^M over the n coordinate columns.  Large magnitudes
M punish the few largest correlations hardest, which is what limits the
coordinate nonlinearity.
"""

# %%
from sboxopt import SBox, FitnessConfig, evaluate, evaluate_coordinate
from sboxopt.corpus import corpus_sbox

ident = SBox.identity(8)
print(evaluate(ident) == 2 ** 73)           # each column is a single 128

# %%
# With M = 2 the value is the same for every bijective S-box (Parseval).
for name in ("aes", "paper_sc", "skipjack"):
    print(name, evaluate(corpus_sbox(name), FitnessConfig(2)))

# %%
# Values exceed 64 bits, so they come back as Python integers.
sc = corpus_sbox("paper_sc")
total = evaluate(sc)
print(total, total.bit_length())
print([evaluate_coordinate(sc, j) for j in range(1, 9)])

# %%
# Lower E goes with higher coordinate nonlinearity, but only loosely.
from sboxopt.hill import random_sbox
from sboxopt.spectral import acnv
for seed in range(5):
    s = random_sbox(8, seed)
    print(seed, float(acnv(s)), evaluate(s))
print("S_c", float(acnv(sc)), total)
