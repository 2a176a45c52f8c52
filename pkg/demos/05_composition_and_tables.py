"""
Composition and comparison tables
=================================

Running the bandit optimizer on a hill-climbing result can lift single
coordinates past 114.  The comparison table sorts S-boxes by ACNV.
"""

# %%
from sboxopt import BanditConfig, HillClimbConfig, bandit_optimize, hill_climb, random_sbox
from sboxopt.report import ComparisonTable

hill = hill_climb(random_sbox(8, 4), HillClimbConfig(seed=4))
both = bandit_optimize(hill.final_sbox, BanditConfig(seed=4))
print(hill.final_metrics.coordinate_nls, float(hill.final_metrics.acnv))
print(both.final_metrics.coordinate_nls, float(both.final_metrics.acnv))

# %%
from sboxopt.corpus import corpus_list, corpus_sbox
rows = [(k, corpus_sbox(k)) for k, _ in corpus_list()]
rows += [("hill seed 4", hill.final_sbox), ("hill+bandit seed 4", both.final_sbox)]
table = ComparisonTable.from_sboxes(rows)
print(table.render())

# %%
# The same table as csv, ready for a spreadsheet.
print(table.render("csv"))
