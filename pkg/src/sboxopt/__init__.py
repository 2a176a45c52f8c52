"""Linear-cryptanalytic analysis of bijective S-boxes and optimization of
their average coordinate nonlinearity (ACNV)."""

__version__ = "0.1.0"

from .sbox import (InvalidSBoxError, SBox, apply_transposition, bit_swap_inputs,
                   parse_sbox, read_sbox, serialize_sbox, write_sbox)
from .spectral import (acnv, coordinate_nonlinearities, coordinate_truth_table, lat,
                       nonlinearity_of, sac, sbox_nonlinearity, walsh_transform)
from .fitness import (FitnessConfig, evaluate, evaluate_after_bit_swap,
                      evaluate_coordinate)
from .hill import HillClimbConfig, RunTrace, hill_climb, random_sbox
from .bandit import (BanditConfig, BanditModel, bandit_optimize, build_model,
                     choose_bandit)
from .corpus import corpus_get, corpus_list
from .report import AnalysisReport, ComparisonTable, analyze
