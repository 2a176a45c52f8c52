import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import sboxes
from oracles import (brute_nonlinearity, coordinate_bits, naive_lat_hamming,
                     naive_sac_average, naive_walsh)
from sboxopt.sbox import SBox
from sboxopt.spectral import (acnv, component_truth_table, coordinate_nonlinearities,
                              coordinate_truth_table, lat, nonlinearity_of, sac,
                              sbox_nonlinearity, walsh_transform)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_walsh_exhaustive_small(n):
    size = 1 << n
    tables = np.array(list(itertools.product((0, 1), repeat=size)), dtype=np.uint8)
    fast = walsh_transform(tables)
    for t, w in zip(tables, fast):
        assert w.tolist() == naive_walsh(t.tolist())


def test_walsh_batch_matches_rows(rng):
    t = rng.integers(0, 2, size=(5, 64))
    batch = walsh_transform(t)
    for row, w in zip(t, batch):
        assert np.array_equal(walsh_transform(row), w)


@given(st.lists(st.integers(0, 1), min_size=32, max_size=32))
def test_walsh_parseval(bits):
    w = walsh_transform(np.array(bits))
    assert int((w.astype(np.int64) ** 2).sum()) == 32 * 32


def test_walsh_rejects_bad_length():
    with pytest.raises(ValueError):
        walsh_transform(np.zeros(6, dtype=np.uint8))


def test_coordinate_convention_msb_first():
    # coordinate 1 is the most significant output bit
    s = SBox([4, 0, 1, 2, 3, 5, 6, 7])
    assert coordinate_truth_table(s, 1).tolist() == [1, 0, 0, 0, 0, 1, 1, 1]
    assert coordinate_truth_table(s, 3).tolist() == [0, 0, 1, 0, 1, 1, 0, 1]
    assert component_truth_table(s, 4).tolist() == coordinate_truth_table(s, 1).tolist()


def test_lat_equals_hamming_definition_sampled(rng):
    # the exhaustive n=3 sweep lives in the acceptance suite
    for n in (3, 4):
        for _ in range(20):
            perm = rng.permutation(1 << n).tolist()
            assert lat(SBox(perm)).tolist() == naive_lat_hamming(perm, n)


@given(sboxes(3, 4))
def test_lat_properties(s):
    table = lat(s)
    half = s.size >> 1
    assert table[0, 0] == half
    assert not table[1:, 0].any() and not table[0, 1:].any()
    assert (table % 2 == 0).all() if s.n > 2 else True


@given(sboxes(3, 5))
def test_nonlinearity_matches_brute_force(s):
    nls = coordinate_nonlinearities(s)
    assert nls == [brute_nonlinearity(coordinate_bits(s.tolist(), s.n, j))
                   for j in range(1, s.n + 1)]
    assert acnv(s) == Fraction(sum(nls), s.n)
    assert sbox_nonlinearity(s) <= min(nls)


def test_identity_metrics():
    s = SBox.identity(8)
    assert coordinate_nonlinearities(s) == [0] * 8
    assert sbox_nonlinearity(s) == 0
    assert acnv(s) == 0


def test_bent_function_nonlinearity():
    # x1x2 + x3x4 is bent: NL = 2^(n-1) - 2^(n/2-1) = 6
    t = [((x >> 3) & (x >> 2) & 1) ^ ((x >> 1) & x & 1) for x in range(16)]
    assert nonlinearity_of(np.array(t)) == 6


@given(sboxes(3, 6))
def test_sac_matches_oracle(s):
    matrix, average = sac(s)
    assert average == naive_sac_average(s.tolist(), s.n)
    assert len(matrix) == s.n and all(0 <= v <= 1 for row in matrix for v in row)


def test_corpus_spectral_values_frozen(frozen):
    from sboxopt.corpus import corpus_sbox
    for name, exp in frozen.items():
        s = corpus_sbox(name)
        assert coordinate_nonlinearities(s) == exp["coordinate_nls"], name
        assert sac(s)[1] == Fraction(exp["sac_average"]), name
