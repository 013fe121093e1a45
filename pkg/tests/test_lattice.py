import random

import pytest

from similitude.lattice import (LatticeKey, hnf_contains, hnf_contains_lattice,
                                hnf_rows, lattice_key)


def random_unimodular_ops(rng, rows, steps=12):
    rows = [list(r) for r in rows]
    n = len(rows)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        f = rng.randint(-3, 3)
        rows[i] = [a + f * b for a, b in zip(rows[i], rows[j])]
        if rng.random() < 0.3:
            rows[i] = [-a for a in rows[i]]
    return rows


def test_hnf_is_canonical_under_row_operations():
    rng = random.Random(40)
    for _ in range(200):
        diag = [rng.randint(1, 5) for _ in range(4)]
        rows = [[0] * 4 for _ in range(4)]
        for i in range(4):
            rows[i][i] = diag[i]
            for j in range(i):
                rows[i][j] = rng.randint(0, diag[j] - 1)
        key = lattice_key(rows, 4)
        assert key.hnf == tuple(tuple(r) for r in rows)  # already normal
        scrambled = random_unimodular_ops(rng, rows)
        assert lattice_key(scrambled, 4) == key


def test_hnf_index_is_diagonal_product():
    key = lattice_key([(2, 0, 0, 0), (1, 3, 0, 0), (0, 1, 1, 0), (1, 1, 0, 5)], 4)
    assert key.index == 30


def test_rank_deficient_rejected():
    with pytest.raises(ValueError, match="full-rank"):
        hnf_rows([(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (2, 2, 0, 0)], 4)


def test_membership():
    h = hnf_rows([(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (1, 1, 1, 1)], 4)
    assert hnf_contains(h, (1, 1, 1, 1))
    assert hnf_contains(h, (2, 0, 0, 0))
    assert not hnf_contains(h, (1, 0, 0, 0))
    sub = hnf_rows([(4, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (1, 1, 1, 1)], 4)
    assert hnf_contains_lattice(h, sub)
    assert not hnf_contains_lattice(sub, h)


def test_key_shape_validation():
    with pytest.raises(ValueError, match="rank"):
        LatticeKey(4, ((1, 0), (0, 1)), 1)
