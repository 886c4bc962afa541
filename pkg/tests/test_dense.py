import numpy as np
import pytest

from bladesim import (
    CapacityError,
    DenseMultivector,
    DimensionMismatchError,
    dense,
    dense_gp,
    local_blade,
    reverse_dense,
    reverse_string,
    string_mul,
    tensor,
    vacuum,
)
from oracles import dense_matrix, random_blade_string, random_dense


def test_dense_gp_matches_matrix_oracle():
    rng = np.random.default_rng(2)
    for n in (1, 2, 3):
        for _ in range(30):
            a = random_dense(n, rng)
            b = random_dense(n, rng)
            lhs = dense_matrix(dense_gp(a, b))
            rhs = dense_matrix(a) @ dense_matrix(b)
            assert np.allclose(lhs, rhs, atol=1e-10)


def test_dense_gp_reproduces_string_mul_exactly():
    rng = np.random.default_rng(13)
    for n in (1, 2, 3):
        for _ in range(60):
            a = random_blade_string(n, rng)
            b = random_blade_string(n, rng)
            got = dense_gp(DenseMultivector.from_blade_string(a), DenseMultivector.from_blade_string(b))
            assert got == DenseMultivector.from_blade_string(string_mul(a, b))


def test_dense_gp_identity_and_vacuum():
    rng = np.random.default_rng(4)
    one = DenseMultivector.scalar(2, 1.0)
    x = random_dense(2, rng)
    assert dense_gp(x, one) == x
    assert dense_gp(one, x) == x
    p2 = vacuum(2)
    assert dense_gp(p2, p2) == p2


def test_dense_gp_associative():
    rng = np.random.default_rng(6)
    for _ in range(20):
        a, b, c = (random_dense(2, rng) for _ in range(3))
        lhs = dense_gp(dense_gp(a, b), c)
        rhs = dense_gp(a, dense_gp(b, c))
        assert np.allclose(lhs.c, rhs.c, atol=1e-12)


def test_tensor_of_idempotents():
    p = vacuum(1)
    p2 = tensor(p, p)
    assert p2 == vacuum(2)
    expected = np.zeros(16)
    expected[[0, 1, 4, 5]] = 0.25  # 1, e1 on qubit 0, e1 on qubit 1, both
    assert np.array_equal(p2.c, expected)


def test_tensor_embedding_and_associativity():
    rng = np.random.default_rng(8)
    x = random_dense(1, rng)
    emb = tensor(x, DenseMultivector.scalar(1, 1.0))
    assert np.array_equal(emb.c[:4], x.c)
    assert emb.n == 2
    a, b, c = random_dense(1, rng), random_dense(1, rng), random_dense(2, rng)
    lhs, rhs = tensor(tensor(a, b), c), tensor(a, tensor(b, c))
    assert np.allclose(lhs.c, rhs.c, atol=1e-14)


def test_tensor_multiplicative_coefficients():
    rng = np.random.default_rng(14)
    a, b = random_dense(1, rng), random_dense(2, rng)
    t = tensor(a, b)
    for ia in range(4):
        for ib in range(16):
            assert t.c[ia | (ib << 2)] == a.c[ia] * b.c[ib]


def test_tensor_respects_product_structure():
    # (a1 (x) b1) * (a2 (x) b2) = (a1 a2) (x) (b1 b2)
    rng = np.random.default_rng(15)
    a1, a2 = random_dense(1, rng), random_dense(1, rng)
    b1, b2 = random_dense(1, rng), random_dense(1, rng)
    lhs = dense_gp(tensor(a1, b1), tensor(a2, b2))
    rhs = tensor(dense_gp(a1, a2), dense_gp(b1, b2))
    assert np.allclose(lhs.c, rhs.c, atol=1e-12)


def test_reverse_dense_matches_strings_and_dagger():
    rng = np.random.default_rng(10)
    for _ in range(50):
        b = random_blade_string(3, rng)
        lhs = reverse_dense(DenseMultivector.from_blade_string(b))
        assert lhs == DenseMultivector.from_blade_string(reverse_string(b))
    for _ in range(20):
        a = random_dense(2, rng)
        assert np.allclose(dense_matrix(reverse_dense(a)), dense_matrix(a).conj().T, atol=1e-12)


def test_reverse_dense_antiautomorphism():
    rng = np.random.default_rng(12)
    a, b = random_dense(2, rng), random_dense(2, rng)
    lhs = reverse_dense(dense_gp(a, b))
    rhs = dense_gp(reverse_dense(b), reverse_dense(a))
    assert np.allclose(lhs.c, rhs.c, atol=1e-12)


def test_local_blade_layout():
    lb = local_blade(3, 1, 3, 2.0)
    assert lb.c[3 << 2] == 2.0
    assert np.count_nonzero(lb.c) == 1
    with pytest.raises(ValueError):
        local_blade(2, 2, 1)
    with pytest.raises(ValueError):
        local_blade(2, 0, 4)


def test_capacity_limits():
    dense.set_oracle_cap(3)
    with pytest.raises(CapacityError):
        vacuum(4)
    with pytest.raises(CapacityError):
        dense_gp(DenseMultivector.zero(4), DenseMultivector.zero(4))
    dense.set_oracle_cap(4)
    assert vacuum(4).n == 4
    with pytest.raises(ValueError):
        dense.set_oracle_cap(dense.HARD_CAP + 1)
    with pytest.raises(ValueError):
        dense.set_oracle_cap(0)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        dense_gp(DenseMultivector.zero(1), DenseMultivector.zero(2))
