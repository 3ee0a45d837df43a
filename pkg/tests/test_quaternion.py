import numpy as np
import pytest

from dqqpft.quaternion import (
    I,
    J,
    K,
    ONE,
    Quaternion,
    conjugate,
    embed_complex,
    mul,
    norm,
    norm_sq,
    qconj,
    qmul,
    qnorm_sq,
    scalar_part,
    symplectic_join,
    symplectic_split,
)


def rand_q(rng):
    return Quaternion(*rng.uniform(-3, 3, size=4))


def test_hamilton_table():
    assert I * J == K
    assert J * I == -K
    assert J * K == I
    assert K * I == J
    assert I * I == -ONE
    assert J * J == -ONE
    assert K * K == -ONE
    assert I * J * K == -ONE


def test_mul_identity_and_hand_example():
    rng = np.random.default_rng(0)
    for _ in range(20):
        q = rand_q(rng)
        assert ONE * q == q
        assert q * ONE == q
    # (1 + i) * j expands to j + k by the table
    assert (ONE + I) * J == Quaternion(0, 0, 1, 1)


def test_noncommutativity_witness():
    assert mul(I, J) == -mul(J, I)


def test_conjugate_sign_pattern():
    q = Quaternion(1, 1, 1, 1)
    assert conjugate(q) == Quaternion(1, -1, -1, -1)


def test_conjugate_is_anti_involution():
    rng = np.random.default_rng(1)
    for _ in range(50):
        p, q = rand_q(rng), rand_q(rng)
        assert conjugate(conjugate(p)) == p
        lhs = conjugate(p * q)
        rhs = conjugate(q) * conjugate(p)
        assert (lhs - rhs).norm() < 1e-12 * max(lhs.norm(), 1.0)
    # concrete instance: conj(i*j) = -k = conj(j)*conj(i)
    assert conjugate(I * J) == -K
    assert conjugate(J) * conjugate(I) == -K


def test_norm_examples():
    assert norm_sq(Quaternion(1, 1, 1, 1)) == 4.0
    assert norm_sq(Quaternion()) == 0.0
    assert norm(Quaternion(3, 0, 4, 0)) == 5.0


def test_norm_is_multiplicative():
    rng = np.random.default_rng(2)
    for _ in range(100):
        p, q = rand_q(rng), rand_q(rng)
        got = norm_sq(p * q)
        want = norm_sq(p) * norm_sq(q)
        assert got == pytest.approx(want, rel=1e-12)
        assert norm(p * q) == pytest.approx(norm(p) * norm(q), rel=1e-12)


def test_scalar_part_cyclic_symmetry():
    rng = np.random.default_rng(3)
    for _ in range(100):
        f, g, h = rand_q(rng), rand_q(rng), rand_q(rng)
        s = scalar_part(f * g * h)
        assert scalar_part(h * f * g) == pytest.approx(s, abs=1e-12 * max(1.0, abs(s)))
        assert scalar_part(g * h * f) == pytest.approx(s, abs=1e-12 * max(1.0, abs(s)))


def test_symplectic_split_examples():
    t, h = symplectic_split(Quaternion(1, 2, 3, 4))
    assert t == 1 + 2j
    assert h == 3 - 4j
    # j * (3 - 4i) = 3j + 4k reassembles the (y, z) part
    assert symplectic_join(t, h) == Quaternion(1, 2, 3, 4)
    assert symplectic_split(Quaternion(2.5)) == (2.5 + 0j, 0j)
    assert symplectic_join(0j, 0j) == Quaternion()


def test_symplectic_roundtrips():
    rng = np.random.default_rng(4)
    for _ in range(100):
        q = rand_q(rng)
        assert symplectic_join(*symplectic_split(q)) == q
        t = complex(*rng.uniform(-3, 3, size=2))
        h = complex(*rng.uniform(-3, 3, size=2))
        assert symplectic_split(symplectic_join(t, h)) == (t, h)


def test_complex_embedding_is_ring_homomorphism():
    rng = np.random.default_rng(5)
    for _ in range(50):
        a = complex(*rng.uniform(-2, 2, size=2))
        b = complex(*rng.uniform(-2, 2, size=2))
        prod = embed_complex(a) * embed_complex(b)
        want = embed_complex(a * b)
        assert (prod - want).norm() < 1e-12
        assert embed_complex(a) + embed_complex(b) == embed_complex(a + b)


def test_embedded_complex_commutes_past_j_with_conjugation():
    rng = np.random.default_rng(6)
    for _ in range(50):
        c = complex(*rng.uniform(-2, 2, size=2))
        assert embed_complex(c) * J == J * embed_complex(c.conjugate())


def test_qmul_matches_scalar_product():
    rng = np.random.default_rng(7)
    p = rng.uniform(-2, 2, size=(5, 3, 4))
    q = rng.uniform(-2, 2, size=(5, 3, 4))
    got = qmul(p, q)
    for idx in np.ndindex(5, 3):
        want = Quaternion.from_array(p[idx]) * Quaternion.from_array(q[idx])
        np.testing.assert_allclose(got[idx], want.to_array(), rtol=0, atol=0)


def test_qconj_and_qnorm_sq():
    rng = np.random.default_rng(8)
    q = rng.uniform(-2, 2, size=(4, 4, 4))
    c = qconj(q)
    np.testing.assert_array_equal(c[..., 0], q[..., 0])
    np.testing.assert_array_equal(c[..., 1:], -q[..., 1:])
    np.testing.assert_allclose(qnorm_sq(q), np.sum(q * q, axis=-1), rtol=1e-15)
