import numpy as np
from hypothesis import given

from cubicacm.lattice import ELL, H, K, ZERO, DivisorClass, b, combine, degree, dot, gram_matrix
from strategies import classes


def test_basis_products():
    assert dot(ELL, ELL) == 1
    assert all(dot(b(i), b(i)) == -1 for i in range(1, 7))
    assert dot(b(1), b(2)) == 0 and dot(ELL, b(3)) == 0


def test_hyperplane_and_canonical():
    assert H == DivisorClass((3, -1, -1, -1, -1, -1, -1))
    assert dot(H, H) == 3 and degree(H) == 3
    assert K == -H and dot(K, K) == 3


def test_signature():
    eig = np.linalg.eigvalsh(gram_matrix().astype(float))
    assert (eig > 0).sum() == 1 and (eig < 0).sum() == 6


def test_arithmetic_and_sum():
    d = 2 * ELL - b(1)
    assert d == DivisorClass((2, -1, 0, 0, 0, 0, 0))
    assert sum([ELL, b(1), -b(1)]) == ELL
    assert combine([(2, ELL), (-1, b(1))]) == d
    assert (d - d).is_zero() and ZERO.is_zero()


@given(classes(), classes(), classes())
def test_bilinear_symmetric(x, y, z):
    assert dot(x, y) == dot(y, x)
    assert dot(x + y, z) == dot(x, z) + dot(y, z)
    assert dot(3 * x, y) == 3 * dot(x, y)
    assert dot(x, y) == int(np.array(x) @ gram_matrix() @ np.array(y))


@given(classes())
def test_degree_is_product_with_h(x):
    assert degree(x) == dot(x, H) == x.degree
    assert x.square == dot(x, x)
    # parity: D^2 + D.K is even
    assert (dot(x, x) + dot(x, K)) % 2 == 0


def test_wrong_rank_rejected():
    import pytest
    with pytest.raises(ValueError):
        DivisorClass((1, 2, 3))
