from __future__ import annotations

from fractions import Fraction as F

import pytest

from qzeta.monodromy import (
    CyclotomicProduct,
    degree,
    euler_phi,
    is_eigenvalue_pole,
    phi_multiplicity,
    yomdin_charpoly,
)
from qzeta.resolution import YomdinParams


def test_charpoly_313():
    cp = yomdin_charpoly(YomdinParams(3, 1, 2, 3, 3))
    assert cp.factors == ((1, -1), (3, 1), (4, 1), (8, -1), (12, -1), (24, 1))
    assert degree(cp) == 10
    assert str(cp) == (
        "(t^3 - 1) * (t^4 - 1) * (t^24 - 1)"
        " / ((t - 1) * (t^8 - 1) * (t^12 - 1))"
    )
    # the survivors are the primitive parts of orders 3 and 24
    assert cp.expand() == [1, 1, 1, 0, -1, -1, -1, 0, 1, 1, 1]


def test_charpoly_degree_identity():
    for m in range(2, 7):
        for k in range(1, 5):
            for p, q in ((2, 3), (2, 5), (3, 4), (3, 5)):
                y = YomdinParams(m, k, p, q, 1)
                assert degree(yomdin_charpoly(y)) == (m - 1) ** 3 + k * (p - 1) * (
                    q - 1
                )


def test_charpoly_213():
    cp = yomdin_charpoly(YomdinParams(2, 1, 2, 3, 1))
    assert cp.factors == ((1, -1), (2, -1), (3, 1), (6, -1), (9, -1), (18, 1))
    assert cp.degree() == 3
    with pytest.raises(ValueError):
        cp.expand()  # the order-1 part has multiplicity -2


def test_phi_multiplicity():
    c6 = CyclotomicProduct.from_dict({6: 1})
    assert [c6.phi_multiplicity(o) for o in (1, 2, 3, 6, 4)] == [1, 1, 1, 1, 0]
    cp = yomdin_charpoly(YomdinParams(3, 1, 2, 3, 3))
    assert phi_multiplicity(cp, 1) == 0
    assert phi_multiplicity(cp, 3) == 1
    assert phi_multiplicity(cp, 24) == 1
    assert phi_multiplicity(cp, 8) == 0
    with pytest.raises(ValueError):
        cp.phi_multiplicity(0)


def test_is_eigenvalue_pole():
    cp = yomdin_charpoly(YomdinParams(3, 1, 2, 3, 3))
    assert is_eigenvalue_pole(cp, F(-35, 24))
    assert is_eigenvalue_pole(cp, F(-5, 3))
    assert not is_eigenvalue_pole(cp, -1)  # unit eigenvalue is absent here


def test_expand_basics():
    assert CyclotomicProduct.from_dict({2: 1, 1: -1}).expand() == [1, 1]
    assert CyclotomicProduct.from_dict({1: 1}).expand() == [-1, 1]
    assert CyclotomicProduct.from_dict({2: 0}).expand() == [1]
    with pytest.raises(ValueError):
        CyclotomicProduct.from_dict({3: 1, 2: -1}).expand()  # remainder
    with pytest.raises(ValueError):
        CyclotomicProduct.from_dict({2: -1}).expand()  # negative degree
    with pytest.raises(ValueError):
        CyclotomicProduct.from_dict({300: 1}).expand()  # over the limit


def test_from_dict_merges_and_validates():
    c = CyclotomicProduct.from_dict({4: 2})
    assert c.factors == ((4, 2),)
    assert str(CyclotomicProduct.from_dict({3: 1, 1: -1})) == "(t^3 - 1) / (t - 1)"
    assert str(CyclotomicProduct.from_dict({})) == "1"
    with pytest.raises(ValueError):
        CyclotomicProduct.from_dict({0: 1})


def test_euler_phi():
    assert [euler_phi(n) for n in (1, 2, 6, 12, 97)] == [1, 1, 2, 4, 96]
    for M in range(1, 101):
        assert sum(euler_phi(j) for j in range(1, M + 1) if M % j == 0) == M
