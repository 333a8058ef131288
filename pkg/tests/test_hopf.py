import itertools

import pytest

from wcqsym.compositions import enumerate_compositions, parse_composition as C, weight
from wcqsym.hopf import (
    F, M, antipode, antipode_basis, antipode_coefficient, bialgebra_defect, binom,
    c_coefficient, convolution_left, convolution_right, coproduct, counit, f_to_m,
    lower_set, m_to_f, one, product, tensor_product,
)
from wcqsym.lincomb import LinComb
from wcqsym.monoid import EPS, NATURALS

ALPHA = C("(e,2,e^3)")
TWELVE = ["(e,2,e^3)", "(e,2,e^2)", "(e,2,e)", "(2,e^3)", "(2,e^2)", "(2,e)",
          "(e,1,1,e^3)", "(e,1,1,e^2)", "(e,1,1,e)", "(1,1,e^3)", "(1,1,e^2)", "(1,1,e)"]
F_COEFFS = [1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1]
M_COEFFS = [1, -2, 1, -1, 2, -1, -1, 2, -1, 1, -2, 1]


def lc(basis, pairs):
    return LinComb({C(k): c for k, c in pairs}, basis)


def test_binom_conventions():
    assert binom(-1, -1) == 1
    assert binom(3, -1) == 0 and binom(2, 3) == 0 and binom(-1, 0) == 0
    assert binom(4, 2) == 6


def test_products():
    assert product(M((1,)), M((2,)), NATURALS) == lc("M", [("(1,2)", 1), ("(2,1)", 1), ("(3)", 1)])
    assert product(M((EPS,)), M((EPS,))) == lc("M", [("(e,e)", 2), ("(e)", 1)])
    for a in enumerate_compositions(2, 2):
        assert product(one(), M(a)) == M(a) == product(M(a), one())


def test_product_rejects_f_basis():
    with pytest.raises(ValueError):
        product(F((1,)), M((1,)))


def test_coproduct_examples():
    assert coproduct(M(C("(e,2)"))) == LinComb(
        {((), (EPS, 2)): 1, ((EPS,), (2,)): 1, ((EPS, 2), ()): 1}, "M")
    assert coproduct(M(())) == LinComb({((), ()): 1}, "M")
    assert len(coproduct(M(C("(1,e,2)")))) == 4


def test_counit_examples():
    assert counit(M(())) == 1
    assert counit(M((EPS,))) == 0
    assert counit(M((), 3) + M((2,), 5)) == 3


def test_antipode_examples():
    assert antipode(M((2,))) == M((2,), -1)
    assert antipode(M(C("(e,1,e,2)"))) == lc("M", [
        ("(2,e,1,e)", 1), ("(2,1,e)", 2), ("(2,e,1)", 1),
        ("(3,e)", 1), ("(2,1)", 2), ("(3)", 1),
    ])
    assert antipode(M((EPS, EPS))) == lc("M", [("(e)", 1), ("(e,e)", 1)])


@pytest.mark.parametrize("n", range(1, 7))
def test_antipode_of_eps_power(n):
    expected = LinComb({(EPS,) * (i + 1): (-1) ** n * binom(n - 1, i) for i in range(n)}, "M")
    assert antipode(M((EPS,) * n)) == expected


def test_antipode_coefficient_examples():
    a = C("(e,1,e,2)")
    assert antipode_coefficient(a, C("(2,1,e)")) == 2
    assert antipode_coefficient(a, (3,)) == 1
    assert antipode_coefficient((2,), (1, 1)) == 0


def test_antipode_coefficient_matches_sum_small():
    comps = enumerate_compositions(3, 2)
    for a in comps:
        s = antipode_basis(a)
        for b in comps:
            assert antipode_coefficient(a, b) == s.coeff(b)


def test_antipode_is_involution(comps42):
    for a in comps42:
        assert antipode(antipode(M(a))) == M(a)


def test_c_coefficient_examples():
    assert c_coefficient(ALPHA, C("(e,2,e^2)")) == 2
    assert c_coefficient(ALPHA, ALPHA) == 1
    assert c_coefficient(ALPHA, C("(1,1,e)")) == 1
    assert c_coefficient(ALPHA, C("(1,1,e,2)")) == 0


def test_c_diagonal_and_lower_set(comps42):
    for a in comps42:
        assert c_coefficient(a, a) == 1
        ls = dict(lower_set(a))
        assert len(ls) == sum(1 for _ in lower_set(a))
        for b in comps42:
            assert ls.get(b, 0) == c_coefficient(a, b)


def test_f_to_m_twelve_terms():
    expected = lc("M", zip(TWELVE, F_COEFFS))
    assert f_to_m(F(ALPHA)) == expected
    assert len(expected) == 12


def test_m_to_f_twelve_terms():
    assert m_to_f(M(ALPHA)) == lc("F", zip(TWELVE, M_COEFFS))


def test_classical_basis_change():
    assert f_to_m(F((2, 1))) == lc("M", [("(2,1)", 1), ("(1,1,1)", 1)])
    assert m_to_f(M((2, 1))) == lc("F", [("(2,1)", 1), ("(1,1,1)", -1)])
    assert f_to_m(F(())) == M(())
    assert m_to_f(M(())) == F(())


def test_basis_change_round_trip(comps42):
    for a in comps42:
        assert m_to_f(f_to_m(F(a))) == F(a)
        assert f_to_m(m_to_f(M(a))) == M(a)


def _coassoc_sides(alpha):
    d = coproduct(M(alpha))
    left, right = {}, {}
    for (a, b), c in d.items():
        for (a1, a2), c1 in coproduct(M(a)).items():
            k = (a1, a2, b)
            left[k] = left.get(k, 0) + c * c1
        for (b1, b2), c2 in coproduct(M(b)).items():
            k = (a, b1, b2)
            right[k] = right.get(k, 0) + c * c2
    return left, right


def test_coassociative_and_counital(comps32):
    for a in comps32:
        lhs, rhs = _coassoc_sides(a)
        assert lhs == rhs
        d = coproduct(M(a))
        assert LinComb({r: c for (l, r), c in d.items() if l == ()}, "M") == M(a)
        assert LinComb({l: c for (l, r), c in d.items() if r == ()}, "M") == M(a)


def test_bialgebra_small(comps32):
    small = [a for a in comps32 if len(a) <= 2]
    for a, b in itertools.product(small, repeat=2):
        lhs = coproduct(product(M(a), M(b)))
        rhs = tensor_product(coproduct(M(a)), coproduct(M(b)))
        assert lhs == rhs
        assert not bialgebra_defect(a, b)


def test_convolution_identities(comps32):
    for a in comps32:
        expected = M((), counit(M(a)))
        assert convolution_left(M(a)) == expected
        assert convolution_right(M(a)) == expected


def test_antipode_preserves_weight_and_reverses_products(comps32):
    small = [a for a in comps32 if len(a) <= 2]
    for a in comps32:
        assert all(weight(b) == weight(a) for b in antipode(M(a)))
    for a, b in itertools.product(small, repeat=2):
        # S is an algebra map because the product is commutative
        assert antipode(product(M(a), M(b))) == product(antipode(M(a)), antipode(M(b)))
