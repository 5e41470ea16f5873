import pytest
from hypothesis import given, strategies as st

from fmqchar.cartan import make_algebra
from fmqchar.monomial import (MonomialParseError, YMonomial, a_monomial_inverse, apply_a_inverses,
                              is_dominant, is_i_dominant, parse, project_to_node, render,
                              solve_a_factorization, weight)

monomials = st.dictionaries(
    st.tuples(st.integers(1, 4), st.integers(-12, 12)),
    st.integers(-3, 3).filter(bool), max_size=8).map(YMonomial)


def test_unit_and_inverse():
    y = YMonomial.var(1, 0)
    assert y * ~y == YMonomial.unit()
    assert not YMonomial.unit()
    assert YMonomial({(1, 2): 0}) == YMonomial.unit()


def test_pow():
    assert YMonomial.var(1, 2) ** 2 == parse("Y[1,2]^2")
    assert YMonomial.var(1, 2) ** 0 == YMonomial.unit()


def test_c3_first_descendant(C3):
    m_plus = parse("Y[1,4] Y[2,1] Y[3,-2]")
    m1 = m_plus * a_monomial_inverse(C3, 3, 0)
    assert m1 == parse("Y[1,4] Y[2,-1] Y[2,1]^2 Y[3,2]^-1")


def test_a_inverse_formulas(A2, C2, C3):
    for k in (-3, 0, 5):
        assert a_monomial_inverse(A2, 1, k) == YMonomial({(1, k - 1): -1, (1, k + 1): -1, (2, k): 1})
        assert a_monomial_inverse(A2, 2, k) == YMonomial({(2, k - 1): -1, (2, k + 1): -1, (1, k): 1})
        assert a_monomial_inverse(C2, 1, k) == YMonomial({(1, k - 1): -1, (1, k + 1): -1, (2, k): 1})
        assert a_monomial_inverse(C2, 2, k) == YMonomial(
            {(2, k - 2): -1, (2, k + 2): -1, (1, k - 1): 1, (1, k + 1): 1})
        assert a_monomial_inverse(C3, 2, k) == YMonomial(
            {(2, k - 1): -1, (2, k + 1): -1, (1, k): 1, (3, k): 1})
        assert a_monomial_inverse(C3, 3, k) == YMonomial(
            {(3, k - 2): -1, (3, k + 2): -1, (2, k - 1): 1, (2, k + 1): 1})


def test_g2_triple_term():
    G2 = make_algebra("G", 2)
    # the long node sees the short one through C_12 = -3
    assert a_monomial_inverse(G2, 2, 0) == YMonomial(
        {(2, -3): -1, (2, 3): -1, (1, -2): 1, (1, 0): 1, (1, 2): 1})


def test_weights(A2, C3):
    assert weight(A2, parse("Y[1,2] Y[2,-1]")) == (1, 1)
    assert weight(C3, parse("Y[1,2] Y[2,-1] Y[2,3]^-1 Y[3,2]")) == (1, 0, 1)
    assert weight(C3, YMonomial.unit()) == (0, 0, 0)


def test_dominance_predicates():
    m4 = parse("Y[1,2] Y[2,-1] Y[2,3]^-1 Y[3,2]")
    assert not is_dominant(m4)
    assert is_i_dominant(m4, 1)
    assert not is_i_dominant(m4, 2)
    assert is_dominant(parse("Y[2,-1] Y[2,1]"))
    u = YMonomial.unit()
    assert is_dominant(u) and all(is_i_dominant(u, i) for i in range(1, 4))


def test_projection():
    assert project_to_node(parse("Y[1,2] Y[2,-1]"), 1).exps == {2: 1}
    m1 = parse("Y[1,4] Y[2,-1] Y[2,1]^2 Y[3,2]^-1")
    assert project_to_node(m1, 2).exps == {-1: 1, 1: 2}
    assert project_to_node(YMonomial.unit(), 2).exps == {}


def test_parse_examples():
    assert parse("Y[1,4] Y[2,1] Y[3,-2]").exps == {(1, 4): 1, (2, 1): 1, (3, -2): 1}
    assert parse("Y[2,-1] Y[2,1]").exps == {(2, -1): 1, (2, 1): 1}
    assert parse("") == YMonomial.unit()
    assert parse("  Y[1,0]^2\tY[1,0]^-2 ") == YMonomial.unit()


@pytest.mark.parametrize("text,pos", [("Y[1,0] X", 7), ("Y[0,1]", 0), ("Y[1,0]^0", 7), ("Y[1,0]Y[1,2]", 6)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(MonomialParseError) as exc:
        parse(text)
    assert exc.value.pos == pos


def test_render_order():
    assert render(parse("Y[3,-2] Y[1,4] Y[2,1]^-1")) == "Y[1,4] Y[2,1]^-1 Y[3,-2]"


@given(monomials)
def test_round_trip(m):
    assert parse(render(m)) == m


@given(monomials, monomials)
def test_weight_is_a_homomorphism(m, n):
    spec = make_algebra("C", 4)
    w = weight(spec, m * n)
    assert w == tuple(a + b for a, b in zip(weight(spec, m), weight(spec, n)))


@given(monomials, monomials, monomials)
def test_group_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a / a == YMonomial.unit()


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_a_inverse_never_dominant(name):
    spec = make_algebra(name)
    for i in spec.nodes:
        for k in range(-4, 5):
            m = a_monomial_inverse(spec, i, k)
            assert not m.is_dominant() and not m.is_i_dominant(i)


lattice_words = st.lists(st.tuples(st.integers(1, 3), st.integers(-6, 6)), max_size=7)


@given(lattice_words)
def test_solve_a_factorization_recovers_exponents(word):
    spec = make_algebra("C", 3)
    m_plus = parse("Y[1,4] Y[2,1] Y[3,-2]")
    m = apply_a_inverses(spec, m_plus, word)
    expected = {}
    for key in word:
        expected[key] = expected.get(key, 0) + 1
    assert solve_a_factorization(spec, m_plus, m) == dict(sorted(expected.items()))


def test_solve_a_factorization_rejects_off_lattice(C3):
    assert solve_a_factorization(C3, YMonomial.unit(), parse("Y[1,0]")) is None
    assert solve_a_factorization(C3, YMonomial.unit(), parse("Y[1,0]^-1")) is None


def test_c3_named_monomials(C3):
    m_plus = parse("Y[1,4] Y[2,1] Y[3,-2]")
    named = {
        "Y[1,4] Y[2,-1] Y[2,1]^2 Y[3,2]^-1": [(3, 0)],
        "Y[1,2] Y[1,4] Y[2,-1] Y[2,1] Y[2,3]^-1": [(2, 2), (3, 0)],
        "Y[1,2]^2 Y[1,4] Y[2,-1] Y[2,3]^-2 Y[3,2]": [(2, 2), (2, 2), (3, 0)],
        "Y[1,2] Y[2,-1] Y[2,3]^-1 Y[3,2]": [(1, 3), (2, 2), (2, 2), (3, 0)],
        "Y[2,-1] Y[2,1]": [(1, 3), (2, 2), (3, 0)],
        "Y[1,2] Y[1,4] Y[2,3]^-1 Y[3,-2] Y[3,2]": [(2, 2)],
    }
    for text, word in named.items():
        assert apply_a_inverses(C3, m_plus, word) == parse(text)
