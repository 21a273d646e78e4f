import pytest
from hypothesis import assume, given, strategies as st
from math import gcd

from cycliccurves.families import (
    ASPower,
    ASRational,
    DegenerateModel,
    Homma,
    Hyperelliptic,
    Kummer,
    NotPrimitive,
    PrimitivePair,
    cyclic_order,
    generator,
    genus,
    identity_descriptor,
    kummer_genus,
    kummer_signature,
)
from cycliccurves.ramification import rh_genus_tame


@st.composite
def primitive_pairs_st(draw, max_n=80):
    n = draw(st.integers(3, max_n))
    r = draw(st.integers(1, n - 2))
    s = draw(st.integers(1, n - 1 - r))
    assume(gcd(gcd(r, s), n) == 1)
    return n, r, s


# --- primitive pairs and the Kummer genus ----------------------------------


def test_primitive_pair_validation():
    PrimitivePair(5, 1, 3)
    with pytest.raises(NotPrimitive):
        PrimitivePair(4, 2, 2)
    with pytest.raises(NotPrimitive):
        PrimitivePair(5, 0, 1)
    with pytest.raises(NotPrimitive):
        PrimitivePair(5, 3, 2)  # r + s = n


def test_kummer_genus_examples():
    assert kummer_genus(5, 1, 1) == 2
    assert kummer_genus(6, 1, 2) == 1
    assert kummer_genus(6, 1, 1) == 2
    assert kummer_genus(8, 1, 3) == 2


@given(primitive_pairs_st())
def test_kummer_genus_symmetry(nrs):
    n, r, s = nrs
    assert kummer_genus(n, r, s) == kummer_genus(n, s, r)


@given(primitive_pairs_st(), st.integers(1, 79))
def test_kummer_genus_unit_invariance(nrs, u):
    n, r, s = nrs
    assume(gcd(u, n) == 1)
    ru, su = u * r % n, u * s % n
    assume(1 <= ru and 1 <= su and ru + su <= n - 1)
    assert kummer_genus(n, ru, su) == kummer_genus(n, r, s)


@given(primitive_pairs_st())
def test_sasaki_inequality(nrs):
    n, r, s = nrs
    assert n >= 2 * kummer_genus(n, r, s) + 1


def test_kummer_signature_examples():
    assert kummer_signature(6, 1, 1).indices == (3, 6, 6)
    assert kummer_signature(5, 1, 1).indices == (5, 5, 5)
    assert kummer_signature(8, 1, 3).indices == (2, 8, 8)
    assert kummer_signature(6, 1, 1).g0 == 0


def test_signature_and_genus_formula_agree_exhaustively():
    from cycliccurves.classify import primitive_pairs

    for n in range(3, 41):
        for pair in primitive_pairs(n):
            sig = kummer_signature(n, pair.r, pair.s)
            assert rh_genus_tame(n, 0, sig) == kummer_genus(n, pair.r, pair.s)


# --- model constructors and genus formulas ----------------------------------


def test_model_genus_examples():
    assert genus(ASPower(5, 2, 1, 0)) == 2
    assert cyclic_order(ASPower(5, 2, 1, 0)) == 10
    assert genus(Homma(5)) == 2
    assert cyclic_order(Homma(5)) == 5
    assert genus(Hyperelliptic(2, 2)) == 2
    assert cyclic_order(Hyperelliptic(2, 2)) == 6
    assert genus(ASRational(5, 1, 1, -1)) == 4
    assert cyclic_order(ASRational(5, 1, 1, -1)) == 10
    assert genus(Kummer.of(5, 1, 1)) == 2


def test_degenerate_models_rejected():
    with pytest.raises(DegenerateModel):
        Homma(3)  # genus 1
    with pytest.raises(DegenerateModel):
        Kummer.of(6, 1, 2)  # genus 1
    with pytest.raises(DegenerateModel):
        Hyperelliptic(3, 2)  # odd genus
    with pytest.raises(DegenerateModel):
        Hyperelliptic(2, 1)
    with pytest.raises(DegenerateModel):
        ASPower(3, 2, 1, 0)  # p = 3 excluded
    with pytest.raises(DegenerateModel):
        ASPower(5, 10, 1, 0)  # m not coprime to p
    with pytest.raises(DegenerateModel):
        ASPower(5, 2, 0, 0)
    with pytest.raises(DegenerateModel):
        ASRational(5, 1, 0, 1)
    with pytest.raises(DegenerateModel):
        ASRational(7, 1, 1, -7)  # c is zero mod p


def test_symbolic_parameters_allowed():
    assert genus(Hyperelliptic(4, "lambda")) == 4
    assert genus(ASPower(7, 3, "a", "b")) == 6
    assert not ASPower(7, 3, "a", "b").is_concrete()
    assert ASPower(7, 3, 1, 0).is_concrete()


@given(st.sampled_from([5, 7, 11, 13]), st.integers(2, 12))
def test_aspower_order_strictly_exceeds_bound(p, m):
    assume(gcd(p, m) == 1)
    model = ASPower(p, m, 1, 0)
    assert 2 * genus(model) + 1 < cyclic_order(model)


@given(st.sampled_from([5, 7, 11, 13, 17]))
def test_homma_attains_bound_exactly(p):
    model = Homma(p)
    assert 2 * genus(model) + 1 == cyclic_order(model)


@given(st.integers(1, 15), st.integers(2, 40))
def test_hyperelliptic_genus_is_parameter_free(half_g, lam):
    g = 2 * half_g
    assume(lam not in (0, 1))
    assert genus(Hyperelliptic(g, lam)) == g
    assert cyclic_order(Hyperelliptic(g, lam)) == 2 * g + 2


# --- generators --------------------------------------------------------------


def test_generator_descriptors():
    d = generator(Kummer.of(5, 1, 1))
    assert d.order == 5 and d.zeta_order == 5

    d = generator(Hyperelliptic(2, 3))
    assert d.order == 6 and d.zeta_order == 3

    d = generator(ASPower(5, 2, 1, 0))
    assert d.order == 10 and d.zeta_order == 2

    d = generator(ASRational(5, 1, 1, -1))
    assert d.order == 10 and d.zeta_order is None

    d = generator(Homma(7))
    assert d.order == 7 and d.zeta_order is None

    assert identity_descriptor().order == 1


def test_generator_order_matches_cyclic_order():
    models = [Kummer.of(7, 1, 2), Hyperelliptic(4, 5), ASPower(7, 2, 3, 1),
              ASRational(7, 2, 1, -1), Homma(11)]
    for model in models:
        assert generator(model).order == cyclic_order(model)
