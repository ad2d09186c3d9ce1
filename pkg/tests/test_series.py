import random
from fractions import Fraction

import pytest
from util_oracles import rand_series, rand_substitution

from almoststretched import (
    AmbientError,
    BadSubstitutionError,
    NotUnitError,
    RootMismatchError,
    Series,
    Substitution,
    compose,
    invert,
    invert_substitution,
    nth_root,
    rational_nth_root,
    restrict_axis,
    substitute,
)


def x(i, h=2, N=6):
    return Series.variable(h, N, i)


def test_add_identity_and_inverse():
    f = x(1) + 2 * x(2) ** 2
    assert f + Series.zero(2, 6) == f
    assert x(1) + (-1) * x(1) == Series.zero(2, 6)


def test_exact_scaling():
    f = 2 * x(1) + 4 * x(2) ** 2
    assert Fraction(1, 2) * f == x(1) + 2 * x(2) ** 2


def test_mul_identity_and_difference_of_squares():
    f = x(1) + 3 * x(2)
    assert f * Series.one(2, 6) == f
    assert (x(1) + x(2)) * (x(1) - x(2)) == x(1) ** 2 - x(2) ** 2


def test_mul_truncates_above_N():
    f = x(1, 2, 2) + x(1, 2, 2) ** 2
    assert f * f == x(1, 2, 2) ** 2


def test_ambient_mismatch_raises():
    with pytest.raises(AmbientError):
        x(1, 2, 6) + x(1, 2, 5)
    with pytest.raises(AmbientError):
        x(1, 2, 6) * x(1, 3, 6)


def test_order():
    assert (Series.one(2, 6) + x(1)).order() == 0
    assert (x(1) ** 3 * x(2) - x(2) ** 5).order() == 4
    assert Series.zero(2, 6).order() == 7  # sentinel N+1


def test_order_on_products_of_monomials():
    rng = random.Random(1)
    for _ in range(20):
        e1 = [rng.randrange(3) for _ in range(2)]
        e2 = [rng.randrange(3) for _ in range(2)]
        f = Series.monomial(2, 6, e1, 3)
        g = Series.monomial(2, 6, e2, Fraction(-1, 2))
        assert (f * g).order() == min(sum(e1) + sum(e2), 7)


def test_order_superadditive_generally():
    rng = random.Random(2)
    for _ in range(20):
        f = rand_series(2, 6, rng)
        g = rand_series(2, 6, rng)
        assert (f * g).order() >= min(f.order() + g.order(), 7)


def test_invert_one():
    assert invert(Series.one(2, 6)) == Series.one(2, 6)


def test_invert_geometric_series():
    g = invert(Series.one(1, 5) - Series.variable(1, 5, 1))
    assert g == Series(1, 5, {(k,): Fraction(1) for k in range(6)})
    assert (Series.one(1, 5) - Series.variable(1, 5, 1)) * g == Series.one(1, 5)


def test_invert_non_unit_raises():
    with pytest.raises(NotUnitError):
        invert(x(1))


def test_invert_two_sided_and_involutive():
    rng = random.Random(3)
    for _ in range(15):
        f = rand_series(2, 6, rng, unit=True)
        g = invert(f)
        assert f * g == Series.one(2, 6)
        assert g * f == Series.one(2, 6)
        assert invert(g) == f


def test_nth_root_trivial():
    assert nth_root(Series.one(2, 6), 2, 1) == Series.one(2, 6)


def test_nth_root_square_of_one_plus_x():
    f = Series.one(2, 6) + x(1)
    g = nth_root(f, 2, 1)
    assert g * g == f
    assert g.coefficient((1, 0)) == Fraction(1, 2)
    assert g.coefficient((2, 0)) == Fraction(-1, 8)


def test_nth_root_negative_branch():
    f = Series.constant(2, 6, 4) + x(2)
    g = nth_root(f, 2, -2)
    assert g.constant_term() == -2
    assert g * g == f


def test_nth_root_errors():
    with pytest.raises(NotUnitError):
        nth_root(x(1), 2, 1)
    with pytest.raises(RootMismatchError):
        nth_root(Series.constant(2, 6, 2), 2, 1)


def test_nth_root_round_trip_many():
    rng = random.Random(4)
    for j in (2, 3, 5):
        for _ in range(50):
            alpha = Fraction(rng.choice([1, 2, 3, -1, -3]), rng.choice([1, 2]))
            if j % 2 == 0:
                alpha = abs(alpha)
            f = Series.constant(2, 5, alpha**j) + rand_series(2, 5, rng, terms=3)
            f = f - Series.constant(2, 5, f.constant_term()) + Series.constant(2, 5, alpha**j)
            g = nth_root(f, j, alpha)
            assert g**j == f
            assert g.constant_term() == alpha


def test_rational_nth_root():
    assert rational_nth_root(Fraction(9, 4), 2) == Fraction(3, 2)
    assert rational_nth_root(Fraction(-8, 27), 3) == Fraction(-2, 3)
    with pytest.raises(RootMismatchError):
        rational_nth_root(Fraction(5), 2)
    with pytest.raises(RootMismatchError):
        rational_nth_root(Fraction(-4), 2)


def test_substitute_identity_and_swap():
    f = x(1) * x(2) + x(1) ** 3
    assert substitute(f, Substitution.identity(2, 6)) == f
    swap = Substitution([x(2), x(1)])
    assert substitute(x(1) * x(2), swap) == x(1) * x(2)


def test_substitute_rescale_move():
    # y2 = (1 - x1) * x2 applied to x2^2, truncated at degree 3
    v = Series.one(2, 3) - Series.variable(2, 3, 1)
    phi = Substitution.rescale(2, 3, {2: v})
    got = substitute(Series.variable(2, 3, 2) ** 2, phi)
    want = Series(2, 3, {(0, 2): 1, (1, 2): -2})
    assert got == want


def test_substitute_is_ring_homomorphism():
    rng = random.Random(5)
    for _ in range(10):
        f = rand_series(2, 6, rng)
        g = rand_series(2, 6, rng)
        phi = rand_substitution(2, 6, rng)
        assert substitute(f + g, phi) == substitute(f, phi) + substitute(g, phi)
        assert substitute(f * g, phi) == substitute(f, phi) * substitute(g, phi)


def test_compose_identities_and_scaling():
    rng = random.Random(6)
    phi = rand_substitution(2, 6, rng)
    ident = Substitution.identity(2, 6)
    assert compose(phi, ident) == phi
    assert compose(ident, phi) == phi
    two = Substitution([2 * Series.variable(1, 4, 1)])
    three = Substitution([3 * Series.variable(1, 4, 1)])
    assert compose(two, three) == Substitution([6 * Series.variable(1, 4, 1)])


def test_compose_associative_and_matches_substitute():
    rng = random.Random(7)
    for _ in range(8):
        phi = rand_substitution(2, 5, rng)
        psi = rand_substitution(2, 5, rng)
        chi = rand_substitution(2, 5, rng)
        assert compose(compose(phi, psi), chi) == compose(phi, compose(psi, chi))
        f = rand_series(2, 5, rng)
        assert substitute(f, compose(phi, psi)) == substitute(substitute(f, phi), psi)


def test_invert_substitution():
    rng = random.Random(8)
    for _ in range(8):
        phi = rand_substitution(2, 6, rng)
        psi = invert_substitution(phi)
        assert compose(phi, psi) == Substitution.identity(2, 6)
        assert compose(psi, phi) == Substitution.identity(2, 6)


def test_substitution_invariants_enforced():
    with pytest.raises(BadSubstitutionError):
        Substitution([Series.one(2, 6), x(2)])  # nonzero constant term
    with pytest.raises(BadSubstitutionError):
        Substitution([x(1) + x(2), x(1) + x(2)])  # singular linear part


def test_restrict_axis():
    assert restrict_axis(x(1) ** 2 + x(1) * x(2)) == x(1) ** 2
    f = x(2, 3, 6) + Series.variable(3, 6, 3) ** 2
    assert restrict_axis(f) == Series.zero(3, 6)
    g = Series.constant(2, 6, 5) + x(1) ** 4 + x(2) * x(1) ** 4
    assert restrict_axis(g) == Series.constant(2, 6, 5) + x(1) ** 4
