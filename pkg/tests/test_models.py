from fractions import Fraction

import pytest

from almoststretched import (
    ModelLabel,
    NotUnitError,
    OutOfTheoremError,
    ParamError,
    Series,
    classify,
    couple_params,
    enumerate_models,
    equal_spans,
    hilbert,
    ideal_from_a,
    label_ideal,
    model_ideal,
    parse_expr,
    socle_dimension,
    span_ideal,
    type_check,
)


def test_couple_params_regularity():
    assert couple_params(3, 8, 4).regular
    p = couple_params(2, 6, 3)
    assert not p.regular and p.r_star == 1
    p = couple_params(2, 10, 5)
    assert not p.regular and p.r_star == 2
    assert couple_params(2, 5, 3).regular


def test_couple_params_errors():
    with pytest.raises(ParamError):
        couple_params(1, 6, 3)
    with pytest.raises(ParamError):
        couple_params(2, 6, 1)
    with pytest.raises(ParamError):
        couple_params(2, 3, 3)


def test_model_ideal_display_2_6_3():
    p = couple_params(2, 6, 3)
    pres = model_ideal(p, 1, 1)
    want = [parse_expr("x2^2 - x1^2*x2 - x1^4", 2, 6), parse_expr("x1^3*x2", 2, 6)]
    assert list(pres.gens) == want


def test_model_ideal_display_3_8_4():
    p = couple_params(3, 8, 4)
    for n in range(4):
        pres = model_ideal(p, n, 1)
        want = [
            parse_expr("x1*x3", 3, 8),
            parse_expr("x2*x3", 3, 8),
            parse_expr("x3^2 - x1^8", 3, 8),
            parse_expr(f"x2^2 - x1^{n + 1}*x2 - x1^5", 3, 8),
            parse_expr("x1^4*x2", 3, 8),
        ]
        assert list(pres.gens) == want


def test_model_ideal_absorbed_twist_at_2_5_3():
    p = couple_params(2, 5, 3)
    pres = model_ideal(p, 2, 1)
    assert list(pres.gens) == [
        parse_expr("x2^2 - x1^3*x2 - x1^3", 2, 5),
        parse_expr("x1^3*x2", 2, 5),
    ]
    # the twist term is absorbed by x1^3*x2
    other = span_ideal(
        [parse_expr("x2^2 - x1^3", 2, 5), parse_expr("x1^3*x2", 2, 5)]
    )
    assert equal_spans(pres.span(), other)


def test_model_ideal_rejects_non_unit():
    p = couple_params(2, 6, 3)
    with pytest.raises(NotUnitError):
        model_ideal(p, 1, Series.variable(2, 6, 1))


def test_high_twist_drops_from_span():
    # with p >= t-1 the span agrees with the twist-free display
    for (h, s, t) in [(2, 6, 3), (3, 8, 4)]:
        p = couple_params(h, s, t)
        for tw in (t - 1, t, t + 2):
            with_twist = model_ideal(p, tw, 1).span()
            x1 = Series.variable(h, s, 1)
            x2 = Series.variable(h, s, 2)
            dropped = list(model_ideal(p, tw, 1).gens)
            dropped[-2] = x2 * x2 - x1 ** (s - t + 1)
            assert equal_spans(with_twist, span_ideal(dropped, h=h, N=s))


def test_ideal_from_a_zero_and_axis():
    p = couple_params(2, 6, 3)
    assert list(ideal_from_a(p, Series.zero(2, 6)).gens) == [
        parse_expr("x2^2 - x1^4", 2, 6),
        parse_expr("x1^3*x2", 2, 6),
    ]
    # a = x1 reproduces the p=1, z=1 model verbatim
    assert list(ideal_from_a(p, Series.variable(2, 6, 1)).gens) == list(
        model_ideal(p, 1, 1).gens
    )


def test_ideal_from_a_x2_classifies_to_top_sporadic():
    p = couple_params(2, 6, 3)
    assert classify(p, Series.variable(2, 6, 2)).label == ModelLabel.sporadic(2)


def test_ideal_from_a_high_degree_terms_are_irrelevant():
    p = couple_params(2, 6, 3)
    a = Series.variable(2, 6, 1)
    noisy = a + Series.variable(2, 6, 1) ** 5  # degree > s-2
    assert equal_spans(ideal_from_a(p, a).span(), ideal_from_a(p, noisy).span())


def test_enumerate_models():
    assert enumerate_models(couple_params(3, 8, 4)) == [
        ModelLabel.sporadic(r) for r in range(4)
    ]
    assert enumerate_models(couple_params(2, 6, 3)) == [
        ModelLabel.sporadic(0),
        ModelLabel.family(1, None, 0),
        ModelLabel.sporadic(2),
    ]
    assert enumerate_models(couple_params(2, 10, 5)) == [
        ModelLabel.sporadic(0),
        ModelLabel.sporadic(1),
        ModelLabel.family(2, None, 0),
        ModelLabel.family(2, None, 1),
        ModelLabel.sporadic(3),
        ModelLabel.sporadic(4),
    ]


def test_enumerate_models_out_of_range():
    with pytest.raises(OutOfTheoremError):
        enumerate_models(couple_params(2, 4, 3))


def test_all_enumerated_models_have_type_shape_and_gorenstein_socle():
    for (h, s, t) in [(2, 6, 3), (3, 8, 4), (2, 10, 5)]:
        p = couple_params(h, s, t)
        for label in enumerate_models(p):
            cs = [Fraction(1)] if label.kind == "sporadic" else [
                Fraction(1),
                Fraction(2),
                Fraction(-3),
                Fraction(1, 2),
            ]
            for c in cs:
                inst = label if label.kind == "sporadic" else ModelLabel.family(
                    label.r, c, label.d
                )
                U = label_ideal(p, inst).span()
                assert type_check(U, p)
                assert socle_dimension(U) == 1


def test_label_validation():
    p = couple_params(2, 6, 3)
    with pytest.raises(ParamError):
        ModelLabel.sporadic(3).validate(p)
    with pytest.raises(ParamError):
        ModelLabel.family(0, 1, 0).validate(p)  # family only at r* = 1
    with pytest.raises(ParamError):
        ModelLabel.family(1, 1, 1).validate(p)  # d beyond t-r-2 = 0


def test_socle_degree_t_plus_one_display_ideals():
    # s = t+1 constructors (three displayed shapes) are presentable and typed;
    # classification for them is deliberately not attempted
    p = couple_params(2, 5, 4)
    displays = [
        ["x2^2 - x1^2", "x1^4*x2"],
        ["x2^2 - x1^3", "x1^5 - x1^4*x2"],
        ["x2^2 - x1^4", "x1^5 - x1^4*x2"],
        ["x2^2", "x1^5 - x1^4*x2"],
    ]
    for d in displays:
        U = span_ideal([parse_expr(g, 2, 5) for g in d])
        assert type_check(U, p)
        assert hilbert(U) == (1, 2, 2, 2, 2, 1)
