"""Worked-example suite: the classical desk-scale instances, run end to end.

Covers the couples (3,8,4), (2,6,3), (2,10,5) and the boundary case (2,5,3),
where the model list is still produced but two of its entries are provably
isomorphic; that explicit change of variables is re-checked here, together
with a hand product membership in the same quotient.
"""

from __future__ import annotations

from fractions import Fraction

from .classify import Certificate, verify_certificate
from .expr import parse_expr
from .models import ModelLabel, couple_params, enumerate_models, label_ideal, model_ideal
from .quotient import IdealPres, dimension, equal_spans, hilbert, span_ideal, type_check
from .series import Series, Substitution, substitute


def run_demo() -> list[tuple[str, bool, str]]:
    checks: list[tuple[str, bool, str]] = []

    def check(name: str, ok: bool, detail: str = ""):
        checks.append((name, bool(ok), detail))

    # ---- (3,8,4): regular couple, finitely many classes
    p = couple_params(3, 8, 4)
    labels = enumerate_models(p)
    check(
        "(3,8,4) regular with 4 sporadic classes",
        p.regular and labels == [ModelLabel.sporadic(r) for r in range(4)],
        f"regular={p.regular}, {len(labels)} classes",
    )
    expect = (1, 3, 2, 2, 2, 1, 1, 1, 1)
    ok = all(hilbert(label_ideal(p, lab).span()) == expect for lab in labels)
    check("(3,8,4) Hilbert function (1,3,2,2,2,1,1,1,1) on all models", ok)

    # ---- (2,6,3): first couple with a one-parameter family
    p = couple_params(2, 6, 3)
    labels = enumerate_models(p)
    check(
        "(2,6,3) non-regular, r* = 1",
        (not p.regular) and p.r_star == 1,
        f"regular={p.regular}, r*={p.r_star}",
    )
    check(
        "(2,6,3) models: sporadic 0, sporadic 2, one family",
        labels
        == [
            ModelLabel.sporadic(0),
            ModelLabel.family(1, None, 0),
            ModelLabel.sporadic(2),
        ],
    )
    expect = (1, 2, 2, 2, 1, 1, 1)
    spans = [model_ideal(p, 1, c).span() for c in (1, 2, 5)]
    ok = all(hilbert(U) == expect and dimension(U) == 10 for U in spans)
    check("(2,6,3) family Hilbert function (1,2,2,2,1,1,1), length 10", ok)

    # ---- (2,10,5): two one-parameter families
    p = couple_params(2, 10, 5)
    labels = enumerate_models(p)
    want = [
        ModelLabel.sporadic(0),
        ModelLabel.sporadic(1),
        ModelLabel.family(2, None, 0),
        ModelLabel.family(2, None, 1),
        ModelLabel.sporadic(3),
        ModelLabel.sporadic(4),
    ]
    check("(2,10,5) non-regular, six model lines with two families", labels == want)
    expect = (1, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1)
    ok = hilbert(model_ideal(p, 2, 1).span()) == expect
    check("(2,10,5) Hilbert function (1,2,2,2,2,2,1,1,1,1,1)", ok)

    # ---- (2,5,3): s = 2t-1 boundary, model list no longer irredundant
    p = couple_params(2, 5, 3)
    check("(2,5,3) is a regular couple", p.regular)
    src = IdealPres(
        p,
        (
            parse_expr("x2^2 - x1^2*x2 - x1^3", 2, 5),
            parse_expr("x1^3*x2", 2, 5),
        ),
    )
    phi = Substitution(
        (
            parse_expr("9*x1 + x2", 2, 5),
            parse_expr("-27*x2 + x1*x2 + 9*x1^2", 2, 5),
        )
    )
    cert = Certificate(src, ModelLabel.sporadic(2), phi)
    check(
        "(2,5,3) explicit certificate: twist-1 model is isomorphic to twist-2 model",
        verify_certificate(cert),
        "y1 = 9x1+x2, y2 = -27x2+x1x2+9x1^2",
    )
    prod = parse_expr("(x1 - x2 + x1*x2)*(x2 + x1^2 + x1^3)", 2, 5)
    target = span_ideal(
        [parse_expr("x2^2 - x1*x2 - x1^3", 2, 5), parse_expr("x1^3*x2", 2, 5)]
    )
    check("(2,5,3) product membership in the twist-0 model", target.member(prod))

    # ---- socle degree t+1: display ideals are constructible and typed
    p = couple_params(2, 5, 4)
    disp = [
        ["x2^2 - x1^2", "x1^4*x2"],
        ["x2^2 - x1^3", "x1^5 - x1^4*x2"],
        ["x2^2 - x1^4", "x1^5 - x1^4*x2"],
        ["x2^2", "x1^5 - x1^4*x2"],
    ]
    ok = all(
        type_check(span_ideal([parse_expr(g, 2, 5) for g in gens]), p) for gens in disp
    )
    check("(2,5,4) socle-degree-t+1 display ideals pass the type check", ok)

    return checks


def format_demo(checks) -> str:
    lines = []
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        suffix = f"  [{detail}]" if detail else ""
        lines.append(f"{status}  {name}{suffix}")
    good = sum(1 for _, ok, _ in checks if ok)
    lines.append(f"{good}/{len(checks)} checks passed")
    return "\n".join(lines)
