"""Command-line surface: JSON results on stdout, JSON errors on stderr.

Exit codes: 0 success, 2 bad input (parse/parameters), 3 honest
classification failure (irrational root or out-of-range couple),
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classify import Certificate, classify, verify_certificate
from .demo import format_demo, run_demo
from .errors import AlgebraError
from .expr import format_expr, parse_expr
from .invariants import sigma_invariant, square_zero_locus
from .models import ModelLabel, couple_params, enumerate_models, label_ideal, model_ideal
from .quotient import IdealPres, dimension, hilbert, socle_filtration, type_check
from .series import Series, Substitution

_EXIT_BAD_INPUT = 2
_EXIT_UNREACHABLE = 3
_EXIT_UNVERIFIED = 4

_ERROR_EXITS = {
    "E_PARSE": _EXIT_BAD_INPUT,
    "E_PARAMS": _EXIT_BAD_INPUT,
    "E_AMBIENT": _EXIT_BAD_INPUT,
    "E_NOT_UNIT": _EXIT_BAD_INPUT,
    "E_BAD_SUBST": _EXIT_BAD_INPUT,
    "E_GUARD": _EXIT_BAD_INPUT,
    "E_NOT_TYPE": _EXIT_BAD_INPUT,
    "E_ROOT_MISMATCH": _EXIT_UNREACHABLE,
    "E_OUT_OF_THEOREM": _EXIT_UNREACHABLE,
    "E_INTERNAL": _EXIT_UNVERIFIED,
}


def _rat_str(q: Fraction) -> str:
    return str(q)


def _label_json(label: ModelLabel) -> dict:
    return {
        "kind": label.kind,
        "r": label.r,
        "c": None if label.c is None else _rat_str(label.c),
        "d": label.d,
    }


def _params_json(p) -> dict:
    return {
        "h": p.h,
        "s": p.s,
        "t": p.t,
        "regular": p.regular,
        "r_star": p.r_star,
    }


def _certificate_json(cert: Certificate) -> dict:
    return {
        "substitution": [format_expr(t) for t in cert.phi.targets],
        "steps": [
            {"name": name, "units": {k: format_expr(v) for k, v in units.items()}}
            for name, units in cert.steps
        ],
    }


def _family_generator_strings(params, label: ModelLabel) -> list[str]:
    base = model_ideal(params, label.r, 1)
    out = [format_expr(g) for g in base.gens]
    unit = "c" if label.d == 0 else f"(c + x1^{label.d})" if label.d > 1 else "(c + x1)"
    middle = (
        f"x2^2 - x1^{label.r + 1}*x2 - {unit}*x1^{params.s - params.t + 1}"
    )
    out[-2] = middle
    return out


def _parse_ideal(text: str, h: int, s: int, params) -> IdealPres:
    gens = [parse_expr(part, h, s) for part in text.split(";") if part.strip()]
    return IdealPres(params, tuple(gens))


def run(argv=None) -> int:
    """Dispatch a CLI invocation; returns the process exit code."""
    parser = argparse.ArgumentParser(
        prog="almoststretched",
        description="Classify almost stretched Gorenstein quotients of type (s,t) "
        "with machine-checkable change-of-variables certificates.",
    )
    parser.add_argument("--json-pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(sp):
        sp.add_argument("--h", type=int, required=True)
        sp.add_argument("--s", type=int, required=True)
        sp.add_argument("--t", type=int, required=True)

    sp = sub.add_parser("models", help="list the canonical models of a couple")
    add_params(sp)

    sp = sub.add_parser("classify", help="classify the ideal presented by a series a")
    add_params(sp)
    sp.add_argument("--a", required=True, help="expression for a, e.g. 'x1 + x2^2'")

    sp = sub.add_parser("verify", help="check a change-of-variables certificate")
    add_params(sp)
    sp.add_argument("--model", required=True, help="'sporadic:R' or 'family:R:C:D'")
    sp.add_argument("--subst", required=True, help="comma-separated target expressions")
    sp.add_argument("--ideal", required=True, help="semicolon-separated generators")

    sp = sub.add_parser("hilbert", help="Hilbert function of a presented ideal")
    add_params(sp)
    sp.add_argument("--ideal", required=True)

    sp = sub.add_parser("invariants", help="isomorphism invariants of a presented ideal")
    add_params(sp)
    sp.add_argument("--ideal", required=True)

    sub.add_parser("demo", help="run the worked-example suite")

    args = parser.parse_args(argv)

    def emit(payload: dict) -> None:
        indent = 2 if args.json_pretty else None
        print(json.dumps(payload, indent=indent))

    try:
        if args.command == "demo":
            checks = run_demo()
            print(format_demo(checks))
            return 0 if all(ok for _, ok, _ in checks) else _EXIT_UNVERIFIED

        params = couple_params(args.h, args.s, args.t)

        if args.command == "models":
            out = []
            for label in enumerate_models(params):
                if label.kind == "family":
                    gens = _family_generator_strings(params, label)
                else:
                    gens = [format_expr(g) for g in label_ideal(params, label).gens]
                out.append({"label": _label_json(label), "generators": gens})
            emit({"params": _params_json(params), "models": out})
            return 0

        if args.command == "classify":
            a = parse_expr(args.a, params.h, params.s)
            cert = classify(params, a)
            emit(
                {
                    "params": _params_json(params),
                    "label": _label_json(cert.label),
                    "certificate": _certificate_json(cert),
                    "verified": True,
                }
            )
            return 0

        if args.command == "verify":
            label = _parse_model_label(args.model)
            targets = [
                parse_expr(part, params.h, params.s)
                for part in args.subst.split(",")
                if part.strip()
            ]
            pres = _parse_ideal(args.ideal, params.h, params.s, params)
            cert = Certificate(pres, label, Substitution(targets))
            ok = verify_certificate(cert)
            emit({"verified": ok})
            return 0 if ok else _EXIT_UNVERIFIED

        if args.command == "hilbert":
            pres = _parse_ideal(args.ideal, params.h, params.s, params)
            U = pres.span()
            hf = hilbert(U)
            emit(
                {
                    "hilbert": list(hf),
                    "dim": dimension(U),
                    "type_ok": type_check(U, params),
                }
            )
            return 0

        if args.command == "invariants":
            pres = _parse_ideal(args.ideal, params.h, params.s, params)
            U = pres.span()
            locus = square_zero_locus(U, params)
            sig = sigma_invariant(U, params)
            emit(
                {
                    "sigma": sig.sigma,
                    "witness": format_expr(sig.witness),
                    "locus": {
                        "points": [[_rat_str(a), _rat_str(b)] for a, b in locus.points],
                        "residual_degree": locus.residual_degree,
                    },
                    "socle_filtration": list(socle_filtration(U)),
                }
            )
            return 0
    except AlgebraError as exc:
        err = {"error": {"code": exc.code, "message": str(exc)}}
        print(json.dumps(err), file=sys.stderr)
        return _ERROR_EXITS.get(exc.code, _EXIT_BAD_INPUT)

    raise AssertionError("unhandled command")


def _parse_model_label(text: str) -> ModelLabel:
    from .errors import ParamError

    parts = text.strip().split(":")
    try:
        if parts[0] == "sporadic" and len(parts) == 2:
            return ModelLabel.sporadic(int(parts[1]))
        if parts[0] == "family" and len(parts) == 4:
            return ModelLabel.family(int(parts[1]), Fraction(parts[2]), int(parts[3]))
    except ValueError as exc:
        raise ParamError(f"bad model label {text!r}: {exc}") from exc
    raise ParamError(f"bad model label {text!r}; use 'sporadic:R' or 'family:R:C:D'")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
