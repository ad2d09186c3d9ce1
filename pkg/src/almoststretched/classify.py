"""Constructive normal-form pipeline with machine-checkable certificates.

Every reduction step rewrites the current ideal as the image of a simpler
model under an explicit change of variables.  Composing the steps yields a
single substitution phi with

    span(source ideal) == span(phi applied to the generators of the model),

which ``verify_certificate`` checks by exact linear algebra; a returned
certificate has always already passed that check.

The pipeline operates on the presentation with middle generator
x2^2 - a*x1*x2 - x1^(s-t+1) and branches on r, the order of a restricted to
the x1-axis:

* axis part zero, or r >= t-1 .... Sporadic(t-1)
* 2(r+1) != s-t+1 ............... Sporadic(r)
* otherwise (non-regular, r=r*) .. Family(r*, c, d), after normalizing the
                                   unit w to c + x1^d and collapsing large d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    GuardError,
    InternalCheckError,
    NotUnitError,
    OutOfTheoremError,
    ParamError,
    RootMismatchError,
)
from .models import ModelLabel, ideal_from_a, label_ideal, model_ideal
from .quotient import CoupleParams, IdealPres, equal_spans, span_ideal
from .series import (
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


@dataclass
class Certificate:
    """A classified source ideal with its verifying change of variables."""

    source: IdealPres
    label: ModelLabel
    phi: Substitution
    steps: list = field(default_factory=list)

    def model(self) -> IdealPres:
        return label_ideal(self.source.params, self.label)


def verify_certificate(cert: Certificate) -> bool:
    """Exact span equality of the source and the substituted model."""
    model = cert.model()
    images = [substitute(g, cert.phi) for g in model.gens]
    lhs = span_ideal(images, h=model.params.h, N=model.params.s)
    return equal_spans(lhs, cert.source.span())


# ---------------------------------------------------------------------------
# decomposition helpers


def split_axis(params: CoupleParams, a: Series) -> tuple[Series, dict]:
    """Write a = (axis part in x1) + sum_j b_j x_j over j >= 2.

    Each term of the non-axis part is assigned to its smallest variable
    index >= 2, making the decomposition unique and order-independent.
    """
    axis = restrict_axis(a)
    rest = a - axis
    h, N = a.h, a.N
    bs = {j: Series.zero(h, N) for j in range(2, h + 1)}
    for e, c in rest.coeffs.items():
        j = next(i for i in range(1, h) if e[i] > 0) + 1  # 1-based variable
        q = list(e)
        q[j - 1] -= 1
        bs[j] = bs[j] + Series.monomial(h, N, q, c)
    return axis, bs


def _series_root(f: Series, j: int) -> Series:
    """j-th root of a unit series, rational-root branch of the constant."""
    alpha = rational_nth_root(f.constant_term(), j)
    return nth_root(f, j, alpha)


# ---------------------------------------------------------------------------
# individual reduction steps


def reduce_zero_case(params: CoupleParams, a: Series) -> tuple[Substitution, ModelLabel]:
    """Axis part of a is zero: rescale x2 by v with v^2 = 1 - b2*x1.

    Lands on Sporadic(t-1).
    """
    h, s = params.h, params.s
    if not restrict_axis(a).is_zero():
        raise GuardError("reduce_zero_case needs a with zero x1-axis part")
    _, bs = split_axis(params, a)
    v = nth_root(Series.one(h, s) - bs[2] * Series.variable(h, s, 1), 2, 1)
    phi = Substitution.rescale(h, s, {2: v})
    return phi, ModelLabel.sporadic(params.t - 1)


def reduce_to_rw(
    params: CoupleParams, a: Series, strategy: str = "axis_root"
) -> tuple[Substitution, int, Series, dict]:
    """Normalize the middle generator to x2^2 - x1^(r+1) x2 - w x1^(s-t+1).

    r is the order of a on the x1-axis; eta is the axis unit of a and
    u = 1 - x1 b2.  Two equivalent constructions are available:

    * ``axis_root``: a unit z with z^(r+1) = eta/u and the substitution
      y1 = z x1, yj = tau xj (tau^2 = z^s); then w reads back
      1/(u z^(s-t+1)) through the inverse substitution.  Requires rational
      roots of the constant terms.
    * ``rescale_x2``: y2 = (u/eta) x2 with all other variables fixed and
      w reading back u/eta^2.  Needs no roots at all.

    For s >= 2t-1 the unit w is flattened to its x1-axis restriction,
    which preserves the ideal span.
    """
    h, s, t = params.h, params.s, params.t
    axis, bs = split_axis(params, a)
    if axis.is_zero():
        raise GuardError("reduce_to_rw needs a nonzero x1-axis part")
    r = axis.order()
    eta = axis.divide_monomial((r,) + (0,) * (h - 1))
    x1 = Series.variable(h, s, 1)
    u = Series.one(h, s) - x1 * bs[2]
    aux = {"u": u, "eta": eta}
    if strategy == "axis_root":
        z = _series_root(eta * invert(u), r + 1)
        units = {1: z}
        aux["z"] = z
        if h >= 3:
            tau = _series_root(z**s, 2)
            for j in range(3, h + 1):
                units[j] = tau
            aux["tau"] = tau
        phi = Substitution.rescale(h, s, units)
        w = substitute(invert(u * z ** (s - t + 1)), invert_substitution(phi))
    elif strategy == "rescale_x2":
        m = u * invert(eta)
        aux["m"] = m
        phi = Substitution.rescale(h, s, {2: m})
        w = substitute(u * invert(eta) ** 2, invert_substitution(phi))
    else:
        raise GuardError(f"unknown strategy {strategy!r}")
    if s >= 2 * t - 1:
        w = restrict_axis(w)
    return phi, r, w, aux


def collapse_r_large(
    params: CoupleParams, r: int, w: Series
) -> tuple[Substitution, ModelLabel, dict]:
    """For r >= t-1 the twist term is absorbed; rescale x2 by v = w^(-1/2)."""
    if r < params.t - 1:
        raise GuardError(f"collapse_r_large needs r >= t-1, got r={r}")
    v = _series_root(invert(w), 2)
    phi = Substitution.rescale(params.h, params.s, {2: v})
    return phi, ModelLabel.sporadic(params.t - 1), {"v": v}


def normalize_regular(
    params: CoupleParams, r: int, w: Series
) -> tuple[Substitution, ModelLabel, dict]:
    """Scale the unit w away when n = 2(r+1) - (s-t+1) is nonzero.

    Uses e with e^n w = 1 and the substitution y1 = e x1, y2 = e^(r+1) x2,
    yj = tau xj with tau^2 = e^s; lands on Sporadic(r).
    """
    h, s, t = params.h, params.s, params.t
    n = 2 * (r + 1) - (s - t + 1)
    if r > t - 2 or n == 0:
        raise GuardError("normalize_regular needs r <= t-2 and 2(r+1) != s-t+1")
    e = _series_root(invert(w), n) if n > 0 else _series_root(w, -n)
    units = {1: e, 2: e ** (r + 1)}
    aux = {"e": e}
    if h >= 3:
        tau = _series_root(e**s, 2)
        for j in range(3, h + 1):
            units[j] = tau
        aux["tau"] = tau
    phi = Substitution.rescale(h, s, units)
    return phi, ModelLabel.sporadic(r), aux


def normalize_d(
    params: CoupleParams, r: int, w: Series
) -> tuple[Substitution, int, Series, dict]:
    """On the family branch, reduce a univariate unit w to w(0) + x1^d.

    d is the order of w - w(0); alpha^d recovers the tail and the
    substitution y1 = alpha x1, y2 = alpha^(r+1) x2 absorbs it.
    """
    h, s = params.h, params.s
    if params.regular or r != params.r_star:
        raise GuardError("normalize_d applies only at r = r* on a non-regular couple")
    if w != restrict_axis(w):
        raise GuardError("normalize_d needs a univariate unit w")
    w0 = w.constant_term()
    tail = w - Series.constant(h, s, w0)
    if tail.is_zero():
        raise GuardError("normalize_d needs w != w(0)")
    d = tail.order()
    alpha = _series_root(tail.divide_monomial((d,) + (0,) * (h - 1)), d)
    units = {1: alpha, 2: alpha ** (r + 1)}
    aux = {"alpha": alpha}
    if h >= 3:
        beta = _series_root(alpha**s, 2)
        for j in range(3, h + 1):
            units[j] = beta
        aux["beta"] = beta
    phi = Substitution.rescale(h, s, units)
    new_w = Series.constant(h, s, w0) + Series.variable(h, s, 1) ** d
    return phi, d, new_w, aux


def collapse_d_large(
    params: CoupleParams, r: int, c: Fraction, d: int
) -> tuple[Substitution, ModelLabel, dict]:
    """For d >= t-r-1 the unit c + x1^d collapses to c.

    alpha^2 = c/(c + x1^d) with alpha(0) = 1 (always rational), y2 = alpha x2.
    """
    h, s, t = params.h, params.s, params.t
    if d < t - r - 1:
        raise GuardError(f"collapse_d_large needs d >= t-r-1, got d={d}")
    unit = Series.constant(h, s, c) + Series.variable(h, s, 1) ** d
    alpha = nth_root(Series.constant(h, s, c) * invert(unit), 2, 1)
    phi = Substitution.rescale(h, s, {2: alpha})
    return phi, ModelLabel.family(r, c, 0), {"alpha": alpha}


# ---------------------------------------------------------------------------
# the full pipeline


def classify(params: CoupleParams, a: Series) -> Certificate:
    """Classify the ideal presented by the series a; needs s >= 2t-1.

    The pipeline first runs with the axis-root construction; if any step
    needs an irrational root it reruns with the root-free x2-rescaling,
    which certifies strictly more inputs over Q.  Labels agree whenever
    both runs succeed.
    """
    if params.s < 2 * params.t - 1:
        raise OutOfTheoremError(
            f"classification needs s >= 2t-1, got s={params.s}, t={params.t}"
        )
    if isinstance(a, (int, Fraction)):
        a = Series.constant(params.h, params.s, a)
    if a.h != params.h or a.N != params.s:
        raise ParamError("series a lives in the wrong ambient")
    source = ideal_from_a(params, a)
    try:
        label, total, steps = _run_pipeline(params, a, "axis_root")
    except RootMismatchError:
        label, total, steps = _run_pipeline(params, a, "rescale_x2")
    cert = Certificate(source, label, total, steps)
    if not verify_certificate(cert):
        raise InternalCheckError("classification certificate failed self-check")
    return cert


def _run_pipeline(params: CoupleParams, a: Series, strategy: str):
    steps: list = []
    if restrict_axis(a).is_zero():
        phi, label = reduce_zero_case(params, a)
        steps.append(("reduce_zero_case", {}))
        return label, phi, steps
    phi, r, w, aux = reduce_to_rw(params, a, strategy)
    steps.append((f"reduce_to_rw[{strategy}]", aux))
    label, total = _classify_rw_tail(params, r, w, phi, steps)
    return label, total, steps


def classify_ideal(pres: IdealPres) -> Certificate:
    """Classify an ideal presentation already in model shape.

    The twist exponent p and unit z are recovered syntactically from the
    middle generator; arbitrary generator sets are out of scope.
    """
    params = pres.params
    if params.s < 2 * params.t - 1:
        raise OutOfTheoremError(
            f"classification needs s >= 2t-1, got s={params.s}, t={params.t}"
        )
    p, z = recover_model_parameters(pres)
    steps: list = [("recover_model_parameters", {"z": z})]
    total = Substitution.identity(params.h, params.s)
    z = restrict_axis(z)  # span-preserving for s >= 2t-1, guarded above
    label, total = _classify_rw_tail(params, p, z, total, steps)
    cert = Certificate(pres, label, total, steps)
    if not verify_certificate(cert):
        raise InternalCheckError("classification certificate failed self-check")
    return cert


def _classify_rw_tail(
    params: CoupleParams, r: int, w: Series, total: Substitution, steps: list
) -> tuple[ModelLabel, Substitution]:
    """Shared tail: from the (r, w) model form down to a canonical label."""
    h, s, t = params.h, params.s, params.t
    if r >= t - 1:
        phi, label, aux = collapse_r_large(params, r, w)
        steps.append(("collapse_r_large", aux))
        return label, compose(phi, total)
    if 2 * (r + 1) != s - t + 1:
        phi, label, aux = normalize_regular(params, r, w)
        steps.append(("normalize_regular", aux))
        return label, compose(phi, total)
    # family branch: non-regular couple, r = r*
    w = restrict_axis(w)
    w0 = w.constant_term()
    if w0 == 0:
        raise NotUnitError("family unit w lost its constant term")
    if w == Series.constant(h, s, w0):
        return ModelLabel.family(r, w0, 0), total
    phi, d, w, aux = normalize_d(params, r, w)
    steps.append(("normalize_d", aux))
    total = compose(phi, total)
    if d >= t - r - 1:
        phi, label, aux = collapse_d_large(params, r, w0, d)
        steps.append(("collapse_d_large", aux))
        return label, compose(phi, total)
    return ModelLabel.family(r, w0, d), total


def recover_model_parameters(pres: IdealPres) -> tuple[int, Series]:
    """Read (p, z) off a presentation whose middle generator has model shape."""
    params = pres.params
    h, s, t = params.h, params.s, params.t
    x2sq = (0, 2) + (0,) * (h - 2)
    middle = None
    for g in pres.gens:
        c = g.coefficient(x2sq)
        if c != 0:
            if middle is not None:
                raise ParamError("several generators contain x2^2")
            middle = g * (Fraction(1) / c)
    if middle is None:
        raise ParamError("no generator contains x2^2")
    rest = middle - Series.monomial(h, s, x2sq)
    twist = Series.zero(h, s)
    ztail = Series.zero(h, s)
    for e, c in rest.coeffs.items():
        if e[1] == 1 and all(k == 0 for k in e[2:]):
            twist = twist + Series.monomial(h, s, e, c)
        elif e[1] == 0:
            ztail = ztail + Series.monomial(h, s, e, c)
        else:
            raise ParamError("middle generator is not in model shape")
    if twist.is_zero():
        raise ParamError("middle generator lacks the x1^(p+1) x2 twist term")
    tw = {e for e in twist.coeffs}
    if len(tw) != 1 or twist.coeffs[next(iter(tw))] != -1:
        raise ParamError("twist term is not a single monomial -x1^(p+1) x2")
    p = next(iter(tw))[0] - 1
    if p < 0:
        raise ParamError("twist exponent must be at least 1")
    shift = (s - t + 1,) + (0,) * (h - 1)
    try:
        z = -ztail.divide_monomial(shift)
    except ValueError as exc:
        raise ParamError(f"unit term not divisible by x1^(s-t+1): {exc}") from exc
    if z.constant_term() == 0:
        raise NotUnitError("recovered unit z has zero constant term")
    return p, z
