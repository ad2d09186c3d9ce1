"""Computable isomorphism invariants for two-variable type-(s,t) quotients.

Two invariants separate the canonical classes at concrete instances:

* the square-zero locus: projective directions (a1 : a2) whose squared
  linear form lies in the ideal plus the cube of the maximal ideal; and
* sigma, the order of the square of a locus direction in the quotient,
  maximized over the rational locus points (2 with witness x1 when the
  locus is empty).

Both are reported with verified witnesses; locus points are found exactly
by factoring the gcd of the defining binary quadratic forms over Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParamError, RootMismatchError
from .quotient import CoupleParams, EchelonSubspace, quadric_initial_part
from .series import Series, rational_nth_root


@dataclass(frozen=True)
class LocusReport:
    """Rational square-zero directions plus the degree of the irrational rest."""

    points: tuple[tuple[Fraction, Fraction], ...]
    residual_degree: int


@dataclass
class SigmaReport:
    sigma: int
    witness: Series
    trace: list = field(default_factory=list)


def square_in_cube(l: Series, U: EchelonSubspace) -> bool:
    """True iff l^2 lies in the subspace plus all monomials of degree >= 3."""
    return U.with_high_degrees(3).member(l * l)


def square_zero_locus(U: EchelonSubspace, params: CoupleParams) -> LocusReport:
    """Solve (a1 x1 + a2 x2)^2 in I + n^3 over the projective line.

    The degree-2 stratum of the ideal is a subspace Q of the three
    dimensional space of quadrics; reducing the symbolic square against Q
    leaves one binary quadratic form per free quadric coordinate, and the
    locus is the common zero set of those forms, i.e. the zeros of their gcd.
    """
    if params.h != 2 or U.h != 2:
        raise ParamError("square_zero_locus is implemented for h = 2 only")
    Q = quadric_initial_part(U)
    # symbolic square: x1^2 -> a1^2, x1x2 -> 2 a1 a2, x2^2 -> a2^2, written
    # in coordinates (a1^2, a1a2, a2^2)
    sym = {0: (1, 0, 0), 1: (0, 2, 0), 2: (0, 0, 1)}
    residual = dict(sym)
    for p, row in Q.rows.items():
        f = residual.pop(p)
        for c, v in row.items():
            if c == p:
                continue
            residual[c] = tuple(x - v * y for x, y in zip(residual[c], f))
    forms = [f for f in residual.values() if any(x != 0 for x in f)]
    if not forms:
        raise ParamError("degenerate degree-2 stratum: every direction squares in")
    gcd_poly, inf_mult = _forms_gcd(forms)
    roots, residual_degree = _rational_roots(gcd_poly)
    points = [(Fraction(r), Fraction(1)) for r in sorted(set(roots))]
    if inf_mult >= 1:
        points.append((Fraction(1), Fraction(0)))
    x1 = Series.variable(U.h, U.N, 1)
    x2 = Series.variable(U.h, U.N, 2)
    for a1, a2 in points:
        assert square_in_cube(a1 * x1 + a2 * x2, U), "locus point failed re-check"
    return LocusReport(tuple(points), residual_degree)


def _forms_gcd(forms):
    """Gcd of binary quadratic forms A a1^2 + B a1 a2 + C a2^2.

    A form corresponds to the polynomial A L^2 + B L + C in L = a1/a2 plus
    a root at (1 : 0) of multiplicity 2 - deg; the gcd is taken over both.
    """
    polys = []
    inf_mult = 2
    for A, B, C in forms:
        p = _strip([Fraction(C), Fraction(B), Fraction(A)])
        polys.append(p)
        inf_mult = min(inf_mult, 2 - (len(p) - 1))
    g = polys[0]
    for p in polys[1:]:
        g = _poly_gcd(g, p)
    return g, inf_mult


def _strip(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mod(a, b):
    a = _strip(list(a))
    db, lead = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(x != 0 for x in a):
        k = len(a) - 1 - db
        f = a[-1] / lead
        for i in range(db + 1):
            a[k + i] -= f * b[i]
        a = _strip(a)
    return a


def _poly_gcd(a, b):
    a, b = _strip(list(a)), _strip(list(b))
    while any(x != 0 for x in b):
        a, b = b, _poly_mod(a, b)
        b = _strip(b)
    if a[-1] != 0:
        a = [x / a[-1] for x in a]
    return a


def _rational_roots(p):
    """Rational roots (with multiplicity collapsed) and leftover degree."""
    deg = len(p) - 1
    if deg == 0:
        return [], 0
    if deg == 1:
        return [-p[0] / p[1]], 0
    # quadratic: c2 L^2 + c1 L + c0
    c0, c1, c2 = p[0], p[1], p[2]
    disc = c1 * c1 - 4 * c2 * c0
    try:
        root = rational_nth_root(disc, 2)
    except RootMismatchError:
        return [], 2
    r1 = (-c1 + root) / (2 * c2)
    r2 = (-c1 - root) / (2 * c2)
    return ([r1] if r1 == r2 else [r1, r2]), 0


def sigma_invariant(U: EchelonSubspace, params: CoupleParams) -> SigmaReport:
    """Maximal order of the square of a square-zero direction.

    Seeds are the rational locus points (x1 when the locus is empty).  From
    a seed l the search adjusts y by unit rescalings c*x1^(k-2)*l, solving
    exactly at each degree k of the remainder of y^2; rescaling cannot lower
    the order of the square, so the search halts at the first obstruction
    and the final k is certified by direct reduction of the witness.
    """
    if params.h != 2 or U.h != 2:
        raise ParamError("sigma_invariant is implemented for h = 2 only")
    locus = square_zero_locus(U, params)
    h, N = U.h, U.N
    x1 = Series.variable(h, N, 1)
    x2 = Series.variable(h, N, 2)
    seeds = [a1 * x1 + a2 * x2 for a1, a2 in locus.points]
    if not seeds:
        seeds = [x1]
    best: SigmaReport | None = None
    for seed in seeds:
        report = _grow_square_order(U, seed, N)
        if best is None or report.sigma > best.sigma:
            best = report
    # witness soundness re-check
    assert best.witness.order() == 1
    assert U.reduce(best.witness * best.witness).order() == best.sigma
    return best


def _grow_square_order(U: EchelonSubspace, seed: Series, N: int) -> SigmaReport:
    y = seed
    trace: list = []
    while True:
        rem = U.reduce(y * y)
        k = rem.order()
        if k > N:
            trace.append((k, "square lies in the ideal"))
            return SigmaReport(k, y, trace)
        if k == 2:
            # a degree-1 adjustment would re-choose the seed; the locus
            # enumeration already covers that
            trace.append((k, "obstruction"))
            return SigmaReport(k, y, trace)
        delta = seed.shift((k - 2,) + (0,) * (U.h - 1))
        change = U.reduce(2 * y * delta).homogeneous(k)
        rem_k = rem.homogeneous(k)
        c = _solve_scalar(rem_k, change)
        if c is None:
            trace.append((k, "obstruction"))
            return SigmaReport(k, y, trace)
        y = y + c * delta
        trace.append((k, "cancelled"))


def _solve_scalar(target: Series, change: Series):
    """c with target + c*change = 0, or None."""
    if target.is_zero():
        return Fraction(0)
    if change.is_zero():
        return None
    e, v = next(iter(change.coeffs.items()))
    c = -target.coefficient(e) / v
    return c if (target + c * change).is_zero() else None
