"""Canonical model ideals of almost stretched Gorenstein type (s, t).

The classification targets are the ideals with generators

    x_i x_j                   1 <= i < j <= h, (i, j) != (1, 2)
    x_j^2 - x_1^s             3 <= j <= h
    x_2^2 - x_1^(p+1) x_2 - z x_1^(s-t+1)
    x_1^t x_2

for an integer p >= 0 and a unit series z.  Sporadic classes have z = 1;
on a non-regular couple a one-parameter family appears at p = r* with
z = c or z = c + x_1^d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotUnitError, OutOfTheoremError, ParamError
from .quotient import CoupleParams, IdealPres
from .series import Series


def couple_params(h: int, s: int, t: int) -> CoupleParams:
    """Validate (h, s, t) and compute the regularity of the couple."""
    return CoupleParams.make(h, s, t)


@dataclass(frozen=True)
class ModelLabel:
    """Canonical class identifier: Sporadic(r) or Family(r, c, d).

    ``c`` is None only in enumeration output, standing for an arbitrary
    nonzero rational; d = 0 means unit z = c, d >= 1 means z = c + x_1^d.
    """

    kind: str  # "sporadic" | "family"
    r: int
    c: Fraction | None = None
    d: int | None = None

    def __post_init__(self):
        if self.kind not in ("sporadic", "family"):
            raise ParamError(f"unknown label kind {self.kind!r}")
        if self.kind == "family":
            if self.d is None or self.d < 0:
                raise ParamError("family label needs d >= 0")
            if self.c is not None and self.c == 0:
                raise ParamError("family parameter c must be nonzero")

    @classmethod
    def sporadic(cls, r: int) -> "ModelLabel":
        return cls("sporadic", r)

    @classmethod
    def family(cls, r: int, c, d: int) -> "ModelLabel":
        return cls("family", r, None if c is None else Fraction(c), d)

    def validate(self, params: CoupleParams) -> None:
        if self.kind == "sporadic":
            if not 0 <= self.r <= params.t - 1:
                raise ParamError(f"sporadic r={self.r} outside 0..{params.t - 1}")
        else:
            if params.regular or self.r != params.r_star:
                raise ParamError("family label requires a non-regular couple at r*")
            if not 0 <= self.d <= params.t - self.r - 2:
                raise ParamError(f"family d={self.d} outside 0..{params.t - self.r - 2}")

    def __str__(self):
        if self.kind == "sporadic":
            return f"sporadic:{self.r}"
        c = "c" if self.c is None else str(self.c)
        return f"family:{self.r}:{c}:{self.d}"


def model_ideal(params: CoupleParams, p: int, z) -> IdealPres:
    """The canonical ideal with twist exponent p and unit z."""
    h, s, t = params.h, params.s, params.t
    if isinstance(z, (int, Fraction)):
        z = Series.constant(h, s, z)
    if z.h != h or z.N != s:
        raise ParamError("unit z lives in the wrong ambient")
    if z.constant_term() == 0:
        raise NotUnitError("model unit z must have nonzero constant term")
    if p < 0:
        raise ParamError("twist exponent p must be >= 0")
    gens = _quadric_gens(h, s)
    x1 = Series.variable(h, s, 1)
    x2 = Series.variable(h, s, 2)
    middle = x2 * x2 - x1 ** (p + 1) * x2 - z * x1 ** (s - t + 1)
    gens.append(middle)
    gens.append(x1**t * x2)
    return IdealPres(params, tuple(gens))


def ideal_from_a(params: CoupleParams, a: Series) -> IdealPres:
    """The ideal presentation with middle generator x2^2 - a x1 x2 - x1^(s-t+1).

    Only a mod n^(s-1) matters: terms of a beyond degree s-2 are killed by
    the x1*x2 factor under truncation.
    """
    h, s, t = params.h, params.s, params.t
    if isinstance(a, (int, Fraction)):
        a = Series.constant(h, s, a)
    if a.h != h or a.N != s:
        raise ParamError("series a lives in the wrong ambient")
    gens = _quadric_gens(h, s)
    x1 = Series.variable(h, s, 1)
    x2 = Series.variable(h, s, 2)
    middle = x2 * x2 - a * x1 * x2 - x1 ** (s - t + 1)
    gens.append(middle)
    gens.append(x1**t * x2)
    return IdealPres(params, tuple(gens))


def _quadric_gens(h: int, s: int) -> list[Series]:
    gens = []
    for i in range(1, h + 1):
        for j in range(i + 1, h + 1):
            if (i, j) == (1, 2):
                continue
            gens.append(Series.variable(h, s, i) * Series.variable(h, s, j))
    x1 = Series.variable(h, s, 1)
    for j in range(3, h + 1):
        xj = Series.variable(h, s, j)
        gens.append(xj * xj - x1**s)
    return gens


def label_ideal(params: CoupleParams, label: ModelLabel) -> IdealPres:
    """Instantiate the model ideal a label refers to (c must be concrete)."""
    label.validate(params)
    if label.kind == "sporadic":
        return model_ideal(params, label.r, 1)
    if label.c is None:
        raise ParamError("family label with symbolic c cannot be instantiated")
    z = Series.constant(params.h, params.s, label.c)
    if label.d >= 1:
        z = z + Series.variable(params.h, params.s, 1) ** label.d
    return model_ideal(params, label.r, z)


def enumerate_models(params: CoupleParams) -> list[ModelLabel]:
    """All classification targets for the couple; needs s >= 2t-1.

    Regular couples list Sporadic(0..t-1); a non-regular couple replaces
    Sporadic(r*) by the families Family(r*, c, d) for d = 0..t-r*-2.
    """
    if params.s < 2 * params.t - 1:
        raise OutOfTheoremError(
            f"enumeration needs s >= 2t-1, got s={params.s}, t={params.t}"
        )
    labels = []
    for r in range(params.t - 1 + 1):
        if params.regular or r != params.r_star:
            labels.append(ModelLabel.sporadic(r))
        else:
            for d in range(params.t - r - 2 + 1):
                labels.append(ModelLabel.family(r, None, d))
    return labels
