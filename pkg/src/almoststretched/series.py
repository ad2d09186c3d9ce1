"""Exact truncated multivariate power series over the rationals.

A :class:`Series` is an element of Q[[x1..xh]] known exactly through total
degree N (everything of degree > N is discarded, i.e. we compute modulo the
(N+1)-st power of the maximal ideal).  All coefficients are
:class:`fractions.Fraction`; there is no floating point anywhere.

Values are immutable after construction and all operations are pure, so
instances can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Sequence

from .errors import (
    AmbientError,
    BadSubstitutionError,
    NotUnitError,
    RootMismatchError,
)

Exps = tuple  # exponent vector, length h, non-negative ints


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class Series:
    """Truncated power series with exact rational coefficients."""

    __slots__ = ("h", "N", "coeffs")

    def __init__(self, h: int, N: int, coeffs: Mapping[Exps, Fraction] | None = None):
        if h < 1 or N < 0:
            raise AmbientError(f"bad ambient h={h}, N={N}")
        self.h = h
        self.N = N
        clean: dict[Exps, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                e = tuple(e)
                if len(e) != h or any(k < 0 for k in e):
                    raise AmbientError(f"bad exponent vector {e} for h={h}")
                if sum(e) > N:
                    continue
                c = _as_fraction(c)
                if c != 0:
                    clean[e] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, h: int, N: int) -> "Series":
        return cls(h, N)

    @classmethod
    def constant(cls, h: int, N: int, c) -> "Series":
        return cls(h, N, {(0,) * h: _as_fraction(c)})

    @classmethod
    def one(cls, h: int, N: int) -> "Series":
        return cls.constant(h, N, 1)

    @classmethod
    def variable(cls, h: int, N: int, i: int) -> "Series":
        """x_i for a 1-based index i."""
        if not 1 <= i <= h:
            raise AmbientError(f"variable index {i} out of range 1..{h}")
        e = [0] * h
        e[i - 1] = 1
        return cls(h, N, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, h: int, N: int, exps: Sequence[int], c=1) -> "Series":
        return cls(h, N, {tuple(exps): _as_fraction(c)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0,) * self.h, Fraction(0))

    def order(self) -> int:
        """Least total degree with nonzero coefficient; N+1 for zero."""
        if not self.coeffs:
            return self.N + 1
        return min(sum(e) for e in self.coeffs)

    def homogeneous(self, k: int) -> "Series":
        return Series(self.h, self.N, {e: c for e, c in self.coeffs.items() if sum(e) == k})

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(exps), Fraction(0))

    def _check_ambient(self, other: "Series") -> None:
        if self.h != other.h or self.N != other.N:
            raise AmbientError(
                f"mixed ambient: ({self.h},{self.N}) vs ({other.h},{other.N})"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.constant(self.h, self.N, other)
        if not isinstance(other, Series):
            return NotImplemented
        self._check_ambient(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Series(self.h, self.N, out)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.h, self.N, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.constant(self.h, self.N, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return Series.zero(self.h, self.N)
            return Series(self.h, self.N, {e: c * v for e, v in self.coeffs.items()})
        if not isinstance(other, Series):
            return NotImplemented
        self._check_ambient(other)
        N = self.N
        out: dict[Exps, Fraction] = {}
        # iterate over the sparser operand outside
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        for ea, ca in a.items():
            da = sum(ea)
            for eb, cb in b.items():
                if da + sum(eb) > N:
                    continue
                e = tuple(i + j for i, j in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Series(self.h, self.N, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Series.one(self.h, self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift(self, exps: Sequence[int]) -> "Series":
        """Multiply by the monomial x^exps (cheap exponent shift)."""
        exps = tuple(exps)
        d = sum(exps)
        out = {}
        for e, c in self.coeffs.items():
            if sum(e) + d <= self.N:
                out[tuple(i + j for i, j in zip(e, exps))] = c
        return Series(self.h, self.N, out)

    def divide_monomial(self, exps: Sequence[int]) -> "Series":
        """Exact division by x^exps; every term must be divisible."""
        exps = tuple(exps)
        out = {}
        for e, c in self.coeffs.items():
            q = tuple(i - j for i, j in zip(e, exps))
            if any(k < 0 for k in q):
                raise ValueError(f"term {e} not divisible by {exps}")
            out[q] = c
        return Series(self.h, self.N, out)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.constant(self.h, self.N, other)
        if not isinstance(other, Series):
            return NotImplemented
        return self.h == other.h and self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.h, self.N, frozenset(self.coeffs.items())))

    def __repr__(self):
        from .expr import format_expr  # local import avoids a cycle

        return f"Series({self.h}, {self.N}, {format_expr(self)!r})"


def restrict_axis(f: Series) -> Series:
    """Kill every monomial involving x2..xh, keeping the x1-axis part."""
    out = {e: c for e, c in f.coeffs.items() if all(k == 0 for k in e[1:])}
    return Series(f.h, f.N, out)


def invert(f: Series) -> Series:
    """Multiplicative inverse through degree N; requires f(0) != 0."""
    c0 = f.constant_term()
    if c0 == 0:
        raise NotUnitError("cannot invert a series with zero constant term")
    # f = c0*(1 - u) with order(u) >= 1; 1/f = (1/c0) * sum u^k, via Horner
    u = Series.one(f.h, f.N) - f * (Fraction(1) / c0)
    acc = Series.one(f.h, f.N)
    for _ in range(f.N):
        acc = Series.one(f.h, f.N) + u * acc
    return acc * (Fraction(1) / c0)


def nth_root(f: Series, j: int, alpha) -> Series:
    """The j-th root g of f with g(0) = alpha, lifted degree by degree.

    Requires f(0) != 0 and alpha^j == f(0) exactly; each new homogeneous
    component of g is determined linearly by j*alpha^(j-1).
    """
    if j < 1:
        raise ValueError("root index must be positive")
    alpha = _as_fraction(alpha)
    a0 = f.constant_term()
    if a0 == 0:
        raise NotUnitError("j-th root requires a unit series")
    if alpha**j != a0:
        raise RootMismatchError(f"alpha^{j} = {alpha ** j} != f(0) = {a0}")
    g = Series.constant(f.h, f.N, alpha)
    scale = Fraction(1) / (j * alpha ** (j - 1))
    for d in range(1, f.N + 1):
        defect = (f - g**j).homogeneous(d)
        if defect.is_zero():
            continue
        g = g + defect * scale
    return g


def rational_nth_root(q: Fraction, j: int) -> Fraction:
    """Exact j-th root of a rational, positive branch for even j.

    Raises RootMismatchError when no rational root exists.
    """
    q = _as_fraction(q)
    if j < 1:
        raise ValueError("root index must be positive")
    if j == 1:
        return q
    if q == 0:
        return Fraction(0)
    if q < 0 and j % 2 == 0:
        raise RootMismatchError(f"no rational {j}-th root of {q}")
    sign = -1 if q < 0 else 1
    num, den = abs(q.numerator), q.denominator
    rn = _int_nth_root(num, j)
    rd = _int_nth_root(den, j)
    if rn is None or rd is None:
        raise RootMismatchError(f"no rational {j}-th root of {q}")
    return Fraction(sign * rn, rd)


def _int_nth_root(n: int, j: int) -> int | None:
    """Floor-free exact integer j-th root, or None if n is not a j-th power."""
    if n in (0, 1):
        return n
    if j == 2:
        r = isqrt(n)
        return r if r * r == n else None
    lo, hi = 1, 1
    while hi**j < n:
        hi <<= 1
    lo = hi >> 1
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid**j
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


class Substitution:
    """A change of variables x_i -> target_i defining a local automorphism.

    Every target has zero constant term (the maximal ideal maps into itself)
    and the matrix of linear parts is invertible.
    """

    __slots__ = ("h", "N", "targets", "linear")

    def __init__(self, targets: Sequence[Series]):
        targets = tuple(targets)
        if not targets:
            raise BadSubstitutionError("empty substitution")
        h, N = targets[0].h, targets[0].N
        if len(targets) != h:
            raise BadSubstitutionError(f"{len(targets)} targets for {h} variables")
        for t in targets:
            if t.h != h or t.N != N:
                raise AmbientError("targets live in different ambients")
            if t.constant_term() != 0:
                raise BadSubstitutionError("target has nonzero constant term")
        self.h = h
        self.N = N
        self.targets = targets
        ei = [0] * h
        lin = []
        for t in targets:
            row = []
            for k in range(h):
                e = ei[:]
                e[k] = 1
                row.append(t.coefficient(e))
            lin.append(row)
        self.linear = tuple(tuple(r) for r in lin)
        if _det(self.linear) == 0:
            raise BadSubstitutionError("linear part is singular")

    @classmethod
    def identity(cls, h: int, N: int) -> "Substitution":
        return cls([Series.variable(h, N, i) for i in range(1, h + 1)])

    @classmethod
    def rescale(cls, h: int, N: int, units: Mapping[int, Series]) -> "Substitution":
        """y_i = u_i * x_i for the given 1-based indices, identity elsewhere."""
        targets = []
        for i in range(1, h + 1):
            xi = Series.variable(h, N, i)
            targets.append(units[i] * xi if i in units else xi)
        return cls(targets)

    def is_identity(self) -> bool:
        return all(
            t == Series.variable(self.h, self.N, i + 1)
            for i, t in enumerate(self.targets)
        )

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.targets == other.targets

    def __repr__(self):
        from .expr import format_expr

        return "Substitution([" + ", ".join(format_expr(t) for t in self.targets) + "])"


def substitute(f: Series, phi: Substitution) -> Series:
    """Evaluate f at the substitution targets, exactly through degree N."""
    if f.h != phi.h or f.N != phi.N:
        raise AmbientError("series and substitution ambients differ")
    h, N = f.h, f.N
    # memoized powers of each target
    powers: list[list[Series]] = [[Series.one(h, N)] for _ in range(h)]
    maxe = [0] * h
    for e in f.coeffs:
        for i, k in enumerate(e):
            maxe[i] = max(maxe[i], k)
    for i in range(h):
        for _ in range(maxe[i]):
            powers[i].append(powers[i][-1] * phi.targets[i])
    out = Series.zero(h, N)
    for e, c in f.coeffs.items():
        term = Series.constant(h, N, c)
        for i, k in enumerate(e):
            if k:
                term = term * powers[i][k]
        out = out + term
    return out


def compose(phi: Substitution, psi: Substitution) -> Substitution:
    """(phi o psi)_i = substitute(phi_i, psi); linear parts multiply."""
    if phi.h != psi.h or phi.N != psi.N:
        raise AmbientError("substitution ambients differ")
    return Substitution([substitute(t, psi) for t in phi.targets])


def invert_substitution(phi: Substitution) -> Substitution:
    """The substitution psi with compose(phi, psi) = identity.

    Solved by fixed-point iteration psi <- A^{-1}(x - H(psi)) where A is the
    linear part and H the order>=2 tail; each pass fixes one more degree.
    """
    h, N = phi.h, phi.N
    ainv = _mat_inv(phi.linear)
    xs = [Series.variable(h, N, i) for i in range(1, h + 1)]
    tails = []
    for i, t in enumerate(phi.targets):
        lin = Series.zero(h, N)
        for k in range(h):
            lin = lin + phi.linear[i][k] * xs[k]
        tails.append(t - lin)
    def apply_ainv(vec: list[Series]) -> list[Series]:
        return [
            sum((ainv[i][k] * vec[k] for k in range(h)), Series.zero(h, N))
            for i in range(h)
        ]

    psi_t = apply_ainv(xs)
    for _ in range(max(N - 1, 0)):
        psi = Substitution(psi_t)
        corrected = [xs[i] - substitute(tails[i], psi) for i in range(h)]
        psi_t = apply_ainv(corrected)
    psi = Substitution(psi_t)
    check = compose(phi, psi)
    if any(check.targets[i] != xs[i] for i in range(h)):
        raise BadSubstitutionError("substitution inversion failed to converge")
    return psi


def _det(m) -> Fraction:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def _mat_inv(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise BadSubstitutionError("singular linear part")
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)
