"""Linear algebra in the truncated local ring Q[[x1..xh]] / n^(s+1).

Ideals are handled through their spans inside the monomial basis of all
degrees <= s: multiply each generator by every monomial that keeps the
product within degree s, then row-reduce.  Spans are kept in reduced row
echelon form with respect to the canonical monomial order (total degree
ascending, then lexicographic with x1 > x2 > ...), so a subspace has exactly
one representation and equality is row-by-row comparison.

Row reduction is fraction-free: rows are held as integer dictionaries and
combined by cross-multiplication with gcd normalization; the final reduced
form is normalized to monic rational rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import AmbientError, NotTypeError, ParamError
from .series import Series

# ---------------------------------------------------------------------------
# monomial bookkeeping


def _monomials_of_degree(h: int, d: int):
    if h == 1:
        yield (d,)
        return
    for k in range(d, -1, -1):
        for rest in _monomials_of_degree(h - 1, d - k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def monomial_table(h: int, N: int):
    """Canonically ordered monomials of degree 0..N and their column index."""
    cols: list[tuple] = []
    for d in range(N + 1):
        block = sorted(_monomials_of_degree(h, d), key=lambda e: tuple(-k for k in e))
        cols.extend(block)
    index = {e: i for i, e in enumerate(cols)}
    return cols, index


def monomial_count(h: int, d: int) -> int:
    from math import comb

    return comb(h + d - 1, d) if d >= 0 else 0


# ---------------------------------------------------------------------------
# parameters and ideal presentations


@dataclass(frozen=True)
class CoupleParams:
    """Validated (h, s, t) with the regularity data of the couple."""

    h: int
    s: int
    t: int
    regular: bool
    r_star: int | None

    @classmethod
    def make(cls, h: int, s: int, t: int) -> "CoupleParams":
        if h < 2 or t < 2 or s < t + 1:
            raise ParamError(f"need h >= 2 and s >= t+1 >= 3, got (h,s,t)=({h},{s},{t})")
        r_star = None
        if (s - t + 1) % 2 == 0:
            r = (s - t + 1) // 2 - 1
            if 0 <= r <= t - 2:
                r_star = r
        regular = r_star is None
        # parity criterion: not regular iff s-t odd and s <= 3t-3
        assert regular == (not ((s - t) % 2 == 1 and s <= 3 * t - 3))
        return cls(h, s, t, regular, r_star)

    def type_shape(self) -> tuple[int, ...]:
        """Hilbert function (1, h, 2,...,2, 1,...,1) of a type-(s,t) algebra."""
        return (1, self.h) + (2,) * (self.t - 1) + (1,) * (self.s - self.t)

    def type_dim(self) -> int:
        return sum(self.type_shape())


@dataclass(frozen=True)
class IdealPres:
    """Ideal generators inside the ambient fixed by ``params`` (N = s)."""

    params: CoupleParams
    gens: tuple[Series, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.h != self.params.h or g.N != self.params.s:
                raise AmbientError("generator ambient does not match params")

    def span(self) -> "EchelonSubspace":
        return span_ideal(self.gens, h=self.params.h, N=self.params.s)


# ---------------------------------------------------------------------------
# echelon subspaces

IntRow = dict  # column index -> int, gcd-normalized


def _normalize_int_row(row: IntRow) -> IntRow:
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
    piv = min(row)
    sign = -1 if row[piv] < 0 else 1
    if g * sign != 1:
        row = {c: v // (g * sign) for c, v in row.items()}
    return row


class EchelonSubspace:
    """Immutable reduced-echelon subspace of the truncated monomial space.

    ``columns`` lists the ambient monomials in canonical order; ``rows`` maps
    pivot column -> monic row (dict column -> Fraction).
    """

    __slots__ = ("h", "N", "columns", "col_index", "rows")

    def __init__(self, h: int, N: int, rows: dict, columns=None, col_index=None):
        self.h = h
        self.N = N
        if columns is None:
            columns, col_index = monomial_table(h, N)
        self.columns = columns
        self.col_index = col_index
        self.rows = dict(sorted(rows.items()))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def codim(self) -> int:
        return len(self.columns) - len(self.rows)

    def pivots(self) -> tuple[int, ...]:
        return tuple(self.rows)

    def pivot_degree_counts(self) -> dict:
        out: dict[int, int] = {}
        for p in self.rows:
            d = sum(self.columns[p])
            out[d] = out.get(d, 0) + 1
        return out

    def _check_ambient(self, other: "EchelonSubspace") -> None:
        if self.h != other.h or self.N != other.N or self.columns != other.columns:
            raise AmbientError("subspace ambients differ")

    def __eq__(self, other):
        if not isinstance(other, EchelonSubspace):
            return NotImplemented
        self._check_ambient(other)
        return self.rows == other.rows

    def reduce_vector(self, vec: dict) -> dict:
        """Remainder of a coefficient vector modulo the subspace.

        Eliminating a pivot only introduces larger columns (rows have their
        minimum at the pivot), so one increasing pass over columns suffices.
        """
        import heapq

        vec = dict(vec)
        heap = sorted(vec)
        seen = set(heap)
        while heap:
            c = heapq.heappop(heap)
            f = vec.get(c)
            if not f or c not in self.rows:
                continue
            for col, v in self.rows[c].items():
                s = vec.get(col, Fraction(0)) - f * v
                if s:
                    vec[col] = s
                    if col not in seen:
                        seen.add(col)
                        heapq.heappush(heap, col)
                else:
                    vec.pop(col, None)
        return vec

    def series_to_vector(self, f: Series) -> dict:
        if f.h != self.h or f.N != self.N:
            raise AmbientError("series ambient does not match subspace")
        vec = {}
        for e, c in f.coeffs.items():
            if e not in self.col_index:
                raise AmbientError(f"monomial {e} outside subspace ambient")
            vec[self.col_index[e]] = c
        return vec

    def vector_to_series(self, vec: dict) -> Series:
        return Series(self.h, self.N, {self.columns[c]: v for c, v in vec.items()})

    def reduce(self, f: Series) -> Series:
        return self.vector_to_series(self.reduce_vector(self.series_to_vector(f)))

    def member(self, f: Series) -> bool:
        return not self.reduce_vector(self.series_to_vector(f))

    def contains(self, other: "EchelonSubspace") -> bool:
        self._check_ambient(other)
        return all(not self.reduce_vector(dict(r)) for r in other.rows.values())

    def with_high_degrees(self, j: int) -> "EchelonSubspace":
        """The sum with the span of all monomials of degree >= j."""
        high = set()
        for c, e in enumerate(self.columns):
            if sum(e) >= j:
                high.add(c)
        rows = {}
        for p, row in self.rows.items():
            if p in high:
                continue
            rows[p] = {c: v for c, v in row.items() if c not in high}
        for c in high:
            rows[c] = {c: Fraction(1)}
        return EchelonSubspace(self.h, self.N, rows, self.columns, self.col_index)

    def degree_block(self, d: int) -> "EchelonSubspace":
        """Rows with pivot of degree d, restricted to the degree-d columns.

        Meaningful when all higher-degree monomials lie in the subspace (as
        in ``with_high_degrees``), so the tails vanish after restriction.
        """
        cols = [e for e in self.columns if sum(e) == d]
        index = {e: i for i, e in enumerate(cols)}
        rows = {}
        for p, row in self.rows.items():
            e = self.columns[p]
            if sum(e) != d:
                continue
            new = {}
            for c, v in row.items():
                ec = self.columns[c]
                if sum(ec) == d:
                    new[index[ec]] = v
            rows[index[e]] = new
        return EchelonSubspace(self.h, self.N, rows, cols, index)


class _Builder:
    """Incremental fraction-free row reduction into echelon form."""

    def __init__(self):
        self.rows: dict[int, IntRow] = {}

    def insert(self, row: IntRow) -> None:
        row = dict(row)
        while row:
            piv = min(row)
            ex = self.rows.get(piv)
            if ex is None:
                self.rows[piv] = _normalize_int_row(row)
                return
            a, b = ex[piv], row[piv]
            merged = {}
            for c in set(ex) | set(row):
                v = a * row.get(c, 0) - b * ex.get(c, 0)
                if v:
                    merged[c] = v
            row = _normalize_int_row(merged)  # keep integer growth in check

    def insert_fractions(self, vec: dict) -> None:
        den = 1
        for v in vec.values():
            den = den * v.denominator // gcd(den, v.denominator)
        self.insert({c: int(v * den) for c, v in vec.items()})

    def finalize(self, h: int, N: int, columns=None, col_index=None) -> EchelonSubspace:
        # back-substitution to reduced form, then monic normalization
        rows = {p: {c: Fraction(v) for c, v in r.items()} for p, r in self.rows.items()}
        for p in sorted(rows, reverse=True):
            row = rows[p]
            inv = Fraction(1) / row[p]
            row = {c: v * inv for c, v in row.items()}
            rows[p] = row
            for q, other in rows.items():
                if q < p and p in other:
                    f = other[p]
                    for c, v in row.items():
                        s = other.get(c, Fraction(0)) - f * v
                        if s:
                            other[c] = s
                        else:
                            other.pop(c, None)
        return EchelonSubspace(h, N, rows, columns, col_index)


def span_of_series(vectors: Iterable[Series], h: int, N: int) -> EchelonSubspace:
    ambient = EchelonSubspace(h, N, {})
    b = _Builder()
    for f in vectors:
        b.insert_fractions(ambient.series_to_vector(f))
    return b.finalize(h, N, ambient.columns, ambient.col_index)


def span_ideal(gens, h: int | None = None, N: int | None = None) -> EchelonSubspace:
    """Span of { m*g : g generator, m monomial, deg(m*g) <= N }.

    This is the image of the ideal (plus n^(N+1)) in the truncated ring,
    valid for the ideals in scope because they all contain n^(N+1).
    """
    if isinstance(gens, IdealPres):
        h, N = gens.params.h, gens.params.s
        gens = gens.gens
    gens = list(gens)
    if h is None or N is None:
        if not gens:
            raise AmbientError("cannot infer ambient from empty generators")
        h, N = gens[0].h, gens[0].N
    ambient = EchelonSubspace(h, N, {})
    b = _Builder()
    for g in gens:
        if g.is_zero():
            continue
        room = N - g.order()
        for d in range(room + 1):
            for m in _monomials_of_degree(h, d):
                b.insert_fractions(ambient.series_to_vector(g.shift(m)))
    return b.finalize(h, N, ambient.columns, ambient.col_index)


def member(f: Series, U: EchelonSubspace) -> bool:
    return U.member(f)


def equal_spans(U: EchelonSubspace, V: EchelonSubspace) -> bool:
    return U == V


# ---------------------------------------------------------------------------
# invariants of the quotient algebra


def hilbert(U: EchelonSubspace) -> tuple[int, ...]:
    """H(j) = dim (U+W_j) - dim (U+W_{j+1}) for W_j = span of degrees >= j.

    Equals (#monomials of degree j) - (#pivots of U at degree j).
    """
    counts = U.pivot_degree_counts()
    return tuple(
        monomial_count(U.h, j) - counts.get(j, 0) for j in range(U.N + 1)
    )


def dimension(U: EchelonSubspace) -> int:
    return U.codim()


def type_check(U: EchelonSubspace, params: CoupleParams) -> bool:
    return hilbert(U) == params.type_shape()


def check_constructed_model(U: EchelonSubspace, params: CoupleParams) -> None:
    """Cross-check that a constructed model has the type-(s,t) dimension."""
    if dimension(U) != params.type_dim():
        raise NotTypeError(
            f"constructed ideal has dim {dimension(U)}, expected {params.type_dim()}"
        )


def quadric_initial_part(U: EchelonSubspace) -> EchelonSubspace:
    """Reduced basis of the degree-2 initial forms of the ideal."""
    return U.with_high_degrees(3).degree_block(2)


def _kernel(equations: list[dict], dim: int, h: int, N: int, columns, col_index) -> EchelonSubspace:
    """Kernel of the linear map given by equation rows over `dim` unknowns."""
    b = _Builder()
    for eq in equations:
        if eq:
            b.insert_fractions(eq)
    rref = b.finalize(h, N, columns, col_index)
    pivots = set(rref.rows)
    basis = _Builder()
    one = Fraction(1)
    for free in range(dim):
        if free in pivots:
            continue
        vec = {free: one}
        for p, row in rref.rows.items():
            if free in row:
                vec[p] = -row[free]
        basis.insert_fractions(vec)
    return basis.finalize(h, N, columns, col_index)


def socle_filtration(U: EchelonSubspace) -> tuple[int, ...]:
    """Dimensions of the annihilators (0 : m^i) in R/I for i = 1..N+1."""
    h, N = U.h, U.N
    columns, col_index = U.columns, U.col_index
    dim = len(columns)
    dim_a = U.codim()
    shifts = []
    for j in range(h):
        e = [0] * h
        e[j] = 1
        shifts.append(tuple(e))
    current = U
    dims = []
    for _ in range(N + 1):
        if current.dim == dim:
            dims.append(dim_a)
            continue
        equations: list[dict] = []
        # unknown v = sum over columns; constraint: x_j * v reduces to 0
        images = []
        for m in range(dim):
            per_var = []
            for sh in shifts:
                e = tuple(a + b for a, b in zip(columns[m], sh))
                vec = {col_index[e]: Fraction(1)} if sum(e) <= N else {}
                per_var.append(current.reduce_vector(vec))
            images.append(per_var)
        for j in range(h):
            eq_rows: dict[int, dict] = {}
            for m in range(dim):
                for c, v in images[m][j].items():
                    eq_rows.setdefault(c, {})[m] = v
            equations.extend(eq_rows.values())
        current = _kernel(equations, dim, h, N, columns, col_index)
        dims.append(current.dim - U.dim)
    return tuple(dims)


def socle_dimension(U: EchelonSubspace) -> int:
    return socle_filtration(U)[0]
