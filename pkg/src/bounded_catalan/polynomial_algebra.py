"""Exact univariate polynomial and rational-function arithmetic.

Coefficients are arbitrary-precision rationals (``fractions.Fraction``);
polynomials are dense, indexed by degree, with trailing zeros trimmed.
On top of the ring arithmetic this module provides monic gcd, reduction
of rational functions, power-series coefficient extraction, Sturm-sequence
isolation of positive real roots, and fraction-free (Bareiss-style)
elimination for polynomial matrices.

The heavy elimination paths run on raw integer coefficient lists; the
public types only wrap the results.  All operations are pure functions of
their inputs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm as int_lcm
from typing import Iterable, Sequence


class SingularBlockError(RuntimeError):
    """A linear block expected to be invertible turned out singular."""


# ---------------------------------------------------------------------------
# Integer-coefficient polynomial helpers (dense lists, index = degree).
# These run the hot loops; ExactPoly wraps their results.
# ---------------------------------------------------------------------------

IntPoly = list


def _trim(c: IntPoly) -> IntPoly:
    while c and c[-1] == 0:
        c.pop()
    return c


def _add_i(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _sub_i(a: IntPoly, b: IntPoly) -> IntPoly:
    out = a[:] + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return _trim(out)


def _mul_i(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return []
    if len(a) > len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            seg = out[i : i + len(b)]
            out[i : i + len(b)] = [x + ai * y for x, y in zip(seg, b)]
    return _trim(out)


def _scale_i(a: IntPoly, k: int) -> IntPoly:
    if k == 0:
        return []
    return [c * k for c in a]


def _divexact_i(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient a / b when the division is exact; raises otherwise."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    r = a[:]
    lb = b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        head = r[len(b) - 1 + i]
        if head == 0:
            continue
        t, rem = divmod(head, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[i] = t
        for j, bj in enumerate(b):
            r[i + j] -= t * bj
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _content_i(a: IntPoly) -> int:
    g = 0
    for c in a:
        g = int_gcd(g, c)
        if g == 1:
            break
    return g


def _primitive_i(a: IntPoly) -> IntPoly:
    """Divide out the (positive) integer content; preserves signs."""
    if not a:
        return []
    g = _content_i(a)
    return [c // g for c in a] if g > 1 else a[:]


def _prem_even_i(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b scaled by an even power of lc(b).

    The scaling factor lc(b)^(2t) is positive, so the sign pattern of the
    true remainder is preserved (needed for Sturm sequences).
    """
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return a[:]
    r = a[:]
    lb = b[-1]
    steps = 0
    for i in range(da - db, -1, -1):
        coef = r[db + i]
        r = [lb * c for c in r]
        steps += 1
        for j in range(db + 1):
            r[i + j] -= coef * b[j]
    if steps % 2:
        r = [lb * c for c in r]
    return _trim(r)


def _gcd_i(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd of integer polynomials (positive leading coefficient).

    Primitive pseudo-remainder sequence; denominators are cleared to
    primitive integer polynomials before each remainder step so the
    coefficients stay controlled.
    """
    a, b = _primitive_i(a), _primitive_i(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, _primitive_i(_prem_even_i(a, b))
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def _eval_i(a: IntPoly, x):
    """Horner evaluation; exact for Fraction x, float for float x."""
    acc = 0 * x
    for c in reversed(a):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Public exact types
# ---------------------------------------------------------------------------


class ExactPoly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "ExactPoly":
        return cls()

    @classmethod
    def one(cls) -> "ExactPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "ExactPoly":
        return cls([0] * degree + [coeff])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial given degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def int_coeffs(self) -> IntPoly:
        """Coefficients as plain integers; raises if any is non-integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return out

    def _cleared(self) -> tuple[IntPoly, int]:
        """(integer polynomial, positive scale) with self == intpoly / scale."""
        scale = 1
        for c in self.coeffs:
            scale = int_lcm(scale, c.denominator)
        return [int(c * scale) for c in self.coeffs], scale

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return ExactPoly(out)

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        return self + (-other)

    def __neg__(self) -> "ExactPoly":
        return ExactPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "ExactPoly":
        if isinstance(other, (int, Fraction)):
            return ExactPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ExactPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ExactPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; exact when x is a Fraction or int."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "ExactPoly":
        return ExactPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    # -- comparison / rendering ---------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for deg, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if deg == 0:
                body = str(mag)
            else:
                xpow = "x" if deg == 1 else f"x^{deg}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ExactPoly({list(self.coeffs)!r})"


class RationalFn:
    """Reduced ratio of two ExactPoly; construct via :func:`rf_reduce`.

    Invariants: gcd(num, den) = 1 and the lowest-order nonzero coefficient
    of den is +1 (well defined here because every denominator in this
    artifact has nonzero constant term).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ExactPoly, den: ExactPoly):
        self.num = num
        self.den = den

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFn)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFn({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# Ring operations (module-level aliases), gcd, reduction, series
# ---------------------------------------------------------------------------


def poly_add(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    return a + b


def poly_sub(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    return a - b


def poly_mul(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    return a * b


def poly_gcd(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Monic greatest common divisor (Euclidean algorithm over Q).

    Internally the operands are cleared to primitive integer polynomials
    before each remainder step to keep coefficient growth in check.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        g = b._cleared()[0]
    elif b.is_zero():
        g = a._cleared()[0]
    else:
        g = _gcd_i(a._cleared()[0], b._cleared()[0])
    lead = Fraction(g[-1])
    return ExactPoly([Fraction(c) / lead for c in g])


def rf_reduce(num: ExactPoly, den: ExactPoly) -> RationalFn:
    """Reduce num/den: divide out the gcd, then scale so the lowest-order
    nonzero denominator coefficient is +1."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if den.constant_term() == 0:
        raise ValueError("denominator must have nonzero constant term")
    if num.is_zero():
        return RationalFn(ExactPoly(), ExactPoly.one())
    ni, ns = num._cleared()
    di, ds = den._cleared()
    g = _gcd_i(ni, di)
    if len(g) > 1:
        ni = _divexact_i(ni, g)
        di = _divexact_i(di, g)
    # scale: den * (ds-adjust) ... lowest nonzero coefficient of den -> +1
    low = next(c for c in di if c != 0)
    num_scale = Fraction(ds, ns) / low
    den_scale = Fraction(1, low)
    return RationalFn(
        ExactPoly([c * num_scale for c in ni]),
        ExactPoly([c * den_scale for c in di]),
    )


def series_coeffs(f: RationalFn, n_max: int) -> list[Fraction]:
    """First n_max + 1 Taylor coefficients of f at 0, via the linear
    recurrence induced by the denominator.  Exact."""
    den = f.den.coeffs
    num = f.num.coeffs
    if not den or den[0] == 0:
        raise ValueError("denominator constant term must be nonzero")
    d0 = den[0]
    out: list[Fraction] = []
    for n in range(n_max + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for j in range(1, min(n, len(den) - 1) + 1):
            acc -= den[j] * out[n - j]
        out.append(Fraction(acc) / d0)
    return out


# ---------------------------------------------------------------------------
# Sturm sequences and positive real root isolation
# ---------------------------------------------------------------------------


def _sturm_chain(p: IntPoly) -> list[IntPoly]:
    chain = [p[:]]
    dp = _trim([i * c for i, c in enumerate(p)][1:])
    if dp:
        chain.append(dp)
        while True:
            r = _prem_even_i(chain[-2], chain[-1])
            if not r:
                break
            chain.append([-c for c in _primitive_i(r)])
            if len(chain[-1]) == 1:
                break
    return chain


def _variations(chain: list[IntPoly], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = _eval_i(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_roots_positive(
    p: ExactPoly, interval: tuple | None = None, tol: float = 1e-9
) -> list[float]:
    """Distinct real roots of p in the half-open interval (lo, hi].

    Sturm-sequence counting isolates single-root subintervals; each root
    is then bracketed by sign bisection on the square-free part of p down
    to width < tol.  Signs are evaluated exactly at rational points, so
    the brackets are rigorous; the reported root is the bracket midpoint
    (or the exact point when a bisection point happens to be a root).
    Defaults to the interval (0, 1].
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = interval if interval is not None else (0, 1)
    lo_f, hi_f = Fraction(lo), Fraction(hi)
    if not lo_f < hi_f:
        raise ValueError("empty interval")

    pi = _primitive_i(p._cleared()[0])
    dpi = _trim([i * c for i, c in enumerate(pi)][1:])
    sf = _divexact_i(pi, _gcd_i(pi, dpi)) if dpi else pi
    chain = _sturm_chain(sf)
    tol_f = Fraction(tol)

    roots: list[float] = []

    def refine(a: Fraction, b: Fraction) -> None:
        # exactly one root in (a, b], sf(a) != 0
        if _eval_i(sf, b) == 0:
            roots.append(float(b))
            return
        sign_a = 1 if _eval_i(sf, a) > 0 else -1
        while b - a > tol_f:
            mid = (a + b) / 2
            v = _eval_i(sf, mid)
            if v == 0:
                roots.append(float(mid))
                return
            if (1 if v > 0 else -1) == sign_a:
                a = mid
            else:
                b = mid
        roots.append(float((a + b) / 2))

    def isolate(a: Fraction, b: Fraction, va: int, vb: int) -> None:
        count = va - vb
        if count <= 0:
            return
        if count == 1 and _eval_i(sf, a) != 0:
            refine(a, b)
            return
        mid = (a + b) / 2
        vm = _variations(chain, mid)
        isolate(a, mid, va, vm)
        isolate(mid, b, vm, vb)

    isolate(lo_f, hi_f, _variations(chain, lo_f), _variations(chain, hi_f))
    return sorted(roots)


# ---------------------------------------------------------------------------
# Fraction-free elimination for sparse polynomial matrices
# ---------------------------------------------------------------------------


def _solve_sparse_int(
    rows: list[dict[int, IntPoly]],
    rhs: list[IntPoly] | None,
    require_nonsingular: bool = True,
) -> tuple[list[IntPoly] | None, IntPoly, IntPoly]:
    """Fraction-free elimination of a square integer-polynomial matrix.

    ``rows[i]`` maps column index to a nonzero integer polynomial; the
    structures are consumed.  Returns ``(nums, den, det)`` such that the
    solution of A x = rhs is x_i = nums[i] / den with den = +-det(A); for
    rhs None only the determinant is computed (``nums`` is None).

    Elimination runs in two phases.  While some active diagonal entry is
    the constant 1 (no self-feedback yet), that row is eliminated by plain
    substitution, choosing the cheapest pivot by Markowitz count; these
    steps are division free and preserve sparsity.  The remaining dense
    core is processed by one-step Bareiss elimination (divisions by the
    previous pivot are exact), and the solution is recovered by
    fraction-free back substitution over the core determinant.
    """
    k = len(rows)
    solving = rhs is not None
    if not solving:
        rhs = [[] for _ in range(k)]
    col_rows: list[set[int]] = [set() for _ in range(k)]
    for i, row in enumerate(rows):
        for c in row:
            col_rows[c].add(i)
    active = set(range(k))
    unit_pivots: list[int] = []

    one = [1]
    while True:
        best = None
        for r in active:
            if rows[r].get(r) == one:
                cost = (len(col_rows[r]) - 1) * (len(rows[r]) - 1)
                if best is None or cost < best[0]:
                    best = (cost, r)
        if best is None:
            break
        r = best[1]
        pivot_row = rows[r]
        for i in list(col_rows[r]):
            if i == r or i not in active:
                continue
            f = rows[i].pop(r)
            col_rows[r].discard(i)
            for c, poly in pivot_row.items():
                if c == r:
                    continue
                cur = _sub_i(rows[i].get(c, []), _mul_i(f, poly))
                if cur:
                    rows[i][c] = cur
                    col_rows[c].add(i)
                else:
                    rows[i].pop(c, None)
                    col_rows[c].discard(i)
            if solving:
                rhs[i] = _sub_i(rhs[i], _mul_i(f, rhs[r]))
        active.discard(r)
        unit_pivots.append(r)

    core_rows = sorted(active)
    core_cols = sorted(active)
    kk = len(core_rows)
    M = [[rows[r].get(c, []) for c in core_cols] + [rhs[r]] for r in core_rows]

    sign = 1
    prev = [1]
    pivots: list[IntPoly] = []
    for t in range(kk):
        cand = [i for i in range(t, kk) if M[i][t]]
        if not cand:
            if require_nonsingular:
                raise SingularBlockError("singular block in exact solve")
            return None, [], []
        piv_i = min(cand, key=lambda i: (len(M[i][t]), sum(1 for z in M[i] if z)))
        if piv_i != t:
            M[t], M[piv_i] = M[piv_i], M[t]
            sign = -sign
        piv = M[t][t]
        for i in range(t + 1, kk):
            mult = M[i][t]
            row_i, row_t = M[i], M[t]
            if mult:
                for j in range(t + 1, kk + 1):
                    row_i[j] = _divexact_i(
                        _sub_i(_mul_i(piv, row_i[j]), _mul_i(mult, row_t[j])), prev
                    )
                row_i[t] = []
            else:
                for j in range(t + 1, kk + 1):
                    if row_i[j]:
                        row_i[j] = _divexact_i(_mul_i(piv, row_i[j]), prev)
        pivots.append(piv)
        prev = piv

    det_core = pivots[-1] if pivots else [1]
    det = _scale_i(det_core, sign)
    if not solving:
        return None, det_core, det

    # Back substitution: every unknown comes out as nums[i] / det_core.
    nums: list[IntPoly | None] = [None] * k
    core_sol: list[IntPoly] = [[] for _ in range(kk)]
    for t in range(kk - 1, -1, -1):
        acc = _mul_i(M[t][kk], det_core)
        for j in range(t + 1, kk):
            if M[t][j] and core_sol[j]:
                acc = _sub_i(acc, _mul_i(M[t][j], core_sol[j]))
        core_sol[t] = _divexact_i(acc, pivots[t])
    for t, c in enumerate(core_cols):
        nums[c] = core_sol[t]
    for r in reversed(unit_pivots):
        acc = _mul_i(rhs[r], det_core)
        for c, poly in rows[r].items():
            if c == r:
                continue
            if nums[c]:
                acc = _sub_i(acc, _mul_i(poly, nums[c]))
        nums[r] = acc
    return nums, det_core, det


def poly_mat_det(mat: Sequence[Sequence[ExactPoly]]) -> ExactPoly:
    """Determinant of a square ExactPoly matrix by fraction-free elimination."""
    k = len(mat)
    if any(len(row) != k for row in mat):
        raise ValueError("matrix must be square")
    if k == 0:
        return ExactPoly.one()
    rows: list[dict[int, IntPoly]] = []
    scale = Fraction(1)
    for row in mat:
        cleared: dict[int, IntPoly] = {}
        row_scale = 1
        for entry in row:
            for c in entry.coeffs:
                row_scale = int_lcm(row_scale, c.denominator)
        for j, entry in enumerate(row):
            if not entry.is_zero():
                cleared[j] = [int(c * row_scale) for c in entry.coeffs]
        scale *= row_scale
        rows.append(cleared)
    _, _, det = _solve_sparse_int(rows, None, require_nonsingular=False)
    if det == []:
        return ExactPoly()
    return ExactPoly([Fraction(c) / scale for c in det])
