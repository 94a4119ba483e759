"""Exact truncated power series, multivariate marker polynomials, and
Chebyshev machinery.

Everything here is exact.  Coefficients are Python integers; Fractions may
appear in intermediate steps (square roots, inversion of non-unit rational
constants) and are normalised back to int as soon as the denominator
clears.  Floating point is never used.

Two series types:

- ``Series``: univariate truncated power series.  ``coeffs[i]`` is the
  coefficient of x^i, valid for exponents ``0..order``.
- ``MultiSeries``: a multivariate polynomial truncated in one designated
  "size" variable; the remaining variables are statistic markers and are
  never truncated on their own.

The Chebyshev helpers work with the second-kind polynomials U_r and their
radical-cleared rescaling P_k = s^k U_k(a/(2s)) with s^2 = b.  Every ratio
U_j/U_k evaluated at arguments such as (1-x)/(2x) or (1-vx)/(2x*sqrt(vy))
becomes a ratio of honest polynomial series P_j/P_k, so square roots never
have to be represented symbolically.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


def _normal(c: Number) -> Number:
    """Collapse Fractions with denominator 1 back to int."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    return int(c)


# ---------------------------------------------------------------------------
# Univariate series
# ---------------------------------------------------------------------------

class Series:
    """Truncated power series in one variable with exact coefficients.

    Arithmetic truncates at the minimum of the operand orders.  Division
    requires an invertible (nonzero rational) constant term in the divisor;
    all the counting series in this package have constant term +-1.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = [_normal(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1 if cs else 0
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = cs[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.coeffs: tuple[Number, ...] = tuple(cs)
        self.order: int = order

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, coeff: Number, exponent: int, order: int) -> "Series":
        cs = [0] * (exponent) + [coeff]
        return cls(cs, order)

    # -- basics ------------------------------------------------------------

    def coefficient(self, n: int) -> Number:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncated(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend truncation order {self.order} to {order}")
        return Series(self.coeffs[: order + 1], order)

    def valuation(self) -> int | None:
        """Smallest exponent with nonzero coefficient, or None if zero."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r}, order={self.order})"

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "Series | None":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series([other], self.order)
        return None

    def __add__(self, other) -> "Series":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return Series([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "Series":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(0, n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return Series(out, n)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Series":
        if exponent < 0:
            raise ValueError("negative powers: invert explicitly")
        result = Series.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Series":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ValueError("series with zero constant term is not invertible")
        g0 = _normal(Fraction(1, 1) / c0)
        out: list[Number] = [g0]
        for n in range(1, self.order + 1):
            acc = sum(self.coeffs[i] * out[n - i] for i in range(1, n + 1))
            out.append(_normal(-g0 * acc))
        return Series(out, self.order)

    def __truediv__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series([_normal(Fraction(c) / other) for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return self * other.inverse()

    # -- shifts ------------------------------------------------------------

    def shifted(self, k: int) -> "Series":
        """Multiply by x^k, keeping the same truncation order."""
        if k < 0:
            raise ValueError("use divided_by_xpow for negative shifts")
        return Series([0] * k + list(self.coeffs), self.order + k).truncated(self.order)

    def divided_by_xpow(self, k: int) -> "Series":
        """Exact division by x^k; the low-order coefficients must vanish.

        Knowledge of coefficients only extends to the original order, so the
        result's order drops by k.
        """
        if k > self.order:
            raise ValueError("cannot divide beyond truncation order")
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"series is not divisible by x^{k}")
        return Series(self.coeffs[k:], self.order - k)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Series":
        return cls([Fraction(c) for c in data["coeffs"]], int(data["order"]))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs)


# ---------------------------------------------------------------------------
# Multivariate series (markers + one graded size variable)
# ---------------------------------------------------------------------------

Mono = tuple[tuple[str, int], ...]


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def _mono_size(m: Mono, size_var: str) -> int:
    for v, e in m:
        if v == size_var:
            return e
    return 0


def _mono_divide(m: Mono, d: Mono) -> Mono | None:
    """m / d as monomials, or None when some exponent would go negative."""
    dd = dict(m)
    for v, e in d:
        have = dd.get(v, 0) - e
        if have < 0:
            return None
        if have:
            dd[v] = have
        else:
            dd.pop(v, None)
    return tuple(sorted(dd.items()))


def mono_of(exponents: Mapping[str, int]) -> Mono:
    return tuple(sorted((v, e) for v, e in exponents.items() if e))


class MultiSeries:
    """Multivariate polynomial, truncated in one designated size variable.

    Terms map monomials (sorted tuples of (variable, exponent) pairs with
    positive exponents) to exact coefficients.  Arithmetic drops every term
    whose size-variable exponent exceeds ``order``; marker variables are
    never truncated.
    """

    __slots__ = ("terms", "size_var", "order")

    def __init__(self, terms: Mapping[Mono, Number], size_var: str, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        clean: dict[Mono, Number] = {}
        for m, c in terms.items():
            c = _normal(c)
            if c == 0:
                continue
            if any(e <= 0 for _, e in m):
                raise ValueError(f"monomial {m} has nonpositive exponent")
            if _mono_size(m, size_var) > order:
                continue
            clean[m] = c
        self.terms: dict[Mono, Number] = clean
        self.size_var = size_var
        self.order = order

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c: Number, size_var: str, order: int) -> "MultiSeries":
        return cls({(): c} if c else {}, size_var, order)

    @classmethod
    def variable(cls, name: str, size_var: str, order: int) -> "MultiSeries":
        return cls({((name, 1),): 1}, size_var, order)

    @classmethod
    def monomial(cls, coeff: Number, exponents: Mapping[str, int],
                 size_var: str, order: int) -> "MultiSeries":
        return cls({mono_of(exponents): coeff}, size_var, order)

    @classmethod
    def lift(cls, series: Series, var: str, size_var: str | None = None) -> "MultiSeries":
        """Embed a univariate series, writing its variable as ``var``."""
        sv = size_var if size_var is not None else var
        terms = {}
        for i, c in enumerate(series.coeffs):
            if c:
                terms[mono_of({var: i})] = c
        return cls(terms, sv, series.order)

    # -- basics ------------------------------------------------------------

    def coefficient(self, exponents: Mapping[str, int]) -> Number:
        return self.terms.get(mono_of(exponents), 0)

    def truncated(self, order: int) -> "MultiSeries":
        if order > self.order:
            raise ValueError(f"cannot extend truncation order {self.order} to {order}")
        return MultiSeries(self.terms, self.size_var, order)

    def size_slice(self, n: int) -> dict[Mono, Number]:
        """Terms of size-degree n, with the size variable removed."""
        if n > self.order:
            raise ValueError(f"slice {n} beyond truncation order {self.order}")
        out: dict[Mono, Number] = {}
        for m, c in self.terms.items():
            if _mono_size(m, self.size_var) == n:
                red = tuple((v, e) for v, e in m if v != self.size_var)
                out[red] = c
        return out

    def valuation(self) -> int | None:
        """Smallest size-degree with a nonzero term, or None if zero."""
        if not self.terms:
            return None
        return min(_mono_size(m, self.size_var) for m in self.terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self.size_var == other.size_var and self.order == other.order
                and self.terms == other.terms)

    def __repr__(self) -> str:
        return (f"MultiSeries({len(self.terms)} terms, size_var={self.size_var!r}, "
                f"order={self.order})")

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "MultiSeries | None":
        if isinstance(other, MultiSeries):
            if other.size_var != self.size_var:
                raise ValueError("size variable mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiSeries.constant(other, self.size_var, self.order)
        return None

    def __add__(self, other) -> "MultiSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        terms = dict(self.terms)
        for m, c in o.terms.items():
            terms[m] = terms.get(m, 0) + c
        return MultiSeries(terms, self.size_var, n)

    __radd__ = __add__

    def __neg__(self) -> "MultiSeries":
        return MultiSeries({m: -c for m, c in self.terms.items()},
                           self.size_var, self.order)

    def __sub__(self, other) -> "MultiSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "MultiSeries":
        return (-self) + other

    def __mul__(self, other) -> "MultiSeries":
        if isinstance(other, (int, Fraction)):
            return MultiSeries({m: c * other for m, c in self.terms.items()},
                               self.size_var, self.order)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        out: dict[Mono, Number] = {}
        for m1, c1 in self.terms.items():
            s1 = _mono_size(m1, self.size_var)
            if s1 > n:
                continue
            for m2, c2 in o.terms.items():
                if s1 + _mono_size(m2, self.size_var) > n:
                    continue
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiSeries(out, self.size_var, n)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiSeries":
        if exponent < 0:
            raise ValueError("negative powers: invert explicitly")
        result = MultiSeries.constant(1, self.size_var, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "MultiSeries":
        """Inverse by recursion on the size grading.

        The size-degree-0 slice must be a plain nonzero constant; marker
        polynomials in the constant slice are not invertible here.
        """
        slice0 = self.size_slice(0)
        if set(slice0) - {()}:
            raise ValueError("constant slice involves marker variables; not invertible")
        c0 = slice0.get((), 0)
        if c0 == 0:
            raise ValueError("series with zero constant term is not invertible")
        g0 = _normal(Fraction(1, 1) / c0)
        # f_slices[i]: reduced-monomial dict for size-degree i
        f_slices = [self.size_slice(i) for i in range(self.order + 1)]
        g_slices: list[dict[Mono, Number]] = [{(): g0}]
        for n in range(1, self.order + 1):
            acc: dict[Mono, Number] = {}
            for i in range(1, n + 1):
                for m1, c1 in f_slices[i].items():
                    for m2, c2 in g_slices[n - i].items():
                        m = _mono_mul(m1, m2)
                        acc[m] = acc.get(m, 0) + c1 * c2
            g_slices.append({m: _normal(-g0 * c) for m, c in acc.items() if c})
        terms: dict[Mono, Number] = {}
        sv = self.size_var
        for n, sl in enumerate(g_slices):
            for m, c in sl.items():
                if c:
                    terms[_mono_mul(m, mono_of({sv: n}))] = c
        return MultiSeries(terms, sv, self.order)

    def __truediv__(self, other) -> "MultiSeries":
        if isinstance(other, (int, Fraction)):
            return MultiSeries(
                {m: _normal(Fraction(c) / other) for m, c in self.terms.items()},
                self.size_var, self.order)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def divided_by_monomial(self, coeff: Number, exponents: Mapping[str, int]) -> "MultiSeries":
        """Exact division by coeff * monomial; raises when not divisible."""
        d = mono_of(exponents)
        out: dict[Mono, Number] = {}
        for m, c in self.terms.items():
            q = _mono_divide(m, d)
            if q is None:
                raise ValueError(f"term {m} not divisible by {d}")
            out[q] = _normal(Fraction(c) / coeff)
        return MultiSeries(out, self.size_var,
                           self.order - _mono_size(d, self.size_var))

    # -- substitutions -------------------------------------------------------

    def substitute_ones(self, names: Iterable[str]) -> "MultiSeries":
        """Set the named marker variables to 1."""
        drop = set(names)
        if self.size_var in drop:
            raise ValueError("cannot substitute the size variable")
        out: dict[Mono, Number] = {}
        for m, c in self.terms.items():
            red = tuple((v, e) for v, e in m if v not in drop)
            out[red] = out.get(red, 0) + c
        return MultiSeries(out, self.size_var, self.order)

    def renamed(self, mapping: Mapping[str, str]) -> "MultiSeries":
        out: dict[Mono, Number] = {}
        for m, c in self.terms.items():
            d: dict[str, int] = {}
            for v, e in m:
                w = mapping.get(v, v)
                d[w] = d.get(w, 0) + e
            mm = mono_of(d)
            out[mm] = out.get(mm, 0) + c
        return MultiSeries(out, mapping.get(self.size_var, self.size_var), self.order)

    def as_series(self) -> Series:
        """Collapse to a univariate Series; only the size variable may occur."""
        cs: list[Number] = [0] * (self.order + 1)
        for m, c in self.terms.items():
            if any(v != self.size_var for v, _ in m):
                raise ValueError(f"marker variable left in {m}")
            cs[_mono_size(m, self.size_var)] = c
        return Series(cs, self.order)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        items = []
        for m in sorted(self.terms, key=lambda m: (_mono_size(m, self.size_var), m)):
            items.append({"monomial": {v: e for v, e in m},
                          "coeff": str(self.terms[m])})
        return {"size_var": self.size_var, "order": self.order, "terms": items}

    def __str__(self) -> str:
        return json.dumps(self.to_json())


# ---------------------------------------------------------------------------
# Square roots
# ---------------------------------------------------------------------------

def sqrt_series(s: Series, order: int | None = None) -> Series:
    """Square root of a series with constant term 1.

    Returns t with t^2 = s up to the truncation order and t(0) = 1.
    Coefficients may be Fractions when s is not a perfect square.
    """
    if order is None:
        order = s.order
    if order > s.order:
        raise ValueError("order exceeds the operand's truncation order")
    if s.coeffs[0] != 1:
        raise ValueError("sqrt requires constant term 1")
    out: list[Number] = [1]
    for n in range(1, order + 1):
        acc = sum(out[i] * out[n - i] for i in range(1, n))
        out.append(_normal(Fraction(s.coeffs[n] - acc, 2)))
    return Series(out, order)


def sqrt_multiseries(s: MultiSeries) -> MultiSeries:
    """Square root of a multivariate series whose constant slice is 1."""
    if s.size_slice(0) != {(): 1}:
        raise ValueError("sqrt requires constant term 1")
    f_slices = [s.size_slice(i) for i in range(s.order + 1)]
    t_slices: list[dict[Mono, Number]] = [{(): 1}]
    for n in range(1, s.order + 1):
        acc: dict[Mono, Number] = {}
        for i in range(1, n):
            for m1, c1 in t_slices[i].items():
                for m2, c2 in t_slices[n - i].items():
                    m = _mono_mul(m1, m2)
                    acc[m] = acc.get(m, 0) + c1 * c2
        sl: dict[Mono, Number] = {}
        for m in set(f_slices[n]) | set(acc):
            c = _normal(Fraction(f_slices[n].get(m, 0) - acc.get(m, 0), 2))
            if c:
                sl[m] = c
        t_slices.append(sl)
    terms: dict[Mono, Number] = {}
    for n, sl in enumerate(t_slices):
        for m, c in sl.items():
            terms[_mono_mul(m, mono_of({s.size_var: n}))] = c
    return MultiSeries(terms, s.size_var, s.order)


# ---------------------------------------------------------------------------
# Chebyshev polynomials of the second kind
# ---------------------------------------------------------------------------

def poly_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return poly_add(a, tuple(-c for c in b))


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def chebyshev_u(r: int) -> tuple[int, ...]:
    """Coefficient tuple (ascending degree) of U_r, second kind.

    U_0 = 1, U_1 = 2t, U_r = 2t*U_{r-1} - U_{r-2}; the same three-term
    recurrence extends to negative indices (U_{-1} = 0, U_{-2} = -1).
    """
    two_t = (0, 2)
    if r >= 0:
        prev, cur = (-1,), ()          # U_{-2}, U_{-1}
        for _ in range(r + 1):
            prev, cur = cur, poly_sub(poly_mul(two_t, cur), prev)
        return cur
    prev, cur = (0, 2), (1,)           # U_1, U_0
    for _ in range(-r):
        prev, cur = cur, poly_sub(poly_mul(two_t, cur), prev)
    return cur


def cheb_p(k: int, a, b):
    """Radical-cleared Chebyshev rescaling P_k with P_k = s^k U_k(a/(2s)),
    s^2 = b, computed from P_0 = 1, P_1 = a, P_k = a P_{k-1} - b P_{k-2}.

    ``a`` and ``b`` may be Series or MultiSeries (anything with ring ops).
    With a = 1-x, b = x^2 this realises x^k U_k((1-x)/(2x)); with a = 1-vx,
    b = vyx^2 it realises (x sqrt(vy))^k U_k((1-vx)/(2x sqrt(vy))).
    """
    if k < -1:
        raise ValueError("cheb_p is defined for k >= -1")
    zero = a * 0
    if k == -1:
        return zero
    p_prev = zero           # P_{-1}
    p_cur = zero + 1        # P_0
    for _ in range(k):
        p_prev, p_cur = p_cur, a * p_cur - b * p_prev
    return p_cur


# ---------------------------------------------------------------------------
# Rational expansion and continued fractions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyPair:
    """A numerator/denominator pair of polynomial series."""
    num: object
    den: object


def expand_rational(pp: PolyPair, order: int):
    """num/den truncated at ``order``; den needs an invertible constant."""
    num, den = pp.num, pp.den
    return (num.truncated(min(order, num.order))
            / den.truncated(min(order, den.order))).truncated(order)


def cf_eval(numerators: Callable[[int], object],
            denominators: Callable[[int], object],
            depth: int):
    """Evaluate 1/(d_0 - n_1/(d_1 - n_2/(... - n_K/d_K))) bottom-up.

    ``numerators(j)`` supplies the level-j numerator (j = 1..depth) and
    ``denominators(j)`` the level-j denominator (j = 0..depth).  Each
    numerator must have size valuation >= 1 so that deeper levels only
    affect higher-order coefficients; with depth >= order the truncated
    result is independent of anything below.
    """
    val = denominators(depth)
    for j in range(depth - 1, -1, -1):
        num = numerators(j + 1)
        v = num.valuation()
        if v is not None and v < 1:
            raise ValueError(f"level-{j + 1} numerator has zero-order terms")
        val = denominators(j) - num / val
    return (val * 0 + 1) / val


# ---------------------------------------------------------------------------
# Classical counting series
# ---------------------------------------------------------------------------

def catalan_series(order: int) -> Series:
    """C(x) = (1 - sqrt(1-4x)) / (2x): 1, 1, 2, 5, 14, ..."""
    root = sqrt_series(Series([1, -4], order + 1))
    num = Series.one(order + 1) - root
    return (num.divided_by_xpow(1)) / 2


def motzkin_series(order: int) -> Series:
    """M(x) = (1 - x - sqrt(1-2x-3x^2)) / (2x^2): 1, 1, 2, 4, 9, 21, ..."""
    root = sqrt_series(Series([1, -2, -3], order + 2))
    num = Series([1, -1], order + 2) - root
    return (num.divided_by_xpow(2)) / 2


def motzkin_numbers(count: int) -> list[int]:
    """The first ``count`` Motzkin numbers [1, 1, 2, 4, 9, 21, ...]."""
    coeffs = motzkin_series(max(count - 1, 0)).coeffs[:count]
    assert all(isinstance(c, int) for c in coeffs)
    return list(coeffs)
