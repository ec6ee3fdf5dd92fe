"""Truncated formal power series over sparse symbolic polynomials.

Coefficients are exact multivariate polynomials in commuting symbols: the
loop generators h[alpha, s] with s >= 1 and, after evaluation at a spectral
point, the single symbol h[alpha].  The generating series of the commuting
loop generators, its logarithm, products over coroot coefficients, the t ->
t^k twist, evaluation, and the antipode (series inverse) all live here.

Symbols are tuples; keep the alpha tags of one series uniform in type so
monomials sort deterministically.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadConstantTerm, ZeroPoint
from .roots import RootSystem


def h_symbol(alpha, s: int):
    """The generator symbol h[alpha, s], s >= 1."""
    if s < 1:
        raise ValueError("generator index must be >= 1")
    return ("h", alpha, s)


def h_point_symbol(alpha):
    """The evaluated symbol h[alpha]."""
    return ("h", alpha)


def _sym_str(sym):
    return "h[%s]" % ",".join(str(x) for x in sym[1:])


class SymPoly:
    """Sparse polynomial: dict from sorted ((symbol, exp), ...) to coefficient.

    Coefficients are Fractions, promoted lazily to field elements when an
    evaluation point lives in a number field.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            if not c:
                continue
            mono = tuple(sorted((s, int(e)) for s, e in mono if e))
            cur = clean.get(mono)
            clean[mono] = c if cur is None else cur + c
        object.__setattr__(self, "terms", {m: c for m, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("SymPoly is immutable")

    @classmethod
    def const(cls, c):
        return cls({(): Fraction(c) if isinstance(c, int) else c})

    @classmethod
    def var(cls, symbol):
        return cls({((symbol, 1),): Fraction(1)})

    @classmethod
    def zero(cls):
        return cls()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_part(self):
        return self.terms.get((), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.const(other)
        return isinstance(other, SymPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms)))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SymPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            return SymPoly({m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                merged = dict(m1)
                for s, e in m2:
                    merged[s] = merged.get(s, 0) + e
                key = tuple(sorted(merged.items()))
                prod = c1 * c2
                cur = out.get(key, 0)
                total = cur + prod if cur else prod
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return SymPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        acc = SymPoly.const(1)
        for _ in range(n):
            acc = acc * self
        return acc

    def map_symbols(self, fn):
        """Rename symbols via fn (symbol -> symbol)."""
        out = {}
        for mono, c in self.terms.items():
            key = tuple(sorted((fn(s), e) for s, e in mono))
            cur = out.get(key)
            out[key] = c if cur is None else cur + c
        return SymPoly(out)

    def substitute(self, mapping):
        """Replace symbols by polynomials; unmapped symbols stay atomic."""
        acc = SymPoly.zero()
        for mono, c in self.terms.items():
            term = SymPoly.const(1)
            for sym, e in mono:
                image = mapping.get(sym)
                if image is None:
                    image = SymPoly.var(sym)
                term = term * image ** e
            acc = acc + term * c
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        def mono_key(m):
            return (sum(e for _, e in m), m)
        pieces = []
        for mono in sorted(self.terms, key=mono_key):
            c = self.terms[mono]
            factors = []
            for s, e in mono:
                factors.append(_sym_str(s) if e == 1 else "%s^%d" % (_sym_str(s), e))
            body = "*".join(factors)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append("-%s" % body)
            else:
                pieces.append("(%s)*%s" % (c, body))
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return "SymPoly(%s)" % self


class TruncSeries:
    """Power series truncated at a fixed order; coefficients are SymPoly."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError("need order + 1 coefficients")
        object.__setattr__(self, "order", order)
        object.__setattr__(
            self, "coeffs",
            tuple(c if isinstance(c, SymPoly) else SymPoly.const(c) for c in coeffs),
        )

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls(order, [SymPoly.const(1)] + [SymPoly.zero()] * order)

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("series orders differ")

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, SymPoly)):
            return TruncSeries(self.order, [c * other for c in self.coeffs])
        self._check(other)
        out = [SymPoly.zero() for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.order, out)

    def __pow__(self, n: int) -> "TruncSeries":
        acc = TruncSeries.one(self.order)
        for _ in range(n):
            acc = acc * self
        return acc

    def map_symbols(self, fn) -> "TruncSeries":
        return TruncSeries(self.order, [c.map_symbols(fn) for c in self.coeffs])

    def substitute(self, mapping) -> "TruncSeries":
        return TruncSeries(self.order, [c.substitute(mapping) for c in self.coeffs])

    def __str__(self):
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            u = "" if k == 0 else ("u" if k == 1 else "u^%d" % k)
            body = str(c)
            if u and (" " in body or "*" in body):
                body = "(%s)" % body
            pieces.append(body if not u else "%s*%s" % (body, u))
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self):
        return "TruncSeries(%s)" % self


def _exp(arg: TruncSeries) -> TruncSeries:
    if not arg.coeffs[0].is_zero:
        raise ValueError("exp needs zero constant term")
    acc = TruncSeries.one(arg.order)
    power = TruncSeries.one(arg.order)
    fact = 1
    for k in range(1, arg.order + 1):
        power = power * arg
        fact *= k
        acc = acc + power * Fraction(1, fact)
    return acc


def _log(series: TruncSeries) -> TruncSeries:
    if series.coeffs[0] != SymPoly.const(1):
        raise BadConstantTerm("log needs constant term 1")
    shifted = series - TruncSeries.one(series.order)
    acc = TruncSeries(series.order, [SymPoly.zero()] * (series.order + 1))
    power = TruncSeries.one(series.order)
    for k in range(1, series.order + 1):
        power = power * shifted
        acc = acc + power * Fraction((-1) ** (k + 1), k)
    return acc


def lambda_from_h(alpha, order: int) -> TruncSeries:
    """Generating series exp(-sum_s h[alpha,s] u^s / s) up to the order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    arg = TruncSeries(order, [SymPoly.zero()] + [
        SymPoly.var(h_symbol(alpha, s)) * Fraction(-1, s) for s in range(1, order + 1)
    ])
    return _exp(arg)


def h_from_lambda(series: TruncSeries):
    """Recover h[alpha,s] as polynomials in the series coefficients.

    Returns [h_1, ..., h_N]: s times the negated u^s coefficient of the
    logarithm.  Round trip with lambda_from_h is the identity on symbols.
    """
    logs = _log(series)
    return [logs.coeffs[s] * Fraction(-s) for s in range(1, series.order + 1)]


def generic_lambda_series(alpha, order: int) -> TruncSeries:
    """Series with atomic coefficient symbols L[alpha, r], constant term 1."""
    return TruncSeries(
        order,
        [SymPoly.const(1)] + [SymPoly.var(("L", alpha, r)) for r in range(1, order + 1)],
    )


def lambda_alpha_from_simples(rs: RootSystem, root, order: int) -> TruncSeries:
    """Series of a positive root as the product of simple-root series raised
    to the coroot coefficients; symbols are tagged by 1-based node index."""
    coeffs = rs.coroot_coeffs(root)
    acc = TruncSeries.one(order)
    for i, m in enumerate(coeffs):
        if m:
            acc = acc * lambda_from_h(i + 1, order) ** m
    return acc


def lambda_alpha_identity_holds(rs: RootSystem, root, order: int) -> bool:
    """Check that substituting h[alpha,s] = sum_i m_i h[i,s] into the
    exponential formula reproduces the product over simple roots."""
    coeffs = rs.coroot_coeffs(root)
    tag = "alpha"
    mapping = {}
    for s in range(1, order + 1):
        total = SymPoly.zero()
        for i, m in enumerate(coeffs):
            if m:
                total = total + SymPoly.var(h_symbol(i + 1, s)) * Fraction(m)
        mapping[h_symbol(tag, s)] = total
    return lambda_from_h(tag, order).substitute(mapping) == \
        lambda_alpha_from_simples(rs, root, order)


def twist(series: TruncSeries, k: int) -> TruncSeries:
    """The loop twist t -> t^k on symbols: h[alpha, s] becomes h[alpha, ks]."""
    if k < 1:
        raise ValueError("twist exponent must be >= 1")
    if k == 1:
        return series

    def fn(sym):
        if len(sym) == 3 and sym[0] == "h":
            return (sym[0], sym[1], k * sym[2])
        return sym

    return series.map_symbols(fn)


def eval_at(series: TruncSeries, point) -> TruncSeries:
    """Evaluation at a nonzero spectral point: h[alpha,s] -> point^s h[alpha]."""
    if isinstance(point, int):
        point = Fraction(point)
    if not point:
        raise ZeroPoint("evaluation point must be nonzero")
    symbols = {
        sym
        for coeff in series.coeffs
        for mono, _ in coeff.terms.items()
        for sym, _ in mono
        if len(sym) == 3 and sym[0] == "h"
    }
    mapping = {
        sym: SymPoly.var(h_point_symbol(sym[1])) * point ** sym[2] for sym in symbols
    }
    return series.substitute(mapping)


def binom_poly(symbol, k: int) -> SymPoly:
    """The divided binomial x(x-1)...(x-k+1)/k! as an expanded polynomial."""
    acc = SymPoly.const(1)
    x = SymPoly.var(symbol)
    fact = 1
    for j in range(k):
        acc = acc * (x - Fraction(j))
        fact *= j + 1
    return acc * Fraction(1, fact)


def ev_lambda_check(alpha, r: int, point) -> bool:
    """Verify that evaluation sends the u^r coefficient to
    (-point)^r * binom(h[alpha], r)."""
    if isinstance(point, int):
        point = Fraction(point)
    actual = eval_at(lambda_from_h(alpha, r), point).coeffs[r]
    expected = binom_poly(h_point_symbol(alpha), r) * (-point) ** r
    return actual == expected


def series_inverse(series: TruncSeries) -> TruncSeries:
    """Multiplicative inverse of a series with constant term 1 (the antipode
    acts on the generating series exactly this way)."""
    if series.coeffs[0] != SymPoly.const(1):
        raise BadConstantTerm("inverse needs constant term 1")
    out = [SymPoly.const(1)]
    for k in range(1, series.order + 1):
        acc = SymPoly.zero()
        for j in range(1, k + 1):
            acc = acc + series.coeffs[j] * out[k - j]
        out.append(-acc)
    return TruncSeries(series.order, out)


def h_series(alpha, order: int) -> TruncSeries:
    """The binomial series sum_k binom(h[alpha], k) u^k via evaluation at -1."""
    out = eval_at(lambda_from_h(alpha, order), Fraction(-1))
    for k in range(order + 1):
        assert out.coeffs[k] == binom_poly(h_point_symbol(alpha), k)
    return out
