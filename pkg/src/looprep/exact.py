"""Exact arithmetic foundation.

Rationals are stdlib fractions.Fraction (already canonical: reduced, positive
denominator, hashable).  On top of that this module provides univariate
polynomials over Q, number field elements Q[theta]/(m), dense matrices over a
number field, rational linear algebra helpers, and the integer Smith normal
form.  Everything is immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import Singular, ZeroDivisor


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class PolyQ:
    """Univariate polynomial over Q, coefficients stored ascending in degree.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyQ is immutable")

    @classmethod
    def x(cls, degree: int = 1) -> "PolyQ":
        return cls([0] * degree + [1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    def __neg__(self) -> "PolyQ":
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyQ([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "PolyQ"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quo = [Fraction(0)] * max(len(rem) - dq, 1)
        while len(rem) - 1 >= dq and any(rem):
            k = len(rem) - 1
            if rem[k] == 0:
                rem.pop()
                continue
            f = rem[k] / lead
            quo[k - dq] = f
            for j in range(dq + 1):
                rem[k - dq + j] -= f * other.coeffs[j]
            rem.pop()
        return PolyQ(quo), PolyQ(rem)

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[0]

    def monic(self) -> "PolyQ":
        if self.is_zero:
            return self
        return self * (1 / self.coeffs[-1])

    def derivative(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate by Horner; works for Fraction and FieldElem arguments."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0) if isinstance(x, (int, Fraction)) else x - x
        return acc

    def to_json(self):
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        if self.is_zero:
            return "PolyQ(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                u = "u" if i == 1 else "u^%d" % i
                terms.append(u if c == 1 else "%s*%s" % (c, u))
        return "PolyQ(%s)" % " + ".join(terms)


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: PolyQ, b: PolyQ):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = PolyQ([1]), PolyQ()
    t0, t1 = PolyQ(), PolyQ([1])
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.is_zero:
        lead = 1 / r0.coeffs[-1]
        r0, s0, t0 = r0 * lead, s0 * lead, t0 * lead
    return r0, s0, t0


class NumberField:
    """The quotient ring Q[theta]/(m) for a monic modulus m of degree >= 1.

    Arithmetic assumes m is irreducible; a reducible modulus is detected at
    the first inversion of a zero divisor (ZeroDivisor).
    """

    __slots__ = ("modulus", "degree")

    def __init__(self, modulus: PolyQ):
        if not isinstance(modulus, PolyQ):
            modulus = PolyQ(modulus)
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if not modulus.is_monic:
            raise ValueError("modulus must be monic")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "degree", modulus.degree)

    def __setattr__(self, name, value):
        raise AttributeError("NumberField is immutable")

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def elem(self, coords: Iterable) -> "FieldElem":
        """Element from coordinates (any length; reduced mod the modulus)."""
        return self.from_poly(PolyQ(coords))

    def from_poly(self, p: PolyQ) -> "FieldElem":
        r = p % self.modulus
        cs = list(r.coeffs) + [Fraction(0)] * (self.degree - len(r.coeffs))
        return FieldElem(self, tuple(cs))

    def scalar(self, c) -> "FieldElem":
        return self.elem([c])

    @property
    def zero(self) -> "FieldElem":
        return self.scalar(0)

    @property
    def one(self) -> "FieldElem":
        return self.scalar(1)

    @property
    def gen(self) -> "FieldElem":
        """The image of theta."""
        return self.elem([0, 1])

    def __repr__(self):
        return "NumberField(%r)" % (self.modulus,)


class FieldElem:
    """An element of a NumberField, as a coordinate vector in powers of theta.

    Canonical form: exactly field.degree Fraction coordinates.  Hashable, so
    elements can key dictionaries and sets; the coords tuple doubles as the
    deterministic sort key.
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        if len(coords) != field.degree:
            raise ValueError("coordinate length must equal the field degree")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field.modulus != self.field.modulus:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        return (
            isinstance(other, FieldElem)
            and self.field.modulus == other.field.modulus
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.field, tuple(a * other for a in self.coords))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.from_poly(self.as_poly() * o.as_poly())

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def inverse(self) -> "FieldElem":
        """Multiplicative inverse via extended Euclid against the modulus.

        Raises ZeroDivisor for zero and for zero divisors (the runtime guard
        against a reducible modulus).
        """
        if not self:
            raise ZeroDivisor("inverse of zero")
        g, s, _ = poly_xgcd(self.as_poly(), self.field.modulus)
        if g.degree != 0:
            raise ZeroDivisor(
                "zero divisor: gcd with modulus is %r (reducible modulus)" % g
            )
        return self.field.from_poly(s)

    def as_poly(self) -> PolyQ:
        return PolyQ(self.coords)

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_json(self):
        return [str(c) for c in self.coords]

    def __repr__(self):
        return "FieldElem(%s)" % ", ".join(str(c) for c in self.coords)


class MatrixL:
    """Dense matrix over a number field; rows of FieldElem entries."""

    __slots__ = ("field", "rows")

    def __init__(self, field: NumberField, rows):
        rows = tuple(tuple(r) for r in rows)
        width = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged matrix")
            for e in r:
                if not isinstance(e, FieldElem) or e.field.modulus != field.modulus:
                    raise ValueError("entries must live in the given field")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixL is immutable")

    @classmethod
    def identity(cls, field: NumberField, n: int) -> "MatrixL":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, field: NumberField, entries) -> "MatrixL":
        entries = list(entries)
        zero = field.zero
        return cls(
            field,
            [[entries[i] if i == j else zero for j in range(len(entries))]
             for i in range(len(entries))],
        )

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __eq__(self, other):
        return isinstance(other, MatrixL) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "MatrixL") -> "MatrixL":
        return MatrixL(
            self.field,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "MatrixL") -> "MatrixL":
        return MatrixL(
            self.field,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return MatrixL(self.field, [[e * other for e in r] for r in self.rows])
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return MatrixL(
            self.field,
            [[_dot(r, c, self.field) for c in cols] for r in self.rows],
        )

    def trace(self) -> FieldElem:
        t = self.field.zero
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    def inverse(self) -> "MatrixL":
        """Exact inverse by Gauss-Jordan elimination; raises Singular."""
        if self.nrows != self.ncols:
            raise Singular("matrix is not square")
        n = self.nrows
        work = [list(r) + list(MatrixL.identity(self.field, n).rows[i])
                for i, r in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                raise Singular("zero pivot column %d" % col)
            work[col], work[pivot] = work[pivot], work[col]
            inv = work[col][col].inverse()
            work[col] = [e * inv for e in work[col]]
            for r in range(n):
                if r != col and work[r][col]:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        return MatrixL(self.field, [row[n:] for row in work])

    def to_json(self):
        return [[e.to_json() for e in r] for r in self.rows]

    def __repr__(self):
        return "MatrixL(%d x %d)" % (self.nrows, self.ncols)


def _dot(row, col, field: NumberField) -> FieldElem:
    acc = field.zero
    for a, b in zip(row, col):
        acc = acc + a * b
    return acc


def mat_inverse(m: MatrixL) -> MatrixL:
    return m.inverse()


def char_poly(m: MatrixL):
    """Characteristic polynomial det(u*I - m) by Faddeev-LeVerrier.

    Returns ascending coefficients as FieldElem values (leading entry 1).
    """
    n = m.nrows
    field = m.field
    coeffs = [field.zero] * (n + 1)
    coeffs[n] = field.one
    mk = MatrixL.identity(field, n)
    for k in range(1, n + 1):
        mk = m * mk
        c = mk.trace() * Fraction(-1, k)
        coeffs[n - k] = c
        mk = mk + MatrixL.diagonal(field, [c] * n)
    return coeffs


# --- rational linear algebra -------------------------------------------------

def frac_rref(rows):
    """Row-reduce a rational matrix in place style; returns (rref, pivots)."""
    work = [[_frac(x) for x in r] for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if work[r][col]), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        f = work[row][col]
        work[row] = [x / f for x in work[row]]
        for r in range(nrows):
            if r != row and work[r][col]:
                g = work[r][col]
                work[r] = [a - g * b for a, b in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return work, pivots


def frac_rank(rows) -> int:
    if not rows:
        return 0
    return len(frac_rref(rows)[1])


def frac_kernel_basis(rows):
    """Basis of the right kernel {x : A x = 0} of a rational matrix.

    The matrix is given as rows; returns a list of coordinate tuples.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = frac_rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][fc]
        basis.append(tuple(vec))
    return basis


def frac_mat_inverse(rows):
    """Exact inverse of a square rational matrix; raises Singular."""
    n = len(rows)
    aug = [[_frac(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(rows)]
    rref, pivots = frac_rref(aug)
    if pivots != list(range(n)):
        raise Singular("rational matrix is singular")
    return [tuple(row[n:]) for row in rref]


# --- Smith normal form -------------------------------------------------------

@dataclass(frozen=True)
class SmithForm:
    """Diagonal divisor chain with unimodular transforms.

    left @ input @ right equals the diagonal matrix padded with zeros, each
    diagonal entry is nonnegative and divides the next, and both transforms
    have determinant +-1.
    """

    diagonal: tuple
    left: tuple
    right: tuple


def _int_matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form of an integer matrix with transform tracking."""
    a = [[int(x) for x in row] for row in matrix]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    left = [[int(i == j) for j in range(nr)] for i in range(nr)]
    right = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        left[i] = [x - q * y for x, y in zip(left[i], left[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]
        for r in right:
            r[i] -= q * r[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    k = 0
    while k < min(nr, nc):
        # move a minimal-magnitude nonzero entry of the submatrix to (k, k)
        pivot = None
        for i in range(k, nr):
            for j in range(k, nc):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != k:
            row_swap(k, pivot[0])
        if pivot[1] != k:
            col_swap(k, pivot[1])

        dirty = False
        for i in range(k + 1, nr):
            if a[i][k]:
                q = a[i][k] // a[k][k]
                row_op(i, k, q)
                if a[i][k]:
                    dirty = True
        for j in range(k + 1, nc):
            if a[k][j]:
                q = a[k][j] // a[k][k]
                col_op(j, k, q)
                if a[k][j]:
                    dirty = True
        if dirty:
            continue  # remainders got smaller; repick the pivot

        # pivot must divide every remaining entry for the divisor chain
        offender = None
        for i in range(k + 1, nr):
            for j in range(k + 1, nc):
                if a[i][j] % a[k][k]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(k, offender, -1)  # pulls the offending row into row k
            continue

        if a[k][k] < 0:
            row_negate(k)
        k += 1

    diag = tuple(a[i][i] for i in range(min(nr, nc)))
    return SmithForm(
        diagonal=diag,
        left=tuple(tuple(r) for r in left),
        right=tuple(tuple(r) for r in right),
    )
