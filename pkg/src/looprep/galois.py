"""Declared Galois number fields L/Q with explicit automorphism data.

The caller declares the modulus, the automorphism images g(theta), and a
subgroup H; the library verifies every group and fixed-field invariant rather
than discovering anything.  The subgroup cuts out the base field K = L^H.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import (
    BadSubgroup,
    FixedFieldTooBig,
    NotARoot,
    NotClosed,
    NotSquareFree,
    WrongOrder,
)
from .exact import (
    FieldElem,
    NumberField,
    PolyQ,
    frac_kernel_basis,
    poly_gcd,
)


class GaloisContext:
    """A validated Galois field L/Q with group G and subgroup H.

    Group elements are indices into ``images``; element 0 is the identity.
    ``table[g][h]`` is the index of the composition g o h (apply h first).
    """

    __slots__ = ("field", "images", "aut_matrices", "table", "inverses", "subgroup")

    def __init__(self, field, images, aut_matrices, table, inverses, subgroup):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "aut_matrices", aut_matrices)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "inverses", inverses)
        object.__setattr__(self, "subgroup", subgroup)

    def __setattr__(self, name, value):
        raise AttributeError("GaloisContext is immutable")

    # -- basic data

    @property
    def order(self) -> int:
        return len(self.images)

    @property
    def full_group(self):
        return tuple(range(self.order))

    @property
    def k_degree(self) -> int:
        """Degree [K:Q] of the fixed field of H."""
        return self.order // len(self.subgroup)

    def __eq__(self, other):
        return (
            isinstance(other, GaloisContext)
            and self.field == other.field
            and self.images == other.images
            and self.subgroup == other.subgroup
        )

    def __hash__(self):
        return hash((self.field, self.images, self.subgroup))

    # -- group structure

    def compose(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inverse_of(self, g: int) -> int:
        return self.inverses[g]

    # -- actions

    def apply(self, g: int, a: FieldElem) -> FieldElem:
        """Apply automorphism g to a field element (a ring homomorphism)."""
        mat = self.aut_matrices[g]
        coords = tuple(
            sum((row[k] * a.coords[k] for k in range(len(row))), Fraction(0))
            for row in mat
        )
        return FieldElem(self.field, coords)

    def orbit(self, subgroup, a: FieldElem):
        """The set {g(a) : g in subgroup}, sorted by coordinate vectors."""
        seen = {self.apply(g, a) for g in subgroup}
        return tuple(sorted(seen, key=lambda e: e.coords))

    def stabilizer(self, subgroup, a: FieldElem):
        """Indices in subgroup fixing a; always contains the identity."""
        return tuple(g for g in subgroup if self.apply(g, a) == a)

    def fixed_space_dim(self, subgroup) -> int:
        """Q-dimension of the simultaneous fixed space of the subgroup."""
        return len(self.fixed_space_basis(subgroup))

    def fixed_space_basis(self, subgroup):
        """Field elements forming a Q-basis of {v : g(v) = v for g in S}."""
        n = self.field.degree
        rows = []
        for g in subgroup:
            mat = self.aut_matrices[g]
            for i in range(n):
                rows.append([mat[i][k] - Fraction(int(i == k)) for k in range(n)])
        if not rows:
            rows = [[Fraction(0)] * n]
        return tuple(FieldElem(self.field, vec) for vec in frac_kernel_basis(rows))

    # -- serialization

    def to_json(self):
        return {
            "modulus": self.field.modulus.to_json(),
            "automorphisms": [img.as_poly().to_json() for img in self.images],
            "subgroup": list(self.subgroup),
        }

    def __repr__(self):
        return "GaloisContext(deg %d, |H| = %d)" % (self.order, len(self.subgroup))


def build_context(modulus, aut_images, subgroup=None) -> GaloisContext:
    """Validate modulus, automorphism images, and subgroup; build the context.

    aut_images are polynomials in theta giving g(theta) for each group
    element; element 0 must be the identity.  subgroup is a list of element
    indices (default: the whole group, so K = Q).
    """
    modulus = modulus if isinstance(modulus, PolyQ) else PolyQ(modulus)
    if modulus.degree < 1 or not modulus.is_monic:
        raise WrongOrder("modulus must be monic of degree >= 1")
    if poly_gcd(modulus, modulus.derivative()).degree != 0:
        raise NotSquareFree("modulus shares a factor with its derivative")

    field = NumberField(modulus)
    n = field.degree
    images = tuple(
        field.from_poly(p if isinstance(p, PolyQ) else PolyQ(p)) for p in aut_images
    )
    if len(images) != n:
        raise WrongOrder("group order %d but modulus degree %d" % (len(images), n))
    if len(set(images)) != n:
        raise WrongOrder("automorphism images are not distinct")
    if images[0] != field.gen:
        raise NotClosed("element 0 must be the identity automorphism")
    for img in images:
        if modulus(img):
            raise NotARoot("image %r is not a root of the modulus" % (img,))

    # matrix of each automorphism on the power basis (column k = g(theta)^k)
    aut_matrices = []
    for img in images:
        power = field.one
        cols = []
        for _ in range(n):
            cols.append(power.coords)
            power = power * img
        aut_matrices.append(tuple(tuple(col[i] for col in cols) for i in range(n)))
    aut_matrices = tuple(aut_matrices)

    index = {img.coords: i for i, img in enumerate(images)}
    table = []
    for g in range(n):
        row = []
        for h in range(n):
            mat = aut_matrices[g]
            coords = tuple(
                sum((mat[i][k] * images[h].coords[k] for k in range(n)), Fraction(0))
                for i in range(n)
            )
            composed = index.get(coords)
            if composed is None:
                raise NotClosed("composition of elements %d and %d leaves the set" % (g, h))
            row.append(composed)
        if sorted(row) != list(range(n)):
            raise NotClosed("element %d is not invertible in the declared set" % g)
        table.append(tuple(row))
    table = tuple(table)
    inverses = tuple(row.index(0) for row in table)

    subgroup = tuple(sorted(set(int(i) for i in (subgroup if subgroup is not None else range(n)))))
    if not subgroup or subgroup[0] != 0 or subgroup[-1] >= n or subgroup[0] < 0:
        raise BadSubgroup("subgroup must contain the identity and valid indices")
    sub_set = set(subgroup)
    for g in subgroup:
        for h in subgroup:
            if table[g][h] not in sub_set:
                raise BadSubgroup("subgroup is not closed under composition")

    ctx = GaloisContext(field, images, aut_matrices, table, inverses, subgroup)
    if ctx.fixed_space_dim(ctx.full_group) != 1:
        raise FixedFieldTooBig("fixed space of the full group has dimension > 1")
    if ctx.fixed_space_dim(subgroup) != n // len(subgroup):
        raise FixedFieldTooBig("fixed space of H has dimension != |G|/|H|")
    return ctx


def context_from_json(data) -> GaloisContext:
    return build_context(
        PolyQ(data["modulus"]),
        [PolyQ(p) for p in data["automorphisms"]],
        data.get("subgroup"),
    )


# -- stock contexts ------------------------------------------------------------

def rational_context() -> GaloisContext:
    """The trivial context L = K = Q (modulus theta, one automorphism)."""
    return build_context(PolyQ([0, 1]), [PolyQ([0, 1])], [0])


def _cyclotomic_poly(n: int) -> PolyQ:
    poly = PolyQ([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = poly // _cyclotomic_poly(d)
    return poly


def cyclotomic_context(n: int, subgroup=None) -> GaloisContext:
    """Context for the n-th cyclotomic field, group (Z/n)* via theta -> theta^k.

    Units are listed in increasing order, so element 0 (k = 1) is the
    identity.  subgroup picks indices into that list; default is the whole
    group (K = Q).
    """
    if n < 3:
        raise ValueError("use rational_context for degree-one fields")
    modulus = _cyclotomic_poly(n)
    field = NumberField(modulus)
    units = [k for k in range(1, n) if gcd(k, n) == 1]
    images = [(field.gen ** k).as_poly() for k in units]
    return build_context(modulus, images, subgroup)


def gaussian_context(subgroup=None) -> GaloisContext:
    """L = Q(i) with complex conjugation; default K = Q."""
    return cyclotomic_context(4, subgroup)
