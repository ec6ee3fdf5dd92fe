"""Irreducible modules over the polynomial algebra, made concrete.

For a dominant l-weight the commuting generator actions on the irreducible
module over K are realized as explicit matrices over K (stored over L with an
H-fixedness certificate): pick a primitive element t for the fixed field of
the stabilizer, embed via the coset representatives, and conjugate the
diagonal eigenvalue action back to the power basis {1, t, ..., t^(d-1)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .classify import compositum_degree
from .errors import NotDominant, PrimitiveSearchFailed
from .exact import MatrixL, char_poly, frac_rank
from .lweights import LWeight


@dataclass(frozen=True)
class KXModule:
    """Explicit model of the irreducible module attached to an l-weight.

    generator_matrices maps (node, power index r) to the d x d matrix of the
    r-th generator in the power basis of the primitive element; every entry
    is fixed by H and the matrices commute pairwise.
    """

    lweight: LWeight
    stabilizer: tuple
    primitive: object  # FieldElem
    dim: int
    coset_reps: tuple
    generator_matrices: dict

    def matrix(self, node: int, index: int) -> MatrixL:
        return self.generator_matrices[(node, index)]

    def to_json(self):
        return {
            "dim": self.dim,
            "primitive": self.primitive.to_json(),
            "cosetReps": list(self.coset_reps),
            "matrices": {
                "%d,%d" % (node + 1, r): m.to_json()
                for (node, r), m in sorted(self.generator_matrices.items())
            },
            "fixedByH": True,
        }


def _primitive_candidates(values, dim):
    """Deterministic spiral over small nonnegative integer combinations.

    Yields sum(c_k * values[k]) for weight vectors c ordered by total weight,
    then lexicographically; capped by the caller at 10 * dim^2 candidates.
    """
    m = len(values)
    total = 0
    while True:
        if m == 0:
            if total == 0:
                yield None  # empty combination: the zero element
            return
        for picks in combinations_with_replacement(range(m), total):
            weights = [0] * m
            for p in picks:
                weights[p] += 1
            yield weights
        total += 1


def build_kx_module(lweight: LWeight) -> KXModule:
    """Build the matrix model for a dominant l-weight.

    Raises PrimitiveSearchFailed if no primitive element shows up within
    10 * d^2 spiral candidates (in characteristic zero a generic combination
    of the coefficient values works).
    """
    if not lweight.is_dominant:
        raise NotDominant("matrix model requires a dominant l-weight")
    ctx = lweight.ctx
    field = ctx.field
    sub = ctx.subgroup
    values = lweight.coefficient_values()
    stab = lweight.stabilizer()
    dim = len(sub) // len(stab)

    primitive = None
    budget = 10 * dim * dim
    for weights in _primitive_candidates([v for _, v in values], dim):
        if budget <= 0:
            raise PrimitiveSearchFailed(
                "no primitive element within %d candidates" % (10 * dim * dim)
            )
        budget -= 1
        if weights is None:
            cand = field.zero
        else:
            cand = field.zero
            for w, (_, v) in zip(weights, values):
                if w:
                    cand = cand + w * v
        if len(ctx.orbit(sub, cand)) == dim:
            primitive = cand
            break
    if primitive is None:
        raise PrimitiveSearchFailed(
            "no primitive element within %d candidates" % (10 * dim * dim)
        )

    reps = []
    seen = set()
    for h in sub:
        img = ctx.apply(h, primitive)
        if img not in seen:
            seen.add(img)
            reps.append(h)
    assert reps[0] == 0 and len(reps) == dim

    matrices = {}
    for (node, r), value in values:
        mat = _multiplication_matrix(ctx, reps, primitive, value)
        for row in mat.rows:
            for entry in row:
                assert all(ctx.apply(h, entry) == entry for h in sub), \
                    "generator matrix entry not fixed by H"
        matrices[(node, r)] = mat

    return KXModule(
        lweight=lweight,
        stabilizer=stab,
        primitive=primitive,
        dim=dim,
        coset_reps=tuple(reps),
        generator_matrices=matrices,
    )


def _multiplication_matrix(ctx, reps, primitive, value) -> MatrixL:
    """Matrix of multiplication by value on the power basis of the primitive.

    V[j][k] = sigma_j(t)^k embeds the power basis; multiplication acts
    diagonally there, so the matrix is V^-1 diag(sigma_j(value)) V.
    """
    field = ctx.field
    images = [ctx.apply(h, primitive) for h in reps]
    vand = MatrixL(field, [[img ** k for k in range(len(reps))] for img in images])
    diag = MatrixL.diagonal(field, [ctx.apply(h, value) for h in reps])
    return vand.inverse() * diag * vand


def multiplication_matrix(module: KXModule, value) -> MatrixL:
    """Matrix of multiplication by any element of K(omega) on the power basis."""
    return _multiplication_matrix(
        module.lweight.ctx, module.coset_reps, module.primitive, value
    )


def char_poly_split_check(module: KXModule, node: int, index: int) -> bool:
    """Whether charpoly(M_{node,index}) equals prod_j (u - sigma_j(s)) exactly.

    This certifies that base change splits the module into the conjugate
    one-dimensional eigenlines.
    """
    ctx = module.lweight.ctx
    field = ctx.field
    value = dict(module.lweight.coefficient_values())[(node, index)]
    actual = char_poly(module.matrix(node, index))
    expected = [field.one]
    for h in module.coset_reps:
        root = ctx.apply(h, value)
        nxt = [field.zero] * (len(expected) + 1)
        for k, c in enumerate(expected):
            nxt[k] = nxt[k] - c * root
            nxt[k + 1] = nxt[k + 1] + c
        expected = nxt
    return actual == expected


def iso_test(a: LWeight, b: LWeight) -> bool:
    """Module isomorphism test: true exactly when the l-weights are conjugate.

    Cross-checked structurally: equal dimensions plus an intertwiner given by
    some h in H matching the coefficient tuples.
    """
    if not (a.is_dominant and b.is_dominant):
        raise NotDominant("isomorphism test requires dominant l-weights")
    a._require_compatible(b)
    by_key = a.class_key() == b.class_key()
    structural = a.degree() == b.degree() and any(
        a.conjugate(h) == b for h in a.ctx.subgroup
    )
    assert by_key == structural
    return by_key


def tensor_embedding_rank(a: LWeight, b: LWeight):
    """Rank over K of the product map K(a) (x) K(b) -> L on power bases.

    Returns (rank, injective); the map is injective exactly when the degree
    equation deg(a) * deg(b) = [K(a,b):K] holds, and its image is always the
    compositum.
    """
    ma = build_kx_module(a)
    mb = build_kx_module(b)
    ctx = a.ctx
    k_basis = ctx.fixed_space_basis(ctx.subgroup)
    k_deg = len(k_basis)

    rows = []
    for j in range(ma.dim):
        for k in range(mb.dim):
            product = (ma.primitive ** j) * (mb.primitive ** k)
            for kappa in k_basis:
                rows.append(list((kappa * product).coords))
    q_rank = frac_rank(rows)
    assert q_rank % k_deg == 0
    rank = q_rank // k_deg
    assert rank == compositum_degree(a, b)
    return rank, rank == ma.dim * mb.dim
