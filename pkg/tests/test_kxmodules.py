import random
from fractions import Fraction

import pytest

from looprep import (
    LWeight,
    build_kx_module,
    char_poly,
    char_poly_split_check,
    compositum_degree,
    iso_test,
    multiplication_matrix,
    tensor_embedding_rank,
)
from looprep.errors import NotDominant
from looprep.exact import MatrixL, frac_rank

from conftest import random_dominant


@pytest.fixture
def iu(qi, a1):
    return LWeight.single(qi, a1, 0, qi.field.gen)


def min_poly_degree(module, matrix):
    """Degree of the minimal polynomial via rank of stacked matrix powers."""
    field = module.lweight.ctx.field
    powers = []
    current = MatrixL.identity(field, module.dim)
    for k in range(module.dim + 1):
        powers.append([c for row in current.rows for e in row for c in e.coords])
        if frac_rank(powers) < len(powers):
            return k
        current = current * matrix
    return module.dim


class TestBuild:
    def test_gaussian_point(self, qi, iu):
        module = build_kx_module(iu)
        assert module.dim == 2
        assert module.primitive == -qi.field.gen  # the coefficient of 1 - i u
        field = qi.field
        assert module.matrix(0, 1).rows == (
            (field.zero, -field.one),
            (field.one, field.zero),
        )

    def test_rational_is_scalar(self, qi, a1):
        lw = LWeight.single(qi, a1, 0, qi.field.scalar(2))
        module = build_kx_module(lw)
        assert module.dim == 1
        assert module.matrix(0, 1).rows == ((qi.field.scalar(-2),),)

    def test_identity_weight(self, qi, a1):
        module = build_kx_module(LWeight.identity(qi, a1))
        assert module.dim == 1 and not module.generator_matrices

    def test_cyclotomic5_regular_representation(self, cyclo5, a1):
        theta = cyclo5.field.gen
        module = build_kx_module(LWeight.single(cyclo5, a1, 0, theta))
        assert module.dim == 4
        # multiplication by the coefficient -theta in powers of t = -theta is
        # the companion matrix of u^4 - u^3 + u^2 - u + 1
        m = module.matrix(0, 1)
        expected = char_poly(m)
        minpoly = [Fraction(c) for c in (1, -1, 1, -1, 1)]
        assert [e.coords[0] for e in expected] == minpoly
        assert all(not any(e.coords[1:]) for e in expected)

    def test_rejects_non_dominant(self, iu):
        with pytest.raises(NotDominant):
            build_kx_module(iu.inverse())

    def test_matrices_commute(self, cyclo5, a1):
        rng = random.Random(131)
        for _ in range(6):
            lw = random_dominant(cyclo5, a1, rng, max_support=2)
            module = build_kx_module(lw)
            mats = list(module.generator_matrices.values())
            for a in mats:
                for b in mats:
                    assert a * b == b * a

    def test_minimal_polynomial_degrees(self, cyclo5, a1):
        rng = random.Random(137)
        for _ in range(5):
            lw = random_dominant(cyclo5, a1, rng, max_support=2)
            module = build_kx_module(lw)
            ctx = lw.ctx
            # primitive element's matrix is cyclic: min poly degree = dim
            t_matrix = multiplication_matrix(module, module.primitive)
            assert min_poly_degree(module, t_matrix) == module.dim
            # each generator matrix has min poly degree = orbit size of s
            for (node, r), value in lw.coefficient_values():
                mat = module.matrix(node, r)
                expected = len(ctx.orbit(ctx.subgroup, value))
                assert min_poly_degree(module, mat) == expected


class TestCharPolySplit:
    def test_gaussian(self, qi, iu):
        module = build_kx_module(iu)
        # (u - i)(u + i) = u^2 + 1
        coeffs = char_poly(module.matrix(0, 1))
        assert coeffs == [qi.field.one, qi.field.zero, qi.field.one]
        assert char_poly_split_check(module, 0, 1) is True

    def test_scalar_case(self, qi, a1):
        module = build_kx_module(LWeight.single(qi, a1, 0, qi.field.scalar(5)))
        assert char_poly_split_check(module, 0, 1) is True

    def test_all_generators_split(self, cyclo5, a1, a2):
        rng = random.Random(139)
        for rs in (a1, a2):
            for _ in range(4):
                lw = random_dominant(cyclo5, rs, rng, max_support=2)
                module = build_kx_module(lw)
                for (node, r) in module.generator_matrices:
                    assert char_poly_split_check(module, node, r) is True


class TestIsoTest:
    def test_conjugates_are_isomorphic(self, qi, a1, iu):
        conj = LWeight.single(qi, a1, 0, -qi.field.gen)
        assert iso_test(iu, conj) is True

    def test_distinct_classes(self, qi, a1, iu):
        other = LWeight.single(qi, a1, 0, 2 * qi.field.gen)
        assert iso_test(iu, other) is False

    def test_reflexive(self, iu):
        assert iso_test(iu, iu) is True

    def test_equivalence_relation_on_sample(self, qi, a1):
        i = qi.field.gen
        pool = [
            LWeight.single(qi, a1, 0, p, e)
            for p in (i, -i, 2 * i, -2 * i, qi.field.scalar(2), qi.field.scalar(-1))
            for e in (1, 2)
        ]
        for x in pool:
            assert iso_test(x, x)
        for x in pool:
            for y in pool:
                assert iso_test(x, y) == iso_test(y, x)
                assert iso_test(x, y) == (x.class_key() == y.class_key())
        for x in pool:
            for y in pool:
                for z in pool:
                    if iso_test(x, y) and iso_test(y, z):
                        assert iso_test(x, z)


class TestEmbeddingRank:
    def test_same_field_collapses(self, qi, a1, iu):
        conj = LWeight.single(qi, a1, 0, -qi.field.gen)
        assert tensor_embedding_rank(iu, conj) == (2, False)
        assert tensor_embedding_rank(iu, iu) == (2, False)

    def test_rational_factor_injective(self, qi, a1, iu):
        rational = LWeight.single(qi, a1, 0, qi.field.scalar(3))
        assert tensor_embedding_rank(rational, iu) == (2, True)

    def test_independent_extensions(self, zeta8, a1):
        theta = zeta8.field.gen
        p = LWeight.single(zeta8, a1, 0, theta ** 2)
        q = LWeight.single(zeta8, a1, 0, theta - theta ** 3)
        assert tensor_embedding_rank(p, q) == (4, True)

    @pytest.mark.parametrize("ctx_name", ["qi", "cyclo5_half", "zeta8"])
    def test_rank_equals_compositum_degree(self, ctx_name, request, a1):
        ctx = request.getfixturevalue(ctx_name)
        rng = random.Random(149)
        for _ in range(8):
            x = random_dominant(ctx, a1, rng, max_support=2)
            y = random_dominant(ctx, a1, rng, max_support=2)
            rank, injective = tensor_embedding_rank(x, y)
            assert rank == compositum_degree(x, y)
            assert injective == (rank == x.degree() * y.degree())
