import pytest

from src.characters import MultiPoly, power_sum
from src.complexes import ChainComplexFp, build_Nm
from src.exceptions import PreconditionError
from src.ffield import Prime
from src.fixtures import DIVISIBLE_GRID
from src.ktheory import (
    K0Class,
    adams_composition_check,
    adams_grayson,
    euler_characteristic,
    euler_data,
    euler_from_cohomology,
    frobenius_adams_check,
    lambda_class,
    newton_identity_check,
    ring_hom_check,
    secondary_euler_characteristic,
)


@pytest.fixture
def n2():
    """N_2 of a 2-dimensional space over F_2."""
    return build_Nm(2, 2, Prime(2))


class TestK0Class:
    """Classes in the split model."""

    def test_split_and_rank(self):
        """[V] = v1 + ... + vn has rank n."""
        V = K0Class.split(3)
        assert V.rank == 3
        assert V.roots() == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_virtual_class_parts(self):
        """A virtual class splits into positive and negative parts."""
        x = K0Class.line(2, (1, 0)) - K0Class.line(2, (0, 1))
        positive, negative = x.parts()
        assert positive == K0Class.line(2, (1, 0))
        assert negative == K0Class.line(2, (0, 1))
        assert not x.is_effective()
        with pytest.raises(PreconditionError):
            x.roots()

    def test_mismatched_variables(self):
        """Classes over different roots do not add."""
        with pytest.raises(PreconditionError):
            K0Class.split(2) + K0Class.split(3)


class TestEulerCharacteristics:
    """chi and chi' of N_m(V)."""

    def test_chi_of_n2(self, n2):
        """chi(N_2) = s_2 - s_(1,1) = v1^2 + v2^2."""
        assert euler_characteristic(n2).value == power_sum(2, 2)

    def test_secondary(self, n2):
        """chi'(N_2) = [im d_0] = v1 v2 over F_2."""
        assert secondary_euler_characteristic(n2).value == MultiPoly.monomial((1, 1))

    @pytest.mark.parametrize("m,p", DIVISIBLE_GRID)
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_terms_and_cohomology_agree(self, m, p, n):
        """Euler characteristic through terms equals through cohomology."""
        data = euler_data(build_Nm(m, n, Prime(p)))
        assert data.chi == data.chi_cohomology
        assert data.consistent()

    def test_empty_complex(self):
        """The zero complex has chi = 0."""
        empty = ChainComplexFp((), (), Prime(2), 0, 2)
        assert euler_characteristic(empty) == K0Class.zero(2)
        assert euler_from_cohomology(empty) == K0Class.zero(2)


class TestAdamsOperations:
    """psi^k via hook Schur functors."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("k", range(1, 7))
    def test_split_class_goes_to_power_sum(self, k, n):
        """psi^k[V] = v1^k + ... + vn^k."""
        assert adams_grayson(k, K0Class.split(n)).value == power_sum(k, n)

    def test_line_classes(self):
        """psi^k of a line class is its k-th power."""
        L = K0Class.line(2, (2, 1))
        assert adams_grayson(3, L) == K0Class.line(2, (6, 3))

    def test_virtual_class(self):
        """psi^2(v1 - v2) = v1^2 - v2^2."""
        x = K0Class.line(2, (1, 0)) - K0Class.line(2, (0, 1))
        assert adams_grayson(2, x).value == MultiPoly.parse("v1^2 - v2^2", 2)

    def test_k1_is_identity(self):
        """psi^1 = id on effective classes."""
        E = K0Class(2, MultiPoly.parse("v1^2 + 2*v1*v2", 2))
        assert adams_grayson(1, E) == E

    @pytest.mark.parametrize("k", [0, -1])
    def test_rejects_nonpositive_k(self, k):
        """Only k >= 1 is supported."""
        with pytest.raises(PreconditionError):
            adams_grayson(k, K0Class.split(2))

    @pytest.mark.parametrize("rank", [1, 2, 3])
    def test_composition(self, rank):
        """psi^k psi^l = psi^{kl} for k, l <= 4."""
        V = K0Class.split(rank)
        for k in range(1, 5):
            for j in range(1, 5):
                assert adams_composition_check(k, j, V), f"k={k}, j={j}"

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_ring_homomorphism(self, k):
        """Additive and multiplicative on a rank-2 and a rank-3 class."""
        a = K0Class.split(5, [1, 2])
        b = K0Class.split(5, [3, 4, 5])
        assert ring_hom_check(k, a, b)

    def test_ring_homomorphism_on_lines(self):
        """Line classes multiply to line classes."""
        a, b = K0Class.line(2, (1, 0)), K0Class.line(2, (1, 1))
        assert ring_hom_check(4, a, b)

    def test_lambda_classes(self):
        """lambda^2 of a rank-3 split class is e_2."""
        e2 = MultiPoly.parse("v1*v2 + v1*v3 + v2*v3", 3)
        V = K0Class.split(3)
        assert lambda_class(2, V).value == e2
        assert lambda_class(0, V).value == MultiPoly.constant(3, 1)
        assert lambda_class(4, V) == K0Class.zero(3)

    @pytest.mark.parametrize("k", range(1, 5))
    def test_newton_identity(self, k):
        """psi^k from lambda classes."""
        assert newton_identity_check(k, K0Class.split(3))

    @pytest.mark.parametrize("m,p,n", [(2, 2, 2), (4, 2, 3), (6, 3, 2)])
    def test_frobenius_adams(self, m, p, n):
        """Direct, cohomological, inductive and Frobenius routes agree."""
        report = frobenius_adams_check(m, n, Prime(p))
        assert report.passed, report.failures
        assert report.values["psi^m"] == power_sum(m, n).render()

    def test_frobenius_adams_needs_divisibility(self):
        """p must divide m."""
        with pytest.raises(PreconditionError, match="p must divide m"):
            frobenius_adams_check(3, 2, Prime(2))
