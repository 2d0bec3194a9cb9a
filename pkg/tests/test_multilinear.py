import numpy as np
import pytest

from src.exceptions import InvariantViolation, PreconditionError, SizeLimitError
from src.ffield import Prime
from src.fixtures import FROBENIUS_POWER_4_S2_N2
from src.multilinear import (
    BasisTensor,
    FpSparseMatrix,
    diagonal_matrix,
    elementary_matrix,
    enumerate_basis,
    eta_prime_matrix,
    frobenius_power_map,
    gl_action_matrix,
    kappa_matrix,
    multidegree,
    phi_matrix,
)
from src.multilinear.basis import basis_size
from src.multilinear.graded import GradedReducer


@pytest.fixture
def f5():
    return Prime(5)


def _column(matrix, basis, t):
    return matrix.column(basis.position(t))


class TestBasis:
    """Canonical bases of Lambda^i V (x) S_j V."""

    def test_small_basis_order(self):
        """Index sets first, then exponents with v_1 heaviest."""
        basis = enumerate_basis(2, 1, 1)
        assert list(basis) == [
            BasisTensor((1,), (1, 0)),
            BasisTensor((1,), (0, 1)),
            BasisTensor((2,), (1, 0)),
            BasisTensor((2,), (0, 1)),
        ]

    def test_top_wedge(self):
        """Lambda^3 of a 3-dim space has one element."""
        assert list(enumerate_basis(3, 3, 0)) == [BasisTensor((1, 2, 3), (0, 0, 0))]

    def test_wedge_degree_above_n_is_empty(self):
        """Lambda^4 of a 3-dim space is zero, not an error."""
        assert len(enumerate_basis(3, 4, 2)) == 0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_match_closed_form(self, n):
        """C(n, i) * C(n + j - 1, j) elements."""
        for i in range(n + 1):
            for j in range(7):
                assert len(enumerate_basis(n, i, j)) == basis_size(n, i, j)

    def test_size_limit(self):
        """Enumeration refuses spaces above max_dim."""
        with pytest.raises(SizeLimitError):
            enumerate_basis(4, 2, 6, max_dim=100)

    def test_invalid_tensor_rejected(self):
        """Index sets must be strictly increasing."""
        with pytest.raises(PreconditionError):
            BasisTensor((2, 1), (0, 0))

    @pytest.mark.parametrize(
        "index_set,exponents,expected",
        [
            ((1, 3), (0, 2, 0), (1, 2, 1)),
            ((), (0, 0, 0), (0, 0, 0)),
            ((2,), (0, 1, 0), (0, 2, 0)),
        ],
    )
    def test_multidegree(self, index_set, exponents, expected):
        """alpha + indicator(I)."""
        assert multidegree(BasisTensor(index_set, exponents)).exponents == expected

    def test_divisible_by(self):
        """Every exponent of v_1 v_2 (x) v_1 v_2 is 2."""
        mu = multidegree(BasisTensor((1, 2), (1, 1, 0)))
        assert mu.divisible_by(2)
        assert not mu.divisible_by(3)
        assert not multidegree(BasisTensor((1,), (0, 1, 0))).divisible_by(2)


class TestStructuralMaps:
    """phi, kappa, eta' and the formal Frobenius."""

    def test_phi_small(self, f5):
        """phi(v_1 (x) v_2) = v_1 ^ v_2 and phi(v_1 (x) v_1) = 0."""
        source, target = enumerate_basis(2, 1, 1), enumerate_basis(2, 2, 0)
        phi = phi_matrix(2, 1, 1, f5)
        top = target.position(BasisTensor((1, 2), (0, 0)))
        assert _column(phi, source, BasisTensor((1,), (0, 1))) == {top: 1}
        assert _column(phi, source, BasisTensor((1,), (1, 0))) == {}

    def test_phi_coefficient_vanishes_mod_p(self):
        """phi(1 (x) v_1^2) = 2 v_1 (x) v_1 = 0 over F_2."""
        phi = phi_matrix(2, 0, 2, Prime(2))
        assert phi.column(0) == {}

    def test_phi_signs(self, f5):
        """phi(v_2 (x) v_1 v_3) = -v_1^v_2 (x) v_3 + v_2^v_3 (x) v_1."""
        source, target = enumerate_basis(3, 1, 2), enumerate_basis(3, 2, 1)
        phi = phi_matrix(3, 1, 2, f5)
        column = _column(phi, source, BasisTensor((2,), (1, 0, 1)))
        assert column == {
            target.position(BasisTensor((1, 2), (0, 0, 1))): 4,
            target.position(BasisTensor((2, 3), (1, 0, 0))): 1,
        }

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_phi_squares_to_zero(self, n, p):
        """phi o phi = 0 on every Lambda^i (x) S_j."""
        prime = Prime(p)
        for i in range(n):
            for j in range(2, 5):
                first = phi_matrix(n, i, j, prime)
                product = phi_matrix(n, i + 1, j - 1, prime) @ first
                assert product.is_zero(), f"phi^2 != 0 at n={n}, i={i}, j={j}"

    @pytest.mark.parametrize("n,i,j", [(3, 1, 2), (3, 0, 3), (4, 2, 2)])
    def test_maps_preserve_multidegree(self, n, i, j, f5):
        """Every nonzero entry of phi and kappa joins equal multidegrees."""
        source = enumerate_basis(n, i, j)
        for matrix, target in [
            (phi_matrix(n, i, j, f5), enumerate_basis(n, i + 1, j - 1)),
            (kappa_matrix(n, i, j, f5), enumerate_basis(n, i - 1, j + 1)),
        ]:
            for (r, c), _ in matrix.items():
                assert multidegree(target[r]) == multidegree(source[c])

    def test_kappa_two_term(self):
        """kappa(v_1^v_2 (x) 1) = v_2 (x) v_1 - v_1 (x) v_2."""
        target = enumerate_basis(2, 1, 1)
        kappa = kappa_matrix(2, 2, 0, Prime(3))
        assert kappa.column(0) == {
            target.position(BasisTensor((2,), (1, 0))): 1,
            target.position(BasisTensor((1,), (0, 1))): 2,
        }

    def test_kappa_rank_one(self):
        """kappa(v_1 (x) v_1) = 1 (x) v_1^2."""
        assert kappa_matrix(1, 1, 1, Prime(2)).column(0) == {0: 1}

    @pytest.mark.parametrize("p", [2, 3])
    def test_kappa_squares_to_zero(self, p):
        """Koszul complex property at n=3, b=2, a=1."""
        prime = Prime(p)
        assert (kappa_matrix(3, 1, 2, prime) @ kappa_matrix(3, 2, 1, prime)).is_zero()

    def test_eta_prime_single_tensor(self):
        """v^(1,0) (x) v_2 -> v^(2,1) (x) v_2 for p = 2."""
        source, target = enumerate_basis(2, 1, 1), enumerate_basis(2, 1, 3)
        eta = eta_prime_matrix(2, 1, 1, Prime(2))
        assert _column(eta, source, BasisTensor((2,), (1, 0))) == {
            target.position(BasisTensor((2,), (2, 1))): 1
        }

    def test_eta_prime_without_wedge(self):
        """v^(2,0) -> v^(4,0) for p = 2, i = 0."""
        source, target = enumerate_basis(2, 0, 2), enumerate_basis(2, 0, 4)
        eta = eta_prime_matrix(2, 0, 2, Prime(2))
        assert _column(eta, source, BasisTensor((), (2, 0))) == {
            target.position(BasisTensor((), (4, 0))): 1
        }

    @pytest.mark.parametrize("n,i,j,p", [(2, 1, 1, 2), (3, 2, 1, 3), (3, 1, 2, 2)])
    def test_eta_prime_is_a_0_1_injection(self, n, i, j, p):
        """One entry 1 per column and distinct rows."""
        eta = eta_prime_matrix(n, i, j, Prime(p))
        assert eta.cols == basis_size(n, i, j)
        rows = []
        for c in range(eta.cols):
            column = eta.column(c)
            assert list(column.values()) == [1]
            rows.extend(column)
        assert len(set(rows)) == len(rows)

    def test_frobenius_power_image(self):
        """F^4 on S_2 at n=2 spans v_1^8, v_1^4 v_2^4, v_2^8."""
        frob = frobenius_power_map(2, 2, 4, Prime(2))
        target = enumerate_basis(2, 0, 8)
        images = {target[r].exponents for (r, _), _ in frob.items()}
        assert sorted(images, reverse=True) == FROBENIUS_POWER_4_S2_N2

    def test_frobenius_power_one_is_identity(self):
        """F^1 = id."""
        prime = Prime(3)
        assert frobenius_power_map(3, 2, 1, prime) == FpSparseMatrix.identity(6, prime)

    def test_frobenius_power_rejects_zero(self):
        """F^0 is not a Frobenius power."""
        with pytest.raises(PreconditionError):
            frobenius_power_map(2, 1, 0, Prime(2))

    def test_frobenius_square_on_v(self):
        """F^2 on V: three columns v_k -> v_k^2."""
        frob = frobenius_power_map(3, 1, 2, Prime(2))
        assert frob.shape == (6, 3)
        assert frob.nnz() == 3


class TestSparseMatrix:
    """Exact linear algebra on FpSparseMatrix."""

    def test_dense_round_trip_and_rank(self):
        """Residues are reduced and rank is exact mod p."""
        prime = Prime(3)
        m = FpSparseMatrix.from_dense([[1, 2, 0], [2, 1, 0], [0, 0, 3]], prime)
        assert m.to_dense().tolist() == [[1, 2, 0], [2, 1, 0], [0, 0, 0]]
        # second row is twice the first mod 3
        assert m.rank() == 1

    def test_kernel_and_image(self):
        """M K = 0 and rank + nullity = cols."""
        prime = Prime(5)
        m = FpSparseMatrix.from_dense([[1, 2, 3, 4], [2, 4, 1, 3]], prime)
        kernel = m.kernel_basis()
        assert not ((m.to_dense() @ kernel) % 5).any()
        assert kernel.shape[1] + m.rank() == m.cols
        assert m.image_basis().shape[1] == m.rank()

    def test_algebra(self):
        """Products, sums and transposes."""
        prime = Prime(7)
        a = FpSparseMatrix.from_dense([[1, 2], [0, 1]], prime)
        b = FpSparseMatrix.from_dense([[3, 0], [4, 5]], prime)
        assert (a @ b).to_dense().tolist() == [[11 % 7, 10 % 7], [4, 5]]
        assert (a - a).is_zero()
        assert a.transpose().transpose() == a
        assert a.apply(np.array([1, 1])).tolist() == [3, 1]

    def test_shape_mismatch(self):
        """Incompatible products are rejected."""
        prime = Prime(2)
        with pytest.raises(PreconditionError):
            FpSparseMatrix.zeros(2, 3, prime) @ FpSparseMatrix.zeros(2, 3, prime)

    def test_dense_size_limit(self):
        """Materialization above the limit raises."""
        with pytest.raises(SizeLimitError):
            FpSparseMatrix.zeros(50, 50, Prime(2)).to_dense(max_dim=10)


class TestGroupAction:
    """GL_n(F_p) acting on tensor spaces."""

    def test_action_is_a_homomorphism(self):
        """rho(g h) = rho(g) rho(h)."""
        prime = Prime(3)
        basis = enumerate_basis(3, 1, 2)
        g = elementary_matrix(3, 1, 2, 2, 3)
        h = diagonal_matrix([1, 2, 2], 3)
        gh = (g @ h) % 3
        assert gl_action_matrix(basis, gh, prime) == (
            gl_action_matrix(basis, g, prime) @ gl_action_matrix(basis, h, prime)
        )

    def test_identity_acts_trivially(self):
        """rho(1) = 1."""
        prime = Prime(2)
        basis = enumerate_basis(3, 2, 2)
        assert gl_action_matrix(basis, np.eye(3, dtype=np.int64), prime) == (
            FpSparseMatrix.identity(len(basis), prime)
        )

    def test_phi_is_equivariant(self):
        """rho(g) phi = phi rho(g) on the tensor spaces."""
        prime = Prime(3)
        source, target = enumerate_basis(2, 1, 2), enumerate_basis(2, 2, 1)
        phi = phi_matrix(2, 1, 2, prime)
        g = elementary_matrix(2, 2, 1, 1, 3)
        assert gl_action_matrix(target, g, prime) @ phi == phi @ gl_action_matrix(
            source, g, prime
        )


class TestGradedReducer:
    """Block-wise normal forms modulo a multigraded subspace."""

    def test_relations_reduce_to_zero(self):
        """Every generator lies in the subspace; reduction is idempotent."""
        prime = Prime(2)
        ambient = enumerate_basis(3, 1, 2)
        relations = kappa_matrix(3, 2, 1, prime)
        reducer = GradedReducer(ambient.multidegrees(), relations)
        for c in range(relations.cols):
            x = np.zeros(len(ambient), dtype=np.int64)
            for r, value in relations.column(c).items():
                x[r] = value
            assert reducer.contains(x)
        y = np.arange(len(ambient)) % 2
        once = reducer.reduce(y)
        assert (reducer.reduce(once) == once).all()
        assert not once[list(reducer.pivot_coords)].any()

    def test_rejects_mismatched_generators(self):
        """Generator rows must match the graded coordinates."""
        prime = Prime(2)
        gradings = enumerate_basis(2, 0, 1).multidegrees()
        with pytest.raises(PreconditionError):
            GradedReducer(gradings, FpSparseMatrix.zeros(3, 1, prime))

    def test_rejects_mixed_multidegrees(self):
        """v1 + v2 spans no multigraded subspace."""
        prime = Prime(3)
        gradings = enumerate_basis(2, 0, 1).multidegrees()
        mixed = FpSparseMatrix(2, 1, prime, {(0, 0): 1, (1, 0): 1})
        with pytest.raises(InvariantViolation):
            GradedReducer(gradings, mixed)
