"""
Verifications on N_m(V) and L_m(V, v_ell): the homotopy identity and its
descent to N_m(V), GL(V)-equivariance of the differentials, the Frobenius
comparison of cohomology and the short exact sequence
0 -> L_m -> N_m(V) -> N_m(V') -> 0.
"""

import logging
from itertools import permutations
from typing import List, Optional

import numpy as np

from src.complexes.builders import build_Lm, build_Nm
from src.complexes.chain_complex import ChainComplexFp
from src.complexes.cohomology import cohomology_characters, expected_cohomology
from src.exceptions import PreconditionError
from src.ffield.field import Prime
from src.models.reports import CheckReport, ComplexSummary
from src.multilinear.action import diagonal_matrix, elementary_matrix
from src.multilinear.maps import (
    homotopy_ell_on,
    homotopy_on,
    projection_on,
    wedge_ell_on,
)
from src.multilinear.sparse_matrix import FpSparseMatrix
from src.schur.hook_module import HookModule

logger = logging.getLogger(__name__)


def complex_summary(c: ChainComplexFp) -> ComplexSummary:
    return ComplexSummary(
        kind=c.kind,
        m=c.m,
        n=c.n,
        p=c.p,
        term_dims=c.dimensions(),
        differential_ranks=c.differential_ranks(),
        d_squared_zero=c.d_squared_zero(),
        ell=c.ell,
        augmentation_dim=None if c.augmentation is None else c.augmentation.cols,
    )


# ---------------------------
# Homotopy on L_m
# ---------------------------


def homotopy_check(m: int, n: int, prime: Prime, ell: int) -> CheckReport:
    """
    (dh + hd)(x) = -(alpha_ell + 1) x for every basis tensor x of L_m with
    alpha_ell + 1 not divisible by p; the others are skipped.
    """
    c = build_Lm(m, n, prime, ell)
    p = prime.value
    bases = [term.basis for term in c.terms]
    homotopies = [
        homotopy_on(bases[i], bases[i - 1], prime) for i in range(1, len(bases))
    ]

    checked = skipped = 0
    failures: List[str] = []
    for i, basis in enumerate(bases):
        size = len(basis)
        total = FpSparseMatrix.zeros(size, size, prime)
        if i > 0:
            total = total + c.differential(i - 1) @ homotopies[i - 1]
        if i + 1 < len(bases):
            total = total + homotopies[i] @ c.differential(i)

        for col, t in enumerate(basis):
            eigenvalue = t.exponents[ell - 1] + 1
            if eigenvalue % p == 0:
                skipped += 1
                continue
            checked += 1
            expected = {col: (-eigenvalue) % p}
            if total.column(col) != expected:
                failures.append(f"L_{i}: (dh + hd)({t}) != {-eigenvalue} * ({t})")

    logger.info(
        "homotopy on L_%d(n=%d, p=%d, ell=%d): %d checked, %d skipped",
        m, n, p, ell, checked, skipped,
    )
    return CheckReport(
        check="homotopy",
        passed=not failures,
        parameters={"m": m, "n": n, "p": p, "ell": ell},
        counts={"checked": checked, "skipped": skipped},
        failures=failures,
    )


def descended_homotopy_check(
    m: int, n: int, prime: Prime, ell: int, max_dim: Optional[int] = None
) -> CheckReport:
    """
    h_ell = v_ell ^ h on N_m(V). Each ambient h_ell must send the relations
    of S_(m-i,1^i) into those of S_(m-i+1,1^{i-1}); on v_ell ^ L_m it must
    restrict to h; and there (dh_ell + h_ell d)(x) = -(alpha_ell + 1) x
    whenever alpha_ell + 1 is not divisible by p.
    """
    nm = build_Nm(m, n, prime, max_dim)
    lm = build_Lm(m, n, prime, ell, max_dim)
    p = prime.value
    failures: List[str] = []

    descended: List[Optional[FpSparseMatrix]] = [None]
    for i in range(1, m):
        source, target = nm.terms[i], nm.terms[i - 1]
        ambient_map = homotopy_ell_on(source.ambient, target.ambient, ell, prime)
        relations = (ambient_map @ source.presentation).to_dense()
        for col in range(relations.shape[1]):
            if target.reduce(relations[:, col]).any():
                failures.append(f"h_{ell} on degree {i} does not kill relation {col}")
        descended.append(source.induced_matrix(ambient_map, target))

    inclusions = []
    for i in range(m):
        basis = lm.terms[i].basis
        module = nm.terms[i]
        inclusions.append(
            _into_module(
                wedge_ell_on(basis, module.ambient, ell, prime), module, len(basis)
            )
        )

    checked = skipped = 0
    for i in range(m):
        basis = lm.terms[i].basis
        size = nm.terms[i].dimension
        total = FpSparseMatrix.zeros(size, size, prime)
        if i > 0:
            restricted = homotopy_on(basis, lm.terms[i - 1].basis, prime)
            if descended[i] @ inclusions[i] != inclusions[i - 1] @ restricted:
                failures.append(f"degree {i}: h_{ell} does not restrict to h")
            total = total + nm.differential(i - 1) @ descended[i]
        if i + 1 < m:
            total = total + descended[i + 1] @ nm.differential(i)

        composite = total @ inclusions[i]
        for col, t in enumerate(basis):
            eigenvalue = t.exponents[ell - 1] + 1
            if eigenvalue % p == 0:
                skipped += 1
                continue
            checked += 1
            image = inclusions[i].column(col)
            expected = {r: (-eigenvalue * v) % p for r, v in image.items()}
            if composite.column(col) != expected:
                failures.append(
                    f"N_{i}: (dh_{ell} + h_{ell} d)(v_{ell} ^ {t}) "
                    f"!= {-eigenvalue} * (v_{ell} ^ {t})"
                )

    logger.info(
        "h_%d on N_%d(n=%d, p=%d): %d checked, %d skipped",
        ell, m, n, p, checked, skipped,
    )
    return CheckReport(
        check="descended_homotopy",
        passed=not failures,
        parameters={"m": m, "n": n, "p": p, "ell": ell},
        counts={"checked": checked, "skipped": skipped},
        failures=failures,
    )


# ---------------------------
# Equivariance
# ---------------------------


def random_group_elements(n: int, p: int, trials: int, seed: int) -> List[np.ndarray]:
    """Alternate elementary matrices v_i -> v_i + lambda v_j (cycling over all
    ordered pairs) with random invertible diagonal matrices."""
    rng = np.random.default_rng(seed)
    pairs = list(permutations(range(1, n + 1), 2))
    elements = []
    for t in range(trials):
        if t % 2 == 0 and pairs:
            i, j = pairs[(t // 2) % len(pairs)]
            scalar = int(rng.integers(1, p))
            elements.append(elementary_matrix(n, i, j, scalar, p))
        else:
            elements.append(diagonal_matrix(rng.integers(1, p, size=n), p))
    return elements


def equivariance_check(
    c: ChainComplexFp, trials: int = 20, seed: int = 20240
) -> CheckReport:
    """rho_{i+1}(g) d_i = d_i rho_i(g) on reduced coordinates for random g."""
    if not all(isinstance(t, HookModule) for t in c.terms):
        raise PreconditionError("equivariance needs a complex of hook modules")
    failures: List[str] = []
    for t, g in enumerate(random_group_elements(c.n, c.p, trials, seed)):
        actions = [term.action_matrix(g) for term in c.terms]
        for i, d in enumerate(c.differentials):
            if actions[i + 1] @ d != d @ actions[i]:
                failures.append(
                    f"trial {t}: d_{i} does not commute with g = {g.tolist()}"
                )
    return CheckReport(
        check="equivariance",
        passed=not failures,
        parameters={"m": c.m, "n": c.n, "p": c.p, "seed": seed},
        counts={"trials": trials, "differentials": len(c.differentials)},
        failures=failures,
    )


# ---------------------------
# Frobenius comparison
# ---------------------------


def frobenius_comparison(c: ChainComplexFp) -> CheckReport:
    """dim H^i(N_m) = dim N_{m/p}(V)_i and CH(H^i) = F^p CH(N_{m/p}(V)_i)."""
    if c.kind != "N" or not c.prime.divides(c.m):
        raise PreconditionError("the Frobenius comparison needs N_m with p | m")
    failures: List[str] = []
    values = {}
    for i, character in enumerate(cohomology_characters(c)):
        expected_dim, expected_character = expected_cohomology(c, i)
        values[f"H^{i}"] = character.render()
        if character.coefficient_sum() != expected_dim:
            failures.append(
                f"dim H^{i} = {character.coefficient_sum()}, expected {expected_dim}"
            )
        elif character != expected_character:
            failures.append(
                f"CH(H^{i}) = {character.render()}, "
                f"expected {expected_character.render()}"
            )
    return CheckReport(
        check="frobenius_comparison",
        passed=not failures,
        parameters={"m": c.m, "n": c.n, "p": c.p},
        values=values,
        failures=failures,
    )


def frobenius_tower(m: int, n: int, prime: Prime) -> CheckReport:
    """Run the comparison on N_m, N_{m/p}, N_{m/p^2}, ... while p divides."""
    failures: List[str] = []
    levels = 0
    for level in _levels(m, prime):
        report = frobenius_comparison(build_Nm(level, n, prime))
        levels += 1
        failures.extend(f"N_{level}: {f}" for f in report.failures)
    return CheckReport(
        check="frobenius_tower",
        passed=not failures,
        parameters={"m": m, "n": n, "p": prime.value},
        counts={"levels": levels},
        failures=failures,
    )


def _levels(m: int, prime: Prime) -> List[int]:
    if not prime.divides(m):
        raise PreconditionError(f"p must divide m, got m={m}, p={prime}")
    levels = []
    while m >= 1 and prime.divides(m):
        levels.append(m)
        m //= prime.value
    return levels


# ---------------------------
# Short exact sequence of complexes
# ---------------------------


def _into_module(
    ambient_map: FpSparseMatrix, target: HookModule, source_size: int
) -> FpSparseMatrix:
    columns = []
    for col in range(source_size):
        image = np.zeros(len(target.ambient), dtype=np.int64)
        for r, value in ambient_map.column(col).items():
            image[r] = value
        coords = target.coordinates(image)
        columns.append({r: int(v) for r, v in enumerate(coords) if v})
    if not columns:
        return FpSparseMatrix.zeros(target.dimension, 0, target.prime)
    return FpSparseMatrix.from_columns(target.dimension, columns, target.prime)


def short_exact_sequence_check(
    m: int, n: int, prime: Prime, ell: int, max_dim: Optional[int] = None
) -> CheckReport:
    """
    0 -> L_m -> N_m(V) -> N_m(V') -> 0, degree by degree: v_ell ^ - is
    injective, lands in the kernel of the projection, the projection is
    onto, dimensions add up, and both maps commute with the differentials.
    """
    if n < 2:
        raise PreconditionError("the short exact sequence needs n >= 2")
    lm = build_Lm(m, n, prime, ell, max_dim)
    nm = build_Nm(m, n, prime, max_dim)
    quotient = build_Nm(m, n - 1, prime, max_dim)

    inclusions, projections = [], []
    failures: List[str] = []
    for i in range(m):
        basis = lm.terms[i].basis
        module, image_module = nm.terms[i], quotient.terms[i]
        inclusion = _into_module(
            wedge_ell_on(basis, module.ambient, ell, prime), module, len(basis)
        )
        projection = module.induced_matrix(
            projection_on(module.ambient, image_module.ambient, ell, prime),
            image_module,
        )
        inclusions.append(inclusion)
        projections.append(projection)

        if inclusion.rank() != len(basis):
            failures.append(f"degree {i}: v_ell ^ - is not injective")
        if not (projection @ inclusion).is_zero():
            failures.append(f"degree {i}: projection does not kill L_{i}")
        if projection.rank() != image_module.dimension:
            failures.append(f"degree {i}: projection is not onto")
        if module.dimension != len(basis) + image_module.dimension:
            failures.append(
                f"degree {i}: {module.dimension} != "
                f"{len(basis)} + {image_module.dimension}"
            )

    for i in range(m - 1):
        included = inclusions[i + 1] @ lm.differential(i)
        if nm.differential(i) @ inclusions[i] != included:
            failures.append(f"degree {i}: inclusion does not commute with d")
        projected = projections[i + 1] @ nm.differential(i)
        if quotient.differential(i) @ projections[i] != projected:
            failures.append(f"degree {i}: projection does not commute with d")

    return CheckReport(
        check="short_exact_sequence",
        passed=not failures,
        parameters={"m": m, "n": n, "p": prime.value, "ell": ell},
        counts={"degrees": m},
        failures=failures,
    )
