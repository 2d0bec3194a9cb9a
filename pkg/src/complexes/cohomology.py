"""
Multigraded cohomology of a ChainComplexFp.

All differentials preserve multidegree, so ranks, kernels and images are
computed one multidegree block at a time.
"""

import logging
from typing import Dict, List, Tuple

import numpy as np

from src.characters.multipoly import MultiPoly
from src.characters.symmetric import frobenius_scale
from src.complexes.chain_complex import ChainComplexFp
from src.exceptions import InvariantViolation
from src.models.reports import CohomologyReport, DegreeCohomology
from src.multilinear import linalg
from src.multilinear.basis import ExponentVector, grade_positions
from src.multilinear.graded import block_image, block_kernel, block_ranks
from src.schur.hook_module import build_hook_module
from src.schur.shapes import HookShape

logger = logging.getLogger(__name__)


def _gradings(c: ChainComplexFp, i: int) -> Tuple[ExponentVector, ...]:
    if 0 <= i < c.length:
        return c.terms[i].reduced_gradings
    return ()


def image_ranks(c: ChainComplexFp, i: int) -> Dict[ExponentVector, int]:
    """Rank of d_i on each multidegree block."""
    return block_ranks(c.differential(i), _gradings(c, i + 1), _gradings(c, i))


def image_character(c: ChainComplexFp, i: int) -> MultiPoly:
    """Character of im(d_i) inside T_{i+1}."""
    return MultiPoly(c.n, {mu: r for mu, r in image_ranks(c, i).items() if r})


def cohomology_block_dims(c: ChainComplexFp, i: int) -> Dict[ExponentVector, int]:
    """dim H^i in each multidegree."""
    outgoing = image_ranks(c, i)
    incoming = image_ranks(c, i - 1) if i > 0 else {}
    dims: Dict[ExponentVector, int] = {}
    for mu, positions in grade_positions(_gradings(c, i)).items():
        dim = len(positions) - outgoing.get(mu, 0) - incoming.get(mu, 0)
        if dim < 0:
            raise InvariantViolation(
                f"negative cohomology in degree {i}, multidegree {mu}"
            )
        if dim:
            dims[mu] = dim
    return dims


def cohomology_characters(c: ChainComplexFp) -> List[MultiPoly]:
    return [MultiPoly(c.n, cohomology_block_dims(c, i)) for i in range(c.length)]


def cohomology_basis(
    c: ChainComplexFp, degree: int
) -> Tuple[np.ndarray, Tuple[ExponentVector, ...]]:
    """
    Cocycles whose classes form a basis of H^degree, each supported in one
    multidegree. Returns (columns in T_degree coordinates, their multidegrees).
    """
    gradings = _gradings(c, degree)
    kernels = block_kernel(c.differential(degree), _gradings(c, degree + 1), gradings)
    images = block_image(c.incoming(degree), gradings, _gradings(c, degree - 1))
    columns: List[np.ndarray] = []
    degrees: List[ExponentVector] = []
    for mu, positions in grade_positions(gradings).items():
        kernel = kernels[mu][positions, :]
        image = images[mu][positions, :] if mu in images else np.zeros(
            (len(positions), 0), dtype=np.int64
        )
        for k in linalg.independent_modulo(kernel, image, c.p):
            vector = np.zeros(len(gradings), dtype=np.int64)
            vector[positions] = kernel[:, k]
            columns.append(vector)
            degrees.append(mu)
    if not columns:
        return np.zeros((len(gradings), 0), dtype=np.int64), ()
    return np.column_stack(columns), tuple(degrees)


def expected_cohomology(c: ChainComplexFp, i: int) -> Tuple[int, MultiPoly]:
    """dim and character of F^p S_(m/p-i,1^i)(V)."""
    shape = HookShape(c.m // c.p - i, i)
    if shape.is_degenerate:
        return 0, MultiPoly.zero(c.n)
    module = build_hook_module(shape, c.n, c.prime)
    return module.dimension, frobenius_scale(module.character(), c.p)


def cohomology(c: ChainComplexFp) -> CohomologyReport:
    """Exact ranks, dims and characters of H^i, with the expected values for N_m."""
    degrees: List[DegreeCohomology] = []
    for i in range(c.length):
        ranks = (
            sum(image_ranks(c, i).values()),
            sum(image_ranks(c, i - 1).values()) if i > 0 else 0,
        )
        term_dim = c.terms[i].dimension
        character = MultiPoly(c.n, cohomology_block_dims(c, i))
        entry = DegreeCohomology(
            degree=i,
            term_dim=term_dim,
            kernel_dim=term_dim - ranks[0],
            image_dim=ranks[1],
            cohomology_dim=character.coefficient_sum(),
            character=character.render(),
        )
        if c.kind == "N":
            expected_dim, expected_character = expected_cohomology(c, i)
            entry.expected_dim = expected_dim
            entry.expected_character = expected_character.render()
        degrees.append(entry)

    report = CohomologyReport(
        kind=c.kind,
        m=c.m,
        n=c.n,
        p=c.p,
        degrees=degrees,
        euler_terms=c.euler_number(),
        euler_cohomology=sum((-1) ** d.degree * d.cohomology_dim for d in degrees),
    )
    logger.info("H^*(N_%d) at n=%d, p=%d: dims %s", c.m, c.n, c.p, report.dims)
    return report
