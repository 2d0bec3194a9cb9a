from typing import Optional

from src.config import LimitsConfig, get_limits
from src.exceptions import SizeLimitError
from src.multilinear.basis import basis_size


def max_ambient_dimension(m: int, n: int) -> int:
    """Largest ambient space touched when building N_m(V): the hook
    ambients Lambda^{i+1} (x) S_{m-i-1} and their relation sources."""
    sizes = [basis_size(n, i + 1, m - i - 1) for i in range(m)]
    sizes += [basis_size(n, i + 2, m - i - 2) for i in range(m)]
    return max(sizes, default=0)


def check_size(m: int, n: int, limits: Optional[LimitsConfig] = None) -> int:
    """Raise SizeLimitError before building anything too large for N_m(V)."""
    limit = (limits or get_limits()).max_dim
    largest = max_ambient_dimension(m, n)
    if largest > limit:
        raise SizeLimitError(largest, limit, f"an ambient space of N_{m} at n={n}")
    return largest
