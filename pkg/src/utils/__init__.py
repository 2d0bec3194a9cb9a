"""
Parameter guards shared by the CLI and the sweep pipeline.
"""

from src.utils.guards import check_size, max_ambient_dimension

__all__ = ["check_size", "max_ambient_dimension"]
